#include "pmtower/tower/tower.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace pmtower::tower {

std::size_t Tower::component_count() const noexcept {
    std::size_t n = 0;
    for (const auto& l : levels) n += l.size();
    return n;
}

std::vector<std::size_t> Tower::children(std::size_t level, std::size_t index) const {
    std::vector<std::size_t> out;
    if (level + 1 >= levels.size()) return out;
    const auto& next = levels[level + 1];
    for (std::size_t i = 0; i < next.size(); ++i) {
        if (next[i].parent == index) out.push_back(i);
    }
    return out;
}

std::optional<std::vector<std::size_t>> Tower::level_ranks() const {
    std::vector<std::size_t> out;
    for (const auto& level : levels) {
        std::size_t sum = 0;
        for (const auto& c : level) {
            if (!c.rank) return std::nullopt;
            sum += *c.rank;
        }
        out.push_back(sum);
    }
    return out;
}

std::vector<std::size_t> resolve(const Tower& t, const BranchAddress& a) {
    if (a.path.empty() || a.path.size() > t.depth()) {
        throw std::invalid_argument("branch address length does not fit the tower");
    }
    std::vector<std::size_t> idx;
    if (a.path[0] >= t.levels[0].size()) throw std::invalid_argument("branch address: no such root");
    idx.push_back(a.path[0]);
    for (std::size_t k = 1; k < a.path.size(); ++k) {
        const auto kids = t.children(k - 1, idx.back());
        if (a.path[k] >= kids.size()) throw std::invalid_argument("branch address leaves the tower");
        idx.push_back(kids[a.path[k]]);
    }
    return idx;
}

std::vector<BranchAddress> all_branches(const Tower& t) {
    std::vector<BranchAddress> out;
    if (t.levels.empty()) return out;
    const std::size_t last = t.depth() - 1;
    for (std::size_t i = 0; i < t.levels[last].size(); ++i) out.push_back(address_of(t, i));
    std::sort(out.begin(), out.end());
    return out;
}

BranchAddress address_of(const Tower& t, std::size_t deepest_index) {
    if (t.levels.empty()) throw std::invalid_argument("address_of: empty tower");
    std::size_t level = t.depth() - 1;
    if (deepest_index >= t.levels[level].size()) throw std::invalid_argument("address_of: no such component");
    std::vector<std::size_t> path;
    std::size_t idx = deepest_index;
    while (level > 0) {
        const std::size_t parent = t.levels[level][idx].parent;
        if (parent >= t.levels[level - 1].size()) throw std::invalid_argument("address_of: broken nesting map");
        const auto siblings = t.children(level - 1, parent);
        path.push_back(static_cast<std::size_t>(std::find(siblings.begin(), siblings.end(), idx) - siblings.begin()));
        idx = parent;
        --level;
    }
    path.push_back(idx);
    std::reverse(path.begin(), path.end());
    return {path};
}

SubstitutionRule SubstitutionRule::self_similar(std::string name, std::size_t n, std::size_t rank, bool is_cell) {
    Type t;
    t.name = name;
    t.children.assign(n, name);
    t.rank = rank;
    t.is_cell = is_cell;
    return {{t}};
}

std::string rule_problem(const SubstitutionRule& rule) {
    if (rule.types.empty()) return "rule has no types";
    std::set<std::string> names;
    for (const auto& t : rule.types) {
        if (t.name.empty()) return "type with empty name";
        if (!names.insert(t.name).second) return "duplicate type '" + t.name + "'";
    }
    for (const auto& t : rule.types) {
        if (t.children.empty()) return "type '" + t.name + "' is not productive";
        for (const auto& c : t.children) {
            if (!names.count(c)) return "type '" + t.name + "' produces unknown type '" + c + "'";
        }
        if (t.is_cell && t.rank != 0) return "cell type '" + t.name + "' has nonzero rank";
    }
    return {};
}

}  // namespace pmtower::tower
