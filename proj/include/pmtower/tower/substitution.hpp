#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace pmtower::tower {

/// Self-similar description of a set: each component type is replaced by a
/// multiset of child types at the next level.
struct SubstitutionRule {
    struct Type {
        std::string name;
        std::vector<std::string> children;
        std::size_t rank = 0;
        bool is_cell = false;

        friend bool operator==(const Type&, const Type&) = default;
    };
    std::vector<Type> types;  // types.front() is the type of the whole set

    friend bool operator==(const SubstitutionRule&, const SubstitutionRule&) = default;

    // One type that reproduces `n` copies of itself, with the given rank.
    static SubstitutionRule self_similar(std::string name, std::size_t n, std::size_t rank, bool is_cell);
};

// Empty string when valid, otherwise the first problem found.
std::string rule_problem(const SubstitutionRule& rule);

}  // namespace pmtower::tower
