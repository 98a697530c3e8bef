#include "pmtower/complex/homology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pmtower/parallel.hpp"

namespace pmtower::complex {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

// Simplices of one connected component, stored as indices into the global
// tables (each list is increasing, so local order follows global order).
struct Block {
    std::vector<std::size_t> cells[4];
};

template <std::size_t N, typename Table>
gf2::BitMatrix block_boundary(const std::vector<std::size_t>& cols, const std::vector<std::size_t>& rows,
                              const Table& table, auto&& face_index) {
    // rows holds global ids of (d-1)-simplices in increasing order.
    gf2::BitMatrix m(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const auto& s = table[cols[j]];
        for (std::size_t skip = 0; skip < N; ++skip) {
            const std::size_t g = face_index(s, skip);
            const auto it = std::lower_bound(rows.begin(), rows.end(), g);
            m.set(static_cast<std::size_t>(it - rows.begin()), j);
        }
    }
    return m;
}

std::size_t face_of_edge(const Edge& e, std::size_t skip) { return e[1 - skip]; }

}  // namespace

std::vector<std::size_t> vertex_components(const SimplicialComplex3& c, std::size_t* count) {
    UnionFind uf(c.vertices().size());
    for (const Edge& e : c.edges()) uf.unite(e[0], e[1]);
    std::vector<std::size_t> id(c.vertices().size());
    std::vector<std::size_t> root_id(c.vertices().size(), SIZE_MAX);
    std::size_t next = 0;
    for (std::size_t v = 0; v < id.size(); ++v) {
        const std::size_t r = uf.find(v);
        if (root_id[r] == SIZE_MAX) root_id[r] = next++;
        id[v] = root_id[r];
    }
    if (count) *count = next;
    return id;
}

gf2::BitMatrix boundary_matrix(const SimplicialComplex3& c, int d) {
    if (d < 1 || d > 3) throw std::invalid_argument("boundary_matrix: dimension must be 1, 2 or 3");
    gf2::BitMatrix m(c.count(d - 1), c.count(d));
    if (d == 1) {
        for (std::size_t j = 0; j < c.edges().size(); ++j) {
            m.set(c.edges()[j][0], j);
            m.set(c.edges()[j][1], j);
        }
    } else if (d == 2) {
        for (std::size_t j = 0; j < c.triangles().size(); ++j) {
            const Triangle& t = c.triangles()[j];
            m.set(c.edge_index({t[1], t[2]}), j);
            m.set(c.edge_index({t[0], t[2]}), j);
            m.set(c.edge_index({t[0], t[1]}), j);
        }
    } else {
        for (std::size_t j = 0; j < c.tets().size(); ++j) {
            const Tet& t = c.tets()[j];
            m.set(c.triangle_index({t[1], t[2], t[3]}), j);
            m.set(c.triangle_index({t[0], t[2], t[3]}), j);
            m.set(c.triangle_index({t[0], t[1], t[3]}), j);
            m.set(c.triangle_index({t[0], t[1], t[2]}), j);
        }
    }
    return m;
}

namespace {

BettiVector block_betti(const SimplicialComplex3& c, const Block& b) {
    const auto face_tri = [&c](const Triangle& t, std::size_t skip) {
        Edge e{};
        std::size_t k = 0;
        for (std::size_t i = 0; i < 3; ++i) {
            if (i != skip) e[k++] = t[i];
        }
        return c.edge_index(e);
    };
    const auto face_tet = [&c](const Tet& t, std::size_t skip) {
        Triangle f{};
        std::size_t k = 0;
        for (std::size_t i = 0; i < 4; ++i) {
            if (i != skip) f[k++] = t[i];
        }
        return c.triangle_index(f);
    };
    std::size_t r[5] = {0, 0, 0, 0, 0};
    if (!b.cells[1].empty()) {
        r[1] = gf2::rank(block_boundary<2>(b.cells[1], b.cells[0], c.edges(), face_of_edge));
    }
    if (!b.cells[2].empty()) {
        r[2] = gf2::rank(block_boundary<3>(b.cells[2], b.cells[1], c.triangles(), face_tri));
    }
    if (!b.cells[3].empty()) {
        r[3] = gf2::rank(block_boundary<4>(b.cells[3], b.cells[2], c.tets(), face_tet));
    }
    BettiVector out;
    out.b0 = b.cells[0].size() - r[1];
    out.b1 = b.cells[1].size() - r[1] - r[2];
    out.b2 = b.cells[2].size() - r[2] - r[3];
    out.b3 = b.cells[3].size() - r[3];
    return out;
}

}  // namespace

BettiVector betti(const SimplicialComplex3& c) {
    std::size_t n_components = 0;
    const std::vector<std::size_t> comp = vertex_components(c, &n_components);
    std::vector<Block> blocks(n_components);
    for (std::size_t v = 0; v < c.vertices().size(); ++v) blocks[comp[v]].cells[0].push_back(v);
    for (std::size_t i = 0; i < c.edges().size(); ++i) blocks[comp[c.edges()[i][0]]].cells[1].push_back(i);
    for (std::size_t i = 0; i < c.triangles().size(); ++i) {
        blocks[comp[c.triangles()[i][0]]].cells[2].push_back(i);
    }
    for (std::size_t i = 0; i < c.tets().size(); ++i) blocks[comp[c.tets()[i][0]]].cells[3].push_back(i);

    std::vector<BettiVector> partial(n_components);
    auto run = [&](std::size_t i) { partial[i] = block_betti(c, blocks[i]); };
    if (c.tets().size() < 2000) {
        for (std::size_t i = 0; i < n_components; ++i) run(i);
    } else {
        parallel_for(n_components, run);
    }

    BettiVector total;
    for (const BettiVector& p : partial) {
        if (p.b0 != 1) throw std::logic_error("betti: connected block reported b0 != 1");
        total += p;
    }
    if (total.b0 != n_components) throw std::logic_error("betti: b0 disagrees with union-find count");
    return total;
}

std::int64_t euler_characteristic(const SimplicialComplex3& c) {
    return static_cast<std::int64_t>(c.count(0)) - static_cast<std::int64_t>(c.count(1)) +
           static_cast<std::int64_t>(c.count(2)) - static_cast<std::int64_t>(c.count(3));
}

}  // namespace pmtower::complex
