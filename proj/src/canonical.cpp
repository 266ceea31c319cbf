#include "dsrg/canonical.hpp"

#include <map>
#include <stdexcept>

namespace dsrg {

namespace {

using Cells = std::vector<std::vector<int>>;

// Equitable refinement. Each cell splits by the vector over cells of
// (out-arcs into, in-arcs from); subcells are ordered by signature, which
// depends only on cell indices, so the refinement is label-invariant.
Cells refine(const Matrix& a, Cells cells) {
    const Index n = a.rows();
    for (bool changed = true; changed;) {
        changed = false;
        std::vector<int> cell_of(static_cast<std::size_t>(n));
        for (std::size_t c = 0; c < cells.size(); ++c) {
            for (int v : cells[c]) cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
        }
        Cells next;
        next.reserve(cells.size());
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::map<std::vector<std::int32_t>, std::vector<int>> buckets;
            for (int v : cell) {
                std::vector<std::int32_t> sig(2 * cells.size(), 0);
                for (Index u = 0; u < n; ++u) {
                    const auto c = static_cast<std::size_t>(cell_of[static_cast<std::size_t>(u)]);
                    if (a(v, u) != 0) ++sig[2 * c];
                    if (a(u, v) != 0) ++sig[2 * c + 1];
                }
                buckets[std::move(sig)].push_back(v);
            }
            if (buckets.size() > 1) changed = true;
            for (auto& [sig, members] : buckets) next.push_back(std::move(members));
        }
        cells = std::move(next);
    }
    return cells;
}

struct Search {
    const Matrix& a;
    Index n;
    std::vector<std::uint8_t> best;
    std::vector<int> best_relabel;
    std::uint64_t hits = 0;

    void leaf(const Cells& cells) {
        std::vector<int> p(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < cells.size(); ++i) {
            p[static_cast<std::size_t>(cells[i][0])] = static_cast<int>(i);
        }
        auto bytes = pack_bits(apply_relabeling(a, p));
        if (hits == 0 || bytes < best) {
            best = std::move(bytes);
            best_relabel = std::move(p);
            hits = 1;
        } else if (bytes == best) {
            ++hits;
        }
    }

    void descend(Cells cells) {
        cells = refine(a, std::move(cells));
        std::size_t target = cells.size();
        std::size_t target_size = 0;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const std::size_t sz = cells[c].size();
            if (sz > 1 && (target == cells.size() || sz < target_size)) {
                target = c;
                target_size = sz;
            }
        }
        if (target == cells.size()) {
            leaf(cells);
            return;
        }
        for (int x : cells[target]) {
            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < target; ++c) child.push_back(cells[c]);
            child.push_back({x});
            std::vector<int> rest;
            rest.reserve(cells[target].size() - 1);
            for (int y : cells[target]) {
                if (y != x) rest.push_back(y);
            }
            child.push_back(std::move(rest));
            for (std::size_t c = target + 1; c < cells.size(); ++c) child.push_back(cells[c]);
            descend(std::move(child));
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Matrix& a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("canonical_form: matrix must be square");
    }
    const Index n = a.rows();
    if (n == 0) return {{}, {}, 1};
    Search search{a, n, {}, {}, 0};
    std::vector<int> all(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = static_cast<int>(i);
    search.descend({all});
    return {std::move(search.best), std::move(search.best_relabel), search.hits};
}

bool are_isomorphic(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return canonical_form(a).bytes == canonical_form(b).bytes;
}

std::uint64_t automorphism_group_order(const Matrix& a) {
    return canonical_form(a).aut_order;
}

}  // namespace dsrg
