#include "dsrg/brute_force.hpp"

#include "dsrg/graph_ops.hpp"

#include <stdexcept>

namespace dsrg {

namespace {

struct Search {
    Params p;
    Index v;
    Matrix a;
    Vector col_sum;
    std::vector<Matrix> found;

    std::int64_t cap(Index i, Index j) const {
        return (i == j) ? p.t : (a(i, j) == 1 ? p.lambda : p.mu);
    }

    // Check partial 2-path counts once rows 0..r are placed. A count can only
    // grow as later rows are filled in, so exceeding its cap is fatal; when a
    // row's out-neighbourhood lies entirely in the placed prefix the count is
    // final and must hit the cap exactly.
    bool prefix_consistent(Index r) const {
        for (Index i = 0; i <= r; ++i) {
            bool final_row = true;
            for (Index s = r + 1; s < v; ++s) {
                if (a(i, s) == 1) {
                    final_row = false;
                    break;
                }
            }
            for (Index j = 0; j < v; ++j) {
                std::int64_t x = 0;
                for (Index s = 0; s <= r; ++s) x += a(i, s) * a(s, j);
                const std::int64_t c = cap(i, j);
                if (x > c) return false;
                if (final_row && x != c) return false;
            }
        }
        return true;
    }

    bool column_sums_feasible(Index r) const {
        const Index remaining = v - 1 - r;  // rows still to be placed
        for (Index j = 0; j < v; ++j) {
            if (col_sum(j) > p.k) return false;
            // row j itself cannot contribute to column j
            const Index future = remaining - ((j > r) ? 1 : 0);
            if (col_sum(j) + future < p.k) return false;
        }
        return true;
    }

    void choose_row(Index r, Index from, std::int64_t placed) {
        if (placed == p.k) {
            for (Index j = 0; j < v; ++j) col_sum(j) += a(r, j);
            if (column_sums_feasible(r) && prefix_consistent(r)) {
                if (r + 1 == v) {
                    if (verify_dsrg(a, p)) found.push_back(a);
                } else {
                    choose_row(r + 1, 0, 0);
                }
            }
            for (Index j = 0; j < v; ++j) col_sum(j) -= a(r, j);
            return;
        }
        for (Index j = from; j < v; ++j) {
            if (j == r) continue;
            if (v - j < p.k - placed) break;  // not enough slots left
            a(r, j) = 1;
            choose_row(r, j + 1, placed + 1);
            a(r, j) = 0;
        }
    }
};

}  // namespace

std::vector<Matrix> brute_force_enumerate(const Params& params, int vertex_cap) {
    if (params.v > vertex_cap) {
        throw std::invalid_argument("brute_force_enumerate: v=" + std::to_string(params.v) +
                                    " exceeds vertex cap " + std::to_string(vertex_cap));
    }
    if (!check_feasibility(params)) return {};
    Search s{params, params.v, Matrix::Zero(params.v, params.v),
             Vector::Zero(params.v), {}};
    s.choose_row(0, 0, 0);
    return s.found;
}

}  // namespace dsrg
