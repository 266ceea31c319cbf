#pragma once

#include "dsrg/matrix.hpp"
#include "dsrg/params.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dsrg {

/// Number of directed 2-paths from i to j for every ordered pair, i.e. the
/// matrix square of the adjacency matrix.
template <typename Derived>
Matrix two_path_counts(const Eigen::MatrixBase<Derived>& a) {
    return a * a;
}

struct VerifyReport {
    bool ok = true;
    std::string reason;
};

/// Entrywise check of A^2 + (mu-lambda)A - (t-mu)I = mu*J and AJ = JA = kJ.
/// Reports the first violation found. A matrix whose shape does not match
/// p.v is caller error, not a verdict: std::invalid_argument.
VerifyReport verify_dsrg_report(const Matrix& a, const Params& p);

inline bool verify_dsrg(const Matrix& a, const Params& p) {
    return verify_dsrg_report(a, p).ok;
}

/// Capped 2-path score: sum over ordered pairs (i, j) of min(x_ij, cap)
/// where x = A^2 and the cap is t on the diagonal, lambda on arcs and mu on
/// non-arcs. Attains max_fitness(p) exactly on DSRG adjacency matrices.
/// Total on any binary zero-diagonal matrix.
template <typename Derived>
std::int64_t fitness(const Eigen::MatrixBase<Derived>& a, const Params& p) {
    if (a.rows() != p.v || a.cols() != p.v) {
        throw std::invalid_argument("fitness: matrix dimension does not match params");
    }
    const Matrix x = a * a;
    std::int64_t total = 0;
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            const std::int64_t cap = (i == j) ? p.t : (a(i, j) == 1 ? p.lambda : p.mu);
            total += std::min(x(i, j), cap);
        }
    }
    return total;
}

}  // namespace dsrg
