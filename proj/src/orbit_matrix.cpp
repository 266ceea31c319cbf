#include "dsrg/orbit_matrix.hpp"

#include "dsrg/automorphism.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dsrg {

namespace {

void check_shape(const OrbitMatrix& m, const char* who) {
    if (m.entries.rows() != m.entries.cols()) {
        throw std::invalid_argument(std::string(who) + ": entries not square");
    }
    if (static_cast<Index>(m.lengths.size()) != m.entries.rows()) {
        throw std::invalid_argument(std::string(who) + ": lengths/entries size mismatch");
    }
}

ValidationReport violation(const char* cond, Index i, Index j, const std::string& detail) {
    std::ostringstream os;
    os << "condition (" << cond << ") at (" << i << "," << j << "): " << detail;
    return {false, os.str()};
}

}  // namespace

ValidationReport validate_row_orbit_matrix(const RowOrbitMatrix& r) {
    check_shape(r, "validate_row_orbit_matrix");
    const Index b = r.block_count();
    const auto& n = r.lengths;
    const Params& p = r.params;

    const std::int64_t total =
        std::accumulate(n.begin(), n.end(), static_cast<std::int64_t>(0));
    if (total != p.v) {
        return {false, "orbit lengths sum to " + std::to_string(total) + ", expected v=" +
                           std::to_string(p.v)};
    }
    for (Index i = 0; i < b; ++i) {
        for (Index j = 0; j < b; ++j) {
            if (r.entries(i, j) < 0 || r.entries(i, j) > n[static_cast<std::size_t>(j)]) {
                return violation("a", i, j,
                                 std::to_string(r.entries(i, j)) + " outside [0, n_j=" +
                                     std::to_string(n[static_cast<std::size_t>(j)]) + "]");
            }
        }
    }
    for (Index i = 0; i < b; ++i) {
        if (r.entries(i, i) > n[static_cast<std::size_t>(i)] - 1) {
            return violation("b", i, i,
                             std::to_string(r.entries(i, i)) + " exceeds n_i-1=" +
                                 std::to_string(n[static_cast<std::size_t>(i)] - 1));
        }
    }
    for (Index i = 0; i < b; ++i) {
        const std::int64_t s = r.entries.row(i).sum();
        if (s != p.k) {
            return violation("c", i, 0,
                             "row sum " + std::to_string(s) + " != k=" + std::to_string(p.k));
        }
    }
    for (Index j = 0; j < b; ++j) {
        // sum_i (n_i / n_j) r_ij = k, cleared of denominators
        std::int64_t s = 0;
        for (Index i = 0; i < b; ++i) s += n[static_cast<std::size_t>(i)] * r.entries(i, j);
        if (s != p.k * n[static_cast<std::size_t>(j)]) {
            return violation("d", 0, j,
                             "weighted column sum " + std::to_string(s) + " != k*n_j=" +
                                 std::to_string(p.k * n[static_cast<std::size_t>(j)]));
        }
    }
    const Matrix sq = r.entries * r.entries;
    for (Index i = 0; i < b; ++i) {
        for (Index j = 0; j < b; ++j) {
            const std::int64_t want = (i == j ? p.t - p.mu : 0) +
                                      r.entries(i, j) * p.lambda +
                                      (n[static_cast<std::size_t>(j)] - r.entries(i, j)) * p.mu;
            if (sq(i, j) != want) {
                return violation("e", i, j,
                                 "product " + std::to_string(sq(i, j)) + " != " +
                                     std::to_string(want));
            }
        }
    }
    return {};
}

ValidationReport validate_column_orbit_matrix(const ColumnOrbitMatrix& c) {
    check_shape(c, "validate_column_orbit_matrix");
    const Index b = c.block_count();
    const auto& n = c.lengths;
    const Params& p = c.params;

    const std::int64_t total =
        std::accumulate(n.begin(), n.end(), static_cast<std::int64_t>(0));
    if (total != p.v) {
        return {false, "orbit lengths sum to " + std::to_string(total) + ", expected v=" +
                           std::to_string(p.v)};
    }
    for (Index i = 0; i < b; ++i) {
        for (Index j = 0; j < b; ++j) {
            if (c.entries(i, j) < 0 || c.entries(i, j) > n[static_cast<std::size_t>(i)]) {
                return violation("a", i, j,
                                 std::to_string(c.entries(i, j)) + " outside [0, n_i=" +
                                     std::to_string(n[static_cast<std::size_t>(i)]) + "]");
            }
        }
    }
    for (Index i = 0; i < b; ++i) {
        if (c.entries(i, i) > n[static_cast<std::size_t>(i)] - 1) {
            return violation("b", i, i,
                             std::to_string(c.entries(i, i)) + " exceeds n_i-1=" +
                                 std::to_string(n[static_cast<std::size_t>(i)] - 1));
        }
    }
    for (Index j = 0; j < b; ++j) {
        const std::int64_t s = c.entries.col(j).sum();
        if (s != p.k) {
            return violation("c", 0, j,
                             "column sum " + std::to_string(s) + " != k=" + std::to_string(p.k));
        }
    }
    for (Index i = 0; i < b; ++i) {
        std::int64_t s = 0;
        for (Index j = 0; j < b; ++j) s += n[static_cast<std::size_t>(j)] * c.entries(i, j);
        if (s != p.k * n[static_cast<std::size_t>(i)]) {
            return violation("d", i, 0,
                             "weighted row sum " + std::to_string(s) + " != k*n_i=" +
                                 std::to_string(p.k * n[static_cast<std::size_t>(i)]));
        }
    }
    const Matrix sq = c.entries * c.entries;
    for (Index i = 0; i < b; ++i) {
        for (Index j = 0; j < b; ++j) {
            const std::int64_t want = (i == j ? p.t - p.mu : 0) +
                                      c.entries(i, j) * p.lambda +
                                      (n[static_cast<std::size_t>(i)] - c.entries(i, j)) * p.mu;
            if (sq(i, j) != want) {
                return violation("e", i, j,
                                 "product " + std::to_string(sq(i, j)) + " != " +
                                     std::to_string(want));
            }
        }
    }
    return {};
}

ColumnOrbitMatrix row_to_column(const RowOrbitMatrix& r) {
    check_shape(r, "row_to_column");
    const Index b = r.block_count();
    ColumnOrbitMatrix c;
    c.entries.resize(b, b);
    c.lengths = r.lengths;
    c.params = r.params;
    c.prime = r.prime;
    for (Index i = 0; i < b; ++i) {
        for (Index j = 0; j < b; ++j) {
            const std::int64_t num =
                r.entries(i, j) * r.lengths[static_cast<std::size_t>(i)];
            const std::int64_t den = r.lengths[static_cast<std::size_t>(j)];
            if (num % den != 0) {
                std::ostringstream os;
                os << "row_to_column: r_ij*n_i = " << num << " not divisible by n_j=" << den
                   << " at (" << i << "," << j << "); no graph realizes this matrix";
                throw std::invalid_argument(os.str());
            }
            c.entries(i, j) = num / den;
        }
    }
    if (auto rep = validate_column_orbit_matrix(c); !rep.ok) {
        throw std::logic_error("row_to_column: result fails column conditions: " +
                               rep.violation);
    }
    return c;
}

RowOrbitMatrix column_to_row(const ColumnOrbitMatrix& c) {
    check_shape(c, "column_to_row");
    const Index b = c.block_count();
    RowOrbitMatrix r;
    r.entries.resize(b, b);
    r.lengths = c.lengths;
    r.params = c.params;
    r.prime = c.prime;
    for (Index i = 0; i < b; ++i) {
        for (Index j = 0; j < b; ++j) {
            const std::int64_t num =
                c.entries(i, j) * c.lengths[static_cast<std::size_t>(j)];
            const std::int64_t den = c.lengths[static_cast<std::size_t>(i)];
            if (num % den != 0) {
                std::ostringstream os;
                os << "column_to_row: c_ij*n_j = " << num << " not divisible by n_i=" << den
                   << " at (" << i << "," << j << "); no graph realizes this matrix";
                throw std::invalid_argument(os.str());
            }
            r.entries(i, j) = num / den;
        }
    }
    if (auto rep = validate_row_orbit_matrix(r); !rep.ok) {
        throw std::logic_error("column_to_row: result fails row conditions: " + rep.violation);
    }
    return r;
}

namespace {

enum class Side { Row, Column };

OrbitMatrix derive(const Matrix& a, const OrbitPartition& part, const Params& params,
                   Side side) {
    if (a.rows() != a.cols() || a.rows() != part.degree) {
        throw std::invalid_argument("derive_orbit_matrix: dimension mismatch");
    }
    if (!is_automorphism(a, part.generator)) {
        throw std::invalid_argument("derive_orbit_matrix: generator is not an automorphism");
    }
    const Index b = static_cast<Index>(part.orbit_count());
    OrbitMatrix m;
    m.entries.resize(b, b);
    m.lengths = part.lengths;
    m.params = params;
    m.prime = part.order;
    for (Index i = 0; i < b; ++i) {
        for (Index j = 0; j < b; ++j) {
            const auto& source = part.orbits[static_cast<std::size_t>(side == Side::Row ? i : j)];
            std::int64_t first = -1;
            for (int x : source) {
                std::int64_t sum = 0;
                if (side == Side::Row) {
                    for (int y : part.orbits[static_cast<std::size_t>(j)]) sum += a(x, y);
                } else {
                    for (int y : part.orbits[static_cast<std::size_t>(i)]) sum += a(y, x);
                }
                if (first < 0) {
                    first = sum;
                } else if (sum != first) {
                    throw std::logic_error(
                        "derive_orbit_matrix: block (" + std::to_string(i) + "," +
                        std::to_string(j) + ") is not equitable despite a valid automorphism");
                }
            }
            m.entries(i, j) = first;
        }
    }
    return m;
}

}  // namespace

RowOrbitMatrix derive_row_orbit_matrix(const Matrix& a, const OrbitPartition& part,
                                       const Params& params) {
    return derive(a, part, params, Side::Row);
}

ColumnOrbitMatrix derive_column_orbit_matrix(const Matrix& a, const OrbitPartition& part,
                                             const Params& params) {
    return derive(a, part, params, Side::Column);
}

}  // namespace dsrg
