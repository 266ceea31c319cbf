#pragma once

#include "dsrg/matrix.hpp"
#include "dsrg/orbit_partition.hpp"
#include "dsrg/params.hpp"

#include <string>
#include <vector>

namespace dsrg {

/// Quotient of a DSRG adjacency matrix by the vertex orbits of an
/// automorphism group: entry (i, j) of the row variant is the number of arcs
/// a fixed vertex of orbit i sends into orbit j; the column variant counts
/// the arcs orbit i sends into a fixed vertex of orbit j. The two are tied
/// entrywise by r_ij * n_i = c_ij * n_j.
struct OrbitMatrix {
    Matrix entries;                     // b x b, non-negative
    std::vector<std::int64_t> lengths;  // orbit lengths n_1..n_b
    Params params;
    std::int64_t prime = 1;             // generator order (1 for the trivial action)

    Index block_count() const { return entries.rows(); }

    friend bool operator==(const OrbitMatrix&, const OrbitMatrix&) = default;
};

using RowOrbitMatrix = OrbitMatrix;
using ColumnOrbitMatrix = OrbitMatrix;

struct ValidationReport {
    bool ok = true;
    std::string violation;  // names the first failed condition and indices

    explicit operator bool() const { return ok; }
};

/// The five row conditions: (a) 0 <= r_ij <= n_j; (b) 0 <= r_ii <= n_i - 1;
/// (c) every row sums to k; (d) sum_i n_i * r_ij = k * n_j (weighted column
/// sums, kept in exact integers); (e) sum_s r_is * r_sj =
/// delta_ij (t - mu) + r_ij * lambda + (n_j - r_ij) * mu.
ValidationReport validate_row_orbit_matrix(const RowOrbitMatrix& r);

/// Mirror image: (a) 0 <= c_ij <= n_i; (b) 0 <= c_ii <= n_i - 1; (c) every
/// column sums to k; (d) sum_j n_j * c_ij = k * n_i; (e) sum_s c_is * c_sj =
/// delta_ij (t - mu) + c_ij * lambda + (n_i - c_ij) * mu.
ValidationReport validate_column_orbit_matrix(const ColumnOrbitMatrix& c);

/// Entrywise rescaling c_ij = r_ij * n_i / n_j. Throws when some r_ij * n_i
/// is not divisible by n_j (such a matrix cannot come from a graph) or when
/// the result fails the column conditions.
ColumnOrbitMatrix row_to_column(const RowOrbitMatrix& r);

/// Inverse rescaling r_ij = c_ij * n_j / n_i, same error behaviour.
RowOrbitMatrix column_to_row(const ColumnOrbitMatrix& c);

/// Quotient of a concrete graph: r_ij = sum over y in O_j of a(rep_i, y).
/// Requires part.generator to be an automorphism of a; verifies that every
/// row of each block gives the same sum (equitability) and throws otherwise,
/// since a non-equitable block under a genuine automorphism is a bug.
RowOrbitMatrix derive_row_orbit_matrix(const Matrix& a, const OrbitPartition& part,
                                       const Params& params);

/// Column counterpart: c_ij = sum over x in O_i of a(x, rep_j).
ColumnOrbitMatrix derive_column_orbit_matrix(const Matrix& a, const OrbitPartition& part,
                                             const Params& params);

}  // namespace dsrg
