#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace dsrg {

// All graph and quotient matrices are dense integer matrices. 64-bit entries
// keep every count exact for v up to 10^4 (the largest products that appear
// are bounded by v^2 < 2^63).
using Matrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

/// Row-major bit-packing of a 0/1 matrix, 8 entries per byte, final byte
/// zero-padded. Used as the stable cross-platform byte form of a graph.
std::vector<std::uint8_t> pack_bits(const Matrix& m);

/// Inverse of pack_bits for a square v-by-v matrix.
Matrix unpack_bits(const std::vector<std::uint8_t>& bytes, Index v);

/// FNV-1a over the packed bits; cheap population-membership hash.
std::uint64_t matrix_hash(const Matrix& m);

/// True if every entry is 0 or 1 and the diagonal is all zero.
template <typename Derived>
bool is_simple_adjacency(const Eigen::MatrixBase<Derived>& a) {
    if (a.rows() != a.cols()) return false;
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            const auto e = a(i, j);
            if (e != 0 && e != 1) return false;
            if (i == j && e != 0) return false;
        }
    }
    return true;
}

/// True if all row sums and column sums equal k.
template <typename Derived>
bool is_k_regular(const Eigen::MatrixBase<Derived>& a, std::int64_t k) {
    return (a.rowwise().sum().array() == k).all() &&
           (a.colwise().sum().array() == k).all();
}

/// Relabels a: entry (p[i], p[j]) of the result is a(i, j).
Matrix apply_relabeling(const Matrix& a, const std::vector<int>& p);

}  // namespace dsrg
