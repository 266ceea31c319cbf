#pragma once

#include "dsrg/matrix.hpp"

#include <cstdint>
#include <vector>

namespace dsrg {

/// Relabeling-invariant certificate of a digraph. Two digraphs are
/// isomorphic exactly when their canonical bytes agree.
struct CanonicalForm {
    std::vector<std::uint8_t> bytes;  // row-major bit-packed canonical matrix
    std::vector<int> relabeling;      // old -> new labels producing it
    std::uint64_t aut_order = 1;      // |Aut| of the input graph

    Matrix matrix(Index v) const { return unpack_bits(bytes, v); }
};

/// Individualization-refinement canonical labeling. Cells are refined by
/// (out-degree into cell, in-degree from cell) signatures until equitable,
/// the smallest non-singleton cell is branched on, and the lexicographically
/// least relabeled matrix over all leaves is the canonical form. The
/// automorphism group acts freely and transitively on the leaves attaining
/// the minimum, so their count is |Aut|.
CanonicalForm canonical_form(const Matrix& a);

/// Equal canonical bytes; unequal sizes are simply not isomorphic.
bool are_isomorphic(const Matrix& a, const Matrix& b);

std::uint64_t automorphism_group_order(const Matrix& a);

}  // namespace dsrg
