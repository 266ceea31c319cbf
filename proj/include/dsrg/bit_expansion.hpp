#pragma once

#include "dsrg/matrix.hpp"
#include "dsrg/orbit_matrix.hpp"
#include "dsrg/orbit_partition.hpp"

#include <cstdint>
#include <vector>

namespace dsrg {

/// First row of a block ("bit"): one 0/1 value per column of the block.
using BitPattern = std::vector<std::uint8_t>;

/// Shape and row sum of one orbit-pair block of the adjacency matrix.
/// A block is determined by its first row: the acting group forces all
/// other rows (circulant for p-by-p blocks, constant otherwise).
struct BitSpec {
    Index source_orbit = 0;  // i
    Index target_orbit = 0;  // j
    std::int64_t row_sum = 0;  // r_ij
    std::int64_t rows = 1;     // n_i
    std::int64_t cols = 1;     // n_j
    bool diagonal = false;     // i == j
    bool fixed = false;        // exactly one candidate first row

    bool operator==(const BitSpec&) const = default;
};

/// Spec for block (i, j) of a row orbit matrix; fills the fixed flag.
/// Throws std::invalid_argument if the entry admits no block at all
/// (e.g. a 1-by-p block with 0 < r < p).
BitSpec bit_spec(const RowOrbitMatrix& m, Index i, Index j);

/// True iff exactly one admissible first row exists.
bool is_fixed_bit(const BitSpec& spec);

/// Number of admissible first rows. Throws std::invalid_argument on an
/// inconsistent spec and std::overflow_error if the count exceeds 2^63-1.
std::int64_t count_bit_candidates(const BitSpec& spec);

/// Every admissible first row, in lexicographic order: binary rows of
/// length n_j with exactly r_ij ones; diagonal blocks exclude rows with a
/// one in position 0 (no loops); 1-by-p and p-by-1 blocks are constant, so
/// at most one candidate exists.
std::vector<BitPattern> enumerate_bit_candidates(const BitSpec& spec, std::int64_t p);

/// Reconstructs the full n_i-by-n_j block from its first row. Rows and
/// columns are indexed by generator powers of the orbit representatives;
/// for n_i = n_j = p the block is the circulant with entry
/// (a, c) = first_row[(c - a) mod p], otherwise every row equals the first.
Matrix expand_block(const BitSpec& spec, const BitPattern& first_row, std::int64_t p);

/// Reads block (i, j) of a back out of a graph: the representative's row
/// restricted to orbit j in generator-power order.
BitPattern extract_first_row(const Matrix& a, const OrbitPartition& part, Index i, Index j);

/// All first rows of a under part, as a b-by-b grid.
std::vector<std::vector<BitPattern>> extract_bits(const Matrix& a, const OrbitPartition& part);

/// Assembles the v-by-v adjacency matrix (original vertex labels) whose
/// block (i, j) is the expansion of bits[i][j]. Inverse of extract_bits.
Matrix expand_bits(const RowOrbitMatrix& m, const OrbitPartition& part,
                   const std::vector<std::vector<BitPattern>>& bits);

}  // namespace dsrg
