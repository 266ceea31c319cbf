#include "dsrg/bit_expansion.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace dsrg {

namespace {

[[noreturn]] void bad_spec(const BitSpec& s, const char* why) {
    std::ostringstream os;
    os << "bit (" << s.source_orbit << "," << s.target_orbit << "): " << s.rows << "x" << s.cols
       << " block with row sum " << s.row_sum << " " << why;
    throw std::invalid_argument(os.str());
}

// Positions of the first row that may carry ones, and how many ones they
// must carry. Diagonal blocks lose position 0 (zero diagonal propagates
// around the whole cycle).
void check_spec(const BitSpec& s) {
    if (s.rows < 1 || s.cols < 1) bad_spec(s, "has empty side");
    if (s.diagonal && s.rows != s.cols) bad_spec(s, "is diagonal but not square");
    if (s.row_sum < 0 || s.row_sum > s.cols) bad_spec(s, "exceeds block width");
    if (s.diagonal && s.row_sum > s.cols - 1) bad_spec(s, "needs a loop");
    if (s.rows == 1 && s.cols > 1 && s.row_sum != 0 && s.row_sum != s.cols) {
        bad_spec(s, "cannot be a constant row");
    }
}

std::int64_t binomial_checked(std::int64_t n, std::int64_t r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    std::int64_t acc = 1;
    for (std::int64_t i = 1; i <= r; ++i) {
        // acc * (n - r + i) / i is exact at every step
        const std::int64_t num = n - r + i;
        if (acc > std::numeric_limits<std::int64_t>::max() / num) {
            throw std::overflow_error("binomial overflows 64 bits");
        }
        acc = acc * num / i;
    }
    return acc;
}

}  // namespace

BitSpec bit_spec(const RowOrbitMatrix& m, Index i, Index j) {
    BitSpec s;
    s.source_orbit = i;
    s.target_orbit = j;
    s.row_sum = m.entries(i, j);
    s.rows = m.lengths[static_cast<std::size_t>(i)];
    s.cols = m.lengths[static_cast<std::size_t>(j)];
    s.diagonal = (i == j);
    check_spec(s);
    s.fixed = is_fixed_bit(s);
    return s;
}

bool is_fixed_bit(const BitSpec& spec) {
    check_spec(spec);
    if (spec.rows == 1 || spec.cols == 1) return true;  // constant blocks
    const std::int64_t free = spec.diagonal ? spec.cols - 1 : spec.cols;
    return spec.row_sum == 0 || spec.row_sum == free;
}

std::int64_t count_bit_candidates(const BitSpec& spec) {
    check_spec(spec);
    if (spec.rows == 1 || spec.cols == 1) return 1;
    const std::int64_t free = spec.diagonal ? spec.cols - 1 : spec.cols;
    return binomial_checked(free, spec.row_sum);
}

std::vector<BitPattern> enumerate_bit_candidates(const BitSpec& spec, std::int64_t p) {
    check_spec(spec);
    if ((spec.rows != 1 && spec.rows != p) || (spec.cols != 1 && spec.cols != p)) {
        bad_spec(spec, "has sides outside {1, p}");
    }
    const auto n = static_cast<std::size_t>(spec.cols);
    if (spec.rows == 1 || spec.cols == 1) {
        // Constant block: the unique candidate fills the row evenly.
        BitPattern row(n, static_cast<std::uint8_t>(spec.row_sum > 0 ? 1 : 0));
        return {std::move(row)};
    }
    // p-by-p: all length-p rows with row_sum ones, position 0 forced to 0 on
    // the diagonal. Trying 0 before 1 at each position yields lexicographic
    // order.
    std::vector<BitPattern> out;
    BitPattern row(n, 0);
    const std::size_t start = spec.diagonal ? 1 : 0;
    auto rec = [&](auto&& self, std::size_t pos, std::int64_t remaining) -> void {
        if (remaining == 0) {
            out.push_back(row);
            return;
        }
        if (pos >= n || static_cast<std::int64_t>(n - pos) < remaining) return;
        row[pos] = 0;
        self(self, pos + 1, remaining);
        row[pos] = 1;
        self(self, pos + 1, remaining - 1);
        row[pos] = 0;
    };
    rec(rec, start, spec.row_sum);
    return out;
}

Matrix expand_block(const BitSpec& spec, const BitPattern& first_row, std::int64_t p) {
    check_spec(spec);
    if (static_cast<std::int64_t>(first_row.size()) != spec.cols) {
        bad_spec(spec, "got a first row of the wrong length");
    }
    Matrix block(spec.rows, spec.cols);
    if (spec.rows == spec.cols && spec.rows == p && p > 1) {
        for (Index a = 0; a < p; ++a) {
            for (Index c = 0; c < p; ++c) {
                block(a, c) = first_row[static_cast<std::size_t>(((c - a) % p + p) % p)];
            }
        }
    } else {
        for (Index a = 0; a < spec.rows; ++a) {
            for (Index c = 0; c < spec.cols; ++c) {
                block(a, c) = first_row[static_cast<std::size_t>(c)];
            }
        }
    }
    return block;
}

BitPattern extract_first_row(const Matrix& a, const OrbitPartition& part, Index i, Index j) {
    const auto& oi = part.orbits[static_cast<std::size_t>(i)];
    const auto& oj = part.orbits[static_cast<std::size_t>(j)];
    BitPattern row(oj.size());
    for (std::size_t c = 0; c < oj.size(); ++c) {
        row[c] = static_cast<std::uint8_t>(a(oi[0], oj[c]));
    }
    return row;
}

std::vector<std::vector<BitPattern>> extract_bits(const Matrix& a, const OrbitPartition& part) {
    const auto b = part.orbit_count();
    std::vector<std::vector<BitPattern>> bits(b, std::vector<BitPattern>(b));
    for (std::size_t i = 0; i < b; ++i) {
        for (std::size_t j = 0; j < b; ++j) {
            bits[i][j] = extract_first_row(a, part, static_cast<Index>(i), static_cast<Index>(j));
        }
    }
    return bits;
}

Matrix expand_bits(const RowOrbitMatrix& m, const OrbitPartition& part,
                   const std::vector<std::vector<BitPattern>>& bits) {
    const Index b = m.block_count();
    if (static_cast<Index>(part.orbit_count()) != b ||
        static_cast<std::int64_t>(part.degree) != m.params.v) {
        throw std::invalid_argument("expand_bits: partition does not match orbit matrix");
    }
    Matrix a = Matrix::Zero(part.degree, part.degree);
    for (Index i = 0; i < b; ++i) {
        for (Index j = 0; j < b; ++j) {
            const BitSpec spec = bit_spec(m, i, j);
            const Matrix block =
                expand_block(spec, bits[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                             m.prime);
            const auto& oi = part.orbits[static_cast<std::size_t>(i)];
            const auto& oj = part.orbits[static_cast<std::size_t>(j)];
            for (std::size_t r = 0; r < oi.size(); ++r) {
                for (std::size_t c = 0; c < oj.size(); ++c) {
                    a(oi[r], oj[c]) = block(static_cast<Index>(r), static_cast<Index>(c));
                }
            }
        }
    }
    return a;
}

}  // namespace dsrg
