#include "dsrg/matrix.hpp"

#include <stdexcept>

namespace dsrg {

std::vector<std::uint8_t> pack_bits(const Matrix& m) {
    const Index n = m.rows() * m.cols();
    std::vector<std::uint8_t> out(static_cast<std::size_t>((n + 7) / 8), 0);
    Index bit = 0;
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j, ++bit) {
            if (m(i, j) != 0) {
                // most significant bit first, so byte order == row-major entry order
                out[static_cast<std::size_t>(bit >> 3)] |=
                    static_cast<std::uint8_t>(1u << (7 - (bit & 7)));
            }
        }
    }
    return out;
}

Matrix unpack_bits(const std::vector<std::uint8_t>& bytes, Index v) {
    if (static_cast<Index>(bytes.size()) < (v * v + 7) / 8) {
        throw std::invalid_argument("unpack_bits: byte buffer too short");
    }
    Matrix m = Matrix::Zero(v, v);
    Index bit = 0;
    for (Index i = 0; i < v; ++i) {
        for (Index j = 0; j < v; ++j, ++bit) {
            if (bytes[static_cast<std::size_t>(bit >> 3)] & (1u << (7 - (bit & 7)))) {
                m(i, j) = 1;
            }
        }
    }
    return m;
}

std::uint64_t matrix_hash(const Matrix& m) {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint8_t b : pack_bits(m)) {
        h ^= b;
        h *= 1099511628211ull;
    }
    // fold the shape in so e.g. 2x8 and 4x4 zero matrices differ
    h ^= static_cast<std::uint64_t>(m.rows()) * 0x9E3779B97F4A7C15ull;
    return h;
}

Matrix apply_relabeling(const Matrix& a, const std::vector<int>& p) {
    const Index v = a.rows();
    if (static_cast<Index>(p.size()) != v) {
        throw std::invalid_argument("apply_relabeling: permutation degree mismatch");
    }
    Matrix out(v, v);
    for (Index i = 0; i < v; ++i) {
        for (Index j = 0; j < v; ++j) {
            out(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]) = a(i, j);
        }
    }
    return out;
}

}  // namespace dsrg
