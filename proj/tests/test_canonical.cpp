#include "dsrg/canonical.hpp"

#include "dsrg/permutation.hpp"

#include <doctest.h>

#include <numeric>
#include <random>
#include <vector>

using namespace dsrg;

namespace {

Matrix triangle() {
    Matrix m(3, 3);
    m << 0, 1, 0,
         0, 0, 1,
         1, 0, 0;
    return m;
}

Matrix kautz() {
    Matrix m(6, 6);
    m << 0, 0, 1, 1, 0, 0,
         0, 0, 0, 0, 1, 1,
         1, 1, 0, 0, 0, 0,
         0, 0, 0, 0, 1, 1,
         1, 1, 0, 0, 0, 0,
         0, 0, 1, 1, 0, 0;
    return m;
}

Matrix random_digraph(Index v, std::mt19937& gen) {
    Matrix m = Matrix::Zero(v, v);
    for (Index i = 0; i < v; ++i) {
        for (Index j = 0; j < v; ++j) {
            if (i != j && (gen() & 1u)) m(i, j) = 1;
        }
    }
    return m;
}

std::vector<int> random_relabeling(Index v, std::mt19937& gen) {
    std::vector<int> p(static_cast<std::size_t>(v));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), gen);
    return p;
}

// ground truth: count permutations fixing a
std::uint64_t brute_aut_order(const Matrix& a) {
    const Index v = a.rows();
    std::vector<int> p(static_cast<std::size_t>(v));
    std::iota(p.begin(), p.end(), 0);
    std::uint64_t count = 0;
    do {
        if (apply_relabeling(a, p) == a) ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

}  // namespace

TEST_CASE("relabeling yields the canonical matrix") {
    std::mt19937 gen(21);
    for (int trial = 0; trial < 30; ++trial) {
        const Index v = 1 + static_cast<Index>(gen() % 7);
        const Matrix a = random_digraph(v, gen);
        const CanonicalForm form = canonical_form(a);
        REQUIRE(form.relabeling.size() == static_cast<std::size_t>(v));
        CHECK(pack_bits(apply_relabeling(a, form.relabeling)) == form.bytes);
        CHECK(form.matrix(v) == apply_relabeling(a, form.relabeling));
    }
}

TEST_CASE("canonical form is relabeling-invariant") {
    std::mt19937 gen(22);
    for (int trial = 0; trial < 100; ++trial) {
        const Index v = 2 + static_cast<Index>(gen() % 6);
        const Matrix a = random_digraph(v, gen);
        const Matrix b = apply_relabeling(a, random_relabeling(v, gen));
        CHECK(canonical_form(a).bytes == canonical_form(b).bytes);
        CHECK(are_isomorphic(a, b));
    }
}

TEST_CASE("known automorphism group orders") {
    CHECK(automorphism_group_order(triangle()) == 3);
    CHECK(automorphism_group_order(kautz()) == 6);
    CHECK(automorphism_group_order(Matrix::Zero(4, 4)) == 24);
    const Matrix k4 = Matrix::Ones(4, 4) - Matrix::Identity(4, 4);
    CHECK(automorphism_group_order(k4) == 24);
}

TEST_CASE("aut order matches brute force on random digraphs") {
    std::mt19937 gen(23);
    for (int trial = 0; trial < 60; ++trial) {
        const Index v = 1 + static_cast<Index>(gen() % 5);
        const Matrix a = random_digraph(v, gen);
        CHECK(automorphism_group_order(a) == brute_aut_order(a));
    }
}

TEST_CASE("non-isomorphic digraphs separate") {
    // same arc count, different out-degree sequences
    Matrix path(3, 3);
    path << 0, 1, 1,
            0, 0, 1,
            0, 0, 0;
    CHECK_FALSE(are_isomorphic(triangle(), path));
    // different sizes
    CHECK_FALSE(are_isomorphic(triangle(), kautz()));
    // the two 3-cycle orientations are isomorphic (swap two labels)
    Matrix reversed = triangle().transpose();
    CHECK(are_isomorphic(triangle(), reversed));
}

TEST_CASE("edge cases") {
    const CanonicalForm empty = canonical_form(Matrix::Zero(0, 0));
    CHECK(empty.bytes.empty());
    CHECK(empty.aut_order == 1);
    const CanonicalForm one = canonical_form(Matrix::Zero(1, 1));
    CHECK(one.aut_order == 1);
    CHECK(one.bytes == std::vector<std::uint8_t>{0});
}

TEST_CASE("canonical bytes agree across every relabeling, exhaustively") {
    std::mt19937 gen(24);
    for (int trial = 0; trial < 20; ++trial) {
        const Index v = 2 + static_cast<Index>(gen() % 3);  // v in {2,3,4}
        const Matrix a = random_digraph(v, gen);
        const CanonicalForm form = canonical_form(a);
        std::vector<int> p(static_cast<std::size_t>(v));
        std::iota(p.begin(), p.end(), 0);
        do {
            CHECK(canonical_form(apply_relabeling(a, p)).bytes == form.bytes);
        } while (std::next_permutation(p.begin(), p.end()));
    }
}
