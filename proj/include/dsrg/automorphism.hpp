#pragma once

#include "dsrg/matrix.hpp"
#include "dsrg/permutation.hpp"

#include <vector>

namespace dsrg {

/// True iff a(g(x), g(y)) == a(x, y) for all x, y.
bool is_automorphism(const Matrix& a, const Permutation& g);

/// All automorphisms of order exactly p (p prime), found by assembling the
/// permutation cycle by cycle with arc-consistency checks against every
/// vertex placed so far, after an equitable-refinement vertex colouring has
/// narrowed the candidate images. Result is sorted by image array and free
/// of duplicates; empty when none exist (e.g. p > v).
std::vector<Permutation> find_prime_order_automorphisms(const Matrix& a, std::int64_t p);

/// Iterated (out-degree, in-degree)-into-each-class refinement starting from
/// the uniform colouring; vertices that an automorphism can exchange always
/// share a colour.
std::vector<int> refine_vertex_colors(const Matrix& a);

}  // namespace dsrg
