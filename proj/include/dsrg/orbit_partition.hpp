#pragma once

#include "dsrg/permutation.hpp"

#include <string>
#include <vector>

namespace dsrg {

/// Vertex orbits of a prime-order permutation, in canonical order: fixed
/// points first (ascending), then the length-p orbits by ascending least
/// element. Within an orbit vertices appear in generator-power order
/// rep, g(rep), g^2(rep), ...  That ordering is what makes block expansion
/// (circulant structure) well defined.
struct OrbitPartition {
    int degree = 0;
    std::int64_t order = 1;  // the generator's order p (1 only for the trivial action)
    Permutation generator;
    std::vector<std::vector<int>> orbits;
    std::vector<std::int64_t> lengths;
    std::vector<int> representatives;

    std::size_t orbit_count() const { return orbits.size(); }

    /// Orbit index and generator-power position of each vertex.
    struct Locator {
        std::vector<int> orbit_of;
        std::vector<int> position_of;
    };
    Locator locate() const;

    /// "p=<prime>; lengths=<n_1,...,n_b>; generator=<cycles>"
    std::string serialize() const;

    /// All-singleton partition under the identity (order recorded as 1).
    /// Lets the block machinery run degenerate searches in tests; orbits_of
    /// itself rejects the identity.
    static OrbitPartition trivial(int degree);

    /// Consecutive-block partition realizing the given orbit lengths: each
    /// length-p orbit occupies p consecutive vertices cycled by the
    /// generator. Used when indexing an orbit matrix that did not come with
    /// a concrete graph.
    static OrbitPartition standard(const std::vector<std::int64_t>& lengths, std::int64_t p);
};

/// Orbits of a prime-order generator. Rejects generators of non-prime order
/// (use OrbitPartition::trivial for the degenerate identity action).
OrbitPartition orbits_of(const Permutation& g);

}  // namespace dsrg
