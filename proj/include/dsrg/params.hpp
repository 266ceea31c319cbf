#pragma once

#include <cstdint>
#include <string>

namespace dsrg {

/// Parameter tuple (v, k, t, lambda, mu) of a directed strongly regular
/// graph: k-regular simple digraph where the number of directed 2-paths
/// from x to y is t when x = y, lambda when x -> y is an arc, and mu
/// otherwise.
struct Params {
    std::int64_t v = 0;
    std::int64_t k = 0;
    std::int64_t t = 0;
    std::int64_t lambda = 0;
    std::int64_t mu = 0;

    friend bool operator==(const Params&, const Params&) = default;
};

/// Counting identity k^2 = t + lambda*k + mu*(v-k-1), obtained by evaluating
/// the defining matrix equation against the all-ones matrix. Necessary for
/// existence.
inline bool counting_identity_holds(const Params& p) {
    return p.k * p.k == p.t + p.lambda * p.k + p.mu * (p.v - p.k - 1);
}

/// Elementary bounds plus the counting identity. Note lambda < k: on an arc
/// x -> y the middle vertex of a 2-path is an out-neighbour of x other than
/// y itself. This is only a necessary condition; spectral conditions are
/// deliberately not checked.
bool check_feasibility(const Params& p);

/// vt + vk*lambda + v(v-k-1)*mu, the fitness value attained exactly by
/// adjacency matrices of DSRGs with these parameters.
std::int64_t max_fitness(const Params& p);

/// "v k t lambda mu"
std::string format_params(const Params& p);

}  // namespace dsrg
