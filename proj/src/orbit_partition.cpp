#include "dsrg/orbit_partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dsrg {

OrbitPartition::Locator OrbitPartition::locate() const {
    Locator loc;
    loc.orbit_of.assign(static_cast<std::size_t>(degree), -1);
    loc.position_of.assign(static_cast<std::size_t>(degree), -1);
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        for (std::size_t a = 0; a < orbits[i].size(); ++a) {
            loc.orbit_of[static_cast<std::size_t>(orbits[i][a])] = static_cast<int>(i);
            loc.position_of[static_cast<std::size_t>(orbits[i][a])] = static_cast<int>(a);
        }
    }
    return loc;
}

std::string OrbitPartition::serialize() const {
    std::ostringstream os;
    os << "p=" << order << "; lengths=";
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        if (i) os << ',';
        os << lengths[i];
    }
    os << "; generator=" << generator.to_cycle_string();
    return os.str();
}

OrbitPartition OrbitPartition::trivial(int degree) {
    OrbitPartition part;
    part.degree = degree;
    part.order = 1;
    part.generator = Permutation::identity(degree);
    for (int x = 0; x < degree; ++x) {
        part.orbits.push_back({x});
        part.lengths.push_back(1);
        part.representatives.push_back(x);
    }
    return part;
}

OrbitPartition OrbitPartition::standard(const std::vector<std::int64_t>& lengths,
                                        std::int64_t p) {
    if (p != 1 && !is_prime(p)) {
        throw std::invalid_argument("OrbitPartition::standard: order must be prime");
    }
    OrbitPartition part;
    part.order = p;
    int next = 0;
    std::vector<int> images;
    for (std::int64_t n : lengths) {
        if (n != 1 && n != p) {
            throw std::invalid_argument(
                "OrbitPartition::standard: orbit length must be 1 or p");
        }
        std::vector<int> orbit;
        for (std::int64_t a = 0; a < n; ++a) orbit.push_back(next + static_cast<int>(a));
        for (std::int64_t a = 0; a < n; ++a) {
            images.push_back(next + static_cast<int>((a + 1) % n));
        }
        part.representatives.push_back(next);
        part.lengths.push_back(n);
        part.orbits.push_back(std::move(orbit));
        next += static_cast<int>(n);
    }
    part.degree = next;
    part.generator = Permutation(std::move(images));
    if (p != 1 && part.generator.order() != p) {
        throw std::invalid_argument(
            "OrbitPartition::standard: lengths admit no order-p generator");
    }
    return part;
}

OrbitPartition orbits_of(const Permutation& g) {
    const std::int64_t p = g.order();
    if (!is_prime(p)) {
        throw std::invalid_argument("orbits_of: generator order " + std::to_string(p) +
                                    " is not prime");
    }
    OrbitPartition part;
    part.degree = g.degree();
    part.order = p;
    part.generator = g;

    std::vector<std::vector<int>> moved;
    for (int x = 0; x < g.degree(); ++x) {
        if (g(x) == x) {
            part.orbits.push_back({x});
            continue;
        }
        bool least = true;
        for (int y = g(x); y != x; y = g(y)) {
            if (y < x) {
                least = false;
                break;
            }
        }
        if (!least) continue;
        std::vector<int> orbit{x};
        for (int y = g(x); y != x; y = g(y)) orbit.push_back(y);
        moved.push_back(std::move(orbit));
    }
    // fixed points are already ascending; moved orbits are discovered in
    // ascending order of their least element
    for (auto& orbit : moved) part.orbits.push_back(std::move(orbit));
    for (const auto& orbit : part.orbits) {
        part.lengths.push_back(static_cast<std::int64_t>(orbit.size()));
        part.representatives.push_back(orbit.front());
    }
    return part;
}

}  // namespace dsrg
