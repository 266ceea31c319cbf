#include "dsrg/automorphism.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dsrg {

bool is_automorphism(const Matrix& a, const Permutation& g) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("is_automorphism: matrix is not square");
    }
    if (g.degree() != a.rows()) {
        throw std::invalid_argument("is_automorphism: permutation degree mismatch");
    }
    for (Index x = 0; x < a.rows(); ++x) {
        for (Index y = 0; y < a.cols(); ++y) {
            if (a(g(static_cast<int>(x)), g(static_cast<int>(y))) != a(x, y)) return false;
        }
    }
    return true;
}

std::vector<int> refine_vertex_colors(const Matrix& a) {
    const int v = static_cast<int>(a.rows());
    std::vector<int> color(static_cast<std::size_t>(v), 0);
    int classes = 1;
    while (true) {
        // signature: current colour plus (out, in) degree into every class
        std::map<std::vector<std::int64_t>, std::vector<int>> buckets;
        for (int x = 0; x < v; ++x) {
            std::vector<std::int64_t> sig(1 + 2 * static_cast<std::size_t>(classes), 0);
            sig[0] = color[static_cast<std::size_t>(x)];
            for (int y = 0; y < v; ++y) {
                const int c = color[static_cast<std::size_t>(y)];
                sig[1 + 2 * static_cast<std::size_t>(c)] += a(x, y);
                sig[2 + 2 * static_cast<std::size_t>(c)] += a(y, x);
            }
            buckets[std::move(sig)].push_back(x);
        }
        if (static_cast<int>(buckets.size()) == classes) return color;
        classes = static_cast<int>(buckets.size());
        int next = 0;
        for (const auto& [sig, members] : buckets) {
            for (int x : members) color[static_cast<std::size_t>(x)] = next;
            ++next;
        }
    }
}

namespace {

struct AutSearch {
    const Matrix& a;
    int v;
    std::int64_t p;
    std::vector<int> color;
    std::vector<int> image;    // -1 while unassigned
    std::vector<bool> taken;   // used as an image
    std::vector<Permutation> out;

    bool consistent(int x, int y) const {
        // proposed g(x) = y against every already-assigned vertex
        if (color[static_cast<std::size_t>(x)] != color[static_cast<std::size_t>(y)]) return false;
        if (a(x, x) != a(y, y)) return false;
        for (int u = 0; u < v; ++u) {
            const int gu = image[static_cast<std::size_t>(u)];
            if (gu < 0) continue;
            if (a(x, u) != a(y, gu)) return false;
            if (a(u, x) != a(gu, y)) return false;
        }
        return true;
    }

    // Builds the permutation one cycle at a time; each cycle starts at the
    // least vertex it moves, so no permutation is produced twice.
    void extend(int x, bool any_cycle) {
        while (x < v && image[static_cast<std::size_t>(x)] >= 0) ++x;
        if (x == v) {
            if (any_cycle) out.emplace_back(image);
            return;
        }
        // option 1: x is a fixed point
        if (consistent(x, x)) {
            image[static_cast<std::size_t>(x)] = x;
            taken[static_cast<std::size_t>(x)] = true;
            extend(x + 1, any_cycle);
            image[static_cast<std::size_t>(x)] = -1;
            taken[static_cast<std::size_t>(x)] = false;
        }
        // option 2: x starts a p-cycle through vertices > x
        std::vector<int> cyc{x};
        grow_cycle(x, cyc, any_cycle);
    }

    void grow_cycle(int start, std::vector<int>& cyc, bool any_cycle) {
        const int last = cyc.back();
        if (static_cast<std::int64_t>(cyc.size()) == p) {
            if (!consistent(last, start)) return;
            image[static_cast<std::size_t>(last)] = start;
            extend(start + 1, true);
            image[static_cast<std::size_t>(last)] = -1;
            return;
        }
        for (int y = start + 1; y < v; ++y) {
            if (taken[static_cast<std::size_t>(y)] || image[static_cast<std::size_t>(y)] >= 0) continue;
            if (std::find(cyc.begin(), cyc.end(), y) != cyc.end()) continue;
            if (!consistent(last, y)) continue;
            image[static_cast<std::size_t>(last)] = y;
            taken[static_cast<std::size_t>(y)] = true;
            cyc.push_back(y);
            grow_cycle(start, cyc, any_cycle);
            cyc.pop_back();
            taken[static_cast<std::size_t>(y)] = false;
            image[static_cast<std::size_t>(last)] = -1;
        }
    }
};

}  // namespace

std::vector<Permutation> find_prime_order_automorphisms(const Matrix& a, std::int64_t p) {
    if (!is_prime(p)) {
        throw std::invalid_argument("find_prime_order_automorphisms: p must be prime");
    }
    const int v = static_cast<int>(a.rows());
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("find_prime_order_automorphisms: matrix is not square");
    }
    if (p > v) return {};

    AutSearch search{a, v, p, refine_vertex_colors(a),
                     std::vector<int>(static_cast<std::size_t>(v), -1),
                     std::vector<bool>(static_cast<std::size_t>(v), false),
                     {}};
    search.extend(0, false);
    std::sort(search.out.begin(), search.out.end(),
              [](const Permutation& lhs, const Permutation& rhs) {
                  return lhs.images() < rhs.images();
              });
    return search.out;
}

}  // namespace dsrg
