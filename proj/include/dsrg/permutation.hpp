#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dsrg {

/// A permutation of {0, ..., degree-1}, stored as the image array.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int degree);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    Permutation compose(const Permutation& then) const;  // x -> then(this(x))
    Permutation power(std::int64_t e) const;
    bool is_identity() const;

    /// Disjoint cycles, each rotated to start at its least element, sorted by
    /// that element. Fixed points omitted.
    std::vector<std::vector<int>> cycles() const;

    /// Least m >= 1 with g^m = id (lcm of cycle lengths).
    std::int64_t order() const;

    /// Cycle notation with 0-based points, e.g. "(0 1 2)(5 6)"; "()" for the
    /// identity.
    std::string to_cycle_string() const;

    /// Parses cycle notation. Degree is max moved point + 1 unless a larger
    /// degree is supplied.
    static Permutation from_cycle_string(const std::string& text, int degree = -1);

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

bool is_prime(std::int64_t n);

}  // namespace dsrg
