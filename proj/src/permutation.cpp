#include "dsrg/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dsrg {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int y : images_) {
        if (y < 0 || y >= degree() || seen[static_cast<std::size_t>(y)]) {
            throw std::invalid_argument("Permutation: image array is not a bijection");
        }
        seen[static_cast<std::size_t>(y)] = true;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<int> im(static_cast<std::size_t>(degree));
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int x = 0; x < degree(); ++x) im[static_cast<std::size_t>(images_[static_cast<std::size_t>(x)])] = x;
    return Permutation(std::move(im));
}

Permutation Permutation::compose(const Permutation& then) const {
    if (then.degree() != degree()) {
        throw std::invalid_argument("Permutation::compose: degree mismatch");
    }
    std::vector<int> im(images_.size());
    for (int x = 0; x < degree(); ++x) im[static_cast<std::size_t>(x)] = then((*this)(x));
    return Permutation(std::move(im));
}

Permutation Permutation::power(std::int64_t e) const {
    const std::int64_t n = order();
    e %= n;
    if (e < 0) e += n;
    Permutation acc = identity(degree());
    for (std::int64_t i = 0; i < e; ++i) acc = acc.compose(*this);
    return acc;
}

bool Permutation::is_identity() const {
    for (int x = 0; x < degree(); ++x) {
        if ((*this)(x) != x) return false;
    }
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (int x = 0; x < degree(); ++x) {
        if (seen[static_cast<std::size_t>(x)] || (*this)(x) == x) continue;
        std::vector<int> cyc;
        int y = x;
        do {
            cyc.push_back(y);
            seen[static_cast<std::size_t>(y)] = true;
            y = (*this)(y);
        } while (y != x);
        out.push_back(std::move(cyc));
    }
    return out;
}

std::int64_t Permutation::order() const {
    std::int64_t m = 1;
    for (const auto& c : cycles()) {
        m = std::lcm(m, static_cast<std::int64_t>(c.size()));
    }
    return m;
}

std::string Permutation::to_cycle_string() const {
    const auto cs = cycles();
    if (cs.empty()) return "()";
    std::ostringstream os;
    for (const auto& c : cs) {
        os << '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) os << ' ';
            os << c[i];
        }
        os << ')';
    }
    return os.str();
}

Permutation Permutation::from_cycle_string(const std::string& text, int degree) {
    std::vector<std::vector<int>> cycles;
    std::size_t pos = 0;
    int max_point = -1;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        if (text[pos] != '(') {
            throw std::invalid_argument("Permutation: expected '(' in cycle notation");
        }
        const std::size_t close = text.find(')', pos);
        if (close == std::string::npos) {
            throw std::invalid_argument("Permutation: unbalanced '(' in cycle notation");
        }
        std::istringstream in(text.substr(pos + 1, close - pos - 1));
        std::vector<int> cyc;
        int x;
        while (in >> x) {
            if (x < 0) throw std::invalid_argument("Permutation: negative point");
            cyc.push_back(x);
            max_point = std::max(max_point, x);
        }
        if (!in.eof()) {
            throw std::invalid_argument("Permutation: malformed cycle");
        }
        if (!cyc.empty()) cycles.push_back(std::move(cyc));
        pos = close + 1;
    }
    const int deg = std::max(degree, max_point + 1);
    if (deg < 0) throw std::invalid_argument("Permutation: cannot infer degree");
    std::vector<int> im(static_cast<std::size_t>(deg));
    std::iota(im.begin(), im.end(), 0);
    std::vector<bool> moved(static_cast<std::size_t>(deg), false);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const int x = cyc[i];
            const int y = cyc[(i + 1) % cyc.size()];
            if (x >= deg || moved[static_cast<std::size_t>(x)]) {
                throw std::invalid_argument("Permutation: repeated or out-of-range point");
            }
            moved[static_cast<std::size_t>(x)] = true;
            im[static_cast<std::size_t>(x)] = y;
        }
    }
    return Permutation(std::move(im));
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace dsrg
