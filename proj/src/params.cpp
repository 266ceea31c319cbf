#include "dsrg/params.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace dsrg {

bool check_feasibility(const Params& p) {
    if (p.v <= 0 || p.k <= 0 || p.t < 0 || p.lambda < 0 || p.mu < 0) return false;
    if (p.v > 10000) {
        // all counts are guaranteed to fit in 64 bits only up to here
        throw std::invalid_argument("check_feasibility: v exceeds supported bound 10^4");
    }
    if (p.k >= p.v) return false;
    if (p.t > p.k) return false;
    if (p.lambda >= p.k) return false;
    if (p.mu > p.k) return false;
    return counting_identity_holds(p);
}

std::int64_t max_fitness(const Params& p) {
    return p.v * p.t + p.v * p.k * p.lambda + p.v * (p.v - p.k - 1) * p.mu;
}

std::string format_params(const Params& p) {
    std::ostringstream os;
    os << p.v << ' ' << p.k << ' ' << p.t << ' ' << p.lambda << ' ' << p.mu;
    return os.str();
}

}  // namespace dsrg
