#include "dsrg/graph_ops.hpp"

#include <sstream>

namespace dsrg {

VerifyReport verify_dsrg_report(const Matrix& a, const Params& p) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("verify_dsrg: matrix is not square");
    }
    if (a.rows() != p.v) {
        throw std::invalid_argument("verify_dsrg: matrix dimension does not match params");
    }
    auto fail = [](const std::string& why) { return VerifyReport{false, why}; };

    for (Index i = 0; i < p.v; ++i) {
        for (Index j = 0; j < p.v; ++j) {
            if (a(i, j) != 0 && a(i, j) != 1) {
                return fail("entry (" + std::to_string(i) + "," + std::to_string(j) +
                            ") is not binary");
            }
        }
        if (a(i, i) != 0) {
            return fail("loop at vertex " + std::to_string(i));
        }
    }
    for (Index i = 0; i < p.v; ++i) {
        if (a.row(i).sum() != p.k) {
            return fail("out-degree of vertex " + std::to_string(i) + " is " +
                        std::to_string(a.row(i).sum()) + ", expected k=" + std::to_string(p.k));
        }
        if (a.col(i).sum() != p.k) {
            return fail("in-degree of vertex " + std::to_string(i) + " is " +
                        std::to_string(a.col(i).sum()) + ", expected k=" + std::to_string(p.k));
        }
    }
    const Matrix x = two_path_counts(a);
    for (Index i = 0; i < p.v; ++i) {
        for (Index j = 0; j < p.v; ++j) {
            const std::int64_t want = (i == j) ? p.t : (a(i, j) == 1 ? p.lambda : p.mu);
            if (x(i, j) != want) {
                std::ostringstream os;
                os << "2-path count at (" << i << "," << j << ") is " << x(i, j)
                   << ", expected " << want;
                return fail(os.str());
            }
        }
    }
    return {};
}

}  // namespace dsrg
