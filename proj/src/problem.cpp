#include "gfadm/problem.hpp"

#include "gfadm/error.hpp"

#include <cmath>

namespace gfadm {

KernelSpec ComponentSpec::kernel() const {
    if (right.a == 0.0) throw Error(ErrorKind::usage, "right boundary condition needs a != 0");
    if (left.kind == LeftCondition::Kind::dirichlet) {
        if (shape() != 0.0) {
            throw Error(ErrorKind::usage,
                        "a singular Lane-Emden operator requires the regularity condition y'(0) = 0");
        }
        if (right.b != 0.0) {
            throw Error(ErrorKind::usage, "two-sided Dirichlet components need b = 0 at x = 1");
        }
        return KernelSpec::dirichlet_dirichlet(left.value, right.c / right.a);
    }
    return KernelSpec::lane_emden(shape(), right.b / right.a);
}

void ProblemSpec::validate() const {
    for (const auto& c : components) {
        if (c.op == OperatorKind::lane_emden && !(c.alpha >= 0.0 && std::isfinite(c.alpha))) {
            throw Error(ErrorKind::usage, "shape factor alpha must be finite and >= 0");
        }
        (void)c.kernel();
    }
}

}  // namespace gfadm
