#pragma once

#include "gfadm/expr.hpp"
#include "gfadm/kernels.hpp"

#include <array>
#include <string>

namespace gfadm {

enum class OperatorKind { lane_emden, flat };

struct LeftCondition {
    enum class Kind { neumann0, dirichlet };
    Kind kind = Kind::neumann0;
    double value = 0.0;  // dirichlet only
};

/// a y(1) + b y'(1) = c
struct RightCondition {
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;
};

struct ComponentSpec {
    OperatorKind op = OperatorKind::lane_emden;
    double alpha = 0.0;  // shape factor; ignored for the flat operator
    LeftCondition left;
    RightCondition right;
    Expression rhs;

    /// Coefficient of y'/x in the operator (0 for flat).
    [[nodiscard]] double shape() const noexcept { return op == OperatorKind::lane_emden ? alpha : 0.0; }

    /// Kernel family implied by operator and boundary data. Throws a usage error for
    /// combinations without a kernel (see ProblemSpec::validate).
    [[nodiscard]] KernelSpec kernel() const;
};

/// Coupled system  L_i y_i = f_i(x, y1, y2), i = 1, 2, with L_i = y'' + (alpha_i/x) y'.
struct ProblemSpec {
    std::string name;
    std::array<ComponentSpec, 2> components;

    /// Throws a usage error when a component's data admits no Green's kernel:
    /// a == 0, a singular operator with a Dirichlet left condition, or a two-sided
    /// Dirichlet component with b != 0.
    void validate() const;
};

}  // namespace gfadm
