#pragma once

#include "gfadm/problem.hpp"
#include "gfadm/solver.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace gfadm {

/// A problem file: INI-style text.
///
///     name = example
///     [component.1]
///     operator = lane_emden alpha=2      # or: flat
///     left = neumann0                    # or: dirichlet value=1
///     right = a=1 b=0 c=1
///     rhs = "y1^2 + 0.4*y1*y2"
///     [component.2]
///     ...
///     [run]
///     n_terms = 5
///     backend = grid                     # or: poly
///     grid_size = 64
///
/// '#' and ';' start comments outside quotes. Unknown sections or keys are rejected.
struct ProblemFile {
    ProblemSpec spec;
    SolveOptions run;
};

/// Throws Error(parse) with the offending line number.
[[nodiscard]] ProblemFile parse_problem_file(std::string_view text);
[[nodiscard]] ProblemFile load_problem_file(const std::filesystem::path& path);

/// "grid" or "poly"
[[nodiscard]] Backend parse_backend(std::string_view name);

}  // namespace gfadm
