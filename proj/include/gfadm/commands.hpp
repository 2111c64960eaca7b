#pragma once

#include "gfadm/analysis.hpp"
#include "gfadm/solver.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gfadm::cli {

enum ExitCode : int { ok = 0, input_error = 1, numeric_error = 2, oracle_error = 3 };

/// Flags shared by every subcommand. Unset optionals fall back to the file's [run] section.
struct CommonArgs {
    std::filesystem::path file;
    std::optional<Backend> backend;
    std::optional<std::size_t> grid_size;
    ExecutionPolicy execution = ExecutionPolicy::parallel;
};

struct SolveArgs {
    CommonArgs common;
    std::optional<int> n;
    std::vector<double> abscissae;  // empty: 0.1, ..., 0.9
    std::optional<std::filesystem::path> out;
    std::optional<std::filesystem::path> json;  // exact backend coefficients
};

struct ResidualArgs {
    CommonArgs common;
    std::vector<int> n_list;  // empty: 2..n_terms
    std::vector<double> abscissae;
    ResidualMethod method = ResidualMethod::adomian_identity;
    ResidualForm form = ResidualForm::standard;
    std::optional<std::filesystem::path> out;     // summary CSV
    std::optional<std::string> points_prefix;     // <prefix>_n<N>.csv per n
};

struct BoundArgs {
    CommonArgs common;
    std::vector<int> n_list;
    int samples = 21;
};

struct CompareArgs {
    CommonArgs common;
    std::optional<int> n;
    int M = 512;
    std::vector<double> abscissae;
};

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err);
int cmd_residual(const ResidualArgs& args, std::ostream& out, std::ostream& err);
int cmd_bound(const BoundArgs& args, std::ostream& out, std::ostream& err);
int cmd_compare(const CompareArgs& args, std::ostream& out, std::ostream& err);

/// "2..11", "2,4,6" or a mix ("1,3..5"). Throws Error(parse).
[[nodiscard]] std::vector<int> parse_int_list(std::string_view text);
/// Comma-separated reals in [0,1]. Throws Error(parse).
[[nodiscard]] std::vector<double> parse_abscissae(std::string_view text);

/// 0.1, 0.2, ..., 0.9
[[nodiscard]] std::vector<double> table_abscissae();

/// --out wins; otherwise $GFADM_OUTPUT_DIR/<default_name> when the variable is set; otherwise none (stdout).
[[nodiscard]] std::optional<std::filesystem::path> resolve_output(const std::optional<std::filesystem::path>& out,
                                                                  const std::string& default_name);

}  // namespace gfadm::cli
