// gfadm: command-line front end for the GF-ADM solver.

#include "gfadm/commands.hpp"
#include "gfadm/error.hpp"
#include "gfadm/problem_file.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace gfadm;

namespace {

struct RawCommon {
    std::string file;
    std::string backend;
    std::size_t grid_size = 0;
    bool serial = false;
};

void add_common(CLI::App* sub, RawCommon& c) {
    sub->add_option("file", c.file, "problem file")->required()->check(CLI::ExistingFile);
    sub->add_option("--backend", c.backend, "grid | poly")->check(CLI::IsMember({"grid", "poly"}));
    sub->add_option("--grid-size", c.grid_size, "Chebyshev degree N (N+1 nodes)")->check(CLI::Range(2, 4096));
    sub->add_flag("--serial", c.serial, "disable OpenMP");
}

cli::CommonArgs convert(const RawCommon& c) {
    cli::CommonArgs a;
    a.file = c.file;
    if (!c.backend.empty()) a.backend = parse_backend(c.backend);
    if (c.grid_size != 0) a.grid_size = c.grid_size;
    a.execution = c.serial ? ExecutionPolicy::serial : ExecutionPolicy::parallel;
    return a;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GF-ADM solver for coupled singular Lane-Emden boundary value problems"};
    app.require_subcommand(1);

    RawCommon solve_c, resid_c, bound_c, cmp_c;
    int solve_n = -1, cmp_n = -1, samples = 21, M = 512;
    std::string solve_xs, resid_xs, cmp_xs, resid_ns, bound_ns, solve_out, solve_json, resid_out, resid_points;
    std::string method = "identity", form = "standard";

    auto* solve = app.add_subcommand("solve", "partial sums at the abscissae (CSV)");
    add_common(solve, solve_c);
    solve->add_option("--n", solve_n, "number of terms n")->check(CLI::Range(0, 200));
    solve->add_option("--abscissae", solve_xs, "comma-separated x values (default 0.1..0.9)");
    solve->add_option("--out", solve_out, "CSV output path");
    solve->add_option("--json", solve_json, "polynomial coefficients (poly backend)");

    auto* resid = app.add_subcommand("residual", "residuals and max residuals per n (CSV)");
    add_common(resid, resid_c);
    resid->add_option("--n", resid_ns, "term list, e.g. 2..11 or 2,5,10");
    resid->add_option("--abscissae", resid_xs, "comma-separated x values (default 0.1..0.9)");
    resid->add_option("--method", method, "identity | spectral")->check(CLI::IsMember({"identity", "spectral"}));
    resid->add_option("--form", form, "standard | divergence")->check(CLI::IsMember({"standard", "divergence"}));
    resid->add_option("--out", resid_out, "summary CSV path");
    resid->add_option("--points", resid_points, "per-point CSV prefix (<prefix>_n<N>.csv)");

    auto* bound = app.add_subcommand("bound", "kernel bound m, Lipschitz constants, gamma, truncation bounds");
    add_common(bound, bound_c);
    bound->add_option("--n", bound_ns, "term list for the bound");
    bound->add_option("--samples", samples, "lattice points per axis")->check(CLI::Range(2, 200));

    auto* cmp = app.add_subcommand("compare", "GF-ADM against the finite-difference oracle");
    add_common(cmp, cmp_c);
    cmp->add_option("--n", cmp_n, "number of terms n")->check(CLI::Range(0, 200));
    cmp->add_option("--M", M, "oracle intervals")->check(CLI::Range(16, 1 << 16));
    cmp->add_option("--abscissae", cmp_xs, "comma-separated x values (default 0.1..0.9)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::input_error;
    }

    try {
        if (*solve) {
            cli::SolveArgs a;
            a.common = convert(solve_c);
            if (solve_n >= 0) a.n = solve_n;
            if (!solve_xs.empty()) a.abscissae = cli::parse_abscissae(solve_xs);
            if (!solve_out.empty()) a.out = solve_out;
            if (!solve_json.empty()) a.json = solve_json;
            return cli::cmd_solve(a, std::cout, std::cerr);
        }
        if (*resid) {
            cli::ResidualArgs a;
            a.common = convert(resid_c);
            if (!resid_ns.empty()) a.n_list = cli::parse_int_list(resid_ns);
            if (!resid_xs.empty()) a.abscissae = cli::parse_abscissae(resid_xs);
            a.method = method == "spectral" ? ResidualMethod::spectral : ResidualMethod::adomian_identity;
            a.form = form == "divergence" ? ResidualForm::divergence : ResidualForm::standard;
            if (!resid_out.empty()) a.out = resid_out;
            if (!resid_points.empty()) a.points_prefix = resid_points;
            return cli::cmd_residual(a, std::cout, std::cerr);
        }
        if (*bound) {
            cli::BoundArgs a;
            a.common = convert(bound_c);
            if (!bound_ns.empty()) a.n_list = cli::parse_int_list(bound_ns);
            a.samples = samples;
            return cli::cmd_bound(a, std::cout, std::cerr);
        }
        cli::CompareArgs a;
        a.common = convert(cmp_c);
        if (cmp_n >= 0) a.n = cmp_n;
        a.M = M;
        if (!cmp_xs.empty()) a.abscissae = cli::parse_abscissae(cmp_xs);
        return cli::cmd_compare(a, std::cout, std::cerr);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::input_error;
    }
}
