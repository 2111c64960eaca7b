#include "gfadm/commands.hpp"

#include "gfadm/error.hpp"
#include "gfadm/kernels.hpp"
#include "gfadm/oracle.hpp"
#include "gfadm/problem_file.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace gfadm::cli {

namespace {

using Clock = std::chrono::steady_clock;

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::usage:
        case ErrorKind::parse:
        case ErrorKind::unsupported_backend: return input_error;
        case ErrorKind::no_convergence: return oracle_error;
        default: return numeric_error;
    }
}

int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return numeric_error;
    }
}

struct Loaded {
    ProblemFile file;
    SolveOptions options;
};

Loaded load(const CommonArgs& c, std::optional<int> n) {
    Loaded l{load_problem_file(c.file), {}};
    l.options = l.file.run;
    if (c.backend) l.options.backend = *c.backend;
    if (c.grid_size) l.options.grid_size = *c.grid_size;
    if (n) l.options.n_terms = *n;
    l.options.execution = c.execution;
    if (l.options.n_terms < 0) throw Error(ErrorKind::usage, "--n must be >= 0");
    if (l.options.grid_size < 2) throw Error(ErrorKind::usage, "--grid-size must be >= 2");
    return l;
}

/// Writes to the resolved path, or to `fallback` when there is none.
void emit(const std::optional<std::filesystem::path>& path, std::ostream& fallback,
          const std::function<void(std::ostream&)>& write) {
    if (!path) {
        write(fallback);
        return;
    }
    std::ofstream f(*path, std::ios::binary);
    if (!f) throw Error(ErrorKind::usage, "cannot write " + path->string());
    write(f);
    if (!f) throw Error(ErrorKind::usage, "write failed for " + path->string());
}

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::vector<int> default_n_list(const std::vector<int>& given, int n_terms) {
    if (!given.empty()) return given;
    std::vector<int> out;
    for (int n = std::min(2, n_terms); n <= n_terms; ++n) out.push_back(n);
    return out;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

std::vector<double> table_abscissae() {
    std::vector<double> xs;
    for (int k = 1; k <= 9; ++k) xs.push_back(k / 10.0);
    return xs;
}

std::optional<std::filesystem::path> resolve_output(const std::optional<std::filesystem::path>& out,
                                                    const std::string& default_name) {
    if (out) return out;
    if (const char* dir = std::getenv("GFADM_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
        std::filesystem::create_directories(dir);
        return std::filesystem::path(dir) / default_name;
    }
    return std::nullopt;
}

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    std::stringstream in{std::string(text)};
    std::string item;
    auto to_int = [&](const std::string& s) {
        char* end = nullptr;
        const long v = std::strtol(s.c_str(), &end, 10);
        if (s.empty() || end != s.c_str() + s.size() || v < 0 || v > 200) {
            throw Error(ErrorKind::parse, "bad term index '" + s + "' in list '" + std::string(text) + "'");
        }
        return static_cast<int>(v);
    };
    while (std::getline(in, item, ',')) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(to_int(item));
            continue;
        }
        const int lo = to_int(item.substr(0, dots));
        const int hi = to_int(item.substr(dots + 2));
        if (hi < lo) throw Error(ErrorKind::parse, "empty range '" + item + "'");
        for (int n = lo; n <= hi; ++n) out.push_back(n);
    }
    if (out.empty()) throw Error(ErrorKind::parse, "empty term list");
    return out;
}

std::vector<double> parse_abscissae(std::string_view text) {
    std::vector<double> out;
    std::stringstream in{std::string(text)};
    std::string item;
    while (std::getline(in, item, ',')) {
        char* end = nullptr;
        const double v = std::strtod(item.c_str(), &end);
        if (item.empty() || end != item.c_str() + item.size() || !(v >= 0.0 && v <= 1.0)) {
            throw Error(ErrorKind::parse, "abscissa '" + item + "' is not a number in [0,1]");
        }
        out.push_back(v);
    }
    if (out.empty()) throw Error(ErrorKind::parse, "empty abscissa list");
    return out;
}

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Loaded l = load(args.common, args.n);
        const SolutionSeries sol = gfadm_solve(l.file.spec, l.options);
        const int n = l.options.n_terms;
        const auto xs = args.abscissae.empty() ? table_abscissae() : args.abscissae;

        const auto csv_path = resolve_output(args.out, l.file.spec.name + "_solve_n" + std::to_string(n) + ".csv");
        emit(csv_path, out, [&](std::ostream& o) {
            o << "x,psi1,psi2\n";
            for (double x : xs) {
                const auto psi = evaluate_partial_sum(sol, n, x);
                o << fmt("%.7g", x) << ',' << fmt("%.7f", psi[0]) << ',' << fmt("%.7f", psi[1]) << '\n';
            }
        });

        if (l.options.backend == Backend::exact_polynomial) {
            std::optional<std::filesystem::path> json_path = args.json;
            if (!json_path && csv_path) json_path = std::filesystem::path(*csv_path).replace_extension(".json");
            if (json_path) {
                nlohmann::json j;
                j["name"] = l.file.spec.name;
                j["n"] = n;
                for (int i = 0; i < 2; ++i) {
                    const std::string c = std::to_string(i + 1);
                    const Polynomial psi = sol.partial_sum_polynomial(i, n);
                    j["psi" + c] = std::vector<double>(psi.coeffs().begin(), psi.coeffs().end());
                    nlohmann::json terms = nlohmann::json::array();
                    for (const auto& t : sol.poly_terms(i)) {
                        terms.push_back(std::vector<double>(t.coeffs().begin(), t.coeffs().end()));
                    }
                    j["terms" + c] = terms;
                }
                emit(json_path, out, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
            }
        }
        return static_cast<int>(ok);
    });
}

int cmd_residual(const ResidualArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        Loaded l = load(args.common, std::nullopt);
        const auto ns = default_n_list(args.n_list, l.options.n_terms);
        l.options.n_terms = *std::max_element(ns.begin(), ns.end());
        const SolutionSeries sol = gfadm_solve(l.file.spec, l.options);
        const auto xs = args.abscissae.empty() ? table_abscissae() : args.abscissae;

        std::vector<ResidualReport> summary;
        for (int n : ns) {
            ResidualReport rep = residual(l.file.spec, sol, n, xs, args.method, args.form);
            if (args.points_prefix) {
                const std::filesystem::path p = *args.points_prefix + "_n" + std::to_string(n) + ".csv";
                emit(p, out, [&](std::ostream& o) { write_points_csv(o, rep); });
            }
            const auto mx = max_residual(l.file.spec, sol, n, args.method, args.form);
            rep.maxr1 = std::max(rep.maxr1, mx[0]);
            rep.maxr2 = std::max(rep.maxr2, mx[1]);
            summary.push_back(std::move(rep));
        }
        const auto path = resolve_output(args.out, l.file.spec.name + "_residual.csv");
        emit(path, out, [&](std::ostream& o) { write_summary_csv(o, summary); });
        return static_cast<int>(ok);
    });
}

int cmd_bound(const BoundArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Loaded l = load(args.common, std::nullopt);
        const SolutionSeries sol = gfadm_solve(l.file.spec, l.options);
        const ConvergenceEstimate est = estimate_convergence(l.file.spec, sol, args.samples);
        out << "m = " << fmt("%.6f", est.m) << '\n'
            << "l1 = " << fmt("%.6g", est.lipschitz.l1) << '\n'
            << "l2 = " << fmt("%.6g", est.lipschitz.l2) << '\n'
            << "gamma = " << fmt("%.6g", est.gamma) << '\n'
            << "max_f0 = " << fmt("%.6g", est.max_f0) << '\n'
            << "box y1 = [" << fmt("%.6g", est.box.y1.lo) << ", " << fmt("%.6g", est.box.y1.hi) << "], y2 = ["
            << fmt("%.6g", est.box.y2.lo) << ", " << fmt("%.6g", est.box.y2.hi) << "]\n";
        if (!est.bound_applicable()) {
            err << "warning: gamma = " << fmt("%.6g", est.gamma)
                << " >= 1; the convergence hypothesis fails and no truncation bound is available\n";
            return static_cast<int>(ok);
        }
        out << "n,bound\n";
        for (int n : default_n_list(args.n_list, l.options.n_terms)) {
            out << n << ',' << fmt("%.5e", error_bound(est.m, est.lipschitz.l(), est.max_f0, n)) << '\n';
        }
        return static_cast<int>(ok);
    });
}

int cmd_compare(const CompareArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Loaded l = load(args.common, args.n);
        const auto xs = args.abscissae.empty() ? table_abscissae() : args.abscissae;

        auto t0 = Clock::now();
        const SolutionSeries sol = gfadm_solve(l.file.spec, l.options);
        const double t_adm = seconds_since(t0);

        t0 = Clock::now();
        const OracleSolution ref = fd_solve(l.file.spec, args.M);
        const double t_fd = seconds_since(t0);

        double dev = 0.0;
        out << "x,psi1,psi2,oracle1,oracle2\n";
        for (double x : xs) {
            const auto psi = evaluate_partial_sum(sol, l.options.n_terms, x);
            const double o1 = ref.interpolate(0, x);
            const double o2 = ref.interpolate(1, x);
            dev = std::max({dev, std::abs(psi[0] - o1), std::abs(psi[1] - o2)});
            out << fmt("%.7g", x) << ',' << fmt("%.7f", psi[0]) << ',' << fmt("%.7f", psi[1]) << ','
                << fmt("%.7f", o1) << ',' << fmt("%.7f", o2) << '\n';
        }
        out << "max_deviation = " << fmt("%.5e", dev) << '\n'
            << "gfadm_seconds = " << fmt("%.4f", t_adm) << '\n'
            << "oracle_seconds = " << fmt("%.4f", t_fd) << " (M = " << args.M << ", " << ref.iterations
            << " Newton iterations)\n";
        return static_cast<int>(ok);
    });
}

}  // namespace gfadm::cli
