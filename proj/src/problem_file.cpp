#include "gfadm/problem_file.hpp"

#include "gfadm/error.hpp"

#include <array>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace gfadm {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string_view strip_comment(std::string_view line) {
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') quoted = !quoted;
        if (!quoted && (line[i] == '#' || line[i] == ';')) return line.substr(0, i);
    }
    return line;
}

class Reader {
public:
    explicit Reader(int line) : line_(line) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::parse, "line " + std::to_string(line_) + ": " + what);
    }

    double number(std::string_view text) const {
        const std::string s(trim(text));
        if (s.empty()) fail("missing number");
        char* end = nullptr;
        errno = 0;
        const double v = std::strtod(s.c_str(), &end);
        if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) fail("bad number '" + s + "'");
        return v;
    }

    long integer(std::string_view text) const {
        const std::string s(trim(text));
        char* end = nullptr;
        errno = 0;
        const long v = std::strtol(s.c_str(), &end, 10);
        if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE) fail("bad integer '" + s + "'");
        return v;
    }

    /// "k1=v1 k2=v2" with every key in `allowed`; returns the values found.
    std::map<std::string, double> assignments(std::string_view text,
                                              std::initializer_list<std::string_view> allowed) const {
        std::map<std::string, double> out;
        std::istringstream in{std::string(text)};
        std::string tok;
        while (in >> tok) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos) fail("expected key=value, got '" + tok + "'");
            const std::string key = tok.substr(0, eq);
            bool ok = false;
            for (auto a : allowed) ok = ok || a == key;
            if (!ok) fail("unknown parameter '" + key + "'");
            if (out.count(key) != 0) fail("duplicate parameter '" + key + "'");
            out[key] = number(std::string_view(tok).substr(eq + 1));
        }
        return out;
    }

private:
    int line_;
};

struct PartialComponent {
    std::optional<ComponentSpec> spec{ComponentSpec{}};
    bool has_operator = false;
    bool has_left = false;
    bool has_right = false;
    bool has_rhs = false;
};

void set_component_key(PartialComponent& pc, const std::string& key, std::string_view value, const Reader& rd) {
    ComponentSpec& c = *pc.spec;
    auto once = [&](bool& flag) {
        if (flag) rd.fail("duplicate key '" + key + "'");
        flag = true;
    };
    if (key == "operator") {
        once(pc.has_operator);
        std::istringstream in{std::string(value)};
        std::string kind;
        in >> kind;
        std::string rest;
        std::getline(in, rest);
        if (kind == "flat") {
            if (!trim(rest).empty()) rd.fail("flat operator takes no parameters");
            c.op = OperatorKind::flat;
            c.alpha = 0.0;
        } else if (kind == "lane_emden") {
            const auto params = rd.assignments(rest, {"alpha"});
            if (params.count("alpha") == 0) rd.fail("lane_emden needs alpha=<real>");
            c.op = OperatorKind::lane_emden;
            c.alpha = params.at("alpha");
            if (c.alpha < 0.0) rd.fail("alpha must be >= 0");
        } else {
            rd.fail("operator must be 'lane_emden alpha=<r>' or 'flat'");
        }
    } else if (key == "left") {
        once(pc.has_left);
        std::istringstream in{std::string(value)};
        std::string kind;
        in >> kind;
        std::string rest;
        std::getline(in, rest);
        if (kind == "neumann0") {
            if (!trim(rest).empty()) rd.fail("neumann0 takes no parameters");
            c.left = {LeftCondition::Kind::neumann0, 0.0};
        } else if (kind == "dirichlet") {
            const auto params = rd.assignments(rest, {"value"});
            if (params.count("value") == 0) rd.fail("dirichlet needs value=<real>");
            c.left = {LeftCondition::Kind::dirichlet, params.at("value")};
        } else {
            rd.fail("left must be 'neumann0' or 'dirichlet value=<r>'");
        }
    } else if (key == "right") {
        once(pc.has_right);
        const auto params = rd.assignments(value, {"a", "b", "c"});
        for (const char* k : {"a", "b", "c"}) {
            if (params.count(k) == 0) rd.fail(std::string("right needs ") + k + "=<real>");
        }
        c.right = {params.at("a"), params.at("b"), params.at("c")};
    } else if (key == "rhs") {
        once(pc.has_rhs);
        std::string_view text = value;
        if (text.size() >= 2 && text.front() == '"' && text.back() == '"') text = text.substr(1, text.size() - 2);
        try {
            c.rhs = parse_expression(text);
        } catch (const ParseError& e) {
            rd.fail(std::string("rhs: ") + e.what());
        }
    } else {
        rd.fail("unknown key '" + key + "' in component section");
    }
}

}  // namespace

Backend parse_backend(std::string_view name) {
    if (name == "grid") return Backend::grid;
    if (name == "poly") return Backend::exact_polynomial;
    throw Error(ErrorKind::parse, "backend must be 'grid' or 'poly', got '" + std::string(name) + "'");
}

ProblemFile parse_problem_file(std::string_view text) {
    ProblemFile out;
    std::array<PartialComponent, 2> comps;
    enum class Section { top, component1, component2, run } section = Section::top;
    std::set<std::string> plain_keys;
    std::array<bool, 4> seen{true, false, false, false};

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        const Reader rd(line_no);
        const std::string_view line = trim(strip_comment(raw));
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') rd.fail("unterminated section header");
            const std::string_view name = trim(line.substr(1, line.size() - 2));
            if (name == "component.1") {
                section = Section::component1;
            } else if (name == "component.2") {
                section = Section::component2;
            } else if (name == "run") {
                section = Section::run;
            } else {
                rd.fail("unknown section [" + std::string(name) + "]");
            }
            auto& flag = seen[static_cast<std::size_t>(section)];
            if (flag) rd.fail("duplicate section [" + std::string(name) + "]");
            flag = true;
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) rd.fail("expected key = value");
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        if (section == Section::top || section == Section::run) {
            if (!plain_keys.insert(key + "@" + std::to_string(static_cast<int>(section))).second) {
                rd.fail("duplicate key '" + key + "'");
            }
        }
        switch (section) {
            case Section::top:
                if (key != "name") rd.fail("unknown top-level key '" + key + "'");
                out.spec.name = value.size() >= 2 && value.front() == '"' ? std::string(value.substr(1, value.size() - 2))
                                                                         : std::string(value);
                break;
            case Section::component1:
            case Section::component2:
                set_component_key(comps[section == Section::component1 ? 0 : 1], key, value, rd);
                break;
            case Section::run:
                if (key == "n_terms") {
                    const long n = rd.integer(value);
                    if (n < 0 || n > 200) rd.fail("n_terms must be in 0..200");
                    out.run.n_terms = static_cast<int>(n);
                } else if (key == "backend") {
                    try {
                        out.run.backend = parse_backend(value);
                    } catch (const Error& e) {
                        rd.fail(e.what());
                    }
                } else if (key == "grid_size") {
                    const long g = rd.integer(value);
                    if (g < 2 || g > 4096) rd.fail("grid_size must be in 2..4096");
                    out.run.grid_size = static_cast<std::size_t>(g);
                } else {
                    rd.fail("unknown key '" + key + "' in [run]");
                }
                break;
        }
    }

    for (std::size_t i = 0; i < 2; ++i) {
        const auto& pc = comps[i];
        const std::string which = "[component." + std::to_string(i + 1) + "]";
        if (!seen[i + 1]) throw Error(ErrorKind::parse, "missing section " + which);
        if (!pc.has_operator || !pc.has_left || !pc.has_right || !pc.has_rhs) {
            throw Error(ErrorKind::parse, which + " needs operator, left, right and rhs");
        }
        out.spec.components[i] = *pc.spec;
    }
    try {
        out.spec.validate();
    } catch (const Error& e) {
        throw Error(ErrorKind::parse, std::string("invalid problem: ") + e.what());
    }
    return out;
}

ProblemFile load_problem_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::parse, "cannot open problem file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    ProblemFile pf = parse_problem_file(buf.str());
    if (pf.spec.name.empty()) pf.spec.name = path.stem().string();
    return pf;
}

}  // namespace gfadm
