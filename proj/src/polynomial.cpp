#include "gfadm/polynomial.hpp"

#include "gfadm/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace gfadm {

Polynomial::Polynomial(double constant) : c_{constant} { trim(); }

Polynomial::Polynomial(std::initializer_list<double> coeffs) : c_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(std::size_t power, double coeff) {
    std::vector<double> c(power + 1, 0.0);
    c[power] = coeff;
    return Polynomial(std::move(c));
}

double Polynomial::operator()(double x) const noexcept {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<double> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
    return Polynomial(std::move(d));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), 0.0);
    for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] += rhs.c_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), 0.0);
    for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] -= rhs.c_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    if (c_.empty() || rhs.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<double> out(c_.size() + rhs.c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
    }
    c_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(double s) {
    for (double& v : c_) v *= s;
    trim();
    return *this;
}

std::string Polynomial::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    char buf[64];
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0.0) continue;
        std::snprintf(buf, sizeof buf, "%s%.10g", out.empty() ? "" : (c_[k] < 0 ? " - " : " + "),
                      out.empty() ? c_[k] : std::abs(c_[k]));
        out += buf;
        if (k == 1) out += " x";
        if (k > 1) out += " x^" + std::to_string(k);
    }
    return out;
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

bool is_finite(const Polynomial& p) noexcept {
    return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                       [](double v) { return std::isfinite(v); });
}

Polynomial reciprocal(const Polynomial&) {
    throw Error(ErrorKind::unsupported_backend,
                "division is not supported on polynomial-valued series (exact backend)");
}

}  // namespace gfadm
