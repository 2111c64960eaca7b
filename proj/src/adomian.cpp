#include "gfadm/adomian.hpp"

#include <cstdio>

namespace gfadm {

std::vector<double> adomian_coefficients(const Expression& f, double x,
                                         std::span<const double> y1_terms,
                                         std::span<const double> y2_terms) {
    try {
        return adomian_coefficients_in<double>(f, x, y1_terms, y2_terms);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::singular_division && e.kind() != ErrorKind::numeric) throw;
        char where[64];
        std::snprintf(where, sizeof where, " (at x = %.10g)", x);
        throw Error(e.kind(), e.what() + std::string(where));
    }
}

}  // namespace gfadm
