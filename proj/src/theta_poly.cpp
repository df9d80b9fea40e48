#include "arbor/theta_poly.hpp"

#include <cstdio>

namespace arbor {

std::string format_real(double x, int significant) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant, x);
    return buf;
}

std::string to_string(const RealThetaPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        double c = it->second;
        if (out.empty()) {
            out += format_real(c);
        } else {
            out += c < 0 ? " - " : " + ";
            out += format_real(c < 0 ? -c : c);
        }
        if (it->first > 0) out += "*theta";
        if (it->first > 1) out += "^" + std::to_string(it->first);
    }
    return out;
}

}  // namespace arbor
