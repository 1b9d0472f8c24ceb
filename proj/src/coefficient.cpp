#include "heatsum/coefficient.hpp"

#include <cstdio>

namespace heatsum {

std::string Coefficient::str() const {
    if (mode() == Mode::exact) return rat_to_string(rat());
    char buf[64];
    Cplx z = cplx();
    std::snprintf(buf, sizeof buf, "%.17g,%.17g", z.real(), z.imag());
    return buf;
}

Coefficient Coefficient::parse(const std::string& text, Mode m) {
    if (m == Mode::exact) return exact(rat_from_string(text));
    auto comma = text.find(',');
    if (comma == std::string::npos) return floating(Cplx(std::stod(text), 0.0));
    return floating(Cplx(std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))));
}

}  // namespace heatsum
