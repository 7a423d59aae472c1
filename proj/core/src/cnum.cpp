#include "daekit/cnum.hpp"

#include <sstream>

namespace daekit {

std::string CNum::str() const {
    if (exact_) return q_.str();
    std::ostringstream os;
    os.precision(15);
    if (z_.imag() == 0) {
        os << z_.real();
    } else if (z_.real() == 0) {
        os << z_.imag() << "*im";
    } else {
        os << z_.real() << (z_.imag() >= 0 ? "+" : "-");
        double a = std::abs(z_.imag());
        if (a != 1) os << a << "*";
        os << "im";
    }
    return os.str();
}

} // namespace daekit
