#include "qmirror/numeric.hpp"

#include <boost/math/constants/constants.hpp>

#include <sstream>

namespace qmirror {

BigFloat pi_value() { return boost::math::constants::pi<BigFloat>(); }

BigFloat zeta3_value() {
    // Apery's constant to 60 digits.
    static const BigFloat value("1.202056903159594285399738161511449990764986292340498881792271555");
    return value;
}

ComplexApprox evaluate(const ConstScalar& c) {
    ComplexApprox out{0, 0};
    const BigFloat two_pi = 2 * pi_value();
    for (const auto& [key, coeff] : c.terms()) {
        BigFloat mag = BigFloat(coeff.get_num().get_str()) / BigFloat(coeff.get_den().get_str());
        mag *= boost::multiprecision::pow(two_pi, key.two_pi_i_pow);
        if (key.zeta3) mag *= zeta3_value();
        // i^a
        switch (((key.two_pi_i_pow % 4) + 4) % 4) {
        case 0: out.re += mag; break;
        case 1: out.im += mag; break;
        case 2: out.re -= mag; break;
        case 3: out.im -= mag; break;
        }
    }
    return out;
}

std::string format_approx(const ComplexApprox& z, int digits) {
    std::ostringstream os;
    os.precision(digits);
    os << z.re.str(digits, std::ios_base::scientific);
    if (z.im != 0) os << (z.im < 0 ? " - " : " + ") << BigFloat(abs(z.im)).str(digits, std::ios_base::scientific) << "i";
    return os.str();
}

}  // namespace qmirror
