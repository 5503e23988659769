#pragma once

#include "qmirror/const_scalar.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <string>

namespace qmirror {

using BigFloat = boost::multiprecision::cpp_dec_float_50;

/// Approximate complex value of an exact constant. Display and cross-check
/// use only; nothing exact is ever computed from it.
struct ComplexApprox {
    BigFloat re;
    BigFloat im;
};

BigFloat pi_value();
BigFloat zeta3_value();
ComplexApprox evaluate(const ConstScalar& c);
std::string format_approx(const ComplexApprox& z, int digits);

}  // namespace qmirror
