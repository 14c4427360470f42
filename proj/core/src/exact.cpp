#include "quaplectic/exact.hpp"

#include <cmath>
#include <sstream>

namespace quaplectic {

namespace {

std::string gauss_str(const GaussRational& g) {
  std::ostringstream os;
  if (g.im == 0) {
    os << g.re;
  } else if (g.re == 0) {
    os << g.im << "i";
  } else {
    os << "(" << g.re << (g.im < 0 ? "-" : "+") << abs(g.im) << "i)";
  }
  return os.str();
}

}  // namespace

std::complex<double> Coeff::to_complex() const {
  const double r2 = std::sqrt(2.0);
  return {p_.re.convert_to<double>() + r2 * q_.re.convert_to<double>(),
          p_.im.convert_to<double>() + r2 * q_.im.convert_to<double>()};
}

std::string Coeff::str() const {
  if (q_.is_zero()) return gauss_str(p_);
  if (p_.is_zero()) return gauss_str(q_) + "*sqrt2";
  return gauss_str(p_) + "+" + gauss_str(q_) + "*sqrt2";
}

}  // namespace quaplectic
