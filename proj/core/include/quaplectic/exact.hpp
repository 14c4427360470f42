#pragma once

#include <complex>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace quaplectic {

using Rational = boost::multiprecision::cpp_rational;

struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  GaussRational conj() const { return {re, -im}; }

  friend GaussRational operator+(const GaussRational& x, const GaussRational& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend GaussRational operator-(const GaussRational& x, const GaussRational& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend GaussRational operator-(const GaussRational& x) { return {-x.re, -x.im}; }
  friend GaussRational operator*(const GaussRational& x, const GaussRational& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend bool operator==(const GaussRational& x, const GaussRational& y) {
    return x.re == y.re && x.im == y.im;
  }
};

// p + q*sqrt(2) with Gaussian rational p, q
class Coeff {
 public:
  Coeff() = default;
  Coeff(long v) : p_(Rational(v)) {}
  Coeff(Rational v) : p_(std::move(v)) {}
  Coeff(GaussRational p, GaussRational q = {}) : p_(std::move(p)), q_(std::move(q)) {}

  static Coeff i() { return Coeff(GaussRational(0, 1)); }
  static Coeff sqrt2() { return Coeff(GaussRational(), GaussRational(1)); }
  static Coeff frac(long num, long den) { return Coeff(Rational(num, den)); }

  const GaussRational& rational_part() const { return p_; }
  const GaussRational& sqrt2_part() const { return q_; }

  bool is_zero() const { return p_.is_zero() && q_.is_zero(); }
  Coeff conj() const { return {p_.conj(), q_.conj()}; }

  std::complex<double> to_complex() const;
  std::string str() const;

  friend Coeff operator+(const Coeff& x, const Coeff& y) { return {x.p_ + y.p_, x.q_ + y.q_}; }
  friend Coeff operator-(const Coeff& x, const Coeff& y) { return {x.p_ - y.p_, x.q_ - y.q_}; }
  friend Coeff operator-(const Coeff& x) { return {-x.p_, -x.q_}; }
  friend Coeff operator*(const Coeff& x, const Coeff& y) {
    GaussRational two(2);
    return {x.p_ * y.p_ + two * x.q_ * y.q_, x.p_ * y.q_ + x.q_ * y.p_};
  }
  Coeff& operator+=(const Coeff& y) { return *this = *this + y; }
  Coeff& operator-=(const Coeff& y) { return *this = *this - y; }
  Coeff& operator*=(const Coeff& y) { return *this = *this * y; }
  friend bool operator==(const Coeff& x, const Coeff& y) { return x.p_ == y.p_ && x.q_ == y.q_; }

 private:
  GaussRational p_;
  GaussRational q_;
};

}  // namespace quaplectic
