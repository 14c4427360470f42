#include "quaplectic/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace quaplectic {

void PhysicalConstants::validate() const {
  if (!(c > 0 && b > 0 && hbar > 0 && alpha_G > 0))
    throw std::invalid_argument("physical constants must be positive");
}

PlanckScales planck_scales(const PhysicalConstants& k) {
  k.validate();
  return {std::sqrt(k.hbar / (k.b * k.c)), std::sqrt(k.hbar * k.c / k.b), std::sqrt(k.hbar * k.b / k.c),
          std::sqrt(k.hbar * k.b * k.c)};
}

namespace {

int levi(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

}  // namespace

Mat8 infinitesimal_generator(const BoostParams& z, const PhysicalConstants& k,
                             const InfinitesimalOptions& opt) {
  k.validate();
  const double c = k.c, b = k.b;
  Mat8 G = Mat8::Zero();
  G(kT, kE) = z.vartheta / (c * b);
  G(kE, kT) = -b * c * z.vartheta;
  for (int i = 0; i < 3; ++i) {
    G(kT, kQ(i + 1)) = z.beta(i) / c;
    G(kT, kP(i + 1)) = z.gamma(i) / b;
    if (opt.dimensional_energy_row) {
      G(kE, kQ(i + 1)) = -b * z.gamma(i);
      G(kE, kP(i + 1)) = c * z.beta(i);
    } else {
      G(kE, kQ(i + 1)) = -c * z.gamma(i);
      G(kE, kP(i + 1)) = b * z.beta(i);
    }
    G(kQ(i + 1), kT) = c * z.beta(i);
    G(kQ(i + 1), kE) = -z.gamma(i) / b;
    G(kP(i + 1), kT) = b * z.gamma(i);
    G(kP(i + 1), kE) = z.beta(i) / c;
    for (int j = 0; j < 3; ++j) {
      G(kQ(i + 1), kP(j + 1)) += c * z.theta(i, j) / b;
      G(kP(i + 1), kQ(j + 1)) -= b * z.theta(i, j) / c;
      for (int m = 0; m < 3; ++m) {
        const double r = levi(i, j, m) * z.alpha(j);
        G(kQ(i + 1), kQ(m + 1)) += r;
        if (opt.rotation_acts_on_momentum) G(kP(i + 1), kP(m + 1)) += r;
        else G(kP(i + 1), kQ(m + 1)) += r;
      }
    }
  }
  return G;
}

Mat8 infinitesimal_transform(const BoostParams& z, const PhysicalConstants& k,
                             const InfinitesimalOptions& opt) {
  return Mat8::Identity() + infinitesimal_generator(z, k, opt);
}

double omega(const Vec3& beta, const Vec3& gamma) {
  return std::sqrt(beta.squaredNorm() + gamma.squaredNorm());
}

double sinhc(double w) {
  if (std::abs(w) < 1e-4) {
    const double w2 = w * w;
    return 1.0 + w2 / 6.0 + w2 * w2 / 120.0;
  }
  return std::sinh(w) / w;
}

double coshc(double w) {
  if (std::abs(w) < 1e-4) {
    const double w2 = w * w;
    return 0.5 + w2 / 24.0 + w2 * w2 / 720.0;
  }
  const double h = std::sinh(0.5 * w) / w;
  return 2.0 * h * h;
}

Mat8 pure_boost(const Vec3& beta, const Vec3& gamma, const PhysicalConstants& k, BoostForm form) {
  k.validate();
  const double c = k.c, b = k.b;
  const double w = omega(beta, gamma);
  const double ch = std::cosh(w), S = sinhc(w), D = coshc(w);
  Mat8 m = Mat8::Zero();
  m(kT, kT) = ch;
  m(kE, kE) = ch;
  for (int i = 0; i < 3; ++i) {
    m(kT, kQ(i + 1)) = S * beta(i) / c;
    m(kT, kP(i + 1)) = S * gamma(i) / b;
    m(kE, kQ(i + 1)) = -S * b * gamma(i);
    m(kE, kP(i + 1)) = S * c * beta(i);
    m(kQ(i + 1), kT) = S * c * beta(i);
    m(kQ(i + 1), kE) = -S * gamma(i) / b;
    m(kP(i + 1), kT) = S * b * gamma(i);
    m(kP(i + 1), kE) = S * beta(i) / c;
    for (int j = 0; j < 3; ++j) {
      const double wij = beta(i) * beta(j) + gamma(i) * gamma(j);
      m(kQ(i + 1), kQ(j + 1)) = (i == j ? 1.0 : 0.0) + D * wij;
      m(kP(i + 1), kP(j + 1)) = (i == j ? 1.0 : 0.0) + D * wij;
      if (form == BoostForm::closed) {
        const double cross = beta(i) * gamma(j) - gamma(i) * beta(j);
        m(kQ(i + 1), kP(j + 1)) = D * (c / b) * cross;
        m(kP(i + 1), kQ(j + 1)) = -D * (b / c) * cross;
      }
    }
  }
  return m;
}

Mat8 velocity_boost(const Vec3& beta, const PhysicalConstants& k) {
  k.validate();
  const double c = k.c;
  const double w = beta.norm();
  const double ch = std::cosh(w), S = sinhc(w), D = coshc(w);
  Mat8 m = Mat8::Identity();
  m(kT, kT) = ch;
  m(kE, kE) = ch;
  for (int i = 0; i < 3; ++i) {
    m(kT, kQ(i + 1)) = S * beta(i) / c;
    m(kQ(i + 1), kT) = S * c * beta(i);
    m(kE, kP(i + 1)) = S * c * beta(i);
    m(kP(i + 1), kE) = S * beta(i) / c;
    for (int j = 0; j < 3; ++j) {
      m(kQ(i + 1), kQ(j + 1)) += D * beta(i) * beta(j);
      m(kP(i + 1), kP(j + 1)) += D * beta(i) * beta(j);
    }
  }
  return m;
}

Mat8 force_boost(const Vec3& gamma, const PhysicalConstants& k, bool printed_sign) {
  k.validate();
  const double b = k.b;
  const double w = gamma.norm();
  const double ch = std::cosh(w), S = sinhc(w), D = coshc(w);
  Mat8 m = Mat8::Identity();
  m(kT, kT) = ch;
  m(kE, kE) = ch;
  for (int i = 0; i < 3; ++i) {
    m(kT, kP(i + 1)) = S * gamma(i) / b;
    m(kP(i + 1), kT) = S * b * gamma(i);
    m(kE, kQ(i + 1)) = (printed_sign ? 1.0 : -1.0) * S * b * gamma(i);
    m(kQ(i + 1), kE) = -S * gamma(i) / b;
    for (int j = 0; j < 3; ++j) {
      m(kP(i + 1), kP(j + 1)) += D * gamma(i) * gamma(j);
      m(kQ(i + 1), kQ(j + 1)) += D * gamma(i) * gamma(j);
    }
  }
  return m;
}

Mat8 born_metric(const PhysicalConstants& k) {
  k.validate();
  Mat8 g = Mat8::Zero();
  g(kT, kT) = -1.0;
  g(kE, kE) = -1.0 / (k.c * k.c * k.b * k.b);
  for (int i = 0; i < 3; ++i) {
    g(kQ(i + 1), kQ(i + 1)) = 1.0 / (k.c * k.c);
    g(kP(i + 1), kP(i + 1)) = 1.0 / (k.b * k.b);
  }
  return g;
}

double born_form(const PhaseVector& v, const PhysicalConstants& k) {
  return v.dot(born_metric(k) * v);
}

double born_defect(const Mat8& m, const PhysicalConstants& k) {
  const Mat8 g = born_metric(k);
  return (m.transpose() * g * m - g).cwiseAbs().maxCoeff();
}

PhaseVector to_natural(const PhaseVector& v, const PhysicalConstants& k) {
  const PlanckScales l = planck_scales(k);
  PhaseVector out = v;
  out(kT) /= l.t;
  out(kE) /= l.e;
  for (int i = 0; i < 3; ++i) {
    out(kQ(i + 1)) /= l.q;
    out(kP(i + 1)) /= l.p;
  }
  return out;
}

}  // namespace quaplectic
