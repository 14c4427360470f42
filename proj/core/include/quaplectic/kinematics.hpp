#pragma once

#include <array>

#include <Eigen/Dense>

namespace quaplectic {

struct PhysicalConstants {
  double c = 1.0;
  double b = 1.0;
  double hbar = 1.0;
  double alpha_G = 1.0;

  void validate() const;
  double gravitational_constant() const { return alpha_G * c * c * c * c / b; }
};

struct PlanckScales {
  double t, q, p, e;
};

PlanckScales planck_scales(const PhysicalConstants& k);

using Vec3 = Eigen::Vector3d;
// slot order: T, E, Q1, Q2, Q3, P1, P2, P3
using Mat8 = Eigen::Matrix<double, 8, 8>;
using PhaseVector = Eigen::Matrix<double, 8, 1>;

constexpr int kT = 0;
constexpr int kE = 1;
inline constexpr int kQ(int i) { return 1 + i; }
inline constexpr int kP(int i) { return 4 + i; }

struct BoostParams {
  Vec3 beta = Vec3::Zero();
  Vec3 gamma = Vec3::Zero();
  Vec3 alpha = Vec3::Zero();
  Eigen::Matrix3d theta = Eigen::Matrix3d::Zero();
  double vartheta = 0.0;
};

struct InfinitesimalOptions {
  // the energy row as printed carries c*gamma on Q and b*beta on P; the
  // dimensionally consistent row uses b*gamma and c*beta
  bool dimensional_energy_row = false;
  // rotation term of the momentum row acts on P instead of Q
  bool rotation_acts_on_momentum = false;
};

// generator matrix G: row r expresses [Z, slot r] in the old slots
Mat8 infinitesimal_generator(const BoostParams& z, const PhysicalConstants& k,
                             const InfinitesimalOptions& opt = {});
// identity + G
Mat8 infinitesimal_transform(const BoostParams& z, const PhysicalConstants& k,
                             const InfinitesimalOptions& opt = {});

enum class BoostForm { closed, printed };

double omega(const Vec3& beta, const Vec3& gamma);
// sinh(w)/w and (cosh(w)-1)/w^2 with series near zero
double sinhc(double w);
double coshc(double w);

// closed form equal to exp of the dimensional generator; `printed` omits the
// Q/P cross terms present for non-parallel beta, gamma
Mat8 pure_boost(const Vec3& beta, const Vec3& gamma, const PhysicalConstants& k,
                BoostForm form = BoostForm::closed);
Mat8 velocity_boost(const Vec3& beta, const PhysicalConstants& k);
// energy row uses -b gamma Q; a `printed_sign` flag keeps the +b gamma Q entry
Mat8 force_boost(const Vec3& gamma, const PhysicalConstants& k, bool printed_sign = false);

// -t^2 + q^2/c^2 + (p^2 - e^2/c^2)/b^2
double born_form(const PhaseVector& v, const PhysicalConstants& k);
// diag metric of the Born form in slot order
Mat8 born_metric(const PhysicalConstants& k);
// max |M^T g M - g|
double born_defect(const Mat8& m, const PhysicalConstants& k);

// components rescaled by Planck scales: t/l_t, e/l_e, q/l_q, p/l_p
PhaseVector to_natural(const PhaseVector& v, const PhysicalConstants& k);

}  // namespace quaplectic
