#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "quaplectic/kinematics.hpp"

using namespace quaplectic;

namespace kinematics_tests {

static double max_abs(const Mat8& m) { return m.cwiseAbs().maxCoeff(); }

static Vec3 random_vec(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vec3 v(u(rng), u(rng), u(rng));
  return scale * v;
}

TEST_CASE("planck_scales_natural_units") {
  auto l = planck_scales({});
  CHECK(l.t == 1.0);
  CHECK(l.q == 1.0);
  CHECK(l.p == 1.0);
  CHECK(l.e == 1.0);
}

TEST_CASE("planck_scales_substitution") {
  PhysicalConstants k;
  k.c = 2.0;
  auto l = planck_scales(k);
  CHECK(l.t == doctest::Approx(std::sqrt(0.5)));
  CHECK(l.q == doctest::Approx(std::sqrt(2.0)));
  CHECK(l.p == doctest::Approx(std::sqrt(0.5)));
  CHECK(l.e == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("planck_scale_identities") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  for (int trial = 0; trial < 50; ++trial) {
    PhysicalConstants k{u(rng), u(rng), u(rng), u(rng)};
    auto l = planck_scales(k);
    CHECK(std::abs(l.q * l.p - k.hbar) < 1e-12 * k.hbar);
    CHECK(std::abs(l.t * l.e - k.hbar) < 1e-12 * k.hbar);
    CHECK(l.q / l.t == doctest::Approx(k.c));
    CHECK(l.p / l.t == doctest::Approx(k.b));
  }
  PhysicalConstants bad;
  bad.b = 0.0;
  CHECK_THROWS(planck_scales(bad));
  CHECK_THROWS(pure_boost(Vec3::Zero(), Vec3::Zero(), bad));
}

TEST_CASE("gravitational_constant") {
  PhysicalConstants k{2.0, 4.0, 1.0, 0.5};
  CHECK(k.gravitational_constant() == doctest::Approx(0.5 * 16.0 / 4.0));
}

TEST_CASE("infinitesimal_zero_is_identity") {
  CHECK(max_abs(infinitesimal_transform({}, {}) - Mat8::Identity()) == 0.0);
}

TEST_CASE("infinitesimal_velocity_energy_row") {
  PhysicalConstants k{3.0, 2.0, 1.0, 1.0};
  BoostParams z;
  z.beta = Vec3(0.1, 0, 0);
  auto m = infinitesimal_transform(z, k);
  CHECK(m(kE, kE) == 1.0);
  CHECK(m(kE, kP(1)) == doctest::Approx(2.0 * 0.1));
  CHECK(m(kE, kQ(1)) == 0.0);
  InfinitesimalOptions dim;
  dim.dimensional_energy_row = true;
  CHECK(infinitesimal_transform(z, k, dim)(kE, kP(1)) == doctest::Approx(3.0 * 0.1));
}

TEST_CASE("infinitesimal_matches_boost_derivative") {
  std::mt19937_64 rng(2);
  InfinitesimalOptions dim;
  dim.dimensional_energy_row = true;
  for (int trial = 0; trial < 10; ++trial) {
    PhysicalConstants k{0.5 + trial * 0.3, 2.0 - trial * 0.1, 1.0, 1.0};
    BoostParams z;
    z.beta = random_vec(rng, 1.0);
    z.gamma = random_vec(rng, 1.0);
    const double h = 1e-5;
    Mat8 fd = (pure_boost(h * z.beta, h * z.gamma, k) - pure_boost(-h * z.beta, -h * z.gamma, k)) / (2 * h);
    CHECK(max_abs(fd - infinitesimal_generator(z, k, dim)) < 1e-8);
  }
}

TEST_CASE("generator_matches_independent_oracle") {
  PhysicalConstants k{1.7, 0.6, 1.0, 1.0};
  BoostParams z;
  z.beta = Vec3(0.2, -0.4, 0.9);
  z.gamma = Vec3(-0.3, 0.5, 0.1);
  InfinitesimalOptions dim;
  dim.dimensional_energy_row = true;
  CHECK(max_abs(infinitesimal_generator(z, k, dim) - oracle::boost_generator(z.beta, z.gamma, k.c, k.b)) == 0.0);
}

TEST_CASE("pure_boost_zero_is_identity") {
  CHECK(max_abs(pure_boost(Vec3::Zero(), Vec3::Zero(), {}) - Mat8::Identity()) == 0.0);
}

TEST_CASE("pure_boost_limits") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    PhysicalConstants k{0.3 + trial * 0.2, 1.5, 1.0, 1.0};
    Vec3 beta = random_vec(rng, 1.5), gamma = random_vec(rng, 1.5);
    CHECK(max_abs(pure_boost(beta, Vec3::Zero(), k) - velocity_boost(beta, k)) < 1e-14);
    CHECK(max_abs(pure_boost(Vec3::Zero(), gamma, k) - force_boost(gamma, k)) < 1e-14);
  }
}

TEST_CASE("force_boost_printed_sign_is_not_born_invariant") {
  PhysicalConstants k;
  Vec3 gamma(0.4, 0.1, -0.2);
  CHECK(born_defect(force_boost(gamma, k), k) < 1e-12);
  CHECK(born_defect(force_boost(gamma, k, true), k) > 1e-3);
}

TEST_CASE("pure_boost_equals_exponential") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.2, 3.0);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    PhysicalConstants k{u(rng), u(rng), 1.0, 1.0};
    Vec3 beta = random_vec(rng, 1.0), gamma = random_vec(rng, 1.0);
    const double target = 3.0 * (trial + 1) / 50.0;
    const double w = omega(beta, gamma);
    beta *= target / w;
    gamma *= target / w;
    Mat8 e = oracle::expm(oracle::boost_generator(beta, gamma, k.c, k.b));
    worst = std::max(worst, max_abs(pure_boost(beta, gamma, k) - e));
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("printed_pure_boost_misses_cross_terms") {
  PhysicalConstants k;
  Vec3 beta(0.5, 0, 0), gamma(0, 0.7, 0);
  Mat8 e = oracle::expm(oracle::boost_generator(beta, gamma, k.c, k.b));
  CHECK(max_abs(pure_boost(beta, gamma, k, BoostForm::printed) - e) > 1e-3);
  // parallel rapidities have no cross term
  Vec3 g2 = 0.3 * beta;
  CHECK(max_abs(pure_boost(beta, g2, k, BoostForm::printed) - pure_boost(beta, g2, k)) == 0.0);
}

TEST_CASE("small_omega_series") {
  for (double w : {0.0, 1e-9, 5e-5, 2e-4}) {
    CHECK(sinhc(w) == doctest::Approx(w == 0 ? 1.0 : std::sinh(w) / w).epsilon(1e-15));
    if (w > 1e-4) CHECK(coshc(w) == doctest::Approx((std::cosh(w) - 1) / (w * w)).epsilon(1e-8));
  }
  CHECK(coshc(0.0) == 0.5);
  for (double w : {9.99e-5, 1.001e-4, 3e-4})
    CHECK(std::abs(coshc(w) - (0.5 + w * w / 24.0 + w * w * w * w / 720.0)) < 1e-15);
}

TEST_CASE("born_form_examples") {
  PhaseVector v = PhaseVector::Zero();
  CHECK(born_form(v, {}) == 0.0);
  v(kT) = 1.0;
  v(kQ(1)) = 1.0;
  CHECK(born_form(v, {}) == 0.0);
}

TEST_CASE("born_form_invariance_sweep") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.2, 3.0), uv(-1.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    PhysicalConstants k{u(rng), u(rng), 1.0, 1.0};
    Vec3 beta = random_vec(rng, 1.0), gamma = random_vec(rng, 1.0);
    const double s = 3.0 * std::abs(uv(rng)) / omega(beta, gamma);
    Mat8 m = pure_boost(s * beta, s * gamma, k);
    PhaseVector v;
    for (int i = 0; i < 8; ++i) v(i) = uv(rng);
    worst = std::max(worst, std::abs(born_form(m * v, k) - born_form(v, k)));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("unit_scaling_covariance") {
  PhysicalConstants k{2.5, 0.4, 3.0, 1.0};
  PhysicalConstants nat;
  Vec3 beta(0.3, -0.2, 0.5), gamma(0.1, 0.4, -0.6);
  const auto l = planck_scales(k);
  Eigen::Matrix<double, 8, 1> scale;
  scale << l.t, l.e, l.q, l.q, l.q, l.p, l.p, l.p;
  // natural generators are T / l_t, E / l_e, Q / l_q, P / l_p
  Mat8 m = scale.cwiseInverse().asDiagonal() * pure_boost(beta, gamma, k) * scale.asDiagonal();
  CHECK(max_abs(m - pure_boost(beta, gamma, nat)) < 1e-13);
}

TEST_CASE("rotation_row_flag") {
  BoostParams z;
  z.alpha = Vec3(0, 0, 0.2);
  auto printed = infinitesimal_generator(z, {});
  InfinitesimalOptions opt;
  opt.rotation_acts_on_momentum = true;
  auto sym = infinitesimal_generator(z, {}, opt);
  CHECK(printed(kP(1), kQ(2)) != 0.0);
  CHECK(printed(kP(1), kP(2)) == 0.0);
  CHECK(sym(kP(1), kP(2)) == printed(kQ(1), kQ(2)));
  CHECK(sym(kP(1), kQ(2)) == 0.0);
}

}  // namespace kinematics_tests
