#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quaplectic/field_eq.hpp"
#include "quaplectic/gelfand.hpp"
#include "quaplectic/lie_core.hpp"

namespace quaplectic {

// Z, L, M count 2, ladders and X, Y count 1, I counts 0
int generator_degree(const GeneratorId& g);

// [r(x), r(y)] against i k r([x, y]) on a Fock truncation with trivial sigma;
// k = c/s when either argument lies in u(1,n), 1 otherwise
double represented_bracket_defect(int n, int nmax, const RepresentationParams& params, Basis basis);

struct InvarianceReport {
  double full = 0.0;
  double ladder_only = 0.0;
  double central_only = 0.0;
};

// max over a, b, c of |[W_ab, A+-_c]| on the interior
InvarianceReport translation_invariance(const FieldRepresentation& rep);

// max over complex-basis generators X of |[C_{2 beta}, X]| on the interior
double centrality_defect(int beta, const FieldRepresentation& rep);

// max |O - diag(2k + n - 1)| over the whole truncation
double oscillator_defect(int n, int nmax);

// max entrywise |ladder - Hermite oracle| over every mode and sign
double oracle_equivalence_defect(int n, int nmax);

// Z commutation relations with delta (compact) or eta metric on the given columns
double gt_relation_defect(const SigmaOperators& ops, const std::vector<int>& cols);

struct GroupLawReport {
  double heisenberg = 0.0;
  double automorphism = 0.0;
  double quaplectic = 0.0;
  double membership = 0.0;
};

GroupLawReport group_law_defects(int n, int samples, std::uint64_t seed);

struct KinematicsReport {
  double velocity_limit = 0.0;
  double force_limit = 0.0;
  double exponential = 0.0;
  double born = 0.0;
};

KinematicsReport kinematics_defects(int samples, std::uint64_t seed);

struct CompactReport {
  double hermiticity = 0.0;
  double commutation = 0.0;
  double residual = 0.0;
  std::vector<Cluster> clusters;
};

CompactReport compact_field_check(const GTBasis& sigma, int k, int beta);

struct WeylReport {
  double commutator = 0.0;
  double composition = 0.0;
};

// single mode; commutator phase e^{i c w_x zeta w_y} and composition phase law
WeylReport weyl_defects(int nmax, double c, int samples, std::uint64_t seed);

struct VerifyConfig {
  int n = 1;
  int nmax = 8;
  int window = 6;
  double s = 1.0;
  double c = 1.0;
  double tol = 1e-10;
  std::uint64_t seed = 0;
};

struct CheckResult {
  std::string module;
  std::string name;
  double deviation = 0.0;
  double tol = 0.0;
  bool pass = false;
  // reported but not counted towards the exit status
  bool informational = false;
};

// every invariant name run_invariants reports, in order
std::vector<std::string> invariant_manifest();
std::vector<CheckResult> run_invariants(const VerifyConfig& config);

}  // namespace quaplectic
