#ifndef HOMBI_ACTIONS_HPP
#define HOMBI_ACTIONS_HPP

#include "hombi/bialgebra.hpp"

namespace hombi {

enum class ActionKind { left_action, right_action, left_coaction, right_coaction };

/// One of the interior (bi)(co)module structure maps on B^{otimes n}:
///   left_action   lambda_l^n : B x B^n -> B^n
///   right_action  lambda_r^n : B^n x B -> B^n
///   left_coaction rho_l^n    : B^n -> B x B^n
///   right_coaction rho_r^n   : B^n -> B^n x B
struct ActionMap {
  ActionKind kind;
  int n = 1;
  LinMap map;
};

/// lambda_l^1 = mu; lambda_l^n = (lambda_l x lambda_l^{n-1}) . tau_{2,3} . (Delta x id^n).
ActionMap left_action_power(const HomBialgebra& b, int n);
/// lambda_r^1 = mu; lambda_r^n = (lambda_r^{n-1} x lambda_r) . tau_{n,n+1} . (id^n x Delta).
ActionMap right_action_power(const HomBialgebra& b, int n);
/// rho_l^1 = Delta; rho_l^n = (mu x id^n) . tau_{2,3} . (rho_l x rho_l^{n-1}).
ActionMap left_coaction_power(const HomBialgebra& b, int n);
/// rho_r^1 = Delta; rho_r^n = (id^n x mu) . tau_{n,n+1} . (rho_r^{n-1} x rho_r).
ActionMap right_coaction_power(const HomBialgebra& b, int n);

/// Bimodule axioms for (M, lambda_l, lambda_r) over (A, mu, eta, alpha_a):
/// associativity of each action, unit normalization, and the left/right
/// compatibility. alpha_m is the module twist.
AxiomReport validate_bimodule(const LinMap& lambda_l, const LinMap& lambda_r, const LinMap& alpha_a,
                              const LinMap& alpha_m, const LinMap& mu, const LinMap& eta);

/// Bicomodule axioms for (M, rho_l, rho_r) over (C, delta, eps, beta_c).
AxiomReport validate_bicomodule(const LinMap& rho_l, const LinMap& rho_r, const LinMap& beta_c,
                                const LinMap& beta_m, const LinMap& delta, const LinMap& eps);

}  // namespace hombi

#endif
