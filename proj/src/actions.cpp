#include "hombi/actions.hpp"

namespace hombi {

namespace {
void require_power(int n) {
  if (n < 1) throw DimensionError("tensor power must satisfy n >= 1");
}
}  // namespace

ActionMap left_action_power(const HomBialgebra& b, int n) {
  require_power(n);
  const int d = b.dim;
  LinMap m = b.mu;
  for (int k = 2; k <= n; ++k) {
    const LinMap stage = mat_compose(mat_tensor(b.mu, m), flip_operator(d, k + 2, 2, 3));
    m = mat_compose(stage, mat_tensor(b.delta, tensor_pow(LinMap::identity(d), k)));
  }
  return {ActionKind::left_action, n, m};
}

ActionMap right_action_power(const HomBialgebra& b, int n) {
  require_power(n);
  const int d = b.dim;
  LinMap m = b.mu;
  for (int k = 2; k <= n; ++k) {
    const LinMap stage = mat_compose(mat_tensor(m, b.mu), flip_operator(d, k + 2, k, k + 1));
    m = mat_compose(stage, mat_tensor(tensor_pow(LinMap::identity(d), k), b.delta));
  }
  return {ActionKind::right_action, n, m};
}

ActionMap left_coaction_power(const HomBialgebra& b, int n) {
  require_power(n);
  const int d = b.dim;
  LinMap m = b.delta;
  for (int k = 2; k <= n; ++k) {
    const LinMap stage = mat_compose(flip_operator(d, k + 2, 2, 3), mat_tensor(b.delta, m));
    m = mat_compose(mat_tensor(b.mu, tensor_pow(LinMap::identity(d), k)), stage);
  }
  return {ActionKind::left_coaction, n, m};
}

ActionMap right_coaction_power(const HomBialgebra& b, int n) {
  require_power(n);
  const int d = b.dim;
  LinMap m = b.delta;
  for (int k = 2; k <= n; ++k) {
    const LinMap stage = mat_compose(flip_operator(d, k + 2, k, k + 1), mat_tensor(m, b.delta));
    m = mat_compose(mat_tensor(tensor_pow(LinMap::identity(d), k), b.mu), stage);
  }
  return {ActionKind::right_coaction, n, m};
}

namespace {
void push_check(AxiomReport& rep, const std::string& name, const LinMap& lhs, const LinMap& rhs) {
  AxiomCheck c;
  c.name = name;
  auto diff = lhs.first_difference(rhs);
  c.pass = !diff.has_value();
  if (diff) {
    auto [i, j] = *diff;
    c.witness = "entry (" + std::to_string(i) + "," + std::to_string(j) + "): " + to_string(lhs.at(i, j)) + " vs " +
                to_string(rhs.at(i, j));
  }
  rep.checks.push_back(std::move(c));
}
}  // namespace

AxiomReport validate_bimodule(const LinMap& lambda_l, const LinMap& lambda_r, const LinMap& alpha_a,
                              const LinMap& alpha_m, const LinMap& mu, const LinMap& eta) {
  AxiomReport rep;
  const LinMap id_m = LinMap::identity(alpha_m.rows());
  push_check(rep, "left action associativity", mat_compose(lambda_l, mat_tensor(alpha_a, lambda_l)),
             mat_compose(lambda_l, mat_tensor(mu, alpha_m)));
  push_check(rep, "left action unit", mat_compose(lambda_l, mat_tensor(eta, id_m)), alpha_m);
  push_check(rep, "right action associativity", mat_compose(lambda_r, mat_tensor(lambda_r, alpha_a)),
             mat_compose(lambda_r, mat_tensor(alpha_m, mu)));
  push_check(rep, "right action unit", mat_compose(lambda_r, mat_tensor(id_m, eta)), alpha_m);
  push_check(rep, "bimodule compatibility", mat_compose(lambda_r, mat_tensor(lambda_l, alpha_a)),
             mat_compose(lambda_l, mat_tensor(alpha_a, lambda_r)));
  return rep;
}

AxiomReport validate_bicomodule(const LinMap& rho_l, const LinMap& rho_r, const LinMap& beta_c, const LinMap& beta_m,
                                const LinMap& delta, const LinMap& eps) {
  AxiomReport rep;
  const LinMap id_m = LinMap::identity(beta_m.rows());
  push_check(rep, "left coaction coassociativity", mat_compose(mat_tensor(beta_c, rho_l), rho_l),
             mat_compose(mat_tensor(delta, beta_m), rho_l));
  push_check(rep, "left coaction counit", mat_compose(mat_tensor(eps, id_m), rho_l), beta_m);
  push_check(rep, "right coaction coassociativity", mat_compose(mat_tensor(rho_r, beta_c), rho_r),
             mat_compose(mat_tensor(beta_m, delta), rho_r));
  push_check(rep, "right coaction counit", mat_compose(mat_tensor(id_m, eps), rho_r), beta_m);
  push_check(rep, "bicomodule compatibility", mat_compose(mat_tensor(beta_c, rho_r), rho_l),
             mat_compose(mat_tensor(rho_l, beta_c), rho_r));
  return rep;
}

}  // namespace hombi
