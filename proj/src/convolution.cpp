#include "hombi/convolution.hpp"

namespace hombi {

ConvolutionContext convolution_context(const HomBialgebra& b) {
  return {b.mu, b.eta, b.alpha, b.delta, b.eps, b.alpha};
}

LinMap convolve(const ConvolutionContext& ctx, const LinMap& f, const LinMap& g) {
  return mat_compose(ctx.mu, mat_compose(mat_tensor(f, g), ctx.delta));
}

LinMap convolution_unit(const ConvolutionContext& ctx) { return mat_compose(ctx.eta, ctx.eps); }

LinMap gamma(const ConvolutionContext& ctx, const LinMap& f) {
  return mat_compose(ctx.alpha_a, mat_compose(f, ctx.beta_c));
}

AntipodeResult antipode_solve_full(const HomBialgebra& b) {
  const int d = b.dim;
  const LinMap id = LinMap::identity(d);
  const LinMap target = mat_compose(b.eta, b.eps);
  // stack both convolution identities as one linear system in vec(S)
  LinMap sys(2 * d * d, d * d);
  LinMap probe = LinMap::hom(d, 1, 1);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) {
      probe.at(i, j) = 1;
      const LinMap right = mat_compose(b.mu, mat_compose(mat_tensor(id, probe), b.delta));
      const LinMap left = mat_compose(b.mu, mat_compose(mat_tensor(probe, id), b.delta));
      probe.at(i, j) = 0;
      const int col = j * d + i;
      const auto vr = vectorize(right);
      const auto vl = vectorize(left);
      for (int k = 0; k < d * d; ++k) {
        if (!is_zero(vr[k])) sys.at(k, col) = vr[k];
        if (!is_zero(vl[k])) sys.at(d * d + k, col) = vl[k];
      }
    }
  std::vector<Rational> rhs = vectorize(target);
  const auto t2 = vectorize(target);
  rhs.insert(rhs.end(), t2.begin(), t2.end());
  AntipodeResult res;
  res.solution_space_dim = kernel_basis(sys).dim();
  if (auto sol = solve_linear(sys, rhs)) res.antipode = matrix_from_vec(*sol, d, d);
  return res;
}

std::optional<LinMap> antipode_solve(const HomBialgebra& b) { return antipode_solve_full(b).antipode; }

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

AxiomReport antipode_properties(const HomBialgebra& b, const LinMap& s) {
  AxiomReport rep;
  const LinMap tau = flip_operator(b.dim, 2, 1, 2);
  push_check(rep, "S mu = mu (S x S) tau", mat_compose(s, b.mu),
             mat_compose(b.mu, mat_compose(mat_tensor(s, s), tau)));
  push_check(rep, "Delta S = (S x S) tau Delta", mat_compose(b.delta, s),
             mat_compose(mat_tensor(s, s), mat_compose(tau, b.delta)));
  push_check(rep, "S eta = eta", mat_compose(s, b.eta), b.eta);
  push_check(rep, "eps S = eps", mat_compose(b.eps, s), b.eps);
  push_check(rep, "S alpha = alpha S", mat_compose(s, b.alpha), mat_compose(b.alpha, s));
  if (b.is_commutative() || b.is_cocommutative())
    push_check(rep, "S^2 = id (commutative or cocommutative)", mat_compose(s, s), LinMap::identity(b.dim));
  return rep;
}

}  // namespace hombi
