#ifndef HOMBI_CONVOLUTION_HPP
#define HOMBI_CONVOLUTION_HPP

#include <optional>

#include "hombi/bialgebra.hpp"

namespace hombi {

/// Convolution algebra Hom(C, A): algebra side (mu, eta, alpha_a), coalgebra
/// side (delta, eps, beta_c). The unit is eta . eps and the twist of the
/// algebra Hom(C, A) is gamma(f) = alpha_a . f . beta_c.
struct ConvolutionContext {
  LinMap mu, eta, alpha_a;
  LinMap delta, eps, beta_c;
};

ConvolutionContext convolution_context(const HomBialgebra& b);

/// f * g = mu . (f x g) . delta.
LinMap convolve(const ConvolutionContext& ctx, const LinMap& f, const LinMap& g);
LinMap convolution_unit(const ConvolutionContext& ctx);  // eta . eps
LinMap gamma(const ConvolutionContext& ctx, const LinMap& f);

struct AntipodeResult {
  std::optional<LinMap> antipode;
  /// Dimension of the solution space of the defining linear system; 0 means
  /// the antipode is unique.
  int solution_space_dim = 0;
  bool unique() const { return antipode.has_value() && solution_space_dim == 0; }
};

/// Solves mu (id x S) delta = mu (S x id) delta = eta eps as a linear system
/// in the d^2 unknowns of S. Absence is a value, not an error.
AntipodeResult antipode_solve_full(const HomBialgebra& b);
std::optional<LinMap> antipode_solve(const HomBialgebra& b);

/// Antipode identities: anti-morphism of the multiplication and of the
/// comultiplication, unit and counit preservation, commutation with alpha,
/// and S^2 = id when b is commutative or cocommutative.
AxiomReport antipode_properties(const HomBialgebra& b, const LinMap& s);

}  // namespace hombi

#endif
