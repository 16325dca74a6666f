#ifndef HOMBI_DEFORMATION_HPP
#define HOMBI_DEFORMATION_HPP

#include <optional>
#include <utility>
#include <vector>

#include "hombi/cohomology.hpp"

namespace hombi {

/// One-parameter deformation (mu_t, Delta_t) truncated modulo t^{N+1}.
/// mu_terms[0] and delta_terms[0] are the undeformed structure maps; the
/// twist, unit and counit are not deformed. Every term commutes with alpha.
struct TruncatedDeformation {
  HomBialgebra base;
  int order = 0;                  // N
  std::vector<LinMap> mu_terms;    // mu_0 .. mu_N,    each d x d^2
  std::vector<LinMap> delta_terms; // Delta_0 .. Delta_N, each d^2 x d
};

/// Validates shapes, the order-0 terms and alpha-commutation of every term.
TruncatedDeformation make_deformation(HomBialgebra base, std::vector<LinMap> mu_tail,
                                      std::vector<LinMap> delta_tail);

/// Formal automorphism Phi_t = id + Phi_1 t + ... + Phi_N t^N, each term
/// commuting with alpha.
struct GaugeTransform {
  int order = 0;
  std::vector<LinMap> terms;  // terms[0] = id
};

GaugeTransform make_gauge(const HomBialgebra& base, std::vector<LinMap> tail);
GaugeTransform identity_gauge(const HomBialgebra& base, int order);

/// Coefficient-of-t^s residuals of the deformation equation: formal
/// Hom-associativity, Hom-coassociativity and compatibility. The general
/// system allows deformed twists alpha_k; here alpha_0 = alpha and
/// alpha_{k>=1} = 0 are hard-wired.
struct OrderResiduals {
  int order = 0;
  LinMap assoc;    // d x d^3
  LinMap coassoc;  // d^3 x d
  LinMap compat;   // d^2 x d^2
  bool ok() const { return assoc.is_zero() && coassoc.is_zero() && compat.is_zero(); }
};

struct ResidualReport {
  std::vector<OrderResiduals> per_order;  // orders 0 .. N
  bool ok_through(int k) const;
  bool all_ok() const { return ok_through(static_cast<int>(per_order.size()) - 1); }
};

/// mu_i o_alpha mu_j = mu_i (alpha x mu_j) - mu_i (mu_j x alpha).
LinMap alpha_associator(const LinMap& mu_i, const LinMap& mu_j, const LinMap& alpha);
/// Delta_i o_alpha Delta_j = (Delta_j x alpha) Delta_i - (alpha x Delta_j) Delta_i.
LinMap alpha_coassociator(const LinMap& delta_i, const LinMap& delta_j, const LinMap& alpha);

ResidualReport residuals(const TruncatedDeformation& def);

struct Obstruction {
  int order = 0;
  /// Element of C-hat^3 in the total-complex sign convention; the
  /// deformation extends to this order iff it is a coboundary.
  CochainVector cochain;
  /// Witness (Delta_s, mu_s) in C-hat^2 coordinates when it exists;
  /// appending it makes the order-s residuals vanish.
  std::optional<CochainVector> witness;
};

/// Packages the order-s terms quadratic in lower-order data. Requires the
/// deformation to be valid to order s-1 (throws otherwise).
Obstruction obstruction(const GsComplex& gs, const TruncatedDeformation& def, int s);
Obstruction obstruction(const TruncatedDeformation& def, int s);

/// Extends def by one order using an obstruction witness.
TruncatedDeformation extend_with_witness(const TruncatedDeformation& def, const Obstruction& obs);

/// New deformation mu' = Phi mu (Phi^{-1} x Phi^{-1}), Delta' = (Phi x Phi)
/// Delta Phi^{-1}, computed order by order through the formal inverse.
TruncatedDeformation apply_gauge(const TruncatedDeformation& def, const GaugeTransform& phi);

/// Gauge composition psi . phi as formal series, truncated at phi's order.
GaugeTransform compose_gauges(const HomBialgebra& base, const GaugeTransform& psi, const GaugeTransform& phi);

struct UnitCounitStatus {
  int order = 0;
  bool unit_left = false, unit_right = false, counit_left = false, counit_right = false;
  bool ok() const { return unit_left && unit_right && counit_left && counit_right; }
};

/// Exact evaluation of mu_s(x x 1) = mu_s(1 x x) = 0 and
/// (eps x id) Delta_s = (id x eps) Delta_s = 0 for s = 1..N.
std::vector<UnitCounitStatus> check_unit_counit(const TruncatedDeformation& def);

/// Gauge normalization making the deformation unital and counital; requires
/// alpha surjective. The stage-s gauge is w.eps - eta.chi with
/// w = mu_s(1 x 1) - eps(mu_s(1 x 1)) 1_B and chi = (eps x eps) Delta_s;
/// the returned gauge is the ordered product of the stage gauges. Exact
/// normalization at order s needs the order-s residuals to vanish at the
/// unit slots, which holds for deformations valid to order s.
std::pair<TruncatedDeformation, GaugeTransform> normalize_unit(const TruncatedDeformation& def);

/// Term-wise Yau twist: the deformation (beta mu_t, Delta_t beta) of
/// yau_twist(base, beta). beta must be a morphism of the base and of every
/// deformed order (checked; the error names the failing order).
TruncatedDeformation twist_deformation(const TruncatedDeformation& def, const LinMap& beta);

/// The order-2 cochain vector (Delta_1 in C^{2,1}, mu_1 in C^{1,2}).
CochainVector infinitesimal_cochain(const TruncatedDeformation& def);

}  // namespace hombi

#endif
