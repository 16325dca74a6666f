#ifndef HOMBI_COHOMOLOGY_HPP
#define HOMBI_COHOMOLOGY_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "hombi/actions.hpp"
#include "hombi/bialgebra.hpp"

namespace hombi {

/// Bigraded cochain: a linear map B^{otimes q} -> B^{otimes p} that commutes
/// with the twist, f . alpha^{x q} = alpha^{x p} . f.
struct Cochain {
  int p = 1, q = 1;
  LinMap map;
};

/// Element of the total complex C-hat^n = sum_{p+q=n+1} C^{p,q}, components
/// ordered by increasing q (so C-hat^2 = [C^{2,1}, C^{1,2}]).
struct CochainVector {
  int n = 1;
  std::vector<Cochain> components;

  bool is_zero() const;
};

struct CohomologyReport {
  int n = 0;
  int dim_ambient = 0;  // alpha-commuting C-hat^n
  int dim_Z = 0;
  int dim_B = 0;
  int dim_H = 0;
  std::vector<CochainVector> cocycle_basis;
  std::vector<CochainVector> coboundary_basis;
  std::vector<CochainVector> representatives;
};

/// The double complex of a Hom-bialgebra: horizontal (Hochschild-type)
/// coboundary delta_H, vertical (Cartier-type) coboundary delta_C, their
/// face-operator decompositions, and the total complex with the sign
/// delta_H + (-1)^q delta_C. All per-bidegree data (commutant bases, action
/// powers, operator matrices) is computed on demand and cached.
class GsComplex {
 public:
  explicit GsComplex(HomBialgebra b);

  const HomBialgebra& bialgebra() const { return b_; }
  int dim() const { return b_.dim; }

  /// Basis of C^{p,q}: kernel of F |-> F alpha^{x q} - alpha^{x p} F inside
  /// the full d^{p+q}-dimensional space of matrices, via kernel_basis on the
  /// vectorized commutation operator.
  const SubspaceBasis& cochain_basis(int p, int q) const;

  bool is_alpha_commuting(int p, int q, const LinMap& f) const;

  /// delta_H^{p,q}(f) = lambda_l^p (alpha^{q-1} x f)
  ///   + sum_{i=1..q} (-1)^i f (alpha^{x(i-1)} x mu x alpha^{x(q-i)})
  ///   + (-1)^{q+1} lambda_r^p (f x alpha^{q-1}),
  /// where alpha^{q-1} is a composition power on a single slot.
  LinMap delta_h_apply(int p, int q, const LinMap& f) const;
  /// delta_C^{p,q}(f) = (alpha^{p-1} x f) rho_l^q
  ///   + sum_{j=1..p} (-1)^j (alpha^{x(j-1)} x Delta x alpha^{x(p-j)}) f
  ///   + (-1)^{p+1} (f x alpha^{p-1}) rho_r^q.
  LinMap delta_c_apply(int p, int q, const LinMap& f) const;

  /// Horizontal face operator D_i^{p,q}, 0 <= i <= q-1. For q = 1 the single
  /// face carries both end corrections so that delta_H = sum (-1)^{i+1} D_i.
  LinMap face_d_apply(int i, int p, int q, const LinMap& f) const;
  /// Vertical face operator S_i^{p,q}, 0 <= i <= p-1.
  LinMap face_s_apply(int i, int p, int q, const LinMap& f) const;

  /// Operators on column-major vectorized cochains (full Hom space).
  LinMap delta_h_operator(int p, int q) const;
  LinMap delta_c_operator(int p, int q) const;
  LinMap face_d_operator(int i, int p, int q) const;
  LinMap face_s_operator(int i, int p, int q) const;

  /// The same operators expressed in cochain_basis coordinates; verifies that
  /// every basis image is still alpha-commuting.
  LinMap delta_h_restricted(int p, int q) const;
  LinMap delta_c_restricted(int p, int q) const;

  /// Bidegrees (p, q) of C-hat^n, ordered by increasing q.
  std::vector<std::pair<int, int>> bidegrees(int n) const;

  /// Total coboundary C-hat^n -> C-hat^{n+1} in cochain_basis coordinates,
  /// assembling delta_H and (-1)^q delta_C blockwise.
  const LinMap& total_delta(int n) const;

  /// Coordinates of v in the commutant bases; throws std::runtime_error when
  /// a component is not alpha-commuting.
  std::vector<Rational> coordinates(const CochainVector& v) const;
  CochainVector from_coordinates(int n, const std::vector<Rational>& coords) const;

  CochainVector apply_total(const CochainVector& v) const;

  CohomologyReport cohomology(int n) const;
  bool is_cocycle(const CochainVector& v) const;
  /// Solves total_delta(n-1) h = v; returns the witness h or nullopt.
  std::optional<CochainVector> coboundary_witness(const CochainVector& v) const;

  const LinMap& left_action(int p) const;
  const LinMap& right_action(int p) const;
  const LinMap& left_coaction(int q) const;
  const LinMap& right_coaction(int q) const;

 private:
  LinMap assemble_operator(int p, int q, bool horizontal) const;
  LinMap restricted_block(int p, int q, bool horizontal) const;
  std::vector<Rational> component_coords(int p, int q, const LinMap& f) const;

  HomBialgebra b_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, SubspaceBasis> bases_;
  mutable std::map<int, LinMap> lam_l_, lam_r_, rho_l_, rho_r_;
  mutable std::map<std::pair<int, int>, LinMap> op_h_, op_c_;
  mutable std::map<int, LinMap> total_;
};

// Convenience wrappers matching the one-shot operations; each builds a
// fresh complex, so prefer GsComplex for repeated queries.
SubspaceBasis cochain_space_basis(const HomBialgebra& b, int p, int q);
LinMap delta_h(const HomBialgebra& b, int p, int q);
LinMap delta_c(const HomBialgebra& b, int p, int q);
LinMap face_d(const HomBialgebra& b, int i, int p, int q);
LinMap face_s(const HomBialgebra& b, int i, int p, int q);
LinMap total_delta(const HomBialgebra& b, int n);
CohomologyReport cohomology(const HomBialgebra& b, int n);
bool is_cocycle(const HomBialgebra& b, const CochainVector& v);
std::optional<CochainVector> coboundary_witness(const HomBialgebra& b, const CochainVector& v);

}  // namespace hombi

#endif
