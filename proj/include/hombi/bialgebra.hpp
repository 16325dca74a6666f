#ifndef HOMBI_BIALGEBRA_HPP
#define HOMBI_BIALGEBRA_HPP

#include <string>
#include <vector>

#include "hombi/linmap.hpp"

namespace hombi {

/// Structure constants of a finite-dimensional Hom-bialgebra (B, mu, eta,
/// Delta, eps, alpha) with a single twisting map. mu is d x d^2, Delta is
/// d^2 x d, eta is d x 1, eps is 1 x d, alpha is d x d; basis ordering of
/// B x B is lexicographic, left factor most significant.
struct HomBialgebra {
  int dim = 0;
  std::vector<std::string> basis_labels;
  LinMap mu;     // multiplication  B x B -> B
  LinMap delta;  // comultiplication B -> B x B
  LinMap eta;    // unit  k -> B
  LinMap eps;    // counit B -> k
  LinMap alpha;  // twisting map B -> B

  bool is_commutative() const;
  bool is_cocommutative() const;
};

struct AxiomCheck {
  std::string name;
  bool pass = false;
  std::string witness;  // empty when pass
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_pass() const;
  std::string summary() const;
};

/// Exact check of every defining identity: Hom-associativity, unitality,
/// Hom-coassociativity, counitality, the bialgebra compatibility (Delta and
/// eps multiplicative), the multiplicativity of alpha on both structures,
/// and preservation of the unit by alpha and Delta. Failures report the
/// first basis tuple where the two sides differ, together with both values.
AxiomReport validate(const HomBialgebra& b);

/// Twisted Taft-Sweedler bialgebra (T2)_lambda on basis {1, g, x, gx}.
HomBialgebra build_taft(const Rational& lambda);

/// Hom group bialgebra of Z/n twisted by the endomorphism g -> k*g mod n.
HomBialgebra build_group_algebra(int n, int k);

/// Dual Hom-bialgebra under the dual basis: transposes of all structure maps.
HomBialgebra dual(const HomBialgebra& b);

HomBialgebra opposite(const HomBialgebra& b);    // mu^op = mu . tau
HomBialgebra coopposite(const HomBialgebra& b);  // Delta^cop = tau . Delta

/// Tensor product bialgebra with mu~ = (mu1 x mu2) . tau_{2,3} and
/// Delta~ = tau_{2,3} . (Delta1 x Delta2).
HomBialgebra tensor_product(const HomBialgebra& b1, const HomBialgebra& b2);

/// Full Hom-bialgebra morphism check: mu' f^2 = f mu, f^2 Delta = Delta' f,
/// f alpha = alpha' f, f eta = eta', eps' f = eps.
bool is_morphism(const LinMap& f, const HomBialgebra& b, const HomBialgebra& bprime);
/// Weak version: only the multiplicative and comultiplicative identities.
bool is_weak_morphism(const LinMap& f, const HomBialgebra& b, const HomBialgebra& bprime);

struct MorphismError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Yau twist (B, beta mu, beta eta, Delta beta, eps beta, beta alpha).
/// Throws MorphismError naming the violated condition when beta is not a
/// Hom-bialgebra morphism of b.
HomBialgebra yau_twist(const HomBialgebra& b, const LinMap& beta);

}  // namespace hombi

#endif
