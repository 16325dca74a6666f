#include "hombi/bialgebra.hpp"

#include <sstream>

namespace hombi {

bool HomBialgebra::is_commutative() const {
  return mat_compose(mu, flip_operator(dim, 2, 1, 2)) == mu;
}

bool HomBialgebra::is_cocommutative() const {
  return mat_compose(flip_operator(dim, 2, 1, 2), delta) == delta;
}

bool AxiomReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string AxiomReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.pass ? "pass" : "FAIL") << "  " << c.name;
    if (!c.pass && !c.witness.empty()) os << "  [" << c.witness << "]";
    os << "\n";
  }
  return os.str();
}

namespace {

// Decodes a B^{otimes n} basis index into its slot indices for witnesses.
std::string tuple_name(int d, int n, long idx) {
  std::vector<int> digits(n);
  for (int s = n - 1; s >= 0; --s) {
    digits[s] = static_cast<int>(idx % d);
    idx /= d;
  }
  std::ostringstream os;
  os << "(";
  for (int s = 0; s < n; ++s) os << (s ? "," : "") << "e" << digits[s] + 1;
  os << ")";
  return os.str();
}

void check_identity(AxiomReport& rep, const std::string& name, int d, int dom_arity, const LinMap& lhs,
                    const LinMap& rhs) {
  AxiomCheck c;
  c.name = name;
  auto diff = lhs.first_difference(rhs);
  c.pass = !diff.has_value();
  if (diff) {
    auto [i, j] = *diff;
    std::ostringstream os;
    os << "at input " << (dom_arity > 0 ? tuple_name(d, dom_arity, j) : std::string("1")) << ", output coordinate e"
       << i + 1 << ": " << to_string(lhs.at(i, j)) << " vs " << to_string(rhs.at(i, j));
    c.witness = os.str();
  }
  rep.checks.push_back(std::move(c));
}

}  // namespace

AxiomReport validate(const HomBialgebra& b) {
  AxiomReport rep;
  const int d = b.dim;
  const LinMap id = LinMap::identity(d);
  const LinMap tau = flip_operator(d, 2, 1, 2);
  const LinMap tau23 = flip_operator(d, 4, 2, 3);

  check_identity(rep, "hom-associativity", d, 3, mat_compose(b.mu, mat_tensor(b.alpha, b.mu)),
                 mat_compose(b.mu, mat_tensor(b.mu, b.alpha)));
  check_identity(rep, "left unit", d, 1, mat_compose(b.mu, mat_tensor(b.eta, id)), b.alpha);
  check_identity(rep, "right unit", d, 1, mat_compose(b.mu, mat_tensor(id, b.eta)), b.alpha);
  check_identity(rep, "alpha preserves unit", d, 0, mat_compose(b.alpha, b.eta), b.eta);
  check_identity(rep, "hom-coassociativity", d, 1, mat_compose(mat_tensor(b.delta, b.alpha), b.delta),
                 mat_compose(mat_tensor(b.alpha, b.delta), b.delta));
  check_identity(rep, "left counit", d, 1, mat_compose(mat_tensor(b.eps, id), b.delta), b.alpha);
  check_identity(rep, "right counit", d, 1, mat_compose(mat_tensor(id, b.eps), b.delta), b.alpha);
  check_identity(rep, "counit twist invariance", d, 1, mat_compose(b.eps, b.alpha), b.eps);
  check_identity(rep, "compatibility Delta.mu", d, 2, mat_compose(b.delta, b.mu),
                 mat_compose(mat_compose(mat_tensor(b.mu, b.mu), tau23), mat_tensor(b.delta, b.delta)));
  check_identity(rep, "counit multiplicative", d, 2, mat_compose(b.eps, b.mu), mat_tensor(b.eps, b.eps));
  check_identity(rep, "alpha multiplicative", d, 2, mat_compose(b.alpha, b.mu),
                 mat_compose(b.mu, mat_tensor(b.alpha, b.alpha)));
  check_identity(rep, "alpha comultiplicative", d, 1, mat_compose(b.delta, b.alpha),
                 mat_compose(mat_tensor(b.alpha, b.alpha), b.delta));
  check_identity(rep, "Delta preserves unit", d, 0, mat_compose(b.delta, b.eta), mat_tensor(b.eta, b.eta));
  check_identity(rep, "counit of unit", d, 0, mat_compose(b.eps, b.eta), LinMap::identity(1));
  return rep;
}

HomBialgebra build_taft(const Rational& lambda) {
  HomBialgebra b;
  b.dim = 4;
  b.basis_labels = {"1", "g", "x", "gx"};
  b.mu = LinMap::hom(4, 1, 2);
  auto set_mu = [&](int i, int j, int k, const Rational& c) { b.mu.at(k, i * 4 + j) = c; };
  // row i times column j of the multiplication table
  set_mu(0, 0, 0, 1);
  set_mu(0, 1, 1, 1);
  set_mu(0, 2, 2, lambda);
  set_mu(0, 3, 3, lambda);
  set_mu(1, 0, 1, 1);
  set_mu(1, 1, 0, 1);
  set_mu(1, 2, 3, lambda);
  set_mu(1, 3, 2, lambda);
  set_mu(2, 0, 2, lambda);
  set_mu(2, 1, 3, -lambda);
  set_mu(3, 0, 3, lambda);
  set_mu(3, 1, 2, -lambda);
  b.delta = LinMap::hom(4, 2, 1);
  auto set_delta = [&](int i, int j, int k, const Rational& c) { b.delta.at(j * 4 + k, i) = c; };
  set_delta(0, 0, 0, 1);
  set_delta(1, 1, 1, 1);
  set_delta(2, 2, 0, lambda);
  set_delta(2, 1, 2, lambda);
  set_delta(3, 3, 1, lambda);
  set_delta(3, 0, 3, lambda);
  b.eta = LinMap::hom(4, 1, 0);
  b.eta.at(0, 0) = 1;
  b.eps = LinMap::hom(4, 0, 1);
  b.eps.at(0, 0) = 1;
  b.eps.at(0, 1) = 1;
  b.alpha = LinMap::identity(4);
  b.alpha.set_signature(4, 1, 1);
  b.alpha.at(2, 2) = lambda;
  b.alpha.at(3, 3) = lambda;
  return b;
}

HomBialgebra build_group_algebra(int n, int k) {
  if (n < 1 || k < 0 || k >= n) throw DimensionError("group algebra requires n >= 1 and 0 <= k < n");
  HomBialgebra b;
  b.dim = n;
  for (int g = 0; g < n; ++g) b.basis_labels.push_back("e" + std::to_string(g));
  b.mu = LinMap::hom(n, 1, 2);
  b.delta = LinMap::hom(n, 2, 1);
  b.alpha = LinMap::hom(n, 1, 1);
  b.eta = LinMap::hom(n, 1, 0);
  b.eps = LinMap::hom(n, 0, 1);
  for (int g = 0; g < n; ++g) {
    const int kg = (k * g) % n;
    b.alpha.at(kg, g) = 1;
    b.delta.at(kg * n + kg, g) = 1;
    b.eps.at(0, g) = 1;
    for (int h = 0; h < n; ++h) b.mu.at((k * (g + h)) % n, g * n + h) = 1;
  }
  b.eta.at(0, 0) = 1;
  return b;
}

HomBialgebra dual(const HomBialgebra& b) {
  HomBialgebra r;
  r.dim = b.dim;
  for (const auto& s : b.basis_labels) r.basis_labels.push_back(s + "*");
  r.mu = b.delta.transposed();
  r.delta = b.mu.transposed();
  r.eta = b.eps.transposed();
  r.eps = b.eta.transposed();
  r.alpha = b.alpha.transposed();
  return r;
}

HomBialgebra opposite(const HomBialgebra& b) {
  HomBialgebra r = b;
  r.mu = mat_compose(b.mu, flip_operator(b.dim, 2, 1, 2));
  return r;
}

HomBialgebra coopposite(const HomBialgebra& b) {
  HomBialgebra r = b;
  r.delta = mat_compose(flip_operator(b.dim, 2, 1, 2), b.delta);
  return r;
}

HomBialgebra tensor_product(const HomBialgebra& b1, const HomBialgebra& b2) {
  const int d1 = b1.dim, d2 = b2.dim;
  HomBialgebra r;
  r.dim = d1 * d2;
  for (const auto& s : b1.basis_labels)
    for (const auto& t : b2.basis_labels) r.basis_labels.push_back(s + "(x)" + t);
  // middle-swap on B1 x B2 x B1 x B2 (to pair the factors for mu1 x mu2)
  const LinMap shuffle_mu = slot_permutation({d1, d2, d1, d2}, {0, 2, 1, 3});
  r.mu = mat_compose(mat_tensor(b1.mu, b2.mu), shuffle_mu);
  // middle-swap on B1 x B1 x B2 x B2 (output of Delta1 x Delta2)
  const LinMap shuffle_delta = slot_permutation({d1, d1, d2, d2}, {0, 2, 1, 3});
  r.delta = mat_compose(shuffle_delta, mat_tensor(b1.delta, b2.delta));
  r.eta = mat_tensor(b1.eta, b2.eta);
  r.eps = mat_tensor(b1.eps, b2.eps);
  r.alpha = mat_tensor(b1.alpha, b2.alpha);
  return r;
}

namespace {
bool morphism_core(const LinMap& f, const HomBialgebra& b, const HomBialgebra& bp, std::string* violated,
                   bool weak_only) {
  if (f.cols() != b.dim || f.rows() != bp.dim) throw DimensionError("morphism shape mismatch " + f.shape_string());
  const LinMap f2 = mat_tensor(f, f);
  auto check = [&](const char* name, const LinMap& lhs, const LinMap& rhs) {
    if (lhs == rhs) return true;
    if (violated) *violated = name;
    return false;
  };
  if (!check("mu' f^2 = f mu", mat_compose(bp.mu, f2), mat_compose(f, b.mu))) return false;
  if (!check("f^2 Delta = Delta' f", mat_compose(f2, b.delta), mat_compose(bp.delta, f))) return false;
  if (weak_only) return true;
  if (!check("f alpha = alpha' f", mat_compose(f, b.alpha), mat_compose(bp.alpha, f))) return false;
  if (!check("f eta = eta'", mat_compose(f, b.eta), bp.eta)) return false;
  if (!check("eps' f = eps", mat_compose(bp.eps, f), b.eps)) return false;
  return true;
}
}  // namespace

bool is_morphism(const LinMap& f, const HomBialgebra& b, const HomBialgebra& bprime) {
  return morphism_core(f, b, bprime, nullptr, false);
}

bool is_weak_morphism(const LinMap& f, const HomBialgebra& b, const HomBialgebra& bprime) {
  return morphism_core(f, b, bprime, nullptr, true);
}

HomBialgebra yau_twist(const HomBialgebra& b, const LinMap& beta) {
  std::string violated;
  if (!morphism_core(beta, b, b, &violated, false))
    throw MorphismError("yau_twist: beta is not a Hom-bialgebra morphism (violated: " + violated + ")");
  HomBialgebra r = b;
  r.mu = mat_compose(beta, b.mu);
  r.eta = mat_compose(beta, b.eta);
  r.delta = mat_compose(b.delta, beta);
  r.eps = mat_compose(b.eps, beta);
  r.alpha = mat_compose(beta, b.alpha);
  return r;
}

}  // namespace hombi
