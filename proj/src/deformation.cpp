#include "hombi/deformation.hpp"

#include <stdexcept>

namespace hombi {

namespace {

void require_commuting(const HomBialgebra& b, const LinMap& m, int p, int q, const char* what, int order) {
  if (mat_compose(m, tensor_pow(b.alpha, q)) != mat_compose(tensor_pow(b.alpha, p), m))
    throw std::runtime_error(std::string(what) + " term at order " + std::to_string(order) +
                             " does not commute with alpha");
}

}  // namespace

TruncatedDeformation make_deformation(HomBialgebra base, std::vector<LinMap> mu_tail,
                                      std::vector<LinMap> delta_tail) {
  if (mu_tail.size() != delta_tail.size())
    throw DimensionError("deformation needs matching mu and Delta term counts");
  TruncatedDeformation def;
  def.order = static_cast<int>(mu_tail.size());
  def.mu_terms.push_back(base.mu);
  def.delta_terms.push_back(base.delta);
  for (int s = 1; s <= def.order; ++s) {
    LinMap& m = mu_tail[s - 1];
    LinMap& dl = delta_tail[s - 1];
    if (m.rows() != base.dim || m.cols() != base.dim * base.dim)
      throw DimensionError("mu term at order " + std::to_string(s) + " has shape " + m.shape_string());
    if (dl.rows() != base.dim * base.dim || dl.cols() != base.dim)
      throw DimensionError("Delta term at order " + std::to_string(s) + " has shape " + dl.shape_string());
    require_commuting(base, m, 1, 2, "mu", s);
    require_commuting(base, dl, 2, 1, "Delta", s);
    def.mu_terms.push_back(std::move(m));
    def.delta_terms.push_back(std::move(dl));
  }
  def.base = std::move(base);
  return def;
}

GaugeTransform make_gauge(const HomBialgebra& base, std::vector<LinMap> tail) {
  GaugeTransform g;
  g.order = static_cast<int>(tail.size());
  g.terms.push_back(LinMap::identity(base.dim));
  for (int s = 1; s <= g.order; ++s) {
    LinMap& t = tail[s - 1];
    if (t.rows() != base.dim || t.cols() != base.dim)
      throw DimensionError("gauge term at order " + std::to_string(s) + " has shape " + t.shape_string());
    require_commuting(base, t, 1, 1, "gauge", s);
    g.terms.push_back(std::move(t));
  }
  return g;
}

GaugeTransform identity_gauge(const HomBialgebra& base, int order) {
  return make_gauge(base, std::vector<LinMap>(order, LinMap::hom(base.dim, 1, 1)));
}

LinMap alpha_associator(const LinMap& mu_i, const LinMap& mu_j, const LinMap& alpha) {
  return mat_compose(mu_i, mat_tensor(alpha, mu_j)) - mat_compose(mu_i, mat_tensor(mu_j, alpha));
}

LinMap alpha_coassociator(const LinMap& delta_i, const LinMap& delta_j, const LinMap& alpha) {
  return mat_compose(mat_tensor(delta_j, alpha), delta_i) - mat_compose(mat_tensor(alpha, delta_j), delta_i);
}

bool ResidualReport::ok_through(int k) const {
  for (const auto& r : per_order) {
    if (r.order > k) break;
    if (!r.ok()) return false;
  }
  return k < static_cast<int>(per_order.size());
}

ResidualReport residuals(const TruncatedDeformation& def) {
  const HomBialgebra& b = def.base;
  const int d = b.dim, N = def.order;
  const LinMap tau23 = flip_operator(d, 4, 2, 3);
  ResidualReport rep;
  for (int s = 0; s <= N; ++s) {
    OrderResiduals r;
    r.order = s;
    r.assoc = LinMap::hom(d, 1, 3);
    r.coassoc = LinMap::hom(d, 3, 1);
    r.compat = LinMap::hom(d, 2, 2);
    // alpha_0 = alpha, alpha_{k>=1} = 0: only k = 0 contributes
    for (int i = 0; i <= s; ++i) {
      const int j = s - i;
      r.assoc = r.assoc + alpha_associator(def.mu_terms[i], def.mu_terms[j], b.alpha);
      r.coassoc = r.coassoc + alpha_coassociator(def.delta_terms[i], def.delta_terms[j], b.alpha);
      r.compat = r.compat + mat_compose(def.delta_terms[i], def.mu_terms[j]);
    }
    for (int i = 0; i <= s; ++i)
      for (int j = 0; j <= s - i; ++j)
        for (int k = 0; k <= s - i - j; ++k) {
          const int l = s - i - j - k;
          r.compat = r.compat - mat_compose(mat_compose(mat_tensor(def.mu_terms[i], def.mu_terms[j]), tau23),
                                            mat_tensor(def.delta_terms[k], def.delta_terms[l]));
        }
    rep.per_order.push_back(std::move(r));
  }
  return rep;
}

Obstruction obstruction(const GsComplex& gs, const TruncatedDeformation& def, int s) {
  if (s < 1) throw DimensionError("obstruction order must be >= 1");
  // validity to order s-1, with missing orders read as zero terms
  TruncatedDeformation padded_def = def;
  while (padded_def.order < s - 1) {
    padded_def.mu_terms.push_back(LinMap::hom(def.base.dim, 1, 2));
    padded_def.delta_terms.push_back(LinMap::hom(def.base.dim, 2, 1));
    ++padded_def.order;
  }
  const ResidualReport rep = residuals(padded_def);
  if (!rep.ok_through(s - 1))
    throw std::runtime_error("deformation is not valid to order " + std::to_string(s - 1));
  const HomBialgebra& b = def.base;
  const int d = b.dim;
  const LinMap tau23 = flip_operator(d, 4, 2, 3);
  auto mu_at = [&](int i) { return i <= def.order ? def.mu_terms[i] : LinMap::hom(d, 1, 2); };
  auto delta_at = [&](int i) { return i <= def.order ? def.delta_terms[i] : LinMap::hom(d, 2, 1); };
  LinMap a_s = LinMap::hom(d, 1, 3), c_s = LinMap::hom(d, 3, 1), l_s = LinMap::hom(d, 2, 2);
  for (int i = 1; i <= s - 1; ++i) {
    a_s = a_s + alpha_associator(mu_at(i), mu_at(s - i), b.alpha);
    c_s = c_s + alpha_coassociator(delta_at(i), delta_at(s - i), b.alpha);
    l_s = l_s + mat_compose(delta_at(i), mu_at(s - i));
  }
  for (int i = 0; i <= s; ++i)
    for (int j = 0; j <= s - i; ++j)
      for (int k = 0; k <= s - i - j; ++k) {
        const int l = s - i - j - k;
        if (i == s || j == s || k == s || l == s) continue;  // no index-s factor
        l_s = l_s - mat_compose(mat_compose(mat_tensor(mu_at(i), mu_at(j)), tau23),
                                mat_tensor(delta_at(k), delta_at(l)));
      }
  Obstruction out;
  out.order = s;
  out.cochain.n = 3;
  out.cochain.components = {{3, 1, -c_s}, {2, 2, l_s}, {1, 3, -a_s}};
  out.witness = gs.coboundary_witness(out.cochain);
  return out;
}

Obstruction obstruction(const TruncatedDeformation& def, int s) {
  GsComplex gs(def.base);
  return obstruction(gs, def, s);
}

TruncatedDeformation extend_with_witness(const TruncatedDeformation& def, const Obstruction& obs) {
  if (!obs.witness) throw std::runtime_error("obstruction at order " + std::to_string(obs.order) + " has no witness");
  if (obs.order != def.order + 1)
    throw DimensionError("witness extends order " + std::to_string(def.order) + " deformation by exactly one order");
  std::vector<LinMap> mu_tail(def.mu_terms.begin() + 1, def.mu_terms.end());
  std::vector<LinMap> delta_tail(def.delta_terms.begin() + 1, def.delta_terms.end());
  delta_tail.push_back(obs.witness->components[0].map);  // (2,1) component
  mu_tail.push_back(obs.witness->components[1].map);     // (1,2) component
  return make_deformation(def.base, std::move(mu_tail), std::move(delta_tail));
}

namespace {

std::vector<LinMap> padded(const std::vector<LinMap>& terms, int n, const LinMap& zero) {
  std::vector<LinMap> out = terms;
  while (static_cast<int>(out.size()) < n + 1) out.push_back(zero);
  return out;
}

std::vector<LinMap> series_inverse(const std::vector<LinMap>& phi, int n, int d) {
  std::vector<LinMap> psi{LinMap::identity(d)};
  for (int s = 1; s <= n; ++s) {
    LinMap acc = LinMap::hom(d, 1, 1);
    for (int i = 1; i <= s; ++i) acc = acc - mat_compose(phi[i], psi[s - i]);
    psi.push_back(std::move(acc));
  }
  return psi;
}

}  // namespace

TruncatedDeformation apply_gauge(const TruncatedDeformation& def, const GaugeTransform& phi) {
  const HomBialgebra& b = def.base;
  const int d = b.dim, N = def.order;
  const LinMap zero_dd = LinMap::hom(d, 1, 1);
  const auto ph = padded(phi.terms, N, zero_dd);
  const auto ps = series_inverse(ph, N, d);
  std::vector<LinMap> mu_tail, delta_tail;
  for (int s = 1; s <= N; ++s) {
    LinMap m = LinMap::hom(d, 1, 2);
    for (int i = 0; i <= s; ++i)
      for (int j = 0; j <= s - i; ++j)
        for (int k = 0; k <= s - i - j; ++k) {
          const int l = s - i - j - k;
          m = m + mat_compose(ph[i], mat_compose(def.mu_terms[j], mat_tensor(ps[k], ps[l])));
        }
    mu_tail.push_back(std::move(m));
    LinMap dl = LinMap::hom(d, 2, 1);
    for (int i = 0; i <= s; ++i)
      for (int j = 0; j <= s - i; ++j)
        for (int k = 0; k <= s - i - j; ++k) {
          const int l = s - i - j - k;
          dl = dl + mat_compose(mat_tensor(ph[i], ph[j]), mat_compose(def.delta_terms[k], ps[l]));
        }
    delta_tail.push_back(std::move(dl));
  }
  return make_deformation(b, std::move(mu_tail), std::move(delta_tail));
}

GaugeTransform compose_gauges(const HomBialgebra& base, const GaugeTransform& psi, const GaugeTransform& phi) {
  const int n = std::max(psi.order, phi.order);
  const LinMap zero = LinMap::hom(base.dim, 1, 1);
  const auto a = padded(psi.terms, n, zero);
  const auto b = padded(phi.terms, n, zero);
  std::vector<LinMap> tail;
  for (int s = 1; s <= n; ++s) {
    LinMap acc = LinMap::hom(base.dim, 1, 1);
    for (int i = 0; i <= s; ++i) acc = acc + mat_compose(a[i], b[s - i]);
    tail.push_back(std::move(acc));
  }
  return make_gauge(base, std::move(tail));
}

std::vector<UnitCounitStatus> check_unit_counit(const TruncatedDeformation& def) {
  const HomBialgebra& b = def.base;
  const LinMap id = LinMap::identity(b.dim);
  std::vector<UnitCounitStatus> out;
  for (int s = 1; s <= def.order; ++s) {
    UnitCounitStatus st;
    st.order = s;
    st.unit_right = mat_compose(def.mu_terms[s], mat_tensor(id, b.eta)).is_zero();
    st.unit_left = mat_compose(def.mu_terms[s], mat_tensor(b.eta, id)).is_zero();
    st.counit_left = mat_compose(mat_tensor(b.eps, id), def.delta_terms[s]).is_zero();
    st.counit_right = mat_compose(mat_tensor(id, b.eps), def.delta_terms[s]).is_zero();
    out.push_back(st);
  }
  return out;
}

std::pair<TruncatedDeformation, GaugeTransform> normalize_unit(const TruncatedDeformation& def) {
  const HomBialgebra& b = def.base;
  const int d = b.dim;
  if (rank(b.alpha) != d) throw std::runtime_error("normalize_unit requires a surjective twist map");
  TruncatedDeformation cur = def;
  GaugeTransform total = identity_gauge(b, def.order);
  for (int s = 1; s <= def.order; ++s) {
    const LinMap v = mat_compose(cur.mu_terms[s], mat_tensor(b.eta, b.eta));  // mu_s(1 x 1), d x 1
    const Rational n_s = mat_compose(b.eps, v).at(0, 0);
    const LinMap w = v - b.eta.scaled(n_s);
    const LinMap chi = mat_compose(mat_tensor(b.eps, b.eps), cur.delta_terms[s]);  // 1 x d
    const LinMap stage = mat_compose(w, b.eps) - mat_compose(b.eta, chi);
    std::vector<LinMap> tail(def.order, LinMap::hom(d, 1, 1));
    tail[s - 1] = stage;
    const GaugeTransform step = make_gauge(b, std::move(tail));
    cur = apply_gauge(cur, step);
    total = compose_gauges(b, step, total);
  }
  return {std::move(cur), std::move(total)};
}

TruncatedDeformation twist_deformation(const TruncatedDeformation& def, const LinMap& beta) {
  const HomBialgebra twisted = yau_twist(def.base, beta);  // validates beta on the base
  const LinMap beta2 = mat_tensor(beta, beta);
  for (int s = 1; s <= def.order; ++s) {
    if (mat_compose(beta, def.mu_terms[s]) != mat_compose(def.mu_terms[s], beta2))
      throw MorphismError("twist_deformation: beta is not multiplicative for mu at order " + std::to_string(s));
    if (mat_compose(def.delta_terms[s], beta) != mat_compose(beta2, def.delta_terms[s]))
      throw MorphismError("twist_deformation: beta is not comultiplicative for Delta at order " + std::to_string(s));
  }
  std::vector<LinMap> mu_tail, delta_tail;
  for (int s = 1; s <= def.order; ++s) {
    mu_tail.push_back(mat_compose(beta, def.mu_terms[s]));
    delta_tail.push_back(mat_compose(def.delta_terms[s], beta));
  }
  return make_deformation(twisted, std::move(mu_tail), std::move(delta_tail));
}

CochainVector infinitesimal_cochain(const TruncatedDeformation& def) {
  if (def.order < 1) throw DimensionError("deformation has no order-1 terms");
  CochainVector v;
  v.n = 2;
  LinMap dl = def.delta_terms[1];
  dl.set_signature(def.base.dim, 2, 1);
  LinMap m = def.mu_terms[1];
  m.set_signature(def.base.dim, 1, 2);
  v.components = {{2, 1, std::move(dl)}, {1, 2, std::move(m)}};
  return v;
}

}  // namespace hombi
