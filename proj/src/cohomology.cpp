#include "hombi/cohomology.hpp"

#include <stdexcept>

namespace hombi {

bool CochainVector::is_zero() const {
  for (const auto& c : components)
    if (!c.map.is_zero()) return false;
  return true;
}

GsComplex::GsComplex(HomBialgebra b) : b_(std::move(b)) {}

const LinMap& GsComplex::left_action(int p) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = lam_l_.find(p);
  if (it == lam_l_.end()) it = lam_l_.emplace(p, left_action_power(b_, p).map).first;
  return it->second;
}

const LinMap& GsComplex::right_action(int p) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = lam_r_.find(p);
  if (it == lam_r_.end()) it = lam_r_.emplace(p, right_action_power(b_, p).map).first;
  return it->second;
}

const LinMap& GsComplex::left_coaction(int q) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = rho_l_.find(q);
  if (it == rho_l_.end()) it = rho_l_.emplace(q, left_coaction_power(b_, q).map).first;
  return it->second;
}

const LinMap& GsComplex::right_coaction(int q) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = rho_r_.find(q);
  if (it == rho_r_.end()) it = rho_r_.emplace(q, right_coaction_power(b_, q).map).first;
  return it->second;
}

const SubspaceBasis& GsComplex::cochain_basis(int p, int q) const {
  if (p < 1 || q < 1) throw DimensionError("cochain bidegree requires p, q >= 1");
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_pair(p, q);
  auto it = bases_.find(key);
  if (it == bases_.end()) {
    const LinMap aq = tensor_pow(b_.alpha, q);
    const LinMap ap = tensor_pow(b_.alpha, p);
    // vec(F aq - ap F) = (aq^T x I - I x ap) vec(F)
    const LinMap op =
        mat_tensor(aq.transposed(), LinMap::identity(ap.rows())) - mat_tensor(LinMap::identity(aq.rows()), ap);
    it = bases_.emplace(key, kernel_basis(op)).first;
  }
  return it->second;
}

bool GsComplex::is_alpha_commuting(int p, int q, const LinMap& f) const {
  return mat_compose(f, tensor_pow(b_.alpha, q)) == mat_compose(tensor_pow(b_.alpha, p), f);
}

LinMap GsComplex::delta_h_apply(int p, int q, const LinMap& f) const {
  if (p < 1 || q < 1) throw DimensionError("delta_H bidegree requires p, q >= 1");
  const int d = b_.dim;
  const LinMap apow = mat_pow(b_.alpha, q - 1);
  LinMap res = mat_compose(left_action(p), mat_tensor(apow, f));
  for (int i = 1; i <= q; ++i) {
    const LinMap ins = mat_tensor(mat_tensor(tensor_pow(b_.alpha, i - 1), b_.mu), tensor_pow(b_.alpha, q - i));
    const LinMap term = mat_compose(f, ins);
    res = (i % 2 == 0) ? res + term : res - term;
  }
  const LinMap tail = mat_compose(right_action(p), mat_tensor(f, apow));
  res = ((q + 1) % 2 == 0) ? res + tail : res - tail;
  res.set_signature(d, p, q + 1);
  return res;
}

LinMap GsComplex::delta_c_apply(int p, int q, const LinMap& f) const {
  if (p < 1 || q < 1) throw DimensionError("delta_C bidegree requires p, q >= 1");
  const int d = b_.dim;
  const LinMap apow = mat_pow(b_.alpha, p - 1);
  LinMap res = mat_compose(mat_tensor(apow, f), left_coaction(q));
  for (int j = 1; j <= p; ++j) {
    const LinMap ins = mat_tensor(mat_tensor(tensor_pow(b_.alpha, j - 1), b_.delta), tensor_pow(b_.alpha, p - j));
    const LinMap term = mat_compose(ins, f);
    res = (j % 2 == 0) ? res + term : res - term;
  }
  const LinMap tail = mat_compose(mat_tensor(f, apow), right_coaction(q));
  res = ((p + 1) % 2 == 0) ? res + tail : res - tail;
  res.set_signature(d, p + 1, q);
  return res;
}

LinMap GsComplex::face_d_apply(int i, int p, int q, const LinMap& f) const {
  if (i < 0 || i > q - 1) throw DimensionError("face D_i index out of range: i=" + std::to_string(i));
  const LinMap apow = mat_pow(b_.alpha, q - 1);
  const LinMap ins = mat_tensor(mat_tensor(tensor_pow(b_.alpha, i), b_.mu), tensor_pow(b_.alpha, q - 1 - i));
  LinMap res = mat_compose(f, ins);
  if (i == 0) res = res - mat_compose(left_action(p), mat_tensor(apow, f));
  if (i == q - 1) res = res - mat_compose(right_action(p), mat_tensor(f, apow));
  res.set_signature(b_.dim, p, q + 1);
  return res;
}

LinMap GsComplex::face_s_apply(int i, int p, int q, const LinMap& f) const {
  if (i < 0 || i > p - 1) throw DimensionError("face S_i index out of range: i=" + std::to_string(i));
  const LinMap apow = mat_pow(b_.alpha, p - 1);
  const LinMap ins = mat_tensor(mat_tensor(tensor_pow(b_.alpha, i), b_.delta), tensor_pow(b_.alpha, p - 1 - i));
  LinMap res = mat_compose(ins, f);
  if (i == 0) res = res - mat_compose(mat_tensor(apow, f), left_coaction(q));
  if (i == p - 1) res = res - mat_compose(mat_tensor(f, apow), right_coaction(q));
  res.set_signature(b_.dim, p + 1, q);
  return res;
}

LinMap GsComplex::assemble_operator(int p, int q, bool horizontal) const {
  const int d = b_.dim;
  LinMap probe = LinMap::hom(d, p, q);
  const int in_rows = probe.rows(), in_cols = probe.cols();
  const long in_dim = static_cast<long>(in_rows) * in_cols;
  const long out_dim = horizontal ? static_cast<long>(in_rows) * in_cols * d : static_cast<long>(in_rows) * d * in_cols;
  LinMap op(static_cast<int>(out_dim), static_cast<int>(in_dim));
  for (int j = 0; j < in_cols; ++j)
    for (int i = 0; i < in_rows; ++i) {
      probe.at(i, j) = 1;
      const LinMap img = horizontal ? delta_h_apply(p, q, probe) : delta_c_apply(p, q, probe);
      probe.at(i, j) = 0;
      const int col = j * in_rows + i;
      int k = 0;
      for (int jj = 0; jj < img.cols(); ++jj)
        for (int ii = 0; ii < img.rows(); ++ii, ++k)
          if (!is_zero(img.at(ii, jj))) op.at(k, col) = img.at(ii, jj);
    }
  return op;
}

LinMap GsComplex::delta_h_operator(int p, int q) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = op_h_.find({p, q});
    if (it != op_h_.end()) return it->second;
  }
  LinMap op = assemble_operator(p, q, true);
  std::lock_guard<std::mutex> lock(mu_);
  return op_h_.emplace(std::make_pair(p, q), std::move(op)).first->second;
}

LinMap GsComplex::delta_c_operator(int p, int q) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = op_c_.find({p, q});
    if (it != op_c_.end()) return it->second;
  }
  LinMap op = assemble_operator(p, q, false);
  std::lock_guard<std::mutex> lock(mu_);
  return op_c_.emplace(std::make_pair(p, q), std::move(op)).first->second;
}

LinMap GsComplex::face_d_operator(int i, int p, int q) const {
  const int d = b_.dim;
  LinMap probe = LinMap::hom(d, p, q);
  LinMap op(probe.rows() * probe.cols() * d, probe.rows() * probe.cols());
  for (int j = 0; j < probe.cols(); ++j)
    for (int r = 0; r < probe.rows(); ++r) {
      probe.at(r, j) = 1;
      const LinMap img = face_d_apply(i, p, q, probe);
      probe.at(r, j) = 0;
      const auto v = vectorize(img);
      for (size_t k = 0; k < v.size(); ++k)
        if (!is_zero(v[k])) op.at(static_cast<int>(k), j * probe.rows() + r) = v[k];
    }
  return op;
}

LinMap GsComplex::face_s_operator(int i, int p, int q) const {
  const int d = b_.dim;
  LinMap probe = LinMap::hom(d, p, q);
  LinMap op(probe.rows() * d * probe.cols(), probe.rows() * probe.cols());
  for (int j = 0; j < probe.cols(); ++j)
    for (int r = 0; r < probe.rows(); ++r) {
      probe.at(r, j) = 1;
      const LinMap img = face_s_apply(i, p, q, probe);
      probe.at(r, j) = 0;
      const auto v = vectorize(img);
      for (size_t k = 0; k < v.size(); ++k)
        if (!is_zero(v[k])) op.at(static_cast<int>(k), j * probe.rows() + r) = v[k];
    }
  return op;
}

std::vector<Rational> GsComplex::component_coords(int p, int q, const LinMap& f) const {
  const SubspaceBasis& basis = cochain_basis(p, q);
  const auto w = vectorize(f);
  std::vector<Rational> coords;
  coords.reserve(basis.dim());
  for (int fp : basis.free_positions) coords.push_back(w[fp]);
  // reconstruct and compare: certifies membership in the commutant
  std::vector<Rational> rec(w.size());
  for (int k = 0; k < basis.dim(); ++k) {
    if (is_zero(coords[k])) continue;
    const auto& bv = basis.vectors[k];
    for (size_t i = 0; i < rec.size(); ++i)
      if (!is_zero(bv[i])) rec[i] += coords[k] * bv[i];
  }
  if (rec != w)
    throw std::runtime_error("cochain at bidegree (" + std::to_string(p) + "," + std::to_string(q) +
                             ") is not alpha-commuting");
  return coords;
}

LinMap GsComplex::restricted_block(int p, int q, bool horizontal) const {
  const SubspaceBasis& src = cochain_basis(p, q);
  const int tp = horizontal ? p : p + 1;
  const int tq = horizontal ? q + 1 : q;
  const SubspaceBasis& tgt = cochain_basis(tp, tq);
  LinMap block(tgt.dim(), src.dim());
  LinMap probe = LinMap::hom(b_.dim, p, q);
  for (int k = 0; k < src.dim(); ++k) {
    const LinMap f = matrix_from_vec(src.vectors[k], probe.rows(), probe.cols());
    const LinMap img = horizontal ? delta_h_apply(p, q, f) : delta_c_apply(p, q, f);
    const auto coords = component_coords(tp, tq, img);
    for (int r = 0; r < tgt.dim(); ++r)
      if (!is_zero(coords[r])) block.at(r, k) = coords[r];
  }
  return block;
}

LinMap GsComplex::delta_h_restricted(int p, int q) const { return restricted_block(p, q, true); }
LinMap GsComplex::delta_c_restricted(int p, int q) const { return restricted_block(p, q, false); }

std::vector<std::pair<int, int>> GsComplex::bidegrees(int n) const {
  if (n < 1) throw DimensionError("total degree requires n >= 1");
  std::vector<std::pair<int, int>> out;
  for (int q = 1; q <= n; ++q) out.emplace_back(n + 1 - q, q);
  return out;
}

const LinMap& GsComplex::total_delta(int n) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = total_.find(n);
    if (it != total_.end()) return it->second;
  }
  const auto srcs = bidegrees(n);
  const auto tgts = bidegrees(n + 1);
  std::map<std::pair<int, int>, int> toff;
  int tdim = 0;
  for (const auto& pq : tgts) {
    toff[pq] = tdim;
    tdim += cochain_basis(pq.first, pq.second).dim();
  }
  int sdim = 0;
  for (const auto& pq : srcs) sdim += cochain_basis(pq.first, pq.second).dim();
  LinMap mat(tdim, sdim);
  int soff = 0;
  for (const auto& [p, q] : srcs) {
    const SubspaceBasis& src = cochain_basis(p, q);
    LinMap probe = LinMap::hom(b_.dim, p, q);
    for (int k = 0; k < src.dim(); ++k) {
      const LinMap f = matrix_from_vec(src.vectors[k], probe.rows(), probe.cols());
      const auto hc = component_coords(p, q + 1, delta_h_apply(p, q, f));
      int r0 = toff[{p, q + 1}];
      for (size_t r = 0; r < hc.size(); ++r)
        if (!is_zero(hc[r])) mat.at(r0 + static_cast<int>(r), soff + k) += hc[r];
      const auto cc = component_coords(p + 1, q, delta_c_apply(p, q, f));
      r0 = toff[{p + 1, q}];
      const int sgn = (q % 2 == 0) ? 1 : -1;
      for (size_t r = 0; r < cc.size(); ++r)
        if (!is_zero(cc[r])) mat.at(r0 + static_cast<int>(r), soff + k) += sgn == 1 ? cc[r] : -cc[r];
    }
    soff += src.dim();
  }
  std::lock_guard<std::mutex> lock(mu_);
  return total_.emplace(n, std::move(mat)).first->second;
}

std::vector<Rational> GsComplex::coordinates(const CochainVector& v) const {
  const auto degs = bidegrees(v.n);
  if (v.components.size() != degs.size()) throw DimensionError("cochain vector has wrong component count");
  std::vector<Rational> out;
  for (size_t k = 0; k < degs.size(); ++k) {
    const auto& c = v.components[k];
    if (c.p != degs[k].first || c.q != degs[k].second)
      throw DimensionError("cochain vector components must be ordered by increasing q");
    auto coords = component_coords(c.p, c.q, c.map);
    out.insert(out.end(), coords.begin(), coords.end());
  }
  return out;
}

CochainVector GsComplex::from_coordinates(int n, const std::vector<Rational>& coords) const {
  CochainVector v;
  v.n = n;
  size_t off = 0;
  for (const auto& [p, q] : bidegrees(n)) {
    const SubspaceBasis& basis = cochain_basis(p, q);
    LinMap probe = LinMap::hom(b_.dim, p, q);
    std::vector<Rational> w(static_cast<size_t>(probe.rows()) * probe.cols());
    for (int k = 0; k < basis.dim(); ++k) {
      const Rational& c = coords[off + k];
      if (is_zero(c)) continue;
      const auto& bv = basis.vectors[k];
      for (size_t i = 0; i < w.size(); ++i)
        if (!is_zero(bv[i])) w[i] += c * bv[i];
    }
    off += basis.dim();
    v.components.push_back({p, q, matrix_from_vec(w, probe.rows(), probe.cols())});
  }
  if (off != coords.size()) throw DimensionError("coordinate vector length mismatch");
  return v;
}

CochainVector GsComplex::apply_total(const CochainVector& v) const {
  CochainVector out;
  out.n = v.n + 1;
  for (const auto& [p, q] : bidegrees(v.n + 1)) out.components.push_back({p, q, LinMap::hom(b_.dim, p, q)});
  auto slot = [&](int p, int q) -> LinMap& {
    for (auto& c : out.components)
      if (c.p == p && c.q == q) return c.map;
    throw DimensionError("internal: missing component");
  };
  for (const auto& c : v.components) {
    if (!is_alpha_commuting(c.p, c.q, c.map))
      throw std::runtime_error("cochain at bidegree (" + std::to_string(c.p) + "," + std::to_string(c.q) +
                               ") is not alpha-commuting");
    slot(c.p, c.q + 1) = slot(c.p, c.q + 1) + delta_h_apply(c.p, c.q, c.map);
    const LinMap dc = delta_c_apply(c.p, c.q, c.map);
    slot(c.p + 1, c.q) = (c.q % 2 == 0) ? slot(c.p + 1, c.q) + dc : slot(c.p + 1, c.q) - dc;
  }
  return out;
}

CohomologyReport GsComplex::cohomology(int n) const {
  CohomologyReport rep;
  rep.n = n;
  for (const auto& [p, q] : bidegrees(n)) rep.dim_ambient += cochain_basis(p, q).dim();
  const LinMap& dn = total_delta(n);
  SubspaceBasis z = kernel_basis(dn);
  rep.dim_Z = z.dim();
  SubspaceBasis bnd;
  bnd.ambient_dim = z.ambient_dim;
  if (n >= 2) bnd = image_basis(total_delta(n - 1));
  rep.dim_B = bnd.dim();
  rep.dim_H = quotient_dim(z, bnd);  // containment check; throws on a sign bug
  for (const auto& v : z.vectors) rep.cocycle_basis.push_back(from_coordinates(n, v));
  for (const auto& v : bnd.vectors) rep.coboundary_basis.push_back(from_coordinates(n, v));
  // deterministic representatives: extend the coboundary basis through the
  // cocycle basis in fixed coordinate order
  IncrementalSpan span(z.ambient_dim);
  for (const auto& v : bnd.vectors) span.add(v);
  for (const auto& v : z.vectors)
    if (span.add(v)) rep.representatives.push_back(from_coordinates(n, v));
  return rep;
}

bool GsComplex::is_cocycle(const CochainVector& v) const { return apply_total(v).is_zero(); }

std::optional<CochainVector> GsComplex::coboundary_witness(const CochainVector& v) const {
  if (v.n < 2) throw DimensionError("coboundary witness requires total degree >= 2");
  const auto target = coordinates(v);
  const auto sol = solve_linear(total_delta(v.n - 1), target);
  if (!sol) return std::nullopt;
  return from_coordinates(v.n - 1, *sol);
}

SubspaceBasis cochain_space_basis(const HomBialgebra& b, int p, int q) {
  return GsComplex(b).cochain_basis(p, q);
}
LinMap delta_h(const HomBialgebra& b, int p, int q) { return GsComplex(b).delta_h_operator(p, q); }
LinMap delta_c(const HomBialgebra& b, int p, int q) { return GsComplex(b).delta_c_operator(p, q); }
LinMap face_d(const HomBialgebra& b, int i, int p, int q) { return GsComplex(b).face_d_operator(i, p, q); }
LinMap face_s(const HomBialgebra& b, int i, int p, int q) { return GsComplex(b).face_s_operator(i, p, q); }
LinMap total_delta(const HomBialgebra& b, int n) { return GsComplex(b).total_delta(n); }
CohomologyReport cohomology(const HomBialgebra& b, int n) { return GsComplex(b).cohomology(n); }
bool is_cocycle(const HomBialgebra& b, const CochainVector& v) { return GsComplex(b).is_cocycle(v); }
std::optional<CochainVector> coboundary_witness(const HomBialgebra& b, const CochainVector& v) {
  return GsComplex(b).coboundary_witness(v);
}

}  // namespace hombi
