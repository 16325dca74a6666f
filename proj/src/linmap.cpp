#include "hombi/linmap.hpp"

#include <algorithm>
#include <sstream>

namespace hombi {

LinMap::LinMap(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
}

static int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

LinMap LinMap::hom(int d, int p, int q) {
  LinMap m(ipow(d, p), ipow(d, q));
  m.set_signature(d, p, q);
  return m;
}

LinMap LinMap::identity(int n) {
  LinMap m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void LinMap::set_signature(int d, int p, int q) {
  if (rows_ != ipow(d, p) || cols_ != ipow(d, q))
    throw DimensionError("tensor signature does not match matrix shape " + shape_string());
  base_dim_ = d;
  cod_arity_ = p;
  dom_arity_ = q;
}

bool LinMap::is_zero() const {
  for (const auto& x : a_)
    if (!hombi::is_zero(x)) return false;
  return true;
}

bool LinMap::operator==(const LinMap& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

LinMap LinMap::operator+(const LinMap& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionError("sum of " + shape_string() + " and " + o.shape_string());
  LinMap r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

LinMap LinMap::operator-(const LinMap& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionError("difference of " + shape_string() + " and " + o.shape_string());
  LinMap r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

LinMap LinMap::operator-() const {
  LinMap r = *this;
  for (auto& x : r.a_) x = -x;
  return r;
}

LinMap LinMap::scaled(const Rational& s) const {
  LinMap r = *this;
  for (auto& x : r.a_) x *= s;
  return r;
}

LinMap LinMap::transposed() const {
  LinMap r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!hombi::is_zero(at(i, j))) r.at(j, i) = at(i, j);
  if (has_signature()) r.set_signature(base_dim_, dom_arity_, cod_arity_);
  return r;
}

std::optional<std::pair<int, int>> LinMap::first_difference(const LinMap& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return std::make_pair(-1, -1);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != o.at(i, j)) return std::make_pair(i, j);
  return std::nullopt;
}

std::string LinMap::shape_string() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_;
  return os.str();
}

LinMap mat_compose(const LinMap& g, const LinMap& f) {
  if (g.cols() != f.rows())
    throw DimensionError("compose mismatch: " + g.shape_string() + " after " + f.shape_string());
  LinMap r(g.rows(), f.cols());
  for (int i = 0; i < g.rows(); ++i)
    for (int t = 0; t < g.cols(); ++t) {
      const Rational& a = g.at(i, t);
      if (is_zero(a)) continue;
      for (int j = 0; j < f.cols(); ++j) {
        const Rational& b = f.at(t, j);
        if (!is_zero(b)) r.at(i, j) += a * b;
      }
    }
  if (g.has_signature() && f.has_signature() && g.base_dim() == f.base_dim())
    r.set_signature(g.base_dim(), g.cod_arity(), f.dom_arity());
  return r;
}

LinMap mat_tensor(const LinMap& f, const LinMap& g) {
  LinMap r(f.rows() * g.rows(), f.cols() * g.cols());
  for (int i = 0; i < f.rows(); ++i)
    for (int j = 0; j < f.cols(); ++j) {
      const Rational& a = f.at(i, j);
      if (is_zero(a)) continue;
      for (int k = 0; k < g.rows(); ++k)
        for (int l = 0; l < g.cols(); ++l) {
          const Rational& b = g.at(k, l);
          if (!is_zero(b)) r.at(i * g.rows() + k, j * g.cols() + l) = a * b;
        }
    }
  if (f.has_signature() && g.has_signature() && f.base_dim() == g.base_dim())
    r.set_signature(f.base_dim(), f.cod_arity() + g.cod_arity(), f.dom_arity() + g.dom_arity());
  return r;
}

LinMap mat_pow(const LinMap& m, int n) {
  if (m.rows() != m.cols()) throw DimensionError("composition power of non-square " + m.shape_string());
  LinMap r = LinMap::identity(m.rows());
  for (int i = 0; i < n; ++i) r = mat_compose(r, m);
  return r;
}

LinMap tensor_pow(const LinMap& m, int n) {
  LinMap r = LinMap::identity(1);
  for (int i = 0; i < n; ++i) r = mat_tensor(r, m);
  return r;
}

LinMap slot_permutation(const std::vector<int>& dims, const std::vector<int>& perm) {
  const int n = static_cast<int>(dims.size());
  if (static_cast<int>(perm.size()) != n) throw DimensionError("slot permutation arity mismatch");
  long total = 1;
  for (int d : dims) total *= d;
  std::vector<int> out_dims(n);
  for (int s = 0; s < n; ++s) out_dims[s] = dims[perm[s]];
  LinMap m(static_cast<int>(total), static_cast<int>(total));
  std::vector<int> digit(n);
  for (long col = 0; col < total; ++col) {
    long x = col;
    for (int s = n - 1; s >= 0; --s) {
      digit[s] = static_cast<int>(x % dims[s]);
      x /= dims[s];
    }
    long row = 0;
    for (int s = 0; s < n; ++s) row = row * out_dims[s] + digit[perm[s]];
    m.at(static_cast<int>(row), static_cast<int>(col)) = 1;
  }
  return m;
}

LinMap flip_operator(int d, int n, int i, int j) {
  if (!(1 <= i && i < j && j <= n))
    throw DimensionError("flip positions out of range: i=" + std::to_string(i) + " j=" + std::to_string(j) +
                         " n=" + std::to_string(n));
  std::vector<int> dims(n, d), perm(n);
  for (int s = 0; s < n; ++s) perm[s] = s;
  std::swap(perm[i - 1], perm[j - 1]);
  LinMap m = slot_permutation(dims, perm);
  m.set_signature(d, n, n);
  return m;
}

std::vector<Rational> vectorize(const LinMap& m) {
  std::vector<Rational> v;
  v.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i) v.push_back(m.at(i, j));
  return v;
}

LinMap matrix_from_vec(const std::vector<Rational>& v, int rows, int cols) {
  if (static_cast<long>(v.size()) != static_cast<long>(rows) * cols)
    throw DimensionError("vector length does not match matrix shape");
  LinMap m(rows, cols);
  size_t k = 0;
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m.at(i, j) = v[k++];
  return m;
}

namespace {

// Fraction-free elimination workspace: rows are kept integral, each row
// operation is an integer combination followed by content (gcd) removal,
// so entries never leave Z until the final pivot normalization.
struct Eliminator {
  std::vector<std::vector<Rational>> rows;
  std::vector<int> pivots;  // pivots[k] = column of k-th pivot row
  int cols = 0;

  void load(const LinMap& m, const std::vector<Rational>* rhs) {
    cols = m.cols() + (rhs ? 1 : 0);
    rows.assign(m.rows(), {});
    for (int i = 0; i < m.rows(); ++i) {
      auto& r = rows[i];
      r.reserve(cols);
      for (int j = 0; j < m.cols(); ++j) r.push_back(m.at(i, j));
      if (rhs) r.push_back((*rhs)[i]);
      make_integral(r);
    }
  }

  static void make_integral(std::vector<Rational>& r) {
    mpz_class l = 1;
    for (const auto& x : r)
      if (!is_zero(x)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    if (l != 1)
      for (auto& x : r) x *= Rational(l);
    remove_content(r);
  }

  static void remove_content(std::vector<Rational>& r) {
    mpz_class g = 0;
    for (const auto& x : r) {
      if (is_zero(x)) continue;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
      if (g == 1) break;
    }
    if (g > 1) {
      Rational inv(1, g);
      inv.canonicalize();
      for (auto& x : r) x *= inv;
    }
  }

  void forward() {
    int r = 0;
    const int nrows = static_cast<int>(rows.size());
    for (int c = 0; c < cols && r < nrows; ++c) {
      int p = -1;
      for (int i = r; i < nrows; ++i)
        if (!is_zero(rows[i][c])) { p = i; break; }
      if (p < 0) continue;
      std::swap(rows[r], rows[p]);
      const Rational piv = rows[r][c];
      for (int i = r + 1; i < nrows; ++i) {
        if (is_zero(rows[i][c])) continue;
        const Rational f = rows[i][c];
        for (int j = c; j < cols; ++j) rows[i][j] = piv * rows[i][j] - f * rows[r][j];
        remove_content(rows[i]);
      }
      pivots.push_back(c);
      ++r;
    }
  }

  // Back-substitution to reduced echelon form; pivot rows end with leading 1.
  void reduce() {
    for (int k = static_cast<int>(pivots.size()) - 1; k >= 0; --k) {
      const int c = pivots[k];
      Rational inv = 1 / rows[k][c];
      for (int j = c; j < cols; ++j)
        if (!is_zero(rows[k][j])) rows[k][j] *= inv;
      for (int i = 0; i < k; ++i) {
        if (is_zero(rows[i][c])) continue;
        const Rational f = rows[i][c];
        for (int j = c; j < cols; ++j)
          if (!is_zero(rows[k][j])) rows[i][j] -= f * rows[k][j];
      }
    }
  }

  void run(const LinMap& m, const std::vector<Rational>* rhs = nullptr) {
    load(m, rhs);
    forward();
    reduce();
  }
};

}  // namespace

SubspaceBasis kernel_basis(const LinMap& m) {
  Eliminator e;
  e.run(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : e.pivots) is_pivot[c] = true;
  SubspaceBasis out;
  out.ambient_dim = m.cols();
  for (int fc = 0; fc < m.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Rational> v(m.cols());
    v[fc] = 1;
    for (size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rows[r][fc];
    out.vectors.push_back(std::move(v));
    out.free_positions.push_back(fc);
  }
  return out;
}

int rank(const LinMap& m) {
  Eliminator e;
  e.load(m, nullptr);
  e.forward();
  return static_cast<int>(e.pivots.size());
}

std::optional<std::vector<Rational>> solve_linear(const LinMap& m, const std::vector<Rational>& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw DimensionError("solve_linear rhs length mismatch");
  Eliminator e;
  e.run(m, &b);
  for (int c : e.pivots)
    if (c == m.cols()) return std::nullopt;  // pivot in the augmented column
  std::vector<Rational> x(m.cols());
  for (size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.rows[r][m.cols()];
  return x;
}

bool IncrementalSpan::add(const std::vector<Rational>& v) {
  std::vector<Rational> r = reduce(v);
  int piv = -1;
  for (int i = 0; i < ambient_; ++i)
    if (!is_zero(r[i])) { piv = i; break; }
  if (piv < 0) return false;
  Rational inv = 1 / r[piv];
  for (auto& x : r) x *= inv;
  for (size_t k = 0; k < rows_.size(); ++k) {
    Rational f = rows_[k][piv];
    if (is_zero(f)) continue;
    for (int i = 0; i < ambient_; ++i)
      if (!is_zero(r[i])) rows_[k][i] -= f * r[i];
  }
  // keep rows ordered by pivot column
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(r));
  pivots_.insert(pivots_.begin() + pos, piv);
  return true;
}

bool IncrementalSpan::contains(const std::vector<Rational>& v) const {
  std::vector<Rational> r = reduce(v);
  for (const auto& x : r)
    if (!is_zero(x)) return false;
  return true;
}

std::vector<Rational> IncrementalSpan::reduce(std::vector<Rational> v) const {
  if (static_cast<int>(v.size()) != ambient_) throw DimensionError("span vector length mismatch");
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Rational f = v[pivots_[k]];
    if (is_zero(f)) continue;
    for (int i = 0; i < ambient_; ++i)
      if (!is_zero(rows_[k][i])) v[i] -= f * rows_[k][i];
  }
  return v;
}

bool subspace_membership(const SubspaceBasis& s, const std::vector<Rational>& v) {
  IncrementalSpan span(s.ambient_dim);
  for (const auto& w : s.vectors) span.add(w);
  return span.contains(v);
}

SubspaceBasis image_basis(const LinMap& m) {
  Eliminator e;
  e.load(m, nullptr);
  e.forward();
  SubspaceBasis out;
  out.ambient_dim = m.rows();
  for (int c : e.pivots) {
    std::vector<Rational> col(m.rows());
    for (int i = 0; i < m.rows(); ++i) col[i] = m.at(i, c);
    out.vectors.push_back(std::move(col));
  }
  return out;
}

int quotient_dim(const SubspaceBasis& z, const SubspaceBasis& b) {
  if (z.ambient_dim != b.ambient_dim) throw DimensionError("quotient_dim ambient dimension mismatch");
  IncrementalSpan zspan(z.ambient_dim);
  for (const auto& v : z.vectors) zspan.add(v);
  IncrementalSpan bspan(b.ambient_dim);
  for (size_t k = 0; k < b.vectors.size(); ++k) {
    if (!zspan.contains(b.vectors[k]))
      throw std::runtime_error("quotient_dim containment failure at basis vector " + std::to_string(k));
    bspan.add(b.vectors[k]);
  }
  return zspan.dim() - bspan.dim();
}

}  // namespace hombi
