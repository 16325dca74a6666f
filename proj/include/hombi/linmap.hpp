#ifndef HOMBI_LINMAP_HPP
#define HOMBI_LINMAP_HPP

#include <optional>
#include <string>
#include <vector>

#include "hombi/rational.hpp"

namespace hombi {

struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense exact matrix representing a linear map between tensor powers of a
/// d-dimensional space. Basis ordering of B^{otimes n} is lexicographic with
/// the leftmost tensor slot most significant: e_{i1} x ... x e_{in} sits at
/// index i1*d^{n-1} + ... + in.
///
/// The tensor signature (base_dim, cod_arity, dom_arity) is bookkeeping; it
/// is set by the factories that know it and propagated when meaningful.
/// rows = base_dim^cod_arity and cols = base_dim^dom_arity whenever set.
class LinMap {
 public:
  LinMap() = default;
  LinMap(int rows, int cols);

  /// Zero map B^{otimes q} -> B^{otimes p} over a d-dimensional base.
  static LinMap hom(int d, int p, int q);
  static LinMap identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int base_dim() const { return base_dim_; }
  int cod_arity() const { return cod_arity_; }
  int dom_arity() const { return dom_arity_; }
  bool has_signature() const { return base_dim_ > 0; }
  void set_signature(int d, int p, int q);

  Rational& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  bool is_zero() const;
  bool operator==(const LinMap& o) const;
  bool operator!=(const LinMap& o) const { return !(*this == o); }

  LinMap operator+(const LinMap& o) const;
  LinMap operator-(const LinMap& o) const;
  LinMap operator-() const;
  LinMap scaled(const Rational& s) const;
  LinMap transposed() const;

  /// Coordinates of the first entry where *this and o differ, if any.
  std::optional<std::pair<int, int>> first_difference(const LinMap& o) const;

  std::string shape_string() const;

 private:
  int rows_ = 0, cols_ = 0;
  int base_dim_ = -1, cod_arity_ = -1, dom_arity_ = -1;
  std::vector<Rational> a_;
};

/// g after f. Throws DimensionError naming both shapes on a mismatch.
LinMap mat_compose(const LinMap& g, const LinMap& f);

/// Kronecker product realizing (f x g)(x x y) = f(x) x g(y) under the
/// lexicographic ordering above (left factor most significant).
LinMap mat_tensor(const LinMap& f, const LinMap& g);

LinMap mat_pow(const LinMap& m, int n);      // composition power, n >= 0
LinMap tensor_pow(const LinMap& m, int n);   // Kronecker power, n >= 0 (n = 0 gives 1x1 identity)

/// Permutation matrix on d^n swapping tensor slots i and j (1-based, i < j).
LinMap flip_operator(int d, int n, int i, int j);

/// Permutation matrix for mixed slot dimensions: slot s of the output is
/// slot perm[s] of the input. dims are the input slot dimensions.
LinMap slot_permutation(const std::vector<int>& dims, const std::vector<int>& perm);

/// Column-major vectorization, so that vec(A F B) = (B^T x A) vec(F).
std::vector<Rational> vectorize(const LinMap& m);
LinMap matrix_from_vec(const std::vector<Rational>& v, int rows, int cols);

struct SubspaceBasis {
  int ambient_dim = 0;
  std::vector<std::vector<Rational>> vectors;  // linearly independent columns
  /// For kernel bases: the free-variable position of each basis vector
  /// (the vector has a 1 there and 0 at every other free position), so
  /// coordinates of a kernel element can be read off directly.
  std::vector<int> free_positions;

  int dim() const { return static_cast<int>(vectors.size()); }
};

/// Null-space basis via fraction-free Gaussian elimination (integer rows,
/// gcd-normalized row operations), exact.
SubspaceBasis kernel_basis(const LinMap& m);

int rank(const LinMap& m);

/// Exact solution of M x = b, or nullopt when inconsistent. Deterministic
/// particular solution (free variables set to zero).
std::optional<std::vector<Rational>> solve_linear(const LinMap& m, const std::vector<Rational>& b);

bool subspace_membership(const SubspaceBasis& s, const std::vector<Rational>& v);

/// Basis of the column space: the columns of m at the pivot positions of its
/// reduced echelon form (deterministic).
SubspaceBasis image_basis(const LinMap& m);

/// dim Z - dim B after checking span(B) is contained in span(Z); throws
/// std::runtime_error naming the first violating basis vector otherwise.
int quotient_dim(const SubspaceBasis& z, const SubspaceBasis& b);

/// Incremental row-reduced span; used for membership chains, image bases and
/// deterministic basis extension.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(int ambient) : ambient_(ambient) {}
  /// Returns true when v enlarged the span.
  bool add(const std::vector<Rational>& v);
  bool contains(const std::vector<Rational>& v) const;
  int dim() const { return static_cast<int>(rows_.size()); }

 private:
  std::vector<Rational> reduce(std::vector<Rational> v) const;
  int ambient_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> pivots_;
};

}  // namespace hombi

#endif
