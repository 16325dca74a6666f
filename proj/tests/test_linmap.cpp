#include <doctest.h>

#include "hombi/linmap.hpp"

using namespace hombi;

namespace {

// deterministic small-rational generator for property-style checks
struct Rng {
  uint64_t s;
  explicit Rng(uint64_t seed) : s(seed) {}
  uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  Rational rational() {
    const long num = static_cast<long>(next() % 19) - 9;
    const long den = static_cast<long>(next() % 4) + 1;
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  LinMap matrix(int r, int c) {
    LinMap m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = rational();
    return m;
  }
};

// straight-from-definition kronecker and product, independent of the library
LinMap naive_kron(const LinMap& a, const LinMap& b) {
  LinMap r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j)
      r.at(i, j) = a.at(i / b.rows(), j / b.cols()) * b.at(i % b.rows(), j % b.cols());
  return r;
}

LinMap naive_mul(const LinMap& a, const LinMap& b) {
  LinMap r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      for (int k = 0; k < a.cols(); ++k) r.at(i, j) += a.at(i, k) * b.at(k, j);
  return r;
}

}  // namespace

TEST_CASE("rational parsing and serialization round-trip") {
  for (const char* s : {"0", "1", "-1", "3/2", "-7/3", "22/7", "100000000000000000001/3"}) {
    const Rational q = parse_rational(s);
    CHECK(to_string(q) == s);
    CHECK(parse_rational(to_string(q)) == q);
  }
  CHECK(parse_rational("4/6") == parse_rational("2/3"));  // lowest terms
  CHECK(to_string(parse_rational("4/6")) == "2/3");
  CHECK(parse_rational("+5") == 5);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("2/0"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1e3"), ParseError);
  CHECK_THROWS_AS(parse_rational(" 1"), ParseError);
}

TEST_CASE("compose: identity, diagonal square, shape errors") {
  Rng rng(42);
  const LinMap m = rng.matrix(4, 4);
  CHECK(mat_compose(LinMap::identity(4), m) == m);
  CHECK(mat_compose(m, LinMap::identity(4)) == m);

  LinMap alpha = LinMap::identity(4);
  alpha.at(2, 2) = 2;
  alpha.at(3, 3) = 2;
  LinMap expected = LinMap::identity(4);
  expected.at(2, 2) = 4;
  expected.at(3, 3) = 4;
  CHECK(mat_compose(alpha, alpha) == expected);

  CHECK_THROWS_AS(mat_compose(rng.matrix(3, 2), rng.matrix(3, 2)), DimensionError);
}

TEST_CASE("tensor product conventions") {
  CHECK(mat_tensor(LinMap::identity(3), LinMap::identity(3)) == LinMap::identity(9));

  // e_i x e_j maps to column index i*d + j
  const int d = 3;
  LinMap ei(d, 1), ej(d, 1);
  ei.at(1, 0) = 1;
  ej.at(2, 0) = 1;
  const LinMap t = mat_tensor(ei, ej);
  for (int r = 0; r < d * d; ++r) CHECK(t.at(r, 0) == (r == 1 * d + 2 ? 1 : 0));

  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const LinMap f = rng.matrix(2, 2), g = rng.matrix(2, 2), fp = rng.matrix(2, 2), gp = rng.matrix(2, 2);
    CHECK(mat_tensor(f, g) == naive_kron(f, g));
    // (f x g)(f' x g') = (f f') x (g g')
    CHECK(mat_compose(mat_tensor(f, g), mat_tensor(fp, gp)) ==
          mat_tensor(naive_mul(f, fp), naive_mul(g, gp)));
  }
}

TEST_CASE("mixed-shape tensor interchange") {
  Rng rng(11);
  const LinMap f = rng.matrix(2, 3), h = rng.matrix(3, 2), g = rng.matrix(4, 2), k = rng.matrix(2, 4);
  CHECK(mat_compose(mat_tensor(f, g), mat_tensor(h, k)) == mat_tensor(mat_compose(f, h), mat_compose(g, k)));
}

TEST_CASE("flip operators") {
  const LinMap t12 = flip_operator(2, 2, 1, 2);
  // (a,b) -> (b,a): column of e_0 x e_1 (index 1) must map to index 2
  CHECK(t12.at(2, 1) == 1);
  CHECK(t12.at(1, 2) == 1);
  CHECK(t12.at(0, 0) == 1);
  CHECK(t12.at(3, 3) == 1);
  CHECK(mat_compose(t12, t12) == LinMap::identity(4));

  const LinMap t23 = flip_operator(2, 4, 2, 3);
  CHECK(mat_compose(t23, t23) == LinMap::identity(16));

  // involution + permutation matrix across a sweep of positions
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      const LinMap t = flip_operator(2, 4, i, j);
      CHECK(mat_compose(t, t) == LinMap::identity(16));
      for (int r = 0; r < 16; ++r) {
        int row_ones = 0, col_ones = 0;
        for (int c = 0; c < 16; ++c) {
          if (!is_zero(t.at(r, c))) {
            CHECK(t.at(r, c) == 1);
            ++row_ones;
          }
          if (!is_zero(t.at(c, r))) ++col_ones;
        }
        CHECK(row_ones == 1);
        CHECK(col_ones == 1);
      }
    }

  // index-arithmetic oracle: tau_{2,3} with d = 4 sends the column of
  // (e1,e3,e2,e4) to the row of (e1,e2,e3,e4) (0-based digits below)
  const LinMap t = flip_operator(4, 4, 2, 3);
  const long col = ((0 * 4 + 2) * 4 + 1) * 4 + 3;  // digits (0,2,1,3)
  const long row = ((0 * 4 + 1) * 4 + 2) * 4 + 3;  // digits (0,1,2,3)
  CHECK(t.at(static_cast<int>(row), static_cast<int>(col)) == 1);

  CHECK_THROWS_AS(flip_operator(2, 3, 2, 2), DimensionError);
  CHECK_THROWS_AS(flip_operator(2, 3, 0, 2), DimensionError);
  CHECK_THROWS_AS(flip_operator(2, 3, 1, 4), DimensionError);
}

TEST_CASE("kernel bases") {
  CHECK(kernel_basis(LinMap(4, 4)).dim() == 4);  // zero map on Q^4
  CHECK(kernel_basis(LinMap::identity(5)).dim() == 0);

  LinMap m(2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 2;
  m.at(1, 1) = 4;
  const SubspaceBasis k = kernel_basis(m);
  REQUIRE(k.dim() == 1);
  // hand row-reduction: kernel = span{(-2, 1)}
  CHECK(k.vectors[0][0] == -2);
  CHECK(k.vectors[0][1] == 1);
}

TEST_CASE("rank-nullity and solve over random matrices") {
  Rng rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const int r = 1 + static_cast<int>(rng.next() % 5), c = 1 + static_cast<int>(rng.next() % 5);
    const LinMap m = rng.matrix(r, c);
    CHECK(rank(m) + kernel_basis(m).dim() == c);
  }
  // solve_linear(id, b) = b
  std::vector<Rational> b{Rational(1), Rational(-2), Rational(7, 3)};
  auto x = solve_linear(LinMap::identity(3), b);
  REQUIRE(x.has_value());
  CHECK(*x == b);
  // inconsistent system
  LinMap m(2, 1);
  m.at(0, 0) = 1;
  m.at(1, 0) = 1;
  CHECK_FALSE(solve_linear(m, {Rational(1), Rational(2)}).has_value());
  // consistent underdetermined system: verify the residual exactly
  Rng rng2(99);
  for (int trial = 0; trial < 10; ++trial) {
    const LinMap a = rng2.matrix(3, 5);
    std::vector<Rational> xs;
    for (int i = 0; i < 5; ++i) xs.push_back(rng2.rational());
    std::vector<Rational> rhs(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 5; ++j) rhs[i] += a.at(i, j) * xs[j];
    auto sol = solve_linear(a, rhs);
    REQUIRE(sol.has_value());
    for (int i = 0; i < 3; ++i) {
      Rational acc;
      for (int j = 0; j < 5; ++j) acc += a.at(i, j) * (*sol)[j];
      CHECK(acc == rhs[i]);
    }
  }
}

TEST_CASE("subspace membership and quotient dimensions") {
  SubspaceBasis plane;
  plane.ambient_dim = 2;
  plane.vectors = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  SubspaceBasis null;
  null.ambient_dim = 2;
  CHECK(quotient_dim(plane, null) == 2);

  SubspaceBasis diag;
  diag.ambient_dim = 2;
  diag.vectors = {{Rational(1), Rational(1)}};
  CHECK(quotient_dim(plane, diag) == 1);
  CHECK(subspace_membership(plane, {Rational(3), Rational(-5)}));
  CHECK_FALSE(subspace_membership(diag, {Rational(1), Rational(2)}));

  // containment violation reports the offending basis vector
  SubspaceBasis line;
  line.ambient_dim = 2;
  line.vectors = {{Rational(1), Rational(0)}};
  CHECK_THROWS_WITH_AS(quotient_dim(line, diag), "quotient_dim containment failure at basis vector 0",
                       std::runtime_error);
}

TEST_CASE("image basis spans the column space") {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const LinMap m = rng.matrix(4, 6);
    const SubspaceBasis img = image_basis(m);
    CHECK(img.dim() == rank(m));
    IncrementalSpan span(4);
    for (const auto& v : img.vectors) CHECK(span.add(v));
    for (int j = 0; j < 6; ++j) {
      std::vector<Rational> col(4);
      for (int i = 0; i < 4; ++i) col[i] = m.at(i, j);
      CHECK(span.contains(col));
    }
  }
}

TEST_CASE("vectorization pairs with the kronecker identity") {
  Rng rng(8);
  const LinMap a = rng.matrix(3, 2), f = rng.matrix(2, 4), b = rng.matrix(4, 3);
  // vec(A F B) = (B^T x A) vec(F)
  const auto lhs = vectorize(mat_compose(a, mat_compose(f, b)));
  const LinMap op = mat_tensor(b.transposed(), a);
  const auto vf = vectorize(f);
  std::vector<Rational> rhs(lhs.size());
  for (int i = 0; i < op.rows(); ++i)
    for (int j = 0; j < op.cols(); ++j) rhs[i] += op.at(i, j) * vf[j];
  CHECK(lhs == rhs);
  CHECK(matrix_from_vec(vectorize(f), 2, 4) == f);
}

TEST_CASE("slot permutation on mixed dimensions") {
  // move slot 3 of (2,3,2) to the front
  const LinMap p = slot_permutation({2, 3, 2}, {2, 0, 1});
  LinMap e(2 * 3 * 2, 1);
  e.at((1 * 3 + 2) * 2 + 0, 0) = 1;  // (e1, f2, g0)
  const LinMap moved = mat_compose(p, e);
  CHECK(moved.at((0 * 2 + 1) * 3 + 2, 0) == 1);  // (g0, e1, f2)
}

TEST_CASE("tensor signature propagation") {
  LinMap f = LinMap::hom(3, 1, 2);
  CHECK(f.rows() == 3);
  CHECK(f.cols() == 9);
  CHECK(f.base_dim() == 3);
  LinMap g = LinMap::hom(3, 2, 1);
  const LinMap fg = mat_tensor(f, g);
  CHECK(fg.cod_arity() == 3);
  CHECK(fg.dom_arity() == 3);
  CHECK_THROWS_AS(LinMap(3, 9).set_signature(3, 2, 2), DimensionError);
}

TEST_CASE("kernel vectors annihilate and rank is transpose-invariant") {
  Rng rng(314159);
  for (int trial = 0; trial < 25; ++trial) {
    const int r = 1 + static_cast<int>(rng.next() % 6), c = 1 + static_cast<int>(rng.next() % 6);
    LinMap m = rng.matrix(r, c);
    // plant some dependency structure to exercise nontrivial kernels
    if (c >= 2 && trial % 2 == 0)
      for (int i = 0; i < r; ++i) m.at(i, c - 1) = m.at(i, 0) + m.at(i, c / 2);
    CHECK(rank(m) == rank(m.transposed()));
    const SubspaceBasis k = kernel_basis(m);
    for (const auto& v : k.vectors) {
      for (int i = 0; i < r; ++i) {
        Rational acc;
        for (int j = 0; j < c; ++j) acc += m.at(i, j) * v[j];
        CHECK(is_zero(acc));
      }
    }
    // free positions really behave like coordinates
    for (size_t a = 0; a < k.vectors.size(); ++a)
      for (size_t b = 0; b < k.vectors.size(); ++b)
        CHECK(k.vectors[a][k.free_positions[b]] == (a == b ? 1 : 0));
  }
}
