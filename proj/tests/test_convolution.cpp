#include <doctest.h>

#include "hombi/convolution.hpp"
#include "test_support.hpp"

using namespace hombi;
using namespace hombi::testing;

namespace {

LinMap random_alpha_commuting_endo(const HomBialgebra& b, Rng& rng) {
  GsComplex gs(b);
  return random_commutant_element(gs, 1, 1, rng);
}

bool satisfies_antipode_equations(const HomBialgebra& b, const LinMap& s) {
  const LinMap id = LinMap::identity(b.dim);
  const LinMap unit = mat_compose(b.eta, b.eps);
  return mat_compose(b.mu, mat_compose(mat_tensor(id, s), b.delta)) == unit &&
         mat_compose(b.mu, mat_compose(mat_tensor(s, id), b.delta)) == unit;
}

}  // namespace

TEST_CASE("convolution unit and hom-unitality") {
  Rng rng(101);
  for (const HomBialgebra& b : {build_taft(Rational(2)), build_group_algebra(4, 3)}) {
    const ConvolutionContext ctx = convolution_context(b);
    const LinMap e = convolution_unit(ctx);
    CHECK(convolve(ctx, e, e) == e);  // Delta(1) = 1 x 1 and eps(1) = 1
    for (int t = 0; t < 5; ++t) {
      const LinMap f = random_alpha_commuting_endo(b, rng);
      CHECK(convolve(ctx, f, e) == gamma(ctx, f));
      CHECK(convolve(ctx, e, f) == gamma(ctx, f));
    }
  }
}

TEST_CASE("convolution on the group bialgebra of Z/2") {
  const HomBialgebra b = build_group_algebra(2, 1);
  const ConvolutionContext ctx = convolution_context(b);
  const LinMap id = LinMap::identity(2);
  const LinMap sq = convolve(ctx, id, id);
  // (id * id)(e_g) = e_{2g} = e_0 by the hand expansion Delta(e_g) = e_g x e_g
  for (int g = 0; g < 2; ++g) {
    CHECK(sq.at(0, g) == 1);
    CHECK(is_zero(sq.at(1, g)));
  }
}

TEST_CASE("convolution algebra is hom-associative") {
  Rng rng(202);
  for (const HomBialgebra& b : {build_taft(Rational(2)), build_taft(Rational(1)), build_group_algebra(4, 3)}) {
    const ConvolutionContext ctx = convolution_context(b);
    for (int t = 0; t < 8; ++t) {
      // arbitrary (not necessarily commuting) endomorphisms
      LinMap f(b.dim, b.dim), g(b.dim, b.dim), h(b.dim, b.dim);
      for (int i = 0; i < b.dim; ++i)
        for (int j = 0; j < b.dim; ++j) {
          f.at(i, j) = rng.rational();
          g.at(i, j) = rng.rational();
          h.at(i, j) = rng.rational();
        }
      CHECK(convolve(ctx, convolve(ctx, f, g), gamma(ctx, h)) ==
            convolve(ctx, gamma(ctx, f), convolve(ctx, g, h)));
    }
  }
}

TEST_CASE("group algebra antipodes invert the group elements") {
  for (int n = 1; n <= 6; ++n) {
    const HomBialgebra b = build_group_algebra(n, n == 1 ? 0 : 1);  // alpha = id
    const AntipodeResult res = antipode_solve_full(b);
    REQUIRE(res.antipode.has_value());
    CHECK(res.unique());
    for (int g = 0; g < n; ++g)
      for (int r = 0; r < n; ++r)
        CHECK(res.antipode->at(r, g) == (r == ((n - g) % n) ? 1 : 0));
    CHECK(satisfies_antipode_equations(b, *res.antipode));
    const AxiomReport props = antipode_properties(b, *res.antipode);
    INFO(props.summary());
    CHECK(props.all_pass());
    // cocommutative, so the S^2 = id clause is part of the report
    bool saw_s2 = false;
    for (const auto& c : props.checks)
      if (c.name.find("S^2") != std::string::npos) saw_s2 = c.pass;
    CHECK(saw_s2);
  }
}

TEST_CASE("classical sweedler antipode via the linear solver") {
  const HomBialgebra b = build_taft(Rational(1));
  const AntipodeResult res = antipode_solve_full(b);
  REQUIRE(res.antipode.has_value());
  CHECK(res.unique());
  const LinMap& s = *res.antipode;
  // S(1) = 1, S(g) = g, S(x) = -gx, S(gx) = x
  LinMap expected(4, 4);
  expected.at(0, 0) = 1;
  expected.at(1, 1) = 1;
  expected.at(3, 2) = -1;
  expected.at(2, 3) = 1;
  CHECK(s == expected);
  CHECK(satisfies_antipode_equations(b, s));
  const AxiomReport props = antipode_properties(b, s);
  INFO(props.summary());
  CHECK(props.all_pass());  // not commutative or cocommutative: no S^2 clause
  // the square of the antipode is conjugation by g: diag(1, 1, -1, -1)
  LinMap s2 = mat_compose(s, s);
  LinMap conj = LinMap::identity(4);
  conj.at(2, 2) = -1;
  conj.at(3, 3) = -1;
  CHECK(s2 == conj);
  CHECK(mat_compose(s2, s2) == LinMap::identity(4));  // S has order four
}

TEST_CASE("twisted taft antipode: derived regression") {
  const HomBialgebra b = build_taft(Rational(2));
  const AntipodeResult res = antipode_solve_full(b);
  REQUIRE(res.antipode.has_value());
  CHECK(res.unique());
  // same table as the classical case
  LinMap expected(4, 4);
  expected.at(0, 0) = 1;
  expected.at(1, 1) = 1;
  expected.at(3, 2) = -1;
  expected.at(2, 3) = 1;
  CHECK(*res.antipode == expected);
  CHECK(satisfies_antipode_equations(b, *res.antipode));
  CHECK(antipode_properties(b, *res.antipode).all_pass());
}

TEST_CASE("degenerate twist: solvable but not unique") {
  const HomBialgebra b = build_taft(Rational(0));
  const AntipodeResult res = antipode_solve_full(b);
  REQUIRE(res.antipode.has_value());
  CHECK(res.solution_space_dim == 12);
  CHECK_FALSE(res.unique());
  CHECK(satisfies_antipode_equations(b, *res.antipode));
}

TEST_CASE("transpose of an antipode is an antipode of the dual") {
  for (const HomBialgebra& b : {build_group_algebra(4, 1), build_group_algebra(6, 1), build_taft(Rational(1)),
                                build_taft(Rational(2)), build_taft(Rational(0))}) {
    const AntipodeResult res = antipode_solve_full(b);
    REQUIRE(res.antipode.has_value());
    const HomBialgebra bd = dual(b);
    CHECK(satisfies_antipode_equations(bd, res.antipode->transposed()));
    if (res.unique()) {
      const AntipodeResult dres = antipode_solve_full(bd);
      REQUIRE(dres.antipode.has_value());
      CHECK(*dres.antipode == res.antipode->transposed());
    }
  }
}

TEST_CASE("antipode commutes with the structure twist") {
  for (const HomBialgebra& b : {build_taft(Rational(2)), build_group_algebra(4, 3)}) {
    const auto s = antipode_solve(b);
    REQUIRE(s.has_value());
    CHECK(mat_compose(*s, b.alpha) == mat_compose(b.alpha, *s));
  }
}
