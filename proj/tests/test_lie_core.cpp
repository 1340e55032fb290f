#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hec/json_io.hpp"
#include "hec/lie_algebra.hpp"
#include "hec/rng.hpp"
#include "oracles.hpp"

using namespace hec;

namespace {

// sl2(R) with basis H, X, Y: [H,X] = 2Y, [H,Y] = 2X, [X,Y] = 2H.
template <class S>
LieAlgebra<S> sl2r() {
  LieAlgebra<S> g(3, {"H", "X", "Y"});
  g.set_bracket(0, 1, 2, S(2));
  g.set_bracket(0, 2, 1, S(2));
  g.set_bracket(1, 2, 0, S(2));
  return g;
}

LieAlgebra<Rat> heisenberg() {
  LieAlgebra<Rat> g(3, {"e1", "e2", "e3"});
  g.set_bracket(0, 1, 2, Rat(1));
  return g;
}

}  // namespace

TEST_CASE("sl2R brackets against the 2x2 commutator oracle") {
  // H = diag(1,-1), X = [[0,1],[-1,0]], Y = [[0,1],[1,0]]
  Mat<Rat> h(2, 2, {Rat(1), Rat(0), Rat(0), Rat(-1)});
  Mat<Rat> x(2, 2, {Rat(0), Rat(1), Rat(-1), Rat(0)});
  Mat<Rat> y(2, 2, {Rat(0), Rat(1), Rat(1), Rat(0)});
  LieAlgebra<Rat> g = algebra_from_matrices<Rat>({h, x, y}, {"H", "X", "Y"});
  CHECK(g.jacobi_residual() == 0.0);
  // matches the abstract constants
  LieAlgebra<Rat> ref = sl2r<Rat>();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) CHECK(g.c(i, j, k) == ref.c(i, j, k));
  // bracket(X, Y) = 2H
  Vec<Rat> b = g.bracket(g.basis_vector(1), g.basis_vector(2));
  CHECK(b[0] == Rat(2));
  CHECK(b[1] == Rat(0));
  CHECK(b[2] == Rat(0));
}

TEST_CASE("bracket antisymmetry and abelian") {
  auto g = sl2r<double>();
  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    VecD v(3);
    for (auto& c : v) c = rng.normal();
    CHECK(max_abs(g.bracket(v, v)) < 1e-14);
  }
  LieAlgebra<double> ab(2);
  CHECK(max_abs(ab.bracket(ab.basis_vector(0), ab.basis_vector(1))) == 0.0);
  CHECK_THROWS(g.bracket(VecD{1.0, 2.0}, VecD{1.0, 2.0, 3.0}));
}

TEST_CASE("killing form of sl2R") {
  auto g = sl2r<Rat>();
  Mat<Rat> b = killing_form(g);
  CHECK(b(0, 0) == Rat(8));
  CHECK(b(1, 1) == Rat(-8));
  CHECK(b(2, 2) == Rat(8));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(sgn(b(i, j)) == 0);
}

TEST_CASE("killing form is ad-invariant on random triples") {
  auto g = sl2r<double>();
  MatD b = killing_form(g);
  Rng rng(11);
  for (int t = 0; t < 1000; ++t) {
    VecD x(3), y(3), z(3);
    for (auto* v : {&x, &y, &z})
      for (auto& c : *v) c = rng.normal();
    double lhs = inner(x, b, g.bracket(y, z));
    double rhs = inner(g.bracket(x, y), b, z);
    CHECK(std::fabs(lhs - rhs) < 1e-12 * (1.0 + std::fabs(lhs)));
  }
}

TEST_CASE("abelian killing form vanishes") {
  LieAlgebra<Rat> ab(4);
  CHECK(max_abs(killing_form(ab)) == 0.0);
}

TEST_CASE("is_nilpotent") {
  CHECK(is_nilpotent(heisenberg()));
  CHECK(is_nilpotent(LieAlgebra<Rat>(5)));
  CHECK_FALSE(is_nilpotent(sl2r<Rat>()));
  // agreement with ad-nilpotency brute force on random nilpotents
  Rng rng(5);
  for (int t = 0; t < 15; ++t) {
    auto n = oracle::random_nilpotent(rng, 3 + static_cast<int>(rng.uniform_int(0, 3)));
    CHECK(is_nilpotent(n));
    for (int i = 0; i < n.dim(); ++i) {
      MatD p = MatD::identity(n.dim());
      MatD ad = n.ad_basis(i);
      for (int k = 0; k < n.dim(); ++k) p = p * ad;
      CHECK(max_abs(p) < 1e-9);
    }
  }
}

TEST_CASE("semidirect products") {
  SUBCASE("scalar action gives the solvable algebra") {
    LieAlgebra<Rat> u(1, {"e0"});
    LieAlgebra<Rat> n(2, {"e1", "e2"});
    Representation<Rat> theta;
    theta.target_dim = 2;
    theta.images = {Mat<Rat>::identity(2)};
    auto sd = semidirect(u, n, theta);
    CHECK(sd.total.dim() == 3);
    CHECK(sd.total.c(0, 1, 1) == Rat(1));
    CHECK(sd.total.c(0, 2, 2) == Rat(1));
    CHECK(sd.total.jacobi_residual() == 0.0);
  }
  SUBCASE("zero action is the direct sum") {
    auto s = direct_sum(sl2r<Rat>(), heisenberg());
    CHECK(s.dim() == 6);
    CHECK(s.jacobi_residual() == 0.0);
    // Killing form is block diagonal: B(u-part) as in sl2R, n-part zero
    Mat<Rat> b = killing_form(s);
    CHECK(b(0, 0) == Rat(8));
    for (int i = 3; i < 6; ++i)
      for (int j = 0; j < 6; ++j) CHECK(sgn(b(i, j)) == 0);
  }
  SUBCASE("non-derivation rejected with offending data") {
    LieAlgebra<Rat> u(1, {"A"});
    auto n = heisenberg();
    Representation<Rat> theta;
    theta.target_dim = 3;
    Mat<Rat> bad(3, 3);
    bad(2, 0) = Rat(1);  // e1 -> e3 alone is not a derivation of h3
    bad(0, 2) = Rat(1);
    theta.images = {bad};
    CHECK_THROWS_WITH_AS(semidirect(u, n, theta), doctest::Contains("not a derivation"), std::domain_error);
  }
  SUBCASE("homomorphism failure rejected") {
    auto u = sl2r<Rat>();
    LieAlgebra<Rat> n(2);
    Representation<Rat> theta = Representation<Rat>::zero(3, 2);
    theta.images[0](0, 0) = Rat(1);  // theta(H) = E11, theta(X)=theta(Y)=0: not a hom
    theta.images[0](1, 1) = Rat(-1);
    CHECK_THROWS_AS(semidirect(u, n, theta), std::domain_error);
  }
}

TEST_CASE("mean curvature vector") {
  SUBCASE("semisimple is unimodular") {
    auto g = sl2r<Rat>();
    Vec<Rat> h = mean_curvature_vector(g, Mat<Rat>::identity(3));
    CHECK(max_abs(h) == 0.0);
  }
  SUBCASE("2-dim solvable [e1,e2] = e2") {
    LieAlgebra<Rat> g(2, {"e1", "e2"});
    g.set_bracket(0, 1, 1, Rat(1));
    Vec<Rat> h = mean_curvature_vector(g, Mat<Rat>::identity(2));
    CHECK(h[0] == Rat(1));
    CHECK(h[1] == Rat(0));
  }
  SUBCASE("nilpotent is unimodular") {
    Vec<Rat> h = mean_curvature_vector(heisenberg(), Mat<Rat>::identity(3));
    CHECK(max_abs(h) == 0.0);
  }
}

TEST_CASE("derivation space of h3 has dimension 6") {
  // Der(h3): lower-triangular block structure; classical dimension 6
  Mat<Rat> ders = derivation_space(heisenberg());
  CHECK(ders.cols() == 6);
  for (int j = 0; j < ders.cols(); ++j) {
    CHECK(derivation_residual(heisenberg(), unvectorize(ders.col(j), 3)) == 0.0);
  }
}

TEST_CASE("json round trip preserves structure constants") {
  auto g = sl2r<Rat>();
  Json doc = algebra_to_json(g);
  auto back = algebra_from_json<Rat>(doc);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) CHECK(back.c(i, j, k) == g.c(i, j, k));
  CHECK(back.labels()[0] == "H");

  // rational coefficients serialize as strings
  LieAlgebra<Rat> h(2);
  h.set_bracket(0, 1, 0, rat_of(1, 3));
  Json hdoc = algebra_to_json(h);
  CHECK(hdoc["brackets"][0]["coeffs"]["0"].get<std::string>() == "1/3");
  auto hback = algebra_from_json<Rat>(hdoc);
  CHECK(hback.c(0, 1, 0) == rat_of(1, 3));

  // float backend reads the same document
  auto hf = algebra_from_json<double>(hdoc);
  CHECK(hf.c(0, 1, 0) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("json rejects jacobi violations") {
  Json doc;
  doc["dim"] = 3;
  doc["basis"] = {"a", "b", "c"};
  // [a,b] = c, [a,c] = a violates Jacobi
  doc["brackets"] = Json::array({Json{{"i", 0}, {"j", 1}, {"coeffs", {{"2", 1}}}},
                                 Json{{"i", 0}, {"j", 2}, {"coeffs", {{"0", 1}}}}});
  CHECK_THROWS_AS(algebra_from_json<Rat>(doc), std::domain_error);
}
