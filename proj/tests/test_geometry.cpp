#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hec/homogeneous.hpp"
#include "hec/modules.hpp"
#include "hec/rng.hpp"
#include "oracles.hpp"

using namespace hec;

namespace {

template <class S>
LieAlgebra<S> sl2r() {
  LieAlgebra<S> g(3, {"H", "X", "Y"});
  g.set_bracket(0, 1, 2, S(2));
  g.set_bracket(0, 2, 1, S(2));
  g.set_bracket(1, 2, 0, S(2));
  return g;
}

// Sl2(R)/SO(2): isotropy = rotation generator X, complement = {H, Y}.
template <class S>
HomogeneousSpace<S> hyperbolic_plane() {
  auto g = sl2r<S>();
  return HomogeneousSpace<S>(g, span_from_indices<S>(3, {1}), span_from_indices<S>(3, {0, 2}), "Sl2R/SO2");
}

LieAlgebra<double> heisenberg() {
  LieAlgebra<double> g(3, {"e1", "e2", "e3"});
  g.set_bracket(0, 1, 2, 1.0);
  return g;
}

// rH^2 as the solvable group R |x R, [a, e] = e.
LieAlgebra<double> solv2() {
  LieAlgebra<double> g(2, {"a", "e"});
  g.set_bracket(0, 1, 1, 1.0);
  return g;
}

}  // namespace

TEST_CASE("space validation") {
  auto g = sl2r<Rat>();
  // {H, X} is not a subalgebra-complement split that is reductive for span{Y}:
  // isotropy must be a subalgebra.
  CHECK_THROWS(HomogeneousSpace<Rat>(g, span_from_indices<Rat>(3, {0, 1}), span_from_indices<Rat>(3, {2}), "bad"));
  // valid: hyperbolic plane
  auto sp = hyperbolic_plane<Rat>();
  CHECK(sp.dim() == 2);
  CHECK(sp.isotropy_dim() == 1);
}

TEST_CASE("Heisenberg group Ricci") {
  auto grp = lie_group_space(heisenberg(), "H3");
  MatD ric = ricci_form(grp, MatD::identity(3));
  CHECK(ric(0, 0) == doctest::Approx(-0.5));
  CHECK(ric(1, 1) == doctest::Approx(-0.5));
  CHECK(ric(2, 2) == doctest::Approx(0.5));
  CHECK(std::fabs(ric(0, 1)) < 1e-14);
  // scalar curvature matches Milnor's closed form (frame (e3,e1,e2): c = 1)
  double scal = scalar_curvature(curvature_data(grp), MatD::identity(3));
  CHECK(scal == doctest::Approx(oracle::milnor_scalar(0.0, 0.0, 1.0)));
}

TEST_CASE("hyperbolic plane as solvable group") {
  auto grp = lie_group_space(solv2(), "rh2");
  MatD ric = ricci_form(grp, MatD::identity(2));
  CHECK(ric(0, 0) == doctest::Approx(-1.0));
  CHECK(ric(1, 1) == doctest::Approx(-1.0));
  CHECK(std::fabs(ric(0, 1)) < 1e-14);
  auto rep = einstein_residual(grp, MatD::identity(2));
  CHECK(rep.residual < 1e-14);
  CHECK(rep.c == doctest::Approx(-1.0));
}

TEST_CASE("symmetric space Sl2R/SO2 with Killing metric") {
  auto sp = hyperbolic_plane<double>();
  MatD b = killing_form(sp.algebra());
  // metric = B restricted to the complement (positive definite on p)
  MatD g(2, 2);
  g(0, 0) = b(0, 0);
  g(1, 1) = b(2, 2);
  g(0, 1) = g(1, 0) = b(0, 2);
  MatD ric = ricci_form(sp, g);
  CHECK(max_abs(ric - (-0.5) * g) < 1e-12);
  auto rep = einstein_residual(sp, g);
  CHECK(rep.residual < 1e-13);
  CHECK(rep.c == doctest::Approx(-0.5));  // Ric = -(1/2)B = -(1/2) g
  // Koszul oracle agrees
  MatD koszul = oracle::ricci_koszul(sp, g);
  CHECK(max_abs(koszul - ric) < 1e-10);
}

TEST_CASE("structure-constant Ricci equals Koszul oracle on random instances") {
  Rng rng(2024);
  int tested = 0;
  // random metric Lie groups: nilpotent, solvable extensions, sl2R, and sums
  while (tested < 60) {
    long kind = rng.uniform_int(0, 3);
    LieAlgebra<double> g;
    if (kind == 0) {
      g = oracle::random_nilpotent(rng, 3 + static_cast<int>(rng.uniform_int(0, 3)));
    } else if (kind == 1) {
      // solvable: R acting on a random nilpotent by a random derivation combo
      auto n = oracle::random_nilpotent(rng, 2 + static_cast<int>(rng.uniform_int(0, 2)));
      Mat<double> ders = derivation_space(n);
      Mat<double> d(n.dim(), n.dim());
      for (int j = 0; j < ders.cols(); ++j) {
        double c = rng.normal();
        d += c * unvectorize(ders.col(j), n.dim());
      }
      LieAlgebra<double> u(1);
      Representation<double> theta;
      theta.target_dim = n.dim();
      theta.images = {d};
      g = semidirect(u, n, theta, 1e-8).total;
    } else if (kind == 2) {
      g = sl2r<double>();
    } else {
      g = direct_sum(sl2r<double>(), oracle::random_nilpotent(rng, 2));
    }
    MatD metric = oracle::random_metric(rng, g.dim());
    auto grp = lie_group_space(g, "rnd");
    MatD ric = ricci_form(grp, metric);
    MatD kos = oracle::ricci_koszul(grp, metric);
    CHECK(max_abs(ric - kos) < 1e-8 * std::max(1.0, max_abs(ric)));
    ++tested;
  }
  // homogeneous (nontrivial isotropy): hyperbolic plane with random invariant metrics
  auto sp = hyperbolic_plane<double>();
  auto forms = invariant_form_space(sp);
  CHECK(forms.size() == 1);
  for (int t = 0; t < 5; ++t) {
    double s = std::exp(rng.normal());
    MatD g = s * forms[0];
    if (!is_positive_definite(g)) g *= -1.0;
    MatD ric = ricci_form(sp, g);
    MatD kos = oracle::ricci_koszul(sp, g);
    CHECK(max_abs(ric - kos) < 1e-10);
  }
}

TEST_CASE("Ricci is basis-independent") {
  Rng rng(99);
  auto g = sl2r<double>();
  MatD metric = oracle::random_metric(rng, 3);
  auto grp = lie_group_space(g, "sl2r");
  MatD ric = ricci_form(grp, metric);
  for (int t = 0; t < 10; ++t) {
    // random change of complement basis P: metric -> P^T G P, Ric -> P^T Ric P
    MatD p(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) p(i, j) = rng.normal();
    if (std::fabs(ScalarOps<double>::to_double(det(p))) < 0.1) continue;
    // rebuild the space with transformed complement span
    HomogeneousSpace<double> sp2(g, Mat<double>(3, 0), p, "rot");
    MatD g2 = p.transpose() * metric * p;
    MatD ric2 = ricci_form(sp2, g2);
    CHECK(max_abs(ric2 - p.transpose() * ric * p) < 1e-9);
  }
}

TEST_CASE("Ricci scaling equivariance") {
  Rng rng(123);
  auto grp = lie_group_space(heisenberg(), "h3");
  auto cd = curvature_data(grp);
  for (int t = 0; t < 10; ++t) {
    MatD g = oracle::random_metric(rng, 3);
    double s = std::exp(rng.normal());
    MatD ric1 = ricci_form(cd, g);
    MatD ric2 = ricci_form(cd, s * g);
    // Ricci form is scale-invariant; the operator scales by 1/s
    CHECK(max_abs(ric2 - ric1) < 1e-10 * std::max(1.0, max_abs(ric1)));
  }
}

TEST_CASE("einstein residual detects non-Einstein metrics") {
  auto grp = lie_group_space(heisenberg(), "h3");
  auto rep = einstein_residual(grp, MatD::identity(3));
  CHECK(rep.residual > 0.1);  // Heisenberg is never Einstein
  LieAlgebra<double> ab(3);
  auto flat = einstein_residual(lie_group_space(ab, "r3"), MatD::identity(3));
  CHECK(flat.residual == 0.0);
  CHECK(flat.c == 0.0);
}

TEST_CASE("scalar curvature matches Milnor closed form on sl2R Milnor frames") {
  // Milnor frame for sl2(R): [e2,e3] = a e1, [e3,e1] = b e2, [e1,e2] = c e3
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    double a = rng.uniform(0.2, 2.0), b = -rng.uniform(0.2, 2.0), c = rng.uniform(0.2, 2.0);
    LieAlgebra<double> g(3);
    g.set_bracket(1, 2, 0, a);
    g.set_bracket(2, 0, 1, b);
    g.set_bracket(0, 1, 2, c);
    auto grp = lie_group_space(g, "milnor");
    double scal = scalar_curvature(curvature_data(grp), MatD::identity(3));
    CHECK(scal == doctest::Approx(oracle::milnor_scalar(a, b, c)).epsilon(1e-10));
  }
}

TEST_CASE("ricci_flat_isotropy matches full Ricci for isotropy-fixed directions") {
  // Heisenberg center direction
  auto grp = lie_group_space(heisenberg(), "h3");
  auto cd = curvature_data(grp);
  VecD e3{0.0, 0.0, 1.0};
  double entry = ricci_flat_isotropy(grp, cd, MatD::identity(3), e3, e3);
  CHECK(entry == doctest::Approx(0.5));

  // x with ad_m x = 0 and x orthogonal to the commutator: abelian factor
  LieAlgebra<double> s = direct_sum(heisenberg(), LieAlgebra<double>(1));
  auto grp2 = lie_group_space(s, "h3+R");
  auto cd2 = curvature_data(grp2);
  VecD x(4, 0.0);
  x[3] = 1.0;
  CHECK(ricci_flat_isotropy(grp2, cd2, MatD::identity(4), x, x) == doctest::Approx(0.0));

  // error paths
  auto solv = lie_group_space(solv2(), "solv");
  auto cds = curvature_data(solv);
  VecD v{1.0, 0.0};
  CHECK_THROWS_WITH_AS(ricci_flat_isotropy(solv, cds, MatD::identity(2), v, v), "NotUnimodular", std::domain_error);
}

TEST_CASE("einstein residual form is isotropy-invariant") {
  Rng rng(17);
  auto sp = hyperbolic_plane<double>();
  auto forms = invariant_form_space(sp);
  MatD g = invariant_positive_form(forms, rng);
  auto rep = einstein_residual(sp, g);
  for (int z = 0; z < sp.isotropy_dim(); ++z) {
    MatD a = sp.isotropy_action(z);
    CHECK(max_abs(a.transpose() * rep.residual_form + rep.residual_form * a) < 1e-10);
  }
}
