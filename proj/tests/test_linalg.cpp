#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hec/matrix.hpp"
#include "hec/numeric.hpp"
#include "hec/rng.hpp"

using namespace hec;

TEST_CASE("rational parse and format") {
  CHECK(rat_str(rat_parse("3/6")) == "1/2");
  CHECK(rat_parse("-4/2") == Rat(-2));
  CHECK(rat_str(Rat(7)) == "7");
  CHECK_THROWS(rat_parse("x"));
}

TEST_CASE("exact solve and inverse") {
  Mat<Rat> a(3, 3, {Rat(2), Rat(1), Rat(0), Rat(1), Rat(3), Rat(1), Rat(0), Rat(1), Rat(2)});
  Mat<Rat> inv = inverse(a);
  CHECK(inv * a == Mat<Rat>::identity(3));
  CHECK(det(a) == Rat(8));
}

TEST_CASE("exact nullspace") {
  // rank-1 matrix: x + 2y + 3z = 0
  Mat<Rat> a(1, 3, {Rat(1), Rat(2), Rat(3)});
  Mat<Rat> ns = nullspace(a);
  CHECK(ns.cols() == 2);
  for (int j = 0; j < ns.cols(); ++j) {
    Rat acc = ns(0, j) + 2 * ns(1, j) + 3 * ns(2, j);
    CHECK(sgn(acc) == 0);
  }
}

TEST_CASE("float svd nullspace agrees with exact rank") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 4 + static_cast<int>(rng.uniform_int(0, 2));
    Mat<Rat> a(n, n);
    // random rank-deficient: product of n x r and r x n
    int r = 1 + static_cast<int>(rng.uniform_int(0, n - 2));
    Mat<Rat> u(n, r), v(r, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < r; ++j) u(i, j) = rng.rational(3, 2);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < n; ++j) v(i, j) = rng.rational(3, 2);
    a = u * v;
    int exact_rank = rank(a);
    CHECK(rank_svd(convert<double>(a)) == exact_rank);
    CHECK(nullspace(a).cols() == n - exact_rank);
  }
}

TEST_CASE("cholesky and sym_eig") {
  MatD g(2, 2, {4.0, 1.0, 1.0, 3.0});
  MatD l = cholesky(g);
  CHECK(max_abs(l * l.transpose() - g) < 1e-12);
  SymEig e = sym_eig(g);
  CHECK(e.values[0] < e.values[1]);
  MatD recon(2, 2);
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) recon(i, j) += e.values[k] * e.vectors(i, k) * e.vectors(j, k);
  CHECK(max_abs(recon - g) < 1e-12);
}

TEST_CASE("expm matches series on nilpotent and rotation") {
  MatD nil(2, 2, {0.0, 1.0, 0.0, 0.0});
  MatD e = expm(nil);
  CHECK(e(0, 0) == doctest::Approx(1.0));
  CHECK(e(0, 1) == doctest::Approx(1.0));
  MatD rot(2, 2, {0.0, -1.0, 1.0, 0.0});
  MatD r = expm(rot * M_PI);
  CHECK(r(0, 0) == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(std::fabs(r(0, 1)) < 1e-9);
}

TEST_CASE("dual arithmetic differentiates") {
  // d/dx (x^2 / (1 + x)) at x = 2: (2x(1+x) - x^2)/(1+x)^2 = (12-4)/9
  Dual x(2.0, 1.0);
  Dual y = x * x / (Dual(1.0) + x);
  CHECK(y.v == doctest::Approx(4.0 / 3.0));
  CHECK(y.d == doctest::Approx(8.0 / 9.0));
  Dual s = sqrt(x);
  CHECK(s.d == doctest::Approx(0.5 / std::sqrt(2.0)));
}

TEST_CASE("dual solve differentiates a linear system") {
  // A(t) x = b with A = [[1, t],[0, 1]], b = (1,1): x = (1 - t, 1), dx/dt = (-1, 0)
  Mat<Dual> a(2, 2);
  a(0, 0) = Dual(1.0);
  a(0, 1) = Dual(0.5, 1.0);
  a(1, 1) = Dual(1.0);
  Vec<Dual> b{Dual(1.0), Dual(1.0)};
  Vec<Dual> x = solve(a, b);
  CHECK(x[0].v == doctest::Approx(0.5));
  CHECK(x[0].d == doctest::Approx(-1.0));
  CHECK(x[1].d == doctest::Approx(0.0));
}

TEST_CASE("rng determinism") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
}
