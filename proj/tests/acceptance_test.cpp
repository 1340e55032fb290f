// Acceptance suite: one pass/fail line per criterion, at the stated
// tolerances. Criteria 2 and 5 contain sub-checks that fail by design
// against claims as printed in the published analysis; the analysis is given
// inline and recorded in the project notes. Exit code is nonzero if any
// sub-check fails.

#include <chrono>
#include <iostream>
#include <sstream>

#include "hec/report.hpp"
#include "oracles.hpp"

using namespace hec;

namespace {

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

void report(const std::string& id, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << id << ": " << detail << "\n";
  if (!pass) ++failures;
}

void info(const std::string& id, const std::string& detail) {
  std::cout << "[info] " << id << ": " << detail << "\n";
}

// ---------------------------------------------------------------- criterion 1
void criterion1() {
  Timer timer;
  auto c = build_case("Sl2C/U1", {});
  Rng rng(101);
  int bad = 0;
  for (int t = 0; t < 200; ++t) {
    Rat a = rng.rational_nonzero(4, 3), b = rng.rational_nonzero(4, 3), d = rng.rational(4, 3),
        e = rng.rational_nonzero(4, 3);
    if (sl2c_offdiag_computed(c, a, b, d, e) != sl2c_offdiag_formula(a, b, d, e)) ++bad;
  }
  std::ostringstream os;
  os << "Ricci(h^-1 Y1, h^-1 X2) equals 4d((a^2-e^2)^2+a^2(b^2+d^2))a^-3 b^-2 e^-2 exactly at " << 200 - bad
     << "/200 random rational points [" << timer.seconds() << " s]";
  report("criterion 1 (Lemma 3.4 reproduction, exact backend)", bad == 0 && timer.seconds() < 5.0, os.str());
}

// ---------------------------------------------------------------- criterion 2
void criterion2() {
  Timer timer;
  auto c = build_case("Sl2RxSl2R-D11-theta", {});
  Rng rng(102);
  int printed_bad = 0, corrected_bad = 0;
  for (int t = 0; t < 50; ++t) {
    Rat a = rng.rational_nonzero(3, 2), b = rng.rational_nonzero(3, 2), d = rng.rational_nonzero(3, 2);
    Rat e = Rat(1) / (a * a * b * b);
    auto ent = d11_rtheta_entries(c, a, b, d, e);
    Rat combo = ent.r11 + 2 * ent.r44 + 2 * (a / d) * ent.r24;
    if (ent.r11 != d11_r11_printed(a, b, d, e) || combo != d11_combo_printed(a, b, d, e)) ++printed_bad;
    if (ent.r11 != d11_r11_closed_form(a, b, d, e) || combo != d11_combo_closed_form(a, b, d, e)) ++corrected_bad;
  }
  {
    std::ostringstream os;
    os << "computed r11 and combination match the printed expressions at " << 50 - printed_bad
       << "/50 random rational points (det h = 1)";
    if (printed_bad)
      os << " -- the printed forms are misprinted: the (b^2-d^2)^2 term lacks its e^4 weight and the "
            "combination carries an extra -4a^4b^2e^2; dual-route-verified corrected forms match "
         << 50 - corrected_bad << "/50 exactly (see notes)";
    report("criterion 2a (D11 theta-case identity vs printed expressions)", printed_bad == 0, os.str());
    std::ostringstream os2;
    os2 << "computed entries equal the corrected closed forms e^4(a^4+(b^2-d^2)^2)/2 + a^2d^2(e^4-16b^4) and "
           "(a^2-b^2+d^2)^2 e^4/2 + 16 a^4 b^4 at "
        << 50 - corrected_bad << "/50 points";
    info("criterion 2a'", os2.str());
  }
  // sign certificate on a >= 10^4-node rational grid with det h = 1
  SweepSpec spec;
  spec.axes = {"a", "b", "d"};
  auto axis = [](int n) {
    std::vector<Rat> v;
    for (int i = 1; i <= n; ++i) v.push_back(rat_of(i, (n + 2) / 2));
    return v;
  };
  std::vector<Rat> daxis{Rat(0)};
  for (int i = 1; i <= 11; ++i) {
    daxis.push_back(rat_of(i, 4));
    daxis.push_back(rat_of(-i, 4));
  }
  spec.grids = {axis(22), axis(22), daxis};
  auto rep = d11_sign_sweep(spec);
  std::ostringstream os;
  os << rep.nodes << " rational nodes: r11 < 0 at " << rep.first_negative << ", combination < 0 at "
     << rep.second_negative << ", both negative at " << rep.both_negative << " [" << timer.seconds() << " s]";
  report("criterion 2b (D11 theta-case sign certificate, never both negative)",
         rep.both_negative == 0 && rep.nodes >= 10000 && timer.seconds() < 30.0, os.str());
}

// ---------------------------------------------------------------- criterion 3
void criterion3() {
  Timer timer;
  int rows = 0, instances = 0, mismatches = 0;
  std::string first_bad;
  for (const auto& rec : catalog()) {
    if (!rec.build) continue;
    ++rows;
    auto samples = rec.param_samples ? rec.param_samples(7) : std::vector<std::vector<long>>{{}};
    int per_family = 0;
    for (const auto& p : samples) {
      if (rec.nparams > 0 && per_family >= 10) break;
      ++per_family;
      ++instances;
      BuiltCase c = rec.build(p);
      if (c.expected.empty()) continue;
      auto audit = module_signature_audit(c, 1);
      if (!audit.match) {
        ++mismatches;
        if (first_bad.empty()) first_bad = rec.name + ": " + audit.detail;
      }
    }
  }
  std::ostringstream os;
  os << rows << " rows, " << instances << " built instances (>= 10 coprime parameter choices per family), "
     << mismatches << " signature mismatches" << (first_bad.empty() ? "" : "; first: " + first_bad) << " ["
     << timer.seconds() << " s]";
  report("criterion 3 (classification-table module audit)", mismatches == 0 && timer.seconds() < 60.0, os.str());
}

// ---------------------------------------------------------------- criterion 4
void criterion4() {
  Timer timer;
  int checked = 0, wrong = 0;
  std::string first_bad;
  auto expect = [&](const std::string& name, std::vector<long> p, CartanVerdict want) {
    ++checked;
    auto got = cartan_orthogonality_test(build_case(name, p), 1).verdict;
    if (got != want) {
      ++wrong;
      if (first_bad.empty()) first_bad = name;
    }
  };
  // rows resolved by the inequivalent-modules criterion
  for (auto name : {"SU21/SU2", "Sp11/Sp1U1", "SU21/T2", "SU31/SU3", "Sp11/Sp1", "SO32/SO3"})
    expect(name, {}, CartanVerdict::NoEinstein);
  // equal-rank dim-8 rows
  expect("Sp2R/T2", {}, CartanVerdict::NoEinstein);
  expect("Sp11/T2", {}, CartanVerdict::NoEinstein);
  for (auto pq : std::vector<std::vector<long>>{{1, 1}, {-1, 1}, {1, 2}, {2, 3}, {3, 5}})
    expect("Sl2RxSl2R/Dpq", pq, CartanVerdict::NoEinstein);
  for (auto pq : std::vector<std::vector<long>>{{1, 1}, {1, 2}, {2, 3}, {1, 5}})
    expect("SU21/Dpq", pq, CartanVerdict::NoEinstein);
  for (auto pq : std::vector<std::vector<long>>{{1, 2}, {-1, 1}}) expect("SU21xSl2R/Dpq", pq, CartanVerdict::NoEinstein);
  for (auto t : std::vector<std::vector<long>>{{1, 1, 1}, {1, 2, 3}, {-1, 1, 2}})
    expect("Sl2R3/DabcT2", t, CartanVerdict::NoEinstein);
  for (auto t : std::vector<std::vector<long>>{{1, 1, 2}, {1, 2, 3}}) expect("Sl2R3/DaU1", t, CartanVerdict::NoEinstein);
  // the stated exceptions
  expect("Sl2C/U1", {}, CartanVerdict::Inconclusive);
  expect("SU21/Dpq", {0, 1}, CartanVerdict::Inconclusive);
  expect("Sl3R/SO2", {}, CartanVerdict::Inconclusive);
  expect("SO41/SO3", {}, CartanVerdict::Inconclusive);
  // rows not resolved by the criterion must stay inconclusive
  expect("Sl2RxSl2C/Dpq", {1, 2}, CartanVerdict::Inconclusive);
  expect("Sl2RxSl2C/U1", {}, CartanVerdict::Inconclusive);
  expect("Sl2RxSl2R2/Dpq", {1, 2}, CartanVerdict::Inconclusive);
  expect("Sl2RxSU21/SU2", {}, CartanVerdict::Inconclusive);
  std::ostringstream os;
  os << checked << " verdicts checked, " << wrong << " wrong" << (first_bad.empty() ? "" : "; first: " + first_bad)
     << " [" << timer.seconds() << " s]";
  report("criterion 4 (non-existence verdict parity)", wrong == 0, os.str());
}

// ---------------------------------------------------------------- criterion 5
void criterion5() {
  Timer timer;
  {
    auto c = build_case("SU21/Dpq", {0, 1});
    auto rep = ricci_sign_certificate(c, 1000, 105);
    std::ostringstream os;
    os << "min Ric(Y,Y) over " << rep.samples << " sampled invariant metrics = " << rep.min_value;
    if (!(rep.min_value >= -1e-12))
      os << " -- the published positivity claim fails on metrics coupling the equivalent modules q1 ~ p1 "
            "(their rotation orientations are opposite, so the coupling is by reflections and ad(q0) is "
            "not skew); the negative values are genuine (group-invariance 1e-15, two independent "
            "curvature routes agree); an Einstein search over the same family stays bounded away from "
            "zero, so the non-existence verdict itself is corroborated (see notes)";
    report("criterion 5a (Ricci-sign certificate on SU(2,1)/D01U(1) as stated)", rep.min_value >= -1e-12, os.str());
  }
  {
    int bad = 0;
    double worst = 0.0;
    for (auto pq : std::vector<std::vector<long>>{{1, 2}, {1, 3}, {2, 3}, {-1, 2}, {1, 4}}) {
      auto rep = ricci_sign_certificate(build_case("Sl2RxSl2C/Dpq", pq), 200, 105);
      if (!rep.premise_ok || rep.min_value < -1e-12) ++bad;
      worst = std::min(worst, rep.min_value);
    }
    std::ostringstream os;
    os << "five sampled (p,q) with |p| != |q|, 200 metrics each (1000 total): skew premise holds, min Ric(Y,Y) = "
       << worst << " [" << timer.seconds() << " s]";
    report("criterion 5b (Ricci-sign certificate on (Sl2R x Sl2C)/Dpq, p != q)", bad == 0, os.str());
  }
}

// ---------------------------------------------------------------- criterion 6
void criterion6() {
  Timer timer;
  Rng rng(106);
  int tested = 0;
  double worst = 0.0;
  // mix of random metric Lie groups (unimodular and not) and catalog
  // homogeneous spaces with random invariant metrics
  while (tested < 80) {
    LieAlgebra<double> g;
    long kind = rng.uniform_int(0, 3);
    if (kind == 0) {
      g = oracle::random_nilpotent(rng, 3 + static_cast<int>(rng.uniform_int(0, 3)));
    } else if (kind == 1) {
      auto n = oracle::random_nilpotent(rng, 2 + static_cast<int>(rng.uniform_int(0, 3)));
      MatD ders = derivation_space(n);
      MatD d(n.dim(), n.dim());
      for (int j = 0; j < ders.cols(); ++j) d += rng.normal() * unvectorize(ders.col(j), n.dim());
      LieAlgebra<double> u(1);
      Representation<double> theta;
      theta.target_dim = n.dim();
      theta.images = {d};
      try {
        g = semidirect(u, n, theta, 1e-8).total;
      } catch (...) {
        continue;
      }
    } else if (kind == 2) {
      g = LieAlgebra<double>(3);
      g.set_bracket(1, 2, 0, rng.uniform(0.3, 2.0));
      g.set_bracket(2, 0, 1, rng.uniform(-2.0, -0.3));
      g.set_bracket(0, 1, 2, rng.uniform(0.3, 2.0));
    } else {
      g = convert_algebra<double>(build_case("Sl2C", {}).space.algebra());
    }
    if (g.dim() > 6) continue;
    MatD metric = oracle::random_metric(rng, g.dim());
    auto grp = lie_group_space(g, "inst");
    worst = std::max(worst, max_abs(ricci_form(grp, metric) - oracle::ricci_koszul(grp, metric)));
    ++tested;
  }
  // homogeneous instances with isotropy
  for (auto name : {"Sl2C/U1", "SU21/SU2", "Sl2R/SO2", "Sl2RxSl2R/Dpq"}) {
    for (int t = 0; t < 5; ++t) {
      auto c = build_case(name, name == std::string("Sl2RxSl2R/Dpq") ? std::vector<long>{1, 2} : std::vector<long>{});
      auto sp = convert_space<double>(c.space);
      auto forms = invariant_form_space(sp);
      MatD g = invariant_positive_form(forms, rng);
      worst = std::max(worst, max_abs(ricci_form(sp, g) - oracle::ricci_koszul(sp, g)));
      ++tested;
    }
  }
  std::ostringstream os;
  os << tested << " instances (groups and homogeneous spaces, unimodular and non-unimodular), max entry "
     << "difference " << worst << " [" << timer.seconds() << " s]";
  report("criterion 6 (structure-constant Ricci vs Koszul oracle)", worst < 1e-8 && tested >= 100, os.str());
}

// ---------------------------------------------------------------- criterion 7
void criterion7() {
  Timer timer;
  bool ok = true;
  std::ostringstream os;
  for (auto name : {"Sl2R/SO2", "SU21/U2"}) {
    SearchProblem p = make_search_problem(build_case(name, {}), 107, 10);
    auto res = einstein_search(p);
    bool conv = !res.empty() && res.front().status == SearchStatus::Converged && res.front().residual < 1e-10 &&
                res.front().c < 0;
    ok = ok && conv;
    os << name << ": " << (conv ? "converged" : "FAILED") << " (residual "
       << (res.empty() ? -1.0 : res.front().residual) << ", c " << (res.empty() ? 0.0 : res.front().c) << "); ";
  }
  double worst = 0.0;
  for (auto name : {"Sl2R/SO2", "Sl2C/SU2", "SU21/U2", "SO41/SO4"}) {
    auto c = build_case(name, {});
    auto sp = convert_space<double>(c.space);
    MatD b = killing_form(sp.algebra());
    const int m = sp.dim();
    MatD g(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) g(i, j) = inner(sp.complement().col(i), b, sp.complement().col(j));
    worst = std::max(worst, max_abs(ricci_form(sp, g) - (-0.5) * g));
  }
  os << "max |Ric + B/2| over the encoded symmetric pairs = " << worst << " [" << timer.seconds() << " s]";
  report("criterion 7 (symmetric-space sanity)", ok && worst < 1e-10, os.str());
}

// ---------------------------------------------------------------- criterion 8
void criterion8() {
  Timer timer;
  // sl2(C) tautological theta on R^4 with the ordered-basis inner product
  auto grp = build_case("Sl2C", {});
  LieAlgebra<Rat> n(4);
  Representation<Rat> theta;
  theta.target_dim = 4;
  auto mk = [](std::initializer_list<long> re, std::initializer_list<long> im) {
    Mat<Rat> m(4, 4);
    auto r = re.begin();
    auto i = im.begin();
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        Rat x(*r++), y(*i++);
        m(2 * a, 2 * b) = x;
        m(2 * a + 1, 2 * b + 1) = x;
        m(2 * a, 2 * b + 1) = -y;
        m(2 * a + 1, 2 * b) = y;
      }
    return m;
  };
  theta.images = {mk({0, 0, 0, 0}, {1, 0, 0, -1}), mk({1, 0, 0, -1}, {0, 0, 0, 0}),
                  mk({0, 1, 1, 0}, {0, 0, 0, 0}),  mk({0, 0, 0, 0}, {0, 1, -1, 0}),
                  mk({0, 1, -1, 0}, {0, 0, 0, 0}), mk({0, 0, 0, 0}, {0, 1, 1, 0})};
  auto prod = semidirect(grp.space.algebra(), n, theta);
  auto data = make_structure_data(prod, Mat<Rat>::identity(6), Mat<Rat>(6, 0), Mat<Rat>::identity(4),
                                  lie_group_space(grp.space.algebra(), "U"), Mat<Rat>::identity(6));
  auto rep = moment_map_residual(data);
  // planted non-normal central action
  LieAlgebra<Rat> u1(1);
  LieAlgebra<Rat> n2(2);
  Representation<Rat> bad;
  bad.target_dim = 2;
  Mat<Rat> nn(2, 2);
  nn(0, 1) = Rat(1);
  bad.images = {nn};
  auto bad_data = make_structure_data(semidirect(u1, n2, bad), Mat<Rat>(1, 0), Mat<Rat>::identity(1),
                                      Mat<Rat>::identity(2), lie_group_space(u1, "U"), Mat<Rat>::identity(1));
  auto bad_rep = moment_map_residual(bad_data);
  std::ostringstream os;
  os << "tautological action residual " << rep.residual << " (exact zero of the moment map); planted non-normal "
     << "central action flagged with residual " << bad_rep.residual << " [" << timer.seconds() << " s]";
  report("criterion 8 (moment-map check)", rep.residual < 1e-12 && bad_rep.residual > 0.1, os.str());
}

// ---------------------------------------------------------------- criterion 9
void criterion9() {
  Timer timer;
  // rank-one reduction identity on 200 random admissible instances
  Rng rng(109);
  int done = 0, attempts = 0;
  double worst = 0.0;
  while (done < 200 && attempts < 4000) {
    ++attempts;
    int dn = 2 + static_cast<int>(rng.uniform_int(0, 2));
    auto n = oracle::random_nilpotent(rng, dn);
    MatD ders = derivation_space(n);
    MatD da(dn, dn);
    for (int j = 0; j < ders.cols(); ++j) da += rng.normal() * unvectorize(ders.col(j), dn);
    if (std::fabs(ScalarOps<double>::to_double(trace(da))) < 0.3) continue;
    MatD dx = da * da;
    double tr = ScalarOps<double>::to_double(trace(dx)) / dn;
    for (int i = 0; i < dn; ++i) dx(i, i) -= tr;
    if (derivation_residual(n, dx) > 1e-9) continue;
    LieAlgebra<double> u(2);
    Representation<double> theta;
    theta.target_dim = dn;
    theta.images = {da, dx};
    LieAlgebra<double> g;
    try {
      g = semidirect(u, n, theta, 1e-8).total;
    } catch (...) {
      continue;
    }
    auto grp = lie_group_space(g, "solv");
    MatD gram = MatD::identity(2 + dn);
    for (int i = 0; i < dn; ++i) gram(2 + i, 2 + i) = std::exp(0.3 * rng.normal());
    VecD x(2 + dn, 0.0);
    x[1] = 1.0;
    try {
      auto rep = rank_one_reduction(grp, gram, x);
      worst = std::max(worst, rep.identity_residual);
      ++done;
    } catch (const std::domain_error&) {
      continue;
    }
  }
  std::ostringstream os1;
  os1 << done << "/200 admissible instances, worst identity residual " << worst;
  bool ok1 = done == 200 && worst < 1e-10;

  // weight decomposition audits on the theta-equipped instances
  double off = 0.0, tl = 0.0, cross = 0.0;
  {
    // R acting on h3 (CH2 presentation)
    LieAlgebra<double> u(1);
    LieAlgebra<double> h3(3);
    h3.set_bracket(0, 1, 2, 1.0);
    Representation<double> theta;
    theta.target_dim = 3;
    MatD d(3, 3);
    d(0, 0) = d(1, 1) = 0.5;
    d(2, 2) = 1.0;
    theta.images = {d};
    auto data = make_structure_data(semidirect(u, h3, theta), MatD(1, 0), MatD::identity(1), MatD::identity(3),
                                    lie_group_space(u, "U"), MatD::identity(1));
    auto w = weight_decomposition(data);
    off = std::max(off, w.offblock_residual);
    tl = std::max(tl, w.traceless_residual);
  }
  {
    // sl2C + R on R^4 (tautological + center scaling)
    auto grp2 = build_case("Sl2C", {});
    auto u = direct_sum(convert_algebra<double>(grp2.space.algebra()), LieAlgebra<double>(1, {"A"}));
    LieAlgebra<double> n4(4);
    Representation<double> theta;
    theta.target_dim = 4;
    auto mkd = [](std::initializer_list<double> re, std::initializer_list<double> im) {
      MatD m(4, 4);
      auto r = re.begin();
      auto i = im.begin();
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          double x = *r++, y = *i++;
          m(2 * a, 2 * b) = x;
          m(2 * a + 1, 2 * b + 1) = x;
          m(2 * a, 2 * b + 1) = -y;
          m(2 * a + 1, 2 * b) = y;
        }
      return m;
    };
    theta.images = {mkd({0, 0, 0, 0}, {1, 0, 0, -1}), mkd({1, 0, 0, -1}, {0, 0, 0, 0}),
                    mkd({0, 1, 1, 0}, {0, 0, 0, 0}),  mkd({0, 0, 0, 0}, {0, 1, -1, 0}),
                    mkd({0, 1, -1, 0}, {0, 0, 0, 0}), mkd({0, 0, 0, 0}, {0, 1, 1, 0}),
                    MatD::identity(4)};
    auto uk = HomogeneousSpace<double>(u, span_from_indices<double>(7, {0}),
                                       span_from_indices<double>(7, {1, 2, 3, 4, 5, 6}), "U/K");
    auto data = make_structure_data(semidirect(u, n4, theta), span_from_indices<double>(7, {0, 1, 2, 3, 4, 5}),
                                    span_from_indices<double>(7, {6}), MatD::identity(4), uk, MatD::identity(6));
    auto w = weight_decomposition(data);
    off = std::max(off, w.offblock_residual);
    tl = std::max(tl, w.traceless_residual);
    MatD ct = c_theta_form(data);
    for (int i = 0; i < 5; ++i) cross = std::max(cross, std::fabs(ct(i, 5)));
  }
  std::ostringstream os2;
  os2 << "; weight blocks: off-block " << off << ", traceless " << tl << ", C_theta center cross " << cross;
  bool ok2 = off < 1e-10 && tl < 1e-10 && cross < 1e-10;

  // nilsoliton values
  LieAlgebra<Rat> ab(4);
  auto flat = nilsoliton_residual(ab, Mat<Rat>::identity(4));
  LieAlgebra<Rat> h3(3);
  h3.set_bracket(0, 1, 2, Rat(1));
  auto sol = nilsoliton_residual(h3, Mat<Rat>::identity(3));
  bool ok3 = flat.residual == 0.0 && flat.c == Rat(0) && sol.residual < 1e-14 && sol.c == rat_of(-3, 2) &&
             sol.derivation(2, 2) == Rat(2);
  std::ostringstream os3;
  os3 << "; nilsoliton: abelian (c, D) = (0, 0), Heisenberg c = " << rat_str(sol.c)
      << " with D = diag(1,1,2) (derivation-space oracle)";
  report("criterion 9 (structural audits)", ok1 && ok2 && ok3,
         os1.str() + os2.str() + os3.str() + " [" + std::to_string(timer.seconds()) + " s]");
}

// --------------------------------------------------------------- criterion 10
void criterion10() {
  Timer timer;
  VerifyOptions opt;
  opt.seed = 42;
  opt.pmax = 5;
  opt.search_starts = 6;
  auto r1 = verify_paper(opt);
  auto r2 = verify_paper(opt);
  std::string j1 = paper_report_json(r1).dump(2);
  std::string j2 = paper_report_json(r2).dump(2);
  std::string m1 = paper_report_markdown(r1);
  std::string m2 = paper_report_markdown(r2);
  std::ostringstream os;
  os << "two verify-paper runs with seed 42: json " << (j1 == j2 ? "identical" : "DIFFER") << " (" << j1.size()
     << " bytes), markdown " << (m1 == m2 ? "identical" : "DIFFER") << " [" << timer.seconds() << " s]";
  report("criterion 10 (determinism)", j1 == j2 && m1 == m2, os.str());
}

}  // namespace

int main() {
  std::cout << "acceptance suite (tolerances pinned in code; see README for the two documented\n"
               "deviations of the published printed claims)\n";
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " sub-checks failed (see analysis above)")
            << "\n";
  return failures == 0 ? 0 : 1;
}
