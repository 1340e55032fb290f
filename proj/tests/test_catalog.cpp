#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hec/report.hpp"
#include "oracles.hpp"

using namespace hec;

TEST_CASE("catalog registry and lookup") {
  CHECK(catalog().size() >= 30);
  CHECK(find_case("Sl2C/U1") != nullptr);
  CHECK(find_case("Sl2CxSl2R-case-516") != nullptr);  // alias of the structure case
  CHECK(find_case("nope") == nullptr);
  auto sug = case_suggestions("Sl2C/U2");
  CHECK(!sug.empty());
  CHECK_THROWS_WITH_AS(build_case("nope", {}), doctest::Contains("closest"), std::invalid_argument);
  CHECK_THROWS_AS(build_case("G2/SU3", {}), std::invalid_argument);  // metadata-only
  // parameter constraint enforcement (per-row constraints)
  CHECK_THROWS_AS(build_case("SU21/Dpq", {2, 4}), std::invalid_argument);   // gcd != 1
  CHECK_THROWS_AS(build_case("SU21/Dpq", {-1, 2}), std::invalid_argument);  // p < 0 violates note (a)
  CHECK_THROWS_AS(build_case("Sl2RxSl2R/Dpq", {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(build_case("Sl2R3/DaU1", {2, 1, 1}), std::invalid_argument);  // ordering
}

TEST_CASE("all constructed rows satisfy Jacobi exactly and match the table") {
  for (const auto& rec : catalog()) {
    if (!rec.build) continue;
    auto samples = rec.param_samples ? rec.param_samples(5) : std::vector<std::vector<long>>{{}};
    int tried = 0;
    for (const auto& p : samples) {
      if (tried++ >= 3) break;
      BuiltCase c = rec.build(p);
      CAPTURE(rec.name);
      CHECK(c.space.algebra().jacobi_residual() == 0.0);
      if (!c.expected.empty()) {
        auto audit = module_signature_audit(c, 1);
        CAPTURE(audit.detail);
        CHECK(audit.match);
      }
    }
  }
}

TEST_CASE("equivalence conditions across the sampled parameter range") {
  // p1 ~ p2 iff |p| = |q| for the 5-dim double row
  for (auto pq : std::vector<std::vector<long>>{{1, 1}, {-1, 1}, {1, 2}, {2, 3}, {-3, 5}}) {
    auto c = build_case("Sl2RxSl2R/Dpq", pq);
    auto sp = convert_space<double>(c.space);
    MatD p1 = span_from_indices<double>(5, {1, 2});
    MatD p2 = span_from_indices<double>(5, {3, 4});
    bool equal = std::abs(pq[0]) == std::abs(pq[1]);
    CHECK(find_intertwiners(sp, p1, p2).empty() == !equal);
  }
  // q1 ~ p1 iff (p,q) = (0,1) in the Aloff-Wallach analogue
  for (auto pq : std::vector<std::vector<long>>{{0, 1}, {1, 1}, {1, 2}}) {
    auto c = build_case("SU21/Dpq", pq);
    auto sp = convert_space<double>(c.space);
    MatD q1 = span_from_indices<double>(7, {1, 2});
    MatD p1 = span_from_indices<double>(7, {3, 4});
    bool expect = pq[0] == 0 && pq[1] == 1;
    // at (1,1) q1 is trivial; intertwiners with the nontrivial p1 vanish
    CHECK(!find_intertwiners(sp, q1, p1).empty() == expect);
  }
}

TEST_CASE("cartan orthogonality verdict parity with the table") {
  auto verdict_of = [](const std::string& name, std::vector<long> p = {}) {
    return cartan_orthogonality_test(build_case(name, p), 1).verdict;
  };
  // resolved by the inequivalent-modules criterion
  for (auto name : {"SU21/SU2", "Sp11/Sp1U1", "SU21/T2", "SU31/SU3", "Sp11/Sp1", "SO32/SO3", "Sp2R/T2", "Sp11/T2"})
    CHECK(verdict_of(name) == CartanVerdict::NoEinstein);
  CHECK(verdict_of("Sl2RxSl2R/Dpq", {1, 2}) == CartanVerdict::NoEinstein);
  CHECK(verdict_of("Sl2RxSl2R/Dpq", {1, 1}) == CartanVerdict::NoEinstein);  // equivalences inside p only
  CHECK(verdict_of("SU21/Dpq", {1, 2}) == CartanVerdict::NoEinstein);
  CHECK(verdict_of("SU21/Dpq", {1, 1}) == CartanVerdict::NoEinstein);
  CHECK(verdict_of("SU21xSl2R/Dpq", {1, 2}) == CartanVerdict::NoEinstein);
  CHECK(verdict_of("Sl2R3/DabcT2", {1, 1, 1}) == CartanVerdict::NoEinstein);
  CHECK(verdict_of("Sl2R3/DaU1", {1, 1, 2}) == CartanVerdict::NoEinstein);
  // the four exceptions
  CHECK(verdict_of("Sl2C/U1") == CartanVerdict::Inconclusive);
  CHECK(verdict_of("SU21/Dpq", {0, 1}) == CartanVerdict::Inconclusive);
  CHECK(verdict_of("Sl3R/SO2") == CartanVerdict::Inconclusive);
  CHECK(verdict_of("SO41/SO3") == CartanVerdict::Inconclusive);
  // product rows have paired trivial modules
  CHECK(verdict_of("Sl2RxSl2C/U1") == CartanVerdict::Inconclusive);
  CHECK(verdict_of("Sl2RxSl2R2/Dpq", {1, 2}) == CartanVerdict::Inconclusive);
  CHECK(verdict_of("Sl2RxSU21/SU2") == CartanVerdict::Inconclusive);
  CHECK(verdict_of("Sl2RxSl2C/Dpq", {1, 2}) == CartanVerdict::Inconclusive);
  // symmetric pairs: the criterion does not apply
  CHECK(verdict_of("SU21/U2") == CartanVerdict::Inconclusive);
}

TEST_CASE("metric families") {
  // (1,1,0,1) gives the identity gram
  Mat<Rat> h = family_frame("Sl2C/U1", Rat(1), Rat(1), Rat(0), Rat(1));
  CHECK(h.transpose() * h == Mat<Rat>::identity(5));
  CHECK_THROWS_AS(family_frame("Sl2C/U1", Rat(0), Rat(1), Rat(1), Rat(1)), std::invalid_argument);
  // family metrics are Ad(K)-invariant for all parameters
  auto c = build_case("Sl2C/U1", {});
  auto cd = build_case("Sl2RxSl2R-D11-theta", {});
  Rng rng(12);
  for (int t = 0; t < 20; ++t) {
    Rat a = rng.rational_nonzero(5, 3), b = rng.rational_nonzero(5, 3), d = rng.rational(5, 3),
        e = rng.rational_nonzero(5, 3);
    for (auto* bc : {&c, &cd}) {
      Mat<Rat> hh = family_frame(bc->row == "Sl2C/U1" ? "Sl2C/U1" : "Sl2RxSl2R/Dpq", a, b, d, e);
      Mat<Rat> g = hh.transpose() * hh;
      Mat<Rat> act = bc->space.isotropy_action(0);
      CHECK(max_abs(act.transpose() * g + g * act) == 0.0);
    }
  }
}

TEST_CASE("Lemma 3.4 off-diagonal Ricci entry: exact identity") {
  auto c = build_case("Sl2C/U1", {});
  // paper's worked value at (1,1,1,1)
  CHECK(sl2c_offdiag_computed(c, Rat(1), Rat(1), Rat(1), Rat(1)) == Rat(8));
  CHECK(sl2c_offdiag_formula(Rat(1), Rat(1), Rat(1), Rat(1)) == Rat(8));
  Rng rng(77);
  for (int t = 0; t < 60; ++t) {
    Rat a = rng.rational_nonzero(4, 3), b = rng.rational_nonzero(4, 3), d = rng.rational(4, 3),
        e = rng.rational_nonzero(4, 3);
    CHECK(sl2c_offdiag_computed(c, a, b, d, e) == sl2c_offdiag_formula(a, b, d, e));
  }
  // d = 0 slice vanishes identically; sign equals sign(d) for a,b,e > 0
  for (int t = 0; t < 20; ++t) {
    Rat a = rat_of(rng.uniform_int(1, 8), 3), b = rat_of(rng.uniform_int(1, 8), 3),
        e = rat_of(rng.uniform_int(1, 8), 3);
    CHECK(sgn(sl2c_offdiag_computed(c, a, b, Rat(0), e)) == 0);
    Rat d = rng.rational_nonzero(4, 3);
    CHECK(sgn(sl2c_offdiag_computed(c, a, b, d, e)) == sgn(d));
  }
}

TEST_CASE("D11 theta-case entries: corrected closed forms exact, printed forms deviate") {
  auto c = build_case("Sl2RxSl2R-D11-theta", {});
  // the worked point: r11 = -29/2 in both the printed and corrected forms
  auto ent = d11_rtheta_entries(c, Rat(1), Rat(1), Rat(1), Rat(1));
  CHECK(ent.r11 == rat_of(-29, 2));
  CHECK(d11_r11_printed(Rat(1), Rat(1), Rat(1), Rat(1)) == rat_of(-29, 2));
  Rng rng(66);
  int printed_r11_hits = 0;
  for (int t = 0; t < 50; ++t) {
    Rat a = rng.rational_nonzero(3, 2), b = rng.rational_nonzero(3, 2), d = rng.rational_nonzero(3, 2);
    Rat e = Rat(1) / (a * a * b * b);
    auto en = d11_rtheta_entries(c, a, b, d, e);
    Rat combo = en.r11 + 2 * en.r44 + 2 * (a / d) * en.r24;
    CHECK(en.r11 == d11_r11_closed_form(a, b, d, e));
    CHECK(combo == d11_combo_closed_form(a, b, d, e));
    if (en.r11 == d11_r11_printed(a, b, d, e)) ++printed_r11_hits;
    // the corrected combination is strictly positive: the contradiction
    CHECK(sgn(combo) > 0);
  }
  // printed and corrected r11 agree exactly on the e = 1 locus only
  CHECK(printed_r11_hits < 50);
  auto e1 = d11_rtheta_entries(c, Rat(2), rat_of(1, 2), Rat(1), Rat(1));
  CHECK(e1.r11 == d11_r11_printed(Rat(2), rat_of(1, 2), Rat(1), Rat(1)));
}

TEST_CASE("ricci sign certificates") {
  // (Sl2R x Sl2C)/D_pq, p != q: premise holds and the minimum is nonnegative
  auto c = build_case("Sl2RxSl2C/Dpq", {1, 2});
  auto rep = ricci_sign_certificate(c, 150, 7);
  CHECK(rep.premise_ok);
  CHECK(rep.min_value >= -1e-12);
  // SU(2,1)/D01: the skew premise fails and coupled metrics go negative
  // (documented deviation from the published argument)
  auto aw = build_case("SU21/Dpq", {0, 1});
  auto awrep = ricci_sign_certificate(aw, 150, 7);
  CHECK_FALSE(awrep.premise_ok);
  CHECK(awrep.min_value < -1e-6);
}

TEST_CASE("conjugated Cartan sweeps") {
  auto so41 = conjugated_cartan_sweep(build_case("SO41/SO3", {}), 4, 42);
  CHECK(so41.orthogonalized == so41.samples);
  auto sl3 = conjugated_cartan_sweep(build_case("Sl3R/SO2", {}), 4, 42);
  CHECK(sl3.sym_orthogonalized == sl3.sym_samples);
  CHECK(sl3.sym_samples == 4);
}

TEST_CASE("product forcing certificate") {
  for (auto name : {"Sl2RxSl2C/U1", "Sl2RxSU21/SU2"}) {
    auto rep = product_forcing_certificate(build_case(name, {}), 100, 5);
    CHECK(rep.samples == 100);
    CHECK(rep.max_identity_residual < 1e-9);
    CHECK(rep.forces_product);
  }
  auto rep = product_forcing_certificate(build_case("Sl2RxSl2R2/Dpq", {1, 2}), 50, 5);
  CHECK(rep.max_identity_residual < 1e-9);
  CHECK(rep.forces_product);
}

TEST_CASE("moment map on the catalog theta case") {
  auto c = build_case("Sl2RxSl2R-D11-theta", {});
  LieAlgebra<Rat> n(2);
  auto prod = semidirect(c.space.algebra(), n, *c.theta);
  auto data = make_structure_data(prod, Mat<Rat>::identity(6), Mat<Rat>(6, 0), c.theta_nil_metric, c.space,
                                  c.reference_metric);
  CHECK(moment_map_residual(data).residual == 0.0);
}

TEST_CASE("verify_case smoke") {
  VerifyOptions opt;
  opt.sign_samples = 60;
  opt.identity_points = 10;
  opt.sweep_metric_samples = 2;
  opt.search_starts = 4;
  opt.grid_nodes_per_axis = 12;
  auto rep = verify_case("SU21/SU2", {}, opt);
  CHECK(rep.ok);
  auto sym = verify_case("Sl2R/SO2", {}, opt);
  CHECK(sym.ok);
  CHECK_THROWS_AS(verify_case("nope", {}, opt), std::invalid_argument);
}
