// verify_case / verify_paper orchestration: runs each row's recipe and
// compares the outcome against the expected verdict.

#include <cmath>
#include <sstream>

#include "hec/report.hpp"

namespace hec {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

StepResult step_validate(const BuiltCase& c, const VerifyOptions& opt) {
  StepResult s{"validate", true, ""};
  std::ostringstream detail;
  double jac = c.space.algebra().jacobi_residual();
  if (jac != 0.0) {
    s.pass = false;
    detail << "Jacobi residual " << jac << " (exact backend must be 0); ";
  }
  if (!c.expected.empty()) {
    auto audit = module_signature_audit(c, opt.seed);
    if (!audit.match) {
      s.pass = false;
      detail << "module signature mismatch: " << audit.detail;
    } else {
      detail << "modules match table signature";
    }
    // the invariant-form space dimension must match the Schur count
    auto spd = convert_space<double>(c.space);
    auto forms = invariant_form_space(spd);
    int schur = schur_form_count(spd, audit.decomposition);
    if (static_cast<int>(forms.size()) != schur) {
      s.pass = false;
      detail << "; invariant-form dim " << forms.size() << " != Schur count " << schur;
    }
  } else {
    detail << "Jacobi exact";
  }
  s.detail = detail.str();
  return s;
}

StepResult step_cartan(const BuiltCase& c, CartanVerdict expect, const VerifyOptions& opt) {
  StepResult s{"cartan", true, ""};
  auto rep = cartan_orthogonality_test(c, opt.seed);
  bool got_noe = rep.verdict == CartanVerdict::NoEinstein;
  bool want_noe = expect == CartanVerdict::NoEinstein;
  s.pass = got_noe == want_noe;
  std::ostringstream d;
  d << (got_noe ? "NoEinstein_CartanOrthogonal" : "Inconclusive") << " (expected "
    << (want_noe ? "NoEinstein_CartanOrthogonal" : "Inconclusive") << ")";
  s.detail = d.str();
  return s;
}

StepResult step_ricci_sign(const BuiltCase& c, const VerifyOptions& opt) {
  StepResult s{"ricci-sign", true, ""};
  auto rep = ricci_sign_certificate(c, opt.sign_samples, opt.seed);
  s.pass = rep.premise_ok && rep.min_value >= -1e-12;
  std::ostringstream d;
  d << "min Ric(Y,Y) = " << fmt(rep.min_value) << " over " << rep.samples << " invariant metrics";
  if (!rep.premise_ok)
    d << "; the direction does NOT act skew-symmetrically for every invariant metric (the two equivalent "
         "modules carry opposite rotation orientations, so their coupling is by reflections and the "
         "positivity argument fails on coupled metrics; negative values are genuine, dual-route verified)";
  s.detail = d.str();
  return s;
}

StepResult step_sweep(const BuiltCase& c, const VerifyOptions& opt) {
  StepResult s{"conjugated-sweep", true, ""};
  auto rep = conjugated_cartan_sweep(c, opt.sweep_metric_samples, opt.seed);
  std::ostringstream d;
  if (rep.sym_samples > 0) {
    // rows with an involution-even subfamily: the sweep is expected to
    // orthogonalize exactly that subfamily; the odd coupling component is
    // invariant under every admissible conjugation
    s.pass = rep.sym_orthogonalized == rep.sym_samples;
    d << "involution-even subfamily: " << rep.sym_orthogonalized << "/" << rep.sym_samples
      << " metrics admit an orthogonal conjugated Cartan split (worst " << fmt(rep.sym_worst_final)
      << "); generic metrics: " << rep.orthogonalized << "/" << rep.samples
      << " (the odd coupling component is conjugation-invariant, so the non-existence verdict for the "
         "remaining family rests on the cited external criterion and the search corroboration below; "
         "evidence grade)";
  } else {
    s.pass = rep.orthogonalized == rep.samples;
    d << rep.orthogonalized << "/" << rep.samples
      << " sampled metrics admit an orthogonal conjugated Cartan split (evidence grade, worst residual "
      << fmt(rep.worst_final) << ")";
  }
  s.detail = d.str();
  return s;
}

StepResult step_offdiag_identity(const BuiltCase& c, const VerifyOptions& opt) {
  StepResult s{"offdiag-identity", true, ""};
  Rng rng(opt.seed ^ 0x34);
  int bad = 0;
  for (int t = 0; t < opt.identity_points; ++t) {
    Rat a = rng.rational_nonzero(4, 3), b = rng.rational_nonzero(4, 3), e = rng.rational_nonzero(4, 3);
    Rat d = rng.rational(4, 3);
    Rat lhs = sl2c_offdiag_computed(c, a, b, d, e);
    Rat rhs = sl2c_offdiag_formula(a, b, d, e);
    if (lhs != rhs) ++bad;
  }
  s.pass = bad == 0;
  s.detail = "exact equality at " + std::to_string(opt.identity_points - bad) + "/" +
             std::to_string(opt.identity_points) + " random rational points";
  return s;
}

StepResult step_offdiag_sign(const BuiltCase& c, const VerifyOptions& opt) {
  StepResult s{"offdiag-sign", true, ""};
  SweepSpec spec;
  spec.axes = {"a", "b", "d", "e"};
  auto axis = [&](bool positive) {
    std::vector<Rat> v;
    int n = std::max(4, opt.grid_nodes_per_axis / 3);
    for (int i = 0; i < n; ++i) {
      Rat x = rat_of(2 * i - (positive ? -1 : n), n);  // spread around +-1
      if (positive) x = rat_of(i + 1, (n + 2) / 2);
      v.push_back(x);
    }
    return v;
  };
  spec.grids = {axis(true), axis(true), [&] {
                  std::vector<Rat> v{Rat(0)};
                  int n = 8;
                  for (int i = 1; i <= n; ++i) {
                    v.push_back(rat_of(i, 3));
                    v.push_back(rat_of(-i, 3));
                  }
                  return v;
                }(),
                axis(true)};
  auto rep = sl2c_offdiag_sign_sweep(c, spec);
  s.pass = rep.sign_mismatches == 0 && rep.zero_off_d0 == 0;
  s.detail = "sign(entry) = sign(d) at all " + std::to_string(rep.nodes) + " nodes; d=0 slice identically zero";
  if (!s.pass)
    s.detail = "sign mismatches " + std::to_string(rep.sign_mismatches) + ", nonzero at d=0: " +
               std::to_string(rep.zero_off_d0) + " of " + std::to_string(rep.nodes);
  return s;
}

StepResult step_d11_identity(const BuiltCase& c, const VerifyOptions& opt) {
  StepResult s{"rtheta-identity", true, ""};
  Rng rng(opt.seed ^ 0x66);
  int bad_corrected = 0, off_printed = 0;
  for (int t = 0; t < opt.identity_points; ++t) {
    // det h = 1: pick a, b, d rational, e = 1/(a^2 b^2); d nonzero for the combo
    Rat a = rng.rational_nonzero(3, 2), b = rng.rational_nonzero(3, 2), d = rng.rational_nonzero(3, 2);
    Rat e = Rat(1) / (a * a * b * b);
    auto ent = d11_rtheta_entries(c, a, b, d, e);
    Rat combo = ent.r11 + 2 * ent.r44 + 2 * (a / d) * ent.r24;
    if (ent.r11 != d11_r11_closed_form(a, b, d, e) || combo != d11_combo_closed_form(a, b, d, e)) ++bad_corrected;
    if (ent.r11 != d11_r11_printed(a, b, d, e) || combo != d11_combo_printed(a, b, d, e)) ++off_printed;
  }
  s.pass = bad_corrected == 0;
  std::ostringstream d;
  d << "computed entries equal the corrected closed forms exactly at " << opt.identity_points - bad_corrected << "/"
    << opt.identity_points << " rational points (det h = 1)";
  if (off_printed)
    d << "; the expressions as printed deviate at " << off_printed << "/" << opt.identity_points
      << " points (missing e^4 weight on the (b^2-d^2)^2 term, extra -4a^4b^2e^2 in the combination; "
         "the contradiction survives either way, see the case note)";
  s.detail = d.str();
  return s;
}

StepResult step_d11_grid(const VerifyOptions& opt) {
  StepResult s{"rtheta-grid", true, ""};
  SweepSpec spec;
  spec.axes = {"a", "b", "d"};
  auto axis = [&](bool with_zero) {
    std::vector<Rat> v;
    for (int i = 1; i <= opt.grid_nodes_per_axis; ++i) {
      v.push_back(rat_of(i, (opt.grid_nodes_per_axis + 2) / 2));
      if (with_zero && i <= opt.grid_nodes_per_axis / 2) v.push_back(rat_of(-i, (opt.grid_nodes_per_axis + 2) / 2));
    }
    return v;
  };
  std::vector<Rat> daxis{Rat(0)};
  for (int i = 1; i <= opt.grid_nodes_per_axis / 2; ++i) {
    daxis.push_back(rat_of(i, 4));
    daxis.push_back(rat_of(-i, 4));
  }
  spec.grids = {axis(false), axis(false), daxis};
  auto rep = d11_sign_sweep(spec);
  s.pass = rep.both_negative == 0 && rep.nodes >= 10000;
  std::ostringstream d;
  d << rep.nodes << " rational nodes (det h = 1): r11 < 0 at " << rep.first_negative << ", combo < 0 at "
    << rep.second_negative << ", both < 0 at " << rep.both_negative
    << "; the corrected combination is strictly positive by inspection (>= 16 a^4 b^4), so a solution "
       "r(theta) = cI with c < 0 is impossible";
  s.detail = d.str();
  return s;
}

StepResult step_moment_map(const BuiltCase& c, const VerifyOptions&) {
  StepResult s{"moment-map", true, ""};
  // structure data over the exact backend: u = full algebra, no center
  const auto& g = c.space.algebra();
  LieAlgebra<Rat> n(c.theta->target_dim);
  auto product = semidirect(g, n, *c.theta);
  auto data = make_structure_data(product, Mat<Rat>::identity(g.dim()), Mat<Rat>(g.dim(), 0), c.theta_nil_metric,
                                  c.space, c.reference_metric);
  auto rep = moment_map_residual(data);
  s.pass = rep.residual < 1e-12;
  s.detail = "moment-map residual " + fmt(rep.residual) + " over the reference orthonormal basis";
  return s;
}

StepResult step_symmetric(const BuiltCase& c, const VerifyOptions&) {
  StepResult s{"symmetric", true, ""};
  auto sp = convert_space<double>(c.space);
  MatD b = killing_form(sp.algebra());
  const int m = sp.dim();
  MatD g(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g(i, j) = inner(sp.complement().col(i), b, sp.complement().col(j));
  if (!is_positive_definite(g)) {
    s.pass = false;
    s.detail = "Killing form not positive on the complement";
    return s;
  }
  MatD ric = ricci_form(sp, g);
  double ident = max_abs(ric - (-0.5) * g);
  auto rep = einstein_residual(sp, g);
  s.pass = ident < 1e-10 && rep.residual < 1e-10 && rep.c < 0;
  s.detail = "max|Ric + B/2| = " + fmt(ident) + ", Einstein residual " + fmt(rep.residual) +
             ", c = " + fmt(rep.c);
  return s;
}

StepResult step_product_forcing(const BuiltCase& c, const VerifyOptions& opt) {
  StepResult s{"product-forcing", true, ""};
  auto rep = product_forcing_certificate(c, 40, opt.seed);
  s.pass = rep.max_identity_residual < 1e-9 && rep.forces_product;
  std::ostringstream d;
  d << "cross-Ricci identity residual " << fmt(rep.max_identity_residual) << " on " << rep.samples
    << " random invariant metrics; positivity factor min " << fmt(rep.min_positivity)
    << (rep.forces_product ? " > 0: zero cross-Ricci forces <sl2(R), m0> = 0" : " NOT positive");
  s.detail = d.str();
  return s;
}

StepResult step_search(const BuiltCase& c, Verdict verdict, const VerifyOptions& opt, double* best_out) {
  StepResult s{"search", true, ""};
  SearchProblem prob = make_search_problem(c, opt.seed, opt.search_starts);
  prob.iteration_cap = 250;
  auto results = einstein_search(prob);
  double best = std::numeric_limits<double>::infinity();
  bool converged = false;
  double cbest = 0;
  for (const auto& r : results) {
    if (r.residual < best) {
      best = r.residual;
      cbest = r.c;
    }
    if (r.status == SearchStatus::Converged) converged = true;
  }
  if (best_out) *best_out = best;
  std::ostringstream d;
  if (verdict == Verdict::Symmetric) {
    s.pass = converged && cbest < 0;
    d << (converged ? "converged, " : "no convergence, ") << "best residual " << fmt(best) << ", c = " << fmt(cbest);
  } else if (verdict == Verdict::OpenCase) {
    s.pass = true;  // informational only
    d << "open case: best residual " << fmt(best) << " across " << opt.search_starts
      << " starts (no verdict asserted)";
  } else {
    s.pass = !converged;
    d << "best residual " << fmt(best) << " stays away from zero across " << opt.search_starts
      << " starts, corroborating non-existence";
  }
  s.detail = d.str();
  return s;
}

}  // namespace

CaseVerdictReport verify_case(const std::string& name, const std::vector<long>& params, const VerifyOptions& opt) {
  CaseVerdictReport rep;
  const CaseRecord* rec = find_case(name);
  if (!rec) {
    std::ostringstream msg;
    msg << "unknown case '" << name << "'; closest:";
    for (const auto& sug : case_suggestions(name)) msg << " " << sug;
    throw std::invalid_argument(msg.str());
  }
  rep.name = rec->name;
  rep.verdict = rec->verdict;
  rep.note = rec->note;
  if (rec->verdict == Verdict::MetadataOnly) {
    rep.steps.push_back({"metadata", true, rec->note});
    return rep;
  }
  std::vector<long> p = params;
  if (rec->nparams > 0 && p.empty() && rec->param_samples) p = rec->param_samples(opt.pmax).front();
  rep.params = p;
  BuiltCase c = rec->build(p);

  // per-parameter special handling for rows whose recipe depends on params
  bool su21_aw_exception = rec->name == "SU21/Dpq" && p.size() == 2 && p[0] == 0 && p[1] == 1;
  bool sl2rxsl2c_open = rec->name == "Sl2RxSl2C/Dpq" && p.size() == 2 && std::abs(p[0]) == std::abs(p[1]);

  for (const std::string& step : rec->recipe) {
    try {
      if (step == "validate") {
        rep.steps.push_back(step_validate(c, opt));
      } else if (step == "cartan") {
        CartanVerdict expect = CartanVerdict::Inconclusive;
        if (rec->verdict == Verdict::NoEinstein_CartanOrthogonal && !c.sweep_directions && !su21_aw_exception)
          expect = CartanVerdict::NoEinstein;
        rep.steps.push_back(step_cartan(c, expect, opt));
        if (su21_aw_exception) {
          rep.steps.push_back(step_ricci_sign(c, opt));
          if (!rep.steps.back().pass && opt.run_searches) {
            double best = -1;
            rep.steps.push_back(step_search(c, Verdict::NoEinstein_RicciSign, opt, &best));
            rep.best_search_residual = best;
          }
        }
      } else if (step == "ricci-sign") {
        if (sl2rxsl2c_open) {
          rep.steps.push_back({"ricci-sign", true, "skipped: |p| = |q| is the open case (search only)"});
          double best = -1;
          rep.steps.push_back(step_search(c, Verdict::OpenCase, opt, &best));
          rep.best_search_residual = best;
        } else {
          rep.steps.push_back(step_ricci_sign(c, opt));
        }
      } else if (step == "conjugated-sweep") {
        rep.steps.push_back(step_sweep(c, opt));
      } else if (step == "offdiag-identity") {
        rep.steps.push_back(step_offdiag_identity(c, opt));
      } else if (step == "offdiag-sign") {
        rep.steps.push_back(step_offdiag_sign(c, opt));
      } else if (step == "rtheta-identity") {
        rep.steps.push_back(step_d11_identity(c, opt));
      } else if (step == "rtheta-grid") {
        rep.steps.push_back(step_d11_grid(opt));
      } else if (step == "moment-map") {
        rep.steps.push_back(step_moment_map(c, opt));
      } else if (step == "symmetric") {
        rep.steps.push_back(step_symmetric(c, opt));
      } else if (step == "product-forcing") {
        rep.steps.push_back(step_product_forcing(c, opt));
      } else if (step == "search" || step == "search-theta") {
        if (!opt.run_searches) {
          rep.steps.push_back({step, true, "skipped (searches disabled)"});
        } else {
          double best = -1;
          rep.steps.push_back(step_search(c, rec->verdict, opt, &best));
          rep.best_search_residual = best;
        }
      } else {
        rep.steps.push_back({step, false, "unknown recipe step"});
      }
    } catch (const std::exception& e) {
      rep.steps.push_back({step, false, std::string("exception: ") + e.what()});
    }
  }
  for (const auto& s : rep.steps) rep.ok = rep.ok && s.pass;
  return rep;
}

PaperReport verify_paper(const VerifyOptions& opt) {
  PaperReport rep;
  rep.options = opt;
  for (const auto& rec : catalog()) {
    if (rec.verdict == Verdict::MetadataOnly) {
      CaseVerdictReport r;
      r.name = rec.name;
      r.verdict = rec.verdict;
      r.note = rec.note;
      r.steps.push_back({"metadata", true, rec.note});
      rep.cases.push_back(std::move(r));
      continue;
    }
    auto samples = rec.param_samples ? rec.param_samples(opt.pmax) : std::vector<std::vector<long>>{{}};
    for (const auto& p : samples) {
      rep.cases.push_back(verify_case(rec.name, p, opt));
      rep.ok = rep.ok && rep.cases.back().ok;
    }
  }
  return rep;
}

// ------------------------------------------------------------------
// report emission
// ------------------------------------------------------------------

Json case_report_json(const CaseVerdictReport& r) {
  Json j;
  j["case"] = r.name;
  j["params"] = r.params;
  j["verdict"] = verdict_name(r.verdict);
  j["ok"] = r.ok;
  if (!r.note.empty()) j["note"] = r.note;
  Json steps = Json::array();
  for (const auto& s : r.steps) steps.push_back(Json{{"step", s.step}, {"pass", s.pass}, {"detail", s.detail}});
  j["steps"] = steps;
  if (r.best_search_residual >= 0)
    j["best_search_residual"] = Json{{"value", r.best_search_residual}, {"source", "einstein_search"}};
  return j;
}

Json paper_report_json(const PaperReport& r) {
  Json j;
  j["report"] = "verify-paper";
  j["config"] = Json{{"seed", r.options.seed},
                     {"pmax", r.options.pmax},
                     {"sign_samples", r.options.sign_samples},
                     {"search_starts", r.options.search_starts},
                     {"identity_points", r.options.identity_points},
                     {"tolerances",
                      Json{{"structural", policy().structural},
                           {"curvature", policy().curvature},
                           {"svd_gap", policy().svd_gap},
                           {"search", policy().search_tol}}}};
  j["ok"] = r.ok;
  Json cases = Json::array();
  for (const auto& c : r.cases) cases.push_back(case_report_json(c));
  j["cases"] = cases;
  return j;
}

std::string case_report_text(const CaseVerdictReport& r) {
  std::ostringstream os;
  os << r.name;
  if (!r.params.empty()) {
    os << " [";
    for (size_t i = 0; i < r.params.size(); ++i) os << (i ? "," : "") << r.params[i];
    os << "]";
  }
  os << "  verdict=" << verdict_name(r.verdict) << "  " << (r.ok ? "OK" : "MISMATCH") << "\n";
  for (const auto& s : r.steps)
    os << "    [" << (s.pass ? "pass" : "FAIL") << "] " << s.step << ": " << s.detail << "\n";
  return os.str();
}

std::string paper_report_markdown(const PaperReport& r) {
  std::ostringstream os;
  os << "# verify-paper report\n\n";
  os << "seed " << r.options.seed << ", pmax " << r.options.pmax << ", overall: " << (r.ok ? "PASS" : "FAIL")
     << "\n\n";
  os << "| case | params | verdict | result |\n|---|---|---|---|\n";
  for (const auto& c : r.cases) {
    os << "| " << c.name << " | ";
    for (size_t i = 0; i < c.params.size(); ++i) os << (i ? "," : "") << c.params[i];
    os << " | " << verdict_name(c.verdict) << " | " << (c.ok ? "ok" : "MISMATCH") << " |\n";
  }
  os << "\n## details\n\n";
  for (const auto& c : r.cases) os << "```\n" << case_report_text(c) << "```\n";
  return os.str();
}

}  // namespace hec
