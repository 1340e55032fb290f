// hec - curvature and Einstein-condition toolkit for homogeneous spaces
// presented by Lie-algebra structure constants.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "hec/report.hpp"

using namespace hec;

namespace {

struct GlobalOpts {
  std::string backend = "rational";
  uint64_t seed = 42;
  double tol = 0.0;
  int pmax = 7;
  std::string format = "text";
  std::string out;
};

std::ostream& output(const GlobalOpts& g, std::ofstream& file) {
  if (g.out.empty()) return std::cout;
  file.open(g.out);
  if (!file) throw std::runtime_error("cannot write " + g.out);
  return file;
}

Json config_header(const GlobalOpts& g, const std::string& command) {
  Json j;
  j["command"] = command;
  j["backend"] = g.backend;
  j["seed"] = g.seed;
  j["pmax"] = g.pmax;
  j["format"] = g.format;
  j["tolerances"] = Json{{"structural", policy().structural},
                         {"curvature", policy().curvature},
                         {"svd_gap", policy().svd_gap},
                         {"search", policy().search_tol}};
  return j;
}

int run_list(const GlobalOpts& g) {
  std::ofstream f;
  auto& os = output(g, f);
  if (g.format == "json") {
    Json j;
    j["config"] = config_header(g, "list");
    Json rows = Json::array();
    for (const auto& r : catalog())
      rows.push_back(Json{{"name", r.name},
                          {"dim", r.dim},
                          {"params", r.nparams},
                          {"verdict", verdict_name(r.verdict)},
                          {"isotropy", r.isotropy_repr}});
    j["rows"] = rows;
    os << j.dump(2) << "\n";
  } else {
    os << "catalog rows (dim | name | verdict | isotropy modules)\n";
    for (const auto& r : catalog()) {
      os << "  " << r.dim << " | " << r.name;
      if (r.nparams) os << " [" << r.nparams << " params]";
      os << " | " << verdict_name(r.verdict) << " | " << r.isotropy_repr << "\n";
    }
  }
  return 0;
}

int run_describe(const GlobalOpts& g, const std::string& name, std::vector<long> params) {
  const CaseRecord* rec = find_case(name);
  if (!rec) {
    std::cerr << "unknown case '" << name << "'; closest:";
    for (auto& s : case_suggestions(name)) std::cerr << " " << s;
    std::cerr << "\n";
    return 2;
  }
  std::ofstream f;
  auto& os = output(g, f);
  if (rec->verdict == Verdict::MetadataOnly) {
    os << rec->name << " (dim " << rec->dim << "): metadata-only row\n  compact dual: " << rec->compact_dual
       << "\n  note: " << rec->note << "\n";
    return 0;
  }
  BuiltCase c = build_case(rec->name, params);
  auto dec_report = module_signature_audit(c, g.seed);
  if (g.format == "json") {
    Json j;
    j["config"] = config_header(g, "describe");
    j["case"] = rec->name;
    j["params"] = c.params;
    j["dim"] = rec->dim;
    j["verdict"] = verdict_name(rec->verdict);
    j["compact_dual"] = rec->compact_dual;
    j["isotropy_representation"] = rec->isotropy_repr;
    j["algebra"] = algebra_to_json(c.space.algebra());
    Json blocks = Json::array();
    for (const auto& b : dec_report.decomposition.blocks)
      blocks.push_back(Json{{"label", b.label}, {"dim", b.span.cols()}, {"trivial", b.trivial}});
    j["computed_modules"] = blocks;
    Json eq = Json::array();
    for (auto& [a, b, d] : dec_report.decomposition.equivalences)
      eq.push_back(Json{{"a", dec_report.decomposition.blocks[a].label},
                        {"b", dec_report.decomposition.blocks[b].label},
                        {"intertwiner_dim", d}});
    j["equivalences"] = eq;
    j["signature_matches_table"] = dec_report.match;
    if (!rec->note.empty()) j["note"] = rec->note;
    if (!c.note.empty()) j["convention"] = c.note;
    os << j.dump(2) << "\n";
  } else {
    os << c.space.name() << " (dim " << rec->dim << ")\n";
    os << "  verdict: " << verdict_name(rec->verdict) << "\n";
    os << "  table row: " << rec->isotropy_repr << "\n";
    os << "  compact dual: " << rec->compact_dual << "\n";
    const auto& alg = c.space.algebra();
    os << "  basis: ";
    for (auto& l : alg.labels()) os << l << " ";
    os << "\n  nonzero brackets (exact):\n";
    for (int i = 0; i < alg.dim(); ++i)
      for (int jj = i + 1; jj < alg.dim(); ++jj) {
        bool any = false;
        for (int k = 0; k < alg.dim(); ++k)
          if (sgn(alg.c(i, jj, k)) != 0) any = true;
        if (!any) continue;
        os << "    [" << alg.labels()[i] << ", " << alg.labels()[jj] << "] =";
        for (int k = 0; k < alg.dim(); ++k)
          if (sgn(alg.c(i, jj, k)) != 0) os << " " << rat_str(alg.c(i, jj, k)) << "*" << alg.labels()[k];
        os << "\n";
      }
    os << "  computed isotropy modules: ";
    for (const auto& b : dec_report.decomposition.blocks)
      os << b.label << "(" << b.span.cols() << (b.trivial ? ",trivial" : "") << ") ";
    os << "\n  equivalences: ";
    if (dec_report.decomposition.equivalences.empty()) os << "none";
    for (auto& [a, b, d] : dec_report.decomposition.equivalences)
      os << dec_report.decomposition.blocks[a].label << "~" << dec_report.decomposition.blocks[b].label << "(dim "
         << d << ") ";
    os << "\n  matches table signature: " << (dec_report.match ? "yes" : "NO") << "\n";
    if (!rec->note.empty()) os << "  note: " << rec->note << "\n";
    if (!c.note.empty()) os << "  convention: " << c.note << "\n";
  }
  return 0;
}

template <class S>
int run_ricci_backend(const GlobalOpts& g, const std::string& space_path, const std::string& metric_path) {
  auto sp = space_from_json<S>(load_json_file(space_path));
  Mat<S> gram = sp.dim() > 0 && metric_path.empty() ? Mat<S>::identity(sp.dim())
                                                    : metric_from_json<S>(load_json_file(metric_path));
  Mat<S> ric = ricci_form(sp, gram);
  auto rep = einstein_residual(sp, gram);
  std::ofstream f;
  auto& os = output(g, f);
  if (g.format == "json") {
    Json j;
    j["config"] = config_header(g, "ricci");
    j["space"] = sp.name();
    j["ricci"] = Json{{"value", matrix_to_json(ric)}, {"source", "ricci_form"}};
    j["scalar_curvature"] = Json{{"value", scalar_to_json(trace(solve(gram, ric)))}, {"source", "scalar_curvature"}};
    j["einstein"] = Json{{"c", scalar_to_json(rep.c)}, {"residual", rep.residual}, {"source", "einstein_residual"}};
    os << j.dump(2) << "\n";
  } else {
    os << "Ricci form of " << sp.name() << " in the complement basis (source: ricci_form):\n";
    for (int i = 0; i < ric.rows(); ++i) {
      os << "  ";
      for (int jj = 0; jj < ric.cols(); ++jj) {
        if constexpr (ScalarOps<S>::exact)
          os << rat_str(ric(i, jj)) << "\t";
        else
          os << ric(i, jj) << "\t";
      }
      os << "\n";
    }
    os << "einstein: c = " << ScalarOps<S>::to_double(rep.c) << ", residual = " << rep.residual << "\n";
  }
  return 0;
}

int run_check(const GlobalOpts& g, const std::string& space_path, const std::string& metric_path, bool einstein,
              const std::string& structure_path, bool moment_map, bool nilsoliton) {
  std::ofstream f;
  auto& os = output(g, f);
  Json j;
  j["config"] = config_header(g, "check");
  bool all_ok = true;
  if (einstein) {
    if (g.backend == "rational") {
      auto sp = space_from_json<Rat>(load_json_file(space_path));
      Mat<Rat> gram = metric_path.empty() ? Mat<Rat>::identity(sp.dim()) : metric_from_json<Rat>(load_json_file(metric_path));
      auto rep = einstein_residual(sp, gram);
      j["einstein"] = Json{{"c", scalar_to_json(rep.c)}, {"residual", rep.residual}, {"source", "einstein_residual"}};
      if (rep.residual > policy().curvature) all_ok = false;
    } else {
      auto sp = space_from_json<double>(load_json_file(space_path));
      MatD gram = metric_path.empty() ? MatD::identity(sp.dim()) : metric_from_json<double>(load_json_file(metric_path));
      auto rep = einstein_residual(sp, gram);
      j["einstein"] = Json{{"c", rep.c}, {"residual", rep.residual}, {"source", "einstein_residual"}};
      if (rep.residual > policy().curvature) all_ok = false;
    }
  }
  if (moment_map || nilsoliton) {
    auto data = structure_from_json<double>(load_json_file(structure_path));
    if (moment_map) {
      auto rep = moment_map_residual(data);
      j["moment_map"] = Json{{"residual", rep.residual},
                             {"center_symmetry", rep.center_symmetry},
                             {"source", "moment_map_residual"}};
      if (rep.residual > policy().curvature || rep.center_symmetry > policy().curvature) all_ok = false;
      auto gen = generalized_einstein(data);
      j["generalized_einstein"] =
          Json{{"c", gen.c_estimate}, {"residual", gen.residual}, {"source", "generalized_einstein"}};
    }
    if (nilsoliton) {
      auto rep = nilsoliton_residual(data.n(), data.nil_metric);
      j["nilsoliton"] = Json{{"c", rep.c},
                             {"residual", rep.residual},
                             {"derivation", matrix_to_json(rep.derivation)},
                             {"source", "nilsoliton_residual"}};
      if (rep.residual > policy().curvature) all_ok = false;
    }
  }
  j["ok"] = all_ok;
  if (g.format == "json")
    os << j.dump(2) << "\n";
  else {
    os << "check report:\n";
    for (auto& [key, val] : j.items())
      if (key != "config") os << "  " << key << ": " << val.dump() << "\n";
  }
  return all_ok ? 0 : 1;
}

int run_search(const GlobalOpts& g, const std::string& name, std::vector<long> params, int starts,
               const std::string& normalization) {
  BuiltCase c = build_case(name, params);
  SearchProblem prob = make_search_problem(c, g.seed, starts);
  if (normalization == "TraceN") prob.normalization = Normalization::TraceN;
  if (normalization == "UnitVolumeFrame") prob.normalization = Normalization::UnitVolumeFrame;
  auto results = einstein_search(prob);
  std::ofstream f;
  auto& os = output(g, f);
  Json j;
  j["config"] = config_header(g, "search");
  j["case"] = name;
  j["normalization"] = normalization_name(prob.normalization);
  Json rs = Json::array();
  for (const auto& r : results) {
    double recheck = residual_at(prob, r.parameters);
    rs.push_back(Json{{"status", status_name(r.status)},
                      {"residual", Json{{"value", r.residual}, {"source", "einstein_search"}}},
                      {"residual_recheck", recheck},
                      {"c", r.c},
                      {"parameters", r.parameters},
                      {"iterations", r.trace.size()}});
  }
  j["results"] = rs;
  if (g.format == "json")
    os << j.dump(2) << "\n";
  else {
    os << "search on " << c.space.name() << " (" << results.size() << " distinct results):\n";
    for (const auto& r : results)
      os << "  " << status_name(r.status) << "  residual " << r.residual << "  c " << r.c << "\n";
  }
  return 0;
}

int run_sweep(const GlobalOpts& g, const std::string& name, int nodes) {
  std::ofstream f;
  auto& os = output(g, f);
  Json j;
  j["config"] = config_header(g, "sweep");
  bool ok = true;
  if (name == "Sl2RxSl2R-D11-theta" || name == "Sl2CxSl2R-case-516") {
    SweepSpec spec;
    spec.axes = {"a", "b", "d"};
    auto axis = [&](int n) {
      std::vector<Rat> v;
      for (int i = 1; i <= n; ++i) v.push_back(rat_of(i, (n + 2) / 2));
      return v;
    };
    std::vector<Rat> daxis{Rat(0)};
    for (int i = 1; i <= nodes / 2; ++i) {
      daxis.push_back(rat_of(i, 4));
      daxis.push_back(rat_of(-i, 4));
    }
    spec.grids = {axis(nodes), axis(nodes), daxis};
    auto rep = d11_sign_sweep(spec);
    ok = rep.both_negative == 0;
    j["sweep"] = Json{{"nodes", rep.nodes},
                      {"first_negative", rep.first_negative},
                      {"second_negative", rep.second_negative},
                      {"both_negative", rep.both_negative},
                      {"source", "d11_sign_sweep"}};
  } else if (name == "Sl2C/U1") {
    auto c = build_case("Sl2C/U1", {});
    SweepSpec spec;
    spec.axes = {"a", "b", "d", "e"};
    auto axis = [&](int n) {
      std::vector<Rat> v;
      for (int i = 1; i <= n; ++i) v.push_back(rat_of(i, (n + 2) / 2));
      return v;
    };
    std::vector<Rat> daxis{Rat(0)};
    for (int i = 1; i <= nodes / 2; ++i) {
      daxis.push_back(rat_of(i, 3));
      daxis.push_back(rat_of(-i, 3));
    }
    spec.grids = {axis(nodes / 2 + 2), axis(nodes / 2 + 2), daxis, axis(nodes / 2 + 2)};
    auto rep = sl2c_offdiag_sign_sweep(c, spec);
    ok = rep.sign_mismatches == 0 && rep.zero_off_d0 == 0;
    j["sweep"] = Json{{"nodes", rep.nodes},
                      {"sign_mismatches", rep.sign_mismatches},
                      {"nonzero_at_d0", rep.zero_off_d0},
                      {"source", "sl2c_offdiag_sign_sweep"}};
  } else {
    std::cerr << "no coded sweep for '" << name << "' (try Sl2C/U1 or Sl2RxSl2R-D11-theta)\n";
    return 2;
  }
  j["ok"] = ok;
  os << (g.format == "json" ? j.dump(2) : j.dump(2)) << "\n";
  return ok ? 0 : 1;
}

int run_verify_paper(const GlobalOpts& g) {
  VerifyOptions opt;
  opt.seed = g.seed;
  opt.pmax = g.pmax;
  auto rep = verify_paper(opt);
  std::ofstream f;
  auto& os = output(g, f);
  if (g.format == "json")
    os << paper_report_json(rep).dump(2) << "\n";
  else if (g.format == "markdown")
    os << paper_report_markdown(rep);
  else {
    os << "verify-paper (seed " << opt.seed << ", pmax " << opt.pmax << ")\n";
    for (const auto& c : rep.cases) os << case_report_text(c);
    os << (rep.ok ? "ALL ROWS OK\n" : "VERDICT MISMATCHES PRESENT\n");
  }
  return rep.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hec: curvature and Einstein conditions for homogeneous spaces from structure constants"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--backend", g.backend, "scalar backend: rational | float")->check(CLI::IsMember({"rational", "float"}));
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--tol", g.tol, "override the structural tolerance");
  app.add_option("--pmax", g.pmax, "family parameter sampling bound");
  app.add_option("--format", g.format, "output format: text | json | markdown | csv")
      ->check(CLI::IsMember({"text", "json", "markdown", "csv"}));
  app.add_option("--out", g.out, "write the report to a file");

  auto* list = app.add_subcommand("list", "list catalog rows with dims and verdicts");
  std::string name;
  std::vector<long> params;
  auto* describe = app.add_subcommand("describe", "print structure constants and module data for a catalog row");
  describe->add_option("name", name)->required();
  describe->add_option("params", params, "family parameters");
  std::string space_path, metric_path, structure_path;
  auto* ricci = app.add_subcommand("ricci", "Ricci form of a space + metric from JSON files");
  ricci->add_option("--space", space_path)->required();
  ricci->add_option("--metric", metric_path);
  bool flag_einstein = false, flag_moment = false, flag_nilsoliton = false;
  auto* check = app.add_subcommand("check", "run Einstein / moment-map / nilsoliton audits");
  check->add_option("--space", space_path);
  check->add_option("--metric", metric_path);
  check->add_option("--structure", structure_path);
  check->add_flag("--einstein", flag_einstein);
  check->add_flag("--moment-map", flag_moment);
  check->add_flag("--nilsoliton", flag_nilsoliton);
  int starts = 50;
  std::string normalization = "DetOne";
  auto* search = app.add_subcommand("search", "multi-start Einstein search on a catalog row");
  search->add_option("name", name)->required();
  search->add_option("params", params);
  search->add_option("--starts", starts);
  search->add_option("--normalization", normalization)
      ->check(CLI::IsMember({"DetOne", "TraceN", "UnitVolumeFrame"}));
  int nodes = 22;
  auto* sweep = app.add_subcommand("sweep", "exact sign sweep of a row's coded certificates");
  sweep->add_option("name", name)->required();
  sweep->add_option("--nodes", nodes, "grid nodes per axis");
  auto* verify = app.add_subcommand("verify-paper", "run every catalog recipe and aggregate the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (g.tol > 0) policy().structural = g.tol;
  try {
    if (list->parsed()) return run_list(g);
    if (describe->parsed()) return run_describe(g, name, params);
    if (ricci->parsed())
      return g.backend == "rational" ? run_ricci_backend<Rat>(g, space_path, metric_path)
                                     : run_ricci_backend<double>(g, space_path, metric_path);
    if (check->parsed())
      return run_check(g, space_path, metric_path, flag_einstein, structure_path, flag_moment, flag_nilsoliton);
    if (search->parsed()) return run_search(g, name, params, starts, normalization);
    if (sweep->parsed()) return run_sweep(g, name, nodes);
    if (verify->parsed()) return run_verify_paper(g);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
