#ifndef HEC_JSON_IO_HPP
#define HEC_JSON_IO_HPP

#include <json.hpp>

#include "hec/homogeneous.hpp"
#include "hec/structure.hpp"

namespace hec {

using Json = nlohmann::ordered_json;

template <class S>
S scalar_from_json(const Json& v);

template <>
inline Rat scalar_from_json<Rat>(const Json& v) {
  if (v.is_string()) return rat_parse(v.get<std::string>());
  if (v.is_number_integer()) return Rat(static_cast<long>(v.get<int64_t>()));
  if (v.is_number_float()) {
    double d = v.get<double>();
    if (d == static_cast<long>(d)) return Rat(static_cast<long>(d));
    throw std::invalid_argument("rational backend cannot take non-integral float " + v.dump());
  }
  throw std::invalid_argument("bad scalar: " + v.dump());
}

template <>
inline double scalar_from_json<double>(const Json& v) {
  if (v.is_string()) return rat_parse(v.get<std::string>()).get_d();
  if (v.is_number()) return v.get<double>();
  throw std::invalid_argument("bad scalar: " + v.dump());
}

inline Json scalar_to_json(const Rat& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return Json(r.get_num().get_si());
  return Json(rat_str(r));
}
inline Json scalar_to_json(double d) { return Json(d); }

template <class S>
Json matrix_to_json(const Mat<S>& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

template <class S>
Mat<S> matrix_from_json(const Json& j) {
  int r = static_cast<int>(j.size());
  int c = r ? static_cast<int>(j.at(0).size()) : 0;
  Mat<S> m(r, c);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < c; ++k) m(i, k) = scalar_from_json<S>(j.at(i).at(k));
  return m;
}

template <class S>
Json algebra_to_json(const LieAlgebra<S>& g) {
  Json doc;
  doc["dim"] = g.dim();
  doc["basis"] = g.labels();
  Json brackets = Json::array();
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j) {
      Json coeffs;
      for (int k = 0; k < g.dim(); ++k)
        if (!ScalarOps<S>::is_zero(g.c(i, j, k))) coeffs[std::to_string(k)] = scalar_to_json(g.c(i, j, k));
      if (!coeffs.empty()) brackets.push_back(Json{{"i", i}, {"j", j}, {"coeffs", coeffs}});
    }
  doc["brackets"] = brackets;
  return doc;
}

template <class S>
LieAlgebra<S> algebra_from_json(const Json& doc) {
  int dim = doc.at("dim").get<int>();
  std::vector<std::string> labels;
  if (doc.contains("basis")) labels = doc.at("basis").get<std::vector<std::string>>();
  LieAlgebra<S> g(dim, labels);
  if (doc.contains("brackets"))
    for (const auto& b : doc.at("brackets")) {
      int i = b.at("i").get<int>();
      int j = b.at("j").get<int>();
      if (i < 0 || j < 0 || i >= dim || j >= dim || i == j)
        throw std::invalid_argument("bracket indices out of range");
      for (auto& [key, val] : b.at("coeffs").items()) {
        int k = std::stoi(key);
        if (k < 0 || k >= dim) throw std::invalid_argument("bracket coefficient index out of range");
        g.set_bracket(i, j, k, scalar_from_json<S>(val));
      }
    }
  double anti = g.antisymmetry_residual();
  double jac = g.jacobi_residual();
  double tol = ScalarOps<S>::exact ? 0.0 : policy().structural;
  if (anti > tol || jac > tol)
    throw std::domain_error("algebra violates antisymmetry/Jacobi: residuals " + std::to_string(anti) + ", " +
                            std::to_string(jac));
  return g;
}

template <class S>
Json space_to_json(const HomogeneousSpace<S>& sp) {
  Json doc;
  doc["name"] = sp.name();
  doc["algebra"] = algebra_to_json(sp.algebra());
  doc["isotropy_span"] = matrix_to_json(sp.isotropy());
  doc["complement_span"] = matrix_to_json(sp.complement());
  return doc;
}

template <class S>
HomogeneousSpace<S> space_from_json(const Json& doc) {
  LieAlgebra<S> g = algebra_from_json<S>(doc.at("algebra"));
  std::string name = doc.value("name", "space");
  Mat<S> iso, comp;
  if (doc.contains("isotropy_span")) {
    iso = matrix_from_json<S>(doc.at("isotropy_span"));
    comp = matrix_from_json<S>(doc.at("complement_span"));
  } else {
    auto ii = doc.value("isotropy", std::vector<int>{});
    std::vector<int> ci;
    if (doc.contains("complement")) {
      ci = doc.at("complement").get<std::vector<int>>();
    } else {
      std::vector<bool> used(g.dim(), false);
      for (int i : ii) used[i] = true;
      for (int i = 0; i < g.dim(); ++i)
        if (!used[i]) ci.push_back(i);
    }
    iso = span_from_indices<S>(g.dim(), ii);
    comp = span_from_indices<S>(g.dim(), ci);
  }
  return HomogeneousSpace<S>(std::move(g), std::move(iso), std::move(comp), name);
}

template <class S>
Mat<S> metric_from_json(const Json& doc) {
  const Json& gram = doc.contains("gram") ? doc.at("gram") : doc;
  return matrix_from_json<S>(gram);
}

/// Structure data document: u/n algebras, theta images, metrics, U/K split.
template <class S>
StructureData<S> structure_from_json(const Json& doc) {
  LieAlgebra<S> u = algebra_from_json<S>(doc.at("u"));
  LieAlgebra<S> n = algebra_from_json<S>(doc.at("n"));
  Representation<S> theta;
  theta.target_dim = n.dim();
  for (const auto& img : doc.at("theta")) theta.images.push_back(matrix_from_json<S>(img));
  auto product = semidirect(u, n, theta);
  Mat<S> g1 = doc.contains("g1_span") ? matrix_from_json<S>(doc.at("g1_span"))
                                      : span_from_indices<S>(u.dim(), doc.value("g1", std::vector<int>{}));
  Mat<S> center = doc.contains("center_span")
                      ? matrix_from_json<S>(doc.at("center_span"))
                      : span_from_indices<S>(u.dim(), doc.value("center", std::vector<int>{}));
  Mat<S> nil_metric = doc.contains("nil_metric") ? matrix_from_json<S>(doc.at("nil_metric")) : Mat<S>::identity(n.dim());
  auto iso_idx = doc.value("uk_isotropy", std::vector<int>{});
  std::vector<int> comp_idx;
  if (doc.contains("uk_complement")) {
    comp_idx = doc.at("uk_complement").get<std::vector<int>>();
  } else {
    std::vector<bool> used(u.dim(), false);
    for (int i : iso_idx) used[i] = true;
    for (int i = 0; i < u.dim(); ++i)
      if (!used[i]) comp_idx.push_back(i);
  }
  HomogeneousSpace<S> uk(u, span_from_indices<S>(u.dim(), iso_idx), span_from_indices<S>(u.dim(), comp_idx), "U/K");
  Mat<S> uk_metric = doc.contains("uk_metric") ? matrix_from_json<S>(doc.at("uk_metric"))
                                               : Mat<S>::identity(static_cast<int>(comp_idx.size()));
  std::optional<Mat<S>> km;
  if (doc.contains("k_metric")) km = matrix_from_json<S>(doc.at("k_metric"));
  return make_structure_data(std::move(product), std::move(g1), std::move(center), std::move(nil_metric),
                             std::move(uk), std::move(uk_metric), km);
}

Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace hec

#endif
