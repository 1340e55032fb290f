#include "hec/search.hpp"

#include <algorithm>

#include "hec/rng.hpp"

namespace hec {

std::string status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Converged: return "Converged";
    case SearchStatus::LocalMinPositiveResidual: return "LocalMinPositiveResidual";
    case SearchStatus::LeftPDCone: return "LeftPDCone";
    case SearchStatus::IterationCap: return "IterationCap";
  }
  return "?";
}

std::string normalization_name(Normalization n) {
  switch (n) {
    case Normalization::DetOne: return "DetOne";
    case Normalization::TraceN: return "TraceN";
    case Normalization::UnitVolumeFrame: return "UnitVolumeFrame";
  }
  return "?";
}

SearchProblem make_search_problem(const BuiltCase& c, uint64_t seed, int starts) {
  SearchProblem p;
  p.space = convert_space<double>(c.space);
  p.basis = invariant_form_space(p.space);
  if (c.theta) {
    // C_theta as a fixed bilinear form on the complement
    const int m = p.space.dim();
    Mat<Rat> gn = c.theta_nil_metric;
    Mat<Rat> ct(m, m);
    std::vector<Mat<Rat>> sym;
    for (int j = 0; j < m; ++j) {
      Vec<Rat> xg = c.space.complement().col(j);
      sym.push_back(symmetric_part(c.theta->of(xg), gn));
    }
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        Rat v = trace(sym[i] * sym[j]);
        ct(i, j) = v;
        ct(j, i) = v;
      }
    p.c_theta = convert<double>(ct);
  }
  p.seed = seed;
  p.starts = starts;
  return p;
}

namespace {

// residual vector: upper triangle of L^-1 (Ric - c G - C_theta) L^-T,
// templated so dual numbers give analytic directional derivatives.
template <class S>
Vec<S> residual_vec(const CurvatureData<S>& cd, const std::vector<MatD>& basis, const std::optional<MatD>& c_theta,
                    const Vec<S>& x, S* c_out) {
  const int m = cd.m;
  Mat<S> g(m, m);
  for (size_t k = 0; k < basis.size(); ++k)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) g(i, j) += x[k] * S(basis[k](i, j));
  Mat<S> ric = ricci_form(cd, g);
  if (c_theta)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) ric(i, j) -= S((*c_theta)(i, j));
  S c = trace(solve(g, ric)) / S(m);
  if (c_out) *c_out = c;
  Mat<S> resid = ric - c * g;
  // Cholesky of g (caller guarantees positive-definiteness)
  using std::sqrt;
  Mat<S> l(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= i; ++j) {
      S acc = g(i, j);
      for (int k = 0; k < j; ++k) acc -= l(i, k) * l(j, k);
      if (i == j) {
        l(i, i) = sqrt(acc);
      } else {
        l(i, j) = acc / l(j, j);
      }
    }
  }
  Mat<S> linv = inverse(l);
  Mat<S> nres = linv * resid * linv.transpose();
  Vec<S> out;
  out.reserve(m * (m + 1) / 2);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) out.push_back(i == j ? nres(i, j) : S(std::sqrt(2.0)) * nres(i, j));
  return out;
}

bool point_pd(const std::vector<MatD>& basis, const VecD& x) {
  const int m = basis[0].rows();
  MatD g(m, m);
  for (size_t k = 0; k < basis.size(); ++k) g += x[k] * basis[k];
  return is_positive_definite(g);
}

VecD normalize_point(const SearchProblem& p, VecD x) {
  const int m = p.basis[0].rows();
  MatD g(m, m);
  for (size_t k = 0; k < p.basis.size(); ++k) g += x[k] * p.basis[k];
  double scale = 1.0;
  if (p.normalization == Normalization::TraceN) {
    scale = m / ScalarOps<double>::to_double(trace(g));
  } else {  // DetOne and UnitVolumeFrame both fix unit volume
    double dv = ScalarOps<double>::to_double(det(g));
    scale = std::pow(std::fabs(dv), -1.0 / m);
  }
  for (auto& v : x) v *= scale;
  return x;
}

}  // namespace

double residual_at(const SearchProblem& p, const VecD& x, double* c_out) {
  auto cd = curvature_data(p.space);
  double c;
  VecD r = residual_vec(cd, p.basis, p.c_theta, x, &c);
  if (c_out) *c_out = c;
  double acc = 0.0;
  for (double v : r) acc += v * v;
  return std::sqrt(acc);
}

std::vector<SearchResult> einstein_search(const SearchProblem& p) {
  if (p.basis.empty()) throw std::invalid_argument("einstein_search: empty invariant-form space");
  const double tol = p.tol > 0 ? p.tol : policy().search_tol;
  const int np = static_cast<int>(p.basis.size());
  auto cd = curvature_data(p.space);
  auto cd_dual = convert_curvature<Dual>(cd);
  Rng rng(p.seed);

  auto objective = [&](const VecD& x) {
    double c;
    VecD r = residual_vec(cd, p.basis, p.c_theta, x, &c);
    double acc = 0.0;
    for (double v : r) acc += v * v;
    return std::make_pair(std::sqrt(acc), c);
  };

  std::vector<SearchResult> results;
  for (int start = 0; start < p.starts; ++start) {
    // random PD start
    VecD x(np);
    bool found = false;
    for (int attempt = 0; attempt < 200 && !found; ++attempt) {
      for (auto& v : x) v = rng.normal();
      if (point_pd(p.basis, x)) found = true;
      else {
        for (auto& v : x) v = -v;
        found = point_pd(p.basis, x);
      }
    }
    SearchResult res;
    if (!found) {
      res.status = SearchStatus::LeftPDCone;
      results.push_back(res);
      continue;
    }
    x = normalize_point(p, x);
    double lambda = 1e-3;
    auto [fval, cval] = objective(x);
    res.trace.push_back(fval);
    int it = 0;
    SearchStatus status = SearchStatus::IterationCap;
    for (; it < p.iteration_cap; ++it) {
      if (fval < tol) {
        status = SearchStatus::Converged;
        break;
      }
      // residual and Jacobian by forward duals
      VecD r0;
      {
        Vec<Dual> xd(np);
        for (int k = 0; k < np; ++k) xd[k] = Dual(x[k], 0.0);
        Vec<Dual> rd = residual_vec(cd_dual, p.basis, p.c_theta, xd, static_cast<Dual*>(nullptr));
        r0.resize(rd.size());
        for (size_t i = 0; i < rd.size(); ++i) r0[i] = rd[i].v;
      }
      const int nr = static_cast<int>(r0.size());
      MatD jac(nr, np);
      for (int kcol = 0; kcol < np; ++kcol) {
        Vec<Dual> xd(np);
        for (int k = 0; k < np; ++k) xd[k] = Dual(x[k], k == kcol ? 1.0 : 0.0);
        Vec<Dual> rd = residual_vec(cd_dual, p.basis, p.c_theta, xd, static_cast<Dual*>(nullptr));
        for (int i = 0; i < nr; ++i) jac(i, kcol) = rd[i].d;
      }
      MatD jtj = jac.transpose() * jac;
      VecD jtr(np, 0.0);
      for (int kcol = 0; kcol < np; ++kcol)
        for (int i = 0; i < nr; ++i) jtr[kcol] += jac(i, kcol) * r0[i];
      // gradient-norm stop: stuck local minimum with positive residual
      if (max_abs(jtr) < 1e-14 * std::max(1.0, fval)) {
        status = SearchStatus::LocalMinPositiveResidual;
        break;
      }
      bool stepped = false;
      for (int tries = 0; tries < 25; ++tries) {
        MatD lhs = jtj;
        for (int d = 0; d < np; ++d) lhs(d, d) += lambda * (1.0 + jtj(d, d));
        VecD delta;
        try {
          delta = solve(lhs, jtr);
        } catch (const std::domain_error&) {
          lambda *= 10;
          continue;
        }
        VecD xn(np);
        for (int k = 0; k < np; ++k) xn[k] = x[k] - delta[k];
        if (!point_pd(p.basis, xn)) {
          lambda *= 10;
          continue;
        }
        xn = normalize_point(p, xn);
        auto [fn, cn] = objective(xn);
        if (fn < fval) {
          x = xn;
          fval = fn;
          cval = cn;
          lambda = std::max(lambda / 3, 1e-12);
          res.trace.push_back(fval);
          stepped = true;
          break;
        }
        lambda *= 10;
      }
      if (!stepped) {
        status = fval < tol ? SearchStatus::Converged : SearchStatus::LocalMinPositiveResidual;
        break;
      }
    }
    if (fval < tol) status = SearchStatus::Converged;
    res.parameters = x;
    res.c = cval;
    res.residual = fval;
    res.status = status;
    results.push_back(std::move(res));
  }

  // deduplicate up to small parameter distance, then sort
  std::vector<SearchResult> unique;
  for (auto& r : results) {
    bool dup = false;
    for (auto& u : unique) {
      if (r.status != u.status || r.parameters.size() != u.parameters.size()) continue;
      double dd = 0.0;
      for (size_t i = 0; i < r.parameters.size(); ++i) dd = std::max(dd, std::fabs(r.parameters[i] - u.parameters[i]));
      if (dd < 1e-6 && std::fabs(r.residual - u.residual) < 1e-9) {
        dup = true;
        break;
      }
    }
    if (!dup) unique.push_back(std::move(r));
  }
  std::sort(unique.begin(), unique.end(), [](const SearchResult& a, const SearchResult& b) {
    if (a.residual != b.residual) return a.residual < b.residual;
    return a.parameters < b.parameters;
  });
  return unique;
}

double gradient_check(const SearchProblem& p, const VecD& x, double step) {
  auto cd = curvature_data(p.space);
  auto cd_dual = convert_curvature<Dual>(cd);
  const int np = static_cast<int>(p.basis.size());
  double worst = 0.0;
  auto phi = [&](const VecD& y) {
    VecD r = residual_vec(cd, p.basis, p.c_theta, y, static_cast<double*>(nullptr));
    double acc = 0.0;
    for (double v : r) acc += v * v;
    return acc;
  };
  for (int k = 0; k < np; ++k) {
    // analytic: d phi = 2 r . dr via duals
    Vec<Dual> xd(np);
    for (int i = 0; i < np; ++i) xd[i] = Dual(x[i], i == k ? 1.0 : 0.0);
    Vec<Dual> rd = residual_vec(cd_dual, p.basis, p.c_theta, xd, static_cast<Dual*>(nullptr));
    double analytic = 0.0;
    for (const auto& v : rd) analytic += 2.0 * v.v * v.d;
    VecD xp = x, xm = x;
    xp[k] += step;
    xm[k] -= step;
    double numeric = (phi(xp) - phi(xm)) / (2 * step);
    double denom = std::max({1e-8, std::fabs(analytic), std::fabs(numeric)});
    worst = std::max(worst, std::fabs(analytic - numeric) / denom);
  }
  return worst;
}

SweepReport d11_sign_sweep(const SweepSpec& spec) {
  if (spec.axes.size() != 3) throw std::invalid_argument("d11_sign_sweep: expected axes a, b, d");
  SweepReport rep;
  for (const Rat& a : spec.grids[0])
    for (const Rat& b : spec.grids[1])
      for (const Rat& d : spec.grids[2]) {
        if (sgn(a) == 0 || sgn(b) == 0) continue;
        // det h = e a^2 b^2 = 1
        Rat e = Rat(1) / (a * a * b * b);
        Rat r11 = d11_r11_printed(a, b, d, e);
        Rat combo = d11_combo_printed(a, b, d, e);
        ++rep.nodes;
        bool n1 = sgn(r11) < 0, n2 = sgn(combo) < 0;
        if (n1) ++rep.first_negative;
        if (n2) ++rep.second_negative;
        if (n1 && n2) {
          ++rep.both_negative;
          if (rep.counterexamples.size() < 10) rep.counterexamples.push_back({a, b, d, e});
        }
      }
  return rep;
}

OffdiagSweepReport sl2c_offdiag_sign_sweep(const BuiltCase& sl2c_case, const SweepSpec& spec) {
  OffdiagSweepReport rep;
  for (const Rat& a : spec.grids[0])
    for (const Rat& b : spec.grids[1])
      for (const Rat& d : spec.grids[2]) {
        if (sgn(a) <= 0 || sgn(b) <= 0) continue;
        for (const Rat& e : spec.grids.size() > 3 ? spec.grids[3] : std::vector<Rat>{Rat(1)}) {
          if (sgn(e) <= 0) continue;
          Rat entry = sl2c_offdiag_computed(sl2c_case, a, b, d, e);
          ++rep.nodes;
          if (sgn(d) == 0) {
            if (sgn(entry) != 0) ++rep.zero_off_d0;
          } else if (sgn(entry) != sgn(d)) {
            ++rep.sign_mismatches;
          }
        }
      }
  return rep;
}

}  // namespace hec
