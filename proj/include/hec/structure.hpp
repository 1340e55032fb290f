#ifndef HEC_STRUCTURE_HPP
#define HEC_STRUCTURE_HPP

#include "hec/homogeneous.hpp"
#include "hec/modules.hpp"

namespace hec {

/// Data of a presentation g = u x|_theta n with u reductive, u = g1 + center,
/// a nilsoliton candidate metric on n, and the homogeneous metric on U/K.
/// Adjoints in every condition are taken w.r.t. nil_metric on n and uk_metric
/// on the complement of U/K.
template <class S>
struct StructureData {
  SemidirectProduct<S> product;
  Mat<S> g1_span;      // columns in u coordinates (may be empty)
  Mat<S> center_span;  // columns in u coordinates (may be empty)
  Mat<S> nil_metric;
  HomogeneousSpace<S> uk_space;  // space over the algebra u
  Mat<S> uk_metric;
  Mat<S> k_metric;  // inner product on the isotropy; defaulted to -B|_k

  const LieAlgebra<S>& u() const { return product.reductive_part; }
  const LieAlgebra<S>& n() const { return product.nil_part; }

  /// theta evaluated on a u-coordinate vector.
  Mat<S> theta_of(const Vec<S>& yu) const { return product.action.of(yu); }

  /// theta images on the U/K complement basis.
  std::vector<Mat<S>> theta_on_complement() const {
    std::vector<Mat<S>> out;
    for (int j = 0; j < uk_space.dim(); ++j) out.push_back(theta_of(uk_space.complement().col(j)));
    return out;
  }
};

/// Builds StructureData, validating u = g1 + center with a commuting center,
/// and defaulting the isotropy inner product to -B|_k.
template <class S>
StructureData<S> make_structure_data(SemidirectProduct<S> product, Mat<S> g1_span, Mat<S> center_span,
                                     Mat<S> nil_metric, HomogeneousSpace<S> uk_space, Mat<S> uk_metric,
                                     std::optional<Mat<S>> k_metric = std::nullopt) {
  StructureData<S> d{std::move(product), std::move(g1_span), std::move(center_span), std::move(nil_metric),
                     std::move(uk_space), std::move(uk_metric), Mat<S>()};
  const auto& u = d.u();
  if (d.g1_span.cols() + d.center_span.cols() != u.dim())
    throw std::invalid_argument("structure data: g1 + center must span u");
  for (int z = 0; z < d.center_span.cols(); ++z) {
    Mat<S> ad = u.ad(d.center_span.col(z));
    if (max_abs(ad) > policy().structural)
      throw std::domain_error("structure data: center does not commute with u");
  }
  if (k_metric) {
    d.k_metric = *k_metric;
  } else {
    int k = d.uk_space.isotropy_dim();
    Mat<S> b = killing_form(u);
    d.k_metric = Mat<S>(k, k);
    for (int a = 0; a < k; ++a)
      for (int c = 0; c < k; ++c) d.k_metric(a, c) = -inner(d.uk_space.isotropy().col(a), b, d.uk_space.isotropy().col(c));
    if (k > 0 && !is_positive_definite_exact(d.k_metric))
      throw std::domain_error("structure data: -B|_k not positive-definite; supply k_metric");
  }
  return d;
}

/// <C_theta x, y> = tr S(theta(x)) S(theta(y)) as a bilinear form on the U/K
/// complement basis (S(..) is the nil_metric symmetrization).
template <class S>
Mat<S> c_theta_form(const StructureData<S>& d) {
  auto imgs = d.theta_on_complement();
  int m = d.uk_space.dim();
  std::vector<Mat<S>> sym;
  sym.reserve(m);
  for (auto& a : imgs) sym.push_back(symmetric_part(a, d.nil_metric));
  // tr S(A) S(B) is metric-independent once both are G-symmetrized w.r.t. the
  // same G, but the trace pairing itself must be taken with the metric:
  // tr(S(A) S(B)) as operators (coordinate trace) is the right invariant.
  Mat<S> out(m, m);
  for (int x = 0; x < m; ++x)
    for (int y = x; y < m; ++y) {
      S v = trace(sym[x] * sym[y]);
      out(x, y) = v;
      out(y, x) = v;
    }
  return out;
}

template <class S>
struct MomentMapReport {
  Mat<S> matrix;          // sum_i [theta(Y_i), theta(Y_i)^*]
  double residual = 0.0;  // max-norm of the matrix
  double center_symmetry = 0.0;  // max over central Z of |theta(Z) - theta(Z)^*|
};

/// Moment-map compatibility: sum over a basis of u, orthonormal w.r.t. the
/// extension (uk_metric on the complement, k_metric on the isotropy, k _|_ h).
/// Computed basis-free through the Gram inverse, so no orthonormalization is
/// required; exact over Rat.
template <class S>
MomentMapReport<S> moment_map_residual(const StructureData<S>& d) {
  const auto& u = d.u();
  const int nu = u.dim();
  const int k = d.uk_space.isotropy_dim();
  const int m = d.uk_space.dim();
  // Gram of u in the adapted frame [isotropy | complement]
  Mat<S> gram(nu, nu);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) gram(a, b) = d.k_metric(a, b);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) gram(k + a, k + b) = d.uk_metric(a, b);
  Mat<S> ginv = inverse(gram);
  // theta on the adapted frame
  std::vector<Mat<S>> imgs;
  for (int a = 0; a < k; ++a) imgs.push_back(d.theta_of(d.uk_space.isotropy().col(a)));
  for (int a = 0; a < m; ++a) imgs.push_back(d.theta_of(d.uk_space.complement().col(a)));
  Mat<S> gn = d.nil_metric;
  Mat<S> gninv = inverse(gn);
  auto adj = [&](const Mat<S>& a) { return gninv * a.transpose() * gn; };
  int dn = d.n().dim();
  Mat<S> total(dn, dn);
  for (int a = 0; a < nu; ++a)
    for (int b = 0; b < nu; ++b) {
      if (ScalarOps<S>::is_zero(ginv(a, b))) continue;
      Mat<S> comm = imgs[a] * adj(imgs[b]) - adj(imgs[b]) * imgs[a];
      total += ginv(a, b) * comm;
    }
  MomentMapReport<S> rep;
  rep.matrix = total;
  rep.residual = max_abs(total);
  double cs = 0.0;
  for (int z = 0; z < d.center_span.cols(); ++z) {
    Mat<S> t = d.theta_of(d.center_span.col(z));
    cs = std::max(cs, max_abs(t - adj(t)));
  }
  rep.center_symmetry = cs;
  return rep;
}

template <class S>
struct GeneralizedEinsteinReport {
  Mat<S> c_theta;        // bilinear form on the complement
  Mat<S> ricci_theta;    // operator of Ric - C_theta w.r.t. uk_metric
  S c_estimate{};
  double residual = 0.0;  // sup-norm of Ric - C_theta - c g in a g-orthonormal frame
};

/// Checks Ric_{U/K} = c g + C_theta; c estimated as the normalized trace.
template <class S>
GeneralizedEinsteinReport<S> generalized_einstein(const StructureData<S>& d) {
  GeneralizedEinsteinReport<S> rep;
  Mat<S> ric = ricci_form(d.uk_space, d.uk_metric);
  rep.c_theta = c_theta_form(d);
  Mat<S> diff = ric - rep.c_theta;
  rep.ricci_theta = solve(d.uk_metric, diff);
  rep.c_estimate = trace(rep.ricci_theta) / S(d.uk_space.dim());
  Mat<S> resid = diff - rep.c_estimate * d.uk_metric;
  rep.residual = normalized_form_norm(convert<double>(resid), convert<double>(d.uk_metric));
  return rep;
}

template <class S>
struct NilsolitonReport {
  S c{};
  Mat<S> derivation;
  double residual = 0.0;  // Frobenius norm of Ric_op - cI - D
};

/// Least-squares fit Ric_N = c I + D over scalars c and derivations D.
/// By convention the flat case reports (0, 0).
template <class S>
NilsolitonReport<S> nilsoliton_residual(const LieAlgebra<S>& n, const Mat<S>& metric) {
  if (!is_nilpotent(n)) throw std::domain_error("nilsoliton_residual: algebra is not nilpotent");
  const int dn = n.dim();
  HomogeneousSpace<S> grp = lie_group_space(n, "N");
  Mat<S> ric = ricci_form(grp, metric);
  Mat<S> ric_op = solve(metric, ric);
  NilsolitonReport<S> rep;
  rep.derivation = Mat<S>(dn, dn);
  if (max_abs(ric_op) <= policy().curvature) {
    rep.c = ScalarOps<S>::zero();
    rep.residual = 0.0;
    return rep;
  }
  Mat<S> ders = derivation_space(n);
  const int r = ders.cols();
  // unknowns: (c, alpha_1..alpha_r); columns: vec(I), vec(D_i)
  Mat<S> a(dn * dn, r + 1);
  for (int i = 0; i < dn; ++i) a(i * dn + i, 0) = ScalarOps<S>::one();
  for (int j = 0; j < r; ++j)
    for (int idx = 0; idx < dn * dn; ++idx) a(idx, j + 1) = ders(idx, j);
  Vec<S> rhs(dn * dn, ScalarOps<S>::zero());
  for (int s = 0; s < dn; ++s)
    for (int rr = 0; rr < dn; ++rr) rhs[static_cast<size_t>(s) * dn + rr] = ric_op(rr, s);
  // normal equations (exact-friendly); the Gram matrix may be singular when
  // I itself is a derivation (abelian directions), so regularize by dropping
  // dependent columns via RREF pivots.
  Mat<S> reduced = a;
  std::vector<int> piv = rref(reduced);
  if (static_cast<int>(piv.size()) < r + 1) {
    Mat<S> a2(dn * dn, static_cast<int>(piv.size()));
    for (size_t j = 0; j < piv.size(); ++j) a2.set_col(static_cast<int>(j), a.col(piv[j]));
    Mat<S> g2 = a2.transpose() * a2;
    Vec<S> sol2 = solve(g2, a2.transpose() * rhs);
    Vec<S> sol(r + 1, ScalarOps<S>::zero());
    for (size_t j = 0; j < piv.size(); ++j) sol[piv[j]] = sol2[j];
    rep.c = sol[0];
    for (int j = 0; j < r; ++j)
      if (!ScalarOps<S>::is_zero(sol[j + 1])) rep.derivation += sol[j + 1] * unvectorize(ders.col(j), dn);
  } else {
    Mat<S> at = a.transpose();
    Vec<S> sol = solve(at * a, at * rhs);
    rep.c = sol[0];
    for (int j = 0; j < r; ++j)
      if (!ScalarOps<S>::is_zero(sol[j + 1])) rep.derivation += sol[j + 1] * unvectorize(ders.col(j), dn);
  }
  Mat<S> resid = ric_op - rep.derivation;
  for (int i = 0; i < dn; ++i) resid(i, i) -= rep.c;
  double fro = 0.0;
  for (int i = 0; i < dn; ++i)
    for (int j = 0; j < dn; ++j) {
      double v = ScalarOps<S>::to_double(resid(i, j));
      fro += v * v;
    }
  rep.residual = std::sqrt(fro);
  return rep;
}

struct WeightDecomposition {
  std::vector<MatD> subspaces;        // spans of n, columns
  std::vector<VecD> weights;          // per subspace, values on the center basis
  double offblock_residual = 0.0;     // theta|g1 leakage between blocks
  double traceless_residual = 0.0;    // max |tr theta_g1^k(Y)|
};

/// Orthogonal (w.r.t. nil_metric) common eigenspace decomposition of n under
/// {S(theta(Z)) : Z center basis}; checks that theta|_g1 preserves the blocks
/// and acts tracelessly on each.
WeightDecomposition weight_decomposition(const StructureData<double>& d);

struct CenterOrthogonalityReport {
  bool orthogonal = true;
  double violation = 0.0;
};

/// Checks <z(u) cap complement, g1 cap complement> = 0 under uk_metric.
template <class S>
CenterOrthogonalityReport center_orthogonality_check(const StructureData<S>& d) {
  CenterOrthogonalityReport rep;
  // complement coordinates of the center and g1 spans
  const auto& sp = d.uk_space;
  int k = sp.isotropy_dim(), m = sp.dim();
  auto complement_part = [&](const Mat<S>& span_u) {
    Mat<S> out(m, span_u.cols());
    for (int j = 0; j < span_u.cols(); ++j) {
      Vec<S> w = sp.adapted_coords(span_u.col(j));
      for (int i = 0; i < m; ++i) out(i, j) = w[k + i];
    }
    return out;
  };
  Mat<S> zc = complement_part(d.center_span);
  Mat<S> gc = complement_part(d.g1_span);
  if (zc.cols() == 0 || gc.cols() == 0) return rep;
  Mat<S> cross = zc.transpose() * (d.uk_metric * gc);
  rep.violation = max_abs(cross);
  rep.orthogonal = rep.violation <= policy().curvature;
  return rep;
}

enum class RankOneError { None, NotCentralized, NotIdeal };

template <class S>
struct RankOneReport {
  HomogeneousSpace<S> reduced;
  Mat<S> reduced_metric;
  double identity_residual = 0.0;  // Ric_{G/K}|_p~ - Ric_{G~/K} - 1/2 [A, A*]
};

/// Codimension-one reduction along x (complement coordinates): checks the
/// preconditions ([H,x]=0 and x-perp a codim-one ideal containing H and k),
/// builds the reduced space with the induced metric and returns the residual
/// of Ric_{G/K}|_p~ = Ric_{G~/K} + 1/2 [A, A*], A = ad x|_p~.
template <class S>
RankOneReport<S> rank_one_reduction(const HomogeneousSpace<S>& sp, const Mat<S>& g, const Vec<S>& x) {
  const int k = sp.isotropy_dim(), m = sp.dim();
  const auto& alg = sp.algebra();
  CurvatureData<S> cd = curvature_data(sp);
  Vec<S> h = solve(g, cd.trace_ad);  // mean curvature in complement coords
  Vec<S> hx = sp.bracket_m(h, x);
  Vec<S> hxk = sp.bracket_k(h, x);
  if (max_abs(hx) > policy().structural || max_abs(hxk) > policy().structural)
    throw std::domain_error("NotCentralized");
  // p~ = orthogonal complement of x inside the complement (w.r.t. g)
  Vec<S> gx = g * x;
  Mat<S> row(1, m);
  for (int j = 0; j < m; ++j) row(0, j) = gx[j];
  Mat<S> ptilde;
  if constexpr (ScalarOps<S>::exact) {
    ptilde = nullspace(row);
  } else {
    ptilde = nullspace_svd(row);
  }
  // g~ = k + p~ must be an ideal: [g, g~] inside g~, i.e. brackets avoid the
  // x-direction of the complement (coordinates w.r.t. the g-orthogonal split).
  S xx = inner(x, g, x);
  auto x_component = [&](const Vec<S>& wm) -> S { return inner(x, g, wm) / xx; };
  double worst = 0.0;
  // brackets of full-algebra basis with k and p~ vectors
  for (int a = 0; a < alg.dim(); ++a) {
    Vec<S> ea = alg.basis_vector(a);
    for (int j = 0; j < ptilde.cols(); ++j) {
      Vec<S> w = sp.adapted_coords(alg.bracket(ea, sp.complement() * ptilde.col(j)));
      Vec<S> wm(w.begin() + k, w.end());
      worst = std::max(worst, std::fabs(ScalarOps<S>::to_double(x_component(wm))));
    }
    for (int j = 0; j < k; ++j) {
      Vec<S> w = sp.adapted_coords(alg.bracket(ea, sp.isotropy().col(j)));
      Vec<S> wm(w.begin() + k, w.end());
      worst = std::max(worst, std::fabs(ScalarOps<S>::to_double(x_component(wm))));
    }
  }
  // H must lie in g~
  worst = std::max(worst, std::fabs(ScalarOps<S>::to_double(x_component(h))));
  if (worst > 1e-9) throw std::domain_error("NotIdeal");

  // reduced space: algebra spanned by k + p~ with induced brackets; build via
  // the sub-basis in full-algebra coordinates
  int mt = ptilde.cols();
  Mat<S> sub(alg.dim(), k + mt);
  for (int j = 0; j < k; ++j) sub.set_col(j, sp.isotropy().col(j));
  for (int j = 0; j < mt; ++j) sub.set_col(k + j, sp.complement() * ptilde.col(j));
  // coordinates: solve sub * c = v in least-squares (sub has full column rank)
  Mat<S> subt = sub.transpose();
  Mat<S> gram = subt * sub;
  LieAlgebra<S> reduced_alg(k + mt);
  for (int i = 0; i < k + mt; ++i)
    for (int j = i + 1; j < k + mt; ++j) {
      Vec<S> br = alg.bracket(sub.col(i), sub.col(j));
      Vec<S> coef = solve(gram, subt * br);
      if (max_abs(sub * coef - br) > 1e-9) throw std::domain_error("NotIdeal");
      for (int t = 0; t < k + mt; ++t)
        if (!ScalarOps<S>::is_zero(coef[t])) reduced_alg.set_bracket(i, j, t, coef[t]);
    }
  std::vector<int> iso_idx(k), comp_idx(mt);
  for (int i = 0; i < k; ++i) iso_idx[i] = i;
  for (int i = 0; i < mt; ++i) comp_idx[i] = k + i;
  HomogeneousSpace<S> red(reduced_alg, span_from_indices<S>(k + mt, iso_idx),
                          span_from_indices<S>(k + mt, comp_idx), sp.name() + "~");
  Mat<S> gred = ptilde.transpose() * (g * ptilde);

  // identity check
  Mat<S> ric_big = ricci_form(cd, g);
  Mat<S> ric_big_op = solve(g, ric_big);
  // restrict to p~: P^+ ric_op P with P = ptilde, using g-orthogonal projection
  Mat<S> proj = solve(gred, ptilde.transpose() * (g * (ric_big_op * ptilde)));
  Mat<S> ric_red_op = solve(gred, ricci_form(red, gred));
  // A = ad x|_p~ projected to p~
  Mat<S> a(mt, mt);
  for (int j = 0; j < mt; ++j) {
    Vec<S> w = sp.bracket_m(x, ptilde.col(j));
    // coordinates of w in the (x, p~) split: take p~ g-orthogonal part
    Vec<S> coef = solve(gred, ptilde.transpose() * (g * w));
    for (int i = 0; i < mt; ++i) a(i, j) = coef[i];
  }
  Mat<S> astar = solve(gred, a.transpose() * gred);
  Mat<S> corr = (ScalarOps<S>::one() / S(2)) * (a * astar - astar * a);
  RankOneReport<S> rep{red, gred, max_abs(proj - ric_red_op - corr)};
  return rep;
}

/// Max-norm of S(ad H |_complement) w.r.t. uk_metric; zero certifies the
/// algebraic-soliton condition.
template <class S>
double mean_curvature_symmetric_part_check(const StructureData<S>& d) {
  // H of the full algebra g = u x n, w.r.t. the extended product
  // (k_metric + uk_metric + nil_metric, mutually orthogonal blocks).
  const auto& total = d.product.total;
  int nu = d.u().dim(), dn = d.n().dim();
  int k = d.uk_space.isotropy_dim(), m = d.uk_space.dim();
  Mat<S> frame(nu + dn, nu + dn);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < nu; ++i) frame(i, j) = d.uk_space.isotropy()(i, j);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < nu; ++i) frame(i, k + j) = d.uk_space.complement()(i, j);
  for (int j = 0; j < dn; ++j) frame(nu + j, nu + j) = ScalarOps<S>::one();
  Mat<S> gram(nu + dn, nu + dn);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) gram(a, b) = d.k_metric(a, b);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) gram(k + a, k + b) = d.uk_metric(a, b);
  for (int a = 0; a < dn; ++a)
    for (int b = 0; b < dn; ++b) gram(nu + a, nu + b) = d.nil_metric(a, b);
  // traces in the adapted frame
  Vec<S> t(nu + dn, ScalarOps<S>::zero());
  for (int j = 0; j < nu + dn; ++j) t[j] = trace(total.ad(frame.col(j)));
  Vec<S> hcoef = solve(gram, t);  // adapted-frame coordinates of H
  Vec<S> h = frame * hcoef;       // algebra coordinates
  // ad H restricted to the U/K complement, projected there
  Vec<S> hu(h.begin(), h.begin() + nu);
  Mat<S> adh(m, m);
  for (int j = 0; j < m; ++j) {
    Vec<S> w = d.uk_space.adapted_coords(d.u().bracket(hu, d.uk_space.complement().col(j)));
    for (int i = 0; i < m; ++i) adh(i, j) = w[k + i];
  }
  return max_abs(symmetric_part(adh, d.uk_metric));
}

}  // namespace hec

#endif
