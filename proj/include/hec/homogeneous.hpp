#ifndef HEC_HOMOGENEOUS_HPP
#define HEC_HOMOGENEOUS_HPP

#include <optional>
#include <string>

#include "hec/lie_algebra.hpp"

namespace hec {

/// Reductive homogeneous space G/K at the infinitesimal level:
/// g = k + m with [k, m] contained in m. Spans are column matrices in the
/// basis of `algebra`; the adapted frame [isotropy | complement] is cached.
template <class S>
class HomogeneousSpace {
 public:
  HomogeneousSpace() = default;
  HomogeneousSpace(LieAlgebra<S> algebra, Mat<S> isotropy, Mat<S> complement, std::string name,
                   double tol = 0.0)
      : algebra_(std::move(algebra)),
        isotropy_(std::move(isotropy)),
        complement_(std::move(complement)),
        name_(std::move(name)) {
    if (tol <= 0.0) tol = policy().structural;
    const int n = algebra_.dim();
    k_ = isotropy_.cols();
    m_ = complement_.cols();
    if (k_ + m_ != n) throw std::invalid_argument(name_ + ": isotropy + complement must span");
    frame_ = Mat<S>(n, n);
    for (int j = 0; j < k_; ++j) frame_.set_col(j, isotropy_.col(j));
    for (int j = 0; j < m_; ++j) frame_.set_col(k_ + j, complement_.col(j));
    frame_inv_ = inverse(frame_);  // throws if not a direct sum decomposition

    // [k,k] in k and [k,m] in m
    double worst_kk = 0.0, worst_km = 0.0;
    for (int a = 0; a < k_; ++a) {
      for (int b = 0; b < k_; ++b) {
        Vec<S> w = frame_inv_ * algebra_.bracket(isotropy_.col(a), isotropy_.col(b));
        for (int t = k_; t < n; ++t) worst_kk = std::max(worst_kk, std::fabs(ScalarOps<S>::to_double(w[t])));
      }
      for (int b = 0; b < m_; ++b) {
        Vec<S> w = frame_inv_ * algebra_.bracket(isotropy_.col(a), complement_.col(b));
        for (int t = 0; t < k_; ++t) worst_km = std::max(worst_km, std::fabs(ScalarOps<S>::to_double(w[t])));
      }
    }
    if (worst_kk > tol) throw std::domain_error(name_ + ": isotropy not a subalgebra, residual " + std::to_string(worst_kk));
    if (worst_km > tol) throw std::domain_error(name_ + ": not reductive, residual " + std::to_string(worst_km));
  }

  const LieAlgebra<S>& algebra() const { return algebra_; }
  const Mat<S>& isotropy() const { return isotropy_; }
  const Mat<S>& complement() const { return complement_; }
  const std::string& name() const { return name_; }
  int isotropy_dim() const { return k_; }
  int dim() const { return m_; }

  /// Coordinates of x in the adapted frame: first k isotropy, last m complement.
  Vec<S> adapted_coords(const Vec<S>& x) const { return frame_inv_ * x; }

  /// Complement part of the bracket of two complement-coordinate vectors.
  Vec<S> bracket_m(const Vec<S>& xm, const Vec<S>& ym) const {
    Vec<S> w = adapted_coords(algebra_.bracket(complement_ * xm, complement_ * ym));
    return Vec<S>(w.begin() + k_, w.end());
  }

  /// Isotropy part of the same bracket (coordinates in the isotropy span).
  Vec<S> bracket_k(const Vec<S>& xm, const Vec<S>& ym) const {
    Vec<S> w = adapted_coords(algebra_.bracket(complement_ * xm, complement_ * ym));
    return Vec<S>(w.begin(), w.begin() + k_);
  }

  /// ad(Z)|_m for an isotropy basis vector (an m x m matrix); well-defined by
  /// reductivity.
  Mat<S> isotropy_action(int z) const {
    Mat<S> a(m_, m_);
    for (int j = 0; j < m_; ++j) {
      Vec<S> w = adapted_coords(algebra_.bracket(isotropy_.col(z), complement_.col(j)));
      for (int i = 0; i < m_; ++i) a(i, j) = w[k_ + i];
    }
    return a;
  }

  /// ad_m(x) for x in complement coordinates: m -> m, projection along k.
  Mat<S> ad_m(const Vec<S>& xm) const {
    Mat<S> a(m_, m_);
    for (int j = 0; j < m_; ++j) {
      Vec<S> unit(m_, ScalarOps<S>::zero());
      unit[j] = ScalarOps<S>::one();
      Vec<S> w = bracket_m(xm, unit);
      for (int i = 0; i < m_; ++i) a(i, j) = w[i];
    }
    return a;
  }

 private:
  LieAlgebra<S> algebra_;
  Mat<S> isotropy_, complement_;
  std::string name_;
  Mat<S> frame_, frame_inv_;
  int k_ = 0, m_ = 0;
};

template <class S>
HomogeneousSpace<S> lie_group_space(const LieAlgebra<S>& g, const std::string& name) {
  int n = g.dim();
  return HomogeneousSpace<S>(g, Mat<S>(n, 0), Mat<S>::identity(n), name);
}

template <class S>
Mat<S> span_from_indices(int dim, const std::vector<int>& idx) {
  Mat<S> m(dim, static_cast<int>(idx.size()));
  for (size_t j = 0; j < idx.size(); ++j) m(idx[j], static_cast<int>(j)) = ScalarOps<S>::one();
  return m;
}

template <class T, class S>
HomogeneousSpace<T> convert_space(const HomogeneousSpace<S>& sp) {
  return HomogeneousSpace<T>(convert_algebra<T>(sp.algebra()), convert<T>(sp.isotropy()),
                             convert<T>(sp.complement()), sp.name());
}

/// Everything the curvature formulas need, precomputed once per space:
/// the complement bracket tensor, the restricted Killing form and the
/// traces tr(ad e_a). Convert to double/Dual for numeric work.
template <class S>
struct CurvatureData {
  int m = 0;
  std::vector<S> t;     // t[(a*m+b)*m+k] = <[e_a,e_b]_m>^k
  Mat<S> killing_m;     // full Killing form restricted to complement
  Vec<S> trace_ad;      // tr ad(e_a), a over complement
  const S& tm(int a, int b, int k) const { return t[(static_cast<size_t>(a) * m + b) * m + k]; }
};

template <class S>
CurvatureData<S> curvature_data(const HomogeneousSpace<S>& sp) {
  int m = sp.dim();
  CurvatureData<S> d;
  d.m = m;
  d.t.assign(static_cast<size_t>(m) * m * m, ScalarOps<S>::zero());
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      Vec<S> av(m, ScalarOps<S>::zero()), bv(m, ScalarOps<S>::zero());
      av[a] = ScalarOps<S>::one();
      bv[b] = ScalarOps<S>::one();
      Vec<S> w = sp.bracket_m(av, bv);
      for (int k = 0; k < m; ++k) {
        d.t[(static_cast<size_t>(a) * m + b) * m + k] = w[k];
        d.t[(static_cast<size_t>(b) * m + a) * m + k] = -w[k];
      }
    }
  Mat<S> bfull = killing_form(sp.algebra());
  d.killing_m = Mat<S>(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) d.killing_m(a, b) = inner(sp.complement().col(a), bfull, sp.complement().col(b));
  // Here `inner` abuses Mat as Gram; bfull is the Killing form in algebra basis.
  d.trace_ad = Vec<S>(m, ScalarOps<S>::zero());
  for (int a = 0; a < m; ++a) d.trace_ad[a] = trace(sp.algebra().ad(sp.complement().col(a)));
  return d;
}

template <class T, class S>
CurvatureData<T> convert_curvature(const CurvatureData<S>& d) {
  CurvatureData<T> out;
  out.m = d.m;
  out.t.reserve(d.t.size());
  for (const auto& x : d.t) out.t.push_back(T(ScalarOps<S>::to_double(x)));
  out.killing_m = convert<T>(d.killing_m);
  out.trace_ad = convert<T>(d.trace_ad);
  return out;
}

/// Ricci bilinear form of the invariant metric with Gram matrix G on the
/// complement basis: the structure-constant formula with the mean-curvature
/// term, valid for any reductive G/K with compactly embedded isotropy.
template <class S>
Mat<S> ricci_form(const CurvatureData<S>& d, const Mat<S>& g) {
  const int m = d.m;
  const S half = ScalarOps<S>::one() / S(2);
  const S quarter = ScalarOps<S>::one() / S(4);
  Mat<S> ginv = inverse(g);

  // U[a][b] column x: <[e_a,e_b]_m, e_x> = sum_k t(a,b,k) g(k,x)
  std::vector<Mat<S>> v(m, Mat<S>(m, m));  // v[x](a,b) = <[e_a,e_b], e_x>
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int x = 0; x < m; ++x) {
        S acc = ScalarOps<S>::zero();
        for (int k = 0; k < m; ++k) acc += d.tm(a, b, k) * g(k, x);
        v[x](a, b) = acc;
      }

  std::vector<Mat<S>> adb(m);  // ad_m(e_x)
  for (int x = 0; x < m; ++x) {
    Mat<S> a(m, m);
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) a(k, j) = d.tm(x, j, k);
    adb[x] = a;
  }

  Mat<S> ric(m, m);
  // term1: -1/2 tr( Ginv ad_x^T G ad_y )
  for (int x = 0; x < m; ++x) {
    Mat<S> gx = g * adb[x];  // gx^T = adx^T G
    for (int y = x; y < m; ++y) {
      Mat<S> prod = ginv * (gx.transpose() * adb[y]);
      S t1 = -half * trace(prod);
      ric(x, y) += t1;
      if (y != x) ric(y, x) += t1;
    }
  }
  // term2: 1/4 sum Ginv[ac] Ginv[bd] v[x](a,b) v[y](c,d)
  std::vector<Mat<S>> w(m);
  for (int x = 0; x < m; ++x) w[x] = ginv * v[x] * ginv;
  for (int x = 0; x < m; ++x)
    for (int y = x; y < m; ++y) {
      S acc = ScalarOps<S>::zero();
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) acc += w[x](a, b) * v[y](a, b);
      S t2 = quarter * acc;
      ric(x, y) += t2;
      if (y != x) ric(y, x) += t2;
    }
  // term3: -1/2 B
  ric -= half * d.killing_m;
  // mean-curvature term: -1/2 (<[H,x]_m, y> + <[H,y]_m, x>)
  bool unimodular = true;
  for (const auto& tval : d.trace_ad)
    if (!ScalarOps<S>::is_zero(tval)) unimodular = false;
  if (!unimodular) {
    Vec<S> h = solve(g, d.trace_ad);
    Mat<S> adh(m, m);
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        S acc = ScalarOps<S>::zero();
        for (int c = 0; c < m; ++c) acc += h[c] * d.tm(c, j, k);
        adh(k, j) = acc;
      }
    Mat<S> gadh = g * adh;  // column y, row x: <[H, e_y], e_x>
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) ric(x, y) -= half * (gadh(y, x) + gadh(x, y));
  }
  return ric;
}

template <class S>
Mat<S> ricci_form(const HomogeneousSpace<S>& sp, const Mat<S>& g) {
  return ricci_form(curvature_data(sp), g);
}

/// Ricci evaluated on two complement-coordinate vectors.
template <class S>
S ricci_entry(const Mat<S>& ric, const Vec<S>& x, const Vec<S>& y) {
  return inner(x, ric, y);
}

template <class S>
S scalar_curvature(const CurvatureData<S>& d, const Mat<S>& g) {
  return trace(solve(g, ricci_form(d, g)));
}

template <class S>
struct EinsteinReport {
  S c{};             // scal / dim
  Mat<S> residual_form;  // Ric - c g   (minus C_theta when present)
  double residual = 0.0; // metric-normalized sup norm
};

/// Sup norm of a bilinear form measured in a g-orthonormal frame.
inline double normalized_form_norm(const MatD& form, const MatD& g) {
  MatD linv = inverse(cholesky(g));
  return max_abs(linv * form * linv.transpose());
}

template <class S>
EinsteinReport<S> einstein_residual(const CurvatureData<S>& d, const Mat<S>& g) {
  EinsteinReport<S> rep;
  Mat<S> ric = ricci_form(d, g);
  rep.c = trace(solve(g, ric)) / S(d.m);
  rep.residual_form = ric - rep.c * g;
  rep.residual = normalized_form_norm(convert<double>(rep.residual_form), convert<double>(g));
  return rep;
}

template <class S>
EinsteinReport<S> einstein_residual(const HomogeneousSpace<S>& sp, const Mat<S>& g) {
  return einstein_residual(curvature_data(sp), g);
}

/// Metric-adjoint symmetrization S(A) = (A + A*)/2, A* = G^-1 A^T G.
template <class S>
Mat<S> symmetric_part(const Mat<S>& a, const Mat<S>& g) {
  Mat<S> astar = solve(g, a.transpose() * g);
  return (ScalarOps<S>::one() / S(2)) * (a + astar);
}

enum class IsotropyFixedError { None, NotUnimodular, NotIsotropyFixed };

/// Lemma-style Ricci entry for isotropy-fixed directions on unimodular spaces:
/// Ric(x,y) = 1/4 sum <[e_i,e_j]_m, x><[e_i,e_j]_m, y> - tr S(ad_m x) S(ad_m y),
/// dropping the first sum when y is orthogonal to [g,g]_m.
template <class S>
S ricci_flat_isotropy(const HomogeneousSpace<S>& sp, const CurvatureData<S>& d, const Mat<S>& g,
                      const Vec<S>& x, const Vec<S>& y) {
  for (const auto& tval : d.trace_ad)
    if (std::fabs(ScalarOps<S>::to_double(tval)) > policy().structural)
      throw std::domain_error("NotUnimodular");
  for (int z = 0; z < sp.isotropy_dim(); ++z) {
    Vec<S> bx = sp.adapted_coords(sp.algebra().bracket(sp.isotropy().col(z), sp.complement() * x));
    Vec<S> by = sp.adapted_coords(sp.algebra().bracket(sp.isotropy().col(z), sp.complement() * y));
    if (max_abs(bx) > policy().structural || max_abs(by) > policy().structural)
      throw std::domain_error("NotIsotropyFixed");
  }
  const int m = d.m;
  const S quarter = ScalarOps<S>::one() / S(4);
  Mat<S> ginv = inverse(g);
  Mat<S> adx = sp.ad_m(x), ady = sp.ad_m(y);
  S second = trace(symmetric_part(adx, g) * symmetric_part(ady, g));

  // Is y orthogonal to [g,g]_m? ([u,u] projected to the complement.)
  Vec<S> gy = g * y;
  double worst = 0.0;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      S acc = ScalarOps<S>::zero();
      for (int k = 0; k < m; ++k) acc += d.tm(a, b, k) * gy[k];
      worst = std::max(worst, std::fabs(ScalarOps<S>::to_double(acc)));
    }
  // Also brackets involving isotropy land in m via [k,m]; those are covered by
  // invariant metrics being orthogonal decompositions; the commutator span in m
  // from k-brackets is [k,m] itself.
  for (int z = 0; z < sp.isotropy_dim() && worst <= policy().structural; ++z) {
    Mat<S> act = sp.isotropy_action(z);
    for (int j = 0; j < m; ++j) {
      S acc = ScalarOps<S>::zero();
      for (int k = 0; k < m; ++k) acc += act(k, j) * gy[k];
      worst = std::max(worst, std::fabs(ScalarOps<S>::to_double(acc)));
    }
  }
  if (worst <= policy().structural) return -second;

  Mat<S> gv(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      S acc = ScalarOps<S>::zero();
      for (int k = 0; k < m; ++k) acc += d.tm(a, b, k) * gy[k];
      gv(a, b) = acc;
    }
  Mat<S> gx(m, m);
  Vec<S> gxv = g * x;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      S acc = ScalarOps<S>::zero();
      for (int k = 0; k < m; ++k) acc += d.tm(a, b, k) * gxv[k];
      gx(a, b) = acc;
    }
  S first = ScalarOps<S>::zero();
  Mat<S> mx = ginv * gx * ginv;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) first += mx(a, b) * gv(a, b);
  return quarter * first - second;
}

}  // namespace hec

#endif
