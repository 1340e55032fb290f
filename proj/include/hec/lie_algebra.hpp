#ifndef HEC_LIE_ALGEBRA_HPP
#define HEC_LIE_ALGEBRA_HPP

#include <string>
#include <vector>

#include "hec/matrix.hpp"
#include "hec/numeric.hpp"

namespace hec {

/// Finite-dimensional real Lie algebra given by structure constants over a
/// labeled basis: [e_i, e_j] = sum_k c[i][j][k] e_k.
template <class S>
class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(int dim, std::vector<std::string> labels)
      : dim_(dim), labels_(std::move(labels)), c_(static_cast<size_t>(dim) * dim * dim, ScalarOps<S>::zero()) {
    if (static_cast<int>(labels_.size()) != dim) {
      labels_.resize(dim);
      for (int i = 0; i < dim; ++i)
        if (labels_[i].empty()) labels_[i] = "e" + std::to_string(i);
    }
  }
  explicit LieAlgebra(int dim) : LieAlgebra(dim, {}) {}

  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  const S& c(int i, int j, int k) const { return c_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k]; }

  /// Sets c[i][j][k] = v and c[j][i][k] = -v.
  void set_bracket(int i, int j, int k, const S& v) {
    c_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k] = v;
    c_[(static_cast<size_t>(j) * dim_ + i) * dim_ + k] = -v;
  }

  Vec<S> bracket_basis(int i, int j) const {
    Vec<S> out(dim_, ScalarOps<S>::zero());
    for (int k = 0; k < dim_; ++k) out[k] = c(i, j, k);
    return out;
  }

  Vec<S> bracket(const Vec<S>& x, const Vec<S>& y) const {
    if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
      throw std::invalid_argument("bracket: dimension mismatch");
    Vec<S> out(dim_, ScalarOps<S>::zero());
    for (int i = 0; i < dim_; ++i) {
      if (ScalarOps<S>::is_zero(x[i])) continue;
      for (int j = 0; j < dim_; ++j) {
        if (ScalarOps<S>::is_zero(y[j])) continue;
        S f = x[i] * y[j];
        for (int k = 0; k < dim_; ++k) out[k] += f * c(i, j, k);
      }
    }
    return out;
  }

  /// Matrix of ad(x) in the algebra basis.
  Mat<S> ad(const Vec<S>& x) const {
    Mat<S> m(dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
      for (int i = 0; i < dim_; ++i) {
        if (ScalarOps<S>::is_zero(x[i])) continue;
        for (int k = 0; k < dim_; ++k) m(k, j) += x[i] * c(i, j, k);
      }
    }
    return m;
  }

  Mat<S> ad_basis(int i) const {
    Mat<S> m(dim_, dim_);
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) m(k, j) = c(i, j, k);
    return m;
  }

  Vec<S> basis_vector(int i) const {
    Vec<S> v(dim_, ScalarOps<S>::zero());
    v[i] = ScalarOps<S>::one();
    return v;
  }

  double antisymmetry_residual() const {
    double worst = 0.0;
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k) {
          S r = c(i, j, k) + c(j, i, k);
          worst = std::max(worst, std::fabs(ScalarOps<S>::to_double(r)));
        }
    return worst;
  }

  double jacobi_residual() const {
    double worst = 0.0;
    for (int i = 0; i < dim_; ++i)
      for (int j = i + 1; j < dim_; ++j)
        for (int k = j + 1; k < dim_; ++k) {
          Vec<S> s = bracket(bracket_basis(i, j), basis_vector(k));
          s = s + bracket(bracket_basis(j, k), basis_vector(i));
          s = s + bracket(bracket_basis(k, i), basis_vector(j));
          worst = std::max(worst, max_abs(s));
        }
    return worst;
  }

 private:
  int dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<S> c_;
};

template <class S>
Mat<S> killing_form(const LieAlgebra<S>& g) {
  int n = g.dim();
  std::vector<Mat<S>> ads;
  ads.reserve(n);
  for (int i = 0; i < n; ++i) ads.push_back(g.ad_basis(i));
  Mat<S> b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      S t = ScalarOps<S>::zero();
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) t += ads[i](p, q) * ads[j](q, p);
      b(i, j) = t;
      b(j, i) = t;
    }
  return b;
}

/// Lower central series test: g^{(1)} = [g,g], g^{(r+1)} = [g, g^{(r)}].
template <class S>
bool is_nilpotent(const LieAlgebra<S>& g, double tol = 1e-11) {
  int n = g.dim();
  // current: columns spanning g^{(r)}
  Mat<S> current(n, n);
  for (int i = 0; i < n; ++i) current(i, i) = ScalarOps<S>::one();
  for (int step = 0; step <= n; ++step) {
    // next = span of [e_i, current_cols]
    Mat<S> pairs(n, n * current.cols());
    int col = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < current.cols(); ++j) {
        Vec<S> v = g.bracket(g.basis_vector(i), current.col(j));
        for (int k = 0; k < n; ++k) pairs(k, col) = v[k];
        ++col;
      }
    Mat<S> reduced = pairs;
    std::vector<int> piv = rref(reduced, tol);
    if (piv.empty()) return true;
    Mat<S> next(n, static_cast<int>(piv.size()));
    for (size_t p = 0; p < piv.size(); ++p) next.set_col(static_cast<int>(p), pairs.col(piv[p]));
    if (next.cols() >= current.cols() && step > 0) return false;
    current = next;
  }
  return false;
}

/// The unique H with <H, X> = tr(ad X) for all X; zero iff unimodular.
template <class S>
Vec<S> mean_curvature_vector(const LieAlgebra<S>& g, const Mat<S>& metric);

/// Representation of a Lie algebra by matrices on R^target_dim.
template <class S>
struct Representation {
  int target_dim = 0;
  std::vector<Mat<S>> images;  // one per source basis vector

  static Representation zero(int source_dim, int target_dim) {
    Representation r;
    r.target_dim = target_dim;
    r.images.assign(source_dim, Mat<S>(target_dim, target_dim));
    return r;
  }

  Mat<S> of(const Vec<S>& x) const {
    Mat<S> m(target_dim, target_dim);
    for (size_t i = 0; i < images.size(); ++i) {
      if (ScalarOps<S>::is_zero(x[i])) continue;
      m += x[i] * images[i];
    }
    return m;
  }

  double homomorphism_residual(const LieAlgebra<S>& source) const {
    double worst = 0.0;
    int n = source.dim();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Mat<S> lhs = of(source.bracket_basis(i, j));
        Mat<S> comm = images[i] * images[j] - images[j] * images[i];
        worst = std::max(worst, max_abs(lhs - comm));
      }
    return worst;
  }
};

/// Residual of "D is a derivation of g": D[x,y] - [Dx,y] - [x,Dy] over basis pairs.
template <class S>
double derivation_residual(const LieAlgebra<S>& g, const Mat<S>& d) {
  double worst = 0.0;
  int n = g.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec<S> lhs = d * g.bracket_basis(i, j);
      Vec<S> rhs = g.bracket(d.col(i), g.basis_vector(j)) + g.bracket(g.basis_vector(i), d.col(j));
      worst = std::max(worst, max_abs(lhs - rhs));
    }
  return worst;
}

/// Basis of the derivation algebra Der(g) as matrix columns (each column is a
/// vectorized n x n matrix, column-major), computed as a null space.
template <class S>
Mat<S> derivation_space(const LieAlgebra<S>& g, double tol = 1e-11) {
  int n = g.dim();
  // Unknown D (n^2 entries, D[r][s] at index s*n+r). Constraint per (i<j, k):
  // sum_s D[k][s]... assembled from D[x,y] - [Dx,y] - [x,Dy] = 0.
  int pairs = n * (n - 1) / 2;
  Mat<S> sys(pairs * n, n * n);
  int rowbase = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      // coefficient of D[k][s]:
      //   D[x,y]: D applied to c_ij^s e_s -> row k gets c(i,j,s) * D[k][s]
      //   [Dx,y]: D[s][i] * c(s,j,k)
      //   [x,Dy]: D[s][j] * c(i,s,k)
      for (int k = 0; k < n; ++k) {
        for (int s = 0; s < n; ++s) {
          sys(rowbase + k, s * n + k) += g.c(i, j, s);
          sys(rowbase + k, i * n + s) -= g.c(s, j, k);
          sys(rowbase + k, j * n + s) -= g.c(i, s, k);
        }
      }
      rowbase += n;
    }
  return nullspace(sys, tol);
}

template <class S>
Mat<S> unvectorize(const Vec<S>& v, int n) {
  Mat<S> m(n, n);
  for (int s = 0; s < n; ++s)
    for (int r = 0; r < n; ++r) m(r, s) = v[static_cast<size_t>(s) * n + r];
  return m;
}

template <class S>
struct SemidirectProduct {
  LieAlgebra<S> reductive_part;  // u
  LieAlgebra<S> nil_part;        // n
  Representation<S> action;      // theta : u -> Der(n)
  LieAlgebra<S> total;           // u  x|_theta  n
};

/// Assembles g = u x|_theta n. Verifies theta lands in Der(n), theta is a
/// homomorphism and the result satisfies Jacobi.
template <class S>
SemidirectProduct<S> semidirect(const LieAlgebra<S>& u, const LieAlgebra<S>& n, const Representation<S>& theta,
                                double tol = 0.0) {
  if (tol <= 0.0) tol = policy().structural;
  if (static_cast<int>(theta.images.size()) != u.dim() || theta.target_dim != n.dim())
    throw std::invalid_argument("semidirect: theta shape mismatch");
  for (int i = 0; i < u.dim(); ++i) {
    double res = derivation_residual(n, theta.images[i]);
    if (res > tol)
      throw std::domain_error("semidirect: theta(" + u.labels()[i] + ") is not a derivation of n, residual " +
                              std::to_string(res));
  }
  double hom = theta.homomorphism_residual(u);
  if (hom > tol) throw std::domain_error("semidirect: theta homomorphism residual " + std::to_string(hom));

  int du = u.dim(), dn = n.dim();
  std::vector<std::string> labels;
  for (auto& l : u.labels()) labels.push_back(l);
  for (auto& l : n.labels()) labels.push_back(l);
  LieAlgebra<S> g(du + dn, labels);
  for (int i = 0; i < du; ++i)
    for (int j = i + 1; j < du; ++j)
      for (int k = 0; k < du; ++k)
        if (!ScalarOps<S>::is_zero(u.c(i, j, k))) g.set_bracket(i, j, k, u.c(i, j, k));
  for (int i = 0; i < dn; ++i)
    for (int j = i + 1; j < dn; ++j)
      for (int k = 0; k < dn; ++k)
        if (!ScalarOps<S>::is_zero(n.c(i, j, k))) g.set_bracket(du + i, du + j, du + k, n.c(i, j, k));
  // [Y, X] = theta(Y) X for Y in u, X in n
  for (int i = 0; i < du; ++i)
    for (int j = 0; j < dn; ++j)
      for (int k = 0; k < dn; ++k)
        if (!ScalarOps<S>::is_zero(theta.images[i](k, j))) g.set_bracket(i, du + j, du + k, theta.images[i](k, j));

  double jr = g.jacobi_residual();
  if (jr > tol) throw std::domain_error("semidirect: Jacobi residual " + std::to_string(jr));
  SemidirectProduct<S> out{u, n, theta, g};
  return out;
}

template <class S>
LieAlgebra<S> direct_sum(const LieAlgebra<S>& a, const LieAlgebra<S>& b) {
  return semidirect(a, b, Representation<S>::zero(a.dim(), b.dim())).total;
}

template <class S>
Vec<S> mean_curvature_vector(const LieAlgebra<S>& g, const Mat<S>& metric) {
  int n = g.dim();
  Vec<S> t(n, ScalarOps<S>::zero());
  for (int i = 0; i < n; ++i) t[i] = trace(g.ad_basis(i));
  return solve(metric, t);
}

/// Converts the scalar backend (e.g. exact catalog data to floats).
template <class T, class S>
LieAlgebra<T> convert_algebra(const LieAlgebra<S>& g) {
  LieAlgebra<T> out(g.dim(), g.labels());
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j)
      for (int k = 0; k < g.dim(); ++k)
        if (!ScalarOps<S>::is_zero(g.c(i, j, k))) out.set_bracket(i, j, k, T(ScalarOps<S>::to_double(g.c(i, j, k))));
  return out;
}

template <class T, class S>
Representation<T> convert_representation(const Representation<S>& rep) {
  Representation<T> out;
  out.target_dim = rep.target_dim;
  for (const auto& m : rep.images) out.images.push_back(convert<T>(m));
  return out;
}

/// Structure constants from a faithful matrix realization: brackets are
/// matrix commutators expanded exactly in the given basis.
template <class S>
LieAlgebra<S> algebra_from_matrices(const std::vector<Mat<S>>& basis, const std::vector<std::string>& labels) {
  int n = static_cast<int>(basis.size());
  int sz = basis[0].rows() * basis[0].cols();
  Mat<S> v(sz, n);
  for (int b = 0; b < n; ++b) {
    int idx = 0;
    for (int i = 0; i < basis[b].rows(); ++i)
      for (int j = 0; j < basis[b].cols(); ++j) v(idx++, b) = basis[b](i, j);
  }
  // Solve V c = vec([b_i, b_j]) via least-norm using normal equations (V has
  // full column rank for a linearly independent basis).
  Mat<S> vt = v.transpose();
  Mat<S> gram = vt * v;
  LieAlgebra<S> g(n, labels);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Mat<S> comm = basis[i] * basis[j] - basis[j] * basis[i];
      Vec<S> rhs(sz, ScalarOps<S>::zero());
      int idx = 0;
      for (int r = 0; r < comm.rows(); ++r)
        for (int c = 0; c < comm.cols(); ++c) rhs[idx++] = comm(r, c);
      Vec<S> coeffs = solve(gram, vt * rhs);
      // confirm the commutator lies in the span
      Vec<S> back = v * coeffs;
      if (max_abs(back - rhs) > 1e-9)
        throw std::domain_error("algebra_from_matrices: commutator outside span");
      for (int k = 0; k < n; ++k)
        if (!ScalarOps<S>::is_zero(coeffs[k])) g.set_bracket(i, j, k, coeffs[k]);
    }
  return g;
}

/// Sylvester criterion; exact for Rat.
template <class S>
bool is_positive_definite_exact(const Mat<S>& m) {
  int n = m.rows();
  for (int k = 1; k <= n; ++k) {
    Mat<S> lead(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) lead(i, j) = m(i, j);
    if (ScalarOps<S>::to_double(det(lead)) <= 0.0) return false;
  }
  return true;
}

}  // namespace hec

#endif
