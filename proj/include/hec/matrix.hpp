#ifndef HEC_MATRIX_HPP
#define HEC_MATRIX_HPP

#include <cassert>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "hec/scalar.hpp"

namespace hec {

template <class S>
using Vec = std::vector<S>;

/// Small dense matrix over a field scalar (double, Rat or Dual).
/// Dimensions in this project never exceed ~60, so everything is O(n^3) dense.
template <class S>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, ScalarOps<S>::zero()) {}
  Mat(int rows, int cols, std::initializer_list<S> vals) : Mat(rows, cols) {
    assert(static_cast<int>(vals.size()) == rows * cols);
    int k = 0;
    for (const S& v : vals) a_[k++] = v;
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = ScalarOps<S>::one();
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  S& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const S& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  Mat transpose() const {
    Mat t(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Mat& operator+=(const Mat& o) {
    assert(r_ == o.r_ && c_ == o.c_);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    assert(r_ == o.r_ && c_ == o.c_);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  Mat& operator*=(const S& s) {
    for (auto& x : a_) x *= s;
    return *this;
  }

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const S& s) { return a *= s; }
  friend Mat operator*(const S& s, Mat a) { return a *= s; }

  friend Mat operator*(const Mat& a, const Mat& b) {
    assert(a.c_ == b.r_);
    Mat m(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
      for (int k = 0; k < a.c_; ++k) {
        const S& aik = a(i, k);
        if (ScalarOps<S>::is_zero(aik)) continue;
        for (int j = 0; j < b.c_; ++j) m(i, j) += aik * b(k, j);
      }
    return m;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

  Vec<S> col(int j) const {
    Vec<S> v(r_);
    for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  Vec<S> row(int i) const {
    Vec<S> v(c_);
    for (int j = 0; j < c_; ++j) v[j] = (*this)(i, j);
    return v;
  }
  void set_col(int j, const Vec<S>& v) {
    for (int i = 0; i < r_; ++i) (*this)(i, j) = v[i];
  }

 private:
  int r_ = 0, c_ = 0;
  std::vector<S> a_;
};

template <class S>
Vec<S> operator*(const Mat<S>& m, const Vec<S>& v) {
  assert(m.cols() == static_cast<int>(v.size()));
  Vec<S> out(m.rows(), ScalarOps<S>::zero());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

template <class S>
Vec<S> operator+(Vec<S> a, const Vec<S>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
template <class S>
Vec<S> operator-(Vec<S> a, const Vec<S>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
template <class S>
Vec<S> operator*(const S& s, Vec<S> a) {
  for (auto& x : a) x *= s;
  return a;
}

template <class S>
S dot(const Vec<S>& a, const Vec<S>& b) {
  S acc = ScalarOps<S>::zero();
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

/// <a, b> with Gram matrix G.
template <class S>
S inner(const Vec<S>& a, const Mat<S>& g, const Vec<S>& b) {
  return dot(a, g * b);
}

template <class S>
S trace(const Mat<S>& m) {
  S t = ScalarOps<S>::zero();
  for (int i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

template <class S>
double max_abs(const Mat<S>& m) {
  double best = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) best = std::max(best, std::fabs(ScalarOps<S>::to_double(m(i, j))));
  return best;
}

template <class S>
double max_abs(const Vec<S>& v) {
  double best = 0.0;
  for (const auto& x : v) best = std::max(best, std::fabs(ScalarOps<S>::to_double(x)));
  return best;
}

/// Picks the pivot row in [from, rows) for the given column.
/// Exact scalars select any nonzero entry (largest by double size when
/// representable); floats select the largest magnitude above tol.
template <class S>
int pivot_row(const Mat<S>& a, int col, int from, double tol) {
  int piv = -1;
  double best = tol;
  for (int i = from; i < a.rows(); ++i) {
    if (ScalarOps<S>::exact) {
      if (ScalarOps<S>::is_zero(a(i, col))) continue;
      double s = ScalarOps<S>::pivot_size(a(i, col));
      if (piv < 0 || s > best) { piv = i; best = s; }
    } else {
      double s = ScalarOps<S>::pivot_size(a(i, col));
      if (s > best) { best = s; piv = i; }
    }
  }
  return piv;
}

/// Solves A X = B by Gauss-Jordan with partial pivoting. Exact over Rat.
template <class S>
Mat<S> solve(Mat<S> a, Mat<S> b, double sing_tol = 1e-13) {
  const int n = a.rows();
  assert(a.cols() == n && b.rows() == n);
  for (int col = 0; col < n; ++col) {
    int piv = pivot_row(a, col, col, sing_tol);
    if (piv < 0) throw std::domain_error("solve: singular matrix");
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a(col, j), a(piv, j));
      for (int j = 0; j < b.cols(); ++j) std::swap(b(col, j), b(piv, j));
    }
    S inv = ScalarOps<S>::one() / a(col, col);
    for (int j = 0; j < n; ++j) a(col, j) *= inv;
    for (int j = 0; j < b.cols(); ++j) b(col, j) *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      S f = a(i, col);
      if (ScalarOps<S>::is_zero(f)) continue;
      for (int j = 0; j < n; ++j) a(i, j) -= f * a(col, j);
      for (int j = 0; j < b.cols(); ++j) b(i, j) -= f * b(col, j);
    }
  }
  return b;
}

template <class S>
Vec<S> solve(const Mat<S>& a, const Vec<S>& rhs) {
  Mat<S> b(a.rows(), 1);
  for (int i = 0; i < a.rows(); ++i) b(i, 0) = rhs[i];
  Mat<S> x = solve(a, b);
  return x.col(0);
}

template <class S>
Mat<S> inverse(const Mat<S>& a) {
  return solve(a, Mat<S>::identity(a.rows()));
}

template <class S>
S det(Mat<S> a) {
  const int n = a.rows();
  S d = ScalarOps<S>::one();
  for (int col = 0; col < n; ++col) {
    int piv = pivot_row(a, col, col, 0.0);
    if (piv < 0 || ScalarOps<S>::is_zero(a(piv, col))) return ScalarOps<S>::zero();
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a(col, j), a(piv, j));
      d = -d;
    }
    d *= a(col, col);
    S inv = ScalarOps<S>::one() / a(col, col);
    for (int i = col + 1; i < n; ++i) {
      S f = a(i, col) * inv;
      if (ScalarOps<S>::is_zero(f)) continue;
      for (int j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return d;
}

/// In-place reduced row echelon form; returns pivot columns.
/// Float pivots below `tol` are treated as zero.
template <class S>
std::vector<int> rref(Mat<S>& a, double tol = 1e-11) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int piv = pivot_row(a, col, row, tol);
    if (piv < 0) continue;
    for (int j = 0; j < a.cols(); ++j) std::swap(a(row, j), a(piv, j));
    S inv = ScalarOps<S>::one() / a(row, col);
    for (int j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row) continue;
      S f = a(i, col);
      if (ScalarOps<S>::is_zero(f)) continue;
      for (int j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class S>
int rank(Mat<S> a, double tol = 1e-11) {
  return static_cast<int>(rref(a, tol).size());
}

/// Basis of the (right) null space of A as matrix columns, via RREF.
/// Exact over Rat; for floats prefer nullspace_svd from numeric.hpp.
template <class S>
Mat<S> nullspace(Mat<S> a, double tol = 1e-11) {
  std::vector<int> piv = rref(a, tol);
  std::vector<bool> is_piv(a.cols(), false);
  for (int c : piv) is_piv[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < a.cols(); ++c)
    if (!is_piv[c]) free_cols.push_back(c);
  Mat<S> basis(a.cols(), static_cast<int>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    basis(fc, static_cast<int>(k)) = ScalarOps<S>::one();
    for (size_t r = 0; r < piv.size(); ++r) basis(piv[r], static_cast<int>(k)) = -a(static_cast<int>(r), fc);
  }
  return basis;
}

template <class T, class S>
Mat<T> convert(const Mat<S>& m) {
  Mat<T> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = T(ScalarOps<S>::to_double(m(i, j)));
  return out;
}

template <class T, class S>
Vec<T> convert(const Vec<S>& v) {
  Vec<T> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = T(ScalarOps<S>::to_double(v[i]));
  return out;
}

}  // namespace hec

#endif
