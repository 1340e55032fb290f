#ifndef HEC_NUMERIC_HPP
#define HEC_NUMERIC_HPP

#include <vector>

#include "hec/matrix.hpp"

namespace hec {

/// Global tolerance policy. `structural` guards algebraic residuals
/// (Jacobi, homomorphism, derivation), `curvature` guards curvature
/// comparisons, `svd_gap` is the singular-value ratio for rank cuts.
struct NumericPolicy {
  double structural = 1e-12;
  double curvature = 1e-10;
  double metric_invariance = 1e-10;
  double svd_gap = 1e-8;
  double search_tol = 1e-11;
};

NumericPolicy& policy();

using MatD = Mat<double>;
using VecD = Vec<double>;

struct SymEig {
  VecD values;   // ascending
  MatD vectors;  // columns
};

SymEig sym_eig(const MatD& m);

/// Cholesky factor L with m = L L^T. Throws std::domain_error if not PD.
MatD cholesky(const MatD& m);
bool is_positive_definite(const MatD& m);

/// Null space basis (orthonormal columns) via SVD with relative gap cut.
MatD nullspace_svd(const MatD& m, double gap = 0.0);
int rank_svd(const MatD& m, double gap = 0.0);

std::vector<double> singular_values(const MatD& m);

/// Dense matrix exponential (scaling and squaring + Pade).
MatD expm(const MatD& m);

/// Least squares min ||A x - b||_2 via SVD.
VecD lstsq(const MatD& a, const VecD& b);

}  // namespace hec

#endif
