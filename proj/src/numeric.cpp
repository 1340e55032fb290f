#include "hec/numeric.hpp"

#include <Eigen/Dense>
#include <cstdlib>
#include <string>

namespace hec {

NumericPolicy& policy() {
  static NumericPolicy p = [] {
    NumericPolicy q;
    if (const char* env = std::getenv("HEC_NUMERIC_POLICY")) {
      try {
        q.structural = std::stod(env);
      } catch (...) {
      }
    }
    return q;
  }();
  return p;
}

static Eigen::MatrixXd to_eigen(const MatD& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

static MatD from_eigen(const Eigen::MatrixXd& e) {
  MatD m(static_cast<int>(e.rows()), static_cast<int>(e.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = e(i, j);
  return m;
}

SymEig sym_eig(const MatD& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(m));
  if (es.info() != Eigen::Success) throw std::runtime_error("sym_eig failed");
  SymEig out;
  out.values.assign(es.eigenvalues().data(), es.eigenvalues().data() + m.rows());
  out.vectors = from_eigen(es.eigenvectors());
  return out;
}

MatD cholesky(const MatD& m) {
  Eigen::LLT<Eigen::MatrixXd> llt(to_eigen(m));
  if (llt.info() != Eigen::Success) throw std::domain_error("cholesky: matrix not positive-definite");
  return from_eigen(Eigen::MatrixXd(llt.matrixL()));
}

bool is_positive_definite(const MatD& m) {
  Eigen::LLT<Eigen::MatrixXd> llt(to_eigen(m));
  return llt.info() == Eigen::Success;
}

std::vector<double> singular_values(const MatD& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(m));
  std::vector<double> out(svd.singularValues().data(), svd.singularValues().data() + svd.singularValues().size());
  return out;
}

MatD nullspace_svd(const MatD& m, double gap) {
  if (gap <= 0.0) gap = policy().svd_gap;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(m), Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double top = sv.size() ? sv(0) : 0.0;
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > gap * std::max(top, 1.0)) ++r;
  Eigen::MatrixXd v = svd.matrixV();
  return from_eigen(v.rightCols(v.cols() - r));
}

int rank_svd(const MatD& m, double gap) {
  if (gap <= 0.0) gap = policy().svd_gap;
  auto sv = singular_values(m);
  double top = sv.empty() ? 0.0 : sv[0];
  int r = 0;
  for (double s : sv)
    if (s > gap * std::max(top, 1.0)) ++r;
  return r;
}

MatD expm(const MatD& m) {
  // Scaling and squaring with a degree-8 Taylor core; dims here are tiny
  // and inputs are moderate, so this is plenty accurate.
  Eigen::MatrixXd a = to_eigen(m);
  double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (norm > 0.5) {
    norm /= 2.0;
    ++squarings;
  }
  a /= std::pow(2.0, squarings);
  Eigen::MatrixXd x = Eigen::MatrixXd::Identity(a.rows(), a.cols());
  Eigen::MatrixXd term = x;
  for (int k = 1; k <= 12; ++k) {
    term = term * a / static_cast<double>(k);
    x += term;
  }
  for (int s = 0; s < squarings; ++s) x = x * x;
  return from_eigen(x);
}

VecD lstsq(const MatD& a, const VecD& b) {
  Eigen::VectorXd rhs(b.size());
  for (size_t i = 0; i < b.size(); ++i) rhs(static_cast<int>(i)) = b[i];
  Eigen::VectorXd x = to_eigen(a).jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(rhs);
  return VecD(x.data(), x.data() + x.size());
}

}  // namespace hec
