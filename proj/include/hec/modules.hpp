#ifndef HEC_MODULES_HPP
#define HEC_MODULES_HPP

#include <optional>
#include <string>
#include <tuple>

#include "hec/homogeneous.hpp"
#include "hec/rng.hpp"

namespace hec {

/// Basis of { M symmetric : ad(Z)^T M + M ad(Z) = 0 for all isotropy Z },
/// i.e. the space of invariant symmetric bilinear forms on the complement.
/// Exact backend uses RREF, float uses SVD with the policy gap.
template <class S>
std::vector<Mat<S>> invariant_form_space(const HomogeneousSpace<S>& sp) {
  const int m = sp.dim();
  const int k = sp.isotropy_dim();
  const int nsym = m * (m + 1) / 2;
  auto unpack = [m](const Vec<S>& v) {
    Mat<S> f(m, m);
    int idx = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        f(i, j) = v[idx];
        f(j, i) = v[idx];
        ++idx;
      }
    return f;
  };
  if (k == 0) {
    std::vector<Mat<S>> basis;
    for (int i = 0; i < nsym; ++i) {
      Vec<S> v(nsym, ScalarOps<S>::zero());
      v[i] = ScalarOps<S>::one();
      basis.push_back(unpack(v));
    }
    return basis;
  }
  Mat<S> sys(k * m * m, nsym);
  auto sym_index = [m](int i, int j) {
    if (i > j) std::swap(i, j);
    return i * m - i * (i - 1) / 2 + (j - i);
  };
  for (int z = 0; z < k; ++z) {
    Mat<S> a = sp.isotropy_action(z);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) {
        int row = (z * m + r) * m + c;
        for (int s = 0; s < m; ++s) {
          sys(row, sym_index(s, c)) += a(s, r);  // (A^T M)(r,c)
          sys(row, sym_index(r, s)) += a(s, c);  // (M A)(r,c)
        }
      }
  }
  std::vector<Mat<S>> basis;
  if constexpr (ScalarOps<S>::exact) {
    Mat<S> ns = nullspace(sys);
    for (int j = 0; j < ns.cols(); ++j) basis.push_back(unpack(ns.col(j)));
  } else {
    MatD nsd = nullspace_svd(convert<double>(sys));
    for (int j = 0; j < nsd.cols(); ++j) {
      Vec<S> v(nsym);
      for (int i = 0; i < nsym; ++i) v[i] = S(nsd(i, j));
      basis.push_back(unpack(v));
    }
  }
  return basis;
}

/// Basis of { T : T ad(Z)|_a = ad(Z)|_b T } for spans a, b of the complement
/// (columns, complement coordinates). Empty iff the blocks are inequivalent
/// irreducibles.
std::vector<MatD> find_intertwiners(const HomogeneousSpace<double>& sp, const MatD& block_a, const MatD& block_b);

struct ModuleBlock {
  std::string label;
  MatD span;  // complement coordinates, columns
  bool trivial = false;
};

struct ModuleDecomposition {
  std::vector<ModuleBlock> blocks;
  // (block_a, block_b, dim of intertwiner space), only pairs with dim > 0
  std::vector<std::tuple<int, int, int>> equivalences;
  uint64_t seed = 0;
  bool ambiguous = false;

  bool equivalent(int a, int b) const {
    for (auto& [x, y, d] : equivalences)
      if ((x == a && y == b) || (x == b && y == a)) return d > 0;
    return a == b;
  }
};

/// Splits the complement into ad(k)-invariant blocks: the trivial part is the
/// common kernel of the isotropy action, the rest is split by a random
/// invariant self-adjoint operator (seeded). If `side_split` is given, the
/// two sides (e.g. a Cartan q/p split) are decomposed separately and labeled
/// q*/p*; otherwise labels are m*.
ModuleDecomposition decompose_isotropy_modules(const HomogeneousSpace<double>& sp, uint64_t seed = 1,
                                               const std::optional<std::pair<MatD, MatD>>& side_split = std::nullopt);

/// A positive-definite invariant form (seeded random element of the
/// invariant-form space; throws if none found).
MatD invariant_positive_form(const HomogeneousSpace<double>& sp, Rng& rng);
MatD invariant_positive_form(const std::vector<MatD>& basis, Rng& rng);

/// Schur count: expected dimension of the invariant-form space given the
/// decomposition (used as a cross-check, not in the computation itself).
int schur_form_count(const HomogeneousSpace<double>& sp, const ModuleDecomposition& dec);

}  // namespace hec

#endif
