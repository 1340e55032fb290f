#include "hec/structure.hpp"

#include <algorithm>

namespace hec {

WeightDecomposition weight_decomposition(const StructureData<double>& d) {
  const int dn = d.n().dim();
  const int zc = d.center_span.cols();
  MatD gn = d.nil_metric;
  MatD l = cholesky(gn);
  MatD lt = l.transpose();
  MatD ltinv = inverse(lt);

  // S(theta(Z)) in a gn-orthonormal frame is Euclidean-symmetric
  std::vector<MatD> syms;
  for (int z = 0; z < zc; ++z) {
    MatD t = d.theta_of(d.center_span.col(z));
    MatD s = symmetric_part(t, gn);
    syms.push_back(lt * s * ltinv);
  }
  // commuting family check
  for (size_t a = 0; a < syms.size(); ++a)
    for (size_t b = a + 1; b < syms.size(); ++b) {
      MatD comm = syms[a] * syms[b] - syms[b] * syms[a];
      if (max_abs(comm) > policy().curvature)
        throw std::domain_error("weight_decomposition: S(theta(z(u))) is not a commuting family");
    }

  WeightDecomposition out;
  if (zc == 0) {
    out.subspaces.push_back(MatD::identity(dn));
    out.weights.push_back(VecD{});
  } else {
    // split by the first operator, then refine with the rest
    std::vector<MatD> blocks{MatD::identity(dn)};
    std::vector<VecD> weights{VecD{}};
    for (int z = 0; z < zc; ++z) {
      std::vector<MatD> nblocks;
      std::vector<VecD> nweights;
      for (size_t b = 0; b < blocks.size(); ++b) {
        MatD sub = blocks[b].transpose() * syms[z] * blocks[b];
        SymEig eig = sym_eig(sub);
        int n = sub.rows();
        double spread = std::max(1e-9, std::fabs(eig.values.back()) + std::fabs(eig.values.front()));
        int begin = 0;
        for (int i = 1; i <= n; ++i) {
          if (i == n || eig.values[i] - eig.values[i - 1] > 1e-7 * spread) {
            MatD span(n, i - begin);
            for (int j = begin; j < i; ++j)
              for (int r = 0; r < n; ++r) span(r, j - begin) = eig.vectors(r, j);
            nblocks.push_back(blocks[b] * span);
            VecD w = weights[b];
            double mean = 0;
            for (int j = begin; j < i; ++j) mean += eig.values[j];
            mean /= (i - begin);
            w.push_back(mean);
            nweights.push_back(w);
            begin = i;
          }
        }
      }
      blocks = nblocks;
      weights = nweights;
    }
    // map back to nil coordinates
    for (auto& b : blocks) out.subspaces.push_back(ltinv * b);
    out.weights = weights;
  }

  // theta|_g1 must preserve the blocks and be traceless on each
  double off = 0.0, tl = 0.0;
  for (int y = 0; y < d.g1_span.cols(); ++y) {
    MatD t = lt * d.theta_of(d.g1_span.col(y)) * ltinv;
    for (size_t a = 0; a < out.subspaces.size(); ++a) {
      MatD fa = lt * out.subspaces[a];  // orthonormal columns in the flat frame
      MatD ta = fa.transpose() * t * fa;
      tl = std::max(tl, std::fabs(trace(ta)));
      for (size_t b = 0; b < out.subspaces.size(); ++b) {
        if (a == b) continue;
        MatD fb = lt * out.subspaces[b];
        off = std::max(off, max_abs(fb.transpose() * t * fa));
      }
    }
  }
  out.offblock_residual = off;
  out.traceless_residual = tl;
  return out;
}

}  // namespace hec
