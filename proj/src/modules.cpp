#include "hec/modules.hpp"

#include <algorithm>
#include <map>

namespace hec {

std::vector<MatD> find_intertwiners(const HomogeneousSpace<double>& sp, const MatD& block_a, const MatD& block_b) {
  const int da = block_a.cols(), db = block_b.cols();
  const int k = sp.isotropy_dim();
  if (k == 0) {
    // every linear map intertwines the trivial action
    std::vector<MatD> out;
    for (int i = 0; i < db; ++i)
      for (int j = 0; j < da; ++j) {
        MatD t(db, da);
        t(i, j) = 1.0;
        out.push_back(t);
      }
    return out;
  }
  // Restrict ad(Z) to each block: solve span * X = ad(Z) * span (least squares
  // via pseudo-inverse of the span).
  auto restrict_to = [&](const MatD& act, const MatD& span) {
    MatD st = span.transpose();
    MatD gram = st * span;
    return solve(gram, st * (act * span));
  };
  MatD sys(k * db * da, da * db);
  for (int z = 0; z < k; ++z) {
    MatD act = sp.isotropy_action(z);
    MatD az = restrict_to(act, block_a);
    MatD bz = restrict_to(act, block_b);
    // T az - bz T = 0; unknown T (db x da), entry T(r,c) at index c*db+r
    for (int r = 0; r < db; ++r)
      for (int c = 0; c < da; ++c) {
        int row = (z * db + r) * da + c;
        for (int s = 0; s < da; ++s) sys(row, s * db + r) += az(s, c);
        for (int s = 0; s < db; ++s) sys(row, c * db + s) -= bz(r, s);
      }
  }
  MatD ns = nullspace_svd(sys);
  std::vector<MatD> out;
  for (int j = 0; j < ns.cols(); ++j) {
    MatD t(db, da);
    for (int c = 0; c < da; ++c)
      for (int r = 0; r < db; ++r) t(r, c) = ns(c * db + r, j);
    out.push_back(t);
  }
  return out;
}

MatD invariant_positive_form(const std::vector<MatD>& basis, Rng& rng) {
  if (basis.empty()) throw std::domain_error("invariant_positive_form: empty space");
  const int m = basis[0].rows();
  // Try the projection-flavored combination first: coefficients matching tr(F).
  MatD cand(m, m);
  for (const auto& f : basis) cand += (trace(f) / m) * f;
  if (is_positive_definite(cand)) return cand;
  for (int attempt = 0; attempt < 2000; ++attempt) {
    MatD c(m, m);
    for (const auto& f : basis) c += rng.normal() * f;
    if (is_positive_definite(c)) return c;
    c *= -1.0;
    if (is_positive_definite(c)) return c;
  }
  throw std::domain_error("invariant_positive_form: no positive-definite element found");
}

MatD invariant_positive_form(const HomogeneousSpace<double>& sp, Rng& rng) {
  return invariant_positive_form(invariant_form_space(sp), rng);
}

namespace {

// Decomposes a subspace (given by isotropy actions restricted to it, in an
// orthonormal frame of the subspace) into trivial part + irreducible blocks.
// Returns blocks as column spans in the subspace frame.
struct SideSplit {
  std::vector<MatD> blocks;
  std::vector<bool> trivial;
  bool ambiguous = false;
};

SideSplit split_blocks(const std::vector<MatD>& acts, int dim, Rng& rng, bool& ok) {
  SideSplit out;
  ok = true;
  if (dim == 0) return out;
  if (acts.empty()) {
    out.blocks.push_back(MatD::identity(dim));
    out.trivial.push_back(true);
    return out;
  }
  // trivial part: common kernel
  MatD stacked(static_cast<int>(acts.size()) * dim, dim);
  for (size_t z = 0; z < acts.size(); ++z)
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) stacked(static_cast<int>(z) * dim + i, j) = acts[z](i, j);
  MatD triv = nullspace_svd(stacked);
  // nontrivial part: orthogonal complement of the trivial part
  MatD rest = (triv.cols() > 0) ? nullspace_svd(triv.transpose()) : MatD::identity(dim);
  if (triv.cols() > 0) {
    out.blocks.push_back(triv);
    out.trivial.push_back(true);
  }
  int nd = rest.cols();
  if (nd == 0) return out;
  // restricted actions on the nontrivial part (frame `rest` is orthonormal)
  std::vector<MatD> racts;
  for (const auto& a : acts) racts.push_back(rest.transpose() * a * rest);
  // random symmetric element of the commutant: unknown symmetric T with
  // [T, A_z] = 0 for all z
  int nsym = nd * (nd + 1) / 2;
  auto sym_index = [nd](int i, int j) {
    if (i > j) std::swap(i, j);
    return i * nd - i * (i - 1) / 2 + (j - i);
  };
  MatD sys(static_cast<int>(racts.size()) * nd * nd, nsym);
  for (size_t z = 0; z < racts.size(); ++z) {
    const MatD& a = racts[z];
    for (int r = 0; r < nd; ++r)
      for (int c = 0; c < nd; ++c) {
        int row = (static_cast<int>(z) * nd + r) * nd + c;
        for (int s = 0; s < nd; ++s) {
          sys(row, sym_index(r, s)) += a(s, c);  // (T A)(r,c)
          sys(row, sym_index(s, c)) -= a(r, s);  // (A T)(r,c)
        }
      }
  }
  MatD comm = nullspace_svd(sys);
  MatD t(nd, nd);
  for (int j = 0; j < comm.cols(); ++j) {
    double coef = rng.normal();
    for (int i = 0; i < nd; ++i)
      for (int jj = i; jj < nd; ++jj) {
        double v = comm(sym_index(i, jj), j) * coef;
        t(i, jj) += v;
        if (jj != i) t(jj, i) += v;
      }
  }
  SymEig eig = sym_eig(t);
  double scale = std::max({1.0, std::fabs(eig.values.front()), std::fabs(eig.values.back())});
  double spread = eig.values.back() - eig.values.front();
  std::vector<std::pair<int, int>> clusters;  // [begin, end)
  int begin = 0;
  for (int i = 1; i <= nd; ++i) {
    if (i == nd || eig.values[i] - eig.values[i - 1] > 1e-7 * scale) {
      clusters.emplace_back(begin, i);
      begin = i;
    }
  }
  for (auto [b, e] : clusters) {
    MatD span(nd, e - b);
    for (int j = b; j < e; ++j)
      for (int i = 0; i < nd; ++i) span(i, j - b) = eig.vectors(i, j);
    out.blocks.push_back(rest * span);
    out.trivial.push_back(false);
  }
  // ambiguity heuristic: marginal eigen gaps
  for (size_t c = 1; c < clusters.size(); ++c) {
    double gap = eig.values[clusters[c].first] - eig.values[clusters[c].first - 1];
    if (gap < 1e-4 * std::max(spread, 1e-9)) out.ambiguous = true;
  }
  return out;
}

}  // namespace

ModuleDecomposition decompose_isotropy_modules(const HomogeneousSpace<double>& sp, uint64_t seed,
                                               const std::optional<std::pair<MatD, MatD>>& side_split) {
  Rng rng(seed ^ 0x8ec5u);
  const int m = sp.dim();
  const int k = sp.isotropy_dim();
  // Work in a frame orthonormal for an invariant PD form, so that the actions
  // are skew and eigen-splits are invariant-orthogonal.
  MatD q = (k == 0) ? MatD::identity(m) : invariant_positive_form(sp, rng);
  MatD l = cholesky(q);
  MatD lt = l.transpose();
  MatD ltinv = inverse(lt);
  std::vector<MatD> acts;
  for (int z = 0; z < k; ++z) acts.push_back(lt * sp.isotropy_action(z) * ltinv);

  ModuleDecomposition dec;
  dec.seed = seed;
  bool ok = true;

  auto emit = [&](const std::vector<MatD>& frame_blocks, const std::vector<bool>& trivial, const MatD& side_frame,
                  const std::string& prefix) {
    int counter = 0;
    for (size_t i = 0; i < frame_blocks.size(); ++i) {
      ModuleBlock b;
      b.span = ltinv * (side_frame * frame_blocks[i]);
      b.trivial = trivial[i];
      b.label = prefix + std::to_string(counter++);
      dec.blocks.push_back(std::move(b));
    }
  };

  if (!side_split) {
    SideSplit s = split_blocks(acts, m, rng, ok);
    std::vector<MatD> fb = s.blocks;
    emit(fb, s.trivial, MatD::identity(m), "m");
    dec.ambiguous = s.ambiguous;
  } else {
    // Sides given in complement coordinates; move to the q-orthonormal frame
    // and orthonormalize each side.
    auto prep = [&](const MatD& side) {
      MatD f = lt * side;
      // Gram-Schmidt
      for (int j = 0; j < f.cols(); ++j) {
        for (int i = 0; i < j; ++i) {
          double pr = 0;
          for (int r = 0; r < f.rows(); ++r) pr += f(r, i) * f(r, j);
          for (int r = 0; r < f.rows(); ++r) f(r, j) -= pr * f(r, i);
        }
        double nrm = 0;
        for (int r = 0; r < f.rows(); ++r) nrm += f(r, j) * f(r, j);
        nrm = std::sqrt(nrm);
        for (int r = 0; r < f.rows(); ++r) f(r, j) /= nrm;
      }
      return f;
    };
    MatD qf = prep(side_split->first);
    MatD pf = prep(side_split->second);
    for (auto& [frame, prefix] : std::vector<std::pair<MatD, std::string>>{{qf, "q"}, {pf, "p"}}) {
      std::vector<MatD> racts;
      for (const auto& a : acts) racts.push_back(frame.transpose() * a * frame);
      SideSplit s = split_blocks(racts, frame.cols(), rng, ok);
      emit(s.blocks, s.trivial, frame, prefix);
      dec.ambiguous = dec.ambiguous || s.ambiguous;
    }
  }

  for (size_t a = 0; a < dec.blocks.size(); ++a)
    for (size_t b = a + 1; b < dec.blocks.size(); ++b) {
      if (dec.blocks[a].trivial != dec.blocks[b].trivial) continue;  // trivial vs nontrivial never intertwine nontrivially
      auto tw = find_intertwiners(sp, dec.blocks[a].span, dec.blocks[b].span);
      if (!tw.empty())
        dec.equivalences.emplace_back(static_cast<int>(a), static_cast<int>(b), static_cast<int>(tw.size()));
    }
  return dec;
}

int schur_form_count(const HomogeneousSpace<double>& sp, const ModuleDecomposition& dec) {
  // Count dim of invariant symmetric forms from the block structure:
  // sum over blocks of dim Hom(V,V)_sym(=1 for irreducible nontrivial of any
  // type, d(d+1)/2 for a trivial block of dim d) plus, for each equivalent
  // pair a<b, the dimension of the intertwiner space.
  int total = 0;
  for (const auto& b : dec.blocks) {
    if (b.trivial)
      total += b.span.cols() * (b.span.cols() + 1) / 2;
    else {
      auto self = find_intertwiners(sp, b.span, b.span);
      // symmetric invariant forms on an irreducible = symmetric elements of
      // the commutant; for real/complex/quaternionic type this is 1
      total += 1;
      (void)self;
    }
  }
  for (const auto& [a, b, d] : dec.equivalences) {
    (void)a;
    (void)b;
    total += d;  // each intertwiner contributes one symmetric cross-coupling
  }
  return total;
}

}  // namespace hec
