#ifndef HEC_SEARCH_HPP
#define HEC_SEARCH_HPP

#include "hec/catalog.hpp"

namespace hec {

enum class Normalization { DetOne, TraceN, UnitVolumeFrame };
enum class SearchStatus { Converged, LocalMinPositiveResidual, LeftPDCone, IterationCap };

std::string status_name(SearchStatus s);
std::string normalization_name(Normalization n);

/// Einstein (or generalized-Einstein) search problem over the invariant-form
/// space of a homogeneous space. When theta data is present the target is
/// Ric(g) = c g + C_theta with C_theta fixed by theta and the nil metric.
struct SearchProblem {
  HomogeneousSpace<double> space;
  std::vector<MatD> basis;       // invariant symmetric forms
  std::optional<MatD> c_theta;   // fixed bilinear form on the complement
  Normalization normalization = Normalization::DetOne;
  uint64_t seed = 1;
  int starts = 50;
  int iteration_cap = 500;
  double tol = 0.0;  // defaults to policy().search_tol
};

SearchProblem make_search_problem(const BuiltCase& c, uint64_t seed, int starts = 50);

struct SearchResult {
  VecD parameters;  // coefficients in the invariant-form basis
  double c = 0.0;
  double residual = 0.0;
  SearchStatus status = SearchStatus::IterationCap;
  std::vector<double> trace;  // residual per accepted iteration
};

/// Multi-start Levenberg-style minimization of ||Ric(g) - c g - C_theta||
/// in a g-orthonormal frame, c eliminated as the normalized trace. Results
/// are deduplicated and sorted by (residual, parameters); deterministic per
/// seed.
std::vector<SearchResult> einstein_search(const SearchProblem& problem);

/// Residual of a single point (recomputed independently of the search loop).
double residual_at(const SearchProblem& problem, const VecD& params, double* c_out = nullptr);

/// Max relative error between the analytic gradient of the squared-residual
/// objective (forward-mode dual numbers through the curvature formula) and
/// central finite differences.
double gradient_check(const SearchProblem& problem, const VecD& params, double step = 1e-6);

/// Exact sweep of named scalar certificates over a rational grid.
struct SweepSpec {
  std::vector<std::string> axes;            // parameter names, e.g. {"a","b","d"}
  std::vector<std::vector<Rat>> grids;      // nodes per axis
  bool det_one = true;                      // derive e from det h = 1
};

struct SweepReport {
  long nodes = 0;
  long first_negative = 0, second_negative = 0, both_negative = 0;
  std::vector<std::vector<Rat>> counterexamples;  // nodes violating the sign invariant
};

/// Evaluates the two decisive D11 theta-case quantities on the grid (det h = 1)
/// and tallies signs; the claimed invariant is that they are never both
/// negative.
SweepReport d11_sign_sweep(const SweepSpec& spec);

/// Lemma 3.4 off-diagonal entry on a grid with a,b,e > 0: reports any node
/// where sign(entry) != sign(d).
struct OffdiagSweepReport {
  long nodes = 0;
  long sign_mismatches = 0;
  long zero_off_d0 = 0;  // nodes with d = 0 where the entry is nonzero
};
OffdiagSweepReport sl2c_offdiag_sign_sweep(const BuiltCase& sl2c_case, const SweepSpec& spec);

}  // namespace hec

#endif
