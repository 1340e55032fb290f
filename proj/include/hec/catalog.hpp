#ifndef HEC_CATALOG_HPP
#define HEC_CATALOG_HPP

#include <functional>
#include <optional>

#include "hec/structure.hpp"

namespace hec {

enum class Verdict {
  NoEinstein_CartanOrthogonal,
  NoEinstein_RicciSign,
  NoEinstein_ExplicitFormula,
  OpenCase,
  Symmetric,
  ProductOnly,
  MetadataOnly,
};

std::string verdict_name(Verdict v);

/// Expected isotropy-module signature entry. `side` is 'q' or 'p'; `tag`
/// encodes the equivalence class of nontrivial blocks ("0" marks a trivial
/// block). Blocks are equivalent iff their (dim, tag) agree.
struct ExpectedBlock {
  char side;
  int dim;
  std::string tag;
  bool trivial() const { return tag == "0"; }
};

struct Prop35Data {
  Mat<Rat> sl2_span;  // complement coordinates of the sl2(R) factor
  Mat<Rat> m0_span;   // trivial module of G1/H
  Mat<Rat> m1_span;   // nontrivial modules of G1/H
};

/// A concrete catalog instance: exact structure constants, adapted Cartan
/// split, expected module signature and any certificate-specific data.
struct BuiltCase {
  std::string row;
  std::vector<long> params;
  HomogeneousSpace<Rat> space;
  Mat<Rat> cartan_q, cartan_p;  // spans in complement coordinates
  std::vector<ExpectedBlock> expected;
  Mat<Rat> reference_metric;  // the basis-orthonormalizing inner product
  std::optional<Representation<Rat>> theta;  // images per algebra basis vector
  Mat<Rat> theta_nil_metric;
  std::optional<Vec<Rat>> q0_direction;      // complement coordinates
  std::optional<Mat<Rat>> sweep_directions;  // algebra coordinates, columns
  // involution on the complement (an automorphism-induced isometry); metrics
  // averaged under it form the subfamily the conjugated-Cartan sweep is
  // expected to orthogonalize
  std::optional<Mat<Rat>> sweep_symmetrizer;
  std::optional<Prop35Data> prop35;
  std::string note;
};

struct CaseRecord {
  std::string name;
  int dim = 0;
  int nparams = 0;
  Verdict verdict = Verdict::MetadataOnly;
  std::string isotropy_repr;  // table signature, human-readable
  std::string compact_dual;
  std::string note;
  std::vector<std::string> recipe;
  std::function<BuiltCase(const std::vector<long>&)> build;
  std::function<std::vector<std::vector<long>>(int pmax)> param_samples;
};

const std::vector<CaseRecord>& catalog();
const CaseRecord* find_case(const std::string& name);
std::vector<std::string> case_suggestions(const std::string& name);
BuiltCase build_case(const std::string& name, const std::vector<long>& params);

/// Metric families in their published normal forms: returns the frame h; the
/// metric Gram matrix is h^T h in the row's ordered complement basis.
Mat<Rat> family_frame(const std::string& row, const Rat& a, const Rat& b, const Rat& d, const Rat& e);

/// Row-specific displayed formulas (exact):
Rat sl2c_offdiag_formula(const Rat& a, const Rat& b, const Rat& d, const Rat& e);
Rat sl2c_offdiag_computed(const BuiltCase& c, const Rat& a, const Rat& b, const Rat& d, const Rat& e);
/// The two decisive expressions of the D11 theta-case as printed in the
/// published analysis.
Rat d11_r11_printed(const Rat& a, const Rat& b, const Rat& d, const Rat& e);
Rat d11_combo_printed(const Rat& a, const Rat& b, const Rat& d, const Rat& e);
/// The same two quantities as actually computed by the curvature machinery
/// (exact closed forms, cross-validated against an independent curvature
/// route): the printed r11 is missing an e^4 weight on its second summand and
/// the printed combination carries an extra -4 a^4 b^2 e^2. Both corrected
/// forms still force the contradiction; the combination is strictly positive.
Rat d11_r11_closed_form(const Rat& a, const Rat& b, const Rat& d, const Rat& e);
Rat d11_combo_closed_form(const Rat& a, const Rat& b, const Rat& d, const Rat& e);
/// Computed r^theta entries w.r.t. the h-orthonormal frame: returns
/// (r11, r44, r24) of the operator Ric - C_theta.
struct D11Entries {
  Rat r11, r44, r24;
};
D11Entries d11_rtheta_entries(const BuiltCase& c, const Rat& a, const Rat& b, const Rat& d, const Rat& e);

// --- certificates ---

enum class CartanVerdict { NoEinstein, Inconclusive };

struct CartanReport {
  CartanVerdict verdict = CartanVerdict::Inconclusive;
  bool cross_equivalence = false;
  ModuleDecomposition decomposition;
};

/// Static criterion: if no q-block is equivalent to any p-block (trivial
/// blocks on both sides count as equivalent), every invariant metric makes
/// the Cartan decomposition orthogonal and the space is not Einstein.
CartanReport cartan_orthogonality_test(const BuiltCase& c, uint64_t seed = 1);

struct ModuleAuditReport {
  bool match = true;
  std::string detail;
  ModuleDecomposition decomposition;
};

/// Compares the computed isotropy decomposition against the row's expected
/// signature (per-side trivial dimensions, nontrivial block dims, and the
/// equivalence-class structure).
ModuleAuditReport module_signature_audit(const BuiltCase& c, uint64_t seed = 1);

struct RicciSignReport {
  double min_value = 0.0;
  int samples = 0;
  bool premise_ok = true;  // direction acts skew-symmetrically for every invariant metric
};

/// Sweeps random invariant metrics and records min Ric(Y, Y) for the row's
/// distinguished isotropy-fixed direction.
RicciSignReport ricci_sign_certificate(const BuiltCase& c, int nsamples, uint64_t seed);

struct ConjugatedCartanReport {
  int samples = 0;
  int orthogonalized = 0;  // samples where a conjugate Cartan split became orthogonal
  double worst_final = 0.0;
  // when a symmetrizer is present: results on the involution-even subfamily
  int sym_samples = 0;
  int sym_orthogonalized = 0;
  double sym_worst_final = 0.0;
};

/// For each sampled invariant metric, searches the inner-automorphism orbit
/// of the Cartan decomposition (along the row's sweep directions) for one
/// orthogonal to the metric. Evidence, not proof.
ConjugatedCartanReport conjugated_cartan_sweep(const BuiltCase& c, int nsamples, uint64_t seed);

struct ProductForcingReport {
  int samples = 0;
  double max_identity_residual = 0.0;  // cross-Ricci identity residual
  double min_positivity = 0.0;         // min over samples/directions of gamma^2 + tr S(ad x)^2
  bool forces_product = false;
};

/// Numerically verifies the cross-Ricci identity of the Sl2(R) x G1/H
/// analysis on random invariant metrics and checks that the positivity
/// factor never vanishes, so zero cross-Ricci forces <sl2(R), m0> = 0.
ProductForcingReport product_forcing_certificate(const BuiltCase& c, int nsamples, uint64_t seed);

}  // namespace hec

#endif
