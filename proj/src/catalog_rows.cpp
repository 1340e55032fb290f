// Hand-encoded constructors for the catalog rows: exact structure constants
// from faithful matrix realizations (complex and quaternionic entries are
// realified), adapted bases ordered [isotropy | q-blocks | p-blocks] unless a
// published ordered basis dictates otherwise.

#include <map>
#include <numeric>
#include <sstream>

#include "hec/catalog.hpp"

namespace hec {

namespace {

using RM = Mat<Rat>;

RM rm(int r, int c) { return RM(r, c); }

// ---- complex matrices over Q(i), realified as 2x2 blocks [[x,-y],[y,x]] ----

struct CM {
  RM re, im;
  CM(int n) : re(n, n), im(n, n) {}
};

RM realify(const CM& m) {
  int n = m.re.rows();
  RM out(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      out(2 * i, 2 * j) = m.re(i, j);
      out(2 * i + 1, 2 * j + 1) = m.re(i, j);
      out(2 * i, 2 * j + 1) = -m.im(i, j);
      out(2 * i + 1, 2 * j) = m.im(i, j);
    }
  return out;
}

// ---- quaternionic matrices, realified as 4x4 left-multiplication blocks ----

struct QM {
  RM a, b, c, d;  // q = a + b i + c j + d k entrywise
  QM(int n) : a(n, n), b(n, n), c(n, n), d(n, n) {}
};

RM realify(const QM& m) {
  int n = m.a.rows();
  RM out(4 * n, 4 * n);
  auto put = [&](int i, int j, const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    // left multiplication by a+bi+cj+dk on (1,i,j,k)
    Rat block[4][4] = {{a, -b, -c, -d}, {b, a, -d, c}, {c, d, a, -b}, {d, -c, b, a}};
    for (int r = 0; r < 4; ++r)
      for (int s = 0; s < 4; ++s) out(4 * i + r, 4 * j + s) = block[r][s];
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) put(i, j, m.a(i, j), m.b(i, j), m.c(i, j), m.d(i, j));
  return out;
}

// block-diagonal direct sum of real matrices
RM dsum(const std::vector<RM>& blocks) {
  int n = 0;
  for (const auto& b : blocks) n += b.rows();
  RM out(n, n);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) out(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return out;
}

// ---- 2x2 sl2(R) generators: C compact rotation, A, B hyperbolic ----
RM sl2_C() { return RM(2, 2, {Rat(0), Rat(1), Rat(-1), Rat(0)}); }
RM sl2_A() { return RM(2, 2, {Rat(1), Rat(0), Rat(0), Rat(-1)}); }
RM sl2_B() { return RM(2, 2, {Rat(0), Rat(1), Rat(1), Rat(0)}); }
RM z2(int n) { return RM(n, n); }

// ---- sl2(C) ordered basis (Z, Y0, Y1, Y2, X1, X2), realified to 4x4 ----
std::vector<RM> sl2c_basis() {
  auto mk = [](std::initializer_list<long> re, std::initializer_list<long> im) {
    CM m(2);
    auto r = re.begin();
    auto i = im.begin();
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        m.re(a, b) = Rat(*r++);
        m.im(a, b) = Rat(*i++);
      }
    return realify(m);
  };
  RM Z = mk({0, 0, 0, 0}, {1, 0, 0, -1});
  RM Y0 = mk({1, 0, 0, -1}, {0, 0, 0, 0});
  RM Y1 = mk({0, 1, 1, 0}, {0, 0, 0, 0});
  RM Y2 = mk({0, 0, 0, 0}, {0, 1, -1, 0});
  RM X1 = mk({0, 1, -1, 0}, {0, 0, 0, 0});
  RM X2 = mk({0, 0, 0, 0}, {0, 1, 1, 0});
  return {Z, Y0, Y1, Y2, X1, X2};
}

// ---- su(2,1): 3x3 complex, X^* J + J X = 0 with J = diag(1,1,-1) ----
// q(z): entries (1,2) = z, (2,1) = -conj z  (inside su(2))
// p1(z): (1,3) = z, (3,1) = conj z;  p2(z): (2,3) = z, (3,2) = conj z
CM su21_diag(long t1, long t2, long t3) {
  CM m(3);
  m.im(0, 0) = Rat(t1);
  m.im(1, 1) = Rat(t2);
  m.im(2, 2) = Rat(t3);
  return m;
}
CM su21_q(bool imag) {
  CM m(3);
  if (!imag) {
    m.re(0, 1) = Rat(1);
    m.re(1, 0) = Rat(-1);
  } else {
    m.im(0, 1) = Rat(1);
    m.im(1, 0) = Rat(1);
  }
  return m;
}
CM su21_p(int row, bool imag) {  // row 0 -> p1, row 1 -> p2
  CM m(3);
  int r = row;
  if (!imag) {
    m.re(r, 2) = Rat(1);
    m.re(2, r) = Rat(1);
  } else {
    m.im(r, 2) = Rat(1);
    m.im(2, r) = Rat(-1);
  }
  return m;
}

// ---- su(3,1): 4x4 complex, J = diag(1,1,1,-1) ----
CM su31_diag(long t1, long t2, long t3, long t4) {
  CM m(4);
  m.im(0, 0) = Rat(t1);
  m.im(1, 1) = Rat(t2);
  m.im(2, 2) = Rat(t3);
  m.im(3, 3) = Rat(t4);
  return m;
}
CM su31_su3_offdiag(int a, int b, bool imag) {  // inside the su(3) block
  CM m(4);
  if (!imag) {
    m.re(a, b) = Rat(1);
    m.re(b, a) = Rat(-1);
  } else {
    m.im(a, b) = Rat(1);
    m.im(b, a) = Rat(1);
  }
  return m;
}
CM su31_p(int row, bool imag) {
  CM m(4);
  if (!imag) {
    m.re(row, 3) = Rat(1);
    m.re(3, row) = Rat(1);
  } else {
    m.im(row, 3) = Rat(1);
    m.im(3, row) = Rat(-1);
  }
  return m;
}

// ---- sp(1,1): 2x2 quaternionic, X^* J + J X = 0, J = diag(1,-1) ----
QM sp11_diag(int slot, char unit) {
  QM m(2);
  RM* comp = unit == 'i' ? &m.b : unit == 'j' ? &m.c : &m.d;
  (*comp)(slot, slot) = Rat(1);
  return m;
}
QM sp11_off(char unit) {  // X12 = u, X21 = conj(u)
  QM m(2);
  if (unit == '1') {
    m.a(0, 1) = Rat(1);
    m.a(1, 0) = Rat(1);
  } else {
    RM* comp = unit == 'i' ? &m.b : unit == 'j' ? &m.c : &m.d;
    (*comp)(0, 1) = Rat(1);
    (*comp)(1, 0) = Rat(-1);
  }
  return m;
}

// ---- so(p,q) real: X^T J + J X = 0 ----
RM soL(int n, int i, int j) {  // E_ij - E_ji
  RM m(n, n);
  m(i, j) = Rat(1);
  m(j, i) = Rat(-1);
  return m;
}
RM soB(int n, int i, int j) {  // E_ij + E_ji (one index in the negative part)
  RM m(n, n);
  m(i, j) = Rat(1);
  m(j, i) = Rat(1);
  return m;
}

// ---- sp(4,R): [[A,B],[C,-A^T]], B, C symmetric ----
RM sp4(const RM& a, const RM& b, const RM& c) {
  RM m(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      m(i, j) = a(i, j);
      m(i, 2 + j) = b(i, j);
      m(2 + i, j) = c(i, j);
      m(2 + i, 2 + j) = -a(j, i);
    }
  return m;
}
RM e2(int i, int j) {
  RM m(2, 2);
  m(i, j) = Rat(1);
  return m;
}
RM s2(int i, int j) {
  RM m(2, 2);
  m(i, j) = Rat(1);
  m(j, i) = Rat(1);
  return m;
}

long gcd3(long a, long b, long c) { return std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c)); }

std::string weight_tag(long w) { return w == 0 ? "0" : "w" + std::to_string(std::abs(w)); }
std::string weight_tag2(long w1, long w2) {
  if (w1 == 0 && w2 == 0) return "0";
  if (w1 < 0 || (w1 == 0 && w2 < 0)) {
    w1 = -w1;
    w2 = -w2;
  }
  return "w(" + std::to_string(w1) + "," + std::to_string(w2) + ")";
}

HomogeneousSpace<Rat> adapted_space(const std::vector<RM>& mats, const std::vector<std::string>& labels, int iso_dim,
                                    const std::string& name) {
  LieAlgebra<Rat> g = algebra_from_matrices(mats, labels);
  std::vector<int> iso(iso_dim), comp(g.dim() - iso_dim);
  std::iota(iso.begin(), iso.end(), 0);
  std::iota(comp.begin(), comp.end(), iso_dim);
  return HomogeneousSpace<Rat>(g, span_from_indices<Rat>(g.dim(), iso), span_from_indices<Rat>(g.dim(), comp), name);
}

Mat<Rat> comp_span(int m, const std::vector<int>& idx) { return span_from_indices<Rat>(m, idx); }

std::vector<int> range_idx(int from, int count) {
  std::vector<int> v(count);
  std::iota(v.begin(), v.end(), from);
  return v;
}

void require_params(const std::vector<long>& params, size_t n, const std::string& row) {
  if (params.size() != n)
    throw std::invalid_argument(row + ": expected " + std::to_string(n) + " parameters, got " +
                                std::to_string(params.size()));
}

void require_note_a(long p, long q, const std::string& row) {
  if (!(0 <= p && p <= q && q >= 1 && std::gcd(p, q) == 1))
    throw std::invalid_argument(row + ": parameters must satisfy 0 <= p <= q, gcd(p,q) = 1");
}
void require_note_b(long p, long q, const std::string& row) {
  if (p == 0 || q == 0 || p > q || std::gcd(std::abs(p), std::abs(q)) != 1)
    throw std::invalid_argument(row + ": parameters must satisfy p,q != 0, p <= q, gcd(p,q) = 1");
}
void require_note_d(long a1, long a2, long a3, const std::string& row) {
  if (a1 == 0 || a2 == 0 || a3 == 0 || a1 > a2 || a2 > a3 || gcd3(a1, a2, a3) != 1)
    throw std::invalid_argument(row + ": parameters must satisfy a1 <= a2 <= a3, all nonzero, gcd = 1");
}

}  // namespace

// ------------------------------------------------------------------
// individual builders
// ------------------------------------------------------------------

namespace rows {

BuiltCase sl2r_group(const std::vector<long>&) {
  // basis H, X, Y with [H,X]=2Y, [H,Y]=2X, [X,Y]=2H; X spans so(2)
  std::vector<RM> mats = {sl2_A(), sl2_C(), sl2_B()};
  BuiltCase c;
  c.row = "Sl2R";
  LieAlgebra<Rat> g = algebra_from_matrices(mats, {"H", "X", "Y"});
  c.space = lie_group_space(g, "Sl2R");
  c.cartan_q = comp_span(3, {1});
  c.cartan_p = comp_span(3, {0, 2});
  c.reference_metric = RM::identity(3);
  c.note = "left-invariant metrics on the 3-dimensional simple group; non-existence of an Einstein "
           "metric is classical and is consumed as an external fact by the product-forcing rows";
  return c;
}

BuiltCase sl2c_u1(const std::vector<long>&) {
  BuiltCase c;
  c.row = "Sl2C/U1";
  c.space = adapted_space(sl2c_basis(), {"Z", "Y0", "Y1", "Y2", "X1", "X2"}, 1, "Sl2C/U1");
  // complement order (Y0, Y1, Y2, X1, X2)
  c.cartan_q = comp_span(5, {3, 4});
  c.cartan_p = comp_span(5, {0, 1, 2});
  c.expected = {{'q', 2, "w2"}, {'p', 1, "0"}, {'p', 2, "w2"}};
  c.reference_metric = RM::identity(5);
  return c;
}

BuiltCase sl2c_group(const std::vector<long>&) {
  BuiltCase c;
  c.row = "Sl2C";
  LieAlgebra<Rat> g = algebra_from_matrices(sl2c_basis(), {"Z", "Y0", "Y1", "Y2", "X1", "X2"});
  c.space = lie_group_space(g, "Sl2C");
  c.cartan_q = comp_span(6, {0, 4, 5});
  c.cartan_p = comp_span(6, {1, 2, 3});
  c.reference_metric = RM::identity(6);
  return c;
}

BuiltCase sl2c_su2(const std::vector<long>&) {
  BuiltCase c;
  c.row = "Sl2C/SU2";
  auto b = sl2c_basis();
  // order [Z, X1, X2 | Y0, Y1, Y2]
  std::vector<RM> mats = {b[0], b[4], b[5], b[1], b[2], b[3]};
  c.space = adapted_space(mats, {"Z", "X1", "X2", "Y0", "Y1", "Y2"}, 3, "Sl2C/SU2");
  c.cartan_q = RM(3, 0);
  c.cartan_p = RM::identity(3);
  c.expected = {{'p', 3, "vec"}};
  c.reference_metric = RM::identity(3);
  return c;
}

BuiltCase sl2rxsl2r_dpq(const std::vector<long>& params) {
  require_params(params, 2, "Sl2RxSl2R/Dpq");
  long p = params[0], q = params[1];
  require_note_b(p, q, "Sl2RxSl2R/Dpq");
  RM C = sl2_C(), A = sl2_A(), B = sl2_B(), z = z2(2);
  std::vector<RM> mats = {
      dsum({Rat(p) * C, Rat(q) * C}),   // Z
      dsum({Rat(q) * C, Rat(-p) * C}),  // X0
      dsum({A, z}),                     // Y1
      dsum({B, z}),                     // Y2
      dsum({z, A}),                     // X1
      dsum({z, B}),                     // X2
  };
  BuiltCase c;
  c.row = "Sl2RxSl2R/Dpq";
  c.params = {p, q};
  c.space = adapted_space(mats, {"Z", "X0", "Y1", "Y2", "X1", "X2"}, 1, "Sl2RxSl2R/D(" + std::to_string(p) + "," +
                                                                           std::to_string(q) + ")");
  c.cartan_q = comp_span(5, {0});
  c.cartan_p = comp_span(5, {1, 2, 3, 4});
  c.expected = {{'q', 1, "0"}, {'p', 2, weight_tag(2 * p)}, {'p', 2, weight_tag(2 * q)}};
  c.reference_metric = RM::identity(5);
  c.note = "isotropy generator Z = (p K1, q K2) with K the compact so(2) generator of each factor";
  return c;
}

BuiltCase sl2rxsl2r_d11_theta(const std::vector<long>&) {
  BuiltCase c = sl2rxsl2r_dpq({1, 1});
  c.row = "Sl2RxSl2R-D11-theta";
  // tautological action of the second factor on R^2, first factor in the kernel
  Representation<Rat> theta;
  theta.target_dim = 2;
  theta.images = {sl2_C(), Rat(-1) * sl2_C(), z2(2), z2(2), sl2_A(), sl2_B()};
  c.theta = theta;
  c.theta_nil_metric = RM::identity(2);
  c.note = "generalized Einstein problem on (Sl2R x Sl2R)/D11SO(2) with a 2-dimensional abelian "
           "nilradical and theta tautological on the second factor";
  return c;
}

BuiltCase sl2rxsl2r_group(const std::vector<long>&) {
  RM C = sl2_C(), A = sl2_A(), B = sl2_B(), z = z2(2);
  std::vector<RM> mats = {dsum({C, z}), dsum({A, z}), dsum({B, z}), dsum({z, C}), dsum({z, A}), dsum({z, B})};
  BuiltCase c;
  c.row = "Sl2RxSl2R";
  LieAlgebra<Rat> g = algebra_from_matrices(mats, {"C1", "A1", "B1", "C2", "A2", "B2"});
  c.space = lie_group_space(g, "Sl2RxSl2R");
  c.cartan_q = comp_span(6, {0, 3});
  c.cartan_p = comp_span(6, {1, 2, 4, 5});
  c.reference_metric = RM::identity(6);
  return c;
}

BuiltCase su21_su2(const std::vector<long>&) {
  std::vector<CM> cb = {su21_diag(1, -1, 0), su21_q(false), su21_q(true), su21_diag(1, 1, -2),
                        su21_p(0, false),    su21_p(0, true), su21_p(1, false), su21_p(1, true)};
  std::vector<RM> mats;
  for (auto& m : cb) mats.push_back(realify(m));
  BuiltCase c;
  c.row = "SU21/SU2";
  c.space = adapted_space(mats, {"K1", "K2", "K3", "Q0", "P1a", "P1b", "P2a", "P2b"}, 3, "SU21/SU2");
  c.cartan_q = comp_span(5, {0});
  c.cartan_p = comp_span(5, {1, 2, 3, 4});
  c.expected = {{'q', 1, "0"}, {'p', 4, "su2"}};
  c.reference_metric = RM::identity(5);
  return c;
}

BuiltCase su21_u2(const std::vector<long>&) {
  std::vector<CM> cb = {su21_diag(1, -1, 0), su21_q(false), su21_q(true), su21_diag(1, 1, -2),
                        su21_p(0, false),    su21_p(0, true), su21_p(1, false), su21_p(1, true)};
  std::vector<RM> mats;
  for (auto& m : cb) mats.push_back(realify(m));
  BuiltCase c;
  c.row = "SU21/U2";
  c.space = adapted_space(mats, {"K1", "K2", "K3", "Z", "P1a", "P1b", "P2a", "P2b"}, 4, "SU21/U2");
  c.cartan_q = RM(4, 0);
  c.cartan_p = RM::identity(4);
  c.expected = {{'p', 4, "u2"}};
  c.reference_metric = RM::identity(4);
  return c;
}

BuiltCase su21_t2(const std::vector<long>&) {
  std::vector<CM> cb = {su21_diag(1, 0, -1), su21_diag(0, 1, -1), su21_q(false), su21_q(true),
                        su21_p(0, false),    su21_p(0, true),     su21_p(1, false), su21_p(1, true)};
  std::vector<RM> mats;
  for (auto& m : cb) mats.push_back(realify(m));
  BuiltCase c;
  c.row = "SU21/T2";
  c.space = adapted_space(mats, {"T1", "T2", "Q1a", "Q1b", "P1a", "P1b", "P2a", "P2b"}, 2, "SU21/T2");
  c.cartan_q = comp_span(6, {0, 1});
  c.cartan_p = comp_span(6, {2, 3, 4, 5});
  c.expected = {{'q', 2, weight_tag2(1, -1)}, {'p', 2, weight_tag2(2, 1)}, {'p', 2, weight_tag2(1, 2)}};
  c.reference_metric = RM::identity(6);
  return c;
}

BuiltCase su21_dpq(const std::vector<long>& params) {
  require_params(params, 2, "SU21/Dpq");
  long p = params[0], q = params[1];
  require_note_a(p, q, "SU21/Dpq");
  std::vector<CM> cb = {su21_diag(p, q, -p - q),
                        su21_diag(p + 2 * q, -2 * p - q, p - q),
                        su21_q(false),
                        su21_q(true),
                        su21_p(0, false),
                        su21_p(0, true),
                        su21_p(1, false),
                        su21_p(1, true)};
  std::vector<RM> mats;
  for (auto& m : cb) mats.push_back(realify(m));
  BuiltCase c;
  c.row = "SU21/Dpq";
  c.params = {p, q};
  c.space = adapted_space(mats, {"H", "Q0", "Q1a", "Q1b", "P1a", "P1b", "P2a", "P2b"}, 1,
                          "SU21/D(" + std::to_string(p) + "," + std::to_string(q) + ")U1");
  c.cartan_q = comp_span(7, {0, 1, 2});
  c.cartan_p = comp_span(7, {3, 4, 5, 6});
  c.expected = {{'q', 1, "0"},
                {'q', 2, weight_tag(p - q)},
                {'p', 2, weight_tag(2 * p + q)},
                {'p', 2, weight_tag(p + 2 * q)}};
  c.reference_metric = RM::identity(7);
  c.note = "Aloff-Wallach-type diagonal embedding diag(ip, iq, -i(p+q))";
  if (p == 0 && q == 1) {
    Vec<Rat> dir(7, Rat(0));
    dir[0] = Rat(1);  // the Q0 direction
    c.q0_direction = dir;
  }
  return c;
}

BuiltCase sl3r_so2(const std::vector<long>&) {
  auto R = [](int i, int j) { return soL(3, i, j); };
  RM D1(3, 3), D2(3, 3);
  D1(0, 0) = Rat(1);
  D1(1, 1) = Rat(-1);
  D2(0, 0) = Rat(1);
  D2(1, 1) = Rat(1);
  D2(2, 2) = Rat(-2);
  auto Ssym = [](int i, int j) { return soB(3, i, j); };
  std::vector<RM> mats = {R(0, 1), R(0, 2), R(1, 2), D2, Ssym(0, 2), Ssym(1, 2), Ssym(0, 1), D1};
  BuiltCase c;
  c.row = "Sl3R/SO2";
  c.space = adapted_space(mats, {"R12", "R13", "R23", "P0", "S13", "S23", "S12", "D1"}, 1, "Sl3R/SO2");
  c.cartan_q = comp_span(7, {0, 1});
  c.cartan_p = comp_span(7, {2, 3, 4, 5, 6});
  c.expected = {{'q', 2, "w1"}, {'p', 1, "0"}, {'p', 2, "w1"}, {'p', 2, "w2"}};
  c.reference_metric = RM::identity(7);
  // conjugation axis commuting with so(2); the h-containment condition is
  // enforced by the sweep's penalty
  c.sweep_directions = span_from_indices<Rat>(8, {3});
  // Ad(diag(1,-1,-1)) on the complement (R13,R23 | D2-slot P0 | S13,S23 | S12,D1):
  // averaging kills the conjugation-invariant J-type coupling
  {
    RM w(7, 7);
    Rat v[7] = {Rat(-1), Rat(1), Rat(1), Rat(-1), Rat(1), Rat(-1), Rat(1)};
    for (int i = 0; i < 7; ++i) w(i, i) = v[i];
    c.sweep_symmetrizer = w;
  }
  return c;
}

BuiltCase sl3r_group(const std::vector<long>&) {
  auto R = [](int i, int j) { return soL(3, i, j); };
  RM D1(3, 3), D2(3, 3);
  D1(0, 0) = Rat(1);
  D1(1, 1) = Rat(-1);
  D2(0, 0) = Rat(1);
  D2(1, 1) = Rat(1);
  D2(2, 2) = Rat(-2);
  auto Ssym = [](int i, int j) { return soB(3, i, j); };
  std::vector<RM> mats = {R(0, 1), R(0, 2), R(1, 2), D1, D2, Ssym(0, 1), Ssym(0, 2), Ssym(1, 2)};
  BuiltCase c;
  c.row = "Sl3R";
  LieAlgebra<Rat> g = algebra_from_matrices(mats, {"R12", "R13", "R23", "D1", "D2", "S12", "S13", "S23"});
  c.space = lie_group_space(g, "Sl3R");
  c.cartan_q = comp_span(8, {0, 1, 2});
  c.cartan_p = comp_span(8, {3, 4, 5, 6, 7});
  c.reference_metric = RM::identity(8);
  return c;
}

BuiltCase su21_group(const std::vector<long>&) {
  std::vector<CM> cb = {su21_diag(1, -1, 0), su21_q(false), su21_q(true), su21_diag(1, 1, -2),
                        su21_p(0, false),    su21_p(0, true), su21_p(1, false), su21_p(1, true)};
  std::vector<RM> mats;
  for (auto& m : cb) mats.push_back(realify(m));
  BuiltCase c;
  c.row = "SU21";
  LieAlgebra<Rat> g = algebra_from_matrices(mats, {"K1", "K2", "K3", "Z", "P1a", "P1b", "P2a", "P2b"});
  c.space = lie_group_space(g, "SU21");
  c.cartan_q = comp_span(8, {0, 1, 2, 3});
  c.cartan_p = comp_span(8, {4, 5, 6, 7});
  c.reference_metric = RM::identity(8);
  return c;
}

BuiltCase so41_so3(const std::vector<long>&) {
  std::vector<RM> mats = {soL(5, 0, 1), soL(5, 0, 2), soL(5, 1, 2),               // so(3)
                          soL(5, 0, 3), soL(5, 1, 3), soL(5, 2, 3),               // q1
                          soB(5, 3, 4),                                           // p0
                          soB(5, 0, 4), soB(5, 1, 4), soB(5, 2, 4)};              // p1
  BuiltCase c;
  c.row = "SO41/SO3";
  c.space = adapted_space(mats, {"L12", "L13", "L23", "L14", "L24", "L34", "B4", "B1", "B2", "B3"}, 3, "SO41/SO3");
  c.cartan_q = comp_span(7, {0, 1, 2});
  c.cartan_p = comp_span(7, {3, 4, 5, 6});
  c.expected = {{'q', 3, "vec"}, {'p', 1, "0"}, {'p', 3, "vec"}};
  c.reference_metric = RM::identity(7);
  c.sweep_directions = span_from_indices<Rat>(10, {6});  // the boost B4 commutes with so(3)
  return c;
}

BuiltCase so41_so4(const std::vector<long>&) {
  std::vector<RM> mats = {soL(5, 0, 1), soL(5, 0, 2), soL(5, 0, 3), soL(5, 1, 2), soL(5, 1, 3), soL(5, 2, 3),
                          soB(5, 0, 4), soB(5, 1, 4), soB(5, 2, 4), soB(5, 3, 4)};
  BuiltCase c;
  c.row = "SO41/SO4";
  c.space = adapted_space(mats, {"L12", "L13", "L14", "L23", "L24", "L34", "B1", "B2", "B3", "B4"}, 6, "SO41/SO4");
  c.cartan_q = RM(4, 0);
  c.cartan_p = RM::identity(4);
  c.expected = {{'p', 4, "vec4"}};
  c.reference_metric = RM::identity(4);
  return c;
}

BuiltCase so32_so3(const std::vector<long>&) {
  std::vector<RM> mats = {soL(5, 0, 1), soL(5, 0, 2), soL(5, 1, 2),  // so(3)
                          soL(5, 3, 4),                              // q0: so(2)
                          soB(5, 0, 3), soB(5, 1, 3), soB(5, 2, 3),  // p1
                          soB(5, 0, 4), soB(5, 1, 4), soB(5, 2, 4)}; // p2
  BuiltCase c;
  c.row = "SO32/SO3";
  c.space = adapted_space(mats, {"L12", "L13", "L23", "L45", "B11", "B21", "B31", "B12", "B22", "B32"}, 3, "SO32/SO3");
  c.cartan_q = comp_span(7, {0});
  c.cartan_p = comp_span(7, {1, 2, 3, 4, 5, 6});
  c.expected = {{'q', 1, "0"}, {'p', 3, "vec"}, {'p', 3, "vec"}};
  c.reference_metric = RM::identity(7);
  return c;
}

BuiltCase sp11_sp1u1(const std::vector<long>&) {
  std::vector<QM> qb = {sp11_diag(0, 'i'), sp11_diag(0, 'j'), sp11_diag(0, 'k'), sp11_diag(1, 'i'),
                        sp11_diag(1, 'j'), sp11_diag(1, 'k'), sp11_off('1'),     sp11_off('i'),
                        sp11_off('j'),     sp11_off('k')};
  std::vector<RM> mats;
  for (auto& m : qb) mats.push_back(realify(m));
  BuiltCase c;
  c.row = "Sp11/Sp1U1";
  c.space = adapted_space(mats, {"I1", "J1", "K1", "I2", "J2", "K2", "O1", "Oi", "Oj", "Ok"}, 4, "Sp11/Sp1U1");
  c.cartan_q = comp_span(6, {0, 1});
  c.cartan_p = comp_span(6, {2, 3, 4, 5});
  c.expected = {{'q', 2, "w2"}, {'p', 4, "sp1"}};
  c.reference_metric = RM::identity(6);
  return c;
}

BuiltCase sp11_sp1(const std::vector<long>&) {
  std::vector<QM> qb = {sp11_diag(0, 'i'), sp11_diag(0, 'j'), sp11_diag(0, 'k'), sp11_diag(1, 'i'),
                        sp11_diag(1, 'j'), sp11_diag(1, 'k'), sp11_off('1'),     sp11_off('i'),
                        sp11_off('j'),     sp11_off('k')};
  std::vector<RM> mats;
  for (auto& m : qb) mats.push_back(realify(m));
  BuiltCase c;
  c.row = "Sp11/Sp1";
  c.space = adapted_space(mats, {"I1", "J1", "K1", "I2", "J2", "K2", "O1", "Oi", "Oj", "Ok"}, 3, "Sp11/Sp1");
  c.cartan_q = comp_span(7, {0, 1, 2});
  c.cartan_p = comp_span(7, {3, 4, 5, 6});
  c.expected = {{'q', 3, "0"}, {'p', 4, "sp1"}};
  c.reference_metric = RM::identity(7);
  return c;
}

BuiltCase sp11_t2(const std::vector<long>&) {
  std::vector<QM> qb = {sp11_diag(0, 'i'), sp11_diag(1, 'i'), sp11_diag(0, 'j'), sp11_diag(0, 'k'),
                        sp11_diag(1, 'j'), sp11_diag(1, 'k'), sp11_off('1'),     sp11_off('i'),
                        sp11_off('j'),     sp11_off('k')};
  std::vector<RM> mats;
  for (auto& m : qb) mats.push_back(realify(m));
  BuiltCase c;
  c.row = "Sp11/T2";
  c.space = adapted_space(mats, {"I1", "I2", "J1", "K1", "J2", "K2", "O1", "Oi", "Oj", "Ok"}, 2, "Sp11/T2");
  c.cartan_q = comp_span(8, {0, 1, 2, 3});
  c.cartan_p = comp_span(8, {4, 5, 6, 7});
  c.expected = {{'q', 2, weight_tag2(2, 0)},
                {'q', 2, weight_tag2(0, 2)},
                {'p', 2, weight_tag2(1, -1)},
                {'p', 2, weight_tag2(1, 1)}};
  c.reference_metric = RM::identity(8);
  return c;
}

BuiltCase sp2r_t2(const std::vector<long>&) {
  RM z = z2(2), R = RM(2, 2, {Rat(0), Rat(1), Rat(-1), Rat(0)});
  std::vector<RM> mats = {
      sp4(z, e2(0, 0), Rat(-1) * e2(0, 0)),  // T1
      sp4(z, e2(1, 1), Rat(-1) * e2(1, 1)),  // T2
      sp4(R, z, z),                          // q1a
      sp4(z, s2(0, 1), Rat(-1) * s2(0, 1)),  // q1b
      sp4(e2(0, 0), z, z),                   // p1a
      sp4(z, e2(0, 0), e2(0, 0)),            // p1b
      sp4(e2(1, 1), z, z),                   // p2a
      sp4(z, e2(1, 1), e2(1, 1)),            // p2b
      sp4(s2(0, 1), z, z),                   // p3a
      sp4(z, s2(0, 1), s2(0, 1)),            // p3b
  };
  BuiltCase c;
  c.row = "Sp2R/T2";
  c.space = adapted_space(mats, {"T1", "T2", "Q1a", "Q1b", "P1a", "P1b", "P2a", "P2b", "P3a", "P3b"}, 2, "Sp2R/T2");
  c.cartan_q = comp_span(8, {0, 1});
  c.cartan_p = comp_span(8, {2, 3, 4, 5, 6, 7});
  c.expected = {{'q', 2, weight_tag2(1, -1)},
                {'p', 2, weight_tag2(2, 0)},
                {'p', 2, weight_tag2(0, 2)},
                {'p', 2, weight_tag2(1, 1)}};
  c.reference_metric = RM::identity(8);
  return c;
}

BuiltCase su31_su3(const std::vector<long>&) {
  std::vector<CM> cb = {su31_diag(1, -1, 0, 0),
                        su31_diag(0, 1, -1, 0),
                        su31_su3_offdiag(0, 1, false),
                        su31_su3_offdiag(0, 1, true),
                        su31_su3_offdiag(0, 2, false),
                        su31_su3_offdiag(0, 2, true),
                        su31_su3_offdiag(1, 2, false),
                        su31_su3_offdiag(1, 2, true),
                        su31_diag(1, 1, 1, -3),
                        su31_p(0, false),
                        su31_p(0, true),
                        su31_p(1, false),
                        su31_p(1, true),
                        su31_p(2, false),
                        su31_p(2, true)};
  std::vector<RM> mats;
  for (auto& m : cb) mats.push_back(realify(m));
  BuiltCase c;
  c.row = "SU31/SU3";
  c.space = adapted_space(mats,
                          {"T1", "T2", "R12", "I12", "R13", "I13", "R23", "I23", "Q0", "P1a", "P1b", "P2a", "P2b",
                           "P3a", "P3b"},
                          8, "SU31/SU3");
  c.cartan_q = comp_span(7, {0});
  c.cartan_p = comp_span(7, {1, 2, 3, 4, 5, 6});
  c.expected = {{'q', 1, "0"}, {'p', 6, "su3"}};
  c.reference_metric = RM::identity(7);
  return c;
}

BuiltCase su21xsl2r_dpq(const std::vector<long>& params) {
  require_params(params, 2, "SU21xSl2R/Dpq");
  long p = params[0], q = params[1];
  require_note_b(p, q, "SU21xSl2R/Dpq");
  // su(2,1) realified is 6x6; append the sl2(R) 2x2 block
  auto pad = [&](const CM& m) { return dsum({realify(m), z2(2)}); };
  auto pad2 = [&](const RM& m) { return dsum({RM(6, 6), m}); };
  RM zeta = pad(su21_diag(1, 1, -2));
  RM csl = pad2(sl2_C());
  std::vector<RM> mats = {pad(su21_diag(1, -1, 0)),
                          pad(su21_q(false)),
                          pad(su21_q(true)),
                          Rat(p) * zeta + Rat(q) * csl,            // Z (isotropy)
                          Rat(2 * q) * zeta + Rat(-9 * p) * csl,   // q0 (B-orthogonal complement)
                          pad(su21_p(0, false)),
                          pad(su21_p(0, true)),
                          pad(su21_p(1, false)),
                          pad(su21_p(1, true)),
                          pad2(sl2_A()),
                          pad2(sl2_B())};
  BuiltCase c;
  c.row = "SU21xSl2R/Dpq";
  c.params = {p, q};
  c.space = adapted_space(mats, {"K1", "K2", "K3", "Z", "Q0", "P1a", "P1b", "P2a", "P2b", "A2", "B2"}, 4,
                          "SU21xSl2R/D(" + std::to_string(p) + "," + std::to_string(q) + ")U1(SU2)");
  c.cartan_q = comp_span(7, {0});
  c.cartan_p = comp_span(7, {1, 2, 3, 4, 5, 6});
  c.expected = {{'q', 1, "0"}, {'p', 4, "su2"}, {'p', 2, weight_tag(2 * q)}};
  c.reference_metric = RM::identity(7);
  return c;
}

BuiltCase sl2r3_dabct2(const std::vector<long>& params) {
  require_params(params, 3, "Sl2R3/DabcT2");
  long a = params[0], b = params[1], cc = params[2];
  require_note_d(a, b, cc, "Sl2R3/DabcT2");
  RM C = sl2_C(), A = sl2_A(), B = sl2_B(), z = z2(2);
  std::vector<RM> mats = {
      dsum({Rat(b) * C, Rat(-a) * C, z}),            // h1
      dsum({z, Rat(cc) * C, Rat(-b) * C}),           // h2
      dsum({Rat(a) * C, Rat(b) * C, Rat(cc) * C}),   // q0
      dsum({A, z, z}), dsum({B, z, z}),              // p1
      dsum({z, A, z}), dsum({z, B, z}),              // p2
      dsum({z, z, A}), dsum({z, z, B}),              // p3
  };
  BuiltCase c;
  c.row = "Sl2R3/DabcT2";
  c.params = params;
  c.space = adapted_space(mats, {"H1", "H2", "Q0", "P1a", "P1b", "P2a", "P2b", "P3a", "P3b"}, 2,
                          "Sl2R3/D(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(cc) + ")T2");
  c.cartan_q = comp_span(7, {0});
  c.cartan_p = comp_span(7, {1, 2, 3, 4, 5, 6});
  c.expected = {{'q', 1, "0"},
                {'p', 2, weight_tag2(2 * b, 0)},
                {'p', 2, weight_tag2(-2 * a, 2 * cc)},
                {'p', 2, weight_tag2(0, -2 * b)}};
  c.reference_metric = RM::identity(7);
  c.note = "T2 embedded as the kernel of the character (a,b,c) on the diagonal torus of SO(2)^3";
  return c;
}

BuiltCase sl2r3_da1a2a3(const std::vector<long>& params) {
  require_params(params, 3, "Sl2R3/DaU1");
  long a1 = params[0], a2 = params[1], a3 = params[2];
  require_note_d(a1, a2, a3, "Sl2R3/DaU1");
  RM C = sl2_C(), A = sl2_A(), B = sl2_B(), z = z2(2);
  std::vector<RM> mats = {
      dsum({Rat(a1) * C, Rat(a2) * C, Rat(a3) * C}),  // h
      dsum({Rat(a2) * C, Rat(-a1) * C, z}),           // q0a
      dsum({Rat(a3) * C, z, Rat(-a1) * C}),           // q0b
      dsum({A, z, z}), dsum({B, z, z}),               // p1
      dsum({z, A, z}), dsum({z, B, z}),               // p2
      dsum({z, z, A}), dsum({z, z, B}),               // p3
  };
  BuiltCase c;
  c.row = "Sl2R3/DaU1";
  c.params = params;
  c.space = adapted_space(mats, {"H", "Q0a", "Q0b", "P1a", "P1b", "P2a", "P2b", "P3a", "P3b"}, 1,
                          "Sl2R3/D(" + std::to_string(a1) + "," + std::to_string(a2) + "," + std::to_string(a3) +
                              ")U1");
  c.cartan_q = comp_span(8, {0, 1});
  c.cartan_p = comp_span(8, {2, 3, 4, 5, 6, 7});
  c.expected = {{'q', 2, "0"},
                {'p', 2, weight_tag(2 * a1)},
                {'p', 2, weight_tag(2 * a2)},
                {'p', 2, weight_tag(2 * a3)}};
  c.reference_metric = RM::identity(8);
  c.note = "U(1) embedded with slope (a1, a2, a3) in the diagonal torus of SO(2)^3";
  return c;
}

BuiltCase sl2rxsl2c_dpq(const std::vector<long>& params) {
  require_params(params, 2, "Sl2RxSl2C/Dpq");
  long p = params[0], q = params[1];
  if (p == 0 || q == 0 || std::gcd(std::abs(p), std::abs(q)) != 1)
    throw std::invalid_argument("Sl2RxSl2C/Dpq: p, q nonzero coprime integers");
  auto b = sl2c_basis();
  auto pad_c = [&](const RM& m) { return dsum({z2(2), m}); };  // sl2C part
  auto pad_r = [&](const RM& m) { return dsum({m, RM(4, 4)}); };
  RM crot = pad_r(sl2_C());
  RM zc = pad_c(b[0]);
  std::vector<RM> mats = {Rat(p) * crot + Rat(q) * zc,             // Z (isotropy)
                          Rat(2 * q) * crot + Rat(-p) * zc,        // q0
                          pad_c(b[4]), pad_c(b[5]),                // q1 = X1, X2
                          pad_c(b[1]),                             // p0 = Y0
                          pad_c(b[2]), pad_c(b[3]),                // p1 = Y1, Y2
                          pad_r(sl2_A()), pad_r(sl2_B())};         // p2
  BuiltCase c;
  c.row = "Sl2RxSl2C/Dpq";
  c.params = {p, q};
  c.space = adapted_space(mats, {"Z", "Q0", "X1", "X2", "Y0", "Y1", "Y2", "A1", "B1"}, 1,
                          "Sl2RxSl2C/D(" + std::to_string(p) + "," + std::to_string(q) + ")U1");
  c.cartan_q = comp_span(8, {0, 1, 2});
  c.cartan_p = comp_span(8, {3, 4, 5, 6, 7});
  c.expected = {{'q', 1, "0"},
                {'q', 2, weight_tag(2 * q)},
                {'p', 1, "0"},
                {'p', 2, weight_tag(2 * q)},
                {'p', 2, weight_tag(2 * p)}};
  c.reference_metric = RM::identity(8);
  Vec<Rat> dir(8, Rat(0));
  dir[0] = Rat(1);
  c.q0_direction = dir;
  c.note = "parameters (p,q) = (a1, a2=a3) per the table's note; |p| = |q| is the open Delta_{1,1} case";
  return c;
}

BuiltCase sl2rxsl2c_u1(const std::vector<long>&) {
  auto b = sl2c_basis();
  auto pad_c = [&](const RM& m) { return dsum({z2(2), m}); };
  auto pad_r = [&](const RM& m) { return dsum({m, RM(4, 4)}); };
  std::vector<RM> mats = {pad_c(b[0]),                       // Z (isotropy)
                          pad_r(sl2_C()),                    // q0
                          pad_c(b[4]), pad_c(b[5]),          // q1
                          pad_r(sl2_A()), pad_r(sl2_B()),    // p0 (sl2R part)
                          pad_c(b[1]),                       // p0 (Y0)
                          pad_c(b[2]), pad_c(b[3])};         // p1
  BuiltCase c;
  c.row = "Sl2RxSl2C/U1";
  c.space = adapted_space(mats, {"Z", "C1", "X1", "X2", "A1", "B1", "Y0", "Y1", "Y2"}, 1, "Sl2RxSl2C/U1");
  c.cartan_q = comp_span(8, {0, 1, 2});
  c.cartan_p = comp_span(8, {3, 4, 5, 6, 7});
  c.expected = {{'q', 1, "0"}, {'q', 2, "w2"}, {'p', 3, "0"}, {'p', 2, "w2"}};
  c.reference_metric = RM::identity(8);
  Prop35Data pd;
  pd.sl2_span = comp_span(8, {0, 3, 4});  // C1, A1, B1
  pd.m0_span = comp_span(8, {5});          // Y0
  pd.m1_span = comp_span(8, {1, 2, 6, 7}); // X1, X2, Y1, Y2
  c.prop35 = pd;
  return c;
}

BuiltCase sl2rxsl2r2_dpq(const std::vector<long>& params) {
  require_params(params, 2, "Sl2RxSl2R2/Dpq");
  long p = params[0], q = params[1];
  require_note_b(p, q, "Sl2RxSl2R2/Dpq");
  RM C = sl2_C(), A = sl2_A(), B = sl2_B(), z = z2(2);
  std::vector<RM> mats = {
      dsum({z, Rat(p) * C, Rat(q) * C}),   // Z (isotropy, in factors 2,3)
      dsum({C, z, z}),                     // q0a
      dsum({z, Rat(q) * C, Rat(-p) * C}),  // q0b
      dsum({A, z, z}), dsum({B, z, z}),    // p0 (first factor)
      dsum({z, A, z}), dsum({z, B, z}),    // p1
      dsum({z, z, A}), dsum({z, z, B}),    // p2
  };
  BuiltCase c;
  c.row = "Sl2RxSl2R2/Dpq";
  c.params = {p, q};
  c.space = adapted_space(mats, {"Z", "C1", "Q0", "A1", "B1", "A2", "B2", "A3", "B3"}, 1,
                          "Sl2Rx(Sl2RxSl2R)/D(" + std::to_string(p) + "," + std::to_string(q) + ")U1");
  c.cartan_q = comp_span(8, {0, 1});
  c.cartan_p = comp_span(8, {2, 3, 4, 5, 6, 7});
  c.expected = {{'q', 2, "0"},
                {'p', 2, "0"},
                {'p', 2, weight_tag(2 * p)},
                {'p', 2, weight_tag(2 * q)}};
  c.reference_metric = RM::identity(8);
  Prop35Data pd;
  pd.sl2_span = comp_span(8, {0, 2, 3});
  pd.m0_span = comp_span(8, {1});
  pd.m1_span = comp_span(8, {4, 5, 6, 7});
  c.prop35 = pd;
  return c;
}

BuiltCase sl2rxsu21_su2(const std::vector<long>&) {
  auto pad = [&](const CM& m) { return dsum({z2(2), realify(m)}); };
  auto pad2 = [&](const RM& m) { return dsum({m, RM(6, 6)}); };
  std::vector<RM> mats = {pad(su21_diag(1, -1, 0)),
                          pad(su21_q(false)),
                          pad(su21_q(true)),
                          pad2(sl2_C()),            // q0a
                          pad(su21_diag(1, 1, -2)), // q0b
                          pad2(sl2_A()),
                          pad2(sl2_B()),            // p0
                          pad(su21_p(0, false)),
                          pad(su21_p(0, true)),
                          pad(su21_p(1, false)),
                          pad(su21_p(1, true))};
  BuiltCase c;
  c.row = "Sl2RxSU21/SU2";
  c.space = adapted_space(mats, {"K1", "K2", "K3", "C1", "Z2", "A1", "B1", "P1a", "P1b", "P2a", "P2b"}, 3,
                          "Sl2RxSU21/SU2");
  c.cartan_q = comp_span(8, {0, 1});
  c.cartan_p = comp_span(8, {2, 3, 4, 5, 6, 7});
  c.expected = {{'q', 2, "0"}, {'p', 2, "0"}, {'p', 4, "su2"}};
  c.reference_metric = RM::identity(8);
  Prop35Data pd;
  pd.sl2_span = comp_span(8, {0, 2, 3});
  pd.m0_span = comp_span(8, {1});
  pd.m1_span = comp_span(8, {4, 5, 6, 7});
  c.prop35 = pd;
  return c;
}

BuiltCase sl2r_so2(const std::vector<long>&) {
  std::vector<RM> mats = {sl2_C(), sl2_A(), sl2_B()};
  BuiltCase c;
  c.row = "Sl2R/SO2";
  c.space = adapted_space(mats, {"C", "A", "B"}, 1, "Sl2R/SO2");
  c.cartan_q = RM(2, 0);
  c.cartan_p = RM::identity(2);
  c.expected = {{'p', 2, "w2"}};
  c.reference_metric = RM::identity(2);
  return c;
}

}  // namespace rows

// ------------------------------------------------------------------
// registry
// ------------------------------------------------------------------

namespace {

std::vector<std::vector<long>> coprime_pairs_note_a(int pmax) {
  std::vector<std::vector<long>> out;
  for (long q = 1; q <= pmax && out.size() < 12; ++q)
    for (long p = 0; p <= q && out.size() < 12; ++p)
      if (std::gcd(p, q) == 1) out.push_back({p, q});
  return out;
}

std::vector<std::vector<long>> coprime_pairs_note_b(int pmax) {
  std::vector<std::vector<long>> out;
  for (long q = 1; q <= pmax; ++q)
    for (long p = -pmax; p <= q; ++p) {
      if (p == 0) continue;
      if (std::gcd(std::abs(p), std::abs(q)) != 1) continue;
      out.push_back({p, q});
      if (out.size() >= 12) return out;
    }
  return out;
}

std::vector<std::vector<long>> triples_note_d(int pmax) {
  std::vector<std::vector<long>> out;
  for (long a3 = 1; a3 <= pmax; ++a3)
    for (long a2 = -pmax; a2 <= a3; ++a2)
      for (long a1 = -pmax; a1 <= a2; ++a1) {
        if (a1 == 0 || a2 == 0 || a3 == 0) continue;
        if (gcd3(a1, a2, a3) != 1) continue;
        out.push_back({a1, a2, a3});
        if (out.size() >= 12) return out;
      }
  return out;
}

std::vector<std::vector<long>> sl2rxsl2c_pairs(int pmax) {
  std::vector<std::vector<long>> out;
  for (long q = 1; q <= pmax; ++q)
    for (long p = -pmax; p <= q; ++p) {
      if (p == 0 || std::gcd(std::abs(p), std::abs(q)) != 1) continue;
      out.push_back({p, q});
      if (out.size() >= 12) return out;
    }
  return out;
}

std::vector<CaseRecord> make_catalog() {
  std::vector<CaseRecord> rowsv;
  auto add = [&](CaseRecord r) { rowsv.push_back(std::move(r)); };

  auto fixed = [](std::vector<long> v = {}) {
    return [v](int) { return std::vector<std::vector<long>>{v}; };
  };

  add({"Sl2R", 3, 0, Verdict::OpenCase, "Lie group", "SU(2)/{id} via SU(2)/U(1)",
       "non-existence classical; kept as a search-only row", {"validate", "search"}, rows::sl2r_group, fixed()});
  add({"Sl2C/U1", 5, 0, Verdict::NoEinstein_ExplicitFormula, "q1(2) + p0(1) + p1(2), q1 ~ p1",
       "(SU(2)xSU(2))/D_pq U(1) via (SU(2)xSU(2))/D SU(2)", "",
       {"validate", "cartan", "offdiag-identity", "offdiag-sign", "search"}, rows::sl2c_u1, fixed()});
  add({"Sl2RxSl2R/Dpq", 5, 2, Verdict::NoEinstein_CartanOrthogonal, "q0(1) + p1(2) + p2(2), p1 ~ p2 iff |p|=|q|",
       "(SU(2)xSU(2))/D_pq U(1) via (SU(2)/U(1))^2",
       "real-module equivalence is |p| = |q|; the table's p = q is the normalized form",
       {"validate", "cartan"}, rows::sl2rxsl2r_dpq, coprime_pairs_note_b});
  add({"SU21/SU2", 5, 0, Verdict::NoEinstein_CartanOrthogonal, "q0(1) + p1(4)", "SU(3)/SU(2) via SU(3)/U(2)", "",
       {"validate", "cartan", "search"}, rows::su21_su2, fixed()});
  add({"Sl2C", 6, 0, Verdict::OpenCase, "Lie group", "(SU(2)xSU(2))/{id} via (SU(2)xSU(2))/D SU(2)", "",
       {"validate", "search"}, rows::sl2c_group, fixed()});
  add({"Sl2RxSl2R", 6, 0, Verdict::OpenCase, "Lie group", "(SU(2)xSU(2))/{id} via (SU(2)/U(1))^2", "",
       {"validate", "search"}, rows::sl2rxsl2r_group, fixed()});
  add({"Sp11/Sp1U1", 6, 0, Verdict::NoEinstein_CartanOrthogonal, "q1(2) + p1(4)", "Sp(2)/Sp(1)U(1) via Sp(2)/Sp(1)Sp(1)",
       "", {"validate", "cartan"}, rows::sp11_sp1u1, fixed()});
  add({"G2/SU3", 6, 0, Verdict::MetadataOnly, "irreducible", "G2/SU(3)",
       "isotropy irreducible, non-symmetric; admits no non-compact counterpart", {}, nullptr, nullptr});
  add({"SU21/T2", 6, 0, Verdict::NoEinstein_CartanOrthogonal, "q1(2) + p1(2) + p2(2)", "SU(3)/T2 via SU(3)/U(2)", "",
       {"validate", "cartan"}, rows::su21_t2, fixed()});
  add({"Spin7/G2", 7, 0, Verdict::MetadataOnly, "irreducible", "Spin(7)/G2",
       "isotropy irreducible, non-symmetric; admits no non-compact counterpart", {}, nullptr, nullptr});
  add({"Sp2/SU2", 7, 0, Verdict::MetadataOnly, "irreducible", "Sp(2)/SU(2)",
       "isotropy irreducible, non-symmetric; admits no non-compact counterpart", {}, nullptr, nullptr});
  add({"SU31/SU3", 7, 0, Verdict::NoEinstein_CartanOrthogonal, "q0(1) + p1(6)", "SU(4)/SU(3) via SU(4)/U(3)", "",
       {"validate", "cartan"}, rows::su31_su3, fixed()});
  add({"Sp11/Sp1", 7, 0, Verdict::NoEinstein_CartanOrthogonal, "q0(3) + p1(4)", "Sp(2)/Sp(1) via Sp(2)/Sp(1)Sp(1)", "",
       {"validate", "cartan"}, rows::sp11_sp1, fixed()});
  add({"SO41/SO3", 7, 0, Verdict::NoEinstein_CartanOrthogonal, "q1(3) + p0(1) + p1(3), q1 ~ p1",
       "SO(5)/SO(3) via SO(5)/SO(4)", "resolved by the conjugated-Cartan criterion; sweep is evidence",
       {"validate", "cartan", "conjugated-sweep"}, rows::so41_so3, fixed()});
  add({"SO32/SO3", 7, 0, Verdict::NoEinstein_CartanOrthogonal, "q0(1) + p1(3) + p2(3), p1 ~ p2",
       "SO(5)/SO(3) via SO(5)/SO(3)SO(2)", "", {"validate", "cartan"}, rows::so32_so3, fixed()});
  add({"SU21/Dpq", 7, 2, Verdict::NoEinstein_CartanOrthogonal,
       "q0(1) + q1(2) + p1(2) + p2(2); p1 ~ p2 iff p=q=1; q1 ~ p1 iff (p,q)=(0,1)",
       "SU(3)/D_pq U(1) via SU(3)/U(2)",
       "for (p,q) = (0,1) the verdict comes from the Ricci-sign certificate", {"validate", "cartan"},
       rows::su21_dpq, coprime_pairs_note_a});
  add({"Sl3R/SO2", 7, 0, Verdict::NoEinstein_CartanOrthogonal, "q1(2) + p0(1) + p1(2) + p2(2), q1 ~ p1",
       "SU(3)/D_pq U(1) via SU(3)/SO(3)",
       "verdict cited from the external orthogonal-Cartan criterion; the sweep certifies the "
       "involution-even subfamily and the search corroborates the rest",
       {"validate", "cartan", "conjugated-sweep", "search"}, rows::sl3r_so2, fixed()});
  add({"SU21xSl2R/Dpq", 7, 2, Verdict::NoEinstein_CartanOrthogonal, "q0(1) + p1(4) + p2(2)",
       "(SU(3)xSU(2))/D_pq U(1)(SU(2)x{id})", "", {"validate", "cartan"}, rows::su21xsl2r_dpq,
       coprime_pairs_note_b});
  add({"Sl2R3/DabcT2", 7, 3, Verdict::NoEinstein_CartanOrthogonal, "q0(1) + p1(2) + p2(2) + p3(2)",
       "(SU(2)^3)/D_abc T2 via (SU(2)/U(1))^3",
       "T2 is the kernel of the (a,b,c) character on the diagonal torus; convention per the catalog",
       {"validate", "cartan"}, rows::sl2r3_dabct2, triples_note_d});
  add({"SU21", 8, 0, Verdict::OpenCase, "Lie group", "SU(3)/{id} via SU(3)/U(2)", "", {"validate", "search"},
       rows::su21_group, fixed()});
  add({"Sl3R", 8, 0, Verdict::OpenCase, "Lie group", "SU(3)/{id} via SU(3)/SO(3)", "", {"validate", "search"},
       rows::sl3r_group, fixed()});
  add({"Sp2R/T2", 8, 0, Verdict::NoEinstein_CartanOrthogonal, "q1(2) + p1(2) + p2(2) + p3(2)",
       "Sp(2)/T2 via Sp(2)/U(2)", "equal rank: all modules pairwise inequivalent", {"validate", "cartan"},
       rows::sp2r_t2, fixed()});
  add({"Sp11/T2", 8, 0, Verdict::NoEinstein_CartanOrthogonal, "q1(2) + q2(2) + p1(2) + p2(2)",
       "Sp(2)/T2 via Sp(2)/Sp(1)Sp(1)", "equal rank: all modules pairwise inequivalent", {"validate", "cartan"},
       rows::sp11_t2, fixed()});
  add({"Sl2RxSl2C/Dpq", 8, 2, Verdict::NoEinstein_RicciSign,
       "q0(1) + q1(2) + p0(1) + p1(2) + p2(2); q1 ~ p1; p1 ~ p2 iff |p|=|q|",
       "(SU(2)^3)/D_a1a2a3 U(1) via SU(2)/U(1) x (SU(2)^2/D SU(2))",
       "|p| = |q| (the D_{1,1} space) is the open case; the certificate covers |p| != |q|",
       {"validate", "cartan", "ricci-sign"}, rows::sl2rxsl2c_dpq, sl2rxsl2c_pairs});
  add({"Sl2R3/DaU1", 8, 3, Verdict::NoEinstein_CartanOrthogonal, "q0(2) + p1(2) + p2(2) + p3(2), pi ~ pj iff |ai|=|aj|",
       "(SU(2)^3)/D_a1a2a3 U(1) via (SU(2)/U(1))^3", "", {"validate", "cartan"}, rows::sl2r3_da1a2a3,
       triples_note_d});
  add({"Sl2RxSl2C/U1", 8, 0, Verdict::ProductOnly, "q0(1) + q1(2) + p0(3) + p1(2), q1 ~ p1",
       "SU(2) x (SU(2)xSU(2))/D_pq U(1)",
       "every Einstein metric would split off the Sl2(R) factor (product forcing); Sl2(R) admits no "
       "left-invariant Einstein metric", {"validate", "cartan", "product-forcing"}, rows::sl2rxsl2c_u1, fixed()});
  add({"Sl2RxSl2R2/Dpq", 8, 2, Verdict::ProductOnly, "q0(2) + p0(2) + p1(2) + p2(2), p1 ~ p2 iff |p|=|q|",
       "SU(2) x (SU(2)xSU(2))/D_pq U(1) via (SU(2)/U(1))^3",
       "every Einstein metric would split off the Sl2(R) factor (product forcing)",
       {"validate", "cartan", "product-forcing"}, rows::sl2rxsl2r2_dpq, coprime_pairs_note_b});
  add({"Sl2RxSU21/SU2", 8, 0, Verdict::ProductOnly, "q0(2) + p0(2) + p1(4)", "SU(2) x SU(3)/SU(2)",
       "every Einstein metric would split off the Sl2(R) factor (product forcing)",
       {"validate", "cartan", "product-forcing"}, rows::sl2rxsu21_su2, fixed()});
  add({"Sl2RxSl2R-D11-theta", 8, 0, Verdict::NoEinstein_ExplicitFormula,
       "generalized Einstein problem: G1/K = (Sl2RxSl2R)/D11SO(2), dim n = 2",
       "n/a (structure case, dim G/K = 8)", "the final sign certificate mechanizes the contradiction",
       {"validate", "moment-map", "rtheta-identity", "rtheta-grid", "search-theta"}, rows::sl2rxsl2r_d11_theta, fixed()});
  // symmetric reference pairs used by the sanity criteria
  add({"Sl2R/SO2", 2, 0, Verdict::Symmetric, "p1(2)", "SU(2)/U(1)", "real hyperbolic plane",
       {"validate", "symmetric", "search"}, rows::sl2r_so2, fixed()});
  add({"Sl2C/SU2", 3, 0, Verdict::Symmetric, "p1(3)", "(SU(2)xSU(2))/D SU(2)", "real hyperbolic 3-space",
       {"validate", "symmetric"}, rows::sl2c_su2, fixed()});
  add({"SU21/U2", 4, 0, Verdict::Symmetric, "p1(4)", "SU(3)/U(2)", "complex hyperbolic plane",
       {"validate", "symmetric", "search"}, rows::su21_u2, fixed()});
  add({"SO41/SO4", 4, 0, Verdict::Symmetric, "p1(4)", "SO(5)/SO(4)", "real hyperbolic 4-space",
       {"validate", "symmetric"}, rows::so41_so4, fixed()});
  return rowsv;
}

const std::map<std::string, std::string>& aliases() {
  static const std::map<std::string, std::string> a = {
      {"Sl2CxSl2R-case-516", "Sl2RxSl2R-D11-theta"},
      {"Sl2RxSl2R/D11-theta", "Sl2RxSl2R-D11-theta"},
      {"SU21/D01", "SU21/Dpq"},
  };
  return a;
}

}  // namespace

const std::vector<CaseRecord>& catalog() {
  static const std::vector<CaseRecord> c = make_catalog();
  return c;
}

const CaseRecord* find_case(const std::string& name) {
  std::string key = name;
  auto it = aliases().find(name);
  if (it != aliases().end()) key = it->second;
  for (const auto& r : catalog())
    if (r.name == key) return &r;
  return nullptr;
}

std::vector<std::string> case_suggestions(const std::string& name) {
  // crude edit-distance ranking
  auto dist = [](const std::string& a, const std::string& b) {
    std::vector<std::vector<int>> d(a.size() + 1, std::vector<int>(b.size() + 1));
    for (size_t i = 0; i <= a.size(); ++i) d[i][0] = static_cast<int>(i);
    for (size_t j = 0; j <= b.size(); ++j) d[0][j] = static_cast<int>(j);
    for (size_t i = 1; i <= a.size(); ++i)
      for (size_t j = 1; j <= b.size(); ++j)
        d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                            d[i - 1][j - 1] + (std::tolower(a[i - 1]) == std::tolower(b[j - 1]) ? 0 : 1)});
    return d[a.size()][b.size()];
  };
  std::vector<std::pair<int, std::string>> scored;
  for (const auto& r : catalog()) scored.emplace_back(dist(name, r.name), r.name);
  std::sort(scored.begin(), scored.end());
  std::vector<std::string> out;
  for (size_t i = 0; i < scored.size() && i < 3; ++i) out.push_back(scored[i].second);
  return out;
}

BuiltCase build_case(const std::string& name, const std::vector<long>& params) {
  const CaseRecord* rec = find_case(name);
  if (!rec) {
    std::ostringstream msg;
    msg << "unknown case '" << name << "'; closest:";
    for (const auto& s : case_suggestions(name)) msg << " " << s;
    throw std::invalid_argument(msg.str());
  }
  if (!rec->build) throw std::invalid_argument(name + " is a metadata-only row (no constructor)");
  std::vector<long> p = params;
  if (rec->nparams > 0 && p.empty() && rec->param_samples) p = rec->param_samples(7).front();
  return rec->build(p);
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::NoEinstein_CartanOrthogonal: return "NoEinstein_CartanOrthogonal";
    case Verdict::NoEinstein_RicciSign: return "NoEinstein_RicciSign";
    case Verdict::NoEinstein_ExplicitFormula: return "NoEinstein_ExplicitFormula";
    case Verdict::OpenCase: return "OpenCase";
    case Verdict::Symmetric: return "Symmetric";
    case Verdict::ProductOnly: return "ProductOnly";
    case Verdict::MetadataOnly: return "MetadataOnly";
  }
  return "?";
}

}  // namespace hec
