#ifndef EXJORDAN_OCTONION_HPP
#define EXJORDAN_OCTONION_HPP

#include <array>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "exjordan/matrix.hpp"

namespace exj {

// Split octonions in the Zorn model: x = (a, v; phi, d) with v in V3 and
// phi in the dual space. Fixed coordinate order:
//   (eps1, e1, e2, e3, e1*, e2*, e3*, eps2).
// The wedge identifications are e1^e2 -> e3*, e1*^e2* -> e3 and cyclic.
struct Octonion {
  std::array<Rat, 8> c{};

  Octonion() = default;
  explicit Octonion(std::array<Rat, 8> coords) : c(std::move(coords)) {}

  static Octonion zero() { return Octonion(); }
  static Octonion one() {
    Octonion x;
    x.c[0] = 1;
    x.c[7] = 1;
    return x;
  }
  static Octonion basis(int i) {
    Octonion x;
    x.c[i] = 1;
    return x;
  }
  static Octonion eps1() { return basis(0); }
  static Octonion eps2() { return basis(7); }
  static Octonion e(int j) { return basis(j); }        // j in 1..3
  static Octonion estar(int j) { return basis(3 + j); }  // j in 1..3

  static Octonion from_row(const std::vector<Rat>& v) {
    Octonion x;
    for (int i = 0; i < 8; ++i) x.c[i] = v[i];
    return x;
  }
  std::vector<Rat> to_row() const { return std::vector<Rat>(c.begin(), c.end()); }

  Rat scalar_a() const { return c[0]; }
  Rat scalar_d() const { return c[7]; }

  bool operator==(const Octonion& o) const { return c == o.c; }
  bool operator!=(const Octonion& o) const { return !(*this == o); }
  bool is_zero() const {
    for (const auto& x : c)
      if (x != 0) return false;
    return true;
  }

  Octonion operator+(const Octonion& o) const {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = c[i] + o.c[i];
    return r;
  }
  Octonion operator-(const Octonion& o) const {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = c[i] - o.c[i];
    return r;
  }
  Octonion operator-() const {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = -c[i];
    return r;
  }
  Octonion scaled(const Rat& s) const {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = c[i] * s;
    return r;
  }
};

inline std::ostream& operator<<(std::ostream& os, const Octonion& x) {
  os << "(";
  for (int i = 0; i < 8; ++i) os << rat_to_string(x.c[i]) << (i < 7 ? "," : ")");
  return os;
}

namespace detail {
inline std::array<Rat, 3> cross3(const Rat* u, const Rat* w) {
  return {u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2],
          u[0] * w[1] - u[1] * w[0]};
}
inline Rat dot3(const Rat* u, const Rat* w) {
  return u[0] * w[0] + u[1] * w[1] + u[2] * w[2];
}
}  // namespace detail

// Zorn product:
//   (a v; phi d)(a' v'; phi' d')
//     = (aa' + phi'(v), av' + d'v - phi^phi'; a'phi + dphi' + v^v', phi(v') + dd').
inline Octonion zorn_mul(const Octonion& x, const Octonion& y) {
  const Rat *v = &x.c[1], *f = &x.c[4];
  const Rat *v2 = &y.c[1], *f2 = &y.c[4];
  const Rat &a = x.c[0], &d = x.c[7], &a2 = y.c[0], &d2 = y.c[7];
  Octonion r;
  r.c[0] = a * a2 + detail::dot3(f2, v);
  auto ff = detail::cross3(f, f2);
  auto vv = detail::cross3(v, v2);
  for (int i = 0; i < 3; ++i) {
    r.c[1 + i] = a * v2[i] + d2 * v[i] - ff[i];
    r.c[4 + i] = a2 * f[i] + d * f2[i] + vv[i];
  }
  r.c[7] = detail::dot3(f, v2) + d * d2;
  return r;
}

inline Octonion conj(const Octonion& x) {
  Octonion r;
  r.c[0] = x.c[7];
  r.c[7] = x.c[0];
  for (int i = 1; i < 7; ++i) r.c[i] = -x.c[i];
  return r;
}

inline Rat onorm(const Octonion& x) {
  return x.c[0] * x.c[7] - detail::dot3(&x.c[4], &x.c[1]);
}

inline Rat otrace(const Octonion& x) { return x.c[0] + x.c[7]; }

// (x, y) = n(x+y) - n(x) - n(y), expanded.
inline Rat bilinear(const Octonion& x, const Octonion& y) {
  return x.c[0] * y.c[7] + y.c[0] * x.c[7] - detail::dot3(&x.c[4], &y.c[1]) -
         detail::dot3(&y.c[4], &x.c[1]);
}

// Right-action matrices of the two multiplications; rows are basis images.
inline Mat left_mul_matrix(const Octonion& w) {
  // x -> w * x
  Mat m(8, 8);
  for (int i = 0; i < 8; ++i) m.set_row(i, zorn_mul(w, Octonion::basis(i)).to_row());
  return m;
}
inline Mat right_mul_matrix(const Octonion& w) {
  // x -> x * w
  Mat m(8, 8);
  for (int i = 0; i < 8; ++i) m.set_row(i, zorn_mul(Octonion::basis(i), w).to_row());
  return m;
}

// ---------------------------------------------------------------------------
// Cayley-Dickson model over the split quaternions D = M2(F).
// Coordinates (p00, p01, p10, p11, q00, q01, q10, q11) for (p, q) in D + D.
// ---------------------------------------------------------------------------
struct CDOctonion {
  std::array<Rat, 8> c{};
  Rat gamma = 1;

  CDOctonion() = default;
  CDOctonion(std::array<Rat, 8> coords, Rat g) : c(std::move(coords)), gamma(std::move(g)) {}

  static CDOctonion basis(int i, Rat g = Rat(1)) {
    CDOctonion u;
    u.c[i] = 1;
    u.gamma = std::move(g);
    return u;
  }
  static CDOctonion one(Rat g = Rat(1)) {
    CDOctonion u;
    u.c[0] = 1;
    u.c[3] = 1;
    u.gamma = std::move(g);
    return u;
  }

  bool operator==(const CDOctonion& o) const { return c == o.c && gamma == o.gamma; }
};

inline std::ostream& operator<<(std::ostream& os, const CDOctonion& u) {
  os << "(";
  for (int i = 0; i < 8; ++i) os << rat_to_string(u.c[i]) << (i == 3 ? "|" : i < 7 ? "," : ")");
  return os;
}

namespace detail {
using Quat = std::array<Rat, 4>;  // 2x2 matrix (row-major)
inline Quat qmul(const Quat& a, const Quat& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}
inline Quat qconj(const Quat& a) { return {a[3], -a[1], -a[2], a[0]}; }
inline Rat qnorm(const Quat& a) { return a[0] * a[3] - a[1] * a[2]; }
inline Rat qtrace(const Quat& a) { return a[0] + a[3]; }
inline Quat qof(const CDOctonion& u, int half) {
  return {u.c[4 * half + 0], u.c[4 * half + 1], u.c[4 * half + 2], u.c[4 * half + 3]};
}
}  // namespace detail

// (x1, y1)(x2, y2) = (x1 x2 + gamma y2* y1, y2 x1 + y1 x2*).
inline CDOctonion cd_mul(const CDOctonion& u, const CDOctonion& w) {
  if (u.gamma != w.gamma)
    throw std::invalid_argument("cd_mul: mismatched Cayley-Dickson parameters");
  using namespace detail;
  Quat x1 = qof(u, 0), y1 = qof(u, 1), x2 = qof(w, 0), y2 = qof(w, 1);
  Quat rx = qmul(x1, x2), t = qmul(qconj(y2), y1);
  for (int i = 0; i < 4; ++i) rx[i] += u.gamma * t[i];
  Quat ry = qmul(y2, x1), t2 = qmul(y1, qconj(x2));
  for (int i = 0; i < 4; ++i) ry[i] += t2[i];
  CDOctonion r;
  r.gamma = u.gamma;
  for (int i = 0; i < 4; ++i) {
    r.c[i] = rx[i];
    r.c[4 + i] = ry[i];
  }
  return r;
}

inline CDOctonion cd_conj(const CDOctonion& u) {
  using namespace detail;
  Quat p = qconj(qof(u, 0));
  CDOctonion r;
  r.gamma = u.gamma;
  for (int i = 0; i < 4; ++i) {
    r.c[i] = p[i];
    r.c[4 + i] = -u.c[4 + i];
  }
  return r;
}

inline Rat cd_norm(const CDOctonion& u) {
  using namespace detail;
  return qnorm(qof(u, 0)) - u.gamma * qnorm(qof(u, 1));
}

inline Rat cd_trace(const CDOctonion& u) { return detail::qtrace(detail::qof(u, 0)); }

// Fixed unital isomorphism Theta_{M2(F),1} -> Theta_Zorn. The split
// quaternions embed onto span{eps1, e1, e1*, eps2} (E11, E12, E21, E22 in
// that order) and the second summand is mapped through right multiplication
// by u0 = e2 + e2*, a trace-zero unit vector perpendicular to that
// subalgebra with u0^2 = 1. Certified at first use: unital, commutes with
// conjugation, multiplicative on all 64 basis pairs, norm preserving.
inline const Mat& cd_zorn_matrix() {
  static const Mat psi = [] {
    Mat m(8, 8);
    const Octonion img_d[4] = {Octonion::eps1(), Octonion::e(1), Octonion::estar(1),
                               Octonion::eps2()};
    Octonion u0 = Octonion::e(2) + Octonion::estar(2);
    for (int i = 0; i < 4; ++i) m.set_row(i, img_d[i].to_row());
    for (int i = 0; i < 4; ++i) m.set_row(4 + i, zorn_mul(img_d[i], u0).to_row());
    // certification
    auto image = [&](int i) { return Octonion::from_row(m.row(i)); };
    auto apply_cd = [&](const CDOctonion& u) {
      Octonion out;
      for (int i = 0; i < 8; ++i) out = out + image(i).scaled(u.c[i]);
      return out;
    };
    if (apply_cd(CDOctonion::one()) != Octonion::one())
      throw std::logic_error("cd_zorn_matrix: not unital");
    for (int i = 0; i < 8; ++i) {
      CDOctonion bi = CDOctonion::basis(i);
      if (apply_cd(cd_conj(bi)) != conj(apply_cd(bi)))
        throw std::logic_error("cd_zorn_matrix: conjugation mismatch");
      if (cd_norm(bi) != onorm(apply_cd(bi)))
        throw std::logic_error("cd_zorn_matrix: norm mismatch");
      for (int j = 0; j < 8; ++j) {
        CDOctonion bj = CDOctonion::basis(j);
        if (apply_cd(cd_mul(bi, bj)) != zorn_mul(apply_cd(bi), apply_cd(bj)))
          throw std::logic_error("cd_zorn_matrix: multiplication mismatch at pair " +
                                 std::to_string(i) + "," + std::to_string(j));
      }
    }
    return m;
  }();
  return psi;
}

inline const Mat& zorn_cd_matrix() {
  static const Mat inv = [] {
    const Mat& psi = cd_zorn_matrix();
    Mat aug(8, 16);
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) aug.at(i, j) = psi.at(i, j);
      aug.at(i, 8 + i) = 1;
    }
    auto rr = rref(aug);
    Mat out(8, 8);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) out.at(i, j) = rr.reduced.at(i, 8 + j);
    return out;
  }();
  return inv;
}

inline Octonion cd_to_zorn(const CDOctonion& u) {
  if (u.gamma != 1)
    throw std::invalid_argument("cd_to_zorn: only the gamma = 1 split model is supported");
  std::vector<Rat> row(u.c.begin(), u.c.end());
  return Octonion::from_row(apply_row(row, cd_zorn_matrix()));
}

inline CDOctonion zorn_to_cd(const Octonion& x) {
  CDOctonion u;
  auto row = apply_row(x.to_row(), zorn_cd_matrix());
  for (int i = 0; i < 8; ++i) u.c[i] = row[i];
  return u;
}

// ---------------------------------------------------------------------------
// Subspaces of Theta.
// ---------------------------------------------------------------------------
using ThetaSubspace = Subspace;

inline ThetaSubspace theta_span(const std::vector<Octonion>& xs) {
  Mat m(int(xs.size()), 8);
  for (size_t i = 0; i < xs.size(); ++i) m.set_row(int(i), xs[i].to_row());
  return ThetaSubspace(m);
}

enum class Side { Left, Right };

// Ann_R(W) = {x : w x = 0 for all w in W}; Ann_L(W) = {x : x w = 0}.
inline ThetaSubspace annihilator(const ThetaSubspace& w, Side side) {
  if (w.dim() == 0) return ThetaSubspace::full(8);
  // x * M = 0 for the horizontally stacked multiplication matrices;
  // kernel_basis wants rows annihilating columns, so pass the transpose.
  Mat stacked(8, 8 * w.dim());
  for (int b = 0; b < w.dim(); ++b) {
    Octonion wb = Octonion::from_row(w.basis().row(b));
    Mat mul = (side == Side::Right) ? left_mul_matrix(wb) : right_mul_matrix(wb);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) stacked.at(i, 8 * b + j) = mul.at(i, j);
  }
  return ThetaSubspace(kernel_basis(stacked.transpose()));
}

// Orthogonal complement for the split norm form.
inline ThetaSubspace theta_perp(const ThetaSubspace& w) {
  Mat m(w.dim(), 8);
  for (int b = 0; b < w.dim(); ++b) {
    Octonion wb = Octonion::from_row(w.basis().row(b));
    for (int i = 0; i < 8; ++i) m.at(b, i) = bilinear(Octonion::basis(i), wb);
  }
  return ThetaSubspace(kernel_basis(m));
}

struct ClassificationError : std::runtime_error {
  std::vector<Rat> witness;
  ClassificationError(const std::string& msg, std::vector<Rat> w)
      : std::runtime_error(msg), witness(std::move(w)) {}
};

// Classification record for isotropic lines and two-spaces.
struct IsotropicClass {
  int dim = 0;
  bool traceless = false;
  bool left_null = false;   // two-spaces only
  bool right_null = false;  // two-spaces only
  // Orbit class 1..5 for two-spaces; 0 when the flag combination is not in
  // the classified list. For lines: 1 = traceless, 2 = not traceless.
  int orbit_class = 0;
};

// Isotropy is checked on a basis plus all pairwise polarizations.
inline void require_isotropic(const ThetaSubspace& s) {
  for (int i = 0; i < s.dim(); ++i) {
    Octonion bi = Octonion::from_row(s.basis().row(i));
    if (onorm(bi) != 0)
      throw ClassificationError("classify_isotropic: basis vector has nonzero norm",
                                bi.to_row());
    for (int j = i + 1; j < s.dim(); ++j) {
      Octonion bj = Octonion::from_row(s.basis().row(j));
      if (bilinear(bi, bj) != 0)
        throw ClassificationError("classify_isotropic: nonvanishing polarization",
                                  (bi + bj).to_row());
    }
  }
}

inline IsotropicClass classify_isotropic(const ThetaSubspace& s) {
  if (s.dim() != 1 && s.dim() != 2)
    throw std::invalid_argument("classify_isotropic: dimension must be 1 or 2");
  require_isotropic(s);
  IsotropicClass out;
  out.dim = s.dim();
  out.traceless = true;
  for (int i = 0; i < s.dim(); ++i)
    if (otrace(Octonion::from_row(s.basis().row(i))) != 0) out.traceless = false;
  if (s.dim() == 1) {
    out.orbit_class = out.traceless ? 1 : 2;
    return out;
  }
  Octonion x = Octonion::from_row(s.basis().row(0));
  Octonion y = Octonion::from_row(s.basis().row(1));
  // the lines through x*y and xy* do not depend on the basis choice
  out.left_null = zorn_mul(conj(x), y).is_zero();
  out.right_null = zorn_mul(x, conj(y)).is_zero();
  if (out.traceless && out.left_null && out.right_null)
    out.orbit_class = 1;
  else if (out.traceless && !out.left_null && !out.right_null)
    out.orbit_class = 2;
  else if (!out.traceless && out.left_null && !out.right_null)
    out.orbit_class = 3;
  else if (!out.traceless && out.right_null && !out.left_null)
    out.orbit_class = 4;
  else if (!out.traceless && !out.left_null && !out.right_null)
    out.orbit_class = 5;
  return out;
}

// Completes a two-dimensional isotropic space V1 with 2-dimensional right
// annihilator to the unique triple V1, V2, V3 with V_i * V_{i+1} = 0.
inline std::pair<ThetaSubspace, ThetaSubspace> complete_null_triple(const ThetaSubspace& v1) {
  if (v1.dim() != 2) throw std::invalid_argument("complete_null_triple: need a two-space");
  require_isotropic(v1);
  ThetaSubspace v2 = annihilator(v1, Side::Right);
  if (v2.dim() != 2)
    throw std::invalid_argument("complete_null_triple: right annihilator is " +
                                std::to_string(v2.dim()) + "-dimensional, not 2");
  ThetaSubspace v3 = annihilator(v2, Side::Right);
  if (v3.dim() != 2) throw std::logic_error("complete_null_triple: degenerate V3");
  return {v2, v3};
}

inline ThetaSubspace conj_space(const ThetaSubspace& w) {
  Mat m(w.dim(), 8);
  for (int b = 0; b < w.dim(); ++b)
    m.set_row(b, conj(Octonion::from_row(w.basis().row(b))).to_row());
  return ThetaSubspace(m);
}

// span{ w * x : w in W, x in X }
inline ThetaSubspace product_space(const ThetaSubspace& w, const ThetaSubspace& x) {
  Mat m(w.dim() * x.dim(), 8);
  int r = 0;
  for (int i = 0; i < w.dim(); ++i)
    for (int j = 0; j < x.dim(); ++j)
      m.set_row(r++, zorn_mul(Octonion::from_row(w.basis().row(i)),
                              Octonion::from_row(x.basis().row(j)))
                         .to_row());
  return ThetaSubspace(m);
}

}  // namespace exj

#endif
