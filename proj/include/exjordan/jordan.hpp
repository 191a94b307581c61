#ifndef EXJORDAN_JORDAN_HPP
#define EXJORDAN_JORDAN_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "exjordan/octonion.hpp"

namespace exj {

// The exceptional cubic norm structure J = H3(Theta): 27 coordinates in the
// fixed order (c1, c2, c3, a1[8], a2[8], a3[8]), read from the Hermitian
// matrix
//   [ c1   a3   a2* ]
//   [ a3*  c2   a1  ]
//   [ a2   a1*  c3  ].
struct JordanElement {
  Rat c1, c2, c3;
  Octonion a1, a2, a3;

  JordanElement() : c1(0), c2(0), c3(0) {}
  JordanElement(Rat c1_, Rat c2_, Rat c3_, Octonion a1_ = Octonion(),
                Octonion a2_ = Octonion(), Octonion a3_ = Octonion())
      : c1(std::move(c1_)),
        c2(std::move(c2_)),
        c3(std::move(c3_)),
        a1(std::move(a1_)),
        a2(std::move(a2_)),
        a3(std::move(a3_)) {}

  static JordanElement diag(Rat x, Rat y, Rat z) {
    return JordanElement(std::move(x), std::move(y), std::move(z));
  }
  static JordanElement e11() { return diag(Rat(1), Rat(0), Rat(0)); }
  static JordanElement e22() { return diag(Rat(0), Rat(1), Rat(0)); }
  static JordanElement e33() { return diag(Rat(0), Rat(0), Rat(1)); }
  static JordanElement identity() { return diag(Rat(1), Rat(1), Rat(1)); }
  static JordanElement basis(int i) {
    std::vector<Rat> v(27);
    v[i] = 1;
    return from_row(v);
  }

  // Y(x, y, z): zero diagonal, a3 = x, a1 = y, a2 = z*.
  static JordanElement off_diagonal(const Octonion& x, const Octonion& y,
                                    const Octonion& z) {
    return JordanElement(Rat(0), Rat(0), Rat(0), y, conj(z), x);
  }

  static JordanElement from_row(const std::vector<Rat>& v) {
    JordanElement x;
    x.c1 = v[0];
    x.c2 = v[1];
    x.c3 = v[2];
    for (int i = 0; i < 8; ++i) {
      x.a1.c[i] = v[3 + i];
      x.a2.c[i] = v[11 + i];
      x.a3.c[i] = v[19 + i];
    }
    return x;
  }
  std::vector<Rat> to_row() const {
    std::vector<Rat> v(27);
    v[0] = c1;
    v[1] = c2;
    v[2] = c3;
    for (int i = 0; i < 8; ++i) {
      v[3 + i] = a1.c[i];
      v[11 + i] = a2.c[i];
      v[19 + i] = a3.c[i];
    }
    return v;
  }

  bool operator==(const JordanElement& o) const {
    return c1 == o.c1 && c2 == o.c2 && c3 == o.c3 && a1 == o.a1 && a2 == o.a2 &&
           a3 == o.a3;
  }
  bool operator!=(const JordanElement& o) const { return !(*this == o); }

  JordanElement operator+(const JordanElement& o) const {
    return JordanElement(c1 + o.c1, c2 + o.c2, c3 + o.c3, a1 + o.a1, a2 + o.a2,
                         a3 + o.a3);
  }
  JordanElement operator-(const JordanElement& o) const {
    return JordanElement(c1 - o.c1, c2 - o.c2, c3 - o.c3, a1 - o.a1, a2 - o.a2,
                         a3 - o.a3);
  }
  JordanElement scaled(const Rat& s) const {
    return JordanElement(c1 * s, c2 * s, c3 * s, a1.scaled(s), a2.scaled(s),
                         a3.scaled(s));
  }
  bool is_zero() const { return *this == JordanElement(); }
};

inline std::ostream& operator<<(std::ostream& os, const JordanElement& x) {
  auto v = x.to_row();
  os << "(";
  for (int i = 0; i < 27; ++i) os << rat_to_string(v[i]) << (i < 26 ? "," : ")");
  return os;
}

// n(X) = c1 c2 c3 - c1 n(a1) - c2 n(a2) - c3 n(a3) + tr(a1 a2 a3).
inline Rat jnorm(const JordanElement& x) {
  return x.c1 * x.c2 * x.c3 - x.c1 * onorm(x.a1) - x.c2 * onorm(x.a2) -
         x.c3 * onorm(x.a3) + otrace(zorn_mul(x.a1, zorn_mul(x.a2, x.a3)));
}

// Coordinate pairing (X, X') = sum c_i c_i' + sum (a_i, a_i'); identifies
// the dual of J with J itself.
inline Rat jpairing(const JordanElement& x, const JordanElement& y) {
  return x.c1 * y.c1 + x.c2 * y.c2 + x.c3 * y.c3 + bilinear(x.a1, y.a1) +
         bilinear(x.a2, y.a2) + bilinear(x.a3, y.a3);
}

// Quadratic adjoint in coordinates.
inline JordanElement adjoint(const JordanElement& x) {
  JordanElement r;
  r.c1 = x.c2 * x.c3 - onorm(x.a1);
  r.c2 = x.c3 * x.c1 - onorm(x.a2);
  r.c3 = x.c1 * x.c2 - onorm(x.a3);
  r.a1 = zorn_mul(conj(x.a3), conj(x.a2)) - x.a1.scaled(x.c1);
  r.a2 = zorn_mul(conj(x.a1), conj(x.a3)) - x.a2.scaled(x.c2);
  r.a3 = zorn_mul(conj(x.a2), conj(x.a1)) - x.a3.scaled(x.c3);
  return r;
}

// X x Y = (X+Y)^# - X^# - Y^#, valued in J via the pairing identification.
inline JordanElement cross(const JordanElement& x, const JordanElement& y) {
  return adjoint(x + y) - adjoint(x) - adjoint(y);
}

// Full polarization of the norm, normalized by (X, X, X) = 6 n(X).
inline Rat trilinear(const JordanElement& x, const JordanElement& y,
                     const JordanElement& z) {
  return jpairing(cross(x, y), z);
}

// ---------------------------------------------------------------------------
// Subspaces of J, coordinate flags and singularity.
// ---------------------------------------------------------------------------
using JSubspace = Subspace;

inline JSubspace jordan_span(const std::vector<JordanElement>& xs) {
  Mat m(int(xs.size()), 27);
  for (size_t i = 0; i < xs.size(); ++i) m.set_row(int(i), xs[i].to_row());
  return JSubspace(m);
}

struct SingularityWitness {
  bool totally_singular = true;
  JordanElement first, second;  // cross(first, second) != 0 when not singular
};

// V is totally singular iff cross vanishes on all basis pairs (including
// the diagonal, which carries the adjoint).
inline SingularityWitness is_totally_singular(const JSubspace& v) {
  SingularityWitness w;
  for (int i = 0; i < v.dim(); ++i) {
    JordanElement bi = JordanElement::from_row(v.basis().row(i));
    for (int j = i; j < v.dim(); ++j) {
      JordanElement bj = JordanElement::from_row(v.basis().row(j));
      if (!cross(bi, bj).is_zero()) {
        w.totally_singular = false;
        w.first = bi;
        w.second = bj;
        return w;
      }
    }
  }
  return w;
}

// Coordinate labels for the index sets {c1, c2, c3, a1, a2, a3}.
enum class JIndex { c1, c2, c3, a1, a2, a3 };

inline std::vector<int> coordinate_positions(const std::vector<JIndex>& idx) {
  std::vector<int> out;
  for (JIndex i : idx) {
    switch (i) {
      case JIndex::c1: out.push_back(0); break;
      case JIndex::c2: out.push_back(1); break;
      case JIndex::c3: out.push_back(2); break;
      case JIndex::a1: for (int k = 3; k < 11; ++k) out.push_back(k); break;
      case JIndex::a2: for (int k = 11; k < 19; ++k) out.push_back(k); break;
      case JIndex::a3: for (int k = 19; k < 27; ++k) out.push_back(k); break;
    }
  }
  return out;
}

// J(I): elements supported on the coordinates labelled by I.
inline JSubspace coordinate_space(const std::vector<JIndex>& idx) {
  auto pos = coordinate_positions(idx);
  Mat m(int(pos.size()), 27);
  for (size_t i = 0; i < pos.size(); ++i) m.at(int(i), pos[i]) = 1;
  return JSubspace(m);
}

// V(I) = V intersect J(I).
inline JSubspace component(const JSubspace& v, const std::vector<JIndex>& idx) {
  return intersect(v, coordinate_space(idx));
}

// The two increasing coordinate flags fixed by the D4 parabolic:
//   F1: c3, a1, a2, c2, a3, c1      F2: c3, a1, c2, a2, a3, c1.
inline const std::array<std::vector<JIndex>, 6>& flag1_steps() {
  static const std::array<std::vector<JIndex>, 6> f = {{
      {JIndex::c3},
      {JIndex::c3, JIndex::a1},
      {JIndex::c3, JIndex::a1, JIndex::a2},
      {JIndex::c3, JIndex::a1, JIndex::a2, JIndex::c2},
      {JIndex::c3, JIndex::a1, JIndex::a2, JIndex::c2, JIndex::a3},
      {JIndex::c3, JIndex::a1, JIndex::a2, JIndex::c2, JIndex::a3, JIndex::c1},
  }};
  return f;
}
inline const std::array<std::vector<JIndex>, 6>& flag2_steps() {
  static const std::array<std::vector<JIndex>, 6> f = {{
      {JIndex::c3},
      {JIndex::c3, JIndex::a1},
      {JIndex::c3, JIndex::a1, JIndex::c2},
      {JIndex::c3, JIndex::a1, JIndex::c2, JIndex::a2},
      {JIndex::c3, JIndex::a1, JIndex::c2, JIndex::a2, JIndex::a3},
      {JIndex::c3, JIndex::a1, JIndex::c2, JIndex::a2, JIndex::a3, JIndex::c1},
  }};
  return f;
}

using Profile = std::array<int, 6>;

// Successive jumps dim F_i(V) - dim F_{i-1}(V) along both flags.
inline std::pair<Profile, Profile> filtration_profile(const JSubspace& v) {
  auto jumps = [&](const std::array<std::vector<JIndex>, 6>& steps) {
    Profile p{};
    int prev = 0;
    for (int i = 0; i < 6; ++i) {
      int d = intersect(v, coordinate_space(steps[i])).dim();
      p[i] = d - prev;
      prev = d;
    }
    return p;
  };
  return {jumps(flag1_steps()), jumps(flag2_steps())};
}

// V(Omega) for a two-space Omega: Omega placed in each off-diagonal slot.
inline JSubspace v_of_two_space(const ThetaSubspace& omega) {
  std::vector<JordanElement> rows;
  for (int slot = 1; slot <= 3; ++slot)
    for (int b = 0; b < omega.dim(); ++b) {
      Octonion o = Octonion::from_row(omega.basis().row(b));
      JordanElement x;
      (slot == 1 ? x.a1 : slot == 2 ? x.a2 : x.a3) = o;
      rows.push_back(x);
    }
  return jordan_span(rows);
}

// ---------------------------------------------------------------------------
// Cayley-Dickson decomposition J = H3(D) + M_{2x6}(F) along Theta = D + D.
// ---------------------------------------------------------------------------
struct H3DElement {
  Rat c1, c2, c3;
  std::array<detail::Quat, 3> p;  // quaternion entries p1, p2, p3

  bool is_zero() const {
    if (c1 != 0 || c2 != 0 || c3 != 0) return false;
    for (const auto& q : p)
      for (const auto& e : q)
        if (e != 0) return false;
    return true;
  }
};

// n on H3(D): same cubic formula with the quaternion norm and trace.
inline Rat h3d_norm(const H3DElement& x) {
  using namespace detail;
  return x.c1 * x.c2 * x.c3 - x.c1 * qnorm(x.p[0]) - x.c2 * qnorm(x.p[1]) -
         x.c3 * qnorm(x.p[2]) + qtrace(qmul(x.p[0], qmul(x.p[1], x.p[2])));
}

struct CDDecomposition {
  H3DElement h;  // H3(D) part
  Mat v;         // 2x6 matrix part, columns blocked as (q1 | q2 | q3)
};

inline CDDecomposition cd_decompose(const JordanElement& x) {
  CDDecomposition out;
  out.h.c1 = x.c1;
  out.h.c2 = x.c2;
  out.h.c3 = x.c3;
  out.v = Mat(2, 6);
  const Octonion* as[3] = {&x.a1, &x.a2, &x.a3};
  for (int i = 0; i < 3; ++i) {
    CDOctonion u = zorn_to_cd(*as[i]);
    out.h.p[i] = {u.c[0], u.c[1], u.c[2], u.c[3]};
    out.v.at(0, 2 * i) = u.c[4];
    out.v.at(0, 2 * i + 1) = u.c[5];
    out.v.at(1, 2 * i) = u.c[6];
    out.v.at(1, 2 * i + 1) = u.c[7];
  }
  return out;
}

inline JordanElement cd_compose(const CDDecomposition& d) {
  JordanElement x;
  x.c1 = d.h.c1;
  x.c2 = d.h.c2;
  x.c3 = d.h.c3;
  Octonion* as[3] = {&x.a1, &x.a2, &x.a3};
  for (int i = 0; i < 3; ++i) {
    CDOctonion u;
    u.c = {d.h.p[i][0], d.h.p[i][1], d.h.p[i][2], d.h.p[i][3],
           d.v.at(0, 2 * i), d.v.at(0, 2 * i + 1), d.v.at(1, 2 * i),
           d.v.at(1, 2 * i + 1)};
    *as[i] = cd_to_zorn(u);
  }
  return x;
}

// v X v* as an element of D; its off-diagonal part vanishes and the scalar
// is the second norm contribution.
inline detail::Quat cd_sandwich(const CDDecomposition& d) {
  using namespace detail;
  Quat qs[3] = {{d.v.at(0, 0), d.v.at(0, 1), d.v.at(1, 0), d.v.at(1, 1)},
                {d.v.at(0, 2), d.v.at(0, 3), d.v.at(1, 2), d.v.at(1, 3)},
                {d.v.at(0, 4), d.v.at(0, 5), d.v.at(1, 4), d.v.at(1, 5)}};
  auto scal = [](const Rat& s) { return Quat{s, Rat(0), Rat(0), s}; };
  Quat X[3][3] = {{scal(d.h.c1), d.h.p[2], qconj(d.h.p[1])},
                  {qconj(d.h.p[2]), scal(d.h.c2), d.h.p[0]},
                  {d.h.p[1], qconj(d.h.p[0]), scal(d.h.c3)}};
  Quat res{};
  for (int j = 0; j < 3; ++j) {
    Quat w{};
    for (int i = 0; i < 3; ++i) {
      Quat t = qmul(qs[i], X[i][j]);
      for (int k = 0; k < 4; ++k) w[k] += t[k];
    }
    Quat t = qmul(w, qconj(qs[j]));
    for (int k = 0; k < 4; ++k) res[k] += t[k];
  }
  return res;
}

// Certifies n(x) = n(X) + v X v* for the decomposition of x; the sandwich
// term must come out scalar.
inline bool cd_norm_check(const JordanElement& x) {
  CDDecomposition d = cd_decompose(x);
  auto s = cd_sandwich(d);
  if (s[1] != 0 || s[2] != 0 || s[0] != s[3]) return false;
  return jnorm(x) == h3d_norm(d.h) + s[0];
}

}  // namespace exj

#endif
