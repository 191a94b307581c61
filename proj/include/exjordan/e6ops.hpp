#ifndef EXJORDAN_E6OPS_HPP
#define EXJORDAN_E6OPS_HPP

#include <optional>
#include <string>
#include <vector>

#include "exjordan/jordan.hpp"

namespace exj {

// Linear operators on J are 27x27 matrices acting on the right of row
// vectors; composition order matches matrix-product order.
using JordanOperator = Mat;

inline JordanElement act(const JordanElement& x, const JordanOperator& g) {
  return JordanElement::from_row(apply_row(x.to_row(), g));
}

inline JordanOperator operator_from_images(
    const std::vector<JordanElement>& basis_images) {
  Mat m(27, 27);
  for (int i = 0; i < 27; ++i) m.set_row(i, basis_images[i].to_row());
  return m;
}

// Gram matrix of the coordinate pairing.
inline const Mat& jpairing_gram() {
  static const Mat s = [] {
    Mat m(27, 27);
    for (int i = 0; i < 27; ++i)
      for (int j = 0; j < 27; ++j)
        m.at(i, j) = jpairing(JordanElement::basis(i), JordanElement::basis(j));
    return m;
  }();
  return s;
}

inline Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: square only");
  int n = m.rows();
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  auto rr = rref(aug);
  if (int(rr.pivots.size()) != n || rr.pivots.back() != n - 1)
    throw std::invalid_argument("inverse: singular matrix");
  Mat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = rr.reduced.at(i, n + j);
  return out;
}

// ---------------------------------------------------------------------------
// E6 / F4 membership.
// ---------------------------------------------------------------------------
struct E6Witness {
  bool in_e6 = true;
  int i = -1, j = -1, k = -1;  // failing basis triple when not a member
};

// g preserves the trilinear form iff (e_i g, e_j g, e_k g) = (e_i, e_j, e_k)
// for all i <= j <= k; symmetry covers the rest.
inline E6Witness is_in_e6(const JordanOperator& g) {
  static const std::vector<std::vector<std::pair<int, Rat>>> basis_tensor = [] {
    // sparse rows: T[j][k] as pairing vector against e_i
    std::vector<std::vector<std::pair<int, Rat>>> t(27 * 27);
    for (int j = 0; j < 27; ++j)
      for (int k = j; k < 27; ++k) {
        JordanElement cr = cross(JordanElement::basis(j), JordanElement::basis(k));
        auto row = cr.to_row();
        auto paired = apply_row(row, jpairing_gram());
        for (int i = 0; i < 27; ++i)
          if (paired[i] != 0) t[j * 27 + k].emplace_back(i, paired[i]);
      }
    return t;
  }();
  std::vector<JordanElement> img(27);
  for (int i = 0; i < 27; ++i) img[i] = JordanElement::from_row(g.row(i));
  std::vector<std::vector<Rat>> paired_cross(27 * 27);
  E6Witness w;
  for (int j = 0; j < 27; ++j)
    for (int k = j; k < 27; ++k) {
      JordanElement cr = cross(img[j], img[k]);
      paired_cross[j * 27 + k] = apply_row(cr.to_row(), jpairing_gram());
    }
  for (int i = 0; i < 27; ++i)
    for (int j = i; j < 27; ++j)
      for (int k = j; k < 27; ++k) {
        Rat expected = 0;
        for (const auto& [a, v] : basis_tensor[j * 27 + k])
          if (a == i) {
            expected = v;
            break;
          }
        Rat actual = 0;
        const auto& pc = paired_cross[j * 27 + k];
        for (int t = 0; t < 27; ++t)
          if (g.at(i, t) != 0 && pc[t] != 0) actual += g.at(i, t) * pc[t];
        if (actual != expected) {
          w.in_e6 = false;
          w.i = i;
          w.j = j;
          w.k = k;
          return w;
        }
      }
  return w;
}

// Pairing adjoint: (X g, Y) = (X, Y g~), i.e. g~ = S g^T S^{-1}.
inline JordanOperator tilde(const JordanOperator& g) {
  const Mat& s = jpairing_gram();
  static const Mat sinv = inverse(jpairing_gram());
  return s * g.transpose() * sinv;
}

// F4 = elements of E6 that also fix the pairing: g~ = g^{-1}.
inline bool is_in_f4(const JordanOperator& g) {
  if (rank(g) != 27) throw std::invalid_argument("is_in_f4: singular operator");
  if (!is_in_e6(g).in_e6) return false;
  return tilde(g) * g == Mat::identity(27);
}

// ---------------------------------------------------------------------------
// The nilpotent operators Phi_{gamma,v} and exponentials.
// ---------------------------------------------------------------------------

// Phi_{gamma,v}(z) = -gamma x (v x z) + (gamma, z) v + (gamma, v) z.
inline JordanOperator phi(const JordanElement& gamma, const JordanElement& v) {
  Rat gv = jpairing(gamma, v);
  std::vector<JordanElement> img(27);
  for (int i = 0; i < 27; ++i) {
    JordanElement z = JordanElement::basis(i);
    img[i] = cross(gamma, cross(v, z)).scaled(Rat(-1)) + v.scaled(jpairing(gamma, z)) +
             z.scaled(gv);
  }
  return operator_from_images(img);
}

// Phi' = Phi - (2/3)(gamma, v) id, the traceless member of Lie(E6).
inline JordanOperator phi_prime(const JordanElement& gamma, const JordanElement& v) {
  JordanOperator m = phi(gamma, v);
  Rat shift = Rat(2) / 3 * jpairing(gamma, v);
  for (int i = 0; i < 27; ++i) m.at(i, i) -= shift;
  return m;
}

struct NotNilpotentError : std::runtime_error {
  int failing_power;
  explicit NotNilpotentError(int k)
      : std::runtime_error("exp_nilpotent: operator power " + std::to_string(k) +
                           " of the input is nonzero"),
        failing_power(k) {}
};

// Exact truncated exponential. A nilpotent operator on a 27-dimensional
// space vanishes by the 27th power, so a nonzero f^27 certifies the input
// as non-nilpotent and names the smallest failing power test.
inline JordanOperator exp_nilpotent(const JordanOperator& f) {
  JordanOperator out = Mat::identity(27);
  JordanOperator term = Mat::identity(27);
  Rat fact = 1;
  for (int k = 1; k <= 27; ++k) {
    term = term * f;
    if (term.is_zero()) return out;
    fact *= k;
    out = out + term.scaled(1 / fact);
  }
  throw NotNilpotentError(27);
}

// ---------------------------------------------------------------------------
// The Heisenberg group N(Theta) and its right action on J.
// ---------------------------------------------------------------------------
struct HeisenbergElement {
  Octonion x, y, z;

  HeisenbergElement() = default;
  HeisenbergElement(Octonion x_, Octonion y_, Octonion z_)
      : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  bool operator==(const HeisenbergElement& o) const {
    return x == o.x && y == o.y && z == o.z;
  }
  bool is_identity() const { return x.is_zero() && y.is_zero() && z.is_zero(); }
};

// (x,y;z)(x',y';z') = (x+x', y+y'; z+z'+xy').
inline HeisenbergElement heis_mul(const HeisenbergElement& u, const HeisenbergElement& w) {
  return HeisenbergElement(u.x + w.x, u.y + w.y, u.z + w.z + zorn_mul(u.x, w.y));
}

// (x,y;z)^{-1} = (-x,-y; xy-z).
inline HeisenbergElement heis_inv(const HeisenbergElement& u) {
  return HeisenbergElement(-u.x, -u.y, zorn_mul(u.x, u.y) - u.z);
}

// Coordinate transformation of the right action of (x,y;z):
//   c1 -> c1
//   c2 -> c2 + (x,a3) + c1 n(x)
//   c3 -> c3 + (a1,y) + c2 n(y) + (a2*,z) + c1 n(z) + tr(z*(a3 y))
//   a1 -> a1 + c2 y + a3* z + x* a2* + x*(a3 y) + c1 x* z
//   a2 -> a2 + y* a3* + c1 z*
//   a3 -> a3 + c1 x
inline JordanElement heis_apply(const JordanElement& X, const HeisenbergElement& u) {
  const Octonion &x = u.x, &y = u.y, &z = u.z;
  JordanElement r;
  r.c1 = X.c1;
  r.c2 = X.c2 + bilinear(x, X.a3) + X.c1 * onorm(x);
  r.c3 = X.c3 + bilinear(X.a1, y) + X.c2 * onorm(y) + bilinear(conj(X.a2), z) +
         X.c1 * onorm(z) + otrace(zorn_mul(conj(z), zorn_mul(X.a3, y)));
  r.a1 = X.a1 + y.scaled(X.c2) + zorn_mul(conj(X.a3), z) +
         zorn_mul(conj(x), conj(X.a2)) + zorn_mul(conj(x), zorn_mul(X.a3, y)) +
         zorn_mul(conj(x), z).scaled(X.c1);
  r.a2 = X.a2 + zorn_mul(conj(y), conj(X.a3)) + conj(z).scaled(X.c1);
  r.a3 = X.a3 + x.scaled(X.c1);
  return r;
}

inline JordanOperator heis_operator(const HeisenbergElement& u) {
  std::vector<JordanElement> img(27);
  for (int i = 0; i < 27; ++i) img[i] = heis_apply(JordanElement::basis(i), u);
  return operator_from_images(img);
}

// Inverse of the operator map on its image: the parameters are linear
// read-offs from the images of e11 and e22.
inline HeisenbergElement heis_parameters(const JordanOperator& m) {
  JordanElement i1 = act(JordanElement::e11(), m);
  JordanElement i2 = act(JordanElement::e22(), m);
  return HeisenbergElement(i1.a3, i2.a1, conj(i1.a2));
}

// Functional whose composition with an additive character defines the
// period character: (x,y;z) -> tr(x) + tr(y).
inline Rat xi_functional(const HeisenbergElement& u) { return otrace(u.x) + otrace(u.y); }

// ---------------------------------------------------------------------------
// G2 and Levi embeddings into GL(J).
// ---------------------------------------------------------------------------

// Checks that an 8x8 right-action matrix is an octonion algebra
// automorphism: fixes 1 and is multiplicative on all basis pairs.
struct AutomorphismWitness {
  bool ok = true;
  int i = -1, j = -1;
};
inline AutomorphismWitness check_automorphism(const Mat& a) {
  AutomorphismWitness w;
  if (Octonion::from_row(apply_row(Octonion::one().to_row(), a)) != Octonion::one()) {
    w.ok = false;
    return w;
  }
  std::vector<Octonion> img(8);
  for (int i = 0; i < 8; ++i)
    img[i] = Octonion::from_row(apply_row(Octonion::basis(i).to_row(), a));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      Octonion lhs =
          Octonion::from_row(apply_row(zorn_mul(Octonion::basis(i), Octonion::basis(j)).to_row(), a));
      if (lhs != zorn_mul(img[i], img[j])) {
        w.ok = false;
        w.i = i;
        w.j = j;
        return w;
      }
    }
  return w;
}

// Diagonal extension of an octonion automorphism to J: trivial on the
// diagonal coordinates, the same 8x8 block on each off-diagonal slot.
inline JordanOperator g2_embed(const Mat& g8) {
  auto w = check_automorphism(g8);
  if (!w.ok)
    throw std::invalid_argument("g2_embed: input is not an octonion automorphism (basis pair " +
                                std::to_string(w.i) + "," + std::to_string(w.j) + ")");
  Mat m(27, 27);
  for (int t = 0; t < 3; ++t) m.at(t, t) = 1;
  for (int blk = 0; blk < 3; ++blk)
    for (int u = 0; u < 8; ++u)
      for (int v = 0; v < 8; ++v) m.at(3 + 8 * blk + u, 3 + 8 * blk + v) = g8.at(u, v);
  return m;
}

// Same extension for a derivation (Lie algebra level): zero on the diagonal
// coordinates.
inline JordanOperator g2_embed_derivation(const Mat& d8) {
  Mat m(27, 27);
  for (int blk = 0; blk < 3; ++blk)
    for (int u = 0; u < 8; ++u)
      for (int v = 0; v < 8; ++v) m.at(3 + 8 * blk + u, 3 + 8 * blk + v) = d8.at(u, v);
  return m;
}

// ---------------------------------------------------------------------------
// Structured group elements.
// ---------------------------------------------------------------------------

// SL3 acting component-wise on the Zorn model: as g on V3, by the dual
// action on the covectors, trivially on the scalars.
inline Mat sl3_action(const Mat& g) {
  if (g.rows() != 3 || g.cols() != 3 || det(g) != 1)
    throw std::invalid_argument("sl3_action: need a 3x3 matrix of determinant 1");
  Mat gi = inverse(g);
  Mat a(8, 8);
  a.at(0, 0) = 1;
  a.at(7, 7) = 1;
  for (int r = 0; r < 3; ++r)
    for (int j = 0; j < 3; ++j) {
      a.at(1 + j, 1 + r) = g.at(r, j);    // e_j -> sum_r g[r][j] e_r
      a.at(4 + j, 4 + r) = gi.at(j, r);   // e_j* -> e_j* o g^{-1}
    }
  return a;
}

// The GL2 Levi of the two-space parabolic, in the Cayley-Dickson model:
//   g.(x, y) = (g x g^{-1}, diag(det g, 1) y g^{-1}).
// Returned as the right-action matrix on CD coordinates, or conjugated into
// the Zorn model.
inline Mat gl2_levi_action(const Mat& g, bool zorn_model = true) {
  using namespace detail;
  if (g.rows() != 2 || g.cols() != 2)
    throw std::invalid_argument("gl2_levi_action: need a 2x2 matrix");
  Rat dg = det(g);
  if (dg == 0) throw std::invalid_argument("gl2_levi_action: singular matrix");
  Quat gq = {g.at(0, 0), g.at(0, 1), g.at(1, 0), g.at(1, 1)};
  Quat gqi = {g.at(1, 1) / dg, -g.at(0, 1) / dg, -g.at(1, 0) / dg, g.at(0, 0) / dg};
  Mat a(8, 8);
  for (int i = 0; i < 8; ++i) {
    Quat x = {Rat(0), Rat(0), Rat(0), Rat(0)}, y = x;
    (i < 4 ? x : y)[i % 4] = 1;
    Quat rx = qmul(gq, qmul(x, gqi));
    Quat dy = {dg * y[0], dg * y[1], y[2], y[3]};
    Quat ry = qmul(dy, gqi);
    for (int k = 0; k < 4; ++k) {
      a.at(i, k) = rx[k];
      a.at(i, 4 + k) = ry[k];
    }
  }
  if (!zorn_model) return a;
  return zorn_cd_matrix() * a * cd_zorn_matrix();
}

// The Levi of the singular-six-space parabolic: (lambda, g) with
// lambda^3 = det(g) acting by
//   (X, v) -> (lambda^{-1} g* X g, diag(1, lambda) v (*g)^{-1})
// in the Cayley-Dickson decomposition. Returns the 27x27 operator.
inline Mat star_m3d(const Mat& m6) {
  // transpose-conjugate of a 3x3 quaternion matrix in its 6x6 realization
  using namespace detail;
  Mat out(6, 6);
  for (int bi = 0; bi < 3; ++bi)
    for (int bj = 0; bj < 3; ++bj) {
      Quat blk = {m6.at(2 * bi, 2 * bj), m6.at(2 * bi, 2 * bj + 1),
                  m6.at(2 * bi + 1, 2 * bj), m6.at(2 * bi + 1, 2 * bj + 1)};
      Quat cb = qconj(blk);
      out.at(2 * bj, 2 * bi) = cb[0];
      out.at(2 * bj, 2 * bi + 1) = cb[1];
      out.at(2 * bj + 1, 2 * bi) = cb[2];
      out.at(2 * bj + 1, 2 * bi + 1) = cb[3];
    }
  return out;
}

inline JordanOperator m_levi_action(const Rat& lambda, const Mat& g6) {
  if (g6.rows() != 6 || g6.cols() != 6)
    throw std::invalid_argument("m_levi_action: need a 6x6 matrix");
  if (lambda * lambda * lambda != det(g6))
    throw std::invalid_argument("m_levi_action: lambda^3 != det(g)");
  Mat gs = star_m3d(g6);
  Mat gs_inv = inverse(gs);
  Rat li = 1 / lambda;
  std::vector<JordanElement> img(27);
  for (int i = 0; i < 27; ++i) {
    CDDecomposition d = cd_decompose(JordanElement::basis(i));
    // X part: lambda^{-1} g* X g on the 6x6 realization
    Mat X(6, 6);
    using namespace detail;
    auto scal = [](const Rat& s) { return Quat{s, Rat(0), Rat(0), s}; };
    Quat blocks[3][3] = {{scal(d.h.c1), d.h.p[2], qconj(d.h.p[1])},
                         {qconj(d.h.p[2]), scal(d.h.c2), d.h.p[0]},
                         {d.h.p[1], qconj(d.h.p[0]), scal(d.h.c3)}};
    for (int bi = 0; bi < 3; ++bi)
      for (int bj = 0; bj < 3; ++bj) {
        X.at(2 * bi, 2 * bj) = blocks[bi][bj][0];
        X.at(2 * bi, 2 * bj + 1) = blocks[bi][bj][1];
        X.at(2 * bi + 1, 2 * bj) = blocks[bi][bj][2];
        X.at(2 * bi + 1, 2 * bj + 1) = blocks[bi][bj][3];
      }
    Mat Xp = (gs * X * g6).scaled(li);
    // v part: diag(1, lambda) v (*g)^{-1}
    Mat vp = d.v;
    for (int j = 0; j < 6; ++j) vp.at(1, j) = vp.at(1, j) * lambda;
    vp = vp * gs_inv;
    CDDecomposition nd;
    nd.h.c1 = Xp.at(0, 0);
    nd.h.c2 = Xp.at(2, 2);
    nd.h.c3 = Xp.at(4, 4);
    nd.h.p[0] = {Xp.at(2, 4), Xp.at(2, 5), Xp.at(3, 4), Xp.at(3, 5)};
    nd.h.p[1] = {Xp.at(4, 0), Xp.at(4, 1), Xp.at(5, 0), Xp.at(5, 1)};
    nd.h.p[2] = {Xp.at(0, 2), Xp.at(0, 3), Xp.at(1, 2), Xp.at(1, 3)};
    nd.v = vp;
    img[i] = cd_compose(nd);
  }
  return operator_from_images(img);
}

}  // namespace exj

#endif
