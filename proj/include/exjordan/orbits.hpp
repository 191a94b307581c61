#ifndef EXJORDAN_ORBITS_HPP
#define EXJORDAN_ORBITS_HPP

#include <array>
#include <string>
#include <vector>

#include "exjordan/liealg.hpp"

namespace exj {

// Stabilizer kind of the G2 part of each orbit stabilizer, recorded as
// metadata; the matching Lie algebra dimensions come out of the exact
// solves in liealg rather than a hand-written table.
enum class G2StabilizerKind {
  heisenberg_parabolic,  // P(Omega)
  line_parabolic,        // P(l)
  sl3,
  levi_times_u_prime,    // M(e3*) U(e3*)'
  gl1_u0,                // GL1 . U^0(e1, e3*)
  other,
};

inline std::string g2_stabilizer_kind_name(G2StabilizerKind k) {
  switch (k) {
    case G2StabilizerKind::heisenberg_parabolic: return "heisenberg-parabolic P(Omega)";
    case G2StabilizerKind::line_parabolic: return "line-parabolic P(l)";
    case G2StabilizerKind::sl3: return "SL3";
    case G2StabilizerKind::levi_times_u_prime: return "M(e3*)U(e3*)'";
    case G2StabilizerKind::gl1_u0: return "GL1.U0(e1,e3*)";
    case G2StabilizerKind::other: return "other";
  }
  return "?";
}

enum class OrbitFamily { two_two_two, right411, left411 };
enum class LineType { traceless, eps };  // F e3* or F eps1

struct OrbitShape {
  OrbitFamily family;
  int two_space_class = 0;  // 1..5 for the (2,2,2) family
  int line_slot = 0;        // 1..3: which a-slot carries the line
  LineType line = LineType::traceless;

  std::string name() const {
    if (family == OrbitFamily::two_two_two)
      return "(2,2,2)-class-" + std::to_string(two_space_class);
    std::string side = family == OrbitFamily::right411 ? "right" : "left";
    std::string lt = line == LineType::traceless ? "traceless-line" : "eps1-line";
    return side + "-(4,1,1)-a" + std::to_string(line_slot) + "-" + lt;
  }
};

struct OrbitDescriptor {
  int id = 0;  // 1..17
  OrbitShape shape;
  JSubspace rep;
  Profile profile1{}, profile2{};
  G2StabilizerKind g2_stabilizer_kind = G2StabilizerKind::other;
  int isotropic_class = 0;  // class of the defining line or two-space

  // component subspaces of the representative inside Theta
  ThetaSubspace v_a1, v_a2, v_a3;
  bool has_c1 = false, has_c2 = false, has_c3 = false;
};

// The two concrete isotropic lines: a traceless one and F.eps1.
inline ThetaSubspace orbit_line(LineType t) {
  return theta_span({t == LineType::traceless ? Octonion::estar(3) : Octonion::eps1()});
}

// The five two-space orbit witnesses, built from the vector v = e2 and the
// covector phi = e3* (phi(v) = 0):
//   1: span{phi, v}   2: span{e1, e2}   3: span{eps1, v}
//   4: span{eps1, phi}   5: span{eps1, v + phi}.
// The class-1 choice makes the closed orbit literally V(Omega) for the
// Cayley-Dickson two-space Omega used by the Levi computations below.
inline ThetaSubspace two_space_witness(int cls) {
  Octonion v = Octonion::e(2), phi = Octonion::estar(3);
  switch (cls) {
    case 1: return theta_span({phi, v});
    case 2: return theta_span({Octonion::e(1), Octonion::e(2)});
    case 3: return theta_span({Octonion::eps1(), v});
    case 4: return theta_span({Octonion::eps1(), phi});
    case 5: return theta_span({Octonion::eps1(), v + phi});
  }
  throw std::invalid_argument("two_space_witness: class must be 1..5");
}

// The Cayley-Dickson model two-space (0, upper-row) in Zorn coordinates and
// its complement pieces.
inline ThetaSubspace omega_cd() {
  return theta_span({cd_to_zorn(CDOctonion::basis(4)), cd_to_zorn(CDOctonion::basis(5))});
}
inline ThetaSubspace omega_bar_cd() {
  return theta_span({cd_to_zorn(CDOctonion::basis(6)), cd_to_zorn(CDOctonion::basis(7))});
}

namespace detail {

inline JSubspace assemble(const std::vector<std::pair<int, ThetaSubspace>>& slots,
                          const std::vector<int>& c_slots) {
  std::vector<JordanElement> rows;
  for (int c : c_slots) rows.push_back(JordanElement::basis(c - 1));
  for (const auto& [slot, sp] : slots)
    for (int b = 0; b < sp.dim(); ++b) {
      JordanElement x;
      Octonion o = Octonion::from_row(sp.basis().row(b));
      (slot == 1 ? x.a1 : slot == 2 ? x.a2 : x.a3) = o;
      rows.push_back(x);
    }
  return jordan_span(rows);
}

}  // namespace detail

// All seventeen orbit representatives:
//   ids 1..5    (2,2,2) with the five two-space classes,
//   ids 6..11   right (4,1,1), line slot a1, a2, a3 x {traceless, eps1},
//   ids 12..17  left (4,1,1) likewise.
inline std::vector<OrbitDescriptor> orbit_catalog() {
  std::vector<OrbitDescriptor> out;
  for (int cls = 1; cls <= 5; ++cls) {
    OrbitDescriptor d;
    d.id = cls;
    d.shape = {OrbitFamily::two_two_two, cls, 0, LineType::traceless};
    ThetaSubspace v1 = two_space_witness(cls);
    auto [v2, v3] = complete_null_triple(v1);
    d.v_a1 = v1;
    d.v_a2 = v2;
    d.v_a3 = v3;
    d.rep = detail::assemble({{1, v1}, {2, v2}, {3, v3}}, {});
    d.isotropic_class = cls;
    switch (cls) {
      case 1: d.g2_stabilizer_kind = G2StabilizerKind::heisenberg_parabolic; break;
      case 2: d.g2_stabilizer_kind = G2StabilizerKind::levi_times_u_prime; break;
      case 5: d.g2_stabilizer_kind = G2StabilizerKind::gl1_u0; break;
      default: d.g2_stabilizer_kind = G2StabilizerKind::other; break;
    }
    out.push_back(std::move(d));
  }
  int id = 6;
  for (int fam = 0; fam < 2; ++fam) {
    OrbitFamily family = fam == 0 ? OrbitFamily::right411 : OrbitFamily::left411;
    Side side = fam == 0 ? Side::Right : Side::Left;
    for (int slot = 1; slot <= 3; ++slot) {
      for (LineType lt : {LineType::traceless, LineType::eps}) {
        OrbitDescriptor d;
        d.id = id++;
        d.shape = {family, 0, slot, lt};
        ThetaSubspace l = orbit_line(lt);
        ThetaSubspace a = annihilator(l, side);
        // The seven coordinate patterns: line slot determines the diagonal
        // coordinate and the annihilator slot.
        if (family == OrbitFamily::right411) {
          if (slot == 1) { d.has_c3 = true; d.v_a1 = l; d.v_a2 = a; }
          if (slot == 2) { d.has_c1 = true; d.v_a2 = l; d.v_a3 = a; }
          if (slot == 3) { d.has_c2 = true; d.v_a3 = l; d.v_a1 = a; }
        } else {
          if (slot == 1) { d.has_c2 = true; d.v_a1 = l; d.v_a3 = a; }
          if (slot == 2) { d.has_c3 = true; d.v_a2 = l; d.v_a1 = a; }
          if (slot == 3) { d.has_c1 = true; d.v_a3 = l; d.v_a2 = a; }
        }
        if (d.v_a1.ambient() == 0) d.v_a1 = ThetaSubspace::zero(8);
        if (d.v_a2.ambient() == 0) d.v_a2 = ThetaSubspace::zero(8);
        if (d.v_a3.ambient() == 0) d.v_a3 = ThetaSubspace::zero(8);
        std::vector<int> cs;
        if (d.has_c1) cs.push_back(1);
        if (d.has_c2) cs.push_back(2);
        if (d.has_c3) cs.push_back(3);
        std::vector<std::pair<int, ThetaSubspace>> slots;
        if (d.v_a1.dim()) slots.emplace_back(1, d.v_a1);
        if (d.v_a2.dim()) slots.emplace_back(2, d.v_a2);
        if (d.v_a3.dim()) slots.emplace_back(3, d.v_a3);
        d.rep = detail::assemble(slots, cs);
        d.isotropic_class = lt == LineType::traceless ? 1 : 2;
        d.g2_stabilizer_kind = lt == LineType::traceless ? G2StabilizerKind::line_parabolic
                                                         : G2StabilizerKind::sl3;
        out.push_back(std::move(d));
      }
    }
  }
  for (auto& d : out) {
    auto [p1, p2] = filtration_profile(d.rep);
    d.profile1 = p1;
    d.profile2 = p2;
  }
  return out;
}

inline const std::vector<OrbitDescriptor>& catalog() {
  static const std::vector<OrbitDescriptor> c = orbit_catalog();
  return c;
}

// ---------------------------------------------------------------------------
// Stabilizer predicates: the explicit membership and containment conditions
// per shape case, guaranteed (and tested) to agree with the direct action.
// ---------------------------------------------------------------------------
struct StabilizerAnswer {
  bool stabilizes = false;
  bool acts_trivially = false;
};

namespace detail {

inline bool in_perp(const Octonion& x, const ThetaSubspace& w) {
  for (int b = 0; b < w.dim(); ++b)
    if (bilinear(x, Octonion::from_row(w.basis().row(b))) != 0) return false;
  return true;
}
inline bool left_product_in(const ThetaSubspace& w, const Octonion& x,
                            const ThetaSubspace& target) {
  for (int b = 0; b < w.dim(); ++b)
    if (!target.contains(zorn_mul(Octonion::from_row(w.basis().row(b)), x).to_row()))
      return false;
  return true;
}
inline bool left_product_zero(const ThetaSubspace& w, const Octonion& x) {
  for (int b = 0; b < w.dim(); ++b)
    if (!zorn_mul(Octonion::from_row(w.basis().row(b)), x).is_zero()) return false;
  return true;
}
inline bool right_product_zero(const Octonion& x, const ThetaSubspace& w) {
  for (int b = 0; b < w.dim(); ++b)
    if (!zorn_mul(x, Octonion::from_row(w.basis().row(b))).is_zero()) return false;
  return true;
}

}  // namespace detail

inline StabilizerAnswer stabilizer_predicate(const OrbitDescriptor& d,
                                             const HeisenbergElement& u) {
  using namespace detail;
  StabilizerAnswer ans;
  const Octonion &x = u.x, &y = u.y, &z = u.z;
  Octonion zs = conj(z);
  if (d.shape.family == OrbitFamily::two_two_two) {
    // stabilizes iff x in V(a3)-perp, y in V(a1)-perp, z* in V(a2)-perp;
    // acts trivially iff x in V(a3), y in V(a1), z* in V(a2).
    ans.stabilizes = in_perp(x, d.v_a3) && in_perp(y, d.v_a1) && in_perp(zs, d.v_a2);
    ans.acts_trivially = d.v_a3.contains(x.to_row()) && d.v_a1.contains(y.to_row()) &&
                         d.v_a2.contains(zs.to_row());
    return ans;
  }
  if (d.has_c3) {
    // c1 = c2 = a3 = 0 case: stabilizes iff V(a2) x in V(a1)*;
    // trivial iff V(a2) x = 0, (V(a1), y) = 0, (V(a2), z*) = 0.
    ans.stabilizes = left_product_in(d.v_a2, x, conj_space(d.v_a1));
    ans.acts_trivially =
        left_product_zero(d.v_a2, x) && in_perp(y, d.v_a1) && in_perp(zs, d.v_a2);
    return ans;
  }
  if (d.has_c2) {
    // c1 = c3 = a2 = 0 case: stabilizes iff y in V(a1) and V(a3)* z in V(a1);
    // trivial iff x in V(a3)-perp, y = 0, z* V(a3) = 0.
    ans.stabilizes = d.v_a1.contains(y.to_row()) &&
                     left_product_in(conj_space(d.v_a3), z, d.v_a1);
    ans.acts_trivially =
        in_perp(x, d.v_a3) && y.is_zero() && right_product_zero(zs, d.v_a3);
    return ans;
  }
  // c2 = c3 = a1 = 0 case: stabilizes iff x in V(a3), z* in V(a2),
  // V(a3) y in V(a2)*; trivial iff z = x = 0 and V(a3) y = 0.
  ans.stabilizes = d.v_a3.contains(x.to_row()) && d.v_a2.contains(zs.to_row()) &&
                   left_product_in(d.v_a3, y, conj_space(d.v_a2));
  ans.acts_trivially = z.is_zero() && x.is_zero() && left_product_zero(d.v_a3, y);
  return ans;
}

// Direct comparison oracle: the action of heis_operator(u) on the subspace.
inline StabilizerAnswer stabilizer_direct(const OrbitDescriptor& d,
                                          const HeisenbergElement& u) {
  StabilizerAnswer ans;
  JordanOperator m = heis_operator(u);
  ans.stabilizes = d.rep.image(m) == d.rep;
  ans.acts_trivially = true;
  for (int b = 0; b < d.rep.dim(); ++b) {
    auto row = d.rep.basis().row(b);
    if (apply_row(row, m) != row) {
      ans.acts_trivially = false;
      break;
    }
  }
  return ans;
}

// The subgroup of N acting as the identity on the representative, as a
// subspace of the 24-dimensional (x, y, z) parameter space. Solved from the
// shape conditions and certified by the direct action on a basis.
inline Subspace trivially_acting_subgroup(const OrbitDescriptor& d) {
  // linear conditions per shape, expressed as a constraint matrix on the
  // 24 parameters (x: 0..7, y: 8..15, z: 16..23)
  std::vector<std::vector<Rat>> constraints;
  auto add_perp = [&](int off, const ThetaSubspace& w) {
    for (int b = 0; b < w.dim(); ++b) {
      std::vector<Rat> row(24);
      Octonion wb = Octonion::from_row(w.basis().row(b));
      for (int i = 0; i < 8; ++i) row[off + i] = bilinear(Octonion::basis(i), wb);
      constraints.push_back(std::move(row));
    }
  };
  auto add_membership = [&](int off, const ThetaSubspace& w, bool conj_var) {
    // variable (or its conjugate) lies in w: the residual of each basis
    // image is linear in the parameters, so its coordinate functionals are
    // constraint rows
    Mat rmat(8, 8);
    for (int i = 0; i < 8; ++i) {
      Octonion b = Octonion::basis(i);
      if (conj_var) b = conj(b);
      rmat.set_row(i, w.residual(b.to_row()));
    }
    for (int c = 0; c < 8; ++c) {
      std::vector<Rat> row(24);
      bool nonzero = false;
      for (int i = 0; i < 8; ++i) {
        row[off + i] = rmat.at(i, c);
        if (row[off + i] != 0) nonzero = true;
      }
      if (nonzero) constraints.push_back(std::move(row));
    }
  };
  auto add_zero = [&](int off, bool conj_var = false) {
    add_membership(off, ThetaSubspace::zero(8), conj_var);
  };
  auto add_left_product_zero = [&](int off, const ThetaSubspace& w) {
    // w * var = 0 for all w in the subspace
    for (int b = 0; b < w.dim(); ++b) {
      Mat mul = left_mul_matrix(Octonion::from_row(w.basis().row(b)));
      for (int c = 0; c < 8; ++c) {
        std::vector<Rat> row(24);
        bool nonzero = false;
        for (int i = 0; i < 8; ++i) {
          row[off + i] = mul.at(i, c);
          if (row[off + i] != 0) nonzero = true;
        }
        if (nonzero) constraints.push_back(std::move(row));
      }
    }
  };
  auto add_right_product_zero_conj = [&](int off, const ThetaSubspace& w) {
    // conj(var) * w = 0: for each w_b, the map var -> conj(var) * w_b
    for (int b = 0; b < w.dim(); ++b) {
      Octonion wb = Octonion::from_row(w.basis().row(b));
      Mat m(8, 8);
      for (int i = 0; i < 8; ++i)
        m.set_row(i, zorn_mul(conj(Octonion::basis(i)), wb).to_row());
      for (int c = 0; c < 8; ++c) {
        std::vector<Rat> row(24);
        bool nonzero = false;
        for (int i = 0; i < 8; ++i) {
          row[off + i] = m.at(i, c);
          if (row[off + i] != 0) nonzero = true;
        }
        if (nonzero) constraints.push_back(std::move(row));
      }
    }
  };
  auto add_conj_membership = [&](int off, const ThetaSubspace& w) {
    add_membership(off, w, /*conj_var=*/true);
  };

  if (d.shape.family == OrbitFamily::two_two_two) {
    add_membership(0, d.v_a3, false);
    add_membership(8, d.v_a1, false);
    add_conj_membership(16, d.v_a2);
  } else if (d.has_c3) {
    add_left_product_zero(0, d.v_a2);
    add_perp(8, d.v_a1);
    add_perp(16, conj_space(d.v_a2));  // (z*, w) = 0 <=> (z, w*) = 0
  } else if (d.has_c2) {
    add_perp(0, d.v_a3);
    add_zero(8);
    add_right_product_zero_conj(16, d.v_a3);
  } else {
    add_zero(0);
    add_zero(16);
    add_left_product_zero(8, d.v_a3);
  }
  Mat sys(int(constraints.size()), 24);
  for (size_t i = 0; i < constraints.size(); ++i) sys.set_row(int(i), constraints[i]);
  Subspace sol(kernel_basis(sys));
  // certificate: every basis solution acts trivially under the full
  // (quadratic) group action
  for (int b = 0; b < sol.dim(); ++b) {
    auto row = sol.basis().row(b);
    Octonion x, y, z;
    for (int i = 0; i < 8; ++i) {
      x.c[i] = row[i];
      y.c[i] = row[8 + i];
      z.c[i] = row[16 + i];
    }
    if (!stabilizer_direct(d, HeisenbergElement(x, y, z)).acts_trivially)
      throw std::logic_error("trivially_acting_subgroup: certificate failed for orbit " +
                             std::to_string(d.id));
  }
  return sol;
}

// True iff tr(x) + tr(y) is a nonzero functional on the trivially-acting
// parameter space.
inline bool xi_nontrivial_on_trivial_actors(const OrbitDescriptor& d) {
  Subspace s = trivially_acting_subgroup(d);
  for (int b = 0; b < s.dim(); ++b) {
    auto row = s.basis().row(b);
    Rat v = row[0] + row[7] + row[8] + row[15];
    if (v != 0) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// The Levi-image computations on the closed orbit V(Omega) and the a2-line
// orbits.
// ---------------------------------------------------------------------------

// Ordered basis b_1^(1), b_2^(1), ..., b_2^(3) of V(Omega): the two
// Cayley-Dickson basis vectors of Omega placed in each off-diagonal slot.
inline std::vector<JordanElement> closed_orbit_basis() {
  Octonion b1 = cd_to_zorn(CDOctonion::basis(4));
  Octonion b2 = cd_to_zorn(CDOctonion::basis(5));
  std::vector<JordanElement> rows;
  for (int slot = 1; slot <= 3; ++slot)
    for (const Octonion& b : {b1, b2}) {
      JordanElement e;
      (slot == 1 ? e.a1 : slot == 2 ? e.a2 : e.a3) = b;
      rows.push_back(e);
    }
  return rows;
}

// Right-action matrix of an operator on an invariant subspace in a given
// ordered basis; errors when the operator does not stabilize the span.
inline Mat restrict_to_basis(const std::vector<JordanElement>& basis,
                             const JordanOperator& m) {
  int n = int(basis.size());
  JSubspace span = jordan_span(basis);
  Mat coeff(n, n);
  for (int i = 0; i < n; ++i) {
    JordanElement img = act(basis[i], m);
    if (!span.contains(img.to_row()))
      throw std::invalid_argument("restrict_to_basis: operator does not stabilize the span");
    // solve img = sum_k c_k basis[k] via the echelon residual trick
    std::vector<Rat> v = img.to_row();
    // use Gaussian solve against the (small) basis matrix
    Mat sys(27, n + 1);
    for (int j = 0; j < 27; ++j) {
      for (int k = 0; k < n; ++k) sys.at(j, k) = basis[k].to_row()[j];
      sys.at(j, n) = v[j];
    }
    auto rr = rref(sys);
    std::vector<Rat> c(n);
    for (size_t r2 = 0; r2 < rr.pivots.size(); ++r2) {
      if (rr.pivots[r2] == n)
        throw std::logic_error("restrict_to_basis: inconsistent solve");
      c[rr.pivots[r2]] = rr.reduced.at(int(r2), n);
    }
    coeff.set_row(i, c);
  }
  return coeff;
}

// The GL6-image of an operator stabilizing V(Omega) under the Levi
// identification: the transpose-conjugate inverse (in M3(D)) of its
// restriction matrix.
inline Mat levi_image(const JordanOperator& m) {
  Mat r = restrict_to_basis(closed_orbit_basis(), m);
  return inverse(star_m3d(r));
}

inline Mat levi_image(const HeisenbergElement& u) { return levi_image(heis_operator(u)); }

// Ordered bases for the two a2-line orbit representatives used for the
// zero-pattern checks of the Levi images (block sizes in parentheses):
//   traceless line: (c1; eps2, e1, e2, e3*; e3*)
//   eps1 line:      (c1; eps2; e1*, e2*, e3*; eps1)
inline std::vector<JordanElement> a2_line_orbit_basis(LineType lt) {
  std::vector<JordanElement> rows;
  rows.push_back(JordanElement::e11());
  std::vector<Octonion> ann;
  Octonion line;
  if (lt == LineType::traceless) {
    ann = {Octonion::eps2(), Octonion::e(1), Octonion::e(2), Octonion::estar(3)};
    line = Octonion::estar(3);
  } else {
    ann = {Octonion::eps2(), Octonion::estar(1), Octonion::estar(2), Octonion::estar(3)};
    line = Octonion::eps1();
  }
  for (const Octonion& o : ann) {
    JordanElement e;
    e.a3 = o;
    rows.push_back(e);
  }
  JordanElement e;
  e.a2 = line;
  rows.push_back(e);
  return rows;
}

// Jacobian of the conjugation action of a GL2-Levi element on the
// complementary slice Vbar = {n(x,y;z) : x,y,z in Obar}; the absolute value
// is |det(g)|^{-3}.
inline Rat vbar_jacobian(const Mat& g2x2) {
  if (g2x2.rows() != 2 || g2x2.cols() != 2 || det(g2x2) == 0)
    throw std::invalid_argument("vbar_jacobian: need an invertible 2x2 matrix");
  Mat a = gl2_levi_action(g2x2);
  JordanOperator e = g2_embed(a);
  JordanOperator einv = g2_embed(inverse(a));
  ThetaSubspace obar = omega_bar_cd();
  std::vector<Octonion> ob = {Octonion::from_row(obar.basis().row(0)),
                              Octonion::from_row(obar.basis().row(1))};
  Mat jac(6, 6);
  for (int slot = 0; slot < 3; ++slot)
    for (int b = 0; b < 2; ++b) {
      HeisenbergElement u;
      (slot == 0 ? u.x : slot == 1 ? u.y : u.z) = ob[b];
      JordanOperator c = einv * heis_operator(u) * e;
      HeisenbergElement p = heis_parameters(c);
      const Octonion* parts[3] = {&p.x, &p.y, &p.z};
      for (int s2 = 0; s2 < 3; ++s2) {
        // coordinates of the part in the Obar basis
        std::vector<Rat> row = parts[s2]->to_row();
        if (!obar.contains(row))
          throw std::logic_error("vbar_jacobian: conjugation left the slice");
        auto resid = row;
        // obar basis rows are echelon; read off coefficients at pivots
        Rat c1 = row[obar.pivots()[0]], c2 = row[obar.pivots()[1]];
        (void)resid;
        jac.at(2 * slot + b, 2 * s2) = c1;
        jac.at(2 * slot + b, 2 * s2 + 1) = c2;
      }
    }
  return det(jac);
}

inline int orbit_dimension(const OrbitDescriptor& d) { return orbit_dimension(d.rep); }

// Dimension split of the N parameter space along Omega-perp and Obar and
// the vanishing of the trace functional on both distinguished slices.
struct ComplementReport {
  int perp_dim = 0, bar_dim = 0;
  bool direct_sum_is_theta = false;
  bool trace_vanishes_on_omega = false;
  bool trace_vanishes_on_obar = false;
  bool perp_star_containments = false;  // V_i V_{i+1}-perp in V_{i+2}* etc.
};

inline ComplementReport complement_check() {
  ComplementReport r;
  ThetaSubspace omega = omega_cd(), obar = omega_bar_cd(), perp = theta_perp(omega);
  r.perp_dim = 3 * perp.dim();
  r.bar_dim = 3 * obar.dim();
  r.direct_sum_is_theta =
      sum(perp, obar).dim() == 8 && intersect(perp, obar).dim() == 0;
  auto trace_zero = [](const ThetaSubspace& w) {
    for (int b = 0; b < w.dim(); ++b)
      if (otrace(Octonion::from_row(w.basis().row(b))) != 0) return false;
    return true;
  };
  r.trace_vanishes_on_omega = trace_zero(omega);
  r.trace_vanishes_on_obar = trace_zero(obar);
  r.perp_star_containments = true;
  for (int cls = 1; cls <= 5; ++cls) {
    ThetaSubspace v1 = two_space_witness(cls);
    auto [v2, v3] = complete_null_triple(v1);
    const ThetaSubspace* trip[3] = {&v1, &v2, &v3};
    for (int i = 0; i < 3; ++i) {
      const ThetaSubspace &A = *trip[i], &B = *trip[(i + 1) % 3], &C = *trip[(i + 2) % 3];
      ThetaSubspace bperp = theta_perp(B);
      if (!conj_space(C).contains(product_space(A, bperp))) r.perp_star_containments = false;
      if (!conj_space(A).contains(product_space(bperp, C))) r.perp_star_containments = false;
    }
  }
  return r;
}

}  // namespace exj

#endif
