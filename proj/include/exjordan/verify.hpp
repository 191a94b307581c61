#ifndef EXJORDAN_VERIFY_HPP
#define EXJORDAN_VERIFY_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "exjordan/io.hpp"
#include "exjordan/orbits.hpp"
#include "exjordan/rootdata.hpp"

namespace exj {

inline const char* toolkit_version() { return "1.0.0"; }

struct CheckContext {
  uint64_t seed = 0;
  int samples = 100;
  uint64_t prime = 10007;  // modular cross-check prime (overridable)
  unsigned workers = 0;    // 0 = one per hardware thread
};

struct CheckResult {
  std::string suite, name;
  bool pass = false;
  std::string expected, actual;
  std::optional<std::string> witness;
  long millis = 0;
};

// A check records one named assertion; on failure it carries the exact
// witness (inputs and both sides of the failed identity).
class Checker {
 public:
  explicit Checker(std::string expected_note = "")
      : expected_(std::move(expected_note)) {}

  void expect(bool cond, const std::string& expected, const std::string& actual,
              const std::string& witness = "") {
    if (!cond && pass_) {
      pass_ = false;
      expected_ = expected;
      actual_ = actual;
      witness_ = witness;
    }
    if (cond) ++passed_;
    ++total_;
  }

  template <typename T>
  void expect_eq(const T& got, const T& want, const std::string& what) {
    std::ostringstream e, a;
    e << what << " = " << printable(want);
    a << what << " = " << printable(got);
    expect(got == want, e.str(), a.str(), what);
  }

  bool pass() const { return pass_; }
  std::string expected() const {
    return pass_ ? "all " + std::to_string(total_) + " assertions hold" : expected_;
  }
  std::string actual() const {
    return pass_ ? std::to_string(passed_) + "/" + std::to_string(total_) + " hold"
                 : actual_;
  }
  std::optional<std::string> witness() const {
    if (pass_ || witness_.empty()) return std::nullopt;
    return witness_;
  }

 private:
  template <typename T>
  static std::string printable(const T& v) {
    if constexpr (std::is_same_v<T, Rat>) {
      return rat_to_string(v);
    } else if constexpr (std::is_same_v<T, bool>) {
      return v ? "true" : "false";
    } else {
      std::ostringstream s;
      s << v;
      return s.str();
    }
  }
  bool pass_ = true;
  std::string expected_, actual_, witness_;
  int passed_ = 0, total_ = 0;
};

struct Check {
  std::string suite;
  std::string name;
  std::function<void(Checker&, const CheckContext&)> run;
};

// ---------------------------------------------------------------------------
// Shared random generators.
// ---------------------------------------------------------------------------
inline Octonion random_octonion(Rng& rng) {
  Octonion o;
  for (int i = 0; i < 8; ++i) o.c[i] = rng.coeff();
  return o;
}
inline JordanElement random_jordan(Rng& rng) {
  std::vector<Rat> v(27);
  for (auto& x : v) x = rng.coeff();
  return JordanElement::from_row(v);
}
inline HeisenbergElement random_heisenberg(Rng& rng) {
  return HeisenbergElement(random_octonion(rng), random_octonion(rng),
                           random_octonion(rng));
}
inline CDOctonion random_cd(Rng& rng) {
  CDOctonion u;
  for (int i = 0; i < 8; ++i) u.c[i] = rng.coeff();
  return u;
}
inline std::string oct_str(const Octonion& o) {
  std::string s = "(";
  for (int i = 0; i < 8; ++i) s += rat_to_string(o.c[i]) + (i < 7 ? "," : ")");
  return s;
}
inline std::string jel_str(const JordanElement& x) {
  auto v = x.to_row();
  std::string s = "(";
  for (int i = 0; i < 27; ++i) s += rat_to_string(v[i]) + (i < 26 ? "," : ")");
  return s;
}

// Independent trilinear form straight from the norm by inclusion-exclusion;
// the polarization oracle for the coordinate formulas.
inline Rat trilinear_from_norm(const JordanElement& x, const JordanElement& y,
                               const JordanElement& z) {
  return jnorm(x + y + z) - jnorm(x + y) - jnorm(x + z) - jnorm(y + z) + jnorm(x) +
         jnorm(y) + jnorm(z);
}

// ---------------------------------------------------------------------------
// Check registry.
// ---------------------------------------------------------------------------
inline std::vector<Check> all_checks() {
  std::vector<Check> cs;
  auto add = [&](const std::string& suite, const std::string& name,
                 std::function<void(Checker&, const CheckContext&)> f) {
    cs.push_back({suite, name, std::move(f)});
  };

  // ----------------------------- octonion ---------------------------------
  add("octonion", "zorn_basic_products", [](Checker& c, const CheckContext& ctx) {
    c.expect_eq(zorn_mul(Octonion::e(1), Octonion::e(2)), Octonion::estar(3),
                "e1*e2");
    c.expect_eq(zorn_mul(Octonion::eps1(), Octonion::e(1)), Octonion::e(1),
                "eps1*e1");
    c.expect_eq(zorn_mul(Octonion::e(1), Octonion::eps1()), Octonion::zero(),
                "e1*eps1");
    Rng rng = Rng::for_check(ctx.seed, "zorn_basic_products");
    for (int t = 0; t < ctx.samples; ++t) {
      Octonion x = random_octonion(rng);
      c.expect(zorn_mul(Octonion::one(), x) == x && zorn_mul(x, Octonion::one()) == x,
               "1*x = x = x*1", "unit law failed", oct_str(x));
    }
  });

  add("octonion", "norm_trace_bilinear_values", [](Checker& c, const CheckContext& ctx) {
    c.expect_eq(onorm(Octonion::one()), Rat(1), "n(1)");
    c.expect_eq(onorm(Octonion::eps1()), Rat(0), "n(eps1)");
    c.expect_eq(bilinear(Octonion::e(1), Octonion::estar(1)), Rat(-1), "(e1,e1*)");
    Rng rng = Rng::for_check(ctx.seed, "norm_trace_bilinear_values");
    for (int t = 0; t < ctx.samples; ++t) {
      Rat a = rng.coeff(), d = rng.coeff();
      Octonion x = Octonion::eps1().scaled(a) + Octonion::eps2().scaled(d);
      c.expect(onorm(x) == a * d, "n(diag(a,d)) = a*d", "norm mismatch",
               rat_to_string(a) + "," + rat_to_string(d));
      Octonion y = random_octonion(rng);
      c.expect(conj(conj(y)) == y, "(y*)* = y", "involution failed", oct_str(y));
      c.expect(bilinear(y, y) == 2 * onorm(y), "(y,y) = 2n(y)", "mismatch", oct_str(y));
    }
  });

  add("octonion", "composition_norm", [](Checker& c, const CheckContext& ctx) {
    Rng rng = Rng::for_check(ctx.seed, "composition_norm");
    for (int t = 0; t < ctx.samples; ++t) {
      Octonion x = random_octonion(rng), y = random_octonion(rng);
      c.expect(onorm(zorn_mul(x, y)) == onorm(x) * onorm(y), "n(xy) = n(x)n(y)",
               "composition fails", oct_str(x) + " " + oct_str(y));
    }
  });

  add("octonion", "trace_associativity", [](Checker& c, const CheckContext& ctx) {
    Rng rng = Rng::for_check(ctx.seed, "trace_associativity");
    for (int t = 0; t < ctx.samples; ++t) {
      Octonion x = random_octonion(rng), y = random_octonion(rng), z = random_octonion(rng);
      c.expect(otrace(zorn_mul(x, zorn_mul(y, z))) == otrace(zorn_mul(zorn_mul(x, y), z)),
               "tr(x(yz)) = tr((xy)z)", "trace associativity fails",
               oct_str(x) + " " + oct_str(y) + " " + oct_str(z));
    }
  });

  add("octonion", "kirmse_identity", [](Checker& c, const CheckContext& ctx) {
    Rng rng = Rng::for_check(ctx.seed, "kirmse_identity");
    for (int t = 0; t < ctx.samples; ++t) {
      Octonion x = random_octonion(rng), y = random_octonion(rng);
      c.expect(zorn_mul(conj(x), zorn_mul(x, y)) == y.scaled(onorm(x)),
               "x*(xy) = n(x) y", "fails", oct_str(x) + " " + oct_str(y));
    }
  });

  add("octonion", "cayley_dickson_product", [](Checker& c, const CheckContext& ctx) {
    Rng rng = Rng::for_check(ctx.seed, "cayley_dickson_product");
    // D embeds as the first factor
    for (int t = 0; t < 8; ++t) {
      CDOctonion p = random_cd(rng);
      for (int i = 0; i < 4; ++i) p.c[4 + i] = 0;
      c.expect(cd_mul(CDOctonion::one(), p) == p, "(1,0)(p,0) = (p,0)", "fails", "");
    }
    CDOctonion u = CDOctonion::basis(4);  // (0, E11): not (0,1); use (0, I2)
    CDOctonion second;
    second.c[4] = 1;
    second.c[7] = 1;  // (0, 1)
    c.expect_eq(cd_mul(second, second), CDOctonion::one(), "(0,1)^2");
    (void)u;
    bool threw = false;
    try {
      CDOctonion w;
      w.gamma = 2;
      cd_mul(second, w);
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    c.expect(threw, "mismatched gamma raises", "no error raised", "gamma 1 vs 2");
    for (int t = 0; t < ctx.samples; ++t) {
      CDOctonion a = random_cd(rng), b = random_cd(rng);
      c.expect(cd_norm(cd_mul(a, b)) == cd_norm(a) * cd_norm(b),
               "n(ab) = n(a)n(b) in the CD model", "fails", "");
    }
  });

  add("octonion", "cd_to_zorn_isomorphism", [](Checker& c, const CheckContext& ctx) {
    c.expect_eq(cd_to_zorn(CDOctonion::one()), Octonion::one(), "psi(1)");
    Rng rng = Rng::for_check(ctx.seed, "cd_to_zorn_isomorphism");
    for (int t = 0; t < ctx.samples; ++t) {
      CDOctonion a = random_cd(rng), b = random_cd(rng);
      c.expect(cd_to_zorn(cd_mul(a, b)) == zorn_mul(cd_to_zorn(a), cd_to_zorn(b)),
               "psi(ab) = psi(a)psi(b)", "fails", "");
      c.expect(onorm(cd_to_zorn(a)) == cd_norm(a) && cd_to_zorn(cd_conj(a)) == conj(cd_to_zorn(a)),
               "psi preserves norm and conjugation", "fails", "");
    }
    auto cls = classify_isotropic(omega_cd());
    c.expect(cls.orbit_class == 1 && cls.traceless,
             "Omega maps to a traceless null two-space", "class " + std::to_string(cls.orbit_class), "");
  });

  add("octonion", "annihilator_spans", [](Checker& c, const CheckContext& ctx) {
    ThetaSubspace a1 = annihilator(theta_span({Octonion::estar(3)}), Side::Right);
    ThetaSubspace want1 = theta_span(
        {Octonion::eps2(), Octonion::e(1), Octonion::e(2), Octonion::estar(3)});
    c.expect(a1 == want1, "Ann_R(F e3*) = span{eps2, e1, e2, e3*}",
             "different span", "");
    ThetaSubspace a2 = annihilator(theta_span({Octonion::eps1()}), Side::Right);
    ThetaSubspace want2 = theta_span(
        {Octonion::estar(1), Octonion::estar(2), Octonion::estar(3), Octonion::eps2()});
    c.expect(a2 == want2, "Ann_R(F eps1) = span{e1*, e2*, e3*, eps2}",
             "different span", "");
    // every isotropic line has 4-dimensional annihilators
    Rng rng = Rng::for_check(ctx.seed, "annihilator_spans");
    int found = 0;
    while (found < std::min(ctx.samples, 50)) {
      Octonion x = random_octonion(rng);
      if (x.is_zero() || onorm(x) != 0) continue;
      ++found;
      ThetaSubspace l = theta_span({x});
      c.expect(annihilator(l, Side::Right).dim() == 4 &&
                   annihilator(l, Side::Left).dim() == 4,
               "dim Ann = 4 for isotropic lines", "wrong dimension", oct_str(x));
    }
  });

  add("octonion", "annihilators_isotropic", [](Checker& c, const CheckContext& ctx) {
    Rng rng = Rng::for_check(ctx.seed, "annihilators_isotropic");
    for (int t = 0; t < std::min(ctx.samples, 50); ++t) {
      std::vector<Octonion> gens;
      int k = 1 + int(rng.uniform(0, 2));
      for (int i = 0; i < k; ++i) gens.push_back(random_octonion(rng));
      ThetaSubspace w = theta_span(gens);
      if (w.dim() == 0) continue;
      for (Side s : {Side::Left, Side::Right}) {
        ThetaSubspace a = annihilator(w, s);
        bool iso = true;
        for (int i = 0; i < a.dim() && iso; ++i) {
          Octonion bi = Octonion::from_row(a.basis().row(i));
          if (onorm(bi) != 0) iso = false;
          for (int j = i + 1; j < a.dim() && iso; ++j)
            if (bilinear(bi, Octonion::from_row(a.basis().row(j))) != 0) iso = false;
        }
        c.expect(iso, "annihilators of nonzero subspaces are isotropic",
                 "not isotropic", "");
      }
    }
  });

  add("octonion", "two_space_classes", [](Checker& c, const CheckContext&) {
    for (int cls = 1; cls <= 5; ++cls) {
      auto got = classify_isotropic(two_space_witness(cls));
      c.expect(got.orbit_class == cls,
               "witness " + std::to_string(cls) + " classifies as class " + std::to_string(cls),
               "class " + std::to_string(got.orbit_class), "");
    }
    // line classes
    c.expect(classify_isotropic(orbit_line(LineType::traceless)).traceless,
             "F e3* is traceless", "not traceless", "");
    c.expect(!classify_isotropic(orbit_line(LineType::eps)).traceless,
             "F eps1 is not traceless", "traceless", "");
    bool threw = false;
    std::string witness;
    try {
      classify_isotropic(theta_span({Octonion::one()}));
    } catch (const ClassificationError& e) {
      threw = true;
      witness = e.what();
    }
    c.expect(threw, "non-isotropic input raises with witness", "no error", witness);
  });

  add("octonion", "traceless_null_equivalence", [](Checker& c, const CheckContext& ctx) {
    // traceless isotropic two-spaces sampled as G2 translates of the class-1
    // and class-2 witnesses (the group preserves both properties)
    Rng rng = Rng::for_check(ctx.seed, "traceless_null_equivalence");
    for (int t = 0; t < std::min(ctx.samples, 40); ++t) {
      Mat g = random_g2_element(rng);
      ThetaSubspace w = two_space_witness(t % 2 == 0 ? 1 : 2).image(g);
      auto cls = classify_isotropic(w);
      c.expect(cls.traceless, "translate stays traceless", "trace appeared", "");
      c.expect(cls.left_null == cls.right_null,
               "traceless two-spaces: left-null iff right-null", "flags differ", "");
    }
  });

  add("octonion", "complete_null_triples", [](Checker& c, const CheckContext&) {
    // the concrete witness from the line-parabolic family
    ThetaSubspace v1 = theta_span({Octonion::estar(3), Octonion::e(1)});
    auto [v2, v3] = complete_null_triple(v1);
    const ThetaSubspace* trip[3] = {&v1, &v2, &v3};
    for (int i = 0; i < 3; ++i) {
      ThetaSubspace prod = product_space(*trip[i], *trip[(i + 1) % 3]);
      c.expect(prod.dim() == 0, "V_i V_{i+1} = 0", "nonzero product", "");
    }
    auto [w2, w3] = complete_null_triple(v2);
    c.expect(w2 == v3 && w3 == v1, "completion from V2 cyclically shifts the triple",
             "different triple", "");
    // all five catalog witnesses complete
    for (int cls = 1; cls <= 5; ++cls) {
      auto [a, b] = complete_null_triple(two_space_witness(cls));
      c.expect(a.dim() == 2 && b.dim() == 2, "triple completion for class " + std::to_string(cls),
               "degenerate", "");
    }
    bool threw = false;
    try {
      complete_null_triple(theta_span({Octonion::estar(3)}));
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    c.expect(threw, "non-two-dimensional input raises", "no error", "a line");
    threw = false;
    try {
      complete_null_triple(theta_span({Octonion::one(), Octonion::e(1)}));
    } catch (const ClassificationError&) {
      threw = true;
    }
    c.expect(threw, "non-isotropic input raises", "no error", "span{1, e1}");
  });

  // ------------------------------ jordan ----------------------------------
  add("jordan", "norm_values", [](Checker& c, const CheckContext&) {
    c.expect_eq(jnorm(JordanElement::identity()), Rat(1), "n(diag(1,1,1))");
    c.expect_eq(jnorm(JordanElement::e11()), Rat(0), "n(e11)");
    c.expect_eq(jnorm(JordanElement::diag(Rat(1), Rat(2), Rat(3))), Rat(6),
                "n(diag(1,2,3))");
  });

  add("jordan", "trilinear_normalization", [](Checker& c, const CheckContext& ctx) {
    Rng rng = Rng::for_check(ctx.seed, "trilinear_normalization");
    for (int t = 0; t < ctx.samples; ++t) {
      JordanElement x = random_jordan(rng);
      c.expect(trilinear(x, x, x) == 6 * jnorm(x), "(X,X,X) = 6n(X)", "fails", jel_str(x));
      c.expect(jpairing(adjoint(x), x) == 3 * jnorm(x), "(X#, X) = 3n(X)", "fails",
               jel_str(x));
    }
    c.expect_eq(jpairing(JordanElement::e11(), JordanElement::e22()), Rat(0),
                "(e11, e22)");
    c.expect_eq(trilinear(JordanElement::e11(), JordanElement::e22(), JordanElement::e33()),
                Rat(1), "(e11,e22,e33)");
  });

  add("jordan", "adjoint_identity", [](Checker& c, const CheckContext& ctx) {
    Rng rng = Rng::for_check(ctx.seed, "adjoint_identity");
    c.expect_eq(adjoint(JordanElement::diag(Rat(2), Rat(3), Rat(5))),
                JordanElement::diag(Rat(15), Rat(10), Rat(6)), "diag adjoint");
    c.expect(adjoint(JordanElement::e11()).is_zero(), "e11# = 0", "nonzero", "");
    for (int t = 0; t < ctx.samples; ++t) {
      JordanElement x = random_jordan(rng);
      c.expect(adjoint(adjoint(x)) == x.scaled(jnorm(x)), "X## = n(X) X", "fails",
               jel_str(x));
    }
  });

  add("jordan", "adjoint_matches_polarization", [](Checker& c, const CheckContext&) {
    // On every basis pair, the coordinate cross agrees with the bilinear
    // map induced by the norm polarization through the pairing.
    for (int i = 0; i < 27 && c.pass(); ++i)
      for (int j = i; j < 27 && c.pass(); ++j) {
        JordanElement cr = cross(JordanElement::basis(i), JordanElement::basis(j));
        for (int k = 0; k < 27; ++k) {
          Rat lhs = jpairing(cr, JordanElement::basis(k));
          Rat rhs = trilinear_from_norm(JordanElement::basis(i), JordanElement::basis(j),
                                        JordanElement::basis(k));
          c.expect(lhs == rhs, "coordinate cross matches norm polarization",
                   "mismatch at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                       std::to_string(k) + ")",
                   rat_to_string(lhs) + " vs " + rat_to_string(rhs));
          if (!c.pass()) break;
        }
      }
  });

  add("jordan", "totally_singular", [](Checker& c, const CheckContext&) {
    c.expect(is_totally_singular(v_of_two_space(omega_cd())).totally_singular,
             "V(Omega) is totally singular", "witness found", "");
    auto w = is_totally_singular(jordan_span({JordanElement::e11(), JordanElement::e22()}));
    c.expect(!w.totally_singular && cross(w.first, w.second) == JordanElement::e33(),
             "span{e11,e22} fails with witness pair crossing to e33", "unexpected", "");
    c.expect(is_totally_singular(JSubspace::zero(27)).totally_singular,
             "zero subspace is totally singular", "witness found", "");
  });

  add("jordan", "filtration_profiles", [](Checker& c, const CheckContext&) {
    auto [p1, p2] = filtration_profile(v_of_two_space(omega_cd()));
    c.expect(p1 == Profile{0, 2, 2, 0, 2, 0}, "V(Omega) flag-1 profile (0,2,2,0,2,0)",
             "different profile", "");
    c.expect(p2 == Profile{0, 2, 0, 2, 2, 0}, "V(Omega) flag-2 profile (0,2,0,2,2,0)",
             "different profile", "");
    JSubspace with_c3 = jordan_span({JordanElement::e33(), JordanElement::e11()});
    auto [q1, q2] = filtration_profile(with_c3);
    c.expect(q1[0] == 1 && q2[0] == 1, "subspaces containing J(c3) start with 1",
             "different first step", "");
    // the seven coordinate patterns carry pairwise distinct profile pairs
    std::vector<std::pair<Profile, Profile>> distinct;
    for (const auto& d : catalog()) {
      std::pair<Profile, Profile> p{d.profile1, d.profile2};
      if (std::find(distinct.begin(), distinct.end(), p) == distinct.end())
        distinct.push_back(p);
    }
    c.expect_eq(int(distinct.size()), 7, "distinct profile pairs across the catalog");
  });

  add("jordan", "cayley_dickson_decomposition", [](Checker& c, const CheckContext& ctx) {
    Rng rng = Rng::for_check(ctx.seed, "cayley_dickson_decomposition");
    // pure H3(D) part
    for (int t = 0; t < 10; ++t) {
      JordanElement x;
      x.c1 = rng.coeff();
      x.c2 = rng.coeff();
      x.c3 = rng.coeff();
      CDOctonion p = random_cd(rng);
      for (int i = 0; i < 4; ++i) p.c[4 + i] = 0;
      x.a1 = cd_to_zorn(p);
      auto d = cd_decompose(x);
      c.expect(d.v.is_zero(), "pure H3(D) elements have zero matrix part", "nonzero", "");
      c.expect(jnorm(x) == h3d_norm(d.h), "norms agree on H3(D)", "differ", "");
    }
    // V(Omega) = bottom-row-zero matrix parts
    JSubspace vo = v_of_two_space(omega_cd());
    for (int b = 0; b < vo.dim(); ++b) {
      auto d = cd_decompose(JordanElement::from_row(vo.basis().row(b)));
      bool bottom_zero = d.h.is_zero();
      for (int j = 0; j < 6; ++j)
        if (d.v.at(1, j) != 0) bottom_zero = false;
      c.expect(bottom_zero, "V(Omega) = {(0,v): bottom row zero}", "violated", "");
    }
    for (int t = 0; t < ctx.samples; ++t) {
      JordanElement x = random_jordan(rng);
      c.expect(cd_norm_check(x), "n(x) = n(X) + vXv*", "identity fails", jel_str(x));
    }
  });

  add("jordan", "incidence_operator", [](Checker& c, const CheckContext&) {
    c.expect(phi_prime(JordanElement::e11(), JordanElement::e33()).is_zero(),
             "Phi'_{e11,e33} = 0", "nonzero operator", "");
  });

  // -------------------------------- e6 ------------------------------------
  add("e6", "membership_basics", [](Checker& c, const CheckContext& ctx) {
    c.expect(is_in_e6(Mat::identity(27)).in_e6, "identity is in E6", "rejected", "");
    auto w = is_in_e6(Mat::identity(27).scaled(Rat(2)));
    c.expect(!w.in_e6, "2*id is not in E6", "accepted", "");
    Rng rng = Rng::for_check(ctx.seed, "membership_basics");
    for (int t = 0; t < ctx.samples; ++t) {
      HeisenbergElement u = random_heisenberg(rng);
      c.expect(is_in_e6(heis_operator(u)).in_e6, "heisenberg operators are in E6",
               "rejected", oct_str(u.x) + " " + oct_str(u.y) + " " + oct_str(u.z));
    }
  });

  add("e6", "tilde_and_f4", [](Checker& c, const CheckContext& ctx) {
    c.expect(tilde(Mat::identity(27)) == Mat::identity(27), "tilde(id) = id",
             "differs", "");
    Rng rng = Rng::for_check(ctx.seed, "tilde_and_f4");
    for (int t = 0; t < std::min(ctx.samples, 20); ++t) {
      Mat g8 = random_g2_element(rng);
      JordanOperator g = g2_embed(g8);
      c.expect(is_in_f4(g), "embedded G2 elements are in F4", "not in F4", "");
      JordanOperator ti = inverse(tilde(g));
      for (int s = 0; s < 5; ++s) {
        JordanElement x = random_jordan(rng), y = random_jordan(rng);
        c.expect(cross(act(x, g), act(y, g)) == act(cross(x, y), ti),
                 "(Xg)x(Yg) = (XxY) tilde(g)^{-1}", "fails", "");
      }
    }
  });

  add("e6", "phi_operators", [](Checker& c, const CheckContext& ctx) {
    Rng rng = Rng::for_check(ctx.seed, "phi_operators");
    for (int t = 0; t < std::min(ctx.samples, 60); ++t) {
      JordanElement g = random_jordan(rng), v = random_jordan(rng);
      JordanOperator pp = phi_prime(g, v);
      JordanElement x = random_jordan(rng), y = random_jordan(rng), z = random_jordan(rng);
      Rat s = trilinear(act(x, pp), y, z) + trilinear(x, act(y, pp), z) +
              trilinear(x, y, act(z, pp));
      c.expect(s == 0, "Phi' satisfies the trilinear derivation identity",
               "sum = " + rat_to_string(s), "");
    }
    // nilpotency on the singular-pair locus: gamma = e11 has gamma# = 0, and
    // zeroing v's c1 coordinate forces (gamma, v) = 0
    for (int t = 0; t < std::min(ctx.samples, 40); ++t) {
      JordanElement g = JordanElement::e11();
      JordanElement v = random_jordan(rng);
      v.c1 = 0;
      JordanOperator p = phi(g, v);
      JordanOperator p2 = p * p, p3 = p2 * p;
      c.expect(p3.is_zero(), "Phi^3 = 0 for gamma# = 0, (gamma,v) = 0", "nonzero cube", "");
      JordanElement z = random_jordan(rng);
      JordanElement lhs = act(z, p2);
      JordanElement rhs =
          cross(g, adjoint(v)).scaled(Rat(-2) * jpairing(g, z));
      c.expect(lhs == rhs, "Phi^2(z) = -2(gamma,z) gamma x v#", "differs", jel_str(z));
    }
    c.expect(phi_prime(JordanElement::e11(), JordanElement::e33()).is_zero(),
             "Phi'_{e11,e33} = 0", "nonzero", "");
  });

  add("e6", "exp_nilpotent", [](Checker& c, const CheckContext& ctx) {
    c.expect(exp_nilpotent(Mat(27, 27)) == Mat::identity(27), "exp(0) = id", "differs", "");
    Rng rng = Rng::for_check(ctx.seed, "exp_nilpotent");
    for (int t = 0; t < std::min(ctx.samples, 30); ++t) {
      Octonion y = random_octonion(rng), z = random_octonion(rng);
      JordanOperator a = exp_nilpotent(
          phi_prime(JordanElement::off_diagonal(Octonion::zero(), y, z),
                    JordanElement::e33()));
      c.expect(a == heis_operator(HeisenbergElement(Octonion::zero(), y, z)),
               "exp Phi'_{Y(0,y,z),e33} = n(0,y;z)", "operators differ",
               oct_str(y) + " " + oct_str(z));
      Octonion x = random_octonion(rng), z2 = random_octonion(rng);
      JordanOperator b = exp_nilpotent(
          phi_prime(JordanElement::e11(),
                    JordanElement::off_diagonal(x, Octonion::zero(), z2)));
      c.expect(b == heis_operator(HeisenbergElement(x, Octonion::zero(), z2)),
               "exp Phi'_{e11,Y(x,0,z)} = n(x,0;z)", "operators differ",
               oct_str(x) + " " + oct_str(z2));
    }
    bool threw = false;
    try {
      exp_nilpotent(Mat::identity(27));
    } catch (const NotNilpotentError&) {
      threw = true;
    }
    c.expect(threw, "non-nilpotent input raises", "no error", "identity");
  });

  add("e6", "heisenberg_group_law", [](Checker& c, const CheckContext& ctx) {
    Rng rng = Rng::for_check(ctx.seed, "heisenberg_group_law");
    HeisenbergElement g1(Octonion::e(1), Octonion::zero(), Octonion::zero());
    HeisenbergElement g2(Octonion::zero(), Octonion::e(2), Octonion::zero());
    HeisenbergElement want(Octonion::e(1), Octonion::e(2), Octonion::estar(3));
    c.expect(heis_mul(g1, g2) == want, "(e1,0;0)(0,e2;0) = (e1,e2;e3*)", "differs", "");
    for (int t = 0; t < ctx.samples; ++t) {
      HeisenbergElement u = random_heisenberg(rng), v = random_heisenberg(rng),
                        w = random_heisenberg(rng);
      c.expect(heis_mul(u, heis_inv(u)).is_identity() &&
                   heis_mul(heis_inv(u), u).is_identity(),
               "u u^{-1} = 1", "fails", "");
      c.expect(heis_mul(heis_mul(u, v), w) == heis_mul(u, heis_mul(v, w)),
               "associativity", "fails", "");
      HeisenbergElement inv(-u.x, -u.y, zorn_mul(u.x, u.y) - u.z);
      c.expect(heis_inv(u) == inv, "inverse formula (-x,-y;xy-z)", "differs", "");
    }
  });

  add("e6", "heisenberg_operator", [](Checker& c, const CheckContext& ctx) {
    Rng rng = Rng::for_check(ctx.seed, "heisenberg_operator");
    // c1-row and a3-block structure
    HeisenbergElement u0 = random_heisenberg(rng);
    JordanOperator m = heis_operator(u0);
    JordanElement e_c1 = act(JordanElement::basis(0), m);
    c.expect(e_c1.c1 == 1 && e_c1.a3 == u0.x, "c1 -> c1 and a3 picks up c1 x",
             "row structure differs", "");
    for (int i = 0; i < 8; ++i) {
      JordanElement b;
      b.a3 = Octonion::basis(i);
      c.expect(act(b, m).a3 == b.a3, "a3 -> a3 + c1 x", "a3-block differs", "");
    }
    for (int t = 0; t < ctx.samples; ++t) {
      HeisenbergElement u = random_heisenberg(rng), w = random_heisenberg(rng);
      c.expect(heis_operator(u) * heis_operator(w) == heis_operator(heis_mul(u, w)),
               "operator map is a homomorphism", "products differ", "");
      JordanElement x = random_jordan(rng);
      c.expect(jnorm(heis_apply(x, u)) == jnorm(x), "the action preserves the norm",
               "norm changes", jel_str(x));
    }
  });

  add("e6", "heisenberg_injectivity", [](Checker& c, const CheckContext& ctx) {
    Rng rng = Rng::for_check(ctx.seed, "heisenberg_injectivity");
    for (int t = 0; t < ctx.samples; ++t) {
      HeisenbergElement u = random_heisenberg(rng);
      c.expect(heis_parameters(heis_operator(u)) == u,
               "parameters are linear read-offs of the operator", "readoff differs", "");
    }
    c.expect(heis_parameters(Mat::identity(27)).is_identity(),
             "identity operator comes from (0,0;0)", "nonzero parameters", "");
  });

  add("e6", "g2_embedding", [](Checker& c, const CheckContext& ctx) {
    c.expect(g2_embed(Mat::identity(8)) == Mat::identity(27),
             "identity automorphism embeds to the identity", "differs", "");
    Rng rng = Rng::for_check(ctx.seed, "g2_embedding");
    for (int t = 0; t < std::min(ctx.samples, 25); ++t) {
      Mat a = random_g2_element(rng);
      JordanOperator g = g2_embed(a);
      c.expect(is_in_e6(g).in_e6, "embedded automorphisms are in E6", "rejected", "");
      JordanOperator ginv = g2_embed(inverse(a));
      for (int s = 0; s < 4; ++s) {
        HeisenbergElement u = random_heisenberg(rng);
        HeisenbergElement conj_u(Octonion::from_row(apply_row(u.x.to_row(), a)),
                                 Octonion::from_row(apply_row(u.y.to_row(), a)),
                                 Octonion::from_row(apply_row(u.z.to_row(), a)));
        c.expect(ginv * heis_operator(u) * g == heis_operator(conj_u),
                 "conjugation covariance g^{-1} n(x,y;z) g = n(xg, yg; zg)",
                 "covariance fails", "");
      }
    }
    bool threw = false;
    try {
      Mat bad = Mat::identity(8);
      bad.at(1, 1) = 2;
      g2_embed(bad);
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    c.expect(threw, "non-automorphism input raises with failing pair", "no error", "");
  });

  add("e6", "structured_sl3", [](Checker& c, const CheckContext& ctx) {
    c.expect(sl3_action(Mat::identity(3)) == Mat::identity(8),
             "identity matrix gives the identity map", "differs", "");
    Rng rng = Rng::for_check(ctx.seed, "structured_sl3");
    for (int t = 0; t < std::min(ctx.samples, 30); ++t) {
      // random unipotent-generated SL3 element
      Mat g = Mat::identity(3);
      for (int s = 0; s < 3; ++s) {
        Mat u = Mat::identity(3);
        int i = int(rng.uniform(0, 2)), j = int(rng.uniform(0, 2));
        if (i == j) continue;
        u.at(i, j) = rng.coeff();
        g = g * u;
      }
      Mat a = sl3_action(g);
      c.expect(check_automorphism(a).ok, "SL3 acts by automorphisms", "not one", "");
    }
    bool threw = false;
    try {
      sl3_action(Mat::identity(3).scaled(Rat(2)));
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    c.expect(threw, "det != 1 raises", "no error", "");
  });

  add("e6", "structured_gl2_levi", [](Checker& c, const CheckContext& ctx) {
    Rng rng = Rng::for_check(ctx.seed, "structured_gl2_levi");
    for (int t = 0; t < std::min(ctx.samples, 30); ++t) {
      Mat g(2, 2);
      do {
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) g.at(i, j) = rng.coeff();
      } while (det(g) == 0);
      Mat a = gl2_levi_action(g);
      c.expect(check_automorphism(a).ok, "the Levi acts by automorphisms", "not one", "");
      // random-pair multiplicativity beyond the basis certification
      for (int s = 0; s < 5; ++s) {
        Octonion x = random_octonion(rng), y = random_octonion(rng);
        Octonion lx = Octonion::from_row(apply_row(x.to_row(), a));
        Octonion ly = Octonion::from_row(apply_row(y.to_row(), a));
        c.expect(Octonion::from_row(apply_row(zorn_mul(x, y).to_row(), a)) ==
                     zorn_mul(lx, ly),
                 "multiplicativity on random pairs", "fails", "");
      }
    }
  });

  add("e6", "structured_m_levi", [](Checker& c, const CheckContext& ctx) {
    Rng rng = Rng::for_check(ctx.seed, "structured_m_levi");
    JSubspace vo = v_of_two_space(omega_cd());
    for (int t = 0; t < std::min(ctx.samples, 12); ++t) {
      // g with det a perfect cube: diag(l, l, l, 1, 1, 1) * unipotent
      Rat l = rng.nonzero_coeff();
      Mat g = Mat::identity(6);
      for (int i = 0; i < 3; ++i) g.at(i, i) = l;
      for (int s = 0; s < 4; ++s) {
        Mat u = Mat::identity(6);
        int i = int(rng.uniform(0, 5)), j = int(rng.uniform(0, 5));
        if (i != j) u.at(i, j) = rng.coeff();
        g = g * u;
      }
      JordanOperator m = m_levi_action(l, g);
      for (int s = 0; s < 4; ++s) {
        JordanElement x = random_jordan(rng);
        c.expect(jnorm(act(x, m)) == jnorm(x), "the Levi action preserves the norm",
                 "norm changes", "");
      }
      c.expect(vo.image(m) == vo, "the Levi action preserves V(Omega)", "moved", "");
    }
    bool threw = false;
    try {
      m_levi_action(Rat(2), Mat::identity(6));
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    c.expect(threw, "lambda^3 != det(g) raises", "no error", "");
  });

  add("e6", "xi_functional", [](Checker& c, const CheckContext& ctx) {
    c.expect_eq(xi_functional(HeisenbergElement()), Rat(0), "xi(identity)");
    c.expect_eq(xi_functional(HeisenbergElement(Octonion::eps1(), Octonion::zero(),
                                                Octonion::zero())),
                Rat(1), "xi(eps1,0;0)");
    Rng rng = Rng::for_check(ctx.seed, "xi_functional");
    for (int t = 0; t < std::min(ctx.samples, 25); ++t) {
      Mat a = random_g2_element(rng);
      HeisenbergElement u = random_heisenberg(rng);
      HeisenbergElement cu(Octonion::from_row(apply_row(u.x.to_row(), a)),
                           Octonion::from_row(apply_row(u.y.to_row(), a)),
                           Octonion::from_row(apply_row(u.z.to_row(), a)));
      c.expect(xi_functional(cu) == xi_functional(u),
               "G2 conjugation preserves the functional", "changes", "");
    }
  });

  add("e6", "exp_of_lie_elements", [](Checker& c, const CheckContext& ctx) {
    Rng rng = Rng::for_check(ctx.seed, "exp_of_lie_elements");
    const auto& nrad = algebra_basis(AlgebraKind::n_radical);
    for (int t = 0; t < std::min(ctx.samples, 20); ++t) {
      Mat f(27, 27);
      for (int k = 0; k < 4; ++k)
        f = f + nrad.basis[size_t(rng.uniform(0, nrad.dim() - 1))].scaled(
                    Rat(rng.uniform(-2, 2)));
      JordanOperator e = exp_nilpotent(f);
      c.expect(is_in_e6(e).in_e6, "exponentials of nilpotent Lie elements are in E6",
               "rejected", "");
    }
  });

  // ------------------------------ liealg ----------------------------------
  add("liealg", "algebra_dimensions", [](Checker& c, const CheckContext&) {
    c.expect_eq(algebra_basis(AlgebraKind::g2_derivations).dim(), 14, "dim Lie(G2)");
    c.expect_eq(algebra_basis(AlgebraKind::e6).dim(), 78, "dim Lie(E6)");
    c.expect_eq(algebra_basis(AlgebraKind::n_radical).dim(), 24, "dim Lie(N)");
  });

  add("liealg", "modular_rank_cross_check", [](Checker& c, const CheckContext& ctx) {
    Mat sys = e6_constraint_matrix();
    int r1 = modular_rank(sys, ctx.prime);
    int r2 = modular_rank(sys, 1000003);
    c.expect_eq(r1, 729 - 78, "rank mod " + std::to_string(ctx.prime));
    c.expect_eq(r2, 729 - 78, "rank mod 1000003");
  });

  add("liealg", "constraint_annihilation", [](Checker& c, const CheckContext& ctx) {
    // every basis element satisfies the defining identity, sampled exactly
    Rng rng = Rng::for_check(ctx.seed, "constraint_annihilation");
    const auto& e6 = algebra_basis(AlgebraKind::e6);
    for (int t = 0; t < std::min(ctx.samples, 40); ++t) {
      const Mat& f = e6.basis[size_t(rng.uniform(0, e6.dim() - 1))];
      JordanElement x = random_jordan(rng), y = random_jordan(rng), z = random_jordan(rng);
      Rat s = trilinear(act(x, f), y, z) + trilinear(x, act(y, f), z) +
              trilinear(x, y, act(z, f));
      c.expect(s == 0, "basis elements satisfy the derivation identity",
               "sum = " + rat_to_string(s), "");
    }
    const auto& g2 = algebra_basis(AlgebraKind::g2_derivations);
    for (int t = 0; t < std::min(ctx.samples, 40); ++t) {
      const Mat& d = g2.basis[size_t(rng.uniform(0, g2.dim() - 1))];
      Octonion x = random_octonion(rng), y = random_octonion(rng);
      Octonion lhs = Octonion::from_row(apply_row(zorn_mul(x, y).to_row(), d));
      Octonion rhs = zorn_mul(Octonion::from_row(apply_row(x.to_row(), d)), y) +
                     zorn_mul(x, Octonion::from_row(apply_row(y.to_row(), d)));
      c.expect(lhs == rhs, "derivation Leibniz identity", "fails", "");
    }
  });

  add("liealg", "bracket_closure", [](Checker& c, const CheckContext& ctx) {
    for (AlgebraKind k :
         {AlgebraKind::g2_derivations, AlgebraKind::n_radical, AlgebraKind::e6}) {
      const auto& alg = algebra_basis(k);
      int n = alg.dim();
      // all pairs for the small algebras; a deterministic sample for e6
      std::vector<std::pair<int, int>> pairs;
      if (k == AlgebraKind::e6) {
        Rng rng = Rng::for_check(ctx.seed, "bracket_closure_e6");
        for (int t = 0; t < std::min(std::max(ctx.samples, 50), 400); ++t) {
          int i = int(rng.uniform(0, n - 1)), j = int(rng.uniform(0, n - 1));
          pairs.emplace_back(i, j);
        }
      } else {
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
      }
      for (auto [i, j] : pairs) {
        Mat br = bracket(alg.basis[size_t(i)], alg.basis[size_t(j)]);
        c.expect(alg.contains(br), algebra_kind_name(k) + " closed under bracket",
                 "bracket escapes the span",
                 "pair " + std::to_string(i) + "," + std::to_string(j));
        if (!c.pass()) break;
      }
    }
  });

  add("liealg", "phi_prime_membership", [](Checker& c, const CheckContext& ctx) {
    Rng rng = Rng::for_check(ctx.seed, "phi_prime_membership");
    const auto& e6 = algebra_basis(AlgebraKind::e6);
    for (int t = 0; t < std::min(ctx.samples, 25); ++t) {
      JordanElement g = random_jordan(rng), v = random_jordan(rng);
      c.expect(e6.contains(phi_prime(g, v)), "Phi' operators lie in the e6 span",
               "outside the span", "");
    }
    const auto& g2 = algebra_basis(AlgebraKind::g2_derivations);
    for (const Mat& d : g2.basis)
      c.expect(e6.contains(g2_embed_derivation(d)),
               "embedded derivations lie in the e6 span", "outside", "");
  });

  add("liealg", "lie_h_direct_sum", [](Checker& c, const CheckContext&) {
    const auto& ops = lie_h_basis();
    std::vector<std::vector<Rat>> rows;
    for (const auto& m : ops) rows.push_back(LieAlgebraBasis::flatten(m));
    Subspace s = Subspace::span_of(rows, 729);
    c.expect_eq(s.dim(), 38, "dim(Lie(G2-embedded) + Lie(N))");
  });

  add("liealg", "stabilizer_dimensions", [](Checker& c, const CheckContext&) {
    const auto& cat = catalog();
    auto closed = stabilizer_subalgebra(cat[0].rep, lie_h_basis());
    c.expect_eq(closed.dim, 27, "dim stab of the closed orbit in Lie(H)");
    auto full = stabilizer_subalgebra(JSubspace::full(27), lie_h_basis());
    c.expect_eq(full.dim, 38, "stab of J is the whole algebra");
    const auto& nrad = algebra_basis(AlgebraKind::n_radical);
    for (const auto& d : cat) {
      if (d.shape.family == OrbitFamily::right411 && d.shape.line_slot == 2) {
        auto fix = fixing_subalgebra(d.rep, nrad.basis);
        c.expect_eq(fix.dim, 0,
                    "pointwise-fixing N-subalgebra of orbit " + std::to_string(d.id));
      }
    }
  });

  add("liealg", "orbit_dimension_table", [](Checker& c, const CheckContext&) {
    // frozen from the exact solves; the flag variety bound comes from the
    // stabilizer of the closed orbit in the full e6
    static const int expected[17] = {11, 13, 13, 13, 15, 9, 10, 20, 21,
                                     9, 10, 16, 17, 5, 6, 16, 17};
    const auto& cat = catalog();
    const auto& lh = lie_h_basis();
    int maxdim = -1, argmax = -1;
    for (int i = 0; i < 17; ++i) {
      auto st = stabilizer_subalgebra(cat[size_t(i)].rep, lh);
      int od = 38 - st.dim;
      c.expect_eq(od, expected[i], "orbit " + std::to_string(i + 1) + " dimension");
      c.expect(od >= 0 && od <= 21, "orbit dimension within [0, 21]",
               std::to_string(od), "");
      if (od > maxdim) {
        maxdim = od;
        argmax = i + 1;
      }
    }
    c.expect_eq(maxdim, 21, "maximal orbit dimension");
    c.expect_eq(argmax, 9, "open orbit id");
    auto pstab = stabilizer_subalgebra(cat[0].rep, algebra_basis(AlgebraKind::e6).basis);
    c.expect_eq(pstab.dim, 57, "stab of the closed orbit in e6");
    c.expect_eq(78 - pstab.dim, 21, "flag variety dimension");
  });

  // ------------------------------ orbits ----------------------------------
  add("orbits", "catalog_well_formed", [](Checker& c, const CheckContext&) {
    const auto& cat = catalog();
    c.expect_eq(int(cat.size()), 17, "catalog size");
    for (const auto& d : cat) {
      c.expect(d.rep.dim() == 6, "representative is 6-dimensional",
               std::to_string(d.rep.dim()), d.shape.name());
      c.expect(is_totally_singular(d.rep).totally_singular,
               "representative is totally singular", "witness found", d.shape.name());
    }
    c.expect(cat[0].rep == v_of_two_space(omega_cd()),
             "closed orbit representative is V(Omega)", "differs", "");
  });

  add("orbits", "invariant_separation", [](Checker& c, const CheckContext&) {
    const auto& cat = catalog();
    for (size_t i = 0; i < cat.size(); ++i)
      for (size_t j = i + 1; j < cat.size(); ++j) {
        bool same = cat[i].profile1 == cat[j].profile1 &&
                    cat[i].profile2 == cat[j].profile2 &&
                    cat[i].shape.family == cat[j].shape.family &&
                    cat[i].isotropic_class == cat[j].isotropic_class;
        c.expect(!same, "(shape, class, profiles) separates the orbits",
                 "orbits " + std::to_string(cat[i].id) + " and " +
                     std::to_string(cat[j].id) + " collide",
                 "");
      }
  });

  add("orbits", "closed_orbit_profile", [](Checker& c, const CheckContext&) {
    const auto& d = catalog()[0];
    c.expect(d.profile1 == Profile{0, 2, 2, 0, 2, 0}, "closed orbit flag-1 profile",
             "differs", "");
  });

  add("orbits", "stabilizer_predicates", [](Checker& c, const CheckContext& ctx) {
    Rng rng = Rng::for_check(ctx.seed, "stabilizer_predicates");
    for (const auto& d : catalog()) {
      for (int t = 0; t < ctx.samples; ++t) {
        HeisenbergElement u = random_heisenberg(rng);
        // bias half the samples towards the stabilizer/trivial locus by
        // projecting components into the relevant subspaces
        if (t % 2 == 0 && d.v_a3.dim() > 0) {
          Octonion x;
          for (int b = 0; b < d.v_a3.dim(); ++b)
            x = x + Octonion::from_row(d.v_a3.basis().row(b)).scaled(rng.coeff());
          u.x = x;
        }
        auto p = stabilizer_predicate(d, u);
        auto q = stabilizer_direct(d, u);
        c.expect(p.stabilizes == q.stabilizes && p.acts_trivially == q.acts_trivially,
                 "predicate agrees with the direct action",
                 "orbit " + std::to_string(d.id) + " disagrees",
                 oct_str(u.x) + " " + oct_str(u.y) + " " + oct_str(u.z));
        if (!c.pass()) return;
      }
    }
  });

  add("orbits", "trivial_actors", [](Checker& c, const CheckContext&) {
    static const int expected_fix[17] = {6, 6, 6, 6, 6, 11, 11, 0, 0,
                                         11, 11, 4, 4, 15, 15, 4, 4};
    const auto& cat = catalog();
    for (int i = 0; i < 17; ++i) {
      Subspace s = trivially_acting_subgroup(cat[size_t(i)]);
      c.expect_eq(s.dim(), expected_fix[i],
                  "trivially-acting dimension, orbit " + std::to_string(i + 1));
    }
    // closed orbit: exactly {x, y, z in Omega}
    ThetaSubspace om = omega_cd();
    std::vector<std::vector<Rat>> rows;
    for (int slot = 0; slot < 3; ++slot)
      for (int b = 0; b < om.dim(); ++b) {
        std::vector<Rat> r(24);
        for (int i = 0; i < 8; ++i) r[8 * slot + i] = om.basis().at(b, i);
        rows.push_back(std::move(r));
      }
    c.expect(trivially_acting_subgroup(cat[0]) == Subspace::span_of(rows, 24),
             "closed orbit trivial actors = Omega^3", "differs", "");
    // non-closed (2,2,2) orbits contain a trace-nonzero parameter
    for (int i = 1; i < 5; ++i) {
      Subspace s = trivially_acting_subgroup(cat[size_t(i)]);
      bool tracer = false;
      for (int b = 0; b < s.dim(); ++b) {
        auto r = s.basis().row(b);
        if (r[0] + r[7] != 0 || r[8] + r[15] != 0) tracer = true;
      }
      c.expect(tracer, "non-closed (2,2,2) trivial actors meet tr != 0",
               "all traceless", "orbit " + std::to_string(i + 1));
    }
    // trivially-acting subgroup is contained in the stabilizer solution set
    for (const auto& d : cat) {
      Subspace s = trivially_acting_subgroup(d);
      for (int b = 0; b < s.dim(); ++b) {
        auto r = s.basis().row(b);
        HeisenbergElement u;
        for (int i = 0; i < 8; ++i) {
          u.x.c[i] = r[i];
          u.y.c[i] = r[8 + i];
          u.z.c[i] = r[16 + i];
        }
        auto p = stabilizer_predicate(d, u);
        c.expect(p.stabilizes && p.acts_trivially,
                 "trivial actors satisfy the stabilizer predicate", "violated",
                 "orbit " + std::to_string(d.id));
      }
    }
  });

  add("orbits", "xi_vanishing_flags", [](Checker& c, const CheckContext&) {
    const auto& cat = catalog();
    int count = 0;
    for (const auto& d : cat) {
      bool xi = xi_nontrivial_on_trivial_actors(d);
      if (xi) ++count;
      bool expected_false = d.id == 1 || d.id == 8 || d.id == 9;
      c.expect(xi != expected_false,
               "xi flag for orbit " + std::to_string(d.id),
               xi ? "nontrivial" : "trivial", d.shape.name());
    }
    c.expect_eq(count, 14, "orbits with nontrivial character");
  });

  add("orbits", "levi_images", [](Checker& c, const CheckContext& ctx) {
    Rng rng = Rng::for_check(ctx.seed, "levi_images");
    c.expect(levi_image(Mat::identity(27)) == Mat::identity(6), "identity maps to identity",
             "differs", "");
    ThetaSubspace perp = theta_perp(omega_cd());
    for (int t = 0; t < std::min(ctx.samples, 25); ++t) {
      // x, y, z in Omega-perp
      auto sample_perp = [&] {
        Octonion o;
        for (int b = 0; b < perp.dim(); ++b)
          o = o + Octonion::from_row(perp.basis().row(b)).scaled(rng.coeff());
        return o;
      };
      Octonion x = sample_perp(), y = sample_perp(), z = sample_perp();
      Mat w = levi_image(HeisenbergElement(x, y, z));
      // block upper unitriangular with (1,2)-block w_x, (2,3)-block w_y
      bool shape_ok = true;
      for (int i = 0; i < 6; ++i) {
        if (w.at(i, i) != 1) shape_ok = false;
        for (int j = 0; j < i; ++j)
          if (w.at(i, j) != 0) shape_ok = false;
      }
      if (w.at(0, 1) != 0 || w.at(2, 3) != 0 || w.at(4, 5) != 0) shape_ok = false;
      CDOctonion xc = zorn_to_cd(x), yc = zorn_to_cd(y);
      if (w.at(0, 2) != xc.c[0] || w.at(0, 3) != xc.c[1] || w.at(1, 2) != xc.c[2] ||
          w.at(1, 3) != xc.c[3])
        shape_ok = false;
      if (w.at(2, 4) != yc.c[0] || w.at(2, 5) != yc.c[1] || w.at(3, 4) != yc.c[2] ||
          w.at(3, 5) != yc.c[3])
        shape_ok = false;
      c.expect(shape_ok, "w(x,y,z) is block unitriangular with blocks w_x, w_y",
               "shape differs", oct_str(x) + " " + oct_str(y));
    }
    for (int t = 0; t < std::min(ctx.samples, 25); ++t) {
      Mat h(2, 2);
      do {
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) h.at(i, j) = rng.coeff();
      } while (det(h) == 0);
      Mat img = levi_image(g2_embed(gl2_levi_action(inverse(h))));
      bool ok = true;
      for (int b = 0; b < 3; ++b)
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j)
            if (img.at(2 * b + i, 2 * b + j) != h.at(i, j)) ok = false;
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
          if (i / 2 != j / 2 && img.at(i, j) != 0) ok = false;
      c.expect(ok, "GL2-Levi elements map to diag(h,h,h)", "differs", "");
    }
  });

  add("orbits", "a2_line_levi_patterns", [](Checker& c, const CheckContext& ctx) {
    Rng rng = Rng::for_check(ctx.seed, "a2_line_levi_patterns");
    // traceless line: (c1; eps2, e1, e2, e3*; e3*) with the pattern
    //   [1 x  *    *     *  ]
    //   [0 1  0 0  *     *  ]
    //   [0 0  g    *     *  ]
    //   [0 0  0 0  det g x' ]
    //   [0 0  0 0  0   det g]
    auto basis_tl = a2_line_orbit_basis(LineType::traceless);
    ThetaSubspace l_tl = orbit_line(LineType::traceless);
    ThetaSubspace ar = annihilator(l_tl, Side::Right);
    ThetaSubspace al = annihilator(l_tl, Side::Left);
    auto sample_in = [&](const ThetaSubspace& s) {
      Octonion o;
      for (int b = 0; b < s.dim(); ++b)
        o = o + Octonion::from_row(s.basis().row(b)).scaled(rng.coeff());
      return o;
    };
    auto check_tl = [&](const Mat& w) {
      static const int zeros[][2] = {{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}, {2, 1},
                                     {3, 1}, {4, 1}, {5, 1}, {1, 2}, {1, 3}, {4, 2},
                                     {4, 3}, {5, 2}, {5, 3}, {5, 4}};
      for (auto& z : zeros)
        if (w.at(z[0], z[1]) != 0) return false;
      if (w.at(0, 0) != 1 || w.at(1, 1) != 1) return false;
      Rat dg = w.at(2, 2) * w.at(3, 3) - w.at(2, 3) * w.at(3, 2);
      return w.at(4, 4) == dg && w.at(5, 5) == dg;
    };
    for (int t = 0; t < std::min(ctx.samples, 15); ++t) {
      HeisenbergElement u(sample_in(ar), sample_in(al),
                          conj(sample_in(l_tl)));
      Mat w = restrict_to_basis(basis_tl, heis_operator(u));
      c.expect(check_tl(w), "traceless-line pattern for N-part elements", "pattern differs", "");
    }
    for (int t = 0; t < std::min(ctx.samples, 15); ++t) {
      Mat h(2, 2);
      do {
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) h.at(i, j) = rng.coeff();
      } while (det(h) == 0);
      // GL2 Levi of the line parabolic inside SL3: diag(h, det(h)^{-1})
      Mat g(3, 3);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) g.at(i, j) = h.at(i, j);
      g.at(2, 2) = 1 / det(h);
      Mat w = restrict_to_basis(basis_tl, g2_embed(sl3_action(g)));
      c.expect(check_tl(w), "traceless-line pattern for Levi elements", "pattern differs", "");
    }
    // eps1 line: (c1; eps2; e1*, e2*, e3*; eps1) with the pattern
    //   [1 x *     *]
    //   [0 1 0 0 0 x']
    //   [0 0 g     *]
    //   [0 0 0 0 0 1]
    auto basis_eps0 = a2_line_orbit_basis(LineType::eps);
    // reorder to (c1; eps2; covectors; eps1)
    std::vector<JordanElement> basis_eps = {basis_eps0[0], basis_eps0[1], basis_eps0[2],
                                            basis_eps0[3], basis_eps0[4], basis_eps0[5]};
    auto check_eps = [&](const Mat& w, bool want_sl3) {
      static const int zeros[][2] = {{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}, {2, 1},
                                     {3, 1}, {4, 1}, {5, 1}, {1, 2}, {1, 3}, {1, 4},
                                     {5, 2}, {5, 3}, {5, 4}};
      for (auto& z : zeros)
        if (w.at(z[0], z[1]) != 0) return false;
      if (w.at(0, 0) != 1 || w.at(1, 1) != 1 || w.at(5, 5) != 1) return false;
      if (want_sl3) {
        Mat g(3, 3);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) g.at(i, j) = w.at(2 + i, 2 + j);
        if (det(g) != 1) return false;
      }
      return true;
    };
    ThetaSubspace l_eps = orbit_line(LineType::eps);
    ThetaSubspace ar2 = annihilator(l_eps, Side::Right);
    ThetaSubspace al2 = annihilator(l_eps, Side::Left);
    for (int t = 0; t < std::min(ctx.samples, 15); ++t) {
      HeisenbergElement u(sample_in(ar2), sample_in(al2), conj(sample_in(l_eps)));
      Mat w = restrict_to_basis(basis_eps, heis_operator(u));
      c.expect(check_eps(w, true), "eps1-line pattern for N-part elements",
               "pattern differs", "");
    }
    for (int t = 0; t < std::min(ctx.samples, 15); ++t) {
      Mat g = Mat::identity(3);
      for (int s = 0; s < 3; ++s) {
        Mat u = Mat::identity(3);
        int i = int(rng.uniform(0, 2)), j = int(rng.uniform(0, 2));
        if (i != j) u.at(i, j) = rng.coeff();
        g = g * u;
      }
      Mat w = restrict_to_basis(basis_eps, g2_embed(sl3_action(g)));
      c.expect(check_eps(w, true), "eps1-line pattern for SL3 elements",
               "pattern differs", "");
    }
  });

  add("orbits", "vbar_jacobian", [](Checker& c, const CheckContext& ctx) {
    c.expect_eq(vbar_jacobian(Mat::identity(2)), Rat(1), "jacobian at the identity");
    for (long t : {2L, 3L, -5L}) {
      Mat g(2, 2);
      g.at(0, 0) = t;
      g.at(1, 1) = 1;
      Rat j = vbar_jacobian(g);
      c.expect(rat_abs(j) == Rat(1, std::abs(t) * std::abs(t) * std::abs(t)),
               "|jacobian(diag(t,1))| = |t|^{-3}", rat_to_string(j), std::to_string(t));
    }
    Rng rng = Rng::for_check(ctx.seed, "vbar_jacobian");
    for (int t = 0; t < ctx.samples; ++t) {
      Mat g(2, 2);
      do {
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) g.at(i, j) = rng.coeff();
      } while (det(g) == 0);
      Rat j = vbar_jacobian(g);
      Rat d3 = rat_abs(det(g));
      c.expect(rat_abs(j) * d3 * d3 * d3 == 1, "|jacobian| = |det g|^{-3}",
               rat_to_string(j), "");
    }
  });

  add("orbits", "complement_split", [](Checker& c, const CheckContext&) {
    auto r = complement_check();
    c.expect_eq(r.perp_dim + r.bar_dim, 24, "parameter-space dimension split");
    c.expect_eq(r.perp_dim, 18, "Omega-perp part");
    c.expect_eq(r.bar_dim, 6, "Obar part");
    c.expect(r.direct_sum_is_theta, "Omega-perp + Obar = Theta", "not direct", "");
    c.expect(r.trace_vanishes_on_omega && r.trace_vanishes_on_obar,
             "trace vanishes on Omega and Obar", "nonzero trace", "");
    c.expect(r.perp_star_containments, "V_i V_{i+1}-perp in V_{i+2}* for all triples",
             "containment fails", "");
  });

  add("orbits", "g2_invariance", [](Checker& c, const CheckContext& ctx) {
    Rng rng = Rng::for_check(ctx.seed, "g2_invariance");
    const auto& cat = catalog();
    for (int t = 0; t < std::min(ctx.samples, 8); ++t) {
      Mat a = random_g2_element(rng);
      JordanOperator g = g2_embed(a);
      for (const auto& d : cat) {
        JSubspace moved = d.rep.image(g);
        c.expect(moved.dim() == 6 && is_totally_singular(moved).totally_singular,
                 "G2 preserves dimension and singularity", "violated", d.shape.name());
        auto [p1, p2] = filtration_profile(moved);
        c.expect(p1 == d.profile1 && p2 == d.profile2,
                 "G2 preserves the coordinate-flag profiles", "profile moved",
                 d.shape.name());
      }
    }
  });

  // ------------------------------ rootdata --------------------------------
  add("rootdata", "e6_rho", [](Checker& c, const CheckContext&) {
    RootDatum rd = bundled_root_datum("E6", 5);
    auto r = rho_coefficient(rd);
    c.expect_eq(r.c, Rat(11, 2), "c for E6/alpha6");
    c.expect_eq(modular_exponent(rd), Rat(11), "modular exponent for E6/alpha6");
    static const int num[5][5] = {{5, 2, 1, 1, 1},
                                  {2, 4, 1, 2, 1},
                                  {1, 1, 3, 1, 1},
                                  {1, 2, 1, 4, 2},
                                  {1, 1, 1, 2, 5}};
    static const int den[5][5] = {{6, 3, 2, 3, 6},
                                  {3, 3, 1, 3, 3},
                                  {2, 1, 2, 1, 2},
                                  {3, 3, 1, 3, 3},
                                  {6, 3, 2, 3, 6}};
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        c.expect(r.c_alpha_inv.at(i, j) == Rat(num[i][j], den[i][j]),
                 "A5 inverse Cartan entry (" + std::to_string(i + 1) + "," +
                     std::to_string(j + 1) + ")",
                 rat_to_string(r.c_alpha_inv.at(i, j)), "");
  });

  add("rootdata", "g2_rho", [](Checker& c, const CheckContext&) {
    RootDatum rd = bundled_root_datum("G2", 1);
    auto r = rho_coefficient(rd);
    c.expect_eq(r.c, Rat(3, 2), "c for G2/alpha2");
    c.expect_eq(modular_exponent(rd), Rat(3), "modular exponent for G2/alpha2");
    c.expect(r.c_alpha_inv.rows() == 1 && r.c_alpha_inv.at(0, 0) == Rat(1, 2),
             "Levi inverse Cartan is (1/2)", rat_to_string(r.c_alpha_inv.at(0, 0)), "");
  });

  add("rootdata", "a1_rho", [](Checker& c, const CheckContext&) {
    RootDatum rd = bundled_root_datum("A1", 0);
    c.expect_eq(rho_coefficient(rd).c, Rat(1), "c for A1 (empty sum)");
    c.expect_eq(modular_exponent(rd), Rat(2), "modular exponent for A1");
  });

  add("rootdata", "positivity_and_integrality", [](Checker& c, const CheckContext&) {
    for (const auto& type : bundled_root_datum_types()) {
      RootDatum rd = bundled_root_datum(type, 0);
      for (int a = 0; a < rd.cartan.rows(); ++a) {
        rd.selected = a;
        Rat cc = rho_coefficient(rd).c;
        c.expect(cc > 0, "c > 0 for " + type + "/alpha" + std::to_string(a + 1),
                 rat_to_string(cc), "");
      }
    }
    c.expect(is_integer(modular_exponent(bundled_root_datum("E6", 5))) &&
                 is_integer(modular_exponent(bundled_root_datum("G2", 1))),
             "2c integral for the simply-connected E6 and G2 cases", "not integral", "");
  });

  add("rootdata", "input_validation", [](Checker& c, const CheckContext&) {
    RootDatum bad;
    bad.cartan = Mat(2, 2);
    bad.cartan.at(0, 0) = 2;
    bad.cartan.at(1, 1) = 2;
    bad.cartan.at(0, 1) = -2;
    bad.cartan.at(1, 0) = -2;  // singular (affine A1)
    bad.labels = {"a", "b"};
    bad.selected = 0;
    bool threw = false;
    try {
      rho_coefficient(bad);
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    c.expect(threw, "singular Cartan matrix raises", "no error", "");
    bad.cartan.at(0, 1) = 1;
    threw = false;
    try {
      rho_coefficient(bad);
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    c.expect(threw, "positive off-diagonal entry raises", "no error", "");
  });

  return cs;
}

// ---------------------------------------------------------------------------
// Suite runner and reports.
// ---------------------------------------------------------------------------
struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  uint64_t seed = 0;
  int samples = 0;
  std::string version = toolkit_version();

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& r) { return r.pass; });
  }
};

inline std::vector<std::string> suite_names() {
  return {"octonion", "jordan", "e6", "orbits", "liealg", "rootdata"};
}

inline CheckResult run_one_check(const Check& check, const CheckContext& ctx) {
  Checker c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    check.run(c, ctx);
  } catch (const std::exception& e) {
    c.expect(false, "check completes without exceptions",
             std::string("exception: ") + e.what(), "");
  }
  auto t1 = std::chrono::steady_clock::now();
  CheckResult r;
  r.suite = check.suite;
  r.name = check.name;
  r.pass = c.pass();
  r.expected = c.expected();
  r.actual = c.actual();
  r.witness = c.witness();
  r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return r;
}

// Checks are independent and draw from per-name random streams, so they may
// run on any number of workers; the report ordering is canonical either way.
inline SuiteReport run_suite(const std::string& suite, const CheckContext& ctx) {
  auto names = suite_names();
  bool all = suite == "all";
  if (!all && std::find(names.begin(), names.end(), suite) == names.end())
    throw std::invalid_argument("unknown suite '" + suite + "'");
  SuiteReport report;
  report.suite = suite;
  report.seed = ctx.seed;
  report.samples = ctx.samples;
  std::vector<Check> selected;
  for (const auto& check : all_checks())
    if (all || check.suite == suite) selected.push_back(check);
  unsigned workers =
      std::min(ctx.workers ? ctx.workers : std::thread::hardware_concurrency(),
               unsigned(selected.size()));
  if (workers <= 1) {
    for (const auto& check : selected) report.checks.push_back(run_one_check(check, ctx));
  } else {
    // the shared caches are built up front so worker threads only read them
    (void)algebra_basis(AlgebraKind::e6);
    (void)lie_h_basis();
    (void)catalog();
    report.checks.resize(selected.size());
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (;;) {
          size_t i = next.fetch_add(1);
          if (i >= selected.size()) return;
          report.checks[i] = run_one_check(selected[i], ctx);
        }
      });
    for (auto& t : pool) t.join();
  }
  // canonical ordering regardless of execution order
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) {
              return a.suite != b.suite ? a.suite < b.suite : a.name < b.name;
            });
  return report;
}

inline nlohmann::json report_to_json(const SuiteReport& r) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  j["toolkit_version"] = r.version;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json jc;
    jc["suite"] = c.suite;
    jc["name"] = c.name;
    jc["status"] = c.pass ? "pass" : "fail";
    jc["expected"] = c.expected;
    jc["actual"] = c.actual;
    if (c.witness) jc["witness"] = *c.witness;
    jc["millis"] = c.millis;
    j["checks"].push_back(jc);
  }
  j["all_pass"] = r.all_pass();
  return j;
}

inline std::string report_to_text(const SuiteReport& r) {
  std::ostringstream out;
  out << "suite: " << r.suite << "  seed: " << r.seed << "  samples: " << r.samples
      << "  version: " << r.version << "\n";
  out << std::string(78, '-') << "\n";
  for (const auto& c : r.checks) {
    std::string name = c.suite + "/" + c.name;
    name.resize(52, ' ');
    std::string status = c.pass ? "pass" : "FAIL";
    out << name << " " << status << " " << std::setw(7) << c.millis << " ms\n";
    if (!c.pass) {
      out << "    expected: " << c.expected << "\n";
      out << "    actual:   " << c.actual << "\n";
      if (c.witness) out << "    witness:  " << *c.witness << "\n";
    }
  }
  out << std::string(78, '-') << "\n";
  int fails = 0;
  for (const auto& c : r.checks)
    if (!c.pass) ++fails;
  out << r.checks.size() << " checks, " << fails << " failures\n";
  return out.str();
}

}  // namespace exj

#endif
