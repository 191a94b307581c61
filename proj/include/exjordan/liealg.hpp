#ifndef EXJORDAN_LIEALG_HPP
#define EXJORDAN_LIEALG_HPP

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "exjordan/e6ops.hpp"
#include "exjordan/rng.hpp"

namespace exj {

enum class AlgebraKind { g2_derivations, e6, n_radical };

inline std::string algebra_kind_name(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::g2_derivations: return "g2_derivations";
    case AlgebraKind::e6: return "e6";
    case AlgebraKind::n_radical: return "n_radical";
  }
  return "?";
}

struct LieAlgebraBasis {
  AlgebraKind kind;
  int ambient = 0;  // 8 or 27
  std::vector<Mat> basis;
  int dim() const { return int(basis.size()); }

  // Coordinates of a flattened operator in the echelon span; nullopt when
  // the operator is outside the span.
  const Subspace& flat_span() const { return flat_span_; }
  void finalize() {
    std::vector<std::vector<Rat>> rows;
    for (const auto& b : basis) rows.push_back(flatten(b));
    flat_span_ = Subspace::span_of(rows, ambient * ambient);
  }
  bool contains(const Mat& op) const { return flat_span_.contains(flatten(op)); }

  static std::vector<Rat> flatten(const Mat& m) {
    std::vector<Rat> v;
    v.reserve(size_t(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
  }

 private:
  Subspace flat_span_;
};

inline Mat bracket(const Mat& a, const Mat& b) { return a * b - b * a; }

namespace detail {

// Derivations of Theta: D with (xy).D = (x.D)y + x(y.D), solved exactly on
// basis pairs. 512 scalar equations in 64 unknowns.
inline LieAlgebraBasis compute_g2_derivations() {
  Mat sys(8 * 8 * 8, 64);
  int r = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      Octonion prod = zorn_mul(Octonion::basis(i), Octonion::basis(j));
      for (int k = 0; k < 8; ++k) {
        for (int s = 0; s < 8; ++s) {
          sys.at(r, i * 8 + s) += zorn_mul(Octonion::basis(s), Octonion::basis(j)).c[k];
          sys.at(r, j * 8 + s) += zorn_mul(Octonion::basis(i), Octonion::basis(s)).c[k];
        }
        for (int t = 0; t < 8; ++t) sys.at(r, t * 8 + k) -= prod.c[t];
        ++r;
      }
    }
  Mat K = kernel_basis(sys);
  LieAlgebraBasis out;
  out.kind = AlgebraKind::g2_derivations;
  out.ambient = 8;
  for (int b = 0; b < K.rows(); ++b) {
    Mat d(8, 8);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) d.at(i, j) = K.at(b, i * 8 + j);
    out.basis.push_back(d);
  }
  out.finalize();
  return out;
}

// Lie(E6): operators f with (f(x),y,z) + (x,f(y),z) + (x,y,f(z)) = 0.
// 3654 symmetric-triple constraints in 729 unknowns; the system is very
// sparse and goes through the certified sparse kernel path.
inline LieAlgebraBasis compute_e6() {
  // paired cross tensor rows: T(., j, k)
  std::vector<std::vector<Rat>> pcr(27 * 27);
  for (int j = 0; j < 27; ++j)
    for (int k = j; k < 27; ++k) {
      JordanElement cr = cross(JordanElement::basis(j), JordanElement::basis(k));
      pcr[j * 27 + k] = apply_row(cr.to_row(), jpairing_gram());
    }
  auto tvec = [&](int j, int k) -> const std::vector<Rat>& {
    return j <= k ? pcr[j * 27 + k] : pcr[k * 27 + j];
  };
  int nrows = 0;
  for (int i = 0; i < 27; ++i)
    for (int j = i; j < 27; ++j)
      for (int k = j; k < 27; ++k) ++nrows;
  Mat sys(nrows, 729);
  int r = 0;
  for (int i = 0; i < 27; ++i)
    for (int j = i; j < 27; ++j)
      for (int k = j; k < 27; ++k) {
        for (int s = 0; s < 27; ++s) {
          const Rat& c1 = tvec(j, k)[s];
          if (c1 != 0) sys.at(r, i * 27 + s) += c1;
          const Rat& c2 = tvec(i, k)[s];
          if (c2 != 0) sys.at(r, j * 27 + s) += c2;
          const Rat& c3 = tvec(i, j)[s];
          if (c3 != 0) sys.at(r, k * 27 + s) += c3;
        }
        ++r;
      }
  Mat K = kernel_basis(sys);
  LieAlgebraBasis out;
  out.kind = AlgebraKind::e6;
  out.ambient = 27;
  for (int b = 0; b < K.rows(); ++b) {
    Mat f(27, 27);
    for (int i = 0; i < 27; ++i)
      for (int j = 0; j < 27; ++j) f.at(i, j) = K.at(b, i * 27 + j);
    out.basis.push_back(f);
  }
  out.finalize();
  return out;
}

// Lie algebra of the unipotent radical N: span of the generators
// Phi'_{Y(0,y,z), e33} and Phi'_{e11, Y(x,0,z)} over basis parameters.
inline LieAlgebraBasis compute_n_radical() {
  std::vector<Mat> gens;
  for (int i = 0; i < 8; ++i) {
    Octonion o = Octonion::basis(i);
    gens.push_back(phi_prime(
        JordanElement::off_diagonal(Octonion::zero(), o, Octonion::zero()),
        JordanElement::e33()));
    gens.push_back(phi_prime(
        JordanElement::off_diagonal(Octonion::zero(), Octonion::zero(), o),
        JordanElement::e33()));
    gens.push_back(phi_prime(
        JordanElement::e11(),
        JordanElement::off_diagonal(o, Octonion::zero(), Octonion::zero())));
    gens.push_back(phi_prime(
        JordanElement::e11(),
        JordanElement::off_diagonal(Octonion::zero(), Octonion::zero(), o)));
  }
  std::vector<std::vector<Rat>> rows;
  for (const auto& g : gens) rows.push_back(LieAlgebraBasis::flatten(g));
  Subspace span = Subspace::span_of(rows, 729);
  LieAlgebraBasis out;
  out.kind = AlgebraKind::n_radical;
  out.ambient = 27;
  for (int b = 0; b < span.dim(); ++b) {
    Mat f(27, 27);
    for (int i = 0; i < 27; ++i)
      for (int j = 0; j < 27; ++j) f.at(i, j) = span.basis().at(b, i * 27 + j);
    out.basis.push_back(f);
  }
  out.finalize();
  return out;
}

}  // namespace detail

// Cached exact bases; computed once behind a lock, read-only afterwards.
inline const LieAlgebraBasis& algebra_basis(AlgebraKind kind) {
  static std::mutex mu;
  static std::map<AlgebraKind, LieAlgebraBasis> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(kind);
  if (it != cache.end()) return it->second;
  LieAlgebraBasis b;
  switch (kind) {
    case AlgebraKind::g2_derivations: b = detail::compute_g2_derivations(); break;
    case AlgebraKind::e6: b = detail::compute_e6(); break;
    case AlgebraKind::n_radical: b = detail::compute_n_radical(); break;
  }
  return cache.emplace(kind, std::move(b)).first->second;
}

// The raw constraint matrix of the e6 solve, exposed for modular-rank
// cross-checks of the kernel dimension.
inline Mat e6_constraint_matrix() {
  std::vector<std::vector<Rat>> pcr(27 * 27);
  for (int j = 0; j < 27; ++j)
    for (int k = j; k < 27; ++k) {
      JordanElement cr = cross(JordanElement::basis(j), JordanElement::basis(k));
      pcr[j * 27 + k] = apply_row(cr.to_row(), jpairing_gram());
    }
  auto tvec = [&](int j, int k) -> const std::vector<Rat>& {
    return j <= k ? pcr[j * 27 + k] : pcr[k * 27 + j];
  };
  Mat sys(3654, 729);
  int r = 0;
  for (int i = 0; i < 27; ++i)
    for (int j = i; j < 27; ++j)
      for (int k = j; k < 27; ++k) {
        for (int s = 0; s < 27; ++s) {
          if (tvec(j, k)[s] != 0) sys.at(r, i * 27 + s) += tvec(j, k)[s];
          if (tvec(i, k)[s] != 0) sys.at(r, j * 27 + s) += tvec(i, k)[s];
          if (tvec(i, j)[s] != 0) sys.at(r, k * 27 + s) += tvec(i, j)[s];
        }
        ++r;
      }
  return sys;
}

// {f in span(ambient) : v.f is contained in v}, solved exactly through the
// residual functionals of the canonical complement.
struct StabilizerResult {
  int dim = 0;
  std::vector<Mat> basis;  // operators in the ambient span
};

inline StabilizerResult stabilizer_subalgebra(const Subspace& v,
                                              const std::vector<Mat>& ambient_ops) {
  int n = int(ambient_ops.size());
  StabilizerResult out;
  if (n == 0) return out;
  int amb = ambient_ops[0].rows();
  Mat sys(v.dim() * amb, n);
  int r = 0;
  for (int b = 0; b < v.dim(); ++b) {
    std::vector<Rat> row = v.basis().row(b);
    for (int k = 0; k < n; ++k) {
      auto img = v.residual(apply_row(row, ambient_ops[k]));
      for (int c = 0; c < amb; ++c) sys.at(r + c, k) = img[c];
    }
    r += amb;
  }
  Mat K = kernel_basis(sys);
  out.dim = K.rows();
  for (int b = 0; b < K.rows(); ++b) {
    Mat op(amb, amb);
    for (int k = 0; k < n; ++k)
      if (K.at(b, k) != 0) op = op + ambient_ops[k].scaled(K.at(b, k));
    out.basis.push_back(op);
  }
  return out;
}

// Pointwise-fixing variant: {f : v.f = 0}.
inline StabilizerResult fixing_subalgebra(const Subspace& v,
                                          const std::vector<Mat>& ambient_ops) {
  int n = int(ambient_ops.size());
  StabilizerResult out;
  if (n == 0) return out;
  int amb = ambient_ops[0].rows();
  Mat sys(v.dim() * amb, n);
  int r = 0;
  for (int b = 0; b < v.dim(); ++b) {
    std::vector<Rat> row = v.basis().row(b);
    for (int k = 0; k < n; ++k) {
      auto img = apply_row(row, ambient_ops[k]);
      for (int c = 0; c < amb; ++c) sys.at(r + c, k) = img[c];
    }
    r += amb;
  }
  Mat K = kernel_basis(sys);
  out.dim = K.rows();
  for (int b = 0; b < K.rows(); ++b) {
    Mat op(amb, amb);
    for (int k = 0; k < n; ++k)
      if (K.at(b, k) != 0) op = op + ambient_ops[k].scaled(K.at(b, k));
    out.basis.push_back(op);
  }
  return out;
}

// Lie(H) = embedded Lie(G2) + Lie(N) inside gl(J); 14 + 24 = 38 with zero
// intersection.
inline const std::vector<Mat>& lie_h_basis() {
  static const std::vector<Mat> ops = [] {
    std::vector<Mat> out;
    for (const auto& d : algebra_basis(AlgebraKind::g2_derivations).basis)
      out.push_back(g2_embed_derivation(d));
    for (const auto& f : algebra_basis(AlgebraKind::n_radical).basis) out.push_back(f);
    return out;
  }();
  return ops;
}

// dim Lie(H) - dim of the stabilizer subalgebra of the representative;
// bounded by the flag variety dimension 21 = 78 - 57.
inline int orbit_dimension(const Subspace& rep) {
  return int(lie_h_basis().size()) - stabilizer_subalgebra(rep, lie_h_basis()).dim;
}

// ---------------------------------------------------------------------------
// G2 group elements: root vectors of the derivation algebra with respect to
// the SL3 torus, exponentiated. The two diagonal derivations below span a
// Cartan subalgebra; nonzero joint weights give nilpotent root vectors.
// ---------------------------------------------------------------------------
namespace detail {

inline Mat diag_derivation(const std::array<int, 8>& w) {
  Mat d(8, 8);
  for (int i = 0; i < 8; ++i) d.at(i, i) = w[i];
  return d;
}

inline std::vector<Mat> compute_g2_root_vectors() {
  const auto& g2 = algebra_basis(AlgebraKind::g2_derivations);
  Mat d1 = diag_derivation({0, 1, 0, -1, -1, 0, 1, 0});
  Mat d2 = diag_derivation({0, 0, 1, -1, 0, -1, 1, 0});
  if (!g2.contains(d1) || !g2.contains(d2))
    throw std::logic_error("g2 root vectors: torus derivations missing");
  // matrices of ad(d1), ad(d2) in the 14-dim coordinates
  auto coords = [&](const Mat& op) {
    auto flat = LieAlgebraBasis::flatten(op);
    // solve against the echelon basis rows by pivot readoff
    const Subspace& s = g2.flat_span();
    std::vector<Rat> c(s.dim());
    std::vector<Rat> v = flat;
    for (int r = 0; r < s.dim(); ++r) {
      c[r] = v[s.pivots()[r]];
      if (c[r] == 0) continue;
      for (int j = 0; j < s.ambient(); ++j) v[j] -= c[r] * s.basis().at(r, j);
    }
    for (const auto& x : v)
      if (x != 0) throw std::logic_error("g2 root vectors: not in span");
    return c;
  };
  int n = g2.dim();
  Mat ad1(n, n), ad2(n, n);
  for (int i = 0; i < n; ++i) {
    auto c1 = coords(bracket(g2.basis[i], d1));
    auto c2 = coords(bracket(g2.basis[i], d2));
    for (int j = 0; j < n; ++j) {
      ad1.at(i, j) = c1[j];
      ad2.at(i, j) = c2[j];
    }
  }
  std::vector<Mat> roots;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      if (a == 0 && b == 0) continue;
      // v with v*ad1 = a v and v*ad2 = b v
      Mat sys(2 * n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          sys.at(i, j) = ad1.at(j, i) - (i == j ? Rat(a) : Rat(0));
          sys.at(n + i, j) = ad2.at(j, i) - (i == j ? Rat(b) : Rat(0));
        }
      Mat K = kernel_basis(sys);
      for (int r = 0; r < K.rows(); ++r) {
        Mat op(8, 8);
        for (int k = 0; k < n; ++k)
          if (K.at(r, k) != 0) op = op + g2.basis[k].scaled(K.at(r, k));
        // clear denominators for nicer entries
        mpz_class l = 1;
        for (int i = 0; i < 8; ++i)
          for (int j = 0; j < 8; ++j) l = lcm(l, op.at(i, j).get_den());
        op = op.scaled(Rat(l));
        Mat pw = op;
        int deg = 1;
        while (!pw.is_zero() && deg <= 8) {
          pw = pw * op;
          ++deg;
        }
        if (!pw.is_zero()) throw std::logic_error("g2 root vector not nilpotent");
        roots.push_back(op);
      }
    }
  if (roots.size() != 12) throw std::logic_error("expected 12 g2 root vectors");
  return roots;
}

}  // namespace detail

inline const std::vector<Mat>& g2_root_vectors() {
  static const std::vector<Mat> roots = detail::compute_g2_root_vectors();
  return roots;
}

// Exponential of a nilpotent 8x8 derivation; always an automorphism.
inline Mat exp_derivation(const Mat& d) {
  Mat out = Mat::identity(8);
  Mat term = Mat::identity(8);
  Rat fact = 1;
  for (int k = 1; k <= 9; ++k) {
    term = term * d;
    if (term.is_zero()) return out;
    fact *= k;
    out = out + term.scaled(1 / fact);
  }
  throw std::invalid_argument("exp_derivation: input is not nilpotent");
}

// A pseudorandom product of root-vector exponentials: a generated element
// of G2(Q), certified an automorphism on construction by g2_embed callers.
inline Mat random_g2_element(Rng& rng, int factors = 3) {
  const auto& roots = g2_root_vectors();
  Mat out = Mat::identity(8);
  for (int i = 0; i < factors; ++i) {
    const Mat& r = roots[size_t(rng.uniform(0, int(roots.size()) - 1))];
    long t = rng.uniform(-2, 2);
    out = out * exp_derivation(r.scaled(Rat(t)));
  }
  return out;
}

}  // namespace exj

#endif
