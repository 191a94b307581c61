#ifndef EXJORDAN_MATRIX_HPP
#define EXJORDAN_MATRIX_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "exjordan/rational.hpp"

namespace exj {

// Dense matrix of exact rationals, row-major. Vectors are rows throughout
// the library; linear maps act on the right (v -> v * M).
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  std::vector<Rat> row(int i) const {
    return std::vector<Rat>(a_.begin() + size_t(i) * cols_,
                            a_.begin() + size_t(i + 1) * cols_);
  }
  void set_row(int i, const std::vector<Rat>& r) {
    if (int(r.size()) != cols_) throw std::invalid_argument("set_row: size");
    std::copy(r.begin(), r.end(), a_.begin() + size_t(i) * cols_);
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rat& x) { return x == 0; });
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat::mul shape");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Rat& v = at(i, k);
        if (v == 0) continue;
        for (int j = 0; j < o.cols_; ++j) {
          const Rat& w = o.at(k, j);
          if (w != 0) r.at(i, j) += v * w;
        }
      }
    return r;
  }

  Mat operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("Mat::add shape");
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
  }
  Mat operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("Mat::sub shape");
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
  }
  Mat scaled(const Rat& s) const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
  }

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

inline std::vector<Rat> apply_row(const std::vector<Rat>& v, const Mat& m) {
  if (int(v.size()) != m.rows()) throw std::invalid_argument("apply: shape");
  std::vector<Rat> out(m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < m.cols(); ++j) {
      const Rat& w = m.at(i, j);
      if (w != 0) out[j] += v[i] * w;
    }
  }
  return out;
}

inline Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

struct RrefResult {
  Mat reduced;              // reduced row-echelon form, zero rows kept at bottom
  std::vector<int> pivots;  // pivot column of each nonzero row
};

inline RrefResult rref(Mat m) {
  RrefResult res;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
    Rat inv = 1 / m.at(r, c);
    for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.reduced = std::move(m);
  return res;
}

inline int rank(const Mat& m) { return int(rref(m).pivots.size()); }

// Fraction-free (Bareiss) determinant: row denominators cleared first so
// the elimination runs over integers; intermediate entries stay minors.
inline Rat det(const Mat& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("det: matrix must be square");
  int n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  mpz_class scale = 1;
  for (int i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < n; ++j) l = lcm(l, m.at(i, j).get_den());
    scale *= l;
    for (int j = 0; j < n; ++j) {
      Rat v = m.at(i, j) * Rat(l);
      a[i][j] = v.get_num();
    }
  }
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rat d(a[n - 1][n - 1] * sign, scale);
  d.canonicalize();
  return d;
}

struct BadPrimeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rank of m reduced mod p. Denominators must be invertible mod p.
inline int modular_rank(const Mat& m, uint64_t p) {
  if (p < 2 || p >= (uint64_t(1) << 31))
    throw std::invalid_argument("modular_rank: need 2 <= p < 2^31");
  auto inv_mod = [&](uint64_t x) {
    uint64_t r = 1, b = x % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  int R = m.rows(), C = m.cols();
  std::vector<std::vector<uint64_t>> a(R, std::vector<uint64_t>(C));
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < C; ++j) {
      const Rat& q = m.at(i, j);
      mpz_class num = q.get_num() % mpz_class(static_cast<unsigned long>(p));
      mpz_class den = q.get_den() % mpz_class(static_cast<unsigned long>(p));
      if (den == 0)
        throw BadPrimeError("modular_rank: denominator divisible by prime " +
                            std::to_string(p));
      uint64_t nu = mpz_class(num + static_cast<unsigned long>(p)).get_ui() % p;
      uint64_t de = den.get_ui() % p;
      a[i][j] = nu * inv_mod(de) % p;
    }
  int r = 0;
  for (int c = 0; c < C && r < R; ++c) {
    int piv = -1;
    for (int i = r; i < R; ++i)
      if (a[i][c]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    uint64_t inv = inv_mod(a[r][c]);
    for (int j = c; j < C; ++j) a[r][j] = a[r][j] * inv % p;
    for (int i = r + 1; i < R; ++i) {
      uint64_t f = a[i][c];
      if (!f) continue;
      for (int j = c; j < C; ++j) a[i][j] = (a[i][j] + (p - f) * a[r][j]) % p;
    }
    ++r;
  }
  return r;
}

namespace detail {

// Sparse exact elimination used for large kernel computations. Rows are
// kept as sorted (column, value) pairs.
using SparseRow = std::vector<std::pair<int, Rat>>;

inline SparseRow sparse_combine(const SparseRow& a, const Rat& f, const SparseRow& b) {
  // a - f*b
  SparseRow out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -f * b[j].second);
      ++j;
    } else {
      Rat v = a[i].second - f * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

struct SparseEchelon {
  std::map<int, SparseRow> pivot_rows;  // pivot column -> normalized row

  // Residual of r after full reduction against the current pivot rows.
  // Each combine clears one pivot-column entry and only touches later
  // columns, so the scan terminates.
  SparseRow reduce(SparseRow r) const {
    for (;;) {
      const std::pair<int, Rat>* hit = nullptr;
      for (const auto& e : r) {
        if (pivot_rows.count(e.first)) {
          hit = &e;
          break;
        }
      }
      if (!hit) return r;
      r = sparse_combine(r, hit->second, pivot_rows.at(hit->first));
    }
  }

  // Reduce r against current pivots; if a new pivot remains, install it and
  // return its column, otherwise return nullopt (r was dependent).
  std::optional<int> add_row(SparseRow r) {
    r = reduce(std::move(r));
    if (r.empty()) return std::nullopt;
    int lead = r.front().first;
    Rat inv = 1 / r.front().second;
    for (auto& e : r) e.second *= inv;
    // back-substitute into existing rows to keep the set fully reduced
    for (auto& [pc, prow] : pivot_rows) {
      (void)pc;
      Rat c = 0;
      for (auto& e : prow)
        if (e.first == lead) {
          c = e.second;
          break;
        }
      if (c != 0) prow = sparse_combine(prow, c, r);
    }
    pivot_rows.emplace(lead, std::move(r));
    return lead;
  }
};

}  // namespace detail

// Basis, in reduced echelon canonical form, of {v : v * m^T = 0}
// (row vectors of length cols(m) annihilated by every row of m).
// Systems above the large_threshold entry count run a sparse elimination:
// rows are reduced incrementally and dependent rows are only verified
// against the computed kernel, which certifies the result exactly.
inline Mat kernel_basis(const Mat& m) {
  const long large_threshold = 100000;
  int C = m.cols();
  std::vector<int> pivots;
  Mat reduced_rows(0, 0);

  auto kernel_from_echelon = [&](const std::vector<std::vector<Rat>>& rows,
                                 const std::vector<int>& pivs) {
    std::vector<bool> is_piv(C, false);
    for (int p : pivs) is_piv[p] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < C; ++c)
      if (!is_piv[c]) free_cols.push_back(c);
    Mat k(int(free_cols.size()), C);
    for (size_t fi = 0; fi < free_cols.size(); ++fi) {
      int fc = free_cols[fi];
      k.at(int(fi), fc) = 1;
      for (size_t r = 0; r < pivs.size(); ++r) k.at(int(fi), pivs[r]) = -rows[r][fc];
    }
    // rows are already in echelon form w.r.t. the free columns; canonicalize
    auto rr = rref(k);
    Mat out(int(rr.pivots.size()), C);
    for (int i = 0; i < out.rows(); ++i) out.set_row(i, rr.reduced.row(i));
    return out;
  };

  if (long(m.rows()) * m.cols() <= large_threshold) {
    auto rr = rref(m);
    std::vector<std::vector<Rat>> rows;
    for (size_t r = 0; r < rr.pivots.size(); ++r) rows.push_back(rr.reduced.row(int(r)));
    return kernel_from_echelon(rows, rr.pivots);
  }

  // Large path: exact sparse elimination, processing rows once and
  // verifying the dependent ones against the resulting kernel.
  detail::SparseEchelon ech;
  std::vector<int> dependent;
  for (int i = 0; i < m.rows(); ++i) {
    detail::SparseRow r;
    for (int j = 0; j < C; ++j)
      if (m.at(i, j) != 0) r.emplace_back(j, m.at(i, j));
    if (!ech.add_row(std::move(r))) dependent.push_back(i);
  }
  std::vector<int> pivs;
  std::vector<std::vector<Rat>> rows;
  for (auto& [pc, prow] : ech.pivot_rows) {
    pivs.push_back(pc);
    std::vector<Rat> dense(C);
    for (auto& e : prow) dense[e.first] = e.second;
    rows.push_back(std::move(dense));
  }
  Mat K = kernel_from_echelon(rows, pivs);
  // Exact certificate: every dependent row annihilates the kernel.
  for (int i : dependent) {
    for (int k = 0; k < K.rows(); ++k) {
      Rat s = 0;
      for (int j = 0; j < C; ++j)
        if (m.at(i, j) != 0) s += m.at(i, j) * K.at(k, j);
      if (s != 0)
        throw std::logic_error("kernel_basis: sparse elimination certificate failed");
    }
  }
  return K;
}

// Row space of m in reduced echelon canonical form; the canonical
// representation of a rational subspace. Equality of subspaces is exact
// equality of these matrices.
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  explicit Subspace(const Mat& spanning_rows) : ambient_(spanning_rows.cols()) {
    auto rr = rref(spanning_rows);
    basis_ = Mat(int(rr.pivots.size()), ambient_);
    for (int i = 0; i < basis_.rows(); ++i) basis_.set_row(i, rr.reduced.row(i));
    pivots_ = rr.pivots;
  }

  static Subspace zero(int ambient) { return Subspace(Mat(0, ambient)); }
  static Subspace full(int ambient) { return Subspace(Mat::identity(ambient)); }
  static Subspace span_of(const std::vector<std::vector<Rat>>& rows, int ambient) {
    Mat m(int(rows.size()), ambient);
    for (size_t i = 0; i < rows.size(); ++i) m.set_row(int(i), rows[i]);
    return Subspace(m);
  }

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  // Residual of v after reduction by the echelon basis; zero iff v lies in
  // the subspace. The residual's coordinates are exact linear functionals
  // of v vanishing precisely on the subspace.
  std::vector<Rat> residual(std::vector<Rat> v) const {
    for (int r = 0; r < basis_.rows(); ++r) {
      Rat c = v[pivots_[r]];
      if (c == 0) continue;
      for (int j = 0; j < ambient_; ++j) v[j] -= c * basis_.at(r, j);
    }
    return v;
  }

  bool contains(const std::vector<Rat>& v) const {
    auto r = residual(v);
    return std::all_of(r.begin(), r.end(), [](const Rat& x) { return x == 0; });
  }
  bool contains(const Subspace& o) const {
    for (int i = 0; i < o.dim(); ++i)
      if (!contains(o.basis().row(i))) return false;
    return true;
  }

  friend Subspace sum(const Subspace& a, const Subspace& b) {
    Mat m(a.dim() + b.dim(), a.ambient_);
    for (int i = 0; i < a.dim(); ++i) m.set_row(i, a.basis_.row(i));
    for (int i = 0; i < b.dim(); ++i) m.set_row(a.dim() + i, b.basis_.row(i));
    return Subspace(m);
  }

  friend Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.dim() == 0 || b.dim() == 0) return zero(a.ambient_);
    // solve x*A - y*B = 0 over stacked coefficients
    Mat sys(a.ambient_, a.dim() + b.dim());
    for (int j = 0; j < a.ambient_; ++j) {
      for (int i = 0; i < a.dim(); ++i) sys.at(j, i) = a.basis_.at(i, j);
      for (int i = 0; i < b.dim(); ++i) sys.at(j, a.dim() + i) = -b.basis_.at(i, j);
    }
    Mat K = kernel_basis(sys);
    Mat rows(K.rows(), a.ambient_);
    for (int k = 0; k < K.rows(); ++k)
      for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.ambient_; ++j)
          rows.at(k, j) += K.at(k, i) * a.basis_.at(i, j);
    return Subspace(rows);
  }

  // Image under a right-acting matrix.
  Subspace image(const Mat& m) const { return Subspace(basis_ * m); }

 private:
  int ambient_;
  Mat basis_;
  std::vector<int> pivots_;
};

}  // namespace exj

#endif
