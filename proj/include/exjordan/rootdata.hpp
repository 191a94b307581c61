#ifndef EXJORDAN_ROOTDATA_HPP
#define EXJORDAN_ROOTDATA_HPP

#include <map>
#include <string>
#include <vector>

#include "exjordan/matrix.hpp"

namespace exj {

// A Cartan matrix C_{ij} = <alpha_i, alpha_j^v> with simple-root labels and
// a selected root defining a maximal parabolic.
struct RootDatum {
  Mat cartan;                       // n x n integers
  std::vector<std::string> labels;  // size n
  int selected = 0;                 // index of alpha in 0..n-1

  void validate() const {
    int n = cartan.rows();
    if (cartan.cols() != n || n == 0)
      throw std::invalid_argument("RootDatum: Cartan matrix must be square and nonempty");
    if (int(labels.size()) != n) throw std::invalid_argument("RootDatum: labels size");
    if (selected < 0 || selected >= n)
      throw std::invalid_argument("RootDatum: selected root out of range");
    for (int i = 0; i < n; ++i) {
      if (cartan.at(i, i) != 2)
        throw std::invalid_argument("RootDatum: diagonal entries must be 2");
      for (int j = 0; j < n; ++j) {
        if (!is_integer(cartan.at(i, j)))
          throw std::invalid_argument("RootDatum: entries must be integers");
        if (i != j && cartan.at(i, j) > 0)
          throw std::invalid_argument("RootDatum: off-diagonal entries must be <= 0");
        if ((cartan.at(i, j) == 0) != (cartan.at(j, i) == 0))
          throw std::invalid_argument("RootDatum: zero pattern must be symmetric");
      }
    }
    if (det(cartan) == 0)
      throw std::invalid_argument("RootDatum: singular Cartan matrix (not finite type)");
  }
};

struct RhoResult {
  Rat c;            // rho_P = c * fundamental weight of the selected root
  Mat c_alpha_inv;  // inverse of the Cartan matrix with the selected row/column removed
  Mat v_alpha;      // column vector of coroot coefficients a_{gamma^v}
};

// Decompose the selected coroot against the Levi coroots:
// v = C_alpha^{-1} w with w_gamma = <gamma, alpha^v>, then c = 1 - sum(v).
inline RhoResult rho_coefficient(const RootDatum& rd) {
  rd.validate();
  int n = rd.cartan.rows();
  int a = rd.selected;
  Mat ca(n - 1, n - 1);
  Mat w(n - 1, 1);
  int r = 0;
  for (int i = 0; i < n; ++i) {
    if (i == a) continue;
    int cidx = 0;
    for (int j = 0; j < n; ++j) {
      if (j == a) continue;
      ca.at(r, cidx++) = rd.cartan.at(i, j);
    }
    w.at(r, 0) = rd.cartan.at(i, a);
    ++r;
  }
  RhoResult out;
  if (n == 1) {
    out.c_alpha_inv = Mat(0, 0);
    out.v_alpha = Mat(0, 1);
    out.c = 1;  // empty sum
    return out;
  }
  if (det(ca) == 0)
    throw std::invalid_argument("rho_coefficient: singular Levi Cartan matrix");
  // solve ca * v = w exactly
  Mat aug(n - 1, n);
  for (int i = 0; i < n - 1; ++i) {
    for (int j = 0; j < n - 1; ++j) aug.at(i, j) = ca.at(i, j);
    aug.at(i, n - 1) = w.at(i, 0);
  }
  auto rr = rref(aug);
  Mat v(n - 1, 1);
  for (size_t k = 0; k < rr.pivots.size(); ++k) v.at(rr.pivots[k], 0) = rr.reduced.at(int(k), n - 1);
  Rat s = 0;
  for (int i = 0; i < n - 1; ++i) s += v.at(i, 0);
  out.c = 1 - s;
  out.v_alpha = v;
  // expose the inverse for inspection
  Mat aug2(n - 1, 2 * (n - 1));
  for (int i = 0; i < n - 1; ++i) {
    for (int j = 0; j < n - 1; ++j) aug2.at(i, j) = ca.at(i, j);
    aug2.at(i, n - 1 + i) = 1;
  }
  auto rr2 = rref(aug2);
  out.c_alpha_inv = Mat(n - 1, n - 1);
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n - 1; ++j) out.c_alpha_inv.at(i, j) = rr2.reduced.at(i, n - 1 + j);
  return out;
}

// Exponent of the modular character along the fundamental weight: 2c.
inline Rat modular_exponent(const RootDatum& rd) { return rho_coefficient(rd).c * 2; }

// Bundled Cartan matrices. E6 uses the numbering with the branch node
// alpha6 attached to alpha3; otherwise the usual chain and D4 conventions.
inline RootDatum bundled_root_datum(const std::string& type, int selected) {
  auto chain = [](int n) {
    Mat c(n, n);
    for (int i = 0; i < n; ++i) {
      c.at(i, i) = 2;
      if (i + 1 < n) {
        c.at(i, i + 1) = -1;
        c.at(i + 1, i) = -1;
      }
    }
    return c;
  };
  RootDatum rd;
  rd.selected = selected;
  if (type.size() == 2 && type[0] == 'A' && type[1] >= '1' && type[1] <= '5') {
    int n = type[1] - '0';
    rd.cartan = chain(n);
  } else if (type == "G2") {
    rd.cartan = Mat(2, 2);
    rd.cartan.at(0, 0) = 2;
    rd.cartan.at(0, 1) = -1;
    rd.cartan.at(1, 0) = -3;
    rd.cartan.at(1, 1) = 2;
  } else if (type == "D4") {
    rd.cartan = Mat(4, 4);
    for (int i = 0; i < 4; ++i) rd.cartan.at(i, i) = 2;
    for (int leaf : {0, 2, 3}) {
      rd.cartan.at(leaf, 1) = -1;
      rd.cartan.at(1, leaf) = -1;
    }
  } else if (type == "E6") {
    rd.cartan = chain(5);
    Mat c(6, 6);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) c.at(i, j) = rd.cartan.at(i, j);
    c.at(5, 5) = 2;
    c.at(2, 5) = -1;
    c.at(5, 2) = -1;
    rd.cartan = c;
  } else {
    throw std::invalid_argument("bundled_root_datum: unknown type " + type);
  }
  for (int i = 0; i < rd.cartan.rows(); ++i)
    rd.labels.push_back("alpha" + std::to_string(i + 1));
  rd.validate();
  return rd;
}

inline std::vector<std::string> bundled_root_datum_types() {
  return {"A1", "A2", "A3", "A4", "A5", "G2", "D4", "E6"};
}

}  // namespace exj

#endif
