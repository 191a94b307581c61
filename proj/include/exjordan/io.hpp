#ifndef EXJORDAN_IO_HPP
#define EXJORDAN_IO_HPP

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "exjordan/matrix.hpp"

namespace exj {

// Matrix document: {"rows": r, "cols": c, "entries": ["p/q", ...]} with the
// entries row-major and "/q" omitted when the denominator is 1. Subspace
// documents add "ambient" and a "basis" header naming the coordinate order.
inline nlohmann::json mat_to_json(const Mat& m) {
  nlohmann::json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  std::vector<std::string> entries;
  entries.reserve(size_t(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int c = 0; c < m.cols(); ++c) entries.push_back(rat_to_string(m.at(i, c)));
  j["entries"] = entries;
  return j;
}

inline Mat mat_from_json(const nlohmann::json& j) {
  int rows = j.at("rows").get<int>();
  int cols = j.at("cols").get<int>();
  const auto& entries = j.at("entries");
  if (int(entries.size()) != rows * cols)
    throw std::invalid_argument("matrix document: entries length != rows*cols");
  Mat m(rows, cols);
  int k = 0;
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c)
      m.at(i, c) = rat_from_string(entries[k++].get<std::string>());
  return m;
}

inline nlohmann::json subspace_to_json(const Subspace& s,
                                       const std::vector<std::string>& basis_names = {}) {
  nlohmann::json j = mat_to_json(s.basis());
  j["ambient"] = s.ambient();
  if (!basis_names.empty()) j["basis"] = basis_names;
  return j;
}

inline Subspace subspace_from_json(const nlohmann::json& j) {
  Mat m = mat_from_json(j);
  if (j.contains("ambient") && j.at("ambient").get<int>() != m.cols())
    throw std::invalid_argument("subspace document: ambient != cols");
  return Subspace(m);
}

inline nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

inline void save_json(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
}

// Fixed coordinate-order headers.
inline std::vector<std::string> theta_basis_names() {
  return {"eps1", "e1", "e2", "e3", "e1*", "e2*", "e3*", "eps2"};
}
inline std::vector<std::string> jordan_basis_names() {
  std::vector<std::string> n = {"c1", "c2", "c3"};
  for (int blk = 1; blk <= 3; ++blk)
    for (const auto& b : theta_basis_names()) n.push_back("a" + std::to_string(blk) + ":" + b);
  return n;
}

}  // namespace exj

#endif
