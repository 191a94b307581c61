#ifndef EXJORDAN_RATIONAL_HPP
#define EXJORDAN_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace exj {

// Exact rational scalar. mpq_class keeps values in lowest terms with a
// positive denominator as long as every value is built through the helpers
// below (raw mpq_class(n, d) does not canonicalize on its own).
using Rat = mpq_class;

inline Rat rat(long n, long d = 1) {
  if (d == 0) throw std::invalid_argument("rat: zero denominator");
  Rat q(n, d);
  q.canonicalize();
  return q;
}

inline Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("rat_from_string: cannot parse '" + s + "'");
  q.canonicalize();
  return q;
}

// "p/q" with "/q" omitted when q = 1.
inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline long rat_sign(const Rat& q) { return sgn(q); }

inline Rat rat_abs(const Rat& q) { return abs(q); }

}  // namespace exj

#endif
