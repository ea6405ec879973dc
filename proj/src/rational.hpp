#ifndef LIEVEC_RATIONAL_HPP
#define LIEVEC_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace lievec {

// All scalar arithmetic in this project is exact. mpq_class keeps values
// canonicalized (reduced, positive denominator), so equality is plain ==.
using Rat = mpq_class;

inline bool isZero(const Rat &q) { return sgn(q) == 0; }

// Parses "p", "-p" or "p/q" with q > 0.
inline Rat parseRat(const std::string &s) {
  if (s.empty())
    throw std::invalid_argument("empty rational literal");
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (sgn(q.get_den()) <= 0 && s.find('/') != std::string::npos)
    throw std::invalid_argument("denominator must be positive: " + s);
  q.canonicalize();
  return q;
}

// "p" when integral, "p/q" otherwise; used for all serialized scalars.
inline std::string ratStr(const Rat &q) { return q.get_str(); }

} // namespace lievec

#endif
