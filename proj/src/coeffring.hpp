#ifndef LIEVEC_COEFFRING_HPP
#define LIEVEC_COEFFRING_HPP

#include "qlinalg.hpp"
#include "rational.hpp"

#include <compare>
#include <cstddef>
#include <vector>

namespace lievec {

/// Rational linear form <freq, x> used as an exp/trig frequency.
struct Frequency {
  QVec entries;

  explicit Frequency(std::size_t n = 0) : entries(n, Rat(0)) {}
  explicit Frequency(QVec e) : entries(std::move(e)) {}

  std::size_t arity() const { return entries.size(); }
  bool isZero() const { return isZeroVec(entries); }
  // lexicographic sign of the first nonzero entry; 0 for the zero form
  int lexSign() const;
  Frequency negated() const;
  Frequency plus(const Frequency &o) const;

  friend bool operator==(const Frequency &, const Frequency &) = default;
  std::strong_ordering operator<=>(const Frequency &o) const;
};

enum class TrigKind { None = 0, Cos = 1, Sin = 2 };

/// Canonical key (alpha, lambda, trigKind, mu) of a ring term.
struct TermKey {
  std::vector<unsigned> alpha; // monomial exponents
  Frequency expFreq;           // lambda, exp<lambda, x>
  TrigKind trig = TrigKind::None;
  Frequency trigFreq; // mu, zero-length when trig == None

  friend bool operator==(const TermKey &, const TermKey &) = default;
  std::strong_ordering operator<=>(const TermKey &o) const;
};

struct RingTerm {
  Rat coeff;
  TermKey key;

  friend bool operator==(const RingTerm &a, const RingTerm &b) {
    return a.coeff == b.coeff && a.key == b.key;
  }
};

/// Element of the differential ring of exponential-trigonometric-polynomial
/// functions in n variables, kept in canonical form: terms sorted by key, no
/// duplicate keys, no zero coefficients, trig frequencies lex-positive.
class ExpPoly {
public:
  explicit ExpPoly(std::size_t arity = 0) : arity_(arity) {}

  static ExpPoly zero(std::size_t n) { return ExpPoly(n); }
  static ExpPoly constant(std::size_t n, const Rat &c);
  static ExpPoly variable(std::size_t n, std::size_t i);
  static ExpPoly monomial(std::size_t n, const std::vector<unsigned> &alpha,
                          const Rat &c);
  static ExpPoly exponential(const Frequency &lambda);
  static ExpPoly cosine(const Frequency &mu);
  static ExpPoly sine(const Frequency &mu);
  // Single normalized term c * x^alpha * exp<lambda,x> * trig<mu,x>.
  static ExpPoly term(std::size_t n, const Rat &c,
                      const std::vector<unsigned> &alpha,
                      const Frequency &lambda, TrigKind trig,
                      const Frequency &mu);

  std::size_t arity() const { return arity_; }
  const std::vector<RingTerm> &terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }

  ExpPoly plus(const ExpPoly &o) const;
  ExpPoly minus(const ExpPoly &o) const;
  ExpPoly negated() const;
  ExpPoly times(const ExpPoly &o) const;
  ExpPoly scaled(const Rat &c) const;
  ExpPoly partial(std::size_t i) const;
  Rat evalOrigin() const;

  // Exact substitution x = B y for an invertible rational matrix B; the ring
  // is closed under linear coordinate changes.
  ExpPoly substituteLinear(const QMatrix &B) const;

  bool dependsOn(std::size_t i) const;

  // Restriction to a subset of the variables (indices to keep, in order);
  // requires independence of every dropped variable.
  ExpPoly restrictTo(const std::vector<std::size_t> &keepIdx) const;

  friend bool operator==(const ExpPoly &, const ExpPoly &) = default;

private:
  friend ExpPoly sumOfRawTerms(std::size_t, std::vector<RingTerm>);
  std::size_t arity_;
  std::vector<RingTerm> terms_;
};

/// Union of term keys across fs (canonical order) and the rational matrix
/// whose row r holds the coefficients of fs[r] on that key basis.
struct CoordinateBasis {
  std::vector<TermKey> keys;
  QMatrix matrix;
};
CoordinateBasis coordinateMatrix(const std::vector<ExpPoly> &fs);

} // namespace lievec

#endif
