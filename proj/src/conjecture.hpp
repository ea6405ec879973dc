#ifndef LIEVEC_CONJECTURE_HPP
#define LIEVEC_CONJECTURE_HPP

#include "pipeline.hpp"

namespace lievec {

/// Minimal linear recurrence sum_s c_s d^s f / d(x^i)^s = 0 satisfied by
/// every member of a coefficient family; c is monic in the top term.
struct Recurrence {
  std::size_t direction = 0;
  std::vector<ExpPoly> family;
  std::vector<Rat> coefficients; // c_0 .. c_p, c_p = 1
  std::size_t order() const { return coefficients.size() - 1; }
};

// Stacks coordinate rows of the derivative family until the rank stops
// growing; the kernel vector of the first dependent row is the minimal
// recurrence. bound 0 means: derive a bound from the family's finite key
// closure. BoundExceeded when the rank still grows at the bound.
Recurrence iteratedDerivativeRecurrence(const std::vector<ExpPoly> &family,
                                        std::size_t direction,
                                        std::size_t bound = 0);

using QPoly = std::vector<Rat>; // coefficients, ascending degree

struct SpectrumReport {
  QPoly charPoly; // monic
  // resolved structure
  unsigned zeroRootMultiplicity = 0;
  std::vector<std::pair<Rat, unsigned>> rationalRoots; // nonzero, with mult
  // (a, b): roots a +- b i realized as exp(a x) cos(b x), exp(a x) sin(b x)
  std::vector<std::pair<std::pair<Rat, Rat>, unsigned>> complexPairs;
  std::vector<QPoly> unresolved; // leftover factors of degree >= 1

  bool fullyResolved() const { return unresolved.empty(); }
};

// Factors the characteristic polynomial: zero roots, rational roots, and
// quadratic factors (t - a)^2 + b^2 suggested by the family's frequencies.
// Degree >= 3 leftovers (or quadratics with irrational parts) stay
// unresolved; that downgrades the verdict, it is not an error.
SpectrumReport spectrum(const Recurrence &rec);

struct LieWitness {
  enum class Verdict { Witnessed, WitnessedWithUnresolvedFactors, Failed };
  Verdict verdict = Verdict::Failed;
  std::string note;

  std::vector<std::string> coordinateGenerators;
  // printable generators such as exp(x), exp(2*x), sin(x), cos(x)
  std::vector<std::string> exponentialGenerators;

  struct DirectionReport {
    std::string variable;
    std::size_t direction = 0;
    Recurrence recurrence;
    SpectrumReport spectrum;
  };
  std::vector<DirectionReport> perDirection;

  struct Receipt {
    std::size_t familyIndex = 0;
    std::string coefficient;  // canonical text
    bool covered = false;     // every signature matched a realized root
  };
  std::vector<Receipt> receipts;
};

// Verifies that all coefficients of the normalized basis lie in the algebra
// generated by the coordinates and the realized exp/trig generators.
// NotCertified when the certificate is not certified.
LieWitness lieWitness(const NormalizationCertificate &cert);

} // namespace lievec

#endif
