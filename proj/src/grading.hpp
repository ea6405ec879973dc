#ifndef LIEVEC_GRADING_HPP
#define LIEVEC_GRADING_HPP

#include "liealg.hpp"

#include <cstdint>
#include <map>

namespace lievec {

/// Non-negative integer weights per coordinate; induces degrees
/// deg(x^a d_i) = <w, a> - w_i on monomial fields.
struct Dilation {
  VarContext context;
  std::vector<unsigned> weights;

  unsigned maxWeight() const; // w(h)
  bool allPositive() const;
  bool anyPositive() const;
};

// nabla^h = sum_i w_i x^i d_i
VectorField weightField(const Dilation &h);

struct GradedDecomposition {
  std::map<long, VectorField> parts; // degree -> homogeneous part
  long maxDegree(long whenEmpty) const;
};

// Splits X by degree. NotGradable when an exp/trig frequency touches a
// positively-weighted variable.
GradedDecomposition degreeDecompose(const VectorField &X, const Dilation &h);

enum class MembershipMode { NonPositive, StrictlyNegative };

struct MembershipReport {
  bool holds = true;
  // per input field: its per-degree dimensions... max degree; fields with no
  // terms carry no entry
  std::vector<std::map<long, VectorField>> decompositions;
  std::vector<std::optional<long>> maxDegrees;
  std::optional<long> overallMax;
};

MembershipReport membership(const std::vector<VectorField> &fields,
                            const Dilation &h, MembershipMode mode);

struct GradedGenerators {
  std::vector<VectorField> generators;
  // true when zero-weight variables exist: the list generates g^a as a
  // module over functions of those variables rather than a plain span
  bool moduleOverZeroWeightFunctions = false;
};

// Monomial generators of g^a(h) for a < 0; DegreeOutOfRange when a < -w(h).
GradedGenerators enumerateGraded(const Dilation &h, long degree);

struct RandomSolvableParams {
  Rat density = Rat(1, 2);
  std::size_t cap = LieAlgebra::kDefaultCap;
};

// Deterministic per seed: a transitive solvable algebra D + N with D picked
// from the commuting degree-0 diagonal fields and N bracket-generated from
// a random subset of the graded generators.
LieAlgebra randomSolvable(const Dilation &h, std::uint64_t seed,
                          const RandomSolvableParams &params = {});

} // namespace lievec

#endif
