#ifndef LIEVEC_LIEALG_HPP
#define LIEVEC_LIEALG_HPP

#include "vfield.hpp"

#include <optional>
#include <vector>

namespace lievec {

/// Abstract structure constants: c[i][j] holds the coordinates of [e_i, e_j].
struct StructureTensor {
  std::size_t dim = 0;
  std::vector<std::vector<QVec>> c;

  QVec bracketCoords(const QVec &x, const QVec &y) const;
  // (ad e_i)_{kj} = c_{ij}^k
  QMatrix adMatrix(std::size_t i) const;
  QMatrix adMatrixOf(const QVec &x) const;
  bool antisymmetryHolds() const;
  bool jacobiHolds() const;
};

/// Subspace of the algebra in basis coordinates; rows are canonical
/// (reduced echelon, pivots ascending), so equal subspaces compare equal.
struct Subspace {
  QMatrix rows;

  static Subspace full(std::size_t d);
  static Subspace fromVectors(const std::vector<QVec> &vecs, std::size_t d);
  std::size_t dim() const { return rows.rows(); }
  std::size_t ambient() const { return rows.cols(); }
  bool contains(const QVec &v) const;
  bool containsAll(const Subspace &other) const;

  friend bool operator==(const Subspace &, const Subspace &) = default;
};

// span{ [a, b] : a in A, b in B }
Subspace bracketSpan(const StructureTensor &t, const Subspace &A,
                     const Subspace &B);

struct SeriesReport {
  enum class Kind { Derived, LowerCentral, Nilradical };
  Kind kind;
  std::vector<Subspace> chain;
  std::vector<std::size_t> dims;
  std::vector<std::size_t> dimsAtOrigin; // empty for abstract tensors
  // last index i with chain[i] nonzero, when the chain reaches zero
  std::optional<std::size_t> height;
};

// Chains on abstract structure constants (no origin data). The chain stops
// at the first repetition; a trailing zero subspace is included when reached.
SeriesReport derivedSeries(const StructureTensor &t);
SeriesReport lowerCentralSeries(const StructureTensor &t);
bool isSolvable(const StructureTensor &t);
bool isNilpotent(const StructureTensor &t);

/// Bracket-closed rational span of vector fields with structure constants.
class LieAlgebra {
public:
  static constexpr std::size_t kDefaultCap = 64;

  // Smallest bracket-closed span containing the generators.
  static LieAlgebra closure(const std::vector<VectorField> &generators,
                            std::size_t cap = kDefaultCap);

  const VarContext &context() const { return ctx_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t vars() const { return ctx_.size(); }
  const std::vector<VectorField> &basis() const { return basis_; }
  const StructureTensor &structure() const { return structure_; }
  const QMatrix &originValues() const { return originValues_; }

  VectorField fieldFromCoords(const QVec &coords) const;
  std::vector<VectorField> subspaceFields(const Subspace &s) const;
  // Coordinates of a field in this basis; nullopt when outside the span.
  std::optional<QVec> coordsOf(const VectorField &f) const;

  bool isTransitiveAtOrigin() const;
  std::size_t dimAtOrigin(const Subspace &s) const;

  SeriesReport derivedSeries() const;
  SeriesReport lowerCentralSeries() const;
  bool isSolvable() const { return lievec::isSolvable(structure_); }
  bool isNilpotent() const { return lievec::isNilpotent(structure_); }

  // [L, s] subset of s, exactly.
  bool isIdeal(const Subspace &s) const;

  // Algebra of truncated fields on the kept variables; `ideal` must live in
  // the dropped directions and every kept component must be independent of
  // the dropped variables.
  LieAlgebra quotientMap(const Subspace &ideal,
                         const std::vector<std::size_t> &dropIdx) const;

private:
  LieAlgebra() = default;
  void attachSeriesOriginData(SeriesReport &report) const;

  VarContext ctx_;
  std::vector<VectorField> basis_;
  StructureTensor structure_;
  QMatrix originValues_; // row i = basis_[i](0)
};

// Structure constants of an already-closed basis; NotClosed when a bracket
// falls outside the span.
StructureTensor structureConstants(const std::vector<VectorField> &basis);

} // namespace lievec

#endif
