#ifndef LIEVEC_VFIELD_HPP
#define LIEVEC_VFIELD_HPP

#include "coeffring.hpp"

#include <string>
#include <vector>

namespace lievec {

/// Ordered list of coordinate names; fields agree when their contexts agree.
struct VarContext {
  std::vector<std::string> names;

  std::size_t size() const { return names.size(); }
  // index of a name, or npos
  std::size_t indexOf(const std::string &name) const;

  friend bool operator==(const VarContext &, const VarContext &) = default;
};

/// X = sum_j X^j d_j with exp-poly components over a shared context.
class VectorField {
public:
  VectorField() = default;
  VectorField(VarContext ctx, std::vector<ExpPoly> components);

  static VectorField zero(const VarContext &ctx);
  static VectorField coordinate(const VarContext &ctx, std::size_t i);

  const VarContext &context() const { return ctx_; }
  std::size_t arity() const { return ctx_.size(); }
  const std::vector<ExpPoly> &components() const { return comps_; }
  const ExpPoly &component(std::size_t j) const { return comps_[j]; }

  bool isZero() const;

  VectorField plus(const VectorField &o) const;
  VectorField minus(const VectorField &o) const;
  VectorField scaled(const Rat &c) const;

  // X(f) = sum_j X^j d_j f
  ExpPoly applyDerivation(const ExpPoly &f) const;

  // [X, Y]^j = X(Y^j) - Y(X^j)
  VectorField bracket(const VectorField &o) const;

  QVec evalOrigin() const;

  friend bool operator==(const VectorField &, const VectorField &) = default;

private:
  void requireSameContext(const VectorField &o) const;
  VarContext ctx_;
  std::vector<ExpPoly> comps_;
};

// Concatenated coordinate vectors of the fields over the union key basis;
// rank of the matrix equals the dimension of the rational span.
struct FieldCoordinates {
  std::vector<TermKey> keys; // shared key basis per component
  QMatrix matrix;            // row r = coordinates of fields[r]
};
FieldCoordinates fieldCoordinates(const std::vector<VectorField> &fields);

// Maximal linearly independent subsequence, earliest wins.
std::vector<VectorField> spanReduce(const std::vector<VectorField> &fields);

} // namespace lievec

#endif
