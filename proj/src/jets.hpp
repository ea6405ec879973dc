#ifndef LIEVEC_JETS_HPP
#define LIEVEC_JETS_HPP

#include "vfield.hpp"

#include <map>
#include <vector>

namespace lievec {

using MultiIndex = std::vector<unsigned>;

unsigned multiDegree(const MultiIndex &a);

/// Taylor polynomial at the origin, truncated at total degree `order`.
class JetFunction {
public:
  JetFunction() = default;
  JetFunction(std::size_t vars, unsigned order) : vars_(vars), order_(order) {}

  static JetFunction constant(std::size_t vars, unsigned order, const Rat &c);
  static JetFunction variable(std::size_t vars, unsigned order, std::size_t i);

  std::size_t vars() const { return vars_; }
  unsigned order() const { return order_; }
  const std::map<MultiIndex, Rat> &coeffs() const { return coeffs_; }
  bool isZero() const { return coeffs_.empty(); }
  Rat coeff(const MultiIndex &a) const;
  Rat constantTerm() const;

  void setCoeff(const MultiIndex &a, const Rat &c);

  JetFunction plus(const JetFunction &o) const;
  JetFunction minus(const JetFunction &o) const;
  JetFunction scaled(const Rat &c) const;
  JetFunction times(const JetFunction &o) const;
  JetFunction partial(std::size_t i) const; // order drops by one
  JetFunction truncated(unsigned order) const;

  friend bool operator==(const JetFunction &, const JetFunction &) = default;

private:
  std::size_t vars_ = 0;
  unsigned order_ = 0;
  std::map<MultiIndex, Rat> coeffs_;
};

// Exact Taylor jet of a ring element at the origin.
JetFunction truncate(const ExpPoly &f, unsigned order);

/// Vector field with jet coefficients.
struct JetField {
  std::vector<JetFunction> components;

  std::size_t vars() const { return components.size(); }
  unsigned order() const;
  JetField plus(const JetField &o) const;
  JetField scaled(const Rat &c) const;
  // derivation on a jet (output order = min(f, X) - 1)
  JetFunction apply(const JetFunction &f) const;
  JetField bracket(const JetField &o) const;

  friend bool operator==(const JetField &, const JetField &) = default;
};

JetField truncate(const VectorField &X, unsigned order);

/// Origin-preserving tuple of jets acting as a local coordinate change.
struct JetMap {
  std::vector<JetFunction> components; // one per target coordinate

  std::size_t vars() const { return components.size(); }
  unsigned order() const;
  bool originPreserving() const;
  QMatrix linearPart() const;
  bool isLinear() const;

  static JetMap identity(std::size_t n, unsigned order);
  static JetMap linear(const QMatrix &A, unsigned order);

  friend bool operator==(const JetMap &, const JetMap &) = default;
};

// f after the substitution x -> m(x), truncated at f's order.
JetFunction compose(const JetFunction &f, const JetMap &m);
JetMap compose(const JetMap &a, const JetMap &b); // a after b, componentwise

// Inverse to the map's order; SingularJetMap when the linear part is.
JetMap invert(const JetMap &m);

// exp(tY) f = sum_{k<=tDegree} t^k/k! Y^k f, entry k of the result.
std::vector<JetFunction> lieSeries(const VectorField &Y, const JetFunction &f,
                                   unsigned tDegree);

// m_* X = (Dm . X) after m^{-1}; output order is one below the input jets.
JetField pushforward(const JetField &X, const JetMap &m);

/// 1-form sum_i a_i dx^i with jet coefficients.
struct JetForm {
  std::vector<JetFunction> coefficients;

  std::size_t vars() const { return coefficients.size(); }
  unsigned order() const;
};

JetForm differential(const JetFunction &f);
// d(omega) == 0 up to order-1
bool isClosed(const JetForm &omega);
// unique y with dy = omega and y(0) = 0; NotClosedForm when not closed
JetFunction integrateClosed(const JetForm &omega);

} // namespace lievec

#endif
