#include "jets.hpp"

#include "errors.hpp"

#include <algorithm>
#include <cassert>

namespace lievec {

unsigned multiDegree(const MultiIndex &a) {
  unsigned d = 0;
  for (unsigned e : a)
    d += e;
  return d;
}

JetFunction JetFunction::constant(std::size_t vars, unsigned order,
                                  const Rat &c) {
  JetFunction f(vars, order);
  f.setCoeff(MultiIndex(vars, 0), c);
  return f;
}

JetFunction JetFunction::variable(std::size_t vars, unsigned order,
                                  std::size_t i) {
  JetFunction f(vars, order);
  MultiIndex a(vars, 0);
  a[i] = 1;
  f.setCoeff(a, Rat(1));
  return f;
}

Rat JetFunction::coeff(const MultiIndex &a) const {
  auto it = coeffs_.find(a);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

Rat JetFunction::constantTerm() const { return coeff(MultiIndex(vars_, 0)); }

void JetFunction::setCoeff(const MultiIndex &a, const Rat &c) {
  assert(a.size() == vars_);
  if (multiDegree(a) > order_)
    return;
  if (lievec::isZero(c))
    coeffs_.erase(a);
  else
    coeffs_[a] = c;
}

JetFunction JetFunction::plus(const JetFunction &o) const {
  assert(vars_ == o.vars_);
  JetFunction out(vars_, std::min(order_, o.order_));
  for (const auto &[a, c] : coeffs_)
    out.setCoeff(a, c);
  for (const auto &[a, c] : o.coeffs_)
    out.setCoeff(a, out.coeff(a) + c);
  return out;
}

JetFunction JetFunction::minus(const JetFunction &o) const {
  return plus(o.scaled(Rat(-1)));
}

JetFunction JetFunction::scaled(const Rat &c) const {
  JetFunction out(vars_, order_);
  if (lievec::isZero(c))
    return out;
  for (const auto &[a, v] : coeffs_)
    out.coeffs_[a] = v * c;
  return out;
}

JetFunction JetFunction::times(const JetFunction &o) const {
  assert(vars_ == o.vars_);
  JetFunction out(vars_, std::min(order_, o.order_));
  for (const auto &[a, ca] : coeffs_) {
    unsigned da = multiDegree(a);
    if (da > out.order())
      continue;
    for (const auto &[b, cb] : o.coeffs_) {
      if (da + multiDegree(b) > out.order())
        continue;
      MultiIndex sum(vars_);
      for (std::size_t i = 0; i < vars_; ++i)
        sum[i] = a[i] + b[i];
      out.setCoeff(sum, out.coeff(sum) + ca * cb);
    }
  }
  return out;
}

JetFunction JetFunction::partial(std::size_t i) const {
  JetFunction out(vars_, order_ == 0 ? 0 : order_ - 1);
  for (const auto &[a, c] : coeffs_) {
    if (a[i] == 0)
      continue;
    MultiIndex b = a;
    b[i] -= 1;
    out.setCoeff(b, out.coeff(b) + c * Rat(a[i]));
  }
  return out;
}

JetFunction JetFunction::truncated(unsigned order) const {
  JetFunction out(vars_, order);
  for (const auto &[a, c] : coeffs_)
    out.setCoeff(a, c);
  return out;
}

namespace {

// jet of <freq, x>
JetFunction linearForm(const Frequency &freq, unsigned order) {
  std::size_t n = freq.arity();
  JetFunction f(n, order);
  for (std::size_t i = 0; i < n; ++i)
    if (!lievec::isZero(freq.entries[i])) {
      MultiIndex a(n, 0);
      a[i] = 1;
      f.setCoeff(a, freq.entries[i]);
    }
  return f;
}

JetFunction expSeries(const JetFunction &u) {
  // exp(u) for u with zero constant term
  JetFunction out = JetFunction::constant(u.vars(), u.order(), Rat(1));
  JetFunction power = out;
  Rat factorial(1);
  for (unsigned k = 1; k <= u.order(); ++k) {
    power = power.times(u);
    factorial *= Rat(k);
    out = out.plus(power.scaled(Rat(1) / factorial));
  }
  return out;
}

void cosSinSeries(const JetFunction &u, JetFunction &cosOut,
                  JetFunction &sinOut) {
  cosOut = JetFunction::constant(u.vars(), u.order(), Rat(1));
  sinOut = JetFunction(u.vars(), u.order());
  JetFunction power = cosOut;
  Rat factorial(1);
  for (unsigned k = 1; k <= u.order(); ++k) {
    power = power.times(u);
    factorial *= Rat(k);
    Rat c = Rat(1) / factorial;
    switch (k % 4) {
    case 0: cosOut = cosOut.plus(power.scaled(c)); break;
    case 1: sinOut = sinOut.plus(power.scaled(c)); break;
    case 2: cosOut = cosOut.minus(power.scaled(c)); break;
    case 3: sinOut = sinOut.minus(power.scaled(c)); break;
    }
  }
}

} // namespace

JetFunction truncate(const ExpPoly &f, unsigned order) {
  std::size_t n = f.arity();
  JetFunction out(n, order);
  for (const RingTerm &t : f.terms()) {
    JetFunction termJet(n, order);
    termJet.setCoeff(t.key.alpha, t.coeff);
    if (multiDegree(t.key.alpha) > order)
      continue;
    if (!t.key.expFreq.isZero())
      termJet = termJet.times(expSeries(linearForm(t.key.expFreq, order)));
    if (t.key.trig != TrigKind::None) {
      JetFunction c, s;
      cosSinSeries(linearForm(t.key.trigFreq, order), c, s);
      termJet = termJet.times(t.key.trig == TrigKind::Cos ? c : s);
    }
    out = out.plus(termJet);
  }
  return out;
}

unsigned JetField::order() const {
  unsigned o = components.empty() ? 0 : components[0].order();
  for (const auto &c : components)
    o = std::min(o, c.order());
  return o;
}

JetField JetField::plus(const JetField &o) const {
  assert(components.size() == o.components.size());
  JetField out;
  for (std::size_t i = 0; i < components.size(); ++i)
    out.components.push_back(components[i].plus(o.components[i]));
  return out;
}

JetField JetField::scaled(const Rat &c) const {
  JetField out;
  for (const auto &comp : components)
    out.components.push_back(comp.scaled(c));
  return out;
}

JetFunction JetField::apply(const JetFunction &f) const {
  JetFunction out(f.vars(), std::min(order(), f.order() == 0 ? 0u : f.order() - 1));
  for (std::size_t i = 0; i < components.size(); ++i)
    out = out.plus(components[i].times(f.partial(i)).truncated(out.order()));
  return out;
}

JetField JetField::bracket(const JetField &o) const {
  JetField out;
  for (std::size_t j = 0; j < components.size(); ++j)
    out.components.push_back(apply(o.components[j]).minus(o.apply(components[j])));
  return out;
}

JetField truncate(const VectorField &X, unsigned order) {
  JetField out;
  for (const ExpPoly &c : X.components())
    out.components.push_back(truncate(c, order));
  return out;
}

unsigned JetMap::order() const {
  unsigned o = components.empty() ? 0 : components[0].order();
  for (const auto &c : components)
    o = std::min(o, c.order());
  return o;
}

bool JetMap::originPreserving() const {
  for (const auto &c : components)
    if (!lievec::isZero(c.constantTerm()))
      return false;
  return true;
}

QMatrix JetMap::linearPart() const {
  std::size_t n = vars();
  QMatrix A(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      MultiIndex a(n, 0);
      a[c] = 1;
      A.at(r, c) = components[r].coeff(a);
    }
  return A;
}

bool JetMap::isLinear() const {
  for (const auto &comp : components)
    for (const auto &[a, c] : comp.coeffs())
      if (multiDegree(a) != 1)
        return false;
  return true;
}

JetMap JetMap::identity(std::size_t n, unsigned order) {
  JetMap m;
  for (std::size_t i = 0; i < n; ++i)
    m.components.push_back(JetFunction::variable(n, order, i));
  return m;
}

JetMap JetMap::linear(const QMatrix &A, unsigned order) {
  std::size_t n = A.rows();
  JetMap m;
  for (std::size_t r = 0; r < n; ++r) {
    JetFunction f(n, order);
    for (std::size_t c = 0; c < n; ++c) {
      MultiIndex a(n, 0);
      a[c] = 1;
      f.setCoeff(a, A.at(r, c));
    }
    m.components.push_back(std::move(f));
  }
  return m;
}

JetFunction compose(const JetFunction &f, const JetMap &m) {
  assert(f.vars() == m.vars());
  std::size_t n = f.vars();
  unsigned order = std::min(f.order(), m.order());
  // cache powers of the substituted coordinates
  std::vector<std::vector<JetFunction>> powers(n);
  for (std::size_t i = 0; i < n; ++i)
    powers[i].push_back(JetFunction::constant(n, order, Rat(1)));
  JetFunction out(n, order);
  for (const auto &[a, c] : f.coeffs()) {
    if (multiDegree(a) > order)
      continue;
    JetFunction term = JetFunction::constant(n, order, c);
    for (std::size_t i = 0; i < n; ++i) {
      while (powers[i].size() <= a[i])
        powers[i].push_back(
            powers[i].back().times(m.components[i].truncated(order)));
      if (a[i] > 0)
        term = term.times(powers[i][a[i]]);
    }
    out = out.plus(term);
  }
  return out;
}

JetMap compose(const JetMap &a, const JetMap &b) {
  JetMap out;
  for (const auto &comp : a.components)
    out.components.push_back(compose(comp, b));
  return out;
}

JetMap invert(const JetMap &m) {
  if (!m.originPreserving())
    throw Error(ErrorKind::SingularJetMap,
                "invert requires an origin-preserving map");
  std::size_t n = m.vars();
  unsigned order = m.order();
  auto Ainv = m.linearPart().inverse();
  if (!Ainv)
    throw Error(ErrorKind::SingularJetMap,
                "jet map has a singular linear part");
  // g_{k+1} = A^{-1}(y - h(g_k)) where m = A + h; fixed point in `order`
  // steps since h raises valuation
  JetMap higher = m;
  {
    JetMap linear = JetMap::linear(m.linearPart(), order);
    for (std::size_t i = 0; i < n; ++i)
      higher.components[i] = higher.components[i].minus(linear.components[i]);
  }
  JetMap g = JetMap::linear(*Ainv, order);
  for (unsigned step = 1; step < order; ++step) {
    JetMap hg = compose(higher, g);
    JetMap next; // next = Ainv * (y - h(g))
    for (std::size_t i = 0; i < n; ++i) {
      JetFunction gi(n, order);
      for (std::size_t j = 0; j < n; ++j) {
        if (lievec::isZero(Ainv->at(i, j)))
          continue;
        JetFunction rhs =
            JetFunction::variable(n, order, j).minus(hg.components[j]);
        gi = gi.plus(rhs.scaled(Ainv->at(i, j)));
      }
      next.components.push_back(std::move(gi));
    }
    if (next == g)
      break;
    g = std::move(next);
  }
  return g;
}

std::vector<JetFunction> lieSeries(const VectorField &Y, const JetFunction &f,
                                   unsigned tDegree) {
  unsigned order = f.order();
  JetField Yjet = truncate(Y, order + tDegree); // headroom for derivatives
  std::vector<JetFunction> out;
  JetFunction cur = f;
  Rat factorial(1);
  out.push_back(cur.truncated(order));
  for (unsigned k = 1; k <= tDegree; ++k) {
    JetFunction applied(f.vars(), order + tDegree - k);
    for (std::size_t i = 0; i < Yjet.components.size(); ++i)
      applied = applied.plus(Yjet.components[i]
                                 .times(cur.partial(i))
                                 .truncated(applied.order()));
    cur = applied;
    factorial *= Rat(k);
    out.push_back(cur.truncated(order).scaled(Rat(1) / factorial));
  }
  return out;
}

JetField pushforward(const JetField &X, const JetMap &m) {
  std::size_t n = X.vars();
  assert(m.vars() == n);
  unsigned order = std::min(X.order(), m.order());
  unsigned outOrder = order == 0 ? 0 : order - 1;
  JetMap minv = invert(m);
  JetField out;
  for (std::size_t j = 0; j < n; ++j) {
    JetFunction comp(n, outOrder);
    for (std::size_t i = 0; i < n; ++i) {
      JetFunction dmj = m.components[j].partial(i);
      comp = comp.plus(
          dmj.times(X.components[i].truncated(outOrder)).truncated(outOrder));
    }
    out.components.push_back(compose(comp, minv));
  }
  return out;
}

unsigned JetForm::order() const {
  unsigned o = coefficients.empty() ? 0 : coefficients[0].order();
  for (const auto &c : coefficients)
    o = std::min(o, c.order());
  return o;
}

JetForm differential(const JetFunction &f) {
  JetForm omega;
  for (std::size_t i = 0; i < f.vars(); ++i)
    omega.coefficients.push_back(f.partial(i));
  return omega;
}

bool isClosed(const JetForm &omega) {
  std::size_t n = omega.vars();
  unsigned order = omega.order() == 0 ? 0 : omega.order() - 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      JetFunction d = omega.coefficients[j].partial(i).truncated(order).minus(
          omega.coefficients[i].partial(j).truncated(order));
      if (!d.isZero())
        return false;
    }
  return true;
}

JetFunction integrateClosed(const JetForm &omega) {
  if (!isClosed(omega))
    throw Error(ErrorKind::NotClosedForm, "1-form is not closed");
  std::size_t n = omega.vars();
  unsigned order = omega.order() + 1;
  // Poincare formula: y = sum_i int_0^1 a_i(t x) x^i dt, monomial-wise
  // c x^b dx^i integrates to c x^{b+e_i} / (|b| + 1)
  JetFunction y(n, order);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto &[b, c] : omega.coefficients[i].coeffs()) {
      MultiIndex a = b;
      a[i] += 1;
      y.setCoeff(a, y.coeff(a) + c / Rat(multiDegree(b) + 1));
    }
  return y;
}

} // namespace lievec
