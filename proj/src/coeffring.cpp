#include "coeffring.hpp"

#include "errors.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace lievec {

int Frequency::lexSign() const {
  for (const Rat &q : entries)
    if (!lievec::isZero(q))
      return sgn(q);
  return 0;
}

Frequency Frequency::negated() const {
  Frequency out(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    out.entries[i] = -entries[i];
  return out;
}

Frequency Frequency::plus(const Frequency &o) const {
  assert(entries.size() == o.entries.size());
  Frequency out(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    out.entries[i] = entries[i] + o.entries[i];
  return out;
}

std::strong_ordering Frequency::operator<=>(const Frequency &o) const {
  assert(entries.size() == o.entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    int c = cmp(entries[i], o.entries[i]);
    if (c < 0)
      return std::strong_ordering::less;
    if (c > 0)
      return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering TermKey::operator<=>(const TermKey &o) const {
  if (auto c = alpha <=> o.alpha; c != 0)
    return c;
  if (auto c = expFreq <=> o.expFreq; c != 0)
    return c;
  if (auto c = static_cast<int>(trig) <=> static_cast<int>(o.trig); c != 0)
    return c;
  if (trig == TrigKind::None)
    return std::strong_ordering::equal;
  return trigFreq <=> o.trigFreq;
}

namespace {

// Normalizes the trig sign convention (mu lex-positive; sin(-mu) = -sin(mu),
// cos(-mu) = cos(mu)) and degenerate trig frequencies (cos 0 = 1, sin 0 = 0).
// Returns false when the whole term vanishes.
bool normalizeTerm(Rat &coeff, TermKey &key) {
  if (lievec::isZero(coeff))
    return false;
  if (key.trig == TrigKind::None) {
    key.trigFreq = Frequency(0);
    return true;
  }
  int s = key.trigFreq.lexSign();
  if (s == 0) {
    if (key.trig == TrigKind::Sin)
      return false;
    key.trig = TrigKind::None;
    key.trigFreq = Frequency(0);
    return true;
  }
  if (s < 0) {
    key.trigFreq = key.trigFreq.negated();
    if (key.trig == TrigKind::Sin)
      coeff = -coeff;
  }
  return true;
}

} // namespace

// Canonicalizes an arbitrary term soup: normalize signs, sort, merge, drop 0.
ExpPoly sumOfRawTerms(std::size_t arity, std::vector<RingTerm> raw) {
  std::map<TermKey, Rat> acc;
  for (auto &t : raw) {
    if (!normalizeTerm(t.coeff, t.key))
      continue;
    acc[t.key] += t.coeff;
  }
  ExpPoly out(arity);
  for (auto &[key, coeff] : acc)
    if (!lievec::isZero(coeff))
      out.terms_.push_back(RingTerm{coeff, key});
  return out;
}

ExpPoly ExpPoly::constant(std::size_t n, const Rat &c) {
  return term(n, c, std::vector<unsigned>(n, 0), Frequency(n), TrigKind::None,
              Frequency(n));
}

ExpPoly ExpPoly::variable(std::size_t n, std::size_t i) {
  std::vector<unsigned> alpha(n, 0);
  alpha[i] = 1;
  return monomial(n, alpha, Rat(1));
}

ExpPoly ExpPoly::monomial(std::size_t n, const std::vector<unsigned> &alpha,
                          const Rat &c) {
  return term(n, c, alpha, Frequency(n), TrigKind::None, Frequency(n));
}

ExpPoly ExpPoly::exponential(const Frequency &lambda) {
  std::size_t n = lambda.arity();
  return term(n, Rat(1), std::vector<unsigned>(n, 0), lambda, TrigKind::None,
              Frequency(n));
}

ExpPoly ExpPoly::cosine(const Frequency &mu) {
  std::size_t n = mu.arity();
  return term(n, Rat(1), std::vector<unsigned>(n, 0), Frequency(n),
              TrigKind::Cos, mu);
}

ExpPoly ExpPoly::sine(const Frequency &mu) {
  std::size_t n = mu.arity();
  return term(n, Rat(1), std::vector<unsigned>(n, 0), Frequency(n),
              TrigKind::Sin, mu);
}

ExpPoly ExpPoly::term(std::size_t n, const Rat &c,
                      const std::vector<unsigned> &alpha,
                      const Frequency &lambda, TrigKind trig,
                      const Frequency &mu) {
  assert(alpha.size() == n && lambda.arity() == n);
  TermKey key{alpha, lambda, trig,
              trig == TrigKind::None ? Frequency(0) : mu};
  return sumOfRawTerms(n, {RingTerm{c, key}});
}

ExpPoly ExpPoly::plus(const ExpPoly &o) const {
  if (arity_ != o.arity_)
    throw Error(ErrorKind::ArityMismatch, "add: operands over different "
                                          "variable counts");
  std::vector<RingTerm> raw = terms_;
  raw.insert(raw.end(), o.terms_.begin(), o.terms_.end());
  return sumOfRawTerms(arity_, std::move(raw));
}

ExpPoly ExpPoly::minus(const ExpPoly &o) const { return plus(o.negated()); }

ExpPoly ExpPoly::negated() const { return scaled(Rat(-1)); }

ExpPoly ExpPoly::scaled(const Rat &c) const {
  ExpPoly out(arity_);
  if (lievec::isZero(c))
    return out;
  out.terms_ = terms_;
  for (auto &t : out.terms_)
    t.coeff *= c;
  return out;
}

ExpPoly ExpPoly::times(const ExpPoly &o) const {
  if (arity_ != o.arity_)
    throw Error(ErrorKind::ArityMismatch, "mul: operands over different "
                                          "variable counts");
  std::vector<RingTerm> raw;
  for (const RingTerm &a : terms_)
    for (const RingTerm &b : o.terms_) {
      std::vector<unsigned> alpha(arity_);
      for (std::size_t i = 0; i < arity_; ++i)
        alpha[i] = a.key.alpha[i] + b.key.alpha[i];
      Frequency lambda = a.key.expFreq.plus(b.key.expFreq);
      Rat c = a.coeff * b.coeff;
      TrigKind ta = a.key.trig, tb = b.key.trig;
      if (ta == TrigKind::None && tb == TrigKind::None) {
        raw.push_back({c, TermKey{alpha, lambda, TrigKind::None, Frequency(0)}});
      } else if (tb == TrigKind::None) {
        raw.push_back({c, TermKey{alpha, lambda, ta, a.key.trigFreq}});
      } else if (ta == TrigKind::None) {
        raw.push_back({c, TermKey{alpha, lambda, tb, b.key.trigFreq}});
      } else {
        // product-to-sum identities; A, B are the two trig frequencies
        const Frequency &A = a.key.trigFreq, &B = b.key.trigFreq;
        Frequency sum = A.plus(B), diff = A.plus(B.negated());
        Rat half = c / 2;
        if (ta == TrigKind::Cos && tb == TrigKind::Cos) {
          // cosA cosB = 1/2 cos(A-B) + 1/2 cos(A+B)
          raw.push_back({half, TermKey{alpha, lambda, TrigKind::Cos, diff}});
          raw.push_back({half, TermKey{alpha, lambda, TrigKind::Cos, sum}});
        } else if (ta == TrigKind::Sin && tb == TrigKind::Sin) {
          // sinA sinB = 1/2 cos(A-B) - 1/2 cos(A+B)
          raw.push_back({half, TermKey{alpha, lambda, TrigKind::Cos, diff}});
          raw.push_back({-half, TermKey{alpha, lambda, TrigKind::Cos, sum}});
        } else if (ta == TrigKind::Sin && tb == TrigKind::Cos) {
          // sinA cosB = 1/2 sin(A+B) + 1/2 sin(A-B)
          raw.push_back({half, TermKey{alpha, lambda, TrigKind::Sin, sum}});
          raw.push_back({half, TermKey{alpha, lambda, TrigKind::Sin, diff}});
        } else {
          // cosA sinB = 1/2 sin(A+B) - 1/2 sin(A-B)
          raw.push_back({half, TermKey{alpha, lambda, TrigKind::Sin, sum}});
          raw.push_back({-half, TermKey{alpha, lambda, TrigKind::Sin, diff}});
        }
      }
    }
  return sumOfRawTerms(arity_, std::move(raw));
}

ExpPoly ExpPoly::partial(std::size_t i) const {
  assert(i < arity_);
  std::vector<RingTerm> raw;
  for (const RingTerm &t : terms_) {
    // monomial factor
    if (t.key.alpha[i] > 0) {
      TermKey k = t.key;
      k.alpha[i] -= 1;
      raw.push_back({t.coeff * Rat(t.key.alpha[i]), std::move(k)});
    }
    // exponential factor
    const Rat &li = t.key.expFreq.entries[i];
    if (!lievec::isZero(li))
      raw.push_back({t.coeff * li, t.key});
    // trig factor: cos' = -mu_i sin, sin' = mu_i cos
    if (t.key.trig != TrigKind::None) {
      const Rat &mi = t.key.trigFreq.entries[i];
      if (!lievec::isZero(mi)) {
        TermKey k = t.key;
        if (t.key.trig == TrigKind::Cos) {
          k.trig = TrigKind::Sin;
          raw.push_back({-t.coeff * mi, std::move(k)});
        } else {
          k.trig = TrigKind::Cos;
          raw.push_back({t.coeff * mi, std::move(k)});
        }
      }
    }
  }
  return sumOfRawTerms(arity_, std::move(raw));
}

Rat ExpPoly::evalOrigin() const {
  Rat v(0);
  for (const RingTerm &t : terms_) {
    bool alphaZero =
        std::all_of(t.key.alpha.begin(), t.key.alpha.end(),
                    [](unsigned e) { return e == 0; });
    if (!alphaZero || t.key.trig == TrigKind::Sin)
      continue;
    v += t.coeff; // exp -> 1, cos -> 1
  }
  return v;
}

ExpPoly ExpPoly::substituteLinear(const QMatrix &B) const {
  assert(B.rows() == arity_ && B.cols() == arity_);
  std::size_t n = arity_;
  // new frequency = B^T * old frequency
  QMatrix Bt = B.transposed();
  ExpPoly out(n);
  for (const RingTerm &t : terms_) {
    // (B y)^alpha as a polynomial in y
    ExpPoly mono = ExpPoly::constant(n, t.coeff);
    for (std::size_t j = 0; j < n; ++j) {
      if (t.key.alpha[j] == 0)
        continue;
      ExpPoly lin(n);
      std::vector<RingTerm> linTerms;
      for (std::size_t i = 0; i < n; ++i) {
        if (lievec::isZero(B.at(j, i)))
          continue;
        std::vector<unsigned> a(n, 0);
        a[i] = 1;
        linTerms.push_back(
            {B.at(j, i), TermKey{a, Frequency(n), TrigKind::None, Frequency(0)}});
      }
      lin = sumOfRawTerms(n, std::move(linTerms));
      for (unsigned p = 0; p < t.key.alpha[j]; ++p)
        mono = mono.times(lin);
    }
    ExpPoly factor = ExpPoly::constant(n, Rat(1));
    if (!t.key.expFreq.isZero())
      factor = factor.times(
          ExpPoly::exponential(Frequency(Bt.apply(t.key.expFreq.entries))));
    if (t.key.trig == TrigKind::Cos)
      factor = factor.times(
          ExpPoly::cosine(Frequency(Bt.apply(t.key.trigFreq.entries))));
    else if (t.key.trig == TrigKind::Sin)
      factor = factor.times(
          ExpPoly::sine(Frequency(Bt.apply(t.key.trigFreq.entries))));
    out = out.plus(mono.times(factor));
  }
  return out;
}

bool ExpPoly::dependsOn(std::size_t i) const {
  for (const RingTerm &t : terms_) {
    if (t.key.alpha[i] != 0)
      return true;
    if (!lievec::isZero(t.key.expFreq.entries[i]))
      return true;
    if (t.key.trig != TrigKind::None && !lievec::isZero(t.key.trigFreq.entries[i]))
      return true;
  }
  return false;
}

ExpPoly ExpPoly::restrictTo(const std::vector<std::size_t> &keepIdx) const {
  std::size_t m = keepIdx.size();
  std::vector<RingTerm> raw;
  for (const RingTerm &t : terms_) {
    std::vector<unsigned> alpha(m);
    Frequency lambda(m), mu(m);
    for (std::size_t k = 0; k < m; ++k) {
      alpha[k] = t.key.alpha[keepIdx[k]];
      lambda.entries[k] = t.key.expFreq.entries[keepIdx[k]];
      if (t.key.trig != TrigKind::None)
        mu.entries[k] = t.key.trigFreq.entries[keepIdx[k]];
    }
    raw.push_back({t.coeff, TermKey{alpha, lambda, t.key.trig,
                                    t.key.trig == TrigKind::None ? Frequency(0)
                                                                 : mu}});
  }
  return sumOfRawTerms(m, std::move(raw));
}

CoordinateBasis coordinateMatrix(const std::vector<ExpPoly> &fs) {
  std::size_t n = fs.empty() ? 0 : fs[0].arity();
  std::map<TermKey, std::size_t> index;
  for (const ExpPoly &f : fs) {
    if (f.arity() != n)
      throw Error(ErrorKind::ArityMismatch,
                  "coordinateMatrix: mixed variable counts");
    for (const RingTerm &t : f.terms())
      index.emplace(t.key, 0);
  }
  CoordinateBasis out;
  std::size_t k = 0;
  for (auto &[key, idx] : index) {
    idx = k++;
    out.keys.push_back(key);
  }
  out.matrix = QMatrix(fs.size(), k);
  for (std::size_t r = 0; r < fs.size(); ++r)
    for (const RingTerm &t : fs[r].terms())
      out.matrix.at(r, index[t.key]) = t.coeff;
  return out;
}

} // namespace lievec
