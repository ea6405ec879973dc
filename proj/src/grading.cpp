#include "grading.hpp"

#include "errors.hpp"

#include <algorithm>
#include <cassert>
#include <random>

namespace lievec {

unsigned Dilation::maxWeight() const {
  unsigned w = 0;
  for (unsigned wi : weights)
    w = std::max(w, wi);
  return w;
}

bool Dilation::allPositive() const {
  return std::all_of(weights.begin(), weights.end(),
                     [](unsigned w) { return w > 0; });
}

bool Dilation::anyPositive() const {
  return std::any_of(weights.begin(), weights.end(),
                     [](unsigned w) { return w > 0; });
}

VectorField weightField(const Dilation &h) {
  std::size_t n = h.context.size();
  assert(h.weights.size() == n);
  std::vector<ExpPoly> comps;
  comps.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ExpPoly xi = ExpPoly::variable(n, i);
    comps.push_back(xi.scaled(Rat(static_cast<long>(h.weights[i]))));
  }
  return VectorField(h.context, std::move(comps));
}

long GradedDecomposition::maxDegree(long whenEmpty) const {
  return parts.empty() ? whenEmpty : parts.rbegin()->first;
}

GradedDecomposition degreeDecompose(const VectorField &X, const Dilation &h) {
  if (X.context() != h.context)
    throw Error(ErrorKind::ContextMismatch,
                "degreeDecompose: field and dilation contexts differ");
  std::size_t n = h.context.size();
  std::map<long, std::vector<ExpPoly>> byDegree;
  for (std::size_t j = 0; j < n; ++j) {
    for (const RingTerm &t : X.component(j).terms()) {
      for (std::size_t i = 0; i < n; ++i) {
        if (h.weights[i] == 0)
          continue;
        bool touched = !lievec::isZero(t.key.expFreq.entries[i]) ||
                       (t.key.trig != TrigKind::None &&
                        !lievec::isZero(t.key.trigFreq.entries[i]));
        if (touched)
          throw Error(ErrorKind::NotGradable,
                      "frequency involves positively-weighted variable " +
                          h.context.names[i]);
      }
      long deg = -static_cast<long>(h.weights[j]);
      for (std::size_t i = 0; i < n; ++i)
        deg += static_cast<long>(h.weights[i]) *
               static_cast<long>(t.key.alpha[i]);
      auto it = byDegree.find(deg);
      if (it == byDegree.end())
        it = byDegree.emplace(deg, std::vector<ExpPoly>(n, ExpPoly(n))).first;
      it->second[j] = it->second[j].plus(
          ExpPoly::term(n, t.coeff, t.key.alpha, t.key.expFreq, t.key.trig,
                        t.key.trigFreq));
    }
  }
  GradedDecomposition out;
  for (auto &[deg, comps] : byDegree)
    out.parts.emplace(deg, VectorField(h.context, std::move(comps)));
  return out;
}

MembershipReport membership(const std::vector<VectorField> &fields,
                            const Dilation &h, MembershipMode mode) {
  MembershipReport report;
  long bound = mode == MembershipMode::NonPositive ? 0 : -1;
  for (const VectorField &f : fields) {
    GradedDecomposition dec = degreeDecompose(f, h);
    if (dec.parts.empty()) {
      report.maxDegrees.push_back(std::nullopt);
    } else {
      long m = dec.parts.rbegin()->first;
      report.maxDegrees.push_back(m);
      if (!report.overallMax || m > *report.overallMax)
        report.overallMax = m;
      if (m > bound)
        report.holds = false;
    }
    report.decompositions.push_back(std::move(dec.parts));
  }
  return report;
}

namespace {

// exponent vectors over the positively-weighted variables with
// sum w_i alpha_i = target, in ascending lexicographic order
void enumerateExponents(const std::vector<std::size_t> &posVars,
                        const std::vector<unsigned> &weights, std::size_t nVars,
                        std::size_t from, long target,
                        std::vector<unsigned> &alpha,
                        std::vector<std::vector<unsigned>> &out) {
  if (target == 0) {
    out.push_back(alpha);
    return;
  }
  if (from >= posVars.size())
    return;
  std::size_t v = posVars[from];
  long w = weights[v];
  for (long e = 0; e * w <= target; ++e) {
    alpha[v] = static_cast<unsigned>(e);
    enumerateExponents(posVars, weights, nVars, from + 1, target - e * w,
                       alpha, out);
  }
  alpha[v] = 0;
}

} // namespace

GradedGenerators enumerateGraded(const Dilation &h, long degree) {
  long w = static_cast<long>(h.maxWeight());
  if (degree < -w)
    throw Error(ErrorKind::DegreeOutOfRange,
                "no vector field has degree below -w(h) = " +
                    std::to_string(-w));
  if (degree >= 0)
    throw Error(ErrorKind::DegreeOutOfRange,
                "graded enumeration is defined for negative degrees");
  std::size_t n = h.context.size();
  std::vector<std::size_t> posVars;
  for (std::size_t i = 0; i < n; ++i)
    if (h.weights[i] > 0)
      posVars.push_back(i);
  GradedGenerators out;
  out.moduleOverZeroWeightFunctions = posVars.size() < n;
  for (std::size_t i = 0; i < n; ++i) {
    long target = static_cast<long>(h.weights[i]) + degree;
    if (h.weights[i] == 0 || target < 0)
      continue;
    std::vector<unsigned> alpha(n, 0);
    std::vector<std::vector<unsigned>> exps;
    enumerateExponents(posVars, h.weights, n, 0, target, alpha, exps);
    for (const auto &a : exps) {
      std::vector<ExpPoly> comps(n, ExpPoly(n));
      comps[i] = ExpPoly::monomial(n, a, Rat(1));
      out.generators.emplace_back(h.context, std::move(comps));
    }
  }
  return out;
}

LieAlgebra randomSolvable(const Dilation &h, std::uint64_t seed,
                          const RandomSolvableParams &params) {
  if (!h.anyPositive())
    throw Error(ErrorKind::Usage,
                "randomSolvable needs at least one positive weight");
  std::size_t n = h.context.size();
  std::mt19937_64 rng(seed);
  // raw engine draws keep output independent of the standard library's
  // distribution implementations
  auto pick = [&]() {
    mpz_class den = params.density.get_den(), num = params.density.get_num();
    unsigned long q = den.get_ui(), p = num.get_ui();
    return q != 0 && (rng() % q) < p;
  };

  std::vector<VectorField> gens;
  for (std::size_t i = 0; i < n; ++i) {
    if (h.weights[i] == 0) {
      gens.push_back(VectorField::coordinate(h.context, i)); // transitivity
    } else if (pick()) {
      std::vector<ExpPoly> comps(n, ExpPoly(n));
      comps[i] = ExpPoly::variable(n, i);
      gens.emplace_back(h.context, std::move(comps)); // diagonal x^i d_i
    }
  }
  std::vector<bool> covered(n, false);
  for (std::size_t i = 0; i < n; ++i)
    if (h.weights[i] == 0)
      covered[i] = true;
  long w = static_cast<long>(h.maxWeight());
  for (long a = -w; a <= -1; ++a)
    for (const VectorField &g : enumerateGraded(h, a).generators)
      if (pick()) {
        gens.push_back(g);
        QVec v = g.evalOrigin();
        for (std::size_t i = 0; i < n; ++i)
          if (!lievec::isZero(v[i]))
            covered[i] = true;
      }
  for (std::size_t i = 0; i < n; ++i)
    if (!covered[i])
      gens.push_back(VectorField::coordinate(h.context, i));
  return LieAlgebra::closure(gens, params.cap);
}

} // namespace lievec
