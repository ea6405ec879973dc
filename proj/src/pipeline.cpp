#include "pipeline.hpp"

#include "errors.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace lievec {

namespace {

std::size_t seriesIndexOffset(const SeriesReport &series) {
  return series.kind == SeriesReport::Kind::LowerCentral ? 1 : 0;
}

} // namespace

FlagProfile flagProfile(const SeriesReport &series, std::size_t nVars) {
  const auto &dims = series.dimsAtOrigin;
  if (dims.empty() || dims[0] != nVars)
    throw Error(ErrorKind::NotTransitive,
                "the series does not span the tangent space at the origin");
  if (!series.height)
    throw Error(ErrorKind::Usage, "flag profile needs a series reaching zero");
  std::size_t offset = seriesIndexOffset(series);
  FlagProfile p;
  p.k = *series.height;
  for (std::size_t pos = 0; pos + 1 < dims.size(); ++pos)
    if (dims[pos + 1] < dims[pos]) {
      p.r.push_back(pos + offset);
      p.a.push_back(dims[pos] - dims[pos + 1]);
      p.b.push_back((p.b.empty() ? 0 : p.b.back()) + p.a.back());
    }
  p.m = p.r.size();
  if (p.b.empty() || p.b.back() != nVars)
    throw Error(ErrorKind::InternalCertificateFailure,
                "flag profile block sizes do not sum to the dimension");
  return p;
}

std::vector<unsigned> deriveWeights(const FlagProfile &profile) {
  std::vector<unsigned> w;
  for (std::size_t j = 0; j < profile.m; ++j)
    for (std::size_t i = 0; i < profile.a[j]; ++i)
      w.push_back(static_cast<unsigned>(profile.r[j]));
  return w;
}

AdaptedFrame adaptedFrame(const LieAlgebra &L, const SeriesReport &series,
                          const FlagProfile &profile) {
  std::size_t n = L.vars();
  std::size_t offset = seriesIndexOffset(series);
  AdaptedFrame frame;
  for (std::size_t j = 0; j < profile.m; ++j) {
    std::size_t chainPos = profile.r[j] - offset;
    std::size_t nextPos = chainPos + 1;
    SpanBuilder values(n);
    if (nextPos < series.chain.size()) {
      const Subspace &next = series.chain[nextPos];
      QMatrix nextValues = next.rows.multiply(L.originValues());
      for (std::size_t r = 0; r < nextValues.rows(); ++r)
        values.insert(nextValues.row(r));
    }
    std::size_t picked = 0;
    const Subspace &level = series.chain[chainPos];
    for (std::size_t r = 0; r < level.rows.rows() && picked < profile.a[j];
         ++r) {
      QVec coords = level.rows.row(r);
      VectorField candidate = L.fieldFromCoords(coords);
      if (values.insert(candidate.evalOrigin())) {
        frame.fields.push_back(std::move(candidate));
        frame.layerOf.push_back(j);
        ++picked;
      }
    }
    if (picked < profile.a[j])
      throw Error(ErrorKind::NotTransitive,
                  "flag level " + std::to_string(profile.r[j]) +
                      " degenerates at the origin");
  }
  return frame;
}

namespace {

void monomialsOfDegree(std::size_t n, unsigned k, std::size_t from,
                       MultiIndex &cur, std::vector<MultiIndex> &out) {
  if (from + 1 == n) {
    cur[from] = k;
    out.push_back(cur);
    cur[from] = 0;
    return;
  }
  for (unsigned e = 0; e <= k; ++e) {
    cur[from] = e;
    monomialsOfDegree(n, k - e, from + 1, cur, out);
  }
  cur[from] = 0;
}

std::vector<MultiIndex> monomialsOfDegree(std::size_t n, unsigned k) {
  std::vector<MultiIndex> out;
  MultiIndex cur(n, 0);
  monomialsOfDegree(n, k, 0, cur, out);
  return out;
}

JetFunction homogeneousPart(const JetFunction &f, unsigned k) {
  JetFunction out(f.vars(), f.order());
  for (const auto &[a, c] : f.coeffs())
    if (multiDegree(a) == k)
      out.setCoeff(a, c);
  return out;
}

} // namespace

JetMap buildChart(const AdaptedFrame &frame, const FlagProfile &profile,
                  unsigned jetOrder) {
  std::size_t n = frame.fields.size();
  unsigned N = std::max(jetOrder, 1u);
  std::vector<JetField> frameJets;
  for (const VectorField &Y : frame.fields)
    frameJets.push_back(truncate(Y, N));
  QMatrix values(n, n); // row s = Y_s(0)
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t i = 0; i < n; ++i)
      values.at(s, i) = frameJets[s].components[i].constantTerm();
  if (!values.inverse())
    throw Error(ErrorKind::SingularJetMap,
                "frame values at the origin are dependent");
  // higher-order parts of the frame fields
  std::vector<JetField> higher = frameJets;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t i = 0; i < n; ++i)
      higher[s].components[i] = higher[s].components[i].minus(
          JetFunction::constant(n, N, values.at(s, i)));

  std::vector<JetFunction> chartFns(n, JetFunction(n, N));
  for (std::size_t j = 0; j < profile.m; ++j) {
    std::size_t blockLo = j == 0 ? 0 : profile.b[j - 1];
    std::size_t blockHi = profile.b[j];
    std::size_t firstCond = blockLo; // conditions: this layer and deeper
    std::size_t nCond = n - firstCond;
    std::vector<JetFunction> ys(blockHi - blockLo, JetFunction(n, N));
    for (unsigned k = 1; k <= N; ++k) {
      std::vector<MultiIndex> cols = monomialsOfDegree(n, k);
      std::vector<MultiIndex> rowsIdx = monomialsOfDegree(n, k - 1);
      std::map<MultiIndex, std::size_t> rowOf;
      for (std::size_t r = 0; r < rowsIdx.size(); ++r)
        rowOf[rowsIdx[r]] = r;
      QMatrix system(nCond * rowsIdx.size(), cols.size());
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t i = 0; i < n; ++i) {
          if (cols[c][i] == 0)
            continue;
          MultiIndex beta = cols[c];
          beta[i] -= 1;
          std::size_t rBase = rowOf[beta];
          for (std::size_t s = 0; s < nCond; ++s)
            system.at(s * rowsIdx.size() + rBase, c) +=
                values.at(firstCond + s, i) * Rat(cols[c][i]);
        }
      QMatrix rhs(nCond * rowsIdx.size(), ys.size());
      for (std::size_t l = 0; l < ys.size(); ++l)
        for (std::size_t s = 0; s < nCond; ++s) {
          // delta term
          if (k == 1 && firstCond + s == blockLo + l)
            rhs.at(s * rowsIdx.size() + rowOf[MultiIndex(n, 0)], l) += 1;
          // known contribution of the lower-degree part through the
          // higher-order coefficients of Y_s
          JetFunction applied = higher[firstCond + s].apply(ys[l]);
          JetFunction part = homogeneousPart(applied, k - 1);
          for (const auto &[beta, cval] : part.coeffs())
            rhs.at(s * rowsIdx.size() + rowOf[beta], l) -= cval;
        }
      auto sol = system.solveMany(rhs);
      if (!sol)
        throw Error(ErrorKind::NotClosedForm,
                    "frame duality system is inconsistent at degree " +
                        std::to_string(k) +
                        ": the flag relations do not hold");
      for (std::size_t l = 0; l < ys.size(); ++l)
        for (std::size_t c = 0; c < cols.size(); ++c)
          if (!isZero(sol->at(c, l)))
            ys[l].setCoeff(cols[c], sol->at(c, l));
    }
    // verify the full duality conditions
    for (std::size_t l = 0; l < ys.size(); ++l)
      for (std::size_t s = firstCond; s < n; ++s) {
        JetFunction expect = JetFunction::constant(
            n, N - 1, s == blockLo + l ? Rat(1) : Rat(0));
        if (!(frameJets[s].apply(ys[l]).truncated(N - 1) == expect))
          throw Error(ErrorKind::NotClosedForm,
                      "frame duality verification failed");
      }
    for (std::size_t l = 0; l < ys.size(); ++l)
      chartFns[blockLo + l] = std::move(ys[l]);
  }
  JetMap chart;
  chart.components = std::move(chartFns);
  return chart;
}

JetMap buildChartFlows(const AdaptedFrame &frame, unsigned jetOrder) {
  std::size_t n = frame.fields.size();
  unsigned N = std::max(jetOrder, 1u);
  const VarContext &ctx = frame.fields[0].context();
  // point reached from the origin by the flows, as jets in the times t
  JetMap point;
  point.components.assign(n, JetFunction(n, N));
  for (std::size_t k = n; k-- > 0;) {
    const VectorField &Y = frame.fields[k];
    JetFunction tk = JetFunction::variable(n, N, k);
    std::vector<JetFunction> next(n, JetFunction(n, N));
    for (std::size_t i = 0; i < n; ++i) {
      ExpPoly g = ExpPoly::variable(n, i);
      JetFunction acc = compose(truncate(g, N), point);
      JetFunction tkPow = JetFunction::constant(n, N, Rat(1));
      Rat factorial(1);
      for (unsigned m = 1; m <= N; ++m) {
        g = Y.applyDerivation(g);
        if (g.isZero())
          break;
        tkPow = tkPow.times(tk);
        factorial *= Rat(m);
        acc = acc.plus(tkPow.times(compose(truncate(g, N), point))
                           .scaled(Rat(1) / factorial));
      }
      next[i] = std::move(acc);
    }
    point.components = std::move(next);
  }
  (void)ctx;
  return invert(point);
}

VarContext NormalizationCertificate::newContext() const {
  VarContext ctx;
  ctx.names = newNames;
  return ctx;
}

namespace {

struct CheckState {
  bool ok = true;
  std::string reason;

  void fail(const std::string &why) {
    if (ok) {
      ok = false;
      reason = why;
    }
  }
};

std::vector<std::string> chooseNewNames(const QMatrix &A,
                                        const VarContext &oldCtx) {
  std::size_t n = A.rows();
  std::vector<std::string> names(n);
  std::vector<bool> used(n, false);
  bool permutation = true;
  for (std::size_t i = 0; i < n && permutation; ++i) {
    std::size_t nonzero = n;
    for (std::size_t j = 0; j < n; ++j)
      if (!isZero(A.at(i, j))) {
        if (nonzero != n) {
          permutation = false;
          break;
        }
        nonzero = j;
      }
    if (!permutation || nonzero == n || used[nonzero]) {
      permutation = false;
      break;
    }
    used[nonzero] = true;
    names[i] = oldCtx.names[nonzero];
  }
  if (permutation)
    return names;
  for (std::size_t i = 0; i < n; ++i)
    names[i] = "y" + std::to_string(i + 1);
  return names;
}

VectorField transformFieldLinear(const VectorField &X, const QMatrix &A,
                                 const QMatrix &V, const VarContext &newCtx) {
  std::size_t n = newCtx.size();
  std::vector<ExpPoly> substituted;
  for (std::size_t j = 0; j < n; ++j)
    substituted.push_back(X.component(j).substituteLinear(V));
  std::vector<ExpPoly> comps(n, ExpPoly(n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      if (!isZero(A.at(k, j)))
        comps[k] = comps[k].plus(substituted[j].scaled(A.at(k, j)));
  return VectorField(newCtx, std::move(comps));
}

long termDegree(const std::vector<unsigned> &weights, const MultiIndex &alpha,
                std::size_t direction) {
  long deg = -static_cast<long>(weights[direction]);
  for (std::size_t i = 0; i < alpha.size(); ++i)
    deg += static_cast<long>(weights[i]) * static_cast<long>(alpha[i]);
  return deg;
}

// ----- ring-level certificate checks (exact; linear chart) -----

bool ringChecks(NormalizationCertificate &cert, const LieAlgebra &L,
                const std::vector<VectorField> &transformed,
                CheckState &state) {
  const SeriesReport &series = cert.series;
  std::size_t offset = seriesIndexOffset(series);
  Dilation h{cert.newContext(), cert.weights};
  bool nilpotentPath = cert.pathUsed == SeriesPath::Nilpotent;
  long bound = nilpotentPath ? -1 : 0;
  long minAllowed = -static_cast<long>(h.maxWeight());
  VectorField grad = weightField(h);

  std::vector<VectorField> zeroParts;
  cert.perBasisDegrees.assign(transformed.size(), std::nullopt);
  for (std::size_t i = 0; i < transformed.size(); ++i) {
    GradedDecomposition dec;
    try {
      dec = degreeDecompose(transformed[i], h);
    } catch (const Error &e) {
      state.fail(std::string("basis element ") + std::to_string(i + 1) + ": " +
                 e.what());
      return false;
    }
    for (const auto &[deg, part] : dec.parts) {
      // independent eigenfield re-check through the weight field bracket
      if (!(grad.bracket(part) == part.scaled(Rat(deg)))) {
        state.fail("weight-field eigenvalue check failed on basis element " +
                   std::to_string(i + 1));
        return false;
      }
      if (deg < minAllowed) {
        state.fail("degree below -w(h) on basis element " +
                   std::to_string(i + 1));
        return false;
      }
      if (deg == 0)
        zeroParts.push_back(part);
    }
    if (!dec.parts.empty()) {
      long maxDeg = dec.parts.rbegin()->first;
      cert.perBasisDegrees[i] = maxDeg;
      if (maxDeg > bound) {
        std::ostringstream os;
        os << "basis element " << i + 1 << " has degree " << maxDeg
           << " above the bound " << bound;
        state.fail(os.str());
        return false;
      }
    }
  }

  // L^s lies in degrees <= -s
  cert.seriesDegreeBounds.assign(cert.profile.k, std::nullopt);
  for (std::size_t s = 1; s <= cert.profile.k; ++s) {
    std::size_t chainPos = s - offset;
    if (chainPos >= series.chain.size())
      break;
    std::optional<long> worst;
    for (const VectorField &f : L.subspaceFields(series.chain[chainPos])) {
      VectorField g =
          transformFieldLinear(f, cert.linearChange,
                               *cert.linearChange.inverse(), h.context);
      GradedDecomposition dec = degreeDecompose(g, h);
      if (dec.parts.empty())
        continue;
      long maxDeg = dec.parts.rbegin()->first;
      if (!worst || maxDeg > *worst)
        worst = maxDeg;
    }
    cert.seriesDegreeBounds[s - 1] = worst;
    if (worst && *worst > -static_cast<long>(s)) {
      std::ostringstream os;
      os << "series member " << s << " has degree " << *worst
         << " above the bound " << -static_cast<long>(s);
      state.fail(os.str());
      return false;
    }
  }

  // degree-0 projections commute
  cert.zeroPartCommutes = true;
  for (std::size_t i = 0; i < zeroParts.size(); ++i)
    for (std::size_t j = i + 1; j < zeroParts.size(); ++j)
      if (!zeroParts[i].bracket(zeroParts[j]).isZero()) {
        cert.zeroPartCommutes = false;
        state.fail("degree-0 projections do not commute");
        return false;
      }

  // solvable path: affine shape in the top block over earlier variables
  if (!nilpotentPath && cert.profile.m >= 1 && h.maxWeight() > 0) {
    std::size_t topLo = cert.profile.m == 1 ? 0 : cert.profile.b[cert.profile.m - 2];
    std::size_t n = h.context.size();
    for (std::size_t i = 0; i < transformed.size(); ++i)
      for (std::size_t dir = 0; dir < n; ++dir)
        for (const RingTerm &t : transformed[i].component(dir).terms()) {
          unsigned topDeg = 0;
          for (std::size_t v = topLo; v < n; ++v)
            topDeg += t.key.alpha[v];
          unsigned allowed = dir >= topLo ? 1 : 0;
          if (topDeg > allowed) {
            std::ostringstream os;
            os << "basis element " << i + 1
               << " is not affine in the top variable block";
            state.fail(os.str());
            return false;
          }
        }
  }
  return true;
}

// ----- jet-level certificate checks (order-bounded; general chart) -----

struct JetGraded {
  std::map<long, JetField> parts;
};

JetGraded jetDecompose(const JetField &X, const std::vector<unsigned> &weights) {
  std::size_t n = X.vars();
  JetGraded out;
  for (std::size_t dir = 0; dir < n; ++dir)
    for (const auto &[alpha, c] : X.components[dir].coeffs()) {
      long deg = termDegree(weights, alpha, dir);
      auto it = out.parts.find(deg);
      if (it == out.parts.end()) {
        JetField zero;
        zero.components.assign(n, JetFunction(n, X.components[dir].order()));
        it = out.parts.emplace(deg, std::move(zero)).first;
      }
      it->second.components[dir].setCoeff(alpha, c);
    }
  return out;
}

bool jetOrderTooLow(const JetField &X, const std::vector<unsigned> &weights) {
  for (std::size_t dir = 0; dir < X.vars(); ++dir) {
    unsigned order = X.components[dir].order();
    for (const auto &[alpha, c] : X.components[dir].coeffs()) {
      if (multiDegree(alpha) != order)
        continue;
      for (std::size_t i = 0; i < weights.size(); ++i)
        if (weights[i] > 0 && alpha[i] > 0)
          return true;
    }
  }
  return false;
}

bool jetChecks(NormalizationCertificate &cert, const LieAlgebra &L,
               const std::vector<JetField> &pushed, CheckState &state) {
  const SeriesReport &series = cert.series;
  std::size_t offset = seriesIndexOffset(series);
  bool nilpotentPath = cert.pathUsed == SeriesPath::Nilpotent;
  long bound = nilpotentPath ? -1 : 0;
  long minAllowed = -static_cast<long>(
      *std::max_element(cert.weights.begin(), cert.weights.end()));
  std::size_t n = cert.weights.size();
  unsigned outOrder = cert.jetOrder - 1;
  unsigned brOrder = outOrder == 0 ? 0 : outOrder - 1;

  Dilation h{cert.newContext(), cert.weights};
  JetField gradJet = truncate(weightField(h), outOrder);

  std::vector<JetField> zeroParts;
  cert.perBasisDegrees.assign(pushed.size(), std::nullopt);
  for (std::size_t i = 0; i < pushed.size(); ++i) {
    if (jetOrderTooLow(pushed[i], cert.weights)) {
      state.fail("OrderTooLow: basis element " + std::to_string(i + 1) +
                 " has terms at the truncation boundary in a weighted "
                 "variable; raise the jet order");
      return false;
    }
    JetGraded dec = jetDecompose(pushed[i], cert.weights);
    for (const auto &[deg, part] : dec.parts) {
      JetField lhs = gradJet.bracket(part);
      JetField rhs = part.scaled(Rat(deg));
      for (std::size_t c = 0; c < n; ++c)
        if (!(lhs.components[c].truncated(brOrder) ==
              rhs.components[c].truncated(brOrder))) {
          state.fail("weight-field eigenvalue check failed on basis element " +
                     std::to_string(i + 1));
          return false;
        }
      if (deg < minAllowed) {
        state.fail("degree below -w(h) on basis element " +
                   std::to_string(i + 1));
        return false;
      }
      if (deg == 0)
        zeroParts.push_back(part);
    }
    if (!dec.parts.empty()) {
      long maxDeg = dec.parts.rbegin()->first;
      cert.perBasisDegrees[i] = maxDeg;
      if (maxDeg > bound) {
        std::ostringstream os;
        os << "basis element " << i + 1 << " has degree " << maxDeg
           << " above the bound " << bound << " (jet order " << cert.jetOrder
           << ")";
        state.fail(os.str());
        return false;
      }
    }
  }

  JetMap chart = cert.chart;
  cert.seriesDegreeBounds.assign(cert.profile.k, std::nullopt);
  for (std::size_t s = 1; s <= cert.profile.k; ++s) {
    std::size_t chainPos = s - offset;
    if (chainPos >= series.chain.size())
      break;
    std::optional<long> worst;
    for (const VectorField &f : L.subspaceFields(series.chain[chainPos])) {
      JetField g = pushforward(truncate(f, cert.jetOrder), chart);
      JetGraded dec = jetDecompose(g, cert.weights);
      if (dec.parts.empty())
        continue;
      long maxDeg = dec.parts.rbegin()->first;
      if (!worst || maxDeg > *worst)
        worst = maxDeg;
    }
    cert.seriesDegreeBounds[s - 1] = worst;
    if (worst && *worst > -static_cast<long>(s)) {
      std::ostringstream os;
      os << "series member " << s << " has degree " << *worst
         << " above the bound " << -static_cast<long>(s);
      state.fail(os.str());
      return false;
    }
  }

  cert.zeroPartCommutes = true;
  for (std::size_t i = 0; i < zeroParts.size(); ++i)
    for (std::size_t j = i + 1; j < zeroParts.size(); ++j) {
      JetField br = zeroParts[i].bracket(zeroParts[j]);
      for (std::size_t c = 0; c < n; ++c)
        if (!br.components[c].truncated(brOrder).isZero()) {
          cert.zeroPartCommutes = false;
          state.fail("degree-0 projections do not commute");
          return false;
        }
    }

  if (!nilpotentPath && cert.profile.m >= 1) {
    std::size_t topLo =
        cert.profile.m == 1 ? 0 : cert.profile.b[cert.profile.m - 2];
    for (std::size_t i = 0; i < pushed.size(); ++i)
      for (std::size_t dir = 0; dir < n; ++dir)
        for (const auto &[alpha, c] : pushed[i].components[dir].coeffs()) {
          unsigned topDeg = 0;
          for (std::size_t v = topLo; v < n; ++v)
            topDeg += alpha[v];
          unsigned allowed = dir >= topLo ? 1 : 0;
          if (topDeg > allowed) {
            state.fail("basis element " + std::to_string(i + 1) +
                       " is not affine in the top variable block");
            return false;
          }
        }
  }
  return true;
}

} // namespace

NormalizationCertificate normalize(const LieAlgebra &L,
                                   const NormalizeOptions &opts) {
  if (!L.isTransitiveAtOrigin())
    throw Error(ErrorKind::NotTransitive,
                "the algebra does not span the tangent space at the origin");
  SeriesPath path = opts.path;
  if (path == SeriesPath::Auto)
    path = L.isNilpotent() ? SeriesPath::Nilpotent : SeriesPath::Solvable;
  if (path == SeriesPath::Nilpotent && !L.isNilpotent())
    throw Error(ErrorKind::NotSolvable,
                "the nilpotent path requires a nilpotent algebra");
  if (path == SeriesPath::Solvable && !L.isSolvable())
    throw Error(ErrorKind::NotSolvable, "the algebra is not solvable");

  NormalizationCertificate cert;
  cert.pathUsed = path;
  cert.series = path == SeriesPath::Nilpotent ? L.lowerCentralSeries()
                                              : nilradicalSeries(L);
  cert.profile = flagProfile(cert.series, L.vars());
  cert.weights = deriveWeights(cert.profile);
  cert.zeroWeightBlock = cert.profile.r[0] == 0;
  unsigned w = *std::max_element(cert.weights.begin(), cert.weights.end());
  cert.jetOrder = std::max(opts.jetOrder ? opts.jetOrder : 2 * (w + 1), 2u);

  AdaptedFrame frame = adaptedFrame(L, cert.series, cert.profile);
  std::size_t n = L.vars();
  QMatrix V(n, n); // column k = Y_k(0)
  for (std::size_t k = 0; k < n; ++k) {
    QVec v = frame.fields[k].evalOrigin();
    for (std::size_t i = 0; i < n; ++i)
      V.at(i, k) = v[i];
  }
  auto A = V.inverse();
  if (!A)
    throw Error(ErrorKind::SingularJetMap,
                "adapted frame values are dependent at the origin");
  cert.linearChange = *A;
  cert.newNames = chooseNewNames(*A, L.context());

  // first try the linear chart: it keeps all coefficients in the ring
  {
    CheckState state;
    std::vector<VectorField> transformed;
    for (const VectorField &f : L.basis())
      transformed.push_back(
          transformFieldLinear(f, *A, V, cert.newContext()));
    if (ringChecks(cert, L, transformed, state)) {
      cert.status = path == SeriesPath::Nilpotent
                        ? CertStatus::CertifiedNilpotent
                        : CertStatus::Certified;
      cert.chart = JetMap::linear(*A, cert.jetOrder);
      cert.chartIsLinear = true;
      cert.transformedBasis = std::move(transformed);
      return cert;
    }
  }

  // fall back to the full jet construction
  cert.chart = opts.strategy == ChartStrategy::Forms
                   ? buildChart(frame, cert.profile, cert.jetOrder)
                   : buildChartFlows(frame, cert.jetOrder);
  cert.chartIsLinear = cert.chart.isLinear();
  CheckState state;
  std::vector<JetField> pushed;
  for (const VectorField &f : L.basis())
    pushed.push_back(pushforward(truncate(f, cert.jetOrder), cert.chart));
  if (jetChecks(cert, L, pushed, state)) {
    cert.status = path == SeriesPath::Nilpotent ? CertStatus::CertifiedNilpotent
                                                : CertStatus::Certified;
    return cert;
  }
  cert.status = CertStatus::Failed;
  cert.failureReason = state.reason;
  return cert;
}

} // namespace lievec
