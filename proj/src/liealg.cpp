#include "liealg.hpp"

#include "errors.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace lievec {

QVec StructureTensor::bracketCoords(const QVec &x, const QVec &y) const {
  QVec out(dim, Rat(0));
  for (std::size_t i = 0; i < dim; ++i) {
    if (lievec::isZero(x[i]))
      continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (lievec::isZero(y[j]))
        continue;
      Rat f = x[i] * y[j];
      addScaled(out, c[i][j], f);
    }
  }
  return out;
}

QMatrix StructureTensor::adMatrix(std::size_t i) const {
  QMatrix m(dim, dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t k = 0; k < dim; ++k)
      m.at(k, j) = c[i][j][k];
  return m;
}

QMatrix StructureTensor::adMatrixOf(const QVec &x) const {
  QMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (lievec::isZero(x[i]))
      continue;
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        m.at(k, j) += x[i] * c[i][j][k];
  }
  return m;
}

bool StructureTensor::antisymmetryHolds() const {
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        if (c[i][j][k] != -c[j][i][k])
          return false;
  return true;
}

namespace {
QVec unitVec(std::size_t dim, std::size_t i) {
  QVec v(dim, Rat(0));
  v[i] = 1;
  return v;
}
} // namespace

bool StructureTensor::jacobiHolds() const {
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      for (std::size_t k = j + 1; k < dim; ++k) {
        QVec a = bracketCoords(unitVec(dim, i), c[j][k]);
        QVec b = bracketCoords(unitVec(dim, j), c[k][i]);
        QVec d = bracketCoords(unitVec(dim, k), c[i][j]);
        for (std::size_t l = 0; l < dim; ++l)
          if (!lievec::isZero(a[l] + b[l] + d[l]))
            return false;
      }
  return true;
}

Subspace Subspace::full(std::size_t d) {
  return Subspace{QMatrix::identity(d)};
}

Subspace Subspace::fromVectors(const std::vector<QVec> &vecs, std::size_t d) {
  SpanBuilder span(d);
  for (const QVec &v : vecs)
    span.insert(v);
  Subspace s;
  s.rows = QMatrix(span.dim(), d);
  for (std::size_t r = 0; r < span.dim(); ++r)
    for (std::size_t c = 0; c < d; ++c)
      s.rows.at(r, c) = span.echelonRows()[r][c];
  return s;
}

bool Subspace::contains(const QVec &v) const {
  SpanBuilder span(rows.cols());
  for (std::size_t r = 0; r < rows.rows(); ++r)
    span.insert(rows.row(r));
  return span.contains(v);
}

bool Subspace::containsAll(const Subspace &other) const {
  SpanBuilder span(rows.cols());
  for (std::size_t r = 0; r < rows.rows(); ++r)
    span.insert(rows.row(r));
  for (std::size_t r = 0; r < other.rows.rows(); ++r)
    if (!span.contains(other.rows.row(r)))
      return false;
  return true;
}

Subspace bracketSpan(const StructureTensor &t, const Subspace &A,
                     const Subspace &B) {
  std::vector<QVec> vecs;
  for (std::size_t a = 0; a < A.rows.rows(); ++a)
    for (std::size_t b = 0; b < B.rows.rows(); ++b)
      vecs.push_back(t.bracketCoords(A.rows.row(a), B.rows.row(b)));
  return Subspace::fromVectors(vecs, t.dim);
}

namespace {

SeriesReport runChain(SeriesReport::Kind kind, const Subspace &first,
                      const std::function<Subspace(const Subspace &)> &step) {
  SeriesReport report;
  report.kind = kind;
  report.chain.push_back(first);
  report.dims.push_back(first.dim());
  while (true) {
    const Subspace &cur = report.chain.back();
    if (cur.dim() == 0)
      break;
    Subspace next = step(cur);
    if (next == cur)
      break; // stabilized above zero
    report.chain.push_back(next);
    report.dims.push_back(next.dim());
  }
  // chain[0] = L^1, so the height k with L^{k+1} = 0 is the last index
  if (report.chain.back().dim() == 0)
    report.height = report.chain.size() - 1;
  return report;
}

} // namespace

SeriesReport derivedSeries(const StructureTensor &t) {
  return runChain(SeriesReport::Kind::Derived, Subspace::full(t.dim),
                  [&](const Subspace &s) { return bracketSpan(t, s, s); });
}

SeriesReport lowerCentralSeries(const StructureTensor &t) {
  Subspace whole = Subspace::full(t.dim);
  return runChain(SeriesReport::Kind::LowerCentral, whole,
                  [&](const Subspace &s) { return bracketSpan(t, whole, s); });
}

bool isSolvable(const StructureTensor &t) {
  return derivedSeries(t).height.has_value();
}

bool isNilpotent(const StructureTensor &t) {
  return lowerCentralSeries(t).height.has_value();
}

StructureTensor structureConstants(const std::vector<VectorField> &basis) {
  std::size_t d = basis.size();
  StructureTensor t;
  t.dim = d;
  t.c.assign(d, std::vector<QVec>(d, QVec(d, Rat(0))));
  if (d == 0)
    return t;
  // coordinatize basis and brackets over one shared key union
  std::vector<VectorField> all = basis;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      all.push_back(basis[i].bracket(basis[j]));
      pairs.emplace_back(i, j);
    }
  FieldCoordinates fc = fieldCoordinates(all);
  std::size_t m = fc.matrix.cols();
  QMatrix A(m, d); // columns = basis coordinate vectors
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t r = 0; r < m; ++r)
      A.at(r, i) = fc.matrix.at(i, r);
  QMatrix B(m, pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (std::size_t r = 0; r < m; ++r)
      B.at(r, p) = fc.matrix.at(d + p, r);
  auto X = A.solveMany(B);
  if (!X)
    throw Error(ErrorKind::NotClosed,
                "a bracket of basis elements falls outside the span");
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    auto [i, j] = pairs[p];
    for (std::size_t k = 0; k < d; ++k) {
      t.c[i][j][k] = X->at(k, p);
      t.c[j][i][k] = -X->at(k, p);
    }
  }
  return t;
}

LieAlgebra LieAlgebra::closure(const std::vector<VectorField> &generators,
                               std::size_t cap) {
  if (cap < 1)
    throw Error(ErrorKind::Usage, "closure cap must be at least 1");
  std::vector<VectorField> basis = spanReduce(generators);
  if (basis.size() > cap)
    throw Error(ErrorKind::DimensionCapExceeded,
                "generators already span more than the cap of " +
                    std::to_string(cap));
  while (!basis.empty()) {
    std::vector<VectorField> candidates = basis;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j)
        candidates.push_back(basis[i].bracket(basis[j]));
    std::vector<VectorField> reduced = spanReduce(candidates);
    if (reduced.size() == basis.size())
      break;
    if (reduced.size() > cap)
      throw Error(ErrorKind::DimensionCapExceeded,
                  "span exceeded the cap of " + std::to_string(cap) +
                      " before the bracket closure stabilized");
    basis = std::move(reduced);
  }

  LieAlgebra L;
  L.ctx_ = generators.empty() ? VarContext{} : generators[0].context();
  L.basis_ = std::move(basis);
  L.structure_ = structureConstants(L.basis_);
  L.originValues_ = QMatrix(L.basis_.size(), L.ctx_.size());
  for (std::size_t i = 0; i < L.basis_.size(); ++i) {
    QVec v = L.basis_[i].evalOrigin();
    for (std::size_t j = 0; j < L.ctx_.size(); ++j)
      L.originValues_.at(i, j) = v[j];
  }
  return L;
}

VectorField LieAlgebra::fieldFromCoords(const QVec &coords) const {
  assert(coords.size() == basis_.size());
  VectorField f = VectorField::zero(ctx_);
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (!lievec::isZero(coords[i]))
      f = f.plus(basis_[i].scaled(coords[i]));
  return f;
}

std::vector<VectorField> LieAlgebra::subspaceFields(const Subspace &s) const {
  std::vector<VectorField> fields;
  for (std::size_t r = 0; r < s.rows.rows(); ++r)
    fields.push_back(fieldFromCoords(s.rows.row(r)));
  return fields;
}

std::optional<QVec> LieAlgebra::coordsOf(const VectorField &f) const {
  std::vector<VectorField> all = basis_;
  all.push_back(f);
  FieldCoordinates fc = fieldCoordinates(all);
  std::size_t m = fc.matrix.cols();
  QMatrix A(m, basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t r = 0; r < m; ++r)
      A.at(r, i) = fc.matrix.at(i, r);
  return A.solve(fc.matrix.row(basis_.size()));
}

bool LieAlgebra::isTransitiveAtOrigin() const {
  return originValues_.rank() == ctx_.size();
}

std::size_t LieAlgebra::dimAtOrigin(const Subspace &s) const {
  return s.rows.multiply(originValues_).rank();
}

void LieAlgebra::attachSeriesOriginData(SeriesReport &report) const {
  for (const Subspace &s : report.chain)
    report.dimsAtOrigin.push_back(dimAtOrigin(s));
}

SeriesReport LieAlgebra::derivedSeries() const {
  SeriesReport r = lievec::derivedSeries(structure_);
  attachSeriesOriginData(r);
  return r;
}

SeriesReport LieAlgebra::lowerCentralSeries() const {
  SeriesReport r = lievec::lowerCentralSeries(structure_);
  attachSeriesOriginData(r);
  return r;
}

bool LieAlgebra::isIdeal(const Subspace &s) const {
  Subspace bracket = bracketSpan(structure_, Subspace::full(dim()), s);
  return s.containsAll(bracket);
}

LieAlgebra LieAlgebra::quotientMap(const Subspace &ideal,
                                   const std::vector<std::size_t> &dropIdx)
    const {
  if (!isIdeal(ideal))
    throw Error(ErrorKind::Usage, "quotientMap: subspace is not an ideal");
  std::vector<bool> dropped(ctx_.size(), false);
  for (std::size_t i : dropIdx)
    dropped.at(i) = true;
  // the ideal's fields must live in the dropped directions
  for (const VectorField &f : subspaceFields(ideal))
    for (std::size_t j = 0; j < ctx_.size(); ++j)
      if (!dropped[j] && !f.component(j).isZero())
        throw Error(ErrorKind::NotProjectable,
                    "ideal has a component along kept variable " +
                        ctx_.names[j]);
  std::vector<std::size_t> keepIdx;
  for (std::size_t j = 0; j < ctx_.size(); ++j)
    if (!dropped[j])
      keepIdx.push_back(j);
  // kept components must not depend on dropped variables
  for (const VectorField &f : basis_)
    for (std::size_t j : keepIdx)
      for (std::size_t i : dropIdx)
        if (f.component(j).dependsOn(i))
          throw Error(ErrorKind::NotProjectable,
                      "component along kept variable " + ctx_.names[j] +
                          " depends on dropped variable " + ctx_.names[i]);
  VarContext quotCtx;
  for (std::size_t j : keepIdx)
    quotCtx.names.push_back(ctx_.names[j]);
  std::vector<VectorField> truncated;
  for (const VectorField &f : basis_) {
    std::vector<ExpPoly> comps;
    for (std::size_t j : keepIdx)
      comps.push_back(f.component(j).restrictTo(keepIdx));
    truncated.emplace_back(quotCtx, std::move(comps));
  }
  LieAlgebra quotient = closure(truncated, dim() == 0 ? 1 : dim());
  // the map X -> truncated X must respect brackets
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = i + 1; j < basis_.size(); ++j) {
      VectorField full = basis_[i].bracket(basis_[j]);
      std::vector<ExpPoly> comps;
      for (std::size_t k : keepIdx)
        comps.push_back(full.component(k).restrictTo(keepIdx));
      VectorField mapped(quotCtx, comps);
      if (!(truncated[i].bracket(truncated[j]) == mapped))
        throw Error(ErrorKind::InternalCertificateFailure,
                    "quotientMap: truncation is not a Lie homomorphism");
    }
  return quotient;
}

} // namespace lievec
