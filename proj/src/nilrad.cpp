#include "nilrad.hpp"

#include "errors.hpp"

#include <cassert>

namespace lievec {

namespace {

QVec vectorize(const QMatrix &m) {
  QVec v(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      v[i * m.cols() + j] = m.at(i, j);
  return v;
}

Rat productTrace(const QMatrix &a, const QMatrix &b) {
  assert(a.rows() == a.cols() && b.rows() == b.cols() && a.rows() == b.rows());
  Rat t(0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!lievec::isZero(a.at(i, k)) && !lievec::isZero(b.at(k, i)))
        t += a.at(i, k) * b.at(k, i);
  return t;
}

} // namespace

AdWorkspace adjointMatrices(const StructureTensor &t) {
  AdWorkspace w;
  w.dim = t.dim;
  for (std::size_t i = 0; i < t.dim; ++i)
    w.adMatrices.push_back(t.adMatrix(i));
  return w;
}

AdWorkspace associativeEnvelope(AdWorkspace w) {
  std::size_t d = w.dim;
  std::vector<QMatrix> generators;
  for (const QMatrix &m : w.adMatrices)
    if (!m.isZero())
      generators.push_back(m);
  SpanBuilder span(d * d);
  std::vector<QMatrix> basis;
  for (const QMatrix &g : generators)
    if (span.insert(vectorize(g)))
      basis.push_back(g);
  // words of length k+1 are (word of length k) * generator
  std::size_t frontier = 0;
  while (frontier < basis.size()) {
    std::size_t end = basis.size();
    for (std::size_t b = frontier; b < end; ++b)
      for (const QMatrix &g : generators) {
        QMatrix prod = basis[b].multiply(g);
        if (!prod.isZero() && span.insert(vectorize(prod)))
          basis.push_back(prod);
      }
    frontier = end;
  }
  w.envelopeBasis = std::move(basis);
  return w;
}

std::vector<QMatrix> traceRadical(const AdWorkspace &w) {
  std::size_t e = w.envelopeBasis.size();
  QMatrix gram(e, e);
  for (std::size_t a = 0; a < e; ++a)
    for (std::size_t b = a; b < e; ++b)
      gram.at(a, b) = gram.at(b, a) =
          productTrace(w.envelopeBasis[a], w.envelopeBasis[b]);
  std::vector<QMatrix> radical;
  for (const QVec &coef : gram.kernelBasis()) {
    QMatrix m(w.dim, w.dim);
    for (std::size_t a = 0; a < e; ++a)
      if (!lievec::isZero(coef[a]))
        for (std::size_t i = 0; i < w.dim; ++i)
          for (std::size_t j = 0; j < w.dim; ++j)
            m.at(i, j) += coef[a] * w.envelopeBasis[a].at(i, j);
    if (!m.isNilpotentMatrix())
      throw Error(ErrorKind::InternalCertificateFailure,
                  "trace radical contains a non-nilpotent matrix");
    radical.push_back(std::move(m));
  }
  return radical;
}

Subspace nilradical(const StructureTensor &t) {
  if (!isSolvable(t))
    throw Error(ErrorKind::NotSolvable,
                "nilradical is only computed for solvable algebras");
  std::size_t d = t.dim;
  AdWorkspace w = associativeEnvelope(adjointMatrices(t));
  std::vector<QMatrix> radical = traceRadical(w);

  // solve ad_x = sum y_a J_a: kernel of [vec(ad e_1) .. vec(ad e_d) | -J]
  std::size_t cols = d + radical.size();
  QMatrix system(d * d, cols);
  for (std::size_t i = 0; i < d; ++i) {
    QVec v = vectorize(w.adMatrices[i]);
    for (std::size_t r = 0; r < d * d; ++r)
      system.at(r, i) = v[r];
  }
  for (std::size_t a = 0; a < radical.size(); ++a) {
    QVec v = vectorize(radical[a]);
    for (std::size_t r = 0; r < d * d; ++r)
      system.at(r, d + a) = -v[r];
  }
  std::vector<QVec> members;
  for (const QVec &k : system.kernelBasis())
    members.push_back(QVec(k.begin(), k.begin() + d));
  Subspace nr = Subspace::fromVectors(members, d);

  // certificate: ideal, nilpotent, contains [L,L]
  Subspace bracketWithAll = bracketSpan(t, Subspace::full(d), nr);
  if (!nr.containsAll(bracketWithAll))
    throw Error(ErrorKind::InternalCertificateFailure,
                "computed nilradical is not an ideal");
  Subspace power = nr;
  for (std::size_t steps = 0; power.dim() > 0; ++steps) {
    if (steps > d)
      throw Error(ErrorKind::InternalCertificateFailure,
                  "computed nilradical is not nilpotent");
    power = bracketSpan(t, nr, power);
  }
  Subspace derived = bracketSpan(t, Subspace::full(d), Subspace::full(d));
  if (!nr.containsAll(derived))
    throw Error(ErrorKind::InternalCertificateFailure,
                "computed nilradical does not contain the derived algebra");
  return nr;
}

SeriesReport nilradicalSeries(const StructureTensor &t) {
  Subspace nr = nilradical(t); // throws NotSolvable for non-solvable input
  SeriesReport report;
  report.kind = SeriesReport::Kind::Nilradical;
  report.chain.push_back(Subspace::full(t.dim));
  report.chain.push_back(nr);
  while (report.chain.back().dim() > 0)
    report.chain.push_back(bracketSpan(t, nr, report.chain.back()));
  for (const Subspace &s : report.chain)
    report.dims.push_back(s.dim());
  report.height = report.chain.size() >= 2 ? report.chain.size() - 2 : 0;
  return report;
}

SeriesReport nilradicalSeries(const LieAlgebra &L) {
  SeriesReport report = nilradicalSeries(L.structure());
  for (const Subspace &s : report.chain)
    report.dimsAtOrigin.push_back(L.dimAtOrigin(s));
  return report;
}

} // namespace lievec
