#include "reports.hpp"

#include <sstream>

namespace lievec {

namespace {

Json ratJson(const Rat &q) { return ratStr(q); }

Json qvecJson(const QVec &v) {
  Json arr = Json::array();
  for (const Rat &q : v)
    arr.push_back(ratJson(q));
  return arr;
}

Json matrixJson(const QMatrix &m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    rows.push_back(qvecJson(m.row(r)));
  return rows;
}

Json jetJson(const JetFunction &f) {
  // ordered (alpha -> "p/q") map; std::map iteration is already canonical
  Json arr = Json::array();
  for (const auto &[alpha, c] : f.coeffs()) {
    Json entry;
    entry["alpha"] = alpha;
    entry["coeff"] = ratJson(c);
    arr.push_back(entry);
  }
  return arr;
}

Json fieldsJson(const std::vector<VectorField> &fields) {
  Json arr = Json::array();
  for (const auto &f : fields)
    arr.push_back(printField(f));
  return arr;
}

const char *seriesKindName(SeriesReport::Kind kind) {
  switch (kind) {
  case SeriesReport::Kind::Derived: return "derived";
  case SeriesReport::Kind::LowerCentral: return "lowerCentral";
  case SeriesReport::Kind::Nilradical: return "nilradical";
  }
  return "?";
}

} // namespace

Json analyzeJson(const LieAlgebra &L) {
  SeriesReport lcs = L.lowerCentralSeries();
  Json j;
  j["dim"] = L.dim();
  j["vars"] = L.context().names;
  j["dims"] = lcs.dims;
  j["dimsAtOrigin"] = lcs.dimsAtOrigin;
  if (lcs.height)
    j["height"] = *lcs.height;
  else
    j["height"] = nullptr;
  j["solvable"] = L.isSolvable();
  j["nilpotent"] = L.isNilpotent();
  j["transitive"] = L.isTransitiveAtOrigin();
  j["basis"] = fieldsJson(L.basis());
  return j;
}

Json seriesJson(const SeriesReport &report, const LieAlgebra &L) {
  Json j;
  j["kind"] = seriesKindName(report.kind);
  j["dims"] = report.dims;
  j["dimsAtOrigin"] = report.dimsAtOrigin;
  if (report.height)
    j["height"] = *report.height;
  else
    j["height"] = nullptr;
  Json chain = Json::array();
  for (const Subspace &s : report.chain)
    chain.push_back(fieldsJson(L.subspaceFields(s)));
  j["chain"] = chain;
  return j;
}

std::string nilradicalText(const LieAlgebra &L) {
  Subspace nr = nilradical(L.structure());
  std::string out;
  for (const VectorField &f : L.subspaceFields(nr))
    out += printField(f) + "\n";
  return out;
}

Json membershipJson(const std::vector<VectorField> &fields, const Dilation &h,
                    MembershipMode mode) {
  MembershipReport report = membership(fields, h, mode);
  Json j;
  j["weights"] = h.weights;
  j["mode"] =
      mode == MembershipMode::NonPositive ? "nonpos" : "strictneg";
  j["holds"] = report.holds;
  if (report.overallMax)
    j["maxDegree"] = *report.overallMax;
  else
    j["maxDegree"] = nullptr;
  Json per = Json::array();
  for (std::size_t i = 0; i < fields.size(); ++i) {
    Json entry;
    entry["field"] = printField(fields[i]);
    if (report.maxDegrees[i])
      entry["maxDegree"] = *report.maxDegrees[i];
    else
      entry["maxDegree"] = nullptr;
    Json parts = Json::array();
    for (const auto &[deg, part] : report.decompositions[i]) {
      Json p;
      p["degree"] = deg;
      p["part"] = printField(part);
      parts.push_back(p);
    }
    entry["parts"] = parts;
    per.push_back(entry);
  }
  j["fields"] = per;
  return j;
}

Json enumerateJson(const Dilation &h, long degree) {
  GradedGenerators gens = enumerateGraded(h, degree);
  Json j;
  j["vars"] = h.context.names;
  j["weights"] = h.weights;
  j["degree"] = degree;
  j["moduleOverZeroWeightFunctions"] = gens.moduleOverZeroWeightFunctions;
  j["generators"] = fieldsJson(gens.generators);
  return j;
}

Json certificateJson(const NormalizationCertificate &cert) {
  Json j;
  switch (cert.status) {
  case CertStatus::Certified: j["status"] = "certified"; break;
  case CertStatus::CertifiedNilpotent:
    j["status"] = "certifiedNilpotent";
    break;
  case CertStatus::Failed: j["status"] = "failed"; break;
  }
  if (cert.status == CertStatus::Failed)
    j["reason"] = cert.failureReason;
  j["path"] =
      cert.pathUsed == SeriesPath::Nilpotent ? "nilpotent" : "solvable";
  j["jetOrder"] = cert.jetOrder;
  j["chartKind"] = cert.chartIsLinear ? "linear-exact" : "jet";
  Json profile;
  profile["r"] = cert.profile.r;
  profile["a"] = cert.profile.a;
  profile["b"] = cert.profile.b;
  profile["m"] = cert.profile.m;
  profile["k"] = cert.profile.k;
  j["profile"] = profile;
  Json series;
  series["kind"] = seriesKindName(cert.series.kind);
  series["dims"] = cert.series.dims;
  series["dimsAtOrigin"] = cert.series.dimsAtOrigin;
  j["series"] = series;
  Json vars = Json::array();
  for (std::size_t i = 0; i < cert.newNames.size(); ++i) {
    Json v;
    v["name"] = cert.newNames[i];
    v["weight"] = cert.weights[i];
    vars.push_back(v);
  }
  j["newVariables"] = vars;
  j["zeroWeightBlock"] = cert.zeroWeightBlock;
  j["linearChange"] = matrixJson(cert.linearChange);
  if (!cert.chartIsLinear) {
    Json chart = Json::array();
    for (const JetFunction &c : cert.chart.components)
      chart.push_back(jetJson(c));
    j["chart"] = chart;
  }
  Json degrees = Json::array();
  for (const auto &d : cert.perBasisDegrees)
    degrees.push_back(d ? Json(*d) : Json(nullptr));
  j["perBasisDegrees"] = degrees;
  Json bounds = Json::array();
  for (const auto &d : cert.seriesDegreeBounds)
    bounds.push_back(d ? Json(*d) : Json(nullptr));
  j["seriesDegreeBounds"] = bounds;
  j["zeroPartCommutes"] = cert.zeroPartCommutes;
  if (cert.transformedBasis)
    j["transformedBasis"] = fieldsJson(*cert.transformedBasis);
  return j;
}

Json witnessJson(const LieWitness &witness) {
  Json j;
  switch (witness.verdict) {
  case LieWitness::Verdict::Witnessed: j["verdict"] = "witnessed"; break;
  case LieWitness::Verdict::WitnessedWithUnresolvedFactors:
    j["verdict"] = "witnessedWithUnresolvedFactors";
    break;
  case LieWitness::Verdict::Failed: j["verdict"] = "failed"; break;
  }
  if (!witness.note.empty())
    j["note"] = witness.note;
  j["coordinates"] = witness.coordinateGenerators;
  j["exponentialGenerators"] = witness.exponentialGenerators;
  Json dirs = Json::array();
  for (const auto &d : witness.perDirection) {
    Json dir;
    dir["variable"] = d.variable;
    dir["recurrenceOrder"] = d.recurrence.order();
    Json coeffs = Json::array();
    for (const Rat &c : d.recurrence.coefficients)
      coeffs.push_back(ratJson(c));
    dir["recurrence"] = coeffs;
    Json spec;
    Json charPoly = Json::array();
    for (const Rat &c : d.spectrum.charPoly)
      charPoly.push_back(ratJson(c));
    spec["characteristicPolynomial"] = charPoly;
    spec["zeroRootMultiplicity"] = d.spectrum.zeroRootMultiplicity;
    Json roots = Json::array();
    for (const auto &[root, mult] : d.spectrum.rationalRoots) {
      Json r;
      r["root"] = ratJson(root);
      r["multiplicity"] = mult;
      roots.push_back(r);
    }
    spec["rationalRoots"] = roots;
    Json pairs = Json::array();
    for (const auto &[pair, mult] : d.spectrum.complexPairs) {
      Json p;
      p["re"] = ratJson(pair.first);
      p["im"] = ratJson(pair.second);
      p["multiplicity"] = mult;
      pairs.push_back(p);
    }
    spec["complexPairs"] = pairs;
    Json unresolved = Json::array();
    for (const QPoly &u : d.spectrum.unresolved) {
      Json poly = Json::array();
      for (const Rat &c : u)
        poly.push_back(ratJson(c));
      unresolved.push_back(poly);
    }
    spec["unresolved"] = unresolved;
    dir["spectrum"] = spec;
    dirs.push_back(dir);
  }
  j["directions"] = dirs;
  Json receipts = Json::array();
  for (const auto &r : witness.receipts) {
    Json receipt;
    receipt["coefficient"] = r.coefficient;
    receipt["covered"] = r.covered;
    receipts.push_back(receipt);
  }
  j["receipts"] = receipts;
  return j;
}

std::string dumpJson(const Json &j) { return j.dump(2) + "\n"; }

} // namespace lievec
