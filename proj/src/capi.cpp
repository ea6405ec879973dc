#include "lievec/lievec.h"

#include "conjecture.hpp"
#include "errors.hpp"
#include "reports.hpp"

#include <cstring>
#include <string>

using namespace lievec;

struct lievec_algebra {
  LieAlgebra algebra;
};

namespace {

char *dupString(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (out)
    std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

lievec_status statusOf(const Error &e) {
  switch (e.kind()) {
  case ErrorKind::Parse:
    return LIEVEC_ERROR_PARSE;
  case ErrorKind::Usage:
    return LIEVEC_ERROR_USAGE;
  case ErrorKind::InternalCertificateFailure:
  case ErrorKind::BoundExceeded:
  case ErrorKind::NotClosedForm:
    return LIEVEC_ERROR_INTERNAL;
  default:
    return LIEVEC_ERROR_PRECONDITION;
  }
}

template <typename Fn>
lievec_status guarded(char **out_error, Fn &&fn) {
  if (out_error)
    *out_error = nullptr;
  try {
    return fn();
  } catch (const Error &e) {
    if (out_error)
      *out_error = dupString(e.what());
    return statusOf(e);
  } catch (const std::exception &e) {
    if (out_error)
      *out_error = dupString(std::string("internal error: ") + e.what());
    return LIEVEC_ERROR_INTERNAL;
  }
}

std::vector<std::string> splitCsv(const std::string &s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty())
    out.push_back(cur);
  return out;
}

Dilation dilationFromCsv(const char *vars_csv, const char *weights_csv) {
  if (!vars_csv || !weights_csv)
    throw Error(ErrorKind::Usage, "vars and weights are required");
  Dilation h;
  for (const std::string &name : splitCsv(vars_csv))
    h.context.names.push_back(name);
  for (const std::string &w : splitCsv(weights_csv)) {
    for (char c : w)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw Error(ErrorKind::Usage,
                    "weights must be non-negative integers, got '" + w + "'");
    h.weights.push_back(static_cast<unsigned>(std::stoul(w)));
  }
  if (h.context.names.empty() ||
      h.context.names.size() != h.weights.size())
    throw Error(ErrorKind::Usage,
                "weights count must match the variable count");
  return h;
}

std::size_t resolveCap(int max_dim) {
  if (max_dim < 0)
    throw Error(ErrorKind::Usage, "max_dim must be non-negative");
  return max_dim == 0 ? LieAlgebra::kDefaultCap
                      : static_cast<std::size_t>(max_dim);
}

NormalizeOptions optionsFrom(unsigned jet_order, const char *path,
                             const char *strategy) {
  NormalizeOptions opts;
  opts.jetOrder = jet_order;
  std::string p = path ? path : "auto";
  if (p == "auto")
    opts.path = SeriesPath::Auto;
  else if (p == "nilpotent")
    opts.path = SeriesPath::Nilpotent;
  else if (p == "solvable")
    opts.path = SeriesPath::Solvable;
  else
    throw Error(ErrorKind::Usage, "path must be auto, nilpotent or solvable");
  std::string s = strategy ? strategy : "forms";
  if (s == "forms")
    opts.strategy = ChartStrategy::Forms;
  else if (s == "flows")
    opts.strategy = ChartStrategy::Flows;
  else
    throw Error(ErrorKind::Usage, "strategy must be forms or flows");
  return opts;
}

} // namespace

extern "C" {

const char *lievec_version(void) { return "0.1.0"; }

const char *lievec_status_name(lievec_status status) {
  switch (status) {
  case LIEVEC_OK: return "ok";
  case LIEVEC_ERROR_USAGE: return "usage-error";
  case LIEVEC_ERROR_PARSE: return "parse-error";
  case LIEVEC_ERROR_PRECONDITION: return "precondition-violation";
  case LIEVEC_ERROR_INTERNAL: return "internal-certificate-failure";
  }
  return "unknown";
}

void lievec_string_free(char *s) { std::free(s); }

lievec_status lievec_algebra_open(const char *file_text, int max_dim,
                                  lievec_algebra **out_algebra,
                                  char **out_error) {
  return guarded(out_error, [&]() {
    if (!file_text || !out_algebra)
      throw Error(ErrorKind::Usage, "file text and output handle required");
    AlgebraFile file = parseAlgebraFile(file_text);
    LieAlgebra L = LieAlgebra::closure(file.generators, resolveCap(max_dim));
    *out_algebra = new lievec_algebra{std::move(L)};
    return LIEVEC_OK;
  });
}

void lievec_algebra_close(lievec_algebra *algebra) { delete algebra; }

lievec_status lievec_parse(const char *file_text, char **out_text,
                           char **out_error) {
  return guarded(out_error, [&]() {
    if (!file_text || !out_text)
      throw Error(ErrorKind::Usage, "file text and output required");
    AlgebraFile file = parseAlgebraFile(file_text);
    std::string out;
    for (const VectorField &f : file.generators)
      out += printField(f) + "\n";
    *out_text = dupString(out);
    return LIEVEC_OK;
  });
}

lievec_status lievec_analyze(const lievec_algebra *algebra, char **out_json,
                             char **out_error) {
  return guarded(out_error, [&]() {
    if (!algebra || !out_json)
      throw Error(ErrorKind::Usage, "algebra handle and output required");
    *out_json = dupString(dumpJson(analyzeJson(algebra->algebra)));
    return LIEVEC_OK;
  });
}

lievec_status lievec_series(const lievec_algebra *algebra, const char *kind,
                            char **out_json, char **out_error) {
  return guarded(out_error, [&]() {
    if (!algebra || !out_json)
      throw Error(ErrorKind::Usage, "algebra handle and output required");
    std::string k = kind ? kind : "";
    SeriesReport report;
    if (k == "derived")
      report = algebra->algebra.derivedSeries();
    else if (k == "lcs")
      report = algebra->algebra.lowerCentralSeries();
    else if (k == "nilradical")
      report = nilradicalSeries(algebra->algebra);
    else
      throw Error(ErrorKind::Usage,
                  "kind must be derived, lcs or nilradical");
    *out_json = dupString(dumpJson(seriesJson(report, algebra->algebra)));
    return LIEVEC_OK;
  });
}

lievec_status lievec_nilradical(const lievec_algebra *algebra,
                                char **out_text, char **out_error) {
  return guarded(out_error, [&]() {
    if (!algebra || !out_text)
      throw Error(ErrorKind::Usage, "algebra handle and output required");
    *out_text = dupString(nilradicalText(algebra->algebra));
    return LIEVEC_OK;
  });
}

lievec_status lievec_grade(const char *file_text, const char *weights_csv,
                           const char *mode, char **out_json,
                           char **out_error) {
  return guarded(out_error, [&]() {
    if (!file_text || !out_json)
      throw Error(ErrorKind::Usage, "file text and output required");
    AlgebraFile file = parseAlgebraFile(file_text);
    Dilation h;
    h.context = file.context;
    if (weights_csv && *weights_csv) {
      for (const std::string &w : splitCsv(weights_csv)) {
        for (char c : w)
          if (!std::isdigit(static_cast<unsigned char>(c)))
            throw Error(ErrorKind::Usage, "weights must be non-negative");
        h.weights.push_back(static_cast<unsigned>(std::stoul(w)));
      }
    } else if (file.weights) {
      h.weights = *file.weights;
    } else {
      throw Error(ErrorKind::Usage,
                  "no weights given and the file has no weights line");
    }
    if (h.weights.size() != h.context.size())
      throw Error(ErrorKind::Usage,
                  "weights count must match the variable count");
    std::string m = mode ? mode : "nonpos";
    MembershipMode mm;
    if (m == "nonpos")
      mm = MembershipMode::NonPositive;
    else if (m == "strictneg")
      mm = MembershipMode::StrictlyNegative;
    else
      throw Error(ErrorKind::Usage, "mode must be nonpos or strictneg");
    *out_json =
        dupString(dumpJson(membershipJson(file.generators, h, mm)));
    return LIEVEC_OK;
  });
}

lievec_status lievec_enumerate(const char *vars_csv, const char *weights_csv,
                               long degree, char **out_json,
                               char **out_error) {
  return guarded(out_error, [&]() {
    if (!out_json)
      throw Error(ErrorKind::Usage, "output required");
    Dilation h = dilationFromCsv(vars_csv, weights_csv);
    *out_json = dupString(dumpJson(enumerateJson(h, degree)));
    return LIEVEC_OK;
  });
}

lievec_status lievec_normalize(const lievec_algebra *algebra,
                               unsigned jet_order, const char *path,
                               const char *strategy, int *out_certified,
                               char **out_json, char **out_error) {
  return guarded(out_error, [&]() {
    if (!algebra || !out_json)
      throw Error(ErrorKind::Usage, "algebra handle and output required");
    NormalizationCertificate cert =
        normalize(algebra->algebra, optionsFrom(jet_order, path, strategy));
    if (out_certified)
      *out_certified = cert.certified() ? 1 : 0;
    *out_json = dupString(dumpJson(certificateJson(cert)));
    return LIEVEC_OK;
  });
}

lievec_status lievec_witness(const lievec_algebra *algebra,
                             unsigned jet_order, int *out_witnessed,
                             char **out_json, char **out_error) {
  return guarded(out_error, [&]() {
    if (!algebra || !out_json)
      throw Error(ErrorKind::Usage, "algebra handle and output required");
    NormalizeOptions opts;
    opts.jetOrder = jet_order;
    NormalizationCertificate cert = normalize(algebra->algebra, opts);
    if (!cert.certified())
      throw Error(ErrorKind::NotCertified,
                  "normalization failed: " + cert.failureReason);
    LieWitness witness = lieWitness(cert);
    if (out_witnessed)
      *out_witnessed =
          witness.verdict != LieWitness::Verdict::Failed ? 1 : 0;
    *out_json = dupString(dumpJson(witnessJson(witness)));
    return LIEVEC_OK;
  });
}

lievec_status lievec_generate(const char *vars_csv, const char *weights_csv,
                              uint64_t seed, const char *density, int max_dim,
                              char **out_file_text, char **out_error) {
  return guarded(out_error, [&]() {
    if (!out_file_text)
      throw Error(ErrorKind::Usage, "output required");
    Dilation h = dilationFromCsv(vars_csv, weights_csv);
    RandomSolvableParams params;
    params.cap = resolveCap(max_dim);
    if (density && *density) {
      try {
        params.density = parseRat(density);
      } catch (const std::exception &) {
        throw Error(ErrorKind::Usage, "density must be a rational p/q");
      }
      if (sgn(params.density) < 0 || params.density > 1)
        throw Error(ErrorKind::Usage, "density must lie in [0, 1]");
    }
    LieAlgebra L = randomSolvable(h, seed, params);
    AlgebraFile file;
    file.context = h.context;
    file.weights = h.weights;
    file.generators = L.basis();
    *out_file_text = dupString(printAlgebraFile(file));
    return LIEVEC_OK;
  });
}

} // extern "C"
