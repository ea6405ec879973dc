#ifndef LIEVEC_ERRORS_HPP
#define LIEVEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lievec {

enum class ErrorKind {
  Parse,
  ArityMismatch,
  ContextMismatch,
  DimensionCapExceeded,
  NotClosed,
  NotSolvable,
  NotTransitive,
  NotProjectable,
  NotGradable,
  DegreeOutOfRange,
  SingularJetMap,
  NotClosedForm,
  BoundExceeded,
  NotCertified,
  InternalCertificateFailure,
  Usage,
};

const char *errorKindName(ErrorKind k);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &msg)
      : std::runtime_error(std::string(errorKindName(kind)) + ": " + msg),
        kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

inline const char *errorKindName(ErrorKind k) {
  switch (k) {
  case ErrorKind::Parse: return "ParseError";
  case ErrorKind::ArityMismatch: return "ArityMismatch";
  case ErrorKind::ContextMismatch: return "ContextMismatch";
  case ErrorKind::DimensionCapExceeded: return "DimensionCapExceeded";
  case ErrorKind::NotClosed: return "NotClosed";
  case ErrorKind::NotSolvable: return "NotSolvable";
  case ErrorKind::NotTransitive: return "NotTransitive";
  case ErrorKind::NotProjectable: return "NotProjectable";
  case ErrorKind::NotGradable: return "NotGradable";
  case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
  case ErrorKind::SingularJetMap: return "SingularJetMap";
  case ErrorKind::NotClosedForm: return "NotClosedForm";
  case ErrorKind::BoundExceeded: return "BoundExceeded";
  case ErrorKind::NotCertified: return "NotCertified";
  case ErrorKind::InternalCertificateFailure: return "InternalCertificateFailure";
  case ErrorKind::Usage: return "UsageError";
  }
  return "Error";
}

} // namespace lievec

#endif
