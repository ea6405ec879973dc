#ifndef LIEVEC_REPORTS_HPP
#define LIEVEC_REPORTS_HPP

#include "conjecture.hpp"
#include "grading.hpp"
#include "parser.hpp"

#include <json.hpp>

namespace lievec {

// insertion-ordered keys keep every report byte-reproducible
using Json = nlohmann::ordered_json;

Json analyzeJson(const LieAlgebra &L);
Json seriesJson(const SeriesReport &report, const LieAlgebra &L);
std::string nilradicalText(const LieAlgebra &L);
Json membershipJson(const std::vector<VectorField> &fields, const Dilation &h,
                    MembershipMode mode);
Json enumerateJson(const Dilation &h, long degree);
Json certificateJson(const NormalizationCertificate &cert);
Json witnessJson(const LieWitness &witness);

std::string dumpJson(const Json &j);

} // namespace lievec

#endif
