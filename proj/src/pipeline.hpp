#ifndef LIEVEC_PIPELINE_HPP
#define LIEVEC_PIPELINE_HPP

#include "grading.hpp"
#include "jets.hpp"
#include "nilrad.hpp"

#include <optional>
#include <string>

namespace lievec {

/// Indices where the origin-evaluated series dimensions drop, block sizes
/// and partial sums; (r_i, a_i, b_i) determine the weights.
struct FlagProfile {
  std::vector<std::size_t> r;
  std::vector<std::size_t> a;
  std::vector<std::size_t> b;
  std::size_t m = 0; // number of blocks
  std::size_t k = 0; // series height
};

// Reads the drops off dimsAtOrigin. The lower-central chain is 1-indexed,
// the nilradical chain 0-indexed. NotTransitive when dim L(0) < n.
FlagProfile flagProfile(const SeriesReport &series, std::size_t nVars);

// Block j of new variables receives weight r_j.
std::vector<unsigned> deriveWeights(const FlagProfile &profile);

/// Fields Y_1..Y_n from L, grouped by layer; the values at the origin of
/// layer j complete a basis of L^{r_j}(0) modulo L^{r_j+1}(0).
struct AdaptedFrame {
  std::vector<VectorField> fields;
  std::vector<std::size_t> layerOf; // block index (0-based) per field
};

AdaptedFrame adaptedFrame(const LieAlgebra &L, const SeriesReport &series,
                          const FlagProfile &profile);

enum class SeriesPath { Auto, Nilpotent, Solvable };
enum class ChartStrategy { Forms, Flows };

struct NormalizeOptions {
  unsigned jetOrder = 0; // 0: 2*(w(h)+1) once the weights are known
  SeriesPath path = SeriesPath::Auto;
  ChartStrategy strategy = ChartStrategy::Forms;
};

// Jet chart adapted to the frame: layer by layer, solves the duality system
// Y_s(y^l) = delta_s^l (s running over the frame fields of this layer and
// deeper) degree by degree, zeroing the free leaf-constant coefficients.
// Errors: SingularJetMap (degenerate frame), NotClosedForm (inconsistent
// system: the input does not satisfy the flag relations).
JetMap buildChart(const AdaptedFrame &frame, const FlagProfile &profile,
                  unsigned jetOrder);

// Composition of the frame flows applied to the origin, inverted; the
// cross-check strategy behind `--strategy flows`.
JetMap buildChartFlows(const AdaptedFrame &frame, unsigned jetOrder);

enum class CertStatus { Certified, CertifiedNilpotent, Failed };

struct NormalizationCertificate {
  CertStatus status = CertStatus::Failed;
  std::string failureReason; // empty unless status == Failed
  SeriesPath pathUsed = SeriesPath::Auto;
  SeriesReport series;
  FlagProfile profile;
  std::vector<unsigned> weights;         // per new variable
  std::vector<std::string> newNames;     // new variable names
  VarContext newContext() const;
  QMatrix linearChange;                  // linear part of the chart
  JetMap chart;                          // full chart at order jetOrder
  bool chartIsLinear = false;
  unsigned jetOrder = 0;
  // max degree of each (transformed) basis element; empty optional for 0
  std::vector<std::optional<long>> perBasisDegrees;
  // max degree over the transformed chain member L^s, s = 1..k
  std::vector<std::optional<long>> seriesDegreeBounds;
  bool zeroPartCommutes = false;
  bool zeroWeightBlock = false; // r_1 == 0 (the paper's second case)
  // exact transformed basis; present when the chart is linear
  std::optional<std::vector<VectorField>> transformedBasis;

  bool certified() const {
    return status == CertStatus::Certified ||
           status == CertStatus::CertifiedNilpotent;
  }
};

// The full pipeline: series -> profile -> weights -> frame -> chart ->
// pushforward -> degree checks. Tries the linear chart first (it keeps the
// transformed algebra inside the coefficient ring); falls back to the jet
// construction when the linear chart does not certify.
NormalizationCertificate normalize(const LieAlgebra &L,
                                   const NormalizeOptions &opts = {});

} // namespace lievec

#endif
