#ifndef LIEVEC_NILRAD_HPP
#define LIEVEC_NILRAD_HPP

#include "liealg.hpp"

namespace lievec {

/// Adjoint matrices of a basis plus (once computed) a basis of the
/// associative matrix algebra they generate.
struct AdWorkspace {
  std::size_t dim = 0;
  std::vector<QMatrix> adMatrices;
  std::vector<QMatrix> envelopeBasis;
};

AdWorkspace adjointMatrices(const StructureTensor &t);

// Fills in envelopeBasis: the non-unital associative algebra generated by
// the nonzero ad matrices, closed under right-multiplication by generators.
AdWorkspace associativeEnvelope(AdWorkspace w);

// J = { a in envelope : trace(a b) = 0 for every envelope element b },
// the radical of the envelope in characteristic 0. Every returned matrix is
// verified nilpotent.
std::vector<QMatrix> traceRadical(const AdWorkspace &w);

// Nilradical of a solvable algebra: the preimage of the envelope radical
// under x -> ad_x. Postconditions (ideal, nilpotent, contains [L,L]) are
// verified before returning.
Subspace nilradical(const StructureTensor &t);

// L^0 = L, L^1 = nr(L), L^{i+1} = [nr(L), L^i].
SeriesReport nilradicalSeries(const StructureTensor &t);
SeriesReport nilradicalSeries(const LieAlgebra &L);

} // namespace lievec

#endif
