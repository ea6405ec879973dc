#ifndef LIEVEC_PARSER_HPP
#define LIEVEC_PARSER_HPP

#include "vfield.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lievec {

/// Parsed algebra file: variable declaration, generators, optional weights.
struct AlgebraFile {
  VarContext context;
  std::vector<VectorField> generators;
  std::optional<std::vector<unsigned>> weights;
};

// Grammar (whitespace-insensitive):
//   field    := ['-'] term (('+'|'-') term)*
//   term     := (factor '*')* 'd_' var
//   factor   := rational | var | var '^' nat
//             | ('exp'|'sin'|'cos') '(' linform ')'
//   linform  := ['-'] linterm (('+'|'-') linterm)*
//   linterm  := rational ['*'? var] | var
//   rational := int ['/' posint]
VectorField parseField(const std::string &text, const VarContext &ctx);

// Scalar expression (a field term without the trailing 'd_' direction).
ExpPoly parseCoeffExpr(const std::string &text, const VarContext &ctx);

// File format, one declaration per line ('#' starts a comment):
//   vars x, y, u
//   weights 0, 1, 2        (optional)
//   gen y^2*d_x - u*d_u
AlgebraFile parseAlgebraFile(const std::string &text);

std::string printField(const VectorField &f);
std::string printCoeff(const ExpPoly &f, const VarContext &ctx);
std::string printAlgebraFile(const AlgebraFile &file);

} // namespace lievec

#endif
