#include "vfield.hpp"

#include "errors.hpp"

#include <cassert>

namespace lievec {

std::size_t VarContext::indexOf(const std::string &name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name)
      return i;
  return static_cast<std::size_t>(-1);
}

VectorField::VectorField(VarContext ctx, std::vector<ExpPoly> components)
    : ctx_(std::move(ctx)), comps_(std::move(components)) {
  assert(comps_.size() == ctx_.size());
  for (const auto &c : comps_)
    assert(c.arity() == ctx_.size());
}

VectorField VectorField::zero(const VarContext &ctx) {
  return VectorField(ctx,
                     std::vector<ExpPoly>(ctx.size(), ExpPoly(ctx.size())));
}

VectorField VectorField::coordinate(const VarContext &ctx, std::size_t i) {
  std::vector<ExpPoly> comps(ctx.size(), ExpPoly(ctx.size()));
  comps[i] = ExpPoly::constant(ctx.size(), Rat(1));
  return VectorField(ctx, std::move(comps));
}

bool VectorField::isZero() const {
  for (const auto &c : comps_)
    if (!c.isZero())
      return false;
  return true;
}

void VectorField::requireSameContext(const VectorField &o) const {
  if (ctx_ != o.ctx_)
    throw Error(ErrorKind::ContextMismatch,
                "vector fields over different variable contexts");
}

VectorField VectorField::plus(const VectorField &o) const {
  requireSameContext(o);
  std::vector<ExpPoly> comps;
  comps.reserve(comps_.size());
  for (std::size_t j = 0; j < comps_.size(); ++j)
    comps.push_back(comps_[j].plus(o.comps_[j]));
  return VectorField(ctx_, std::move(comps));
}

VectorField VectorField::minus(const VectorField &o) const {
  return plus(o.scaled(Rat(-1)));
}

VectorField VectorField::scaled(const Rat &c) const {
  std::vector<ExpPoly> comps;
  comps.reserve(comps_.size());
  for (const auto &comp : comps_)
    comps.push_back(comp.scaled(c));
  return VectorField(ctx_, std::move(comps));
}

ExpPoly VectorField::applyDerivation(const ExpPoly &f) const {
  if (f.arity() != ctx_.size())
    throw Error(ErrorKind::ContextMismatch,
                "applyDerivation: function arity differs from context");
  ExpPoly out(ctx_.size());
  for (std::size_t j = 0; j < comps_.size(); ++j) {
    if (comps_[j].isZero())
      continue;
    out = out.plus(comps_[j].times(f.partial(j)));
  }
  return out;
}

VectorField VectorField::bracket(const VectorField &o) const {
  requireSameContext(o);
  std::vector<ExpPoly> comps;
  comps.reserve(comps_.size());
  for (std::size_t j = 0; j < comps_.size(); ++j)
    comps.push_back(
        applyDerivation(o.comps_[j]).minus(o.applyDerivation(comps_[j])));
  return VectorField(ctx_, std::move(comps));
}

QVec VectorField::evalOrigin() const {
  QVec v(comps_.size());
  for (std::size_t j = 0; j < comps_.size(); ++j)
    v[j] = comps_[j].evalOrigin();
  return v;
}

FieldCoordinates fieldCoordinates(const std::vector<VectorField> &fields) {
  std::size_t n = fields.empty() ? 0 : fields[0].arity();
  for (const auto &f : fields)
    if (f.arity() != n || f.context() != fields[0].context())
      throw Error(ErrorKind::ContextMismatch,
                  "fieldCoordinates: mixed contexts");
  // shared key basis across every component of every field
  std::vector<ExpPoly> all;
  for (const auto &f : fields)
    for (const auto &c : f.components())
      all.push_back(c);
  CoordinateBasis cb = coordinateMatrix(all);
  std::size_t k = cb.keys.size();
  FieldCoordinates out;
  out.keys = cb.keys;
  out.matrix = QMatrix(fields.size(), n * k);
  for (std::size_t r = 0; r < fields.size(); ++r)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t c = 0; c < k; ++c)
        out.matrix.at(r, j * k + c) = cb.matrix.at(r * n + j, c);
  return out;
}

std::vector<VectorField> spanReduce(const std::vector<VectorField> &fields) {
  if (fields.empty())
    return {};
  FieldCoordinates fc = fieldCoordinates(fields);
  SpanBuilder span(fc.matrix.cols());
  std::vector<VectorField> basis;
  for (std::size_t r = 0; r < fields.size(); ++r)
    if (span.insert(fc.matrix.row(r)))
      basis.push_back(fields[r]);
  return basis;
}

} // namespace lievec
