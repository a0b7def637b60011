#include "icpm/gf2_span.hpp"

#include "icpm/errors.hpp"

namespace icpm {

std::vector<Gf2Word> pack_columns(const FieldMatrix& m) {
  if (m.modulus() != 2) throw ValidationError("packed columns require q=2");
  if (m.rows() > 64) throw ShapeMismatch("packed columns hold at most 64 rows");
  std::vector<Gf2Word> out(static_cast<std::size_t>(m.cols()), 0);
  for (Index c = 0; c < m.cols(); ++c)
    for (Index r = 0; r < m.rows(); ++r)
      if (m(r, c) != 0) out[c] |= Gf2Word{1} << r;
  return out;
}

}  // namespace icpm
