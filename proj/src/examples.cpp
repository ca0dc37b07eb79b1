#include "trb/examples.hpp"

namespace trb::examples {

namespace {

LieAlgebra from_pairs(std::size_t dim, const std::vector<Assignment>& pairs) {
  return LieAlgebra(cochain_from_values(2, dim, dim, pairs));
}

}  // namespace

LieAlgebra sl2() { return from_pairs(3, {{{0, 1}, {0, 2, 0}}, {{0, 2}, {0, 0, -2}}, {{1, 2}, {1, 0, 0}}}); }

LieAlgebra heisenberg() { return from_pairs(3, {{{0, 1}, {0, 0, 1}}}); }

LieAlgebra aff2() { return from_pairs(2, {{{0, 1}, {0, 1}}}); }

LieAlgebra so3() { return from_pairs(3, {{{0, 1}, {0, 0, 1}}, {{0, 2}, {0, -1, 0}}, {{1, 2}, {1, 0, 0}}}); }

}  // namespace trb::examples
