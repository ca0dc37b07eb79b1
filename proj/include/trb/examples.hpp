#pragma once

#include "trb/liealg.hpp"

namespace trb::examples {

/// Basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LieAlgebra sl2();
/// [x, y] = z.
LieAlgebra heisenberg();
/// [x, y] = y.
LieAlgebra aff2();
/// [x0,x1] = x2, [x1,x2] = x0, [x2,x0] = x1.
LieAlgebra so3();

}  // namespace trb::examples
