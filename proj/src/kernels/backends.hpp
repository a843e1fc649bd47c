#pragma once

#include "mlab/kernels/kernels.hpp"

namespace mlab::kernels {

const Ops& scalar_ops();

// Null when this build carries no AVX2 code path.
const Ops* avx2_ops();

}  // namespace mlab::kernels
