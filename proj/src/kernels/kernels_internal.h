#ifndef SMGAME_SRC_KERNELS_KERNELS_INTERNAL_H_
#define SMGAME_SRC_KERNELS_KERNELS_INTERNAL_H_

#include "smgame/kernels.h"

namespace smgame::kernels::internal {

// Defined in kernels_avx2.cc; only linked when SMGAME_BUILD_AVX2 is set.
const KernelTable& Avx2Table();

}  // namespace smgame::kernels::internal

#endif  // SMGAME_SRC_KERNELS_KERNELS_INTERNAL_H_
