#pragma once

namespace g2forge {

// Worker count for parallel kernels: G2FORGE_THREADS if set to a positive
// integer, otherwise the OpenMP default (1 in serial builds).
int effectiveThreads();

}  // namespace g2forge
