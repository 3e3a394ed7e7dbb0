#pragma once

namespace dodgson {

/// True when the build has OpenMP; the *_parallel kernels degrade to their
/// serial twins otherwise.
bool openmp_enabled() noexcept;

/// OpenMP's max thread count, or 1 without OpenMP.
int hardware_threads() noexcept;

/// Maps a requested thread count to an effective one: 0 means all available,
/// anything else is clamped to at least 1.
int resolve_threads(int requested) noexcept;

}  // namespace dodgson
