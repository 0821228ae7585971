#pragma once

namespace lsqt {

/// Selects between an OpenMP kernel and its serial reference. Both produce
/// identical results; the serial path exists for testing and benchmarking.
enum class Execution { serial, parallel };

/// Worker count OpenMP regions will use.
int worker_count();

/// Caps the OpenMP worker count at the value of LSQT_THREADS, if set and
/// positive. Returns the resulting worker count.
int apply_thread_cap_from_env();

}  // namespace lsqt
