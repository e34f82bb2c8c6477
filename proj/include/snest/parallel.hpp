#pragma once

namespace snest {

/// Kernel variants. `reference` forms every E_A (x) E_B explicitly and is
/// kept as the test oracle; `serial` and `parallel` share the contracted
/// per-row kernel, the latter distributing rows over OpenMP threads.
enum class Execution { reference, serial, parallel };

/// Thread count for OpenMP regions: SNEST_THREADS if set and positive, capped
/// by the machine's parallelism; otherwise the machine's parallelism.
int configured_threads();

}  // namespace snest
