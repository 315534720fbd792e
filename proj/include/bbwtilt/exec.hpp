#pragma once

namespace bbwtilt {

/// Kernels that have an OpenMP implementation also keep a serial one; both
/// must produce identical results.
enum class Exec { Serial, Parallel };

/// Number of OpenMP threads available (1 when built without OpenMP).
int max_threads() noexcept;

} // namespace bbwtilt
