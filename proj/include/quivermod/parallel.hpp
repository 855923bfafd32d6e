#pragma once

namespace quivermod {

enum class Execution { serial, parallel };

/// Worker cap: QUIVERMOD_THREADS when set to a positive integer, otherwise
/// the OpenMP default for this machine.
int configured_thread_count();

}  // namespace quivermod
