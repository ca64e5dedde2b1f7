#pragma once

#include <cstdint>

namespace uper {

// Peak resident set size of this process in bytes; 0 when unavailable.
std::int64_t peak_memory_bytes();

// Best effort: restarts peak tracking so the next reading covers only
// subsequent work. No-op where unsupported.
void reset_peak_memory();

}  // namespace uper
