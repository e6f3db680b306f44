#pragma once

#include <stdexcept>
#include <string>

namespace annular {

// Thrown when an enumeration would exceed the configured ground-set bound.
struct BoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Largest m any exhaustive enumeration accepts. Defaults to 14, or
// ANNULAR_MAX_M from the environment; set_enumeration_bound overrides both.
int enumeration_bound();
void set_enumeration_bound(int m);
void check_bound(int m, const std::string& what);

// Worker threads for the parallel sweeps (0 = hardware concurrency).
int worker_threads();
void set_worker_threads(int n);

} // namespace annular
