#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace sym {

// Worker count for scans: PETRIE_THREADS when set to a positive integer,
// otherwise the number of hardware threads.
unsigned scan_threads();

// Evaluates check(i) for i in [0, count) on scan_threads() workers and
// returns the smallest i for which check fails. Indices above a known
// failure are skipped, so the answer does not depend on scheduling.
// An exception thrown by check is rethrown on the calling thread.
std::optional<std::size_t> find_first_failure(std::size_t count,
                                              const std::function<bool(std::size_t)>& check);

} // namespace sym
