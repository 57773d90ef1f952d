#pragma once

#include <cstddef>
#include <functional>

namespace wbou {

/// Calls body(i) for i in [0, n) on up to `workers` threads (0 = hardware
/// concurrency). Indices are handed out dynamically; callers write results
/// into slot i so the outcome does not depend on scheduling. The first
/// exception thrown by any call is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  unsigned workers = 0);

}  // namespace wbou
