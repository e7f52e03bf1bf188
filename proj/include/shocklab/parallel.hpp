#ifndef SHOCKLAB_PARALLEL_HPP
#define SHOCKLAB_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace shocklab {

// Runs fn(i) for i in [0, n) on up to `threads` workers, in contiguous
// chunks.  fn must only touch state owned by index i; results are then
// deterministic regardless of the thread count.  threads <= 1 runs inline.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& fn);

int hardware_threads();

}  // namespace shocklab

#endif
