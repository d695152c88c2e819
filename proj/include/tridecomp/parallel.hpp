#ifndef TRIDECOMP_PARALLEL_HPP
#define TRIDECOMP_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace tridecomp {

/// Worker count to use when the caller passes 0: hardware concurrency, at least 1.
unsigned default_jobs();

/// Runs fn(worker, index) for every index in [0, count) on up to `jobs`
/// threads. Indices are handed out dynamically; results must be written to
/// per-index or per-worker slots. The first exception thrown is rethrown.
void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(unsigned worker, std::size_t index)>& fn);

}  // namespace tridecomp

#endif
