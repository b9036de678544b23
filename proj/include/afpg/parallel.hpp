#ifndef AFPG_PARALLEL_HPP
#define AFPG_PARALLEL_HPP

#include <algorithm>
#include <thread>
#include <vector>

namespace afpg {

/// Worker count for assembly: hardware concurrency, capped by AFPG_THREADS.
int assembly_threads();

/// Calls f(begin, end) on disjoint chunks covering [0, n). Small ranges run
/// on the calling thread.
template <class F>
void parallel_for(int n, F&& f, int grain = 2048) {
  const int chunks = std::min(assembly_threads(), (n + grain - 1) / grain);
  if (chunks <= 1) {
    f(0, n);
    return;
  }
  std::vector<std::jthread> workers;
  workers.reserve(chunks - 1);
  const int size = (n + chunks - 1) / chunks;
  for (int c = 1; c < chunks; ++c) {
    const int b = c * size, e = std::min(n, b + size);
    if (b < e) workers.emplace_back([&f, b, e] { f(b, e); });
  }
  f(0, std::min(n, size));
}

}  // namespace afpg

#endif  // AFPG_PARALLEL_HPP
