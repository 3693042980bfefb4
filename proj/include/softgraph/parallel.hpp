#pragma once

#include <future>
#include <thread>
#include <vector>

namespace softgraph {

inline int default_threads() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Order-preserving parallel map: result[i] = fn(items[i]). Deterministic
// regardless of thread count.
template <class T, class R, class F>
std::vector<R> parallel_map(const std::vector<T>& items, F fn, int threads = 0) {
  if (threads <= 0) threads = default_threads();
  std::vector<R> out(items.size());
  if (threads == 1 || items.size() < 2) {
    for (size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
    return out;
  }
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= items.size()) return;
      out[i] = fn(items[i]);
    }
  };
  std::vector<std::thread> pool;
  int nt = std::min<int>(threads, static_cast<int>(items.size()));
  pool.reserve(nt);
  for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace softgraph
