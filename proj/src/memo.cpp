#include "thermocalc/memo.hpp"

#include <vector>

namespace thermocalc {

namespace {

std::atomic<std::size_t> g_cache_limit{0};

struct Registry {
  std::mutex mutex;
  std::vector<std::function<void()>> clears;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

void set_cache_limit(std::size_t entries) { g_cache_limit.store(entries, std::memory_order_relaxed); }

std::size_t cache_limit() { return g_cache_limit.load(std::memory_order_relaxed); }

void clear_caches() {
  std::vector<std::function<void()>> clears;
  {
    std::lock_guard lock(registry().mutex);
    clears = registry().clears;
  }
  for (auto& c : clears) c();
}

namespace detail {

void register_cache(std::function<void()> clear) {
  std::lock_guard lock(registry().mutex);
  registry().clears.push_back(std::move(clear));
}

}  // namespace detail
}  // namespace thermocalc
