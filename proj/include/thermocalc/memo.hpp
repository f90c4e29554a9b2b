#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>

namespace thermocalc {

/// Global bound on the number of entries any single memo table may hold
/// before it is flushed. Zero means unbounded (the default).
void set_cache_limit(std::size_t entries);
std::size_t cache_limit();

/// Drops every memoized result. Interned games stay valid.
void clear_caches();

namespace detail {

void register_cache(std::function<void()> clear);

struct PairHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const noexcept {
    return std::hash<std::uint64_t>{}(p.first * 0x9e3779b97f4a7c15ULL ^ (p.second + 0x632be59bd9b4e019ULL));
  }
};

/// Thread-safe memo table. Concurrent inserts of the same key are
/// idempotent since every cached function is pure.
template <class Key, class Value, class Hash = std::hash<Key>>
class MemoTable {
 public:
  MemoTable() {
    register_cache([this] { clear(); });
  }
  MemoTable(const MemoTable&) = delete;
  MemoTable& operator=(const MemoTable&) = delete;

  std::optional<Value> find(const Key& key) const {
    std::lock_guard lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  void insert(const Key& key, const Value& value) {
    std::lock_guard lock(mutex_);
    const std::size_t limit = cache_limit();
    if (limit != 0 && map_.size() >= limit) map_.clear();
    map_.emplace(key, value);
  }

  void clear() {
    std::lock_guard lock(mutex_);
    map_.clear();
  }

  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return map_.size();
  }

 private:
  mutable std::mutex mutex_;
  std::unordered_map<Key, Value, Hash> map_;
};

}  // namespace detail
}  // namespace thermocalc
