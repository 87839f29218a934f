#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>

namespace forestrep {

/// Read-mostly memo table. Values must be deterministic functions of their
/// keys: two threads racing on the same key compute equal values and the
/// second insert is a no-op.
template <class Key, class Value, class Compare = std::less<Key>>
class ConcurrentMemo {
 public:
  std::optional<Value> find(const Key& key) const {
    std::shared_lock lock(mu_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  const Value insert(const Key& key, Value value) {
    std::unique_lock lock(mu_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

  template <class Fn>
  Value get_or_compute(const Key& key, Fn&& compute) {
    if (auto hit = find(key)) return *hit;
    return insert(key, compute());
  }

  std::map<Key, Value, Compare> snapshot() const {
    std::shared_lock lock(mu_);
    return table_;
  }

  std::size_t size() const {
    std::shared_lock lock(mu_);
    return table_.size();
  }

  void clear() {
    std::unique_lock lock(mu_);
    table_.clear();
  }

 private:
  mutable std::shared_mutex mu_;
  std::map<Key, Value, Compare> table_;
};

}  // namespace forestrep
