#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>

namespace pilift {

/// Thread-safe memo table: each key's value is computed exactly once, and
/// references stay valid for the lifetime of the cache. The producer runs
/// outside the map lock, so it may itself consult the cache for other keys.
template <class Key, class Value>
class OnceCache {
 public:
  template <class Make>
  const Value& get(const Key& key, Make&& make) const {
    Slot* slot = nullptr;
    {
      std::lock_guard lock(mutex_);
      auto& entry = slots_[key];
      if (!entry) entry = std::make_unique<Slot>();
      slot = entry.get();
    }
    std::call_once(slot->once, [&] { slot->value.emplace(make()); });
    return *slot->value;
  }

 private:
  struct Slot {
    std::once_flag once;
    std::optional<Value> value;
  };
  mutable std::mutex mutex_;
  mutable std::map<Key, std::unique_ptr<Slot>> slots_;
};

}  // namespace pilift
