#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>

namespace hankel {

// Insert-only map. Concurrent inserts of the same key are harmless: the first value wins
// and every caller gets a reference to it. Node addresses never move.
template <class Key, class Value>
class MemoTable {
 public:
  template <class Make>
  const Value& get_or_make(const Key& key, Make&& make) {
    {
      std::shared_lock lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    Value v = make();
    std::unique_lock lock(mu_);
    return map_.try_emplace(key, std::move(v)).first->second;
  }

  size_t size() const {
    std::shared_lock lock(mu_);
    return map_.size();
  }

 private:
  mutable std::shared_mutex mu_;
  std::map<Key, Value> map_;
};

}  // namespace hankel
