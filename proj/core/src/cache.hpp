#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <tuple>

#include "modzeta/mp.hpp"

namespace modzeta::detail {

// Precision-keyed memo for scalar constants. Entries are never erased, so a
// found value can be copied while the lock is held and used freely afterwards.
template <class Key>
class ValueCache {
public:
    std::optional<Real> find(const Key& key)
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = map_.find(key);
        if (it == map_.end())
            return std::nullopt;
        return it->second;
    }

    void store(const Key& key, const Real& value)
    {
        std::lock_guard<std::mutex> lock(mutex_);
        map_.emplace(key, value);
    }

private:
    std::mutex mutex_;
    std::map<Key, Real> map_;
};

}  // namespace modzeta::detail
