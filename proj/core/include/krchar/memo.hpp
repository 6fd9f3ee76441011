#pragma once

#include <cstddef>
#include <deque>
#include <functional>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace krchar {

inline constexpr std::size_t kDefaultMemoCapacity = 100000;

/// Thread-safe memo table with a hard entry cap.
///
/// Values are computed outside the lock; when two threads race on the same key
/// the first insertion wins and both observe the same value.  Once the cap is
/// reached the oldest entries are evicted first.
template <typename Key, typename Value, typename Hash = std::hash<Key>>
class BoundedMemo {
public:
    explicit BoundedMemo(std::size_t capacity = kDefaultMemoCapacity) : capacity_(capacity) {}

    std::optional<Value> find(const Key& key) const
    {
        std::lock_guard lock(mutex_);
        auto it = map_.find(key);
        if (it == map_.end())
            return std::nullopt;
        return it->second;
    }

    /// Inserts unless present; returns the stored value.
    Value insert(const Key& key, Value value)
    {
        std::lock_guard lock(mutex_);
        auto [it, inserted] = map_.try_emplace(key, std::move(value));
        if (inserted) {
            order_.push_back(key);
            evict_locked();
        }
        return it->second;
    }

    template <typename Compute>
    Value get_or_compute(const Key& key, Compute&& compute)
    {
        if (auto hit = find(key))
            return *std::move(hit);
        return insert(key, compute());
    }

    void clear()
    {
        std::lock_guard lock(mutex_);
        map_.clear();
        order_.clear();
    }

    std::size_t size() const
    {
        std::lock_guard lock(mutex_);
        return map_.size();
    }

    std::size_t capacity() const
    {
        std::lock_guard lock(mutex_);
        return capacity_;
    }

    void set_capacity(std::size_t capacity)
    {
        std::lock_guard lock(mutex_);
        capacity_ = capacity;
        evict_locked();
    }

    std::vector<std::pair<Key, Value>> snapshot() const
    {
        std::lock_guard lock(mutex_);
        return {map_.begin(), map_.end()};
    }

private:
    void evict_locked()
    {
        while (map_.size() > capacity_ && !order_.empty()) {
            map_.erase(order_.front());
            order_.pop_front();
        }
    }

    mutable std::mutex mutex_;
    std::size_t capacity_;
    std::unordered_map<Key, Value, Hash> map_;
    std::deque<Key> order_;
};

} // namespace krchar
