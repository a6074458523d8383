#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pst/contract.hpp"

namespace pst {

// Min-priority queue over integer keys 0..capacity-1 with decrease-key.
// Backed by a binary heap plus a key -> slot index. At most one entry per
// key; ties at equal priority go to the lower key so dequeue order is
// deterministic.
class IndexedMinQueue {
public:
    struct Entry {
        int key;
        double priority;
    };

    explicit IndexedMinQueue(int capacity) {
        require(capacity >= 0, "IndexedMinQueue: capacity must be >= 0");
        pos_.assign(static_cast<std::size_t>(capacity), kAbsent);
        pri_.assign(static_cast<std::size_t>(capacity), 0.0);
        heap_.reserve(16);
    }

    std::size_t len() const { return heap_.size(); }
    bool empty() const { return heap_.empty(); }

    bool contains(int key) const {
        return in_range(key) && pos_[static_cast<std::size_t>(key)] != kAbsent;
    }

    double priority_of(int key) const {
        require(contains(key), "IndexedMinQueue::priority_of: key not enqueued");
        return pri_[static_cast<std::size_t>(key)];
    }

    void enqueue(int key, double priority) {
        require(in_range(key), "IndexedMinQueue::enqueue: key out of range");
        require(pos_[static_cast<std::size_t>(key)] == kAbsent,
                "IndexedMinQueue::enqueue: key already enqueued");
        require(priority >= 0.0 && std::isfinite(priority),
                "IndexedMinQueue::enqueue: priority must be a nonnegative finite value");
        pri_[static_cast<std::size_t>(key)] = priority;
        pos_[static_cast<std::size_t>(key)] = static_cast<std::int32_t>(heap_.size());
        heap_.push_back(key);
        sift_up(heap_.size() - 1);
    }

    // Removes and returns the minimal entry, or nullopt when empty.
    std::optional<Entry> dequeue_min() {
        if (heap_.empty()) return std::nullopt;
        const int key = heap_[0];
        Entry out{key, pri_[static_cast<std::size_t>(key)]};
        swap_slots(0, heap_.size() - 1);
        heap_.pop_back();
        pos_[static_cast<std::size_t>(key)] = kAbsent;
        if (!heap_.empty()) sift_down(0);
        return out;
    }

    // Decrease-key only: new_priority must be strictly below the current one.
    void update(int key, double new_priority) {
        require(contains(key), "IndexedMinQueue::update: key not enqueued");
        require(new_priority >= 0.0 && std::isfinite(new_priority),
                "IndexedMinQueue::update: priority must be a nonnegative finite value");
        require(new_priority < pri_[static_cast<std::size_t>(key)],
                "IndexedMinQueue::update: new priority must strictly decrease");
        pri_[static_cast<std::size_t>(key)] = new_priority;
        sift_up(static_cast<std::size_t>(pos_[static_cast<std::size_t>(key)]));
    }

private:
    static constexpr std::int32_t kAbsent = -1;

    bool in_range(int key) const {
        return key >= 0 && static_cast<std::size_t>(key) < pos_.size();
    }

    bool less(int a, int b) const {
        const double pa = pri_[static_cast<std::size_t>(a)];
        const double pb = pri_[static_cast<std::size_t>(b)];
        if (pa != pb) return pa < pb;
        return a < b;
    }

    void swap_slots(std::size_t i, std::size_t j) {
        std::swap(heap_[i], heap_[j]);
        pos_[static_cast<std::size_t>(heap_[i])] = static_cast<std::int32_t>(i);
        pos_[static_cast<std::size_t>(heap_[j])] = static_cast<std::int32_t>(j);
    }

    void sift_up(std::size_t i) {
        while (i > 0) {
            const std::size_t parent = (i - 1) / 2;
            if (!less(heap_[i], heap_[parent])) break;
            swap_slots(i, parent);
            i = parent;
        }
    }

    void sift_down(std::size_t i) {
        const std::size_t n = heap_.size();
        for (;;) {
            std::size_t best = i;
            const std::size_t l = 2 * i + 1;
            const std::size_t r = 2 * i + 2;
            if (l < n && less(heap_[l], heap_[best])) best = l;
            if (r < n && less(heap_[r], heap_[best])) best = r;
            if (best == i) return;
            swap_slots(i, best);
            i = best;
        }
    }

    std::vector<int> heap_;          // heap of keys, min at the front
    std::vector<std::int32_t> pos_;  // key -> heap slot, kAbsent when not enqueued
    std::vector<double> pri_;        // key -> current priority
};

}  // namespace pst
