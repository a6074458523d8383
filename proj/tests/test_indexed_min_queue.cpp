#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "pst/contract.hpp"
#include "pst/indexed_min_queue.hpp"

using pst::contract_error;
using pst::IndexedMinQueue;

TEST_CASE("dequeue returns entries in priority order") {
    IndexedMinQueue q(8);
    CHECK(q.empty());
    q.enqueue(3, 2.5);
    q.enqueue(1, 0.5);
    q.enqueue(7, 1.5);
    CHECK(q.len() == 3);
    CHECK(q.contains(7));
    CHECK_FALSE(q.contains(0));
    CHECK(q.priority_of(7) == 1.5);

    auto a = q.dequeue_min();
    REQUIRE(a.has_value());
    CHECK(a->key == 1);
    CHECK(a->priority == 0.5);
    auto b = q.dequeue_min();
    REQUIRE(b.has_value());
    CHECK(b->key == 7);
    auto c = q.dequeue_min();
    REQUIRE(c.has_value());
    CHECK(c->key == 3);
    CHECK(q.empty());
    CHECK_FALSE(q.dequeue_min().has_value());
}

TEST_CASE("equal priorities break ties toward the lower key") {
    IndexedMinQueue q(8);
    q.enqueue(5, 1.0);
    q.enqueue(2, 1.0);
    q.enqueue(4, 1.0);
    CHECK(q.dequeue_min()->key == 2);
    CHECK(q.dequeue_min()->key == 4);
    CHECK(q.dequeue_min()->key == 5);
}

TEST_CASE("update lowers a priority and reorders") {
    IndexedMinQueue q(4);
    q.enqueue(0, 5.0);
    q.enqueue(1, 4.0);
    q.update(0, 1.0);
    CHECK(q.priority_of(0) == 1.0);
    CHECK(q.dequeue_min()->key == 0);
    CHECK(q.dequeue_min()->key == 1);
}

TEST_CASE("re-enqueue after dequeue is allowed") {
    IndexedMinQueue q(4);
    q.enqueue(2, 3.0);
    (void)q.dequeue_min();
    q.enqueue(2, 6.0);  // waiting entries come back at an unchanged priority
    CHECK(q.contains(2));
    CHECK(q.priority_of(2) == 6.0);
}

TEST_CASE("contract violations throw") {
    IndexedMinQueue q(4);
    q.enqueue(1, 2.0);
    CHECK_THROWS_AS(q.enqueue(1, 3.0), contract_error);   // duplicate key
    CHECK_THROWS_AS(q.enqueue(4, 1.0), contract_error);   // key out of range
    CHECK_THROWS_AS(q.enqueue(-1, 1.0), contract_error);  // key out of range
    CHECK_THROWS_AS(q.enqueue(2, -1.0), contract_error);  // negative priority
    CHECK_THROWS_AS(q.enqueue(2, std::numeric_limits<double>::quiet_NaN()), contract_error);
    CHECK_THROWS_AS(q.enqueue(2, std::numeric_limits<double>::infinity()), contract_error);
    CHECK_THROWS_AS(q.update(3, 1.0), contract_error);  // not present
    CHECK_THROWS_AS(q.update(1, 2.0), contract_error);  // not a strict decrease
    CHECK_THROWS_AS(q.update(1, 5.0), contract_error);  // increase
    CHECK_THROWS_AS((void)q.priority_of(3), contract_error);
    CHECK_THROWS_AS(IndexedMinQueue(-1), contract_error);

    // Capacity zero is a valid degenerate: permanently empty, no keys in range.
    IndexedMinQueue zero(0);
    CHECK(zero.empty());
    CHECK(!zero.dequeue_min().has_value());
    CHECK_THROWS_AS(zero.enqueue(0, 1.0), contract_error);
}

TEST_CASE("randomized sequences agree with a naive priority scan") {
    std::mt19937_64 rng(2024);
    const int capacity = 32;
    for (int round = 0; round < 10000; ++round) {
        IndexedMinQueue q(capacity);
        std::vector<double> naive(capacity, -1.0);  // -1 marks "absent"
        const int ops = 1 + static_cast<int>(rng() % 50);
        for (int step = 0; step < ops; ++step) {
            const int choice = static_cast<int>(rng() % 4);
            const int key = static_cast<int>(rng() % capacity);
            const double pri =
                static_cast<double>(rng() % 1000) / 16.0;  // small exact values
            if (choice == 0 && naive[key] < 0.0) {
                q.enqueue(key, pri);
                naive[key] = pri;
            } else if (choice == 1 && naive[key] >= 0.0 && pri < naive[key]) {
                q.update(key, pri);
                naive[key] = pri;
            } else if (choice >= 2) {
                int best = -1;
                for (int k = 0; k < capacity; ++k) {
                    if (naive[k] < 0.0) continue;
                    if (best < 0 || naive[k] < naive[best]) best = k;
                }
                const auto got = q.dequeue_min();
                if (best < 0) {
                    REQUIRE_FALSE(got.has_value());
                } else {
                    REQUIRE(got.has_value());
                    REQUIRE(got->key == best);
                    REQUIRE(got->priority == naive[best]);
                    naive[best] = -1.0;
                }
            }
            REQUIRE(q.len() == static_cast<std::size_t>(
                                   std::count_if(naive.begin(), naive.end(),
                                                 [](double p) { return p >= 0.0; })));
        }
    }
}
