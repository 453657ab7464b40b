#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spindeg/partition.hpp"

#include <algorithm>
#include <set>

#include "oracles.hpp"

using namespace spindeg;

TEST_CASE("enumerator counts match the pentagonal recurrence")
{
    for (int n = 0; n <= 30; ++n) CHECK(count_partitions(n) == oracle::partition_count(n));
    CHECK(count_partitions(60) == 966467);
}

TEST_CASE("strict enumerator counts match the distinct-parts recurrence")
{
    for (int n = 0; n <= 30; ++n) CHECK(count_bar_partitions(n) == oracle::strict_count(n));
    CHECK(count_bar_partitions(60) == 10880);
}

TEST_CASE("enumeration is descending lexicographic, valid and duplicate-free")
{
    for (int n = 1; n <= 12; ++n) {
        std::vector<std::vector<int>> seen;
        PartitionEnumerator e(n);
        while (e.next()) {
            auto parts = e.current();
            int sum = 0;
            for (size_t i = 0; i < parts.size(); ++i) {
                CHECK(parts[i] >= 1);
                if (i > 0) CHECK(parts[i] <= parts[i - 1]);
                sum += parts[i];
            }
            CHECK(sum == n);
            seen.emplace_back(parts.begin(), parts.end());
        }
        CHECK(static_cast<long long>(seen.size()) == oracle::partition_count(n));
        CHECK(std::is_sorted(seen.begin(), seen.end(), std::greater<>()));
        CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    }
}

TEST_CASE("strict enumeration is strictly decreasing per row and complete")
{
    for (int n = 1; n <= 14; ++n) {
        std::vector<std::vector<int>> seen;
        BarPartitionEnumerator e(n);
        while (e.next()) {
            auto parts = e.current();
            int sum = 0;
            for (size_t i = 0; i < parts.size(); ++i) {
                if (i > 0) CHECK(parts[i] < parts[i - 1]);
                sum += parts[i];
            }
            CHECK(sum == n);
            seen.emplace_back(parts.begin(), parts.end());
        }
        CHECK(static_cast<long long>(seen.size()) == oracle::strict_count(n));
        CHECK(std::is_sorted(seen.begin(), seen.end(), std::greater<>()));
    }
}

TEST_CASE("conjugation is an involution and counts fixed points")
{
    for (int n = 1; n <= 14; ++n) {
        long long self_conj = 0;
        for (const Partition& p : enumerate_partitions(n)) {
            CHECK(p.conjugate().conjugate() == p);
            CHECK(is_self_conjugate(p.span()) == (p.conjugate() == p));
            if (p.self_conjugate()) ++self_conj;
        }
        CHECK(self_conj == oracle::distinct_odd_count(n));
    }
}

TEST_CASE("conjugate of a staircase-ish shape by hand")
{
    Partition p({4, 2, 2});
    CHECK(p.conjugate().parts() == std::vector<int>{3, 3, 1, 1});
    CHECK(conjugate_parts(std::vector<int>{5}) == std::vector<int>{1, 1, 1, 1, 1});
    CHECK(Partition({3, 2, 1}).self_conjugate());
}

TEST_CASE("hook tables match the conjugate-based cell formula")
{
    for (int n = 1; n <= 12; ++n) {
        PartitionEnumerator e(n);
        while (e.next()) {
            auto parts = e.current();
            HookTable ht = HookTable::of(parts);
            std::multiset<int> got;
            for (const auto& row : ht.rows)
                for (int h : row) got.insert(h);
            CHECK(got == oracle::hook_multiset(parts));
        }
    }
}

TEST_CASE("first-column hooks: strictly decreasing, consistent two ways")
{
    for (int n = 1; n <= 12; ++n) {
        PartitionEnumerator e(n);
        while (e.next()) {
            auto parts = e.current();
            std::vector<int> direct = first_column_hooks(parts);
            CHECK(direct == HookTable::of(parts).first_column());
            for (size_t i = 0; i + 1 < direct.size(); ++i) CHECK(direct[i] > direct[i + 1]);
            CHECK(direct[0] == parts[0] + static_cast<int>(parts.size()) - 1);
        }
    }
}

TEST_CASE("hook table of [4,2,2] by hand")
{
    HookTable ht = HookTable::of(Partition({4, 2, 2}));
    CHECK(ht.rows == std::vector<std::vector<int>>{{6, 5, 2, 1}, {3, 2}, {2, 1}});
}

TEST_CASE("bar tables match the definitional multiset")
{
    for (int n = 1; n <= 16; ++n) {
        BarPartitionEnumerator e(n);
        while (e.next()) {
            auto parts = e.current();
            BarTable bt = BarTable::of(parts);
            std::multiset<int> got;
            for (const auto& row : bt.rows)
                for (int b : row) got.insert(b);
            CHECK(got == oracle::bar_multiset(parts));
            if (!parts.empty()) CHECK(bt.b1() == bt.rows[0][0]);
        }
    }
}

TEST_CASE("bar table of [5,2,1] by hand")
{
    // row 1: {5+2, 5+1} + ({1..5} minus {5-2, 5-1}) = {7,6,5,2,1}
    BarTable bt = BarTable::of(BarPartition({5, 2, 1}));
    CHECK(bt.rows.size() == 3);
    CHECK(bt.first_row() == std::vector<int>{7, 6, 5, 2, 1});
    CHECK(bt.rows[1] == std::vector<int>{3, 2});
    CHECK(bt.rows[2] == std::vector<int>{1});
}

TEST_CASE("format and basic accessors")
{
    CHECK(format_parts(std::vector<int>{4, 2, 2}) == "[4,2,2]");
    CHECK(format_parts(std::vector<int>{}) == "[]");
    CHECK(Partition({3, 1, 1}).ones() == 2);
    CHECK(Partition({3, 1, 1}).n() == 5);
    CHECK(BarPartition({5, 2, 1}).m() == 3);
    CHECK(Partition().empty());
}

TEST_CASE("invalid part lists are rejected")
{
    CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(BarPartition({3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(BarPartition({-1}), std::invalid_argument);
}
