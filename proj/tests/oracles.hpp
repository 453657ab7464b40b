#pragma once

// Small, slow, independent re-implementations used only to cross-check the
// library.  Everything here favors directness over speed: trial division,
// textbook recurrences, exhaustive backtracking.

#include <set>
#include <span>
#include <vector>

namespace oracle {

// p(n) by the pentagonal-number recurrence.
inline long long partition_count(int n)
{
    static std::vector<long long> memo{1};
    for (int m = static_cast<int>(memo.size()); m <= n; ++m) {
        long long total = 0;
        for (int k = 1;; ++k) {
            long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
            long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            long long sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= m) total += sign * memo[static_cast<size_t>(m - g1)];
            if (g2 <= m) total += sign * memo[static_cast<size_t>(m - g2)];
        }
        memo.push_back(total);
    }
    return memo[static_cast<size_t>(n)];
}

// q(n): partitions into distinct parts, straightforward DP.
inline long long strict_count(int n)
{
    std::vector<long long> dp(static_cast<size_t>(n) + 1, 0);
    dp[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int s = n; s >= part; --s) dp[static_cast<size_t>(s)] += dp[static_cast<size_t>(s - part)];
    return dp[static_cast<size_t>(n)];
}

// a(n): partitions into distinct odd parts = self-conjugate partitions.
inline long long distinct_odd_count(int n)
{
    std::vector<long long> dp(static_cast<size_t>(n) + 1, 0);
    dp[0] = 1;
    for (int part = 1; part <= n; part += 2)
        for (int s = n; s >= part; --s) dp[static_cast<size_t>(s)] += dp[static_cast<size_t>(s - part)];
    return dp[static_cast<size_t>(n)];
}

inline bool is_prime(long long x)
{
    if (x < 2) return false;
    for (long long d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

inline std::vector<int> primes_upto(int n)
{
    std::vector<int> ps;
    for (int x = 2; x <= n; ++x)
        if (is_prime(x)) ps.push_back(x);
    return ps;
}

// v_2(n!) by the descending-quotient sum.
inline unsigned long factorial_v2(unsigned long n)
{
    unsigned long v = 0;
    for (unsigned long q = n / 2; q > 0; q /= 2) v += q;
    return v;
}

inline std::vector<int> conjugate(std::span<const int> parts)
{
    std::vector<int> c;
    if (parts.empty()) return c;
    c.assign(static_cast<size_t>(parts[0]), 0);
    for (int p : parts)
        for (int j = 0; j < p; ++j) ++c[static_cast<size_t>(j)];
    return c;
}

inline std::multiset<int> hook_multiset(std::span<const int> parts)
{
    std::multiset<int> hooks;
    std::vector<int> conj = conjugate(parts);
    for (size_t i = 0; i < parts.size(); ++i)
        for (int j = 0; j < parts[i]; ++j)
            hooks.insert(parts[i] - j + conj[static_cast<size_t>(j)] - static_cast<int>(i) - 1);
    return hooks;
}

// Bar lengths of row i of a strict partition, straight from the definition.
inline std::multiset<int> bar_multiset(std::span<const int> parts)
{
    std::multiset<int> bars;
    for (size_t i = 0; i < parts.size(); ++i) {
        std::set<int> forbidden;
        for (size_t j = i + 1; j < parts.size(); ++j) {
            bars.insert(parts[i] + parts[j]);
            forbidden.insert(parts[i] - parts[j]);
        }
        for (int b = 1; b <= parts[i]; ++b)
            if (!forbidden.count(b)) bars.insert(b);
    }
    return bars;
}

// Standard Young tableaux of the shape, counted by exhaustive filling.
inline long syt_count(std::span<const int> parts)
{
    std::vector<int> fill(parts.size(), 0);
    int n = 0;
    for (int p : parts) n += p;
    long count = 0;
    auto rec = [&](auto&& self, int placed) -> void {
        if (placed == n) {
            ++count;
            return;
        }
        for (size_t i = 0; i < parts.size(); ++i) {
            if (fill[i] >= parts[i]) continue;
            if (i > 0 && fill[i - 1] <= fill[i]) continue;
            ++fill[i];
            self(self, placed + 1);
            --fill[i];
        }
    };
    rec(rec, 0);
    return count;
}

// Standard shifted tableaux of a strict shape: row i is indented i cells, so
// the cell above column i + fill[i] is filled exactly when
// fill[i-1] >= fill[i] + 2.
inline long shifted_syt_count(std::span<const int> parts)
{
    std::vector<int> fill(parts.size(), 0);
    int n = 0;
    for (int p : parts) n += p;
    long count = 0;
    auto rec = [&](auto&& self, int placed) -> void {
        if (placed == n) {
            ++count;
            return;
        }
        for (size_t i = 0; i < parts.size(); ++i) {
            if (fill[i] >= parts[i]) continue;
            if (i > 0 && fill[i - 1] < fill[i] + 2) continue;
            ++fill[i];
            self(self, placed + 1);
            --fill[i];
        }
    };
    rec(rec, 0);
    return count;
}

} // namespace oracle
