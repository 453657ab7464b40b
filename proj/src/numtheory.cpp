#include "spindeg/numtheory.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <unordered_set>

namespace spindeg {

PrimeTables::PrimeTables(long long limit) : limit_(limit)
{
    if (limit < 2) throw std::invalid_argument("sieve limit must be >= 2");
    if (limit > kMaxLimit)
        throw resource_error("sieve limit " + std::to_string(limit) + " beyond configured maximum " +
                             std::to_string(kMaxLimit));
    spf_.assign(static_cast<size_t>(limit) + 1, 0);
    if (limit > 10'000'000)
        build_segmented();
    else
        build_linear();
}

void PrimeTables::build_linear()
{
    for (long long x = 2; x <= limit_; ++x) {
        if (spf_[static_cast<size_t>(x)] == 0) {
            spf_[static_cast<size_t>(x)] = static_cast<int>(x);
            primes_.push_back(static_cast<int>(x));
        }
        int sx = spf_[static_cast<size_t>(x)];
        for (int p : primes_) {
            if (p > sx || p * x > limit_) break;
            spf_[static_cast<size_t>(p * x)] = p;
        }
    }
}

void PrimeTables::build_segmented()
{
    long long root = 2;
    while (root * root <= limit_) ++root;
    PrimeTables base(root); // covers [2, root], root*root > limit_
    std::copy(base.spf_.begin(), base.spf_.end(), spf_.begin());
    primes_ = base.primes_;

    constexpr long long kSegment = 1 << 20;
    for (long long lo = root + 1; lo <= limit_; lo += kSegment) {
        long long hi = std::min(lo + kSegment - 1, limit_);
        /* ascending base primes set each slot at most once, so the first
           writer is the smallest prime factor */
        for (int p : base.primes_) {
            long long start = ((lo + p - 1) / p) * static_cast<long long>(p);
            for (long long m = start; m <= hi; m += p)
                if (spf_[static_cast<size_t>(m)] == 0) spf_[static_cast<size_t>(m)] = p;
        }
        for (long long x = lo; x <= hi; ++x) {
            if (spf_[static_cast<size_t>(x)] == 0) {
                spf_[static_cast<size_t>(x)] = static_cast<int>(x);
                primes_.push_back(static_cast<int>(x));
            }
        }
    }
}

int PrimeTables::largest_prime_factor(int x) const
{
    if (x < 2 || x > limit_) throw std::invalid_argument("largest_prime_factor out of table range");
    int best = 0;
    while (x > 1) {
        int p = spf_[static_cast<size_t>(x)];
        best = std::max(best, p);
        while (x % p == 0) x /= p;
    }
    return best;
}

bool qualifying(int x, long long bound, int n, const PrimeTables& tables)
{
    if (x < 2) return false;
    if (x > tables.limit()) throw std::invalid_argument("qualifying: x beyond sieve limit");
    while (x > 1) {
        int p = tables.smallest_factor(x);
        if (p > bound && (n - 1) % p != 0) return true;
        while (x % p == 0) x /= p;
    }
    return false;
}

BinaryExpansion binary_expansion(long long n)
{
    if (n < 1) throw std::invalid_argument("binary_expansion needs n >= 1");
    BinaryExpansion b;
    for (int k = 62; k >= 0; --k) {
        if (n & (1LL << k)) {
            b.exponents.push_back(k);
            b.exponent_sum += k;
        }
    }
    return b;
}

DigitSumScan digit_sum_scan(int variant, long long scan_limit)
{
    if (variant < 1 || variant > 4) throw std::invalid_argument("digit_sum_scan variant must be 1..4");
    static constexpr long long kClaims[5] = {0, 1 << 15, 1 << 13, 1 << 10, 1 << 11};
    DigitSumScan r;
    r.variant = variant;
    r.claimed_bound = kClaims[variant];
    for (long long n = 3; n <= scan_limit; ++n) {
        long long s = binary_expansion(n).exponent_sum;
        bool sat = false;
        switch (variant) { // integer-exact forms of the stated inequalities
            case 1: sat = 2 * s * s >= n - 3; break;
            case 2: sat = (s + 3) * (s + 3) >= n - 3; break;
            case 3: sat = 18 * s >= n - 3; break;
            case 4: sat = 30 * s >= n - 3; break;
        }
        if (sat) r.largest_satisfying = n;
    }
    r.confirmed = r.largest_satisfying < r.claimed_bound;
    return r;
}

namespace {

/* State (s, t) of the chain search keyed into one integer. */
inline uint64_t state_key(int s, int t, int n)
{
    return static_cast<uint64_t>(s) * static_cast<uint64_t>(n + 1) + static_cast<uint64_t>(t);
}

/* Largest prime factor of x that does not divide n-1, 0 if none. */
std::vector<int> qualifying_table(int n, const PrimeTables& tables)
{
    std::vector<int> q(static_cast<size_t>(n) + 1, 0);
    for (int x = 2; x <= n; ++x) {
        int v = x, best = 0;
        while (v > 1) {
            int p = tables.smallest_factor(v);
            if ((n - 1) % p != 0) best = std::max(best, p);
            while (v % p == 0) v /= p;
        }
        q[static_cast<size_t>(x)] = best;
    }
    return q;
}

std::vector<int> initial_primes(int n, const PrimeTables& tables)
{
    std::vector<int> ps;
    for (int x = n / 2 + 1; x <= n; ++x)
        if (x != n - 1 && 2 * x > n && tables.is_prime(x)) ps.push_back(x);
    return ps;
}

} // namespace

TnResult compute_t(int n, const PrimeTables& tables)
{
    if (n < 2) throw std::invalid_argument("compute_t needs n >= 2");
    if (n > tables.limit()) throw std::invalid_argument("compute_t: n beyond sieve limit");

    TnResult res;
    res.n = n;

    std::vector<int> ps = initial_primes(n, tables);
    if (ps.size() < 2) return res;

    int p = ps[ps.size() - 2];
    int q = ps.back();
    res.t = q;
    res.m_empty = false;
    res.witness_s = {p};
    res.witness_t = {q};

    /* Every element past the first pair needs a prime factor above each
       earlier deficit 2n - s_i - t_i; the first pair's deficit is the largest
       of those, and it is smallest for the seed (p, q).  A qualifying factor
       is a prime <= n not dividing n-1, hence at most q, so whenever any
       element clears the deficit, q itself does and can serve as the second
       s.  One extension pair over this seed therefore attains the maximum. */
    long long bound = 2LL * n - p - q;
    std::vector<int> qual = qualifying_table(n, tables);
    for (int t2 = n; t2 > q; --t2) {
        if (t2 == n - 1 || qual[static_cast<size_t>(t2)] <= bound) continue;
        res.t = t2;
        res.witness_s = {p, q};
        res.witness_t = {q, t2};
        break;
    }
    return res;
}

int compute_t_reference(int n, const PrimeTables& tables)
{
    std::vector<int> qual = qualifying_table(n, tables);
    std::vector<int> ps = initial_primes(n, tables);

    int best_t = 0;
    for (size_t i = 0; i < ps.size(); ++i) {
        for (size_t j = i + 1; j < ps.size(); ++j) {
            best_t = std::max(best_t, ps[j]);
            long long seed_deficit = 2LL * n - ps[i] - ps[j];

            // candidate elements for any later pair of this seed; deficits
            // only shrink along a chain, so nothing outside can ever enter
            std::vector<int> cand;
            for (int x = ps[i] + 1; x <= n; ++x)
                if (x != n - 1 && qual[static_cast<size_t>(x)] > seed_deficit) cand.push_back(x);

            std::unordered_set<uint64_t> visited;
            std::deque<uint64_t> queue;
            auto push = [&](int s, int t) {
                uint64_t key = state_key(s, t, n);
                if (!visited.insert(key).second) return;
                queue.push_back(key);
                best_t = std::max(best_t, t);
            };
            push(ps[i], ps[j]);

            while (!queue.empty()) {
                uint64_t key = queue.front();
                queue.pop_front();
                int s = static_cast<int>(key / static_cast<uint64_t>(n + 1));
                int t = static_cast<int>(key % static_cast<uint64_t>(n + 1));
                long long bound = std::max(seed_deficit, 2LL * n - s - t);
                for (int s2 : cand) {
                    if (s2 <= s || qual[static_cast<size_t>(s2)] <= bound) continue;
                    for (int t2 : cand) {
                        if (t2 <= std::max(t, s2) || qual[static_cast<size_t>(t2)] <= bound) continue;
                        push(s2, t2);
                    }
                }
            }
        }
    }
    return best_t;
}

namespace {

bool trial_is_prime(long long x)
{
    if (x < 2) return false;
    for (long long d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

bool trial_has_qualifying_factor(int x, long long bound, int n)
{
    int v = x;
    for (int d = 2; d <= v; ++d) {
        if (v % d != 0) continue;
        // d is prime here: smaller factors are already divided out
        if (d > bound && (n - 1) % d != 0) return true;
        while (v % d == 0) v /= d;
    }
    return false;
}

} // namespace

bool validate_witness(int n, const std::vector<int>& ws, const std::vector<int>& wt, int t)
{
    if (ws.size() != wt.size()) return false;
    if (ws.empty()) return t == 0;
    if (wt.back() != t) return false;
    for (size_t i = 0; i < ws.size(); ++i) {
        if (ws[i] < 1 || ws[i] > n || wt[i] < 1 || wt[i] > n) return false;
        if (ws[i] == n - 1 || wt[i] == n - 1) return false;
        if (ws[i] >= wt[i]) return false;
        if (i > 0 && (ws[i] <= ws[i - 1] || wt[i] <= wt[i - 1])) return false;
    }
    if (!trial_is_prime(ws[0]) || !trial_is_prime(wt[0])) return false;
    if (2 * ws[0] <= n || 2 * wt[0] <= n) return false;
    for (size_t j = 1; j < ws.size(); ++j) {
        for (size_t i = 0; i < j; ++i) {
            long long bound = 2LL * n - ws[i] - wt[i];
            if (!trial_has_qualifying_factor(ws[j], bound, n)) return false;
            if (!trial_has_qualifying_factor(wt[j], bound, n)) return false;
        }
    }
    return true;
}

std::optional<long long> prime_in_gap(long long n, long long upper, const PrimeTables& tables)
{
    if (upper > tables.limit())
        throw std::invalid_argument("prime_in_gap: upper bound beyond sieve limit");
    for (long long x = n + 1; x <= upper; ++x)
        if (tables.is_prime(x)) return x;
    return std::nullopt;
}

} // namespace spindeg
