#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

namespace spindeg {

struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Primality and smallest-prime-factor tables up to a fixed limit.
/// Construction is linear-sieve below 10^7 and segmented above; limits past
/// kMaxLimit raise resource_error.
class PrimeTables {
public:
    static constexpr long long kMaxLimit = 30'000'000;

    explicit PrimeTables(long long limit);

    long long limit() const { return limit_; }
    bool is_prime(long long x) const { return x >= 2 && x <= limit_ && spf_[static_cast<size_t>(x)] == x; }
    int smallest_factor(int x) const { return spf_[static_cast<size_t>(x)]; }
    int largest_prime_factor(int x) const;
    const std::vector<int>& primes() const { return primes_; }
    long long count_primes() const { return static_cast<long long>(primes_.size()); }

private:
    long long limit_;
    std::vector<int> spf_; // spf_[x] = smallest prime factor of x, 0 for x < 2
    std::vector<int> primes_;

    void build_linear();
    void build_segmented();
};

// True when x has a prime factor q with q > bound and q not dividing n-1.
bool qualifying(int x, long long bound, int n, const PrimeTables& tables);

struct BinaryExpansion {
    std::vector<int> exponents; // descending: n = sum of 2^k over these
    int exponent_sum = 0;
};

BinaryExpansion binary_expansion(long long n);

/// Exhaustive scan of a digit-sum inequality: variant v claims every n with
/// exponent_sum(n) on the large side lies below claimed_bound.
///   1: s >= sqrt((n-3)/2)   -> n < 2^15
///   2: s >= sqrt(n-3) - 3   -> n < 2^13
///   3: s >= (n-3)/18        -> n < 2^10
///   4: s >= (n-3)/30        -> n < 2^11
/// Compared in exact integer arithmetic; scans n in [3, scan_limit].
struct DigitSumScan {
    int variant = 0;
    long long largest_satisfying = 0;
    long long claimed_bound = 0;
    bool confirmed = false; // largest_satisfying < claimed_bound
};

DigitSumScan digit_sum_scan(int variant, long long scan_limit = 1 << 16);

/// Search result for the two-sequence chain invariant t(n).
///
/// Members are pairs of sequences s_1<...<s_r <= n, t_1<...<t_r <= n with
/// every element different from n-1, such that (i) s_i < t_i, (ii) s_1 and
/// t_1 are primes exceeding n/2, and (iii) every s_j and t_j with j >= 2
/// has, for each earlier pair index i < j, a prime factor that exceeds
/// 2n - s_i - t_i and does not divide n-1.  Pair sums rise along a chain,
/// so of those deficits the first pair's 2n - s_1 - t_1 is the largest.
/// t(n) is the largest final t_r over all members, 0 when no member exists.
struct TnResult {
    int n = 0;
    int t = 0;
    bool m_empty = true;               // no member at all (possible for n < 15)
    std::vector<int> witness_s, witness_t; // a member achieving t, empty when m_empty
    int gap() const { return n - t; }
};

// Closed-form search: the seed with the largest pair sum has the smallest
// deficit and its top prime can serve as the second s, so one extension pair
// over that seed already attains the maximum.  tables must cover n.
TnResult compute_t(int n, const PrimeTables& tables);

// Per-seed breadth-first walk over chain states with no dominance shortcuts
// or early exits; for cross-checks.
int compute_t_reference(int n, const PrimeTables& tables);

// Independent witness check by trial division; does not touch the sieve or
// the search code.  Empty sequences are valid exactly when t = 0.
bool validate_witness(int n, const std::vector<int>& ws, const std::vector<int>& wt, int t);

// Smallest prime p with n < p <= upper, scanning the tables.
std::optional<long long> prime_in_gap(long long n, long long upper, const PrimeTables& tables);

} // namespace spindeg
