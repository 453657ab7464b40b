#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spindeg/numtheory.hpp"

#include <map>

#include "oracles.hpp"

using namespace spindeg;

TEST_CASE("prime tables match trial division up to 10^4")
{
    PrimeTables tables(10'000);
    std::vector<int> naive = oracle::primes_upto(10'000);
    CHECK(tables.primes() == naive);
    CHECK(tables.count_primes() == 1229);
    for (int x : {0, 1, 2, 3, 4, 9973, 9999, 10'000}) CHECK(tables.is_prime(x) == oracle::is_prime(x));
    CHECK(tables.smallest_factor(9999) == 3);
    CHECK(tables.largest_prime_factor(9999) == 101);
    CHECK(tables.largest_prime_factor(1024) == 2);
}

TEST_CASE("segmented construction agrees with the linear one")
{
    PrimeTables big(10'500'000); // past the linear/segmented switch
    PrimeTables small(10'000);
    for (size_t i = 0; i < small.primes().size(); ++i) CHECK(big.primes()[i] == small.primes()[i]);
    for (long long x : {10'499'989LL, 10'499'999LL, 10'000'019LL, 9'999'991LL})
        CHECK(big.is_prime(x) == oracle::is_prime(x));
    int x = 10'400'021; // spot factorization through spf
    int p = big.smallest_factor(x);
    CHECK(x % p == 0);
    for (int d = 2; d < p; ++d) CHECK(x % d != 0);
}

TEST_CASE("limits are validated")
{
    CHECK_THROWS_AS(PrimeTables(1), std::invalid_argument);
    CHECK_THROWS_AS(PrimeTables(PrimeTables::kMaxLimit + 1), resource_error);
}

TEST_CASE("qualifying factors honor both the bound and the divisor exclusion")
{
    PrimeTables tables(100);
    CHECK(qualifying(34, 12, 36, tables));        // 17 > 12, 17 does not divide 35
    CHECK_FALSE(qualifying(33, 12, 36, tables));  // 3 and 11 both <= 12
    CHECK_FALSE(qualifying(25, 3, 36, tables));   // 5 > 3 but 5 divides 35
    CHECK(qualifying(25, 3, 34, tables));         // 5 > 3 and 5 does not divide 33
    CHECK_FALSE(qualifying(1, 0, 10, tables));
}

TEST_CASE("binary expansions")
{
    BinaryExpansion b = binary_expansion(21);
    CHECK(b.exponents == std::vector<int>{4, 2, 0});
    CHECK(b.exponent_sum == 6);
    CHECK(binary_expansion(1).exponents == std::vector<int>{0});
    CHECK(binary_expansion(1).exponent_sum == 0);
    CHECK(binary_expansion(1024).exponent_sum == 10);
    CHECK_THROWS_AS(binary_expansion(0), std::invalid_argument);
}

TEST_CASE("digit-sum threshold scans, exhaustive to 2^16")
{
    // largest offender of each inequality, found once by scan and frozen
    const long long largest[5] = {0, 16383, 4095, 511, 1023};
    const long long claimed[5] = {0, 1 << 15, 1 << 13, 1 << 10, 1 << 11};
    for (int v = 1; v <= 4; ++v) {
        DigitSumScan s = digit_sum_scan(v);
        CHECK(s.largest_satisfying == largest[v]);
        CHECK(s.claimed_bound == claimed[v]);
        CHECK(s.confirmed);
    }
    CHECK_THROWS_AS(digit_sum_scan(5), std::invalid_argument);
}

TEST_CASE("frozen t(n) values")
{
    PrimeTables tables(600);
    const std::map<int, int> expected{{12, 0},  {13, 13}, {14, 0},  {15, 13}, {16, 13},
                                      {18, 13}, {24, 19}, {28, 23}, {30, 23}, {36, 34},
                                      {42, 38}, {52, 47}, {54, 47}, {60, 58}, {102, 97},
                                      {128, 123}, {224, 219}};
    for (const auto& [n, want] : expected) {
        TnResult r = compute_t(n, tables);
        CHECK(r.t == want);
        CHECK(r.m_empty == (want == 0));
        CHECK(validate_witness(n, r.witness_s, r.witness_t, r.t));
    }
}

TEST_CASE("search and reference walk agree")
{
    PrimeTables tables(600);
    for (int n = 15; n <= 130; ++n) CHECK(compute_t(n, tables).t == compute_t_reference(n, tables));
    CHECK(compute_t(224, tables).t == compute_t_reference(224, tables));
}

TEST_CASE("witness validation accepts the real thing and rejects tampering")
{
    PrimeTables tables(600);
    TnResult r = compute_t(36, tables);
    CHECK(validate_witness(36, r.witness_s, r.witness_t, r.t));

    CHECK_FALSE(validate_witness(36, r.witness_t, r.witness_s, r.t)); // swapped roles
    CHECK_FALSE(validate_witness(36, r.witness_s, r.witness_t, r.t + 1));
    CHECK_FALSE(validate_witness(36, {}, {}, r.t)); // empty only valid for t = 0
    CHECK(validate_witness(12, {}, {}, 0));
    CHECK_FALSE(validate_witness(36, {35, 34}, r.witness_t, r.t)); // n-1 and descending

    // seed primes must exceed n/2
    CHECK_FALSE(validate_witness(36, {17}, {19}, 19));
    CHECK(validate_witness(36, {29}, {31}, 31));

    // every element must clear the first pair's deficit: this chain respects
    // each step's own deficit yet 52 = 2*2*13 misses 2n - s_1 - t_1 = 20
    CHECK_FALSE(validate_witness(52, {41, 46, 47}, {43, 47, 52}, 52));
    CHECK(validate_witness(52, {43}, {47}, 47));
}

TEST_CASE("prime gaps")
{
    PrimeTables tables(1000);
    CHECK(prime_in_gap(9, 11, tables) == 11);
    CHECK(prime_in_gap(23, 29, tables) == 29);
    CHECK_FALSE(prime_in_gap(24, 28, tables).has_value());
    CHECK_THROWS_AS(prime_in_gap(10, 2000, tables), std::invalid_argument);
}
