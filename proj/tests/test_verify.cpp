#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spindeg/verify.hpp"

#include <set>

using namespace spindeg;

TEST_CASE("claim registry: ids and aliases unique, defaults sane")
{
    const auto& claims = claim_list();
    CHECK(claims.size() == 25);
    std::set<std::string> names;
    for (const ClaimInfo& c : claims) {
        CHECK(names.insert(c.id).second);
        CHECK(c.default_lo <= c.default_hi);
        CHECK_FALSE(c.summary.empty());
        if (c.alias != c.id) CHECK(names.insert(c.alias).second);
    }
}

TEST_CASE("representative claims pass on trimmed ranges")
{
    for (const char* name : {"mass", "spinx", "L2.1", "L2.3", "L3.3", "L4.3", "P7.3", "P7.6"}) {
        VerificationReport r = run_claim(name, -1, 16);
        CAPTURE(name);
        CHECK(r.status == VerifyStatus::pass);
        CHECK(r.counterexamples.empty());
        CHECK(r.ms >= 0);
    }
    CHECK(run_claim("L3.1", 5, 20).status == VerifyStatus::pass);
    CHECK(run_claim("T7.2", 15, 60).status == VerifyStatus::pass);
    CHECK(run_claim("L4.4").status == VerifyStatus::pass);
}

TEST_CASE("aliases resolve to the same claim")
{
    VerificationReport a = run_claim("L2.2", 5, 10);
    VerificationReport b = run_claim("ppow-alt", 5, 10);
    CHECK(a.claim == b.claim);
    CHECK(a.status == b.status);
    CHECK(a.n_lo == b.n_lo);
    CHECK(a.n_hi == b.n_hi);
}

TEST_CASE("unknown claims throw")
{
    CHECK_THROWS_AS(run_claim("bogus"), std::invalid_argument);
}

TEST_CASE("a claim whose stated range misses the requested one is skipped")
{
    VerificationReport r = run_claim("L3.2", 5, 10); // stated range starts at 15
    CHECK(r.status == VerifyStatus::skipped);
}

TEST_CASE("the class-count inequality claim reports its n = 2 counterexample")
{
    VerificationReport r = run_claim("L4.5", 1, 10);
    CHECK(r.status == VerifyStatus::fail);
    REQUIRE(r.counterexamples.size() == 1);
    CHECK(r.counterexamples[0].n == 2);
    CHECK(run_claim("L4.5", 3, 12).status == VerifyStatus::pass);
}

TEST_CASE("the bar-count lower bound fails for exactly seven small shapes")
{
    // (n-1)(n-4)/2 is tight at (n-2,2) and holds from n = 11 on, but the
    // sweep starts at 5 and the bound is simply false for 6 <= n <= 10.
    VerificationReport r = run_claim("spinlower", 5, 30);
    CHECK(r.status == VerifyStatus::fail);
    std::set<std::pair<int, std::string>> got;
    for (const Counterexample& c : r.counterexamples) got.insert({c.n, c.label});
    std::set<std::pair<int, std::string>> want{
        {6, "[3,2,1]"}, {7, "[4,3]"},    {7, "[4,2,1]"},   {8, "[4,3,1]"},
        {9, "[5,4]"},   {9, "[4,3,2]"},  {10, "[4,3,2,1]"}};
    CHECK(got == want);
    CHECK(run_claim("spinlower", 11, 30).status == VerifyStatus::pass);
}

TEST_CASE("mass_check flags a corrupted multiset")
{
    DegreeMultiset ms = degree_multiset({Family::SymDouble, 8});
    CHECK(mass_check(ms));
    ms.mult.begin()->second += 1;
    CHECK_FALSE(mass_check(ms));
}

TEST_CASE("explicit ranges are honored and reported")
{
    VerificationReport r = run_claim("L2.1", 6, 12);
    CHECK(r.n_lo == 6);
    CHECK(r.n_hi == 12);
    CHECK(r.status == VerifyStatus::pass);
}

TEST_CASE("verify_all: sorted by claim, max_n caps ranges, scan claim exempt")
{
    std::vector<VerificationReport> rs = verify_all(2, 16);
    CHECK(rs.size() == claim_list().size());
    for (size_t i = 1; i < rs.size(); ++i) CHECK(rs[i - 1].claim <= rs[i].claim);
    for (const VerificationReport& r : rs) {
        if (r.claim == "L4.4") {
            CHECK(r.n_hi == 65536);
            continue;
        }
        CHECK(r.n_hi <= 16);
        if (r.claim == "L4.5" || r.claim == "spinlower")
            CHECK(r.status == VerifyStatus::fail); // documented small-n edges
        else
            CHECK(r.status != VerifyStatus::fail);
    }
}
