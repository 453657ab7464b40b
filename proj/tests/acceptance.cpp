// Acceptance gate: one line per criterion, [PASS] or [FAIL], nonzero exit if
// any line failed.  Two criteria are expected to fail on genuine small-n
// counterexamples (see README, "Known mathematical edges"): the class-count
// inequality of criterion 6 is false at n = 2, and the bar-count lower bound
// inside criterion 9 is false for seven shapes with 6 <= n <= 10.  The
// checkers report those counterexamples faithfully.

#include "spindeg/tn_cache.hpp"
#include "spindeg/verify.hpp"

#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

using namespace spindeg;

namespace {

int failures = 0;

void line(int idx, bool ok, const std::string& what, const std::string& detail = "")
{
    std::printf("[%s] criterion %2d: %s%s\n", ok ? "PASS" : "FAIL", idx, what.c_str(),
                detail.empty() ? "" : (" (" + detail + ")").c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

bool all_pass(const std::vector<VerificationReport>& rs, std::string& why)
{
    for (const VerificationReport& r : rs) {
        if (r.status != VerifyStatus::pass) {
            why = r.claim + " " + status_name(r.status);
            for (const Counterexample& c : r.counterexamples)
                why += "; n=" + std::to_string(c.n) + " " + c.label + ": " + c.value;
            return false;
        }
    }
    return true;
}

long long ms_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
        .count();
}

} // namespace

int main()
{
    { // 1: critical-degree hit sets, exhaustive over 2 <= n <= 44, under 60 s
        auto t0 = std::chrono::steady_clock::now();
        VerificationReport r = run_claim("P7.1", 2, 44);
        long long ms = ms_since(t0);
        std::string why;
        bool ok = all_pass({r}, why) && ms < 60'000;
        line(1, ok, "critical-degree hit sets exact on 2..44",
             ok ? std::to_string(ms) + " ms" : why + ", " + std::to_string(ms) + " ms");
    }

    { // 2: t(n) sweep 15..2000 with 4 workers, under 5 minutes, exact gap sets
        auto t0 = std::chrono::steady_clock::now();
        TnCache cache("");
        std::vector<TnResult> rows = t_table(15, 2000, 4, cache);
        long long ms = ms_since(t0);
        std::set<int> g5, g7, other;
        bool witnesses_ok = true;
        for (const TnResult& r : rows) {
            witnesses_ok = witnesses_ok && validate_witness(r.n, r.witness_s, r.witness_t, r.t);
            if (r.gap() == 5) g5.insert(r.n);
            else if (r.gap() == 7) g7.insert(r.n);
            else if (r.gap() > 4) other.insert(r.n);
        }
        bool ok = witnesses_ok && g7 == std::set<int>{30, 54} &&
                  g5 == std::set<int>{18, 24, 28, 52, 102, 128, 224} && other.empty() && ms < 300'000;
        line(2, ok, "chain gaps on 15..2000: 7 at {30,54}, 5 at {18,24,28,52,102,128,224}, else <= 4",
             std::to_string(ms) + " ms, 4 workers");
    }

    { // 3: prime-power degree classifications, every family, 5 <= n <= 36
        std::string why;
        bool ok = all_pass({run_claim("L2.1", 5, 36), run_claim("L2.2", 5, 36),
                            run_claim("L2.3", 5, 36), run_claim("L2.4", 5, 36)},
                           why);
        line(3, ok, "prime-power degree classifications on 5..36, incl. sporadic and 2^r+2 rows", why);
    }

    { // 4: minimal-degree formulas through n = 45
        std::string why;
        bool ok = all_pass({run_claim("L3.1", 5, 45), run_claim("L3.2", 15, 45),
                            run_claim("L3.4", 31, 45), run_claim("L3.5", 8, 45)},
                           why);
        line(4, ok, "minimal nontrivial degrees d_1..d_7 on all stated ranges up to 45", why);
    }

    { // 5: odd-degree counts
        std::string why;
        bool ok = all_pass({run_claim("L4.3", 5, 36)}, why);
        line(5, ok, "odd-degree counts match 2^(binary digit sum) on 5..36", why);
    }

    { // 6: class-count inequality on 1..60; fails at the genuine n = 2 edge
        std::string why;
        bool ok = all_pass({run_claim("L4.5", 1, 60)}, why);
        line(6, ok, "class-count identities and inequality on 1..60", why);
    }

    { // 7: digit-sum threshold scans, exhaustive to 2^16
        VerificationReport r = run_claim("L4.4", 3, 1 << 16);
        std::string why;
        bool ok = all_pass({r}, why) && r.n_hi == (1 << 16);
        line(7, ok, "digit-sum scans to 2^16 confirm the four thresholds", why);
    }

    { // 8: structural invariants
        std::string why;
        bool ok = all_pass({run_claim("mass", 1, 25), run_claim("spinx", 2, 40),
                            run_claim("L3.3", 8, 30)},
                           why);
        line(8, ok, "mass check to 25, spin formula agreement and parity to 40, spin gap on 8..30", why);
    }

    { // 9: hook and bar bounds
        std::string why;
        bool ok = all_pass({run_claim("P7.3", 2, 25), run_claim("C7.4", 2, 20),
                            run_claim("twopart", 2, 30), run_claim("spinlower", 5, 30)},
                           why);
        line(9, ok, "first-column hook multiples and the 2-part / bar-count bounds", why);
    }

    { // 10: two-power degree multiplicities
        std::string why;
        bool ok = all_pass({run_claim("P8.2", 10, 40)}, why);
        line(10, ok, "two-power degree multiplicities for even n on 10..40", why);
    }

    if (failures == 0) {
        std::printf("all 10 criteria pass\n");
    } else {
        std::printf("%d of 10 criteria failed\n", failures);
        std::printf("expected failures: criterion 6 (the swept class-count inequality is false "
                    "at n = 2, where both sides give 4) and criterion 9 (the bar-count lower "
                    "bound is false for seven shapes with 6 <= n <= 10); see README\n");
    }
    return failures == 0 ? 0 : 1;
}
