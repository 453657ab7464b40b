#pragma once

#include <string>
#include <vector>

#include "spindeg/degrees.hpp"

namespace spindeg {

enum class VerifyStatus { pass, fail, skipped };

const char* status_name(VerifyStatus s);

struct Counterexample {
    int n = 0;
    std::string label;
    std::string value;
};

struct VerificationReport {
    std::string claim;
    int n_lo = 0;
    int n_hi = 0;
    VerifyStatus status = VerifyStatus::skipped;
    std::vector<Counterexample> counterexamples;
    long long ms = 0;
    std::string note;

    bool failed() const { return status == VerifyStatus::fail; }
};

// Each checker sweeps n over [lo, hi] clipped to the claim's stated range and
// diffs enumerated facts against the claimed ones.  A claim whose stated
// range misses [lo, hi] entirely reports skipped.

// L2.1-L2.4: complete classification of prime-power character degrees.
VerificationReport verify_prime_power(Family fam, int lo, int hi);

// L3.1: smallest seven nontrivial symmetric-group degrees in closed form.
VerificationReport verify_min_degrees_sym(int lo, int hi);

// L3.2: alternating d_i match the symmetric ones (i<=4 from n>=15, i<=7 from n>=22).
VerificationReport verify_min_degrees_alt_match(int lo, int hi);

// L3.3: smallest spin degree is the basic one and no spin degree falls
// strictly between it and its double.
VerificationReport verify_basic_spin_gap(int lo, int hi);

// L3.4: cover d_i match the base group (SymDouble from n>=31, AltDouble from n>=34).
VerificationReport verify_min_degrees_cover_match(int lo, int hi);

// L3.5: closed forms for the smallest cover degrees in staged ranges.
VerificationReport verify_min_degrees_covers(int lo, int hi);

// L4.1: a prime exists in (n, d_2] for both double covers.
VerificationReport verify_prime_in_gap(int lo, int hi);

// L4.3: odd degrees in the SymDouble multiset number exactly 2^(sum of
// binary digits of n); AltDouble has at most as many.
VerificationReport verify_odd_counts(int lo, int hi);

// L4.4: the four digit-sum threshold scans (exhaustive to 2^16).
VerificationReport verify_digit_scans(int lo, int hi);

// L4.5: k(SymDouble) < 2 k(AltDouble) plus the a,b,c,d identities against
// directly built degree multisets.
VerificationReport verify_class_inequality(int lo, int hi);

// P7.1: complete list of labels hitting the critical degree
// 2^floor((n-2)/2) * (n-1), ordinary and spin.
VerificationReport verify_nondegree(int lo, int hi);

// P7.3: for primes q in [n - (multiplicity of part 1), n] not dividing the
// degree, all multiples of q up to n appear among first-column hooks.
VerificationReport verify_fch_multiples(int lo, int hi);

// C7.4: pair version of the multiples property, bound 2n - h_i - h_j.
VerificationReport verify_fch_pair_multiples(int lo, int hi);

// P7.5 / P7.7: squeeze implications; the premise set is scanned and found
// empty (vacuous pass, flagged in the note) and the chain bound side is
// confirmed through t(n).
VerificationReport verify_squeeze_ordinary(int lo, int hi);
VerificationReport verify_squeeze_spin(int lo, int hi);

// P7.6: bar counts matching 2^ceil(.)*(n-1) happen only at the degenerate
// labels [2], [3] and [4,2].
VerificationReport verify_gnonexist(int lo, int hi);

// twopart: 2-part of every ordinary degree is at most n^2 times the 2-part
// of (2c+2)! where c = n - h_1.
VerificationReport verify_two_part_bound(int lo, int hi);

// spinlower: every bar count except [n] -> 1 and [n-1,1] -> n-2 is at least
// (n-1)(n-4)/2.
VerificationReport verify_spin_lower_bound(int lo, int hi);

// P8.2: multiplicity of the two-power degrees in the SymDouble multiset for
// even n (exactly 2 at 2^(n/2-1); exactly 1 at the n=2^r+2 special value;
// no other nontrivial two-power degrees).
VerificationReport verify_two_power_multiplicity(int lo, int hi);

// T7.2: chain gaps n - t(n); equality on the listed exceptional n, at most 4
// elsewhere.
VerificationReport verify_tn_bounds(int lo, int hi);

// Structural invariants: sum of squared degrees equals the group order.
VerificationReport verify_mass(int lo, int hi);

// Structural invariants: the two spin degree formulas agree label by label
// and all spin degrees are even from n = 5 on.
VerificationReport verify_spin_cross(int lo, int hi);

// The mass invariant on one explicit multiset, injectable for fault tests.
bool mass_check(const DegreeMultiset& ms);

struct ClaimInfo {
    std::string id;      // e.g. "L2.1"
    std::string alias;   // e.g. "ppow-sym"
    std::string summary;
    int default_lo = 0;
    int default_hi = 0;
};

const std::vector<ClaimInfo>& claim_list();

// Runs one claim by id or alias; lo/hi < 0 pick the claim defaults.
// Unknown names throw std::invalid_argument.
VerificationReport run_claim(const std::string& name, int lo = -1, int hi = -1);

// Runs every claim (in parallel when jobs > 1), sorted by claim id.
// max_n > 0 caps each claim's upper end, except the digit-sum scan whose
// exhaustive range is part of the statement.
std::vector<VerificationReport> verify_all(int jobs = 1, int max_n = -1);

} // namespace spindeg
