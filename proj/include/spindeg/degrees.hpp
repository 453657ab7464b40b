#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spindeg/partition.hpp"

namespace spindeg {

/// Signals a broken internal cross-check (two independent formulas disagree,
/// or an exact division fails).  Never expected on valid input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

enum class Family { Sym, Alt, SymDouble, AltDouble };

struct Group {
    Family family;
    int n;
};

const char* family_name(Family f);
std::optional<Family> parse_family(std::string_view name); // case-insensitive
bool is_double_cover(Family f);

mpz_class factorial(long n);
mpz_class pow2(long e);
mpz_class group_order(const Group& g);

// Character degree of the symmetric group: n! over the product of all hook
// lengths.  The product is accumulated first and divided out once; a failed
// exact division throws.
mpz_class ordinary_degree(std::span<const int> parts);
inline mpz_class ordinary_degree(const Partition& p) { return ordinary_degree(p.span()); }

struct SplitDegree {
    mpz_class degree;
    int multiplicity; // characters of this degree contributed by the label
};

// Restriction to the alternating group: a self-conjugate label splits into
// two characters of half the degree; otherwise the conjugate pair {p, p'}
// carries one character of the full degree.
SplitDegree alternating_degree(const Partition& p);

// n! over the product of all bar lengths.
mpz_class spin_bar_count(std::span<const int> parts);
inline mpz_class spin_bar_count(const BarPartition& p) { return spin_bar_count(p.span()); }

// Spin degree 2^floor((n-m)/2) * spin_bar_count, cross-checked on every call
// against the closed product form; disagreement throws internal_error.
mpz_class spin_degree(std::span<const int> parts);
inline mpz_class spin_degree(const BarPartition& p) { return spin_degree(p.span()); }

// The two routes behind spin_degree, exposed for verification.
mpz_class spin_degree_via_bars(std::span<const int> parts);
mpz_class spin_degree_via_product(std::span<const int> parts);

// Spin side of the alternating double cover: for n-m odd the label carries
// one character of the full spin degree, for n-m even two of half of it.
SplitDegree alternating_spin_degree(const BarPartition& p);

// Smallest spin degree of a double cover (n >= 4).
mpz_class basic_spin_degree(const Group& g);

struct DegreeRecord {
    std::string label;
    bool spin = false;
    mpz_class degree;
    int multiplicity = 1;
};

// Visits one record per character label in deterministic order: ordinary
// labels first (descending lex), then bar labels for the double covers.
void for_each_degree_record(const Group& g, const std::function<void(const DegreeRecord&)>& fn);

struct DegreeMultiset {
    Group group{Family::Sym, 0};
    std::map<mpz_class, long long> mult; // degree -> multiplicity
    long long total = 0;                 // = number of irreducible characters

    mpz_class sum_of_squares() const;
};

DegreeMultiset degree_multiset(const Group& g);

// Distinct degrees > 1, ascending.
std::vector<mpz_class> nontrivial_degrees(const DegreeMultiset& ms);

// i-th smallest degree > 1 (1-based).  Throws std::out_of_range if the group
// has fewer than i distinct nontrivial degrees.
mpz_class d_i(const DegreeMultiset& ms, int i);
mpz_class d_i(const Group& g, int i);

// All labels achieving the given character degree, as (label, spin) pairs.
std::vector<std::pair<std::string, bool>> labels_of_degree(const Group& g, const mpz_class& deg);

struct ClassCounts {
    long long k; // number of conjugacy classes = number of irreducibles
    long long a; // self-conjugate partitions of n
    long long b; // unordered conjugate pairs, non-self-conjugate
    long long c; // strict partitions with n-m even
    long long d; // strict partitions with n-m odd
};

// k(Sym) = a+2b, k(Alt) = 2a+b, k(SymDouble) = a+2b+c+2d,
// k(AltDouble) = 2a+b+2c+d.  Always the formula values, including n = 1
// where the covers degenerate (see README).
ClassCounts class_count(const Group& g);

// Largest e with 2^e dividing x (x != 0).
unsigned long two_adic_valuation(const mpz_class& x);

// Valuation of n! by the descending-quotient sum, for cross-checks.
unsigned long factorial_two_adic_valuation(unsigned long n);

} // namespace spindeg
