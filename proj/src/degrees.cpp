#include "spindeg/degrees.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace spindeg {

const char* family_name(Family f)
{
    switch (f) {
        case Family::Sym: return "Sym";
        case Family::Alt: return "Alt";
        case Family::SymDouble: return "SymDouble";
        case Family::AltDouble: return "AltDouble";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view name)
{
    std::string s;
    for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "sym" || s == "s") return Family::Sym;
    if (s == "alt" || s == "a") return Family::Alt;
    if (s == "symdouble" || s == "sym2" || s == "ds") return Family::SymDouble;
    if (s == "altdouble" || s == "alt2" || s == "da") return Family::AltDouble;
    return std::nullopt;
}

bool is_double_cover(Family f)
{
    return f == Family::SymDouble || f == Family::AltDouble;
}

mpz_class factorial(long n)
{
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

mpz_class pow2(long e)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return r;
}

mpz_class group_order(const Group& g)
{
    switch (g.family) {
        case Family::Sym: return factorial(g.n);
        case Family::Alt: return g.n <= 1 ? mpz_class(1) : mpz_class(factorial(g.n) / 2);
        case Family::SymDouble: return mpz_class(2 * factorial(g.n));
        case Family::AltDouble: return g.n <= 1 ? mpz_class(2) : factorial(g.n);
    }
    return 0;
}

/* Multiplies small factors into 64-bit chunks before touching the big
   integer; the chunked form cuts mpz traffic by an order of magnitude. */
namespace {

struct ChunkedProduct {
    static_assert(sizeof(unsigned long) >= 8, "needs 64-bit unsigned long");

    mpz_class value{1};
    unsigned long chunk = 1;

    void mul(int v)
    {
        auto u = static_cast<unsigned long>(v);
        if (chunk > std::numeric_limits<unsigned long>::max() / u) {
            value *= chunk;
            chunk = 1;
        }
        chunk *= u;
    }

    mpz_class finish()
    {
        if (chunk > 1) {
            value *= chunk;
            chunk = 1;
        }
        return value;
    }
};

mpz_class exact_quotient(const mpz_class& num, const mpz_class& den, const char* what)
{
    if (den == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw internal_error(std::string("exact division failed: ") + what);
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

/* Product of all hook lengths.  Row i of the hook multiset equals
   {1..h_i} \ {h_i - h_k : k > i} with h_i the first-column hooks, which
   avoids materializing the cell table. */
mpz_class hook_product(std::span<const int> parts)
{
    std::vector<int> fch = first_column_hooks(parts);
    ChunkedProduct prod;
    std::vector<char> excluded;
    for (size_t i = 0; i < fch.size(); ++i) {
        excluded.assign(static_cast<size_t>(fch[i]) + 1, 0);
        for (size_t k = i + 1; k < fch.size(); ++k)
            excluded[static_cast<size_t>(fch[i] - fch[k])] = 1;
        for (int v = fch[i]; v >= 1; --v)
            if (!excluded[static_cast<size_t>(v)]) prod.mul(v);
    }
    return prod.finish();
}

mpz_class bar_product(std::span<const int> parts)
{
    ChunkedProduct prod;
    std::vector<char> excluded;
    for (size_t i = 0; i < parts.size(); ++i) {
        int mi = parts[i];
        excluded.assign(static_cast<size_t>(mi) + 1, 0);
        for (size_t j = i + 1; j < parts.size(); ++j) {
            prod.mul(mi + parts[j]);
            excluded[static_cast<size_t>(mi - parts[j])] = 1;
        }
        for (int v = mi; v >= 1; --v)
            if (!excluded[static_cast<size_t>(v)]) prod.mul(v);
    }
    return prod.finish();
}

long long parts_sum(std::span<const int> parts)
{
    long long s = 0;
    for (int p : parts) s += p;
    return s;
}

} // namespace

mpz_class ordinary_degree(std::span<const int> parts)
{
    if (parts.empty()) return 1;
    return exact_quotient(factorial(parts_sum(parts)), hook_product(parts), "hook product vs n!");
}

SplitDegree alternating_degree(const Partition& p)
{
    mpz_class f = ordinary_degree(p.span());
    if (p.n() <= 1) return {f, 1}; // Alt(1) = Sym(1)
    if (!p.self_conjugate()) return {f, 1};
    return {exact_quotient(f, 2, "self-conjugate degree split"), 2};
}

mpz_class spin_bar_count(std::span<const int> parts)
{
    if (parts.empty()) return 1;
    return exact_quotient(factorial(parts_sum(parts)), bar_product(parts), "bar product vs n!");
}

mpz_class spin_degree_via_bars(std::span<const int> parts)
{
    long long n = parts_sum(parts);
    long long m = static_cast<long long>(parts.size());
    return pow2((n - m) / 2) * spin_bar_count(parts);
}

mpz_class spin_degree_via_product(std::span<const int> parts)
{
    long long n = parts_sum(parts);
    long long m = static_cast<long long>(parts.size());
    mpz_class num = factorial(n);
    mpz_class den = 1;
    for (size_t i = 0; i < parts.size(); ++i) {
        den *= factorial(parts[i]);
        for (size_t j = i + 1; j < parts.size(); ++j) {
            num *= parts[i] - parts[j];
            den *= parts[i] + parts[j];
        }
    }
    return pow2((n - m) / 2) * exact_quotient(num, den, "closed spin product");
}

mpz_class spin_degree(std::span<const int> parts)
{
    mpz_class a = spin_degree_via_bars(parts);
    mpz_class b = spin_degree_via_product(parts);
    if (a != b)
        throw internal_error("spin degree formulas disagree at " + format_parts(parts));
    return a;
}

SplitDegree alternating_spin_degree(const BarPartition& p)
{
    if (p.n() <= 1) return {1, 1}; // AltDouble(1) = SymDouble(1)
    mpz_class g = spin_degree(p.span());
    if ((p.n() - p.m()) % 2 != 0) return {g, 1};
    return {exact_quotient(g, 2, "even bar label spin split"), 2};
}

mpz_class basic_spin_degree(const Group& g)
{
    if (!is_double_cover(g.family) || g.n < 4)
        throw std::invalid_argument("basic spin degree needs a double cover with n >= 4");
    return g.family == Family::SymDouble ? pow2((g.n - 1) / 2) : pow2((g.n - 2) / 2);
}

void for_each_degree_record(const Group& g, const std::function<void(const DegreeRecord&)>& fn)
{
    if (g.n < 0) throw std::invalid_argument("n must be nonnegative");
    bool alt_side = g.family == Family::Alt || g.family == Family::AltDouble;

    if (alt_side && g.n <= 1) {
        // degenerate covers: Alt(n) = Sym(n) and AltDouble(n) = SymDouble(n)
        for_each_degree_record({g.family == Family::Alt ? Family::Sym : Family::SymDouble, g.n}, fn);
        return;
    }

    PartitionEnumerator pe(g.n);
    while (pe.next()) {
        auto parts = pe.current();
        if (!alt_side) {
            fn({format_parts(parts), false, ordinary_degree(parts), 1});
            continue;
        }
        std::vector<int> conj = conjugate_parts(parts);
        bool self = std::equal(conj.begin(), conj.end(), parts.begin(), parts.end());
        if (self) {
            mpz_class f = ordinary_degree(parts);
            fn({format_parts(parts), false, exact_quotient(f, 2, "self-conjugate degree split"), 2});
        } else if (std::lexicographical_compare(conj.begin(), conj.end(), parts.begin(), parts.end())) {
            // the lexicographically larger member names the conjugate pair
            fn({format_parts(parts), false, ordinary_degree(parts), 1});
        }
    }

    if (!is_double_cover(g.family)) return;

    BarPartitionEnumerator be(g.n);
    while (be.next()) {
        auto parts = be.current();
        long long m = static_cast<long long>(parts.size());
        bool odd_gap = (g.n - m) % 2 != 0;
        mpz_class gd = spin_degree(parts);
        if (g.family == Family::SymDouble) {
            fn({format_parts(parts), true, gd, odd_gap ? 2 : 1});
        } else if (odd_gap) {
            fn({format_parts(parts), true, gd, 1});
        } else {
            fn({format_parts(parts), true, exact_quotient(gd, 2, "even bar label spin split"), 2});
        }
    }
}

mpz_class DegreeMultiset::sum_of_squares() const
{
    mpz_class s = 0;
    for (const auto& [deg, m] : mult) s += deg * deg * static_cast<long>(m);
    return s;
}

DegreeMultiset degree_multiset(const Group& g)
{
    DegreeMultiset ms;
    ms.group = g;
    for_each_degree_record(g, [&](const DegreeRecord& r) {
        ms.mult[r.degree] += r.multiplicity;
        ms.total += r.multiplicity;
    });
    return ms;
}

std::vector<mpz_class> nontrivial_degrees(const DegreeMultiset& ms)
{
    std::vector<mpz_class> out;
    for (const auto& [deg, m] : ms.mult)
        if (deg > 1) out.push_back(deg);
    return out;
}

mpz_class d_i(const DegreeMultiset& ms, int i)
{
    if (i < 1) throw std::out_of_range("degree index is 1-based");
    int seen = 0;
    for (const auto& [deg, m] : ms.mult) {
        if (deg <= 1) continue;
        if (++seen == i) return deg;
    }
    throw std::out_of_range("group has fewer than " + std::to_string(i) + " nontrivial degrees");
}

mpz_class d_i(const Group& g, int i)
{
    DegreeMultiset ms = degree_multiset(g);
    return d_i(ms, i);
}

std::vector<std::pair<std::string, bool>> labels_of_degree(const Group& g, const mpz_class& deg)
{
    std::vector<std::pair<std::string, bool>> out;
    for_each_degree_record(g, [&](const DegreeRecord& r) {
        if (r.degree == deg) out.emplace_back(r.label, r.spin);
    });
    return out;
}

ClassCounts class_count(const Group& g)
{
    if (g.n < 1) throw std::invalid_argument("class counts need n >= 1");
    long long p = 0, a = 0, c = 0, d = 0;
    {
        PartitionEnumerator e(g.n);
        while (e.next()) {
            ++p;
            if (is_self_conjugate(e.current())) ++a;
        }
    }
    {
        BarPartitionEnumerator e(g.n);
        while (e.next()) {
            if ((g.n - static_cast<long long>(e.current().size())) % 2 == 0)
                ++c;
            else
                ++d;
        }
    }
    long long b = (p - a) / 2;
    ClassCounts cc{0, a, b, c, d};
    switch (g.family) {
        case Family::Sym: cc.k = a + 2 * b; break;
        case Family::Alt: cc.k = 2 * a + b; break;
        case Family::SymDouble: cc.k = a + 2 * b + c + 2 * d; break;
        case Family::AltDouble: cc.k = 2 * a + b + 2 * c + d; break;
    }
    return cc;
}

unsigned long two_adic_valuation(const mpz_class& x)
{
    if (x == 0) throw std::invalid_argument("two_adic_valuation(0) is undefined");
    return mpz_scan1(x.get_mpz_t(), 0);
}

unsigned long factorial_two_adic_valuation(unsigned long n)
{
    unsigned long s = 0;
    while (n > 0) {
        n /= 2;
        s += n;
    }
    return s;
}

} // namespace spindeg
