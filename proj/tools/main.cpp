#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spindeg/degrees.hpp"
#include "spindeg/json_io.hpp"
#include "spindeg/numtheory.hpp"
#include "spindeg/partition.hpp"
#include "spindeg/tn_cache.hpp"
#include "spindeg/verify.hpp"

namespace {

using namespace spindeg;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCache = 3;

// Commands that enumerate every character of a group walk p(n) labels with
// an O(n^2) hook product each; 50 keeps single runs in seconds.
constexpr int kMaxEnumN = 50;
// Class counts stay well inside long long here.
constexpr int kMaxClassN = 300;

const char* kind_str(bool spin) { return spin ? "spin" : "ord"; }

Family need_family(const std::string& name)
{
    auto f = parse_family(name);
    if (!f) throw std::invalid_argument("unknown family '" + name +
                                        "' (expected sym, alt, symdouble or altdouble)");
    return *f;
}

void check_range(int from, int to, int lo_min, int cap, const char* what)
{
    if (from < lo_min)
        throw std::invalid_argument(std::string(what) + ": range starts at " + std::to_string(lo_min));
    if (to < from) throw std::invalid_argument(std::string(what) + ": empty range");
    if (to > cap)
        throw std::invalid_argument(std::string(what) + ": n is capped at " + std::to_string(cap) +
                                    " (see README)");
}

std::string join_ints(const std::vector<int>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i]);
    }
    return s;
}

// x = p^k for a prime p <= max covered by `primes`?  Degrees of a group of
// order dividing 2 n! only have prime factors <= n, so a prime table up to n
// fully decides this.
bool is_prime_power(mpz_class x, const std::vector<int>& primes)
{
    if (mpz_cmp_ui(x.get_mpz_t(), 1) <= 0) return false;
    for (int p : primes) {
        if (!mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p))) continue;
        do
            mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p));
        while (mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p)));
        return mpz_cmp_ui(x.get_mpz_t(), 1) == 0;
    }
    return false;
}

int run_degrees(Family fam, int n, const std::string& format)
{
    Group g{fam, n};
    long long count = 0;
    mpz_class sumsq = 0;
    ordered_json records = ordered_json::array();
    bool csv = format == "csv";
    bool json = format == "json";

    if (csv) std::cout << "label,kind,d,mult\n";
    for_each_degree_record(g, [&](const DegreeRecord& r) {
        count += r.multiplicity;
        sumsq += r.multiplicity * r.degree * r.degree;
        if (json) {
            records.push_back(record_json(r));
        } else if (csv) {
            std::cout << csv_quote(r.label) << ',' << kind_str(r.spin) << ',' << r.degree.get_str()
                      << ',' << r.multiplicity << '\n';
        } else {
            std::cout << r.label << ' ' << kind_str(r.spin) << ' ' << r.degree.get_str() << " x"
                      << r.multiplicity << '\n';
        }
    });

    mpz_class order = group_order(g);
    bool mass_ok = sumsq == order;
    if (json) {
        ordered_json j;
        j["family"] = family_name(fam);
        j["n"] = n;
        j["records"] = std::move(records);
        j["count"] = count;
        j["sumsq"] = sumsq.get_str();
        j["group_order"] = order.get_str();
        std::cout << j.dump() << '\n';
    } else if (!csv) {
        std::cout << "count=" << count << " sumsq=" << sumsq.get_str()
                  << (mass_ok ? "=|G|" : "!=|G|=" + order.get_str()) << '\n';
    }
    if (!mass_ok) {
        std::cerr << "mass check failed for " << family_name(fam) << " n=" << n << '\n';
        return kExitFail;
    }
    return kExitPass;
}

int run_dmin(Family fam, int n, int i, const std::string& format)
{
    Group g{fam, n};
    DegreeMultiset ms = degree_multiset(g);
    mpz_class d = d_i(ms, i); // out_of_range when too few distinct degrees

    std::vector<DegreeRecord> hits;
    for_each_degree_record(g, [&](const DegreeRecord& r) {
        if (r.degree == d) hits.push_back(r);
    });

    if (format == "json") {
        ordered_json j;
        j["family"] = family_name(fam);
        j["n"] = n;
        j["i"] = i;
        j["d"] = d.get_str();
        ordered_json labels = ordered_json::array();
        for (const DegreeRecord& r : hits) labels.push_back(record_json(r));
        j["labels"] = std::move(labels);
        std::cout << j.dump() << '\n';
    } else if (format == "csv") {
        std::cout << "family,n,i,d,label,kind,mult\n";
        for (const DegreeRecord& r : hits)
            std::cout << family_name(fam) << ',' << n << ',' << i << ',' << d.get_str() << ','
                      << csv_quote(r.label) << ',' << kind_str(r.spin) << ',' << r.multiplicity
                      << '\n';
    } else {
        std::cout << "d_" << i << "(" << family_name(fam) << ", n=" << n << ") = " << d.get_str()
                  << '\n';
        for (const DegreeRecord& r : hits)
            std::cout << r.label << ' ' << kind_str(r.spin) << " x" << r.multiplicity << '\n';
    }
    return kExitPass;
}

int run_ppow(Family fam, int from, int to, const std::string& format)
{
    PrimeTables tables(std::max(to, 4));
    std::vector<int> primes = tables.primes();

    long long total = 0;
    ordered_json rows = ordered_json::array();
    bool csv = format == "csv";
    bool json = format == "json";
    if (csv) std::cout << "n,label,kind,d,mult\n";

    for (int n = from; n <= to; ++n) {
        for_each_degree_record(Group{fam, n}, [&](const DegreeRecord& r) {
            if (!is_prime_power(r.degree, primes)) return;
            ++total;
            if (json) {
                ordered_json row;
                row["n"] = n;
                row["label"] = r.label;
                row["spin"] = r.spin;
                row["d"] = r.degree.get_str();
                row["mult"] = r.multiplicity;
                rows.push_back(std::move(row));
            } else if (csv) {
                std::cout << n << ',' << csv_quote(r.label) << ',' << kind_str(r.spin) << ','
                          << r.degree.get_str() << ',' << r.multiplicity << '\n';
            } else {
                std::cout << n << ' ' << r.label << ' ' << kind_str(r.spin) << ' '
                          << r.degree.get_str() << " x" << r.multiplicity << '\n';
            }
        });
    }

    if (json) {
        ordered_json j;
        j["family"] = family_name(fam);
        j["from"] = from;
        j["to"] = to;
        j["rows"] = std::move(rows);
        std::cout << j.dump() << '\n';
    } else if (!csv) {
        std::cout << "total " << total << '\n';
    }
    return kExitPass;
}

int run_odd_count(int from, int to, const std::string& format)
{
    ordered_json rows = ordered_json::array();
    bool csv = format == "csv";
    bool json = format == "json";
    if (csv) std::cout << "n,exponent_sum,formula,symdouble,altdouble\n";

    for (int n = from; n <= to; ++n) {
        BinaryExpansion be = binary_expansion(n);
        long long formula = 1LL << be.exponent_sum;
        long long sym_odd = 0, alt_odd = 0;
        for (const auto& [deg, m] : degree_multiset(Group{Family::SymDouble, n}).mult)
            if (mpz_odd_p(deg.get_mpz_t())) sym_odd += m;
        for (const auto& [deg, m] : degree_multiset(Group{Family::AltDouble, n}).mult)
            if (mpz_odd_p(deg.get_mpz_t())) alt_odd += m;

        if (json) {
            ordered_json row;
            row["n"] = n;
            row["exponents"] = be.exponents;
            row["formula"] = formula;
            row["symdouble"] = sym_odd;
            row["altdouble"] = alt_odd;
            rows.push_back(std::move(row));
        } else if (csv) {
            std::cout << n << ',' << be.exponent_sum << ',' << formula << ',' << sym_odd << ','
                      << alt_odd << '\n';
        } else {
            std::cout << "n=" << n << " formula=2^" << be.exponent_sum << "=" << formula
                      << " symdouble=" << sym_odd << " altdouble=" << alt_odd << '\n';
        }
    }
    if (json) std::cout << rows.dump() << '\n';
    return kExitPass;
}

int run_classes(int from, int to, const std::string& format)
{
    ordered_json rows = ordered_json::array();
    bool csv = format == "csv";
    bool json = format == "json";
    if (csv) std::cout << "n,a,b,c,d,sym,alt,symdouble,altdouble\n";

    for (int n = from; n <= to; ++n) {
        ClassCounts s = class_count(Group{Family::Sym, n});
        long long alt = class_count(Group{Family::Alt, n}).k;
        long long s2 = class_count(Group{Family::SymDouble, n}).k;
        long long a2 = class_count(Group{Family::AltDouble, n}).k;

        if (json) {
            ordered_json row;
            row["n"] = n;
            row["a"] = s.a;
            row["b"] = s.b;
            row["c"] = s.c;
            row["d"] = s.d;
            row["sym"] = s.k;
            row["alt"] = alt;
            row["symdouble"] = s2;
            row["altdouble"] = a2;
            rows.push_back(std::move(row));
        } else if (csv) {
            std::cout << n << ',' << s.a << ',' << s.b << ',' << s.c << ',' << s.d << ',' << s.k
                      << ',' << alt << ',' << s2 << ',' << a2 << '\n';
        } else {
            std::cout << "n=" << n << " a=" << s.a << " b=" << s.b << " c=" << s.c << " d=" << s.d
                      << " sym=" << s.k << " alt=" << alt << " symdouble=" << s2
                      << " altdouble=" << a2 << '\n';
        }
    }
    if (json) std::cout << rows.dump() << '\n';
    return kExitPass;
}

int run_nondegree(int from, int to, const std::string& format)
{
    long long total = 0;
    ordered_json rows = ordered_json::array();
    bool csv = format == "csv";
    bool json = format == "json";
    if (csv) std::cout << "n,label,kind,d,mult\n";

    for (int n = from; n <= to; ++n) {
        mpz_class target = pow2((n - 2) / 2) * (n - 1);
        for_each_degree_record(Group{Family::SymDouble, n}, [&](const DegreeRecord& r) {
            if (r.degree != target) return;
            ++total;
            if (json) {
                ordered_json row;
                row["n"] = n;
                row["label"] = r.label;
                row["spin"] = r.spin;
                row["d"] = r.degree.get_str();
                row["mult"] = r.multiplicity;
                rows.push_back(std::move(row));
            } else if (csv) {
                std::cout << n << ',' << csv_quote(r.label) << ',' << kind_str(r.spin) << ','
                          << r.degree.get_str() << ',' << r.multiplicity << '\n';
            } else {
                std::cout << n << ' ' << r.label << ' ' << kind_str(r.spin) << ' '
                          << r.degree.get_str() << " x" << r.multiplicity << '\n';
            }
        });
    }

    if (json) {
        std::cout << rows.dump() << '\n';
    } else if (!csv) {
        std::cout << "total " << total << '\n';
    }
    return kExitPass;
}

int run_tn(int from, int to, int jobs, const std::string& cache_dir, const std::string& format)
{
    TnCache cache(cache_dir);
    std::vector<TnResult> rows = t_table(from, to, jobs, cache);

    std::vector<int> exceptions;
    for (const TnResult& r : rows)
        if (r.gap() > 4) exceptions.push_back(r.n);

    if (format == "json") {
        ordered_json j;
        ordered_json jrows = ordered_json::array();
        for (const TnResult& r : rows) jrows.push_back(tn_json(r));
        j["rows"] = std::move(jrows);
        j["exceptions"] = exceptions;
        std::cout << j.dump() << '\n';
    } else if (format == "csv") {
        std::cout << "n,t,gap,witness_s,witness_t\n";
        for (const TnResult& r : rows)
            std::cout << r.n << ',' << r.t << ',' << r.gap() << ',' << csv_quote(join_ints(r.witness_s))
                      << ',' << csv_quote(join_ints(r.witness_t)) << '\n';
    } else {
        for (const TnResult& r : rows) {
            std::cout << "n=" << r.n << " t=" << r.t << " gap=" << r.gap() << " witness";
            if (r.witness_s.empty()) std::cout << " -";
            for (std::size_t i = 0; i < r.witness_s.size(); ++i)
                std::cout << " (" << r.witness_s[i] << ',' << r.witness_t[i] << ')';
            std::cout << '\n';
        }
        std::cout << "exceptions(gap>4):";
        if (exceptions.empty()) std::cout << " none";
        for (int n : exceptions) std::cout << ' ' << n;
        std::cout << '\n';
    }
    return kExitPass;
}

int run_verify(const std::string& claim, int max_n, int jobs, const std::string& format)
{
    if (claim != "all") {
        bool known = false;
        for (const ClaimInfo& c : claim_list()) known = known || claim == c.id || claim == c.alias;
        if (!known) {
            std::cerr << "unknown claim '" << claim << "'; valid claims:\n";
            for (const ClaimInfo& c : claim_list())
                std::cerr << "  " << c.id << " (" << c.alias << ") default n=[" << c.default_lo
                          << ',' << c.default_hi << "] " << c.summary << '\n';
            return kExitUsage;
        }
    }

    std::vector<VerificationReport> reports;
    if (claim == "all")
        reports = verify_all(jobs, max_n);
    else
        reports.push_back(run_claim(claim, -1, max_n > 0 ? max_n : -1));

    long long pass = 0, fail = 0, skipped = 0;
    for (const VerificationReport& r : reports) {
        if (r.status == VerifyStatus::fail) ++fail;
        else if (r.status == VerifyStatus::pass) ++pass;
        else ++skipped;
    }

    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const VerificationReport& r : reports) arr.push_back(report_json(r));
        std::cout << arr.dump() << '\n';
    } else if (format == "csv") {
        std::cout << "claim,status,n_lo,n_hi,counterexamples,ms\n";
        for (const VerificationReport& r : reports)
            std::cout << r.claim << ',' << status_name(r.status) << ',' << r.n_lo << ',' << r.n_hi
                      << ',' << r.counterexamples.size() << ',' << r.ms << '\n';
    } else {
        for (const VerificationReport& r : reports) {
            std::cout << r.claim << ' ' << status_name(r.status) << " n=[" << r.n_lo << ','
                      << r.n_hi << "] " << r.ms << "ms\n";
            for (const Counterexample& ce : r.counterexamples)
                std::cout << "  counterexample n=" << ce.n << " label=" << ce.label
                          << " value=" << ce.value << '\n';
            if (!r.note.empty()) std::cout << "  note: " << r.note << '\n';
        }
        std::cout << "summary " << reports.size() << " claims: " << pass << " pass, " << fail
                  << " fail, " << skipped << " skipped\n";
    }
    return fail > 0 ? kExitFail : kExitPass;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"character degrees of symmetric and alternating groups and their double covers"};
    app.require_subcommand(1);

    std::string family_str, format = "text", claim = "all", cache_dir;
    int n = 0, i = 1, from = -1, to = -1, jobs = 1, max_n = -1;
    auto fmt_check = CLI::IsMember({"text", "json", "csv"});

    CLI::App* c_degrees = app.add_subcommand("degrees", "list every irreducible character degree");
    c_degrees->add_option("--family", family_str, "sym|alt|symdouble|altdouble")->required();
    c_degrees->add_option("--n", n, "group parameter")->required();
    c_degrees->add_option("--format", format)->check(fmt_check);

    CLI::App* c_dmin = app.add_subcommand("dmin", "i-th smallest nontrivial degree");
    c_dmin->add_option("--family", family_str)->required();
    c_dmin->add_option("--n", n)->required();
    c_dmin->add_option("--i", i, "1-based index among distinct degrees");
    c_dmin->add_option("--format", format)->check(fmt_check);

    CLI::App* c_ppow = app.add_subcommand("ppow", "prime-power degrees in an n range");
    c_ppow->add_option("--family", family_str)->required();
    c_ppow->add_option("--n", n, "single n (shorthand for --from/--to)");
    c_ppow->add_option("--from", from);
    c_ppow->add_option("--to", to);
    c_ppow->add_option("--format", format)->check(fmt_check);

    CLI::App* c_odd = app.add_subcommand("odd-count", "odd-degree character counts of the covers");
    c_odd->add_option("--n", n);
    c_odd->add_option("--from", from);
    c_odd->add_option("--to", to);
    c_odd->add_option("--format", format)->check(fmt_check);

    CLI::App* c_classes = app.add_subcommand("classes", "conjugacy class counts");
    c_classes->add_option("--n", n);
    c_classes->add_option("--from", from);
    c_classes->add_option("--to", to);
    c_classes->add_option("--format", format)->check(fmt_check);

    CLI::App* c_nondeg = app.add_subcommand("nondegree", "labels hitting 2^floor((n-2)/2)*(n-1)");
    c_nondeg->add_option("--n", n);
    c_nondeg->add_option("--from", from);
    c_nondeg->add_option("--to", to);
    c_nondeg->add_option("--format", format)->check(fmt_check);

    CLI::App* c_tn = app.add_subcommand("tn", "chain bound t(n) with witnesses, checkpointed");
    c_tn->add_option("--from", from);
    c_tn->add_option("--to", to);
    c_tn->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    c_tn->add_option("--cache-dir", cache_dir, "checkpoint directory (SPINDEG_CACHE overrides)");
    c_tn->add_option("--format", format)->check(fmt_check);

    CLI::App* c_verify = app.add_subcommand("verify", "re-check claims against enumeration");
    c_verify->add_option("--claim", claim, "claim id, alias, or 'all'");
    c_verify->add_option("--max-n", max_n, "override the upper end of the sweep");
    c_verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    c_verify->add_option("--format", format)->check(fmt_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*c_degrees) {
            Family fam = need_family(family_str);
            check_range(n, n, 1, kMaxEnumN, "degrees");
            return run_degrees(fam, n, format);
        }
        if (*c_dmin) {
            Family fam = need_family(family_str);
            check_range(n, n, 1, kMaxEnumN, "dmin");
            return run_dmin(fam, n, i, format);
        }
        if (*c_ppow) {
            Family fam = need_family(family_str);
            if (n > 0) from = to = n;
            if (from < 0) from = 5;
            if (to < 0) to = 36;
            check_range(from, to, 1, kMaxEnumN, "ppow");
            return run_ppow(fam, from, to, format);
        }
        if (*c_odd) {
            if (n > 0) from = to = n;
            if (from < 0) from = 5;
            if (to < 0) to = 36;
            check_range(from, to, 1, kMaxEnumN, "odd-count");
            return run_odd_count(from, to, format);
        }
        if (*c_classes) {
            if (n > 0) from = to = n;
            if (from < 0) from = 1;
            if (to < 0) to = 60;
            check_range(from, to, 1, kMaxClassN, "classes");
            return run_classes(from, to, format);
        }
        if (*c_nondeg) {
            if (n > 0) from = to = n;
            if (from < 0) from = 2;
            if (to < 0) to = 44;
            check_range(from, to, 2, kMaxEnumN, "nondegree");
            return run_nondegree(from, to, format);
        }
        if (*c_tn) {
            if (from < 0) from = 15;
            if (to < 0) to = 250;
            check_range(from, to, 15, PrimeTables::kMaxLimit, "tn");
            const char* env = std::getenv("SPINDEG_CACHE");
            std::string dir = (env && *env) ? std::string(env) : cache_dir;
            return run_tn(from, to, jobs, dir, format);
        }
        if (*c_verify) return run_verify(claim, max_n, jobs, format);
    } catch (const cache_error& e) {
        std::cerr << "cache error: " << e.what() << '\n';
        return kExitCache;
    } catch (const resource_error& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
