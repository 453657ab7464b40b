#include "spindeg/json_io.hpp"

namespace spindeg {

ordered_json record_json(const DegreeRecord& rec)
{
    ordered_json j;
    j["label"] = rec.label;
    j["spin"] = rec.spin;
    j["d"] = rec.degree.get_str();
    j["mult"] = rec.multiplicity;
    return j;
}

ordered_json multiset_json(const DegreeMultiset& ms)
{
    ordered_json j;
    j["family"] = family_name(ms.group.family);
    j["n"] = ms.group.n;
    ordered_json degrees = ordered_json::array();
    for (const auto& [deg, m] : ms.mult) {
        ordered_json row;
        row["d"] = deg.get_str();
        row["mult"] = m;
        degrees.push_back(std::move(row));
    }
    j["degrees"] = std::move(degrees);
    return j;
}

ordered_json report_json(const VerificationReport& rep)
{
    ordered_json j;
    j["claim"] = rep.claim;
    j["n"] = ordered_json::array({rep.n_lo, rep.n_hi});
    j["status"] = status_name(rep.status);
    ordered_json ces = ordered_json::array();
    for (const Counterexample& ce : rep.counterexamples) {
        ordered_json row;
        row["n"] = ce.n;
        row["label"] = ce.label;
        row["value"] = ce.value;
        ces.push_back(std::move(row));
    }
    j["counterexamples"] = std::move(ces);
    j["ms"] = rep.ms;
    if (!rep.note.empty()) j["note"] = rep.note;
    return j;
}

ordered_json tn_json(const TnResult& row)
{
    ordered_json j;
    j["n"] = row.n;
    j["t"] = row.t;
    j["gap"] = row.gap();
    j["witness_s"] = row.witness_s;
    j["witness_t"] = row.witness_t;
    return j;
}

TnResult tn_from_json(const ordered_json& j)
{
    TnResult r;
    r.n = j.at("n").get<int>();
    r.t = j.at("t").get<int>();
    r.witness_s = j.at("witness_s").get<std::vector<int>>();
    r.witness_t = j.at("witness_t").get<std::vector<int>>();
    r.m_empty = r.t == 0;
    return r;
}

std::string csv_quote(const std::string& s)
{
    std::string out;
    out.reserve(s.size() + 2);
    out += '"';
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace spindeg
