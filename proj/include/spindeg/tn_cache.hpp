#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spindeg/numtheory.hpp"

namespace spindeg {

// A cache file that fails to parse or to revalidate.  The CLI maps this to
// exit code 3.
class cache_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Append-only JSONL checkpoint of t(n) rows, one object per line.  Shards of
// the same table merge by concatenating their files.  Every row read from
// disk is revalidated against its witness chain before it is trusted.
class TnCache {
public:
    static constexpr const char* kFileName = "tn.jsonl";

    // Loads dir/tn.jsonl when present; empty dir keeps the cache in memory
    // only.  Throws cache_error on an unreadable or invalid row.
    explicit TnCache(const std::string& dir);

    bool has(int n) const { return rows_.count(n) != 0; }
    std::optional<TnResult> get(int n) const;
    std::size_t size() const { return rows_.size(); }

    // Appends one row to the file (when backed by one) and keeps it in
    // memory.  A row for an already-present n is ignored, so reruns do not
    // grow the file.
    void put(const TnResult& row);

private:
    std::string path_; // empty = memory only
    std::map<int, TnResult> rows_;
};

// Returns rows for every n in [from, to] in ascending order, computing the
// missing ones with `jobs` worker threads.  All cache writes happen on one
// thread at a time.
std::vector<TnResult> t_table(int from, int to, int jobs, TnCache& cache);

} // namespace spindeg
