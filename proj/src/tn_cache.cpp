#include "spindeg/tn_cache.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

#include "spindeg/json_io.hpp"

namespace spindeg {

namespace fs = std::filesystem;

TnCache::TnCache(const std::string& dir)
{
    if (dir.empty()) return;
    fs::create_directories(dir);
    path_ = (fs::path(dir) / kFileName).string();
    std::ifstream in(path_);
    if (!in.is_open()) return;

    std::string line;
    long long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        TnResult row;
        try {
            row = tn_from_json(ordered_json::parse(line));
        } catch (const std::exception& e) {
            throw cache_error(path_ + ":" + std::to_string(lineno) + ": unreadable row: " + e.what());
        }
        if (row.n < 2 || !validate_witness(row.n, row.witness_s, row.witness_t, row.t))
            throw cache_error(path_ + ":" + std::to_string(lineno) + ": row for n=" +
                              std::to_string(row.n) + " fails witness revalidation");
        rows_[row.n] = std::move(row); // concatenated shards may repeat an n
    }
}

std::optional<TnResult> TnCache::get(int n) const
{
    auto it = rows_.find(n);
    if (it == rows_.end()) return std::nullopt;
    return it->second;
}

void TnCache::put(const TnResult& row)
{
    if (has(row.n)) return;
    if (!path_.empty()) {
        std::ofstream out(path_, std::ios::app);
        if (!out.is_open()) throw cache_error("cannot append to " + path_);
        out << tn_json(row).dump() << '\n';
        if (!out.good()) throw cache_error("write failed on " + path_);
    }
    rows_[row.n] = row;
}

std::vector<TnResult> t_table(int from, int to, int jobs, TnCache& cache)
{
    if (from < 2 || to < from) throw std::invalid_argument("t_table needs 2 <= from <= to");
    if (jobs < 1) throw std::invalid_argument("t_table needs jobs >= 1");

    std::vector<int> missing;
    for (int n = from; n <= to; ++n)
        if (!cache.has(n)) missing.push_back(n);

    if (!missing.empty()) {
        PrimeTables tables(std::max(to, 64));
        std::mutex write_mu;
        std::atomic<std::size_t> next{0};
        std::atomic<bool> stop{false};
        std::exception_ptr first_error;

        auto worker = [&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= missing.size() || stop.load()) return;
                try {
                    TnResult row = compute_t(missing[i], tables);
                    std::lock_guard<std::mutex> lock(write_mu);
                    cache.put(row);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(write_mu);
                    if (!first_error) first_error = std::current_exception();
                    stop.store(true);
                    return;
                }
            }
        };

        int workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), missing.size()));
        if (workers <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(workers));
            for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
            for (std::thread& th : pool) th.join();
        }
        if (first_error) std::rethrow_exception(first_error);
    }

    std::vector<TnResult> out;
    out.reserve(static_cast<std::size_t>(to - from + 1));
    for (int n = from; n <= to; ++n) out.push_back(*cache.get(n));
    return out;
}

} // namespace spindeg
