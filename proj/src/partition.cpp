#include "spindeg/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace spindeg {

static int checked_sum(std::span<const int> parts)
{
    long long s = 0;
    for (int p : parts) s += p;
    if (s > 10000)
        throw std::invalid_argument("partition size beyond supported limit (10^4)");
    return static_cast<int>(s);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    n_ = checked_sum(parts_);
}

BarPartition::BarPartition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("bar partition parts must be positive");
        if (i > 0 && parts_[i] >= parts_[i - 1])
            throw std::invalid_argument("bar partition parts must be strictly decreasing");
    }
    n_ = checked_sum(parts_);
}

std::vector<int> conjugate_parts(std::span<const int> parts)
{
    std::vector<int> conj;
    if (parts.empty()) return conj;
    conj.resize(static_cast<size_t>(parts[0]));
    /* conj_j counts the parts that are >= j */
    size_t i = parts.size();
    for (int j = 1; j <= parts[0]; ++j) {
        while (i > 0 && parts[i - 1] < j) --i;
        conj[static_cast<size_t>(j - 1)] = static_cast<int>(i);
    }
    return conj;
}

bool is_self_conjugate(std::span<const int> parts)
{
    std::vector<int> conj = conjugate_parts(parts);
    return std::equal(conj.begin(), conj.end(), parts.begin(), parts.end());
}

std::string format_parts(std::span<const int> parts)
{
    std::string s = "[";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts[i]);
    }
    s += ']';
    return s;
}

Partition Partition::conjugate() const
{
    return Partition(conjugate_parts(parts_));
}

int Partition::ones() const
{
    int c = 0;
    for (size_t i = parts_.size(); i > 0 && parts_[i - 1] == 1; --i) ++c;
    return c;
}

HookTable HookTable::of(std::span<const int> parts)
{
    HookTable t;
    std::vector<int> conj = conjugate_parts(parts);
    t.rows.resize(parts.size());
    for (size_t i = 0; i < parts.size(); ++i) {
        t.rows[i].resize(static_cast<size_t>(parts[i]));
        for (int j = 0; j < parts[i]; ++j) {
            int arm = parts[i] - 1 - j;
            int leg = conj[static_cast<size_t>(j)] - 1 - static_cast<int>(i);
            t.rows[i][static_cast<size_t>(j)] = arm + leg + 1;
        }
    }
    return t;
}

std::vector<int> HookTable::first_column() const
{
    std::vector<int> fch;
    fch.reserve(rows.size());
    for (const auto& r : rows) fch.push_back(r.front());
    return fch;
}

std::vector<int> first_column_hooks(std::span<const int> parts)
{
    int l = static_cast<int>(parts.size());
    std::vector<int> fch(parts.size());
    for (int i = 0; i < l; ++i) fch[static_cast<size_t>(i)] = parts[static_cast<size_t>(i)] + l - i - 1;
    return fch;
}

BarTable BarTable::of(std::span<const int> parts)
{
    BarTable t;
    size_t m = parts.size();
    t.rows.resize(m);
    std::vector<char> excluded;
    for (size_t i = 0; i < m; ++i) {
        int mi = parts[i];
        auto& row = t.rows[i];
        row.reserve(static_cast<size_t>(mi) + (m - i - 1));
        excluded.assign(static_cast<size_t>(mi) + 1, 0);
        /* sums mu_i + mu_j descend with j and exceed every unexcluded value,
           so the row comes out sorted without an explicit sort */
        for (size_t j = i + 1; j < m; ++j) {
            row.push_back(mi + parts[j]);
            excluded[static_cast<size_t>(mi - parts[j])] = 1;
        }
        for (int v = mi; v >= 1; --v)
            if (!excluded[static_cast<size_t>(v)]) row.push_back(v);
    }
    return t;
}

PartitionEnumerator::PartitionEnumerator(int n) : n_(n)
{
    if (n < 0 || n > 10000)
        throw std::invalid_argument("partition enumeration needs 0 <= n <= 10^4");
    buf_.reserve(static_cast<size_t>(n));
}

bool PartitionEnumerator::next()
{
    if (done_) return false;
    if (!started_) {
        started_ = true;
        if (n_ > 0) buf_.assign(1, n_);
        return true; // n = 0 yields the single empty partition
    }
    /* descending lex successor: find the deepest part > 1, lower it by one,
       and redistribute the freed weight greedily */
    size_t i = buf_.size();
    long long rest = 0;
    while (i > 0 && buf_[i - 1] == 1) {
        --i;
        ++rest;
    }
    if (i == 0) {
        done_ = true;
        return false;
    }
    --i;
    rest += buf_[i];
    int v = buf_[i] - 1;
    buf_.resize(i);
    while (rest >= v) {
        buf_.push_back(v);
        rest -= v;
    }
    if (rest > 0) buf_.push_back(static_cast<int>(rest));
    return true;
}

BarPartitionEnumerator::BarPartitionEnumerator(int n) : n_(n)
{
    if (n < 0 || n > 10000)
        throw std::invalid_argument("bar partition enumeration needs 0 <= n <= 10^4");
    buf_.reserve(64);
}

bool BarPartitionEnumerator::next()
{
    if (done_) return false;
    if (!started_) {
        started_ = true;
        if (n_ > 0) buf_.assign(1, n_);
        return true;
    }
    /* descending lex successor among strict partitions: at the deepest
       position take the largest smaller value whose remainder still fits
       under a strictly decreasing tail */
    long long suffix = 0;
    for (size_t i = buf_.size(); i > 0; --i) {
        suffix += buf_[i - 1];
        for (int v = buf_[i - 1] - 1; v >= 1; --v) {
            long long rem = suffix - v;
            if (rem > static_cast<long long>(v) * (v - 1) / 2) continue;
            buf_.resize(i - 1);
            buf_.push_back(v);
            int prev = v;
            while (rem > 0) {
                int w = static_cast<int>(std::min<long long>(prev - 1, rem));
                buf_.push_back(w);
                rem -= w;
                prev = w;
            }
            return true;
        }
    }
    done_ = true;
    return false;
}

std::vector<Partition> enumerate_partitions(int n)
{
    std::vector<Partition> out;
    PartitionEnumerator e(n);
    while (e.next()) out.emplace_back(std::vector<int>(e.current().begin(), e.current().end()));
    return out;
}

std::vector<BarPartition> enumerate_bar_partitions(int n)
{
    std::vector<BarPartition> out;
    BarPartitionEnumerator e(n);
    while (e.next()) out.emplace_back(std::vector<int>(e.current().begin(), e.current().end()));
    return out;
}

long long count_partitions(int n)
{
    long long c = 0;
    PartitionEnumerator e(n);
    while (e.next()) ++c;
    return c;
}

long long count_bar_partitions(int n)
{
    long long c = 0;
    BarPartitionEnumerator e(n);
    while (e.next()) ++c;
    return c;
}

} // namespace spindeg
