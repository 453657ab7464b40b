#pragma once

#include <span>
#include <string>
#include <vector>

namespace spindeg {

std::vector<int> conjugate_parts(std::span<const int> parts);
bool is_self_conjugate(std::span<const int> parts);
std::string format_parts(std::span<const int> parts); // "[4,2,2]", "[]" for empty

/// A partition of n: weakly decreasing positive parts.  The empty partition
/// is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }
    std::span<const int> span() const { return parts_; }
    int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }

    Partition conjugate() const;
    bool self_conjugate() const { return is_self_conjugate(parts_); }
    int ones() const; // multiplicity of the part 1
    std::string str() const { return format_parts(parts_); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// A strict (bar) partition: strictly decreasing positive parts.
class BarPartition {
public:
    BarPartition() = default;
    explicit BarPartition(std::vector<int> parts);

    int n() const { return n_; }
    int m() const { return static_cast<int>(parts_.size()); } // part count
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }
    std::span<const int> span() const { return parts_; }
    int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }

    std::string str() const { return format_parts(parts_); }

    friend bool operator==(const BarPartition&, const BarPartition&) = default;
    friend bool operator<(const BarPartition& a, const BarPartition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Hook lengths of a partition, cell by cell.  rows[i][j] is h(i+1,j+1);
/// the first-column values h(i,1) are pairwise distinct and strictly
/// decreasing down the column.
struct HookTable {
    std::vector<std::vector<int>> rows;

    static HookTable of(std::span<const int> parts);
    static HookTable of(const Partition& p) { return of(p.span()); }

    std::vector<int> first_column() const; // fch, largest first
};

/// Bar lengths of a strict partition.  Row i holds, largest first,
/// {mu_i + mu_j : j > i} together with {1..mu_i} \ {mu_i - mu_j : j > i}.
struct BarTable {
    std::vector<std::vector<int>> rows;

    static BarTable of(std::span<const int> parts);
    static BarTable of(const BarPartition& p) { return of(p.span()); }

    std::vector<int> first_row() const { return rows.empty() ? std::vector<int>{} : rows.front(); }
    int b1() const { return rows.empty() ? 0 : rows.front().front(); }
};

// First-column hook lengths straight from the parts: h_i = lambda_i + l - i.
std::vector<int> first_column_hooks(std::span<const int> parts);

/// Streams the partitions of n in descending lexicographic order.
/// current() views internal storage and is valid until the next call.
class PartitionEnumerator {
public:
    explicit PartitionEnumerator(int n);
    bool next();
    std::span<const int> current() const { return buf_; }

private:
    std::vector<int> buf_;
    int n_;
    bool started_ = false;
    bool done_ = false;
};

/// Streams the strict partitions of n in descending lexicographic order.
class BarPartitionEnumerator {
public:
    explicit BarPartitionEnumerator(int n);
    bool next();
    std::span<const int> current() const { return buf_; }

private:
    std::vector<int> buf_;
    int n_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<Partition> enumerate_partitions(int n);
std::vector<BarPartition> enumerate_bar_partitions(int n);
long long count_partitions(int n);
long long count_bar_partitions(int n);

} // namespace spindeg
