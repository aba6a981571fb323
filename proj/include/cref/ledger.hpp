#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cref {

struct IterationRecord {
    std::int64_t iteration = 0;      // 1-based
    int refining_colour = 0;         // r
    std::int64_t class_size = 0;     // |R|
    std::int64_t in_degree_sum = 0;  // D^-(R)
    int new_colours = 0;             // colours introduced this iteration
    int split_sort_size = 0;         // length of the sorted split list
};

// Refinement cost accounting: one record per refining iteration plus
// per-vertex tracking of the refining classes each vertex appeared in.
class CostLedger {
public:
    void begin(int n);
    void note_member(int v, std::int64_t class_size);
    void record_iteration(int refining_colour, std::int64_t class_size,
                          std::int64_t in_degree_sum, int new_colours, int split_sort_size);

    const std::vector<IterationRecord>& records() const { return records_; }
    std::int64_t total_class_size() const { return total_size_; }
    std::int64_t total_in_degree() const { return total_indeg_; }
    std::int64_t total_new_colours() const { return total_new_; }

    // Sum of (|R| + D^-(R)) over all iterations.
    std::int64_t cost_units() const { return total_size_ + total_indeg_; }

    int appearances(int v) const { return appearance_count_[v]; }
    const std::vector<std::int64_t>& class_sizes_seen(int v) const { return sizes_seen_[v]; }

    // Number of per-vertex adjacent pairs violating |R_i| >= 2 |R_{i+1}|.
    std::int64_t halving_violations() const;

    // CSV with columns iteration,r,size_R,D_minus_R,new_colours and a
    // trailing summary row with the totals.
    std::string to_csv() const;

private:
    std::vector<IterationRecord> records_;
    std::int64_t total_size_ = 0;
    std::int64_t total_indeg_ = 0;
    std::int64_t total_new_ = 0;
    std::vector<int> appearance_count_;
    std::vector<std::vector<std::int64_t>> sizes_seen_;
};

} // namespace cref
