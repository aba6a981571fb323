#include "cref/ledger.hpp"

namespace cref {

void CostLedger::begin(int n) {
    records_.clear();
    total_size_ = total_indeg_ = total_new_ = 0;
    appearance_count_.assign(n, 0);
    sizes_seen_.assign(n, {});
}

void CostLedger::note_member(int v, std::int64_t class_size) {
    ++appearance_count_[v];
    sizes_seen_[v].push_back(class_size);
}

void CostLedger::record_iteration(int refining_colour, std::int64_t class_size,
                                  std::int64_t in_degree_sum, int new_colours,
                                  int split_sort_size) {
    records_.push_back({static_cast<std::int64_t>(records_.size()) + 1, refining_colour,
                        class_size, in_degree_sum, new_colours, split_sort_size});
    total_size_ += class_size;
    total_indeg_ += in_degree_sum;
    total_new_ += new_colours;
}

std::int64_t CostLedger::halving_violations() const {
    std::int64_t bad = 0;
    for (const auto& sizes : sizes_seen_)
        for (std::size_t i = 0; i + 1 < sizes.size(); ++i)
            if (sizes[i] < 2 * sizes[i + 1])
                ++bad;
    return bad;
}

std::string CostLedger::to_csv() const {
    std::string out = "iteration,r,size_R,D_minus_R,new_colours\n";
    for (const auto& rec : records_) {
        out += std::to_string(rec.iteration) + "," + std::to_string(rec.refining_colour) + "," +
               std::to_string(rec.class_size) + "," + std::to_string(rec.in_degree_sum) + "," +
               std::to_string(rec.new_colours) + "\n";
    }
    out += "total,," + std::to_string(total_size_) + "," + std::to_string(total_indeg_) + "," +
           std::to_string(total_new_) + "\n";
    return out;
}

} // namespace cref
