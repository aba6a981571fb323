#include "cref/partition.hpp"

#include <algorithm>

namespace cref {

Colouring Colouring::unit(int n) {
    Colouring c;
    c.colour.assign(n, 1);
    c.classes = n > 0 ? 1 : 0;
    return c;
}

bool Colouring::is_surjective() const {
    if (classes <= 0 || colour.empty())
        return false;
    std::vector<char> used(classes + 1, 0);
    for (int c : colour) {
        if (c < 1 || c > classes)
            return false;
        used[c] = 1;
    }
    for (int c = 1; c <= classes; ++c)
        if (!used[c])
            return false;
    return true;
}

Partition Partition::from_cells(int n, std::vector<std::vector<int>> cells) {
    if (n <= 0)
        throw contract_error("partition ground set must be nonempty");
    Partition p;
    p.cells_ = std::move(cells);
    p.cell_of_.assign(n, -1);
    for (std::size_t i = 0; i < p.cells_.size(); ++i) {
        if (p.cells_[i].empty())
            throw contract_error("partition cell is empty");
        for (int v : p.cells_[i]) {
            if (v < 0 || v >= n)
                throw contract_error("partition member out of range");
            if (p.cell_of_[v] != -1)
                throw contract_error("partition cells are not disjoint");
            p.cell_of_[v] = static_cast<int>(i);
        }
    }
    for (int v = 0; v < n; ++v)
        if (p.cell_of_[v] == -1)
            throw contract_error("partition does not cover the ground set");
    return p;
}

Partition Partition::unit(int n) {
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v)
        all[v] = v;
    return from_cells(n, {all});
}

Partition Partition::discrete(int n) {
    std::vector<std::vector<int>> cells(n);
    for (int v = 0; v < n; ++v)
        cells[v] = {v};
    return from_cells(n, std::move(cells));
}

bool operator==(const Partition& a, const Partition& b) {
    if (a.ground_size() != b.ground_size() || a.order() != b.order())
        return false;
    // Cells match as sets iff every a-cell maps into a single b-cell of the
    // same size; orders being equal makes the map a bijection.
    for (const auto& cell : a.cells_) {
        int target = b.cell_of_[cell[0]];
        if (b.cells_[target].size() != cell.size())
            return false;
        for (int v : cell)
            if (b.cell_of_[v] != target)
                return false;
    }
    return true;
}

bool refines(const Partition& fine, const Partition& coarse) {
    if (fine.ground_size() != coarse.ground_size())
        throw contract_error("refines: ground-set mismatch");
    for (const auto& cell : fine.cells()) {
        int target = coarse.cell_of(cell[0]);
        for (int v : cell)
            if (coarse.cell_of(v) != target)
                return false;
    }
    return true;
}

Partition partition_of(const Colouring& c) {
    if (!c.is_surjective())
        throw contract_error("partition_of: colouring is not surjective");
    std::vector<std::vector<int>> cells(c.classes);
    for (int v = 0; v < c.size(); ++v)
        cells[c.colour[v] - 1].push_back(v);
    return Partition::from_cells(c.size(), std::move(cells));
}

Colouring colouring_of(const Partition& p) {
    std::vector<std::pair<int, int>> by_min; // (min vertex, cell index)
    by_min.reserve(p.order());
    for (int i = 0; i < p.order(); ++i)
        by_min.emplace_back(*std::min_element(p.cell(i).begin(), p.cell(i).end()), i);
    std::sort(by_min.begin(), by_min.end());
    Colouring c;
    c.colour.assign(p.ground_size(), 0);
    c.classes = p.order();
    for (int rank = 0; rank < p.order(); ++rank)
        for (int v : p.cell(by_min[rank].second))
            c.colour[v] = rank + 1;
    return c;
}

std::vector<std::vector<int>> normalised_cells(std::vector<std::vector<int>> cells) {
    for (auto& cell : cells)
        std::sort(cell.begin(), cell.end());
    std::sort(cells.begin(), cells.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return cells;
}

std::vector<std::vector<int>> induced_cells(const Partition& p, std::span<const int> subset) {
    std::vector<std::pair<int, int>> keyed; // (cell, vertex)
    keyed.reserve(subset.size());
    for (int v : subset)
        keyed.emplace_back(p.cell_of(v), v);
    std::sort(keyed.begin(), keyed.end());
    std::vector<std::vector<int>> cells;
    for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i == 0 || keyed[i].first != keyed[i - 1].first)
            cells.emplace_back();
        cells.back().push_back(keyed[i].second);
    }
    return normalised_cells(std::move(cells));
}

} // namespace cref
