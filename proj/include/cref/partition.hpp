#pragma once

#include <span>
#include <vector>

#include "cref/errors.hpp"

namespace cref {

// Vertex colouring, surjective onto {1,...,k} by convention.
struct Colouring {
    std::vector<int> colour; // per vertex, values in 1..classes
    int classes = 0;

    static Colouring unit(int n);

    int size() const { return static_cast<int>(colour.size()); }
    bool is_surjective() const;
};

// Partition of {0,...,n-1} into disjoint nonempty cells.
class Partition {
public:
    Partition() = default;

    // Validates that the cells are disjoint, nonempty and cover 0..n-1.
    static Partition from_cells(int n, std::vector<std::vector<int>> cells);
    static Partition unit(int n);
    static Partition discrete(int n);

    int ground_size() const { return static_cast<int>(cell_of_.size()); }
    int order() const { return static_cast<int>(cells_.size()); }
    const std::vector<std::vector<int>>& cells() const { return cells_; }
    const std::vector<int>& cell(int i) const { return cells_[i]; }
    int cell_of(int v) const { return cell_of_[v]; }

    bool is_discrete() const { return order() == ground_size(); }
    bool is_unit() const { return order() == 1; }

    // Equality as a set of cells (cell order and in-cell order irrelevant).
    friend bool operator==(const Partition& a, const Partition& b);

private:
    std::vector<std::vector<int>> cells_;
    std::vector<int> cell_of_;
};

// True iff every cell of `coarse` is a union of cells of `fine`,
// i.e. `fine` refines `coarse`. Throws on ground-set mismatch.
bool refines(const Partition& fine, const Partition& coarse);

Partition partition_of(const Colouring& c);

// Numbers cells by smallest contained vertex, ascending. Display/diffing
// convention only; never used inside the canonical engine.
Colouring colouring_of(const Partition& p);

// Cells of p restricted to `subset`, normalised (members sorted, cells
// ordered by first member) for comparisons.
std::vector<std::vector<int>> induced_cells(const Partition& p, std::span<const int> subset);

// Normalises a list of cells the same way as induced_cells.
std::vector<std::vector<int>> normalised_cells(std::vector<std::vector<int>> cells);

} // namespace cref
