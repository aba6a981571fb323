#include "cref/bisim.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace cref {

namespace {

Partition label_partition(const TransitionSystem& ts) {
    Colouring c;
    c.colour = ts.labels();
    c.classes = ts.label_count();
    return partition_of(c);
}

} // namespace

Partition bisimilarity_naive(const TransitionSystem& ts) {
    const int n = ts.vertex_count();
    Partition p = label_partition(ts);
    for (;;) {
        // signature of v: the set of current cells hit by its successors
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> hit;
            for (int u : ts.successors(v))
                hit.push_back(p.cell_of(u));
            std::sort(hit.begin(), hit.end());
            hit.erase(std::unique(hit.begin(), hit.end()), hit.end());
            sig[v] = std::move(hit);
        }
        std::vector<int> order(n);
        for (int v = 0; v < n; ++v)
            order[v] = v;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (p.cell_of(a) != p.cell_of(b))
                return p.cell_of(a) < p.cell_of(b);
            if (sig[a] != sig[b])
                return sig[a] < sig[b];
            return a < b;
        });
        std::vector<std::vector<int>> cells;
        for (int i = 0; i < n; ++i) {
            const int v = order[i];
            if (i == 0 || p.cell_of(order[i - 1]) != p.cell_of(v) || sig[order[i - 1]] != sig[v])
                cells.emplace_back();
            cells.back().push_back(v);
        }
        Partition next = Partition::from_cells(n, std::move(cells));
        if (next.order() == p.order())
            return p;
        p = std::move(next);
    }
}

Partition bisimilarity_fast(const TransitionSystem& ts) {
    const int n = ts.vertex_count();

    // current classes (Q-blocks) and the coarser splitter partition (X-blocks)
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of(n, -1);
    std::vector<int> xblock_of_block;
    std::vector<std::vector<int>> xblocks; // block ids per X-block
    // edges from v into X-block x: count[x][v]
    std::vector<std::unordered_map<int, std::int64_t>> count;

    // initial classes: label partition refined by "has any successor"
    {
        Partition lp = label_partition(ts);
        for (const auto& cell : lp.cells()) {
            std::vector<int> with, without;
            for (int v : cell)
                (ts.successors(v).empty() ? without : with).push_back(v);
            for (auto* part : {&with, &without}) {
                if (part->empty())
                    continue;
                for (int v : *part)
                    block_of[v] = static_cast<int>(blocks.size());
                blocks.push_back(std::move(*part));
            }
        }
    }
    xblocks.emplace_back();
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        xblocks[0].push_back(static_cast<int>(b));
        xblock_of_block.push_back(0);
    }
    count.emplace_back();
    for (int v = 0; v < n; ++v)
        if (!ts.successors(v).empty())
            count[0][v] = static_cast<std::int64_t>(ts.successors(v).size());

    std::vector<int> work; // X-blocks that may be compound
    std::vector<char> in_work;
    work.push_back(0);
    in_work.assign(1, 1);

    auto push_work = [&](int x) {
        if (x >= static_cast<int>(in_work.size()))
            in_work.resize(x + 1, 0);
        if (!in_work[x]) {
            in_work[x] = 1;
            work.push_back(x);
        }
    };

    while (!work.empty()) {
        const int sx = work.back();
        work.pop_back();
        in_work[sx] = 0;
        if (xblocks[sx].size() < 2)
            continue;

        // splitter: the smaller of the first two blocks of S
        int b_id = xblocks[sx][0];
        if (blocks[xblocks[sx][1]].size() < blocks[b_id].size())
            b_id = xblocks[sx][1];
        auto& s_list = xblocks[sx];
        s_list.erase(std::find(s_list.begin(), s_list.end(), b_id));
        const int bx = static_cast<int>(xblocks.size());
        xblocks.push_back({b_id});
        xblock_of_block[b_id] = bx;

        // count edges into B; remember touched predecessors in first-touch order
        count.emplace_back();
        auto& cnt_b = count[bx];
        auto& cnt_s = count[sx];
        std::vector<int> touched;
        for (int w : blocks[b_id]) {
            for (int u : ts.predecessors(w)) {
                auto [it, fresh] = cnt_b.try_emplace(u, 0);
                if (fresh)
                    touched.push_back(u);
                ++it->second;
            }
        }
        for (int u : touched) {
            auto it = cnt_s.find(u);
            it->second -= cnt_b[u];
            if (it->second == 0)
                cnt_s.erase(it);
        }

        // three-way split of every class meeting pred(B) by
        // (edge into B, edge into S \ B)
        std::vector<int> affected;
        std::vector<char> affected_flag(blocks.size(), 0);
        for (int u : touched) {
            const int d = block_of[u];
            if (!affected_flag[d]) {
                affected_flag[d] = 1;
                affected.push_back(d);
            }
        }
        for (int d : affected) {
            std::vector<int> only_b, both, only_rest;
            for (int v : blocks[d]) {
                const bool into_b = cnt_b.find(v) != cnt_b.end();
                const bool into_rest = cnt_s.find(v) != cnt_s.end();
                if (into_b && into_rest)
                    both.push_back(v);
                else if (into_b)
                    only_b.push_back(v);
                else
                    only_rest.push_back(v);
            }
            std::vector<std::vector<int>*> parts;
            for (auto* part : {&only_b, &both, &only_rest})
                if (!part->empty())
                    parts.push_back(part);
            if (parts.size() < 2)
                continue;
            const int dx = xblock_of_block[d];
            blocks[d] = std::move(*parts[0]);
            for (std::size_t i = 1; i < parts.size(); ++i) {
                const int fresh = static_cast<int>(blocks.size());
                for (int v : *parts[i])
                    block_of[v] = fresh;
                blocks.push_back(std::move(*parts[i]));
                xblock_of_block.push_back(dx);
                xblocks[dx].push_back(fresh);
            }
            push_work(dx);
        }

        if (xblocks[sx].size() >= 2)
            push_work(sx);
        if (xblocks[bx].size() >= 2)
            push_work(bx);
    }

    return Partition::from_cells(n, std::move(blocks));
}

bool is_bisimulation(const TransitionSystem& ts, const Partition& p) {
    const int n = ts.vertex_count();
    if (p.ground_size() != n)
        return false;
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> hit;
        for (int u : ts.successors(v))
            hit.push_back(p.cell_of(u));
        std::sort(hit.begin(), hit.end());
        hit.erase(std::unique(hit.begin(), hit.end()), hit.end());
        sig[v] = std::move(hit);
    }
    for (const auto& cell : p.cells())
        for (std::size_t i = 0; i < cell.size(); ++i) {
            if (ts.label(cell[i]) != ts.label(cell[0]))
                return false;
            if (sig[cell[i]] != sig[cell[0]])
                return false;
        }
    return true;
}

} // namespace cref
