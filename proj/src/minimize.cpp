#include "nerode/minimize.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace nerode {

namespace {

// Moore refinement: returns block_of over all states. Block numbering is
// deterministic (first-seen signature order by state id) but arbitrary; the
// canonical numbering happens in minimize().
std::vector<int> refine(const Dfa& d) {
    const int k = d.alphabet().size();
    std::vector<int> block_of(static_cast<size_t>(d.state_count()));
    for (int s = 0; s < d.state_count(); ++s)
        block_of[static_cast<size_t>(s)] = d.is_final(s) ? 1 : 0;

    while (true) {
        std::map<std::vector<int>, int> signature_ids;
        std::vector<int> next(static_cast<size_t>(d.state_count()));
        for (int s = 0; s < d.state_count(); ++s) {
            std::vector<int> signature;
            signature.reserve(static_cast<size_t>(k) + 1);
            signature.push_back(block_of[static_cast<size_t>(s)]);
            for (int i = 0; i < k; ++i)
                signature.push_back(block_of[static_cast<size_t>(d.next_by_index(s, i))]);
            auto [it, inserted] =
                signature_ids.emplace(std::move(signature), static_cast<int>(signature_ids.size()));
            next[static_cast<size_t>(s)] = it->second;
        }
        // Each round refines the previous partition, so the block count is
        // non-decreasing; an unchanged count means a fixpoint.
        int old_count = 0;
        for (int b : block_of)
            old_count = std::max(old_count, b + 1);
        if (static_cast<int>(signature_ids.size()) == old_count)
            break;
        block_of = std::move(next);
    }
    return block_of;
}

// Restriction of d to its reachable states, renumbered in discovery order.
Dfa trim(const Dfa& d) {
    const int k = d.alphabet().size();
    std::vector<int> new_id(static_cast<size_t>(d.state_count()), -1);
    std::vector<int> order;
    std::deque<int> queue;
    new_id[static_cast<size_t>(d.initial())] = 0;
    order.push_back(d.initial());
    queue.push_back(d.initial());
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (int i = 0; i < k; ++i) {
            int t = d.next_by_index(s, i);
            if (new_id[static_cast<size_t>(t)] < 0) {
                new_id[static_cast<size_t>(t)] = static_cast<int>(order.size());
                order.push_back(t);
                queue.push_back(t);
            }
        }
    }
    std::vector<int> delta;
    std::vector<int> finals;
    for (size_t idx = 0; idx < order.size(); ++idx) {
        int s = order[idx];
        for (int i = 0; i < k; ++i)
            delta.push_back(new_id[static_cast<size_t>(d.next_by_index(s, i))]);
        if (d.is_final(s))
            finals.push_back(static_cast<int>(idx));
    }
    return Dfa(d.alphabet(), static_cast<int>(order.size()), 0, finals, std::move(delta));
}

} // namespace

Partition indistinguishability_partition(const Dfa& d) {
    Partition p;
    p.block_of = refine(d);
    int count = 0;
    for (int b : p.block_of)
        count = std::max(count, b + 1);
    p.blocks.assign(static_cast<size_t>(count), {});
    for (int s = 0; s < d.state_count(); ++s)
        p.blocks[static_cast<size_t>(p.block_of[static_cast<size_t>(s)])].push_back(s);
    return p;
}

Dfa minimize(const Dfa& d) {
    Dfa reachable = trim(d);
    std::vector<int> block_of = refine(reachable);
    const int k = reachable.alphabet().size();

    // Quotient transition on block representatives; any member works since
    // blocks are closed under the refinement signature.
    int block_count = 0;
    for (int b : block_of)
        block_count = std::max(block_count, b + 1);
    std::vector<int> representative(static_cast<size_t>(block_count), -1);
    for (int s = 0; s < reachable.state_count(); ++s) {
        int b = block_of[static_cast<size_t>(s)];
        if (representative[static_cast<size_t>(b)] < 0)
            representative[static_cast<size_t>(b)] = s;
    }

    // Canonical renumbering of blocks: breadth-first from the initial block
    // with alphabet-ordered edges. Every block is reachable because every
    // state of `reachable` is.
    std::vector<int> canonical(static_cast<size_t>(block_count), -1);
    std::vector<int> order;
    int start_block = block_of[static_cast<size_t>(reachable.initial())];
    canonical[static_cast<size_t>(start_block)] = 0;
    order.push_back(start_block);
    std::deque<int> queue{start_block};
    while (!queue.empty()) {
        int b = queue.front();
        queue.pop_front();
        int rep = representative[static_cast<size_t>(b)];
        for (int i = 0; i < k; ++i) {
            int succ = block_of[static_cast<size_t>(reachable.next_by_index(rep, i))];
            if (canonical[static_cast<size_t>(succ)] < 0) {
                canonical[static_cast<size_t>(succ)] = static_cast<int>(order.size());
                order.push_back(succ);
                queue.push_back(succ);
            }
        }
    }

    std::vector<int> delta;
    std::vector<int> finals;
    for (size_t idx = 0; idx < order.size(); ++idx) {
        int rep = representative[static_cast<size_t>(order[idx])];
        for (int i = 0; i < k; ++i) {
            int succ = block_of[static_cast<size_t>(reachable.next_by_index(rep, i))];
            delta.push_back(canonical[static_cast<size_t>(succ)]);
        }
        if (reachable.is_final(rep))
            finals.push_back(static_cast<int>(idx));
    }
    return Dfa(reachable.alphabet(), static_cast<int>(order.size()), 0, finals, std::move(delta));
}

int mn_index(const Dfa& d) { return minimize(d).state_count(); }

// ---------------------------------------------------------------------------
// Distinguishers: breadth-first search over ordered state pairs, expanding in
// alphabet order, so the first separating pair found yields the shortest
// extension and the lexicographically least among those.

std::optional<Word> state_distinguisher(const Dfa& d, int s, int t) {
    if (s < 0 || s >= d.state_count() || t < 0 || t >= d.state_count())
        throw std::invalid_argument("state id out of range");
    if (d.is_final(s) != d.is_final(t))
        return Word{};
    if (s == t)
        return std::nullopt;

    const int n = d.state_count();
    const int k = d.alphabet().size();
    auto key = [n](int a, int b) { return static_cast<size_t>(a) * n + static_cast<size_t>(b); };

    // parent[pair] = (previous pair, symbol index); -2 marks the root.
    std::vector<std::pair<int, int>> parent(static_cast<size_t>(n) * n, {-1, -1});
    parent[key(s, t)] = {-2, -1};
    std::deque<std::pair<int, int>> queue{{s, t}};
    while (!queue.empty()) {
        auto [u, v] = queue.front();
        queue.pop_front();
        for (int i = 0; i < k; ++i) {
            int nu = d.next_by_index(u, i);
            int nv = d.next_by_index(v, i);
            if (parent[key(nu, nv)].first != -1)
                continue;
            parent[key(nu, nv)] = {static_cast<int>(key(u, v)), i};
            if (d.is_final(nu) != d.is_final(nv)) {
                Word z;
                size_t cursor = key(nu, nv);
                while (parent[cursor].first != -2) {
                    z.push_back(d.alphabet().symbol(parent[cursor].second));
                    cursor = static_cast<size_t>(parent[cursor].first);
                }
                std::reverse(z.begin(), z.end());
                return z;
            }
            queue.emplace_back(nu, nv);
        }
    }
    return std::nullopt;
}

std::optional<Word> distinguishing_extension(const Dfa& d, const Word& x, const Word& y) {
    return state_distinguisher(d, d.run_from(d.initial(), x), d.run_from(d.initial(), y));
}

} // namespace nerode
