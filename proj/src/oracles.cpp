#include "hslab/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace hslab {

int gap_heuristic(const PancakeState &state) {
    int n = state.size();
    int gaps = 0;
    for (int i = 0; i + 1 < n; ++i)
        if (std::abs(int(state.at(i)) - int(state.at(i + 1))) > 1)
            ++gaps;
    if (std::abs(int(state.at(n - 1)) - (n + 1)) > 1)
        ++gaps;  // plate adjacency
    return gaps;
}

int misplaced_blocks_heuristic(const BlocksState &state) {
    int n = state.size();
    int misplaced = 0;
    if (state.below(1) != BlocksState::TABLE)
        ++misplaced;
    for (int block = 2; block <= n; ++block)
        if (state.below(block) != block - 1)
            ++misplaced;
    return misplaced;
}

int64_t held_karp_tenths(const TspInstance &instance, int size_cap) {
    int n = instance.n();
    if (n > size_cap)
        throw Error(ErrorCode::SIZE_LIMIT,
                    "held_karp: n exceeds the size cap");
    int start = instance.start();
    const int32_t unset = -1;
    size_t masks = size_t(1) << n;
    // cost[mask][j]: cheapest path from start visiting exactly `mask`,
    // ending at j (start and j in mask).
    std::vector<int32_t> cost(masks * n, unset);
    cost[(size_t(1) << start) * n + start] = 0;
    for (uint32_t mask = 1; mask < masks; ++mask) {
        if (!(mask & (uint32_t(1) << start)))
            continue;
        for (int last = 0; last < n; ++last) {
            int32_t here = cost[size_t(mask) * n + last];
            if (here == unset)
                continue;
            for (int next = 0; next < n; ++next) {
                if (mask & (uint32_t(1) << next))
                    continue;
                uint32_t extended = mask | (uint32_t(1) << next);
                int32_t via = here + instance.weight_tenths(last, next);
                int32_t &slot = cost[size_t(extended) * n + next];
                if (slot == unset || via < slot)
                    slot = via;
            }
        }
    }
    uint32_t full = (uint32_t(1) << n) - 1;
    int32_t best = unset;
    for (int last = 0; last < n; ++last) {
        if (last == start)
            continue;  // the tour re-enters the start only via the return arc
        int32_t here = cost[size_t(full) * n + last];
        if (here == unset)
            continue;
        int32_t tour = here + instance.weight_tenths(last, start);
        if (best == unset || tour < best)
            best = tour;
    }
    return best;
}

double held_karp(const TspInstance &instance, int size_cap) {
    return held_karp_tenths(instance, size_cap) / 10.0;
}

int64_t brute_force_tour_tenths(const TspInstance &instance) {
    int n = instance.n();
    int start = instance.start();
    std::vector<int> rest;
    for (int city = 0; city < n; ++city)
        if (city != start)
            rest.push_back(city);
    std::sort(rest.begin(), rest.end());
    int64_t best = -1;
    do {
        int64_t total = 0;
        int at = start;
        for (int city : rest) {
            total += instance.weight_tenths(at, city);
            at = city;
        }
        total += instance.weight_tenths(at, start);
        if (best < 0 || total < best)
            best = total;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return best;
}

TspCostToGo::TspCostToGo(const TspDomain &domain, int size_cap)
    : domain_(domain) {
    int n = domain.size();
    if (n > size_cap)
        throw Error(ErrorCode::SIZE_LIMIT,
                    "TspCostToGo: n exceeds the size cap");
    memo_.assign((size_t(1) << n) * n, -1);
}

int32_t TspCostToGo::solve(uint32_t visited, int current) {
    const TspInstance &inst = domain_.instance();
    int n = inst.n();
    int32_t &slot = memo_[size_t(visited) * n + current];
    if (slot >= 0)
        return slot;
    if (visited == domain_.full_mask()) {
        slot = current == inst.start()
                   ? 0
                   : inst.weight_tenths(current, inst.start());
        return slot;
    }
    int32_t best = -1;
    for (int city = 0; city < n; ++city) {
        if (visited & (uint32_t(1) << city))
            continue;
        int32_t via = inst.weight_tenths(current, city) +
                      solve(visited | (uint32_t(1) << city), city);
        if (best < 0 || via < best)
            best = via;
    }
    slot = best;
    return slot;
}

int64_t TspCostToGo::cost_units(const TspState &state) {
    return solve(state.visited, state.current);
}

int64_t hstar_units(const PancakeDomain &domain, const PancakeState &state) {
    auto result = astar(domain, state,
                        [](const PancakeState &s) { return gap_heuristic(s); });
    return result.cost_units;
}

int64_t hstar_units(const TspDomain &domain, const TspState &state) {
    if (state == domain.initial_state())
        return held_karp_tenths(domain.instance());
    TspCostToGo to_go(domain);
    return to_go.cost_units(state);
}

int64_t hstar_units(const BlocksDomain &domain, const BlocksState &state) {
    auto result = astar(domain, state, [](const BlocksState &s) {
        return misplaced_blocks_heuristic(s);
    });
    return result.cost_units;
}

}
