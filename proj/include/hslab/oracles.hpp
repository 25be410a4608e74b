#ifndef HSLAB_ORACLES_HPP
#define HSLAB_ORACLES_HPP

#include <cstdint>
#include <vector>

#include "hslab/blocks_world.hpp"
#include "hslab/pancake.hpp"
#include "hslab/search.hpp"
#include "hslab/tsp.hpp"

namespace hslab {

/*
  Number of adjacent stack positions whose pancake ids differ by more
  than one, with the plate treated as a fixed pancake n+1 beneath the
  stack. Admissible and consistent.
*/
int gap_heuristic(const PancakeState &state);

// Blocks whose support differs from the ordered-stack goal's support.
int misplaced_blocks_heuristic(const BlocksState &state);

/*
  Exact optimal tour cost by the subset dynamic program, in tenths.
  The O(n^2 2^n) table is refused above the size cap.
*/
int64_t held_karp_tenths(const TspInstance &instance, int size_cap = 20);
double held_karp(const TspInstance &instance, int size_cap = 20);

// Independent reference: minimum over all (n-1)! permutations.
int64_t brute_force_tour_tenths(const TspInstance &instance);

/*
  Exact cost-to-go for arbitrary TSP states of one instance, memoized
  over (visited set, current city). Runs the subset recursion backward
  from the completed tour, so it complements the forward Held-Karp
  table.
*/
class TspCostToGo {
public:
    explicit TspCostToGo(const TspDomain &domain, int size_cap = 20);

    int64_t cost_units(const TspState &state);
    int64_t operator()(const TspState &state) { return cost_units(state); }

private:
    const TspDomain &domain_;
    std::vector<int32_t> memo_;  // (mask, city) -> cost in tenths, -1 unset

    int32_t solve(uint32_t visited, int current);
};

// True minimal cost-to-goal in cost units (1 step or 0.1 per arc).
int64_t hstar_units(const PancakeDomain &domain, const PancakeState &state);
int64_t hstar_units(const TspDomain &domain, const TspState &state);
int64_t hstar_units(const BlocksDomain &domain, const BlocksState &state);

inline double hstar(const PancakeDomain &domain, const PancakeState &state) {
    return double(hstar_units(domain, state));
}
inline double hstar(const TspDomain &domain, const TspState &state) {
    return hstar_units(domain, state) / 10.0;
}
inline double hstar(const BlocksDomain &domain, const BlocksState &state) {
    return double(hstar_units(domain, state));
}

/*
  Cost-bound decision via a single heuristic call: with an approximator
  whose error is everywhere below eps/2, "is there a solution of cost
  at most k" reduces to hhat(s) < k + eps/2.
*/
template <typename Heuristic, typename State>
bool decide_via_heuristic(Heuristic &&hhat, const State &state, double k,
                          double eps) {
    return hhat(state) < k + eps / 2.0;
}

}

#endif
