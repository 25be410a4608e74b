#ifndef HSLAB_TSP_HPP
#define HSLAB_TSP_HPP

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "hslab/domain.hpp"

namespace hslab {

/*
  A complete weighted directed graph with a designated start city.
  Edge weights are multiples of 0.1 in [0.1, 5.0] and are stored as
  integer tenths so that every cost comparison is exact; reals appear
  only at the API boundary. The diagonal is unused and stored as 0.
*/
class TspInstance {
public:
    TspInstance(int n, int start, std::vector<int32_t> weights_tenths);

    int n() const { return n_; }
    int start() const { return start_; }
    int32_t weight_tenths(int from, int to) const {
        return weights_tenths_[size_t(from) * n_ + to];
    }
    double weight(int from, int to) const {
        return weight_tenths(from, to) / 10.0;
    }
    const std::vector<int32_t> &weights_tenths() const { return weights_tenths_; }

    static constexpr int32_t min_weight_tenths = 1;   // 0.1
    static constexpr int32_t max_weight_tenths = 50;  // 5.0

private:
    int n_;
    int start_;
    std::vector<int32_t> weights_tenths_;
};

/*
  Visited set (bitmask) plus the current city. The owning TspDomain
  carries the instance reference; the start city is always visited and
  the current city is always a member of the visited set.
*/
struct TspState {
    uint32_t visited = 0;
    uint8_t current = 0;

    bool operator==(const TspState &other) const {
        return visited == other.visited && current == other.current;
    }
};

class TspDomain {
public:
    using State = TspState;

    explicit TspDomain(TspInstance instance);

    const TspInstance &instance() const { return *instance_; }
    int size() const { return instance_->n(); }
    DomainSpec spec() const;

    State initial_state() const;
    // All cities visited and back at the start city.
    bool is_goal(const State &state) const;

    // One successor per unvisited city; once every city is visited the
    // single successor is the forced return-to-start arc. Costs are in
    // tenths.
    std::vector<std::pair<State, int64_t>> successors(const State &state) const;

    // Row-major weight matrix (diagonal 0), visited indicator, start
    // one-hot; length n^2 + 2n.
    FeatureVector encode(const State &state) const;

    uint32_t full_mask() const { return (uint32_t(1) << size()) - 1; }

private:
    std::shared_ptr<const TspInstance> instance_;
};

}

template <>
struct std::hash<hslab::TspState> {
    size_t operator()(const hslab::TspState &state) const {
        size_t seed = 0x7a57e11e;
        hslab::hash_combine(seed, state.visited);
        hslab::hash_combine(seed, state.current);
        return seed;
    }
};

#endif
