#ifndef HSLAB_PANCAKE_HPP
#define HSLAB_PANCAKE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "hslab/domain.hpp"

namespace hslab {

/*
  A stack of n pancakes, index 0 being the topmost. The stack is a
  permutation of {1..n}; the goal is the sorted stack [1, 2, ..., n].
*/
class PancakeState {
public:
    explicit PancakeState(std::vector<uint8_t> stack);

    int size() const { return int(stack_.size()); }
    uint8_t at(int position) const { return stack_[position]; }
    const std::vector<uint8_t> &stack() const { return stack_; }

    // Reverses the top `prefix_len` pancakes (2 <= prefix_len <= n).
    PancakeState flip(int prefix_len) const;

    bool operator==(const PancakeState &other) const {
        return stack_ == other.stack_;
    }

private:
    std::vector<uint8_t> stack_;
};

class PancakeDomain {
public:
    using State = PancakeState;

    explicit PancakeDomain(int n);

    int size() const { return n_; }
    DomainSpec spec() const;

    State goal_state() const;
    bool is_goal(const State &state) const;

    // All n-1 prefix flips of length 2..n, each with unit cost.
    std::vector<std::pair<State, int64_t>> successors(const State &state) const;

    // One-hot of the pancake id at every stack position; length n^2.
    FeatureVector encode(const State &state) const;

private:
    int n_;
};

}

template <>
struct std::hash<hslab::PancakeState> {
    size_t operator()(const hslab::PancakeState &state) const {
        size_t seed = 0x5ca1ab1e;
        for (uint8_t value : state.stack())
            hslab::hash_combine(seed, value);
        return seed;
    }
};

#endif
