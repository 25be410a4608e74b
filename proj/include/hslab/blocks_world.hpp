#ifndef HSLAB_BLOCKS_WORLD_HPP
#define HSLAB_BLOCKS_WORLD_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "hslab/domain.hpp"

namespace hslab {

/*
  Blocks {1..n} arranged into towers. below(b) is the block directly
  under b, or TABLE. The relation must form a forest of towers: no two
  blocks share a support and there are no cycles.
*/
class BlocksState {
public:
    static constexpr uint8_t TABLE = 0;

    explicit BlocksState(std::vector<uint8_t> below);

    int size() const { return int(below_.size()); }
    uint8_t below(int block) const { return below_[block - 1]; }
    const std::vector<uint8_t> &below_map() const { return below_; }

    // A block is clear when nothing rests on top of it.
    bool is_clear(int block) const;

    bool operator==(const BlocksState &other) const {
        return below_ == other.below_;
    }

private:
    std::vector<uint8_t> below_;
};

class BlocksDomain {
public:
    using State = BlocksState;

    explicit BlocksDomain(int n);

    int size() const { return n_; }
    DomainSpec spec() const;

    // The ordered stack: block 1 on the table, block k on block k-1.
    State goal_state() const;
    bool is_goal(const State &state) const;

    // Move any clear block onto any other clear block, or to the table
    // if it is not already there; each move has unit cost.
    std::vector<std::pair<State, int64_t>> successors(const State &state) const;

    // Per block, a one-hot over {TABLE, 1..n} marking its support; the
    // self-support position is always 0. Length n*(n+1).
    FeatureVector encode(const State &state) const;

private:
    int n_;
};

}

template <>
struct std::hash<hslab::BlocksState> {
    size_t operator()(const hslab::BlocksState &state) const {
        size_t seed = 0xb10c5;
        for (uint8_t value : state.below_map())
            hslab::hash_combine(seed, value);
        return seed;
    }
};

#endif
