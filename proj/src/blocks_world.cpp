#include "hslab/blocks_world.hpp"

#include <stdexcept>

namespace hslab {

BlocksState::BlocksState(std::vector<uint8_t> below)
    : below_(std::move(below)) {
    int n = int(below_.size());
    if (n < 1)
        throw std::invalid_argument("blocks state needs at least 1 block");
    std::vector<bool> supports(n + 1, false);
    for (int block = 1; block <= n; ++block) {
        uint8_t support = below_[block - 1];
        if (support > n)
            throw std::invalid_argument("blocks support id out of range");
        if (support == block)
            throw std::invalid_argument("block cannot rest on itself");
        if (support != TABLE) {
            if (supports[support])
                throw std::invalid_argument("two blocks share one support");
            supports[support] = true;
        }
    }
    // Follow each chain down; a cycle would never reach the table.
    for (int block = 1; block <= n; ++block) {
        int steps = 0;
        uint8_t at = uint8_t(block);
        while (at != TABLE) {
            at = below_[at - 1];
            if (++steps > n)
                throw std::invalid_argument("blocks support relation has a cycle");
        }
    }
}

bool BlocksState::is_clear(int block) const {
    for (uint8_t support : below_)
        if (support == block)
            return false;
    return true;
}

BlocksDomain::BlocksDomain(int n) : n_(n) {
    if (n < 1)
        throw std::invalid_argument("blocks world needs n >= 1");
    if (n > 250)
        throw std::invalid_argument("blocks world limited to n <= 250");
}

DomainSpec BlocksDomain::spec() const {
    return {DomainKind::BLOCKS_WORLD, "bw", n_, 1.0, 1.0, n_ * (n_ + 1)};
}

BlocksDomain::State BlocksDomain::goal_state() const {
    std::vector<uint8_t> below(n_);
    below[0] = BlocksState::TABLE;
    for (int block = 2; block <= n_; ++block)
        below[block - 1] = uint8_t(block - 1);
    return State(std::move(below));
}

bool BlocksDomain::is_goal(const State &state) const {
    if (state.below(1) != BlocksState::TABLE)
        return false;
    for (int block = 2; block <= n_; ++block)
        if (state.below(block) != block - 1)
            return false;
    return true;
}

std::vector<std::pair<BlocksDomain::State, int64_t>>
BlocksDomain::successors(const State &state) const {
    std::vector<int> clear;
    for (int block = 1; block <= n_; ++block)
        if (state.is_clear(block))
            clear.push_back(block);

    std::vector<std::pair<State, int64_t>> result;
    for (int moved : clear) {
        for (int target : clear) {
            if (target == moved)
                continue;
            std::vector<uint8_t> below = state.below_map();
            below[moved - 1] = uint8_t(target);
            result.emplace_back(State(std::move(below)), 1);
        }
        if (state.below(moved) != BlocksState::TABLE) {
            std::vector<uint8_t> below = state.below_map();
            below[moved - 1] = BlocksState::TABLE;
            result.emplace_back(State(std::move(below)), 1);
        }
    }
    return result;
}

FeatureVector BlocksDomain::encode(const State &state) const {
    FeatureVector features(size_t(n_) * (n_ + 1), 0.0f);
    for (int block = 1; block <= n_; ++block)
        features[size_t(block - 1) * (n_ + 1) + state.below(block)] = 1.0f;
    return features;
}

}
