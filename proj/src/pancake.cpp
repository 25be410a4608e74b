#include "hslab/pancake.hpp"

#include <algorithm>
#include <stdexcept>

namespace hslab {

PancakeState::PancakeState(std::vector<uint8_t> stack)
    : stack_(std::move(stack)) {
    int n = int(stack_.size());
    if (n < 2)
        throw std::invalid_argument("pancake stack needs at least 2 pancakes");
    std::vector<bool> seen(n + 1, false);
    for (uint8_t value : stack_) {
        if (value < 1 || value > n || seen[value])
            throw std::invalid_argument("pancake stack is not a permutation of 1..n");
        seen[value] = true;
    }
}

PancakeState PancakeState::flip(int prefix_len) const {
    if (prefix_len < 2 || prefix_len > size())
        throw std::invalid_argument("flip prefix length out of range");
    std::vector<uint8_t> flipped = stack_;
    std::reverse(flipped.begin(), flipped.begin() + prefix_len);
    return PancakeState(std::move(flipped));
}

PancakeDomain::PancakeDomain(int n) : n_(n) {
    if (n < 2)
        throw std::invalid_argument("pancake domain needs n >= 2");
}

DomainSpec PancakeDomain::spec() const {
    return {DomainKind::PANCAKE, "pancake", n_, 1.0, 1.0, n_ * n_};
}

PancakeDomain::State PancakeDomain::goal_state() const {
    std::vector<uint8_t> sorted(n_);
    for (int i = 0; i < n_; ++i)
        sorted[i] = uint8_t(i + 1);
    return State(std::move(sorted));
}

bool PancakeDomain::is_goal(const State &state) const {
    for (int i = 0; i < n_; ++i)
        if (state.at(i) != i + 1)
            return false;
    return true;
}

std::vector<std::pair<PancakeDomain::State, int64_t>>
PancakeDomain::successors(const State &state) const {
    std::vector<std::pair<State, int64_t>> result;
    result.reserve(n_ - 1);
    for (int len = 2; len <= n_; ++len)
        result.emplace_back(state.flip(len), 1);
    return result;
}

FeatureVector PancakeDomain::encode(const State &state) const {
    FeatureVector features(size_t(n_) * n_, 0.0f);
    for (int position = 0; position < n_; ++position)
        features[size_t(position) * n_ + (state.at(position) - 1)] = 1.0f;
    return features;
}

}
