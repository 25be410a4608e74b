#include "hslab/tsp.hpp"

#include <stdexcept>

namespace hslab {

TspInstance::TspInstance(int n, int start, std::vector<int32_t> weights_tenths)
    : n_(n), start_(start), weights_tenths_(std::move(weights_tenths)) {
    if (n < 2 || n > 31)
        throw std::invalid_argument("tsp instance needs 2 <= n <= 31");
    if (start < 0 || start >= n)
        throw std::invalid_argument("tsp start city out of range");
    if (weights_tenths_.size() != size_t(n) * n)
        throw std::invalid_argument("tsp weight matrix has wrong size");
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int32_t w = weights_tenths_[size_t(i) * n + j];
            if (i == j) {
                if (w != 0)
                    throw std::invalid_argument("tsp diagonal weights must be 0");
            } else if (w < min_weight_tenths || w > max_weight_tenths) {
                throw std::invalid_argument("tsp weight outside [0.1, 5.0] grid");
            }
        }
    }
}

TspDomain::TspDomain(TspInstance instance)
    : instance_(std::make_shared<const TspInstance>(std::move(instance))) {}

DomainSpec TspDomain::spec() const {
    int n = size();
    return {DomainKind::TSP, "tsp", n, 0.1, 0.1, n * n + 2 * n};
}

TspDomain::State TspDomain::initial_state() const {
    State state;
    state.current = uint8_t(instance_->start());
    state.visited = uint32_t(1) << state.current;
    return state;
}

bool TspDomain::is_goal(const State &state) const {
    return state.visited == full_mask() && state.current == instance_->start();
}

std::vector<std::pair<TspDomain::State, int64_t>>
TspDomain::successors(const State &state) const {
    std::vector<std::pair<State, int64_t>> result;
    if (is_goal(state))
        return result;
    int n = size();
    if (state.visited == full_mask()) {
        // Forced return arc completing the tour.
        State back{state.visited, uint8_t(instance_->start())};
        result.emplace_back(back, instance_->weight_tenths(state.current,
                                                           instance_->start()));
        return result;
    }
    for (int city = 0; city < n; ++city) {
        if (state.visited & (uint32_t(1) << city))
            continue;
        State next{state.visited | (uint32_t(1) << city), uint8_t(city)};
        result.emplace_back(next, instance_->weight_tenths(state.current, city));
    }
    return result;
}

FeatureVector TspDomain::encode(const State &state) const {
    int n = size();
    FeatureVector features;
    features.reserve(size_t(n) * n + 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            features.push_back(float(instance_->weight(i, j)));
    for (int city = 0; city < n; ++city)
        features.push_back((state.visited & (uint32_t(1) << city)) ? 1.0f : 0.0f);
    for (int city = 0; city < n; ++city)
        features.push_back(city == instance_->start() ? 1.0f : 0.0f);
    return features;
}

}
