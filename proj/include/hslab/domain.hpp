#ifndef HSLAB_DOMAIN_HPP
#define HSLAB_DOMAIN_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hslab/error.hpp"

namespace hslab {

enum class DomainKind { PANCAKE, TSP, BLOCKS_WORLD };

// Domain encoding phi(s); entries are {0,1} indicators except TSP edge
// weights, which lie on the 0.1 grid in [0.1, 5.0].
using FeatureVector = std::vector<float>;

/*
  Static description of a search domain at a given problem size.
  Costs are handled as exact integers internally ("cost units");
  cost_scale is the real value of one unit (1 for pancake and blocks
  world, 0.1 for TSP). epsilon, the minimum nonzero gap between any
  two solution costs, always equals one cost unit.
*/
struct DomainSpec {
    DomainKind kind;
    std::string name;
    int size = 0;            // problem size n
    double epsilon = 1.0;
    double cost_scale = 1.0;
    int encoder_dim = 0;
};

inline const char *domain_name(DomainKind kind) {
    switch (kind) {
    case DomainKind::PANCAKE: return "pancake";
    case DomainKind::TSP: return "tsp";
    case DomainKind::BLOCKS_WORLD: return "bw";
    }
    return "unknown";
}

inline DomainKind parse_domain(std::string_view name) {
    if (name == "pancake")
        return DomainKind::PANCAKE;
    if (name == "tsp")
        return DomainKind::TSP;
    if (name == "bw" || name == "blocks-world" || name == "blocksworld")
        return DomainKind::BLOCKS_WORLD;
    throw Error(ErrorCode::USAGE_ERROR,
                "unknown domain '" + std::string(name) + "'");
}

inline double domain_epsilon(DomainKind kind) {
    return kind == DomainKind::TSP ? 0.1 : 1.0;
}

inline int encoder_dim(DomainKind kind, int n) {
    switch (kind) {
    case DomainKind::PANCAKE: return n * n;
    case DomainKind::TSP: return n * n + 2 * n;
    case DomainKind::BLOCKS_WORLD: return n * (n + 1);
    }
    return 0;
}

inline void hash_combine(size_t &seed, size_t value) {
    seed ^= value + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2);
}

}

#endif
