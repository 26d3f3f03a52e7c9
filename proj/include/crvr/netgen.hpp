#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "crvr/network.hpp"

namespace crvr {

// Planted block patterns: where the strong weights sit.
enum class BlockStructure { assortative, disassortative, core_periphery, ordered };

std::string_view to_string(BlockStructure s);
std::optional<BlockStructure> parse_structure(std::string_view name);

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
};

struct BlockSpec {
    BlockStructure structure = BlockStructure::assortative;
    int k_groups = 4;
    int group_size = 10;
    Interval strong{1.0, 10.0};
    Interval weak{0.0, 1.0};
    double p = 1.0;              // within strong pairs: connection probability
    double q = 1.0;              // within weak pairs: connection probability
    double floor_weight = 0.1;   // weight given to dropped pairs in noisy mode
    std::uint64_t seed = 0;
};

void validate(const BlockSpec& spec);  // throws std::invalid_argument

/// Whether block pair (r, s) draws from the strong interval.
/// assortative: r == s; disassortative: r != s; core_periphery: r == 0 or
/// s == 0 (block 0 is the core); ordered: |r - s| <= 1 (banded, diagonal
/// included).
bool strong_block_pair(BlockStructure structure, int r, int s, int k_groups);

/// Fully connected planted-block network: every pair gets a weight drawn
/// uniformly from its block pair's interval. Deterministic given spec.seed.
WeightedNetwork generate_block_network(const BlockSpec& spec);

/// Noisy variant: strong pairs keep a strong draw with probability p,
/// weak pairs a weak draw with probability q; dropped pairs get
/// floor_weight.
WeightedNetwork generate_noisy_block_network(const BlockSpec& spec);

/// Erdos-Renyi with uniform weights on present edges and floor_weight on
/// non-edges. No planted labels.
WeightedNetwork generate_er_weighted(std::size_t n, double p, Interval weights,
                                     double floor_weight, std::uint64_t seed);

}  // namespace crvr
