#pragma once

#include <cstdint>
#include <string>

#include "tsw/core.hpp"
#include "tsw/io.hpp"

namespace tsw {

// Families: path, cycle, star, complete, tree, random-connected.
// Permutation kinds: random, reversal, rotation, identity, cycle-<k>.
Graph generate_graph(const std::string& family, int n, std::uint64_t seed);
TokenPlacement generate_placement(const std::string& perm_kind, int n, std::uint64_t seed);
Instance generate_instance(const std::string& family, int n, std::uint64_t seed,
                           const std::string& perm_kind);

}  // namespace tsw
