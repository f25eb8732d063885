#pragma once

#include "tsw/core.hpp"

namespace tsw {

// A gadget laid out on a width x height grid with uniform layers. Downward
// edges run inside columns; tracks are the maximal column segments between
// breaks. Vertex ids are row * width + col.
struct LayeredGadget {
    int width = 0, height = 0;
    std::vector<char> down;  // (row,col): edge to row+1; size width*(height-1)
    std::vector<std::tuple<int, int, int>> horizontals;  // (row, colA, colB)
    std::vector<int> inputs, outputs;  // interface vertices in slot order
    std::vector<int> fixed_target;     // per vertex; -1 on interface inputs

    int id(int row, int col) const { return row * width + col; }
    bool has_down(int row, int col) const { return down[(std::size_t)row * width + col]; }
    Graph to_graph() const;
    long long downward_count() const;

    // Tokens named by target vertex; interface token i goes to outputs[perm[i]].
    TokenPlacement placement_for(const std::vector<int>& perm) const;
};

// Even permutation network: n input tracks feeding a cascade of shift
// gadgets, every even target assignment realizable in exactly T swaps.
struct PermutationNetwork {
    int n_inputs = 0;
    LayeredGadget grid;
    long long T = 0;
    int num_shift_gadgets = 0;

    struct Block {
        int slots[3];   // slot indices the shift gadget acts on
        int row0;       // first of its six rows
        int col_b;      // fresh column carrying the forcing token
        int col_s[3];   // slot columns at block start
    };
    std::vector<Block> blocks;
};

PermutationNetwork build_permutation_network(int n);

// Swap sequence of length exactly T realizing an even permutation
// (perm[i] = output slot of the token entering input slot i).
SwapSequence route_network(const PermutationNetwork& net, const std::vector<int>& perm);

std::vector<std::string> validate_network_structure(const PermutationNetwork& net);

// Standalone gadgets on the same fabric, for behavioral enumeration.
LayeredGadget make_swapping_gadget();
LayeredGadget make_shift_gadget();
// Minimal routing of the standalone shift gadget: identity or the right
// cyclic shift, six horizontal swaps either way.
SwapSequence route_shift_gadget(const LayeredGadget& g, bool shifted);

}  // namespace tsw
