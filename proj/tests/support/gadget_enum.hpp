#pragma once

#include <map>
#include <vector>

#include "tsw/reductions/network.hpp"

// Exhaustive enumeration of gadget routings in which every downward edge is
// used exactly once: travelers ride their columns down in lockstep and may
// swap across a horizontal edge when both of its ends hold travelers at that
// row. Cost = number of horizontal swaps. Returns, for each achievable
// interface permutation, the minimum cost <= cap.
namespace oracles {

class GadgetEnumerator {
  public:
    GadgetEnumerator(const tsw::LayeredGadget& gadget, long long cost_cap)
        : g(gadget), cap(cost_cap) {
        for (int r = 0; r < g.height; ++r)
            for (int c = 0; c < g.width; ++c) {
                bool top = (r == 0) || !g.has_down(r - 1, c);
                if (!top) continue;
                int v = g.id(r, c);
                Traveler t;
                t.start_row = r;
                t.start_col = c;
                t.target = g.fixed_target[v];
                t.slot = -1;
                if (t.target == -1)
                    for (std::size_t i = 0; i < g.inputs.size(); ++i)
                        if (g.inputs[i] == v) t.slot = (int)i;
                travelers.push_back(t);
            }
    }

    std::map<std::vector<int>, long long> run() {
        std::vector<int> col(travelers.size(), -1);  // -1 inactive, -2 retired
        std::vector<int> exits(g.inputs.size(), -1);
        enter_row(0, col, exits, 0);
        return result;
    }

  private:
    struct Traveler {
        int start_row, start_col;
        int target;  // vertex id, or -1 for interface travelers
        int slot;
    };

    const tsw::LayeredGadget& g;
    long long cap;
    std::vector<Traveler> travelers;
    std::map<std::vector<int>, long long> result;

    int traveler_at(const std::vector<int>& col, int c) const {
        for (std::size_t i = 0; i < col.size(); ++i)
            if (col[i] == c) return (int)i;
        return -1;
    }

    void enter_row(int row, std::vector<int> col, std::vector<int> exits, long long cost) {
        if (row == g.height) {
            auto it = result.find(exits);
            if (it == result.end() || it->second > cost) result[exits] = cost;
            return;
        }
        for (std::size_t i = 0; i < travelers.size(); ++i)
            if (travelers[i].start_row == row) col[i] = travelers[i].start_col;
        swap_phase(row, col, exits, cost);
    }

    void swap_phase(int row, std::vector<int>& col, std::vector<int>& exits, long long cost) {
        descend(row, col, exits, cost);
        if (cost >= cap) return;
        for (auto [r, a, b] : g.horizontals) {
            if (r != row) continue;
            int i = traveler_at(col, a), j = traveler_at(col, b);
            if (i < 0 || j < 0) continue;
            std::swap(col[i], col[j]);
            swap_phase(row, col, exits, cost + 1);
            std::swap(col[i], col[j]);
        }
    }

    void descend(int row, const std::vector<int>& col, std::vector<int> exits, long long cost) {
        std::vector<int> next = col;
        for (std::size_t i = 0; i < travelers.size(); ++i) {
            if (col[i] < 0) continue;
            if (row + 1 < g.height && g.has_down(row, col[i])) continue;  // keeps riding
            int v = g.id(row, col[i]);
            if (travelers[i].slot >= 0 || travelers[i].target == -1) {
                int o = -1;
                for (std::size_t k = 0; k < g.outputs.size(); ++k)
                    if (g.outputs[k] == v) o = (int)k;
                if (o < 0) return;  // interface token stranded off the outputs
                exits[travelers[i].slot] = o;
            } else if (v != travelers[i].target) {
                return;  // forcing token missed its destination
            }
            next[i] = -2;
        }
        enter_row(row + 1, next, exits, cost);
    }
};

inline std::map<std::vector<int>, long long> enumerate_gadget(const tsw::LayeredGadget& g,
                                                              long long cap) {
    return GadgetEnumerator(g, cap).run();
}

}  // namespace oracles
