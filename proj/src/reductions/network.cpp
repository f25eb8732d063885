#include "tsw/reductions/network.hpp"

#include <algorithm>
#include <numeric>

#include "tsw/bounds.hpp"

namespace tsw {

Graph LayeredGadget::to_graph() const {
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r + 1 < height; ++r)
        for (int c = 0; c < width; ++c)
            if (has_down(r, c)) edges.emplace_back(id(r, c), id(r + 1, c));
    for (auto [r, a, b] : horizontals) edges.emplace_back(id(r, a), id(r, b));
    return Graph(width * height, std::move(edges));
}

long long LayeredGadget::downward_count() const {
    return std::count(down.begin(), down.end(), (char)1);
}

TokenPlacement LayeredGadget::placement_for(const std::vector<int>& perm) const {
    TokenPlacement p(width * height, -1);
    for (int v = 0; v < width * height; ++v)
        if (fixed_target[v] >= 0) p[v] = fixed_target[v];
    for (std::size_t i = 0; i < inputs.size(); ++i) p[inputs[i]] = outputs[perm[i]];
    if (!is_permutation(p)) throw Error("gadget targets are not a bijection");
    return p;
}

namespace {

struct GridBuilder {
    LayeredGadget g;

    GridBuilder(int width, int height) {
        g.width = width;
        g.height = height;
        g.down.assign((std::size_t)width * (height - 1), 1);
        g.fixed_target.assign((std::size_t)width * height, -2);  // -2 = unset
    }

    void break_down(int row, int col) { g.down[(std::size_t)row * g.width + col] = 0; }
    void horizontal(int row, int a, int b) { g.horizontals.emplace_back(row, a, b); }
    void target(int from_row, int from_col, int to_row, int to_col) {
        g.fixed_target[g.id(from_row, from_col)] = g.id(to_row, to_col);
    }

    // Fillers: every vertex below an intact downward edge moves one layer up.
    // Remaining unset vertices must be interface inputs.
    void finalize(const std::vector<int>& input_cols, const std::vector<int>& output_cols) {
        for (int r = 1; r < g.height; ++r)
            for (int c = 0; c < g.width; ++c)
                if (g.has_down(r - 1, c) && g.fixed_target[g.id(r, c)] == -2)
                    g.fixed_target[g.id(r, c)] = g.id(r - 1, c);
        for (int c : input_cols) {
            g.inputs.push_back(g.id(0, c));
            g.fixed_target[g.id(0, c)] = -1;
        }
        for (int c : output_cols) g.outputs.push_back(g.id(g.height - 1, c));
        for (int v = 0; v < g.width * g.height; ++v)
            if (g.fixed_target[v] == -2)
                throw Error("gadget vertex " + std::to_string(v) + " has no start token role");
    }
};

// Lays down one shift gadget: two swapping gadgets, the forcing token
// entering on col_b and retiring at the bottom of col_s[2].
void emit_block(GridBuilder& b, const PermutationNetwork::Block& blk, const int colP[3]) {
    const int r = blk.row0;
    if (r > 0) b.break_down(r - 1, blk.col_b);
    for (int k = 0; k < 3; ++k) {
        if (r > 0) b.break_down(r - 1, colP[k]);
        b.break_down(r + 2, colP[k]);
        if (r + 6 < b.g.height) b.break_down(r + 5, colP[k]);
    }
    if (r + 6 < b.g.height) b.break_down(r + 5, blk.col_s[2]);  // grave

    // upper swapping gadget
    b.horizontal(r, blk.col_b, blk.col_s[0]);
    b.horizontal(r + 1, blk.col_b, blk.col_s[1]);
    b.horizontal(r, colP[0], colP[1]);
    b.horizontal(r + 1, colP[1], colP[2]);
    b.horizontal(r + 2, colP[0], blk.col_b);
    // lower swapping gadget
    b.horizontal(r + 3, blk.col_s[2], blk.col_s[0]);
    b.horizontal(r + 4, blk.col_s[2], blk.col_s[1]);
    b.horizontal(r + 3, colP[0], colP[1]);
    b.horizontal(r + 4, colP[1], colP[2]);
    b.horizontal(r + 5, colP[0], blk.col_s[2]);

    // forcing travelers: b plus one a/c/d trio per swapping gadget
    b.target(r, blk.col_b, r + 5, blk.col_s[2]);
    for (int half = 0; half < 2; ++half) {
        int rr = r + 3 * half;
        b.target(rr, colP[0], rr + 2, colP[2]);
        b.target(rr, colP[1], rr + 2, colP[0]);
        b.target(rr, colP[2], rr + 2, colP[1]);
    }
}

void emit_block_swaps(const LayeredGadget& g, const PermutationNetwork::Block& blk,
                      const int colP[3], bool engaged, SwapSequence& out) {
    const int r = blk.row0;
    auto descend = [&](int row) {  // boundary (row-1, row)
        if (row == 0) return;
        for (int c = 0; c < g.width; ++c)
            if (g.has_down(row - 1, c)) out.emplace_back(g.id(row - 1, c), g.id(row, c));
    };
    auto swap_at = [&](int row, int a, int b) { out.emplace_back(g.id(row, a), g.id(row, b)); };

    descend(r);
    if (engaged) swap_at(r, blk.col_b, blk.col_s[0]);
    swap_at(r, colP[0], colP[1]);
    descend(r + 1);
    if (!engaged) swap_at(r + 1, blk.col_b, blk.col_s[1]);
    swap_at(r + 1, colP[1], colP[2]);
    descend(r + 2);
    descend(r + 3);
    if (engaged) swap_at(r + 3, blk.col_s[2], blk.col_s[0]);
    swap_at(r + 3, colP[0], colP[1]);
    descend(r + 4);
    if (!engaged) swap_at(r + 4, blk.col_s[2], blk.col_s[1]);
    swap_at(r + 4, colP[1], colP[2]);
    descend(r + 5);
}

PermutationNetwork tiny_network() {
    // Two straight tracks; the only even assignment is the identity.
    PermutationNetwork net;
    net.n_inputs = 2;
    GridBuilder b(2, 2);
    b.horizontal(1, 0, 1);
    b.finalize({0, 1}, {0, 1});
    net.grid = std::move(b.g);
    net.T = net.grid.downward_count();
    return net;
}

}  // namespace

PermutationNetwork build_permutation_network(int n) {
    if (n < 2) throw Error("permutation network needs at least 2 inputs");
    if (n == 2) return tiny_network();

    PermutationNetwork net;
    net.n_inputs = n;
    const int colP[3] = {n + 1, n + 2, n + 3};

    // Cascades fixing slots n-1 down to 2; the one for slot p has p gadgets.
    std::vector<int> col_of(n);
    std::iota(col_of.begin(), col_of.end(), 0);
    int spare = n;
    int row = 0;
    for (int p = n - 1; p >= 2; --p) {
        for (int j = 0; j < p; ++j) {
            PermutationNetwork::Block blk;
            int lo = std::max(j - 1, 0);
            blk.slots[0] = lo;
            blk.slots[1] = lo + 1;
            blk.slots[2] = lo + 2;
            blk.row0 = row;
            blk.col_b = spare;
            for (int k = 0; k < 3; ++k) blk.col_s[k] = col_of[blk.slots[k]];
            net.blocks.push_back(blk);
            spare = blk.col_s[2];
            col_of[blk.slots[2]] = blk.col_s[1];
            col_of[blk.slots[1]] = blk.col_b;
            row += 6;
        }
    }
    net.num_shift_gadgets = (int)net.blocks.size();

    GridBuilder b(n + 4, row);
    for (const auto& blk : net.blocks) emit_block(b, blk, colP);
    std::vector<int> input_cols(n);
    std::iota(input_cols.begin(), input_cols.end(), 0);
    std::vector<int> output_cols(col_of.begin(), col_of.end());
    b.finalize(input_cols, output_cols);
    net.grid = std::move(b.g);
    net.T = net.grid.downward_count() + 6LL * net.num_shift_gadgets;
    return net;
}

SwapSequence route_network(const PermutationNetwork& net, const std::vector<int>& perm) {
    const int n = net.n_inputs;
    if ((int)perm.size() != n || !is_permutation(perm)) throw InvalidPermutation("assignment");
    if (!is_even_permutation(perm)) throw OddPermutation();

    if (net.blocks.empty()) {  // the two-track network
        SwapSequence out;
        for (int c = 0; c < net.grid.width; ++c)
            for (int r = 0; r + 1 < net.grid.height; ++r)
                if (net.grid.has_down(r, c)) out.emplace_back(net.grid.id(r, c), net.grid.id(r + 1, c));
        return out;
    }

    // Decide each block's engagement by simulating slot contents.
    std::vector<int> cur(n);  // cur[slot] = token
    std::iota(cur.begin(), cur.end(), 0);
    std::vector<char> engaged(net.blocks.size(), 0);
    std::size_t bi = 0;
    for (int p = n - 1; p >= 2; --p) {
        int wanted = -1;
        for (int t = 0; t < n; ++t)
            if (perm[t] == p) wanted = t;
        int s = -1;
        for (int q = 0; q <= p; ++q)
            if (cur[q] == wanted) s = q;
        if (s < 0) throw Error("routing lost a token (implementation bug)");
        for (int j = 0; j < p; ++j, ++bi) {
            if (s == p) continue;
            bool ride = (s == 0) ? true : (j >= s);
            if (!ride) continue;
            engaged[bi] = 1;
            const auto& blk = net.blocks[bi];
            int keep = cur[blk.slots[2]];
            cur[blk.slots[2]] = cur[blk.slots[1]];
            cur[blk.slots[1]] = cur[blk.slots[0]];
            cur[blk.slots[0]] = keep;
            s = (s == blk.slots[0] || s == blk.slots[1]) ? s + 1 : s;
        }
        if (cur[p] != wanted) throw Error("cascade failed to place its token (implementation bug)");
    }
    for (int q = 0; q < n; ++q)
        if (perm[cur[q]] != q) throw OddPermutation();  // unreachable for even input

    SwapSequence out;
    const int colP[3] = {n + 1, n + 2, n + 3};
    for (std::size_t k = 0; k < net.blocks.size(); ++k)
        emit_block_swaps(net.grid, net.blocks[k], colP, engaged[k], out);
    return out;
}

std::vector<std::string> validate_network_structure(const PermutationNetwork& net) {
    std::vector<std::string> bad;
    const auto& g = net.grid;
    if ((int)g.down.size() != g.width * (g.height - 1)) bad.push_back("grid shape mismatch");
    for (auto [r, a, b] : g.horizontals) {
        if (r < 0 || r >= g.height || a == b || a < 0 || b < 0 || a >= g.width || b >= g.width)
            bad.push_back("horizontal edge outside the grid");
    }
    // rules: uniform layers hold by construction; every vertex has at most one
    // neighbor in each adjacent layer because downward edges stay in-column.
    Graph graph = g.to_graph();
    if (!graph.is_connected()) bad.push_back("network graph is disconnected");
    for (int v = 0; v < graph.n; ++v) {
        int up = 0, down_deg = 0;
        for (int w : graph.adj[v]) {
            if (w / g.width == v / g.width - 1) ++up;
            if (w / g.width == v / g.width + 1) ++down_deg;
            if (std::abs(w / g.width - v / g.width) > 1)
                bad.push_back("edge spans non-adjacent layers");
        }
        if (up > 1 || down_deg > 1)
            bad.push_back("vertex " + std::to_string(v) + " has two neighbors in one adjacent layer");
    }
    return bad;
}

LayeredGadget make_swapping_gadget() {
    // columns: 0,1,2 interface; 3,4,5 forcing trio
    GridBuilder b(6, 3);
    b.horizontal(0, 0, 1);
    b.horizontal(1, 0, 2);
    b.horizontal(0, 3, 4);
    b.horizontal(1, 4, 5);
    b.horizontal(2, 3, 0);
    b.target(0, 3, 2, 5);
    b.target(0, 4, 2, 3);
    b.target(0, 5, 2, 4);
    b.finalize({0, 1, 2}, {0, 1, 2});
    return std::move(b.g);
}

LayeredGadget make_shift_gadget() {
    // columns: 0,1,2 interface in; 3 forcing token; 4,5,6 trios.
    // Interface out: slot 1 keeps column 0, slot 2 exits on column 3,
    // slot 3 exits on column 1; column 2 retires the forcing token.
    PermutationNetwork::Block blk{{0, 1, 2}, 0, 3, {0, 1, 2}};
    const int colP[3] = {4, 5, 6};
    GridBuilder b(7, 6);
    emit_block(b, blk, colP);
    b.finalize({0, 1, 2}, {0, 3, 1});
    return std::move(b.g);
}

SwapSequence route_shift_gadget(const LayeredGadget& g, bool shifted) {
    PermutationNetwork::Block blk{{0, 1, 2}, 0, 3, {0, 1, 2}};
    const int colP[3] = {4, 5, 6};
    SwapSequence out;
    emit_block_swaps(g, blk, colP, shifted, out);
    return out;
}

}  // namespace tsw
