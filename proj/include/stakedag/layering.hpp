#pragma once
// H-OPERA layering: assign each event a height phi so that every event sits
// strictly above all of its parents. Two algorithms over the same state:
//  - LPL: longest-path layering; leaves at layer 1, otherwise 1 + max parent.
//  - CG:  width-constrained variant; candidate layer is 1 + max parent, but a
//         full layer (width bound W reached) pushes the vertex to a fresh
//         layer above everything placed so far.
// Both run online over diffs (newly inserted events) without revisiting
// settled vertices, and batch LPL re-derives from scratch for cross-checks.

#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "stakedag/chain.hpp"

namespace stakedag {

enum class LayeringMode : uint8_t { lpl, cg };

struct LayerAssignment {
    std::unordered_map<Hash256, uint32_t, Hash256Hasher> phi;  // 1-based
    uint32_t height = 0;                     // highest occupied layer
    std::optional<uint32_t> width_bound;     // set for CG
    std::unordered_map<uint32_t, uint32_t> layer_sizes;

    bool has(const Hash256& h) const { return phi.count(h) != 0; }
    uint32_t layer_of(const Hash256& h) const { return phi.at(h); }
    size_t size() const { return phi.size(); }
};

// Hashes of events not yet present in an assignment, i.e. the diff graph
// between the chain and the processed set.
std::vector<Hash256> layering_diff(const SOperaChain& chain,
                                   const LayerAssignment& a);

// Full recomputation; ground truth for the online variants.
LayerAssignment batch_lpl(const SOperaChain& chain);

// Assign layers to diff only; result must match batch_lpl on the union.
void online_lpl(LayerAssignment& a, const SOperaChain& chain,
                const std::vector<Hash256>& diff);

// Width-constrained online layering (bound W per layer). With W >= n on a
// fork-free chain this coincides with LPL. Ties between ready vertices are
// broken by (lamport, hash) ascending.
void online_cg(LayerAssignment& a, const SOperaChain& chain, uint32_t W,
               const std::vector<Hash256>& diff);

// Worst-case layer width: n + (n-1) * w_p * w_c events can share a layer
// when cheaters with total power ratio w_p each maintain w_c sibling chains.
uint64_t max_width(uint32_t n, double w_p, double w_c);

}  // namespace stakedag
