#pragma once
// Event blocks: the vertices of the S-OPERA chain. An event has one
// self-parent (previous event of the same creator; absent for the leaf),
// k-1 other-parents from distinct peers, a Lamport timestamp and an opaque
// payload. Identity is a digest over a canonical byte serialization.

#include <optional>
#include <string>
#include <vector>

#include "stakedag/types.hpp"

namespace stakedag {

struct EventBlock {
    NodeId creator = 0;
    Seq seq = 0;
    std::optional<Hash256> self_parent;
    std::vector<Hash256> other_parents;
    Lamport lamport = 0;
    std::vector<std::string> payload;  // opaque transaction records
    Hash256 hash;                      // digest of everything above

    bool is_leaf() const { return !self_parent.has_value(); }
    size_t parent_count() const {
        return other_parents.size() + (self_parent ? 1 : 0);
    }
    // parents in a fixed order: self-parent first, then others as listed
    std::vector<Hash256> parents() const;
};

// Canonical serialization: little-endian fixed-width fields, each variable
// section length-prefixed, in declared field order. Stable across platforms.
std::vector<uint8_t> canonical_bytes(const EventBlock& e);

// SHA-256 over canonical_bytes (hash field itself excluded).
Hash256 hash_event(const EventBlock& e);

// Fork evidence: two events by one creator, neither a self-ancestor of the
// other. Hashes are stored in ascending order so proofs dedup cleanly.
struct ForkProof {
    NodeId creator = 0;
    Hash256 event_a;  // event_a < event_b
    Hash256 event_b;

    auto operator<=>(const ForkProof&) const = default;
};

ForkProof make_fork_proof(NodeId creator, const Hash256& x, const Hash256& y);

// Payload marker used to anchor fork evidence on-DAG. Nodes that learn a
// proof embed it once in their next event so the ordering step can exclude
// the named events deterministically from finalized output.
std::string encode_fork_note(const ForkProof& p);
bool decode_fork_note(const std::string& record, ForkProof& out);

}  // namespace stakedag
