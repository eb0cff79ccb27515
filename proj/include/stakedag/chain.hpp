#pragma once
// The S-OPERA chain: a node's local store of accepted event blocks.
// Append-only DAG keyed by content hash. Insertion validates structure,
// digest, parent presence and the no-fork rule (one self-chain per creator;
// the first-stored sibling wins, later siblings are rejected and produce a
// ForkProof). A Byzantine node may store its own siblings via allow_fork.

#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "stakedag/event.hpp"

namespace stakedag {

enum class InsertStatus {
    accepted,
    missing_parent,   // retryable: sync layer buffers and retries
    bad_hash,         // digest mismatch
    bad_structure,    // parent arity/creator rules violated
    fork_detected,    // sibling conflict; proof recorded, block dropped
};

struct InsertResult {
    InsertStatus status = InsertStatus::accepted;
    Hash256 missing;                 // set for missing_parent
    std::optional<ForkProof> fork;   // set for fork_detected
    bool ok() const { return status == InsertStatus::accepted; }
};

class SOperaChain {
  public:
    explicit SOperaChain(uint32_t k = 3) : k_(k) {}

    uint32_t k() const { return k_; }
    size_t size() const { return events_.size(); }
    bool has(const Hash256& h) const { return events_.count(h) != 0; }
    const EventBlock& get(const Hash256& h) const { return events_.at(h); }
    const EventBlock* find(const Hash256& h) const;

    // Insert a received or locally created block. verify_hash=false is for
    // log replay, where payload content (and thus the digest) is unavailable.
    InsertResult insert_event(const EventBlock& e, bool allow_fork = false,
                              bool verify_hash = true);

    // Build, insert and return a new block for `creator` on top of its own
    // chain, referencing the given peer tops (k-1 of them, distinct foreign
    // creators). Throws std::invalid_argument on contract violations.
    EventBlock create_event(NodeId creator,
                            const std::vector<Hash256>& peer_tops,
                            std::vector<std::string> payload);

    // Highest stored event of a creator (its chain tip), if any.
    std::optional<Hash256> top(NodeId creator) const;
    // Tip override used by a forker choosing which sibling to extend.
    void set_top(NodeId creator, const Hash256& h);
    const std::map<NodeId, Hash256>& tops() const { return tops_; }

    // a happened-before b: a is a (self-)ancestor of b via parent edges.
    // Irreflexive; the transitive closure of direct parenthood.
    bool happened_before(const Hash256& a, const Hash256& b) const;

    // All sibling pairs by one creator among stored events (a node's own
    // store stays fork-free unless allow_fork was used).
    std::vector<ForkProof> detect_forks_pairwise(NodeId creator) const;

    // Proofs recorded by rejected inserts plus any recorded externally
    // (gossip, dangling self-parent inference). Deduplicated, sorted.
    const std::set<ForkProof>& fork_proofs() const { return fork_proofs_; }
    bool record_fork_proof(const ForkProof& p);  // true if new
    bool is_fork_member(const Hash256& h) const;
    bool has_proof_against(NodeId creator) const;

    // Stored events of one creator in seq order (forks appended after).
    const std::vector<Hash256>& by_creator(NodeId creator) const;
    // Event of `creator` at self-chain position `seq`, if stored.
    const EventBlock* at_seq(NodeId creator, Seq seq) const;

    // Children (events referencing h as any parent), insertion order.
    const std::vector<Hash256>& children(const Hash256& h) const;

    // Stored hashes sorted ascending (deterministic iteration helper).
    std::vector<Hash256> sorted_hashes() const;
    // Accepted blocks in insertion order (event-log order).
    const std::vector<Hash256>& insertion_order() const { return order_; }

  private:
    InsertResult validate(const EventBlock& e, bool verify_hash) const;

    uint32_t k_;
    std::unordered_map<Hash256, EventBlock, Hash256Hasher> events_;
    std::unordered_map<Hash256, std::vector<Hash256>, Hash256Hasher> children_;
    // first stored self-child of an event (fork arbitration witness)
    std::unordered_map<Hash256, Hash256, Hash256Hasher> self_child_;
    std::map<NodeId, Hash256> tops_;
    std::map<NodeId, std::vector<Hash256>> by_creator_;
    std::map<NodeId, std::map<Seq, Hash256>> by_seq_;  // first-stored per seq
    std::vector<Hash256> order_;
    std::set<ForkProof> fork_proofs_;
    std::set<Hash256> fork_members_;
    std::set<NodeId> accused_;
};

}  // namespace stakedag
