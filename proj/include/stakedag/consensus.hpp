#pragma once
// Consensus over an S-OPERA chain: flagtables and validation scores, root
// promotion, frame assignment, Clotho/Atropos selection and the final total
// order S. Every output is a pure function of stored events, the stake
// schedule and recorded fork proofs, so any two nodes holding the same
// events agree on every result regardless of arrival order.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "stakedag/chain.hpp"
#include "stakedag/layering.hpp"
#include "stakedag/types.hpp"

namespace stakedag {

// A stake checkpoint: from checkpoint_frame onward, `node` validates with
// `stake`. Checkpoints snap to multiples of the sync period so every node
// applies them at the same frame boundary regardless of arrival timing.
struct StakeUpdate {
    NodeId node = 0;
    Stake stake = 0;
    uint32_t checkpoint_frame = 0;
};

class StakeTable {
  public:
    StakeTable() = default;
    StakeTable(std::vector<Stake> base, std::vector<StakeUpdate> updates,
               uint32_t sync_period_frames);

    // Validating power of `node` for frame-`frame` bookkeeping.
    Stake effective(NodeId node, uint32_t frame) const;
    // Total validating power W at `frame`.
    Stake total_at(uint32_t frame) const;
    size_t size() const { return base_.size(); }
    uint32_t sync_period() const { return period_; }

  private:
    std::vector<Stake> base_;
    // per node: checkpoint frame -> stake, frames aligned to period_
    std::vector<std::map<uint32_t, Stake>> checkpoints_;
    uint32_t period_ = 0;
};

// One flagtable entry: the latest root of `creator` reachable from the
// owning event, with the validating power it carries and where it sits.
struct FlagEntry {
    NodeId creator = 0;
    Hash256 root;
    Stake weight = 0;
    uint32_t layer = 0;
    uint32_t frame = 0;
};

// Per-creator root map of one event's subgraph. The score (sum of entry
// weights) is the validating power vouching for the event.
struct Flagtable {
    std::vector<FlagEntry> entries;  // sorted by creator, one per creator

    Stake score() const;
    const FlagEntry* find(NodeId creator) const;
};

// Consensus bookkeeping attached to each accepted event.
struct EventMeta {
    NodeId creator = 0;
    uint32_t layer = 0;
    Lamport lamport = 0;
    Flagtable table;
    uint32_t frame = 0;
    bool is_root = false;
    // frame of the latest root on the event's self-chain (itself included)
    uint32_t last_self_root_frame = 0;
    // Power gathered toward promotion at the decision frame, and the total
    // power it was measured against. Recorded for every non-leaf event.
    Stake promo_score = 0;
    Stake promo_total = 0;
    uint32_t promo_frame = 0;

    // confirmation progress: monotone flags, each stamped when first set
    bool root_covered = false;
    bool clotho_covered = false;
    bool ordered = false;
    Tick root_covered_at = 0;
    Tick clotho_covered_at = 0;
    Tick ordered_at = 0;
    uint64_t order_pos = 0;
};

enum class ClothoState : uint8_t { undecided, clotho, never };

struct RootInfo {
    Hash256 hash;
    NodeId creator = 0;
    uint32_t frame = 0;
    uint32_t layer = 0;
    Lamport lamport = 0;
    bool demoted = false;  // named by a fork proof; root status revoked
    bool retired = false;  // release decision taken (ordered or closed)
    bool cover_stamped = false;  // stage bookkeeping done for this root
    ClothoState state = ClothoState::undecided;
};

// One slot of the final order S.
struct OrderedEntry {
    Hash256 hash;
    NodeId creator = 0;
    uint32_t layer = 0;
    uint32_t frame = 0;
    Lamport lamport = 0;
    bool atropos = false;
    uint64_t position = 0;
};

class ConsensusEngine {
  public:
    struct Options {
        LayeringMode mode = LayeringMode::lpl;
        uint32_t cg_width = 0;      // required for LayeringMode::cg
        bool auto_release = true;   // release Clothos into S as they settle
    };

    ConsensusEngine(const SOperaChain* chain, StakeTable stakes, Options opt);

    // Wall-clock stamp used for confirmation bookkeeping only.
    void set_now(Tick t) { now_ = t; }

    // Fold all chain events not yet processed, then advance decisions. Safe
    // to call repeatedly; a call with no new events changes nothing.
    void process();

    // Record fork evidence: both named events lose root status and are
    // barred from the final order, and the accused creator stops counting
    // toward frame settlement.
    void note_fork_proof(const ForkProof& p);

    // --- queries ----------------------------------------------------------
    const EventMeta* meta(const Hash256& h) const;
    Stake validation_score(const Hash256& h) const;
    bool is_root(const Hash256& h) const;  // current status (post-demotion)
    uint32_t max_frame() const { return max_frame_; }
    uint32_t settled_frame() const { return settled_frame_; }
    std::vector<Hash256> roots_at_frame(uint32_t f) const;
    std::vector<Hash256> root_hashes() const;  // sorted, current roots
    const std::vector<OrderedEntry>& final_order() const { return order_; }
    const std::vector<Hash256>& main_chain() const { return atropos_; }
    const LayerAssignment& layers() const { return layers_; }
    const StakeTable& stakes() const { return stakes_; }
    const std::set<Hash256>& banned() const { return banned_; }

    // Clotho status of a root against the current view. The release loop
    // uses this same evaluation; exposed for tests.
    ClothoState evaluate_clotho(const Hash256& root_hash) const;

    // Order the subgraphs of `clotho_batch` (roots, caller-sorted) into S,
    // skipping already-ordered and banned events. Exposed so tests can
    // drive batching by hand when auto_release is off.
    void order_clothos(const std::vector<Hash256>& clotho_batch);

  private:
    struct PendingKey {
        uint32_t frame;
        uint32_t layer;
        Lamport lamport;
        Hash256 hash;
        auto operator<=>(const PendingKey&) const = default;
    };

    void ingest(const Hash256& h);
    Flagtable merge_tables(const EventBlock& e);
    Stake quorum(const Flagtable& t, uint32_t frame) const;
    void mark_root_cover(const Hash256& root_hash);
    void mark_clotho_cover(const Hash256& root_hash);
    bool root_reaches(const RootInfo& from, const RootInfo& to) const;
    Stake clotho_potential(const RootInfo& r) const;
    void recompute_settled();
    void stamp_decidable();
    void release_ready();
    void demote(const Hash256& h);

    const SOperaChain* chain_;
    StakeTable stakes_;
    Options opt_;
    Tick now_ = 0;

    size_t cursor_ = 0;  // into chain insertion order
    LayerAssignment layers_;
    std::unordered_map<Hash256, EventMeta, Hash256Hasher> meta_;
    std::unordered_map<Hash256, RootInfo, Hash256Hasher> roots_;
    std::map<uint32_t, std::vector<Hash256>> roots_by_frame_;
    // latest non-demoted root frame per creator, for settlement
    std::unordered_map<NodeId, uint32_t> latest_root_frame_;
    std::set<PendingKey> pending_;  // unretired roots in release order
    std::unordered_set<NodeId> accused_;
    std::set<Hash256> banned_;
    std::set<ForkProof> proofs_seen_;
    uint32_t max_frame_ = 0;
    uint32_t settled_frame_ = 0;
    std::vector<OrderedEntry> order_;
    std::vector<Hash256> atropos_;
};

}  // namespace stakedag
