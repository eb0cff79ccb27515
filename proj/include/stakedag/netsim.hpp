#pragma once
// Deterministic discrete-event simulator: n node state machines over a
// delayed point-to-point transport. Each tick every node (in id order)
// drains its due inbox, selects peers, issues sync requests, creates and
// broadcasts one event, and runs its consensus pipeline. Same config and
// seed therefore reproduce the same run byte for byte.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "stakedag/chain.hpp"
#include "stakedag/consensus.hpp"

namespace stakedag {

enum class PeerStrategy : uint8_t {
    uniform_random,
    stake_proportional,
    least_used,
    most_used,
    balanced,
};

enum class NodeRole : uint8_t { honest, forker, withholder };

const char* peer_strategy_name(PeerStrategy s);
bool peer_strategy_from_name(const std::string& s, PeerStrategy& out);
const char* node_role_name(NodeRole r);
bool node_role_from_name(const std::string& s, NodeRole& out);

struct SimConfig {
    std::string name = "run";
    uint32_t n = 5;
    uint32_t k = 3;
    std::vector<Stake> stakes;  // validating power per node
    uint64_t seed = 1;
    Tick max_ticks = 1000;
    uint32_t delay_min = 1;  // uniform delivery delay bounds, inclusive
    uint32_t delay_max = 5;
    PeerStrategy strategy = PeerStrategy::stake_proportional;
    LayeringMode layering = LayeringMode::lpl;
    uint32_t cg_width = 0;
    uint32_t stake_sync_period_frames = 20;
    std::vector<StakeUpdate> stake_updates;
    std::map<NodeId, NodeRole> roles;  // nodes absent here are honest
    std::map<NodeId, uint32_t> fork_widths;  // forker sibling count, default 2
    uint32_t fork_period = 4;  // forker forks every this-many creations
    uint32_t tx_interval = 1;  // each node submits a tx every m ticks; 0=off
    // Events are referenced only once they have sat in the store this long,
    // so fork evidence outruns any reference to a forked sibling.
    std::optional<uint32_t> reference_maturity;

    NodeRole role_of(NodeId i) const;
    uint32_t fork_width_of(NodeId i) const;
    bool has_byzantine() const;
    uint32_t maturity() const {
        return reference_maturity ? *reference_maturity : 2 * delay_max + 2;
    }
    bool validate(std::string* err) const;
    // Canonical one-line-per-field text; hashed into the config digest.
    std::string canonical_text() const;
};

// splitmix64: tiny, portable, identical sequences on every platform
struct Rng {
    uint64_t state = 0;

    explicit Rng(uint64_t seed = 0) : state(seed) {}
    uint64_t next();
    uint64_t uniform(uint64_t n);                 // [0, n), rejection-sampled
    uint32_t range(uint32_t lo, uint32_t hi);     // [lo, hi] inclusive
};

struct SimMessage {
    enum class Body : uint8_t {
        broadcast_event,
        sync_request,
        sync_response,
        stake_sync,
    };

    Body body = Body::broadcast_event;
    NodeId from = 0;
    NodeId to = 0;
    Tick deliver_at = 0;
    EventBlock event;                       // broadcast_event
    std::map<NodeId, int64_t> known;        // sync_request: creator -> top seq
    std::vector<EventBlock> events;         // sync_response, (lamport, hash) asc
    std::vector<ForkProof> proofs;          // sync_response piggyback
    std::vector<StakeUpdate> stake_updates; // stake_sync
};

// Lifecycle of one submitted transaction on its submitting node.
struct TxTrace {
    std::string id;
    NodeId node = 0;
    Tick submitted = 0;  // stage 1
    bool in_event = false;
    Tick created = 0;    // stage 2
    Hash256 event;
};

struct SimNode {
    SimNode(NodeId id_, NodeRole role_, uint32_t k, StakeTable stakes,
            ConsensusEngine::Options opt)
        : id(id_), role(role_), chain(k), engine(&chain, std::move(stakes), opt) {}

    NodeId id;
    NodeRole role;
    SOperaChain chain;
    ConsensusEngine engine;
    std::map<Tick, std::vector<SimMessage>> inbox;
    std::map<Hash256, EventBlock> pending;  // events awaiting parents
    std::unordered_map<Hash256, Tick, Hash256Hasher> arrival;
    std::map<NodeId, uint64_t> peer_counters;  // f_i: times peer selected
    uint64_t selection_total = 0;
    std::set<ForkProof> proofs_to_embed;
    std::vector<std::string> tx_queue;
    uint32_t last_stake_checkpoint = 0;
    uint32_t mid_run_frames = 0;  // max frame snapshot at max_ticks/2
    uint64_t creations = 0;       // own events created, leaf included
    // Forker state: one tip per equivocation branch, extended round-robin so
    // every cohort sees a contradicting self-parent within fork-width ticks.
    std::vector<Hash256> branch_tips;
    uint32_t next_branch = 0;
};

struct SimVerdict {
    std::string name;
    bool applicable = true;
    bool pass = true;
};

struct SimReportData {
    SimConfig config;
    std::vector<SimVerdict> verdicts;
    uint64_t messages_sent = 0;
    Tick ticks_run = 0;
    std::vector<std::unique_ptr<SimNode>> nodes;
    std::vector<TxTrace> traces;
    std::set<ForkProof> honest_proofs;  // union over honest nodes

    bool all_pass() const;
    const SimVerdict* verdict(const std::string& name) const;
};

// Peer selection per strategy. Returns up to `count` distinct peers from
// {0..n-1} \ ({self} ∪ excluded); ties break by ascending id. `counters`
// are the caller's selection frequencies f_i (updated by the caller).
std::vector<NodeId> select_peers(PeerStrategy st, NodeId self,
                                 const std::vector<Stake>& stakes,
                                 const std::map<NodeId, uint64_t>& counters,
                                 const std::set<NodeId>& excluded,
                                 uint32_t count, Rng& rng);

// Event diff: all responder events above the requester's known tops
// (creator -> highest known seq, -1 for none), sorted by (lamport, hash).
std::vector<EventBlock> sync_events(const std::map<NodeId, int64_t>& known,
                                    const SOperaChain& responder);

// Stake diff: responder checkpoint entries missing from or differing with
// the requester's, sorted by (checkpoint_frame, node).
std::vector<StakeUpdate> sync_stakes(const std::vector<StakeUpdate>& known,
                                     const std::vector<StakeUpdate>& responder);

SimReportData run_simulation(const SimConfig& cfg);

}  // namespace stakedag
