#pragma once
// Canonical text artifacts: the simulation report, per-node event logs, the
// stake-calc table, and their parsers. All rendering is byte-stable: fixed
// field order, fixed number formatting (2 decimals for token amounts, 6 for
// shares), newline-terminated lines.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stakedag/netsim.hpp"
#include "stakedag/scenario.hpp"

namespace stakedag {

// sha-256 of arbitrary bytes (config digests, tamper checks)
Hash256 sha256_bytes(const void* data, size_t len);

std::string format_tokens(double amount);  // comma-grouped, 2 decimals
std::string format_share(double share);    // plain, 6 decimals

// --- simulation report -------------------------------------------------------

std::string render_report(const SimReportData& r);

// One node's final order as report lines:
// "order <node> <position> <hash> <creator> <layer> <frame> <lamport> <a>"
std::string render_finality_lines(NodeId node,
                                  const std::vector<OrderedEntry>& order);

struct OrderLine {
    NodeId node = 0;
    uint64_t position = 0;
    std::string hash_hex;
    NodeId creator = 0;
    uint32_t layer = 0;
    uint32_t frame = 0;
    Lamport lamport = 0;
    bool atropos = false;
    std::string raw;  // full line for annotation equality checks
};

struct ParsedReport {
    std::string config_digest;
    std::string name;
    std::map<std::string, std::string> verdicts;  // name -> pass/fail/n-a
    std::map<NodeId, std::string> roles;
    std::map<NodeId, std::vector<OrderLine>> orders;
};

bool parse_report(const std::string& text, ParsedReport& out, std::string* err);

struct CheckResult {
    bool comparable = true;  // config digests match
    bool pass = true;
    std::string detail;  // first mismatch, "node N position P ..."
};

// Cross-check honest final orders across reports: prefix compatibility and
// annotation equality on common positions.
CheckResult check_reports(const std::vector<ParsedReport>& reports);

// --- event logs ----------------------------------------------------------------

// Header line plus one line per stored event in insertion order:
// "<creator> <seq> <lamport> <hash> <self_parent|-> <p1,p2|-> <payload-size>"
std::string render_node_log(const SimNode& node, const SimConfig& cfg);

struct ParsedLog {
    NodeId node = 0;
    uint32_t n = 0;
    uint32_t k = 0;
    std::vector<Stake> stakes;
    LayeringMode layering = LayeringMode::lpl;
    uint32_t cg_width = 0;
    uint32_t period = 20;
    std::vector<StakeUpdate> updates;
    std::vector<EventBlock> events;  // hashes carried, payloads absent
};

// Returns false on a corrupt line and reports its 1-based number.
bool parse_node_log(const std::string& text, ParsedLog& out, std::string* err,
                    size_t* bad_line);

// --- stake-calc -----------------------------------------------------------------

// Table of validator weights, importances, powers, slots and the day's
// reward distribution. Fixed column order; token amounts 2 decimals,
// shares 6.
std::string render_stake_table(const LedgerFile& lf, int day);

}  // namespace stakedag
