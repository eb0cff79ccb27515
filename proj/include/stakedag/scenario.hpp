#pragma once
// Scenario and ledger files: JSON documents describing a simulation run
// (mirrors SimConfig) and a staking ledger (accounts with holdings, stakes,
// delegations and gas usage). Parsing is strict: unknown keys are errors.

#include <optional>
#include <string>
#include <vector>

#include "stakedag/netsim.hpp"
#include "stakedag/staking.hpp"

namespace stakedag {

struct LedgerFile {
    staking::StakeParams params;
    std::vector<staking::Account> accounts;
    std::vector<double> uptimes;  // parallel to accounts, default 1.0
};

struct Scenario {
    SimConfig config;
    std::string out_dir = "out";
    std::optional<LedgerFile> ledger;
};

// Parse a scenario document. On failure returns false and names the
// offending key or value in *err.
bool parse_scenario(const std::string& text, Scenario& out, std::string* err);

// Parse a standalone ledger document (stake-calc input).
bool parse_ledger(const std::string& text, LedgerFile& out, std::string* err);

// Assemble validator records (accounts with a positive validation stake,
// with delegations resolved) from a ledger.
std::vector<staking::ValidatorRecord> ledger_validators(const LedgerFile& lf);

// Validate every account snapshot; returns (account id, violation) pairs.
std::vector<std::pair<std::string, staking::Violation>> ledger_violations(
    const LedgerFile& lf, int day);

}  // namespace stakedag
