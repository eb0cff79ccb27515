#pragma once
// Staking arithmetic: token accounting, validator weights, network-usage
// importance, validating power, per-stake transaction slots and the daily
// reward schedule with validator/delegator splits.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace stakedag {
namespace staking {

struct StakeParams {
    double total_supply = 3.175e9;   // F
    int delta_days = 30;             // gas usage averaging window
    int renewal_days = 90;           // stake staleness horizon
    double epsilon = 1.0;            // minimum stake/delegation amount
    double theta = 0.30;             // importance mix in validating power
    double xi = 0.50;                // gas mix in transacting power
    double commission = 0.30;        // protocol share of daily fees
    double mu = 0.15;                // validator share of delegated rewards
    double min_stake_ratio = 0.001;  // T_s bounds as fractions of supply
    double max_stake_ratio = 0.004;
    double delegation_cap = 15.0;    // M: delegated-in <= M * own stake
    double q_cap = 0.0;              // Q multiplier; 0 = not configured
    double gas_power = 5e9;          // network gas throughput/sec
    double byte_power = 500000.0;    // network payload throughput/sec
    double reward_pool = 996341176.0;  // total event-fee reward tokens
    int reward_days = 1460;

    double min_stake() const { return min_stake_ratio * total_supply; }
    double max_stake() const { return max_stake_ratio * total_supply; }
    bool has_q() const { return q_cap > 0.0; }
};

struct Account {
    std::string id;
    int64_t tokens = 0;            // t: total held
    int64_t validation_stake = 0;  // t_s
    int64_t tx_stake = 0;          // t_x
    std::map<std::string, int64_t> delegations;  // to validator id -> t_d
    double gas_used = 0.0;         // gas consumed over the past delta days
    int staked_at_day = 0;         // last (re)stake day, for staleness

    int64_t delegated_out() const;
};

// Per-slot conversion constants: tokens per unit of gas/byte throughput.
// sigma_gas = F / gas_power, sigma_byte = F / byte_power.
double sigma_gas(const StakeParams& p);
double sigma_byte(const StakeParams& p);

// Normalized network importance of gas usage g against the network total G,
// scaled to total transacting power P.
double importance_network(double g, double G, double P);

// Transacting power of an account: x = xi * g_hat + (1 - xi) * t.
double transacting_power(double g_hat, double tokens, const StakeParams& p);

// Throughput slot bought by transacting power x.
struct TxSlot {
    double gas_per_sec = 0.0;
    double bytes_per_sec = 0.0;
};
TxSlot slot_for_stake(double x, const StakeParams& p);

struct ValidatorRecord {
    std::string id;
    int64_t own_stake = 0;       // t_s of the validator account
    int64_t delegated_in = 0;    // sum of t_d delegated to it
    double gas_used = 0.0;       // own gas
    // delegator id -> (delegated amount, delegator gas, delegator tokens)
    struct DelegatorIn {
        std::string id;
        int64_t amount = 0;
        double gas_used = 0.0;
        int64_t tokens = 0;
    };
    std::vector<DelegatorIn> delegators;
    double uptime = 1.0;  // s_v in [0, 1]
};

// w_v: own validation stake plus everything delegated in.
int64_t relative_weight(const ValidatorRecord& v);

// h_v = g_v + sum_i g_i * t_d_i / t_i ; h_hat = (h_v / H) * W_total.
double validator_importance_raw(const ValidatorRecord& v);
double validator_importance(double h_raw, double H_total, double W_total);

// p_v = s_v * (theta * h_hat + (1 - theta) * w_v).
double validating_power(double uptime, double h_hat, double w,
                        const StakeParams& p);

// Composite ranking score: equal-weight mean of normalized components.
double composite_score(const std::vector<double>& components);

// Base reward tokens released on `day` (1-based); flat during the reward
// window, zero afterwards.
double daily_base_reward(const StakeParams& p, int day);

struct RewardShare {
    std::string validator;
    double validator_reward = 0.0;  // I_v
    std::map<std::string, double> delegator_rewards;  // D_i by delegator id
    double total() const;
};

// Distribute one day's rewards (base schedule plus fee pool B_d after
// commission) across validators by validating power, then split each
// validator's share with its delegators (validator keeps own-stake share
// plus mu of the delegated share).
std::vector<RewardShare> daily_rewards(const std::vector<ValidatorRecord>& vs,
                                       const StakeParams& p, int day,
                                       double fees_B_d);

enum class Violation {
    none,
    over_holding,     // t_x + t_s + sum t_d > t
    below_min_stake,  // t_s < T_s_min (validators)
    above_max_stake,  // t_s > T_s_max
    delegation_cap,   // delegated-in > M * t_s
    q_cap,            // amount > Q * holdings (only when Q configured)
    epsilon_min,      // amount < epsilon
    stale_stake,      // staked_at_day older than renewal_days
    unknown_target,
};

struct AccountAction {
    enum Kind { snapshot, stake, delegate_to, tx_stake } kind = snapshot;
    double amount = 0.0;
    std::string target;  // validator id for delegate_to
};

// Validate an account state (snapshot) or a proposed action against it.
// Returns every violated rule; empty means valid. `today` drives staleness,
// `is_validator` turns on the T_s bounds, `delegated_in` the M cap.
std::vector<Violation> validate_account_action(const Account& a,
                                               const AccountAction& act,
                                               const StakeParams& p,
                                               bool is_validator,
                                               int64_t delegated_in,
                                               int today);

const char* violation_name(Violation v);

}  // namespace staking
}  // namespace stakedag
