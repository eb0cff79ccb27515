#pragma once
// Basic identifiers and the content digest type shared by every module.

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <string>

namespace stakedag {

using NodeId = uint32_t;
using Seq = uint32_t;       // per-creator self-chain index, 0 for the leaf
using Lamport = uint64_t;
using Stake = int64_t;      // whole tokens
using Tick = uint64_t;

struct Hash256 {
    std::array<uint8_t, 32> b{};

    auto operator<=>(const Hash256&) const = default;
    bool is_zero() const {
        for (auto x : b)
            if (x) return false;
        return true;
    }
};

// unordered_map hasher: digest bytes are already uniform, reuse the head.
struct Hash256Hasher {
    size_t operator()(const Hash256& h) const {
        uint64_t v;
        std::memcpy(&v, h.b.data(), sizeof v);
        return static_cast<size_t>(v);
    }
};

std::string to_hex(const Hash256& h);
bool from_hex(const std::string& s, Hash256& out);

}  // namespace stakedag
