#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace trafficdmd {

enum class Leg { NB, SB, EB, WB };
enum class Turn { LT, T, RT };

/// One of the 12 leg/turn combinations of a standard four-leg intersection.
struct Movement {
    Leg leg;
    Turn turn;

    constexpr bool operator==(const Movement&) const = default;
};

inline constexpr int kNumMovements = 12;
inline constexpr int kNumLegs = 4;

/// Canonical channel order used everywhere a per-movement vector or matrix
/// row index appears: NBLT NBT NBRT SBLT SBT SBRT EBLT EBT EBRT WBLT WBT WBRT.
inline constexpr std::array<Movement, kNumMovements> kCanonicalMovements{{
    {Leg::NB, Turn::LT}, {Leg::NB, Turn::T}, {Leg::NB, Turn::RT},
    {Leg::SB, Turn::LT}, {Leg::SB, Turn::T}, {Leg::SB, Turn::RT},
    {Leg::EB, Turn::LT}, {Leg::EB, Turn::T}, {Leg::EB, Turn::RT},
    {Leg::WB, Turn::LT}, {Leg::WB, Turn::T}, {Leg::WB, Turn::RT},
}};

inline constexpr std::array<Leg, kNumLegs> kCanonicalLegs{Leg::NB, Leg::SB, Leg::EB, Leg::WB};

constexpr int movement_index(Movement m) {
    return static_cast<int>(m.leg) * 3 + static_cast<int>(m.turn);
}

constexpr int leg_index(Leg l) { return static_cast<int>(l); }

constexpr std::string_view leg_name(Leg l) {
    switch (l) {
        case Leg::NB: return "NB";
        case Leg::SB: return "SB";
        case Leg::EB: return "EB";
        case Leg::WB: return "WB";
    }
    return "??";
}

constexpr std::string_view turn_name(Turn t) {
    switch (t) {
        case Turn::LT: return "LT";
        case Turn::T: return "T";
        case Turn::RT: return "RT";
    }
    return "??";
}

inline std::string movement_name(Movement m) {
    return std::string(leg_name(m.leg)) + std::string(turn_name(m.turn));
}

inline std::optional<Movement> parse_movement(std::string_view s) {
    for (Movement m : kCanonicalMovements)
        if (movement_name(m) == s) return m;
    return std::nullopt;
}

inline std::optional<Leg> parse_leg(std::string_view s) {
    for (Leg l : kCanonicalLegs)
        if (leg_name(l) == s) return l;
    return std::nullopt;
}

constexpr bool is_east_west(Movement m) { return m.leg == Leg::EB || m.leg == Leg::WB; }
constexpr bool is_north_south(Movement m) { return m.leg == Leg::NB || m.leg == Leg::SB; }

}  // namespace trafficdmd
