#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hopf {

enum class Group : std::uint8_t { G2, F4, E6, E7, E8 };

inline const char* group_name(Group g) {
    switch (g) {
        case Group::G2: return "G2";
        case Group::F4: return "F4";
        case Group::E6: return "E6";
        case Group::E7: return "E7";
        case Group::E8: return "E8";
    }
    return "?";
}

inline const std::vector<Group>& all_groups() {
    static const std::vector<Group> v{Group::G2, Group::F4, Group::E6,
                                      Group::E7, Group::E8};
    return v;
}

// Generator families across all coefficient systems:
//   X    - even polynomial/truncated classes x_{2s}   (subscript = degree)
//   Zeta - odd mod-p classes zeta_{2s-1}              (subscript = degree)
//   Rho  - odd integral classes rho_{2s+1}            (subscript = degree)
enum class Family : std::uint8_t { X, Zeta, Rho };

struct GenName {
    Family fam{};
    std::int16_t sub{};   // degree subscript, e.g. x6 -> {X, 6}

    auto operator<=>(const GenName&) const = default;

    std::string str() const {
        const char* f = fam == Family::X ? "x" : fam == Family::Zeta ? "zeta" : "rho";
        return f + std::to_string(sub);
    }
};

inline GenName xg(int d) { return {Family::X, static_cast<std::int16_t>(d)}; }
inline GenName zg(int d) { return {Family::Zeta, static_cast<std::int16_t>(d)}; }
inline GenName rg(int d) { return {Family::Rho, static_cast<std::int16_t>(d)}; }

} // namespace hopf
