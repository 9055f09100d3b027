#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qcomb/errors.hpp"

namespace qcomb {

// Fixed variable registry. The alphabet is q, t, q1, q2, u, v, x1..xN, y1..yN
// with N = kMaxGrade. The numeric VarId doubles as the global variable order
// q < t < q1 < q2 < u < v < x1 < ... < y_N used by the monomial order and by
// canonical serialization.
using VarId = std::uint8_t;

inline constexpr int kMaxGrade = 16;

inline constexpr VarId kVarQ = 0;
inline constexpr VarId kVarT = 1;
inline constexpr VarId kVarQ1 = 2;
inline constexpr VarId kVarQ2 = 3;
inline constexpr VarId kVarU = 4;
inline constexpr VarId kVarV = 5;

inline constexpr VarId var_x(int i) {
    return static_cast<VarId>(6 + (i - 1));
}

inline constexpr VarId var_y(int j) {
    return static_cast<VarId>(6 + kMaxGrade + (j - 1));
}

inline constexpr VarId kVarCount = 6 + 2 * kMaxGrade;

inline bool is_x_var(VarId v) { return v >= 6 && v < 6 + kMaxGrade; }
inline bool is_y_var(VarId v) { return v >= 6 + kMaxGrade && v < kVarCount; }
inline int x_index(VarId v) { return int(v) - 6 + 1; }
inline int y_index(VarId v) { return int(v) - 6 - kMaxGrade + 1; }

inline std::string var_name(VarId v) {
    switch (v) {
        case kVarQ: return "q";
        case kVarT: return "t";
        case kVarQ1: return "q1";
        case kVarQ2: return "q2";
        case kVarU: return "u";
        case kVarV: return "v";
        default:
            if (is_x_var(v)) return "x" + std::to_string(x_index(v));
            if (is_y_var(v)) return "y" + std::to_string(y_index(v));
            throw index_out_of_range("variable id " + std::to_string(int(v)));
    }
}

inline std::optional<VarId> var_from_name(const std::string& s) {
    if (s == "q") return kVarQ;
    if (s == "t") return kVarT;
    if (s == "q1") return kVarQ1;
    if (s == "q2") return kVarQ2;
    if (s == "u") return kVarU;
    if (s == "v") return kVarV;
    if (s.size() >= 2 && (s[0] == 'x' || s[0] == 'y')) {
        int idx = 0;
        for (size_t k = 1; k < s.size(); ++k) {
            if (s[k] < '0' || s[k] > '9') return std::nullopt;
            idx = idx * 10 + (s[k] - '0');
        }
        if (idx < 1 || idx > kMaxGrade) return std::nullopt;
        return s[0] == 'x' ? var_x(idx) : var_y(idx);
    }
    return std::nullopt;
}

}  // namespace qcomb
