#pragma once

#include <charconv>
#include <ostream>
#include <string>
#include <string_view>

#include "error.hpp"

namespace c2surf {

// Closed surface T_g (orientable, genus g) or N_r (non-orientable, r crosscaps).
struct Surface {
    bool orientable = true;
    int genus = 0;

    static Surface torus(int g) {
        if (g < 0) throw DomainError("T_g needs g >= 0");
        return {true, g};
    }
    static Surface nonorientable(int r) {
        if (r < 1) throw DomainError("N_r needs r >= 1");
        return {false, r};
    }

    int beta() const { return orientable ? 2 * genus : genus; }
    int euler() const { return 2 - beta(); }

    std::string str() const { return (orientable ? "T" : "N") + std::to_string(genus); }
    friend std::ostream& operator<<(std::ostream& os, const Surface& s) { return os << s.str(); }
    friend bool operator==(const Surface&, const Surface&) = default;
    friend auto operator<=>(const Surface&, const Surface&) = default;
};

namespace detail {

inline int parse_nat(std::string_view s, const std::string& context) {
    if (s.empty() || s.size() > 9) throw ParseError("expected a number in " + context);
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || v < 0) throw ParseError("expected a number in " + context);
    return v;
}

} // namespace detail

// "T3" or "N5".
inline Surface parse_surface(std::string_view s) {
    const std::string ctx = "surface spec '" + std::string(s) + "'";
    if (s.size() < 2 || (s[0] != 'T' && s[0] != 'N')) throw ParseError("malformed " + ctx);
    int k = detail::parse_nat(s.substr(1), ctx);
    if (s[0] == 'T') return Surface::torus(k);
    if (k < 1) throw ParseError("malformed " + ctx + ": N_r needs r >= 1");
    return Surface::nonorientable(k);
}

} // namespace c2surf
