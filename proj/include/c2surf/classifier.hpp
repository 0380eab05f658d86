#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "bilinear.hpp"
#include "dd.hpp"
#include "error.hpp"
#include "rewrite.hpp"
#include "surface.hpp"
#include "word.hpp"

namespace c2surf {

struct Taxonomy {
    int F = 0;
    int Cplus = 0;
    int Cminus = 0;
    std::optional<QSign> q;

    int C() const { return Cplus + Cminus; }
    Taxonomy unsigned_part() const { return {F, Cplus, Cminus, std::nullopt}; }

    // "F,C:(C+,C-)" followed by the sign when present.
    std::string str() const {
        std::string s = std::to_string(F) + "," + std::to_string(C()) + ":(" + std::to_string(Cplus) + "," +
                        std::to_string(Cminus) + ")";
        if (q) s += *q == QSign::Plus ? ",+" : ",-";
        return s;
    }
    friend bool operator==(const Taxonomy&, const Taxonomy&) = default;
};

// Row order: F descending, then C ascending, then C+ descending.
inline auto taxonomy_order_key(const Taxonomy& t) { return std::make_tuple(-t.F, t.C(), -t.Cplus); }

inline bool scherrer_admissible(const Taxonomy& t, int beta) {
    if (t.F < 0 || t.Cplus < 0 || t.Cminus < 0 || beta < 0) return false;
    const int load = t.F + 2 * t.C();
    if (load > beta + 2) return false;
    if ((t.F - beta) % 2 != 0 || (t.Cminus - beta) % 2 != 0) return false;
    if (t.q == QSign::Minus && load > beta) return false;
    return true;
}

struct Action {
    SurgeryWord word;
    Surface surface;
    Taxonomy taxonomy;
    std::optional<Epsilon> epsilon;  // absent for the trivial action
    std::optional<DDTuple> dd;

    bool trivial() const { return word.base().is_trivial(); }
};

inline std::optional<DDTuple> dd_of_action(const Action& a);

inline Action make_action(const SurgeryWord& w) {
    w.validate();
    Action a{w, underlying_surface(w), {}, std::nullopt, std::nullopt};
    if (!w.base().is_trivial()) {
        const FixedData fd = fixed_data(w);
        a.taxonomy = {fd.F, fd.Cplus, fd.Cminus, q_sign(w)};
        a.epsilon = epsilon(w);
    }
    a.dd = dd_of_action(a);
    return a;
}

// ---- DD of surgery representatives ----

namespace detail {

// On odd orthogonal spaces b(v,v) = b(v,Omega) vanishes on <Omega>^perp, so alpha(Id) = 0.
inline DDTuple identity_dd(const Surface& s) {
    if (s.orientable || s.beta() % 2) return {0, 0, 0, 0};
    return {0, 1, 1, 0};
}

// DD of the induced map on mod-2 cohomology, for orientable normal-form words
// with a known value.
inline std::optional<DDTuple> orientable_dd(const SurgeryWord& w) {
    if (w.base().is_trivial()) return identity_dd(w.base().trivial_surface());
    const BaseKind k = w.base().kind();
    if (w.total_ops() == 0) {
        if (k == BaseKind::S2a || k == BaseKind::S21 || k == BaseKind::S22) return DDTuple{0, 0, 0, 0};
        if (w.base().g() == 1) return DDTuple{0, 0, 0, 0};
        return std::nullopt;
    }
    if (w.total_ops() == w.s10at()) {
        if (k == BaseKind::S2a) return DDTuple{1, 1, 1, 1};
        if (k == BaseKind::TAnti && w.base().g() == 1) return DDTuple{2, 1, 2, 1};
    }
    return std::nullopt;
}

inline std::optional<DDTuple> klein_dd(const SurgeryWord& w) {
    static const std::vector<std::pair<std::string, DDTuple>> table{
        {"S2a+DCC", {1, 0, 0, 1}},   {"S21+DCC", {1, 0, 0, 1}},    {"S2a+S11AT", {1, 0, 0, 1}},
        {"S22+S10AT", {0, 1, 1, 0}}, {"S22+2FM", {0, 1, 1, 0}},
    };
    const std::string s = w.str();
    for (const auto& [word, value] : table)
        if (word == s) return value;
    return std::nullopt;
}

} // namespace detail

inline std::optional<DDTuple> dd_of_action(const Action& a) {
    if (a.trivial()) return detail::identity_dd(a.surface);
    const SurgeryWord w = normalize(a.word);
    if (a.surface == Surface::nonorientable(2)) return detail::klein_dd(w);
    if (a.surface.orientable) return detail::orientable_dd(w);
    if (w.dcc() == 0) return std::nullopt;
    const SurgeryWord rest = w.plus(Op::DCC, -w.dcc());
    if (!orientability(rest)) return std::nullopt;
    auto base = detail::orientable_dd(normalize(rest));
    if (!base) return std::nullopt;
    return dd_direct_sum(*base, w.dcc());
}

// ---- enumeration ----

inline std::vector<Action> enumerate_sphere() {
    return {make_action(SurgeryWord(BaseSpace::trivial(Surface::torus(0)))), make_action(SurgeryWord(BaseSpace::s2a())),
            make_action(SurgeryWord(BaseSpace::s21())), make_action(SurgeryWord(BaseSpace::s22()))};
}

inline void sort_actions(std::vector<Action>& v) {
    std::stable_sort(v.begin(), v.end(), [](const Action& a, const Action& b) {
        if (a.trivial() != b.trivial()) return b.trivial();
        if (a.trivial()) return false;
        auto ka = taxonomy_order_key(a.taxonomy), kb = taxonomy_order_key(b.taxonomy);
        if (ka != kb) return ka < kb;
        return a.taxonomy.q == QSign::Minus && b.taxonomy.q == QSign::Plus;
    });
}

inline std::vector<Action> enumerate_torus(int g, bool include_trivial = true) {
    if (g < 0) throw DomainError("enumerate_torus: g must be >= 0");
    std::vector<SurgeryWord> words{SurgeryWord(BaseSpace::anti(g))};
    if (g % 2) words.emplace_back(BaseSpace::rot(g));
    for (int c = 1; c <= g + 1; ++c)
        if ((g + 1 - c) % 2 == 0) words.emplace_back(BaseSpace::refl(g, c));
    for (int f = 2; f <= 2 + 2 * g; ++f)
        if ((2 + 2 * g - f) % 4 == 0) words.emplace_back(BaseSpace::spit(g, f));
    for (int c = 1; c <= g; ++c) words.push_back(SurgeryWord(BaseSpace::anti(g - c)).plus(Op::S10AT, c));
    std::vector<Action> out;
    out.reserve(words.size() + 1);
    for (const auto& w : words) out.push_back(make_action(w));
    if (include_trivial) out.push_back(make_action(SurgeryWord(BaseSpace::trivial(Surface::torus(g)))));
    sort_actions(out);
    return out;
}

// One Scherrer tuple with the actions realizing it, split by Q-sign.
struct TaxonomyRow {
    int F = 0;
    int Cplus = 0;
    int Cminus = 0;
    std::vector<Action> minus;
    std::vector<Action> plus;
    int C() const { return Cplus + Cminus; }
    bool empty() const { return minus.empty() && plus.empty(); }
};

// All tuples with F+2C <= r+2 and F = C- = r (mod 2), in table order, each
// filled with the representatives the enumeration algorithm emits.
inline std::vector<TaxonomyRow> nonorientable_rows(int r) {
    if (r < 1) throw DomainError("enumerate_nonorientable: r must be >= 1");
    std::vector<TaxonomyRow> rows;
    auto w = [](BaseSpace b) { return SurgeryWord(b); };
    for (int F = r + 2; F >= 0; --F) {
        if ((F - r) % 2) continue;
        for (int C = 0; F + 2 * C <= r + 2; ++C)
            for (int Cp = C; Cp >= 0; --Cp) {
                const int Cm = C - Cp;
                if ((Cm - r) % 2) continue;
                TaxonomyRow row{F, Cp, Cm, {}, {}};
                const int load = F + 2 * C;
                if (load <= r && (Cm > 0 || F > 0))
                    row.minus.push_back(make_action(w(BaseSpace::s2a())
                                                        .plus(Op::DCC, (r - load) / 2)
                                                        .plus(Op::S11AT, (F + Cm) / 2)
                                                        .plus(Op::S10AT, Cp)
                                                        .plus(Op::FM, Cm)));
                if ((load - r - 2) % 4 == 0 && (Cm > 0 || (0 < F && F <= r && C >= 1)))
                    row.plus.push_back(make_action(
                        w(BaseSpace::spit((r - Cm - 2 * Cp) / 2, F + Cm)).plus(Op::S10AT, Cp).plus(Op::FM, Cm)));
                if (F == 0 && Cm == 0 && r % 2 == 0) {
                    const int h = r / 2;
                    if (C > 0 && C <= h && (2 * C - r - 2) % 4 == 0)
                        row.plus.push_back(make_action(w(BaseSpace::rot(h - C)).plus(Op::S10AT, C)));
                    if (C <= h) {
                        if (C >= 1)
                            row.minus.push_back(
                                make_action(w(BaseSpace::s21()).plus(Op::DCC, h - C + 1).plus(Op::S10AT, C - 1)));
                        if (C < h)
                            row.minus.push_back(make_action(w(BaseSpace::s2a()).plus(Op::DCC, h - C).plus(Op::S10AT, C)));
                        if (C < h - 1)
                            row.minus.push_back(
                                make_action(w(BaseSpace::anti(1)).plus(Op::DCC, h - C - 1).plus(Op::S10AT, C)));
                    }
                }
                rows.push_back(std::move(row));
            }
    }
    return rows;
}

inline std::vector<Action> enumerate_nonorientable(int r, bool include_trivial = true) {
    std::vector<Action> out;
    for (auto& row : nonorientable_rows(r)) {
        for (auto& a : row.minus) out.push_back(std::move(a));
        for (auto& a : row.plus) out.push_back(std::move(a));
    }
    if (include_trivial) out.push_back(make_action(SurgeryWord(BaseSpace::trivial(Surface::nonorientable(r)))));
    return out;
}

// Grouped layout: "F,C:(C+,C-) | #- | #+ | words- | words+", zero counts blank.
inline std::vector<std::string> taxonomy_table(int r) {
    std::vector<std::string> lines{"N" + std::to_string(r) + " | - | + | - | +"};
    auto join = [](const std::vector<Action>& v) {
        std::string s;
        for (const auto& a : v) s += (s.empty() ? "" : ", ") + a.word.str();
        return s;
    };
    auto num = [](std::size_t n) { return n ? std::to_string(n) : std::string(); };
    for (const auto& row : nonorientable_rows(r)) {
        Taxonomy t{row.F, row.Cplus, row.Cminus, std::nullopt};
        lines.push_back(t.str() + " | " + num(row.minus.size()) + " | " + num(row.plus.size()) + " | " + join(row.minus) +
                        " | " + join(row.plus));
    }
    return lines;
}

inline std::vector<Action> enumerate_surface(const Surface& s, bool include_trivial = true) {
    return s.orientable ? enumerate_torus(s.genus, include_trivial) : enumerate_nonorientable(s.genus, include_trivial);
}

// ---- isomorphism decision ----

inline bool decide_isomorphic(const Action& a, const Action& b) {
    if (!(a.surface == b.surface)) return false;
    if (a.trivial() || b.trivial()) return a.trivial() && b.trivial();
    if (!(a.taxonomy == b.taxonomy)) return false;
    const Taxonomy& t = a.taxonomy;
    const bool ambiguous = !a.surface.orientable && t.F == 0 && t.Cminus == 0 && t.q == QSign::Minus;
    if (!ambiguous) return true;
    if (a.epsilon != b.epsilon) return false;
    auto da = a.dd ? a.dd : dd_of_action(a);
    auto db = b.dd ? b.dd : dd_of_action(b);
    if (da && db) return *da == *db;
    // Within such a taxonomy at most one action is separating.
    if (a.epsilon == Epsilon::Separating) return true;
    throw UndecidableError("decide_isomorphic: DD unavailable for " + a.word.str() + " or " + b.word.str() +
                           "; undecidable with known formulas");
}

} // namespace c2surf
