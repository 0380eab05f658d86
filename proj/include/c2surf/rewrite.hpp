#pragma once

#include <functional>
#include <string>
#include <tuple>
#include <vector>

#include "word.hpp"

namespace c2surf {

struct RulePair {
    std::string rule;
    SurgeryWord lhs;
    SurgeryWord rhs;
};

// A parametric family of isomorphisms between words.
struct RewriteRule {
    std::string name;
    std::string schema;
    // All instances whose left side has beta <= max_beta.
    std::function<std::vector<RulePair>(int max_beta)> instances;
};

namespace detail {

inline SurgeryWord word(BaseSpace b, std::initializer_list<std::pair<Op, int>> ops = {}) {
    SurgeryWord w(b);
    for (auto [op, k] : ops) w = w.plus(op, k);
    return w;
}

// Every nontrivial base with beta <= max_beta.
inline std::vector<BaseSpace> all_bases(int max_beta) {
    std::vector<BaseSpace> out{BaseSpace::s2a(), BaseSpace::s21(), BaseSpace::s22()};
    for (int g = 1; 2 * g <= max_beta; ++g) {
        out.push_back(BaseSpace::anti(g));
        if (g % 2) out.push_back(BaseSpace::rot(g));
        for (int f = 2 + 2 * g; f >= 2; f -= 4) out.push_back(BaseSpace::spit(g, f));
        for (int c = g + 1; c >= 1; c -= 2) out.push_back(BaseSpace::refl(g, c));
    }
    return out;
}

} // namespace detail

inline std::vector<RewriteRule> rewrite_equivalences() {
    using detail::word;
    using B = BaseSpace;
    std::vector<RewriteRule> rules;
    auto add = [&](std::string name, std::string schema, std::function<void(int, std::vector<RulePair>&)> gen) {
        std::string n = name;
        rules.push_back({std::move(name), std::move(schema), [n, gen](int max_beta) {
                             std::vector<RulePair> out;
                             gen(max_beta, out);
                             std::vector<RulePair> kept;
                             for (auto& p : out)
                                 if (beta(p.lhs) <= max_beta) kept.push_back({n, p.lhs, p.rhs});
                             return kept;
                         }});
    };

    add("fundiso.dcc", "S22+DCC ~ S2a+S11AT", [](int, auto& out) {
        out.push_back({"", word(B::s22(), {{Op::DCC, 1}}), word(B::s2a(), {{Op::S11AT, 1}})});
    });
    add("fundiso.s1a", "S2a+S11AT ~ S22+S1aAT", [](int, auto& out) {
        out.push_back({"", word(B::s2a(), {{Op::S11AT, 1}}), word(B::s22(), {{Op::S1aAT, 1}})});
    });
    add("fundiso.t1", "S2a+DCC+S11AT ~ Tanti(1)+S11AT", [](int, auto& out) {
        out.push_back({"", word(B::s2a(), {{Op::DCC, 1}, {Op::S11AT, 1}}), word(B::anti(1), {{Op::S11AT, 1}})});
    });
    add("antitube.s1a", "S2a+S1aAT ~ Tanti(1)", [](int, auto& out) {
        out.push_back({"", word(B::s2a(), {{Op::S1aAT, 1}}), word(B::anti(1))});
    });
    add("double.s11", "S22+rDCC ~ S2a+(r-1)DCC+S11AT  (r >= 1)", [](int mb, auto& out) {
        for (int r = 1; 2 * r <= mb; ++r)
            out.push_back({"", word(B::s22(), {{Op::DCC, r}}), word(B::s2a(), {{Op::DCC, r - 1}, {Op::S11AT, 1}})});
    });
    add("anti.s11", "Tanti(g)+S11AT ~ S2a+gDCC+S11AT  (g >= 1)", [](int mb, auto& out) {
        for (int g = 1; 2 * g + 2 <= mb; ++g)
            out.push_back({"", word(B::anti(g), {{Op::S11AT, 1}}), word(B::s2a(), {{Op::DCC, g}, {Op::S11AT, 1}})});
    });
    add("anti.dcc", "Tanti(g)+sDCC ~ S2a+(g+s)DCC (g even) | Tanti(1)+(g+s-1)DCC (g odd)  (s >= 1)",
        [](int mb, auto& out) {
            for (int g = 1; 2 * g + 2 <= mb; ++g)
                for (int s = 1; 2 * g + 2 * s <= mb; ++s)
                    out.push_back({"", word(B::anti(g), {{Op::DCC, s}}),
                                   g % 2 == 0 ? word(B::s2a(), {{Op::DCC, g + s}})
                                              : word(B::anti(1), {{Op::DCC, g + s - 1}})});
        });
    add("rot.dcc", "Trot(g)+sDCC ~ Trot(1)+(g+s-1)DCC  (g odd, s >= 1)", [](int mb, auto& out) {
        for (int g = 1; 2 * g + 2 <= mb; g += 2)
            for (int s = 1; 2 * g + 2 * s <= mb; ++s)
                out.push_back({"", word(B::rot(g), {{Op::DCC, s}}), word(B::rot(1), {{Op::DCC, g + s - 1}})});
    });
    add("rot.anti", "Trot(g)+sDCC ~ Tanti(1)+(g+s-1)DCC  (g odd, s >= 1)", [](int mb, auto& out) {
        for (int g = 1; 2 * g + 2 <= mb; g += 2)
            for (int s = 1; 2 * g + 2 * s <= mb; ++s)
                out.push_back({"", word(B::rot(g), {{Op::DCC, s}}), word(B::anti(1), {{Op::DCC, g + s - 1}})});
    });
    add("dcc.torus", "X+DCC+DT ~ X+3DCC", [](int mb, auto& out) {
        for (const BaseSpace& x : detail::all_bases(mb - 6))
            out.push_back({"", word(x, {{Op::DCC, 1}, {Op::DT, 1}}), word(x, {{Op::DCC, 3}})});
    });
    add("free.torus", "Tanti(2g) ~ S2a+gDT, Tanti(2g+1) ~ Tanti(1)+gDT, Trot(2g+1) ~ Trot(1)+gDT",
        [](int mb, auto& out) {
            for (int g = 1; 4 * g <= mb; ++g) out.push_back({"", word(B::anti(2 * g)), word(B::s2a(), {{Op::DT, g}})});
            for (int g = 1; 4 * g + 2 <= mb; ++g) {
                out.push_back({"", word(B::anti(2 * g + 1)), word(B::anti(1), {{Op::DT, g}})});
                out.push_back({"", word(B::rot(2 * g + 1)), word(B::rot(1), {{Op::DT, g}})});
            }
        });
    add("spit.surgery", "Tspit(g,F) ~ S22+(F/2-1)S11AT+((2+2g-F)/4)DT", [](int mb, auto& out) {
        for (int g = 1; 2 * g <= mb; ++g)
            for (int f = 2 + 2 * g; f >= 2; f -= 4)
                out.push_back({"", word(B::spit(g, f)),
                               word(B::s22(), {{Op::S11AT, f / 2 - 1}, {Op::DT, (2 + 2 * g - f) / 4}})});
    });
    add("refl.surgery", "Trefl(g,C) ~ S21+(C-1)S10AT+((g+1-C)/2)DT", [](int mb, auto& out) {
        for (int g = 1; 2 * g <= mb; ++g)
            for (int c = g + 1; c >= 1; c -= 2)
                out.push_back({"", word(B::refl(g, c)),
                               word(B::s21(), {{Op::S10AT, c - 1}, {Op::DT, (g + 1 - c) / 2}})});
    });
    add("spit.rot", "Tspit(g,2+2g-4n) ~ S22+gS11AT (n = 0) | Trot(2n-1)+(g+1-2n)S11AT (n > 0)",
        [](int mb, auto& out) {
            for (int g = 1; 2 * g <= mb; ++g)
                for (int n = 0; 2 + 2 * g - 4 * n >= 2; ++n)
                    out.push_back({"", word(B::spit(g, 2 + 2 * g - 4 * n)),
                                   n == 0 ? word(B::s22(), {{Op::S11AT, g}})
                                          : word(B::rot(2 * n - 1), {{Op::S11AT, g + 1 - 2 * n}})});
        });
    add("s21.s11", "S21+S11AT ~ S22+S10AT", [](int, auto& out) {
        out.push_back({"", word(B::s21(), {{Op::S11AT, 1}}), word(B::s22(), {{Op::S10AT, 1}})});
    });
    return rules;
}

inline std::vector<RulePair> rewrite_instances(int max_beta) {
    std::vector<RulePair> out;
    for (const auto& rule : rewrite_equivalences()) {
        auto inst = rule.instances(max_beta);
        out.insert(out.end(), inst.begin(), inst.end());
    }
    return out;
}

namespace detail {

// Splits a torus base into a sphere or genus-one base plus surgery.
inline SurgeryWord expand_base(const SurgeryWord& w) {
    const BaseSpace& b = w.base();
    const int g = b.g();
    switch (b.kind()) {
    case BaseKind::TSpit:
        return w.with_base(BaseSpace::s22()).plus(Op::S11AT, b.param() / 2 - 1).plus(Op::DT, (2 + 2 * g - b.param()) / 4);
    case BaseKind::TRefl:
        return w.with_base(BaseSpace::s21()).plus(Op::S10AT, b.param() - 1).plus(Op::DT, (g + 1 - b.param()) / 2);
    case BaseKind::TAnti:
        return g % 2 == 0 ? w.with_base(BaseSpace::s2a()).plus(Op::DT, g / 2)
                          : w.with_base(BaseSpace::anti(1)).plus(Op::DT, g / 2);
    case BaseKind::TRot: return w.with_base(BaseSpace::rot(1)).plus(Op::DT, g / 2);
    default: return w;
    }
}

enum class Elem { S2a, S21, S22, T1anti, T1rot };

inline Elem elem(const BaseSpace& b) {
    switch (b.kind()) {
    case BaseKind::S2a: return Elem::S2a;
    case BaseKind::S21: return Elem::S21;
    case BaseKind::S22: return Elem::S22;
    case BaseKind::TAnti: return Elem::T1anti;
    default: return Elem::T1rot;
    }
}

inline int elem_rank(Elem e) {
    switch (e) {
    case Elem::S2a: return 0;
    case Elem::S22:
    case Elem::T1anti: return 1;
    case Elem::S21: return 2;
    case Elem::T1rot: return 3;
    }
    return 0;
}

// Lexicographic measure strictly decreased by every contraction step.
inline std::tuple<int, int, int, int> contraction_measure(const SurgeryWord& w) {
    const Elem e = elem(w.base());
    return {w.s1aat(), e == Elem::T1rot ? 1 : 0, w.dt(), elem_rank(e)};
}

// One oriented rewrite on a word over a sphere or genus-one base; false at a fixpoint.
inline bool contract_once(SurgeryWord& w) {
    const Elem e = elem(w.base());
    if (e == Elem::S22 && w.s1aat() > 0) {
        w = w.plus(Op::S1aAT, -1).plus(Op::DCC);
        return true;
    }
    if (e == Elem::S2a && w.s1aat() > 0) {
        w = w.with_base(BaseSpace::anti(1)).plus(Op::S1aAT, -1);
        return true;
    }
    if (w.dcc() > 0 && w.dt() > 0) {
        w = w.plus(Op::DT, -1).plus(Op::DCC, 2);
        return true;
    }
    if (e == Elem::S22 && w.dcc() > 0) {
        w = w.with_base(BaseSpace::s2a()).plus(Op::DCC, -1).plus(Op::S11AT);
        return true;
    }
    if (e == Elem::S21 && w.s11at() > 0) {
        w = w.with_base(BaseSpace::s22()).plus(Op::S11AT, -1).plus(Op::S10AT);
        return true;
    }
    if (e == Elem::T1anti && w.s11at() > 0) {
        w = w.with_base(BaseSpace::s2a()).plus(Op::DCC);
        return true;
    }
    if (e == Elem::T1rot && w.dcc() > 0) {
        w = w.with_base(BaseSpace::anti(1));
        return true;
    }
    if (e == Elem::S2a && w.s11at() > 0 && w.dt() > 0) {
        w = w.plus(Op::DT, -1).plus(Op::DCC, 2);
        return true;
    }
    if (e == Elem::T1rot && w.s11at() > 0) {
        w = w.with_base(BaseSpace::s22()).plus(Op::S11AT, -1).plus(Op::DT);
        return true;
    }
    return false;
}

// Re-absorbs [DT] and, where the result is a torus base, [S11AT]/[S10AT].
inline SurgeryWord fold_base(SurgeryWord w) {
    const int dt = w.dt();
    switch (elem(w.base())) {
    case Elem::S2a:
        if (dt > 0) w = w.with_base(BaseSpace::anti(2 * dt)).plus(Op::DT, -dt);
        break;
    case Elem::T1anti:
        if (dt > 0) w = w.with_base(BaseSpace::anti(1 + 2 * dt)).plus(Op::DT, -dt);
        break;
    case Elem::T1rot:
        if (dt > 0) w = w.with_base(BaseSpace::rot(1 + 2 * dt)).plus(Op::DT, -dt);
        break;
    case Elem::S22: {
        const int k = w.s11at();
        if (w.dcc() == 0 && k + dt > 0)
            w = w.with_base(BaseSpace::spit(k + 2 * dt, 2 * k + 2)).plus(Op::S11AT, -k).plus(Op::DT, -dt);
        break;
    }
    case Elem::S21: {
        const int k = w.s10at();
        if (w.dcc() == 0 && w.s11at() == 0 && k + dt > 0)
            w = w.with_base(BaseSpace::refl(k + 2 * dt, k + 1)).plus(Op::S10AT, -k).plus(Op::DT, -dt);
        break;
    }
    }
    return w;
}

} // namespace detail

// Rewrites toward the representative families produced by the classifier.
// Equal outputs imply isomorphic inputs; unequal outputs imply nothing.
inline SurgeryWord normalize(const SurgeryWord& input) {
    input.validate();
    if (input.base().is_trivial()) return input;
    SurgeryWord w = detail::expand_base(input);
    while (detail::contract_once(w)) {
    }
    w = detail::fold_base(w);
    w.validate();
    return w;
}

} // namespace c2surf
