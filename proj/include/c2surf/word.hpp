#pragma once

#include <array>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "surface.hpp"

namespace c2surf {

enum class BaseKind { Trivial, S2a, S21, S22, TAnti, TRot, TSpit, TRefl };

// Equivariant base space. Tanti(0), Tspit(0,2), Trefl(0,1) are stored as
// S2a, S22, S21 so that equal spaces compare equal.
class BaseSpace {
public:
    static BaseSpace trivial(Surface s) { return BaseSpace(BaseKind::Trivial, 0, 0, s); }
    static BaseSpace s2a() { return BaseSpace(BaseKind::S2a); }
    static BaseSpace s21() { return BaseSpace(BaseKind::S21); }
    static BaseSpace s22() { return BaseSpace(BaseKind::S22); }
    static BaseSpace anti(int g) {
        if (g < 0) throw DomainError("Tanti(g) needs g >= 0");
        return g == 0 ? s2a() : BaseSpace(BaseKind::TAnti, g);
    }
    static BaseSpace rot(int g) {
        if (g < 1 || g % 2 == 0) throw DomainError("Trot(g) needs g odd, got " + std::to_string(g));
        return BaseSpace(BaseKind::TRot, g);
    }
    static BaseSpace spit(int g, int f) {
        if (g < 0 || f < 2 || f > 2 + 2 * g || (2 + 2 * g - f) % 4 != 0)
            throw DomainError("Tspit(" + std::to_string(g) + "," + std::to_string(f) +
                              ") needs 2 <= F <= 2+2g and F = 2+2g mod 4");
        return g == 0 ? s22() : BaseSpace(BaseKind::TSpit, g, f);
    }
    static BaseSpace refl(int g, int c) {
        if (g < 0 || c < 1 || c > g + 1 || (g + 1 - c) % 2 != 0)
            throw DomainError("Trefl(" + std::to_string(g) + "," + std::to_string(c) +
                              ") needs 1 <= C <= g+1 and C = g+1 mod 2");
        return g == 0 ? s21() : BaseSpace(BaseKind::TRefl, g, c);
    }

    BaseKind kind() const { return kind_; }
    int g() const { return g_; }
    // F for TSpit, C for TRefl.
    int param() const { return param_; }
    const Surface& trivial_surface() const { return surface_; }
    bool is_trivial() const { return kind_ == BaseKind::Trivial; }

    int beta() const {
        switch (kind_) {
        case BaseKind::Trivial: return surface_.beta();
        case BaseKind::S2a:
        case BaseKind::S21:
        case BaseKind::S22: return 0;
        default: return 2 * g_;
        }
    }
    int fixed_points() const {
        if (kind_ == BaseKind::S22) return 2;
        if (kind_ == BaseKind::TSpit) return param_;
        return 0;
    }
    int ovals() const {
        if (kind_ == BaseKind::S21) return 1;
        if (kind_ == BaseKind::TRefl) return param_;
        return 0;
    }
    bool preserves_orientation() const {
        return kind_ == BaseKind::S22 || kind_ == BaseKind::TRot || kind_ == BaseKind::TSpit;
    }

    std::string str() const {
        switch (kind_) {
        case BaseKind::Trivial: return "Triv(" + surface_.str() + ")";
        case BaseKind::S2a: return "S2a";
        case BaseKind::S21: return "S21";
        case BaseKind::S22: return "S22";
        case BaseKind::TAnti: return "Tanti(" + std::to_string(g_) + ")";
        case BaseKind::TRot: return "Trot(" + std::to_string(g_) + ")";
        case BaseKind::TSpit: return "Tspit(" + std::to_string(g_) + "," + std::to_string(param_) + ")";
        case BaseKind::TRefl: return "Trefl(" + std::to_string(g_) + "," + std::to_string(param_) + ")";
        }
        return "?";
    }

    friend bool operator==(const BaseSpace&, const BaseSpace&) = default;
    friend auto operator<=>(const BaseSpace&, const BaseSpace&) = default;

private:
    explicit BaseSpace(BaseKind k, int g = 0, int param = 0, Surface s = {})
        : kind_(k), g_(g), param_(param), surface_(s) {}
    BaseKind kind_;
    int g_;
    int param_;
    Surface surface_;
};

enum class Op { DCC, DT, S10AT, S11AT, S1aAT, FM };
inline constexpr std::array<Op, 6> kAllOps{Op::DCC, Op::DT, Op::S10AT, Op::S11AT, Op::S1aAT, Op::FM};

inline const char* op_name(Op op) {
    switch (op) {
    case Op::DCC: return "DCC";
    case Op::DT: return "DT";
    case Op::S10AT: return "S10AT";
    case Op::S11AT: return "S11AT";
    case Op::S1aAT: return "S1aAT";
    case Op::FM: return "FM";
    }
    return "?";
}

// Base space plus a multiset of surgery operations.
class SurgeryWord {
public:
    explicit SurgeryWord(BaseSpace base) : base_(base) {}

    const BaseSpace& base() const { return base_; }
    int count(Op op) const { return n_[static_cast<std::size_t>(op)]; }
    int dcc() const { return count(Op::DCC); }
    int dt() const { return count(Op::DT); }
    int s10at() const { return count(Op::S10AT); }
    int s11at() const { return count(Op::S11AT); }
    int s1aat() const { return count(Op::S1aAT); }
    int fm() const { return count(Op::FM); }
    int total_ops() const {
        int t = 0;
        for (int k : n_) t += k;
        return t;
    }

    // Copy with k more (or, for negative k, fewer) copies of op. Not validated.
    SurgeryWord plus(Op op, int k = 1) const {
        SurgeryWord w = *this;
        w.n_[static_cast<std::size_t>(op)] += k;
        if (w.n_[static_cast<std::size_t>(op)] < 0) throw DomainError("negative operation count");
        return w;
    }
    SurgeryWord with_base(BaseSpace b) const {
        SurgeryWord w = *this;
        w.base_ = b;
        return w;
    }

    // Throws DomainError when operations are not applicable to the base.
    const SurgeryWord& validate() const {
        if (base_.is_trivial() && total_ops() > 0) throw DomainError("the trivial action admits no surgery");
        const int supply = base_.fixed_points() + 2 * s11at();
        if (fm() > supply)
            throw DomainError(std::string(fm() == 1 ? "1 [FM]" : std::to_string(fm()) + " [FM]") + " on " + str() +
                              " needs isolated fixed points but only " + std::to_string(supply) + " exist");
        return *this;
    }

    // Canonical text, operations in the order DCC, DT, S10AT, S11AT, S1aAT, FM.
    std::string str() const {
        std::string s = base_.str();
        for (Op op : kAllOps) {
            int k = count(op);
            if (k == 0) continue;
            s += '+';
            if (k > 1) s += std::to_string(k);
            s += op_name(op);
        }
        return s;
    }
    friend std::ostream& operator<<(std::ostream& os, const SurgeryWord& w) { return os << w.str(); }

    friend bool operator==(const SurgeryWord&, const SurgeryWord&) = default;
    friend auto operator<=>(const SurgeryWord&, const SurgeryWord&) = default;

private:
    BaseSpace base_;
    std::array<int, 6> n_{};
};

// ---- elementary invariants ----

struct FixedData {
    int F = 0;
    int Cplus = 0;
    int Cminus = 0;
    int C() const { return Cplus + Cminus; }
    friend bool operator==(const FixedData&, const FixedData&) = default;
};

enum class QSign { Plus, Minus };
enum class Epsilon { Separating, NonSeparating, NoFixedCircles };

inline char sign_char(QSign q) { return q == QSign::Plus ? '+' : '-'; }
inline const char* to_string(Epsilon e) {
    switch (e) {
    case Epsilon::Separating: return "separating";
    case Epsilon::NonSeparating: return "non-separating";
    case Epsilon::NoFixedCircles: return "no-ovals";
    }
    return "?";
}

inline int beta(const SurgeryWord& w) {
    return w.base().beta() + 2 * (w.dcc() + w.s10at() + w.s11at() + w.s1aat()) + 4 * w.dt() + w.fm();
}

inline FixedData fixed_data(const SurgeryWord& w) {
    w.validate();
    FixedData fd{w.base().fixed_points() + 2 * w.s11at(), w.base().ovals() + w.s10at(), 0};
    fd.F -= w.fm();
    fd.Cminus += w.fm();
    return fd;
}

// A crosscap pair or an S1a-antitube (a Moebius band downstairs) makes the
// quotient non-orientable.
inline QSign q_sign(const SurgeryWord& w) {
    w.validate();
    switch (w.base().kind()) {
    case BaseKind::Trivial: throw DomainError("Q-sign is defined only for nontrivial actions");
    case BaseKind::S2a:
    case BaseKind::TAnti: return QSign::Minus;
    default: break;
    }
    return (w.dcc() > 0 || w.s1aat() > 0) ? QSign::Minus : QSign::Plus;
}

inline bool orientability(const SurgeryWord& w) {
    w.validate();
    if (w.base().is_trivial()) return w.base().trivial_surface().orientable;
    if (w.dcc() > 0 || w.fm() > 0) return false;
    const bool pres = w.base().preserves_orientation();
    if (w.s11at() > 0 && !pres) return false;
    if ((w.s10at() > 0 || w.s1aat() > 0) && pres) return false;
    return true;
}

inline Surface underlying_surface(const SurgeryWord& w) {
    const int b = beta(w);
    if (orientability(w)) return Surface::torus(b / 2);
    return Surface::nonorientable(b);
}

inline Epsilon epsilon(const SurgeryWord& w) {
    if (w.base().is_trivial()) throw DomainError("epsilon is defined only for nontrivial actions");
    const FixedData fd = fixed_data(w);
    if (fd.C() == 0) return Epsilon::NoFixedCircles;
    const bool base_ok = w.base().kind() == BaseKind::S21 || w.base().kind() == BaseKind::TRefl;
    const bool ops_ok = w.s11at() == 0 && w.s1aat() == 0 && w.fm() == 0;
    return (fd.F == 0 && fd.Cminus == 0 && base_ok && ops_ok) ? Epsilon::Separating : Epsilon::NonSeparating;
}

// ---- text syntax:  BASE ( "+" COUNT? OP )* ----

namespace detail {

inline std::vector<int> parse_args(std::string_view inner, std::size_t arity, const std::string& ctx) {
    std::vector<int> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = inner.find(',', start);
        out.push_back(parse_nat(inner.substr(start, comma == std::string_view::npos ? inner.npos : comma - start), ctx));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (out.size() != arity) throw ParseError("wrong number of parameters in " + ctx);
    return out;
}

inline BaseSpace parse_base(std::string_view s) {
    const std::string ctx = "base '" + std::string(s) + "'";
    if (s == "S2a") return BaseSpace::s2a();
    if (s == "S21") return BaseSpace::s21();
    if (s == "S22") return BaseSpace::s22();
    const std::size_t open = s.find('(');
    if (open == std::string_view::npos || s.back() != ')') throw ParseError("unknown " + ctx);
    const std::string_view head = s.substr(0, open), inner = s.substr(open + 1, s.size() - open - 2);
    if (head == "Triv") return BaseSpace::trivial(parse_surface(inner));
    if (head == "Tanti") return BaseSpace::anti(parse_args(inner, 1, ctx)[0]);
    if (head == "Trot") return BaseSpace::rot(parse_args(inner, 1, ctx)[0]);
    if (head == "Tspit") {
        auto a = parse_args(inner, 2, ctx);
        return BaseSpace::spit(a[0], a[1]);
    }
    if (head == "Trefl") {
        auto a = parse_args(inner, 2, ctx);
        return BaseSpace::refl(a[0], a[1]);
    }
    throw ParseError("unknown " + ctx);
}

} // namespace detail

// Grammar violations raise ParseError. Out-of-range base parameters and
// unsatisfiable [FM] raise DomainError.
inline SurgeryWord parse_word(std::string_view text) {
    if (text.empty()) throw ParseError("empty word");
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t plus = text.find('+', start);
        parts.push_back(text.substr(start, plus == std::string_view::npos ? text.npos : plus - start));
        if (plus == std::string_view::npos) break;
        start = plus + 1;
    }
    SurgeryWord w(detail::parse_base(parts[0]));
    for (std::size_t i = 1; i < parts.size(); ++i) {
        std::string_view t = parts[i];
        std::size_t digits = 0;
        while (digits < t.size() && t[digits] >= '0' && t[digits] <= '9') ++digits;
        const std::string ctx = "operation '" + std::string(t) + "'";
        int k = 1;
        if (digits > 0) {
            if (t[0] == '0') throw ParseError("count must be positive in " + ctx);
            k = detail::parse_nat(t.substr(0, digits), ctx);
        }
        std::string_view name = t.substr(digits);
        bool found = false;
        for (Op op : kAllOps)
            if (name == op_name(op)) {
                w = w.plus(op, k);
                found = true;
            }
        if (!found) throw ParseError("unknown " + ctx);
    }
    w.validate();
    return w;
}

} // namespace c2surf
