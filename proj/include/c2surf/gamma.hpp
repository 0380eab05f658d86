#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "classifier.hpp"
#include "error.hpp"
#include "gl2.hpp"
#include "word.hpp"

namespace c2surf {

enum class GammaSurface { Sphere, Torus, Klein };

inline GammaSurface parse_gamma_surface(const std::string& s) {
    if (s == "sphere" || s == "T0") return GammaSurface::Sphere;
    if (s == "torus" || s == "T1") return GammaSurface::Torus;
    if (s == "klein" || s == "N2") return GammaSurface::Klein;
    throw DomainError("gamma_table: unsupported surface '" + s + "'; only sphere, torus and Klein bottle");
}

// Affine model v -> A v + t on R^2/Z^2; only the linear part acts on H_1.
struct TorusModel {
    SurgeryWord word;
    IntMatrix2 linear;
};

inline std::vector<TorusModel> torus_models() {
    return {
        {SurgeryWord(BaseSpace::trivial(Surface::torus(1))), {1, 0, 0, 1}},
        {SurgeryWord(BaseSpace::anti(1)), {1, 0, 0, -1}},       // (x,y) -> (x+1/2, -y)
        {SurgeryWord(BaseSpace::rot(1)), {1, 0, 0, 1}},         // (x,y) -> (x+1/2, y)
        {SurgeryWord(BaseSpace::spit(1, 4)), {-1, 0, 0, -1}},   // v -> -v
        {SurgeryWord(BaseSpace::refl(1, 2)), {1, 0, 0, -1}},    // (x,y) -> (x, -y)
        {SurgeryWord(BaseSpace::s2a()).plus(Op::S10AT, 1), {0, 1, 1, 0}},  // (x,y) -> (y,x)
    };
}

struct GammaRow {
    SurgeryWord word;
    std::string datum;
};

inline std::string psi_str(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

inline std::vector<GammaRow> gamma_table(GammaSurface s) {
    std::vector<GammaRow> out;
    switch (s) {
    case GammaSurface::Sphere:
        for (const Action& a : enumerate_sphere()) {
            const bool keeps = a.trivial() || a.word.base().preserves_orientation();
            out.push_back({a.word, keeps ? "+1" : "-1"});
        }
        break;
    case GammaSurface::Torus:
        for (const TorusModel& m : torus_models()) out.push_back({m.word, to_string(gl2_class(m.linear))});
        break;
    case GammaSurface::Klein: {
        auto w = [](BaseSpace b) { return SurgeryWord(b); };
        out = {
            {w(BaseSpace::s2a()).plus(Op::DCC, 1), psi_str(-1, -1)},
            {w(BaseSpace::s21()).plus(Op::DCC, 1), psi_str(1, -1)},
            {w(BaseSpace::s2a()).plus(Op::S11AT, 1), psi_str(-1, -1)},
            {w(BaseSpace::s22()).plus(Op::S10AT, 1), psi_str(-1, 1)},
            {w(BaseSpace::s22()).plus(Op::FM, 2), psi_str(1, 1)},
            {w(BaseSpace::trivial(Surface::nonorientable(2))), psi_str(1, 1)},
        };
        break;
    }
    }
    return out;
}

// Number of actions over each mapping class.
inline std::map<std::string, int> gamma_fibers(GammaSurface s) {
    std::map<std::string, int> f;
    for (const GammaRow& r : gamma_table(s)) ++f[r.datum];
    return f;
}

} // namespace c2surf
