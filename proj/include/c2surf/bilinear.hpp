#pragma once

#include <cstdint>
#include <string>

#include "error.hpp"
#include "f2.hpp"

namespace c2surf {

enum class FormKind { SYMP, ODDO, EVO };
enum class StandardForm { Orthogonal, Symplectic };

inline const char* to_string(FormKind k) {
    switch (k) {
    case FormKind::SYMP: return "SYMP";
    case FormKind::ODDO: return "ODDO";
    case FormKind::EVO: return "EVO";
    }
    return "?";
}

// Nondegenerate symmetric bilinear form on F2^dim, given by its gram matrix.
class BilinearSpace {
public:
    explicit BilinearSpace(F2Matrix gram) : gram_(std::move(gram)) {
        if (!gram_.square()) throw DomainError("BilinearSpace: gram matrix not square");
        if (!gram_.is_symmetric()) throw DomainError("BilinearSpace: gram matrix not symmetric");
        if (!is_invertible(gram_)) throw DomainError("BilinearSpace: form is degenerate");
    }

    std::size_t dim() const { return gram_.rows(); }
    const F2Matrix& gram() const { return gram_; }

    bool b(std::uint64_t u, std::uint64_t v) const { return std::popcount(u & gram_.apply(v)) & 1; }
    bool b(const F2Vector& u, const F2Vector& v) const { return b(u.word(), v.word()); }

    // diag(G) packed, i.e. the values b(e_i, e_i).
    std::uint64_t diagonal() const {
        std::uint64_t d = 0;
        for (std::size_t i = 0; i < dim(); ++i) d |= std::uint64_t(gram_.get(i, i)) << i;
        return d;
    }

    friend bool operator==(const BilinearSpace&, const BilinearSpace&) = default;

private:
    F2Matrix gram_;
};

inline FormKind classify_space(const BilinearSpace& v) {
    if (v.diagonal() == 0) return FormKind::SYMP;
    return v.dim() % 2 ? FormKind::ODDO : FormKind::EVO;
}

// The unique Omega with b(v, Omega) = b(v, v): solves G·Omega = diag(G).
inline F2Vector omega_vector(const BilinearSpace& v) {
    return F2Vector::from_word(v.dim(), inverse(v.gram()).apply(v.diagonal()));
}

inline BilinearSpace standard_space(StandardForm kind, std::size_t dim) {
    if (kind == StandardForm::Orthogonal) return BilinearSpace(F2Matrix::identity(dim));
    if (dim % 2) throw DomainError("standard_space: symplectic dimension " + std::to_string(dim) + " is odd");
    F2Matrix g(dim, dim);
    for (std::size_t i = 0; i < dim; i += 2) {
        g.set(i, i + 1, true);
        g.set(i + 1, i, true);
    }
    return BilinearSpace(std::move(g));
}

inline bool is_isometry(const BilinearSpace& v, const F2Matrix& m) {
    return m.rows() == v.dim() && m.cols() == v.dim() && m.transpose() * v.gram() * m == v.gram();
}

// An isometry of order at most two.
class Involution {
public:
    const BilinearSpace& space() const { return space_; }
    const F2Matrix& matrix() const { return m_; }
    friend bool operator==(const Involution&, const Involution&) = default;

private:
    Involution(BilinearSpace s, F2Matrix m) : space_(std::move(s)), m_(std::move(m)) {}
    friend Involution make_involution(const BilinearSpace&, const F2Matrix&);
    BilinearSpace space_;
    F2Matrix m_;
};

inline Involution make_involution(const BilinearSpace& v, const F2Matrix& m) {
    if (m.rows() != v.dim() || m.cols() != v.dim())
        throw std::invalid_argument("make_involution: matrix shape does not match the space");
    if (!is_isometry(v, m)) throw DomainError("make_involution: not an isometry");
    if (!(m * m).is_identity()) throw DomainError("make_involution: not of order 2");
    return Involution(v, m);
}

} // namespace c2surf
