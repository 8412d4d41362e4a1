#ifndef CCX_POLYHEDRON_OPS_HPP
#define CCX_POLYHEDRON_OPS_HPP

#include <stdexcept>
#include <vector>

#include "ccx/double_description.hpp"
#include "ccx/fourier_motzkin.hpp"
#include "ccx/polyhedron.hpp"

namespace ccx {

/// Round-trips a generator form through constraints to drop redundant
/// generators and order everything canonically.
inline VPolyhedron canonical_generators(const VPolyhedron& V) {
    return to_generators(to_constraints(V));
}

/// conv(P.vertices + Q.vertices pairwise) + cone(P.rays, Q.rays), minimal.
inline VPolyhedron minkowski_sum(const VPolyhedron& P, const VPolyhedron& Q) {
    if (P.dim != Q.dim) throw std::invalid_argument("minkowski_sum: dimension mismatch");
    VPolyhedron S;
    S.dim = P.dim;
    if (P.is_empty() || Q.is_empty()) return S;
    for (const auto& p : P.vertices)
        for (const auto& q : Q.vertices) S.vertices.push_back(add(p, q));
    S.rays = P.rays;
    S.rays.insert(S.rays.end(), Q.rays.begin(), Q.rays.end());
    return canonical_generators(S);
}

inline VPolyhedron negated(const VPolyhedron& V) {
    VPolyhedron N;
    N.dim = V.dim;
    for (const auto& v : V.vertices) N.vertices.push_back(negate(v));
    for (const auto& r : V.rays) N.rays.push_back(negate(r));
    return N;
}

/// x |-> A x + shift applied to a generator form (rays are not shifted).
inline VPolyhedron affine_image(const VPolyhedron& P, const QMatrix& A, const QVector& shift) {
    if (A.cols() != P.dim) throw std::invalid_argument("affine_image: dimension mismatch");
    if (shift.size() != A.rows()) throw std::invalid_argument("affine_image: shift dimension mismatch");
    VPolyhedron img;
    img.dim = A.rows();
    if (P.is_empty()) return img;
    for (const auto& v : P.vertices) img.vertices.push_back(add(A.apply(v), shift));
    for (const auto& r : P.rays) {
        QVector w = A.apply(r);
        if (!is_zero(w)) img.rays.push_back(std::move(w));
    }
    return canonical_generators(img);
}

/// H-form overload; computed on the closure's generators, so strict inputs
/// describe the image of their closure.
inline VPolyhedron affine_image(const HPolyhedron& P, const QMatrix& A, const QVector& shift) {
    return affine_image(to_generators(P.relaxed()), A, shift);
}

inline VPolyhedron affine_image(const VPolyhedron& P, const QMatrix& A) {
    return affine_image(P, A, zero_vector(A.rows()));
}
inline VPolyhedron affine_image(const HPolyhedron& P, const QMatrix& A) {
    return affine_image(P, A, zero_vector(A.rows()));
}

/// Q subset of P, both CLOSED: every generator of Q satisfies P's rows
/// (vertices: a.v <= b; rays: a.r <= 0).
inline bool includes(const HPolyhedron& P, const HPolyhedron& Q) {
    if (P.has_strict() || Q.has_strict())
        throw std::invalid_argument("includes: OPEN inputs rejected");
    if (P.dim() != Q.dim()) throw std::invalid_argument("includes: dimension mismatch");
    VPolyhedron gen = to_generators(Q);
    if (gen.is_empty()) return true;
    for (const auto& v : gen.vertices)
        if (!contains_point(P, v)) return false;
    for (const auto& r : gen.rays)
        for (const auto& c : P.constraints())
            if (dot(c.a, r) > 0) return false;
    return true;
}

inline bool equal_closed(const HPolyhedron& P, const HPolyhedron& Q) {
    return includes(P, Q) && includes(Q, P);
}

/// Set equality for the calculus' uniformly open sets: equal closed
/// relaxations and both nonempty-open, or both empty.
inline bool equal_open(const HPolyhedron& P, const HPolyhedron& Q) {
    bool p_nonempty = is_strictly_feasible(P);
    bool q_nonempty = is_strictly_feasible(Q);
    if (p_nonempty != q_nonempty) return false;
    if (!p_nonempty) return true;
    return equal_closed(P.relaxed(), Q.relaxed());
}

/// Generator form of a cone (vertex 0 plus its generators as rays).
inline VPolyhedron cone_generators_form(const Cone& C) {
    VPolyhedron V;
    V.dim = C.dim;
    V.vertices.push_back(zero_vector(C.dim));
    for (const auto& g : C.generators)
        if (!is_zero(g)) V.rays.push_back(g);
    return V;
}

/// Constraint form {f : rows.f <= 0} of a finitely generated cone.
inline HPolyhedron cone_to_constraints(const Cone& C) {
    return to_constraints(cone_generators_form(C));
}

/// Exact membership f in cone(C): a nonnegative combination exists.
inline bool cone_contains(const Cone& C, const QVector& f) {
    if (f.size() != C.dim) throw std::invalid_argument("cone_contains: dimension mismatch");
    std::vector<Constraint> cs;
    const std::size_t k = C.generators.size();
    if (k == 0) return is_zero(f);
    // lambda in Q^k: sum lambda_i g_i = f, lambda >= 0
    for (std::size_t coord = 0; coord < C.dim; ++coord) {
        QVector row(k);
        for (std::size_t i = 0; i < k; ++i) row[i] = C.generators[i][coord];
        cs.push_back({row, f[coord], false});
        cs.push_back({negate(row), -f[coord], false});
    }
    for (std::size_t i = 0; i < k; ++i) cs.push_back({negate(unit_vector(k, i)), Rational(0), false});
    return feasible_point(HPolyhedron(k, std::move(cs))).has_value();
}

inline bool cone_equal(const Cone& A, const Cone& B) {
    for (const auto& g : A.generators)
        if (!cone_contains(B, g)) return false;
    for (const auto& g : B.generators)
        if (!cone_contains(A, g)) return false;
    return true;
}

/// Minkowski sum of cones: generators pooled.
inline Cone cone_sum(const Cone& A, const Cone& B) {
    if (A.dim != B.dim) throw std::invalid_argument("cone_sum: dimension mismatch");
    Cone S{A.dim, A.generators};
    S.generators.insert(S.generators.end(), B.generators.begin(), B.generators.end());
    return S;
}

} // namespace ccx

#endif
