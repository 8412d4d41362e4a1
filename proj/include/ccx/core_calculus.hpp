#ifndef CCX_CORE_CALCULUS_HPP
#define CCX_CORE_CALCULUS_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "ccx/polyhedron_ops.hpp"

namespace ccx {

/// Element of the algebraic dual, identified with Q^n via the dot pairing.
struct Functional {
    QVector coeffs;

    Rational operator()(const QVector& x) const { return dot(coeffs, x); }
};

/// Finite max of linear functionals: positively homogeneous and subadditive
/// by construction.
struct SublinearFunc {
    std::vector<QVector> pieces;

    Rational operator()(const QVector& x) const {
        if (pieces.empty()) throw std::invalid_argument("sublinear: no pieces");
        Rational best = dot(pieces.front(), x);
        for (std::size_t i = 1; i < pieces.size(); ++i) {
            Rational v = dot(pieces[i], x);
            if (v > best) best = v;
        }
        return best;
    }
};

struct SeparationResult {
    Functional functional;
    Rational level;
    QVector witness_lo;  // point of the first set with f below the level
    QVector witness_hi;  // point of the second with f at least the level
};

/// Separation is a mathematical outcome, not an error.
struct SeparationAttempt {
    enum class Outcome { Separated, Inseparable };
    Outcome outcome = Outcome::Inseparable;
    std::optional<SeparationResult> result;

    bool separated() const { return outcome == Outcome::Separated; }
};

/// Algebraic core. A polyhedral convex set has nonempty core exactly when
/// its constraint system is strictly satisfiable (max-margin LP positive);
/// the core is then the all-strict system. Lower-dimensional sets (implicit
/// equalities) and empty sets map to the empty set.
inline HPolyhedron core_of(const HPolyhedron& S) {
    if (!is_strictly_feasible(S)) return HPolyhedron::empty(S.dim());
    return irredundant(S.strictified());
}

/// Algebraic closure: every strict constraint relaxed. For a nonempty
/// convex set in Q^n this is lin(S) by the half-open segment argument;
/// lin of the empty set is empty.
inline HPolyhedron lin_of(const HPolyhedron& S) {
    if (is_empty(S)) return HPolyhedron::empty(S.dim());
    return S.relaxed();
}

/// 0 in core(S).
inline bool is_absorbing(const HPolyhedron& S) {
    return contains_point(core_of(S), zero_vector(S.dim()));
}

/// Minkowski gauge of an absorbing polyhedral set:
/// p_S(x) = max(0, max_i a_i.x / b_i); all b_i > 0 by absorption.
inline Rational gauge_eval(const HPolyhedron& S, const QVector& x) {
    if (!is_absorbing(S)) throw std::domain_error("gauge_eval: set is not absorbing");
    if (x.size() != S.dim()) throw std::invalid_argument("gauge_eval: dimension mismatch");
    Rational best = 0;
    for (const auto& c : S.constraints()) {
        Rational v = dot(c.a, x) / c.b;
        if (v > best) best = v;
    }
    return best;
}

/// The open sublevel set {x : p(x) < 1}; equals its own core.
inline HPolyhedron sublevel_open(const SublinearFunc& p, std::size_t dim) {
    std::vector<Constraint> cs;
    for (const auto& piece : p.pieces) cs.push_back({piece, Rational(1), true});
    return HPolyhedron(dim, std::move(cs));
}

/// Normal cone N(xbar; S) = cone of the closure's irredundant constraint
/// normals active at xbar. Computed on the closure (linear functionals are
/// continuous in Q^n, so N(xbar; S) = N(xbar; lin S)). nullopt encodes the
/// convention N(xbar; S) = emptyset for xbar outside the closure.
inline std::optional<Cone> normal_cone(const HPolyhedron& S, const QVector& xbar) {
    HPolyhedron T = lin_of(S);
    if (!contains_point(T, xbar)) return std::nullopt;
    T = irredundant(T);
    Cone C{S.dim(), {}};
    for (const auto& c : T.constraints())
        if (dot(c.a, xbar) == c.b) C.generators.push_back(c.a);
    return C;
}

/// Proper separation of a point from a convex set with nonempty core
/// (succeeds exactly when x0 is outside the core). The functional is the
/// first active (x0 in the closure) or violated (x0 outside) irredundant
/// constraint of the closure; the low witness is produced by one margin LP.
inline SeparationAttempt separate_point(const HPolyhedron& S, const QVector& x0) {
    if (x0.size() != S.dim()) throw std::invalid_argument("separate_point: dimension mismatch");
    HPolyhedron core = core_of(S);
    if (core.is_empty_marker() || is_empty(core))
        throw std::invalid_argument("separate_point: core of the set is empty");
    if (contains_point(core, x0)) return {SeparationAttempt::Outcome::Inseparable, std::nullopt};

    HPolyhedron T = irredundant(lin_of(S));
    QVector f;
    Rational level;
    if (contains_point(T, x0)) {
        for (const auto& c : T.constraints()) {
            if (dot(c.a, x0) == c.b) {
                f = c.a;
                level = c.b;
                break;
            }
        }
    } else {
        for (const auto& c : T.constraints()) {
            if (dot(c.a, x0) > c.b) {
                f = c.a;
                level = c.b;
                break;
            }
        }
    }
    if (f.empty()) throw std::logic_error("separate_point: no active or violated constraint");

    // point of S strictly below f(x0); exists because f is nonconstant on S
    Rational fx0 = dot(f, x0);
    auto lo = feasible_point(S, {Constraint{f, fx0, true}});
    if (!lo) throw std::logic_error("separate_point: no strict witness");
    SeparationResult r{Functional{f}, level, *lo, x0};
    return {SeparationAttempt::Outcome::Separated, r};
}

/// Proper separation of two sets with nonempty cores; succeeds exactly when
/// the cores are disjoint (strict feasibility LP on the combined system).
/// The functional separates 0 from the generator-form difference S1 - S2.
inline SeparationAttempt properly_separate(const HPolyhedron& S1, const HPolyhedron& S2) {
    if (S1.dim() != S2.dim()) throw std::invalid_argument("properly_separate: dimension mismatch");
    if (!is_strictly_feasible(S1) || !is_strictly_feasible(S2))
        throw std::invalid_argument("properly_separate: a core is empty");

    std::vector<Constraint> combined = S1.constraints();
    for (const auto& c : S2.constraints()) combined.push_back(c);
    if (is_strictly_feasible(HPolyhedron(S1.dim(), std::move(combined))))
        return {SeparationAttempt::Outcome::Inseparable, std::nullopt};

    VPolyhedron diff = minkowski_sum(to_generators(lin_of(S1)), negated(to_generators(lin_of(S2))));
    HPolyhedron D = to_constraints(diff);
    QVector origin = zero_vector(S1.dim());
    QVector f;
    if (contains_point(D, origin)) {
        for (const auto& c : D.constraints())
            if (c.b == 0) {
                f = c.a;
                break;
            }
    } else {
        for (const auto& c : D.constraints())
            if (c.b < 0) {
                f = c.a;
                break;
            }
    }
    if (f.empty()) throw std::logic_error("properly_separate: no separating constraint");

    LPResult hi = lp_over_closure(S1, f, Sense::Maximize);
    LPResult lo = lp_over_closure(S2, f, Sense::Minimize);
    if (hi.status != LPStatus::Optimal || lo.status != LPStatus::Optimal)
        throw std::logic_error("properly_separate: support values unbounded");
    Rational level = (*hi.optimum + *lo.optimum) / 2;

    // one of the two margin LPs must succeed: f is nonconstant on both sets
    std::optional<QVector> wlo = feasible_point(S1, {Constraint{f, level, true}});
    std::optional<QVector> whi;
    if (wlo) {
        whi = feasible_point(S2);
    } else {
        wlo = feasible_point(S1);
        whi = feasible_point(S2, {Constraint{negate(f), -level, true}});
    }
    if (!wlo || !whi) throw std::logic_error("properly_separate: witness search failed");
    SeparationResult r{Functional{f}, level, *wlo, *whi};
    return {SeparationAttempt::Outcome::Separated, r};
}

} // namespace ccx

#endif
