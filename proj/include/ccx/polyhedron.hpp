#ifndef CCX_POLYHEDRON_HPP
#define CCX_POLYHEDRON_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ccx/linalg.hpp"
#include "ccx/lp.hpp"

namespace ccx {

/// Halfspace a.x <= b, or a.x < b when strict.
struct Constraint {
    QVector a;
    Rational b;
    bool strict = false;
};

inline bool operator==(const Constraint& l, const Constraint& r) {
    return l.strict == r.strict && l.b == r.b && l.a == r.a;
}

enum class Openness { Closed, Open };

namespace detail {

/// Scales (a, b) to a primitive integer row; positive factor only, so the
/// halfspace is unchanged.
inline void make_primitive(QVector& a, Rational& b) {
    BigInt lcm(1);
    for (const auto& q : a) lcm = lcm / gcd(lcm, denominator(q)) * denominator(q);
    lcm = lcm / gcd(lcm, denominator(b)) * denominator(b);
    BigInt content(0);
    for (auto& q : a) {
        q *= lcm;
        content = gcd(content, numerator(q));
    }
    b *= lcm;
    content = gcd(content, numerator(b));
    if (content > 1) {
        Rational inv{BigInt(1), content};
        inv.canonicalize();
        for (auto& q : a) q *= inv;
        b *= inv;
    }
}

/// Scales a direction vector to primitive integer form (positive factor).
inline QVector primitive_direction(QVector v) {
    BigInt lcm(1);
    for (const auto& q : v) lcm = lcm / gcd(lcm, denominator(q)) * denominator(q);
    BigInt content(0);
    for (auto& q : v) {
        q *= lcm;
        content = gcd(content, numerator(q));
    }
    if (content > 1) {
        Rational inv{BigInt(1), content};
        inv.canonicalize();
        for (auto& q : v) q *= inv;
    }
    return v;
}

inline bool constraint_less(const Constraint& l, const Constraint& r) {
    if (l.a != r.a) return lex_less(l.a, r.a);
    if (l.b != r.b) return l.b < r.b;
    return l.strict > r.strict;
}

} // namespace detail

/// Constraint-form convex polyhedron. Constraints are kept in a canonical
/// form: primitive integer rows, lexicographically sorted, zero rows either
/// dropped (trivially true) or collapsed to the canonical empty marker
/// 0.x <= -1 (unsatisfiable). Strictness is per constraint; the calculus
/// produces either all-closed or all-strict sets, but mixed systems arise
/// transiently (projections, lin of relatively open sets) and are legal.
class HPolyhedron {
  public:
    explicit HPolyhedron(std::size_t dim) : dim_(dim) {}
    HPolyhedron(std::size_t dim, std::vector<Constraint> cs) : dim_(dim) {
        bool unsat = false;
        std::vector<Constraint> kept;
        for (auto& c : cs) {
            if (c.a.size() != dim_) throw std::invalid_argument("polyhedron: constraint dimension mismatch");
            if (is_zero(c.a)) {
                bool ok = c.strict ? (c.b > 0) : (c.b >= 0);
                if (!ok) unsat = true;
                continue;
            }
            detail::make_primitive(c.a, c.b);
            kept.push_back(std::move(c));
        }
        if (unsat) {
            *this = empty(dim_);
            return;
        }
        std::sort(kept.begin(), kept.end(), detail::constraint_less);
        // adjacent duplicates: a.x < b implies a.x <= b, keep the strict one
        std::vector<Constraint> dedup;
        for (auto& c : kept) {
            if (!dedup.empty() && dedup.back().a == c.a && dedup.back().b == c.b) continue;
            dedup.push_back(std::move(c));
        }
        constraints_ = std::move(dedup);
    }

    static HPolyhedron whole_space(std::size_t dim) { return HPolyhedron(dim); }

    static HPolyhedron empty(std::size_t dim) {
        HPolyhedron p(dim);
        p.constraints_ = {Constraint{zero_vector(dim), Rational(-1), false}};
        p.marker_empty_ = true;
        return p;
    }

    std::size_t dim() const { return dim_; }
    const std::vector<Constraint>& constraints() const { return constraints_; }
    bool is_empty_marker() const { return marker_empty_; }

    bool has_strict() const {
        return std::any_of(constraints_.begin(), constraints_.end(),
                           [](const Constraint& c) { return c.strict; });
    }
    Openness openness() const { return has_strict() ? Openness::Open : Openness::Closed; }

    /// Closed relaxation: every strict flag dropped.
    HPolyhedron relaxed() const {
        if (marker_empty_) return *this;
        HPolyhedron p(dim_);
        p.constraints_ = constraints_;
        for (auto& c : p.constraints_) c.strict = false;
        return p;
    }

    /// All constraints strict (the "core" system of this representation).
    HPolyhedron strictified() const {
        if (marker_empty_) return *this;
        HPolyhedron p(dim_);
        p.constraints_ = constraints_;
        for (auto& c : p.constraints_) c.strict = true;
        return p;
    }

    HPolyhedron with_extra(std::vector<Constraint> extra) const {
        std::vector<Constraint> cs = constraints_;
        if (marker_empty_) return HPolyhedron(dim_, std::move(cs));
        for (auto& c : extra) cs.push_back(std::move(c));
        return HPolyhedron(dim_, std::move(cs));
    }

  private:
    std::size_t dim_;
    std::vector<Constraint> constraints_;
    bool marker_empty_ = false;
};

/// Generator-form polyhedron conv(vertices) + cone(rays); empty when it has
/// no vertices. "Vertices" are generator points: for pointed sets they are
/// the actual vertices, for sets with lineality they include a base point.
struct VPolyhedron {
    std::size_t dim = 0;
    std::vector<QVector> vertices;
    std::vector<QVector> rays;

    bool is_empty() const { return vertices.empty(); }
};

/// Finitely generated cone {sum lambda_i g_i : lambda_i >= 0}; contains 0.
struct Cone {
    std::size_t dim = 0;
    std::vector<QVector> generators;
};

/// Exact membership honoring strictness flags.
inline bool contains_point(const HPolyhedron& P, const QVector& x) {
    if (x.size() != P.dim()) throw std::invalid_argument("contains_point: dimension mismatch");
    for (const auto& c : P.constraints()) {
        Rational v = dot(c.a, x);
        if (c.strict ? !(v < c.b) : !(v <= c.b)) return false;
    }
    return true;
}

/// Block product P x Q; strictness preserved per factor.
inline HPolyhedron product(const HPolyhedron& P, const HPolyhedron& Q) {
    std::vector<Constraint> cs;
    for (const auto& c : P.constraints())
        cs.push_back({concat(c.a, zero_vector(Q.dim())), c.b, c.strict});
    for (const auto& c : Q.constraints())
        cs.push_back({concat(zero_vector(P.dim()), c.a), c.b, c.strict});
    return HPolyhedron(P.dim() + Q.dim(), std::move(cs));
}

/// Fixes coordinates [begin, begin+values.size()) to the given values and
/// returns the induced system on the remaining coordinates.
inline HPolyhedron substitute_block(const HPolyhedron& P, std::size_t begin, const QVector& values) {
    const std::size_t k = values.size();
    if (begin + k > P.dim()) throw std::invalid_argument("substitute_block: out of range");
    std::vector<Constraint> cs;
    for (const auto& c : P.constraints()) {
        QVector a;
        a.reserve(P.dim() - k);
        Rational b = c.b;
        for (std::size_t j = 0; j < P.dim(); ++j) {
            if (j >= begin && j < begin + k)
                b -= c.a[j] * values[j - begin];
            else
                a.push_back(c.a[j]);
        }
        cs.push_back({std::move(a), b, c.strict});
    }
    return HPolyhedron(P.dim() - k, std::move(cs));
}

// ---------------------------------------------------------------------------
// LP bridges

/// Optimizes f over the closed relaxation of P.
inline LPResult lp_over_closure(const HPolyhedron& P, const QVector& f, Sense sense) {
    LPProblem p;
    p.dim = P.dim();
    p.objective = f;
    p.sense = sense;
    for (const auto& c : P.constraints()) p.constraints.push_back({c.a, c.b, Relation::LessEq});
    return solve_lp(p);
}

/// Max-margin program deciding strict systems: maximize t subject to
/// a.x + t <= b on the margined rows and a.x <= b on the rest (t <= 1 keeps
/// it bounded). The system with its margined rows strict is satisfiable iff
/// the optimum is positive.
inline LPResult margin_lp(const HPolyhedron& P, bool margin_all_rows,
                          const std::vector<Constraint>& extra = {}) {
    const std::size_t n = P.dim();
    LPProblem p;
    p.dim = n + 1;
    p.objective = unit_vector(n + 1, n);
    p.sense = Sense::Maximize;
    auto add = [&](const Constraint& c) {
        QVector row = c.a;
        row.push_back((c.strict || margin_all_rows) ? Rational(1) : Rational(0));
        p.constraints.push_back({std::move(row), c.b, Relation::LessEq});
    };
    for (const auto& c : P.constraints()) add(c);
    for (const auto& c : extra) add(c);
    p.constraints.push_back({unit_vector(n + 1, n), Rational(1), Relation::LessEq});
    return solve_lp(p);
}

/// A point satisfying the mixed system (strict rows strictly), or nullopt.
inline std::optional<QVector> feasible_point(const HPolyhedron& P,
                                             const std::vector<Constraint>& extra = {}) {
    LPResult r = margin_lp(P, false, extra);
    if (r.status != LPStatus::Optimal || *r.optimum <= 0) return std::nullopt;
    QVector x(r.witness->begin(), r.witness->end() - 1);
    return x;
}

inline bool is_empty(const HPolyhedron& P) { return !feasible_point(P).has_value(); }

/// A point satisfying every nontrivial constraint strictly, or nullopt.
/// For a closed full-dimensional set this is an interior point.
inline std::optional<QVector> strictly_feasible_point(const HPolyhedron& P,
                                                      const std::vector<Constraint>& extra = {}) {
    LPResult r = margin_lp(P, true, extra);
    if (r.status != LPStatus::Optimal || *r.optimum <= 0) return std::nullopt;
    QVector x(r.witness->begin(), r.witness->end() - 1);
    return x;
}

inline bool is_strictly_feasible(const HPolyhedron& P) {
    return strictly_feasible_point(P).has_value();
}

/// LP-based redundancy removal: a constraint is dropped when the rest of the
/// system together with its negation is infeasible. Exact for mixed
/// strictness. Deterministic: constraints are tested in canonical order.
inline HPolyhedron irredundant(const HPolyhedron& P) {
    if (P.is_empty_marker()) return P;
    if (is_empty(P)) return HPolyhedron::empty(P.dim());
    std::vector<Constraint> kept = P.constraints();
    for (std::size_t i = 0; i < kept.size();) {
        std::vector<Constraint> rest;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) rest.push_back(kept[j]);
        // negation of a.x <= b is a.x > b; of a.x < b is a.x >= b
        Constraint neg{negate(kept[i].a), -kept[i].b, !kept[i].strict};
        rest.push_back(std::move(neg));
        HPolyhedron test(P.dim(), std::move(rest));
        if (!feasible_point(test).has_value()) {
            kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
    return HPolyhedron(P.dim(), std::move(kept));
}

} // namespace ccx

#endif
