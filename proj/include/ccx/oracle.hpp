#ifndef CCX_ORACLE_HPP
#define CCX_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "ccx/functions.hpp"

namespace ccx {

struct Seed {
    std::uint64_t value = 0;
};

/// SplitMix64. The stream is fixed by the algorithm, not the platform, so a
/// seed pins every generated instance byte for byte.
class SplitMix64 {
  public:
    explicit SplitMix64(Seed s) : state_(s.value) {}
    explicit SplitMix64(std::uint64_t s) : state_(s) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-enough residue draw; determinism is what matters here.
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    long int_in(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    Rational rational(long bound) {
        long num = int_in(-bound, bound);
        long den = int_in(1, bound);
        return make_rational(num, den);
    }

    QVector vector(std::size_t dim, long bound) {
        QVector v(dim);
        for (auto& q : v) q = rational(bound);
        return v;
    }

    QVector nonzero_vector(std::size_t dim, long bound) {
        for (;;) {
            QVector v = vector(dim, bound);
            if (!is_zero(v)) return v;
        }
    }

    QVector integer_vector(std::size_t dim, long bound) {
        QVector v(dim);
        for (auto& q : v) q = Rational(int_in(-bound, bound));
        return v;
    }

    QVector nonzero_integer_vector(std::size_t dim, long bound) {
        for (;;) {
            QVector v = integer_vector(dim, bound);
            if (!is_zero(v)) return v;
        }
    }

  private:
    std::uint64_t state_;
};

enum class InstanceKind { Set, Map, Function, MultiSetSharedCore };

/// Desk-scale budgets: dim <= 4, at most 16 constraints, coefficient
/// numerators and denominators bounded by 16.
struct InstanceSpec {
    std::size_t dim = 2;
    std::size_t constraint_budget = 8;
    long coeff_bound = 4;
    InstanceKind kind = InstanceKind::Set;
    std::size_t set_count = 2;  // MultiSetSharedCore only
};

namespace oracle_detail {

inline Constraint normalized(QVector a, Rational b, bool strict = false) {
    detail::make_primitive(a, b);
    return {std::move(a), std::move(b), strict};
}

} // namespace oracle_detail

/// Bounded full-dimensional set: a box around a rational center intersected
/// with random halfspaces, each kept only when the margin LP still certifies
/// strict feasibility.
inline HPolyhedron generate_set(const InstanceSpec& spec, SplitMix64& rng) {
    const std::size_t n = spec.dim;
    QVector center = rng.vector(n, 2);
    long halfwidth = rng.int_in(1, 3);
    std::vector<Constraint> cs;
    for (std::size_t i = 0; i < n; ++i) {
        cs.push_back({unit_vector(n, i), center[i] + halfwidth, false});
        cs.push_back({negate(unit_vector(n, i)), halfwidth - center[i], false});
    }
    std::size_t extra = spec.constraint_budget > 2 * n ? spec.constraint_budget - 2 * n : 0;
    extra = rng.below(extra + 1);
    for (std::size_t e = 0; e < extra; ++e) {
        QVector a = rng.nonzero_integer_vector(n, spec.coeff_bound);
        Rational delta = make_rational(rng.int_in(1, 8), 4);
        Constraint cand{a, dot(a, center) + delta, false};
        std::vector<Constraint> trial = cs;
        trial.push_back(cand);
        HPolyhedron t(n, trial);
        if (is_strictly_feasible(t)) cs.push_back(cand);
    }
    return HPolyhedron(n, std::move(cs));
}

/// Sets whose cores all contain `shared` with margin >= 1/4 on every
/// normalized row (the box rows carry margin >= 1 by construction).
inline HPolyhedron generate_set_around(const InstanceSpec& spec, SplitMix64& rng,
                                       const QVector& shared) {
    const std::size_t n = spec.dim;
    long halfwidth = rng.int_in(1, 3);
    std::vector<Constraint> cs;
    for (std::size_t i = 0; i < n; ++i) {
        cs.push_back({unit_vector(n, i), shared[i] + halfwidth, false});
        cs.push_back({negate(unit_vector(n, i)), halfwidth - shared[i], false});
    }
    std::size_t extra = spec.constraint_budget > 2 * n ? spec.constraint_budget - 2 * n : 0;
    extra = rng.below(extra + 1);
    const Rational quarter = make_rational(1, 4);
    for (std::size_t e = 0; e < extra; ++e) {
        QVector a = rng.nonzero_integer_vector(n, spec.coeff_bound);
        Rational delta = make_rational(rng.int_in(1, 8), 4);
        Constraint cand = oracle_detail::normalized(a, dot(a, shared) + delta);
        for (int tries = 0; tries < 3 && cand.b - dot(cand.a, shared) < quarter; ++tries) {
            delta *= 4;
            cand = oracle_detail::normalized(a, dot(a, shared) + delta);
        }
        if (cand.b - dot(cand.a, shared) < quarter) continue;
        cs.push_back(cand);
    }
    return HPolyhedron(n, std::move(cs));
}

struct SharedCoreFamily {
    QVector shared;
    std::vector<HPolyhedron> sets;
};

inline SharedCoreFamily generate_shared_core_sets(const InstanceSpec& spec, SplitMix64& rng) {
    SharedCoreFamily fam;
    fam.shared = rng.vector(spec.dim, 2);
    for (std::size_t i = 0; i < spec.set_count; ++i)
        fam.sets.push_back(generate_set_around(spec, rng, fam.shared));
    return fam;
}

/// Convex-graph map whose graph strictly contains (anchor_x, anchor_y).
inline SetValuedMap generate_map_around(std::size_t nx, std::size_t ny, const InstanceSpec& spec,
                                        SplitMix64& rng, const QVector& anchor) {
    InstanceSpec s = spec;
    s.dim = nx + ny;
    return SetValuedMap(nx, ny, generate_set_around(s, rng, anchor));
}

/// Max-affine function with a box domain strictly containing `anchor`; the
/// epigraph core is nonempty by construction.
inline PolyhedralFunction generate_function_around(std::size_t dim, const InstanceSpec& spec,
                                                   SplitMix64& rng, const QVector& anchor) {
    std::size_t piece_count = 1 + rng.below(3);
    std::vector<std::pair<QVector, Rational>> pieces;
    for (std::size_t i = 0; i < piece_count; ++i)
        pieces.emplace_back(rng.vector(dim, spec.coeff_bound), rng.rational(spec.coeff_bound));
    InstanceSpec s = spec;
    s.dim = dim;
    HPolyhedron domain = generate_set_around(s, rng, anchor);
    return PolyhedralFunction::from_max_affine(dim, pieces, domain);
}

/// Dispatcher used by the CLI-facing generators; kinds needing anchors pick
/// a small rational anchor themselves.
inline HPolyhedron generate_instance_set(const InstanceSpec& spec, SplitMix64& rng) {
    if (spec.kind == InstanceKind::MultiSetSharedCore)
        return generate_shared_core_sets(spec, rng).sets.front();
    return generate_set(spec, rng);
}

/// All (dim)-subsets of constraint rows solved exactly; shares nothing with
/// the double description path. A polyhedron whose normals do not span the
/// space has no vertices at all: that is reported, not an error.
struct VertexEnumeration {
    std::vector<QVector> vertices;
    bool lineality_warning = false;
};

inline VertexEnumeration enumerate_vertices_bruteforce(const HPolyhedron& P) {
    if (P.has_strict())
        throw std::invalid_argument("enumerate_vertices_bruteforce: CLOSED input required");
    if (P.dim() > 3 || P.constraints().size() > 12)
        throw std::invalid_argument("enumerate_vertices_bruteforce: budget exceeded");
    VertexEnumeration out;
    const std::size_t d = P.dim();
    const auto& cs = P.constraints();
    if (P.is_empty_marker()) return out;

    std::vector<QVector> normals;
    for (const auto& c : cs) normals.push_back(c.a);
    if (rank(QMatrix::from_rows(normals)) < d) {
        out.lineality_warning = true;
        return out;
    }

    std::vector<std::size_t> idx(d);
    auto visit = [&](const std::vector<std::size_t>& subset) {
        QMatrix A(d, d);
        QVector b(d);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) A.at(i, j) = cs[subset[i]].a[j];
            b[i] = cs[subset[i]].b;
        }
        if (rank(A) != d) return;
        auto x = solve_linear_system(A, b);
        if (x && contains_point(P, *x)) out.vertices.push_back(*x);
    };
    // lexicographic subset enumeration
    std::vector<std::size_t> subset;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (subset.size() == d) {
            visit(subset);
            return;
        }
        for (std::size_t i = start; i < cs.size(); ++i) {
            subset.push_back(i);
            self(self, i + 1);
            subset.pop_back();
        }
    };
    if (d == 0) {
        // the 0-dimensional space: the single point is a vertex when feasible
        if (!is_empty(P)) out.vertices.push_back(QVector{});
        return out;
    }
    rec(rec, 0);
    std::sort(out.vertices.begin(), out.vertices.end(), lex_less);
    out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
    return out;
}

/// Direct finite transcription of the core definition: x lies in S and for
/// each constraint-normal direction, a symmetric rational step stays in S.
/// Exact for polyhedra.
inline bool check_core_definitional(const HPolyhedron& S, const QVector& x) {
    if (x.size() != S.dim()) throw std::invalid_argument("check_core_definitional: dimension mismatch");
    if (!contains_point(S, x)) return false;
    for (const auto& dir : S.constraints()) {
        for (int s : {1, -1}) {
            QVector v = scale(Rational(s), dir.a);
            // x + t v stays in S for small |t| iff every active row is flat on v
            for (const auto& c : S.constraints())
                if (dot(c.a, x) == c.b && dot(c.a, v) != 0) return false;
        }
    }
    return true;
}

/// Subgradient test straight from the inequality: f is a subgradient at xbar
/// iff min over the epigraph of (t - f.x) equals phi(xbar) - f.xbar.
inline bool check_subgradient_definitional(const PolyhedralFunction& phi, const QVector& xbar,
                                           const QVector& f) {
    ExtendedValue v = phi.evaluate(xbar);
    if (!v.is_finite())
        throw std::invalid_argument("check_subgradient_definitional: value not finite");
    QVector obj = negate(f);
    obj.push_back(Rational(1));
    LPResult r = lp_over_closure(phi.epigraph(), obj, Sense::Minimize);
    if (r.status != LPStatus::Optimal) return false;
    return *r.optimum == v.value - dot(f, xbar);
}

} // namespace ccx

#endif
