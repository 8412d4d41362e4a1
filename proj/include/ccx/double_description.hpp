#ifndef CCX_DOUBLE_DESCRIPTION_HPP
#define CCX_DOUBLE_DESCRIPTION_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "ccx/polyhedron.hpp"

namespace ccx {
namespace detail {

/// Minimal generator description of a cone {x : row.x <= 0 for all rows}:
/// extreme rays of the pointed part plus a lineality basis.
struct ConeGenerators {
    std::vector<QVector> rays;
    std::vector<QVector> lines;
};

/// Incremental double description. Lines carry the lineality space and are
/// used to satisfy a violated row whenever possible; otherwise rays are
/// combined pairwise under the standard combinatorial adjacency test, which
/// keeps exactly the extreme rays.
class DoubleDescription {
  public:
    DoubleDescription(std::size_t dim, std::vector<QVector> rows)
        : dim_(dim), rows_(std::move(rows)) {
        for (std::size_t i = 0; i < dim_; ++i) lines_.push_back(unit_vector(dim_, i));
    }

    ConeGenerators run() {
        for (std::size_t k = 0; k < rows_.size(); ++k) process_row(k);
        ConeGenerators g;
        for (const auto& r : rays_) {
            if (is_zero(r.v)) continue;
            g.rays.push_back(r.v);
        }
        for (const auto& l : lines_) g.lines.push_back(l);
        std::sort(g.rays.begin(), g.rays.end(), lex_less);
        std::sort(g.lines.begin(), g.lines.end(), lex_less);
        return g;
    }

  private:
    struct Ray {
        QVector v;
        std::vector<bool> tight;  // tight[k]: row k holds with equality
    };

    std::size_t dim_;
    std::vector<QVector> rows_;
    std::vector<Ray> rays_;
    std::vector<QVector> lines_;

    void process_row(std::size_t k) {
        const QVector& m = rows_[k];
        if (is_zero(m)) {
            for (auto& r : rays_) r.tight.push_back(true);
            return;
        }

        // a line violating the row absorbs it
        std::size_t star = lines_.size();
        for (std::size_t i = 0; i < lines_.size(); ++i) {
            if (dot(m, lines_[i]) != 0) {
                star = i;
                break;
            }
        }
        if (star < lines_.size()) {
            QVector lstar = lines_[star];
            Rational ms = dot(m, lstar);
            if (ms > 0) lstar = negate(lstar);
            ms = dot(m, lstar);
            std::vector<QVector> new_lines;
            for (std::size_t i = 0; i < lines_.size(); ++i) {
                if (i == star) continue;
                Rational mi = dot(m, lines_[i]);
                QVector adj = (mi == 0) ? lines_[i] : sub(lines_[i], scale(mi / ms, lstar));
                new_lines.push_back(canonical_line(adj));
            }
            for (auto& r : rays_) {
                Rational mr = dot(m, r.v);
                if (mr != 0) r.v = primitive_direction(sub(r.v, scale(mr / ms, lstar)));
                r.tight.push_back(true);
            }
            Ray nr;
            nr.v = primitive_direction(lstar);
            nr.tight.assign(k, true);
            nr.tight.push_back(false);
            rays_.push_back(std::move(nr));
            lines_ = std::move(new_lines);
            return;
        }

        std::vector<std::size_t> pos, zero, neg;
        std::vector<Rational> val(rays_.size());
        for (std::size_t i = 0; i < rays_.size(); ++i) {
            val[i] = dot(m, rays_[i].v);
            int s = sign(val[i]);
            (s > 0 ? pos : s < 0 ? neg : zero).push_back(i);
        }
        if (pos.empty()) {
            for (std::size_t i = 0; i < rays_.size(); ++i) rays_[i].tight.push_back(val[i] == 0);
            return;
        }

        std::vector<Ray> next;
        for (std::size_t i : zero) {
            Ray r = rays_[i];
            r.tight.push_back(true);
            next.push_back(std::move(r));
        }
        for (std::size_t i : neg) {
            Ray r = rays_[i];
            r.tight.push_back(false);
            next.push_back(std::move(r));
        }
        for (std::size_t p : pos) {
            for (std::size_t q : neg) {
                if (!adjacent(p, q, k)) continue;
                Ray combo;
                combo.v = primitive_direction(sub(scale(val[p], rays_[q].v), scale(val[q], rays_[p].v)));
                combo.tight.resize(k + 1);
                for (std::size_t j = 0; j < k; ++j)
                    combo.tight[j] = rays_[p].tight[j] && rays_[q].tight[j];
                combo.tight[k] = true;
                next.push_back(std::move(combo));
            }
        }
        rays_ = std::move(next);
    }

    /// Fukuda's combinatorial adjacency test against the rows processed so far.
    bool adjacent(std::size_t p, std::size_t q, std::size_t nrows) const {
        for (std::size_t r = 0; r < rays_.size(); ++r) {
            if (r == p || r == q) continue;
            bool covers = true;
            for (std::size_t j = 0; j < nrows && covers; ++j)
                if (rays_[p].tight[j] && rays_[q].tight[j] && !rays_[r].tight[j]) covers = false;
            if (covers) return false;
        }
        return true;
    }

    static QVector canonical_line(QVector v) {
        v = primitive_direction(std::move(v));
        for (const auto& q : v) {
            if (q == 0) continue;
            if (q < 0) v = negate(v);
            break;
        }
        return v;
    }
};

inline ConeGenerators cone_generators(std::size_t dim, std::vector<QVector> rows) {
    return DoubleDescription(dim, std::move(rows)).run();
}

} // namespace detail

/// H -> V: exact conversion of a CLOSED polyhedron via homogenization.
/// Generator ordering is lexicographic, so the output is canonical.
inline VPolyhedron to_generators(const HPolyhedron& P) {
    if (P.has_strict())
        throw std::invalid_argument("convert_representation: OPEN input rejected; take lin_of first");
    VPolyhedron V;
    V.dim = P.dim();
    if (P.is_empty_marker()) return V;

    const std::size_t d = P.dim() + 1;
    std::vector<QVector> rows;
    for (const auto& c : P.constraints()) {
        QVector r = c.a;
        r.push_back(-c.b);
        rows.push_back(std::move(r));
    }
    rows.push_back(negate(unit_vector(d, d - 1)));  // t >= 0

    detail::ConeGenerators g = detail::cone_generators(d, std::move(rows));

    std::vector<QVector> points, rays;
    for (const auto& r : g.rays) {
        Rational t = r.back();
        QVector x(r.begin(), r.end() - 1);
        if (t > 0) {
            points.push_back(scale(Rational(1) / t, x));
        } else if (!is_zero(x)) {
            rays.push_back(detail::primitive_direction(std::move(x)));
        }
    }
    for (const auto& l : g.lines) {
        QVector x(l.begin(), l.end() - 1);
        if (is_zero(x)) continue;
        rays.push_back(detail::primitive_direction(x));
        rays.push_back(detail::primitive_direction(negate(x)));
    }
    if (points.empty()) return V;  // empty set: recession directions alone do not count

    std::sort(points.begin(), points.end(), lex_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::sort(rays.begin(), rays.end(), lex_less);
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    V.vertices = std::move(points);
    V.rays = std::move(rays);
    return V;
}

/// V -> H: polar double description; output constraints are canonical.
inline HPolyhedron to_constraints(const VPolyhedron& V) {
    if (V.is_empty()) return HPolyhedron::empty(V.dim);
    const std::size_t d = V.dim + 1;
    std::vector<QVector> rows;
    for (const auto& v : V.vertices) {
        if (v.size() != V.dim) throw std::invalid_argument("to_constraints: vertex dimension mismatch");
        QVector r = v;
        r.push_back(Rational(1));
        rows.push_back(std::move(r));
    }
    for (const auto& r0 : V.rays) {
        if (r0.size() != V.dim) throw std::invalid_argument("to_constraints: ray dimension mismatch");
        QVector r = r0;
        r.push_back(Rational(0));
        rows.push_back(std::move(r));
    }

    detail::ConeGenerators g = detail::cone_generators(d, std::move(rows));

    std::vector<Constraint> cs;
    for (const auto& y : g.rays) {
        QVector a(y.begin(), y.end() - 1);
        cs.push_back({std::move(a), -y.back(), false});
    }
    for (const auto& y : g.lines) {
        QVector a(y.begin(), y.end() - 1);
        cs.push_back({a, -y.back(), false});
        cs.push_back({negate(a), y.back(), false});
    }
    return HPolyhedron(V.dim, std::move(cs));
}

/// Exact H <-> V conversion (double description), CLOSED sets only.
inline VPolyhedron convert_representation(const HPolyhedron& P) { return to_generators(P); }
inline HPolyhedron convert_representation(const VPolyhedron& V) { return to_constraints(V); }

} // namespace ccx

#endif
