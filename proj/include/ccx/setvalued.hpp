#ifndef CCX_SETVALUED_HPP
#define CCX_SETVALUED_HPP

#include <optional>
#include <stdexcept>

#include "ccx/core_calculus.hpp"
#include "ccx/fourier_motzkin.hpp"

namespace ccx {

/// Convex-graph mapping F: Q^n => Q^m stored by its graph polyhedron in
/// Q^{n+m}, coordinates x then y. Domain and values are derived, not stored.
struct SetValuedMap {
    std::size_t dim_x = 0;
    std::size_t dim_y = 0;
    HPolyhedron graph{0};

    SetValuedMap(std::size_t nx, std::size_t ny, HPolyhedron g)
        : dim_x(nx), dim_y(ny), graph(std::move(g)) {
        if (graph.dim() != dim_x + dim_y)
            throw std::invalid_argument("set-valued map: graph dimension mismatch");
    }

    static SetValuedMap identity(std::size_t n) {
        std::vector<Constraint> cs;
        for (std::size_t i = 0; i < n; ++i) {
            QVector row = zero_vector(2 * n);
            row[i] = 1;
            row[n + i] = -1;
            cs.push_back({row, Rational(0), false});
            cs.push_back({negate(row), Rational(0), false});
        }
        return SetValuedMap(n, n, HPolyhedron(2 * n, std::move(cs)));
    }
};

inline HPolyhedron domain_of(const SetValuedMap& F) {
    return eliminate_block(F.graph, F.dim_x, F.dim_y);
}

/// Slice of the graph at x = xbar.
inline HPolyhedron value_at(const SetValuedMap& F, const QVector& xbar) {
    if (xbar.size() != F.dim_x) throw std::invalid_argument("value_at: dimension mismatch");
    return substitute_block(F.graph, 0, xbar);
}

/// (F1 + F2)(x) = F1(x) + F2(x): graph projected out of the split system
/// {(x, y1, y2, y) : (x, y1) in gph F1, (x, y2) in gph F2, y = y1 + y2}.
inline SetValuedMap map_sum(const SetValuedMap& F1, const SetValuedMap& F2) {
    if (F1.dim_x != F2.dim_x || F1.dim_y != F2.dim_y)
        throw std::invalid_argument("map_sum: dimension mismatch");
    const std::size_t n = F1.dim_x, m = F1.dim_y;
    std::vector<Constraint> cs;
    auto lift = [&](const Constraint& c, std::size_t y_block) {
        QVector row = zero_vector(n + 3 * m);
        for (std::size_t j = 0; j < n; ++j) row[j] = c.a[j];
        for (std::size_t j = 0; j < m; ++j) row[n + y_block * m + j] = c.a[n + j];
        cs.push_back({std::move(row), c.b, c.strict});
    };
    for (const auto& c : F1.graph.constraints()) lift(c, 0);
    for (const auto& c : F2.graph.constraints()) lift(c, 1);
    for (std::size_t j = 0; j < m; ++j) {
        QVector row = zero_vector(n + 3 * m);
        row[n + j] = 1;
        row[n + m + j] = 1;
        row[n + 2 * m + j] = -1;
        cs.push_back({row, Rational(0), false});
        cs.push_back({negate(row), Rational(0), false});
    }
    HPolyhedron sys(n + 3 * m, std::move(cs));
    return SetValuedMap(n, m, eliminate_block(sys, n, 2 * m));
}

/// All splittings (y1, y2) of ybar across F1(xbar) and F2(xbar); empty when
/// (xbar, ybar) is not in the graph of the sum.
inline HPolyhedron sum_decompositions(const SetValuedMap& F1, const SetValuedMap& F2,
                                      const QVector& xbar, const QVector& ybar) {
    if (xbar.size() != F1.dim_x || ybar.size() != F1.dim_y)
        throw std::invalid_argument("sum_decompositions: dimension mismatch");
    const std::size_t m = F1.dim_y;
    std::vector<Constraint> cs;
    HPolyhedron v1 = value_at(F1, xbar);
    HPolyhedron v2 = value_at(F2, xbar);
    for (const auto& c : v1.constraints()) cs.push_back({concat(c.a, zero_vector(m)), c.b, c.strict});
    for (const auto& c : v2.constraints()) cs.push_back({concat(zero_vector(m), c.a), c.b, c.strict});
    for (std::size_t j = 0; j < m; ++j) {
        QVector row = zero_vector(2 * m);
        row[j] = 1;
        row[m + j] = 1;
        cs.push_back({row, ybar[j], false});
        cs.push_back({negate(row), -ybar[j], false});
    }
    return HPolyhedron(2 * m, std::move(cs));
}

/// (G o F)(x) = union of G(y) over y in F(x): intermediate block eliminated.
inline SetValuedMap map_compose(const SetValuedMap& G, const SetValuedMap& F) {
    if (F.dim_y != G.dim_x) throw std::invalid_argument("map_compose: dimension mismatch");
    const std::size_t n = F.dim_x, m = F.dim_y, p = G.dim_y;
    std::vector<Constraint> cs;
    for (const auto& c : F.graph.constraints())
        cs.push_back({concat(c.a, zero_vector(p)), c.b, c.strict});
    for (const auto& c : G.graph.constraints())
        cs.push_back({concat(zero_vector(n), c.a), c.b, c.strict});
    HPolyhedron sys(n + m + p, std::move(cs));
    return SetValuedMap(n, p, eliminate_block(sys, n, m));
}

/// Coderivative D*F(xbar, ybar)(g) = {f : (f, -g) in N((xbar, ybar); gph F)},
/// as a CLOSED polyhedron in the x-dual. nullopt encodes the paper's
/// convention for points outside the graph's closure.
inline std::optional<HPolyhedron> coderivative(const SetValuedMap& F, const QVector& xbar,
                                               const QVector& ybar, const QVector& g) {
    if (g.size() != F.dim_y) throw std::invalid_argument("coderivative: dual dimension mismatch");
    std::optional<Cone> N = normal_cone(F.graph, concat(xbar, ybar));
    if (!N) return std::nullopt;
    HPolyhedron cone_sys = cone_to_constraints(*N);
    return irredundant(substitute_block(cone_sys, F.dim_x, negate(g)));
}

} // namespace ccx

#endif
