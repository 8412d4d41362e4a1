#ifndef CCX_FUNCTIONS_HPP
#define CCX_FUNCTIONS_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "ccx/setvalued.hpp"

namespace ccx {

/// Extended-real value of a polyhedral function at a point.
struct ExtendedValue {
    enum class Kind { Finite, PlusInfinity, MinusInfinity };
    Kind kind = Kind::PlusInfinity;
    Rational value;  // meaningful only when finite

    static ExtendedValue finite(Rational v) { return {Kind::Finite, std::move(v)}; }
    static ExtendedValue plus_infinity() { return {Kind::PlusInfinity, Rational(0)}; }
    static ExtendedValue minus_infinity() { return {Kind::MinusInfinity, Rational(0)}; }
    bool is_finite() const { return kind == Kind::Finite; }
};

/// The function takes the value -infinity somewhere (violates the standing
/// properness assumptions).
class ImproperFunctionError : public std::domain_error {
  public:
    ImproperFunctionError() : std::domain_error("polyhedral function is unbounded below") {}
};

/// Convex extended-real-valued function stored by its CLOSED epigraph in
/// Q^{dim+1}, last coordinate t. Upward closed: every constraint has
/// t-coefficient <= 0. Detectably improper epigraphs (a nonempty cylinder in
/// t, i.e. -e_t is a recession direction) are rejected at construction.
class PolyhedralFunction {
  public:
    PolyhedralFunction(std::size_t dim, HPolyhedron epigraph)
        : dim_(dim), epi_(std::move(epigraph)) {
        if (epi_.dim() != dim_ + 1)
            throw std::invalid_argument("polyhedral function: epigraph dimension mismatch");
        if (epi_.has_strict())
            throw std::invalid_argument("polyhedral function: epigraph must be CLOSED");
        bool downward_free = true;
        for (const auto& c : epi_.constraints()) {
            if (c.a[dim_] > 0)
                throw std::invalid_argument("polyhedral function: epigraph not upward closed");
            if (c.a[dim_] < 0) downward_free = false;
        }
        if (downward_free && !is_empty(epi_)) throw ImproperFunctionError();
    }

    static PolyhedralFunction from_max_affine(std::size_t dim,
                                              const std::vector<std::pair<QVector, Rational>>& pieces,
                                              const std::optional<HPolyhedron>& domain = std::nullopt) {
        std::vector<Constraint> cs;
        for (const auto& [g, c] : pieces) {
            QVector row = g;
            row.push_back(Rational(-1));
            cs.push_back({std::move(row), -c, false});
        }
        if (domain) {
            if (domain->dim() != dim)
                throw std::invalid_argument("polyhedral function: domain dimension mismatch");
            for (const auto& c : domain->constraints()) {
                QVector row = c.a;
                row.push_back(Rational(0));
                cs.push_back({std::move(row), c.b, c.strict});
            }
        }
        return PolyhedralFunction(dim, HPolyhedron(dim + 1, std::move(cs)));
    }

    /// Indicator of a CLOSED set: epigraph = S x [0, infinity).
    static PolyhedralFunction indicator(const HPolyhedron& S) {
        std::vector<Constraint> cs;
        for (const auto& c : S.constraints()) {
            QVector row = c.a;
            row.push_back(Rational(0));
            cs.push_back({std::move(row), c.b, c.strict});
        }
        QVector up = zero_vector(S.dim() + 1);
        up[S.dim()] = -1;
        cs.push_back({std::move(up), Rational(0), false});
        return PolyhedralFunction(S.dim(), HPolyhedron(S.dim() + 1, std::move(cs)));
    }

    std::size_t dim() const { return dim_; }
    const HPolyhedron& epigraph() const { return epi_; }
    bool proper() const { return !is_empty(epi_); }

    HPolyhedron domain() const { return eliminate_block(epi_, dim_, 1); }

    ExtendedValue evaluate(const QVector& xbar) const {
        if (xbar.size() != dim_) throw std::invalid_argument("evaluate: dimension mismatch");
        HPolyhedron slice = substitute_block(epi_, 0, xbar);
        LPResult r = lp_over_closure(slice, QVector{Rational(1)}, Sense::Minimize);
        switch (r.status) {
            case LPStatus::Optimal: return ExtendedValue::finite(*r.optimum);
            case LPStatus::Infeasible: return ExtendedValue::plus_infinity();
            case LPStatus::Unbounded: return ExtendedValue::minus_infinity();
        }
        throw std::logic_error("evaluate: unreachable");
    }

  private:
    std::size_t dim_;
    HPolyhedron epi_;
};

struct Subdifferential {
    QVector at;
    HPolyhedron set;  // CLOSED, in dual coordinates
};

/// Subdifferential through the epigraph normal cone: the t-coordinate of
/// N((xbar, phi(xbar)); epi phi) in constraint form is fixed to -1.
inline Subdifferential subdifferential(const PolyhedralFunction& phi, const QVector& xbar) {
    ExtendedValue v = phi.evaluate(xbar);
    if (!v.is_finite()) throw std::domain_error("subdifferential: value is infinite");
    QVector point = xbar;
    point.push_back(v.value);
    std::optional<Cone> N = normal_cone(phi.epigraph(), point);
    if (!N) throw std::logic_error("subdifferential: epigraph point escaped its closure");
    HPolyhedron cone_sys = cone_to_constraints(*N);
    return {xbar, irredundant(substitute_block(cone_sys, phi.dim(), QVector{Rational(-1)}))};
}

/// phi1 + phi2 via projection of the split-epigraph system.
inline PolyhedralFunction func_sum(const PolyhedralFunction& f1, const PolyhedralFunction& f2) {
    if (f1.dim() != f2.dim()) throw std::invalid_argument("func_sum: dimension mismatch");
    const std::size_t n = f1.dim();
    // coordinates (x, t1, t2, t)
    std::vector<Constraint> cs;
    auto lift = [&](const Constraint& c, std::size_t t_slot) {
        QVector row = zero_vector(n + 3);
        for (std::size_t j = 0; j < n; ++j) row[j] = c.a[j];
        row[n + t_slot] = c.a[n];
        cs.push_back({std::move(row), c.b, c.strict});
    };
    for (const auto& c : f1.epigraph().constraints()) lift(c, 0);
    for (const auto& c : f2.epigraph().constraints()) lift(c, 1);
    QVector row = zero_vector(n + 3);
    row[n] = 1;
    row[n + 1] = 1;
    row[n + 2] = -1;
    cs.push_back({std::move(row), Rational(0), false});
    HPolyhedron sys(n + 3, std::move(cs));
    return PolyhedralFunction(n, eliminate_block(sys, n, 2));
}

/// phi o A by direct substitution on the epigraph rows.
inline PolyhedralFunction precompose_linear(const PolyhedralFunction& phi, const QMatrix& A) {
    if (A.rows() != phi.dim()) throw std::invalid_argument("precompose_linear: dimension mismatch");
    const std::size_t d = A.cols();
    std::vector<Constraint> cs;
    for (const auto& c : phi.epigraph().constraints()) {
        QVector g(c.a.begin(), c.a.end() - 1);
        QVector row(d);
        for (std::size_t j = 0; j < d; ++j) row[j] = dot(g, A.column(j));
        row.push_back(c.a[phi.dim()]);
        cs.push_back({std::move(row), c.b, c.strict});
    }
    return PolyhedralFunction(d, HPolyhedron(d + 1, std::move(cs)));
}

/// A*(S) for a set S of target-space functionals: the transpose image,
/// back in constraint form.
inline HPolyhedron adjoint_image(const QMatrix& A, const HPolyhedron& S) {
    if (S.dim() != A.rows()) throw std::invalid_argument("adjoint_image: dimension mismatch");
    return to_constraints(affine_image(S, A.transpose()));
}

/// mu(x) = inf{phi(x, y) : y in F(x)}; the epigraph is the projection of
/// (epi phi) intersected with (gph F x Q) onto (x, t). Instances with
/// mu = -infinity somewhere are rejected (recession check on the projection).
inline PolyhedralFunction marginal_function(const PolyhedralFunction& phi, const SetValuedMap& F) {
    if (phi.dim() != F.dim_x + F.dim_y)
        throw std::invalid_argument("marginal_function: dimension mismatch");
    const std::size_t n = F.dim_x, m = F.dim_y;
    std::vector<Constraint> cs;
    for (const auto& c : phi.epigraph().constraints()) cs.push_back(c);
    for (const auto& c : F.graph.constraints()) {
        QVector row = c.a;
        row.push_back(Rational(0));
        cs.push_back({std::move(row), c.b, c.strict});
    }
    HPolyhedron sys(n + m + 1, std::move(cs));
    HPolyhedron projected = eliminate_block(sys, n, m);
    bool downward_free = true;
    for (const auto& c : projected.constraints())
        if (c.a[n] < 0) downward_free = false;
    if (downward_free && !is_empty(projected)) throw ImproperFunctionError();
    return PolyhedralFunction(n, std::move(projected));
}

/// S(xbar) = {y in F(xbar) : phi(xbar, y) <= mu(xbar)}, CLOSED.
inline HPolyhedron argmin_set(const PolyhedralFunction& phi, const SetValuedMap& F,
                              const QVector& xbar) {
    if (phi.dim() != F.dim_x + F.dim_y)
        throw std::invalid_argument("argmin_set: dimension mismatch");
    if (xbar.size() != F.dim_x) throw std::invalid_argument("argmin_set: point dimension mismatch");
    // minimize t over {(y, t) : (xbar, y, t) in epi phi, (xbar, y) in gph F}
    const std::size_t m = F.dim_y;
    HPolyhedron epi_slice = substitute_block(phi.epigraph(), 0, xbar);
    HPolyhedron val = value_at(F, xbar);
    std::vector<Constraint> cs = epi_slice.constraints();
    for (const auto& c : val.constraints()) {
        QVector row = c.a;
        row.push_back(Rational(0));
        cs.push_back({std::move(row), c.b, c.strict});
    }
    HPolyhedron sys(m + 1, std::move(cs));
    LPResult r = lp_over_closure(sys, unit_vector(m + 1, m), Sense::Minimize);
    if (r.status != LPStatus::Optimal)
        throw std::domain_error("argmin_set: marginal value is not finite at the point");
    return substitute_block(sys, m, QVector{*r.optimum});
}

struct MarginalSubdifferential {
    enum class Outcome { Ok, PreconditionUnmet, NotOptimal };
    Outcome outcome = Outcome::Ok;
    std::optional<HPolyhedron> set;

    bool ok() const { return outcome == Outcome::Ok; }
};

/// The optimal value formula: the union over (f, g) in the subdifferential
/// of phi of f + D*F(xbar, ybar)(g), computed as one polyhedral image.
/// The qualification is core(dom phi) intersect core(gph F) nonempty.
inline MarginalSubdifferential marginal_subdifferential(const PolyhedralFunction& phi,
                                                        const SetValuedMap& F, const QVector& xbar,
                                                        const QVector& ybar) {
    if (phi.dim() != F.dim_x + F.dim_y)
        throw std::invalid_argument("marginal_subdifferential: dimension mismatch");
    const std::size_t n = F.dim_x, m = F.dim_y;
    if (!contains_point(argmin_set(phi, F, xbar), ybar))
        return {MarginalSubdifferential::Outcome::NotOptimal, std::nullopt};

    std::vector<Constraint> qual = phi.domain().constraints();
    for (const auto& c : F.graph.constraints()) qual.push_back(c);
    if (!is_strictly_feasible(HPolyhedron(n + m, std::move(qual))))
        return {MarginalSubdifferential::Outcome::PreconditionUnmet, std::nullopt};

    QVector point = concat(xbar, ybar);
    Subdifferential dphi = subdifferential(phi, point);     // system in (f, g)
    std::optional<Cone> NF = normal_cone(F.graph, point);   // cone in (f2, h)
    if (!NF) throw std::logic_error("marginal_subdifferential: graph point escaped its closure");
    HPolyhedron nf_sys = cone_to_constraints(*NF);

    // coordinates (f, g, f2); rows of N(gph F) written with h = -g
    std::vector<Constraint> cs;
    for (const auto& c : dphi.set.constraints())
        cs.push_back({concat(c.a, zero_vector(n)), c.b, c.strict});
    for (const auto& c : nf_sys.constraints()) {
        QVector row = zero_vector(2 * n + m);
        for (std::size_t j = 0; j < m; ++j) row[n + j] = -c.a[n + j];
        for (std::size_t j = 0; j < n; ++j) row[n + m + j] = c.a[j];
        cs.push_back({std::move(row), c.b, c.strict});
    }
    HPolyhedron sys(2 * n + m, std::move(cs));

    // image under (f, g, f2) |-> f + f2
    QMatrix M(n, 2 * n + m);
    for (std::size_t i = 0; i < n; ++i) {
        M.at(i, i) = 1;
        M.at(i, n + m + i) = 1;
    }
    return {MarginalSubdifferential::Outcome::Ok, to_constraints(affine_image(sys, M))};
}

} // namespace ccx

#endif
