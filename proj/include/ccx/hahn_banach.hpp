#ifndef CCX_HAHN_BANACH_HPP
#define CCX_HAHN_BANACH_HPP

#include <stdexcept>
#include <vector>

#include "ccx/core_calculus.hpp"
#include "ccx/fourier_motzkin.hpp"

namespace ccx {

/// The precondition g <= p on Y failed; carries a point of Y violating it.
class DominationError : public std::domain_error {
  public:
    explicit DominationError(QVector witness)
        : std::domain_error("hahn-banach: g is not dominated by p on Y"),
          violating_point(std::move(witness)) {}
    QVector violating_point;
};

namespace detail {

struct HBProblem {
    std::size_t n = 0;               // ambient dimension
    std::vector<QVector> basis;      // columns of B, independent
    QVector g;                       // values of g on the basis
};

inline HBProblem validate_hb(const SublinearFunc& p, const QMatrix& basis_Y, const QVector& g_on_basis) {
    HBProblem hb;
    hb.n = basis_Y.rows();
    if (p.pieces.empty()) throw std::invalid_argument("hahn-banach: sublinear function has no pieces");
    for (const auto& piece : p.pieces)
        if (piece.size() != hb.n) throw std::invalid_argument("hahn-banach: piece dimension mismatch");
    if (basis_Y.cols() != g_on_basis.size())
        throw std::invalid_argument("hahn-banach: basis/value count mismatch");
    if (basis_Y.cols() == 0 || rank(basis_Y) != basis_Y.cols())
        throw std::invalid_argument("hahn-banach: basis columns are not independent");
    for (std::size_t j = 0; j < basis_Y.cols(); ++j) hb.basis.push_back(basis_Y.column(j));
    hb.g = g_on_basis;
    return hb;
}

/// max over z of g(Bz) - p(Bz); equals 0 when g <= p on Y (attained at 0).
/// Throws DominationError with an explicit violating point otherwise.
inline void check_domination(const SublinearFunc& p, const HBProblem& hb) {
    const std::size_t k = hb.basis.size();
    LPProblem lp;
    lp.dim = k + 1;  // (z, s) with s >= p(Bz)
    lp.sense = Sense::Maximize;
    lp.objective = hb.g;
    lp.objective.push_back(Rational(-1));
    for (const auto& piece : p.pieces) {
        QVector row(k + 1);
        for (std::size_t j = 0; j < k; ++j) row[j] = dot(piece, hb.basis[j]);
        row[k] = -1;
        lp.constraints.push_back({std::move(row), Rational(0), Relation::LessEq});
    }
    LPResult r = solve_lp(lp);
    auto point_from = [&](const QVector& z_ext) {
        QVector y = zero_vector(hb.n);
        for (std::size_t j = 0; j < k; ++j) y = add(y, scale(z_ext[j], hb.basis[j]));
        return y;
    };
    if (r.status == LPStatus::Unbounded) {
        // walk the improving ray until the gap is positive
        QVector z = *r.witness;
        QVector d = *r.ray;
        auto gap = [&](const QVector& w) -> Rational {
            Rational gz = 0;
            for (std::size_t j = 0; j < k; ++j) gz += hb.g[j] * w[j];
            return gz - p(point_from(w));
        };
        Rational t(1);
        for (int iter = 0; iter < 64 && gap(add(z, scale(t, d))) <= 0; ++iter) t *= 2;
        QVector zt = add(z, scale(t, d));
        if (gap(zt) <= 0) throw std::logic_error("hahn-banach: unbounded domination gap not realized");
        throw DominationError(point_from(zt));
    }
    if (r.status == LPStatus::Optimal && *r.optimum > 0) throw DominationError(point_from(*r.witness));
    if (r.status != LPStatus::Optimal) throw std::logic_error("hahn-banach: domination check failed");
}

/// sup over y in span(cols) of f(y) - p(y - v)  (vals = f on cols).
inline Rational lower_bound_lp(const SublinearFunc& p, const std::vector<QVector>& cols,
                               const QVector& vals, const QVector& v) {
    const std::size_t k = cols.size();
    LPProblem lp;
    lp.dim = k + 1;
    lp.sense = Sense::Maximize;
    lp.objective = vals;
    lp.objective.push_back(Rational(-1));
    for (const auto& piece : p.pieces) {
        QVector row(k + 1);
        for (std::size_t j = 0; j < k; ++j) row[j] = dot(piece, cols[j]);
        row[k] = -1;
        lp.constraints.push_back({std::move(row), dot(piece, v), Relation::LessEq});
    }
    LPResult r = solve_lp(lp);
    if (r.status != LPStatus::Optimal) throw std::logic_error("hahn-banach: lower bound LP not optimal");
    return *r.optimum;
}

/// inf over y in span(cols) of p(y + v) - f(y).
inline Rational upper_bound_lp(const SublinearFunc& p, const std::vector<QVector>& cols,
                               const QVector& vals, const QVector& v) {
    const std::size_t k = cols.size();
    LPProblem lp;
    lp.dim = k + 1;
    lp.sense = Sense::Minimize;
    lp.objective = negate(vals);
    lp.objective.push_back(Rational(1));
    for (const auto& piece : p.pieces) {
        QVector row(k + 1);
        for (std::size_t j = 0; j < k; ++j) row[j] = dot(piece, cols[j]);
        row[k] = -1;
        lp.constraints.push_back({std::move(row), -dot(piece, v), Relation::LessEq});
    }
    LPResult r = solve_lp(lp);
    if (r.status != LPStatus::Optimal) throw std::logic_error("hahn-banach: upper bound LP not optimal");
    return *r.optimum;
}

} // namespace detail

/// Hahn-Banach extension, one complementary direction at a time; the value on
/// each new direction is the midpoint of the exact admissible interval
/// [sup_y g(y) - p(y-v), inf_y p(y+v) - g(y)].
inline Functional hahn_banach_extend(const SublinearFunc& p, const QMatrix& basis_Y,
                                     const QVector& g_on_basis) {
    detail::HBProblem hb = detail::validate_hb(p, basis_Y, g_on_basis);
    detail::check_domination(p, hb);

    std::vector<QVector> cols = hb.basis;
    QVector vals = hb.g;
    for (std::size_t i = 0; i < hb.n && cols.size() < hb.n; ++i) {
        QVector e = unit_vector(hb.n, i);
        std::vector<QVector> trial = cols;
        trial.push_back(e);
        if (rank(QMatrix::from_columns(trial)) != trial.size()) continue;
        Rational lo = detail::lower_bound_lp(p, cols, vals, e);
        Rational hi = detail::upper_bound_lp(p, cols, vals, e);
        if (lo > hi) throw std::logic_error("hahn-banach: empty extension interval");
        cols.push_back(e);
        vals.push_back((lo + hi) / 2);
    }
    auto f = solve_linear_system(QMatrix::from_columns(cols).transpose(), vals);
    if (!f) throw std::logic_error("hahn-banach: completed basis not invertible");
    return Functional{*f};
}

/// The separation-route construction: separate y0 (g(y0) = 1) from
/// Lambda = {p < 1} + ker g, then rescale the separating functional.
/// Returns a valid extension; it need not equal the midpoint-rule one.
inline Functional hahn_banach_via_separation(const SublinearFunc& p, const QMatrix& basis_Y,
                                             const QVector& g_on_basis) {
    detail::HBProblem hb = detail::validate_hb(p, basis_Y, g_on_basis);
    if (is_zero(hb.g))
        throw std::invalid_argument("hahn-banach: separation route needs g != 0; use hahn_banach_extend");
    detail::check_domination(p, hb);

    const std::size_t k = hb.basis.size();
    std::size_t j0 = 0;
    while (hb.g[j0] == 0) ++j0;
    QVector y0 = scale(Rational(1) / hb.g[j0], hb.basis[j0]);

    // ker g inside Y, mapped through the basis
    std::vector<QVector> ker_cols;
    for (const auto& z : kernel_basis(QMatrix::from_rows({hb.g}))) {
        QVector w = zero_vector(hb.n);
        for (std::size_t j = 0; j < k; ++j) w = add(w, scale(z[j], hb.basis[j]));
        ker_cols.push_back(std::move(w));
    }

    // Lambda = {p < 1} + span(ker_cols), projected out of (x, w) coordinates
    const std::size_t kk = ker_cols.size();
    std::vector<Constraint> cs;
    for (const auto& piece : p.pieces) {
        QVector row = piece;
        for (std::size_t j = 0; j < kk; ++j) row.push_back(-dot(piece, ker_cols[j]));
        cs.push_back({std::move(row), Rational(1), true});
    }
    HPolyhedron lambda = eliminate_block(HPolyhedron(hb.n + kk, std::move(cs)), hb.n, kk);

    SeparationAttempt sep = separate_point(lambda, y0);
    if (!sep.separated()) throw std::logic_error("hahn-banach: y0 unexpectedly inside Lambda");
    const QVector& h = sep.result->functional.coeffs;
    Rational h0 = dot(h, y0);
    if (h0 <= 0) throw std::logic_error("hahn-banach: separation functional not positive at y0");
    return Functional{scale(Rational(1) / h0, h)};
}

/// Certificate: f(Bz) = g(z) for every basis column.
inline bool extends_on_basis(const Functional& f, const QMatrix& basis_Y, const QVector& g_on_basis) {
    for (std::size_t j = 0; j < basis_Y.cols(); ++j)
        if (dot(f.coeffs, basis_Y.column(j)) != g_on_basis[j]) return false;
    return true;
}

/// Certificate: f <= p pointwise, exactly when f lies in conv(pieces).
inline bool dominated_by(const Functional& f, const SublinearFunc& p) {
    const std::size_t k = p.pieces.size();
    const std::size_t n = f.coeffs.size();
    std::vector<Constraint> cs;
    QVector ones(k, Rational(1));
    cs.push_back({ones, Rational(1), false});
    cs.push_back({negate(ones), Rational(-1), false});
    for (std::size_t coord = 0; coord < n; ++coord) {
        QVector row(k);
        for (std::size_t i = 0; i < k; ++i) row[i] = p.pieces[i][coord];
        cs.push_back({row, f.coeffs[coord], false});
        cs.push_back({negate(row), -f.coeffs[coord], false});
    }
    for (std::size_t i = 0; i < k; ++i) cs.push_back({negate(unit_vector(k, i)), Rational(0), false});
    return feasible_point(HPolyhedron(k, std::move(cs))).has_value();
}

} // namespace ccx

#endif
