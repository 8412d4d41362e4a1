#ifndef CCX_LP_HPP
#define CCX_LP_HPP

#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ccx/linalg.hpp"

namespace ccx {

enum class Relation { LessEq, Equal };
enum class Sense { Maximize, Minimize };

struct LPConstraint {
    QVector a;
    Rational b;
    Relation rel = Relation::LessEq;
};

/// Linear program over free variables: optimize objective subject to
/// rows a.x <= b or a.x = b. Strict inequalities are not accepted here;
/// callers decide strict systems with the max-margin trick.
struct LPProblem {
    QVector objective;
    Sense sense = Sense::Maximize;
    std::vector<LPConstraint> constraints;
    std::size_t dim = 0;
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    std::optional<Rational> optimum;
    std::optional<QVector> witness;  // optimizer, or a feasible point when unbounded
    std::optional<QVector> ray;      // feasible improving direction when unbounded
};

namespace detail {

/// Dictionary-form simplex over exact rationals. Variables are split as
/// x = u - w with u, w >= 0 so the public interface stays free-variable.
/// Bland's rule (smallest variable index) everywhere, so it terminates.
class Simplex {
  public:
    Simplex(const LPProblem& p) : n_(p.dim) {
        if (p.objective.size() != n_) throw std::invalid_argument("lp: objective dimension mismatch");
        for (const auto& c : p.constraints) {
            if (c.a.size() != n_) throw std::invalid_argument("lp: constraint dimension mismatch");
            rows_a_.push_back(c.a);
            rows_b_.push_back(c.b);
            if (c.rel == Relation::Equal) {
                rows_a_.push_back(negate(c.a));
                rows_b_.push_back(-c.b);
            }
        }
        m_ = rows_a_.size();
        obj_ = p.objective;
        if (p.sense == Sense::Minimize) obj_ = negate(obj_);
    }

    LPResult run(Sense original_sense) {
        build_dictionary();
        if (!phase_one()) return {LPStatus::Infeasible, std::nullopt, std::nullopt, std::nullopt};
        set_phase_two_objective();
        std::optional<std::size_t> ray_col = optimize();
        LPResult r;
        r.witness = current_point();
        if (ray_col) {
            r.status = LPStatus::Unbounded;
            r.ray = ray_direction(*ray_col);
        } else {
            r.status = LPStatus::Optimal;
            Rational v = obj_row_.back();
            r.optimum = (original_sense == Sense::Minimize) ? -v : v;
        }
        return r;
    }

  private:
    static constexpr std::size_t kNoVar = std::numeric_limits<std::size_t>::max();

    std::size_t n_;                 // free-variable dimension
    std::size_t m_ = 0;             // rows after equality expansion
    std::vector<QVector> rows_a_;
    QVector rows_b_;
    QVector obj_;                   // maximization objective over free vars

    // Dictionary: basic[i] = tab_[i].back() + sum_j tab_[i][j] * nonbasic[j].
    std::vector<QVector> tab_;
    QVector obj_row_;               // z = obj_row_.back() + sum_j obj_row_[j] * nonbasic[j]
    std::vector<std::size_t> basic_;
    std::vector<std::size_t> nonbasic_;
    std::size_t aux_var_ = kNoVar;

    std::size_t split_vars() const { return 2 * n_; }

    void build_dictionary() {
        // columns: u_0..u_{n-1}, w_0..w_{n-1}; rows: slack variables.
        std::size_t nn = split_vars();
        nonbasic_.resize(nn);
        for (std::size_t j = 0; j < nn; ++j) nonbasic_[j] = j;
        basic_.resize(m_);
        tab_.assign(m_, QVector(nn + 1, Rational(0)));
        for (std::size_t i = 0; i < m_; ++i) {
            basic_[i] = nn + i;
            for (std::size_t k = 0; k < n_; ++k) {
                tab_[i][k] = -rows_a_[i][k];
                tab_[i][n_ + k] = rows_a_[i][k];
            }
            tab_[i].back() = rows_b_[i];
        }
    }

    bool constants_feasible() const {
        for (std::size_t i = 0; i < m_; ++i)
            if (tab_[i].back() < 0) return false;
        return true;
    }

    // Pivot: nonbasic column j enters, basic row i leaves.
    void pivot(std::size_t row, std::size_t col) {
        QVector& r = tab_[row];
        Rational coef = r[col];
        // solve row for the entering variable
        QVector expr(r.size(), Rational(0));
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (j == col) continue;
            expr[j] = -r[j] / coef;
        }
        expr[col] = Rational(1) / coef;
        expr.back() = -r.back() / coef;
        // expr: entering = expr.back() + sum_{j != col} expr[j]*nonbasic_j + expr[col]*leaving
        std::swap(basic_[row], nonbasic_[col]);
        tab_[row] = expr;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row) continue;
            QVector& t = tab_[i];
            Rational c = t[col];
            if (c == 0) continue;
            t[col] = 0;
            for (std::size_t j = 0; j < t.size(); ++j) t[j] += c * expr[j];
        }
        Rational c = obj_row_[col];
        if (c != 0) {
            obj_row_[col] = 0;
            for (std::size_t j = 0; j < obj_row_.size(); ++j) obj_row_[j] += c * expr[j];
        }
    }

    // Bland: entering column with positive reduced cost and smallest variable
    // index; leaving row with smallest ratio, ties by smallest variable index.
    std::optional<std::size_t> bland_entering() const {
        std::optional<std::size_t> best;
        for (std::size_t j = 0; j + 1 < obj_row_.size(); ++j) {
            if (obj_row_[j] <= 0) continue;
            if (!best || nonbasic_[j] < nonbasic_[*best]) best = j;
        }
        return best;
    }

    std::optional<std::size_t> bland_leaving(std::size_t col) const {
        std::optional<std::size_t> best;
        Rational best_ratio;
        for (std::size_t i = 0; i < m_; ++i) {
            if (tab_[i][col] >= 0) continue;
            Rational ratio = -tab_[i].back() / tab_[i][col];
            if (!best || ratio < best_ratio ||
                (ratio == best_ratio && basic_[i] < basic_[*best])) {
                best = i;
                best_ratio = ratio;
            }
        }
        return best;
    }

    // Runs Bland simplex on the current objective row. Returns the entering
    // column when unbounded, nullopt at optimality.
    std::optional<std::size_t> optimize() {
        for (;;) {
            auto col = bland_entering();
            if (!col) return std::nullopt;
            auto row = bland_leaving(*col);
            if (!row) return col;
            pivot(*row, *col);
        }
    }

    bool phase_one() {
        if (constants_feasible()) return true;
        // auxiliary variable enters every row; maximize -aux.
        std::size_t nn = split_vars();
        aux_var_ = nn + m_;
        for (auto& r : tab_) r.insert(r.end() - 1, Rational(1));
        nonbasic_.push_back(aux_var_);
        obj_row_.assign(nn + 2, Rational(0));
        obj_row_[nn] = -1;
        // initial pivot: most negative constant, ties by smallest basic index.
        std::size_t row = 0;
        for (std::size_t i = 1; i < m_; ++i)
            if (tab_[i].back() < tab_[row].back()) row = i;
        pivot(row, nn);
        std::optional<std::size_t> unb = optimize();
        if (unb) throw std::logic_error("lp: phase one cannot be unbounded");
        if (obj_row_.back() < 0) return false;
        // drive the auxiliary variable out of the basis if it lingers at zero
        for (std::size_t i = 0; i < m_; ++i) {
            if (basic_[i] != aux_var_) continue;
            std::optional<std::size_t> col;
            for (std::size_t j = 0; j + 1 < tab_[i].size(); ++j)
                if (tab_[i][j] != 0 && (!col || nonbasic_[j] < nonbasic_[*col])) col = j;
            if (col) pivot(i, *col);
            break;
        }
        // remove the auxiliary column (it is nonbasic now, or its row is all zero)
        for (std::size_t j = 0; j < nonbasic_.size(); ++j) {
            if (nonbasic_[j] != aux_var_) continue;
            for (auto& r : tab_) r.erase(r.begin() + static_cast<std::ptrdiff_t>(j));
            obj_row_.erase(obj_row_.begin() + static_cast<std::ptrdiff_t>(j));
            nonbasic_.erase(nonbasic_.begin() + static_cast<std::ptrdiff_t>(j));
            break;
        }
        for (std::size_t i = 0; i < m_; ++i) {
            if (basic_[i] == aux_var_) {
                // row is identically zero: the auxiliary stays basic at value 0
                // and never moves again; treat it as a redundant row.
                for (std::size_t j = 0; j + 1 < tab_[i].size(); ++j) tab_[i][j] = 0;
            }
        }
        return true;
    }

    void set_phase_two_objective() {
        std::size_t cols = nonbasic_.size();
        obj_row_.assign(cols + 1, Rational(0));
        auto coeff_of = [&](std::size_t var) -> Rational {
            if (var < n_) return obj_[var];
            if (var < 2 * n_) return -obj_[var - n_];
            return Rational(0);
        };
        for (std::size_t j = 0; j < cols; ++j) obj_row_[j] += coeff_of(nonbasic_[j]);
        for (std::size_t i = 0; i < m_; ++i) {
            Rational c = coeff_of(basic_[i]);
            if (c == 0) continue;
            for (std::size_t j = 0; j <= cols; ++j) obj_row_[j] += c * tab_[i][j];
        }
    }

    QVector current_point() const {
        QVector split(2 * n_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (basic_[i] < 2 * n_) split[basic_[i]] = tab_[i].back();
        QVector x(n_);
        for (std::size_t k = 0; k < n_; ++k) x[k] = split[k] - split[n_ + k];
        return x;
    }

    QVector ray_direction(std::size_t col) const {
        QVector split(2 * n_, Rational(0));
        std::size_t v = nonbasic_[col];
        if (v < 2 * n_) split[v] = 1;
        for (std::size_t i = 0; i < m_; ++i)
            if (basic_[i] < 2 * n_) split[basic_[i]] = tab_[i][col];
        QVector d(n_);
        for (std::size_t k = 0; k < n_; ++k) d[k] = split[k] - split[n_ + k];
        return d;
    }
};

} // namespace detail

/// Exact simplex with Bland's anti-cycling rule; deterministic.
inline LPResult solve_lp(const LPProblem& p) {
    detail::Simplex s(p);
    return s.run(p.sense);
}

} // namespace ccx

#endif
