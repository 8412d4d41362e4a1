#include <catch2/catch_amalgamated.hpp>

#include "ccx/lp.hpp"
#include "ccx/oracle.hpp"

using namespace ccx;

namespace {

LPProblem max_problem(QVector obj, std::vector<LPConstraint> cs) {
    LPProblem p;
    p.dim = obj.size();
    p.objective = std::move(obj);
    p.constraints = std::move(cs);
    return p;
}

} // namespace

TEST_CASE("triangle instance attains its vertex maximum") {
    // max x1 s.t. x1+x2 <= 2, x1-x2 <= 0, x1 >= 0, x2 >= 0; vertices
    // (0,0), (0,2), (1,1) so the maximum is 1 at (1,1)
    auto p = max_problem({Rational(1), Rational(0)},
                         {{{Rational(1), Rational(1)}, Rational(2)},
                          {{Rational(1), Rational(-1)}, Rational(0)},
                          {{Rational(-1), Rational(0)}, Rational(0)},
                          {{Rational(0), Rational(-1)}, Rational(0)}});
    LPResult r = solve_lp(p);
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(*r.optimum == 1);
    CHECK(*r.witness == QVector{Rational(1), Rational(1)});
}

TEST_CASE("one-dimensional bound") {
    auto p = max_problem({Rational(1)}, {{{Rational(1)}, Rational(3)}});
    LPResult r = solve_lp(p);
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(*r.optimum == 3);
}

TEST_CASE("unbounded with certificate ray") {
    auto p = max_problem({Rational(1)}, {{{Rational(-1)}, Rational(0)}});
    LPResult r = solve_lp(p);
    REQUIRE(r.status == LPStatus::Unbounded);
    REQUIRE(r.ray);
    CHECK((*r.ray)[0] > 0);
}

TEST_CASE("infeasible system detected") {
    auto p = max_problem({Rational(1)},
                         {{{Rational(1)}, Rational(0)}, {{Rational(-1)}, Rational(-1)}});
    CHECK(solve_lp(p).status == LPStatus::Infeasible);
}

TEST_CASE("equality rows") {
    auto p = max_problem({Rational(1), Rational(1)},
                         {{{Rational(1), Rational(1)}, Rational(2), Relation::Equal},
                          {{Rational(1), Rational(0)}, Rational(5)}});
    LPResult r = solve_lp(p);
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(*r.optimum == 2);
}

TEST_CASE("minimization sense") {
    auto p = max_problem({Rational(1)}, {{{Rational(-1)}, Rational(-2)}});
    p.sense = Sense::Minimize;
    LPResult r = solve_lp(p);
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(*r.optimum == 2);
}

TEST_CASE("optimum matches brute-force vertex maximum on seeded boxes") {
    SplitMix64 rng(Seed{101});
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 1 + rng.below(3);
        InstanceSpec spec;
        spec.dim = n;
        spec.constraint_budget = 8;
        HPolyhedron S = generate_set(spec, rng);
        QVector obj = rng.vector(n, 5);
        LPResult r = lp_over_closure(S, obj, Sense::Maximize);
        REQUIRE(r.status == LPStatus::Optimal);

        auto en = enumerate_vertices_bruteforce(S);
        REQUIRE_FALSE(en.vertices.empty());
        Rational best = dot(obj, en.vertices.front());
        for (const auto& v : en.vertices) best = std::max(best, dot(obj, v));
        CHECK(best == *r.optimum);

        // weak duality spot check: feasible points never beat the optimum
        for (const auto& v : en.vertices) CHECK(dot(obj, v) <= *r.optimum);
    }
}

TEST_CASE("witness is feasible and attains the optimum") {
    SplitMix64 rng(Seed{102});
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 1 + rng.below(3);
        LPProblem p;
        p.dim = n;
        p.objective = rng.vector(n, 4);
        std::size_t m = 1 + rng.below(6);
        for (std::size_t i = 0; i < m; ++i)
            p.constraints.push_back({rng.vector(n, 4), rng.rational(4)});
        LPResult r = solve_lp(p);
        if (r.status == LPStatus::Optimal) {
            for (const auto& c : p.constraints) CHECK(dot(c.a, *r.witness) <= c.b);
            CHECK(dot(p.objective, *r.witness) == *r.optimum);
        } else if (r.status == LPStatus::Unbounded) {
            for (const auto& c : p.constraints) {
                CHECK(dot(c.a, *r.witness) <= c.b);
                CHECK(dot(c.a, *r.ray) <= 0);
            }
            CHECK(dot(p.objective, *r.ray) > 0);
        }
    }
}
