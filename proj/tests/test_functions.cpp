#include <catch2/catch_amalgamated.hpp>

#include "ccx/functions.hpp"
#include "ccx/oracle.hpp"

using namespace ccx;

namespace {

Constraint row(std::vector<long> a, long b, bool strict = false) {
    QVector v;
    for (long x : a) v.emplace_back(x);
    return {std::move(v), Rational(b), strict};
}

QVector qv(std::vector<long> xs) {
    QVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

PolyhedralFunction abs_value() {
    return PolyhedralFunction::from_max_affine(1, {{qv({1}), Rational(0)}, {qv({-1}), Rational(0)}});
}

HPolyhedron interval01() { return HPolyhedron(1, {row({1}, 1), row({-1}, 0)}); }

} // namespace

TEST_CASE("evaluation of the absolute value") {
    PolyhedralFunction f = abs_value();
    CHECK(f.evaluate(qv({2})).value == 2);
    CHECK(f.evaluate(qv({-3})).value == 3);
    CHECK(f.evaluate(qv({0})).value == 0);
}

TEST_CASE("evaluation outside the domain is plus infinity") {
    PolyhedralFunction ind = PolyhedralFunction::indicator(interval01());
    CHECK(ind.evaluate(qv({2})).kind == ExtendedValue::Kind::PlusInfinity);
    CHECK(ind.evaluate(qv({1})).value == 0);
}

TEST_CASE("cylindrical epigraphs are rejected as improper") {
    // epigraph {(x, t) : x <= 0} lets t drop to minus infinity
    CHECK_THROWS_AS(PolyhedralFunction(1, HPolyhedron(2, {row({1, 0}, 0)})), ImproperFunctionError);
}

TEST_CASE("epigraphs must be upward closed") {
    CHECK_THROWS_AS(PolyhedralFunction(1, HPolyhedron(2, {row({0, 1}, 0)})), std::invalid_argument);
}

TEST_CASE("subdifferentials of the absolute value") {
    PolyhedralFunction f = abs_value();
    Subdifferential at0 = subdifferential(f, qv({0}));
    CHECK(contains_point(at0.set, qv({1})));
    CHECK(contains_point(at0.set, qv({-1})));
    CHECK(contains_point(at0.set, QVector{make_rational(1, 2)}));
    CHECK_FALSE(contains_point(at0.set, qv({2})));

    Subdifferential at1 = subdifferential(f, qv({1}));
    VPolyhedron v = to_generators(at1.set);
    CHECK(v.vertices == std::vector<QVector>{qv({1})});
    CHECK(v.rays.empty());
}

TEST_CASE("subdifferential of an indicator is the normal cone") {
    PolyhedralFunction ind = PolyhedralFunction::indicator(interval01());
    Subdifferential at1 = subdifferential(ind, qv({1}));
    CHECK(contains_point(at1.set, qv({0})));
    CHECK(contains_point(at1.set, qv({7})));
    CHECK_FALSE(contains_point(at1.set, qv({-1})));
}

TEST_CASE("subdifferential vertices pass the definitional oracle") {
    SplitMix64 rng(Seed{61});
    for (int t = 0; t < 15; ++t) {
        InstanceSpec spec;
        spec.dim = 2;
        QVector anchor = rng.vector(2, 2);
        PolyhedralFunction f = generate_function_around(2, spec, rng, anchor);
        QVector x = anchor;
        Subdifferential d = subdifferential(f, x);
        for (const auto& g : to_generators(d.set).vertices)
            CHECK(check_subgradient_definitional(f, x, g));
        for (int s = 0; s < 5; ++s) {
            QVector g = rng.vector(2, 5);
            CHECK(check_subgradient_definitional(f, x, g) == contains_point(d.set, g));
        }
    }
}

TEST_CASE("sum of absolute value and an indicator") {
    PolyhedralFunction sum = func_sum(abs_value(), PolyhedralFunction::indicator(interval01()));
    CHECK(sum.evaluate(QVector{make_rational(1, 2)}).value == make_rational(1, 2));
    CHECK(sum.evaluate(qv({1})).value == 1);
    CHECK(sum.evaluate(qv({-1})).kind == ExtendedValue::Kind::PlusInfinity);
}

TEST_CASE("adding the zero function changes nothing") {
    PolyhedralFunction zero = PolyhedralFunction::from_max_affine(1, {{qv({0}), Rational(0)}});
    PolyhedralFunction sum = func_sum(abs_value(), zero);
    CHECK(equal_closed(sum.epigraph(), abs_value().epigraph()));
}

TEST_CASE("disjoint domains produce the improper empty epigraph") {
    PolyhedralFunction left = PolyhedralFunction::indicator(HPolyhedron(1, {row({1}, 0)}));
    PolyhedralFunction right = PolyhedralFunction::indicator(HPolyhedron(1, {row({-1}, -1)}));
    PolyhedralFunction sum = func_sum(left, right);
    CHECK_FALSE(sum.proper());
}

TEST_CASE("precomposition with linear maps") {
    QMatrix A{{1, 1}};
    PolyhedralFunction f = precompose_linear(abs_value(), A);
    CHECK(f.evaluate(qv({1, 2})).value == 3);
    CHECK(f.evaluate(qv({1, -2})).value == 1);

    PolyhedralFunction same = precompose_linear(abs_value(), QMatrix::identity(1));
    CHECK(equal_closed(same.epigraph(), abs_value().epigraph()));

    QMatrix zero(1, 2);
    PolyhedralFunction c = precompose_linear(abs_value(), zero);
    CHECK(c.evaluate(qv({4, 5})).value == 0);
}

TEST_CASE("adjoint images") {
    QMatrix A{{1, 1}};
    HPolyhedron seg(1, {row({1}, 1), row({-1}, 1)});
    HPolyhedron img = adjoint_image(A, seg);
    CHECK(contains_point(img, qv({1, 1})));
    CHECK(contains_point(img, qv({-1, -1})));
    CHECK_FALSE(contains_point(img, qv({1, 0})));

    CHECK(equal_closed(adjoint_image(QMatrix::identity(1), seg), seg));

    HPolyhedron origin(1, {row({1}, 0), row({-1}, 0)});
    HPolyhedron img0 = adjoint_image(A, origin);
    VPolyhedron v = to_generators(img0);
    CHECK(v.vertices == std::vector<QVector>{qv({0, 0})});
}

namespace {

// phi(x, y) = y over gph F = {y >= x, y >= -x}: mu = |x|
PolyhedralFunction phi_second_coord() {
    return PolyhedralFunction::from_max_affine(2, {{qv({0, 1}), Rational(0)}});
}
SetValuedMap vee_map() {
    return SetValuedMap(1, 1, HPolyhedron(2, {row({1, -1}, 0), row({-1, -1}, 0)}));
}

} // namespace

TEST_CASE("marginal function of the worked example is the absolute value") {
    PolyhedralFunction mu = marginal_function(phi_second_coord(), vee_map());
    CHECK(equal_closed(mu.epigraph(), abs_value().epigraph()));
}

TEST_CASE("marginal of an empty map is identically plus infinity") {
    SetValuedMap none(1, 1, HPolyhedron::empty(2));
    PolyhedralFunction mu = marginal_function(phi_second_coord(), none);
    CHECK_FALSE(mu.proper());
}

TEST_CASE("marginal unbounded below is rejected") {
    PolyhedralFunction neg = PolyhedralFunction::from_max_affine(2, {{qv({0, -1}), Rational(0)}});
    SetValuedMap upper(1, 1, HPolyhedron(2, {row({0, -1}, 0)}));  // F(x) = [0, inf)
    CHECK_THROWS_AS(marginal_function(neg, upper), ImproperFunctionError);
}

TEST_CASE("argmin sets of the worked example") {
    auto phi = phi_second_coord();
    auto F = vee_map();
    VPolyhedron a0 = to_generators(argmin_set(phi, F, qv({0})));
    CHECK(a0.vertices == std::vector<QVector>{qv({0})});
    VPolyhedron a1 = to_generators(argmin_set(phi, F, qv({1})));
    CHECK(a1.vertices == std::vector<QVector>{qv({1})});
}

TEST_CASE("flat objective makes every feasible point optimal") {
    PolyhedralFunction zero2 = PolyhedralFunction::from_max_affine(2, {{qv({0, 0}), Rational(0)}});
    SetValuedMap box(1, 1, HPolyhedron(2, {row({0, 1}, 1), row({0, -1}, 0)}));
    HPolyhedron am = argmin_set(zero2, box, qv({0}));
    CHECK(equal_closed(am, interval01()));
}

TEST_CASE("marginal subdifferential of the worked example") {
    auto phi = phi_second_coord();
    auto F = vee_map();
    auto at0 = marginal_subdifferential(phi, F, qv({0}), qv({0}));
    REQUIRE(at0.ok());
    VPolyhedron v0 = to_generators(*at0.set);
    REQUIRE(v0.vertices.size() == 2);
    CHECK(v0.vertices[0] == qv({-1}));
    CHECK(v0.vertices[1] == qv({1}));

    auto at1 = marginal_subdifferential(phi, F, qv({1}), qv({1}));
    REQUIRE(at1.ok());
    VPolyhedron v1 = to_generators(*at1.set);
    CHECK(v1.vertices == std::vector<QVector>{qv({1})});

    // both routes agree with direct subdifferentiation of mu
    PolyhedralFunction mu = marginal_function(phi, F);
    CHECK(equal_closed(*at0.set, subdifferential(mu, qv({0})).set));
    CHECK(equal_closed(*at1.set, subdifferential(mu, qv({1})).set));
}

TEST_CASE("marginal subdifferential outcomes") {
    auto phi = phi_second_coord();
    auto F = vee_map();
    auto bad = marginal_subdifferential(phi, F, qv({0}), qv({3}));
    CHECK(bad.outcome == MarginalSubdifferential::Outcome::NotOptimal);
}

TEST_CASE("flat objective over the whole space has subdifferential zero") {
    PolyhedralFunction zero2 = PolyhedralFunction::from_max_affine(2, {{qv({0, 0}), Rational(0)}});
    SetValuedMap whole(1, 1, HPolyhedron::whole_space(2));
    auto d = marginal_subdifferential(zero2, whole, qv({0}), qv({0}));
    REQUIRE(d.ok());
    VPolyhedron v = to_generators(*d.set);
    CHECK(v.vertices == std::vector<QVector>{qv({0})});
    CHECK(v.rays.empty());
}
