#include "dq/derivation.hpp"
#include "dq/random.hpp"
#include "helpers.hpp"

#include <algorithm>

using namespace dq;
using namespace dq::test;

namespace {

const ChartShape R1 = ChartShape::real(1);
const ChartShape R2 = ChartShape::real(2);
const ChartShape B = ChartShape::bargmann();
const JetDomain QDOM = configuration_domain(Representation::position, R1);

}  // namespace

TEST_CASE("chart shapes name and index their variables") {
    CHECK(R2.name(R2.p(1)) == "p2");
    CHECK(R2.name(R2.q(0)) == "q1");
    CHECK(R2.index_of("q2") == R2.q(1));
    CHECK_FALSE(R2.index_of("q3"));
    CHECK_FALSE(R2.index_of("z"));
    CHECK(B.index_of("zb") == ChartShape::zb);
    CHECK_THROWS_AS(ChartShape::real(0), AlgebraError);
}

TEST_CASE("polynomial ring identities") {
    const Function p = x(R1, "p1"), qq = x(R1, "q1");
    CHECK((p + qq) * (p - qq) == p * p - qq * qq);
    CHECK((hbar(-1) * p) * (hbar(1) * qq) == p * qq);
    CHECK(Function::constant(R1, Coefficient(GaussianRational(1, 1))) *
              Function::constant(R1, Coefficient(GaussianRational(1, -1))) ==
          Function::constant(R1, rat(2)));
    CHECK((p * qq + qq * p - rat(2) * p * qq).is_zero());
    CHECK(Function::constant(R1, hbar(1) * hbar(-1)) == Function::constant(R1, rat(1)));
    CHECK(p.pow(0) == Function::constant(R1, rat(1)));
}

TEST_CASE("ring axioms on random triples") {
    RandomSource rng(11);
    for (int n = 0; n < 50; ++n) {
        const Function a = rng.equivariant(R2, 3), b = rng.equivariant(R2, 3), d = rng.equivariant(R2, 3);
        CHECK((a * b) * d == a * (b * d));
        CHECK(a * (b + d) == a * b + a * d);
        CHECK(a * b == b * a);
        CHECK((a + b) + d == a + (b + d));
    }
}

TEST_CASE("canonical form does not depend on summation order") {
    RandomSource rng(5);
    for (int n = 0; n < 20; ++n) {
        const Function f = rng.observable(R2, 4, 8);
        std::vector<Function> terms;
        for (const auto& [mono, coef] : f.terms()) {
            Function t(R2);
            t.add_term(mono, coef);
            terms.push_back(t.canonicalize());
        }
        std::shuffle(terms.begin(), terms.end(), rng.engine());
        Function sum(R2);
        for (const auto& t : terms) sum += t;
        CHECK(sum == f);
        CHECK(to_string(sum) == to_string(f));
    }
}

TEST_CASE("terms print in descending graded lexicographic order") {
    CHECK(to_string(parse("1 + q1 + p1^2 + p1*q1 + q1^2", R1)) == "p1^2 + p1*q1 + q1^2 + q1 + 1");
    CHECK(to_string(parse("q1*p1 + (1/2)*hbar/i", R1)) == "p1*q1 + (1/2)*(hbar/i)");
    CHECK(to_string(parse("-p1 + (1+2*i)*q1", R1)) == "-p1 + (1 + 2*i)*q1");
    CHECK(to_string(parse("hbar^-1", R1)) == "-i*(hbar/i)^-1");
    CHECK(to_string(Function(R1)) == "0");
}

TEST_CASE("partial derivatives") {
    const Function p = x(R1, "p1"), qq = x(R1, "q1");
    CHECK(differentiate(p * p * qq, R1.p(0)) == rat(2) * p * qq);

    SUBCASE("jets follow the chain rule in their domain only") {
        const Function psi0 = Function::jet(R1, QDOM, {0, 0});
        const Function psi1 = Function::jet(R1, QDOM, {0, 1});
        CHECK(differentiate(psi0 * qq, R1.q(0)) == psi0 + qq * psi1);
        CHECK(differentiate(psi0 * qq, R1.p(0)).is_zero());
    }

    SUBCASE("weight factors contribute their log-derivative") {
        const Function z = x(B, "z");
        const Function w = z.with_weight(gaussian_weight());
        const Function expected = (z * Coefficient(GaussianRational(q(-1, 4)), -1) * z).with_weight(gaussian_weight());
        CHECK(differentiate(w, ChartShape::zb) == expected);
    }

    CHECK_THROWS_AS(differentiate(p, 7), AlgebraError);
}

TEST_CASE("mixed partials commute, weight factors included") {
    CHECK(gaussian_weight()->is_closed());
    CHECK(momentum_phase(2)->is_closed());
    RandomSource rng(3);
    for (int n = 0; n < 30; ++n) {
        const Function f = rng.wave(Representation::momentum, Chart::real(2), 3, true);
        for (int a = 0; a < R2.variable_count(); ++a)
            for (int b = 0; b < R2.variable_count(); ++b)
                CHECK(differentiate(differentiate(f, a), b) == differentiate(differentiate(f, b), a));
        const Function g = rng.wave(Representation::bargmann, Chart::bargmann(), 3, true);
        CHECK(differentiate(differentiate(g, 0), 1) == differentiate(differentiate(g, 1), 0));
    }
}

TEST_CASE("theta derivatives") {
    const Function wave = x(R1, "q1") * Function::wave(R1, 2);
    CHECK(differentiate_theta(wave) == imag(2) * wave);
    CHECK(differentiate_theta(Function::theta(R1)) == Function::constant(R1, rat(1)));
}

TEST_CASE("incompatible contexts are rejected") {
    const Function a = Function::constant(B, rat(1)).with_weight(gaussian_weight());
    CHECK_THROWS_AS(a * a, AlgebraError);
    CHECK_THROWS_AS(x(R1, "p1") + x(R2, "p1"), AlgebraError);
    CHECK_THROWS_AS(Function::jet(R1, QDOM, {1, 0}), AlgebraError);
    CHECK_THROWS_AS(weight_by_id("gauss", R1), AlgebraError);
    const Function w = a * x(B, "z");
    CHECK(w.weight());
    CHECK((w - w).is_zero());
}

TEST_CASE("theta weights and observables") {
    const Function p = x(R1, "p1");
    CHECK(p.is_observable());
    CHECK((p * Function::wave(R1, 1)).theta_weight() == 1);
    CHECK_FALSE((p + Function::wave(R1, 1)).theta_weight());
    CHECK_FALSE((p * Function::theta(R1)).is_observable());
    CHECK((Function::wave(R1, 1) * Function::wave(R1, -1)) == Function::constant(R1, rat(1)));
}

TEST_CASE("derivations act by the Leibniz rule") {
    RandomSource rng(9);
    const Chart chart = Chart::real(2);
    for (int n = 0; n < 30; ++n) {
        std::vector<Function> comps;
        for (int v = 0; v < R2.variable_count(); ++v) comps.push_back(rng.observable(R2, 2, 2));
        const Derivation d(R2, comps, rng.observable(R2, 2, 2) * Coefficient(GaussianRational(1), -1));
        const Function f = rng.equivariant(R2, 3), g = rng.equivariant(R2, 3);
        CHECK(d(f * g) == d(f) * g + f * d(g));
        const Derivation lift = horizontal_lift(chart, R2.q(n % 2));
        CHECK(lift(f * g) == lift(f) * g + f * lift(g));
    }
}

TEST_CASE("applying derivations") {
    const Chart chart = Chart::real(1);
    const Function p = x(R1, "p1"), qq = x(R1, "q1"), e1 = Function::wave(R1, 1);
    const Function psi = Function::jet(R1, QDOM, {0, 0}) * e1;
    CHECK(reeb_field(chart)(psi) == imag(1) * psi);

    // (d/dq - (p/hbar) d/dtheta)(q e^{i theta}) = (1 - i p q / hbar) e^{i theta}
    const Function expected = (Function::constant(R1, rat(1)) - Coefficient(GaussianRational(0, 1), -1) * p * qq) * e1;
    CHECK(horizontal_lift(chart, R1.q(0))(qq * e1) == expected);

    const Chart barg = Chart::bargmann();
    const Function holo = (x(B, "z") * Function::wave(B, 1)).with_weight(gaussian_weight());
    CHECK(horizontal_lift(barg, ChartShape::zb)(holo).is_zero());

    CHECK_THROWS_AS(horizontal_lift(chart, R1.q(0))(x(R2, "p1")), AlgebraError);
}
