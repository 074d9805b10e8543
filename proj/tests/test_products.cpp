#include "dq/random.hpp"
#include "helpers.hpp"

using namespace dq;
using namespace dq::test;

namespace {

const Chart C1 = Chart::real(1);
const Chart BG = Chart::bargmann();
const ChartShape R1 = C1.shape();
const ChartShape B = BG.shape();
const JetDomain QDOM = configuration_domain(Representation::position, R1);

Function psi(unsigned n) { return Function::jet(R1, QDOM, {0, n}); }
Function e1() { return Function::wave(R1, 1); }

Derivation coord(const ChartShape& s, int var, const Coefficient& c = Coefficient(1)) {
    return Derivation::coordinate(s, var, c);
}

}  // namespace

TEST_CASE("driver tensors") {
    const auto nu = driver_tensor(StarKind::normal, C1);
    REQUIRE(nu.pairs().size() == 1);
    CHECK(nu.pairs()[0].s == coord(R1, R1.p(0)));
    CHECK(nu.pairs()[0].t == coord(R1, R1.q(0)));

    const auto mu = driver_tensor(StarKind::antinormal, C1);
    REQUIRE(mu.pairs().size() == 1);
    CHECK(mu.pairs()[0].s == coord(R1, R1.q(0), Coefficient(-1)));
    CHECK(mu.pairs()[0].t == coord(R1, R1.p(0)));

    const auto pi = driver_tensor(StarKind::moyal, Chart::real(2));
    REQUIRE(pi.pairs().size() == 4);
    CHECK(pi.fields_commute());

    const auto wick = driver_tensor(StarKind::wick, BG);
    REQUIRE(wick.pairs().size() == 1);
    CHECK(wick.pairs()[0].s == coord(B, ChartShape::zb, imag(2)));
    CHECK(wick.pairs()[0].t == coord(B, ChartShape::z));

    CHECK_THROWS_AS(driver_tensor(StarKind::wick, C1), ConfigError);
    CHECK_FALSE(driver_tensor(StarKind::normal, C1).lift(C1).fields_commute());
    CHECK_THROWS_AS(DriverTensor(R1, {{coord(R1, R1.q(0)), x(R1, "q1") * coord(R1, R1.p(0))}}), AlgebraError);
}

TEST_CASE("driver as a bilinear map") {
    const Function p = x(R1, "p1"), qq = x(R1, "q1");
    const auto nu = driver_tensor(StarKind::normal, C1);
    CHECK(tensor_equal(apply_driver(nu, p, qq, 1), {{k(R1, rat(1)), k(R1, rat(1))}}));
    CHECK(apply_driver(nu, qq, qq, 1).empty());
    CHECK(tensor_equal(apply_driver(nu, p, qq, 0), {{p, qq}}));

    // Lifted pi on (pq, psi e^{i theta}): the first step leaves q (x) (psi' - (i/hbar) p psi) e^{i theta},
    // the second -1 (x) -(i/hbar) psi e^{i theta}.
    const auto pi = driver_tensor(StarKind::moyal, C1).lift(C1);
    const Function wave = psi(0) * e1();
    const Coefficient i_over_hbar(GaussianRational(0, 1), -1);
    CHECK(tensor_equal(apply_driver(pi, p * qq, wave, 1), {{qq, (psi(1) - i_over_hbar * p * psi(0)) * e1()}}));
    CHECK(tensor_equal(apply_driver(pi, p * qq, wave, 2), {{k(R1, rat(1)), i_over_hbar * wave}}));
    CHECK(apply_driver(pi, p * qq, wave, 3).empty());

    CHECK(tensor_equal({{rat(2) * p, qq}}, {{p, rat(2) * qq}}));
    CHECK_FALSE(tensor_equal({{p, qq}}, {{qq, p}}));
}

TEST_CASE("star products") {
    const Function p = x(R1, "p1"), qq = x(R1, "q1");
    const Function h = k(R1, Coefficient::hbar_over_i());
    CHECK(star_product(StarKind::normal, C1, p, qq) == p * qq + h);
    CHECK(star_product(StarKind::normal, C1, qq, p) == p * qq);
    CHECK(star_product(StarKind::moyal, C1, p, qq) == p * qq + rat(1, 2) * h);
    CHECK(star_product(StarKind::moyal, C1, qq, p) == p * qq - rat(1, 2) * h);
    CHECK(star_product(StarKind::antinormal, C1, qq, p) == p * qq - h);

    RandomSource rng(8);
    const Function one = k(R1, rat(1));
    for (StarKind kind : {StarKind::normal, StarKind::antinormal, StarKind::moyal}) {
        const Function f = rng.observable(R1, 4);
        CHECK(star_product(kind, C1, f, one) == f);
        CHECK(star_product(kind, C1, one, f) == f);
    }
    const Function zz = x(B, "z") * x(B, "zb");
    CHECK(star_product(StarKind::wick, BG, x(B, "zb"), x(B, "z")) == zz + k(B, Coefficient(2) * hbar(1)));
    CHECK_THROWS_AS(star_product(StarKind::normal, C1, p * e1(), qq), AlgebraError);
}

TEST_CASE("series terminate after the degree of the differentiated variables") {
    RandomSource rng(12);
    const auto nu = driver_tensor(StarKind::normal, C1);
    for (int n = 0; n < 10; ++n) {
        const Function f = rng.observable(R1, 4), g = rng.observable(R1, 4);
        CHECK(apply_driver(nu, f, g, f.degree_in(R1.p(0)) + 1).empty());
    }
}

TEST_CASE("bullet products") {
    const Function p = x(R1, "p1"), qq = x(R1, "q1");
    const Function wave = psi(0) * e1();
    const Coefficient h = Coefficient::hbar_over_i();
    CHECK(bullet_product(StarKind::normal, C1, p, wave) == h * psi(1) * e1());
    CHECK(bullet_product(StarKind::moyal, C1, p * qq, wave) == h * (qq * psi(1) + rat(1, 2) * psi(0)) * e1());

    RandomSource rng(6);
    for (int n = 0; n < 10; ++n) {
        const Function f = rng.equivariant(R1, 3);
        CHECK(bullet_product(StarKind::antinormal, C1, k(R1, rat(1)), f) == f);
        const Function F = rng.observable(R1, 3);
        const Function phase = rng.wave(Representation::phase, C1, 2, true);
        // first-order term of the Moyal bullet is (hbar/i) times the Souriau bracket
        const auto pi = driver_tensor(StarKind::moyal, C1).lift(C1);
        CHECK(contract(apply_driver(pi, F, phase, 1), R1) == souriau_bracket(C1, F, phase));
        const Function out = bullet_product(StarKind::moyal, C1, F, phase);
        CHECK((out.is_zero() || out.theta_weight() == 1));
    }
}

TEST_CASE("the full-parameter Moyal star breaks the module identity") {
    const Function p = x(R1, "p1"), qq = x(R1, "q1");
    const Function wave = psi(0) * e1();
    const Function pq = exponential_product(driver_tensor(StarKind::moyal, C1), p, qq, Coefficient::hbar_over_i());
    const Function defect = bullet_product(StarKind::moyal, C1, pq, wave) -
                            bullet_product(StarKind::moyal, C1, p, bullet_product(StarKind::moyal, C1, qq, wave));
    CHECK(defect == rat(1, 2) * Coefficient::hbar_over_i() * wave);
    const Function fixed = bullet_product(StarKind::moyal, C1, star_product(StarKind::moyal, C1, p, qq), wave) -
                           bullet_product(StarKind::moyal, C1, p, bullet_product(StarKind::moyal, C1, qq, wave));
    CHECK(fixed.is_zero());
}

TEST_CASE("prequantization") {
    const Function p = x(R1, "p1"), qq = x(R1, "q1");
    CHECK(prequantize(C1, p, qq * e1()) == k(R1, Coefficient::hbar_over_i()) * e1());
    const Function wave = generic_wave_function(Representation::phase, C1);
    CHECK(prequantize(C1, k(R1, rat(1)), wave) == wave);
    const Function pos = psi(0) * e1();
    CHECK(prequantize(C1, qq, pos) == qq * pos);
    CHECK_THROWS_AS(prequantize(C1, p, qq), AlgebraError);
}

TEST_CASE("quantization") {
    const Function p = x(R1, "p1"), qq = x(R1, "q1");
    const Coefficient h = Coefficient::hbar_over_i();
    const Function wave = psi(0) * e1();

    SUBCASE("normal ordering") {
        const Function f = qq * qq * p * p + qq * p + k(R1, rat(3));
        CHECK(quantize(StarKind::normal, C1, f, wave) ==
              (h * h * qq * qq * psi(2) + h * qq * psi(1) + rat(3) * psi(0)) * e1());
        CHECK(quantize(StarKind::normal, C1, k(R1, rat(1)), wave) == wave);
    }

    SUBCASE("anti-normal ordering in the momentum representation") {
        const JetDomain pdom = configuration_domain(Representation::momentum, R1);
        const Function phi = generic_wave_function(Representation::momentum, C1);
        const Function expected = wave_function(Representation::momentum, C1,
                                                h * h * p * Function::jet(R1, pdom, {2, 0}) -
                                                    h * Function::jet(R1, pdom, {1, 0}));
        CHECK(quantize(StarKind::antinormal, C1, qq * qq * p + qq, phi) == expected);
    }

    SUBCASE("Wick ordering") {
        const JetDomain zdom = configuration_domain(Representation::bargmann, B);
        const Function z = x(B, "z"), zb = x(B, "zb");
        const Function gen = generic_wave_function(Representation::bargmann, BG);
        const Function expected =
            wave_function(Representation::bargmann, BG, rat(2) * hbar(1) * z * Function::jet(B, zdom, {1, 0}));
        CHECK(quantize(StarKind::wick, BG, z * zb, gen) == expected);
        // |z|^2 = (2iz)(zb/2i)
        CHECK(quantize(StarKind::wick, BG, (imag(2) * z) * (imag(-1, 2) * zb), gen) == expected);
    }

    SUBCASE("polarization violations are reported") {
        try {
            quantize(StarKind::antinormal, C1, p, wave, polarization_j(C1));
            FAIL("expected a violation");
        } catch (const PolarizationViolation& e) {
            CHECK(e.offending() == p * wave);
        }
        CHECK_THROWS_AS(quantize(StarKind::normal, C1, p, p * e1()), PolarizationViolation);
    }
}

TEST_CASE("Yano Laplacian and Agarwal transform") {
    const Function p = x(R1, "p1"), qq = x(R1, "q1"), z = x(B, "z"), zb = x(B, "zb");
    CHECK(yano_laplacian(C1, p * qq) == k(R1, rat(-1)));
    CHECK(yano_laplacian(C1, p * p + qq * qq).is_zero());
    CHECK(yano_laplacian(BG, z * zb) == k(B, imag(-2)));
    CHECK(agarwal_transform(C1, p * qq) == p * qq - k(R1, Coefficient(GaussianRational(0, q(1, 2)), 1)));
    CHECK(agarwal_transform(BG, z * zb) == z * zb + k(B, hbar(1)));
    CHECK(agarwal_transform(C1, p * p) == p * p);
}

TEST_CASE("Q(1/p)") {
    const Function qq = x(R1, "q1");
    const Coefficient i_over_hbar(GaussianRational(0, 1), -1);
    CHECK(quantize_inverse_p(C1, e1()) == i_over_hbar * qq * e1());
    CHECK(quantize_inverse_p(C1, qq * e1()) == i_over_hbar * rat(1, 2) * qq * qq * e1());
    RandomSource rng(14);
    for (int n = 0; n < 10; ++n) {
        const Function wave = rng.polynomial(R1, {R1.q(0)}, 6, 4) * e1();
        CHECK(quantize(StarKind::moyal, C1, x(R1, "p1"), quantize_inverse_p(C1, wave)) == wave);
    }
    CHECK_THROWS_AS(quantize_inverse_p(C1, psi(0) * e1()), AlgebraError);
    CHECK_THROWS_AS(quantize_inverse_p(Chart::real(2), e1()), AlgebraError);
}
