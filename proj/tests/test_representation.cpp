#include "dq/random.hpp"
#include "helpers.hpp"

using namespace dq;
using namespace dq::test;

namespace {

const Chart C1 = Chart::real(1);
const ChartShape R1 = C1.shape();
const auto POS = Representation::position;
const auto MOM = Representation::momentum;

DiffOperator d_dq(const ChartShape& s = R1, int k = 0) { return DiffOperator::derivative(POS, s, s.q(k)); }
DiffOperator mult(const Function& f, Representation rep = POS) { return DiffOperator::multiplication(rep, f); }

}  // namespace

TEST_CASE("representations fit their charts") {
    CHECK_THROWS_AS(check_compatible(Representation::bargmann, R1), ConfigError);
    CHECK_THROWS_AS(check_compatible(POS, ChartShape::bargmann()), ConfigError);
    CHECK(configuration_variables(MOM, ChartShape::real(2)) == std::vector<int>{0, 1});
    CHECK(configuration_variables(POS, ChartShape::real(2)) == std::vector<int>{2, 3});
    CHECK_THROWS_AS(representation_polarization(Representation::phase, C1), ConfigError);
    CHECK(representation_weight(MOM, R1)->id() == "phase");
    CHECK_FALSE(representation_weight(POS, R1));
}

TEST_CASE("wave functions and their components") {
    const Function comp = x(R1, "q1");
    const Function wave = wave_function(POS, C1, comp);
    CHECK(wave == comp * Function::wave(R1, 1));
    CHECK(wave_component(POS, wave) == comp);
    CHECK_THROWS_AS(wave_component(MOM, wave), AlgebraError);
    CHECK_THROWS_AS(wave_function(POS, C1, Function::wave(R1, 1)), AlgebraError);
}

TEST_CASE("operator extraction") {
    const Function p = x(R1, "p1"), qq = x(R1, "q1");
    const Coefficient h = Coefficient::hbar_over_i();
    CHECK(extract_operator(StarKind::normal, C1, qq * p, POS) == h * compose(mult(qq), d_dq()));
    CHECK(extract_operator(StarKind::moyal, C1, qq * p, POS) ==
          h * (compose(mult(qq), d_dq()) + rat(1, 2) * DiffOperator::identity(POS, R1)));
    CHECK(extract_operator(StarKind::antinormal, C1, qq, MOM) == -h * DiffOperator::derivative(MOM, R1, R1.p(0)));
    CHECK(extract_operator(StarKind::normal, C1, k(R1, rat(1)), POS) == DiffOperator::identity(POS, R1));
    CHECK_THROWS_AS(extract_operator(StarKind::antinormal, C1, p, POS), PolarizationViolation);
    CHECK_THROWS_AS(extract_operator(StarKind::normal, C1, p, Representation::phase), ConfigError);
}

TEST_CASE("extracted operators reproduce quantize") {
    RandomSource rng(31);
    const Chart c2 = Chart::real(2);
    for (int n = 0; n < 20; ++n) {
        const Function f = rng.observable(c2.shape(), 4);
        const Function wave = rng.wave(POS, c2, 4, false);
        for (StarKind kind : {StarKind::normal, StarKind::moyal}) {
            const DiffOperator d = extract_operator(kind, c2, f, POS);
            CHECK(wave_function(POS, c2, d.apply(wave_component(POS, wave))) == quantize(kind, c2, f, wave));
        }
        const Function phi = rng.wave(MOM, c2, 3, false);
        const DiffOperator d = extract_operator(StarKind::antinormal, c2, f, MOM);
        CHECK(wave_function(MOM, c2, d.apply(wave_component(MOM, phi))) == quantize(StarKind::antinormal, c2, f, phi));
    }
}

TEST_CASE("composition") {
    const Function qq = x(R1, "q1");
    CHECK(compose(d_dq(), mult(qq)) == compose(mult(qq), d_dq()) + DiffOperator::identity(POS, R1));
    const DiffOperator qp = extract_operator(StarKind::normal, C1, x(R1, "p1"), POS);
    const DiffOperator qx = extract_operator(StarKind::normal, C1, qq, POS);
    CHECK(compose(qp, qx) - compose(qx, qp) == mult(k(R1, Coefficient::hbar_over_i())));
    CHECK(compose(qp, DiffOperator::identity(POS, R1)) == qp);

    RandomSource rng(41);
    const Chart c2 = Chart::real(2);
    for (int n = 0; n < 10; ++n) {
        const DiffOperator a = extract_operator(StarKind::normal, c2, rng.observable(c2.shape(), 3), POS);
        const DiffOperator b = extract_operator(StarKind::normal, c2, rng.observable(c2.shape(), 3), POS);
        const Function psi = rng.polynomial(c2.shape(), configuration_variables(POS, c2.shape()), 5, 4);
        CHECK(compose(a, b).apply(psi) == a.apply(b.apply(psi)));
    }
}

TEST_CASE("formal adjoints") {
    const Function qq = x(R1, "q1");
    const Coefficient h = Coefficient::hbar_over_i();
    CHECK(formal_adjoint(h * d_dq()) == h * d_dq());
    CHECK(formal_adjoint(h * compose(mult(qq), d_dq())) ==
          h * (compose(mult(qq), d_dq()) + DiffOperator::identity(POS, R1)));
    const DiffOperator weyl = h * (compose(mult(qq), d_dq()) + rat(1, 2) * DiffOperator::identity(POS, R1));
    CHECK(formal_adjoint(weyl) == weyl);

    RandomSource rng(51);
    for (int n = 0; n < 10; ++n) {
        const DiffOperator a = extract_operator(StarKind::normal, C1, rng.observable(R1, 4), POS);
        const DiffOperator b = extract_operator(StarKind::antinormal, C1, rng.observable(R1, 3), MOM);
        CHECK(formal_adjoint(formal_adjoint(a)) == a);
        CHECK(formal_adjoint(formal_adjoint(b)) == b);
    }
    CHECK_THROWS_AS(formal_adjoint(DiffOperator::identity(Representation::bargmann, ChartShape::bargmann())),
                    AlgebraError);
}

TEST_CASE("momentum operators carried to the position representation") {
    const Coefficient h = Coefficient::hbar_over_i();
    const Function p = x(R1, "p1");
    CHECK(momentum_to_position(mult(p, MOM)) == h * d_dq());
    CHECK(momentum_to_position(DiffOperator::derivative(MOM, R1, R1.p(0))) ==
          mult(Coefficient(GaussianRational(0, -1), -1) * x(R1, "q1")));
    CHECK_THROWS_AS(momentum_to_position(d_dq()), AlgebraError);
}

TEST_CASE("operator coefficients are checked") {
    DiffOperator d(POS, R1);
    CHECK_THROWS_AS(d.add_term({1, 0}, k(R1, rat(1))), AlgebraError);
    CHECK_THROWS_AS(d.add_term({0, 1}, x(R1, "p1")), AlgebraError);
    CHECK_THROWS_AS(d.add_term({0, 1}, Function::wave(R1, 1)), AlgebraError);
    d.add_term({0, 1}, x(R1, "q1"));
    d.add_term({0, 1}, -x(R1, "q1"));
    CHECK(d.is_zero());
}

TEST_CASE("operator text form") {
    const Function qq = x(R1, "q1");
    const Coefficient h = Coefficient::hbar_over_i();
    const DiffOperator weyl = h * (compose(mult(qq), d_dq()) + rat(1, 2) * DiffOperator::identity(POS, R1));
    CHECK(to_string(weyl) == "(hbar/i)*q1*d(1) + (1/2)*(hbar/i)");
    CHECK(to_string(-h * d_dq()) == "-(hbar/i)*d(1)");
    CHECK(to_string(d_dq()) == "d(1)");
    CHECK(to_string(DiffOperator(POS, R1)) == "0");
    const ChartShape r2 = ChartShape::real(2);
    CHECK(to_string(compose(d_dq(r2, 0), d_dq(r2, 1))) == "d(1,1)");
}
