#include "dq/checks.hpp"

#include "dq/expression.hpp"
#include "dq/random.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace dq {
namespace {

using Inputs = std::vector<std::pair<std::string, std::string>>;

std::string show(const Function& f) { return to_string(f); }
std::string show(const DiffOperator& d) { return to_string(d); }

class Recorder {
public:
    Recorder(CheckReport& report, std::string suite) : report_(report), suite_(std::move(suite)) {}

    template <class T>
    void equal(const std::string& property, const Inputs& inputs, const T& actual, const T& expected) {
        ++report_.checked;
        if (!(actual == expected)) fail(property, inputs, show(expected), show(actual));
    }

    void holds(const std::string& property, const Inputs& inputs, bool ok, const std::string& detail = "") {
        ++report_.checked;
        if (!ok) fail(property, inputs, "true", detail.empty() ? "false" : detail);
    }

    // Runs a case; an exception counts as a failure of that case.
    void guarded(const std::string& property, const Inputs& inputs, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            ++report_.checked;
            fail(property, inputs, "no error", std::string("error: ") + e.what());
        }
    }

private:
    void fail(const std::string& property, const Inputs& inputs, std::string expected, std::string actual) {
        report_.failures.push_back({suite_ + "/" + property, inputs, std::move(expected), std::move(actual)});
    }

    CheckReport& report_;
    std::string suite_;
};

int clamp_dim(int dim, int hi) { return std::clamp(dim, 1, hi); }

Function var(const ChartShape& s, const std::string& name) { return Function::variable(s, *s.index_of(name)); }

std::vector<Function> monomials(const Chart& chart, unsigned max_degree) {
    const auto& s = chart.shape();
    const int x = s.kind() == ChartKind::real ? s.p(0) : ChartShape::z;
    const int y = s.kind() == ChartKind::real ? s.q(0) : ChartShape::zb;
    std::vector<Function> out;
    for (unsigned total = 0; total <= max_degree; ++total)
        for (unsigned a = 0; a <= total; ++a)
            out.push_back(Function::variable(s, x).pow(a) * Function::variable(s, y).pow(total - a));
    return out;
}

// ---------------------------------------------------------------------------

void module_suite(const CheckOptions& o, CheckReport& report) {
    Recorder rec(report, "module");
    RandomSource rng(o.seed);
    const Chart real = Chart::real(clamp_dim(o.dim, 2));
    const Chart barg = Chart::bargmann();
    for (unsigned c = 0; c < o.cases; ++c) {
        for (StarKind kind : {StarKind::normal, StarKind::antinormal, StarKind::wick, StarKind::moyal}) {
            const Chart& chart = kind == StarKind::wick ? barg : real;
            const auto& s = chart.shape();
            Function f = rng.observable(s, o.max_degree), g = rng.observable(s, o.max_degree);
            Function h = kind == StarKind::moyal ? rng.wave(Representation::position, chart, 3, true)
                                                 : rng.equivariant(s, 3);
            const std::string name = "(F*G).h == F.(G.h) [" + to_string(kind) + "]";
            const Inputs in{{"F", show(f)}, {"G", show(g)}, {"h", show(h)}};
            rec.guarded(name, in, [&] {
                rec.equal(name, in, bullet_product(kind, chart, star_product(kind, chart, f, g), h),
                          bullet_product(kind, chart, f, bullet_product(kind, chart, g, h)));
            });
        }
    }
    // The Moyal tensor with the full hbar/i parameter breaks the identity by (hbar/2i) psi.
    const auto& s = real.shape();
    const Function p = Function::variable(s, s.p(0)), q = Function::variable(s, s.q(0));
    const Function psi = generic_wave_function(Representation::position, real);
    const Function pq = exponential_product(driver_tensor(StarKind::moyal, real), p, q, Coefficient::hbar_over_i());
    const Function defect = bullet_product(StarKind::moyal, real, pq, psi) -
                            bullet_product(StarKind::moyal, real, p, bullet_product(StarKind::moyal, real, q, psi));
    rec.equal("full-parameter Moyal star defect", {{"F", "p1"}, {"G", "q1"}, {"h", show(psi)}}, defect,
              Coefficient::hbar_over_i() * Coefficient(GaussianRational(Rational(1, 2))) * psi);
}

void polarization_suite(const CheckOptions& o, CheckReport& report) {
    Recorder rec(report, "polarization");
    RandomSource rng(o.seed);
    const Chart real = Chart::real(clamp_dim(o.dim, 3));
    const Chart barg = Chart::bargmann();
    for (unsigned c = 0; c < o.cases; ++c) {
        for (StarKind kind : {StarKind::normal, StarKind::moyal, StarKind::wick}) {
            const Chart& chart = kind == StarKind::wick ? barg : real;
            const Representation rep = kind == StarKind::wick ? Representation::bargmann : Representation::position;
            const Function f = rng.observable(chart.shape(), std::max(o.max_degree, 5u));
            const Function psi = generic_wave_function(rep, chart);
            const std::string name = "F.Psi is J-polarized [" + to_string(kind) + "]";
            const Inputs in{{"F", show(f)}, {"Psi", show(psi)}};
            rec.guarded(name, in, [&] {
                const Function out = bullet_product(kind, chart, f, psi);
                for (int x : polarization_j(chart).directions)
                    rec.equal(name + " along " + chart.shape().name(x), in, horizontal_lift(chart, x).apply(out),
                              Function::like(out));
            });
        }
    }
    // The anti-normal driver sends p Psi out of the J-polarized functions.
    const auto& s = real.shape();
    const Function p = Function::variable(s, s.p(0));
    const Function psi = generic_wave_function(Representation::position, real);
    const Inputs in{{"F", "p1"}, {"Psi", show(psi)}};
    const Function out = bullet_product(StarKind::antinormal, real, p, psi);
    rec.equal("antinormal p.Psi == p Psi", in, out, p * psi);
    rec.equal("antinormal p.Psi fails J", in, horizontal_lift(real, s.p(0)).apply(out), psi);
    bool reported = false;
    try {
        quantize(StarKind::antinormal, real, p, psi, polarization_j(real));
    } catch (const PolarizationViolation&) {
        reported = true;
    }
    rec.holds("antinormal violation is reported", in, reported);
}

void agarwal_suite(const CheckOptions& o, CheckReport& report) {
    Recorder rec(report, "agarwal");
    RandomSource rng(o.seed);
    const Chart real = Chart::real(clamp_dim(o.dim, 3));
    const Chart barg = Chart::bargmann();
    auto check = [&](const Chart& chart, Representation rep, StarKind base, const Function& f) {
        const std::string name = "Q_moyal(F) == Q_" + to_string(base) + "(exp(i hbar/2 Delta) F)";
        const Inputs in{{"F", show(f)}};
        rec.guarded(name, in, [&] {
            rec.equal(name, in, extract_operator(StarKind::moyal, chart, f, rep),
                      extract_operator(base, chart, agarwal_transform(chart, f), rep));
        });
    };
    for (const Function& f : monomials(real, o.max_degree)) check(real, Representation::position, StarKind::normal, f);
    for (const Function& f : monomials(barg, o.max_degree)) check(barg, Representation::bargmann, StarKind::wick, f);
    for (unsigned c = 0; c < o.cases; ++c) {
        check(real, Representation::position, StarKind::normal, rng.observable(real.shape(), o.max_degree));
        check(barg, Representation::bargmann, StarKind::wick, rng.observable(barg.shape(), o.max_degree));
    }
    // Q_moyal(|z|^2) = 2 hbar (z psi' + psi/2) on Bargmann wave functions
    const auto& s = barg.shape();
    const Function z = var(s, "z"), zb = var(s, "zb");
    const JetDomain dom = configuration_domain(Representation::bargmann, s);
    const Function expected = wave_function(
        Representation::bargmann, barg,
        Coefficient::hbar(1) * (Coefficient(2) * z * Function::jet(s, dom, {1, 0}) + Function::jet(s, dom, {0, 0})));
    rec.guarded("Q_moyal(z zb)", {{"F", "z*zb"}}, [&] {
        rec.equal("Q_moyal(z zb)", {{"F", "z*zb"}},
                  quantize(StarKind::moyal, barg, z * zb, generic_wave_function(Representation::bargmann, barg)),
                  expected);
    });
}

void homomorphism_suite(const CheckOptions& o, CheckReport& report) {
    Recorder rec(report, "homomorphism");
    RandomSource rng(o.seed);
    const Chart real = Chart::real(clamp_dim(o.dim, 2));
    const Chart barg = Chart::bargmann();
    const std::vector<std::pair<StarKind, Representation>> cases{{StarKind::normal, Representation::position},
                                                                 {StarKind::moyal, Representation::position},
                                                                 {StarKind::antinormal, Representation::momentum},
                                                                 {StarKind::wick, Representation::bargmann}};
    const unsigned degree = std::min(o.max_degree, 3u);
    for (unsigned c = 0; c < o.cases; ++c) {
        for (const auto& [kind, rep] : cases) {
            const Chart& chart = kind == StarKind::wick ? barg : real;
            const Function f = rng.observable(chart.shape(), degree), g = rng.observable(chart.shape(), degree);
            const std::string name = "Q(F*G) == Q(F) Q(G) [" + to_string(kind) + "]";
            const Inputs in{{"F", show(f)}, {"G", show(g)}};
            rec.guarded(name, in, [&] {
                rec.equal(name, in, extract_operator(kind, chart, star_product(kind, chart, f, g), rep),
                          compose(extract_operator(kind, chart, f, rep), extract_operator(kind, chart, g, rep)));
            });
        }
    }
    for (const auto& [kind, rep] : cases) {
        if (kind == StarKind::wick) continue;
        const auto& s = real.shape();
        const std::string name = "[Q(p), Q(q)] == hbar/i [" + to_string(kind) + "]";
        rec.guarded(name, {}, [&] {
            const DiffOperator qp = extract_operator(kind, real, Function::variable(s, s.p(0)), rep);
            const DiffOperator qq = extract_operator(kind, real, Function::variable(s, s.q(0)), rep);
            rec.equal(name, {}, compose(qp, qq) - compose(qq, qp),
                      DiffOperator::multiplication(rep, Function::constant(s, Coefficient::hbar_over_i())));
        });
    }
}

void chart_suite(const CheckOptions& o, CheckReport& report) {
    Recorder rec(report, "chart");
    RandomSource rng(o.seed);
    const Chart chart = Chart::real(clamp_dim(o.dim, 3));
    const auto& s = chart.shape();
    const unsigned degree = std::min(o.max_degree, 3u);
    for (unsigned c = 0; c < o.cases; ++c) {
        const AffineMap map = rng.affine_map(s.dim());
        const Function f = rng.observable(s, degree), g = rng.observable(s, degree);
        for (StarKind kind : {StarKind::normal, StarKind::antinormal, StarKind::moyal}) {
            const DriverTensor driver = driver_tensor(kind, chart);
            const DriverTensor moved = change_chart(map, driver);
            for (unsigned k = 0; k <= 4; ++k) {
                const std::string name = "Lambda^k(F (x) G) is chart independent [" + to_string(kind) +
                                         ", k=" + std::to_string(k) + "]";
                const Inputs in{{"F", show(f)}, {"G", show(g)}};
                rec.guarded(name, in, [&] {
                    TensorTerms there;
                    for (const auto& [l, r] : apply_driver(driver, f, g, k))
                        there.emplace_back(change_chart(map, l), change_chart(map, r));
                    const TensorTerms here = apply_driver(moved, change_chart(map, f), change_chart(map, g), k);
                    rec.holds(name, in, tensor_equal(here, there));
                });
            }
        }
    }
}

void jacobi_suite(const CheckOptions& o, CheckReport& report) {
    Recorder rec(report, "jacobi");
    RandomSource rng(o.seed);
    const Chart chart = Chart::real(clamp_dim(o.dim, 3));
    const auto& s = chart.shape();
    auto br = [&](const Function& a, const Function& b) { return souriau_bracket(chart, a, b); };
    for (unsigned c = 0; c < o.cases; ++c) {
        const Function f = rng.equivariant(s, 3), g = rng.equivariant(s, 3), h = rng.equivariant(s, 3);
        const Inputs in{{"f", show(f)}, {"g", show(g)}, {"h", show(h)}};
        rec.guarded("bracket", in, [&] {
            rec.equal("antisymmetry", in, br(f, g), -br(g, f));
            rec.equal("Leibniz", in, br(f, g * h), br(f, g) * h + g * br(f, h));
        });
        const Function a = rng.observable(s, 3), b = rng.observable(s, 3), d = rng.observable(s, 3);
        const Inputs obs{{"F", show(a)}, {"G", show(b)}, {"H", show(d)}};
        rec.guarded("Jacobi on observables", obs, [&] {
            rec.equal("Jacobi on observables", obs, jacobiator(chart, a, b, d), Function(s));
            rec.equal("bracket of observables is Poisson", obs, br(a, b), poisson_bracket(chart, a, b));
        });
        const Function psi = rng.wave(Representation::phase, chart, 2, true);
        rec.guarded("equivariance", {{"F", show(a)}, {"Psi", show(psi)}}, [&] {
            const Function out = br(a, psi);
            rec.holds("equivariance", {{"F", show(a)}, {"Psi", show(psi)}}, out.is_zero() || out.theta_weight() == 1,
                      show(out));
        });
    }
    const Function p = Function::variable(s, s.p(0)), q = Function::variable(s, s.q(0));
    rec.equal("Jacobiator(p, q, theta)", {{"f", "p1"}, {"g", "q1"}, {"h", "theta"}},
              jacobiator(chart, p, q, Function::theta(s)), Function::constant(s, -Coefficient::hbar(-1)));
}

void prequantization_suite(const CheckOptions& o, CheckReport& report) {
    Recorder rec(report, "prequantization");
    RandomSource rng(o.seed);
    const Chart chart = Chart::real(clamp_dim(o.dim, 2));
    const auto& s = chart.shape();
    const Function psi = generic_wave_function(Representation::phase, chart);
    const Function component = wave_component(Representation::phase, psi);
    const Coefficient hoi = Coefficient::hbar_over_i();
    auto pre = [&](const Function& f, const Function& w) { return prequantize(chart, f, w); };
    for (unsigned c = 0; c < o.cases; ++c) {
        const Function f = rng.observable(s, o.max_degree);
        Function expected = f * component;
        for (int j = 0; j < s.dim(); ++j) {
            const Function pj = Function::variable(s, s.p(j));
            expected += differentiate(f, s.p(j)) * (hoi * differentiate(component, s.q(j)) - pj * component);
            expected -= hoi * differentiate(f, s.q(j)) * differentiate(component, s.p(j));
        }
        const Inputs in{{"F", show(f)}};
        rec.guarded("coordinate formula", in, [&] {
            rec.equal("coordinate formula", in, pre(f, psi), wave_function(Representation::phase, chart, expected));
        });
    }
    const auto mons = monomials(chart, o.max_degree);
    const Coefficient i_over_hbar(GaussianRational::i(), -1);
    for (const auto& f : mons) {
        for (const auto& g : mons) {
            const Inputs in{{"F", show(f)}, {"G", show(g)}};
            rec.guarded("Dirac", in, [&] {
                rec.equal("Dirac", in, pre(poisson_bracket(chart, f, g), psi),
                          i_over_hbar * (pre(f, pre(g, psi)) - pre(g, pre(f, psi))));
            });
        }
    }
}

void commutators_suite(const CheckOptions& o, CheckReport& report) {
    Recorder rec(report, "commutators");
    RandomSource rng(o.seed);
    const Chart chart = Chart::real(clamp_dim(o.dim, 3));
    const auto& s = chart.shape();
    const Derivation eta = reeb_field(chart);
    for (unsigned c = 0; c < o.cases; ++c) {
        const Function f = rng.equivariant(s, 4);
        const Inputs in{{"f", show(f)}};
        rec.guarded("lift commutators", in, [&] {
            for (int l = 0; l < s.dim(); ++l) {
                const Derivation dp = horizontal_lift(chart, s.p(l));
                for (int m = 0; m < s.dim(); ++m) {
                    const Derivation dq = horizontal_lift(chart, s.q(m));
                    const Coefficient delta = l == m ? Coefficient::hbar(-1) : Coefficient();
                    rec.equal("[dp#, dq#] == -(1/hbar) delta eta", in, dp(dq(f)) - dq(dp(f)), -delta * eta(f));
                    Function power = f;  // (dq#)^(j-1) f
                    for (unsigned j = 1; j <= 5; ++j) {
                        const Function next = dq(power);
                        const Function lhs = dp(next);
                        Function right = dp(f);
                        for (unsigned k = 0; k < j; ++k) right = dq(right);
                        right -= Coefficient(GaussianRational(static_cast<long>(j))) * delta * eta(power);
                        rec.equal("dp# (dq#)^j == (dq#)^j dp# - delta (j/hbar) (dq#)^(j-1) eta", in, lhs, right);
                        power = next;
                    }
                }
                rec.equal("[eta, dq#] == 0", in, eta(horizontal_lift(chart, s.q(l))(f)),
                          horizontal_lift(chart, s.q(l))(eta(f)));
            }
        });
    }
}

void weyl_suite(const CheckOptions& o, CheckReport& report) {
    Recorder rec(report, "weyl");
    RandomSource rng(o.seed);
    const Chart chart = Chart::real(clamp_dim(o.dim, 3));
    const auto& s = chart.shape();
    const auto pos = Representation::position;
    for (const Function& f : monomials(chart, std::min(o.max_degree, 4u))) {
        const Inputs in{{"F", show(f)}};
        rec.guarded("Weyl operators are symmetric", in, [&] {
            const DiffOperator d = extract_operator(StarKind::moyal, chart, f, pos);
            rec.equal("Weyl operators are symmetric", in, formal_adjoint(d), d);
        });
    }
    const Function pq = Function::variable(s, s.p(0)) * Function::variable(s, s.q(0));
    rec.guarded("normal Q(pq) is not symmetric", {{"F", show(pq)}}, [&] {
        const DiffOperator d = extract_operator(StarKind::normal, chart, pq, pos);
        rec.holds("normal Q(pq) is not symmetric", {{"F", show(pq)}}, !(formal_adjoint(d) == d), show(d));
    });
    for (unsigned c = 0; c < o.cases; ++c) {
        const Function f = rng.observable(s, std::min(o.max_degree, 4u), 4, true);
        const Function g = rng.observable(s, std::min(o.max_degree, 4u), 4, true);
        const Inputs in{{"F", show(f)}};
        rec.guarded("antinormal == adjoint of normal", in, [&] {
            rec.equal("antinormal == adjoint of normal", in,
                      momentum_to_position(extract_operator(StarKind::antinormal, chart, f, Representation::momentum)),
                      formal_adjoint(extract_operator(StarKind::normal, chart, f, pos)));
            const DiffOperator d = extract_operator(StarKind::moyal, chart, f, pos);
            rec.equal("Weyl operators are symmetric", in, formal_adjoint(d), d);
            const DiffOperator e = extract_operator(StarKind::moyal, chart, g, pos);
            rec.equal("adjoint reverses composition", {{"F", show(f)}, {"G", show(g)}},
                      formal_adjoint(compose(d, e)), compose(formal_adjoint(e), formal_adjoint(d)));
        });
    }
}

void inverse_suite(const CheckOptions& o, CheckReport& report) {
    Recorder rec(report, "inverse");
    RandomSource rng(o.seed);
    const Chart chart = Chart::real(1);
    const auto& s = chart.shape();
    const Function p = Function::variable(s, s.p(0));
    for (unsigned c = 0; c < o.cases; ++c) {
        const Function psi = rng.polynomial(s, {s.q(0)}, std::max(o.max_degree, 6u), 4);
        const Function wave = wave_function(Representation::position, chart, psi);
        Function constant(s);
        for (const auto& [mono, coef] : psi.terms())
            if (mono.is_constant()) constant.add_term(mono, coef);
        const Inputs in{{"psi", show(psi)}};
        rec.guarded("Q(p) Q(1/p) == 1", in, [&] {
            const Function inv = quantize_inverse_p(chart, wave);
            rec.holds("Q(1/p) Psi is J-polarized", in, is_polarized(chart, polarization_j(chart), inv), show(inv));
            rec.equal("Q(p) Q(1/p) == 1", in, quantize(StarKind::moyal, chart, p, inv), wave);
            rec.equal("Q(1/p) Q(p) == 1 - psi(0)", in,
                      quantize_inverse_p(chart, quantize(StarKind::moyal, chart, p, wave)),
                      wave - wave_function(Representation::position, chart, constant));
        });
    }
}

void roundtrip_suite(const CheckOptions& o, CheckReport& report) {
    Recorder rec(report, "roundtrip");
    RandomSource rng(o.seed);
    const Chart real = Chart::real(clamp_dim(o.dim, 3));
    const Chart barg = Chart::bargmann();
    for (unsigned c = 0; c < o.cases; ++c) {
        std::vector<Function> samples{
            rng.equivariant(real.shape(), o.max_degree),
            rng.equivariant(barg.shape(), o.max_degree),
            rng.wave(Representation::momentum, real, o.max_degree, true),
            rng.wave(Representation::bargmann, barg, o.max_degree, true),
            Coefficient(rng.gaussian(true), rng.uniform(-3, 3)) * rng.observable(real.shape(), o.max_degree),
        };
        for (const Function& f : samples) {
            const std::string text = to_string(f);
            const JetDomain domain =
                f.has_jets() ? f.jet_domain() : configuration_domain(Representation::phase, f.shape());
            rec.guarded("parse(format(x)) == x", {{"x", text}}, [&] {
                rec.equal("parse(format(x)) == x", {{"x", text}}, parse_function(text, {f.shape(), domain}), f);
            });
        }
    }
}

using Suite = void (*)(const CheckOptions&, CheckReport&);

const std::map<std::string, Suite>& suites() {
    static const std::map<std::string, Suite> table{
        {"module", module_suite},           {"polarization", polarization_suite},
        {"agarwal", agarwal_suite},         {"homomorphism", homomorphism_suite},
        {"chart", chart_suite},             {"jacobi", jacobi_suite},
        {"prequantization", prequantization_suite}, {"commutators", commutators_suite},
        {"weyl", weyl_suite},               {"inverse", inverse_suite},
        {"roundtrip", roundtrip_suite},
    };
    return table;
}

}  // namespace

void CheckReport::merge(const CheckReport& other) {
    checked += other.checked;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"module",  "polarization", "agarwal", "homomorphism",
                                                "chart",   "jacobi",       "prequantization", "commutators",
                                                "weyl",    "inverse",      "roundtrip"};
    return names;
}

CheckReport run_suite(const std::string& name, const CheckOptions& options) {
    CheckReport report;
    if (name == "all") {
        for (const auto& n : suite_names()) suites().at(n)(options, report);
        return report;
    }
    auto it = suites().find(name);
    if (it == suites().end()) throw ConfigError("unknown check suite '" + name + "'");
    it->second(options, report);
    return report;
}

}  // namespace dq
