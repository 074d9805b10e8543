#include "dq/representation.hpp"

#include <functional>
#include <numeric>

namespace dq {
namespace {

Rational binomial(unsigned n, unsigned k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return Rational(out);
}

// All gamma <= alpha componentwise, with prod_i C(alpha_i, gamma_i).
void for_each_subindex(const MultiIndex& alpha, const std::function<void(const MultiIndex&, const Rational&)>& fn) {
    MultiIndex gamma(alpha.size(), 0);
    while (true) {
        Rational weight = 1;
        for (size_t i = 0; i < alpha.size(); ++i) weight *= binomial(alpha[i], gamma[i]);
        fn(gamma, weight);
        size_t i = 0;
        for (; i < alpha.size(); ++i) {
            if (gamma[i] < alpha[i]) {
                ++gamma[i];
                break;
            }
            gamma[i] = 0;
        }
        if (i == alpha.size()) return;
    }
}

Function partial(const Function& f, const MultiIndex& alpha) {
    Function out = f;
    for (size_t v = 0; v < alpha.size(); ++v)
        for (unsigned k = 0; k < alpha[v]; ++k) out = differentiate(out, static_cast<int>(v));
    return out;
}

MultiIndex add(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex out = a;
    for (size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

MultiIndex sub(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex out = a;
    for (size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

}  // namespace

std::string to_string(Representation rep) {
    switch (rep) {
        case Representation::position: return "position";
        case Representation::momentum: return "momentum";
        case Representation::bargmann: return "bargmann";
        case Representation::phase: return "phase";
    }
    return "?";
}

std::optional<Representation> parse_representation(const std::string& name) {
    for (auto r : {Representation::position, Representation::momentum, Representation::bargmann, Representation::phase})
        if (to_string(r) == name) return r;
    return std::nullopt;
}

void check_compatible(Representation rep, const ChartShape& shape) {
    const bool bargmann = shape.kind() == ChartKind::bargmann;
    if (rep == Representation::bargmann && !bargmann)
        throw ConfigError("the bargmann representation needs the Bargmann chart");
    if ((rep == Representation::position || rep == Representation::momentum) && bargmann)
        throw ConfigError("the " + to_string(rep) + " representation needs a real chart");
}

std::vector<int> configuration_variables(Representation rep, const ChartShape& shape) {
    check_compatible(rep, shape);
    std::vector<int> vars;
    switch (rep) {
        case Representation::position:
            for (int k = 0; k < shape.dim(); ++k) vars.push_back(shape.q(k));
            break;
        case Representation::momentum:
            for (int k = 0; k < shape.dim(); ++k) vars.push_back(shape.p(k));
            break;
        case Representation::bargmann: vars.push_back(ChartShape::z); break;
        case Representation::phase:
            vars.resize(shape.variable_count());
            std::iota(vars.begin(), vars.end(), 0);
            break;
    }
    return vars;
}

JetDomain configuration_domain(Representation rep, const ChartShape& shape) {
    JetDomain domain = 0;
    for (int v : configuration_variables(rep, shape)) domain |= (1u << v);
    return domain;
}

WeightFactorPtr representation_weight(Representation rep, const ChartShape& shape) {
    check_compatible(rep, shape);
    if (rep == Representation::momentum) return momentum_phase(shape.dim());
    if (rep == Representation::bargmann) return gaussian_weight();
    return nullptr;
}

Polarization representation_polarization(Representation rep, const Chart& chart) {
    check_compatible(rep, chart.shape());
    switch (rep) {
        case Representation::position:
        case Representation::bargmann: return polarization_j(chart);
        case Representation::momentum: return polarization_k(chart);
        case Representation::phase: break;
    }
    throw ConfigError("the phase representation carries no polarization");
}

Function wave_function(Representation rep, const Chart& chart, const Function& component) {
    if (component.weight() || component.theta_weight().value_or(0) != 0 || component.depends_on_theta())
        throw AlgebraError("a wave-function component must be a plain function, got " + to_string(component));
    return (component * Function::wave(chart.shape(), 1)).with_weight(representation_weight(rep, chart.shape()));
}

Function generic_wave_function(Representation rep, const Chart& chart) {
    const auto& s = chart.shape();
    return wave_function(rep, chart, Function::jet(s, configuration_domain(rep, s), MultiIndex(s.variable_count(), 0)));
}

Function wave_component(Representation rep, const Function& wave) {
    if (wave.is_zero()) return wave;
    const WeightFactorPtr w = representation_weight(rep, wave.shape());
    if ((w ? w->id() : "") != (wave.weight() ? wave.weight()->id() : ""))
        throw AlgebraError("wave function does not carry the " + to_string(rep) + " weight factor: " + to_string(wave));
    if (wave.theta_weight() != 1 || wave.depends_on_theta())
        throw AlgebraError("not of the form psi * e^{i theta}: " + to_string(wave));
    return (wave.without_weight() * Function::wave(wave.shape(), -1));
}

// ---------------------------------------------------------------------------

bool DiffOperator::IndexOrder::operator()(const MultiIndex& a, const MultiIndex& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u), db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da > db;
    return a > b;
}

DiffOperator::DiffOperator(Representation rep, ChartShape shape) : rep_(rep), shape_(shape) {
    check_compatible(rep, shape);
}

DiffOperator DiffOperator::identity(Representation rep, ChartShape shape) {
    return multiplication(rep, Function::constant(shape, Coefficient(1)));
}

DiffOperator DiffOperator::multiplication(Representation rep, const Function& coefficient) {
    DiffOperator d(rep, coefficient.shape());
    d.add_term(MultiIndex(coefficient.shape().variable_count(), 0), coefficient);
    return d;
}

DiffOperator DiffOperator::derivative(Representation rep, ChartShape shape, int var) {
    DiffOperator d(rep, shape);
    MultiIndex alpha(shape.variable_count(), 0);
    alpha.at(var) = 1;
    d.add_term(alpha, Function::constant(shape, Coefficient(1)));
    return d;
}

void DiffOperator::add_term(const MultiIndex& alpha, const Function& coefficient) {
    if (coefficient.is_zero()) return;
    const JetDomain domain = configuration_domain(rep_, shape_);
    if (static_cast<int>(alpha.size()) != shape_.variable_count()) throw AlgebraError("derivative multi-index has wrong length");
    for (size_t v = 0; v < alpha.size(); ++v)
        if (alpha[v] != 0 && !in_domain(domain, static_cast<int>(v)))
            throw AlgebraError("derivative in " + shape_.name(static_cast<int>(v)) + " is not a configuration direction");
    if (!(coefficient.shape() == shape_) || coefficient.weight() || coefficient.has_jets() ||
        coefficient.depends_on_theta() || coefficient.theta_weight().value_or(0) != 0)
        throw AlgebraError("operator coefficients must be polynomials, got " + to_string(coefficient));
    for (const auto& [mono, c] : coefficient.terms())
        for (int v = 0; v < shape_.variable_count(); ++v)
            if (mono.powers[v] != 0 && !in_domain(domain, v))
                throw AlgebraError("operator coefficient depends on " + shape_.name(v) + ", which is not a " +
                                   to_string(rep_) + " configuration variable");
    auto it = terms_.try_emplace(alpha, Function(shape_)).first;
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
}

Function DiffOperator::apply(const Function& psi) const {
    Function out = Function::like(psi);
    for (const auto& [alpha, c] : terms_) out += c * partial(psi, alpha);
    return out.canonicalize();
}

void DiffOperator::check_same(const DiffOperator& o) const {
    if (rep_ != o.rep_ || !(shape_ == o.shape_)) throw AlgebraError("operators act on different representations");
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
    check_same(o);
    for (const auto& [alpha, c] : o.terms_) add_term(alpha, c);
    return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& o) {
    check_same(o);
    for (const auto& [alpha, c] : o.terms_) add_term(alpha, -c);
    return *this;
}

DiffOperator operator*(const Coefficient& c, DiffOperator d) {
    DiffOperator out(d.rep_, d.shape_);
    for (const auto& [alpha, coef] : d.terms_) out.add_term(alpha, c * coef);
    return out;
}

bool operator==(const DiffOperator& a, const DiffOperator& b) {
    return a.rep_ == b.rep_ && a.shape_ == b.shape_ && a.terms_ == b.terms_;
}

DiffOperator compose(const DiffOperator& a, const DiffOperator& b) {
    if (a.representation() != b.representation() || !(a.shape() == b.shape()))
        throw AlgebraError("cannot compose operators on different representations");
    DiffOperator out(a.representation(), a.shape());
    for (const auto& [alpha, ca] : a.terms()) {
        for (const auto& [beta, cb] : b.terms()) {
            // d^alpha o (c_b d^beta) = sum_gamma C(alpha, gamma) (d^gamma c_b) d^{alpha - gamma + beta}
            for_each_subindex(alpha, [&](const MultiIndex& gamma, const Rational& weight) {
                Function dc = partial(cb, gamma);
                if (dc.is_zero()) return;
                out.add_term(add(sub(alpha, gamma), beta), Coefficient(GaussianRational(weight)) * (ca * dc));
            });
        }
    }
    return out;
}

Function conjugate(const Function& f) {
    Function out = Function::like(f);
    for (const auto& [mono, c] : f.terms()) out.add_term(mono, c.conj());
    return out.canonicalize();
}

DiffOperator formal_adjoint(const DiffOperator& d) {
    if (d.representation() != Representation::position && d.representation() != Representation::momentum)
        throw AlgebraError("formal adjoints are defined for the real position and momentum representations");
    DiffOperator out(d.representation(), d.shape());
    for (const auto& [alpha, c] : d.terms()) {
        DiffOperator deriv(d.representation(), d.shape());
        deriv.add_term(alpha, Function::constant(d.shape(), Coefficient(1)));
        const unsigned order = std::accumulate(alpha.begin(), alpha.end(), 0u);
        DiffOperator term = compose(deriv, DiffOperator::multiplication(d.representation(), conjugate(c)));
        out += (order % 2 ? Coefficient(-1) : Coefficient(1)) * term;
    }
    return out;
}

DiffOperator extract_operator(StarKind kind, const Chart& chart, const Function& observable, Representation rep) {
    if (rep == Representation::phase) throw ConfigError("operators are extracted in a polarized representation");
    const auto& s = chart.shape();
    const Function wave = generic_wave_function(rep, chart);
    const Function out = quantize(kind, chart, observable, wave, representation_polarization(rep, chart));
    const Function component = wave_component(rep, out);
    const JetDomain domain = configuration_domain(rep, s);
    DiffOperator op(rep, s);
    for (const auto& [mono, c] : component.terms()) {
        if (mono.jets.size() != 1 || mono.jets.begin()->second != 1)
            throw PolarizationViolation("result is not linear in the wave function", out);
        Monomial coeff_mono = mono;
        coeff_mono.jets.clear();
        for (int v = 0; v < s.variable_count(); ++v)
            if (coeff_mono.powers[v] != 0 && !in_domain(domain, v))
                throw PolarizationViolation("result depends on " + s.name(v) + " and is not an operator on the " +
                                                to_string(rep) + " representation",
                                            out);
        Function coefficient(s);
        coefficient.add_term(coeff_mono, c);
        op.add_term(mono.jets.begin()->first, coefficient);
    }
    return op;
}

DiffOperator momentum_to_position(const DiffOperator& d) {
    if (d.representation() != Representation::momentum)
        throw AlgebraError("momentum_to_position takes a momentum-representation operator");
    const auto& s = d.shape();
    const auto rep = Representation::position;
    const int n = s.dim();
    std::vector<DiffOperator> p_image, dp_image;
    for (int k = 0; k < n; ++k) {
        p_image.push_back(Coefficient::hbar_over_i() * DiffOperator::derivative(rep, s, s.q(k)));
        dp_image.push_back(DiffOperator::multiplication(
            rep, Coefficient(GaussianRational(0, -1), -1) * Function::variable(s, s.q(k))));
    }
    DiffOperator out(rep, s);
    for (const auto& [alpha, c] : d.terms()) {
        DiffOperator tail = DiffOperator::identity(rep, s);
        for (int k = 0; k < n; ++k)
            for (unsigned j = 0; j < alpha[s.p(k)]; ++j) tail = compose(tail, dp_image[k]);
        for (const auto& [mono, coef] : c.terms()) {
            DiffOperator head = DiffOperator::multiplication(rep, Function::constant(s, coef));
            for (int k = 0; k < n; ++k)
                for (unsigned j = 0; j < mono.powers[s.p(k)]; ++j) head = compose(head, p_image[k]);
            out += compose(head, tail);
        }
    }
    return out;
}

std::string to_string(const DiffOperator& d) {
    const auto& s = d.shape();
    const JetDomain domain = configuration_domain(d.representation(), s);
    std::string out;
    for (const auto& [alpha, c] : d.terms()) {
        std::string deriv;
        bool any = false;
        for (int v = 0; v < s.variable_count(); ++v) {
            if (!in_domain(domain, v)) continue;
            if (!deriv.empty()) deriv += ",";
            deriv += std::to_string(alpha[v]);
            any = any || alpha[v] != 0;
        }
        for (const auto& [mono, coef] : c.terms()) {
            for (auto it = coef.terms().rbegin(); it != coef.terms().rend(); ++it) {
                Function single(s);
                single.add_term(mono, Coefficient(it->second, it->first));
                std::string term = to_string(single);
                bool negative = term.front() == '-';
                if (negative) term.erase(0, 1);
                if (any) term = (term == "1" ? "" : term + "*") + "d(" + deriv + ")";
                if (out.empty()) {
                    out = (negative ? "-" : "") + term;
                } else {
                    out += (negative ? " - " : " + ") + term;
                }
            }
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace dq
