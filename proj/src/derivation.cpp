#include "dq/derivation.hpp"

namespace dq {

Derivation::Derivation(ChartShape shape)
    : shape_(shape), components_(shape.variable_count(), Function(shape)), theta_(shape) {}

Derivation::Derivation(ChartShape shape, std::vector<Function> components, Function theta_component)
    : shape_(shape), components_(std::move(components)), theta_(std::move(theta_component)) {
    if (static_cast<int>(components_.size()) != shape_.variable_count())
        throw AlgebraError("derivation needs one coefficient per chart variable");
    components_.push_back(theta_);
    for (const auto& c : components_)
        if (!(c.shape() == shape_) || c.weight() || c.has_jets())
            throw AlgebraError("derivation coefficients must be plain polynomials on the chart");
    components_.pop_back();
}

Derivation Derivation::coordinate(ChartShape shape, int var, const Coefficient& c) {
    Derivation d(shape);
    d.components_.at(var) = Function::constant(shape, c);
    return d;
}

Derivation Derivation::reeb(ChartShape shape) {
    Derivation d(shape);
    d.theta_ = Function::constant(shape, Coefficient(1));
    return d;
}

bool Derivation::is_zero() const {
    if (!theta_.is_zero()) return false;
    for (const auto& c : components_)
        if (!c.is_zero()) return false;
    return true;
}

Function Derivation::apply(const Function& f) const {
    if (!(f.shape() == shape_)) throw AlgebraError("derivation and function live on different charts");
    Function out = Function::like(f);
    for (int v = 0; v < shape_.variable_count(); ++v)
        if (!components_[v].is_zero()) out += components_[v] * differentiate(f, v);
    if (!theta_.is_zero()) out += theta_ * differentiate_theta(f);
    return out.canonicalize();
}

Derivation& Derivation::operator+=(const Derivation& o) {
    if (!(shape_ == o.shape_)) throw AlgebraError("derivations live on different charts");
    for (size_t v = 0; v < components_.size(); ++v) components_[v] += o.components_[v];
    theta_ += o.theta_;
    return *this;
}

Derivation& Derivation::operator-=(const Derivation& o) {
    if (!(shape_ == o.shape_)) throw AlgebraError("derivations live on different charts");
    for (size_t v = 0; v < components_.size(); ++v) components_[v] -= o.components_[v];
    theta_ -= o.theta_;
    return *this;
}

Derivation operator*(const Function& g, const Derivation& d) {
    Derivation out = d;
    for (auto& c : out.components_) c = g * c;
    out.theta_ = g * out.theta_;
    return out;
}

Derivation operator*(const Coefficient& c, const Derivation& d) {
    Derivation out = d;
    for (auto& comp : out.components_) comp *= c;
    out.theta_ *= c;
    return out;
}

Derivation commutator(const Derivation& a, const Derivation& b) {
    const ChartShape& s = a.shape();
    std::vector<Function> comps;
    for (int v = 0; v < s.variable_count(); ++v) comps.push_back(a(b.component(v)) - b(a.component(v)));
    return Derivation(s, std::move(comps), a(b.theta_component()) - b(a.theta_component()));
}

std::string to_string(const Derivation& d) {
    std::string out;
    auto emit = [&](const Function& c, const std::string& name) {
        if (c.is_zero()) return;
        if (!out.empty()) out += " + ";
        out += "(" + to_string(c) + ")*d/d" + name;
    };
    for (int v = 0; v < d.shape().variable_count(); ++v) emit(d.component(v), d.shape().name(v));
    emit(d.theta_component(), "theta");
    return out.empty() ? "0" : out;
}

}  // namespace dq
