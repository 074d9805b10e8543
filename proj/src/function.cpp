#include "dq/function.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace dq {

ChartShape ChartShape::real(int n) {
    if (n < 1 || n > 16) throw AlgebraError("real chart dimension must be in 1..16, got " + std::to_string(n));
    return ChartShape(ChartKind::real, n);
}

std::string ChartShape::name(int var) const {
    if (var < 0 || var >= variable_count()) throw AlgebraError("variable index out of range");
    if (kind_ == ChartKind::bargmann) return var == z ? "z" : "zb";
    return (var < dim_ ? "p" : "q") + std::to_string(var % dim_ + 1);
}

std::optional<int> ChartShape::index_of(std::string_view name) const {
    if (kind_ == ChartKind::bargmann) {
        if (name == "z") return z;
        if (name == "zb") return zb;
        return std::nullopt;
    }
    if (name.size() < 2 || (name[0] != 'p' && name[0] != 'q')) return std::nullopt;
    int idx = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), idx);
    if (ec != std::errc() || ptr != name.data() + name.size() || idx < 1 || idx > dim_ || name[1] == '0')
        return std::nullopt;
    return name[0] == 'p' ? p(idx - 1) : q(idx - 1);
}

int ChartShape::p(int i) const {
    if (kind_ != ChartKind::real || i < 0 || i >= dim_) throw AlgebraError("no momentum variable p" + std::to_string(i + 1));
    return i;
}

int ChartShape::q(int i) const {
    if (kind_ != ChartKind::real || i < 0 || i >= dim_) throw AlgebraError("no position variable q" + std::to_string(i + 1));
    return dim_ + i;
}

// ---------------------------------------------------------------------------

unsigned Monomial::degree() const { return std::accumulate(powers.begin(), powers.end(), 0u); }

unsigned Monomial::jet_degree() const {
    unsigned d = 0;
    for (const auto& [alpha, e] : jets) d += e;
    return d;
}

bool Monomial::is_constant() const {
    return degree() == 0 && theta_power == 0 && theta_weight == 0 && jets.empty();
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (size_t k = 0; k < out.powers.size(); ++k) out.powers[k] += b.powers[k];
    out.theta_power += b.theta_power;
    out.theta_weight += b.theta_weight;
    for (const auto& [alpha, e] : b.jets) out.jets[alpha] += e;
    return out;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    if (unsigned da = a.degree(), db = b.degree(); da != db) return da > db;
    if (a.powers != b.powers) return a.powers > b.powers;
    if (a.theta_power != b.theta_power) return a.theta_power > b.theta_power;
    if (a.theta_weight != b.theta_weight) return a.theta_weight > b.theta_weight;
    if (unsigned ja = a.jet_degree(), jb = b.jet_degree(); ja != jb) return ja > jb;
    return a.jets > b.jets;
}

// ---------------------------------------------------------------------------

Function Function::constant(ChartShape shape, const Coefficient& c) {
    Function f(shape);
    f.add_term(Monomial(shape.variable_count()), c);
    return f;
}

Function Function::variable(ChartShape shape, int var) {
    if (var < 0 || var >= shape.variable_count()) throw AlgebraError("unknown chart variable index " + std::to_string(var));
    Monomial m(shape.variable_count());
    m.powers[var] = 1;
    Function f(shape);
    f.add_term(m, Coefficient(1));
    return f;
}

Function Function::theta(ChartShape shape) {
    Monomial m(shape.variable_count());
    m.theta_power = 1;
    Function f(shape);
    f.add_term(m, Coefficient(1));
    return f;
}

Function Function::wave(ChartShape shape, int m) {
    Monomial mono(shape.variable_count());
    mono.theta_weight = m;
    Function f(shape);
    f.add_term(mono, Coefficient(1));
    return f;
}

Function Function::jet(ChartShape shape, JetDomain domain, MultiIndex alpha) {
    const int nv = shape.variable_count();
    if (domain == 0 || (domain >> nv) != 0) throw AlgebraError("jet domain must be a non-empty set of chart variables");
    if (static_cast<int>(alpha.size()) != nv) throw AlgebraError("jet multi-index has wrong length");
    for (int v = 0; v < nv; ++v)
        if (alpha[v] != 0 && !in_domain(domain, v))
            throw AlgebraError("jet derivative in " + shape.name(v) + ", which psi does not depend on");
    Monomial m(nv);
    m.jets.emplace(std::move(alpha), 1);
    Function f(shape);
    f.jet_domain_ = domain;
    f.add_term(m, Coefficient(1));
    return f;
}

Function Function::with_weight(WeightFactorPtr weight) const {
    if (weight && !(weight->shape() == shape_)) throw AlgebraError("weight factor belongs to a different chart");
    Function out = *this;
    out.weight_ = std::move(weight);
    out.canonicalize();
    return out;
}

Function Function::without_weight() const {
    Function out = *this;
    out.weight_.reset();
    return out;
}

bool Function::depends_on_theta() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.theta_power != 0; });
}

std::optional<int> Function::theta_weight() const {
    if (terms_.empty()) return std::nullopt;
    int m = terms_.begin()->first.theta_weight;
    for (const auto& [mono, c] : terms_)
        if (mono.theta_weight != m) return std::nullopt;
    return m;
}

bool Function::is_observable() const {
    if (weight_ || has_jets()) return false;
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
        return t.first.theta_power == 0 && t.first.theta_weight == 0;
    });
}

unsigned Function::degree() const {
    unsigned d = 0;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono.degree());
    return d;
}

unsigned Function::degree_in(int var) const {
    unsigned d = 0;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono.powers.at(var));
    return d;
}

void Function::add_term(const Monomial& m, const Coefficient& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(m.powers.size()) != shape_.variable_count()) throw AlgebraError("monomial has wrong arity");
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Function& Function::canonicalize() {
    if (terms_.empty()) {
        weight_.reset();
        jet_domain_ = 0;
        return *this;
    }
    bool any_jets = std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return !t.first.jets.empty(); });
    if (!any_jets) jet_domain_ = 0;
    return *this;
}

Function Function::like(const Function& f) {
    Function out(f.shape_);
    out.weight_ = f.weight_;
    out.jet_domain_ = f.jet_domain_;
    return out;
}

void Function::merge_context(const Function& o, bool multiplying) {
    if (!(shape_ == o.shape_)) throw AlgebraError("functions live on different charts");
    if (o.has_jets()) {
        if (has_jets() && jet_domain_ != o.jet_domain_)
            throw AlgebraError("jet symbols with different dependency sets cannot be combined");
        jet_domain_ = o.jet_domain_;
    }
    if (multiplying) {
        if (weight_ && o.weight_)
            throw AlgebraError("cannot multiply two functions that both carry weight factors ('" + weight_->id() +
                               "' and '" + o.weight_->id() + "')");
        if (!weight_) weight_ = o.weight_;
    } else if (!o.is_zero()) {
        if (is_zero()) {
            weight_ = o.weight_;
        } else if ((weight_ ? weight_->id() : "") != (o.weight_ ? o.weight_->id() : "")) {
            throw AlgebraError("cannot add functions with different weight factors");
        }
    }
}

Function Function::operator-() const {
    Function out = *this;
    for (auto& [mono, c] : out.terms_) c = -c;
    return out;
}

Function& Function::operator+=(const Function& o) {
    merge_context(o, false);
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    canonicalize();
    return *this;
}

Function& Function::operator-=(const Function& o) {
    merge_context(o, false);
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    canonicalize();
    return *this;
}

Function operator*(const Function& a, const Function& b) {
    Function out(a.shape_);
    out.weight_ = a.weight_;
    out.jet_domain_ = a.jet_domain_;
    out.merge_context(b, true);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    out.canonicalize();
    return out;
}

Function& Function::operator*=(const Function& o) { return *this = *this * o; }

Function& Function::operator*=(const Coefficient& c) {
    if (c.is_zero()) {
        terms_.clear();
    } else {
        for (auto& [mono, coef] : terms_) coef *= c;
    }
    canonicalize();
    return *this;
}

Function Function::pow(unsigned k) const {
    Function out = constant(shape_, Coefficient(1));
    Function base = *this;
    while (k > 0) {
        if (k & 1u) out *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return out;
}

bool operator==(const Function& a, const Function& b) {
    if (!(a.shape_ == b.shape_) || a.terms_ != b.terms_) return false;
    if (a.is_zero()) return true;
    if ((a.weight_ ? a.weight_->id() : "") != (b.weight_ ? b.weight_->id() : "")) return false;
    return a.jet_domain_ == b.jet_domain_;
}

// ---------------------------------------------------------------------------

WeightFactor::WeightFactor(std::string id, ChartShape shape, std::vector<Function> log_derivative)
    : id_(std::move(id)), shape_(shape), log_derivative_(std::move(log_derivative)) {
    if (static_cast<int>(log_derivative_.size()) != shape_.variable_count())
        throw AlgebraError("weight factor '" + id_ + "' must give a log-derivative for every chart variable");
    for (const auto& l : log_derivative_)
        if (!(l.shape() == shape_) || l.weight() || l.has_jets())
            throw AlgebraError("weight factor log-derivatives must be plain polynomials on the chart");
}

bool WeightFactor::is_closed() const {
    for (int x = 0; x < shape_.variable_count(); ++x)
        for (int y = x + 1; y < shape_.variable_count(); ++y)
            if (!(differentiate(log_derivative_[y], x) == differentiate(log_derivative_[x], y))) return false;
    return true;
}

WeightFactorPtr gaussian_weight() {
    static const WeightFactorPtr w = [] {
        const auto s = ChartShape::bargmann();
        const Coefficient c = Coefficient(GaussianRational(Rational(-1, 4)), -1);
        return std::make_shared<const WeightFactor>(
            "gauss", s,
            std::vector<Function>{c * Function::variable(s, ChartShape::zb), c * Function::variable(s, ChartShape::z)});
    }();
    return w;
}

WeightFactorPtr momentum_phase(int n) {
    const auto s = ChartShape::real(n);
    const Coefficient c = Coefficient(GaussianRational::i(), -1);
    std::vector<Function> logs;
    for (int k = 0; k < n; ++k) logs.push_back(c * Function::variable(s, s.q(k)));
    for (int k = 0; k < n; ++k) logs.push_back(c * Function::variable(s, s.p(k)));
    return std::make_shared<const WeightFactor>("phase", s, std::move(logs));
}

WeightFactorPtr weight_by_id(const std::string& id, const ChartShape& shape) {
    if (id == "gauss" && shape.kind() == ChartKind::bargmann) return gaussian_weight();
    if (id == "phase" && shape.kind() == ChartKind::real) return momentum_phase(shape.dim());
    throw AlgebraError("no weight factor '" + id + "' on a " + shape.kind_name() + " chart");
}

// ---------------------------------------------------------------------------

Function differentiate(const Function& f, int var) {
    const ChartShape& s = f.shape();
    if (var < 0 || var >= s.variable_count()) throw AlgebraError("unknown chart variable index " + std::to_string(var));
    Function out = Function::like(f);
    for (const auto& [mono, c] : f.terms()) {
        if (unsigned e = mono.powers[var]; e > 0) {
            Monomial m = mono;
            m.powers[var] -= 1;
            out.add_term(m, c * Coefficient(static_cast<long>(e)));
        }
        if (!in_domain(f.jet_domain(), var)) continue;
        for (const auto& [alpha, e] : mono.jets) {
            Monomial m = mono;
            if (--m.jets[alpha] == 0) m.jets.erase(alpha);
            MultiIndex shifted = alpha;
            shifted[var] += 1;
            m.jets[shifted] += 1;
            out.add_term(m, c * Coefficient(static_cast<long>(e)));
        }
    }
    if (f.weight()) {
        const Function log_term = f.without_weight() * f.weight()->log_derivative(var);
        for (const auto& [mono, c] : log_term.terms()) out.add_term(mono, c);
    }
    return out.canonicalize();
}

Function differentiate_theta(const Function& f) {
    Function out = Function::like(f);
    for (const auto& [mono, c] : f.terms()) {
        if (mono.theta_power > 0) {
            Monomial m = mono;
            m.theta_power -= 1;
            out.add_term(m, c * Coefficient(static_cast<long>(mono.theta_power)));
        }
        if (mono.theta_weight != 0) out.add_term(mono, c * Coefficient(GaussianRational(0, mono.theta_weight)));
    }
    return out.canonicalize();
}

Function substitute(const Function& f, std::span<const Function> images) {
    const ChartShape& s = f.shape();
    if (f.has_jets() || f.weight()) throw AlgebraError("substitution requires a function without jets or weight factor");
    if (static_cast<int>(images.size()) != s.variable_count()) throw AlgebraError("substitution needs one image per variable");
    Function out(images.empty() ? s : images.front().shape());
    for (const auto& [mono, c] : f.terms()) {
        Monomial rest(out.shape().variable_count());
        rest.theta_power = mono.theta_power;
        rest.theta_weight = mono.theta_weight;
        Function term(out.shape());
        term.add_term(rest, c);
        for (int v = 0; v < s.variable_count(); ++v)
            if (mono.powers[v] > 0) term *= images[v].pow(mono.powers[v]);
        out += term;
    }
    return out;
}

Function integrate(const Function& f, int var) {
    if (f.has_jets() || f.weight()) throw AlgebraError("antiderivatives are only available for polynomials");
    Function out = Function::like(f);
    for (const auto& [mono, c] : f.terms()) {
        Monomial m = mono;
        m.powers.at(var) += 1;
        out.add_term(m, c * Coefficient(GaussianRational(Rational(1, m.powers[var]))));
    }
    return out.canonicalize();
}

}  // namespace dq
