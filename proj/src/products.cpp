#include "dq/products.hpp"

#include <map>
#include <tuple>

namespace dq {
namespace {

// Exponential series of polynomial inputs stop long before this.
constexpr unsigned kSeriesLimit = 256;

int compare(const GaussianRational& a, const GaussianRational& b) {
    if (int c = cmp(a.re(), b.re()); c != 0) return c;
    return cmp(a.im(), b.im());
}

int compare(const Coefficient& a, const Coefficient& b) {
    auto ia = a.terms().begin(), ib = b.terms().begin();
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
        if (int c = compare(ia->second, ib->second); c != 0) return c;
    }
    if (ia == a.terms().end() && ib == b.terms().end()) return 0;
    return ia == a.terms().end() ? -1 : 1;
}

std::string weight_id(const Function& f) { return f.weight() ? f.weight()->id() : std::string(); }

struct FunctionLess {
    bool operator()(const Function& a, const Function& b) const {
        if (auto wa = weight_id(a), wb = weight_id(b); wa != wb) return wa < wb;
        if (a.jet_domain() != b.jet_domain()) return a.jet_domain() < b.jet_domain();
        if (a.terms().size() != b.terms().size()) return a.terms().size() < b.terms().size();
        MonomialOrder order;
        for (auto ia = a.terms().begin(), ib = b.terms().begin(); ia != a.terms().end(); ++ia, ++ib) {
            if (order(ia->first, ib->first)) return true;
            if (order(ib->first, ia->first)) return false;
            if (int c = compare(ia->second, ib->second); c != 0) return c < 0;
        }
        return false;
    }
};

// One more application of the driver, merging pairs with a common left factor.
TensorTerms step(const DriverTensor& driver, const TensorTerms& terms) {
    std::map<Function, Function, FunctionLess> merged;
    for (const auto& [left, right] : terms) {
        for (const auto& pair : driver.pairs()) {
            Function l = pair.s(left);
            if (l.is_zero()) continue;
            Function r = pair.t(right);
            if (r.is_zero()) continue;
            // Scale the left factor to a unit leading coefficient so that proportional
            // left factors land on the same key.
            const Coefficient& lead = l.terms().begin()->second;
            if (lead.is_unit() && !lead.is_one()) {
                r *= lead;
                l *= lead.inverse();
            }
            auto it = merged.try_emplace(std::move(l), Function(driver.shape())).first;
            it->second += r;
        }
    }
    TensorTerms out;
    for (auto& [l, r] : merged)
        if (!r.is_zero()) out.emplace_back(l, std::move(r));
    return out;
}

void check_same_chart(const DriverTensor& driver, const Function& f, const Function& g) {
    if (!(f.shape() == driver.shape()) || !(g.shape() == driver.shape()))
        throw AlgebraError("driver tensor and functions live on different charts");
}

}  // namespace

std::string to_string(StarKind kind) {
    switch (kind) {
        case StarKind::normal: return "normal";
        case StarKind::antinormal: return "antinormal";
        case StarKind::moyal: return "moyal";
        case StarKind::wick: return "wick";
    }
    return "?";
}

std::optional<StarKind> parse_star_kind(const std::string& name) {
    for (StarKind k : {StarKind::normal, StarKind::antinormal, StarKind::moyal, StarKind::wick})
        if (to_string(k) == name) return k;
    return std::nullopt;
}

// ---------------------------------------------------------------------------

DriverTensor::DriverTensor(ChartShape shape, std::vector<DriverPair> pairs, bool lifted)
    : shape_(shape), pairs_(std::move(pairs)), lifted_(lifted) {
    for (const auto& p : pairs_)
        if (!(p.s.shape() == shape_) || !(p.t.shape() == shape_))
            throw AlgebraError("driver fields live on a different chart");
    if (!lifted_ && !fields_commute()) throw AlgebraError("driver tensor fields must commute pairwise");
}

DriverTensor DriverTensor::lift(const Chart& chart) const {
    std::vector<DriverPair> lifted;
    for (const auto& p : pairs_) lifted.push_back({horizontal_lift(chart, p.s), horizontal_lift(chart, p.t)});
    return DriverTensor(shape_, std::move(lifted), true);
}

bool DriverTensor::fields_commute() const {
    std::vector<const Derivation*> fields;
    for (const auto& p : pairs_) {
        fields.push_back(&p.s);
        fields.push_back(&p.t);
    }
    for (size_t a = 0; a < fields.size(); ++a)
        for (size_t b = a + 1; b < fields.size(); ++b)
            if (!commutator(*fields[a], *fields[b]).is_zero()) return false;
    return true;
}

std::vector<std::vector<Function>> DriverTensor::components() const {
    const int nv = shape_.variable_count();
    std::vector<std::vector<Function>> out(nv, std::vector<Function>(nv, Function(shape_)));
    for (const auto& p : pairs_)
        for (int x = 0; x < nv; ++x)
            for (int y = 0; y < nv; ++y) out[x][y] += p.s.component(x) * p.t.component(y);
    return out;
}

DriverTensor driver_tensor(StarKind kind, const Chart& chart) {
    const auto& s = chart.shape();
    auto coord = [&](int var, Coefficient c = Coefficient(1)) { return Derivation::coordinate(s, var, c); };
    std::vector<DriverPair> normal, antinormal;
    if (s.kind() == ChartKind::real) {
        if (kind == StarKind::wick) throw ConfigError("the Wick tensor needs the Bargmann chart");
        for (int k = 0; k < s.dim(); ++k) {
            normal.push_back({coord(s.p(k)), coord(s.q(k))});
            antinormal.push_back({coord(s.q(k), Coefficient(-1)), coord(s.p(k))});
        }
    } else {
        normal.push_back({coord(ChartShape::zb, Coefficient(GaussianRational(0, 2))), coord(ChartShape::z)});
        antinormal.push_back({coord(ChartShape::z, Coefficient(GaussianRational(0, -2))), coord(ChartShape::zb)});
    }
    switch (kind) {
        case StarKind::normal:
        case StarKind::wick: return DriverTensor(s, std::move(normal));
        case StarKind::antinormal: return DriverTensor(s, std::move(antinormal));
        case StarKind::moyal:
            normal.insert(normal.end(), antinormal.begin(), antinormal.end());
            return DriverTensor(s, std::move(normal));
    }
    throw ConfigError("unknown product kind");
}

DriverTensor change_chart(const AffineMap& map, const DriverTensor& driver) {
    std::vector<DriverPair> pairs;
    for (const auto& p : driver.pairs()) pairs.push_back({change_chart(map, p.s), change_chart(map, p.t)});
    return DriverTensor(driver.shape(), std::move(pairs), driver.lifted());
}

// ---------------------------------------------------------------------------

TensorTerms apply_driver(const DriverTensor& driver, const Function& f, const Function& g, unsigned k) {
    check_same_chart(driver, f, g);
    TensorTerms terms;
    if (!f.is_zero() && !g.is_zero()) terms.emplace_back(f, g);
    for (unsigned j = 0; j < k && !terms.empty(); ++j) terms = step(driver, terms);
    return terms;
}

Function contract(const TensorTerms& terms, const ChartShape& shape) {
    Function out(shape);
    for (const auto& [l, r] : terms) out += l * r;
    return out;
}

bool tensor_equal(const TensorTerms& a, const TensorTerms& b) {
    using Key = std::tuple<std::string, JetDomain, Monomial>;
    struct KeyLess {
        bool operator()(const Key& x, const Key& y) const {
            if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) < std::get<0>(y);
            if (std::get<1>(x) != std::get<1>(y)) return std::get<1>(x) < std::get<1>(y);
            return MonomialOrder{}(std::get<2>(x), std::get<2>(y));
        }
    };
    auto canonical = [](const TensorTerms& terms) {
        std::map<Key, Function, KeyLess> out;
        for (const auto& [l, r] : terms) {
            for (const auto& [mono, c] : l.terms()) {
                auto it = out.try_emplace(Key{weight_id(l), l.jet_domain(), mono}, Function(r.shape())).first;
                it->second += c * r;
            }
        }
        std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
        return out;
    };
    auto ca = canonical(a), cb = canonical(b);
    if (ca.size() != cb.size()) return false;
    for (auto ia = ca.begin(), ib = cb.begin(); ia != ca.end(); ++ia, ++ib) {
        if (KeyLess{}(ia->first, ib->first) || KeyLess{}(ib->first, ia->first)) return false;
        if (!(ia->second == ib->second)) return false;
    }
    return true;
}

Function exponential_product(const DriverTensor& driver, const Function& f, const Function& g,
                             const Coefficient& c) {
    check_same_chart(driver, f, g);
    Function out = f * g;
    TensorTerms terms;
    if (!f.is_zero() && !g.is_zero()) terms.emplace_back(f, g);
    Coefficient factor(1);
    for (unsigned k = 1;; ++k) {
        terms = step(driver, terms);
        if (terms.empty()) break;
        if (k > kSeriesLimit)
            throw AlgebraError("exponential series does not terminate for " + to_string(f) + " and " + to_string(g));
        factor = factor * c * Coefficient(GaussianRational(Rational(1, k)));
        out += factor * contract(terms, driver.shape());
    }
    return out;
}

Coefficient star_parameter(StarKind kind) {
    Coefficient h = Coefficient::hbar_over_i();
    if (kind == StarKind::moyal) h *= Coefficient(GaussianRational(Rational(1, 2)));
    return h;
}

Function star_product(StarKind kind, const Chart& chart, const Function& lhs, const Function& rhs) {
    if (!lhs.is_observable() || !rhs.is_observable())
        throw AlgebraError("star products are defined on observables, got " + to_string(lhs) + " and " + to_string(rhs));
    return exponential_product(driver_tensor(kind, chart), lhs, rhs, star_parameter(kind));
}

Function bullet_product(StarKind kind, const Chart& chart, const Function& lhs, const Function& rhs) {
    return exponential_product(driver_tensor(kind, chart).lift(chart), lhs, rhs, Coefficient::hbar_over_i());
}

Function prequantize(const Chart& chart, const Function& observable, const Function& wave) {
    if (!observable.is_observable()) throw AlgebraError("prequantization takes an observable, got " + to_string(observable));
    if (!wave.is_zero() && wave.theta_weight() != 1)
        throw AlgebraError("prequantum wave functions have theta weight 1, got " + to_string(wave));
    return observable * wave + Coefficient::hbar_over_i() * souriau_bracket(chart, observable, wave);
}

Polarization default_polarization(StarKind kind, const Chart& chart) {
    return kind == StarKind::antinormal ? polarization_k(chart) : polarization_j(chart);
}

Function quantize(StarKind kind, const Chart& chart, const Function& observable, const Function& wave,
                  const Polarization& pol) {
    if (!observable.is_observable()) throw AlgebraError("quantization takes an observable, got " + to_string(observable));
    if (!is_polarized(chart, pol, wave))
        throw PolarizationViolation("input wave function is not " + pol.label + "-polarized", wave);
    Function out = bullet_product(kind, chart, observable, wave);
    if (!is_polarized(chart, pol, out))
        throw PolarizationViolation(to_string(kind) + " product of " + to_string(observable) +
                                        " leaves the " + pol.label + "-polarized wave functions",
                                    out);
    return out;
}

Function quantize(StarKind kind, const Chart& chart, const Function& observable, const Function& wave) {
    return quantize(kind, chart, observable, wave, default_polarization(kind, chart));
}

Function yano_laplacian(const Chart& chart, const Function& observable) {
    const auto& s = chart.shape();
    if (s.kind() == ChartKind::bargmann)
        return Coefficient(GaussianRational(0, -2)) *
               differentiate(differentiate(observable, ChartShape::z), ChartShape::zb);
    Function out(s);
    for (int k = 0; k < s.dim(); ++k) out -= differentiate(differentiate(observable, s.p(k)), s.q(k));
    return out;
}

Function agarwal_transform(const Chart& chart, const Function& observable) {
    if (!observable.is_observable()) throw AlgebraError("the Agarwal transform takes an observable");
    const Coefficient half_i_hbar(GaussianRational(0, Rational(1, 2)), 1);
    Function out = observable;
    Function power = observable;
    Coefficient factor(1);
    for (unsigned k = 1;; ++k) {
        power = yano_laplacian(chart, power);
        if (power.is_zero()) break;
        if (k > kSeriesLimit) throw AlgebraError("Agarwal series does not terminate");
        factor = factor * half_i_hbar * Coefficient(GaussianRational(Rational(1, k)));
        out += factor * power;
    }
    return out;
}

Function quantize_inverse_p(const Chart& chart, const Function& wave) {
    const auto& s = chart.shape();
    if (s.kind() != ChartKind::real || s.dim() != 1) throw AlgebraError("Q(1/p) is implemented on the real line only");
    if (wave.has_jets() || wave.weight()) throw AlgebraError("Q(1/p) needs a polynomial wave function psi(q) e^{i theta}");
    if (wave.is_zero()) return wave;
    if (wave.theta_weight() != 1 || wave.depends_on_theta() || wave.degree_in(s.p(0)) != 0)
        throw AlgebraError("Q(1/p) needs a J-polarized wave function psi(q) e^{i theta}, got " + to_string(wave));
    return Coefficient(GaussianRational::i(), -1) * integrate(wave, s.q(0));
}

}  // namespace dq
