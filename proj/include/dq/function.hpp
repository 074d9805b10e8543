#pragma once

#include "dq/errors.hpp"
#include "dq/scalar.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dq {

enum class ChartKind { real, bargmann };

/// Coordinate layout of a chart on phase space. Real charts of dimension n carry
/// p1..pn followed by q1..qn; the Bargmann chart carries z, zb.
class ChartShape {
public:
    static ChartShape real(int n);
    static ChartShape bargmann() { return ChartShape(ChartKind::bargmann, 1); }

    ChartKind kind() const { return kind_; }
    int dim() const { return dim_; }
    int variable_count() const { return 2 * dim_; }

    std::string name(int var) const;
    std::optional<int> index_of(std::string_view name) const;

    /// Index of p_{i+1} / q^{i+1}; real charts only.
    int p(int i) const;
    int q(int i) const;
    static constexpr int z = 0;
    static constexpr int zb = 1;

    std::string kind_name() const { return kind_ == ChartKind::real ? "real" : "bargmann"; }

    friend bool operator==(const ChartShape&, const ChartShape&) = default;

private:
    ChartShape(ChartKind kind, int dim) : kind_(kind), dim_(dim) {}
    ChartKind kind_;
    int dim_;
};

using MultiIndex = std::vector<unsigned>;

/// Bitmask of the chart variables a jet symbol psi depends on.
using JetDomain = std::uint32_t;

inline bool in_domain(JetDomain domain, int var) { return (domain >> var) & 1u; }

/// Product of chart-variable powers, a power of theta, the factor e^{i m theta}
/// and powers of jet symbols psi_alpha (alpha indexed over chart variables).
struct Monomial {
    std::vector<unsigned> powers;
    unsigned theta_power = 0;
    int theta_weight = 0;
    std::map<MultiIndex, unsigned> jets;

    Monomial() = default;
    explicit Monomial(int variable_count) : powers(variable_count, 0) {}

    unsigned degree() const;
    unsigned jet_degree() const;
    bool is_constant() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order, largest first: chart degree, chart exponents in
/// declaration order, theta, then jets.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class WeightFactor;
using WeightFactorPtr = std::shared_ptr<const WeightFactor>;

/// Function on the prequantum bundle: a polynomial in chart variables, theta and
/// jet symbols, times optional e^{i m theta} weights per term and an optional
/// non-polynomial weight factor W shared by all terms. Always stored canonically.
class Function {
public:
    using Terms = std::map<Monomial, Coefficient, MonomialOrder>;

    explicit Function(ChartShape shape) : shape_(shape) {}

    /// Empty function sharing the chart, jet domain and weight factor of `f`;
    /// fill with add_term() and finish with canonicalize().
    static Function like(const Function& f);

    static Function constant(ChartShape shape, const Coefficient& c);
    static Function variable(ChartShape shape, int var);
    static Function theta(ChartShape shape);
    /// e^{i m theta}
    static Function wave(ChartShape shape, int m);
    /// The jet symbol psi_alpha of a function depending on the variables in `domain`.
    static Function jet(ChartShape shape, JetDomain domain, MultiIndex alpha);

    Function with_weight(WeightFactorPtr weight) const;
    Function without_weight() const;

    const ChartShape& shape() const { return shape_; }
    const Terms& terms() const { return terms_; }
    const WeightFactorPtr& weight() const { return weight_; }
    JetDomain jet_domain() const { return jet_domain_; }

    bool is_zero() const { return terms_.empty(); }
    bool has_jets() const { return jet_domain_ != 0; }
    bool depends_on_theta() const;
    /// The common theta weight m when every term carries e^{i m theta}; zero has none.
    std::optional<int> theta_weight() const;
    /// theta weight 0, no theta, no jets, no weight factor.
    bool is_observable() const;
    /// Highest total degree in chart variables.
    unsigned degree() const;
    unsigned degree_in(int var) const;

    /// Adds c * m in place. Call canonicalize() after a batch of additions.
    void add_term(const Monomial& m, const Coefficient& c);
    /// Drops context (weight factor, jet domain) that no remaining term uses.
    Function& canonicalize();

    Function operator-() const;
    Function& operator+=(const Function& o);
    Function& operator-=(const Function& o);
    Function& operator*=(const Function& o);
    Function& operator*=(const Coefficient& c);

    friend Function operator+(Function a, const Function& b) { return a += b; }
    friend Function operator-(Function a, const Function& b) { return a -= b; }
    friend Function operator*(const Function& a, const Function& b);
    friend Function operator*(const Coefficient& c, Function f) { return f *= c; }
    friend Function operator*(Function f, const Coefficient& c) { return f *= c; }
    friend bool operator==(const Function& a, const Function& b);

    Function pow(unsigned k) const;

private:
    void merge_context(const Function& o, bool multiplying);

    ChartShape shape_;
    Terms terms_;
    WeightFactorPtr weight_;
    JetDomain jet_domain_ = 0;
};

/// A non-polynomial factor W carried symbolically through its logarithmic
/// derivatives d log W / dx, one polynomial per chart variable.
class WeightFactor {
public:
    WeightFactor(std::string id, ChartShape shape, std::vector<Function> log_derivative);

    const std::string& id() const { return id_; }
    const ChartShape& shape() const { return shape_; }
    const Function& log_derivative(int var) const { return log_derivative_.at(var); }

    /// Mixed second log-derivatives agree, i.e. d log W is closed.
    bool is_closed() const;

private:
    std::string id_;
    ChartShape shape_;
    std::vector<Function> log_derivative_;
};

/// e^{-z zb / (4 hbar)} on the Bargmann chart.
WeightFactorPtr gaussian_weight();
/// e^{i p.q / hbar} on a real chart of dimension n.
WeightFactorPtr momentum_phase(int n);
/// Looks a weight factor up by id ("gauss" or "phase") for the given chart.
WeightFactorPtr weight_by_id(const std::string& id, const ChartShape& shape);

/// Partial derivative in a chart variable. Jets follow the chain rule
/// d/dx psi_alpha = psi_{alpha + e_x} when psi depends on x, and the weight
/// factor contributes its log-derivative.
Function differentiate(const Function& f, int var);
/// Partial derivative in theta: differentiates theta powers and brings down i*m
/// from each e^{i m theta}.
Function differentiate_theta(const Function& f);

/// Replaces chart variable k by images[k]. `f` must carry no jets or weight factor.
Function substitute(const Function& f, std::span<const Function> images);

/// Antiderivative in `var` with zero constant term. Polynomial inputs only.
Function integrate(const Function& f, int var);

/// Canonical text form, parseable by the expression grammar.
std::string to_string(const Function& f);

}  // namespace dq
