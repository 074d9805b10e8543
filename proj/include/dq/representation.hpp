#pragma once

#include "dq/products.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dq {

/// Where wave functions live:
///   position  psi(q) e^{i theta}                 (J-polarized, real chart)
///   momentum  phi(p) e^{i p.q/hbar} e^{i theta}  (K-polarized, real chart)
///   bargmann  psi(z) e^{-|z|^2/4hbar} e^{i theta} (J-polarized, Bargmann chart)
///   phase     psi(p, q) e^{i theta}, unpolarized prequantum wave functions
enum class Representation { position, momentum, bargmann, phase };

std::string to_string(Representation rep);
std::optional<Representation> parse_representation(const std::string& name);

/// Throws ConfigError when the representation does not fit the chart kind.
void check_compatible(Representation rep, const ChartShape& shape);

std::vector<int> configuration_variables(Representation rep, const ChartShape& shape);
JetDomain configuration_domain(Representation rep, const ChartShape& shape);
WeightFactorPtr representation_weight(Representation rep, const ChartShape& shape);
/// The polarization selecting the representation's wave functions; none for `phase`.
Polarization representation_polarization(Representation rep, const Chart& chart);

/// psi * W * e^{i theta} for a configuration-space component psi.
Function wave_function(Representation rep, const Chart& chart, const Function& component);
/// psi_0 * W * e^{i theta}, with psi a generic function of the configuration variables.
Function generic_wave_function(Representation rep, const Chart& chart);
/// Inverse of wave_function(); throws AlgebraError if `wave` is not of that form.
Function wave_component(Representation rep, const Function& wave);

/// Differential operator  sum_alpha c_alpha(x) d^alpha  in the configuration
/// variables of a representation, derivatives to the right. Multi-indices run
/// over all chart variables and vanish outside the configuration variables.
class DiffOperator {
public:
    struct IndexOrder {
        bool operator()(const MultiIndex& a, const MultiIndex& b) const;
    };
    using Terms = std::map<MultiIndex, Function, IndexOrder>;

    DiffOperator(Representation rep, ChartShape shape);

    static DiffOperator identity(Representation rep, ChartShape shape);
    static DiffOperator multiplication(Representation rep, const Function& coefficient);
    /// d/dx for a configuration variable x.
    static DiffOperator derivative(Representation rep, ChartShape shape, int var);

    Representation representation() const { return rep_; }
    const ChartShape& shape() const { return shape_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const MultiIndex& alpha, const Function& coefficient);

    /// sum_alpha c_alpha d^alpha psi, with psi a configuration-space function or jet.
    Function apply(const Function& psi) const;

    DiffOperator& operator+=(const DiffOperator& o);
    DiffOperator& operator-=(const DiffOperator& o);
    friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
    friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
    friend DiffOperator operator*(const Coefficient& c, DiffOperator d);
    friend bool operator==(const DiffOperator& a, const DiffOperator& b);

private:
    void check_same(const DiffOperator& o) const;

    Representation rep_;
    ChartShape shape_;
    Terms terms_;
};

/// a o b in normal form.
DiffOperator compose(const DiffOperator& a, const DiffOperator& b);

/// Formal adjoint for the pairing with real configuration variables:
/// (d/dx)^+ = -d/dx, x^+ = x, scalars conjugated. Real representations only.
DiffOperator formal_adjoint(const DiffOperator& d);

/// Reads off Q F as a differential operator by quantizing a generic wave function.
/// Throws PolarizationViolation when the result leaves the representation.
DiffOperator extract_operator(StarKind kind, const Chart& chart, const Function& observable, Representation rep);

/// Carries a momentum-representation operator to the position representation
/// along p -> (hbar/i) d/dq, d/dp -> -(i/hbar) q, the algebraic content of the
/// Fourier transform.
DiffOperator momentum_to_position(const DiffOperator& d);

/// Complex conjugate of the scalars (hbar is real).
Function conjugate(const Function& f);

/// e.g. "(hbar/i)*q1*d(1) + (1/2)*(hbar/i)"; d(...) runs over configuration variables.
std::string to_string(const DiffOperator& d);

}  // namespace dq
