#pragma once

#include "dq/geometry.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dq {

enum class StarKind { normal, antinormal, moyal, wick };

std::string to_string(StarKind kind);
std::optional<StarKind> parse_star_kind(const std::string& name);

struct DriverPair {
    Derivation s;
    Derivation t;
};

/// A contravariant 2-tensor written as an ordered sum of products s^a (x) t_a
/// of mutually commuting vector fields, or the horizontal lift of such a sum.
class DriverTensor {
public:
    DriverTensor(ChartShape shape, std::vector<DriverPair> pairs, bool lifted = false);

    const ChartShape& shape() const { return shape_; }
    const std::vector<DriverPair>& pairs() const { return pairs_; }
    bool lifted() const { return lifted_; }

    /// Replaces every field by its horizontal lift.
    DriverTensor lift(const Chart& chart) const;

    /// All fields s^a, t_b commute pairwise, checked on the chart coordinates and theta.
    bool fields_commute() const;

    /// Lambda(dx, dy) for chart coordinates x, y.
    std::vector<std::vector<Function>> components() const;

private:
    ChartShape shape_;
    std::vector<DriverPair> pairs_;
    bool lifted_;
};

/// The fixed decompositions:
///   normal     [(d/dp_k, d/dq^k)]_k          Bargmann: [(2i d/dzb, d/dz)]
///   antinormal [(-d/dq^k, d/dp_k)]_k         Bargmann: [(-2i d/dz, d/dzb)]
///   moyal      normal pairs then antinormal pairs
///   wick       [(2i d/dzb, d/dz)], Bargmann charts only
DriverTensor driver_tensor(StarKind kind, const Chart& chart);

DriverTensor change_chart(const AffineMap& map, const DriverTensor& driver);

/// An element of C(Y) (x) C(Y) as a list of (left, right) pairs.
using TensorTerms = std::vector<std::pair<Function, Function>>;

/// Lambda^k (f (x) g) with Lambda^{k+1} = Lambda o Lambda^k. Pairs sharing the same
/// left factor are merged and zero pairs dropped.
TensorTerms apply_driver(const DriverTensor& driver, const Function& f, const Function& g, unsigned k);

/// m(sum left (x) right) = sum left * right
Function contract(const TensorTerms& terms, const ChartShape& shape);

/// Exact comparison of tensor elements (independent of how the pairs are split).
bool tensor_equal(const TensorTerms& a, const TensorTerms& b);

/// m o exp(c Lambda)(f (x) g); throws AlgebraError if the series does not terminate.
Function exponential_product(const DriverTensor& driver, const Function& f, const Function& g,
                             const Coefficient& c);

/// (hbar/i), or (hbar/(2i)) for the Moyal star.
Coefficient star_parameter(StarKind kind);

/// F star G on observables: m o exp(star_parameter(kind) Lambda)(F (x) G).
Function star_product(StarKind kind, const Chart& chart, const Function& lhs, const Function& rhs);

/// f bullet g = m o exp((hbar/i) Lambda^#)(f (x) g).
Function bullet_product(StarKind kind, const Chart& chart, const Function& lhs, const Function& rhs);

/// F Psi + (hbar/i) [[F, Psi]]
Function prequantize(const Chart& chart, const Function& observable, const Function& wave);

/// Thrown when a quantum operator meets or produces a wave function that is
/// not polarized.
class PolarizationViolation : public std::runtime_error {
public:
    PolarizationViolation(const std::string& message, Function offending)
        : std::runtime_error(message), offending_(std::move(offending)) {}
    const Function& offending() const { return offending_; }

private:
    Function offending_;
};

/// The polarization wave functions are taken in for a given product: J, except
/// K for the antinormal product.
Polarization default_polarization(StarKind kind, const Chart& chart);

/// Q F [Psi] = F bullet Psi on polarized Psi. Throws PolarizationViolation when
/// the input or the output fails to be polarized.
Function quantize(StarKind kind, const Chart& chart, const Function& observable, const Function& wave,
                  const Polarization& pol);
Function quantize(StarKind kind, const Chart& chart, const Function& observable, const Function& wave);

/// -sum_k d/dq^k d/dp_k F, or -2i d/dzb d/dz F on the Bargmann chart.
Function yano_laplacian(const Chart& chart, const Function& observable);

/// exp((i hbar / 2) Delta) F
Function agarwal_transform(const Chart& chart, const Function& observable);

/// The functional-calculus inverse of Q(p) on psi(q) e^{i theta}:
/// (i/hbar) (int_0^q psi) e^{i theta}. One-dimensional real charts, polynomial psi.
Function quantize_inverse_p(const Chart& chart, const Function& wave);

}  // namespace dq
