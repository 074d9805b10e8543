#pragma once

#include "dq/function.hpp"

#include <vector>

namespace dq {

/// First-order differential operator  sum_x c_x d/dx + c_theta d/dtheta  on
/// functions over the bundle. Coefficients are plain polynomials (Laurent in hbar).
class Derivation {
public:
    explicit Derivation(ChartShape shape);
    Derivation(ChartShape shape, std::vector<Function> components, Function theta_component);

    /// c * d/dx
    static Derivation coordinate(ChartShape shape, int var, const Coefficient& c = Coefficient(1));
    /// The Reeb field d/dtheta.
    static Derivation reeb(ChartShape shape);

    const ChartShape& shape() const { return shape_; }
    const Function& component(int var) const { return components_.at(var); }
    const Function& theta_component() const { return theta_; }
    bool is_zero() const;

    Function apply(const Function& f) const;
    Function operator()(const Function& f) const { return apply(f); }

    Derivation& operator+=(const Derivation& o);
    Derivation& operator-=(const Derivation& o);
    friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
    friend Derivation operator-(Derivation a, const Derivation& b) { return a -= b; }
    /// Pointwise multiplication of every coefficient by g.
    friend Derivation operator*(const Function& g, const Derivation& d);
    friend Derivation operator*(const Coefficient& c, const Derivation& d);
    friend bool operator==(const Derivation&, const Derivation&) = default;

private:
    ChartShape shape_;
    std::vector<Function> components_;
    Function theta_;
};

/// Lie bracket [a, b] = a b - b a, again a derivation.
Derivation commutator(const Derivation& a, const Derivation& b);

std::string to_string(const Derivation& d);

}  // namespace dq
