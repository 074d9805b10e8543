#pragma once

#include "dq/derivation.hpp"

#include <string>
#include <vector>

namespace dq {

/// Darboux chart on phase space together with the prequantum connection
/// alpha = sum_x alpha_x dx + dtheta, the symplectic form and its Poisson bivector.
class Chart {
public:
    /// p_i, q^i with omega = dp_i ^ dq^i and alpha = (1/hbar) p_i dq^i + dtheta.
    static Chart real(int n);
    /// z, zb with omega = (1/2i) dzb ^ dz and alpha = (1/(4 i hbar))(zb dz - z dzb) + dtheta.
    static Chart bargmann();

    const ChartShape& shape() const { return shape_; }
    ChartKind kind() const { return shape_.kind(); }
    int variable_count() const { return shape_.variable_count(); }

    Function coordinate(int var) const { return Function::variable(shape_, var); }
    /// alpha(d/dx)
    const Function& connection(int var) const { return connection_.at(var); }
    /// omega(d/dx, d/dy)
    const Coefficient& symplectic(int x, int y) const { return omega_.at(x).at(y); }
    /// pi(dx, dy), with pi = -omega^{-1}
    const Coefficient& poisson(int x, int y) const { return poisson_.at(x).at(y); }

    friend bool operator==(const Chart& a, const Chart& b) { return a.shape_ == b.shape_; }

private:
    Chart(ChartShape shape, std::vector<Function> connection, std::vector<std::vector<Coefficient>> omega,
          std::vector<std::vector<Coefficient>> poisson);

    ChartShape shape_;
    std::vector<Function> connection_;
    std::vector<std::vector<Coefficient>> omega_;
    std::vector<std::vector<Coefficient>> poisson_;
};

/// alpha(X) for a vector field X on the bundle.
Function connection_form(const Chart& chart, const Derivation& x);

/// d alpha (d/dx, d/dy) == omega(d/dx, d/dy) / hbar for every coordinate pair.
bool curvature_matches(const Chart& chart);

/// v - alpha(v) d/dtheta: the unique lift annihilated by alpha that projects to v.
Derivation horizontal_lift(const Chart& chart, const Derivation& v);
Derivation horizontal_lift(const Chart& chart, int var);
Derivation reeb_field(const Chart& chart);

/// The Souriau bracket [[f, g]] = pi^#(df, dg).
Function souriau_bracket(const Chart& chart, const Function& f, const Function& g);
/// pi(dF, dG) on the base; agrees with the Souriau bracket on theta-free inputs.
Function poisson_bracket(const Chart& chart, const Function& f, const Function& g);
/// [[f,[[g,h]]]] + [[g,[[h,f]]]] + [[h,[[f,g]]]]
Function jacobiator(const Chart& chart, const Function& f, const Function& g, const Function& h);

/// xi_F = pi(dF, .), so that xi_p = d/dq and xi_q = -d/dp. Rejects non-observables.
Derivation hamiltonian_vector_field(const Chart& chart, const Function& observable);

/// A Lagrangian distribution spanned by coordinate directions.
struct Polarization {
    std::string label;
    std::vector<int> directions;
};

/// J = span{d/dp_i} (real) or span{d/dzb} (Bargmann).
Polarization polarization_j(const Chart& chart);
/// K = span{d/dq^i} (real) or span{d/dz} (Bargmann).
Polarization polarization_k(const Chart& chart);

/// omega vanishes on every pair of spanning directions.
bool is_lagrangian(const Chart& chart, const Polarization& pol);

/// zeta^#[psi] == 0 for every spanning direction zeta. Rejects inputs whose
/// theta weight is not 1.
bool is_polarized(const Chart& chart, const Polarization& pol, const Function& wave);

/// Affine change between Darboux charts:
///   p'_j = a_j^i p_i + b_j,   q'^j = c^j_i q^i + d^j,   with a^T c = 1.
/// The fibre coordinate follows as theta' = theta - (1/hbar) b_j c^j_i q^i so
/// that the connection form is preserved.
struct AffineMap {
    std::vector<std::vector<Rational>> a;  // a[j][i] = a_j^i
    std::vector<Rational> b;
    std::vector<std::vector<Rational>> c;  // c[j][i] = c^j_i
    std::vector<Rational> d;

    int dim() const { return static_cast<int>(b.size()); }
    /// Throws AlgebraError unless the blocks are n x n and a^T c is the identity.
    void validate() const;
    bool translates_fibre() const;
};

/// Expresses a function given in the old chart in the new chart's coordinates.
/// Functions depending on theta are accepted only when the map does not shift theta.
Function change_chart(const AffineMap& map, const Function& f);
/// Push-forward of a vector field on the bundle.
Derivation change_chart(const AffineMap& map, const Derivation& v);

}  // namespace dq
