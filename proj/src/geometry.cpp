#include "dq/geometry.hpp"

namespace dq {
namespace {

using Matrix = std::vector<std::vector<Coefficient>>;

Matrix zero_matrix(int n) { return Matrix(n, std::vector<Coefficient>(n)); }

}  // namespace

Chart::Chart(ChartShape shape, std::vector<Function> connection, Matrix omega, Matrix poisson)
    : shape_(shape), connection_(std::move(connection)), omega_(std::move(omega)), poisson_(std::move(poisson)) {}

Chart Chart::real(int n) {
    const auto s = ChartShape::real(n);
    std::vector<Function> alpha(s.variable_count(), Function(s));
    Matrix omega = zero_matrix(s.variable_count());
    Matrix poisson = zero_matrix(s.variable_count());
    for (int k = 0; k < n; ++k) {
        alpha[s.q(k)] = Coefficient::hbar(-1) * Function::variable(s, s.p(k));
        omega[s.p(k)][s.q(k)] = 1;
        omega[s.q(k)][s.p(k)] = -1;
        poisson[s.p(k)][s.q(k)] = 1;
        poisson[s.q(k)][s.p(k)] = -1;
    }
    return Chart(s, std::move(alpha), std::move(omega), std::move(poisson));
}

Chart Chart::bargmann() {
    const auto s = ChartShape::bargmann();
    const int z = ChartShape::z, zb = ChartShape::zb;
    // 1/(4 i hbar) = -i/4 * hbar^-1
    const Coefficient k(GaussianRational(0, Rational(-1, 4)), -1);
    std::vector<Function> alpha{k * Function::variable(s, zb), -k * Function::variable(s, z)};
    Matrix omega = zero_matrix(2);
    Matrix poisson = zero_matrix(2);
    const GaussianRational half_over_i(0, Rational(-1, 2));  // 1/(2i)
    omega[zb][z] = Coefficient(half_over_i);
    omega[z][zb] = Coefficient(-half_over_i);
    poisson[zb][z] = Coefficient(GaussianRational(0, 2));
    poisson[z][zb] = Coefficient(GaussianRational(0, -2));
    return Chart(s, std::move(alpha), std::move(omega), std::move(poisson));
}

Function connection_form(const Chart& chart, const Derivation& x) {
    Function out = x.theta_component();
    for (int v = 0; v < chart.variable_count(); ++v) out += x.component(v) * chart.connection(v);
    return out;
}

bool curvature_matches(const Chart& chart) {
    for (int x = 0; x < chart.variable_count(); ++x) {
        for (int y = 0; y < chart.variable_count(); ++y) {
            Function d_alpha = differentiate(chart.connection(y), x) - differentiate(chart.connection(x), y);
            Function expected = Function::constant(chart.shape(), chart.symplectic(x, y) * Coefficient::hbar(-1));
            if (!(d_alpha == expected)) return false;
        }
    }
    return true;
}

Derivation horizontal_lift(const Chart& chart, const Derivation& v) {
    return v - connection_form(chart, v) * Derivation::reeb(chart.shape());
}

Derivation horizontal_lift(const Chart& chart, int var) {
    return horizontal_lift(chart, Derivation::coordinate(chart.shape(), var));
}

Derivation reeb_field(const Chart& chart) { return Derivation::reeb(chart.shape()); }

Function souriau_bracket(const Chart& chart, const Function& f, const Function& g) {
    const int nv = chart.variable_count();
    std::vector<Function> df, dg;
    for (int x = 0; x < nv; ++x) {
        Derivation lift = horizontal_lift(chart, x);
        df.push_back(lift(f));
        dg.push_back(lift(g));
    }
    Function out(chart.shape());
    for (int x = 0; x < nv; ++x)
        for (int y = 0; y < nv; ++y)
            if (!chart.poisson(x, y).is_zero()) out += chart.poisson(x, y) * (df[x] * dg[y]);
    return out;
}

Function poisson_bracket(const Chart& chart, const Function& f, const Function& g) {
    const int nv = chart.variable_count();
    Function out(chart.shape());
    for (int x = 0; x < nv; ++x)
        for (int y = 0; y < nv; ++y)
            if (!chart.poisson(x, y).is_zero())
                out += chart.poisson(x, y) * (differentiate(f, x) * differentiate(g, y));
    return out;
}

Function jacobiator(const Chart& chart, const Function& f, const Function& g, const Function& h) {
    auto br = [&](const Function& a, const Function& b) { return souriau_bracket(chart, a, b); };
    return br(f, br(g, h)) + br(g, br(h, f)) + br(h, br(f, g));
}

Derivation hamiltonian_vector_field(const Chart& chart, const Function& observable) {
    if (!observable.is_observable())
        throw AlgebraError("Hamiltonian vector fields are defined for observables only, got " + to_string(observable));
    Derivation xi(chart.shape());
    for (int x = 0; x < chart.variable_count(); ++x) {
        Function dx = differentiate(observable, x);
        if (dx.is_zero()) continue;
        for (int y = 0; y < chart.variable_count(); ++y)
            if (!chart.poisson(x, y).is_zero())
                xi += (chart.poisson(x, y) * dx) * Derivation::coordinate(chart.shape(), y);
    }
    return xi;
}

Polarization polarization_j(const Chart& chart) {
    const auto& s = chart.shape();
    if (s.kind() == ChartKind::bargmann) return {"J", {ChartShape::zb}};
    Polarization pol{"J", {}};
    for (int k = 0; k < s.dim(); ++k) pol.directions.push_back(s.p(k));
    return pol;
}

Polarization polarization_k(const Chart& chart) {
    const auto& s = chart.shape();
    if (s.kind() == ChartKind::bargmann) return {"K", {ChartShape::z}};
    Polarization pol{"K", {}};
    for (int k = 0; k < s.dim(); ++k) pol.directions.push_back(s.q(k));
    return pol;
}

bool is_lagrangian(const Chart& chart, const Polarization& pol) {
    if (static_cast<int>(pol.directions.size()) != chart.shape().dim()) return false;
    for (int x : pol.directions)
        for (int y : pol.directions)
            if (!chart.symplectic(x, y).is_zero()) return false;
    return true;
}

bool is_polarized(const Chart& chart, const Polarization& pol, const Function& wave) {
    if (wave.is_zero()) return true;
    if (wave.theta_weight() != 1)
        throw AlgebraError("polarization is defined for prequantum wave functions (theta weight 1), got " +
                           to_string(wave));
    for (int x : pol.directions)
        if (!horizontal_lift(chart, x).apply(wave).is_zero()) return false;
    return true;
}

// ---------------------------------------------------------------------------

void AffineMap::validate() const {
    const size_t n = b.size();
    if (n == 0 || d.size() != n || a.size() != n || c.size() != n)
        throw AlgebraError("affine chart change needs n x n blocks a, c and n-vectors b, d");
    for (size_t j = 0; j < n; ++j)
        if (a[j].size() != n || c[j].size() != n) throw AlgebraError("affine chart change blocks must be square");
    for (size_t i = 0; i < n; ++i) {
        for (size_t k = 0; k < n; ++k) {
            Rational sum = 0;
            for (size_t j = 0; j < n; ++j) sum += a[j][i] * c[j][k];
            if (sum != (i == k ? 1 : 0))
                throw AlgebraError("affine chart change is not symplectic: a and c must be contragredient (a^T c = 1)");
        }
    }
}

bool AffineMap::translates_fibre() const {
    for (const auto& x : b)
        if (sgn(x) != 0) return true;
    return false;
}

Function change_chart(const AffineMap& map, const Function& f) {
    map.validate();
    const auto& s = f.shape();
    if (s.kind() != ChartKind::real || s.dim() != map.dim())
        throw AlgebraError("affine chart changes act on real charts of matching dimension");
    if (f.has_jets() || f.weight()) throw AlgebraError("chart changes of jets and weight factors are not supported");
    if (map.translates_fibre() && (f.depends_on_theta() || f.theta_weight().value_or(0) != 0))
        throw AlgebraError("a momentum translation shifts theta; only theta-free functions can be carried across");
    const int n = map.dim();
    std::vector<Function> images(s.variable_count(), Function(s));
    // p = c^T (p' - b),  q = a^T (q' - d)
    for (int i = 0; i < n; ++i) {
        Function pi(s), qi(s);
        for (int j = 0; j < n; ++j) {
            const Function pj = Function::variable(s, s.p(j)) - Function::constant(s, GaussianRational(map.b[j]));
            const Function qj = Function::variable(s, s.q(j)) - Function::constant(s, GaussianRational(map.d[j]));
            pi += Coefficient(GaussianRational(map.c[j][i])) * pj;
            qi += Coefficient(GaussianRational(map.a[j][i])) * qj;
        }
        images[s.p(i)] = pi;
        images[s.q(i)] = qi;
    }
    return substitute(f, images);
}

Derivation change_chart(const AffineMap& map, const Derivation& v) {
    map.validate();
    const auto& s = v.shape();
    if (s.kind() != ChartKind::real || s.dim() != map.dim())
        throw AlgebraError("affine chart changes act on real charts of matching dimension");
    const int n = map.dim();
    std::vector<Function> comps(s.variable_count(), Function(s));
    Function theta = v.theta_component();
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            comps[s.p(j)] += Coefficient(GaussianRational(map.a[j][i])) * v.component(s.p(i));
            comps[s.q(j)] += Coefficient(GaussianRational(map.c[j][i])) * v.component(s.q(i));
            // d theta' / d q^i = -(1/hbar) b_j c^j_i
            theta -= Coefficient(GaussianRational(map.b[j] * map.c[j][i]), -1) * v.component(s.q(i));
        }
    }
    for (auto& comp : comps) comp = change_chart(map, comp);
    return Derivation(s, std::move(comps), change_chart(map, theta));
}

}  // namespace dq
