#include "dq/random.hpp"

#include <numeric>

namespace dq {

int RandomSource::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

bool RandomSource::chance(double p) { return std::bernoulli_distribution(p)(engine_); }

Rational RandomSource::rational(bool nonzero) {
    while (true) {
        Rational r(uniform(-6, 6), uniform(1, 4));
        r.canonicalize();
        if (!nonzero || sgn(r) != 0) return r;
    }
}

GaussianRational RandomSource::gaussian(bool nonzero) {
    while (true) {
        GaussianRational z(rational(), chance(0.5) ? rational() : Rational(0));
        if (!nonzero || !z.is_zero()) return z;
    }
}

Coefficient RandomSource::coefficient(int min_hbar, int max_hbar) {
    Coefficient c;
    for (int k = min_hbar; k <= max_hbar; ++k)
        if (k == min_hbar || chance(0.5)) c += Coefficient(gaussian(), k);
    return c;
}

Monomial RandomSource::monomial(const ChartShape& s, const std::vector<int>& vars, unsigned max_degree) {
    Monomial m(s.variable_count());
    if (vars.empty()) return m;
    const unsigned degree = static_cast<unsigned>(uniform(0, static_cast<int>(max_degree)));
    for (unsigned d = 0; d < degree; ++d) ++m.powers[vars[uniform(0, static_cast<int>(vars.size()) - 1)]];
    return m;
}

Function RandomSource::polynomial(const ChartShape& s, const std::vector<int>& vars, unsigned max_degree,
                                  unsigned terms, bool real) {
    Function f(s);
    const int count = uniform(1, static_cast<int>(std::max(1u, terms)));
    for (int t = 0; t < count; ++t) {
        GaussianRational c = real ? GaussianRational(rational(true)) : gaussian(true);
        f.add_term(monomial(s, vars, max_degree), Coefficient(c));
    }
    return f.canonicalize();
}

Function RandomSource::observable(const ChartShape& s, unsigned max_degree, unsigned terms, bool real) {
    std::vector<int> vars(s.variable_count());
    std::iota(vars.begin(), vars.end(), 0);
    return polynomial(s, vars, max_degree, terms, real);
}

Function RandomSource::wave(Representation rep, const Chart& chart, unsigned max_degree, bool jets) {
    const auto& s = chart.shape();
    const auto vars = configuration_variables(rep, s);
    Function component = polynomial(s, vars, max_degree, 3);
    if (jets) {
        const JetDomain domain = configuration_domain(rep, s);
        const int count = uniform(1, 3);
        for (int t = 0; t < count; ++t) {
            MultiIndex alpha(s.variable_count(), 0);
            for (int v : vars) alpha[v] = static_cast<unsigned>(uniform(0, 2));
            component += polynomial(s, vars, 2, 2) * Function::jet(s, domain, alpha);
        }
    }
    return wave_function(rep, chart, component);
}

Function RandomSource::equivariant(const ChartShape& s, unsigned max_degree, unsigned terms) {
    std::vector<int> vars(s.variable_count());
    std::iota(vars.begin(), vars.end(), 0);
    const JetDomain domain = (JetDomain(1) << s.variable_count()) - 1;
    Function f(s);
    const int count = uniform(1, static_cast<int>(std::max(1u, terms)));
    for (int t = 0; t < count; ++t) {
        Monomial m = monomial(s, vars, max_degree);
        m.theta_weight = uniform(-1, 2);
        if (chance(0.25)) m.theta_power = 1;
        Function term(s);
        term.add_term(m, coefficient(chance(0.3) ? -1 : 0, 0));
        if (chance(0.4)) {
            MultiIndex alpha(s.variable_count(), 0);
            for (int v : vars) alpha[v] = static_cast<unsigned>(uniform(0, 1));
            term *= Function::jet(s, domain, alpha);
        }
        f += term;
    }
    return f;
}

AffineMap RandomSource::affine_map(int n) {
    // a = L U D with unit triangular L, U and a rational diagonal D; c = (a^T)^{-1}.
    using Matrix = std::vector<std::vector<Rational>>;
    auto identity = [n] {
        Matrix m(n, std::vector<Rational>(n, 0));
        for (int i = 0; i < n; ++i) m[i][i] = 1;
        return m;
    };
    auto multiply = [n](const Matrix& x, const Matrix& y) {
        Matrix m(n, std::vector<Rational>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) m[i][j] += x[i][k] * y[k][j];
        return m;
    };
    Matrix l = identity(), u = identity(), d = identity();
    for (int i = 0; i < n; ++i) {
        d[i][i] = rational(true);
        for (int j = 0; j < i; ++j) {
            l[i][j] = rational();
            u[j][i] = rational();
        }
    }
    Matrix a = multiply(multiply(l, u), d);

    // Gauss-Jordan on [a^T | 1]
    Matrix m(n, std::vector<Rational>(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = a[j][i];
        m[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        while (sgn(m[pivot][col]) == 0) ++pivot;
        std::swap(m[pivot], m[col]);
        const Rational inv = 1 / m[col][col];
        for (auto& x : m[col]) x *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || sgn(m[r][col]) == 0) continue;
            const Rational f = m[r][col];
            for (int k = 0; k < 2 * n; ++k) m[r][k] -= f * m[col][k];
        }
    }
    AffineMap map;
    map.a = a;
    map.c.assign(n, std::vector<Rational>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) map.c[i][j] = m[i][n + j];
    for (int i = 0; i < n; ++i) {
        map.b.push_back(chance(0.5) ? rational() : Rational(0));
        map.d.push_back(rational());
    }
    return map;
}

}  // namespace dq
