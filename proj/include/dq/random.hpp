#pragma once

#include "dq/representation.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace dq {

/// Seeded generator of sparse random test data. Same seed, same sequence.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    std::mt19937_64& engine() { return engine_; }
    int uniform(int lo, int hi);
    bool chance(double p);

    /// num/den with |num| <= 6, 1 <= den <= 4; never zero when nonzero is set.
    Rational rational(bool nonzero = false);
    GaussianRational gaussian(bool nonzero = false);
    /// sum over hbar^k, k in [min_hbar, max_hbar]
    Coefficient coefficient(int min_hbar = 0, int max_hbar = 0);

    /// Sparse polynomial in the given chart variables, total degree <= max_degree,
    /// at most `terms` terms. Scalars are real when `real` is set.
    Function polynomial(const ChartShape& s, const std::vector<int>& vars, unsigned max_degree, unsigned terms,
                        bool real = false);
    Function observable(const ChartShape& s, unsigned max_degree, unsigned terms = 4, bool real = false);

    /// A polarized wave function of the representation: a random polynomial in the
    /// configuration variables times W e^{i theta}, plus a random combination of
    /// jets psi_alpha with polynomial coefficients when `jets` is set.
    Function wave(Representation rep, const Chart& chart, unsigned max_degree, bool jets);

    /// Anything a bullet product accepts: terms with mixed theta weights, theta
    /// powers, hbar^{-1}, and jets over all chart variables.
    Function equivariant(const ChartShape& s, unsigned max_degree, unsigned terms = 4);

    /// Random affine chart change with contragredient linear parts.
    AffineMap affine_map(int n);

private:
    Monomial monomial(const ChartShape& s, const std::vector<int>& vars, unsigned max_degree);
    std::mt19937_64 engine_;
};

}  // namespace dq
