#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace dq {

using Rational = mpq_class;

/// Parses "n" or "n/d"; the result is in lowest terms. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

/// "n" when the denominator is 1, otherwise "n/d".
std::string to_string(const Rational& r);

/// Exact complex number with rational real and imaginary parts.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {}
    GaussianRational(Rational re, Rational im = 0);

    static GaussianRational i() { return {0, 1}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    GaussianRational conj() const { return {re_, -im_}; }
    GaussianRational inverse() const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// i^k for any integer k.
    static GaussianRational i_pow(int k);

private:
    Rational re_{0};
    Rational im_{0};
};

std::string to_string(const GaussianRational& z);

/// Laurent polynomial in the formal symbol hbar with Gaussian-rational coefficients.
/// Zero entries are never stored.
class Coefficient {
public:
    using Terms = std::map<int, GaussianRational>;

    Coefficient() = default;
    Coefficient(long value) : Coefficient(GaussianRational(value)) {}
    Coefficient(GaussianRational value, int hbar_power = 0);

    static Coefficient hbar(int power = 1) { return {GaussianRational(1), power}; }
    static Coefficient i() { return {GaussianRational::i(), 0}; }
    /// hbar / i
    static Coefficient hbar_over_i() { return {GaussianRational(0, -1), 1}; }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// True for a single term c * hbar^k, which is invertible in the ring.
    bool is_unit() const { return terms_.size() == 1; }

    Coefficient conj() const;
    Coefficient inverse() const;  // requires is_unit()

    Coefficient operator-() const;
    Coefficient& operator+=(const Coefficient& o);
    Coefficient& operator-=(const Coefficient& o);
    Coefficient& operator*=(const Coefficient& o);

    friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
    friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
    friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
    friend bool operator==(const Coefficient& a, const Coefficient& b) { return a.terms_ == b.terms_; }

    Coefficient pow(int k) const;

private:
    void add_term(int k, const GaussianRational& c);
    Terms terms_;
};

std::string to_string(const Coefficient& c);

}  // namespace dq
