#include "dq/scalar.hpp"

#include <stdexcept>

namespace dq {

Rational parse_rational(const std::string& text) {
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
    if (sgn(r.get_den()) == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational GaussianRational::inverse() const {
    Rational norm = re_ * re_ + im_ * im_;
    if (sgn(norm) == 0) throw std::domain_error("division by zero Gaussian rational");
    return {re_ / norm, -im_ / norm};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

GaussianRational GaussianRational::i_pow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

std::string to_string(const GaussianRational& z) {
    if (sgn(z.im()) == 0) return to_string(z.re());
    std::string im = (z.im() == 1) ? "i" : (z.im() == -1) ? "-i" : to_string(z.im()) + "*i";
    if (sgn(z.re()) == 0) return im;
    if (sgn(z.im()) < 0) return to_string(z.re()) + " - " + im.substr(1);
    return to_string(z.re()) + " + " + im;
}

Coefficient::Coefficient(GaussianRational value, int hbar_power) {
    if (!value.is_zero()) terms_.emplace(hbar_power, std::move(value));
}

bool Coefficient::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one();
}

Coefficient Coefficient::conj() const {
    Coefficient out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, c.conj());
    return out;
}

Coefficient Coefficient::inverse() const {
    if (!is_unit()) throw std::domain_error("coefficient " + to_string(*this) + " is not invertible");
    const auto& [k, c] = *terms_.begin();
    return {c.inverse(), -k};
}

Coefficient Coefficient::operator-() const {
    Coefficient out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

void Coefficient::add_term(int k, const GaussianRational& c) {
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
    Coefficient out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
    return out;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) { return *this = *this * o; }

Coefficient Coefficient::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    Coefficient out(1);
    for (int j = 0; j < k; ++j) out *= *this;
    return out;
}

std::string to_string(const Coefficient& c) {
    if (c.is_zero()) return "0";
    std::string out;
    for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += "(" + to_string(it->second) + ")";
        if (it->first != 0) out += "*hbar^" + std::to_string(it->first);
    }
    return out;
}

}  // namespace dq
