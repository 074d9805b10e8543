#include "dq/function.hpp"

#include <vector>

namespace dq {
namespace {

std::string rational_factor(const Rational& r) {
    return r.get_den() == 1 ? to_string(r) : "(" + to_string(r) + ")";
}

std::string imaginary_factor(const Rational& im) { return im == 1 ? "i" : rational_factor(im) + "*i"; }

// Splits off the sign and renders |b| as a factor; empty string for b == 1.
std::pair<bool, std::string> scalar_factor(GaussianRational b) {
    bool negative = sgn(b.im()) == 0 ? sgn(b.re()) < 0 : sgn(b.re()) == 0 ? sgn(b.im()) < 0 : sgn(b.re()) < 0;
    if (negative) b = -b;
    if (sgn(b.im()) == 0) return {negative, b.is_one() ? "" : rational_factor(b.re())};
    if (sgn(b.re()) == 0) return {negative, imaginary_factor(b.im())};
    Rational im = abs(b.im());
    std::string s = "(" + to_string(b.re()) + (sgn(b.im()) < 0 ? " - " : " + ") +
                    (im == 1 ? std::string("i") : to_string(im) + "*i") + ")";
    return {negative, s};
}

std::string power(const std::string& base, long e) { return e == 1 ? base : base + "^" + std::to_string(e); }

}  // namespace

std::string to_string(const Function& f) {
    if (f.is_zero()) return "0";
    const ChartShape& s = f.shape();
    std::string out;
    for (const auto& [mono, coeff] : f.terms()) {
        std::vector<std::string> factors;
        for (int v = 0; v < s.variable_count(); ++v)
            if (mono.powers[v] > 0) factors.push_back(power(s.name(v), mono.powers[v]));
        if (mono.theta_power > 0) factors.push_back(power("theta", mono.theta_power));
        if (mono.theta_weight != 0) factors.push_back("e(" + std::to_string(mono.theta_weight) + ")");
        for (const auto& [alpha, e] : mono.jets) {
            std::string idx;
            for (int v = 0; v < s.variable_count(); ++v) {
                if (!in_domain(f.jet_domain(), v)) continue;
                if (!idx.empty()) idx += ",";
                idx += std::to_string(alpha[v]);
            }
            factors.push_back(power("psi(" + idx + ")", e));
        }
        if (f.weight()) factors.push_back(f.weight()->id());

        for (auto it = coeff.terms().rbegin(); it != coeff.terms().rend(); ++it) {
            const int k = it->first;
            // a * hbar^k == (a * i^k) * (hbar/i)^k
            auto [negative, scalar] = scalar_factor(it->second * GaussianRational::i_pow(k));
            std::vector<std::string> parts;
            if (!scalar.empty()) parts.push_back(scalar);
            if (k != 0) parts.push_back(power("(hbar/i)", k));
            parts.insert(parts.end(), factors.begin(), factors.end());
            std::string term;
            for (const auto& part : parts) term += (term.empty() ? "" : "*") + part;
            if (term.empty()) term = "1";
            if (out.empty()) {
                out = (negative ? "-" : "") + term;
            } else {
                out += (negative ? " - " : " + ") + term;
            }
        }
    }
    return out;
}

}  // namespace dq
