#pragma once

#include "dq/expression.hpp"
#include "dq/representation.hpp"

#include <doctest.h>

#include <string>

namespace dq::test {

inline Function parse(const std::string& text, const ChartShape& s, JetDomain domain = 0) {
    return parse_function(text, {s, domain});
}

inline Function x(const ChartShape& s, const std::string& name) { return Function::variable(s, *s.index_of(name)); }

inline Function k(const ChartShape& s, const Coefficient& coef) { return Function::constant(s, coef); }

inline Rational q(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Coefficient rat(long num, long den = 1) { return Coefficient(GaussianRational(q(num, den))); }

inline Coefficient hbar(int power = 1) { return Coefficient::hbar(power); }

inline Coefficient imag(long num = 1, long den = 1) { return Coefficient(GaussianRational(0, q(num, den))); }

}  // namespace dq::test

namespace doctest {
template <>
struct StringMaker<dq::Function> {
    static String convert(const dq::Function& f) { return dq::to_string(f).c_str(); }
};
template <>
struct StringMaker<dq::DiffOperator> {
    static String convert(const dq::DiffOperator& d) { return dq::to_string(d).c_str(); }
};
}  // namespace doctest
