#pragma once

#include <functional>
#include <vector>

#include "paragrass/element.hpp"

namespace paragrass {

// A formal power series c_0 + c_1 t + c_2 t^2 + ... with exact rational
// coefficients, supplied on demand.  Presets cover everything the engine
// needs; arbitrary coefficient callbacks are accepted too.
class RationalSeries {
  public:
    explicit RationalSeries(std::function<Rational(int)> coeff, std::string name = "custom")
        : coeff_(std::move(coeff)), name_(std::move(name)) {}

    Rational coefficient(int m) const { return coeff_(m); }
    const std::string& name() const { return name_; }

    // (1+t)^p for rational p: c_m = p(p-1)...(p-m+1)/m!
    // Lambdas must declare the Rational return type: a deduced return would be
    // the gmpxx expression template, whose operand temporaries die before the
    // std::function wrapper converts it to a value.
    static RationalSeries binomial(const Rational& p, const std::string& name) {
        return RationalSeries(
            [p](int m) -> Rational {
                Rational c(1);
                for (int i = 0; i < m; ++i) {
                    c *= (p - i);
                    c /= (i + 1);
                }
                return c;
            },
            name);
    }
    static RationalSeries sqrt_one_plus() { return binomial(make_rational(1, 2), "sqrt(1+t)"); }
    static RationalSeries inv_one_plus() { return binomial(make_rational(-1), "(1+t)^-1"); }
    static RationalSeries inv_sqrt_one_plus() { return binomial(make_rational(-1, 2), "(1+t)^-1/2"); }
    static RationalSeries exp() {
        return RationalSeries(
            [](int m) -> Rational { return Rational(1) / factorial_rational(static_cast<unsigned>(m)); },
            "exp(t)");
    }

  private:
    std::function<Rational(int)> coeff_;
    std::string name_;
};

namespace detail {
template <class C>
Element<C> series_unit(const Element<C>& u) {
    return u.kind() == PayloadKind::Operator ? Element<C>::identity_operator(u.degree(), u.generators())
                                             : Element<C>::one(u.degree(), u.generators());
}

template <class C>
void require_no_constant_term(const Element<C>& u, const char* what) {
    if (u.find(Monomial::one(u.generators())) != nullptr)
        throw std::invalid_argument(std::string(what) + ": argument has a nonzero constant term");
}
}  // namespace detail

// Evaluates sum_m c_m u^m.  u must carry no constant term, so every monomial
// in u has degree >= 1 and u^m dies once m exceeds the total degree budget
// 2 n g; the loop stops at the first vanishing power.
template <class C>
Element<C> series_apply(const RationalSeries& series, const Element<C>& u) {
    if (u.kind() != PayloadKind::Scalar && u.kind() != PayloadKind::Operator)
        throw std::invalid_argument("series argument must be scalar- or operator-valued");
    detail::require_no_constant_term(u, "series_apply");

    const int bound = 2 * u.degree() * u.generators();
    Element<C> result = scalar_traits<C>::from_rational(series.coefficient(0)) * detail::series_unit(u);
    Element<C> power = detail::series_unit(u);
    for (int m = 1; m <= bound; ++m) {
        power = power * u;
        if (power.is_zero()) return result;
        result = result + scalar_traits<C>::from_rational(series.coefficient(m)) * power;
    }
    if (!(power * u).is_zero())
        throw std::domain_error("series_apply: argument is not nilpotent within the degree bound");
    return result;  // u^bound was the last nonvanishing power
}

// exp(x) for a nilpotent x (every term of generator degree >= 1).  With a
// single generator pair the expansion provably terminates by order 2n+1.
template <class C>
Element<C> exp_nilpotent(const Element<C>& x) {
    detail::require_no_constant_term(x, "exp_nilpotent");
    return series_apply(RationalSeries::exp(), x);
}

}  // namespace paragrass
