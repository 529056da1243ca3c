#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "paragrass/rational.hpp"

namespace paragrass {

using Complex64 = std::complex<double>;

// Absolute tolerance used by the float backend when deciding whether a
// coefficient is zero (canonical-form pruning and equality tests).
inline double& float_tolerance() {
    static double tol = 1e-10;
    return tol;
}

// Nilpotency degree caps.  Exact arithmetic is the default backend and stays
// practical to n = 12; the float backend is allowed a little more headroom.
// Both are mutable so callers with patience can raise them.
inline int& max_degree_exact() {
    static int cap = 12;
    return cap;
}
inline int& max_degree_float() {
    static int cap = 16;
    return cap;
}

template <class C>
struct scalar_traits;

template <>
struct scalar_traits<GaussianRational> {
    static constexpr bool is_exact = true;
    static GaussianRational zero() { return GaussianRational(0); }
    static GaussianRational one() { return GaussianRational(1); }
    static GaussianRational i() { return GaussianRational::i(); }
    static GaussianRational from_rational(const Rational& q) { return GaussianRational(q); }
    static GaussianRational conj(const GaussianRational& z) { return z.conj(); }
    static bool is_zero(const GaussianRational& z) { return z.is_zero(); }
    static int degree_cap() { return max_degree_exact(); }
    static std::string name() { return "exact"; }
    static std::string to_string(const GaussianRational& z) { return paragrass::to_string(z); }
};

template <>
struct scalar_traits<Complex64> {
    static constexpr bool is_exact = false;
    static Complex64 zero() { return {0.0, 0.0}; }
    static Complex64 one() { return {1.0, 0.0}; }
    static Complex64 i() { return {0.0, 1.0}; }
    static Complex64 from_rational(const Rational& q) { return {q.get_d(), 0.0}; }
    static Complex64 conj(const Complex64& z) { return std::conj(z); }
    static bool is_zero(const Complex64& z) {
        return std::abs(z.real()) < float_tolerance() && std::abs(z.imag()) < float_tolerance();
    }
    static int degree_cap() { return max_degree_float(); }
    static std::string name() { return "float64"; }
    static std::string to_string(const Complex64& z) {
        return "(" + std::to_string(z.real()) + "," + std::to_string(z.imag()) + ")";
    }
};

// Rejects nilpotency orders outside the configured cap for backend C.
template <class C>
void check_degree(int n) {
    if (n < 1) throw std::invalid_argument("nilpotency degree n must be >= 1");
    int cap = scalar_traits<C>::degree_cap();
    if (n > cap)
        throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the " +
                                    scalar_traits<C>::name() + " backend cap of " + std::to_string(cap));
}

}  // namespace paragrass
