#include "paragrass/rational.hpp"

#include <stdexcept>

namespace paragrass {

Rational factorial_rational(unsigned m) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), m);
    return Rational(f);
}

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (num.empty() || den.empty()) return std::nullopt;
    }
    auto valid = [](const std::string& s) {
        size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) return false;
        for (size_t i = start; i < s.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    if (!valid(num) || !valid(den)) return std::nullopt;
    mpz_class n(num), d(den);
    if (d == 0) return std::nullopt;
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const GaussianRational& z) {
    if (z.im == 0) return rational_to_string(z.re);
    std::string s = rational_to_string(z.re);
    s += (z.im > 0) ? "+" : "-";
    Rational a = abs(z.im);
    if (a != 1) s += rational_to_string(a) + "*";
    s += "i";
    return s;
}

}  // namespace paragrass
