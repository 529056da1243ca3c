#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace paragrass {

// A normal-ordered word in the generators: the unstarred block first, then
// the starred block, each in ascending generator index.  Only exponents are
// stored; the ordering convention is fixed once and for all, so a monomial
// is just the exponent table.
class Monomial {
  public:
    explicit Monomial(int generators = 1)
        : unstarred_(static_cast<size_t>(generators), 0), starred_(static_cast<size_t>(generators), 0) {}

    static Monomial one(int generators) { return Monomial(generators); }
    static Monomial power(int generators, int gen, bool starred, int exponent) {
        Monomial m(generators);
        if (gen < 0 || gen >= generators) throw std::invalid_argument("generator index out of range");
        if (exponent < 0) throw std::invalid_argument("negative exponent");
        (starred ? m.starred_ : m.unstarred_)[static_cast<size_t>(gen)] = exponent;
        return m;
    }

    int generators() const { return static_cast<int>(unstarred_.size()); }
    int unstarred(int g) const { return unstarred_[static_cast<size_t>(g)]; }
    int starred(int g) const { return starred_[static_cast<size_t>(g)]; }

    int unstarred_degree() const { return std::accumulate(unstarred_.begin(), unstarred_.end(), 0); }
    int starred_degree() const { return std::accumulate(starred_.begin(), starred_.end(), 0); }
    int total_degree() const { return unstarred_degree() + starred_degree(); }
    bool is_one() const { return total_degree() == 0; }

    // Exponent-wise sum; exceeding the nilpotency bound is the caller's check.
    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m = a;
        for (size_t g = 0; g < m.unstarred_.size(); ++g) {
            m.unstarred_[g] += b.unstarred_[g];
            m.starred_[g] += b.starred_[g];
        }
        return m;
    }

    bool within_degree(int n) const {
        for (int e : unstarred_)
            if (e > n) return false;
        for (int e : starred_)
            if (e > n) return false;
        return true;
    }

    // The adjoint reverses the word and swaps star types; on normal-ordered
    // exponent tables that is exactly an unstarred/starred swap (re-sorting
    // within each block is sign-free since same-type generators commute).
    Monomial adjoint() const {
        Monomial m = *this;
        m.unstarred_.swap(m.starred_);
        return m;
    }

    auto operator<=>(const Monomial&) const = default;

    std::string to_string() const {
        std::string s;
        bool multi = generators() > 1;
        auto emit = [&](int g, bool star, int e) {
            if (e == 0) return;
            if (!s.empty()) s += " ";
            s += "z";
            if (multi) s += std::to_string(g);
            if (star) s += "*";
            if (e > 1) s += "^" + std::to_string(e);
        };
        for (int g = 0; g < generators(); ++g) emit(g, false, unstarred(g));
        for (int g = 0; g < generators(); ++g) emit(g, true, starred(g));
        return s.empty() ? "1" : s;
    }

  private:
    std::vector<int> unstarred_;
    std::vector<int> starred_;
};

}  // namespace paragrass
