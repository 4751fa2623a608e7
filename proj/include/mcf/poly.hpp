#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "mcf/rational.hpp"

namespace mcf {

// Dense univariate polynomial over Q, coefficients ascending by degree.
// The zero polynomial has an empty coefficient vector and degree -1.
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    PolyQ(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static PolyQ constant(const Rational& a) { return PolyQ({a}); }
    static PolyQ identity_x() { return PolyQ({Rational(0), Rational(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int i) const {
        return (i < 0 || i >= static_cast<int>(c_.size())) ? Rational(0) : c_[i];
    }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Rational operator()(const Rational& x) const;

    PolyQ operator-() const;
    friend PolyQ operator+(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator-(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator*(const Rational& s, const PolyQ& a);
    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PolyQ& a, const PolyQ& b) { return !(a == b); }

    PolyQ derivative() const;
    PolyQ monic() const;

    // Quotient and remainder with deg(rem) < deg(divisor); divisor nonzero.
    std::pair<PolyQ, PolyQ> divmod(const PolyQ& divisor) const;

    // f(s*X), exact.
    PolyQ stretch(const Rational& s) const;

    // Clears denominators and content: returns (g, c) with g primitive
    // integral, g = c^{-1} * this ... i.e. this = c * g, c in Q, c > 0 sign
    // convention on the leading coefficient preserved.
    std::pair<PolyQ, Rational> primitive_integral() const;

    std::string str(const std::string& var = "X") const;

private:
    std::vector<Rational> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

}  // namespace mcf
