#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "mcf/rational.hpp"

namespace mcf {

// An odd prime p >= 3. The balanced digit set (-p/2, p/2) contains exactly
// p integers only when p is odd, so p = 2 is rejected with a dedicated error.
class Prime {
public:
    explicit Prime(std::int64_t p);
    std::int64_t value() const { return p_; }
    Integer as_integer() const { return Integer(static_cast<long>(p_)); }
    friend bool operator==(const Prime& a, const Prime& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Prime& a, const Prime& b) { return a.p_ != b.p_; }

private:
    std::int64_t p_;
};

// p-adic valuation; v_p(0) = +infinity.
struct Valuation {
    long v = 0;
    bool infinite = false;

    static Valuation of(long value) { return Valuation{value, false}; }
    static Valuation infinity() { return Valuation{0, true}; }

    bool is_infinite() const { return infinite; }
    long finite() const {
        if (infinite) throw InternalCheckFailure("valuation is infinite");
        return v;
    }
    // Total order with +infinity greatest.
    friend bool operator<(const Valuation& a, const Valuation& b) {
        if (a.infinite) return false;
        if (b.infinite) return true;
        return a.v < b.v;
    }
    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.infinite == b.infinite && (a.infinite || a.v == b.v);
    }
    friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }
    friend bool operator<=(const Valuation& a, const Valuation& b) { return a < b || a == b; }
    friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
    friend bool operator>=(const Valuation& a, const Valuation& b) { return b <= a; }
};

// v with r = p^v * (unit); +infinity iff r = 0.
Valuation padic_valuation(const Rational& r, const Prime& p);

// |r|_p = p^{-v_p(r)} as an exact rational; 0 for r = 0.
Rational padic_norm(const Rational& r, const Prime& p);

// Element of Y = Z[1/p] ∩ (-p/2, p/2), the partial-quotient set.
// Invariants: denominator a power of p, |value| < p/2 strictly.
class YElement {
public:
    YElement() : value_(0) {}
    static YElement checked(const Rational& value, const Prime& p);
    const Rational& value() const { return value_; }
    bool is_zero() const { return value_ == 0; }
    friend bool operator==(const YElement& a, const YElement& b) { return a.value_ == b.value_; }
    friend bool operator!=(const YElement& a, const YElement& b) { return !(a == b); }

private:
    explicit YElement(Rational v) : value_(std::move(v)) {}
    Rational value_;
    friend YElement s_function(const Rational&, const Prime&);
};

bool is_y_element(const Rational& r, const Prime& p);

// Truncated balanced digit expansion: value = sum_{j=v}^{precision-1} x_j p^j
// known modulo p^precision, digits x_j in (-p/2, p/2). Zero is the empty
// digit list (valuation conventionally set to the precision).
struct PadicApprox {
    long valuation = 0;
    std::vector<std::int64_t> digits;  // index j = valuation ... precision-1
    long precision = 0;
    std::int64_t p = 0;

    bool is_zero() const { return digits.empty(); }
    Rational value() const;

    static PadicApprox zero(const Prime& p, long precision);
    static PadicApprox single_digit(const Prime& p, std::int64_t digit, long index, long precision);
};

// Unique balanced expansion of r to absolute precision `precision`
// (value congruent to r mod p^precision). Requires precision > v_p(r) for
// nonzero r.
PadicApprox balanced_digits(const Rational& r, const Prime& p, long precision);

// Browkin s-function: the truncation of the balanced expansion at index 0,
// an exact element of Y. Satisfies v_p(r - s(r)) >= 1, and s(y) = y for
// y in Y. Computed exactly in Z[1/p]; no digit truncation error.
YElement s_function(const Rational& r, const Prime& p);

// s-function on a truncated expansion; requires precision >= 1 so the
// digits through index 0 are determined.
YElement s_function(const PadicApprox& a);

}  // namespace mcf
