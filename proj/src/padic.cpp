#include "mcf/padic.hpp"

namespace mcf {

Prime::Prime(std::int64_t p) : p_(p) {
    if (p == 2) throw InvalidInput("p = 2 is not supported: the balanced digit set needs an odd prime");
    if (p < 3 || p % 2 == 0) throw InvalidInput("p must be an odd prime >= 3");
    Integer z(static_cast<long>(p));
    if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
        throw InvalidInput("p = " + std::to_string(p) + " is not prime");
}

Valuation padic_valuation(const Rational& r, const Prime& p) {
    if (r == 0) return Valuation::infinity();
    Integer pz = p.as_integer();
    Integer tmp;
    unsigned long vnum = mpz_remove(tmp.get_mpz_t(), r.get_num().get_mpz_t(), pz.get_mpz_t());
    if (vnum > 0) return Valuation::of(static_cast<long>(vnum));
    unsigned long vden = mpz_remove(tmp.get_mpz_t(), r.get_den().get_mpz_t(), pz.get_mpz_t());
    return Valuation::of(-static_cast<long>(vden));
}

Rational padic_norm(const Rational& r, const Prime& p) {
    if (r == 0) return Rational(0);
    return pow_rational(Rational(p.as_integer()), -padic_valuation(r, p).finite());
}

YElement YElement::checked(const Rational& value, const Prime& p) {
    if (!is_y_element(value, p))
        throw InvalidInput("value " + rational_string(value) + " is not in Z[1/p] ∩ (-p/2, p/2) for p = " +
                           std::to_string(p.value()));
    return YElement(value);
}

bool is_y_element(const Rational& r, const Prime& p) {
    Integer den = r.get_den();
    Integer pz = p.as_integer();
    while (den != 1) {
        if (!mpz_divisible_p(den.get_mpz_t(), pz.get_mpz_t())) return false;
        den /= pz;
    }
    // |num/den| < p/2  <=>  2|num| < p*den
    return 2 * abs(r.get_num()) < pz * r.get_den();
}

Rational PadicApprox::value() const {
    Rational pw = pow_rational(Rational(static_cast<long>(p)), valuation);
    Rational pr(static_cast<long>(p));
    Rational acc(0);
    Rational scale = pw;
    for (std::int64_t d : digits) {
        acc += Rational(static_cast<long>(d)) * scale;
        scale *= pr;
    }
    return acc;
}

PadicApprox PadicApprox::zero(const Prime& p, long precision) {
    return PadicApprox{precision, {}, precision, p.value()};
}

PadicApprox PadicApprox::single_digit(const Prime& p, std::int64_t digit, long index, long precision) {
    if (digit == 0) return zero(p, precision);
    return PadicApprox{index, {digit}, precision, p.value()};
}

namespace {

// Balanced residue of a p-integral rational, in (-p/2, p/2).
std::int64_t balanced_residue(const Rational& u, const Prime& p) {
    Integer pz = p.as_integer();
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), u.get_den().get_mpz_t(), pz.get_mpz_t()) == 0)
        throw InternalCheckFailure("denominator not invertible mod p");
    Integer t = (u.get_num() * inv) % pz;
    if (t < 0) t += pz;
    std::int64_t c = static_cast<std::int64_t>(t.get_si());
    if (2 * c > p.value() - 1) c -= p.value();
    return c;
}

}  // namespace

PadicApprox balanced_digits(const Rational& r, const Prime& p, long precision) {
    if (r == 0) return PadicApprox::zero(p, precision);
    long v = padic_valuation(r, p).finite();
    if (precision <= v)
        throw InvalidInput("requested precision " + std::to_string(precision) +
                           " does not exceed the valuation " + std::to_string(v));
    PadicApprox out;
    out.valuation = v;
    out.precision = precision;
    out.p = p.value();
    Rational u = r * pow_rational(Rational(p.as_integer()), -v);
    Rational pr(p.as_integer());
    for (long j = v; j < precision; ++j) {
        std::int64_t c = (u == 0) ? 0 : balanced_residue(u, p);
        out.digits.push_back(c);
        u = (u - Rational(static_cast<long>(c))) / pr;
    }
    while (!out.digits.empty() && out.digits.back() == 0) out.digits.pop_back();
    if (out.digits.empty()) throw InternalCheckFailure("nonzero value produced an empty expansion");
    return out;
}

YElement s_function(const Rational& r, const Prime& p) {
    if (r == 0) return YElement(Rational(0));
    long v = padic_valuation(r, p).finite();
    if (v >= 1) return YElement(Rational(0));
    Rational u = r * pow_rational(Rational(p.as_integer()), -v);
    Rational pr(p.as_integer());
    Rational acc(0);
    Rational scale = pow_rational(pr, v);
    for (long j = v; j <= 0; ++j) {
        std::int64_t c = (u == 0) ? 0 : balanced_residue(u, p);
        acc += Rational(static_cast<long>(c)) * scale;
        scale *= pr;
        u = (u - Rational(static_cast<long>(c))) / pr;
    }
    return YElement(acc);
}

YElement s_function(const PadicApprox& a) {
    Prime p(a.p);
    if (a.is_zero()) {
        if (a.precision < 1)
            throw InsufficientPrecision(1);
        return YElement::checked(Rational(0), p);
    }
    if (a.precision < 1) throw InsufficientPrecision(1);
    Rational acc(0);
    for (size_t i = 0; i < a.digits.size(); ++i) {
        long j = a.valuation + static_cast<long>(i);
        if (j > 0) break;
        acc += Rational(static_cast<long>(a.digits[i])) * pow_rational(Rational(a.p), j);
    }
    return YElement::checked(acc, p);
}

}  // namespace mcf
