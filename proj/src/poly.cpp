#include "mcf/poly.hpp"

#include <sstream>

namespace mcf {

const Rational& PolyQ::leading() const {
    if (c_.empty()) throw InternalCheckFailure("zero polynomial has no leading coefficient");
    return c_.back();
}

Rational PolyQ::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

PolyQ PolyQ::operator-() const {
    std::vector<Rational> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return PolyQ(std::move(r));
}

PolyQ operator+(const PolyQ& a, const PolyQ& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return PolyQ(std::move(r));
}

PolyQ operator-(const PolyQ& a, const PolyQ& b) { return a + (-b); }

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return PolyQ();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return PolyQ(std::move(r));
}

PolyQ operator*(const Rational& s, const PolyQ& a) {
    std::vector<Rational> r(a.c_.size());
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] = s * a.c_[i];
    return PolyQ(std::move(r));
}

PolyQ PolyQ::derivative() const {
    if (c_.size() <= 1) return PolyQ();
    std::vector<Rational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return PolyQ(std::move(r));
}

PolyQ PolyQ::monic() const {
    if (is_zero()) throw InternalCheckFailure("cannot normalize the zero polynomial");
    return (1 / leading()) * *this;
}

std::pair<PolyQ, PolyQ> PolyQ::divmod(const PolyQ& divisor) const {
    if (divisor.is_zero()) throw InternalCheckFailure("polynomial division by zero");
    std::vector<Rational> rem = c_;
    std::vector<Rational> quot;
    int dd = divisor.degree();
    if (degree() >= dd) quot.assign(static_cast<size_t>(degree() - dd) + 1, Rational(0));
    for (int i = degree(); i >= dd; --i) {
        Rational q = rem[static_cast<size_t>(i)] / divisor.leading();
        if (q != 0) {
            quot[static_cast<size_t>(i - dd)] = q;
            for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(i - dd + j)] -= q * divisor.coeff(j);
        }
    }
    return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

PolyQ PolyQ::stretch(const Rational& s) const {
    std::vector<Rational> r(c_.size());
    Rational pw(1);
    for (size_t i = 0; i < c_.size(); ++i) {
        r[i] = c_[i] * pw;
        pw *= s;
    }
    return PolyQ(std::move(r));
}

std::pair<PolyQ, Rational> PolyQ::primitive_integral() const {
    if (is_zero()) return {PolyQ(), Rational(1)};
    Integer den_lcm(1);
    for (const auto& q : c_) {
        Integer d = q.get_den();
        Integer g = gcd(den_lcm, d);
        den_lcm = den_lcm / g * d;
    }
    std::vector<Rational> scaled(c_.size());
    Integer content(0);
    for (size_t i = 0; i < c_.size(); ++i) {
        scaled[i] = c_[i] * Rational(den_lcm);
        scaled[i].canonicalize();
        content = gcd(content, scaled[i].get_num());
    }
    if (content == 0) content = 1;
    for (auto& q : scaled) {
        q /= Rational(content);
        q.canonicalize();
    }
    PolyQ g(std::move(scaled));
    Rational c = Rational(content) / Rational(den_lcm);
    c.canonicalize();
    return {g, c};
}

std::string PolyQ::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational a = coeff(i);
        if (a == 0) continue;
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        Rational mag = abs(a);
        bool unit = (mag == 1);
        if (i == 0 || !unit) os << mag.get_str();
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}  // namespace mcf
