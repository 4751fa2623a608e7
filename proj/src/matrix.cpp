#include "mcf/matrix.hpp"

namespace mcf {

PolyQ charpoly_berkowitz(const MatQ& a) {
    if (a.rows() != a.cols()) throw InternalCheckFailure("characteristic polynomial of a non-square matrix");
    size_t n = a.rows();
    if (n == 0) return PolyQ({Rational(1)});
    // poly holds coefficients leading-first: X^r + poly[1] X^{r-1} + ...
    std::vector<Rational> poly = {Rational(1), -a.at(0, 0)};
    for (size_t r = 2; r <= n; ++r) {
        // Toeplitz column: [1, -A[r-1][r-1], -(R C), -(R M C), ..., -(R M^{r-2} C)]
        std::vector<Rational> t;
        t.reserve(r + 1);
        t.push_back(Rational(1));
        t.push_back(-a.at(r - 1, r - 1));
        std::vector<Rational> v(r - 1);
        for (size_t i = 0; i < r - 1; ++i) v[i] = a.at(i, r - 1);
        for (size_t k = 2; k <= r; ++k) {
            Rational dot(0);
            for (size_t i = 0; i < r - 1; ++i) dot += a.at(r - 1, i) * v[i];
            t.push_back(-dot);
            if (k == r) break;
            std::vector<Rational> w(r - 1, Rational(0));
            for (size_t i = 0; i < r - 1; ++i)
                for (size_t j = 0; j < r - 1; ++j) w[i] += a.at(i, j) * v[j];
            v.swap(w);
        }
        std::vector<Rational> next(r + 1, Rational(0));
        for (size_t i = 0; i <= r; ++i)
            for (size_t j = 0; j < r && j <= i; ++j) next[i] += t[i - j] * poly[j];
        poly.swap(next);
    }
    // Convert leading-first to ascending order.
    std::vector<Rational> asc(poly.rbegin(), poly.rend());
    return PolyQ(std::move(asc));
}

}  // namespace mcf
