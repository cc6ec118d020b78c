#include "metallic/linalg.hpp"

#include "metallic/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace metallic {

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = k == 0 ? 0 : b[0].size();
    for (const auto& row : a)
        if (row.size() != k) throw AlignmentError("matrix product with mismatched dimensions");
    IntMatrix c(n, std::vector<std::int64_t>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            const std::int64_t x = a[i][l];
            if (x == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += x * b[l][j];
        }
    return c;
}

IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

std::optional<int> primitivity_exponent(const IntMatrix& m, int max_power) {
    if (max_power < 1) throw DomainError("max_power must be at least 1");
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw DomainError("primitivity needs a square matrix");
    using Bool = std::vector<std::vector<char>>;
    Bool base(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) base[i][j] = m[i][j] > 0;
    Bool p = base;
    for (int e = 1; e <= max_power; ++e) {
        bool positive = true;
        for (const auto& row : p)
            for (char x : row) positive = positive && x;
        if (positive) return e;
        Bool next(n, std::vector<char>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l)
                if (p[i][l])
                    for (std::size_t j = 0; j < n; ++j) next[i][j] |= base[l][j];
        p = std::move(next);
    }
    return std::nullopt;
}

std::optional<int> primitivity_exponent(const Substitution2D& s, int max_power) {
    return primitivity_exponent(incidence(s), max_power);
}

PerronResult perron_eigenvalue(const IntMatrix& m, double tol, int max_iterations) {
    const std::size_t n = m.size();
    if (n == 0) throw DomainError("empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw DomainError("Perron eigenvalue needs a square matrix");
    std::vector<double> v(n, 1.0 / static_cast<double>(n)), w(n);
    double previous = std::nan("");
    for (int it = 1; it <= max_iterations; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0;
            for (std::size_t j = 0; j < n; ++j) acc += static_cast<double>(m[i][j]) * v[j];
            w[i] = acc;
        }
        double vw = 0, vv = 0, sum = 0;
        for (std::size_t i = 0; i < n; ++i) {
            vw += v[i] * w[i];
            vv += v[i] * v[i];
            sum += w[i];
        }
        if (sum <= 0) throw ResourceError("power iteration collapsed to zero; matrix is not primitive");
        const double lambda = vw / vv;
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / sum;
        if (it > 1 && std::abs(lambda - previous) < tol) return PerronResult{lambda, v, it};
        previous = lambda;
    }
    throw ResourceError("power iteration did not converge within " + std::to_string(max_iterations) + " steps");
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::from_ints(const std::vector<long long>& coeffs) {
    std::vector<mpz_class> c;
    for (long long x : coeffs) c.emplace_back(static_cast<long>(x));
    return IntPoly(std::move(c));
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (c_.empty() || o.c_.empty()) return IntPoly();
    std::vector<mpz_class> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

bool IntPoly::operator<(const IntPoly& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (std::size_t i = c_.size(); i-- > 0;)
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& d) const {
    if (d.c_.empty() || d.c_.back() != 1) throw DomainError("divisor must be monic");
    if (c_.size() < d.c_.size()) {
        if (c_.empty()) return IntPoly();
        return std::nullopt;
    }
    std::vector<mpz_class> rem = c_;
    std::vector<mpz_class> q(c_.size() - d.c_.size() + 1, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
        const mpz_class lead = rem[k + d.c_.size() - 1];
        q[k] = lead;
        if (lead == 0) continue;
        for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= lead * d.c_[j];
    }
    for (const auto& x : rem)
        if (x != 0) return std::nullopt;
    return IntPoly(std::move(q));
}

mpz_class IntPoly::evaluate(const mpz_class& x) const {
    mpz_class acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::string IntPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const mpz_class& a = c_[i];
        if (a == 0) continue;
        mpz_class mag = abs(a);
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << "x";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

IntPoly char_poly(const IntMatrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw DomainError("characteristic polynomial needs a square matrix");
    auto at = [&](std::size_t i, std::size_t j) { return mpz_class(static_cast<long>(m[i][j])); };
    // p holds coefficients of det(xI - A_r), highest power first.
    std::vector<mpz_class> p{1};
    for (std::size_t r = 0; r < n; ++r) {
        // Toeplitz column: 1, -a_rr, -R C, -R A C, -R A^2 C, ...
        std::vector<mpz_class> q(r + 2);
        q[0] = 1;
        q[1] = -at(r, r);
        std::vector<mpz_class> col(r);
        for (std::size_t i = 0; i < r; ++i) col[i] = at(i, r);
        for (std::size_t k = 2; k < r + 2; ++k) {
            mpz_class dot = 0;
            for (std::size_t j = 0; j < r; ++j) dot += at(r, j) * col[j];
            q[k] = -dot;
            std::vector<mpz_class> next(r, 0);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) next[i] += at(i, j) * col[j];
            col = std::move(next);
        }
        std::vector<mpz_class> np(r + 2, 0);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j) np[i] += q[i - j] * p[j];
        p = std::move(np);
    }
    std::reverse(p.begin(), p.end());
    return IntPoly(std::move(p));
}

std::vector<std::vector<mpz_class>> evaluate_at_matrix(const IntPoly& p, const IntMatrix& m) {
    const std::size_t n = m.size();
    using Big = std::vector<std::vector<mpz_class>>;
    Big acc(n, std::vector<mpz_class>(n, 0));
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        Big next(n, std::vector<mpz_class>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                if (acc[i][l] == 0) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (m[l][j] != 0) next[i][j] += acc[i][l] * static_cast<long>(m[l][j]);
            }
        for (std::size_t i = 0; i < n; ++i) next[i][i] += p[k];
        acc = std::move(next);
    }
    return acc;
}

namespace {

// Cauchy bound on the absolute value of the roots of a monic polynomial.
mpz_class root_bound(const IntPoly& p) {
    mpz_class best = 0;
    for (int i = 0; i < p.degree(); ++i) best = std::max<mpz_class>(best, abs(p[i]));
    return best + 1;
}

std::vector<mpz_class> divisors_up_to(const mpz_class& value, const mpz_class& limit) {
    std::vector<mpz_class> out;
    const mpz_class v = abs(value);
    const mpz_class top = std::min(v, limit);
    constexpr long kScanCap = 10'000'000;
    if (top > kScanCap) throw ResourceError("constant term too large for trial division");
    for (mpz_class d = 1; d <= top; ++d)
        if (v % d == 0) out.push_back(d);
    return out;
}

} // namespace

Factorization factor_small(const IntPoly& p) {
    if (p.is_zero() || p[p.degree()] != 1) throw DomainError("factor_small needs a monic polynomial");
    Factorization f;
    IntPoly rest = p;
    auto strip = [&](const IntPoly& d) {
        int mult = 0;
        while (rest.degree() >= d.degree()) {
            auto q = rest.divide_exact(d);
            if (!q) break;
            rest = *q;
            ++mult;
        }
        if (mult > 0) f.factors.emplace_back(d, mult);
    };
    strip(IntPoly::from_ints({0, 1}));
    if (rest.degree() >= 1) {
        const mpz_class bound = root_bound(rest);
        for (const auto& d : divisors_up_to(rest[0], bound)) {
            strip(IntPoly(std::vector<mpz_class>{-d, 1}));
            strip(IntPoly(std::vector<mpz_class>{d, 1}));
        }
    }
    if (rest.degree() >= 2) {
        // Roots of a quadratic factor are roots of rest, so |c| <= B^2 and
        // |b| <= 2B.
        const mpz_class bound = root_bound(rest);
        const mpz_class bb = 2 * bound;
        for (const auto& c : divisors_up_to(rest[0], bound * bound))
            for (int sign : {1, -1})
                for (mpz_class b = -bb; b <= bb; ++b) {
                    if (rest.degree() < 2) break;
                    const mpz_class cc = c * sign;
                    const mpz_class disc = b * b - 4 * cc;
                    if (disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t())) continue;
                    strip(IntPoly(std::vector<mpz_class>{cc, b, 1}));
                }
    }
    std::sort(f.factors.begin(), f.factors.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    f.rest = rest;
    return f;
}

std::string Factorization::str() const {
    std::string s;
    for (const auto& [poly, mult] : factors) {
        if (!s.empty()) s += " * ";
        const bool bare = poly.degree() == 1 && poly[0] == 0;
        s += bare ? "x" : "(" + poly.str() + ")";
        if (mult > 1) s += "^" + std::to_string(mult);
    }
    if (rest.degree() > 0) {
        if (!s.empty()) s += " * ";
        s += "(" + rest.str() + ")";
    }
    return s.empty() ? "1" : s;
}

} // namespace metallic
