#pragma once

#include "metallic/substitution.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace metallic {

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix identity_matrix(std::size_t n);

// Least m <= max_power with every entry of M^m positive.
std::optional<int> primitivity_exponent(const IntMatrix& m, int max_power);
std::optional<int> primitivity_exponent(const Substitution2D& s, int max_power);

struct PerronResult {
    double eigenvalue = 0;
    std::vector<double> eigenvector; // nonnegative, entries sum to 1
    int iterations = 0;
};

// Power iteration from the all-ones vector until successive Rayleigh
// quotients differ by less than tol. Throws ResourceError when the cap is
// reached first (e.g. on a non-primitive matrix).
PerronResult perron_eigenvalue(const IntMatrix& m, double tol, int max_iterations = 100000);

// Dense integer polynomial, coefficient i multiplies x^i.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    static IntPoly from_ints(const std::vector<long long>& coeffs_low_first);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const mpz_class& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    IntPoly operator*(const IntPoly& o) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator<(const IntPoly& o) const;

    // Exact division by a monic divisor; nullopt when it does not divide.
    std::optional<IntPoly> divide_exact(const IntPoly& monic_divisor) const;

    mpz_class evaluate(const mpz_class& x) const;
    std::string str() const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

// det(xI - M), via the division-free Berkowitz recurrence.
IntPoly char_poly(const IntMatrix& m);

// p(M) computed exactly; used for Cayley-Hamilton checks.
std::vector<std::vector<mpz_class>> evaluate_at_matrix(const IntPoly& p, const IntMatrix& m);

struct Factorization {
    std::vector<std::pair<IntPoly, int>> factors; // monic, degree 1 or 2
    IntPoly rest;                                 // no factor of degree <= 2 left
    std::string str() const;
};

// Splits off all monic integer factors of degree 1 and 2 of a monic
// polynomial by trial division.
Factorization factor_small(const IntPoly& p);

} // namespace metallic
