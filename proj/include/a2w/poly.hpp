#pragma once

#include "a2w/rat.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace a2w {

// Dense univariate polynomial over Q, coefficients lowest degree first.
// Canonical form: no trailing zero coefficient; the zero polynomial is the
// empty list. Degrees in this library never exceed ~4.
class Poly {
public:
    Poly() = default;
    Poly(const Rat& constant);  // NOLINT(google-explicit-constructor)
    Poly(long long constant) : Poly(Rat(constant)) {}
    explicit Poly(std::vector<Rat> coeffs);
    Poly(std::initializer_list<Rat> coeffs);

    static Poly variable();  // the monomial z

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    // Coefficient of z^k; zero beyond the stored degree.
    const Rat& coeff(int k) const;
    Rat constant_term() const { return coeff(0); }
    Rat leading() const;

    Rat eval(const Rat& x) const;
    Poly derivative() const;
    // Substitute another polynomial for the variable (used for z -> 1-z).
    Poly compose(const Poly& inner) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& s, const Poly& p);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    // Exact division by a nonzero rational.
    Poly divided_by(const Rat& s) const;

    const std::vector<Rat>& coeffs() const { return c_; }
    std::string to_string(const std::string& var = "z") const;

private:
    void trim();
    std::vector<Rat> c_;
};

// The unique P with deg <= 2, P(0) = v0, P(1) = v1 and z^2-coefficient vlead:
// P(z) = vlead z^2 + (v1 - v0 - vlead) z + v0.
Poly interpolate_quadratic(const Rat& v0, const Rat& v1, const Rat& vlead);

}  // namespace a2w
