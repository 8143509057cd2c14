#pragma once

#include "b2dunkl/rational.hpp"

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "json.hpp"

namespace b2dunkl {

/// x1^a x2^b.
struct Monomial {
    int a = 0;
    int b = 0;
    int degree() const { return a + b; }
    bool operator==(const Monomial&) const = default;
};

/// Graded lexicographic: lower total degree first, then higher power of x1.
struct GradedLex {
    bool operator()(const Monomial& l, const Monomial& r) const
    {
        if (l.degree() != r.degree())
            return l.degree() < r.degree();
        return l.a > r.a;
    }
};

/// Scalar polynomial in (x1, x2) with rational coefficients. Used as a
/// multiplier on VPoly and as the symbol of Dunkl-operator polynomials.
class ScalarPoly {
public:
    using Terms = std::map<Monomial, Rational, GradedLex>;

    ScalarPoly() = default;
    static ScalarPoly constant(const Rational& c);
    static ScalarPoly monomial(int a, int b, const Rational& c = 1);
    static ScalarPoly x1() { return monomial(1, 0); }
    static ScalarPoly x2() { return monomial(0, 1); }
    /// |x|^(2m) = (x1^2 + x2^2)^m.
    static ScalarPoly norm_sq_pow(int m);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Monomial& m, const Rational& c);

    ScalarPoly operator+(const ScalarPoly& o) const;
    ScalarPoly operator-(const ScalarPoly& o) const;
    ScalarPoly operator*(const ScalarPoly& o) const;
    ScalarPoly operator*(const Rational& c) const;
    bool operator==(const ScalarPoly& o) const { return terms_ == o.terms_; }

    Rational eval(const Rational& x1, const Rational& x2) const;
    double eval(double x1, double x2) const;

private:
    Terms terms_;
};

/// Coefficient pair of one monomial: c1 t1 + c2 t2.
struct Coeffs {
    Rational c1 = 0;
    Rational c2 = 0;
    bool is_zero() const { return c1 == 0 && c2 == 0; }
    bool operator==(const Coeffs&) const = default;
};

/// V-valued polynomial f1(x) t1 + f2(x) t2, stored sparsely with no zero
/// coefficient pairs.
class VPoly {
public:
    using Terms = std::map<Monomial, Coeffs, GradedLex>;

    VPoly() = default;
    static VPoly t1() { return term(0, 0, 1, 0); }
    static VPoly t2() { return term(0, 0, 0, 1); }
    static VPoly term(int a, int b, const Rational& c1, const Rational& c2);
    /// f1 t1 + f2 t2.
    static VPoly from_components(const ScalarPoly& f1, const ScalarPoly& f2);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Highest total degree, or nullopt for the zero polynomial.
    std::optional<int> degree() const;
    /// Homogeneous degree, or nullopt if zero or mixed.
    std::optional<int> homogeneous_degree() const;
    VPoly homogeneous_part(int d) const;

    ScalarPoly component(int i) const;

    void add_term(const Monomial& m, const Rational& c1, const Rational& c2);

    VPoly operator+(const VPoly& o) const;
    VPoly operator-(const VPoly& o) const;
    VPoly operator-() const;
    VPoly operator*(const Rational& c) const;
    VPoly& operator+=(const VPoly& o);
    VPoly& operator-=(const VPoly& o);
    VPoly mul_monomial(int a, int b) const;
    VPoly mul_scalar_poly(const ScalarPoly& p) const;

    bool operator==(const VPoly& o) const { return terms_ == o.terms_; }

    std::pair<Rational, Rational> eval(const Rational& x1, const Rational& x2) const;
    std::pair<double, double> eval(double x1, double x2) const;

    nlohmann::json to_json() const;
    static VPoly from_json(const nlohmann::json& j);
    std::string to_string() const;

private:
    Terms terms_;
};

inline VPoly operator*(const Rational& c, const VPoly& f) { return f * c; }

/// Complex number with exact rational parts.
struct ComplexQ {
    Rational re = 0;
    Rational im = 0;
    ComplexQ operator+(const ComplexQ& o) const { return {re + o.re, im + o.im}; }
    ComplexQ operator*(const ComplexQ& o) const
    {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    ComplexQ operator*(const Rational& c) const { return {re * c, im * c}; }
    bool operator==(const ComplexQ&) const = default;
};

/// (f1(x), f2(x)) at a complex point with rational real and imaginary parts.
std::pair<ComplexQ, ComplexQ> eval_complex(const VPoly& f, const ComplexQ& x1, const ComplexQ& x2);

} // namespace b2dunkl
