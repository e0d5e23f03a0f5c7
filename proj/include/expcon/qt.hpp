#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "expcon/errors.hpp"

namespace expcon {

class QTFraction;

/// Exact Laurent polynomial in q and t with rational coefficients.
/// Terms are kept in canonical form: no zero coefficient is ever stored.
class QTLaurent {
  public:
    using Exponents = std::pair<int, int>; // (q-exponent, t-exponent)
    using TermMap = std::map<Exponents, mpq_class>;

    QTLaurent() = default;
    explicit QTLaurent(const mpq_class& c);
    QTLaurent(long num, long den);

    static QTLaurent zero() { return QTLaurent(); }
    static QTLaurent one() { return QTLaurent(mpq_class(1)); }
    static QTLaurent q(int e = 1);
    static QTLaurent t(int e = 1);
    static QTLaurent monomial(const mpq_class& c, int eq, int et);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }

    const TermMap& terms() const { return terms_; }
    mpq_class coeff(int eq, int et) const;
    void add_term(int eq, int et, const mpq_class& c);

    QTLaurent operator-() const;
    QTLaurent& operator+=(const QTLaurent& o);
    QTLaurent& operator-=(const QTLaurent& o);
    friend QTLaurent operator+(QTLaurent a, const QTLaurent& b) { return a += b; }
    friend QTLaurent operator-(QTLaurent a, const QTLaurent& b) { return a -= b; }
    friend QTLaurent operator*(const QTLaurent& a, const QTLaurent& b);
    QTLaurent& operator*=(const QTLaurent& o) { return *this = *this * o; }
    QTLaurent& scale(const mpq_class& c);
    QTLaurent pow(unsigned k) const;

    friend bool operator==(const QTLaurent& a, const QTLaurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const QTLaurent& a, const QTLaurent& b) { return !(a == b); }

    /// Lowest exponents over all terms; (0,0) for the zero polynomial.
    Exponents min_exponents() const;
    Exponents max_exponents() const;
    /// Multiply by q^dq * t^dt.
    QTLaurent shifted(int dq, int dt) const;
    /// q -> q^kq, t -> t^kt on exponents (kq, kt >= 1).
    QTLaurent exponent_scaled(int kq, int kt) const;

    /// Numeric evaluation; q0 = 0 (or t0 = 0) with a negative exponent throws ZeroDenominator.
    mpq_class eval(const mpq_class& q0, const mpq_class& t0) const;

    std::string to_string() const;
    static QTLaurent parse(const std::string& s);

  private:
    TermMap terms_;
};

/// f with h*g == f, or NotDivisible.
QTLaurent exact_div(const QTLaurent& f, const QTLaurent& g);
/// gcd of the polynomial parts (monomial factors stripped first); result has
/// nonnegative exponents, integer-primitive coefficients, positive leading term.
QTLaurent poly_gcd(const QTLaurent& a, const QTLaurent& b);

QTLaurent substitute_poly(const QTLaurent& f, const QTLaurent& q_image, const QTLaurent& t_image);
QTFraction substitute(const QTLaurent& f, const QTFraction& q_image, const QTFraction& t_image);

/// [k] = 1 + q + ... + q^{k-1}
QTLaurent q_integer(int k);
/// [k]! = [k][k-1]...[1]
QTLaurent q_factorial(int k);
/// [pi]! = [pi_1]! ... [pi_l]!
QTLaurent pi_factorial(const std::vector<int>& pi);

/// Quotient num/den of Laurent polynomials. The representation is normalized
/// by clearing common monomial factors and rational content and, when the
/// denominator is not a monomial, by dividing out the polynomial gcd.
/// Equality is cross-multiplication, so callers may rely on == regardless.
class QTFraction {
  public:
    QTFraction() : num_(), den_(QTLaurent::one()) {}
    QTFraction(const QTLaurent& n) : num_(n), den_(QTLaurent::one()) { normalize(); }
    QTFraction(const mpq_class& c) : num_(QTLaurent(c)), den_(QTLaurent::one()) {}
    QTFraction(long v) : QTFraction(mpq_class(v)) {}
    QTFraction(const QTLaurent& n, const QTLaurent& d);

    static QTFraction zero() { return QTFraction(); }
    static QTFraction one() { return QTFraction(QTLaurent::one()); }

    const QTLaurent& num() const { return num_; }
    const QTLaurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    QTFraction operator-() const;
    friend QTFraction operator+(const QTFraction& a, const QTFraction& b);
    friend QTFraction operator-(const QTFraction& a, const QTFraction& b);
    friend QTFraction operator*(const QTFraction& a, const QTFraction& b);
    friend QTFraction operator/(const QTFraction& a, const QTFraction& b);
    QTFraction& operator+=(const QTFraction& o) { return *this = *this + o; }
    QTFraction& operator-=(const QTFraction& o) { return *this = *this - o; }
    QTFraction& operator*=(const QTFraction& o) { return *this = *this * o; }
    QTFraction& operator/=(const QTFraction& o) { return *this = *this / o; }
    QTFraction inverse() const;
    QTFraction pow(int k) const;

    friend bool operator==(const QTFraction& a, const QTFraction& b);
    friend bool operator!=(const QTFraction& a, const QTFraction& b) { return !(a == b); }

    /// The fraction as a Laurent polynomial; NotDivisible if the denominator
    /// does not divide the numerator.
    QTLaurent as_polynomial() const;
    bool is_polynomial() const;

    mpq_class eval(const mpq_class& q0, const mpq_class& t0) const;

    std::string to_string() const;
    static QTFraction parse(const std::string& s);

  private:
    void normalize();
    QTLaurent num_, den_;
};

QTFraction substitute(const QTFraction& f, const QTFraction& q_image, const QTFraction& t_image);

} // namespace expcon
