#pragma once

// Exact arithmetic in Q[q] and Q(q).
//
// QPolynomial stores integer numerators over one positive common denominator
// (the layout FLINT uses for fmpq_poly): arithmetic runs on mpz values and the
// content is reduced once per operation instead of once per coefficient.
// The public surface speaks rationals.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qeuler {

class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(const mpq_class& c);
    explicit QPolynomial(long c) : QPolynomial(mpq_class(c)) {}

    static QPolynomial from_coefficients(const std::vector<mpq_class>& coeffs);
    static QPolynomial monomial(const mpq_class& c, std::size_t degree);
    // The indeterminate q.
    static QPolynomial q() { return monomial(1, 1); }

    bool is_zero() const noexcept { return num_.empty(); }
    bool is_constant() const noexcept { return num_.size() <= 1; }
    bool is_one() const noexcept { return num_.size() == 1 && num_[0] == 1 && den_ == 1; }
    bool has_integer_coefficients() const noexcept { return den_ == 1; }
    // -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(num_.size()) - 1; }
    std::size_t size() const noexcept { return num_.size(); }

    mpq_class coefficient(std::size_t i) const;
    mpq_class leading() const;
    std::vector<mpq_class> coefficients() const;
    // Lowest index with a nonzero coefficient; 0 for the zero polynomial.
    std::size_t trailing_zeros() const noexcept;

    mpq_class evaluate(const mpq_class& r) const;

    QPolynomial operator-() const;
    QPolynomial& operator+=(const QPolynomial& o);
    QPolynomial& operator-=(const QPolynomial& o);
    QPolynomial& operator*=(const QPolynomial& o);
    QPolynomial& operator*=(const mpq_class& c);

    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
    friend QPolynomial operator*(QPolynomial a, const mpq_class& c) { return a *= c; }
    friend bool operator==(const QPolynomial& a, const QPolynomial& b) {
        return a.den_ == b.den_ && a.num_ == b.num_;
    }

    // this += a * b, without intermediate canonicalization when all operands
    // have integer coefficients.
    void add_product(const QPolynomial& a, const QPolynomial& b);

    // Multiply by q^s, s >= 0.
    QPolynomial shifted(std::size_t s) const;
    // Divide by q^s; requires q^s | this.
    QPolynomial unshifted(std::size_t s) const;

    QPolynomial monic() const;
    QPolynomial derivative() const;

    // Euclidean division over Q.
    static std::pair<QPolynomial, QPolynomial> divrem(const QPolynomial& a, const QPolynomial& b);
    // a / b where b | a is known; runs on integer arithmetic only.
    static QPolynomial divexact(const QPolynomial& a, const QPolynomial& b);
    // Monic gcd (zero only if both inputs are zero).
    static QPolynomial gcd(const QPolynomial& a, const QPolynomial& b);

    std::string to_string(const char* var = "q") const;

    // Raw access for the few places that work on the integer layout.
    const std::vector<mpz_class>& integer_numerators() const noexcept { return num_; }
    const mpz_class& common_denominator() const noexcept { return den_; }
    static QPolynomial from_integers(std::vector<mpz_class> num, mpz_class den = 1);

private:
    std::vector<mpz_class> num_;
    mpz_class den_{1};

    void canonicalize();
};

// Element of Q(q) in canonical form: gcd(num, den) = 1, den monic, sign on num.
class QRational {
public:
    QRational() : den_(1) {}
    QRational(long c) : num_(c), den_(1) {}
    QRational(const mpq_class& c) : num_(c), den_(1) {}
    explicit QRational(QPolynomial num) : num_(std::move(num)), den_(1) {}
    QRational(QPolynomial num, QPolynomial den);

    static QRational q() { return QRational(QPolynomial::q()); }
    // q^e for any integer e.
    static QRational q_power(long e);

    const QPolynomial& num() const noexcept { return num_; }
    const QPolynomial& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const noexcept { return den_.is_one(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_one(); }

    QRational inverse() const;
    QRational times_q_power(long e) const;
    // Exact value num(r)/den(r); throws pole_at_specialization when den(r) = 0.
    mpq_class evaluate(const mpq_class& r) const;

    QRational operator-() const;
    QRational& operator+=(const QRational& o);
    QRational& operator-=(const QRational& o);
    QRational& operator*=(const QRational& o);
    QRational& operator/=(const QRational& o);

    friend QRational operator+(QRational a, const QRational& b) { return a += b; }
    friend QRational operator-(QRational a, const QRational& b) { return a -= b; }
    friend QRational operator*(QRational a, const QRational& b) { return a *= b; }
    friend QRational operator/(QRational a, const QRational& b) { return a /= b; }
    friend bool operator==(const QRational& a, const QRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const;

private:
    QPolynomial num_;
    QPolynomial den_;

    struct unchecked_tag {};
    QRational(QPolynomial num, QPolynomial den, unchecked_tag) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    friend class QRationalSum;
};

// Accumulates a sum of products and canonicalizes once at the end. The
// series Cauchy product and every dot-product-shaped loop go through this.
class QRationalSum {
public:
    void add(const QRational& a);
    void add_product(const QRational& a, const QRational& b);
    void sub_product(const QRational& a, const QRational& b);
    QRational result() const;

private:
    QPolynomial num_;
    QPolynomial den_{QPolynomial(1)};

    void add_fraction(const QPolynomial& n, const QPolynomial& d);
};

} // namespace qeuler
