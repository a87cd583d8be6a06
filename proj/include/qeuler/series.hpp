#pragma once

// Truncated Laurent series in x over Q(q).
//
// A series is either exact (a finite Laurent polynomial, precision infinite)
// or known modulo x^prec. The canonical zero is the exact series with no
// coefficients. A series with no stored coefficients and finite precision is
// O(x^prec): zero as far as we know, but its valuation cannot be determined.

#include <climits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qeuler/qfield.hpp"

namespace qeuler {

// Sentinel for infinite precision and infinite valuation.
inline constexpr long kInfinity = LONG_MAX / 4;

constexpr bool is_infinite(long v) noexcept { return v >= kInfinity; }

// Saturating addition for precisions and valuations.
constexpr long add_extended(long a, long b) noexcept {
    return (is_infinite(a) || is_infinite(b)) ? kInfinity : a + b;
}

class LaurentSeries {
public:
    // The canonical zero.
    LaurentSeries() = default;

    static LaurentSeries zero() { return {}; }
    static LaurentSeries big_o(long prec);
    static LaurentSeries from_coefficients(long offset, std::vector<QRational> coeffs, long prec = kInfinity);
    static LaurentSeries constant(const QRational& c, long prec = kInfinity);
    static LaurentSeries monomial(const QRational& c, long exponent, long prec = kInfinity);
    static LaurentSeries x_power(long exponent) { return monomial(1, exponent); }

    bool is_canonical_zero() const noexcept { return coeffs_.empty() && is_infinite(prec_); }
    bool is_exact() const noexcept { return is_infinite(prec_); }
    // No stored nonzero coefficient but finite precision.
    bool is_big_o() const noexcept { return coeffs_.empty() && !is_infinite(prec_); }

    long precision() const noexcept { return prec_; }
    // Exponent of the first stored coefficient; equals the precision for O(x^prec).
    long offset() const noexcept { return offset_; }
    // One past the last stored exponent.
    long end() const noexcept { return offset_ + static_cast<long>(coeffs_.size()); }
    const std::vector<QRational>& coefficients() const noexcept { return coeffs_; }

    // Coefficient of x^e. Zero outside the stored range; throws
    // insufficient_precision when e is at or beyond the precision.
    QRational coefficient(long e) const;

    // kInfinity for the canonical zero; throws indeterminate_valuation for O(x^p).
    long valuation() const;
    QRational leading_coefficient() const;

    // Same series known only modulo x^prec (no-op if already coarser).
    LaurentSeries truncated(long prec) const;

    LaurentSeries operator-() const;
    friend LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g);
    friend LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g);
    friend LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g);
    LaurentSeries& operator+=(const LaurentSeries& g) { return *this = *this + g; }
    LaurentSeries& operator-=(const LaurentSeries& g) { return *this = *this - g; }
    LaurentSeries& operator*=(const LaurentSeries& g) { return *this = *this * g; }
    LaurentSeries scaled(const QRational& c) const;

    // Structural equality: same window, same coefficients.
    friend bool operator==(const LaurentSeries& f, const LaurentSeries& g) {
        return f.offset_ == g.offset_ && f.prec_ == g.prec_ && f.coeffs_ == g.coeffs_;
    }

    LaurentSeries pow(unsigned n) const;

    // Multiplicative inverse. For a finite-precision input the result is known
    // modulo x^(prec - 2*valuation). Exact monomials invert exactly; any other
    // exact input needs `cap`, the absolute precision wanted for the result.
    LaurentSeries inverse(long cap = kInfinity) const;

    // x^kx * sigma_q^ks applied to this series.
    LaurentSeries shift_sigma(long kx, long ks) const;

    // The Euler derivation x d/dx acting on x only.
    LaurentSeries euler_delta() const;

    // Coefficient-wise specialization q -> r. Coefficients stay in Q(q) as
    // constants. Throws pole_at_specialization carrying the offending exponent.
    LaurentSeries specialize_q(const mpq_class& r) const;

    std::string to_string(const char* var = "x") const;

private:
    long offset_ = 0;
    std::vector<QRational> coeffs_;
    long prec_ = kInfinity;

    void normalize();
};

// Expansion at x = 0 of num/den for exact Laurent polynomials num, den, known
// modulo x^prec.
LaurentSeries expand_rational(const LaurentSeries& num, const LaurentSeries& den, long prec);

// First exponent where f and g differ inside their common window, with the
// value of f - g there. nullopt when they agree on the whole window.
std::optional<std::pair<long, QRational>> first_difference(const LaurentSeries& f, const LaurentSeries& g);

// True when f and g agree on every exponent below both precisions.
bool agree_on_overlap(const LaurentSeries& f, const LaurentSeries& g);

} // namespace qeuler
