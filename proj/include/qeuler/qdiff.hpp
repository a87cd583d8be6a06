#pragma once

// Linear q-difference operators  L = sum_k a_k sigma_q^k  with Laurent-series
// coefficients, kept in sigma_q-normal form. Composition follows
// (a sigma^j)(b sigma^k) = a sigma^j(b) sigma^(j+k).

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qeuler/series.hpp"

namespace qeuler {

class QDiffOperator {
public:
    using term_map = std::map<long, LaurentSeries>;

    // The zero operator.
    QDiffOperator() = default;
    // Canonical-zero coefficients are dropped; negative shifts are rejected.
    explicit QDiffOperator(term_map terms);

    static QDiffOperator identity() { return multiplication(LaurentSeries::constant(1)); }
    // The order-0 operator f -> s*f.
    static QDiffOperator multiplication(const LaurentSeries& s);
    // a*sigma_q + b
    static QDiffOperator first_order(const LaurentSeries& a, const LaurentSeries& b);

    const term_map& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    // Highest stored shift; -1 for the zero operator.
    long order() const noexcept { return terms_.empty() ? -1 : terms_.rbegin()->first; }
    // Coefficient of sigma^k (canonical zero if absent).
    LaurentSeries coefficient(long k) const;

    LaurentSeries apply(const LaurentSeries& f) const;
    // this o other
    QDiffOperator compose(const QDiffOperator& other) const;
    QDiffOperator left_multiply(const LaurentSeries& s) const;

    friend QDiffOperator operator+(const QDiffOperator& a, const QDiffOperator& b);
    friend QDiffOperator operator-(const QDiffOperator& a, const QDiffOperator& b);
    friend bool operator==(const QDiffOperator& a, const QDiffOperator& b) { return a.terms_ == b.terms_; }

    // Rewrite in powers of delta_q = (sigma_q - 1)/(q - 1): returns b_0..b_m
    // with this = sum_j b_j delta_q^j.
    std::vector<LaurentSeries> to_delta() const;

private:
    term_map terms_;
};

// sum_j b_j delta_q^j in sigma_q-normal form.
QDiffOperator from_delta(const std::vector<LaurentSeries>& coeffs);

// First disagreement between two operators on the common window of each
// coefficient: (shift, exponent, value of difference).
struct OperatorDifference {
    long shift;
    long exponent;
    QRational value;
};
std::optional<OperatorDifference> first_difference(const QDiffOperator& a, const QDiffOperator& b);

} // namespace qeuler
