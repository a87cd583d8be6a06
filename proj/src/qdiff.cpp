#include "qeuler/qdiff.hpp"

#include <algorithm>

#include "qeuler/errors.hpp"

namespace qeuler {

namespace {

QRational binomial(long n, long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return QRational(mpq_class(b));
}

// (q - 1)^e for any integer e.
QRational q_minus_one_power(long e) {
    const QRational base(QPolynomial::from_coefficients({-1, 1}));
    QRational r(1);
    for (long i = 0; i < std::abs(e); ++i) {
        r *= base;
    }
    return e >= 0 ? r : r.inverse();
}

void accumulate(QDiffOperator::term_map& terms, long k, const LaurentSeries& s) {
    auto it = terms.find(k);
    if (it == terms.end()) {
        terms.emplace(k, s);
    } else {
        it->second += s;
    }
}

} // namespace

QDiffOperator::QDiffOperator(term_map terms) {
    for (auto& [k, a] : terms) {
        if (k < 0) {
            throw invalid_argument("q-difference operators take nonnegative shifts only, got " + std::to_string(k));
        }
        if (!a.is_canonical_zero()) {
            terms_.emplace(k, std::move(a));
        }
    }
}

QDiffOperator QDiffOperator::multiplication(const LaurentSeries& s) {
    return QDiffOperator(term_map{{0, s}});
}

QDiffOperator QDiffOperator::first_order(const LaurentSeries& a, const LaurentSeries& b) {
    return QDiffOperator(term_map{{0, b}, {1, a}});
}

LaurentSeries QDiffOperator::coefficient(long k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? LaurentSeries() : it->second;
}

LaurentSeries QDiffOperator::apply(const LaurentSeries& f) const {
    LaurentSeries out;
    for (const auto& [k, a] : terms_) {
        out += a * f.shift_sigma(0, k);
    }
    return out;
}

QDiffOperator QDiffOperator::compose(const QDiffOperator& other) const {
    term_map out;
    for (const auto& [j, a] : terms_) {
        for (const auto& [k, b] : other.terms_) {
            accumulate(out, j + k, a * b.shift_sigma(0, j));
        }
    }
    return QDiffOperator(std::move(out));
}

QDiffOperator QDiffOperator::left_multiply(const LaurentSeries& s) const {
    term_map out;
    for (const auto& [k, a] : terms_) {
        out.emplace(k, s * a);
    }
    return QDiffOperator(std::move(out));
}

QDiffOperator operator+(const QDiffOperator& a, const QDiffOperator& b) {
    QDiffOperator::term_map out = a.terms_;
    for (const auto& [k, s] : b.terms_) {
        accumulate(out, k, s);
    }
    return QDiffOperator(std::move(out));
}

QDiffOperator operator-(const QDiffOperator& a, const QDiffOperator& b) {
    QDiffOperator::term_map out = a.terms_;
    for (const auto& [k, s] : b.terms_) {
        accumulate(out, k, -s);
    }
    return QDiffOperator(std::move(out));
}

std::vector<LaurentSeries> QDiffOperator::to_delta() const {
    // sigma^i = ((q-1) delta + 1)^i = sum_j C(i,j) (q-1)^j delta^j
    std::vector<LaurentSeries> out(static_cast<std::size_t>(std::max(order(), 0L) + 1));
    for (const auto& [i, a] : terms_) {
        for (long j = 0; j <= i; ++j) {
            out[static_cast<std::size_t>(j)] += a.scaled(binomial(i, j) * q_minus_one_power(j));
        }
    }
    while (out.size() > 1 && out.back().is_canonical_zero()) {
        out.pop_back();
    }
    return out;
}

QDiffOperator from_delta(const std::vector<LaurentSeries>& coeffs) {
    // delta^j = (q-1)^(-j) sum_i C(j,i) (-1)^(j-i) sigma^i
    QDiffOperator::term_map out;
    for (long j = 0; j < static_cast<long>(coeffs.size()); ++j) {
        const LaurentSeries& b = coeffs[static_cast<std::size_t>(j)];
        if (b.is_canonical_zero()) {
            continue;
        }
        const QRational scale = q_minus_one_power(-j);
        for (long i = 0; i <= j; ++i) {
            QRational c = binomial(j, i) * scale;
            if ((j - i) % 2 != 0) {
                c = -c;
            }
            accumulate(out, i, b.scaled(c));
        }
    }
    return QDiffOperator(std::move(out));
}

std::optional<OperatorDifference> first_difference(const QDiffOperator& a, const QDiffOperator& b) {
    const long top = std::max(a.order(), b.order());
    for (long k = 0; k <= top; ++k) {
        if (auto d = first_difference(a.coefficient(k), b.coefficient(k))) {
            return OperatorDifference{k, d->first, d->second};
        }
    }
    return std::nullopt;
}

} // namespace qeuler
