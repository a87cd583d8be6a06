#include "qeuler/constructions.hpp"

#include "qeuler/errors.hpp"

namespace qeuler {

namespace {

void require_nonzero_entry(const LaurentSeries& s, unsigned j) {
    if (s.is_canonical_zero()) {
        throw degenerate_sequence("sequence entry " + std::to_string(j) + " vanishes");
    }
    if (s.is_big_o()) {
        throw degenerate_sequence("sequence entry " + std::to_string(j) + " is O(x^" + std::to_string(s.precision()) +
                                  "); raise the precision");
    }
}

LaurentSeries sign_constant(bool negative) {
    return LaurentSeries::constant(negative ? -1 : 1);
}

} // namespace

std::vector<LaurentSeries> build_beta_sequence(const LaurentSeries& alpha, const LaurentSeries& beta, unsigned n) {
    std::vector<LaurentSeries> seq;
    seq.reserve(n + 1);
    seq.emplace_back();
    LaurentSeries term = beta;
    LaurentSeries sum;
    for (unsigned k = 0; k < n; ++k) {
        sum += term;
        seq.push_back(sum);
        if (k + 1 < n) {
            term = -(alpha * term.shift_sigma(0, 1));
        }
    }
    return seq;
}

LaurentSeries build_beta(const LaurentSeries& alpha, const LaurentSeries& beta, unsigned n) {
    return build_beta_sequence(alpha, beta, n).back();
}

LaurentSeries build_pn(const LaurentSeries& p, unsigned n) {
    if (n > 0 && p.is_canonical_zero()) {
        throw invalid_argument("P must be nonzero");
    }
    return build_beta(LaurentSeries::x_power(1), p, n);
}

SignEpsilon epsilon(int n, int k) {
    if (k < 1 || k > n) {
        throw invalid_argument("epsilon(n, k) needs 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
    const long e = static_cast<long>(k) * (2L * n - k + 1) / 2;
    return {n, k, e % 2 == 0 ? 1 : -1};
}

LaurentSeries build_akj(const std::vector<LaurentSeries>& seq, unsigned k, unsigned j) {
    if (j > k || k >= seq.size()) {
        throw invalid_argument("A_{k;j} needs 0 <= j <= k < sequence length");
    }
    LaurentSeries prod = LaurentSeries::constant(1);
    for (unsigned l = 0; l <= k; ++l) {
        if (l == j) {
            continue;
        }
        const LaurentSeries d = seq[j] - seq[l];
        if (d.is_canonical_zero() || d.is_big_o()) {
            throw degenerate_sequence("entries " + std::to_string(j) + " and " + std::to_string(l) +
                                      " coincide within the known window");
        }
        prod *= d;
    }
    return prod;
}

TowerBase TowerBase::from_p(const LaurentSeries& p) {
    return {LaurentSeries::x_power(1), p, false};
}

TowerBase TowerBase::from_alpha_beta(const LaurentSeries& alpha, const LaurentSeries& beta) {
    return {alpha, beta, true};
}

OperatorTower::OperatorTower(TowerBase base, unsigned n, long prec) : base_(std::move(base)), n_(n), prec_(prec) {
    if (n == 0) {
        throw invalid_argument("tower order n must be positive");
    }
    if (base_.beta.is_canonical_zero()) {
        throw degenerate_sequence("base series vanishes");
    }
    seq_ = build_beta_sequence(base_.alpha, base_.beta, n);
    inverses_.emplace_back();
    for (unsigned j = 1; j <= n; ++j) {
        require_nonzero_entry(seq_[j], j);
        inverses_.push_back(seq_[j].inverse(prec));
    }
    stages_.reserve(n);
    stages_.push_back(atomic_factor(0).left_multiply(inverses_[1]));
    for (unsigned k = 1; k < n; ++k) {
        stages_.push_back(atomic_factor(k).compose(stages_.back()).left_multiply(inverses_[k + 1]));
    }
}

QDiffOperator OperatorTower::atomic_factor(unsigned k) const {
    const unsigned e = n_ - k;
    return QDiffOperator::first_order(base_.alpha.pow(e), sign_constant(e % 2 == 0));
}

QDiffOperator OperatorTower::cleared_top() const {
    LaurentSeries prod = LaurentSeries::constant(1);
    for (unsigned j = 1; j <= n_; ++j) {
        prod *= seq_[j];
    }
    return top().left_multiply(prod);
}

bool OperatorTower::check_recursion() const {
    QDiffOperator prev = atomic_factor(0).left_multiply(inverses_[1]);
    if (first_difference(prev, stages_[0])) {
        return false;
    }
    for (unsigned k = 1; k < n_; ++k) {
        const QDiffOperator next = QDiffOperator::multiplication(inverses_[k + 1]).compose(atomic_factor(k)).compose(stages_[k - 1]);
        if (first_difference(next, stages_[k])) {
            return false;
        }
    }
    return true;
}

OperatorTower build_tower(const LaurentSeries& p, unsigned n, long prec) {
    return OperatorTower(TowerBase::from_p(p), n, prec);
}

OperatorTower build_tower_general(const LaurentSeries& alpha, const LaurentSeries& beta, unsigned n, long prec) {
    return OperatorTower(TowerBase::from_alpha_beta(alpha, beta), n, prec);
}

LaurentSeries euler_hat_q(long prec) {
    if (prec < 1) {
        throw invalid_argument("euler_hat_q needs prec >= 1");
    }
    std::vector<QRational> c;
    c.reserve(static_cast<std::size_t>(prec));
    for (long n = 0; n < prec; ++n) {
        const QRational m = QRational::q_power(n * (n - 1) / 2);
        c.push_back(n % 2 == 0 ? m : -m);
    }
    return LaurentSeries::from_coefficients(0, std::move(c), prec);
}

LaurentSeries euler_hat_xq(long prec) {
    if (prec < 2) {
        throw invalid_argument("euler_hat_xq needs prec >= 2");
    }
    // (1-q)...(1-q^n)/(1-q)^n is the product of the q-integers 1 + q + ... + q^(i-1).
    std::vector<QRational> c;
    QPolynomial factorial(1);
    for (long n = 0; n + 1 < prec; ++n) {
        if (n > 0) {
            factorial *= QPolynomial::from_coefficients(std::vector<mpq_class>(static_cast<std::size_t>(n), 1));
        }
        const QRational term(factorial);
        c.push_back(n % 2 == 0 ? term : -term);
    }
    return LaurentSeries::from_coefficients(1, std::move(c), prec);
}

LaurentSeries ab1_alpha(long prec) {
    const LaurentSeries den = LaurentSeries::from_coefficients(0, {QRational(QPolynomial::from_coefficients({-1, 1})), QRational(-1)});
    return expand_rational(LaurentSeries::x_power(1), den, prec);
}

LaurentSeries ab1_beta(long prec) {
    return ab1_alpha(prec).scaled(QRational(QPolynomial::from_coefficients({-1, 1})));
}

LaurentSeries solve_first_order(const LaurentSeries& alpha, const LaurentSeries& beta, long prec) {
    const long v = alpha.valuation();
    if (v < 1) {
        throw unsupported_valuation("first-order solver needs valuation(alpha) >= 1, got " + std::to_string(v));
    }
    if (beta.is_canonical_zero()) {
        return {};
    }
    if (alpha.is_canonical_zero()) {
        return beta.truncated(prec);
    }
    if (beta.is_big_o()) {
        return LaurentSeries::big_o(std::min(prec, beta.precision()));
    }
    // y = beta - alpha*sigma(y): the error in alpha enters through sigma(y),
    // whose valuation is that of beta.
    const long b0 = beta.offset();
    const long p = std::min({prec, beta.precision(), add_extended(alpha.precision(), b0)});
    if (p <= b0) {
        return LaurentSeries::big_o(p);
    }
    const auto& a = alpha.coefficients();
    const long a_lo = alpha.offset();
    const long a_hi = alpha.end();
    std::vector<QRational> y(static_cast<std::size_t>(p - b0));
    for (long m = b0; m < p; ++m) {
        QRationalSum acc;
        if (m < beta.end()) {
            acc.add(beta.coefficient(m));
        }
        for (long i = a_lo; i < a_hi && m - i >= b0; ++i) {
            const QRational& yi = y[static_cast<std::size_t>(m - i - b0)];
            if (yi.is_zero()) {
                continue;
            }
            acc.sub_product(a[static_cast<std::size_t>(i - a_lo)], yi.times_q_power(m - i));
        }
        y[static_cast<std::size_t>(m - b0)] = acc.result();
    }
    return LaurentSeries::from_coefficients(b0, std::move(y), p);
}

LaurentSeries named_base_series(const std::string& name) {
    if (name == "one") {
        return LaurentSeries::constant(1);
    }
    if (name == "one-minus-x") {
        return LaurentSeries::from_coefficients(0, {1, -1});
    }
    if (name == "one-plus-x") {
        return LaurentSeries::from_coefficients(0, {1, 1});
    }
    if (name == "one-minus-x-plus-x2") {
        return LaurentSeries::from_coefficients(0, {1, -1, 1});
    }
    throw invalid_argument("unknown base series '" + name +
                           "' (expected one, one-minus-x, one-plus-x, one-minus-x-plus-x2)");
}

} // namespace qeuler
