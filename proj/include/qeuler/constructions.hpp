#pragma once

// The objects built on top of the first-order equation  alpha*sigma_q(y) + y = beta:
// the partial sums P_n / beta_n, the Vandermonde-type products A_{k;j}, the
// operator towers that annihilate f^n up to a sign, and the two q-analogs of
// the Euler series.

#include <string>
#include <vector>

#include "qeuler/qdiff.hpp"

namespace qeuler {

// sum_{k<n} (-x sigma_q)^k P. P_0 is the canonical zero.
LaurentSeries build_pn(const LaurentSeries& p, unsigned n);

// sum_{k<n} (-alpha sigma_q)^k beta.
LaurentSeries build_beta(const LaurentSeries& alpha, const LaurentSeries& beta, unsigned n);

// The whole sequence P_0..P_n (or beta_0..beta_n) in one pass.
std::vector<LaurentSeries> build_beta_sequence(const LaurentSeries& alpha, const LaurentSeries& beta, unsigned n);

struct SignEpsilon {
    int n;
    int k;
    int value;
};

// (-1)^(k(2n-k+1)/2), defined for 1 <= k <= n.
SignEpsilon epsilon(int n, int k);

// prod_{l != j, 0 <= l <= k} (seq[j] - seq[l]).
LaurentSeries build_akj(const std::vector<LaurentSeries>& seq, unsigned k, unsigned j);

// Base of an operator tower: either P (with alpha = x) or a general (alpha, beta).
struct TowerBase {
    LaurentSeries alpha;
    LaurentSeries beta;
    bool general = false;

    static TowerBase from_p(const LaurentSeries& p);
    static TowerBase from_alpha_beta(const LaurentSeries& alpha, const LaurentSeries& beta);
};

class OperatorTower {
public:
    // stages()[k-1] is L_{n,k}; every stage is in sigma_q-normal form.
    // Inverses of exact sequence entries are expanded modulo x^prec.
    OperatorTower(TowerBase base, unsigned n, long prec);

    const TowerBase& base() const noexcept { return base_; }
    unsigned n() const noexcept { return n_; }
    long working_precision() const noexcept { return prec_; }
    const std::vector<QDiffOperator>& stages() const noexcept { return stages_; }
    const QDiffOperator& stage(unsigned k) const { return stages_.at(k - 1); }
    const QDiffOperator& top() const { return stages_.back(); }

    // beta_0..beta_n (P_0..P_n for a P-base).
    const std::vector<LaurentSeries>& sequence() const noexcept { return seq_; }
    // The atomic factor alpha^(n-k) sigma_q - (-1)^(n-k), 0 <= k < n.
    QDiffOperator atomic_factor(unsigned k) const;
    // Left-multiplies the top stage by beta_1 * ... * beta_n.
    QDiffOperator cleared_top() const;

    // Recomputes stages[k] = (1/seq[k+1]) (atomic k) o stages[k-1] and compares
    // on the common window; true when every stage matches.
    bool check_recursion() const;

private:
    TowerBase base_;
    unsigned n_;
    long prec_;
    std::vector<LaurentSeries> seq_;
    std::vector<LaurentSeries> inverses_;
    std::vector<QDiffOperator> stages_;
};

OperatorTower build_tower(const LaurentSeries& p, unsigned n, long prec);
OperatorTower build_tower_general(const LaurentSeries& alpha, const LaurentSeries& beta, unsigned n, long prec);

// sum_{n < prec} (-1)^n q^(n(n-1)/2) x^n
LaurentSeries euler_hat_q(long prec);
// x + sum_{n>=1} (-1)^n (1-q)...(1-q^n)/(1-q)^n x^(n+1), modulo x^prec
LaurentSeries euler_hat_xq(long prec);

// alpha = x/(q-1-x) and beta = (q-1) alpha, modulo x^prec.
LaurentSeries ab1_alpha(long prec);
LaurentSeries ab1_beta(long prec);

// Unique Laurent-series solution of alpha*sigma_q(y) + y = beta, for
// valuation(alpha) >= 1, modulo x^prec.
LaurentSeries solve_first_order(const LaurentSeries& alpha, const LaurentSeries& beta, long prec);

// Named base series accepted by the CLI: "one", "one-minus-x", "one-plus-x",
// "one-minus-x-plus-x2".
LaurentSeries named_base_series(const std::string& name);

} // namespace qeuler
