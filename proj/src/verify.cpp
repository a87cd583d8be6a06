#include "qeuler/verify.hpp"

#include <algorithm>
#include <sstream>

#include "qeuler/errors.hpp"
#include "qeuler/newton.hpp"

namespace qeuler {

const char* to_string(Status s) noexcept {
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::error:
        return "error";
    }
    return "error";
}

namespace {

int sign_of_power(long e) {
    return e % 2 == 0 ? 1 : -1;
}

// (-1)^(n(n-1)/2)
int tower_constant_sign(unsigned n) {
    return sign_of_power(static_cast<long>(n) * (static_cast<long>(n) - 1) / 2);
}

QRational binomial(unsigned n, unsigned k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return QRational(mpq_class(b));
}

QRational q_minus_one() {
    return QRational(QPolynomial::from_coefficients({-1, 1}));
}

// q - 1 - x as an exact series.
LaurentSeries q_minus_one_minus_x() {
    return LaurentSeries::from_coefficients(0, {q_minus_one(), QRational(-1)});
}

VerificationReport start(std::string id, std::map<std::string, std::string> params) {
    VerificationReport r;
    r.id = std::move(id);
    r.params = std::move(params);
    r.status = Status::pass;
    r.window_lo = kInfinity;
    r.window_hi = kInfinity;
    return r;
}

long support_start(const LaurentSeries& s) {
    return s.coefficients().empty() ? kInfinity : s.offset();
}

// Folds the comparison lhs == rhs into the report: the window narrows to the
// intersection, the first failure wins.
void compare_into(VerificationReport& r, const LaurentSeries& lhs, const LaurentSeries& rhs,
                  const std::string& label = {}) {
    r.evidence.push_back(lhs);
    const LaurentSeries residual = lhs - rhs;
    const long lo = std::min(support_start(lhs), support_start(rhs));
    const long hi = residual.precision();
    r.window_hi = std::min(r.window_hi, hi);
    if (is_infinite(lo)) {
        // Neither side stores a coefficient: the check says lhs vanishes below hi.
        return;
    }
    r.window_lo = std::min(r.window_lo, lo);
    if (!residual.coefficients().empty()) {
        if (r.status != Status::fail) {
            r.witness = Witness{residual.offset(), residual.coefficients().front()};
            if (!label.empty()) {
                r.notes.push_back("first residual in " + label);
            }
        }
        r.status = Status::fail;
        return;
    }
    if (!is_infinite(hi) && hi <= lo && r.status == Status::pass) {
        r.status = Status::error;
        r.notes.push_back("empty comparison window" + (label.empty() ? std::string() : " in " + label));
    }
}

void fail_with(VerificationReport& r, long exponent, const QRational& value, std::string note) {
    if (r.status != Status::fail) {
        r.witness = Witness{exponent, value};
        r.notes.push_back(std::move(note));
    }
    r.status = Status::fail;
}

void mark_exact_window(VerificationReport& r, long lo, long hi) {
    r.window_lo = lo;
    r.window_hi = hi;
}

std::string describe_nodes(const std::vector<QRational>& nodes) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        os << (i ? ", " : "") << nodes[i].to_string();
    }
    os << "]";
    return os.str();
}

template <class Ring, class Inverse, class IsZero>
TPolynomial<Ring> lagrange_sum_impl(const std::vector<Ring>& nodes, Inverse&& invert, IsZero&& is_zero) {
    if (nodes.empty()) {
        throw invalid_argument("at least one node is required");
    }
    const auto n = static_cast<unsigned>(nodes.size() - 1);
    TPolynomial<Ring> out;
    out.coeffs.assign(n + 1, Ring());
    for (unsigned j = 0; j <= n; ++j) {
        Ring a = Ring(QRational(1));
        for (unsigned l = 0; l <= n; ++l) {
            if (l == j) {
                continue;
            }
            const Ring d = nodes[j] - nodes[l];
            if (is_zero(d)) {
                throw duplicate_node("nodes " + std::to_string(j) + " and " + std::to_string(l) + " coincide");
            }
            a = a * d;
        }
        const Ring inv = invert(a);
        // (T - alpha_j)^n = sum_i C(n,i) T^i (-alpha_j)^(n-i)
        const Ring neg = Ring() - nodes[j];
        std::vector<Ring> powers{Ring(QRational(1))};
        for (unsigned i = 1; i <= n; ++i) {
            powers.push_back(powers.back() * neg);
        }
        for (unsigned i = 0; i <= n; ++i) {
            out.coeffs[i] = out.coeffs[i] + inv * powers[n - i] * Ring(binomial(n, i));
        }
    }
    return out;
}

LaurentSeries as_series(const QRational& c) {
    return LaurentSeries::constant(c);
}

} // namespace

// ---------------------------------------------------------------------------
// Lagrange identity

TPolynomial<QRational> lagrange_sum(const std::vector<QRational>& nodes) {
    TPolynomial<QRational> t = lagrange_sum_impl<QRational>(
        nodes, [](const QRational& a) { return a.inverse(); }, [](const QRational& a) { return a.is_zero(); });
    while (!t.coeffs.empty() && t.coeffs.back().is_zero()) {
        t.coeffs.pop_back();
    }
    return t;
}

TPolynomial<LaurentSeries> lagrange_sum(const std::vector<LaurentSeries>& nodes, long prec) {
    struct Wrapped {
        LaurentSeries s;
        Wrapped() = default;
        explicit Wrapped(const QRational& c) : s(as_series(c)) {}
        explicit Wrapped(LaurentSeries x) : s(std::move(x)) {}
        Wrapped operator-(const Wrapped& o) const { return Wrapped(s - o.s); }
        Wrapped operator+(const Wrapped& o) const { return Wrapped(s + o.s); }
        Wrapped operator*(const Wrapped& o) const { return Wrapped(s * o.s); }
    };
    std::vector<Wrapped> w;
    w.reserve(nodes.size());
    for (const auto& s : nodes) {
        w.emplace_back(s);
    }
    auto t = lagrange_sum_impl<Wrapped>(
        w, [prec](const Wrapped& a) { return Wrapped(a.s.inverse(prec)); },
        [](const Wrapped& a) { return a.s.coefficients().empty(); });
    TPolynomial<LaurentSeries> out;
    for (auto& c : t.coeffs) {
        out.coeffs.push_back(std::move(c.s));
    }
    return out;
}

VerificationReport verify_lagrange(const std::vector<QRational>& nodes) {
    const auto n = static_cast<unsigned>(nodes.size() - 1);
    VerificationReport r = start("Faj", {{"n", std::to_string(n)}, {"nodes", describe_nodes(nodes)}});
    const TPolynomial<QRational> t = lagrange_sum(nodes);
    mark_exact_window(r, 0, static_cast<long>(n) + 1);
    for (unsigned i = 0; i <= n; ++i) {
        const QRational expected = i == 0 ? QRational(sign_of_power(n)) : QRational();
        const QRational got = i < t.coeffs.size() ? t.coeffs[i] : QRational();
        if (!(got == expected)) {
            fail_with(r, i, got - expected, "witness exponent is the degree in T");
            break;
        }
    }
    return r;
}

VerificationReport verify_lagrange_series(const std::vector<LaurentSeries>& nodes, long prec) {
    const auto n = static_cast<unsigned>(nodes.size() - 1);
    VerificationReport r = start("Faj-series", {{"n", std::to_string(n)}, {"prec", std::to_string(prec)}});
    const TPolynomial<LaurentSeries> t = lagrange_sum(nodes, prec);
    for (unsigned i = 0; i <= n; ++i) {
        const LaurentSeries expected = i == 0 ? LaurentSeries::constant(sign_of_power(n)) : LaurentSeries();
        compare_into(r, t.coeffs[i], expected, "coefficient of T^" + std::to_string(i));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Tower identities

VerificationReport check_thm_fn(const LaurentSeries& p, const LaurentSeries& f, unsigned n, long prec) {
    VerificationReport r = start("fn", {{"n", std::to_string(n)}, {"prec", std::to_string(prec)}});
    const OperatorTower tower = build_tower(p, n, prec);
    compare_into(r, tower.top().apply(f.pow(n)), LaurentSeries::constant(tower_constant_sign(n)));
    return r;
}

VerificationReport verify_thm_fn(const LaurentSeries& p, unsigned n, long prec) {
    if (n == 0) {
        throw invalid_argument("n must be positive");
    }
    const LaurentSeries f = solve_first_order(LaurentSeries::x_power(1), p, prec);
    return check_thm_fn(p, f, n, prec);
}

VerificationReport verify_lemma_akj(const LaurentSeries& p, unsigned n, unsigned k, long prec) {
    if (k < 1 || k > n) {
        throw invalid_argument("stage index needs 1 <= k <= n");
    }
    VerificationReport r = start(
        "Lnkf", {{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"prec", std::to_string(prec)}});
    const LaurentSeries f = solve_first_order(LaurentSeries::x_power(1), p, prec);
    const OperatorTower tower = build_tower(p, n, prec);
    const LaurentSeries lhs = tower.stage(k).apply(f.pow(n));

    const std::vector<LaurentSeries>& seq = tower.sequence();
    LaurentSeries rhs;
    for (unsigned j = 0; j <= k; ++j) {
        rhs += build_akj(seq, k, j).inverse(prec) * (f - seq[j]).pow(n);
    }
    rhs = rhs.scaled(QRational(epsilon(static_cast<int>(n), static_cast<int>(k)).value));
    compare_into(r, lhs, rhs);
    return r;
}

VerificationReport verify_thm_gen(const LaurentSeries& alpha, const LaurentSeries& beta, unsigned n, long prec) {
    if (n == 0) {
        throw invalid_argument("n must be positive");
    }
    VerificationReport r = start("abfn", {{"n", std::to_string(n)}, {"prec", std::to_string(prec)}});
    const LaurentSeries f = solve_first_order(alpha, beta, prec);
    const OperatorTower tower = build_tower_general(alpha, beta, n, prec);
    compare_into(r, tower.top().apply(f.pow(n)), LaurentSeries::constant(tower_constant_sign(n)));
    return r;
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

struct Ab1 {
    LaurentSeries alpha;
    LaurentSeries beta;
    // 1/(q-1-x) and -1/x + 1/(q-1-x), the constant parts of the delta_q factors.
    LaurentSeries u;
    LaurentSeries w;
};

Ab1 ab1_pieces(long prec) {
    Ab1 a;
    a.alpha = ab1_alpha(prec);
    a.beta = ab1_beta(prec);
    a.u = expand_rational(LaurentSeries::constant(1), q_minus_one_minus_x(), prec);
    a.w = a.u - LaurentSeries::x_power(-1);
    return a;
}

// (alpha sigma + 1)(alpha sigma - 1/alpha) / (q-1)^2
QDiffOperator euler2l_operator(const Ab1& a) {
    const QDiffOperator left = QDiffOperator::first_order(a.alpha, LaurentSeries::constant(1));
    const QDiffOperator right = QDiffOperator::first_order(a.alpha, -a.alpha.inverse());
    const QRational scale = (q_minus_one() * q_minus_one()).inverse();
    return left.compose(right).left_multiply(LaurentSeries::constant(scale));
}

// (alpha delta_q + u)(alpha delta_q + w) in sigma-normal form.
QDiffOperator qeuler2a_operator(const Ab1& a) {
    return from_delta({a.u, a.alpha}).compose(from_delta({a.w, a.alpha}));
}

LaurentSeries ab1_rhs(const Ab1& a) {
    return a.alpha * (a.alpha.shift_sigma(0, 1) - LaurentSeries::constant(1));
}

struct Resolved {
    LaurentSeries p;
    std::string p_desc;
    LaurentSeries alpha;
    LaurentSeries beta;
    std::string ab_desc;
};

Resolved resolve(const CatalogParams& params, long prec) {
    Resolved r;
    if (params.p) {
        r.p = *params.p;
        r.p_desc = "custom";
    } else if (params.p_name == "eq-ab1") {
        r.p = LaurentSeries::constant(1);
        r.p_desc = "one";
    } else {
        r.p = named_base_series(params.p_name);
        r.p_desc = params.p_name;
    }
    if (params.alpha || params.beta) {
        if (!params.alpha || !params.beta) {
            throw invalid_argument("alpha and beta must be given together");
        }
        r.alpha = *params.alpha;
        r.beta = *params.beta;
        r.ab_desc = "custom";
    } else {
        r.alpha = ab1_alpha(prec);
        r.beta = ab1_beta(prec);
        r.ab_desc = "eq-ab1";
    }
    return r;
}

unsigned need_n(const CatalogParams& params, unsigned fallback, unsigned minimum = 1) {
    const unsigned n = params.n.value_or(fallback);
    if (n < minimum) {
        throw invalid_argument("n must be at least " + std::to_string(minimum));
    }
    return n;
}

VerificationReport verify_euler(long prec) {
    VerificationReport r = start("Euler", {{"prec", std::to_string(prec)}});
    const QDiffOperator op = QDiffOperator::first_order(LaurentSeries::x_power(1), LaurentSeries::constant(1));
    compare_into(r, op.apply(euler_hat_q(prec)), LaurentSeries::constant(1));
    return r;
}

VerificationReport verify_e2(long prec) {
    VerificationReport r = start("E2", {{"prec", std::to_string(prec)}});
    const QDiffOperator a = QDiffOperator::first_order(LaurentSeries::x_power(1), LaurentSeries::constant(1));
    const QDiffOperator b = QDiffOperator::first_order(LaurentSeries::x_power(2), LaurentSeries::constant(-1));
    const LaurentSeries f = euler_hat_q(prec);
    compare_into(r, a.compose(b).apply(f * f), LaurentSeries::from_coefficients(0, {-1, 1}));
    return r;
}

VerificationReport verify_eulern(unsigned n, long prec) {
    VerificationReport r = start("Eulern", {{"n", std::to_string(n)}, {"prec", std::to_string(prec)}});
    const LaurentSeries one = LaurentSeries::constant(1);
    const std::vector<LaurentSeries> pk = build_beta_sequence(LaurentSeries::x_power(1), one, n);
    auto factor = [&](unsigned e) {
        return QDiffOperator::first_order(LaurentSeries::x_power(e), LaurentSeries::constant(e % 2 == 0 ? -1 : 1));
    };
    // (x sigma + 1) (1/P_{n-1}) (x^2 sigma - 1) ... (1/P_1) (x^n sigma - (-1)^n)
    QDiffOperator op = factor(n);
    for (unsigned k = 1; k < n; ++k) {
        op = factor(n - k).compose(QDiffOperator::multiplication(pk[k].inverse(prec))).compose(op);
    }
    compare_into(r, op.apply(euler_hat_q(prec).pow(n)), pk[n].scaled(QRational(tower_constant_sign(n))));
    return r;
}

VerificationReport verify_eulerq(long prec) {
    VerificationReport r = start("Eulerq", {{"prec", std::to_string(prec)}});
    const Ab1 a = ab1_pieces(prec);
    const QDiffOperator op = QDiffOperator::first_order(a.alpha, LaurentSeries::constant(1));
    compare_into(r, op.apply(euler_hat_xq(prec)), a.beta);
    return r;
}

VerificationReport verify_euler2la(long prec) {
    VerificationReport r = start("Euler2La", {{"prec", std::to_string(prec)}});
    const Ab1 a = ab1_pieces(prec);
    const LaurentSeries f = euler_hat_xq(prec);
    compare_into(r, euler2l_operator(a).apply(f * f), ab1_rhs(a));
    return r;
}

VerificationReport verify_qeuler2a(long prec) {
    VerificationReport r = start("qEuler2a", {{"prec", std::to_string(prec)}});
    const Ab1 a = ab1_pieces(prec);
    const LaurentSeries f = euler_hat_xq(prec);
    compare_into(r, qeuler2a_operator(a).apply(f * f), ab1_rhs(a));
    return r;
}

VerificationReport verify_qeuler2a_operator(long prec) {
    VerificationReport r = start("qEuler2a-operator", {{"prec", std::to_string(prec)}});
    const Ab1 a = ab1_pieces(prec);
    const QDiffOperator delta_form = qeuler2a_operator(a);
    const QDiffOperator sigma_form = euler2l_operator(a);
    const long top = std::max(delta_form.order(), sigma_form.order());
    for (long k = 0; k <= top; ++k) {
        compare_into(r, delta_form.coefficient(k), sigma_form.coefficient(k), "coefficient of sigma^" + std::to_string(k));
    }
    return r;
}

// Exact element of Q(x) (stored as a QRational in its indeterminate) expanded
// at x = 0 modulo x^prec.
LaurentSeries rational_function_series(const QRational& fx, long prec) {
    auto poly_series = [](const QPolynomial& p) {
        std::vector<QRational> c;
        for (const auto& v : p.coefficients()) {
            c.emplace_back(v);
        }
        return LaurentSeries::from_coefficients(0, std::move(c));
    };
    return expand_rational(poly_series(fx.num()), poly_series(fx.den()), prec);
}

// Classical Euler series sum (-1)^n n! x^(n+1), modulo x^prec.
LaurentSeries classical_euler_series(long prec) {
    std::vector<QRational> c;
    mpz_class fact = 1;
    for (long n = 0; n + 1 < prec; ++n) {
        if (n > 0) {
            fact *= n;
        }
        c.emplace_back(mpq_class(n % 2 == 0 ? fact : mpz_class(-fact)));
    }
    return LaurentSeries::from_coefficients(1, std::move(c), prec);
}

// (a delta + b) applied to y, delta = x d/dx.
LaurentSeries apply_delta_factor(const LaurentSeries& a, const LaurentSeries& b, const LaurentSeries& y) {
    return a * y.euler_delta() + b * y;
}

VerificationReport verify_eqeuler2a_limit(long prec) {
    VerificationReport r = start("eqEuler2a-limit", {{"prec", std::to_string(prec)}});
    // Y = E(x)^2 has valuation 2; each 1/x factor costs one exponent of window.
    const LaurentSeries e = classical_euler_series(prec);
    const LaurentSeries y = e * e;
    const LaurentSeries inv_x = LaurentSeries::x_power(-1);

    // Classical form (delta + 1/x)(delta + 2/x) Y = 2.
    const LaurentSeries one = LaurentSeries::constant(1);
    const LaurentSeries classical =
        apply_delta_factor(one, inv_x, apply_delta_factor(one, inv_x.scaled(QRational(2)), y));
    compare_into(r, classical, LaurentSeries::constant(2), "classical form");

    // The coefficient functions of the delta_q form, specialized at q = 1 as
    // elements of Q(x): the pole of alpha = x/(q-1-x) cancels there.
    const mpq_class r1 = 1;
    const QPolynomial x_poly = QPolynomial::monomial(1, 1);
    const QPolynomial den_poly = QPolynomial(r1 - 1) - x_poly;
    const QRational alpha1(x_poly, den_poly);
    const QRational u1(QPolynomial(1), den_poly);
    const QRational w1 = u1 - QRational(QPolynomial(1), x_poly);
    const QRational rhs1 = alpha1 * (alpha1 - QRational(1));
    const long p = prec;
    const LaurentSeries a_s = rational_function_series(alpha1, p);
    const LaurentSeries u_s = rational_function_series(u1, p);
    const LaurentSeries w_s = rational_function_series(w1, p);
    const LaurentSeries specialized = apply_delta_factor(a_s, u_s, apply_delta_factor(a_s, w_s, y));
    compare_into(r, specialized, rational_function_series(rhs1, p), "q=1 specialization of the delta_q form");

    // E(x;q) tends to E(x) coefficient-wise.
    compare_into(r, euler_hat_xq(prec).specialize_q(r1), e, "E(x;q) at q=1");

    // The series expansion of alpha itself does not survive q = 1.
    try {
        (void)ab1_alpha(std::min(prec, 8L)).specialize_q(r1);
    } catch (const pole_at_specialization& err) {
        r.notes.push_back("series coefficients of alpha skipped: PoleAtSpecialization at x^" +
                          std::to_string(err.exponent()));
    }
    return r;
}

VerificationReport verify_q1_product(unsigned n) {
    VerificationReport r = start("q1-product", {{"n", std::to_string(n)}});
    const std::vector<LaurentSeries> pk = build_beta_sequence(LaurentSeries::x_power(1), LaurentSeries::constant(1), n);
    // Q(x) realized as Q(t): the same canonical rational-function arithmetic.
    QRational lhs(1);
    for (unsigned k = 1; k <= n; ++k) {
        const LaurentSeries at_one = pk[k].specialize_q(1);
        std::vector<mpq_class> den(static_cast<std::size_t>(at_one.end()), 0);
        for (long e = at_one.offset(); e < at_one.end(); ++e) {
            den[static_cast<std::size_t>(e)] = at_one.coefficient(e).num().coefficient(0);
        }
        std::vector<mpq_class> num(k + 1, 0);
        num[k] = 1;
        num[0] = k % 2 == 0 ? -1 : 1;
        lhs *= QRational(QPolynomial::from_coefficients(num), QPolynomial::from_coefficients(den));
    }
    QPolynomial rhs_poly(1);
    for (unsigned i = 0; i < n; ++i) {
        rhs_poly *= QPolynomial::from_coefficients({1, 1});
    }
    const QRational rhs(rhs_poly * mpq_class(tower_constant_sign(n)));
    mark_exact_window(r, 0, kInfinity);
    if (!(lhs == rhs)) {
        fail_with(r, 0, lhs - rhs, "rational functions differ");
    }
    return r;
}

bool known_nonzero(const LaurentSeries& s) {
    return !s.coefficients().empty();
}

VerificationReport verify_prop_ab(const LaurentSeries& alpha, const LaurentSeries& beta, unsigned n,
                                  std::map<std::string, std::string> params) {
    VerificationReport r = start("prop-ab", std::move(params));
    const std::vector<LaurentSeries> seq = build_beta_sequence(alpha, beta, n);
    bool nonzero = true;
    for (unsigned j = 1; j <= n; ++j) {
        nonzero = nonzero && known_nonzero(seq[j]);
    }
    bool distinct = true;
    for (unsigned j = 0; j <= n; ++j) {
        for (unsigned l = 0; l < j; ++l) {
            distinct = distinct && known_nonzero(seq[j] - seq[l]);
        }
    }
    long hi = kInfinity;
    for (const auto& s : seq) {
        hi = std::min(hi, s.precision());
    }
    mark_exact_window(r, 0, hi);
    r.notes.push_back(std::string("condition (1) nonzero: ") + (nonzero ? "true" : "false"));
    r.notes.push_back(std::string("condition (2) distinct: ") + (distinct ? "true" : "false"));
    if (nonzero != distinct) {
        fail_with(r, 0, QRational(), "conditions disagree");
    } else if (!alpha.is_canonical_zero() && !alpha.coefficients().empty() && alpha.valuation() != 0 && !nonzero) {
        fail_with(r, 0, QRational(), "valuation(alpha) != 0 but the conditions fail");
    }
    return r;
}

VerificationReport verify_betajk(const LaurentSeries& alpha, const LaurentSeries& beta, unsigned n,
                                 std::map<std::string, std::string> params) {
    VerificationReport r = start("betajk", std::move(params));
    const std::vector<LaurentSeries> seq = build_beta_sequence(alpha, beta, n);
    for (unsigned j = 1; j <= n; ++j) {
        for (unsigned l = 0; l < j; ++l) {
            LaurentSeries t = seq[j - l];
            for (unsigned i = 0; i < l; ++i) {
                t = -(alpha * t.shift_sigma(0, 1));
            }
            compare_into(r, seq[j] - seq[l], t, "j=" + std::to_string(j) + " l=" + std::to_string(l));
        }
    }
    return r;
}

VerificationReport verify_pmn(const LaurentSeries& p, unsigned n, std::map<std::string, std::string> params) {
    VerificationReport r = start("Pmn", std::move(params));
    const std::vector<LaurentSeries> seq = build_beta_sequence(LaurentSeries::x_power(1), p, n);
    const long nu = p.valuation();
    const QRational c = p.leading_coefficient();
    long hi = kInfinity;
    for (unsigned m = 1; m <= n && r.status == Status::pass; ++m) {
        for (unsigned k = 0; k < m; ++k) {
            const LaurentSeries d = seq[m] - seq[k];
            hi = std::min(hi, d.precision());
            const long expected_val = nu + static_cast<long>(k);
            QRational expected = c.times_q_power(static_cast<long>(k) * nu + static_cast<long>(k) * (k - 1) / 2);
            if (k % 2 == 1) {
                expected = -expected;
            }
            if (d.coefficients().empty() || d.offset() != expected_val) {
                fail_with(r, d.offset(), d.coefficients().empty() ? QRational() : d.coefficients().front(),
                          "P_" + std::to_string(m) + " - P_" + std::to_string(k) + " has the wrong valuation");
                break;
            }
            if (!(d.coefficients().front() == expected)) {
                fail_with(r, expected_val, d.coefficients().front() - expected,
                          "P_" + std::to_string(m) + " - P_" + std::to_string(k) + " has the wrong leading term");
                break;
            }
        }
    }
    mark_exact_window(r, nu, hi);
    return r;
}

VerificationReport verify_summability(const OperatorTower& tower, std::map<std::string, std::string> params) {
    VerificationReport r = start("summability", std::move(params));
    const QDiffOperator cleared = tower.cleared_top();
    const NewtonPolygon np = newton_polygon(cleared);
    const SummabilityOrder order = summability_order(np);
    const std::vector<long> multiset = np.slope_multiset();
    std::ostringstream os;
    for (std::size_t i = 0; i < multiset.size(); ++i) {
        os << (i ? "," : "") << multiset[i];
    }
    r.notes.push_back("slopes: " + os.str());
    mark_exact_window(r, 0, 0);
    for (const auto& [k, a] : cleared.terms()) {
        r.window_hi = std::max(r.window_hi, a.precision());
        r.evidence.push_back(a);
    }
    std::vector<long> expected;
    for (long i = 1; i <= static_cast<long>(tower.n()); ++i) {
        expected.push_back(i);
    }
    if (multiset != expected) {
        long i = 0;
        while (i < static_cast<long>(std::min(multiset.size(), expected.size())) &&
               multiset[static_cast<std::size_t>(i)] == expected[static_cast<std::size_t>(i)]) {
            ++i;
        }
        fail_with(r, i, QRational(i < static_cast<long>(multiset.size()) ? multiset[static_cast<std::size_t>(i)] : 0),
                  "slope multiset differs from 1..n");
    } else if (order.kind != SummabilityOrder::Kind::summable || order.levels != expected) {
        fail_with(r, 0, QRational(), "summability levels differ from (1, ..., n)");
    }
    return r;
}

} // namespace

const std::vector<std::string>& catalog_ids() {
    static const std::vector<std::string> ids = {
        "Euler",  "E2",       "fn",       "Lnkf",     "Faj",    "abfn",   "Eulern",         "Eulerq",
        "Euler2La", "qEuler2a", "qEuler2a-operator", "q1-product", "eqEuler2a-limit", "prop-ab", "betajk",
        "Pmn",    "summability"};
    return ids;
}

VerificationReport verify_catalog(const std::string& identity_id, const CatalogParams& params, long prec) {
    const auto& ids = catalog_ids();
    if (std::find(ids.begin(), ids.end(), identity_id) == ids.end()) {
        throw unknown_identity(identity_id);
    }
    const Resolved base = resolve(params, prec);
    const std::string sprec = std::to_string(prec);

    if (identity_id == "Euler") {
        return verify_euler(prec);
    }
    if (identity_id == "E2") {
        return verify_e2(prec);
    }
    if (identity_id == "fn") {
        VerificationReport r = verify_thm_fn(base.p, need_n(params, 2), prec);
        r.params["P"] = base.p_desc;
        return r;
    }
    if (identity_id == "Lnkf") {
        const unsigned n = need_n(params, 2);
        const unsigned k = params.k.value_or(n);
        VerificationReport r = verify_lemma_akj(base.p, n, k, prec);
        r.params["P"] = base.p_desc;
        return r;
    }
    if (identity_id == "Faj") {
        if (params.nodes) {
            return verify_lagrange(*params.nodes);
        }
        const unsigned n = need_n(params, 3, 0);
        std::vector<QRational> nodes{QRational()};
        for (unsigned i = 0; i < n; ++i) {
            nodes.push_back(QRational::q_power(i));
        }
        return verify_lagrange(nodes);
    }
    if (identity_id == "abfn") {
        VerificationReport r = verify_thm_gen(base.alpha, base.beta, need_n(params, 2), prec);
        r.params["alpha,beta"] = base.ab_desc;
        return r;
    }
    if (identity_id == "Eulern") {
        return verify_eulern(need_n(params, 2), prec);
    }
    if (identity_id == "Eulerq") {
        return verify_eulerq(prec);
    }
    if (identity_id == "Euler2La") {
        return verify_euler2la(prec);
    }
    if (identity_id == "qEuler2a") {
        return verify_qeuler2a(prec);
    }
    if (identity_id == "qEuler2a-operator") {
        return verify_qeuler2a_operator(prec);
    }
    if (identity_id == "q1-product") {
        return verify_q1_product(need_n(params, 2));
    }
    if (identity_id == "eqEuler2a-limit") {
        return verify_eqeuler2a_limit(prec);
    }
    if (identity_id == "prop-ab") {
        const unsigned n = need_n(params, 3);
        return verify_prop_ab(base.alpha, base.beta, n,
                              {{"n", std::to_string(n)}, {"prec", sprec}, {"alpha,beta", base.ab_desc}});
    }
    if (identity_id == "betajk") {
        const unsigned n = need_n(params, 3);
        return verify_betajk(base.alpha, base.beta, n,
                             {{"n", std::to_string(n)}, {"prec", sprec}, {"alpha,beta", base.ab_desc}});
    }
    if (identity_id == "Pmn") {
        const unsigned n = need_n(params, 5);
        return verify_pmn(base.p, n, {{"n", std::to_string(n)}, {"prec", sprec}, {"P", base.p_desc}});
    }
    // summability: the P-tower unless alpha/beta were supplied or p_name is "eq-ab1".
    const unsigned n = need_n(params, 2);
    const bool general = params.alpha.has_value() || params.p_name == "eq-ab1";
    if (general) {
        return verify_summability(build_tower_general(base.alpha, base.beta, n, prec),
                                  {{"n", std::to_string(n)}, {"prec", sprec}, {"alpha,beta", base.ab_desc}});
    }
    return verify_summability(build_tower(base.p, n, prec),
                              {{"n", std::to_string(n)}, {"prec", sprec}, {"P", base.p_desc}});
}

std::vector<CatalogEntry> default_catalog_grid() {
    std::vector<CatalogEntry> grid;
    auto with_n = [](unsigned n) {
        CatalogParams p;
        p.n = n;
        return p;
    };
    grid.push_back({"Euler", {}});
    grid.push_back({"E2", {}});
    for (const char* name : {"one", "one-plus-x", "one-minus-x-plus-x2"}) {
        for (unsigned n = 1; n <= 5; ++n) {
            CatalogParams p = with_n(n);
            p.p_name = name;
            grid.push_back({"fn", p});
        }
    }
    for (unsigned n = 1; n <= 5; ++n) {
        for (unsigned k = 1; k <= n; ++k) {
            CatalogParams p = with_n(n);
            p.k = k;
            grid.push_back({"Lnkf", p});
        }
    }
    for (unsigned n = 0; n <= 5; ++n) {
        grid.push_back({"Faj", with_n(n)});
    }
    for (unsigned n = 1; n <= 4; ++n) {
        grid.push_back({"abfn", with_n(n)});
    }
    for (unsigned n = 2; n <= 5; ++n) {
        grid.push_back({"Eulern", with_n(n)});
    }
    grid.push_back({"Eulerq", {}});
    grid.push_back({"Euler2La", {}});
    grid.push_back({"qEuler2a", {}});
    grid.push_back({"qEuler2a-operator", {}});
    for (unsigned n = 1; n <= 5; ++n) {
        grid.push_back({"q1-product", with_n(n)});
    }
    grid.push_back({"eqEuler2a-limit", {}});
    grid.push_back({"prop-ab", with_n(5)});
    grid.push_back({"betajk", with_n(5)});
    grid.push_back({"Pmn", with_n(5)});
    for (unsigned n = 1; n <= 5; ++n) {
        grid.push_back({"summability", with_n(n)});
    }
    for (unsigned n = 1; n <= 3; ++n) {
        CatalogParams p = with_n(n);
        p.p_name = "eq-ab1";
        grid.push_back({"summability", p});
    }
    return grid;
}

std::vector<VerificationReport> verify_all(long prec) {
    std::vector<VerificationReport> out;
    for (const auto& entry : default_catalog_grid()) {
        try {
            out.push_back(verify_catalog(entry.id, entry.params, prec));
        } catch (const math_error& err) {
            VerificationReport r;
            r.id = entry.id;
            r.status = Status::error;
            r.notes.push_back(err.what());
            out.push_back(std::move(r));
        }
    }
    const auto& ids = catalog_ids();
    auto rank = [&](const std::string& id) { return std::find(ids.begin(), ids.end(), id) - ids.begin(); };
    std::stable_sort(out.begin(), out.end(),
                     [&](const VerificationReport& a, const VerificationReport& b) { return rank(a.id) < rank(b.id); });
    return out;
}

} // namespace qeuler
