// Runs every acceptance criterion at tolerance zero and prints one line each.
// Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "property_suites.hpp"
#include "qeuler/constructions.hpp"
#include "qeuler/newton.hpp"
#include "qeuler/verify.hpp"

using namespace qeuler;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            detail << what;
        }
        ok = ok && cond;
    }
    void report(const VerificationReport& r, const std::string& label, long min_hi = 0, long lo = 0) {
        std::string what = label + ": " + to_string(r.status);
        if (r.witness) {
            what += " at x^" + std::to_string(r.witness->exponent) + " residual " + r.witness->value.to_string();
        }
        require(r.passed(), what);
        require(r.window_lo <= lo && r.window_hi >= min_hi,
                label + ": window [" + std::to_string(r.window_lo) + ", " + std::to_string(r.window_hi) +
                    ") does not cover [" + std::to_string(lo) + ", " + std::to_string(min_hi) + ")");
    }
};

struct Criterion {
    int number;
    std::string title;
    double budget_seconds;
    std::function<void(Check&)> body;
};

void criterion_euler(Check& c) {
    c.report(verify_catalog("Euler", {}, 64), "Euler prec 64", 64);
}

void criterion_e2(Check& c) {
    c.report(verify_catalog("E2", {}, 64), "E2 prec 64", 64);
}

void criterion_thm_fn(Check& c) {
    for (const char* name : {"one", "one-plus-x", "one-minus-x-plus-x2"}) {
        for (unsigned n = 1; n <= 6; ++n) {
            const VerificationReport r = verify_thm_fn(named_base_series(name), n, 48);
            c.report(r, std::string("fn P=") + name + " n=" + std::to_string(n), 48);
        }
    }
}

void criterion_lemma(Check& c) {
    const LaurentSeries one = LaurentSeries::constant(1);
    for (unsigned n = 2; n <= 5; ++n) {
        for (unsigned k = 1; k <= n; ++k) {
            const VerificationReport r = verify_lemma_akj(one, n, k, 40);
            c.report(r, "Lnkf n=" + std::to_string(n) + " k=" + std::to_string(k), 30);
        }
    }
}

void criterion_lagrange(Check& c) {
    oracle::Gen g(2024);
    int tuples = 0;
    while (tuples < 50) {
        const auto n = static_cast<unsigned>(g.integer(0, 6));
        std::vector<QRational> nodes;
        while (nodes.size() < n + 1) {
            const QRational a = g.qrational(2);
            if (std::find(nodes.begin(), nodes.end(), a) == nodes.end()) {
                nodes.push_back(a);
            }
        }
        ++tuples;
        const QRational expected(n % 2 == 0 ? 1 : -1);
        const VerificationReport r = verify_lagrange(nodes);
        c.report(r, "Faj tuple " + std::to_string(tuples), static_cast<long>(n) + 1);
        const TPolynomial<QRational> t = lagrange_sum(nodes);
        c.require(t.coeffs.size() == 1 && t.coeffs[0] == expected,
                  "Faj tuple " + std::to_string(tuples) + ": expansion is not the constant (-1)^n");
        // Independent oracle: evaluate the sum at a random T in Q(q) with
        // plain field arithmetic.
        const QRational t0 = g.qrational(1);
        QRational sum;
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            QRational a(1);
            for (std::size_t l = 0; l < nodes.size(); ++l) {
                if (l != j) {
                    a *= nodes[j] - nodes[l];
                }
            }
            QRational term(1);
            for (unsigned e = 0; e < n; ++e) {
                term *= t0 - nodes[j];
            }
            sum += term / a;
        }
        c.require(sum == expected, "Faj tuple " + std::to_string(tuples) + ": evaluation oracle disagrees");
    }
}

void criterion_thm_gen(Check& c) {
    const LaurentSeries alpha = ab1_alpha(40);
    const LaurentSeries beta = ab1_beta(40);
    for (unsigned n = 1; n <= 4; ++n) {
        c.report(verify_thm_gen(alpha, beta, n, 40), "abfn n=" + std::to_string(n), 36);
    }
    c.report(verify_catalog("Eulerq", {}, 40), "Eulerq", 40, 1);
    c.report(verify_catalog("Euler2La", {}, 40), "Euler2La", 38, 1);
}

void criterion_delta_form(Check& c) {
    c.report(verify_catalog("qEuler2a", {}, 40), "qEuler2a applied", 38, 1);
    c.report(verify_catalog("qEuler2a-operator", {}, 40), "qEuler2a operator normal form", 36, -1);
}

void criterion_summability(Check& c) {
    auto check_tower = [&](const OperatorTower& tower, const std::string& label) {
        const NewtonPolygon np = newton_polygon(tower.cleared_top());
        std::vector<long> expected;
        for (long i = 1; i <= static_cast<long>(tower.n()); ++i) {
            expected.push_back(i);
        }
        c.require(np.slope_multiset() == expected, label + ": slope multiset");
        const SummabilityOrder order = summability_order(np);
        c.require(order.kind == SummabilityOrder::Kind::summable && order.levels == expected, label + ": levels");
    };
    for (unsigned n = 1; n <= 5; ++n) {
        check_tower(build_tower(LaurentSeries::constant(1), n, 32), "P=1 n=" + std::to_string(n));
        CatalogParams p;
        p.n = n;
        c.report(verify_catalog("summability", p, 32), "summability P=1 n=" + std::to_string(n));
    }
    for (unsigned n = 1; n <= 3; ++n) {
        check_tower(build_tower_general(ab1_alpha(32), ab1_beta(32), n, 32), "eq-ab1 n=" + std::to_string(n));
        CatalogParams p;
        p.n = n;
        p.p_name = "eq-ab1";
        c.report(verify_catalog("summability", p, 32), "summability eq-ab1 n=" + std::to_string(n));
    }
}

void criterion_q1_product(Check& c) {
    for (unsigned n = 1; n <= 8; ++n) {
        CatalogParams p;
        p.n = n;
        c.report(verify_catalog("q1-product", p, 32), "q1-product n=" + std::to_string(n));
    }
}

// Coefficients of a series over Q as plain rationals, for exponents [0, count).
std::vector<mpq_class> rational_coefficients(const LaurentSeries& s, long count) {
    std::vector<mpq_class> out;
    for (long e = 0; e < count; ++e) {
        const QRational c = s.coefficient(e);
        out.push_back(c.is_zero() ? mpq_class(0) : c.num().coefficient(0));
    }
    return out;
}

void criterion_q1_limits(Check& c) {
    const long terms = 12;
    std::vector<mpq_class> geometric;
    for (long e = 0; e < terms; ++e) {
        geometric.emplace_back(e % 2 == 0 ? 1 : -1);
    }
    c.require(rational_coefficients(euler_hat_q(terms).specialize_q(1), terms) == geometric,
              "E_q at q=1 is not 1/(1+x)");

    // Classical Euler series sum (-1)^n n! x^(n+1) on plain rationals.
    std::vector<mpq_class> euler(terms + 2, 0);
    mpz_class fact = 1;
    for (long n = 0; n + 1 < terms + 2; ++n) {
        if (n > 0) {
            fact *= n;
        }
        euler[static_cast<std::size_t>(n + 1)] = n % 2 == 0 ? mpq_class(fact) : mpq_class(-fact);
    }
    const std::vector<mpq_class> first(euler.begin(), euler.begin() + terms + 1);
    c.require(rational_coefficients(euler_hat_xq(terms + 1).specialize_q(1), terms + 1) == first,
              "E(x;q) at q=1 is not the classical Euler series");

    // (delta + 1/x)(delta + 2/x) applied term-wise to the square, on raw
    // coefficient vectors: (delta + c/x) maps a_m x^m to m a_m x^m + c a_m x^(m-1).
    const std::size_t len = euler.size();
    std::vector<mpq_class> y(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t j = 0; i + j < len; ++j) {
            y[i + j] += euler[i] * euler[j];
        }
    }
    auto apply = [&](const std::vector<mpq_class>& a, long cst) {
        std::vector<mpq_class> out(a.size(), 0);
        for (std::size_t m = 0; m < a.size(); ++m) {
            out[m] += static_cast<long>(m) * a[m];
            if (m > 0) {
                out[m - 1] += cst * a[m];
            }
        }
        return out;
    };
    // The top two coefficients are incomplete after two 1/x shifts.
    const std::vector<mpq_class> lhs = apply(apply(y, 2), 1);
    for (long e = 0; e < terms; ++e) {
        c.require(lhs[static_cast<std::size_t>(e)] == (e == 0 ? 2 : 0),
                  "classical (delta+1/x)(delta+2/x) E^2 differs from 2 at x^" + std::to_string(e));
    }
    c.report(verify_catalog("eqEuler2a-limit", {}, terms + 2), "eqEuler2a-limit", terms);
}

void criterion_properties(Check& c) {
    for (const props::Outcome& o : props::all_suites(200)) {
        c.require(o.cases == 200 && o.ok(), o.name + ": " + std::to_string(o.passed) + "/" +
                                                std::to_string(o.cases) + " " + o.first_failure);
    }
}

void criterion_precision_stability(Check& c) {
    const long base = 32;
    const std::vector<VerificationReport> low = verify_all(base);
    const std::vector<VerificationReport> high = verify_all(base + 16);
    c.require(low.size() == high.size(), "catalog sizes differ between precisions");
    for (std::size_t i = 0; i < std::min(low.size(), high.size()); ++i) {
        std::string label = low[i].id;
        for (const auto& [k, v] : low[i].params) {
            if (k != "prec") {
                label += " " + k + "=" + v;
            }
        }
        c.require(low[i].passed(), label + " fails at prec " + std::to_string(base));
        c.require(high[i].passed(), label + " fails at prec " + std::to_string(base + 16));
        c.require(high[i].window_hi >= low[i].window_hi, label + ": window shrank at higher precision");
        c.require(low[i].evidence.size() == high[i].evidence.size(), label + ": evidence count differs");
        for (std::size_t j = 0; j < std::min(low[i].evidence.size(), high[i].evidence.size()); ++j) {
            c.require(agree_on_overlap(low[i].evidence[j], high[i].evidence[j]),
                      label + ": computed side disagrees on the overlap");
        }
    }
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Euler base case to x^64", 1.0, criterion_euler},
        {2, "square identity to x^64", 1.0, criterion_e2},
        {3, "L_{n,n}(f^n) constant, 3 base series, n <= 6, prec 48", 30.0, criterion_thm_fn},
        {4, "stage-wise identity, P = 1, n = 2..5, all k, prec 40", 0, criterion_lemma},
        {5, "Lagrange sum on 50 random node tuples", 0, criterion_lagrange},
        {6, "general alpha/beta towers n = 1..4 with first- and second-order forms", 0, criterion_thm_gen},
        {7, "delta_q form applied and as operator normal form", 0, criterion_delta_form},
        {8, "summability orders (1..n)", 10.0, criterion_summability},
        {9, "q = 1 product identity n = 1..8", 0, criterion_q1_product},
        {10, "q -> 1 limits on 12 terms", 0, criterion_q1_limits},
        {11, "property suites, 200 cases each", 0, criterion_properties},
        {12, "precision stability of the whole catalog (prec 32 vs 48)", 0, criterion_precision_stability},
    };
    int failures = 0;
    for (const Criterion& cr : criteria) {
        Check check;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            cr.body(check);
        } catch (const std::exception& e) {
            check.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (cr.budget_seconds > 0) {
            check.require(secs < cr.budget_seconds, "runtime over budget");
        }
        std::printf("criterion %2d %s: %s (%.2f s)", cr.number, check.ok ? "PASS" : "FAIL", cr.title.c_str(), secs);
        if (!check.ok) {
            std::printf(" -- %s", check.detail.str().c_str());
            ++failures;
        }
        std::printf("\n");
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
