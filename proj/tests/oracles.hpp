#pragma once

// Independent reference computations for the tests. Nothing here goes through
// QPolynomial multiplication or LaurentSeries arithmetic: polynomials in q are
// sparse maps of integers, and polygons are checked by exhaustive search.

#include <map>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "qeuler/newton.hpp"
#include "qeuler/qfield.hpp"
#include "qeuler/series.hpp"

namespace oracle {

using SparsePoly = std::map<long, mpz_class>;

inline void add_term(SparsePoly& p, long e, const mpz_class& c) {
    mpz_class& slot = p[e];
    slot += c;
    if (slot == 0) {
        p.erase(e);
    }
}

inline SparsePoly multiply(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            add_term(out, ea + eb, ca * cb);
        }
    }
    return out;
}

// Converts an integer polynomial in q to the library type through its
// coefficient list only.
inline qeuler::QRational to_qrational(const SparsePoly& p) {
    if (p.empty()) {
        return qeuler::QRational();
    }
    std::vector<mpq_class> c(static_cast<std::size_t>(p.rbegin()->first + 1), 0);
    for (const auto& [e, v] : p) {
        c[static_cast<std::size_t>(e)] = mpq_class(v);
    }
    return qeuler::QRational(qeuler::QPolynomial::from_coefficients(c));
}

// Coefficients of x^0..x^(prec-1) in (sum_m (-1)^m q^(m(m-1)/2) x^m)^n by
// naive convolution on sparse polynomials.
inline std::vector<SparsePoly> euler_q_power(unsigned n, long prec) {
    std::vector<SparsePoly> base(static_cast<std::size_t>(prec));
    for (long m = 0; m < prec; ++m) {
        base[static_cast<std::size_t>(m)][m * (m - 1) / 2] = (m % 2 == 0) ? 1 : -1;
    }
    std::vector<SparsePoly> acc(static_cast<std::size_t>(prec));
    acc[0][0] = 1;
    for (unsigned i = 0; i < n; ++i) {
        std::vector<SparsePoly> next(static_cast<std::size_t>(prec));
        for (long a = 0; a < prec; ++a) {
            for (long b = 0; a + b < prec; ++b) {
                for (const auto& [e, c] : multiply(acc[static_cast<std::size_t>(a)], base[static_cast<std::size_t>(b)])) {
                    add_term(next[static_cast<std::size_t>(a + b)], e, c);
                }
            }
        }
        acc = std::move(next);
    }
    return acc;
}

// [n]_q! = prod_{i=1..n} (1 + q + ... + q^(i-1)).
inline SparsePoly q_factorial(unsigned n) {
    SparsePoly acc{{0, 1}};
    for (unsigned i = 1; i <= n; ++i) {
        SparsePoly qi;
        for (unsigned e = 0; e < i; ++e) {
            qi[e] = 1;
        }
        acc = multiply(acc, qi);
    }
    return acc;
}

// P_n from the closed form sum_{k<n} (-x)^k q^(k(k-1)/2) sigma^k P, with P a
// polynomial in x given by rational coefficients p[0], p[1], ...
// Result: coefficient of x^e as a map q-exponent -> rational.
inline std::map<long, std::map<long, mpq_class>> pn_closed_form(const std::vector<mpq_class>& p, unsigned n) {
    std::map<long, std::map<long, mpq_class>> out;
    for (unsigned k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] == 0) {
                continue;
            }
            const long xe = static_cast<long>(k + i);
            const long qe = static_cast<long>(k) * (k - 1) / 2 + static_cast<long>(k * i);
            mpq_class c = p[i];
            if (k % 2 == 1) {
                c = -c;
            }
            mpq_class& slot = out[xe][qe];
            slot += c;
            if (slot == 0) {
                out[xe].erase(qe);
                if (out[xe].empty()) {
                    out.erase(xe);
                }
            }
        }
    }
    return out;
}

inline qeuler::QRational from_exponent_map(const std::map<long, mpq_class>& m) {
    if (m.empty()) {
        return qeuler::QRational();
    }
    std::vector<mpq_class> c(static_cast<std::size_t>(m.rbegin()->first + 1), 0);
    for (const auto& [e, v] : m) {
        c[static_cast<std::size_t>(e)] = v;
    }
    return qeuler::QRational(qeuler::QPolynomial::from_coefficients(c));
}

// Lower hull vertices by brute force: a column minimum is a vertex iff it lies
// strictly below every chord joining column minima on either side of it.
inline std::vector<qeuler::LatticePoint> brute_force_lower_hull(const std::vector<qeuler::LatticePoint>& pts) {
    std::map<long, long> low;
    for (const auto& p : pts) {
        auto it = low.find(p.k);
        if (it == low.end() || p.m < it->second) {
            low[p.k] = p.m;
        }
    }
    std::vector<qeuler::LatticePoint> cols;
    for (const auto& [k, m] : low) {
        cols.push_back({k, m});
    }
    std::vector<qeuler::LatticePoint> hull;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        bool vertex = true;
        for (std::size_t a = 0; a < i && vertex; ++a) {
            for (std::size_t b = i + 1; b < cols.size() && vertex; ++b) {
                const long lhs = cols[i].m * (cols[b].k - cols[a].k);
                const long rhs = cols[a].m * (cols[b].k - cols[i].k) + cols[b].m * (cols[i].k - cols[a].k);
                if (lhs >= rhs) {
                    vertex = false;
                }
            }
        }
        if (vertex) {
            hull.push_back(cols[i]);
        }
    }
    return hull;
}

// Random small elements of Q(q) and truncated series.
class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    mpq_class small_rational() {
        mpq_class r(integer(-9, 9), integer(1, 4));
        r.canonicalize();
        return r;
    }

    qeuler::QPolynomial poly(long max_degree) {
        std::vector<mpq_class> c;
        const long d = integer(0, max_degree);
        for (long i = 0; i <= d; ++i) {
            c.push_back(integer(0, 2) == 0 ? mpq_class(0) : small_rational());
        }
        return qeuler::QPolynomial::from_coefficients(c);
    }

    qeuler::QRational qrational(long max_degree = 2) {
        qeuler::QPolynomial den = poly(max_degree);
        while (den.is_zero()) {
            den = poly(max_degree);
        }
        return {poly(max_degree), den};
    }

    qeuler::QRational nonzero_qrational(long max_degree = 2) {
        qeuler::QRational r = qrational(max_degree);
        while (r.is_zero()) {
            r = qrational(max_degree);
        }
        return r;
    }

    // Series with valuation in [lo_val, hi_val], `terms` stored coefficients
    // and either exact or O(x^(end + extra)).
    qeuler::LaurentSeries series(long lo_val, long hi_val, long terms, bool exact) {
        const long v = integer(lo_val, hi_val);
        std::vector<qeuler::QRational> c;
        c.push_back(nonzero_qrational(1));
        for (long i = 1; i < terms; ++i) {
            c.push_back(integer(0, 3) == 0 ? qeuler::QRational() : qrational(1));
        }
        const long prec = exact ? qeuler::kInfinity : v + terms + integer(0, 2);
        return qeuler::LaurentSeries::from_coefficients(v, std::move(c), prec);
    }

private:
    std::mt19937 rng_;
};

} // namespace oracle
