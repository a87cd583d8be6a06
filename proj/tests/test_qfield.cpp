#include <doctest.h>

#include "oracles.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/qfield.hpp"

using namespace qeuler;

namespace {

QPolynomial poly(std::initializer_list<long> c) {
    std::vector<mpq_class> v;
    for (long x : c) {
        v.emplace_back(x);
    }
    return QPolynomial::from_coefficients(v);
}

const QRational q = QRational::q();

} // namespace

TEST_CASE("like terms add") {
    CHECK(q + q == QRational(poly({0, 2})));
}

TEST_CASE("(1 - q^2) / (1 - q) reduces to 1 + q") {
    const QRational a(poly({1, 0, -1}));
    const QRational b(poly({1, -1}));
    const QRational r = a / b;
    CHECK(r.num() == poly({1, 1}));
    CHECK(r.den().is_one());
    // Oracle: evaluate both sides away from the pole.
    for (long t : {2, 3, -5, 7}) {
        CHECK(r.evaluate(t) == a.evaluate(t) / b.evaluate(t));
    }
    CHECK(r.evaluate(1) == 2);
}

TEST_CASE("q/(q-1) - 1/(q-1) = 1") {
    const QPolynomial d = poly({-1, 1});
    CHECK(QRational(poly({0, 1}), d) - QRational(QPolynomial(1), d) == QRational(1));
}

TEST_CASE("canonical form: monic denominator, sign on the numerator, content removed") {
    const QRational r(poly({2, 2}), poly({-4, 0, 4}));
    // (2 + 2q) / (4q^2 - 4) = (1/2) / (q - 1)
    CHECK(r.den() == poly({-1, 1}));
    CHECK(r.num() == QPolynomial(mpq_class(1, 2)));
    const QRational s(poly({1}), poly({3, -6}));
    CHECK(s.den().leading() == 1);
    CHECK(s.num().leading() < 0);
}

TEST_CASE("evaluation and poles") {
    CHECK(QRational::q_power(3).evaluate(2) == 8);
    CHECK(QRational::q_power(-2).evaluate(mpq_class(1, 3)) == 9);
    const QRational pole(QPolynomial(1), poly({-1, 1}));
    CHECK_THROWS_AS(pole.evaluate(1), pole_at_specialization);
}

TEST_CASE("division by zero") {
    CHECK_THROWS_AS(q / QRational(), division_by_zero);
    CHECK_THROWS_AS(QRational().inverse(), division_by_zero);
    CHECK_THROWS_AS(QRational(QPolynomial(1), QPolynomial()), division_by_zero);
}

TEST_CASE("times_q_power matches multiplication by q^e") {
    oracle::Gen g(5);
    for (int i = 0; i < 50; ++i) {
        const QRational a = g.qrational(3);
        const long e = g.integer(-4, 4);
        CHECK(a.times_q_power(e) == a * QRational::q_power(e));
    }
}

TEST_CASE("gcd and exact division") {
    const QPolynomial a = poly({-1, 0, 1});    // (q-1)(q+1)
    const QPolynomial b = poly({1, 2, 1});     // (q+1)^2
    CHECK(QPolynomial::gcd(a, b) == poly({1, 1}));
    CHECK(QPolynomial::gcd(a, QPolynomial()) == a.monic());
    CHECK(QPolynomial::gcd(QPolynomial(), QPolynomial()).is_zero());
    CHECK(QPolynomial::divexact(a * b, b) == a);
    const auto [quo, rem] = QPolynomial::divrem(poly({1, 0, 0, 1}), poly({1, 1}));
    CHECK(quo == poly({1, -1, 1}));
    CHECK(rem.is_zero());
}

TEST_CASE("gcd is a common divisor and reduces the cofactors to coprime ones") {
    oracle::Gen g(17);
    for (int i = 0; i < 40; ++i) {
        const QPolynomial c = g.poly(2);
        const QPolynomial a = g.poly(3) * c;
        const QPolynomial b = g.poly(3) * c;
        if (a.is_zero() || b.is_zero()) {
            continue;
        }
        const QPolynomial d = QPolynomial::gcd(a, b);
        CHECK(QPolynomial::divrem(a, d).second.is_zero());
        CHECK(QPolynomial::divrem(b, d).second.is_zero());
        CHECK(QPolynomial::gcd(QPolynomial::divexact(a, d), QPolynomial::divexact(b, d)).is_one());
    }
}

TEST_CASE("large products agree with a sparse schoolbook oracle") {
    // Operands with at least 24 nonzero terms take the packed-integer path.
    oracle::Gen g(99);
    for (int round = 0; round < 20; ++round) {
        oracle::SparsePoly sa, sb;
        std::vector<mpz_class> na, nb;
        const long da = g.integer(30, 120), db = g.integer(30, 120);
        for (long i = 0; i <= da; ++i) {
            mpz_class v = g.integer(-1000000, 1000000);
            if (round % 3 == 0) {
                v *= mpz_class("123456789012345678901234567890");
            }
            na.push_back(v);
            if (v != 0) {
                sa[i] = v;
            }
        }
        for (long i = 0; i <= db; ++i) {
            const mpz_class v = g.integer(-3, 3);
            nb.push_back(v);
            if (v != 0) {
                sb[i] = v;
            }
        }
        if (nb.back() == 0) {
            nb.back() = 1;
            sb[db] = 1;
        }
        if (na.back() == 0) {
            na.back() = 5;
            sa[da] = 5;
        }
        const QPolynomial pa = QPolynomial::from_integers(na);
        const QPolynomial pb = QPolynomial::from_integers(nb);
        CHECK(QRational(pa * pb) == oracle::to_qrational(oracle::multiply(sa, sb)));
    }
}

TEST_CASE("sums of products accumulate exactly") {
    oracle::Gen g(3);
    for (int i = 0; i < 30; ++i) {
        QRationalSum acc;
        QRational naive;
        for (int j = 0; j < 5; ++j) {
            const QRational a = g.qrational(), b = g.qrational();
            if (j % 2 == 0) {
                acc.add_product(a, b);
                naive += a * b;
            } else {
                acc.sub_product(a, b);
                naive -= a * b;
            }
        }
        CHECK(acc.result() == naive);
    }
}

TEST_CASE("string forms") {
    CHECK(QRational().to_string() == "0");
    CHECK(QPolynomial::from_coefficients({1, mpq_class(-1, 2), 3}).to_string() == "3*q^2 - 1/2*q + 1");
    CHECK(QRational(QPolynomial(1), poly({-1, 1})).to_string() == "(1)/(q - 1)");
}
