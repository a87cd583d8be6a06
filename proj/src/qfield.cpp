#include "qeuler/qfield.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "qeuler/errors.hpp"

namespace qeuler {

namespace {

using zvec = std::vector<mpz_class>;

void trim(zvec& v) {
    while (!v.empty() && v.back() == 0) {
        v.pop_back();
    }
}

mpz_class content(const zvec& v) {
    mpz_class g = 0;
    for (const auto& c : v) {
        if (c == 0) {
            continue;
        }
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) {
            break;
        }
    }
    return g;
}

// Primitive part with positive leading coefficient.
zvec primitive(zvec v) {
    trim(v);
    if (v.empty()) {
        return v;
    }
    mpz_class g = content(v);
    if (v.back() < 0) {
        g = -g;
    }
    if (g != 1) {
        for (auto& c : v) {
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        }
    }
    return v;
}

std::size_t max_bits(const zvec& v) {
    std::size_t b = 0;
    for (const auto& c : v) {
        if (c != 0) {
            b = std::max(b, mpz_sizeinbase(c.get_mpz_t(), 2));
        }
    }
    return b;
}

std::size_t count_nonzero(const zvec& v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const mpz_class& c) { return c != 0; }));
}

// Packs v into one integer with `limbs` limbs per coefficient (Kronecker
// substitution at 2^(64*limbs)).
mpz_class kronecker_pack(const zvec& v, std::size_t limbs) {
    std::vector<mp_limb_t> pos(v.size() * limbs, 0);
    std::vector<mp_limb_t> neg(v.size() * limbs, 0);
    bool any_neg = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const int s = sgn(v[i]);
        if (s == 0) {
            continue;
        }
        auto& dst = s > 0 ? pos : neg;
        any_neg = any_neg || s < 0;
        std::size_t count = 0;
        mpz_export(dst.data() + i * limbs, &count, -1, sizeof(mp_limb_t), 0, 0, v[i].get_mpz_t());
        assert(count <= limbs);
    }
    mpz_class x;
    mpz_import(x.get_mpz_t(), pos.size(), -1, sizeof(mp_limb_t), 0, 0, pos.data());
    if (any_neg) {
        mpz_class y;
        mpz_import(y.get_mpz_t(), neg.size(), -1, sizeof(mp_limb_t), 0, 0, neg.data());
        x -= y;
    }
    return x;
}

zvec kronecker_unpack(const mpz_class& z, std::size_t limbs, std::size_t n) {
    zvec out(n);
    const int sign = sgn(z);
    if (sign == 0) {
        return out;
    }
    mpz_class a = abs(z);
    std::size_t total = (mpz_sizeinbase(a.get_mpz_t(), 2) + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;
    std::vector<mp_limb_t> buf(std::max(total, n * limbs) + limbs, 0);
    std::size_t count = 0;
    mpz_export(buf.data(), &count, -1, sizeof(mp_limb_t), 0, 0, a.get_mpz_t());

    mpz_class half;
    mpz_class base;
    mpz_ui_pow_ui(base.get_mpz_t(), 2, GMP_NUMB_BITS * limbs);
    half = base / 2;
    mpz_class carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class d;
        mpz_import(d.get_mpz_t(), limbs, -1, sizeof(mp_limb_t), 0, 0, buf.data() + i * limbs);
        d += carry;
        if (d >= half) {
            d -= base;
            carry = 1;
        } else {
            carry = 0;
        }
        out[i] = sign > 0 ? d : mpz_class(-d);
    }
    return out;
}

void schoolbook_addmul(zvec& out, const zvec& a, const zvec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        const mpz_srcptr ai = a[i].get_mpz_t();
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] != 0) {
                mpz_addmul(out[i + j].get_mpz_t(), ai, b[j].get_mpz_t());
            }
        }
    }
}

constexpr std::size_t kKroneckerThreshold = 24;

// out += a * b; out is resized as needed. Inputs are trimmed.
void integer_addmul(zvec& out, const zvec& a, const zvec& b) {
    if (a.empty() || b.empty()) {
        return;
    }
    const std::size_t n = a.size() + b.size() - 1;
    if (out.size() < n) {
        out.resize(n);
    }
    const std::size_t dense = std::min(count_nonzero(a), count_nonzero(b));
    if (dense < kKroneckerThreshold) {
        schoolbook_addmul(out, a, b);
        return;
    }
    const std::size_t m = std::min(a.size(), b.size());
    const std::size_t bits = max_bits(a) + max_bits(b) + mpz_sizeinbase(mpz_class(m).get_mpz_t(), 2) + 2;
    const std::size_t limbs = (bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;
    const mpz_class prod = kronecker_pack(a, limbs) * kronecker_pack(b, limbs);
    zvec c = kronecker_unpack(prod, limbs, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (c[i] != 0) {
            out[i] += c[i];
        }
    }
}

zvec integer_mul(const zvec& a, const zvec& b) {
    zvec out;
    integer_addmul(out, a, b);
    trim(out);
    return out;
}

// Pseudo-remainder of a by b (both trimmed, b nonzero).
zvec pseudo_remainder(zvec r, const zvec& b) {
    const std::size_t db = b.size() - 1;
    const mpz_class& lb = b.back();
    mpz_class c;
    while (!r.empty() && r.size() - 1 >= db) {
        c = r.back();
        const std::size_t shift = r.size() - 1 - db;
        if (lb != 1) {
            for (auto& x : r) {
                x *= lb;
            }
        }
        for (std::size_t j = 0; j <= db; ++j) {
            mpz_submul(r[shift + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
        }
        assert(r.back() == 0);
        r.pop_back();
        trim(r);
    }
    return r;
}

zvec integer_gcd(zvec a, zvec b) {
    a = primitive(std::move(a));
    b = primitive(std::move(b));
    if (a.size() < b.size()) {
        std::swap(a, b);
    }
    while (!b.empty()) {
        if (b.size() == 1) {
            return {mpz_class(1)};
        }
        zvec r = primitive(pseudo_remainder(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Integer polynomial division a / g where g is primitive and divides a over Q.
zvec integer_divexact(const zvec& a, const zvec& g) {
    const std::size_t dg = g.size() - 1;
    if (a.size() < g.size()) {
        return {};
    }
    zvec r = a;
    zvec h(a.size() - dg);
    const mpz_class& lg = g.back();
    for (std::size_t i = h.size(); i-- > 0;) {
        mpz_class& top = r[i + dg];
        if (top == 0) {
            continue;
        }
        if (lg == 1) {
            h[i] = top;
        } else {
            mpz_divexact(h[i].get_mpz_t(), top.get_mpz_t(), lg.get_mpz_t());
        }
        const mpz_class coeff = h[i];
        for (std::size_t j = 0; j <= dg; ++j) {
            mpz_submul(r[i + j].get_mpz_t(), coeff.get_mpz_t(), g[j].get_mpz_t());
        }
    }
    trim(h);
    return h;
}

bool is_monomial(const QPolynomial& p) {
    return !p.is_zero() && p.trailing_zeros() == static_cast<std::size_t>(p.degree());
}

} // namespace

// ---------------------------------------------------------------------------
// QPolynomial

QPolynomial::QPolynomial(const mpq_class& c) {
    if (c != 0) {
        num_.push_back(c.get_num());
        den_ = c.get_den();
    }
}

QPolynomial QPolynomial::from_integers(std::vector<mpz_class> num, mpz_class den) {
    QPolynomial p;
    p.num_ = std::move(num);
    p.den_ = std::move(den);
    if (p.den_ < 0) {
        p.den_ = -p.den_;
        for (auto& c : p.num_) {
            c = -c;
        }
    }
    p.canonicalize();
    return p;
}

QPolynomial QPolynomial::from_coefficients(const std::vector<mpq_class>& coeffs) {
    mpz_class l = 1;
    for (const auto& c : coeffs) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    zvec num;
    num.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        num.push_back(c.get_num() * (l / c.get_den()));
    }
    return from_integers(std::move(num), l);
}

QPolynomial QPolynomial::monomial(const mpq_class& c, std::size_t degree) {
    QPolynomial p;
    if (c != 0) {
        p.num_.assign(degree + 1, 0);
        p.num_[degree] = c.get_num();
        p.den_ = c.get_den();
    }
    return p;
}

void QPolynomial::canonicalize() {
    trim(num_);
    if (num_.empty()) {
        den_ = 1;
        return;
    }
    if (den_ == 1) {
        return;
    }
    mpz_class g = content(num_);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        for (auto& c : num_) {
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        }
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

mpq_class QPolynomial::coefficient(std::size_t i) const {
    if (i >= num_.size()) {
        return 0;
    }
    mpq_class r(num_[i], den_);
    r.canonicalize();
    return r;
}

mpq_class QPolynomial::leading() const {
    return num_.empty() ? mpq_class(0) : coefficient(num_.size() - 1);
}

std::vector<mpq_class> QPolynomial::coefficients() const {
    std::vector<mpq_class> out;
    out.reserve(num_.size());
    for (std::size_t i = 0; i < num_.size(); ++i) {
        out.push_back(coefficient(i));
    }
    return out;
}

std::size_t QPolynomial::trailing_zeros() const noexcept {
    std::size_t i = 0;
    while (i < num_.size() && num_[i] == 0) {
        ++i;
    }
    return i == num_.size() ? 0 : i;
}

mpq_class QPolynomial::evaluate(const mpq_class& r) const {
    mpq_class acc = 0;
    for (std::size_t i = num_.size(); i-- > 0;) {
        acc = acc * r + num_[i];
    }
    acc /= den_;
    return acc;
}

QPolynomial QPolynomial::operator-() const {
    QPolynomial p = *this;
    for (auto& c : p.num_) {
        c = -c;
    }
    return p;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
    if (o.is_zero()) {
        return *this;
    }
    if (den_ == o.den_) {
        if (num_.size() < o.num_.size()) {
            num_.resize(o.num_.size());
        }
        for (std::size_t i = 0; i < o.num_.size(); ++i) {
            num_[i] += o.num_[i];
        }
    } else {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den_.get_mpz_t(), o.den_.get_mpz_t());
        const mpz_class sa = l / den_;
        const mpz_class sb = l / o.den_;
        if (num_.size() < o.num_.size()) {
            num_.resize(o.num_.size());
        }
        for (auto& c : num_) {
            c *= sa;
        }
        for (std::size_t i = 0; i < o.num_.size(); ++i) {
            mpz_addmul(num_[i].get_mpz_t(), o.num_[i].get_mpz_t(), sb.get_mpz_t());
        }
        den_ = l;
    }
    canonicalize();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
    return *this += -o;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    QPolynomial p;
    p.num_ = integer_mul(a.num_, b.num_);
    p.den_ = a.den_ * b.den_;
    p.canonicalize();
    return p;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& o) {
    *this = *this * o;
    return *this;
}

QPolynomial& QPolynomial::operator*=(const mpq_class& c) {
    if (c == 0) {
        num_.clear();
        den_ = 1;
        return *this;
    }
    if (c.get_num() != 1) {
        for (auto& x : num_) {
            x *= c.get_num();
        }
    }
    den_ *= c.get_den();
    canonicalize();
    return *this;
}

void QPolynomial::add_product(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        return;
    }
    if (den_ == 1 && a.den_ == 1 && b.den_ == 1) {
        integer_addmul(num_, a.num_, b.num_);
        trim(num_);
        return;
    }
    *this += a * b;
}

QPolynomial QPolynomial::shifted(std::size_t s) const {
    if (is_zero() || s == 0) {
        return *this;
    }
    QPolynomial p;
    p.num_.reserve(num_.size() + s);
    p.num_.assign(s, 0);
    p.num_.insert(p.num_.end(), num_.begin(), num_.end());
    p.den_ = den_;
    return p;
}

QPolynomial QPolynomial::unshifted(std::size_t s) const {
    if (is_zero() || s == 0) {
        return *this;
    }
    assert(trailing_zeros() >= s);
    QPolynomial p;
    p.num_.assign(num_.begin() + static_cast<long>(s), num_.end());
    p.den_ = den_;
    return p;
}

QPolynomial QPolynomial::monic() const {
    if (is_zero()) {
        return *this;
    }
    QPolynomial p;
    p.num_ = num_;
    p.den_ = num_.back();
    return from_integers(std::move(p.num_), p.den_);
}

QPolynomial QPolynomial::derivative() const {
    if (num_.size() <= 1) {
        return {};
    }
    zvec d(num_.size() - 1);
    for (std::size_t i = 1; i < num_.size(); ++i) {
        d[i - 1] = num_[i] * static_cast<unsigned long>(i);
    }
    return from_integers(std::move(d), den_);
}

std::pair<QPolynomial, QPolynomial> QPolynomial::divrem(const QPolynomial& a, const QPolynomial& b) {
    if (b.is_zero()) {
        throw division_by_zero();
    }
    std::vector<mpq_class> r = a.coefficients();
    const std::vector<mpq_class> bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    if (r.size() < bc.size()) {
        return {QPolynomial(), a};
    }
    std::vector<mpq_class> quot(r.size() - db);
    for (std::size_t i = quot.size(); i-- > 0;) {
        const mpq_class c = r[i + db] / bc.back();
        quot[i] = c;
        if (c == 0) {
            continue;
        }
        for (std::size_t j = 0; j <= db; ++j) {
            r[i + j] -= c * bc[j];
        }
    }
    r.resize(db);
    return {from_coefficients(quot), from_coefficients(r)};
}

QPolynomial QPolynomial::divexact(const QPolynomial& a, const QPolynomial& b) {
    if (b.is_zero()) {
        throw division_by_zero();
    }
    if (a.is_zero()) {
        return {};
    }
    // b = cb * G / den_b with G primitive, positive leading coefficient.
    mpz_class cb = content(b.num_);
    if (b.num_.back() < 0) {
        cb = -cb;
    }
    zvec g = b.num_;
    if (cb != 1) {
        for (auto& x : g) {
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), cb.get_mpz_t());
        }
    }
    QPolynomial h = from_integers(integer_divexact(a.num_, g), 1);
    mpq_class scale(b.den_, a.den_ * cb);
    scale.canonicalize();
    h *= scale;
    return h;
}

QPolynomial QPolynomial::gcd(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero()) {
        return b.monic();
    }
    if (b.is_zero()) {
        return a.monic();
    }
    if (a.is_constant() || b.is_constant()) {
        return QPolynomial(1);
    }
    if (is_monomial(a) || is_monomial(b)) {
        return monomial(1, std::min(a.trailing_zeros(), b.trailing_zeros()));
    }
    return from_integers(integer_gcd(a.num_, b.num_), 1).monic();
}

std::string QPolynomial::to_string(const char* var) const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = num_.size(); i-- > 0;) {
        mpq_class c = coefficient(i);
        if (c == 0) {
            continue;
        }
        if (first) {
            if (c < 0) {
                os << "-";
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        c = abs(c);
        first = false;
        if (i == 0) {
            os << c.get_str();
            continue;
        }
        if (c != 1) {
            os << c.get_str() << "*";
        }
        os << var;
        if (i > 1) {
            os << "^" << i;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// QRational

QRational::QRational(QPolynomial num, QPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

QRational QRational::q_power(long e) {
    if (e >= 0) {
        return QRational(QPolynomial::monomial(1, static_cast<std::size_t>(e)));
    }
    return QRational(QPolynomial(1), QPolynomial::monomial(1, static_cast<std::size_t>(-e)), unchecked_tag{});
}

void QRational::normalize() {
    if (den_.is_zero()) {
        throw division_by_zero();
    }
    if (num_.is_zero()) {
        den_ = QPolynomial(1);
        return;
    }
    if (den_.is_constant()) {
        if (!den_.is_one()) {
            num_ *= 1 / den_.coefficient(0);
            den_ = QPolynomial(1);
        }
        return;
    }
    if (!num_.is_constant()) {
        const QPolynomial g = QPolynomial::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = QPolynomial::divexact(num_, g);
            den_ = QPolynomial::divexact(den_, g);
        }
    }
    const mpq_class l = den_.leading();
    if (l != 1) {
        const mpq_class inv = 1 / l;
        num_ *= inv;
        den_ *= inv;
    }
}

QRational QRational::inverse() const {
    if (is_zero()) {
        throw division_by_zero();
    }
    return QRational(den_, num_);
}

QRational QRational::times_q_power(long e) const {
    if (e == 0 || is_zero()) {
        return *this;
    }
    // Powers of q only interact with the q-adic parts of num and den, so the
    // result is canonical without a gcd.
    if (e > 0) {
        const auto s = static_cast<std::size_t>(e);
        const std::size_t t = den_.is_one() ? 0 : den_.trailing_zeros();
        if (t == 0) {
            return QRational(num_.shifted(s), den_, unchecked_tag{});
        }
        if (s >= t) {
            return QRational(num_.shifted(s - t), den_.unshifted(t), unchecked_tag{});
        }
        return QRational(num_, den_.unshifted(s), unchecked_tag{});
    }
    const auto s = static_cast<std::size_t>(-e);
    const std::size_t t = num_.trailing_zeros();
    if (t >= s) {
        return QRational(num_.unshifted(s), den_, unchecked_tag{});
    }
    return QRational(num_.unshifted(t), den_.shifted(s - t), unchecked_tag{});
}

mpq_class QRational::evaluate(const mpq_class& r) const {
    const mpq_class d = den_.evaluate(r);
    if (d == 0) {
        throw pole_at_specialization("pole of " + to_string() + " at q = " + r.get_str());
    }
    return num_.evaluate(r) / d;
}

QRational QRational::operator-() const {
    return QRational(-num_, den_, unchecked_tag{});
}

QRational& QRational::operator+=(const QRational& o) {
    if (o.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = o;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
        if (!den_.is_one()) {
            normalize();
        } else if (num_.is_zero()) {
            den_ = QPolynomial(1);
        }
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

QRational& QRational::operator-=(const QRational& o) {
    return *this += -o;
}

QRational& QRational::operator*=(const QRational& o) {
    if (is_zero() || o.is_zero()) {
        return *this = QRational();
    }
    if (den_.is_one() && o.den_.is_one()) {
        num_ *= o.num_;
        return *this;
    }
    // Cross-cancel before multiplying.
    QPolynomial a = num_;
    QPolynomial b = o.num_;
    QPolynomial da = den_;
    QPolynomial db = o.den_;
    if (!db.is_one()) {
        const QPolynomial g = QPolynomial::gcd(a, db);
        if (!g.is_one()) {
            a = QPolynomial::divexact(a, g);
            db = QPolynomial::divexact(db, g);
        }
    }
    if (!da.is_one()) {
        const QPolynomial g = QPolynomial::gcd(b, da);
        if (!g.is_one()) {
            b = QPolynomial::divexact(b, g);
            da = QPolynomial::divexact(da, g);
        }
    }
    num_ = a * b;
    den_ = da * db;
    const mpq_class l = den_.leading();
    if (l != 1) {
        num_ *= 1 / l;
        den_ *= 1 / l;
    }
    return *this;
}

QRational& QRational::operator/=(const QRational& o) {
    return *this *= o.inverse();
}

std::string QRational::to_string() const {
    if (den_.is_one()) {
        return num_.to_string();
    }
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// QRationalSum

void QRationalSum::add_fraction(const QPolynomial& n, const QPolynomial& d) {
    if (n.is_zero()) {
        return;
    }
    if (d == den_) {
        num_ += n;
        return;
    }
    const QPolynomial g = QPolynomial::gcd(den_, d);
    if (g.is_one()) {
        num_ = num_ * d + n * den_;
        den_ = den_ * d;
        return;
    }
    const QPolynomial dg = QPolynomial::divexact(d, g);
    num_ = num_ * dg + n * QPolynomial::divexact(den_, g);
    den_ = den_ * dg;
}

void QRationalSum::add(const QRational& a) {
    add_fraction(a.num(), a.den());
}

void QRationalSum::add_product(const QRational& a, const QRational& b) {
    if (a.is_zero() || b.is_zero()) {
        return;
    }
    if (den_.is_one() && a.den().is_one() && b.den().is_one()) {
        num_.add_product(a.num(), b.num());
        return;
    }
    const QRational p = a * b;
    add_fraction(p.num(), p.den());
}

void QRationalSum::sub_product(const QRational& a, const QRational& b) {
    add_product(-a, b);
}

QRational QRationalSum::result() const {
    return QRational(num_, den_);
}

} // namespace qeuler
