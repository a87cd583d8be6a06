#include "qeuler/series.hpp"

#include <algorithm>
#include <sstream>

#include "qeuler/errors.hpp"

namespace qeuler {

namespace {

long stored_valuation(const LaurentSeries& f) {
    return f.coefficients().empty() ? kInfinity : f.offset();
}

} // namespace

LaurentSeries LaurentSeries::big_o(long prec) {
    LaurentSeries s;
    s.prec_ = prec;
    s.offset_ = prec;
    return s;
}

LaurentSeries LaurentSeries::from_coefficients(long offset, std::vector<QRational> coeffs, long prec) {
    LaurentSeries s;
    s.offset_ = offset;
    s.coeffs_ = std::move(coeffs);
    s.prec_ = prec;
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::constant(const QRational& c, long prec) {
    return monomial(c, 0, prec);
}

LaurentSeries LaurentSeries::monomial(const QRational& c, long exponent, long prec) {
    return from_coefficients(exponent, {c}, prec);
}

void LaurentSeries::normalize() {
    if (!is_infinite(prec_) && end() > prec_) {
        const long keep = std::max(0L, prec_ - offset_);
        coeffs_.resize(static_cast<std::size_t>(keep));
    }
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) {
        ++lead;
    }
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        offset_ += static_cast<long>(lead);
    }
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
    if (coeffs_.empty()) {
        offset_ = is_infinite(prec_) ? 0 : prec_;
    }
}

QRational LaurentSeries::coefficient(long e) const {
    if (!is_infinite(prec_) && e >= prec_) {
        throw insufficient_precision("coefficient of x^" + std::to_string(e) + " requested from a series known modulo x^" +
                                     std::to_string(prec_));
    }
    if (e < offset_ || e >= end()) {
        return {};
    }
    return coeffs_[static_cast<std::size_t>(e - offset_)];
}

long LaurentSeries::valuation() const {
    if (is_canonical_zero()) {
        return kInfinity;
    }
    if (coeffs_.empty()) {
        throw indeterminate_valuation(prec_);
    }
    return offset_;
}

QRational LaurentSeries::leading_coefficient() const {
    if (is_canonical_zero()) {
        return {};
    }
    if (coeffs_.empty()) {
        throw indeterminate_valuation(prec_);
    }
    return coeffs_.front();
}

LaurentSeries LaurentSeries::truncated(long prec) const {
    if (prec >= prec_) {
        return *this;
    }
    LaurentSeries s = *this;
    s.prec_ = prec;
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries s = *this;
    for (auto& c : s.coeffs_) {
        c = -c;
    }
    return s;
}

LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g) {
    if (f.is_canonical_zero()) {
        return g;
    }
    if (g.is_canonical_zero()) {
        return f;
    }
    const long prec = std::min(f.prec_, g.prec_);
    const bool fe = f.coeffs_.empty();
    const bool ge = g.coeffs_.empty();
    if (fe && ge) {
        return LaurentSeries::big_o(prec);
    }
    long lo = std::min(fe ? kInfinity : f.offset_, ge ? kInfinity : g.offset_);
    long hi = std::max(fe ? lo : f.end(), ge ? lo : g.end());
    hi = std::min(hi, prec);
    if (hi <= lo) {
        return LaurentSeries::big_o(prec);
    }
    std::vector<QRational> out(static_cast<std::size_t>(hi - lo));
    for (long e = std::max(lo, f.offset_); e < std::min(hi, f.end()); ++e) {
        out[static_cast<std::size_t>(e - lo)] = f.coeffs_[static_cast<std::size_t>(e - f.offset_)];
    }
    for (long e = std::max(lo, g.offset_); e < std::min(hi, g.end()); ++e) {
        out[static_cast<std::size_t>(e - lo)] += g.coeffs_[static_cast<std::size_t>(e - g.offset_)];
    }
    return LaurentSeries::from_coefficients(lo, std::move(out), prec);
}

LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g) {
    return f + (-g);
}

LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g) {
    if (f.is_canonical_zero() || g.is_canonical_zero()) {
        return {};
    }
    // f = f0 + O(x^pf), g = g0 + O(x^pg): the error terms are f0*O(x^pg),
    // O(x^pf)*g0 and O(x^(pf+pg)).
    const long vf = stored_valuation(f);
    const long vg = stored_valuation(g);
    const long prec =
        std::min({add_extended(f.prec_, vg), add_extended(g.prec_, vf), add_extended(f.prec_, g.prec_)});
    if (f.coeffs_.empty() || g.coeffs_.empty()) {
        return LaurentSeries::big_o(prec);
    }
    const long lo = vf + vg;
    const long lf = static_cast<long>(f.coeffs_.size());
    const long lg = static_cast<long>(g.coeffs_.size());
    long count = lf + lg - 1;
    if (!is_infinite(prec)) {
        count = std::min(count, prec - lo);
    }
    if (count <= 0) {
        return LaurentSeries::big_o(prec);
    }
    std::vector<QRational> out(static_cast<std::size_t>(count));
    for (long m = 0; m < count; ++m) {
        QRationalSum acc;
        const long i_lo = std::max(0L, m - lg + 1);
        const long i_hi = std::min(m, lf - 1);
        for (long i = i_lo; i <= i_hi; ++i) {
            acc.add_product(f.coeffs_[static_cast<std::size_t>(i)], g.coeffs_[static_cast<std::size_t>(m - i)]);
        }
        out[static_cast<std::size_t>(m)] = acc.result();
    }
    return LaurentSeries::from_coefficients(lo, std::move(out), prec);
}

LaurentSeries LaurentSeries::scaled(const QRational& c) const {
    if (c.is_zero()) {
        return is_exact() ? LaurentSeries() : big_o(prec_);
    }
    LaurentSeries s = *this;
    for (auto& x : s.coeffs_) {
        x *= c;
    }
    return s;
}

LaurentSeries LaurentSeries::pow(unsigned n) const {
    LaurentSeries result = constant(1);
    if (n == 0) {
        return result;
    }
    // Left-to-right binary exponentiation.
    unsigned bit = 1U << (31 - __builtin_clz(n));
    result = *this;
    for (bit >>= 1; bit != 0; bit >>= 1) {
        result = result * result;
        if ((n & bit) != 0) {
            result = result * *this;
        }
    }
    return result;
}

LaurentSeries LaurentSeries::inverse(long cap) const {
    if (is_canonical_zero()) {
        throw division_by_zero();
    }
    if (coeffs_.empty()) {
        throw indeterminate_valuation(prec_);
    }
    const long v = offset_;
    if (is_exact() && coeffs_.size() == 1) {
        return monomial(coeffs_[0].inverse(), -v);
    }
    long prec = 0;
    if (is_exact()) {
        if (is_infinite(cap)) {
            throw invalid_argument("inverse of an exact non-monomial series needs a precision cap");
        }
        prec = cap;
    } else {
        prec = prec_ - 2 * v;
        if (!is_infinite(cap)) {
            prec = std::min(prec, cap);
        }
    }
    if (prec <= -v) {
        throw insufficient_precision("inverse would be known modulo x^" + std::to_string(prec) +
                                     ", below its own valuation " + std::to_string(-v));
    }
    const long count = prec + v;
    const QRational c0_inv = coeffs_[0].inverse();
    const QRational neg_c0_inv = -c0_inv;
    const long len = static_cast<long>(coeffs_.size());
    std::vector<QRational> h(static_cast<std::size_t>(count));
    h[0] = c0_inv;
    for (long m = 1; m < count; ++m) {
        QRationalSum acc;
        for (long i = 1; i <= std::min(m, len - 1); ++i) {
            acc.add_product(coeffs_[static_cast<std::size_t>(i)], h[static_cast<std::size_t>(m - i)]);
        }
        QRational s = acc.result();
        h[static_cast<std::size_t>(m)] = neg_c0_inv.is_one() ? std::move(s) : s * neg_c0_inv;
    }
    return from_coefficients(-v, std::move(h), prec);
}

LaurentSeries LaurentSeries::shift_sigma(long kx, long ks) const {
    LaurentSeries s = *this;
    s.prec_ = add_extended(prec_, kx);
    s.offset_ = offset_ + kx;
    if (ks != 0) {
        for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
            s.coeffs_[i] = s.coeffs_[i].times_q_power(ks * (offset_ + static_cast<long>(i)));
        }
    }
    if (s.coeffs_.empty()) {
        s.offset_ = is_infinite(s.prec_) ? 0 : s.prec_;
    }
    return s;
}

LaurentSeries LaurentSeries::euler_delta() const {
    LaurentSeries s = *this;
    for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
        s.coeffs_[i] *= QRational(offset_ + static_cast<long>(i));
    }
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::specialize_q(const mpq_class& r) const {
    std::vector<QRational> out;
    out.reserve(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const long e = offset_ + static_cast<long>(i);
        const mpq_class d = coeffs_[i].den().evaluate(r);
        if (d == 0) {
            throw pole_at_specialization("coefficient of x^" + std::to_string(e) + " has a pole at q = " + r.get_str(), e,
                                         true);
        }
        out.emplace_back(coeffs_[i].num().evaluate(r) / d);
    }
    return from_coefficients(offset_, std::move(out), prec_);
}

std::string LaurentSeries::to_string(const char* var) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        first = false;
        const long e = offset_ + static_cast<long>(i);
        os << "(" << coeffs_[i].to_string() << ")";
        if (e != 0) {
            os << "*" << var << "^" << e;
        }
    }
    if (!is_infinite(prec_)) {
        os << (first ? "" : " + ") << "O(" << var << "^" << prec_ << ")";
    } else if (first) {
        os << "0";
    }
    return os.str();
}

LaurentSeries expand_rational(const LaurentSeries& num, const LaurentSeries& den, long prec) {
    if (den.is_canonical_zero()) {
        throw division_by_zero();
    }
    if (num.is_canonical_zero()) {
        return {};
    }
    const long vn = num.valuation();
    return (num * den.inverse(prec - vn)).truncated(prec);
}

std::optional<std::pair<long, QRational>> first_difference(const LaurentSeries& f, const LaurentSeries& g) {
    const LaurentSeries r = f - g;
    if (r.coefficients().empty()) {
        return std::nullopt;
    }
    return std::make_pair(r.offset(), r.coefficients().front());
}

bool agree_on_overlap(const LaurentSeries& f, const LaurentSeries& g) {
    const long p = std::min(f.precision(), g.precision());
    return f.truncated(p) == g.truncated(p);
}

} // namespace qeuler
