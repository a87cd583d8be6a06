#include "qeuler/json_io.hpp"

#include "qeuler/errors.hpp"

namespace qeuler {

namespace {

json poly_to_json(const QPolynomial& p) {
    json arr = json::array();
    for (const auto& c : p.coefficients()) {
        arr.push_back(c.get_str());
    }
    return arr;
}

QPolynomial poly_from_json(const json& j) {
    if (!j.is_array()) {
        throw invalid_argument("polynomial must be a JSON array of rational strings");
    }
    std::vector<mpq_class> coeffs;
    for (const auto& v : j) {
        mpq_class c;
        if (v.is_string()) {
            if (c.set_str(v.get<std::string>(), 10) != 0) {
                throw invalid_argument("bad rational '" + v.get<std::string>() + "'");
            }
            if (c.get_den() == 0) {
                throw invalid_argument("zero denominator in '" + v.get<std::string>() + "'");
            }
            c.canonicalize();
        } else if (v.is_number_integer()) {
            c = v.get<long>();
        } else {
            throw invalid_argument("polynomial coefficients must be rational strings");
        }
        coeffs.push_back(c);
    }
    return QPolynomial::from_coefficients(coeffs);
}

json extended(long v) {
    return is_infinite(v) ? json("inf") : json(v);
}

} // namespace

json to_json(const QRational& c) {
    return json{{"num", poly_to_json(c.num())}, {"den", poly_to_json(c.den())}};
}

QRational qrational_from_json(const json& j) {
    if (!j.is_object() || !j.contains("num")) {
        throw invalid_argument("QRational must be an object with a \"num\" array");
    }
    const QPolynomial num = poly_from_json(j.at("num"));
    const QPolynomial den = j.contains("den") ? poly_from_json(j.at("den")) : QPolynomial(1);
    return QRational(num, den);
}

json to_json(const LaurentSeries& s) {
    json coeffs = json::array();
    for (const auto& c : s.coefficients()) {
        coeffs.push_back(to_json(c));
    }
    return json{{"val", s.offset()}, {"prec", extended(s.precision())}, {"coeffs", coeffs}};
}

LaurentSeries series_from_json(const json& j) {
    if (!j.is_object() || !j.contains("coeffs")) {
        throw invalid_argument("series must be an object with \"val\", \"prec\" and \"coeffs\"");
    }
    const long val = j.value("val", 0L);
    long prec = kInfinity;
    if (j.contains("prec")) {
        const json& p = j.at("prec");
        if (p.is_string()) {
            if (p.get<std::string>() != "inf") {
                throw invalid_argument("prec must be an integer or \"inf\"");
            }
        } else {
            prec = p.get<long>();
        }
    }
    std::vector<QRational> coeffs;
    for (const auto& c : j.at("coeffs")) {
        coeffs.push_back(qrational_from_json(c));
    }
    if (!is_infinite(prec) && val + static_cast<long>(coeffs.size()) > prec) {
        throw invalid_argument("series stores coefficients at or beyond its precision");
    }
    return LaurentSeries::from_coefficients(val, std::move(coeffs), prec);
}

json to_json(const QDiffOperator& op) {
    json terms = json::array();
    for (const auto& [k, a] : op.terms()) {
        terms.push_back(json{{"shift", k}, {"coeff", to_json(a)}});
    }
    return json{{"terms", terms}};
}

QDiffOperator operator_from_json(const json& j) {
    QDiffOperator::term_map terms;
    for (const auto& t : j.at("terms")) {
        const long k = t.at("shift").get<long>();
        if (terms.count(k) != 0) {
            throw invalid_argument("duplicate shift " + std::to_string(k));
        }
        terms.emplace(k, series_from_json(t.at("coeff")));
    }
    return QDiffOperator(std::move(terms));
}

json to_json(const NewtonPolygon& np, const std::optional<SummabilityOrder>& order) {
    json points = json::array();
    for (const auto& p : np.points) {
        points.push_back({p.k, p.m});
    }
    json hull = json::array();
    for (const auto& p : np.hull) {
        hull.push_back({p.k, p.m});
    }
    json slopes = json::array();
    for (const auto& s : np.slopes) {
        slopes.push_back({s.num, s.den, s.length});
    }
    json ord = nullptr;
    if (order) {
        ord = json{{"kind", order->kind == SummabilityOrder::Kind::convergent ? "convergent" : "summable"},
                   {"levels", order->levels}};
    }
    return json{{"points", points}, {"hull", hull}, {"slopes", slopes}, {"order", ord}};
}

json to_json(const VerificationReport& r) {
    json witness = nullptr;
    if (r.witness) {
        witness = json{{"exp", r.witness->exponent}, {"value", to_json(r.witness->value)}};
    }
    json out{{"id", r.id},
             {"params", r.params},
             {"status", to_string(r.status)},
             {"window", json::array({extended(r.window_lo), extended(r.window_hi)})},
             {"witness", witness}};
    if (!r.notes.empty()) {
        out["notes"] = r.notes;
    }
    return out;
}

} // namespace qeuler
