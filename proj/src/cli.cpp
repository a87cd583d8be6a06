#include "qeuler/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qeuler/errors.hpp"
#include "qeuler/json_io.hpp"

namespace qeuler {

namespace {

struct CliConfig {
    std::string command;
    long prec = 32;
    std::optional<unsigned> n;
    std::optional<unsigned> k;
    std::string q_value;
    std::string format = "json";
    std::string output_path;
    std::string which;
    std::string identity;
    std::string p_name = "one";
    std::string p_file;
    std::string alpha_file;
    std::string beta_file;
    std::string builtin;
    bool cleared = false;
};

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

LaurentSeries read_series_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw invalid_argument("cannot open " + path);
    }
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw invalid_argument(path + ": " + e.what());
    }
    return series_from_json(j);
}

unsigned require_n(const CliConfig& cfg) {
    if (!cfg.n) {
        throw invalid_argument("--n is required for this command");
    }
    return *cfg.n;
}

LaurentSeries base_p(const CliConfig& cfg) {
    return cfg.p_file.empty() ? named_base_series(cfg.p_name) : read_series_file(cfg.p_file);
}

std::pair<LaurentSeries, LaurentSeries> base_ab(const CliConfig& cfg) {
    if (cfg.alpha_file.empty() != cfg.beta_file.empty()) {
        throw invalid_argument("--alpha-file and --beta-file must be given together");
    }
    if (!cfg.alpha_file.empty()) {
        return {read_series_file(cfg.alpha_file), read_series_file(cfg.beta_file)};
    }
    return {ab1_alpha(cfg.prec), ab1_beta(cfg.prec)};
}

std::optional<mpq_class> q_value(const CliConfig& cfg) {
    if (cfg.q_value.empty()) {
        return std::nullopt;
    }
    mpq_class r;
    if (r.set_str(cfg.q_value, 10) != 0 || r.get_den() == 0) {
        throw invalid_argument("--q-value must be a rational like 2 or 3/2");
    }
    r.canonicalize();
    return r;
}

LaurentSeries build_series(const CliConfig& cfg) {
    const std::string which = lower(cfg.which);
    if (which == "eq") {
        return euler_hat_q(cfg.prec);
    }
    if (which == "exq") {
        return euler_hat_xq(cfg.prec);
    }
    if (which == "pn") {
        return build_pn(base_p(cfg), require_n(cfg));
    }
    if (which == "beta") {
        const auto [a, b] = base_ab(cfg);
        return build_beta(a, b, require_n(cfg));
    }
    if (which == "alpha") {
        return ab1_alpha(cfg.prec);
    }
    if (which == "f" && cfg.p_name == "eq-ab1") {
        const auto [a, b] = base_ab(cfg);
        return solve_first_order(a, b, cfg.prec);
    }
    if (which == "f") {
        return solve_first_order(LaurentSeries::x_power(1), base_p(cfg), cfg.prec);
    }
    throw invalid_argument("--which must be one of eq, exq, pn, beta, alpha, f");
}

QDiffOperator build_operator(const CliConfig& cfg) {
    const std::string b = lower(cfg.builtin);
    const bool general = b == "lab" || cfg.p_name == "eq-ab1";
    if (b == "lnk" || b == "lnn" || b == "lab") {
        const unsigned n = require_n(cfg);
        const unsigned k = b == "lnn" ? n : cfg.k.value_or(n);
        if (k < 1 || k > n) {
            throw invalid_argument("--k must satisfy 1 <= k <= n");
        }
        std::optional<OperatorTower> tower;
        if (general) {
            const auto [alpha, beta] = base_ab(cfg);
            tower.emplace(TowerBase::from_alpha_beta(alpha, beta), n, cfg.prec);
        } else {
            tower.emplace(TowerBase::from_p(base_p(cfg)), n, cfg.prec);
        }
        if (!cfg.cleared) {
            return tower->stage(k);
        }
        LaurentSeries prod = LaurentSeries::constant(1);
        for (unsigned j = 1; j <= k; ++j) {
            prod *= tower->sequence()[j];
        }
        return tower->stage(k).left_multiply(prod);
    }
    if (b == "e2") {
        const QDiffOperator a = QDiffOperator::first_order(LaurentSeries::x_power(1), LaurentSeries::constant(1));
        const QDiffOperator c = QDiffOperator::first_order(LaurentSeries::x_power(2), LaurentSeries::constant(-1));
        return a.compose(c);
    }
    if (b == "euler2l" || b == "qeuler2a") {
        const LaurentSeries alpha = ab1_alpha(cfg.prec);
        const LaurentSeries den = LaurentSeries::from_coefficients(
            0, {QRational(QPolynomial::from_coefficients({-1, 1})), QRational(-1)});
        const LaurentSeries u = expand_rational(LaurentSeries::constant(1), den, cfg.prec);
        if (b == "qeuler2a") {
            return from_delta({u, alpha}).compose(from_delta({u - LaurentSeries::x_power(-1), alpha}));
        }
        const QRational qm1(QPolynomial::from_coefficients({-1, 1}));
        return QDiffOperator::first_order(alpha, LaurentSeries::constant(1))
            .compose(QDiffOperator::first_order(alpha, -alpha.inverse()))
            .left_multiply(LaurentSeries::constant((qm1 * qm1).inverse()));
    }
    throw invalid_argument("--builtin must be one of Lnk, Lnn, Lab, E2, Euler2L, qEuler2a");
}

CatalogParams catalog_params(const CliConfig& cfg) {
    CatalogParams p;
    p.n = cfg.n;
    p.k = cfg.k;
    p.p_name = cfg.p_name;
    if (!cfg.p_file.empty()) {
        p.p = read_series_file(cfg.p_file);
    }
    if (!cfg.alpha_file.empty() || !cfg.beta_file.empty()) {
        const auto [a, b] = base_ab(cfg);
        p.alpha = a;
        p.beta = b;
    }
    return p;
}

std::string report_line(const VerificationReport& r) {
    std::ostringstream os;
    os << r.id;
    for (const auto& [key, value] : r.params) {
        os << " " << key << "=" << value;
    }
    os << ": " << to_string(r.status) << " window [" << r.window_lo << ", "
       << (is_infinite(r.window_hi) ? std::string("inf") : std::to_string(r.window_hi)) << ")";
    if (r.witness) {
        os << " witness x^" << r.witness->exponent << ": " << r.witness->value.to_string();
    }
    for (const auto& note : r.notes) {
        os << "\n  " << note;
    }
    return os.str();
}

std::string render(const CliConfig& cfg, int& code) {
    code = 0;
    const bool text = cfg.format == "text";
    if (cfg.command == "series") {
        LaurentSeries s = build_series(cfg);
        if (auto r = q_value(cfg)) {
            s = s.specialize_q(*r);
        }
        return text ? s.to_string() + "\n" : to_json(s).dump(2) + "\n";
    }
    if (cfg.command == "operator") {
        QDiffOperator op = build_operator(cfg);
        if (auto r = q_value(cfg)) {
            QDiffOperator::term_map terms;
            for (const auto& [k, a] : op.terms()) {
                terms.emplace(k, a.specialize_q(*r));
            }
            op = QDiffOperator(std::move(terms));
        }
        if (!text) {
            return to_json(op).dump(2) + "\n";
        }
        std::ostringstream os;
        for (const auto& [k, a] : op.terms()) {
            os << "sigma^" << k << ": " << a.to_string() << "\n";
        }
        return os.str();
    }
    if (cfg.command == "newton") {
        const NewtonPolygon np = newton_polygon(build_operator(cfg));
        std::optional<SummabilityOrder> order;
        try {
            order = summability_order(np);
        } catch (const non_integer_slope&) {
        }
        if (!text) {
            return to_json(np, order).dump(2) + "\n";
        }
        std::ostringstream os;
        os << "points:";
        for (const auto& p : np.points) {
            os << " (" << p.k << "," << p.m << ")";
        }
        os << "\nslopes:";
        for (const auto& s : np.slopes) {
            os << " " << s.num << (s.den == 1 ? "" : "/" + std::to_string(s.den)) << " x" << s.length;
        }
        os << "\norder: ";
        if (!order) {
            os << "unclassified (non-integer slope)";
        } else if (order->kind == SummabilityOrder::Kind::convergent) {
            os << "convergent";
        } else {
            os << "summable (";
            for (std::size_t i = 0; i < order->levels.size(); ++i) {
                os << (i ? "," : "") << order->levels[i];
            }
            os << ")";
        }
        return os.str() + "\n";
    }
    if (cfg.command == "verify") {
        if (cfg.identity.empty()) {
            throw invalid_argument("--identity is required");
        }
        const VerificationReport r = verify_catalog(cfg.identity, catalog_params(cfg), cfg.prec);
        code = r.passed() ? 0 : 1;
        return text ? report_line(r) + "\n" : to_json(r).dump(2) + "\n";
    }
    // verify-all
    const std::vector<VerificationReport> reports = verify_all(cfg.prec);
    const bool all = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
    code = all ? 0 : 1;
    if (text) {
        std::ostringstream os;
        for (const auto& r : reports) {
            os << report_line(r) << "\n";
        }
        return os.str();
    }
    json arr = json::array();
    for (const auto& r : reports) {
        arr.push_back(to_json(r));
    }
    return arr.dump(2) + "\n";
}

void add_common(CLI::App* sub, CliConfig& cfg) {
    sub->add_option("--prec", cfg.prec, "Truncation order (series known modulo x^prec)")
        ->check(CLI::Range(4L, 1L << 20));
    sub->add_option("--n", cfg.n, "Power / tower order")->check(CLI::PositiveNumber);
    sub->add_option("--k", cfg.k, "Tower stage")->check(CLI::PositiveNumber);
    sub->add_option("--q-value", cfg.q_value, "Specialize q to this rational");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--output", cfg.output_path, "Write output to this file");
    sub->add_option("--P", cfg.p_name, "Named base series: one, one-minus-x, one-plus-x, one-minus-x-plus-x2");
    sub->add_option("--P-file", cfg.p_file, "Base series P as JSON");
    sub->add_option("--alpha-file", cfg.alpha_file, "alpha as JSON");
    sub->add_option("--beta-file", cfg.beta_file, "beta as JSON");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    CLI::App app{"Exact q-difference operator towers for powers of q-Euler series"};
    app.require_subcommand(1);

    auto* series = app.add_subcommand("series", "Print a built-in series");
    add_common(series, cfg);
    series->add_option("--which", cfg.which, "eq, exq, pn, beta, alpha, f")->required();

    auto* op = app.add_subcommand("operator", "Print a built-in operator in sigma_q-normal form");
    add_common(op, cfg);
    op->add_option("--builtin", cfg.builtin, "Lnk, Lnn, Lab, E2, Euler2L, qEuler2a")->required();
    op->add_flag("--cleared", cfg.cleared, "Left-multiply tower stages by the product of the sequence entries");

    auto* newton = app.add_subcommand("newton", "Newton polygon and summability order of a built-in operator");
    add_common(newton, cfg);
    newton->add_option("--builtin", cfg.builtin, "Lnk, Lnn, Lab, E2, Euler2L, qEuler2a")->required();
    newton->add_flag("--cleared", cfg.cleared, "Left-multiply tower stages by the product of the sequence entries");

    auto* verify = app.add_subcommand("verify", "Verify one catalog identity");
    add_common(verify, cfg);
    verify->add_option("--identity", cfg.identity, "Catalog id")->required();

    auto* all = app.add_subcommand("verify-all", "Verify the whole catalog on the default grid");
    add_common(all, cfg);

    std::vector<std::string> argv_store{"qeuler"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) {
        argv.push_back(a.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }
    for (auto* sub : {series, op, newton, verify, all}) {
        if (sub->parsed()) {
            cfg.command = sub->get_name();
        }
    }

    try {
        int code = 0;
        const std::string text = render(cfg, code);
        if (cfg.output_path.empty()) {
            out << text;
        } else {
            std::ofstream file(cfg.output_path);
            if (!file) {
                err << "error: cannot write " << cfg.output_path << "\n";
                return 2;
            }
            file << text;
        }
        return code;
    } catch (const math_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace qeuler
