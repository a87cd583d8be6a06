#pragma once

// Exact, per-instance verification of the identities satisfied by the
// operator towers and the q-Euler series. Every comparison is an equality of
// Q(q) coefficients on a window derived from precision propagation.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qeuler/constructions.hpp"

namespace qeuler {

enum class Status { pass, fail, error };

const char* to_string(Status s) noexcept;

struct Witness {
    long exponent;
    QRational value;
};

struct VerificationReport {
    std::string id;
    std::map<std::string, std::string> params;
    Status status = Status::error;
    // Residual checked on exponents [window_lo, window_hi); window_hi may be kInfinity.
    long window_lo = 0;
    long window_hi = 0;
    std::optional<Witness> witness;
    std::vector<std::string> notes;
    // Computed left-hand sides, kept for precision-stability comparisons.
    std::vector<LaurentSeries> evidence;

    bool passed() const noexcept { return status == Status::pass; }
};

// Polynomial in an auxiliary indeterminate T with coefficients in Ring
// (QRational or LaurentSeries).
template <class Ring>
struct TPolynomial {
    std::vector<Ring> coeffs;
    long degree() const noexcept { return static_cast<long>(coeffs.size()) - 1; }
};

// sum_j (T - alpha_j)^n / prod_{l != j} (alpha_j - alpha_l), n = nodes - 1.
TPolynomial<QRational> lagrange_sum(const std::vector<QRational>& nodes);
TPolynomial<LaurentSeries> lagrange_sum(const std::vector<LaurentSeries>& nodes, long prec);

VerificationReport verify_lagrange(const std::vector<QRational>& nodes);
VerificationReport verify_lagrange_series(const std::vector<LaurentSeries>& nodes, long prec);

VerificationReport verify_thm_fn(const LaurentSeries& p, unsigned n, long prec);
// Same check with a caller-supplied f (used to exercise the failure path).
VerificationReport check_thm_fn(const LaurentSeries& p, const LaurentSeries& f, unsigned n, long prec);
VerificationReport verify_lemma_akj(const LaurentSeries& p, unsigned n, unsigned k, long prec);
VerificationReport verify_thm_gen(const LaurentSeries& alpha, const LaurentSeries& beta, unsigned n, long prec);

struct CatalogParams {
    std::optional<unsigned> n;
    std::optional<unsigned> k;
    // Named base series for P (see named_base_series); overridden by `p`.
    std::string p_name = "one";
    std::optional<LaurentSeries> p;
    // Default alpha/beta are x/(q-1-x) and (q-1)x/(q-1-x).
    std::optional<LaurentSeries> alpha;
    std::optional<LaurentSeries> beta;
    std::optional<std::vector<QRational>> nodes;
};

// Identity ids understood by verify_catalog, in catalog order.
const std::vector<std::string>& catalog_ids();

VerificationReport verify_catalog(const std::string& identity_id, const CatalogParams& params, long prec);

struct CatalogEntry {
    std::string id;
    CatalogParams params;
};

// Default parameter grid (n <= 5) covering every catalog identity.
std::vector<CatalogEntry> default_catalog_grid();

// Runs the default grid; reports ordered by identity id (stable within an id).
std::vector<VerificationReport> verify_all(long prec);

} // namespace qeuler
