#ifndef TORICMLE_CLOSEDFORM_HPP
#define TORICMLE_CLOSEDFORM_HPP

#include <optional>
#include <string>
#include <vector>

#include "toricmle/birch.hpp"
#include "toricmle/model.hpp"
#include "toricmle/upoly.hpp"

namespace toricmle {

/// Labels of the models with a radical closed form (degree 3 and 4 surfaces).
bool has_closed_form(const std::string& model_label);

/// Univariate polynomial satisfied by p_k at the MLE, derived independently:
/// substitute the moment equations A p = b/N into the kernel binomials and
/// eliminate the remaining coordinate by a Sylvester resultant. The result is
/// squarefree, primitive, of degree 3 (cubic model) or at most 4 (quartics),
/// and its positive real roots contain the k-th MLE coordinate.
RPoly eliminate_to_univariate(const ToricModel& model, const DataVector& u,
                              int k);

/// Verbatim published closed-form polynomial for coordinate k (1-based), if
/// one exists for this model. These are transcribed as printed, including
/// their defects; see audit_published_polynomials.
std::optional<RPoly> published_polynomial(const std::string& model_label,
                                          const DataVector& u, int k);

/// Published radical formulas recovering theta from p_hat (gauge: monomial
/// sum equals 1).
std::optional<std::vector<double>> published_theta(
    const std::string& model_label, const std::vector<double>& p_hat);

/// Monomial recovery theta_i = prod_j p_j^{c_ij} with A c_i = e_i solved
/// exactly; same gauge as the published formulas. Works for any model with
/// full row rank and strictly positive p_hat.
std::vector<double> derived_theta(const ToricModel& model,
                                  const std::vector<double>& p_hat);

/// Machine-readable record comparing a published polynomial against the
/// derived eliminant at a witness point (normally the Newton solution).
struct PolynomialDiscrepancy {
    std::string model;
    int coordinate = 0;
    std::vector<std::string> published_poly;  // coefficients, ascending, exact
    std::vector<std::string> derived_poly;
    std::vector<double> witness_phat;
    double published_residual = 0.0;  // |poly(p_k)| / max|coeff|
    double derived_residual = 0.0;
    bool published_ok = false;
};

/// Evaluate every published display polynomial of the model at the oracle
/// p_hat; one record per display equation.
std::vector<PolynomialDiscrepancy> audit_published_polynomials(
    const std::string& model_label, const DataVector& u,
    const std::vector<double>& oracle_phat);

struct ClosedFormResult {
    MLEResult mle;
    int coordinate = 0;           // which p_k the univariate solve used
    std::string poly_source;      // "published" or "derived"
    RPoly polynomial;             // the polynomial actually solved
    bool theta_from_published = false;
    std::vector<PolynomialDiscrepancy> discrepancies;  // emitted on fallback
};

struct ClosedFormFailure : std::runtime_error {
    explicit ClosedFormFailure(const std::string& msg, std::string diagnostics)
        : std::runtime_error(msg), diagnostics(std::move(diagnostics)) {}
    std::string diagnostics;  // all roots and residuals, JSON-formatted
};

/// Radical-form MLE for S3, S4, S4_A2, S4_A3. Candidate roots come from a
/// published polynomial first, then from the derived eliminant; a candidate
/// is accepted only with moment and variety residuals below `certify_tol`
/// and full positivity. Falling back to the derived eliminant emits a
/// discrepancy record.
ClosedFormResult mle_closed_form(const std::string& model_label,
                                 const DataVector& u,
                                 double certify_tol = 1e-9);

} // namespace toricmle

#endif
