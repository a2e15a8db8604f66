#pragma once

namespace overshoot {

/// Tolerances and iteration cap shared by the iterative numerical kernels.
struct Accuracy {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_iter = 500;

    /// Throws DomainError unless every field is strictly positive.
    void validate() const;
};

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Beta function B(a,b) = Gamma(a) Gamma(b) / Gamma(a+b).
double beta(double a, double b);

/// Regularized incomplete Beta function I_x(a,b).
///
/// Evaluated with the modified Lentz continued fraction; for
/// x > (a+1)/(a+b+2) the complementary expansion 1 - I_{1-x}(b,a) is used.
double reg_inc_beta(double a, double b, double x, const Accuracy& acc = {});

/// Same as reg_inc_beta, taking x and 1-x separately so callers that know
/// the complement exactly (e.g. c/(y+c)) keep full precision near x = 1.
double reg_inc_beta(double a, double b, double x, double one_minus_x, const Accuracy& acc = {});

}  // namespace overshoot
