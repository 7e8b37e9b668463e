#pragma once

namespace eventlens::stats {

enum class Tail { Two, Upper };

/// I_x(a, b), evaluated by the continued fraction with modified Lentz steps.
double regularized_incomplete_beta(double a, double b, double x);

double student_t_cdf(double t, double df);

/// Inverse of student_t_cdf for p in (0, 1); accurate to ~1e-12 in t.
double student_t_quantile(double p, double df);

/// Critical |t| at significance alpha. Throws Error(InvalidAlpha) unless
/// 0 < alpha < 1, Error(InvalidArgument) unless df > 0.
double critical_t(double df, double alpha, Tail tail = Tail::Two);

}  // namespace eventlens::stats
