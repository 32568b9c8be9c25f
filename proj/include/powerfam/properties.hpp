#ifndef POWERFAM_PROPERTIES_HPP
#define POWERFAM_PROPERTIES_HPP

#include "powerfam/power_family.hpp"

namespace powerfam {

// Truncation policy for infinite-series evaluations (mgf).
struct SeriesControl
{
    int max_terms = 200;
    double rel_tol = 1e-12;
};

struct SeriesResult
{
    double value = 0.0;
    bool converged = false;
    int terms = 0; // terms actually accumulated beyond the leading 1
};

// r-th raw moment k beta^r/(r+k), r >= 1.
double raw_moment(const PowerFamily& f, int r);

// r-th inverse moment k beta^(-r)/(k-r); finite only when k > r.
double inverse_moment(const PowerFamily& f, int r);

double mean(const PowerFamily& f);
double variance(const PowerFamily& f);

// Coefficient of variation sqrt(variance)/mean = 1/sqrt(k(k+2)),
// scale-free (independent of beta).
double cv(const PowerFamily& f);

// Lower incomplete moment: integral of x^r pdf over (0, p], 0 < p <= beta.
double incomplete_moment(const PowerFamily& f, int r, double p);

// Upper incomplete moment: integral of x^r pdf over (t, beta), 0 <= t < beta.
double upper_incomplete_moment(const PowerFamily& f, int r, double t);

// True conditional moment E[X^r | X > t] = upper incomplete moment / sf(t).
double conditional_moment(const PowerFamily& f, int r, double t);

// Moment generating function via the series 1 + sum_r (t*beta)^r/(r!*(r/k+1)).
// Truncates when the newest term falls below rel_tol times the partial sum;
// non-convergence within max_terms is reported through the flag, not thrown.
SeriesResult mgf(const PowerFamily& f, double t, const SeriesControl& ctl = {});

// Mean residual life e(x) = E[X - x | X > x], 0 <= x < beta.
double mrf(const PowerFamily& f, double x);

// Vitality V(x) = E[X | X > x] = x + mrf(x), 0 <= x < beta.
double vitality(const PowerFamily& f, double x);

// Renyi entropy (1/(1-s)) log integral pdf^s, s > 0, s != 1; requires
// s(k-1)+1 > 0 for the integral to converge.
double renyi_entropy(const PowerFamily& f, double s);

// Shannon entropy -E[log pdf] (the s->1 limit of the Renyi entropy).
double shannon_entropy(const PowerFamily& f);

// Integral of pdf^s over the support (the argument of the Renyi log),
// s > 0 with the same convergence condition.
double information_fn(const PowerFamily& f, double s);

// Density of the j-th order statistic of an iid sample of size n.
// The binomial prefactor is assembled in log space so large n is safe.
double order_stat_pdf(const PowerFamily& f, int j, int n, double x);

// Lorenz curve L(p) = (1/mean) integral of x pdf over (0, Q(p)], p in [0,1].
double lorenz(const PowerFamily& f, double p);

// Bonferroni curve B(p) = L(p)/p, p in (0,1].
double bonferroni(const PowerFamily& f, double p);

// Doubly truncated mean E[X | x < X < y], 0 <= x < y <= beta.
double dtm(const PowerFamily& f, double x, double y);

} // namespace powerfam

#endif
