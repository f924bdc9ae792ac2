#include "trendlab/bayes/student_t.hpp"

#include <cmath>
#include <numbers>

namespace trendlab::bayes {

namespace {

// lgamma(x + 1/2) - lgamma(x); the asymptotic series avoids cancellation for large x
double lgamma_half_step(double x) {
    if (x < 32.0) return std::lgamma(x + 0.5) - std::lgamma(x);
    const double r = 1.0 / x;
    const double r2 = r * r;
    return 0.5 * std::log(x) + r * (-1.0 / 8.0 + r2 * (1.0 / 192.0 + r2 * (-1.0 / 640.0 + r2 * (17.0 / 14336.0))));
}

}  // namespace

double student_t_logpdf(double y, double nu, double mu, double sigma) {
    const double z = (y - mu) / sigma;
    return lgamma_half_step(nu / 2.0) - 0.5 * std::log(nu * std::numbers::pi) - std::log(sigma) -
           (nu + 1.0) / 2.0 * std::log1p(z * z / nu);
}

}  // namespace trendlab::bayes
