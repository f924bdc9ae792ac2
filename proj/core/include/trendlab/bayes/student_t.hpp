#pragma once

namespace trendlab::bayes {

/// log density of the location-scale Student-t distribution.
double student_t_logpdf(double y, double nu, double mu, double sigma);

}  // namespace trendlab::bayes
