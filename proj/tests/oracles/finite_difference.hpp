#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

// Worst entry of one tensor in a gradient comparison.
struct GradientCheck {
    std::string name;
    double max_relative_error = 0.0;
    double analytic = 0.0;
    double numeric = 0.0;
    std::size_t entries = 0;
};

// |a - n| / max(|a|, |n|, floor)
inline double relative_error(double a, double n, double floor) {
    return std::abs(a - n) / std::max({std::abs(a), std::abs(n), floor});
}

// Central differences (f(w + eps) - f(w - eps)) / 2eps for every entry of
// `w`, restoring each entry afterwards.
inline Eigen::MatrixXd central_difference(Eigen::MatrixXd& w, const std::function<double()>& f, double eps) {
    Eigen::MatrixXd g(w.rows(), w.cols());
    for (Eigen::Index c = 0; c < w.cols(); ++c) {
        for (Eigen::Index r = 0; r < w.rows(); ++r) {
            const double saved = w(r, c);
            w(r, c) = saved + eps;
            const double up = f();
            w(r, c) = saved - eps;
            const double down = f();
            w(r, c) = saved;
            g(r, c) = (up - down) / (2.0 * eps);
        }
    }
    return g;
}

inline GradientCheck compare(const std::string& name, const Eigen::MatrixXd& analytic,
                             const Eigen::MatrixXd& numeric, double floor) {
    GradientCheck out;
    out.name = name;
    out.entries = static_cast<std::size_t>(analytic.size());
    for (Eigen::Index i = 0; i < analytic.size(); ++i) {
        const double e = relative_error(analytic.data()[i], numeric.data()[i], floor);
        if (e >= out.max_relative_error) {
            out.max_relative_error = e;
            out.analytic = analytic.data()[i];
            out.numeric = numeric.data()[i];
        }
    }
    return out;
}

}  // namespace oracle
