#include "wbou/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wbou/error.hpp"
#include "wbou/simd/kernels.hpp"

namespace wbou {

Series::Series(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < 2) throw DomainError("series needs at least 2 points");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw DomainError("series entry " + std::to_string(i) + " is not finite");
        }
    }
}

std::string_view model_name(AcfModel model) { return model == AcfModel::wbou ? "wbou" : "ou"; }

AcfEstimate empirical_acf(const Series& series, std::size_t max_lag) {
    const auto& x = series.values();
    const std::size_t n = x.size();
    if (max_lag >= n) {
        throw LagTooLarge("max_lag " + std::to_string(max_lag) + " must be < n = " + std::to_string(n));
    }
    const double mean = simd::sum(x) / static_cast<double>(n);
    std::vector<double> c(n);
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        c[i] = x[i] - mean;
        scale = std::max(scale, std::abs(x[i]));
    }
    const double denom = simd::sum_sq_dev(c, 0.0);
    if (!(denom > static_cast<double>(n) * std::pow(1e-14 * scale, 2))) {
        throw DegenerateSeries("series has zero sample variance");
    }
    AcfEstimate out;
    out.n = n;
    out.rho.resize(max_lag + 1);
    out.rho[0] = 1.0;
    for (std::size_t h = 1; h <= max_lag; ++h) out.rho[h] = simd::lagged_dot(c, h) / denom;
    return out;
}

double model_acf(AcfModel model, double lambda, double h) {
    const double lh = lambda * h;
    return model == AcfModel::wbou ? (1.0 + lh) * std::exp(-lh) : std::exp(-lh);
}

namespace {

void check_range(const AcfEstimate& acf, LagRange range) {
    if (range.min_lag < 1 || range.min_lag > range.max_lag || range.max_lag > acf.max_lag()) {
        throw EmptyRange("lag range [" + std::to_string(range.min_lag) + ", " +
                         std::to_string(range.max_lag) + "] is empty or outside 1.." +
                         std::to_string(acf.max_lag()));
    }
}

}  // namespace

double rss(const AcfEstimate& acf, AcfModel model, double lambda, LagRange range) {
    check_range(acf, range);
    double total = 0.0;
    for (std::size_t h = range.min_lag; h <= range.max_lag; ++h) {
        const double r = acf.rho[h] - model_acf(model, lambda, static_cast<double>(h));
        total += r * r;
    }
    return total;
}

FitResult fit_acf(const AcfEstimate& acf, AcfModel model, LagRange range) {
    check_range(acf, range);
    auto objective = [&](double l) { return rss(acf, model, l, range); };

    constexpr int kGrid = 200;
    const double log_lo = std::log(kFitLambdaMin), log_hi = std::log(kFitLambdaMax);
    std::vector<double> grid(kGrid);
    for (int i = 0; i < kGrid; ++i) {
        grid[i] = i == kGrid - 1 ? kFitLambdaMax
                                 : std::exp(log_lo + (log_hi - log_lo) * i / (kGrid - 1));
    }
    grid[0] = kFitLambdaMin;
    int best = 0;
    double best_val = objective(grid[0]);
    for (int i = 1; i < kGrid; ++i) {
        const double v = objective(grid[i]);
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }

    // Golden section on the bracket formed by the neighbours of the best node.
    double a = grid[std::max(best - 1, 0)];
    double b = grid[std::min(best + 1, kGrid - 1)];
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
    double fc = objective(c), fd = objective(d);
    while (b - a > 1e-8) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = objective(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = objective(d);
        }
    }
    double lambda_hat = 0.5 * (a + b);
    double value = objective(lambda_hat);
    if (best_val < value) {
        lambda_hat = grid[best];
        value = best_val;
    }
    const bool boundary = lambda_hat <= kFitLambdaMin * (1.0 + 1e-6) ||
                          lambda_hat >= kFitLambdaMax * (1.0 - 1e-9);
    return {model, lambda_hat, value, range, boundary};
}

double realized_volatility(const Series& series) { return simd::sum_sq_diff(series.values()); }

std::vector<SignaturePoint> signature_plot(const Series& series, std::size_t max_skip) {
    const auto& x = series.values();
    if (max_skip < 1 || 2 * max_skip >= x.size()) {
        throw SkipTooLarge("max_skip must satisfy 1 <= max_skip < n/2 (n = " +
                           std::to_string(x.size()) + ")");
    }
    std::vector<SignaturePoint> out;
    out.reserve(max_skip);
    std::vector<double> sub;
    for (std::size_t k = 1; k <= max_skip; ++k) {
        sub.clear();
        for (std::size_t i = 0; i < x.size(); i += k) sub.push_back(x[i]);
        out.push_back({k, simd::sum_sq_diff(sub)});
    }
    return out;
}

}  // namespace wbou
