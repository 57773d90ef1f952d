#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace wbou {

/// Levels of an observed or simulated series; n >= 2, finite entries.
class Series {
public:
    /// Throws DomainError on fewer than two points or non-finite entries.
    explicit Series(std::vector<double> values);

    const std::vector<double>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }

private:
    std::vector<double> values_;
};

/// rho[h] for h = 0..max_lag.
struct AcfEstimate {
    std::vector<double> rho;
    std::size_t n = 0;

    std::size_t max_lag() const { return rho.empty() ? 0 : rho.size() - 1; }
};

enum class AcfModel { wbou, ou };

std::string_view model_name(AcfModel model);

struct LagRange {
    std::size_t min_lag;
    std::size_t max_lag;
};

struct FitResult {
    AcfModel model;
    double lambda_hat;
    double rss;
    LagRange lag_range;
    /// The minimizer sits on a search bound; lambda_hat is then unreliable.
    bool boundary;
};

inline constexpr double kFitLambdaMin = 1e-6;
inline constexpr double kFitLambdaMax = 1e2;

/// sum_{i < n-h} (x_i - m)(x_{i+h} - m) / sum_i (x_i - m)^2 with the global
/// mean m; normalized by n, not n - h.
AcfEstimate empirical_acf(const Series& series, std::size_t max_lag);

/// Model ACF in lag-index units: (1 + lambda h) e^{-lambda h} or e^{-lambda h}.
double model_acf(AcfModel model, double lambda, double h);

double rss(const AcfEstimate& acf, AcfModel model, double lambda, LagRange range);

/// Least squares in lambda over [kFitLambdaMin, kFitLambdaMax]: 200-point
/// log-grid scan, then golden-section refinement to 1e-8 around the best
/// grid point (the smallest one on ties).
FitResult fit_acf(const AcfEstimate& acf, AcfModel model, LagRange range);

/// sum of squared consecutive differences
double realized_volatility(const Series& series);

struct SignaturePoint {
    std::size_t skip;
    double rv;
};

/// RV of (x_0, x_k, x_2k, ...) for k = 1..max_skip; max_skip < n / 2.
std::vector<SignaturePoint> signature_plot(const Series& series, std::size_t max_skip);

}  // namespace wbou
