#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sied {

/// Equal-width histogram over [lo, hi); samples outside the range are
/// dropped. Distances require identical binning on both sides.
struct Histogram {
    double lo = 0.0;
    double hi = 1.0;
    std::vector<std::uint64_t> counts;

    std::size_t bins() const { return counts.size(); }
    std::uint64_t total() const;
    double bin_low(std::size_t i) const;
    double bin_high(std::size_t i) const;

    static Histogram build(double lo, double hi, std::size_t bins,
                           std::span<const double> samples);
    // Unit-width integer bins spanning the pooled range of both sample sets;
    // this is the binning the trace histograms are exported with.
    static std::pair<Histogram, Histogram> integer_pair(std::span<const double> a,
                                                        std::span<const double> b);
    // Shared equal-width binning over the pooled range.
    static std::pair<Histogram, Histogram> common_pair(std::span<const double> a,
                                                       std::span<const double> b,
                                                       std::size_t bins);

    std::string to_csv() const; // rows: bin_low,bin_high,count
};

/// KL divergence in nats over normalized bins. 0.5 is added to every bin of
/// both histograms before normalizing, so empty bins never produce infinities
/// and identical histograms give exactly 0. Throws BinningMismatch.
double kl_divergence(const Histogram& p, const Histogram& q);

struct ChiSquareResult {
    double statistic = 0.0;
    std::size_t dof = 0;
    double p_value = 1.0;
};

/// Pearson chi-square of unit-interval samples against the uniform null over
/// `bins` equal cells. Requires an expected count of at least 5 per bin
/// (InsufficientSamples otherwise).
ChiSquareResult chi_square_uniformity(std::span<const double> unit_samples,
                                      std::size_t bins);

struct KsResult {
    double statistic = 0.0;
    double p_value = 1.0;
};

/// Two-sample Kolmogorov-Smirnov test: sup-norm of the empirical CDF
/// difference with the asymptotic p-value. Throws EmptySample.
KsResult ks_two_sample(std::span<const double> a, std::span<const double> b);

/// Kolmogorov distribution survival function Q(lambda) = 2 sum (-1)^{j-1} e^{-2 j^2 lambda^2}.
double kolmogorov_q(double lambda);

struct PsnrResult {
    double mse = 0.0;
    bool infinite = false; // MSE == 0: the two sequences are identical
    double db = 0.0;       // meaningful only when !infinite
};

/// PSNR/MSE between equal-length sequences; PSNR = 10 log10(max^2 / MSE),
/// with the infinity marker when MSE = 0. Throws LengthMismatch.
PsnrResult psnr(std::span<const double> reference, std::span<const double> test,
                double max_value);

/// Local maxima exceeding both neighbors by at least min_prominence
/// (a fraction of the total count). Edge bins are never peaks; needs >= 3 bins.
int count_peaks(const Histogram& h, double min_prominence);

/// One trace-pair comparison as consumed by the chosen-cover evaluators.
struct DistanceReport {
    double kl = 0.0;
    ChiSquareResult chi_square;
    KsResult ks;
    double epsilon_budget = 0.0;
    std::string time_budget_note;
};

} // namespace sied
