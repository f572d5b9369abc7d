#include "sied/stats.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/special_functions/gamma.hpp>

#include "sied/errors.hpp"

namespace sied {

std::uint64_t Histogram::total() const {
    std::uint64_t t = 0;
    for (auto c : counts) t += c;
    return t;
}

double Histogram::bin_low(std::size_t i) const {
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins());
}

double Histogram::bin_high(std::size_t i) const {
    return lo + (hi - lo) * static_cast<double>(i + 1) / static_cast<double>(bins());
}

Histogram Histogram::build(double lo, double hi, std::size_t bins,
                           std::span<const double> samples) {
    if (bins == 0 || !(hi > lo)) throw Error("histogram: bad binning");
    Histogram h;
    h.lo = lo;
    h.hi = hi;
    h.counts.assign(bins, 0);
    const double scale = static_cast<double>(bins) / (hi - lo);
    for (double s : samples) {
        if (s < lo || s >= hi) continue;
        auto i = static_cast<std::size_t>((s - lo) * scale);
        if (i >= bins) i = bins - 1;
        ++h.counts[i];
    }
    return h;
}

namespace {

std::pair<double, double> pooled_range(std::span<const double> a,
                                       std::span<const double> b) {
    if (a.empty() && b.empty()) throw EmptySample("no samples to bin");
    double mn = std::numeric_limits<double>::infinity();
    double mx = -mn;
    for (double v : a) { mn = std::min(mn, v); mx = std::max(mx, v); }
    for (double v : b) { mn = std::min(mn, v); mx = std::max(mx, v); }
    return {mn, mx};
}

} // namespace

std::pair<Histogram, Histogram> Histogram::integer_pair(std::span<const double> a,
                                                        std::span<const double> b) {
    auto [mn, mx] = pooled_range(a, b);
    const double lo = std::floor(mn) - 0.5;
    const double hi = std::floor(mx) + 1.5;
    const auto bins = static_cast<std::size_t>(hi - lo);
    return {build(lo, hi, bins, a), build(lo, hi, bins, b)};
}

std::pair<Histogram, Histogram> Histogram::common_pair(std::span<const double> a,
                                                       std::span<const double> b,
                                                       std::size_t bins) {
    auto [mn, mx] = pooled_range(a, b);
    double hi = std::nextafter(mx, std::numeric_limits<double>::infinity());
    if (!(hi > mn)) hi = mn + 1.0; // all samples equal
    return {build(mn, hi, bins, a), build(mn, hi, bins, b)};
}

std::string Histogram::to_csv() const {
    std::ostringstream out;
    out << "bin_low,bin_high,count\n";
    out.precision(12);
    for (std::size_t i = 0; i < bins(); ++i)
        out << bin_low(i) << ',' << bin_high(i) << ',' << counts[i] << '\n';
    return out.str();
}

double kl_divergence(const Histogram& p, const Histogram& q) {
    if (p.bins() != q.bins() || p.lo != q.lo || p.hi != q.hi)
        throw BinningMismatch("histograms binned differently");
    const std::uint64_t tp = p.total(), tq = q.total();
    if (tp == 0 || tq == 0) throw EmptySample("empty histogram");
    const double B = static_cast<double>(p.bins());
    const double np = static_cast<double>(tp) + 0.5 * B;
    const double nq = static_cast<double>(tq) + 0.5 * B;
    double kl = 0.0;
    for (std::size_t i = 0; i < p.bins(); ++i) {
        const double pi = (static_cast<double>(p.counts[i]) + 0.5) / np;
        const double qi = (static_cast<double>(q.counts[i]) + 0.5) / nq;
        kl += pi * std::log(pi / qi);
    }
    return std::max(kl, 0.0);
}

ChiSquareResult chi_square_uniformity(std::span<const double> unit_samples,
                                      std::size_t bins) {
    if (bins < 2) throw Error("chi_square_uniformity: need >= 2 bins");
    const double n = static_cast<double>(unit_samples.size());
    const double expected = n / static_cast<double>(bins);
    if (expected < 5.0)
        throw InsufficientSamples("expected count per bin below 5");
    std::vector<std::uint64_t> counts(bins, 0);
    for (double s : unit_samples) {
        if (s < 0.0 || s >= 1.0) throw Error("chi_square_uniformity: sample outside [0,1)");
        auto i = static_cast<std::size_t>(s * static_cast<double>(bins));
        if (i >= bins) i = bins - 1;
        ++counts[i];
    }
    ChiSquareResult r;
    r.dof = bins - 1;
    for (auto c : counts) {
        const double d = static_cast<double>(c) - expected;
        r.statistic += d * d / expected;
    }
    r.p_value = boost::math::gamma_q(static_cast<double>(r.dof) / 2.0, r.statistic / 2.0);
    return r;
}

double kolmogorov_q(double lambda) {
    if (lambda < 0.2) return 1.0;
    double sum = 0.0;
    double sign = 1.0;
    for (int j = 1; j <= 100; ++j) {
        const double term = std::exp(-2.0 * j * j * lambda * lambda);
        sum += sign * term;
        if (term < 1e-12) break;
        sign = -sign;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_two_sample(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw EmptySample("ks_two_sample: empty input");
    std::vector<double> sa(a.begin(), a.end());
    std::vector<double> sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());

    const double na = static_cast<double>(sa.size());
    const double nb = static_cast<double>(sb.size());
    double d = 0.0;
    std::size_t ia = 0, ib = 0;
    while (ia < sa.size() && ib < sb.size()) {
        const double x = std::min(sa[ia], sb[ib]);
        while (ia < sa.size() && sa[ia] <= x) ++ia;
        while (ib < sb.size() && sb[ib] <= x) ++ib;
        d = std::max(d, std::abs(static_cast<double>(ia) / na -
                                 static_cast<double>(ib) / nb));
    }

    KsResult r;
    r.statistic = d;
    const double ne = std::sqrt(na * nb / (na + nb));
    r.p_value = kolmogorov_q((ne + 0.12 + 0.11 / ne) * d);
    return r;
}

PsnrResult psnr(std::span<const double> reference, std::span<const double> test,
                double max_value) {
    if (reference.size() != test.size())
        throw LengthMismatch("psnr: sequence lengths differ");
    if (reference.empty()) throw EmptySample("psnr: empty input");
    double se = 0.0;
    for (std::size_t i = 0; i < reference.size(); ++i) {
        const double d = reference[i] - test[i];
        se += d * d;
    }
    PsnrResult r;
    r.mse = se / static_cast<double>(reference.size());
    if (r.mse == 0.0) {
        r.infinite = true;
    } else {
        r.db = 10.0 * std::log10(max_value * max_value / r.mse);
    }
    return r;
}

int count_peaks(const Histogram& h, double min_prominence) {
    if (h.bins() < 3) throw Error("count_peaks: need >= 3 bins");
    const double need = min_prominence * static_cast<double>(h.total());
    int peaks = 0;
    for (std::size_t i = 1; i + 1 < h.bins(); ++i) {
        const double c = static_cast<double>(h.counts[i]);
        const double dl = c - static_cast<double>(h.counts[i - 1]);
        const double dr = c - static_cast<double>(h.counts[i + 1]);
        if (dl > 0.0 && dr > 0.0 && dl >= need && dr >= need) ++peaks;
    }
    return peaks;
}

} // namespace sied
