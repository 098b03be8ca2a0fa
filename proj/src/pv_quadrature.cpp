#include "coulscat/pv_quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "coulscat/coulomb_potential.hpp"
#include "coulscat/errors.hpp"
#include "coulscat/special_functions.hpp"

namespace coulscat {

namespace {

// 15-point Gauss-Kronrod pair (QUADPACK dqk15 abscissae/weights).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct PanelEval {
    double value = 0.0;
    double err = 0.0;
};

// Gauss-Kronrod 15(7) on [a, b] with the QUADPACK error heuristic, which
// collapses toward the true error on smooth panels instead of reporting the
// raw |K15 - G7| gap.
template <typename F>
PanelEval gk15(const F& fn, double a, double b)
{
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = fn(centre);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    double resabs = kWgk[7] * std::abs(fc);
    double f_lo[7], f_hi[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        f_lo[j] = fn(centre - dx);
        f_hi[j] = fn(centre + dx);
        resk += kWgk[j] * (f_lo[j] + f_hi[j]);
        resabs += kWgk[j] * (std::abs(f_lo[j]) + std::abs(f_hi[j]));
        if (j % 2 == 1) resg += kWg[j / 2] * (f_lo[j] + f_hi[j]);
    }
    const double mean = 0.5 * resk;
    double resasc = kWgk[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(f_lo[j] - mean) + std::abs(f_hi[j] - mean));
    resasc *= std::abs(half);
    resabs *= std::abs(half);

    PanelEval out;
    out.value = resk * half;
    out.err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && out.err != 0.0)
        out.err = resasc * std::min(1.0, std::pow(200.0 * out.err / resasc, 1.5));
    const double round = 50.0 * std::numeric_limits<double>::epsilon() * resabs;
    out.err = std::max(out.err, round);
    return out;
}

struct Interval {
    double a = 0.0;
    double b = 0.0;
    double value = 0.0;
    double err = 0.0;
    bool paired = false;  // integrates f(t) + f(-t) over (a, b) in t > 0
};

struct ByError {
    bool operator()(const Interval& lhs, const Interval& rhs) const
    {
        return lhs.err < rhs.err;
    }
};

}  // namespace

void PVQuadConfig::validate() const
{
    if (!(inner_cutoff > 0.0) || !(inner_cutoff < window_half_width) ||
        !(window_half_width <= 1.0))
        throw std::domain_error("PVQuadConfig: require 0 < inner_cutoff < window_half_width <= 1");
    if (!(grading_ratio > 0.0) || !(grading_ratio < 1.0))
        throw std::domain_error("PVQuadConfig: require 0 < grading_ratio < 1");
    if (!(outer_x_max > window_half_width))
        throw std::domain_error("PVQuadConfig: require outer_x_max > window_half_width");
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
        throw std::domain_error("PVQuadConfig: tolerances must be positive");
}

PVResult principal_value(const std::function<double(double)>& f,
                         double x_lo, double x_hi, const PVQuadConfig& cfg)
{
    cfg.validate();
    if (!(x_lo < 0.0) || !(x_hi > 0.0))
        throw std::domain_error("principal_value: pole x = 0 must be interior to the domain");

    std::int64_t evals = 0;
    auto fc = [&](double x) {
        ++evals;
        return f(x);
    };
    auto paired = [&](double t) { return fc(t) + fc(-t); };

    PVResult out;

    // Truncate an infinite (or overlong) upper limit and estimate the
    // remainder from the local power-law decay.
    double hi = x_hi;
    if (x_hi > cfg.outer_x_max) {
        hi = cfg.outer_x_max;
        const double f1 = std::abs(fc(hi));
        const double f0 = std::abs(fc(0.5 * hi));
        if (f1 > 0.0 && f0 > f1) {
            const double q = std::log2(f0 / f1);  // |f| ~ x^-q
            out.tail_bound = (q > 1.05) ? f1 * hi / (q - 1.0) : f1 * hi;
        } else if (f1 > 0.0) {
            out.tail_bound = f1 * hi;
        }
    }

    const double w = std::min({cfg.window_half_width, -x_lo, hi});
    if (!(w > cfg.inner_cutoff))
        throw std::domain_error(
            "principal_value: domain leaves no pairing window above inner_cutoff");

    std::priority_queue<Interval, std::vector<Interval>, ByError> heap;
    double total = 0.0, total_err = 0.0;
    auto push = [&](double a, double b, bool is_paired) {
        const PanelEval pe = is_paired ? gk15(paired, a, b) : gk15(fc, a, b);
        heap.push(Interval{a, b, pe.value, pe.err, is_paired});
        total += pe.value;
        total_err += pe.err;
    };

    // Graded pairing window (inner_cutoff, w].
    for (double b = w; b > cfg.inner_cutoff;) {
        double a = std::max(b * cfg.grading_ratio, cfg.inner_cutoff);
        if (!(a < b)) break;
        push(a, b, true);
        b = a;
    }
    // Right flank [w, hi], log-spaced seed panels.
    for (double a = w; a < hi;) {
        const double b = std::min(a * 4.0, hi);
        push(a, b, false);
        a = b;
    }
    // Left flank [x_lo, -w].
    for (double b = -w; b > x_lo;) {
        const double a = std::max(b * 4.0, x_lo);
        push(a, b, false);
        b = a;
    }

    // Unsampled sliver (0, inner_cutoff): |f(t)+f(-t)| is log-power bounded,
    // so |int_0^c| <= kappa * c * (3 - 2 ln c + ln^2 c) with kappa measured
    // at the cutoff.
    {
        const double c = cfg.inner_cutoff;
        const double lc = std::log(c);
        const double kappa = std::abs(paired(c)) / (1.0 + lc * lc);
        out.est_error += kappa * c * (3.0 - 2.0 * lc + lc * lc);
    }

    const std::int64_t budget = 4'000'000;
    double stuck_err = 0.0;
    while (true) {
        const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
        if (total_err + stuck_err <= tol || heap.empty()) break;
        if (evals > budget)
            throw convergence_error(
                "principal_value: error " + std::to_string(total_err + stuck_err) +
                " above tolerance " + std::to_string(tol) + " after " +
                std::to_string(evals) + " evaluations");
        Interval worst = heap.top();
        heap.pop();
        total -= worst.value;
        total_err -= worst.err;
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b)) {
            // Interval too narrow to split; retain its error permanently.
            total += worst.value;
            stuck_err += worst.err;
            continue;
        }
        push(worst.a, mid, worst.paired);
        push(mid, worst.b, worst.paired);
    }

    out.value = total;
    out.est_error += total_err + stuck_err;
    out.evaluations = evals;
    return out;
}

SincLogPair sinc_log_identity(int l, double pr, double alpha, double z_max)
{
    if (l < 0)
        throw std::domain_error("sinc_log_identity: require l >= 0");
    if (!(pr > 0.0))
        throw std::domain_error("sinc_log_identity: require pr > 0");
    if (!(z_max > 64.0 * M_PI))
        throw std::domain_error("sinc_log_identity: integration range too short");

    // Integrand is even in z: I = 2 int_0^Z sinc(z) (A - ln z) dz,
    // A = C_l + ln(pr).
    const double a_const = c_l(l) + std::log(pr);
    auto fn = [a_const](double z) {
        const double sinc = (z == 0.0) ? 1.0 : std::sin(z) / z;
        return sinc * (a_const - std::log(z));
    };

    double total = 0.0;
    // (0, pi]: geometric grading tames the integrable log endpoint.
    for (double b = M_PI; b > 1e-14;) {
        const double a = 0.25 * b;
        total += gk15(fn, a, b).value;
        b = a;
    }

    // Half-period panels [k pi, (k+1) pi]; their sum is an alternating
    // series, so finish with repeated averaging of the partial sums instead
    // of a hard truncation.
    const std::int64_t n_half = static_cast<std::int64_t>(std::floor(z_max / M_PI));
    constexpr int kTailTerms = 12;
    const std::int64_t n_full = std::max<std::int64_t>(1, n_half - kTailTerms);
    for (std::int64_t k = 1; k < n_full; ++k)
        total += gk15(fn, k * M_PI, (k + 1) * M_PI).value;

    double partial[kTailTerms + 1];
    partial[0] = 0.0;
    for (int j = 0; j < kTailTerms; ++j) {
        const std::int64_t k = n_full + j;
        partial[j + 1] = partial[j] + gk15(fn, k * M_PI, (k + 1) * M_PI).value;
    }
    for (int level = kTailTerms; level > 0; --level)
        for (int j = 0; j < level; ++j)
            partial[j] = 0.5 * (partial[j] + partial[j + 1]);
    total += partial[0];

    SincLogPair out;
    out.numeric = -(alpha / M_PI) * 2.0 * total;
    out.analytic = alpha * (-std::log(2.0 * pr) + digamma(l + 1.0));
    return out;
}

}  // namespace coulscat
