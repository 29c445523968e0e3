#include "qbm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace qbm {

namespace {

// 15-point Kronrod extension of 7-point Gauss (QUADPACK dqk15 data).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b;
    double value;
    double error;
};

// One Gauss-Kronrod pass over [a, b] with the QUADPACK error heuristic.
Segment gk15(const Integrand& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    double fv[15];
    const double fc = f(center);
    fv[7] = fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        fv[j] = f(center - dx);
        fv[14 - j] = f(center + dx);
    }

    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    double resabs = std::abs(resk);
    for (int j = 0; j < 7; ++j) {
        const double sum = fv[j] + fv[14 - j];
        resk += kWgk[j] * sum;
        resabs += kWgk[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
        if (j % 2 == 1) resg += kWg[j / 2] * sum;
    }

    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv[j] - reskh) + std::abs(fv[14 - j] - reskh));

    resabs *= std::abs(half);
    resasc *= std::abs(half);
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    const double uflow = std::numeric_limits<double>::min();
    if (resabs > uflow / (50.0 * eps)) err = std::max(err, 50.0 * eps * resabs);

    return {a, b, resk * half, err};
}

bool too_narrow(double a, double b) {
    const double eps = std::numeric_limits<double>::epsilon();
    return std::abs(b - a) <= 32.0 * eps * std::max({std::abs(a), std::abs(b), 1.0});
}

}  // namespace

void QuadratureSpec::validate() const {
    if (!(rel_tol > 0.0)) throw std::invalid_argument("QuadratureSpec: rel_tol must be > 0");
    if (!(abs_tol > 0.0)) throw std::invalid_argument("QuadratureSpec: abs_tol must be > 0");
    if (max_subdivisions < 1)
        throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 1");
}

QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureSpec& spec,
                           std::span<const double> breakpoints) {
    spec.validate();
    if (a == b) return {0.0, 0.0, 0};
    if (!(a < b)) throw std::invalid_argument("integrate: requires a < b");

    std::vector<double> edges;
    edges.push_back(a);
    for (double p : breakpoints)
        if (p > a && p < b) edges.push_back(p);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::vector<Segment> segs;
    segs.reserve(64);
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        segs.push_back(gk15(f, edges[i], edges[i + 1]));

    auto by_error = [](const Segment& l, const Segment& r) { return l.error < r.error; };
    std::make_heap(segs.begin(), segs.end(), by_error);

    double value = 0.0, error = 0.0;
    for (const auto& s : segs) {
        value += s.value;
        error += s.error;
    }

    int splits = 0;
    bool roundoff_limited = false;
    while (error > std::max(spec.abs_tol, spec.rel_tol * std::abs(value))) {
        if (splits >= spec.max_subdivisions)
            throw QuadratureError("integrate: tolerance not reached after " +
                                      std::to_string(splits) + " subdivisions",
                                  value, error);
        std::pop_heap(segs.begin(), segs.end(), by_error);
        Segment worst = segs.back();
        segs.pop_back();
        if (too_narrow(worst.a, worst.b)) {
            segs.push_back(worst);
            std::push_heap(segs.begin(), segs.end(), by_error);
            roundoff_limited = true;
            break;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        Segment left = gk15(f, worst.a, mid);
        Segment right = gk15(f, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        segs.push_back(left);
        std::push_heap(segs.begin(), segs.end(), by_error);
        segs.push_back(right);
        std::push_heap(segs.begin(), segs.end(), by_error);
        ++splits;
    }

    // Recompute totals to shed accumulated cancellation in the running sums.
    value = 0.0;
    error = 0.0;
    for (const auto& s : segs) {
        value += s.value;
        error += s.error;
    }
    if (!std::isfinite(value))
        throw QuadratureError("integrate: non-finite integrand encountered", value, error);
    if (roundoff_limited && error > 100.0 * std::max(spec.abs_tol, spec.rel_tol * std::abs(value)))
        throw QuadratureError("integrate: roundoff-limited below requested tolerance", value,
                              error);
    return {value, error, splits};
}

QuadratureResult integrate_semi_infinite(const Integrand& f, const QuadratureSpec& spec,
                                         double split, std::span<const double> breakpoints) {
    spec.validate();
    if (!(split > 0.0)) throw std::invalid_argument("integrate_semi_infinite: split must be > 0");
    if (spec.tail_decay_exponent < 2.0)
        throw std::invalid_argument(
            "integrate_semi_infinite: tail map requires decay at least like w^-2");

    QuadratureSpec half = spec;
    half.abs_tol = 0.5 * spec.abs_tol;
    half.rel_tol = 0.5 * spec.rel_tol;

    QuadratureResult head = integrate(f, 0.0, split, half, breakpoints);

    // u = split/w maps (split, inf) onto (0, 1); dw = -split/u^2 du.
    auto mapped = [&f, split](double u) {
        const double w = split / u;
        return f(w) * split / (u * u);
    };
    QuadratureResult tail = integrate(mapped, 0.0, 1.0, half);

    return {head.value + tail.value, head.error + tail.error,
            head.subdivisions + tail.subdivisions};
}

void kronrod15_panels(double a, double b, int panels, std::vector<double>& xs,
                      std::vector<double>& ws) {
    if (panels < 1) throw std::invalid_argument("kronrod15_panels: panels must be >= 1");
    xs.resize(15 * static_cast<std::size_t>(panels));
    ws.resize(xs.size());
    const double h = (b - a) / panels;
    std::size_t k = 0;
    for (int p = 0; p < panels; ++p) {
        const double center = a + (p + 0.5) * h;
        const double half = 0.5 * h;
        for (int j = 0; j < 7; ++j) {
            xs[k] = center - half * kXgk[j];
            ws[k++] = half * kWgk[j];
            xs[k] = center + half * kXgk[j];
            ws[k++] = half * kWgk[j];
        }
        xs[k] = center;
        ws[k++] = half * kWgk[7];
    }
}

QuadratureResult integrate_cosine_transform(const Integrand& g, double t, double feature_end,
                                            const QuadratureSpec& spec) {
    spec.validate();
    if (!(t > 0.0))
        throw std::invalid_argument("integrate_cosine_transform: requires t > 0");
    if (!(feature_end > 0.0))
        throw std::invalid_argument("integrate_cosine_transform: requires feature_end > 0");

    auto fw = [&g, t](double w) { return g(w) * std::cos(w * t); };

    const double period = M_PI / t;
    // Start the panel train on a zero of cos(w t) past the feature region.
    const double n0 = std::ceil((feature_end * t - M_PI_2) / M_PI) + 1.0;
    const double w0 = (n0 * M_PI + M_PI_2) / t;

    QuadratureSpec head_spec = spec;
    head_spec.abs_tol = 0.5 * spec.abs_tol;
    QuadratureResult head = integrate(fw, 0.0, w0, head_spec);

    // Half-period panels alternate in sign once g is monotone; partial sums
    // are accelerated by repeated averaging (Euler transformation), which
    // handles even conditionally convergent 1/w tails.
    constexpr int kMaxPanels = 640;
    constexpr int kAvgDepth = 24;
    std::vector<double> partial;
    partial.reserve(kMaxPanels);
    double sum = 0.0, panel_err = 0.0;
    double prev_mag = std::numeric_limits<double>::infinity();
    int n = 0;
    for (; n < kMaxPanels; ++n) {
        const double a = w0 + n * period;
        Segment s = gk15(fw, a, a + period);
        sum += s.value;
        panel_err += s.error;
        partial.push_back(sum);
        const double mag = std::abs(s.value);
        const double tol =
            0.25 * std::max(spec.abs_tol, spec.rel_tol * std::abs(head.value + sum));
        if (n >= kAvgDepth && mag < tol && prev_mag < tol) break;
        prev_mag = mag;
    }

    // Repeated averaging of the last kAvgDepth partial sums; each averaging
    // level roughly halves the alternating truncation error.
    const int depth = std::min<int>(kAvgDepth, static_cast<int>(partial.size()));
    std::vector<double> avg(partial.end() - depth, partial.end());
    double accel_err = 0.0;
    double prev_front = avg.back();
    while (avg.size() > 1) {
        for (std::size_t i = 0; i + 1 < avg.size(); ++i) avg[i] = 0.5 * (avg[i] + avg[i + 1]);
        avg.pop_back();
        accel_err = std::abs(avg.front() - prev_front);
        prev_front = avg.front();
    }
    const double tail_value = avg.front();

    return {head.value + tail_value, head.error + panel_err + accel_err,
            head.subdivisions + n};
}

}  // namespace qbm
