#include "casimag/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace casimag {

void QuadratureConfig::validate() const {
    if (!(std::isfinite(rel_tol) && rel_tol > 0.0))
        throw std::invalid_argument("quadrature: rel_tol must be > 0");
    if (!(std::isfinite(abs_tol) && abs_tol > 0.0))
        throw std::invalid_argument("quadrature: abs_tol must be > 0");
    if (max_depth < 1) throw std::invalid_argument("quadrature: max_depth must be >= 1");
}

namespace {

// Gauss 7 / Kronrod 15 abscissae and weights on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
};

struct Panel {
    double a, b;
    double value;
    double equad;   ///< |K15 - G7|, reducible by bisection
    double enoise;  ///< weighted integrand uncertainty, irreducible
    int depth;
};

Panel evaluate_panel(const std::function<NoisySample(double)>& f, double a, double b, int depth,
                     long& evals) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    const NoisySample f0 = f(c);
    double k15 = kWgk[7] * f0.value;
    double g7 = kWg[3] * f0.value;
    double noise = kWgk[7] * f0.noise;

    for (int i = 0; i < 7; ++i) {
        const double dx = h * kXgk[i];
        const NoisySample fp = f(c + dx);
        const NoisySample fm = f(c - dx);
        k15 += kWgk[i] * (fp.value + fm.value);
        noise += kWgk[i] * (fp.noise + fm.noise);
        if (i % 2 == 1) g7 += kWg[i / 2] * (fp.value + fm.value);
    }
    evals += 15;
    return {a, b, k15 * h, std::abs(k15 - g7) * h, noise * h, depth};
}

bool eligible(const Panel& p, int max_depth) {
    return p.depth < max_depth && std::isfinite(p.value) && p.equad > p.enoise;
}

double kahan_total(const std::vector<Panel>& panels, double Panel::*member) {
    // fixed left-to-right combination order so results are order-independent
    std::vector<const Panel*> sorted;
    sorted.reserve(panels.size());
    for (const Panel& p : panels) sorted.push_back(&p);
    std::sort(sorted.begin(), sorted.end(),
              [](const Panel* x, const Panel* y) { return x->a < y->a; });
    double sum = 0.0, comp = 0.0;
    for (const Panel* p : sorted) {
        const double y = p->*member - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

}  // namespace

IntegralEstimate integrate_adaptive_noisy(const std::function<NoisySample(double)>& f, double a,
                                          double b, const QuadratureConfig& config) {
    config.validate();
    if (!(b > a)) throw std::invalid_argument("integrate_adaptive: requires b > a");

    constexpr std::size_t kMaxPanels = 4096;
    long evals = 0;
    std::vector<Panel> panels;
    panels.push_back(evaluate_panel(f, a, b, 0, evals));

    bool converged = false;
    while (true) {
        double total = 0.0, equad = 0.0, enoise = 0.0;
        for (const Panel& p : panels) {
            total += p.value;
            equad += p.equad;
            enoise += p.enoise;
        }
        const double tol = std::max(config.abs_tol, config.rel_tol * std::abs(total));
        if (std::isfinite(total) && equad <= tol) {
            converged = true;
            break;
        }

        std::size_t worst = panels.size();
        for (std::size_t i = 0; i < panels.size(); ++i) {
            if (!eligible(panels[i], config.max_depth)) continue;
            if (worst == panels.size() || panels[i].equad > panels[worst].equad ||
                (panels[i].equad == panels[worst].equad && panels[i].a < panels[worst].a))
                worst = i;
        }
        if (worst == panels.size()) {
            // nothing can be refined further: converged only if the remaining
            // quadrature error sits at the integrand noise floor
            converged = std::isfinite(total) && equad <= std::max(tol, 2.0 * enoise);
            break;
        }
        if (panels.size() + 1 > kMaxPanels) break;

        const Panel p = panels[worst];
        const double mid = 0.5 * (p.a + p.b);
        panels[worst] = evaluate_panel(f, p.a, mid, p.depth + 1, evals);
        panels.push_back(evaluate_panel(f, mid, p.b, p.depth + 1, evals));
    }

    IntegralEstimate out;
    out.value = kahan_total(panels, &Panel::value);
    out.err_est = kahan_total(panels, &Panel::equad) + kahan_total(panels, &Panel::enoise);
    out.evals = evals;
    out.converged = converged;
    return out;
}

IntegralEstimate integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureConfig& config) {
    return integrate_adaptive_noisy([&f](double x) { return NoisySample{f(x), 0.0}; }, a, b,
                                    config);
}

}  // namespace casimag
