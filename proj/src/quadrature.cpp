#include "zipfheaps/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "zipfheaps/errors.hpp"

namespace zipfheaps {

namespace {

// Gauss-Kronrod 7/15 abscissae (positive half) and weights, QUADPACK dqk15.
constexpr double kXgk[8] = {
    0.99145537112081263920685469752633,
    0.94910791234275852452618968404785,
    0.86486442335976907278971278864093,
    0.74153118559939443986386477328079,
    0.58608723546769113029414483825873,
    0.40584515137739716690660641207696,
    0.20778495500789846760068940377324,
    0.0,
};
constexpr double kWgk[8] = {
    0.02293532201052922496373200805897,
    0.06309209262997855329070066318920,
    0.10479001032225018383987632254152,
    0.14065325971552591874518959051024,
    0.16900472663926790282658342659855,
    0.19035057806478540991325640242101,
    0.20443294007529889241416199923465,
    0.20948214108472782801299917489171,
};
constexpr double kWg[4] = {
    0.12948496616886969327061143267908,
    0.27970539148927666790146777142378,
    0.38183005050511894495036977548898,
    0.41795918367346938775510204081633,
};

struct Panel {
    double a, b;
    double value;
    double error;
    double resabs;

    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel kronrod15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    double fv[15];
    const double fc = f(center);
    fv[7] = fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        fv[i] = f(center - dx);
        fv[14 - i] = f(center + dx);
    }

    double resk = kWgk[7] * fc;
    double resabs = std::abs(resk);
    double resg = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double pair = fv[i] + fv[14 - i];
        resk += kWgk[i] * pair;
        resabs += kWgk[i] * (std::abs(fv[i]) + std::abs(fv[14 - i]));
        if (i % 2 == 1) {  // Kronrod nodes 1,3,5 carry the Gauss-7 points
            resg += kWg[i / 2] * pair;
        }
    }

    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int i = 0; i < 7; ++i) {
        resasc += kWgk[i] * (std::abs(fv[i] - reskh) + std::abs(fv[14 - i] - reskh));
    }

    double err = std::abs((resk - resg) * half);
    resasc *= std::abs(half);
    resabs *= std::abs(half);
    if (resasc != 0.0 && err != 0.0) {
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    const double eps = std::numeric_limits<double>::epsilon();
    const double tiny = std::numeric_limits<double>::min();
    if (resabs > tiny / (50.0 * eps)) {
        err = std::max(eps * 50.0 * resabs, err);
    }

    return Panel{a, b, resk * half, err, resabs};
}

QuadratureResult adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol) {
    constexpr std::size_t kMaxPanels = 8192;
    const double eps = std::numeric_limits<double>::epsilon();

    std::priority_queue<Panel> queue;
    queue.push(kronrod15(f, a, b));

    double total_value = queue.top().value;
    double total_error = queue.top().error;
    double total_resabs = queue.top().resabs;

    std::size_t panels = 1;
    while (total_error > std::max(tol, 50.0 * eps * total_resabs) && panels < kMaxPanels) {
        Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b)) {
            // interval no longer splittable in double precision; keep as is
            queue.push(worst);
            break;
        }
        Panel left = kronrod15(f, worst.a, mid);
        Panel right = kronrod15(f, mid, worst.b);
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        total_resabs += left.resabs + right.resabs - worst.resabs;
        queue.push(left);
        queue.push(right);
        ++panels;
    }

    if (total_error > std::max(tol, 50.0 * eps * total_resabs)) {
        throw numerical_error(
            "quadrature did not converge: best value " + std::to_string(total_value) +
                ", error estimate " + std::to_string(total_error) + " exceeds tolerance " +
                std::to_string(tol),
            total_value, total_error);
    }
    return QuadratureResult{total_value, total_error};
}

}  // namespace

QuadratureResult integrate_finite(const std::function<double(double)>& f, double a,
                                  double b, double tol) {
    if (!(a < b)) {
        throw std::domain_error("integrate_finite: requires a < b");
    }
    if (!(tol >= 0.0)) {
        throw std::domain_error("integrate_finite: requires tol >= 0");
    }
    return adaptive(f, a, b, tol);
}

QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f, double a,
                                         double tol) {
    if (!(a > 0.0)) {
        throw std::domain_error("integrate_semi_infinite: requires a > 0");
    }
    if (!(tol >= 0.0)) {
        throw std::domain_error("integrate_semi_infinite: requires tol >= 0");
    }
    // x = a/t maps [a, inf) onto (0, 1]; dx = -a/t^2 dt.
    auto transformed = [&f, a](double t) {
        const double fx = f(a / t);
        if (fx == 0.0) return 0.0;  // avoid 0 * inf when a/t^2 overflows
        return fx * a / (t * t);
    };
    return adaptive(transformed, 0.0, 1.0, tol);
}

}  // namespace zipfheaps
