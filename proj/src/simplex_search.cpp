#include "antipodal/detail/simplex_search.hpp"

#include <algorithm>
#include <numeric>

namespace antipodal::detail {

SimplexSearchResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                                Vector x0, double step, int max_iter, double size_tol)
{
    const std::size_t n = x0.size();
    std::vector<Vector> pts(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i)
        pts[i + 1][i] += step;
    std::vector<double> vals(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        vals[i] = f(pts[i]);

    std::vector<std::size_t> order(n + 1);
    int it = 0;
    for (; it < max_iter; ++it) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second = order[n - 1];

        double size = 0.0;
        for (std::size_t i = 0; i <= n; ++i)
            size = std::max(size, distance(pts[i], pts[best]));
        if (size < size_tol)
            break;

        Vector centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i)
            if (i != worst)
                for (std::size_t k = 0; k < n; ++k)
                    centroid[k] += pts[i][k] / static_cast<double>(n);

        auto along = [&](double t) {
            Vector y(n);
            for (std::size_t k = 0; k < n; ++k)
                y[k] = centroid[k] + t * (pts[worst][k] - centroid[k]);
            return y;
        };

        Vector reflected = along(-1.0);
        const double fr = f(reflected);
        if (fr < vals[best]) {
            Vector expanded = along(-2.0);
            const double fe = f(expanded);
            if (fe < fr) {
                pts[worst] = std::move(expanded);
                vals[worst] = fe;
            } else {
                pts[worst] = std::move(reflected);
                vals[worst] = fr;
            }
            continue;
        }
        if (fr < vals[second]) {
            pts[worst] = std::move(reflected);
            vals[worst] = fr;
            continue;
        }
        const bool outside = fr < vals[worst];
        Vector contracted = along(outside ? -0.5 : 0.5);
        const double fc = f(contracted);
        if (fc < (outside ? fr : vals[worst])) {
            pts[worst] = std::move(contracted);
            vals[worst] = fc;
            continue;
        }
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == best)
                continue;
            for (std::size_t k = 0; k < n; ++k)
                pts[i][k] = pts[best][k] + 0.5 * (pts[i][k] - pts[best][k]);
            vals[i] = f(pts[i]);
        }
    }

    const auto best = static_cast<std::size_t>(std::min_element(vals.begin(), vals.end()) - vals.begin());
    return {pts[best], vals[best], it};
}

} // namespace antipodal::detail
