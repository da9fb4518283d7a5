#pragma once

// Plain Nelder-Mead downhill simplex on R^n. Deterministic: no randomness,
// ties broken by index order. Used as the derivative-free local search under
// the multi-start optimizers.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace entrans {

struct NelderMeadOptions {
  int max_iter = 4000;     // objective evaluations, roughly
  double ftol = 1e-11;     // stop when the simplex f-spread falls below this
  double xtol = 1e-10;     // ... and the vertex spread falls below this
  double init_step = 0.6;  // initial simplex edge length
};

struct NelderMeadResult {
  std::vector<double> x;
  double f = 0.0;
  int evaluations = 0;
  bool converged = false;
};

template <class F>
NelderMeadResult nelder_mead(F&& f, std::vector<double> x0, const NelderMeadOptions& opt = {}) {
  const std::size_t n = x0.size();
  const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;

  std::vector<std::vector<double>> v(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i) v[i + 1][i] += opt.init_step;

  NelderMeadResult res;
  std::vector<double> fv(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    fv[i] = f(v[i]);
    ++res.evaluations;
  }

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), xr(n), xe(n), xc(n);

  while (res.evaluations < opt.max_iter) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });

    const std::size_t best = order[0], worst = order[n], second_worst = order[n - 1];

    double fspread = std::abs(fv[worst] - fv[best]);
    double xspread = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      xspread = std::max(xspread, std::abs(v[worst][i] - v[best][i]));
    if (fspread < opt.ftol && xspread < opt.xtol) {
      res.converged = true;
      break;
    }

    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t k = 0; k <= n; ++k)
        if (k != worst) s += v[k][i];
      centroid[i] = s / static_cast<double>(n);
    }

    for (std::size_t i = 0; i < n; ++i) xr[i] = centroid[i] + alpha * (centroid[i] - v[worst][i]);
    const double fr = f(xr);
    ++res.evaluations;

    if (fr < fv[best]) {
      for (std::size_t i = 0; i < n; ++i) xe[i] = centroid[i] + gamma * (xr[i] - centroid[i]);
      const double fe = f(xe);
      ++res.evaluations;
      if (fe < fr) {
        v[worst] = xe;
        fv[worst] = fe;
      } else {
        v[worst] = xr;
        fv[worst] = fr;
      }
    } else if (fr < fv[second_worst]) {
      v[worst] = xr;
      fv[worst] = fr;
    } else {
      const bool outside = fr < fv[worst];
      if (outside) {
        for (std::size_t i = 0; i < n; ++i) xc[i] = centroid[i] + rho * (xr[i] - centroid[i]);
      } else {
        for (std::size_t i = 0; i < n; ++i) xc[i] = centroid[i] - rho * (centroid[i] - v[worst][i]);
      }
      const double fc = f(xc);
      ++res.evaluations;
      if (fc < std::min(fr, fv[worst])) {
        v[worst] = xc;
        fv[worst] = fc;
      } else {
        // shrink towards the best vertex
        for (std::size_t k = 0; k <= n; ++k) {
          if (k == best) continue;
          for (std::size_t i = 0; i < n; ++i) v[k][i] = v[best][i] + sigma * (v[k][i] - v[best][i]);
          fv[k] = f(v[k]);
          ++res.evaluations;
        }
      }
    }
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i <= n; ++i)
    if (fv[i] < fv[best]) best = i;
  res.x = v[best];
  res.f = fv[best];
  return res;
}

}  // namespace entrans
