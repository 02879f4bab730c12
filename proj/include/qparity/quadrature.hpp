#pragma once

#include <functional>

namespace qparity {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;   // accumulated estimate
  long evals = 0;
  bool converged = true;

  QuadResult& operator+=(const QuadResult& o) {
    value += o.value;
    error += o.error;
    evals += o.evals;
    converged = converged && o.converged;
    return *this;
  }
};

/// Adaptive Gauss-Kronrod 7/15 on [lo, hi] with absolute tolerance. Bisects
/// until the local |K15 - G7| estimate drops below the local budget or the
/// depth limit is hit (which clears `converged`).
QuadResult integrate_gk(const std::function<double(double)>& f, double lo,
                        double hi, double abs_tol, int max_depth = 40);

/// Same, with the absolute tolerance derived from a pilot pass:
/// max(abs_floor, rel_tol * |pilot value|). Keeps tolerances achievable when
/// the integral's magnitude is not known in advance.
QuadResult integrate_gk_rel(const std::function<double(double)>& f, double lo,
                            double hi, double rel_tol, double abs_floor,
                            int max_depth = 40);

}  // namespace qparity
