#include "qparity/quadrature.hpp"

#include <cmath>

namespace qparity {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
const double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
const double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
const double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double value;
  double error;
};

Panel gk15(const std::function<double(double)>& f, double lo, double hi) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  const double fc = f(c);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double x = h * kXgk[j];
    const double f1 = f(c - x);
    const double f2 = f(c + x);
    resk += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  return Panel{resk * h, std::abs((resk - resg) * h)};
}

void adapt(const std::function<double(double)>& f, double lo, double hi,
           double tol, int depth, QuadResult& out) {
  const Panel p = gk15(f, lo, hi);
  out.evals += 15;
  if (p.error <= tol || depth <= 0) {
    out.value += p.value;
    out.error += p.error;
    if (p.error > tol) out.converged = false;
    return;
  }
  const double mid = 0.5 * (lo + hi);
  adapt(f, lo, mid, 0.5 * tol, depth - 1, out);
  adapt(f, mid, hi, 0.5 * tol, depth - 1, out);
}

}  // namespace

QuadResult integrate_gk(const std::function<double(double)>& f, double lo,
                        double hi, double abs_tol, int max_depth) {
  QuadResult r;
  if (lo == hi) return r;
  adapt(f, lo, hi, abs_tol, max_depth, r);
  return r;
}

QuadResult integrate_gk_rel(const std::function<double(double)>& f, double lo,
                            double hi, double rel_tol, double abs_floor,
                            int max_depth) {
  QuadResult r;
  if (lo == hi) return r;
  const Panel pilot = gk15(f, lo, hi);
  const double tol = std::max(abs_floor, rel_tol * std::abs(pilot.value));
  adapt(f, lo, hi, tol, max_depth, r);
  r.evals += 15;
  return r;
}

}  // namespace qparity
