#ifndef SPECRIG_QUADRATURE_HPP
#define SPECRIG_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "specrig/types.hpp"

namespace specrig {

// Controls for the spectral integrals. Truncation radius 0 means "derive it
// from the integrand's tail envelope"; atoms are always summed exactly.
struct QuadratureSpec {
  double abs_tol = 1e-8;
  double trunc_radius = 0.0;
  int max_panels = 400000;
  double mollifier_width = 0.0;  // multiply integrand by exp(-(w*|u|)^2) when > 0
};

struct QuadResult {
  double value = 0.0;
  double err = 0.0;
};

struct QuadResultC {
  Complex value{0.0, 0.0};
  double err = 0.0;
};

// Adaptive Gauss-Kronrod 15(7) over [a,b] to absolute tolerance `tol`.
// Initial panels split at `breakpoints` (kinks, clip boundaries, gap edges).
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, double tol, int max_panels = 400000,
                              const std::vector<double>& breakpoints = {});

QuadResultC integrate_adaptive_c(const std::function<Complex(double)>& f,
                                 double a, double b, double tol,
                                 int max_panels = 400000,
                                 const std::vector<double>& breakpoints = {});

// Fixed-order Gauss-Legendre on one panel (no error estimate). Used where the
// integrand is a low-degree polynomial piece.
double gauss_panel(const std::function<double(double)>& f, double a, double b,
                   int order = 16);

// Iterated adaptive quadrature over a 2D box; inner tolerance is tol/width.
QuadResult integrate_box2d(const std::function<double(double, double)>& f,
                           const Box& box, double tol, int max_panels = 200000);

// Integral over the torus [-pi,pi)^d, d = 1 or 2. Smooth periodic integrands
// converge spectrally under trapezoid doubling.
QuadResult integrate_torus(const std::function<double(const Vec&)>& f, int dim,
                           double tol);
QuadResultC integrate_torus_c(const std::function<Complex(const Vec&)>& f,
                              int dim, double tol);

// Powers-of-two geometric breakpoints accumulating at 0, covering [lo, hi].
// Resolves power-law kinks of unknown location near the origin.
std::vector<double> geometric_breakpoints(double lo, double hi, int per_decade = 4);

}  // namespace specrig

#endif
