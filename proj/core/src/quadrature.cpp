#include "specrig/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace specrig {

namespace {

// Gauss-Kronrod 15-point nodes/weights on [-1,1] with embedded 7-point Gauss.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

template <typename T>
struct Panel {
  double a, b;
  T value;
  double err;
};

template <typename T, typename F>
Panel<T> gk15(const F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  T fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kXgk[i]);
    fv[14 - i] = f(c + h * kXgk[i]);
  }
  fv[7] = f(c);
  T kron = kWgk[7] * fv[7];
  T gauss = kWg[3] * fv[7];
  for (int i = 0; i < 7; ++i) {
    kron += kWgk[i] * (fv[i] + fv[14 - i]);
    if (i % 2 == 1) gauss += kWg[i / 2] * (fv[i] + fv[14 - i]);
  }
  kron *= h;
  gauss *= h;
  double err = std::abs(kron - gauss);
  return {a, b, kron, err};
}

template <typename T, typename F>
std::pair<T, double> adaptive(const F& f, double a, double b, double tol,
                              int max_panels,
                              const std::vector<double>& breakpoints) {
  std::vector<double> edges{a, b};
  for (double x : breakpoints)
    if (x > a && x < b) edges.push_back(x);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  auto cmp = [](const Panel<T>& p, const Panel<T>& q) { return p.err < q.err; };
  std::priority_queue<Panel<T>, std::vector<Panel<T>>, decltype(cmp)> heap(cmp);
  T total{};
  double toterr = 0.0;
  for (size_t i = 0; i + 1 < edges.size(); ++i) {
    auto p = gk15<T>(f, edges[i], edges[i + 1]);
    total += p.value;
    toterr += p.err;
    heap.push(p);
  }
  int panels = static_cast<int>(edges.size()) - 1;
  while (toterr > tol && panels < max_panels && !heap.empty()) {
    Panel<T> worst = heap.top();
    heap.pop();
    if (worst.b - worst.a < 1e-15 * (std::abs(worst.a) + std::abs(worst.b) + 1.0)) {
      // interval exhausted at machine resolution; accept its estimate
      continue;
    }
    double m = 0.5 * (worst.a + worst.b);
    auto l = gk15<T>(f, worst.a, m);
    auto r = gk15<T>(f, m, worst.b);
    total += l.value + r.value - worst.value;
    toterr += l.err + r.err - worst.err;
    heap.push(l);
    heap.push(r);
    ++panels;
  }
  return {total, toterr};
}

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, double tol, int max_panels,
                              const std::vector<double>& breakpoints) {
  auto [v, e] = adaptive<double>(f, a, b, tol, max_panels, breakpoints);
  return {v, e};
}

QuadResultC integrate_adaptive_c(const std::function<Complex(double)>& f,
                                 double a, double b, double tol, int max_panels,
                                 const std::vector<double>& breakpoints) {
  auto [v, e] = adaptive<Complex>(f, a, b, tol, max_panels, breakpoints);
  return {v, e};
}

double gauss_panel(const std::function<double(double)>& f, double a, double b,
                   int order) {
  // Gauss-Legendre via GK nodes when order <= 15; otherwise composite.
  if (order <= 15) return gk15<double>(f, a, b).value;
  int pieces = (order + 14) / 15;
  double h = (b - a) / pieces;
  double s = 0.0;
  for (int i = 0; i < pieces; ++i)
    s += gk15<double>(f, a + i * h, a + (i + 1) * h).value;
  return s;
}

QuadResult integrate_box2d(const std::function<double(double, double)>& f,
                           const Box& box, double tol, int max_panels) {
  double width = box.hi[0] - box.lo[0];
  double inner_tol = 0.5 * tol / std::max(width, 1.0);
  double inner_err_max = 0.0;
  auto outer = [&](double x) {
    auto r = integrate_adaptive([&](double y) { return f(x, y); }, box.lo[1],
                                box.hi[1], inner_tol, max_panels);
    inner_err_max = std::max(inner_err_max, r.err);
    return r.value;
  };
  auto res = integrate_adaptive(outer, box.lo[0], box.hi[0], 0.5 * tol,
                                max_panels);
  res.err += inner_err_max * width;
  return res;
}

QuadResult integrate_torus(const std::function<double(const Vec&)>& f, int dim,
                           double tol) {
  if (dim == 1) {
    auto g = [&](double t) { return f(vec1(t)); };
    return integrate_adaptive(g, -M_PI, M_PI, tol);
  }
  if (dim != 2) throw QuadratureDivergence("integrate_torus: dim > 2 unsupported");
  // trapezoid doubling; exact for trigonometric polynomials once resolved
  double prev = 0.0;
  for (int n = 32; n <= 4096; n *= 2) {
    double h = 2.0 * M_PI / n;
    double s = 0.0;
    Vec u(2);
    for (int i = 0; i < n; ++i) {
      u[0] = -M_PI + i * h;
      for (int j = 0; j < n; ++j) {
        u[1] = -M_PI + j * h;
        s += f(u);
      }
    }
    s *= h * h;
    if (n > 32 && std::abs(s - prev) < tol) return {s, std::abs(s - prev)};
    prev = s;
  }
  return {prev, tol};
}

QuadResultC integrate_torus_c(const std::function<Complex(const Vec&)>& f,
                              int dim, double tol) {
  if (dim == 1) {
    auto g = [&](double t) { return f(vec1(t)); };
    return integrate_adaptive_c(g, -M_PI, M_PI, tol);
  }
  if (dim != 2) throw QuadratureDivergence("integrate_torus_c: dim > 2 unsupported");
  Complex prev{};
  for (int n = 32; n <= 4096; n *= 2) {
    double h = 2.0 * M_PI / n;
    Complex s{};
    Vec u(2);
    for (int i = 0; i < n; ++i) {
      u[0] = -M_PI + i * h;
      for (int j = 0; j < n; ++j) {
        u[1] = -M_PI + j * h;
        s += f(u);
      }
    }
    s *= h * h;
    if (n > 32 && std::abs(s - prev) < tol) return {s, std::abs(s - prev)};
    prev = s;
  }
  return {prev, tol};
}

std::vector<double> geometric_breakpoints(double lo, double hi, int per_decade) {
  std::vector<double> pts;
  double top = std::max(std::abs(lo), std::abs(hi));
  if (top <= 0.0) return pts;
  double ratio = std::pow(10.0, -1.0 / per_decade);
  for (double x = top; x > 1e-14 * top; x *= ratio) {
    if (x > lo && x < hi) pts.push_back(x);
    if (-x > lo && -x < hi) pts.push_back(-x);
  }
  if (lo < 0.0 && hi > 0.0) pts.push_back(0.0);
  return pts;
}

}  // namespace specrig
