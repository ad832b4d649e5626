#include "reslat/quadrature.hpp"

#include <cmath>
#include <functional>
#include <queue>
#include <vector>

#include "reslat/errors.hpp"

namespace reslat {

namespace {

// Gauss-Legendre nodes/weights on [-1, 1].
struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};

GaussRule make_gauss(int order) {
  // Newton iteration on Legendre polynomials.
  GaussRule r;
  r.x.resize(order);
  r.w.resize(order);
  for (int i = 0; i < order; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    r.x[i] = x;
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= order; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    const double dp = order * (x * p1 - p0) / (x * x - 1.0);
    r.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

const GaussRule& gauss7() {
  static const GaussRule r = make_gauss(7);
  return r;
}

const GaussRule& gauss15() {
  static const GaussRule r = make_gauss(15);
  return r;
}

struct Cell {
  double x0, x1, y0, y1;
  double value;
  double error;
  bool operator<(const Cell& o) const { return error < o.error; }
};

double tensor_gauss(const GaussRule& g,
                    const std::function<double(double, double)>& f,
                    const Cell& c) {
  const double hx = 0.5 * (c.x1 - c.x0), cx = 0.5 * (c.x1 + c.x0);
  const double hy = 0.5 * (c.y1 - c.y0), cy = 0.5 * (c.y1 + c.y0);
  double sum = 0.0;
  for (std::size_t i = 0; i < g.x.size(); ++i) {
    const double x = cx + hx * g.x[i];
    double row = 0.0;
    for (std::size_t j = 0; j < g.x.size(); ++j)
      row += g.w[j] * f(x, cy + hy * g.x[j]);
    sum += g.w[i] * row;
  }
  return sum * hx * hy;
}

void evaluate(const std::function<double(double, double)>& f, Cell& c) {
  const double coarse = tensor_gauss(gauss7(), f, c);
  c.value = tensor_gauss(gauss15(), f, c);
  c.error = std::abs(c.value - coarse);
}

double adaptive_integrate(const std::function<double(double, double)>& f,
                          std::vector<Cell> cells, double tol,
                          std::size_t max_cells) {
  std::priority_queue<Cell> heap;
  double total = 0.0, err = 0.0;
  for (Cell& c : cells) {
    evaluate(f, c);
    total += c.value;
    err += c.error;
    heap.push(c);
  }
  std::size_t n_cells = cells.size();
  while (err > tol && !heap.empty()) {
    if (n_cells > max_cells)
      throw ConvergenceFailure("quadrature budget exhausted before tolerance");
    const Cell worst = heap.top();
    heap.pop();
    total -= worst.value;
    err -= worst.error;
    const double xm = 0.5 * (worst.x0 + worst.x1);
    const double ym = 0.5 * (worst.y0 + worst.y1);
    const Cell quads[4] = {
        {worst.x0, xm, worst.y0, ym, 0, 0},
        {xm, worst.x1, worst.y0, ym, 0, 0},
        {worst.x0, xm, ym, worst.y1, 0, 0},
        {xm, worst.x1, ym, worst.y1, 0, 0},
    };
    for (Cell q : quads) {
      evaluate(f, q);
      total += q.value;
      err += q.error;
      heap.push(q);
      ++n_cells;
    }
  }
  return total;
}

}  // namespace

double quadrature_r0(LatticeKind kind, std::int64_t m, std::int64_t n,
                     double tol) {
  if (tol <= 0) throw DomainError("quadrature_r0 requires tol > 0");
  if (m == 0 && n == 0) return 0.0;
  const double dm = static_cast<double>(m), dn = static_cast<double>(n);

  std::vector<Cell> cells;
  std::function<double(double, double)> f;
  double scale;
  if (kind == LatticeKind::Square) {
    // R0 = (1/pi^2) Int_{[0,pi]^2} (1 - cos(m k1) cos(n k2)) / (2 - cos k1 - cos k2)
    f = [dm, dn](double k1, double k2) {
      const double denom = 2.0 - std::cos(k1) - std::cos(k2);
      if (denom == 0.0) return 0.0;
      return (1.0 - std::cos(dm * k1) * std::cos(dn * k2)) / denom;
    };
    scale = 1.0 / (M_PI * M_PI);
    // Seeding with the singular corner isolated at (0, 0).
    const int seed = 4;
    for (int i = 0; i < seed; ++i)
      for (int j = 0; j < seed; ++j)
        cells.push_back({i * M_PI / seed, (i + 1) * M_PI / seed,
                         j * M_PI / seed, (j + 1) * M_PI / seed, 0, 0});
  } else {
    // R0 = (2/(2pi)^2) Int_{[-pi,pi]^2}
    //      (1 - cos(m k1 + n k2)) / (3 - cos k1 - cos k2 - cos(k1 - k2))
    f = [dm, dn](double k1, double k2) {
      const double denom =
          3.0 - std::cos(k1) - std::cos(k2) - std::cos(k1 - k2);
      if (denom == 0.0) return 0.0;
      return (1.0 - std::cos(dm * k1 + dn * k2)) / denom;
    };
    scale = 1.0 / (4.0 * M_PI * M_PI);
    const int seed = 4;
    for (int i = -seed; i < seed; ++i)
      for (int j = -seed; j < seed; ++j)
        cells.push_back({i * M_PI / seed, (i + 1) * M_PI / seed,
                         j * M_PI / seed, (j + 1) * M_PI / seed, 0, 0});
  }
  const double raw = adaptive_integrate(f, std::move(cells), tol / scale,
                                        /*max_cells=*/400000);
  return scale * raw;
}

}  // namespace reslat
