#include "tfloc/young.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "tfloc/error.hpp"

namespace tfloc {

namespace {

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

std::vector<double> log_grid(double lo, double hi, int samples) {
  std::vector<double> g(static_cast<std::size_t>(samples));
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (int i = 0; i < samples; ++i) {
    g[i] = i + 1 == samples ? hi : std::exp(a + (b - a) * i / (samples - 1));
  }
  return g;
}

}  // namespace

YoungFunction YoungFunction::power(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw DomainError("power Young function needs finite p >= 1, got " + format_number(p));
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::power;
  impl->p = p;
  impl->flags.strictly_convex = p > 1.0;
  return YoungFunction(std::move(impl));
}

YoungFunction YoungFunction::eq5() {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::eq5;
  impl->p = 2.0;
  impl->flags.strictly_convex = true;
  return YoungFunction(std::move(impl));
}

YoungFunction YoungFunction::quasi(const YoungFunction& base, double p) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw DomainError("quasi-Young order must lie in (0, 1], got " + format_number(p));
  }
  if (p == 1.0) return base;
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::quasi;
  impl->p = p;
  impl->base = std::make_shared<const YoungFunction>(base);
  auto fn = YoungFunction(impl);
  impl->flags.strictly_convex = false;
  // Flags recomputed by probing the composed function.
  bool convex = convex_on_grid(fn, 1e-6, 1e3, 128);
  impl->flags.strictly_convex = convex && base.flags().strictly_convex;
  return fn;
}

YoungFunction YoungFunction::table(std::vector<double> t, std::vector<double> v) {
  if (t.size() != v.size() || t.size() < 2) throw DomainError("table needs >= 2 matching points");
  if (t[0] != 0.0 || v[0] != 0.0) throw DomainError("table must start at (0, 0)");
  double prev_slope = 0.0;
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (!(t[i] > t[i - 1]) || !std::isfinite(v[i])) {
      throw DomainError("table abscissae must increase and values be finite");
    }
    const double slope = (v[i] - v[i - 1]) / (t[i] - t[i - 1]);
    if (slope < prev_slope - 1e-12 * std::max(1.0, std::abs(prev_slope))) {
      throw DomainError("table is not convex");
    }
    prev_slope = slope;
  }
  if (!(prev_slope > 0.0)) throw DomainError("table must grow without bound");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::table;
  impl->t = std::move(t);
  impl->v = std::move(v);
  impl->flags.strictly_convex = false;  // piecewise linear
  return YoungFunction(std::move(impl));
}

YoungFunction YoungFunction::conjugate(const YoungFunction& base) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::conjugate;
  impl->base = std::make_shared<const YoungFunction>(base);
  auto fn = YoungFunction(impl);
  impl->flags.strictly_convex = base.flags().strictly_convex;
  return fn;
}

std::string YoungFunction::name() const {
  switch (impl_->kind) {
    case Kind::power:
      return "power(" + format_number(impl_->p) + ")";
    case Kind::eq5:
      return "eq5";
    case Kind::quasi:
      return "quasi(" + impl_->base->name() + "," + format_number(impl_->p) + ")";
    case Kind::table:
      return "table(" + std::to_string(impl_->t.size()) + ")";
    case Kind::conjugate:
      return "conjugate(" + impl_->base->name() + ")";
  }
  return "?";
}

double YoungFunction::operator()(double t) const {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw DomainError("Young function argument must be finite and >= 0, got " + format_number(t));
  }
  return eval_unchecked(t);
}

double YoungFunction::eval_unchecked(double t) const {
  const Impl& f = *impl_;
  switch (f.kind) {
    case Kind::power:
      if (f.p == 1.0) return t;
      if (f.p == 2.0) return t * t;
      return std::pow(t, f.p);
    case Kind::eq5:
      if (t == 0.0) return 0.0;
      if (t <= kEq5Switch) return -t * t * std::log(t);
      return t * t + 0.5 * std::exp(-3.0);
    case Kind::quasi:
      return f.base->eval_unchecked(std::pow(t, f.p));
    case Kind::table: {
      const auto& ts = f.t;
      const auto& vs = f.v;
      auto it = std::upper_bound(ts.begin(), ts.end(), t);
      std::size_t i = static_cast<std::size_t>(it - ts.begin());
      if (i >= ts.size()) i = ts.size() - 1;
      const std::size_t lo = i - 1;
      const double slope = (vs[i] - vs[lo]) / (ts[i] - ts[lo]);
      return vs[lo] + slope * (t - ts[lo]);
    }
    case Kind::conjugate:
      return complementary(*f.base, t);
  }
  return 0.0;
}

bool operator==(const YoungFunction& a, const YoungFunction& b) {
  if (a.impl_ == b.impl_) return true;
  const auto& x = *a.impl_;
  const auto& y = *b.impl_;
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case YoungFunction::Kind::power:
      return x.p == y.p;
    case YoungFunction::Kind::eq5:
      return true;
    case YoungFunction::Kind::quasi:
      return x.p == y.p && *x.base == *y.base;
    case YoungFunction::Kind::table:
      return x.t == y.t && x.v == y.v;
    case YoungFunction::Kind::conjugate:
      return *x.base == *y.base;
  }
  return false;
}

double complementary(const YoungFunction& phi, double y) {
  if (!(y >= 0.0) || !std::isfinite(y)) throw DomainError("complementary: y must be finite, >= 0");
  if (!phi.flags().finite || !phi.flags().continuous) {
    throw DomainError("complementary: needs a finite continuous Young function");
  }
  if (y == 0.0) return 0.0;

  // Phi(x)/x >= y implies Phi'(x) >= y, so the maximiser lies in [0, x].
  auto bracketed = [&](double x) { return phi(x) >= y * x; };
  double hi = 1.0;
  if (bracketed(hi)) {
    while (hi > 0x1p-200 && bracketed(0.5 * hi)) hi *= 0.5;
  } else {
    while (!bracketed(hi)) {
      hi *= 2.0;
      if (hi > 0x1p60) {
        throw UnboundedError("complementary: x y - Phi(x) unbounded for y = " + std::to_string(y) +
                             " under " + phi.name());
      }
    }
  }

  auto objective = [&](double x) { return x * y - phi(x); };
  constexpr double inv_phi = 0.6180339887498949;
  double a = 0.0;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = objective(c);
  double fd = objective(d);
  const double tol = 1e-9 * hi;
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = objective(d);
    }
  }
  return std::max({0.0, fc, fd});
}

double delta2_probe(const YoungFunction& phi, double r, int samples) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("delta2_probe: r must be > 0");
  if (samples < 16) throw DomainError("delta2_probe: needs at least 16 samples");
  double sup = 0.0;
  for (double x : log_grid(r * 0x1p-40, r, samples)) {
    const double num = phi(2.0 * x);
    const double den = phi(x);
    if (den == 0.0) {
      if (num > 0.0) return std::numeric_limits<double>::infinity();
      continue;
    }
    sup = std::max(sup, num / den);
  }
  return sup;
}

bool convex_on_grid(const YoungFunction& phi, double lo, double hi, int samples) {
  const auto grid = log_grid(lo, hi, samples);
  std::vector<double> val(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) val[i] = phi(grid[i]);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      const double mid = phi(0.5 * (grid[i] + grid[j]));
      if (mid > 0.5 * (val[i] + val[j]) + 1e-12 * (1.0 + val[j])) return false;
    }
  }
  return true;
}

}  // namespace tfloc
