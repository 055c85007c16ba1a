#include "tfloc/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "tfloc/error.hpp"

namespace tfloc {

Box::Box(int n, int radius) : n_(n), radius_(radius) {
  if (n < 1) throw DomainError("box dimension must be positive");
  if (radius < 0) throw DomainError("box radius must be non-negative");
  size_ = 1;
  for (int a = 0; a < n; ++a) size_ *= static_cast<std::size_t>(side());
  points_.resize(size_ * static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < size_; ++i) {
    std::size_t rest = i;
    for (int a = n - 1; a >= 0; --a) {
      points_[i * n + a] = static_cast<int>(rest % side()) - radius_;
      rest /= side();
    }
  }
}

bool Box::contains(std::span<const int> p) const {
  return std::all_of(p.begin(), p.end(), [r = radius_](int x) { return x >= -r && x <= r; });
}

std::size_t Box::index(std::span<const int> p) const {
  std::size_t idx = 0;
  for (int a = 0; a < n_; ++a) {
    if (p[a] < -radius_ || p[a] > radius_) {
      throw RangeError("lattice point outside [-" + std::to_string(radius_) + ", " +
                       std::to_string(radius_) + "]");
    }
    idx = idx * side() + static_cast<std::size_t>(p[a] + radius_);
  }
  return idx;
}

void Box::point(std::size_t index, std::span<int> out) const {
  auto p = point(index);
  std::copy(p.begin(), p.end(), out.begin());
}

LatticeSpec::LatticeSpec(int n_, int K_, int C_) : n(n_), K(K_), C(C_) {
  if (n < 1) throw DomainError("lattice dimension n must be >= 1");
  if (K < 0) throw DomainError("support radius K must be >= 0");
  if (C < 3 * K) throw DomainError("computation radius C must be >= 3K");
}

LatticeSpec LatticeSpec::with_defaults(int n, int K) { return {n, K, 3 * K}; }

std::size_t LatticeSpec::size() const {
  std::size_t s = 1;
  for (int a = 0; a < n; ++a) s *= static_cast<std::size_t>(2 * C + 1);
  return s;
}

TorusGrid::TorusGrid(int n, int M) : n_(n), M_(M) {
  if (n < 1) throw DomainError("torus dimension must be positive");
  if (M < 1) throw DomainError("torus samples M must be positive");
  size_ = 1;
  for (int a = 0; a < n; ++a) size_ *= static_cast<std::size_t>(M);
  weight_ = 1.0 / static_cast<double>(size_);
  nodes_.resize(size_ * static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < size_; ++i) {
    std::size_t rest = i;
    for (int a = n - 1; a >= 0; --a) {
      nodes_[i * n + a] = static_cast<int>(rest % M);
      rest /= M;
    }
  }
  roots_.resize(static_cast<std::size_t>(M));
  for (int r = 0; r < M; ++r) {
    roots_[r] = std::polar(1.0, 2.0 * std::numbers::pi * r / M);
  }
}

TorusGrid TorusGrid::for_lattice(const LatticeSpec& spec) { return {spec.n, 6 * spec.K + 1}; }

std::size_t TorusGrid::index(std::span<const int> j) const {
  std::size_t idx = 0;
  for (int a = 0; a < n_; ++a) {
    int q = j[a] % M_;
    if (q < 0) q += M_;
    idx = idx * M_ + static_cast<std::size_t>(q);
  }
  return idx;
}

long long TorusGrid::dot(std::size_t node_index, std::span<const int> k) const {
  auto j = node(node_index);
  long long s = 0;
  for (int a = 0; a < n_; ++a) s += static_cast<long long>(j[a]) * k[a];
  return s;
}

std::size_t TorusGrid::shifted(std::size_t node_index, std::span<const int> s) const {
  auto j = node(node_index);
  std::size_t idx = 0;
  for (int a = 0; a < n_; ++a) {
    int q = (j[a] + s[a]) % M_;
    if (q < 0) q += M_;
    idx = idx * M_ + static_cast<std::size_t>(q);
  }
  return idx;
}

// Signal

Signal::Signal(LatticeSpec spec) : spec_(spec), box_(spec.box()), values_(spec.size()) {}

Signal::Signal(LatticeSpec spec, std::vector<cplx> values)
    : spec_(spec), box_(spec.box()), values_(std::move(values)) {
  if (values_.size() != spec_.size()) {
    throw ShapeError("signal has " + std::to_string(values_.size()) + " values, lattice needs " +
                     std::to_string(spec_.size()));
  }
}

cplx Signal::at(std::span<const int> k) const {
  if (!box_.contains(k)) return {};
  return values_[box_.index(k)];
}

cplx& Signal::ref(std::span<const int> k) { return values_[box_.index(k)]; }

int Signal::support_radius() const {
  int r = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] == cplx{}) continue;
    for (int x : box_.point(i)) r = std::max(r, std::abs(x));
  }
  return r;
}

bool Signal::finite() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); });
}

double Signal::norm() const {
  double s = 0.0;
  for (cplx v : values_) s += std::norm(v);
  return std::sqrt(s);
}

bool Signal::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](cplx v) { return v == cplx{}; });
}

cplx inner(const Signal& a, const Signal& b) {
  if (!(a.spec() == b.spec())) throw ShapeError("inner product of signals on different lattices");
  cplx s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
  return s;
}

Signal operator+(const Signal& a, const Signal& b) {
  if (!(a.spec() == b.spec())) throw ShapeError("sum of signals on different lattices");
  Signal r(a.spec());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Signal operator-(const Signal& a, const Signal& b) { return a + (-1.0) * b; }

Signal operator*(cplx c, const Signal& a) {
  Signal r(a.spec());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Signal delta(const LatticeSpec& spec, std::span<const int> k) {
  Signal d(spec);
  d.ref(k) = 1.0;
  return d;
}

Signal delta(const LatticeSpec& spec, int k) {
  std::vector<int> p(static_cast<std::size_t>(spec.n), 0);
  p[0] = k;
  return delta(spec, p);
}

// PhaseSpaceField

PhaseSpaceField::PhaseSpaceField(LatticeSpec spec, TorusGrid torus, int m_radius,
                                 int degree_bound)
    : spec_(spec),
      torus_(std::move(torus)),
      m_box_(spec.n, m_radius),
      values_(m_box_.size() * torus_.size()) {
  if (torus_.dim() != spec_.n) throw ShapeError("torus and lattice dimensions differ");
  set_degree_bound(degree_bound);
}

PhaseSpaceField::PhaseSpaceField(LatticeSpec spec, TorusGrid torus, int m_radius,
                                 int degree_bound, std::vector<cplx> values)
    : PhaseSpaceField(spec, std::move(torus), m_radius, degree_bound) {
  if (values.size() != values_.size()) {
    throw ShapeError("phase-space field has " + std::to_string(values.size()) +
                     " values, shape needs " + std::to_string(values_.size()));
  }
  values_ = std::move(values);
}

void PhaseSpaceField::set_degree_bound(int d) {
  if (d < 0 || d > torus_.samples() - 1) {
    throw PrecisionError("degree bound " + std::to_string(d) + " not representable with M = " +
                         std::to_string(torus_.samples()));
  }
  degree_bound_ = d;
}

bool PhaseSpaceField::finite() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); });
}

bool PhaseSpaceField::same_shape(const PhaseSpaceField& o) const {
  return spec_.n == o.spec_.n && m_box_ == o.m_box_ && torus_ == o.torus_;
}

double PhaseSpaceField::l2_norm() const {
  double s = 0.0;
  for (cplx v : values_) s += std::norm(v);
  return std::sqrt(s * torus_.weight());
}

double PhaseSpaceField::l1_norm() const {
  double s = 0.0;
  for (cplx v : values_) s += std::abs(v);
  return s * torus_.weight();
}

double PhaseSpaceField::sup_norm() const {
  double s = 0.0;
  for (cplx v : values_) s = std::max(s, std::abs(v));
  return s;
}

cplx PhaseSpaceField::mass() const {
  cplx s{};
  for (cplx v : values_) s += v;
  return s * torus_.weight();
}

PhaseSpaceField PhaseSpaceField::conj() const {
  PhaseSpaceField r = *this;
  for (cplx& v : r.values_) v = std::conj(v);
  return r;
}

PhaseSpaceField PhaseSpaceField::abs() const {
  PhaseSpaceField r = *this;
  for (cplx& v : r.values_) v = std::abs(v);
  return r;
}

cplx inner(const PhaseSpaceField& a, const PhaseSpaceField& b) {
  if (!a.same_shape(b)) throw ShapeError("inner product of differently shaped fields");
  cplx s{};
  auto av = a.values();
  auto bv = b.values();
  for (std::size_t i = 0; i < av.size(); ++i) s += av[i] * std::conj(bv[i]);
  return s * a.torus().weight();
}

PhaseSpaceField operator*(const PhaseSpaceField& a, const PhaseSpaceField& b) {
  if (!a.same_shape(b)) throw ShapeError("product of differently shaped fields");
  // set_degree_bound refuses products whose degree the grid cannot represent
  PhaseSpaceField r(a.spec(), a.torus(), a.m_radius(), a.degree_bound() + b.degree_bound());
  auto av = a.values();
  auto bv = b.values();
  auto rv = r.values();
  for (std::size_t i = 0; i < av.size(); ++i) rv[i] = av[i] * bv[i];
  return r;
}

PhaseSpaceField operator+(const PhaseSpaceField& a, const PhaseSpaceField& b) {
  if (!a.same_shape(b)) throw ShapeError("sum of differently shaped fields");
  PhaseSpaceField r(a.spec(), a.torus(), a.m_radius(),
                    std::max(a.degree_bound(), b.degree_bound()));
  auto av = a.values();
  auto bv = b.values();
  auto rv = r.values();
  for (std::size_t i = 0; i < av.size(); ++i) rv[i] = av[i] + bv[i];
  return r;
}

PhaseSpaceField operator*(cplx c, const PhaseSpaceField& a) {
  PhaseSpaceField r = a;
  for (cplx& v : r.values()) v *= c;
  return r;
}

// Time-frequency shifts

namespace {

void check_shift(const Signal& f, std::span<const int> m) {
  if (!f.admissible()) throw RangeError("translate: signal not supported in [-K,K]^n");
  if (static_cast<int>(m.size()) != f.spec().n) throw ShapeError("translate: shift dimension");
  for (int x : m) {
    if (std::abs(x) > 2 * f.spec().K) {
      throw RangeError("translate: shift " + std::to_string(x) + " exceeds 2K = " +
                       std::to_string(2 * f.spec().K));
    }
  }
}

}  // namespace

Signal translate(const Signal& f, std::span<const int> m) {
  check_shift(f, m);
  Signal r(f.spec());
  const Box& box = f.box();
  std::vector<int> src(static_cast<std::size_t>(f.spec().n));
  for (std::size_t i = 0; i < box.size(); ++i) {
    auto k = box.point(i);
    for (int a = 0; a < f.spec().n; ++a) src[a] = k[a] - m[a];
    r[i] = f.at(src);
  }
  return r;
}

Signal translate(const Signal& f, int m) {
  std::vector<int> s(static_cast<std::size_t>(f.spec().n), 0);
  s[0] = m;
  return translate(f, s);
}

Signal modulate(const Signal& f, std::span<const double> w) {
  if (!f.finite()) throw DomainError("modulate: non-finite signal");
  if (static_cast<int>(w.size()) != f.spec().n) throw ShapeError("modulate: frequency dimension");
  Signal r(f.spec());
  const Box& box = f.box();
  for (std::size_t i = 0; i < box.size(); ++i) {
    if (f[i] == cplx{}) continue;
    auto k = box.point(i);
    double phase = 0.0;
    for (int a = 0; a < f.spec().n; ++a) {
      // reduce w_a * k_a modulo 1 before scaling so large k keeps precision
      double t = w[a] * k[a];
      phase += t - std::floor(t);
    }
    r[i] = std::polar(1.0, 2.0 * std::numbers::pi * phase) * f[i];
  }
  return r;
}

Signal modulate(const Signal& f, double w) {
  std::vector<double> v(static_cast<std::size_t>(f.spec().n), 0.0);
  v[0] = w;
  return modulate(f, v);
}

Signal gabor_atom(const Signal& g, std::span<const int> m, std::span<const double> w) {
  return modulate(translate(g, m), w);
}

Signal gabor_atom(const Signal& g, int m, double w) { return modulate(translate(g, m), w); }

Signal gabor_atom(const Signal& g, std::span<const int> m, const TorusGrid& torus,
                  std::size_t node) {
  Signal r = translate(g, m);
  const Box& box = r.box();
  for (std::size_t i = 0; i < box.size(); ++i) {
    if (r[i] == cplx{}) continue;
    r[i] *= torus.root(torus.dot(node, box.point(i)));
  }
  return r;
}

}  // namespace tfloc
