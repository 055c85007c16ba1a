#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace tfloc {

using cplx = std::complex<double>;

/// The cube [-radius, radius]^n of Z^n with a lexicographic flat index
/// (slowest axis first).
class Box {
 public:
  Box() = default;
  Box(int n, int radius);

  int dim() const { return n_; }
  int radius() const { return radius_; }
  int side() const { return 2 * radius_ + 1; }
  std::size_t size() const { return size_; }

  bool contains(std::span<const int> point) const;
  std::size_t index(std::span<const int> point) const;
  void point(std::size_t index, std::span<int> out) const;

  /// All points in index order, flattened (size() * dim() integers).
  const std::vector<int>& points() const { return points_; }
  std::span<const int> point(std::size_t index) const {
    return {points_.data() + index * static_cast<std::size_t>(n_),
            static_cast<std::size_t>(n_)};
  }

  friend bool operator==(const Box& a, const Box& b) {
    return a.n_ == b.n_ && a.radius_ == b.radius_;
  }

 private:
  int n_ = 1;
  int radius_ = 0;
  std::size_t size_ = 1;
  std::vector<int> points_;
};

/// Finite truncation of Z^n: admissible signals live in [-K,K]^n, arrays are
/// indexed by [-C,C]^n. C >= 3K keeps every translate by |m| <= 2K in range.
struct LatticeSpec {
  int n = 1;
  int K = 0;
  int C = 0;

  LatticeSpec() = default;
  LatticeSpec(int n, int K, int C);
  /// C defaults to 3K.
  static LatticeSpec with_defaults(int n, int K);

  Box box() const { return {n, C}; }
  Box support_box() const { return {n, K}; }
  std::size_t size() const;

  friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;
};

/// Uniform grid w_j = j / M on T^n with weight 1/M^n per node. The grid sum
/// integrates trigonometric polynomials of per-axis degree <= M-1 exactly.
class TorusGrid {
 public:
  TorusGrid() : TorusGrid(1, 1) {}
  TorusGrid(int n, int M);
  /// M defaults to 6K+1.
  static TorusGrid for_lattice(const LatticeSpec& spec);

  int dim() const { return n_; }
  int samples() const { return M_; }
  std::size_t size() const { return size_; }
  double weight() const { return weight_; }

  /// Multi-index j of node `index` (slowest axis first).
  std::span<const int> node(std::size_t index) const {
    return {nodes_.data() + index * static_cast<std::size_t>(n_),
            static_cast<std::size_t>(n_)};
  }
  std::size_t index(std::span<const int> j) const;

  /// e^{2 pi i r / M}, r taken modulo M.
  cplx root(long long r) const {
    long long q = r % M_;
    if (q < 0) q += M_;
    return roots_[static_cast<std::size_t>(q)];
  }
  /// j . k for node j and lattice point k (integer, unreduced).
  long long dot(std::size_t node_index, std::span<const int> k) const;
  /// Index of node j + s (componentwise mod M).
  std::size_t shifted(std::size_t node_index, std::span<const int> s) const;

  friend bool operator==(const TorusGrid& a, const TorusGrid& b) {
    return a.n_ == b.n_ && a.M_ == b.M_;
  }

 private:
  int n_;
  int M_;
  std::size_t size_;
  double weight_;
  std::vector<int> nodes_;
  std::vector<cplx> roots_;
};

/// Complex function on [-C,C]^n.
class Signal {
 public:
  Signal() = default;
  explicit Signal(LatticeSpec spec);
  Signal(LatticeSpec spec, std::vector<cplx> values);

  const LatticeSpec& spec() const { return spec_; }
  const Box& box() const { return box_; }
  std::span<const cplx> values() const { return values_; }
  std::span<cplx> values() { return values_; }
  std::size_t size() const { return values_.size(); }

  cplx operator[](std::size_t i) const { return values_[i]; }
  cplx& operator[](std::size_t i) { return values_[i]; }
  /// Value at lattice point k; zero outside [-C,C]^n.
  cplx at(std::span<const int> k) const;
  cplx& ref(std::span<const int> k);

  /// Smallest R with supp f in [-R,R]^n (0 for the zero signal).
  int support_radius() const;
  bool admissible() const { return support_radius() <= spec_.K; }
  bool finite() const;

  double norm() const;
  bool is_zero() const;

 private:
  LatticeSpec spec_;
  Box box_;
  std::vector<cplx> values_;
};

/// <a, b> = sum a conj(b).
cplx inner(const Signal& a, const Signal& b);
Signal operator+(const Signal& a, const Signal& b);
Signal operator-(const Signal& a, const Signal& b);
Signal operator*(cplx c, const Signal& a);

/// Kronecker delta at k.
Signal delta(const LatticeSpec& spec, std::span<const int> k);
Signal delta(const LatticeSpec& spec, int k);

/// Complex function on [-m_radius, m_radius]^n x (torus grid), stored in
/// lexicographic (m, j) order. degree_bound is the per-axis trigonometric
/// degree in w represented by the samples.
class PhaseSpaceField {
 public:
  PhaseSpaceField() = default;
  PhaseSpaceField(LatticeSpec spec, TorusGrid torus, int m_radius, int degree_bound);
  PhaseSpaceField(LatticeSpec spec, TorusGrid torus, int m_radius, int degree_bound,
                  std::vector<cplx> values);

  const LatticeSpec& spec() const { return spec_; }
  const TorusGrid& torus() const { return torus_; }
  const Box& m_box() const { return m_box_; }
  int m_radius() const { return m_box_.radius(); }
  int degree_bound() const { return degree_bound_; }
  void set_degree_bound(int d);

  std::size_t size() const { return values_.size(); }
  std::span<const cplx> values() const { return values_; }
  std::span<cplx> values() { return values_; }
  cplx operator()(std::size_t m, std::size_t j) const { return values_[m * torus_.size() + j]; }
  cplx& operator()(std::size_t m, std::size_t j) { return values_[m * torus_.size() + j]; }

  bool finite() const;
  bool same_shape(const PhaseSpaceField& other) const;

  /// Sum_m (1/M^n) Sum_j |F|^2, square-rooted.
  double l2_norm() const;
  double l1_norm() const;
  double sup_norm() const;
  /// Sum_m (1/M^n) Sum_j F (the quadrature mass).
  cplx mass() const;

  PhaseSpaceField conj() const;
  PhaseSpaceField abs() const;

 private:
  LatticeSpec spec_;
  TorusGrid torus_;
  Box m_box_;
  int degree_bound_ = 0;
  std::vector<cplx> values_;
};

/// L^2(Z^n x T^n) inner product under the grid quadrature.
cplx inner(const PhaseSpaceField& a, const PhaseSpaceField& b);
PhaseSpaceField operator*(const PhaseSpaceField& a, const PhaseSpaceField& b);
PhaseSpaceField operator+(const PhaseSpaceField& a, const PhaseSpaceField& b);
PhaseSpaceField operator*(cplx c, const PhaseSpaceField& a);

// Time-frequency shifts.

/// (T_m f)(k) = f(k - m). Requires f admissible and |m|_inf <= 2K.
Signal translate(const Signal& f, std::span<const int> m);
Signal translate(const Signal& f, int m);
/// (M_w f)(k) = e^{2 pi i w.k} f(k) for an arbitrary torus point w.
Signal modulate(const Signal& f, std::span<const double> w);
Signal modulate(const Signal& f, double w);
/// M_w T_m g.
Signal gabor_atom(const Signal& g, std::span<const int> m, std::span<const double> w);
Signal gabor_atom(const Signal& g, int m, double w);
/// M_{w_j} T_m g with w_j a node of `torus`; phases taken from the exact
/// root table.
Signal gabor_atom(const Signal& g, std::span<const int> m, const TorusGrid& torus,
                  std::size_t node);

}  // namespace tfloc
