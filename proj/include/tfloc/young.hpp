#pragma once

#include <memory>
#include <string>
#include <vector>

namespace tfloc {

/// Convex descriptor Phi: [0, inf) -> [0, inf) with Phi(0) = 0 and
/// Phi(t) -> inf. Immutable; copies share the underlying definition.
///
/// Kinds:
///  - power(p), p >= 1:        t^p
///  - log_square ("eq5"):      -t^2 ln t on [0, e^{-3/2}], t^2 + e^{-3}/2 above
///                             (the C^1 convex continuation of -t^2 ln t)
///  - quasi(base, p), p in (0,1]: base(t^p)
///  - table:                   piecewise-linear through (t_i, v_i), extended
///                             with the last slope
///  - conjugate(base):         numeric complementary function of base
class YoungFunction {
 public:
  enum class Kind { power, eq5, quasi, table, conjugate };

  struct Flags {
    bool finite = true;
    bool continuous = true;
    bool strictly_convex = false;
  };

  static YoungFunction power(double p);
  static YoungFunction eq5();
  static YoungFunction quasi(const YoungFunction& base, double p);
  static YoungFunction table(std::vector<double> t, std::vector<double> v);
  static YoungFunction conjugate(const YoungFunction& base);

  Kind kind() const { return impl_->kind; }
  double order() const { return impl_->p; }
  const YoungFunction* base() const { return impl_->base.get(); }
  const Flags& flags() const { return impl_->flags; }
  /// Short identifier, e.g. "power(2)", "eq5", "quasi(power(2),0.5)".
  std::string name() const;

  /// Phi(t); DomainError for negative or non-finite t.
  double operator()(double t) const;
  double evaluate(double t) const { return (*this)(t); }

  friend bool operator==(const YoungFunction& a, const YoungFunction& b);

 private:
  struct Impl {
    Kind kind = Kind::power;
    double p = 1.0;
    std::shared_ptr<const YoungFunction> base;
    std::vector<double> t, v;
    Flags flags;
  };
  explicit YoungFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  double eval_unchecked(double t) const;

  std::shared_ptr<const Impl> impl_;
};

/// Threshold e^{-3/2} where the eq5 function switches to its quadratic tail.
inline constexpr double kEq5Switch = 0.22313016014842982;

/// Psi(y) = sup_{x >= 0} (x y - Phi(x)), by golden-section search on the
/// concave objective after bracketing the maximiser. UnboundedError when the
/// bracket reaches 2^60 without Phi(x)/x >= y.
double complementary(const YoungFunction& phi, double y);

/// sup of Phi(2x)/Phi(x) over a log-spaced grid of `samples` points in
/// [r 2^-40, r]. Heuristic evidence for a local Delta_2 condition, not a proof.
/// Returns +inf when Phi(x) = 0 < Phi(2x) at some grid point.
double delta2_probe(const YoungFunction& phi, double r, int samples = 256);

/// Midpoint-convexity probe on a log grid over [lo, hi]; true when
/// Phi((x+y)/2) <= (Phi(x)+Phi(y))/2 + 1e-12 (1 + Phi(y)) on all neighbouring
/// and spread pairs.
bool convex_on_grid(const YoungFunction& phi, double lo, double hi, int samples = 256);

}  // namespace tfloc
