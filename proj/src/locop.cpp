#include "tfloc/locop.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "tfloc/error.hpp"
#include "tfloc/stft.hpp"

namespace tfloc {

namespace {

void check_operator_inputs(const PhaseSpaceField& sigma, const Signal& g1, const Signal& g2) {
  const LatticeSpec& spec = sigma.spec();
  if (!(g1.spec() == spec) || !(g2.spec() == spec)) {
    throw ShapeError("symbol and windows live on different lattices");
  }
  if (!sigma.finite()) throw DomainError("symbol has non-finite values");
  for (const Signal* g : {&g1, &g2}) {
    if (!g->finite() || g->is_zero()) throw DomainError("window must be finite and non-zero");
    if (!g->admissible()) throw RangeError("window not supported in [-K,K]^n");
  }
}

PhaseSpaceField product(const PhaseSpaceField& a, const PhaseSpaceField& b, const char* what) {
  const int d = a.degree_bound() + b.degree_bound();
  if (d > a.torus().samples() - 1) {
    throw PrecisionError(std::string(what) + ": degree of symbol times STFT is " +
                         std::to_string(d) + " > M - 1 = " +
                         std::to_string(a.torus().samples() - 1));
  }
  return a * b;
}

std::string describe(const PhaseSpaceField& sigma, const Signal& g1, const Signal& g2) {
  return "symbol(m_radius=" + std::to_string(sigma.m_radius()) +
         ",degree=" + std::to_string(sigma.degree_bound()) + ");g1(support=" +
         std::to_string(g1.support_radius()) + ");g2(support=" +
         std::to_string(g2.support_radius()) + ");grid(n=" + std::to_string(sigma.torus().dim()) +
         ",M=" + std::to_string(sigma.torus().samples()) + ")";
}

}  // namespace

Signal OperatorKernel::operator*(const Signal& f) const {
  if (!(f.spec() == spec)) throw ShapeError("kernel and signal lattices differ");
  Eigen::VectorXcd x(static_cast<Eigen::Index>(f.size()));
  for (std::size_t i = 0; i < f.size(); ++i) x(static_cast<Eigen::Index>(i)) = f[i];
  const Eigen::VectorXcd y = matrix * x;
  Signal out(spec);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = y(static_cast<Eigen::Index>(i));
  return out;
}

bool OperatorKernel::hermitian(double tol) const {
  const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff());
  return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

double SpectralSummary::schatten_norm(double p) const {
  if (!(p >= 1.0)) throw DomainError("Schatten exponent must lie in [1, inf]");
  if (std::isinf(p)) return s1();
  double s = 0.0;
  for (double v : singular_values) s += std::pow(v, p);
  return std::pow(s, 1.0 / p);
}

Signal apply(const PhaseSpaceField& sigma, const Signal& g1, const Signal& g2, const Signal& f) {
  check_operator_inputs(sigma, g1, g2);
  if (!(f.spec() == sigma.spec())) throw ShapeError("apply: signal lattice differs");
  if (!f.admissible()) throw RangeError("apply: signal not supported in [-K,K]^n");
  const PhaseSpaceField V = detail::stft_on_range(f, g1, sigma.torus(), sigma.m_radius());
  return stft_adjoint(product(sigma, V, "apply"), g2);
}

cplx weak_pairing(const PhaseSpaceField& sigma, const Signal& g1, const Signal& g2,
                  const Signal& f, const Signal& h) {
  check_operator_inputs(sigma, g1, g2);
  if (!(f.spec() == sigma.spec()) || !(h.spec() == sigma.spec())) {
    throw ShapeError("weak_pairing: signal lattice differs");
  }
  if (!f.admissible()) throw RangeError("weak_pairing: signal not supported in [-K,K]^n");
  const TorusGrid& torus = sigma.torus();
  const PhaseSpaceField Vf = detail::stft_on_range(f, g1, torus, sigma.m_radius());
  const PhaseSpaceField Vh = detail::stft_on_range(h, g2, torus, sigma.m_radius());
  const int d = sigma.degree_bound() + Vf.degree_bound() + Vh.degree_bound();
  if (d > torus.samples() - 1) {
    throw PrecisionError("weak_pairing: integrand degree " + std::to_string(d) +
                         " > M - 1 = " + std::to_string(torus.samples() - 1));
  }
  cplx s{};
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    s += sigma.values()[i] * Vf.values()[i] * std::conj(Vh.values()[i]);
  }
  return s * torus.weight();
}

OperatorKernel kernel(const PhaseSpaceField& sigma, const Signal& g1, const Signal& g2) {
  check_operator_inputs(sigma, g1, g2);
  const LatticeSpec& spec = sigma.spec();
  const TorusGrid& torus = sigma.torus();
  const int k1 = g1.support_radius();
  const int k2 = g2.support_radius();
  const int deg = sigma.degree_bound() + k1 + k2;
  if (deg > torus.samples() - 1) {
    throw PrecisionError("kernel: degree " + std::to_string(sigma.degree_bound()) +
                         " + window supports " + std::to_string(k1 + k2) + " > M - 1 = " +
                         std::to_string(torus.samples() - 1));
  }
  if (sigma.m_radius() + std::max(k1, k2) > spec.C) {
    throw RangeError("kernel: atoms reach beyond C = " + std::to_string(spec.C));
  }
  return detail::grid_kernel(sigma, g1, g2);
}

OperatorKernel detail::grid_kernel(const PhaseSpaceField& sigma, const Signal& g1,
                                   const Signal& g2) {
  check_operator_inputs(sigma, g1, g2);
  const LatticeSpec& spec = sigma.spec();
  const TorusGrid& torus = sigma.torus();
  const int n = spec.n;
  const int k1 = g1.support_radius();
  const int k2 = g2.support_radius();
  if (sigma.m_radius() + std::max(k1, k2) > spec.C) {
    throw RangeError("kernel: atoms reach beyond C = " + std::to_string(spec.C));
  }

  const Box& box = spec.box();
  const Box& mbox = sigma.m_box();
  const Box b1(n, k1);
  const Box b2(n, k2);
  const Box dbox(n, k1 + k2);
  const std::size_t T = torus.size();

  // e^{2 pi i j.d} for every torus node j and offset d
  std::vector<cplx> phase(T * dbox.size());
  for (std::size_t j = 0; j < T; ++j) {
    for (std::size_t di = 0; di < dbox.size(); ++di) {
      phase[j * dbox.size() + di] = torus.root(torus.dot(j, dbox.point(di)));
    }
  }

  Eigen::MatrixXcd K = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(box.size()),
                                              static_cast<Eigen::Index>(box.size()));
  std::vector<cplx> coeff(dbox.size());
  std::vector<int> k(static_cast<std::size_t>(n));
  std::vector<int> l(static_cast<std::size_t>(n));
  std::vector<int> d(static_cast<std::size_t>(n));

  for (std::size_t mi = 0; mi < mbox.size(); ++mi) {
    auto m = mbox.point(mi);
    // coeff(d) = (1/M^n) sum_j sigma(m, w_j) e^{2 pi i w_j.d}
    for (std::size_t di = 0; di < dbox.size(); ++di) {
      cplx acc{};
      for (std::size_t j = 0; j < T; ++j) acc += sigma(mi, j) * phase[j * dbox.size() + di];
      coeff[di] = acc * torus.weight();
    }
    for (std::size_t ai = 0; ai < b2.size(); ++ai) {
      auto a = b2.point(ai);
      const cplx v2 = g2.at(a);
      if (v2 == cplx{}) continue;
      for (int x = 0; x < n; ++x) k[x] = m[x] + a[x];
      const auto row = static_cast<Eigen::Index>(box.index(k));
      for (std::size_t bi = 0; bi < b1.size(); ++bi) {
        auto b = b1.point(bi);
        const cplx v1 = g1.at(b);
        if (v1 == cplx{}) continue;
        for (int x = 0; x < n; ++x) {
          l[x] = m[x] + b[x];
          d[x] = a[x] - b[x];
        }
        K(row, static_cast<Eigen::Index>(box.index(l))) += v2 * std::conj(v1) * coeff[dbox.index(d)];
      }
    }
  }
  return {spec, std::move(K), describe(sigma, g1, g2)};
}

OperatorKernel adjoint_kernel(const PhaseSpaceField& sigma, const Signal& g1, const Signal& g2) {
  return kernel(sigma.conj(), g2, g1);
}

SpectralSummary spectrum(const OperatorKernel& kernel, const std::vector<double>& ps) {
  const Eigen::MatrixXcd& A = kernel.matrix;
  if (!A.allFinite()) throw DomainError("spectrum: kernel has non-finite entries");
  for (double p : ps) {
    if (!(p >= 1.0)) throw DomainError("spectrum: Schatten exponent must lie in [1, inf]");
  }
  SpectralSummary out;
  if (A.size() == 0) return out;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A);
  const Eigen::VectorXd s = svd.singularValues();
  if (svd.info() != Eigen::Success || !s.allFinite()) {
    throw NumericError("spectrum: SVD did not converge on a " + std::to_string(A.rows()) + "x" +
                       std::to_string(A.cols()) + " kernel");
  }
  out.singular_values.assign(s.data(), s.data() + s.size());
  out.trace = A.trace();
  out.hs_norm = A.norm();
  double s2 = 0.0;
  for (double v : out.singular_values) s2 += v * v;
  const double hs2 = out.hs_norm * out.hs_norm;
  if (std::abs(hs2 - s2) > 1e-10 * std::max(hs2, std::numeric_limits<double>::min())) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "spectrum: entrywise HS^2 %.17g disagrees with sum of s_i^2 %.17g", hs2, s2);
    throw NumericError(buf);
  }
  for (double p : ps) out.schatten[p] = out.schatten_norm(p);
  return out;
}

double min_hermitian_eigenvalue(const OperatorKernel& kernel) {
  const Eigen::MatrixXcd H = 0.5 * (kernel.matrix + kernel.matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(H, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) throw NumericError("Hermitian eigensolver did not converge");
  return eig.eigenvalues().minCoeff();
}

PhaseSpaceField sigma_tilde(const PhaseSpaceField& sigma, const Signal& g) {
  const OperatorKernel K = kernel(sigma, g, g);
  const LatticeSpec& spec = sigma.spec();
  const TorusGrid& torus = sigma.torus();
  const int n = spec.n;
  const int kg = g.support_radius();
  const Box& box = spec.box();
  const Box gbox(n, kg);

  PhaseSpaceField out(spec, torus, sigma.m_radius(),
                      std::min(sigma.degree_bound(), std::min(2 * kg, torus.samples() - 1)));
  std::vector<std::size_t> idx;
  std::vector<cplx> atom;
  std::vector<int> k(static_cast<std::size_t>(n));
  for (std::size_t mi = 0; mi < out.m_box().size(); ++mi) {
    auto m = out.m_box().point(mi);
    idx.clear();
    std::vector<cplx> gv;
    std::vector<int> pts;
    for (std::size_t bi = 0; bi < gbox.size(); ++bi) {
      auto b = gbox.point(bi);
      const cplx v = g.at(b);
      if (v == cplx{}) continue;
      for (int x = 0; x < n; ++x) k[x] = m[x] + b[x];
      idx.push_back(box.index(k));
      gv.push_back(v);
      pts.insert(pts.end(), k.begin(), k.end());
    }
    atom.resize(idx.size());
    for (std::size_t j = 0; j < torus.size(); ++j) {
      for (std::size_t a = 0; a < idx.size(); ++a) {
        atom[a] = torus.root(torus.dot(j, std::span<const int>(pts.data() + a * n,
                                                               static_cast<std::size_t>(n)))) *
                  gv[a];
      }
      cplx acc{};
      for (std::size_t r = 0; r < idx.size(); ++r) {
        cplx row{};
        for (std::size_t c = 0; c < idx.size(); ++c) {
          row += K.matrix(static_cast<Eigen::Index>(idx[r]), static_cast<Eigen::Index>(idx[c])) *
                 atom[c];
        }
        acc += row * std::conj(atom[r]);
      }
      out(mi, j) = acc;
    }
  }
  return out;
}

PhaseSpaceField constant_symbol(const LatticeSpec& spec, const TorusGrid& torus, cplx value) {
  PhaseSpaceField s(spec, torus, 2 * spec.K, 0);
  for (cplx& v : s.values()) v = value;
  return s;
}

}  // namespace tfloc
