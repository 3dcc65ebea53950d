#include "ionlink/weyl.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "ionlink/gates.hpp"

namespace ionlink {
namespace {

// Magic-basis change: columns are Bell-like states in which every
// canonical_gate is diagonal and local gates become real orthogonal.
const Mat4& magic_basis() {
  static const Mat4 b = [] {
    Mat4 m;
    const double r = 1.0 / std::sqrt(2.0);
    const cd i(0, 1);
    m << r, i * r, 0, 0,
        0, 0, i * r, r,
        0, 0, i * r, -r,
        r, -i * r, 0, 0;
    return m;
  }();
  return b;
}

Mat4 diag_phase_gate(const Eigen::Vector4d& lam) {
  Vec4 d;
  for (int i = 0; i < 4; ++i) d(i) = std::exp(cd(0, lam(i)));
  const Mat4& b = magic_basis();
  return b * d.asDiagonal() * b.adjoint();
}

const std::vector<std::array<int, 4>>& perms4() {
  static const std::vector<std::array<int, 4>> perms = [] {
    std::vector<std::array<int, 4>> v;
    std::array<int, 4> p{0, 1, 2, 3};
    do {
      v.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return v;
  }();
  return perms;
}

// Integer eigenphase shifts by multiples of pi; even total keeps the
// determinant bookkeeping consistent with the joint reflection fix below.
const std::vector<std::array<int, 4>>& shift_patterns() {
  static const std::vector<std::array<int, 4>> pats = [] {
    std::vector<std::array<int, 4>> v;
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b)
        for (int c = -2; c <= 2; ++c)
          for (int d = -2; d <= 2; ++d)
            if (((a + b + c + d) & 1) == 0) v.push_back({a, b, c, d});
    return v;
  }();
  return pats;
}

// Simultaneous orthogonal diagonalization of a unitary complex symmetric
// matrix: a generic real mixture of Re/Im has simple spectrum, so a short
// fixed list of mixing angles replaces randomized retries.
std::pair<Eigen::Matrix4d, Eigen::Vector4d> sym_diag(const Mat4& m2) {
  static const double kMixes[] = {0.9371237991373864, 0.2611362922862332,
                                  0.550349, 0.104729, 0.77, 0.31, 1.2, 0.05};
  const Eigen::Matrix4d re = m2.real();
  const Eigen::Matrix4d im = m2.imag();
  for (double t : kMixes) {
    Eigen::Matrix4d mr = std::cos(t) * re + std::sin(t) * im;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es((mr + mr.transpose()) / 2);
    const Eigen::Matrix4d p = es.eigenvectors();
    Mat4 dm = p.transpose() * m2 * p;
    Mat4 off = dm;
    off.diagonal().setZero();
    if (off.cwiseAbs().maxCoeff() < 1e-10) {
      Eigen::Vector4d th;
      for (int i = 0; i < 4; ++i) th(i) = std::arg(dm(i, i)) / 2;
      return {p, th};
    }
  }
  throw ConvergenceError("orthogonal diagonalization of the Weyl invariant failed");
}

// Shift entries by pi so the eigenphase sum (a multiple of pi for SU(4))
// lands at zero without leaving (-pi, pi] by more than one period.
Eigen::Vector4d fix_sum(Eigen::Vector4d th) {
  const int k = static_cast<int>(std::lround(th.sum() / kPi));
  std::array<int, 4> idx{0, 1, 2, 3};
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    return k > 0 ? th(a) > th(b) : th(a) < th(b);
  });
  for (int i = 0; i < std::abs(k); ++i) th(idx[i]) -= (k > 0 ? 1.0 : -1.0) * kPi;
  return th;
}

struct KronFactors {
  Mat2 a, b;
  double phase;  // k = e^{i phase} a (x) b, det a = det b = 1
};

KronFactors kron_decompose(const Mat4& k) {
  int a0 = 0, b0 = 0;
  double best = -1;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      double n = k.block<2, 2>(2 * a, 2 * b).norm();
      if (n > best) {
        best = n;
        a0 = a;
        b0 = b;
      }
    }
  Mat2 bm = k.block<2, 2>(2 * a0, 2 * b0);
  bm /= std::sqrt(bm.determinant());
  Mat2 am;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      am(a, b) = (bm.adjoint() * k.block<2, 2>(2 * a, 2 * b)).trace() / 2.0;
  double ph = std::arg(am.determinant()) / 2;
  am *= std::exp(cd(0, -ph));
  am /= std::sqrt(std::abs(am.determinant()));
  return {am, bm, ph};
}

Mat4 kron2(const Mat2& a, const Mat2& b) {
  Mat4 out;
  out.block<2, 2>(0, 0) = a(0, 0) * b;
  out.block<2, 2>(0, 2) = a(0, 1) * b;
  out.block<2, 2>(2, 0) = a(1, 0) * b;
  out.block<2, 2>(2, 2) = a(1, 1) * b;
  return out;
}

}  // namespace

Mat4 canonical_gate(double x, double y, double z) {
  Eigen::Vector4d lam;
  lam << x - y + z, -x + y + z, -(x + y + z), x + y - z;
  return diag_phase_gate(lam);
}

Mat4 WeylDecomposition::reconstruct() const {
  return std::exp(cd(0, phase)) * kron2(k1a, k1b) *
         canonical_gate(coords(0), coords(1), coords(2)) * kron2(k2a, k2b);
}

WeylDecomposition weyl_decompose(const Mat4& u) {
  if (!is_unitary(u)) throw std::invalid_argument("weyl_decompose: input not unitary");
  const Mat4& b = magic_basis();
  const double g0 = std::arg(u.determinant()) / 4;
  const Mat4 u0 = u * std::exp(cd(0, -g0));

  // The det^(1/4) normalization is 4-fold ambiguous; branches k and k+2 give
  // identical candidates, so scanning k in {0,1} covers the full orbit.
  struct Branch {
    Mat4 m;
    Eigen::Matrix4d p;
    Eigen::Vector4d th;
  };
  std::array<Branch, 2> branch;
  for (int k = 0; k < 2; ++k) {
    Mat4 m = (k == 0 ? cd(1, 0) : cd(0, 1)) * (b.adjoint() * u0 * b).eval();
    Mat4 m2 = m.transpose() * m;
    auto [p, th] = sym_diag(m2);
    branch[k] = {m, p, fix_sum(th)};
  }

  const auto& perms = perms4();
  const auto& pats = shift_patterns();
  auto round10 = [](double v) { return std::round(v * 1e10) / 1e10; };

  bool found = false;
  std::array<double, 3> best_key{};
  std::array<int, 3> best_id{};  // (branch, perm index, pattern index)
  const double tol = 1e-9;
  for (int k = 0; k < 2; ++k) {
    const Eigen::Vector4d& th = branch[k].th;
    for (int pi_ = 0; pi_ < static_cast<int>(perms.size()); ++pi_) {
      const auto& perm = perms[pi_];
      const double t0 = th(perm[0]), t1 = th(perm[1]), t2 = th(perm[2]), t3 = th(perm[3]);
      for (int j = 0; j < static_cast<int>(pats.size()); ++j) {
        const auto& n = pats[j];
        const double l0 = t0 + n[0] * kPi, l1 = t1 + n[1] * kPi;
        const double l2 = t2 + n[2] * kPi, l3 = t3 + n[3] * kPi;
        const double s = (l0 + l1 + l2 + l3) / 4;
        const double x = (l0 + l3) / 2 - s, y = (l1 + l3) / 2 - s, z = (l0 + l1) / 2 - s;
        if (!(x <= kPi / 4 + tol && x >= y - tol && y >= std::abs(z) - tol)) continue;
        std::array<double, 3> key{round10(x), round10(y), round10(z)};
        std::array<int, 3> id{k, pi_, j};
        if (!found || key > best_key || (key == best_key && id < best_id)) {
          found = true;
          best_key = key;
          best_id = id;
        }
      }
    }
  }
  if (!found) throw ConvergenceError("no Weyl chamber representative found");

  const auto& [k, pi_, j] = best_id;
  const Branch& br = branch[k];
  const auto& perm = perms[pi_];
  const auto& n = pats[j];
  Eigen::Vector4d lam;
  for (int i = 0; i < 4; ++i) lam(i) = br.th(perm[i]) + n[i] * kPi;
  const double s = lam.sum() / 4;

  Eigen::Matrix4d pt;
  for (int i = 0; i < 4; ++i) pt.col(i) = br.p.col(perm[i]);
  Vec4 expneg;
  for (int i = 0; i < 4; ++i) expneg(i) = std::exp(cd(0, -lam(i)));
  Mat4 k1m = br.m * pt.cast<cd>() * expneg.asDiagonal();
  if (pt.determinant() < 0) {
    pt.col(3) *= -1;
    k1m.col(3) *= -1;
  }
  if (k1m.imag().cwiseAbs().maxCoeff() > 1e-9)
    throw ConvergenceError("left magic-basis factor not real orthogonal");

  const Mat4 k1 = b * k1m * b.adjoint();
  const Mat4 k2 = b * pt.transpose().cast<cd>() * b.adjoint();

  WeylDecomposition d;
  const Eigen::Vector4d lt = lam.array() - s;
  d.coords << (lt(0) + lt(3)) / 2, (lt(1) + lt(3)) / 2, (lt(0) + lt(1)) / 2;
  KronFactors f1 = kron_decompose(k1);
  KronFactors f2 = kron_decompose(k2);
  d.k1a = f1.a;
  d.k1b = f1.b;
  d.k2a = f2.a;
  d.k2b = f2.b;
  d.phase = g0 - k * kPi / 2 + s + f1.phase + f2.phase;
  return d;
}

int min_cz_count(const Eigen::Vector3d& c, double tol) {
  const double x = c(0), y = c(1), z = c(2);
  if (x < tol && y < tol && std::abs(z) < tol) return 0;
  if (std::abs(x - kPi / 4) < tol && y < tol && std::abs(z) < tol) return 1;
  if (std::abs(z) < tol) return 2;
  return 3;
}

Mat4 CzLayerCircuit::matrix() const {
  Mat4 m = kron2(layers[0].first, layers[0].second);
  for (std::size_t i = 1; i < layers.size(); ++i)
    m = m * gates::cz() * kron2(layers[i].first, layers[i].second);
  return std::exp(cd(0, phase)) * m;
}

namespace {

using Layers = std::vector<std::pair<Mat2, Mat2>>;

// Layers realizing exp(i (x XX + y ZZ)) with two CZs, exactly:
// (I,H) CZ (Rx(-2x), Rx(-2y)) CZ (I,H).
Layers core2_layers(double x, double y) {
  return {{gates::id2(), gates::h()},
          {gates::rx(-2 * x), gates::rx(-2 * y)},
          {gates::id2(), gates::h()}};
}

Mat4 layers_matrix(const Layers& lay) {
  Mat4 m = kron2(lay[0].first, lay[0].second);
  for (std::size_t i = 1; i < lay.size(); ++i)
    m = m * gates::cz() * kron2(lay[i].first, lay[i].second);
  return m;
}

const WeylDecomposition& cz_decomposition() {
  static const WeylDecomposition d = weyl_decompose(gates::cz());
  return d;
}

}  // namespace

CzLayerCircuit synthesize_two_qubit(const Mat4& u) {
  const WeylDecomposition d = weyl_decompose(u);
  const Eigen::Vector3d& c = d.coords;
  const int n = min_cz_count(c);

  CzLayerCircuit out;
  if (n == 0) {
    out.layers = {{d.k1a * d.k2a, d.k1b * d.k2b}};
    out.phase = d.phase;
    return out;
  }
  if (n == 1) {
    const WeylDecomposition& dc = cz_decomposition();
    out.layers = {{d.k1a * dc.k1a.adjoint(), d.k1b * dc.k1b.adjoint()},
                  {dc.k2a.adjoint() * d.k2a, dc.k2b.adjoint() * d.k2b}};
    out.phase = d.phase - dc.phase;
    return out;
  }
  if (n == 2) {
    Layers clay = core2_layers(c(0), c(1));
    const WeylDecomposition dc = weyl_decompose(layers_matrix(clay));
    if ((dc.coords - c).cwiseAbs().maxCoeff() > 1e-8)
      throw ConvergenceError("two-CZ core does not match target coordinates");
    out.layers = {{d.k1a * dc.k1a.adjoint() * clay[0].first,
                   d.k1b * dc.k1b.adjoint() * clay[0].second},
                  clay[1],
                  {clay[2].first * dc.k2a.adjoint() * d.k2a,
                   clay[2].second * dc.k2b.adjoint() * d.k2b}};
    out.phase = d.phase - dc.phase;
    return out;
  }

  // Generic class: one CZ peels the gate into the two-CZ class.  With
  // P = (Rx(pi/2) (x) I) CZ, W = N(c) P always has vanishing third
  // coordinate, so U = e^{i g} K1 W CZ (Rx(-pi/2) (x) I) K2.
  const Mat4 peel = kron2(gates::rx(kPi / 2), gates::id2()) * gates::cz();
  const Mat4 w = canonical_gate(c(0), c(1), c(2)) * peel;
  const WeylDecomposition dw = weyl_decompose(w);
  if (std::abs(dw.coords(2)) > 1e-8)
    throw ConvergenceError("peeled gate left the two-CZ class");
  Layers clay = core2_layers(dw.coords(0), dw.coords(1));
  const WeylDecomposition dc = weyl_decompose(layers_matrix(clay));
  if ((dc.coords - dw.coords).cwiseAbs().maxCoeff() > 1e-8)
    throw ConvergenceError("two-CZ core does not match peeled coordinates");
  out.layers = {{d.k1a * dw.k1a * dc.k1a.adjoint() * clay[0].first,
                 d.k1b * dw.k1b * dc.k1b.adjoint() * clay[0].second},
                clay[1],
                {clay[2].first * dc.k2a.adjoint() * dw.k2a,
                 clay[2].second * dc.k2b.adjoint() * dw.k2b},
                {gates::rx(-kPi / 2) * d.k2a, d.k2b}};
  out.phase = d.phase + dw.phase - dc.phase;
  return out;
}

}  // namespace ionlink
