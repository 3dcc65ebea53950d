#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ionlink/gates.hpp"
#include "ionlink/rng.hpp"
#include "ionlink/weyl.hpp"

using namespace ionlink;

namespace {

Mat2 haar2(Rng& rng) {
  Mat2 g;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g(i, j) = cd(rng.normal(), rng.normal());
  Eigen::HouseholderQR<Mat2> qr(g);
  Mat2 q = qr.householderQ();
  Mat2 r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < 2; ++i) q.col(i) *= r(i, i) / std::abs(r(i, i));
  return q;
}

Mat4 haar4(Rng& rng) {
  Mat4 g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = cd(rng.normal(), rng.normal());
  Eigen::HouseholderQR<Mat4> qr(g);
  Mat4 q = qr.householderQ();
  Mat4 r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < 4; ++i) q.col(i) *= r(i, i) / std::abs(r(i, i));
  return q;
}

Mat4 kron22(const Mat2& a, const Mat2& b) { return Mat4(kron(a, b)); }

bool in_chamber(const Eigen::Vector3d& c, double tol = 1e-9) {
  return c(0) <= kPi / 4 + tol && c(0) >= c(1) - tol && c(1) >= std::abs(c(2)) - tol;
}

Mat4 sqrt_swap() {
  Mat4 m = Mat4::Zero();
  m(0, 0) = m(3, 3) = 1;
  m(1, 1) = m(2, 2) = cd(0.5, 0.5);
  m(1, 2) = m(2, 1) = cd(0.5, -0.5);
  return m;
}

Mat4 cphase(double t) {
  Mat4 m = Mat4::Identity();
  m(3, 3) = std::exp(cd(0, t));
  return m;
}

}  // namespace

TEST_CASE("canonical gate equals product of commuting Pauli exponentials") {
  auto expo = [](double a, const Mat4& pp) {
    return Mat4(std::cos(a) * Mat4::Identity() + cd(0, std::sin(a)) * pp);
  };
  const Mat4 xx = kron22(gates::x(), gates::x());
  const Mat4 yy = kron22(gates::y(), gates::y());
  const Mat4 zz = kron22(gates::z(), gates::z());
  for (auto [x, y, z] : {std::tuple{0.3, 0.2, 0.1},
                         {kPi / 4, 0.0, 0.0},
                         {kPi / 4, kPi / 4, kPi / 4},
                         {0.0, 0.0, 0.0},
                         {0.7, -0.4, 1.3}}) {
    Mat4 ref = expo(-y, xx) * expo(-x, yy) * expo(z, zz);
    CHECK(max_abs_diff(canonical_gate(x, y, z), ref) < 1e-13);
  }
}

TEST_CASE("decomposition reconstructs Haar-random unitaries") {
  Rng rng(20260417);
  double worst = 0;
  for (int i = 0; i < 300; ++i) {
    Mat4 u = haar4(rng);
    WeylDecomposition d = weyl_decompose(u);
    CHECK(in_chamber(d.coords));
    CHECK(is_unitary(d.k1a));
    CHECK(is_unitary(d.k1b));
    CHECK(is_unitary(d.k2a));
    CHECK(is_unitary(d.k2b));
    worst = std::max(worst, max_abs_diff(d.reconstruct(), u));
  }
  CHECK(worst < 1e-11);
}

TEST_CASE("canonical coordinates of named gates") {
  auto coords = [](const Mat4& g) { return weyl_decompose(g).coords; };
  const double q = kPi / 4;

  Eigen::Vector3d c = coords(gates::cz());
  CHECK(c(0) == doctest::Approx(q).epsilon(1e-12));
  CHECK(std::abs(c(1)) < 1e-12);
  CHECK(std::abs(c(2)) < 1e-12);

  c = coords(gates::cx());
  CHECK(c(0) == doctest::Approx(q).epsilon(1e-12));
  CHECK(std::abs(c(1)) < 1e-12);

  c = coords(gates::iswap());
  CHECK(c(0) == doctest::Approx(q).epsilon(1e-12));
  CHECK(c(1) == doctest::Approx(q).epsilon(1e-12));
  CHECK(std::abs(c(2)) < 1e-12);

  c = coords(gates::swap());
  CHECK(c(0) == doctest::Approx(q).epsilon(1e-12));
  CHECK(c(1) == doctest::Approx(q).epsilon(1e-12));
  CHECK(c(2) == doctest::Approx(q).epsilon(1e-12));

  CHECK(coords(Mat4::Identity()).cwiseAbs().maxCoeff() < 1e-12);

  Rng rng(7);
  CHECK(coords(kron22(haar2(rng), haar2(rng))).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("coordinates are invariant under local frames") {
  Rng rng(99);
  Mat4 u = haar4(rng);
  Eigen::Vector3d c0 = weyl_decompose(u).coords;
  for (int i = 0; i < 25; ++i) {
    Mat4 v = kron22(haar2(rng), haar2(rng)) * u * kron22(haar2(rng), haar2(rng));
    CHECK((weyl_decompose(v).coords - c0).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("minimal CZ count classification") {
  const double q = kPi / 4;
  CHECK(min_cz_count({0, 0, 0}) == 0);
  CHECK(min_cz_count({1e-9, 0, 0}) == 0);
  CHECK(min_cz_count({q, 0, 0}) == 1);
  CHECK(min_cz_count({q, q, 0}) == 2);
  CHECK(min_cz_count({0.3, 0.1, 0}) == 2);
  // Partial entanglers need two CZs even with a single nonzero coordinate.
  CHECK(min_cz_count({0.5, 0, 0}) == 2);
  CHECK(min_cz_count({q, q, q}) == 3);
  CHECK(min_cz_count({q, q, -q}) == 3);
  CHECK(min_cz_count({0.4, 0.2, -0.1}) == 3);
}

TEST_CASE("synthesis reproduces Haar-random unitaries with at most 3 CZs") {
  Rng rng(31337);
  double worst = 0;
  for (int i = 0; i < 400; ++i) {
    Mat4 u = haar4(rng);
    CzLayerCircuit circ = synthesize_two_qubit(u);
    CHECK(circ.cz_count() <= 3);
    worst = std::max(worst, max_abs_diff(circ.matrix(), u));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("synthesis CZ counts for named gates") {
  Rng rng(5);
  auto check_gate = [](const Mat4& g, int expect) {
    CzLayerCircuit circ = synthesize_two_qubit(g);
    CHECK(circ.cz_count() == expect);
    CHECK(max_abs_diff(circ.matrix(), g) < 1e-10);
  };
  check_gate(Mat4::Identity(), 0);
  check_gate(kron22(haar2(rng), haar2(rng)), 0);
  check_gate(gates::cz(), 1);
  check_gate(gates::cx(), 1);
  check_gate(gates::iswap(), 2);
  check_gate(cphase(1.0), 2);
  check_gate(gates::swap(), 3);
  check_gate(sqrt_swap(), 3);
}

TEST_CASE("synthesis at chamber boundaries") {
  Rng rng(404);
  const double q = kPi / 4;
  const Eigen::Vector3d cases[] = {
      {q, q, q},       {q, q, -q},        {q, 0.3, 0.3},  {q, 0.3, -0.3},
      {0.2, 0.2, 0.2}, {0.2, 0.2, -0.2},  {q, q, 0.0},    {1e-9, 0, 0},
      {q - 1e-9, 1e-10, 0}, {0.7853, 0.7853, 0.7852}, {0.4, 0.2, -0.19999999}};
  for (const auto& c : cases) {
    Mat4 u = kron22(haar2(rng), haar2(rng)) * canonical_gate(c(0), c(1), c(2)) *
             kron22(haar2(rng), haar2(rng));
    CzLayerCircuit circ = synthesize_two_qubit(u);
    CHECK(max_abs_diff(circ.matrix(), u) < 1e-7);
  }
}

TEST_CASE("ZYZ Euler angles round-trip") {
  Rng rng(606);
  auto recon = [](const gates::Euler& e) {
    return Mat2(std::exp(cd(0, e.alpha)) * gates::rz(e.phi) * gates::ry(e.theta) *
                gates::rz(e.lambda));
  };
  double worst = 0;
  for (int i = 0; i < 200; ++i) {
    Mat2 u = haar2(rng);
    worst = std::max(worst, max_abs_diff(recon(gates::zyz_angles(u)), u));
  }
  for (const Mat2& u : {gates::id2(), gates::x(), gates::y(), gates::z(), gates::h(),
                        gates::rz(0.7), gates::ry(1.2),
                        Mat2(std::exp(cd(0, 0.3)) * gates::id2())}) {
    worst = std::max(worst, max_abs_diff(recon(gates::zyz_angles(u)), u));
  }
  CHECK(worst < 1e-12);
}
