#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ionlink/channels.hpp"
#include "ionlink/gates.hpp"
#include "ionlink/pauli.hpp"
#include "ionlink/state.hpp"

using namespace ionlink;

namespace {

const QubitId kQ0 = {Module::kAlice, Role::kNetwork, 0};
const QubitId kQ1 = {Module::kAlice, Role::kCircuit, 0};
const QubitId kQ2 = {Module::kBob, Role::kNetwork, 0};

MatX random_unitary4(Rng& rng) {
  MatX g(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = cd(rng.normal(), rng.normal());
  Eigen::HouseholderQR<MatX> qr(g);
  MatX q = qr.householderQ();
  MatX r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < 4; ++i) q.col(i) *= r(i, i) / std::abs(r(i, i));
  return q;
}

}  // namespace

TEST_CASE("qubit ordering is lexicographic in (module, role, index)") {
  // alice.network < alice.circuit < alice.aux < bob.network
  CHECK(kQ0 < kQ1);
  CHECK(kQ1 < aux_qubit(Module::kAlice));
  CHECK(aux_qubit(Module::kAlice) < kQ2);
  QuantumState s = QuantumState::ground({kQ1, kQ0});
  CHECK(s.bit_position(kQ0) == 0);  // first qubit = least significant bit
  CHECK(s.bit_position(kQ1) == 1);
}

TEST_CASE("X flips |0>, H*H spreads |00> uniformly, CZ phases |11>") {
  QuantumState s = QuantumState::ground({kQ0});
  s.apply_unitary(gates::x(), {kQ0});
  CHECK(std::abs(s.vector()(1) - cd(1, 0)) < 1e-12);

  QuantumState s2 = QuantumState::ground({kQ0, kQ1});
  s2.apply_unitary(gates::h(), {kQ0});
  s2.apply_unitary(gates::h(), {kQ1});
  for (int i = 0; i < 4; ++i) CHECK(std::abs(s2.vector()(i) - cd(0.5, 0)) < 1e-12);

  s2.apply_unitary(gates::cz(), {kQ0, kQ1});
  CHECK(std::abs(s2.vector()(3) - cd(-0.5, 0)) < 1e-12);
  CHECK(std::abs(s2.vector()(1) - cd(0.5, 0)) < 1e-12);
}

TEST_CASE("two-qubit embedding respects little-endian targets") {
  // CX with control = high-order slot of the matrix -> targets[1] is control.
  QuantumState s = QuantumState::ground({kQ0, kQ1});
  s.apply_unitary(gates::x(), {kQ1});  // |q1 q0> = |10>, index 2
  s.apply_unitary(gates::cx(), {kQ0, kQ1});
  // control q1 is 1 -> q0 flips: |11> = index 3
  CHECK(std::abs(s.vector()(3) - cd(1, 0)) < 1e-12);
}

TEST_CASE("unitary composition matches matrix product") {
  Rng rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    MatX u = random_unitary4(rng);
    MatX v = random_unitary4(rng);
    QuantumState a = QuantumState::ground({kQ0, kQ1});
    a.apply_unitary(gates::h(), {kQ0});
    a.apply_unitary(gates::h(), {kQ1});
    QuantumState b = a;
    a.apply_unitary(u, {kQ0, kQ1});
    a.apply_unitary(v, {kQ0, kQ1});
    b.apply_unitary((v * u).eval(), {kQ0, kQ1});
    CHECK((a.vector() - b.vector()).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("measurement statistics match Born probabilities") {
  Rng rng(12345);
  int ones = 0;
  const int shots = 100000;
  for (int i = 0; i < shots; ++i) {
    QuantumState s = QuantumState::ground({kQ0});
    s.apply_unitary(gates::ry(2.0 * std::acos(std::sqrt(0.3))), {kQ0});
    ones += s.measure(kQ0, Basis::kZ, rng);
  }
  double p = double(ones) / shots;  // expect 0.7
  double sigma = std::sqrt(0.7 * 0.3 / shots);
  CHECK(std::abs(p - 0.7) < 5 * sigma);
}

TEST_CASE("X/Y basis measurements on eigenstates are deterministic") {
  Rng rng(3);
  QuantumState s = QuantumState::ground({kQ0});
  s.apply_unitary(gates::h(), {kQ0});  // |+>
  CHECK(s.measure(kQ0, Basis::kX, rng) == 0);

  QuantumState t = QuantumState::ground({kQ0});
  t.apply_unitary(gates::h(), {kQ0});
  t.apply_unitary(gates::s(), {kQ0});  // |+i>
  CHECK(t.measure(kQ0, Basis::kY, rng) == 0);
}

TEST_CASE("Y measurement of Psi+ arm is unbiased") {
  Rng rng(99);
  int ones = 0;
  const int shots = 20000;
  for (int i = 0; i < shots; ++i) {
    QuantumState s = QuantumState::from_vector({kQ0, kQ2}, gates::psi_plus());
    ones += s.measure(kQ0, Basis::kY, rng);
  }
  double p = double(ones) / shots;
  CHECK(std::abs(p - 0.5) < 5 * std::sqrt(0.25 / shots));
}

TEST_CASE("partial trace oracle values") {
  // Product state: tracing the second qubit of |00> leaves |0><0|.
  QuantumState s = QuantumState::ground({kQ0, kQ1});
  QuantumState r = s.partial_trace({kQ0});
  CHECK(std::abs(r.density()(0, 0) - cd(1, 0)) < 1e-12);

  // Maximally entangled: either arm of Psi+ is I/2.
  QuantumState bell = QuantumState::from_vector({kQ0, kQ1}, gates::psi_plus());
  QuantumState arm = bell.partial_trace({kQ1});
  CHECK(max_abs_diff(arm.density(), MatX::Identity(2, 2) / 2.0) < 1e-12);

  // (|00> + |01> + |10>)/sqrt(3), trace out the high qubit:
  // rho = [[2/3, 1/3], [1/3, 1/3]] on the low qubit.
  VecX v = VecX::Zero(4);
  v(0) = v(1) = v(2) = 1.0 / std::sqrt(3.0);
  QuantumState w = QuantumState::from_vector({kQ0, kQ1}, v);
  MatX red = w.partial_trace({kQ0}).density();
  MatX expect(2, 2);
  expect << 2.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0;
  CHECK(max_abs_diff(red, expect) < 1e-12);

  // Full keep set is the identity on the density representation.
  QuantumState full = w.partial_trace({kQ0, kQ1});
  CHECK(max_abs_diff(full.density(), w.density()) < 1e-12);
}

TEST_CASE("insert and remove qubits") {
  QuantumState s = QuantumState::ground({kQ0});
  s.apply_unitary(gates::x(), {kQ0});
  s.insert_qubit(kQ1);
  CHECK(s.num_qubits() == 2);
  CHECK(std::abs(s.vector()(1) - cd(1, 0)) < 1e-12);  // |q1 q0> = |01>
  s.remove_qubit(kQ1, 0);
  CHECK(s.num_qubits() == 1);
  CHECK(std::abs(s.vector()(1) - cd(1, 0)) < 1e-12);
}

TEST_CASE("relabel permutes amplitudes consistently") {
  QuantumState s = QuantumState::ground({kQ0, kQ1});
  s.apply_unitary(gates::x(), {kQ0});  // |01> in |q1 q0|
  s.relabel(kQ0, kQ2);                 // now order is (kQ1, kQ2); data moved to kQ2
  CHECK(s.bit_position(kQ1) == 0);
  CHECK(s.bit_position(kQ2) == 1);
  CHECK(std::abs(s.vector()(2) - cd(1, 0)) < 1e-12);
}

TEST_CASE("pauli expansion oracle values") {
  auto c = pauli_expansion(MatX(gates::id2()));
  CHECK(std::abs(c[0] - cd(1, 0)) < 1e-12);
  for (int i = 1; i < 4; ++i) CHECK(std::abs(c[i]) < 1e-12);

  MatX zz = kron(gates::z(), gates::z());
  auto czz = pauli_expansion(zz);
  // flat index of ZZ: factors (3,3) -> 3 + 3*4 = 15
  CHECK(std::abs(czz[15] - cd(1, 0)) < 1e-12);
  for (int i = 0; i < 15; ++i) CHECK(std::abs(czz[i]) < 1e-12);

  // CZ = (II + IZ + ZI - ZZ)/2.
  auto ccz = pauli_expansion(MatX(gates::cz()));
  CHECK(std::abs(ccz[0] - cd(0.5, 0)) < 1e-12);
  CHECK(std::abs(ccz[3] - cd(0.5, 0)) < 1e-12);   // Z on qubit 0
  CHECK(std::abs(ccz[12] - cd(0.5, 0)) < 1e-12);  // Z on qubit 1
  CHECK(std::abs(ccz[15] - cd(-0.5, 0)) < 1e-12);
  MatX rec = pauli_reconstruct(ccz, 2);
  CHECK(max_abs_diff(rec, MatX(gates::cz())) < 1e-10);
}

TEST_CASE("channel positivity on random pure states") {
  Rng rng(42);
  KrausChannel dep = KrausChannel::depolarizing(0.3, 2);
  for (int rep = 0; rep < 200; ++rep) {
    MatX u = random_unitary4(rng);
    QuantumState s = QuantumState::ground({kQ0, kQ1});
    s.apply_unitary(u, {kQ0, kQ1});
    s.apply_channel(dep, {kQ0, kQ1});
    Eigen::SelfAdjointEigenSolver<MatX> es(s.density());
    CHECK(es.eigenvalues().minCoeff() > -1e-10);
    CHECK(s.norm_error() < 1e-10);
  }
}

TEST_CASE("rejects invalid operations") {
  QuantumState s = QuantumState::ground({kQ0, kQ1});
  MatX not_unitary = MatX::Ones(2, 2);
  CHECK_THROWS(s.apply_unitary(not_unitary, {kQ0}));
  CHECK_THROWS(s.apply_unitary(gates::cz(), {kQ0, kQ0}));
  CHECK_THROWS(s.apply_unitary(MatX(gates::x()), {kQ2}));
  CHECK_THROWS(s.partial_trace({}));
}
