#include "ionlink/state.hpp"

#include <algorithm>
#include <stdexcept>

#include "ionlink/channels.hpp"

namespace ionlink {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

QuantumState QuantumState::ground(std::vector<QubitId> qubits) {
  std::sort(qubits.begin(), qubits.end());
  require(std::adjacent_find(qubits.begin(), qubits.end()) == qubits.end(),
          "duplicate qubit id");
  QuantumState s;
  s.qubits_ = std::move(qubits);
  s.vec_ = VecX::Zero(s.dim());
  s.vec_(0) = 1.0;
  return s;
}

QuantumState QuantumState::from_vector(std::vector<QubitId> qubits, VecX amplitudes) {
  std::sort(qubits.begin(), qubits.end());
  QuantumState s;
  s.qubits_ = std::move(qubits);
  require(amplitudes.size() == s.dim(), "amplitude vector has wrong dimension");
  s.vec_ = std::move(amplitudes);
  s.check_invariants();
  return s;
}

QuantumState QuantumState::from_density(std::vector<QubitId> qubits, MatX rho) {
  std::sort(qubits.begin(), qubits.end());
  QuantumState s;
  s.qubits_ = std::move(qubits);
  require(rho.rows() == s.dim() && rho.cols() == s.dim(),
          "density matrix has wrong dimension");
  s.rho_ = std::move(rho);
  s.pure_ = false;
  s.check_invariants();
  return s;
}

bool QuantumState::has_qubit(QubitId q) const {
  return std::binary_search(qubits_.begin(), qubits_.end(), q);
}

int QuantumState::bit_position(QubitId q) const {
  auto it = std::lower_bound(qubits_.begin(), qubits_.end(), q);
  require(it != qubits_.end() && *it == q, "unknown qubit id");
  return static_cast<int>(it - qubits_.begin());
}

MatX QuantumState::embed(const MatX& u, const std::vector<QubitId>& targets) const {
  const int k = static_cast<int>(targets.size());
  require(u.rows() == (Eigen::Index(1) << k) && u.cols() == u.rows(),
          "operator dimension does not match target count");
  std::vector<int> pos(k);
  for (int i = 0; i < k; ++i) pos[i] = bit_position(targets[i]);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) require(pos[i] != pos[j], "duplicate target");

  const Eigen::Index d = dim();
  Eigen::Index target_mask = 0;
  for (int i = 0; i < k; ++i) target_mask |= Eigen::Index(1) << pos[i];

  MatX out = MatX::Zero(d, d);
  // Whole-index composed of (rest bits r, target sub-index a).
  for (Eigen::Index r = 0; r < d; ++r) {
    if (r & target_mask) continue;
    for (Eigen::Index a = 0; a < (Eigen::Index(1) << k); ++a) {
      Eigen::Index row = r;
      for (int i = 0; i < k; ++i)
        if ((a >> i) & 1) row |= Eigen::Index(1) << pos[i];
      for (Eigen::Index b = 0; b < (Eigen::Index(1) << k); ++b) {
        if (u(a, b) == cd(0.0, 0.0)) continue;
        Eigen::Index col = r;
        for (int i = 0; i < k; ++i)
          if ((b >> i) & 1) col |= Eigen::Index(1) << pos[i];
        out(row, col) = u(a, b);
      }
    }
  }
  return out;
}

void QuantumState::apply_unitary(const MatX& u, const std::vector<QubitId>& targets) {
  require(is_unitary(u), "operator is not unitary");
  MatX e = embed(u, targets);
  if (pure_) {
    vec_ = e * vec_;
  } else {
    rho_ = e * rho_ * e.adjoint();
  }
}

void QuantumState::apply_channel(const KrausChannel& ch, const std::vector<QubitId>& targets) {
  ch.check();
  if (ch.operators().size() == 1) {
    // Trace preservation forces a lone Kraus operator to be unitary.
    apply_unitary(ch.operators()[0], targets);
    return;
  }
  promote();
  MatX out = MatX::Zero(dim(), dim());
  for (const MatX& kop : ch.operators()) {
    MatX e = embed(kop, targets);
    out += e * rho_ * e.adjoint();
  }
  rho_ = std::move(out);
}

void QuantumState::apply_channel_sampled(const KrausChannel& ch,
                                         const std::vector<QubitId>& targets, Rng& rng) {
  ch.check();
  if (!pure_) {
    apply_channel(ch, targets);
    return;
  }
  // Draw is consumed even for single-Kraus channels so trajectory RNG
  // alignment does not depend on channel structure.
  double u = rng.uniform();
  double acc = 0.0;
  const auto& ops = ch.operators();
  for (std::size_t k = 0; k < ops.size(); ++k) {
    MatX e = embed(ops[k], targets);
    VecX w = e * vec_;
    const double pk = w.squaredNorm();
    acc += pk;
    if (u < acc || k + 1 == ops.size()) {
      require(pk > 1e-300, "sampled a zero-probability Kraus branch");
      vec_ = w / std::sqrt(pk);
      return;
    }
  }
}

int QuantumState::measure(QubitId target, Basis basis, Rng& rng) {
  if (basis == Basis::kX) {
    apply_unitary(gates::h(), {target});
  } else if (basis == Basis::kY) {
    apply_unitary(gates::h() * gates::sdg(), {target});
  }
  const int p = bit_position(target);
  const Eigen::Index bit = Eigen::Index(1) << p;
  double p0 = 0.0;
  if (pure_) {
    for (Eigen::Index i = 0; i < dim(); ++i)
      if (!(i & bit)) p0 += std::norm(vec_(i));
  } else {
    for (Eigen::Index i = 0; i < dim(); ++i)
      if (!(i & bit)) p0 += rho_(i, i).real();
  }
  const int outcome = rng.uniform() < p0 ? 0 : 1;
  const double pr = outcome == 0 ? p0 : 1.0 - p0;
  require(pr > 1e-300, "measured a zero-probability branch");
  const double scale_v = 1.0 / std::sqrt(pr);
  if (pure_) {
    for (Eigen::Index i = 0; i < dim(); ++i) {
      bool one = (i & bit) != 0;
      vec_(i) = (one == (outcome == 1)) ? vec_(i) * scale_v : cd(0.0, 0.0);
    }
  } else {
    for (Eigen::Index i = 0; i < dim(); ++i)
      for (Eigen::Index j = 0; j < dim(); ++j) {
        bool oi = (i & bit) != 0, oj = (j & bit) != 0;
        if (oi != (outcome == 1) || oj != (outcome == 1))
          rho_(i, j) = 0.0;
        else
          rho_(i, j) /= pr;
      }
  }
  return outcome;
}

QuantumState QuantumState::partial_trace(const std::vector<QubitId>& keep) const {
  require(!keep.empty(), "partial_trace needs a nonempty keep set");
  std::vector<QubitId> kq = keep;
  std::sort(kq.begin(), kq.end());
  std::vector<int> kpos;
  for (const QubitId& q : kq) kpos.push_back(bit_position(q));

  const int nk = static_cast<int>(kq.size());
  std::vector<int> tpos;  // traced-out positions
  for (int p = 0; p < num_qubits(); ++p)
    if (std::find(kpos.begin(), kpos.end(), p) == kpos.end()) tpos.push_back(p);

  MatX rho = density();
  const Eigen::Index dk = Eigen::Index(1) << nk;
  const Eigen::Index dt = Eigen::Index(1) << tpos.size();
  MatX out = MatX::Zero(dk, dk);
  auto compose = [&](Eigen::Index a, Eigen::Index t) {
    Eigen::Index idx = 0;
    for (int i = 0; i < nk; ++i)
      if ((a >> i) & 1) idx |= Eigen::Index(1) << kpos[i];
    for (size_t i = 0; i < tpos.size(); ++i)
      if ((t >> i) & 1) idx |= Eigen::Index(1) << tpos[i];
    return idx;
  };
  for (Eigen::Index a = 0; a < dk; ++a)
    for (Eigen::Index b = 0; b < dk; ++b) {
      cd acc = 0.0;
      for (Eigen::Index t = 0; t < dt; ++t) acc += rho(compose(a, t), compose(b, t));
      out(a, b) = acc;
    }
  return QuantumState::from_density(std::move(kq), std::move(out));
}

void QuantumState::insert_qubit(QubitId q) {
  require(!has_qubit(q), "qubit already present");
  std::vector<QubitId> nq = qubits_;
  nq.push_back(q);
  std::sort(nq.begin(), nq.end());
  int p = static_cast<int>(std::lower_bound(nq.begin(), nq.end(), q) - nq.begin());
  const Eigen::Index low = (Eigen::Index(1) << p) - 1;
  auto lift = [&](Eigen::Index i) { return ((i & ~low) << 1) | (i & low); };
  if (pure_) {
    VecX nv = VecX::Zero(dim() * 2);
    for (Eigen::Index i = 0; i < dim(); ++i) nv(lift(i)) = vec_(i);
    vec_ = std::move(nv);
  } else {
    MatX nr = MatX::Zero(dim() * 2, dim() * 2);
    for (Eigen::Index i = 0; i < dim(); ++i)
      for (Eigen::Index j = 0; j < dim(); ++j) nr(lift(i), lift(j)) = rho_(i, j);
    rho_ = std::move(nr);
  }
  qubits_ = std::move(nq);
}

void QuantumState::remove_qubit(QubitId q, int outcome) {
  const int p = bit_position(q);
  const Eigen::Index bit = Eigen::Index(1) << p;
  const Eigen::Index low = bit - 1;
  auto drop = [&](Eigen::Index i) { return ((i >> 1) & ~low) | (i & low); };
  double discarded = 0.0;
  if (pure_) {
    VecX nv = VecX::Zero(dim() / 2);
    for (Eigen::Index i = 0; i < dim(); ++i) {
      bool one = (i & bit) != 0;
      if (one == (outcome == 1))
        nv(drop(i)) = vec_(i);
      else
        discarded += std::norm(vec_(i));
    }
    vec_ = std::move(nv);
  } else {
    MatX nr = MatX::Zero(dim() / 2, dim() / 2);
    for (Eigen::Index i = 0; i < dim(); ++i) {
      if (((i & bit) != 0) != (outcome == 1)) {
        discarded += rho_(i, i).real();
        continue;
      }
      for (Eigen::Index j = 0; j < dim(); ++j) {
        if (((j & bit) != 0) != (outcome == 1)) continue;
        nr(drop(i), drop(j)) = rho_(i, j);
      }
    }
    rho_ = std::move(nr);
  }
  require(discarded < 1e-9, "removed qubit was not in the stated eigenstate");
  qubits_.erase(qubits_.begin() + p);
}

void QuantumState::promote() {
  if (!pure_) return;
  rho_ = vec_ * vec_.adjoint();
  vec_.resize(0);
  pure_ = false;
}

MatX QuantumState::density() const {
  if (pure_) return vec_ * vec_.adjoint();
  return rho_;
}

const VecX& QuantumState::vector() const {
  if (!pure_) throw std::logic_error("state was promoted to a density matrix");
  return vec_;
}

double QuantumState::fidelity_with_pure(const VecX& ref) const {
  require(ref.size() == dim(), "reference dimension mismatch");
  if (pure_) return std::norm((ref.adjoint() * vec_)(0, 0));
  return ((ref.adjoint() * rho_ * ref)(0, 0)).real();
}

double QuantumState::norm_error() const {
  if (pure_) return std::abs(vec_.norm() - 1.0);
  return std::abs(rho_.trace().real() - 1.0);
}

void QuantumState::relabel(QubitId from, QubitId to) {
  const int old_pos = bit_position(from);
  require(!has_qubit(to), "relabel target already present");
  std::vector<QubitId> nq = qubits_;
  nq[old_pos] = to;
  std::sort(nq.begin(), nq.end());
  int new_pos = static_cast<int>(std::lower_bound(nq.begin(), nq.end(), to) - nq.begin());
  if (new_pos != old_pos) {
    // Move one bit position while preserving the relative order of the rest.
    auto remap = [&](Eigen::Index i) {
      int bits[64];
      int n = num_qubits();
      for (int b = 0; b < n; ++b) bits[b] = static_cast<int>((i >> b) & 1);
      int moved = bits[old_pos];
      for (int b = old_pos; b + 1 < n; ++b) bits[b] = bits[b + 1];
      for (int b = n - 1; b > new_pos; --b) bits[b] = bits[b - 1];
      bits[new_pos] = moved;
      Eigen::Index out = 0;
      for (int b = 0; b < n; ++b)
        if (bits[b]) out |= Eigen::Index(1) << b;
      return out;
    };
    if (pure_) {
      VecX nv(dim());
      for (Eigen::Index i = 0; i < dim(); ++i) nv(remap(i)) = vec_(i);
      vec_ = std::move(nv);
    } else {
      MatX nr(dim(), dim());
      for (Eigen::Index i = 0; i < dim(); ++i)
        for (Eigen::Index j = 0; j < dim(); ++j) nr(remap(i), remap(j)) = rho_(i, j);
      rho_ = std::move(nr);
    }
  }
  qubits_ = std::move(nq);
}

void QuantumState::check_invariants() const {
  if (pure_) {
    require(std::abs(vec_.norm() - 1.0) < 1e-10, "state vector is not normalized");
  } else {
    require(std::abs(rho_.trace().real() - 1.0) < 1e-10, "density matrix trace != 1");
    require((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() < 1e-10,
            "density matrix is not Hermitian");
  }
}

}  // namespace ionlink
