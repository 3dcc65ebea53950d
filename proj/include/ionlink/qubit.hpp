#pragma once

#include <string>
#include <tuple>

namespace ionlink {

enum class Module : int { kAlice = 0, kBob = 1 };

enum class Role : int { kNetwork = 0, kCircuit = 1, kAuxiliary = 2 };

inline const char* to_string(Module m) { return m == Module::kAlice ? "alice" : "bob"; }

inline const char* to_string(Role r) {
  switch (r) {
    case Role::kNetwork: return "network";
    case Role::kCircuit: return "circuit";
    default: return "aux";
  }
}

// (module, role, index) uniquely names a physical qubit. Composite states
// order their qubits by the lexicographic order of this triple; that order
// is what fixes each qubit's bit position for a whole run.
struct QubitId {
  Module module = Module::kAlice;
  Role role = Role::kNetwork;
  int index = 0;

  friend auto operator<=>(const QubitId&, const QubitId&) = default;

  std::string str() const {
    std::string s = to_string(module);
    s += '.';
    s += to_string(role);
    if (index != 0) s += std::to_string(index);
    return s;
  }
};

inline QubitId network_qubit(Module m) { return {m, Role::kNetwork, 0}; }
inline QubitId circuit_qubit(Module m) { return {m, Role::kCircuit, 0}; }
inline QubitId aux_qubit(Module m) { return {m, Role::kAuxiliary, 0}; }

}  // namespace ionlink
