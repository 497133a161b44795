#pragma once

#include <cstdint>
#include <vector>

#include "revcirc/netlist.hpp"

namespace revcirc {

/// One bit per primary input, index = input line.
using Assignment = std::vector<bool>;

/// Values of every gate output port plus the designated primary outputs,
/// after one topological evaluation pass. Deterministic for a given netlist
/// and assignment.
struct SimulationResult {
  std::vector<uint32_t> patterns; // per instance: packed output pattern
  std::vector<bool> primary_outputs;

  bool port(uint32_t instance, uint32_t port) const {
    return (patterns[instance] >> port) & 1u;
  }
};

/// Evaluates the netlist on one input assignment. Constants read as their
/// bit. Throws when the assignment length does not match.
SimulationResult simulate(const Netlist& netlist, const Assignment& inputs);

/// All 2^n rows of the circuit's function on its primary outputs, in
/// ascending input order (input line i = bit i of the row index). Output
/// line k = bit k of the stored word. Guarded at 20 inputs / 64 outputs.
struct TruthTable {
  uint32_t num_inputs = 0;
  uint32_t num_outputs = 0;
  std::vector<uint64_t> rows;

  bool out_bit(uint64_t input, uint32_t line) const {
    return (rows[input] >> line) & 1u;
  }
  bool operator==(const TruthTable&) const = default;
};

TruthTable truth_table(const Netlist& netlist);

/// Rewrites every constant input as a fresh primary input (one per
/// occurrence, appended after the existing inputs in instance order).
/// This is the lifting step behind the circuit-level reversibility check.
Netlist free_constants(const Netlist& netlist);

/// Circuit-level reversibility: with constants freed, the map from all
/// input lines to the circuit's full output interface (every gate output
/// port not consumed by another gate, plus input lines no gate reads) is
/// injective. Guarded at 20 free input bits.
bool is_bijective_netlist(const Netlist& netlist);

struct VerifyOptions {
  enum class Mode { exhaustive, randomized };
  Mode mode = Mode::exhaustive;
  uint64_t trials = 100000; // randomized only
  uint64_t seed = 0;        // randomized only
};

struct Counterexample {
  Assignment inputs;
  std::vector<bool> expected;
  std::vector<bool> actual;
};

struct VerificationReport {
  VerifyOptions options;
  uint64_t checked = 0;
  uint64_t failure_count = 0;
  std::vector<Counterexample> failures; // first few only
  bool passed = false;
};

/// Checks an adder netlist against integer addition. The netlist must use
/// the generated-adder layout: inputs A[0..w) (LSB first), B[0..w), Cin;
/// outputs Sum[0..w), Cout. Exhaustive mode sweeps all 2^(2w+1) inputs
/// (guarded at w <= 10); randomized mode draws `trials` seeded samples.
VerificationReport verify_adder(const Netlist& netlist, uint32_t width,
                                const VerifyOptions& options);

} // namespace revcirc
