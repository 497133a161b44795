#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "revcirc/gates.hpp"

namespace revcirc {

/// Where a gate input or a primary output takes its value from.
struct Source {
  enum class Kind : uint8_t { input, constant, port };

  Kind kind = Kind::constant;
  uint32_t index = 0; // primary-input index, or instance id for Kind::port
  uint32_t port = 0;  // output port for Kind::port
  bool bit = false;   // value for Kind::constant

  static Source from_input(uint32_t i) { return {Kind::input, i, 0, false}; }
  static Source from_const(bool b) { return {Kind::constant, 0, 0, b}; }
  static Source from_port(uint32_t instance, uint32_t p) {
    return {Kind::port, instance, p, false};
  }

  bool operator==(const Source&) const = default;
};

/// One placed gate. The instance id is its position in the netlist's
/// instance list; inputs.size() must equal the gate's arity.
struct GateInstance {
  GateRef gate;
  std::vector<Source> inputs;
};

bool operator==(const GateInstance& a, const GateInstance& b);

enum class Architecture : uint8_t { none, full_adder, ripple, carry_skip };

std::string to_string(Architecture arch);
std::optional<Architecture> architecture_from_string(std::string_view s);

struct NetlistMetadata {
  uint32_t width = 0; // adder operand width, 0 when not an adder
  Architecture arch = Architecture::none;
  uint32_t block = 0; // carry-skip block size, 0 otherwise

  bool operator==(const NetlistMetadata&) const = default;
};

/// An acyclic gate-level circuit: primary inputs, constant inputs, gate
/// instances in a topologically valid order, and designated primary outputs.
///
/// The constructor stores the fields as given and does not check them; use
/// NetlistBuilder to construct checked netlists, or run validate() on
/// anything assembled by hand or parsed from disk. Finished netlists are
/// immutable and freely shareable across threads.
class Netlist {
public:
  Netlist() = default;
  Netlist(std::string name, uint32_t num_primary_inputs,
          std::vector<GateInstance> instances,
          std::vector<Source> primary_outputs, NetlistMetadata metadata = {},
          std::vector<Source> shared_carries = {});

  const std::string& name() const { return name_; }
  uint32_t num_primary_inputs() const { return num_primary_inputs_; }
  const std::vector<GateInstance>& instances() const { return instances_; }
  const std::vector<Source>& primary_outputs() const {
    return primary_outputs_;
  }
  const NetlistMetadata& metadata() const { return metadata_; }

  /// Gate-output sources the circuit deliberately fans out (the block
  /// carry-in lines of a multi-block carry-skip adder, which feed both the
  /// block's first adder and its skip multiplexer). Fanout from any other
  /// gate output is a validation error.
  const std::vector<Source>& shared_carries() const { return shared_carries_; }
  bool is_shared_carry(const Source& s) const;

  friend bool operator==(const Netlist& a, const Netlist& b);

private:
  std::string name_;
  uint32_t num_primary_inputs_ = 0;
  std::vector<GateInstance> instances_;
  std::vector<Source> primary_outputs_;
  NetlistMetadata metadata_;
  std::vector<Source> shared_carries_;
};

struct Diagnostic {
  enum class Severity : uint8_t { warning, error };

  Severity severity = Severity::error;
  std::string message;
  std::optional<uint32_t> instance; // offending instance, when applicable
};

/// Checks every structural invariant and returns the findings; an empty or
/// warning-only result means the netlist is well formed. Fanout from primary
/// inputs and declared shared carries is reported as a warning, never an
/// error. Deterministic and side-effect free.
std::vector<Diagnostic> validate(const Netlist& netlist);

bool has_errors(std::span<const Diagnostic> diagnostics);

/// Single-use checked construction. add_gate rejects bad wiring immediately;
/// finish() runs validate() and throws if any error-severity diagnostic
/// remains.
class NetlistBuilder {
public:
  NetlistBuilder(std::string name, uint32_t num_primary_inputs);

  /// Places a gate and returns its instance id. Inputs may reference primary
  /// inputs, constants, and output ports of already placed instances.
  uint32_t add_gate(GateRef gate, std::vector<Source> inputs);

  /// Declares that a gate-output source will feed more than one consumer.
  void mark_shared_carry(const Source& source);

  void set_metadata(NetlistMetadata metadata);

  Netlist finish(std::vector<Source> primary_outputs) &&;

private:
  void check_source(const Source& source) const;

  std::string name_;
  uint32_t num_primary_inputs_ = 0;
  std::vector<GateInstance> instances_;
  NetlistMetadata metadata_;
  std::vector<Source> shared_carries_;
  bool finished_ = false;
};

enum class PortTag : uint8_t { primary, consumed, garbage };

/// Per-port classification of every gate output, plus totals. A port is
/// primary when some designated primary output reads it, otherwise consumed
/// when some gate input reads it, otherwise garbage.
struct OutputClassification {
  std::vector<std::vector<PortTag>> tags; // [instance][port]
  size_t primary = 0;
  size_t consumed = 0;
  size_t garbage = 0;

  size_t total_ports() const { return primary + consumed + garbage; }
};

OutputClassification classify_outputs(const Netlist& netlist);

} // namespace revcirc
