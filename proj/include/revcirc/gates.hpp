#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "revcirc/error.hpp"

namespace revcirc {

/// A fixed-width vector of logic lines packed into an integer.
///
/// Line 0 is the first (topmost) line of a gate and lives in bit 0 of
/// `value`, i.e. line i == bit i. All widths in this library are capped at
/// 16 so exhaustive sweeps over a gate's domain stay at most 65536 rows.
struct BitPattern {
  uint32_t width = 0;
  uint32_t value = 0;

  BitPattern() = default;
  BitPattern(uint32_t width, uint32_t value);

  bool bit(uint32_t line) const;
  BitPattern with_bit(uint32_t line, bool v) const;

  /// "0110" style rendering, leftmost character = line 0.
  std::string to_string() const;
  static BitPattern parse(std::string_view text);

  auto operator<=>(const BitPattern&) const = default;
};

/// A reversible gate described extensionally: an arity-k lookup table mapping
/// every input pattern to an output pattern of the same width. Construction
/// does not require the table to be a permutation (see is_bijective), but the
/// stock gates all are. GateSpec values are immutable once built and safe to
/// share across threads.
struct GateSpec {
  std::string name;
  uint32_t arity = 0;
  std::vector<BitPattern> table; // indexed by input pattern value

  bool operator==(const GateSpec&) const = default;
};

using GateRef = std::shared_ptr<const GateSpec>;

enum class StandardGate {
  tsg,     // 4x4 one-through gate; works singly as a full adder
  fredkin, // 3-line controlled swap
};

/// The TSG gate: lines (A,B,C,D) in, (P,Q,R,S) out. Defined by its published
/// 16-row truth table; see tsg_rows_as_printed() for the row-for-row data.
const GateSpec& tsg_table();

/// The Fredkin controlled swap: P=A; (Q,R)=(B,C) when A=0, (C,B) when A=1.
/// With C tied to 0 the R line computes A.B; used as a 2-input AND. Read as a
/// multiplexer, Q selects C when A=1 and B when A=0.
const GateSpec& fredkin_table();

GateRef standard_gate(StandardGate which);

/// The 16 TSG truth-table rows in printed order: row r holds
/// (A,B,C,D,P,Q,R,S) with A the most significant bit of the row index.
/// Kept verbatim so the stored permutation can be checked against it.
std::span<const std::array<uint8_t, 8>, 16> tsg_rows_as_printed();

/// Applies the gate to one input pattern. Throws on width mismatch.
BitPattern eval_gate(const GateSpec& gate, BitPattern input);

/// True iff the table is a permutation of 0..2^arity-1.
bool is_bijective(const GateSpec& gate);

/// Builds a gate from explicit rows. The row count must be a power of two
/// and every row must have width log2(count). Bijectivity is not required,
/// so adversarial gates can be constructed and then flagged by is_bijective.
GateSpec gate_from_table(std::string name, std::span<const BitPattern> rows);

/// Inverse permutation of a bijective gate. Throws if the gate is not
/// bijective.
GateSpec inverse(const GateSpec& gate);

} // namespace revcirc
