#include "revcirc/gates.hpp"

#include <algorithm>

namespace revcirc {

namespace {

constexpr uint32_t kMaxWidth = 16;

void check_width(uint32_t width) {
  if (width < 1 || width > kMaxWidth) {
    throw Error("bit pattern width must be in 1.." + std::to_string(kMaxWidth) +
                ", got " + std::to_string(width));
  }
}

} // namespace

BitPattern::BitPattern(uint32_t width_, uint32_t value_)
    : width(width_), value(value_) {
  check_width(width);
  if (value >= (1u << width)) {
    throw Error("bit pattern value " + std::to_string(value) +
                " does not fit in width " + std::to_string(width));
  }
}

bool BitPattern::bit(uint32_t line) const {
  if (line >= width) {
    throw Error("line " + std::to_string(line) + " out of range for width " +
                std::to_string(width));
  }
  return (value >> line) & 1u;
}

BitPattern BitPattern::with_bit(uint32_t line, bool v) const {
  if (line >= width) {
    throw Error("line " + std::to_string(line) + " out of range for width " +
                std::to_string(width));
  }
  uint32_t next = v ? (value | (1u << line)) : (value & ~(1u << line));
  return BitPattern(width, next);
}

std::string BitPattern::to_string() const {
  std::string s(width, '0');
  for (uint32_t i = 0; i < width; ++i) {
    if ((value >> i) & 1u) s[i] = '1';
  }
  return s;
}

BitPattern BitPattern::parse(std::string_view text) {
  check_width(static_cast<uint32_t>(text.size()));
  uint32_t v = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      v |= 1u << i;
    } else if (text[i] != '0') {
      throw Error(std::string("bit string may contain only 0/1, got '") +
                  std::string(text) + "'");
    }
  }
  return BitPattern(static_cast<uint32_t>(text.size()), v);
}

// (A,B,C,D) -> (P,Q,R,S), sixteen rows in printed order (A toggles slowest).
static constexpr std::array<std::array<uint8_t, 8>, 16> kTsgRows = {{
    {0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 1, 0},
    {0, 0, 1, 0, 0, 1, 1, 1},
    {0, 0, 1, 1, 0, 1, 0, 0},
    {0, 1, 0, 0, 0, 1, 1, 0},
    {0, 1, 0, 1, 0, 1, 0, 1},
    {0, 1, 1, 0, 0, 0, 0, 1},
    {0, 1, 1, 1, 0, 0, 1, 1},
    {1, 0, 0, 0, 1, 1, 1, 0},
    {1, 0, 0, 1, 1, 1, 0, 1},
    {1, 0, 1, 0, 1, 1, 1, 1},
    {1, 0, 1, 1, 1, 1, 0, 0},
    {1, 1, 0, 0, 1, 0, 0, 1},
    {1, 1, 0, 1, 1, 0, 1, 1},
    {1, 1, 1, 0, 1, 0, 0, 0},
    {1, 1, 1, 1, 1, 0, 1, 0},
}};

std::span<const std::array<uint8_t, 8>, 16> tsg_rows_as_printed() {
  return kTsgRows;
}

namespace {

GateSpec make_tsg() {
  GateSpec g;
  g.name = "TSG";
  g.arity = 4;
  g.table.resize(16);
  for (const auto& row : kTsgRows) {
    // Printed rows list A first; line 0 = A = bit 0 of our patterns.
    uint32_t in = row[0] | (row[1] << 1) | (row[2] << 2) | (row[3] << 3);
    uint32_t out = row[4] | (row[5] << 1) | (row[6] << 2) | (row[7] << 3);
    g.table[in] = BitPattern(4, out);
  }
  return g;
}

GateSpec make_fredkin() {
  GateSpec g;
  g.name = "FREDKIN";
  g.arity = 3;
  g.table.resize(8);
  for (uint32_t v = 0; v < 8; ++v) {
    bool a = v & 1u, b = (v >> 1) & 1u, c = (v >> 2) & 1u;
    bool q = a ? c : b;
    bool r = a ? b : c;
    g.table[v] = BitPattern(3, static_cast<uint32_t>(a) |
                                   (static_cast<uint32_t>(q) << 1) |
                                   (static_cast<uint32_t>(r) << 2));
  }
  return g;
}

} // namespace

const GateSpec& tsg_table() {
  static const GateSpec g = make_tsg();
  return g;
}

const GateSpec& fredkin_table() {
  static const GateSpec g = make_fredkin();
  return g;
}

GateRef standard_gate(StandardGate which) {
  static const GateRef tsg = std::make_shared<const GateSpec>(tsg_table());
  static const GateRef fredkin =
      std::make_shared<const GateSpec>(fredkin_table());
  switch (which) {
  case StandardGate::tsg:
    return tsg;
  case StandardGate::fredkin:
    return fredkin;
  }
  throw Error("unknown standard gate");
}

BitPattern eval_gate(const GateSpec& gate, BitPattern input) {
  if (input.width != gate.arity) {
    throw Error("gate '" + gate.name + "' expects " +
                std::to_string(gate.arity) + " lines, input has " +
                std::to_string(input.width));
  }
  return gate.table[input.value];
}

bool is_bijective(const GateSpec& gate) {
  std::vector<bool> seen(gate.table.size(), false);
  for (const auto& out : gate.table) {
    if (seen[out.value]) return false;
    seen[out.value] = true;
  }
  return true;
}

GateSpec gate_from_table(std::string name, std::span<const BitPattern> rows) {
  if (rows.empty() || (rows.size() & (rows.size() - 1)) != 0) {
    throw Error("gate table length must be a power of two, got " +
                std::to_string(rows.size()));
  }
  uint32_t arity = 0;
  while ((size_t{1} << arity) < rows.size()) ++arity;
  if (arity < 1 || arity > kMaxWidth) {
    throw Error("gate arity must be in 1.." + std::to_string(kMaxWidth));
  }
  for (const auto& row : rows) {
    if (row.width != arity) {
      throw Error("gate '" + name + "': row width " +
                  std::to_string(row.width) + " does not match arity " +
                  std::to_string(arity));
    }
  }
  GateSpec g;
  g.name = std::move(name);
  g.arity = arity;
  g.table.assign(rows.begin(), rows.end());
  return g;
}

GateSpec inverse(const GateSpec& gate) {
  if (!is_bijective(gate)) {
    throw Error("gate '" + gate.name + "' is not bijective; no inverse");
  }
  GateSpec inv;
  inv.name = gate.name + "^-1";
  inv.arity = gate.arity;
  inv.table.resize(gate.table.size());
  for (uint32_t in = 0; in < gate.table.size(); ++in) {
    inv.table[gate.table[in].value] = BitPattern(gate.arity, in);
  }
  return inv;
}

} // namespace revcirc
