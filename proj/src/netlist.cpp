#include "revcirc/netlist.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace revcirc {

namespace {

std::string instance_label(const Netlist& netlist, uint32_t id) {
  std::string label = "g" + std::to_string(id);
  if (id < netlist.instances().size() && netlist.instances()[id].gate) {
    label += "(" + netlist.instances()[id].gate->name + ")";
  }
  return label;
}

std::string source_label(const Source& s) {
  switch (s.kind) {
  case Source::Kind::input:
    return "in" + std::to_string(s.index);
  case Source::Kind::constant:
    return s.bit ? "const1" : "const0";
  case Source::Kind::port:
    return "g" + std::to_string(s.index) + "." + std::to_string(s.port);
  }
  return "?";
}

} // namespace

bool operator==(const GateInstance& a, const GateInstance& b) {
  if (a.inputs != b.inputs) return false;
  if (a.gate == b.gate) return true;
  if (!a.gate || !b.gate) return false;
  return *a.gate == *b.gate;
}

std::string to_string(Architecture arch) {
  switch (arch) {
  case Architecture::none:
    return "none";
  case Architecture::full_adder:
    return "full-adder";
  case Architecture::ripple:
    return "ripple";
  case Architecture::carry_skip:
    return "skip";
  }
  return "none";
}

std::optional<Architecture> architecture_from_string(std::string_view s) {
  if (s == "none") return Architecture::none;
  if (s == "full-adder") return Architecture::full_adder;
  if (s == "ripple") return Architecture::ripple;
  if (s == "skip") return Architecture::carry_skip;
  return std::nullopt;
}

Netlist::Netlist(std::string name, uint32_t num_primary_inputs,
                 std::vector<GateInstance> instances,
                 std::vector<Source> primary_outputs, NetlistMetadata metadata,
                 std::vector<Source> shared_carries)
    : name_(std::move(name)), num_primary_inputs_(num_primary_inputs),
      instances_(std::move(instances)),
      primary_outputs_(std::move(primary_outputs)), metadata_(metadata),
      shared_carries_(std::move(shared_carries)) {}

bool Netlist::is_shared_carry(const Source& s) const {
  return std::find(shared_carries_.begin(), shared_carries_.end(), s) !=
         shared_carries_.end();
}

bool operator==(const Netlist& a, const Netlist& b) {
  return a.name_ == b.name_ &&
         a.num_primary_inputs_ == b.num_primary_inputs_ &&
         a.instances_ == b.instances_ &&
         a.primary_outputs_ == b.primary_outputs_ &&
         a.metadata_ == b.metadata_ && a.shared_carries_ == b.shared_carries_;
}

namespace {

// Reports the defect in one source reference, if any. Topological order is
// checked against `consumer`, the id of the instance reading the source
// (primary outputs pass instances().size() so any existing instance is fair
// game).
std::optional<std::string> check_source_ref(const Netlist& netlist,
                                            const Source& s,
                                            uint32_t consumer) {
  switch (s.kind) {
  case Source::Kind::input:
    if (s.index >= netlist.num_primary_inputs()) {
      return "dangling reference: primary input " + std::to_string(s.index) +
             " of " + std::to_string(netlist.num_primary_inputs());
    }
    return std::nullopt;
  case Source::Kind::constant:
    return std::nullopt;
  case Source::Kind::port: {
    if (s.index >= netlist.instances().size()) {
      return "dangling reference: instance g" + std::to_string(s.index) +
             " does not exist";
    }
    const GateInstance& producer = netlist.instances()[s.index];
    if (producer.gate && s.port >= producer.gate->arity) {
      return "dangling reference: " + instance_label(netlist, s.index) +
             " has no output port " + std::to_string(s.port);
    }
    if (s.index >= consumer) {
      return "not topologically ordered: reads " +
             instance_label(netlist, s.index) + " before it is defined";
    }
    return std::nullopt;
  }
  }
  return "unknown source kind";
}

// Looks for a dependency cycle among instances, ignoring list order.
// Returns one cycle as a path of instance ids, e.g. {3, 5, 3}.
std::vector<uint32_t> find_cycle(const Netlist& netlist) {
  const auto& instances = netlist.instances();
  const uint32_t n = static_cast<uint32_t>(instances.size());
  std::vector<uint8_t> color(n, 0); // 0 white, 1 on path, 2 done
  std::vector<uint32_t> path;
  std::vector<std::pair<uint32_t, size_t>> work; // (node, next input slot)

  for (uint32_t root = 0; root < n; ++root) {
    if (color[root] != 0) continue;
    work.assign(1, {root, 0});
    path.assign(1, root);
    color[root] = 1;
    while (!work.empty()) {
      const uint32_t node = work.back().first;
      const size_t slot = work.back().second++;
      const auto& inputs = instances[node].inputs;
      if (slot >= inputs.size()) {
        color[node] = 2;
        path.pop_back();
        work.pop_back();
        continue;
      }
      const Source& s = inputs[slot];
      if (s.kind != Source::Kind::port || s.index >= n) continue;
      const uint32_t dep = s.index;
      if (color[dep] == 1) {
        // Back edge; slice the current path from dep onward.
        auto it = std::find(path.begin(), path.end(), dep);
        std::vector<uint32_t> cycle(it, path.end());
        cycle.push_back(dep);
        return cycle;
      }
      if (color[dep] == 0) {
        color[dep] = 1;
        path.push_back(dep);
        work.push_back({dep, 0});
      }
    }
  }
  return {};
}

} // namespace

std::vector<Diagnostic> validate(const Netlist& netlist) {
  std::vector<Diagnostic> diags;
  const auto& instances = netlist.instances();
  const uint32_t n = static_cast<uint32_t>(instances.size());

  bool forward_ref = false;
  for (uint32_t id = 0; id < n; ++id) {
    const GateInstance& inst = instances[id];
    if (!inst.gate) {
      diags.push_back({Diagnostic::Severity::error, "missing gate", id});
      continue;
    }
    if (inst.inputs.size() != inst.gate->arity) {
      diags.push_back({Diagnostic::Severity::error,
                       "arity mismatch: gate '" + inst.gate->name +
                           "' expects " + std::to_string(inst.gate->arity) +
                           " inputs, got " +
                           std::to_string(inst.inputs.size()),
                       id});
    }
    for (const Source& s : inst.inputs) {
      if (auto defect = check_source_ref(netlist, s, id)) {
        forward_ref |= defect->starts_with("not topologically ordered");
        diags.push_back({Diagnostic::Severity::error, *defect, id});
      }
    }
  }

  // A forward reference may be a mis-sorted list or a genuine cycle; tell
  // them apart so the report names the actual problem.
  if (forward_ref) {
    std::vector<uint32_t> cycle = find_cycle(netlist);
    if (!cycle.empty()) {
      std::string path;
      for (size_t i = 0; i < cycle.size(); ++i) {
        if (i) path += " -> ";
        path += "g" + std::to_string(cycle[i]);
      }
      diags.push_back(
          {Diagnostic::Severity::error, "cycle: " + path, cycle.front()});
    }
  }

  for (const Source& s : netlist.primary_outputs()) {
    if (auto defect = check_source_ref(netlist, s, n)) {
      diags.push_back({Diagnostic::Severity::error,
                       "primary output: " + *defect, std::nullopt});
    }
  }

  // Fanout discipline: gate outputs feed at most one consumer unless the
  // netlist declares the source as a shared block carry; primary inputs and
  // constants may fan out freely but the fanout is still reported.
  std::map<std::pair<uint32_t, uint32_t>, uint32_t> port_consumers;
  std::map<uint32_t, uint32_t> input_consumers;
  for (const GateInstance& inst : instances) {
    for (const Source& s : inst.inputs) {
      if (s.kind == Source::Kind::port) {
        ++port_consumers[{s.index, s.port}];
      } else if (s.kind == Source::Kind::input) {
        ++input_consumers[s.index];
      }
    }
  }
  for (const auto& [key, count] : port_consumers) {
    if (count <= 1) continue;
    Source s = Source::from_port(key.first, key.second);
    if (netlist.is_shared_carry(s)) {
      diags.push_back({Diagnostic::Severity::warning,
                       "block-carry fanout " + std::to_string(count) + ": " +
                           source_label(s),
                       key.first});
    } else {
      diags.push_back({Diagnostic::Severity::error,
                       "gate-output fanout " + std::to_string(count) + ": " +
                           source_label(s) + " feeds more than one input",
                       key.first});
    }
  }
  for (const auto& [input, count] : input_consumers) {
    if (count <= 1) continue;
    diags.push_back({Diagnostic::Severity::warning,
                     "primary-input fanout " + std::to_string(count) + ": in" +
                         std::to_string(input),
                     std::nullopt});
  }

  return diags;
}

bool has_errors(std::span<const Diagnostic> diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) {
                       return d.severity == Diagnostic::Severity::error;
                     });
}

NetlistBuilder::NetlistBuilder(std::string name, uint32_t num_primary_inputs)
    : name_(std::move(name)), num_primary_inputs_(num_primary_inputs) {}

void NetlistBuilder::check_source(const Source& source) const {
  switch (source.kind) {
  case Source::Kind::input:
    if (source.index >= num_primary_inputs_) {
      throw Error("primary input " + std::to_string(source.index) +
                  " out of range (netlist has " +
                  std::to_string(num_primary_inputs_) + ")");
    }
    return;
  case Source::Kind::constant:
    return;
  case Source::Kind::port:
    if (source.index >= instances_.size()) {
      throw Error("not topologically ordered: instance g" +
                  std::to_string(source.index) + " is not defined yet");
    }
    if (source.port >= instances_[source.index].gate->arity) {
      throw Error("g" + std::to_string(source.index) + " has no output port " +
                  std::to_string(source.port));
    }
    return;
  }
  throw Error("unknown source kind");
}

uint32_t NetlistBuilder::add_gate(GateRef gate, std::vector<Source> inputs) {
  if (finished_) throw Error("builder already finished");
  if (!gate) throw Error("null gate");
  if (inputs.size() != gate->arity) {
    throw Error("gate '" + gate->name + "' expects " +
                std::to_string(gate->arity) + " inputs, got " +
                std::to_string(inputs.size()));
  }
  for (const Source& s : inputs) check_source(s);
  instances_.push_back({std::move(gate), std::move(inputs)});
  return static_cast<uint32_t>(instances_.size() - 1);
}

void NetlistBuilder::mark_shared_carry(const Source& source) {
  if (finished_) throw Error("builder already finished");
  if (source.kind != Source::Kind::port) {
    throw Error("only gate-output sources can be marked as shared carries");
  }
  check_source(source);
  shared_carries_.push_back(source);
}

void NetlistBuilder::set_metadata(NetlistMetadata metadata) {
  metadata_ = metadata;
}

Netlist NetlistBuilder::finish(std::vector<Source> primary_outputs) && {
  if (finished_) throw Error("builder already finished");
  finished_ = true;
  Netlist netlist(std::move(name_), num_primary_inputs_, std::move(instances_),
                  std::move(primary_outputs), metadata_,
                  std::move(shared_carries_));
  auto diags = validate(netlist);
  for (const Diagnostic& d : diags) {
    if (d.severity == Diagnostic::Severity::error) {
      throw Error("invalid netlist '" + netlist.name() + "': " + d.message);
    }
  }
  return netlist;
}

OutputClassification classify_outputs(const Netlist& netlist) {
  OutputClassification result;
  const auto& instances = netlist.instances();
  result.tags.resize(instances.size());
  for (size_t id = 0; id < instances.size(); ++id) {
    uint32_t arity = instances[id].gate ? instances[id].gate->arity : 0;
    result.tags[id].assign(arity, PortTag::garbage);
  }

  auto tag_at = [&](const Source& s) -> PortTag* {
    if (s.kind != Source::Kind::port) return nullptr;
    if (s.index >= result.tags.size()) return nullptr;
    if (s.port >= result.tags[s.index].size()) return nullptr;
    return &result.tags[s.index][s.port];
  };

  for (const GateInstance& inst : instances) {
    for (const Source& s : inst.inputs) {
      if (PortTag* tag = tag_at(s)) *tag = PortTag::consumed;
    }
  }
  // Designation as a primary output wins over consumption.
  for (const Source& s : netlist.primary_outputs()) {
    if (PortTag* tag = tag_at(s)) *tag = PortTag::primary;
  }

  for (const auto& ports : result.tags) {
    for (PortTag tag : ports) {
      switch (tag) {
      case PortTag::primary:
        ++result.primary;
        break;
      case PortTag::consumed:
        ++result.consumed;
        break;
      case PortTag::garbage:
        ++result.garbage;
        break;
      }
    }
  }
  return result;
}

} // namespace revcirc
