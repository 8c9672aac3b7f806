// Copyright 2026 The qcool Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcool/circuit.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qcool/errors.h"

namespace qcool {
namespace {

std::uint32_t qubit_mask(int width, int qubit) {
  return 1u << (width - 1 - qubit);
}

Gate transition_gate(const BitString& from, int flip_pos) {
  Gate g;
  g.target = flip_pos - 1;
  for (int pos = 1; pos <= from.width(); ++pos) {
    if (pos != flip_pos) g.controls.push_back({pos - 1, from.bit(pos)});
  }
  return g;
}

void check_gate(const Gate& g, int width) {
  if (g.target < 0 || g.target >= width) {
    throw UsageError("gate target " + std::to_string(g.target) +
                     " outside a width-" + std::to_string(width) + " circuit");
  }
  std::vector<bool> seen(static_cast<std::size_t>(width), false);
  seen[static_cast<std::size_t>(g.target)] = true;
  for (const auto& c : g.controls) {
    if (c.qubit < 0 || c.qubit >= width || seen[static_cast<std::size_t>(c.qubit)]) {
      throw UsageError("invalid or repeated control qubit " +
                       std::to_string(c.qubit));
    }
    if (c.polarity != 0 && c.polarity != 1) {
      throw UsageError("control polarity must be 0 or 1");
    }
    seen[static_cast<std::size_t>(c.qubit)] = true;
  }
}

std::uint32_t apply_gates(const Circuit& circuit, std::uint32_t v) {
  const int w = circuit.width;
  for (const auto& g : circuit.gates) {
    bool fire = true;
    for (const auto& c : g.controls) {
      const int bit = (v & qubit_mask(w, c.qubit)) ? 1 : 0;
      if (bit != c.polarity) {
        fire = false;
        break;
      }
    }
    if (fire) v ^= qubit_mask(w, g.target);
  }
  return v;
}

}  // namespace

TwoLevelPermutation::TwoLevelPermutation(const BitString& a, const BitString& b) {
  if (a.width() != b.width()) {
    throw UsageError("two-level permutation needs equal widths: " + a.str() +
                     " vs " + b.str());
  }
  if (a == b) throw UsageError("two-level permutation needs distinct levels");
  j_ = std::min(a, b);
  k_ = std::max(a, b);
}

bool Gate::all_positive() const {
  return std::all_of(controls.begin(), controls.end(),
                     [](const Control& c) { return c.polarity == 1; });
}

void Circuit::append(const Circuit& other) {
  if (other.width != width) throw UsageError("cannot append circuits of different width");
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

std::vector<TwoLevelPermutation> cooling_unitary(const CostMatrix& matrix,
                                                 const Matching& matching) {
  std::vector<TwoLevelPermutation> out;
  std::vector<BitString> seen;
  for (const auto& [a, b] : matching.pairs(matrix)) {
    for (const auto& level : {a, b}) {
      if (std::find(seen.begin(), seen.end(), level) != seen.end()) {
        throw InternalError("matching reuses level " + level.str());
      }
      seen.push_back(level);
    }
    out.emplace_back(a, b);
  }
  return out;
}

Circuit decompose_tlp(const TwoLevelPermutation& tlp) {
  const BitString& j = tlp.j();
  const BitString& k = tlp.k();
  std::vector<BitString> path{j};
  std::vector<int> flips;
  for (int pos = 1; pos <= j.width(); ++pos) {
    if (j.bit(pos) != k.bit(pos)) {
      flips.push_back(pos);
      path.push_back(path.back().flipped(pos));
    }
  }
  const std::size_t d = flips.size();

  Circuit c;
  c.width = j.width();
  for (std::size_t i = 0; i + 1 < d; ++i) {
    c.gates.push_back(transition_gate(path[i], flips[i]));
  }
  c.gates.push_back(transition_gate(path[d - 1], flips[d - 1]));
  for (std::size_t i = d - 1; i-- > 0;) {
    c.gates.push_back(transition_gate(path[i], flips[i]));
  }
  return c;
}

Circuit decompose_all(int width, const std::vector<TwoLevelPermutation>& tlps) {
  Circuit c;
  c.width = width;
  for (const auto& t : tlps) c.append(decompose_tlp(t));
  return c;
}

Circuit lower_circuit(const Circuit& circuit) {
  Circuit out;
  out.width = circuit.width;
  for (const auto& g : circuit.gates) {
    std::vector<int> negated;
    Gate positive{g.target, {}};
    for (const auto& c : g.controls) {
      if (c.polarity == 0) negated.push_back(c.qubit);
      positive.controls.push_back({c.qubit, 1});
    }
    for (int q : negated) out.gates.push_back({q, {}});
    out.gates.push_back(positive);
    for (int q : negated) out.gates.push_back({q, {}});
  }
  return out;
}

BitString apply_circuit(const Circuit& circuit, const BitString& state) {
  if (state.width() != circuit.width) {
    throw UsageError("state " + state.str() + " does not fit a width-" +
                     std::to_string(circuit.width) + " circuit");
  }
  for (const auto& g : circuit.gates) check_gate(g, circuit.width);
  return BitString(circuit.width, apply_gates(circuit, state.value()));
}

std::vector<std::uint32_t> permutation_table(const Circuit& circuit) {
  if (circuit.width < 1 || circuit.width > kMaxTableWidth) {
    throw UsageError("permutation tables are limited to width <= " +
                     std::to_string(kMaxTableWidth));
  }
  for (const auto& g : circuit.gates) check_gate(g, circuit.width);
  std::vector<std::uint32_t> table(std::size_t{1} << circuit.width);
  for (std::uint32_t v = 0; v < table.size(); ++v) table[v] = apply_gates(circuit, v);
  return table;
}

std::vector<std::uint32_t> transposition_table(
    int width, const std::vector<TwoLevelPermutation>& tlps) {
  if (width < 1 || width > kMaxTableWidth) {
    throw UsageError("permutation tables are limited to width <= " +
                     std::to_string(kMaxTableWidth));
  }
  std::vector<std::uint32_t> table(std::size_t{1} << width);
  for (std::uint32_t v = 0; v < table.size(); ++v) table[v] = v;
  for (const auto& t : tlps) {
    if (t.width() != width) throw UsageError("transposition width mismatch");
    std::swap(table[t.j().value()], table[t.k().value()]);
  }
  return table;
}

bool is_even_permutation(const std::vector<std::uint32_t>& table) {
  std::vector<bool> visited(table.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t start = 0; start < table.size(); ++start) {
    if (visited[start]) continue;
    std::size_t len = 0;
    for (std::size_t v = start; !visited[v]; v = table[v]) {
      visited[v] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

std::size_t count_gates_with_controls(const Circuit& circuit,
                                      std::size_t min_controls) {
  return static_cast<std::size_t>(
      std::count_if(circuit.gates.begin(), circuit.gates.end(),
                    [&](const Gate& g) { return g.controls.size() >= min_controls; }));
}

bool requires_toffoli(const MachineSpec& spec) {
  if (spec.n() != 2) {
    throw UsageError("requires_toffoli is defined for two-qubit machines only");
  }
  const double rhs = spec.scaled_omega() + spec.gap(1);
  return !(spec.gap(2) - rhs > spec.tolerance() * std::max(1.0, std::abs(rhs)));
}

std::string render_circuit(const Circuit& circuit) {
  std::ostringstream os;
  os << "width " << circuit.width << "\n";
  for (const auto& g : circuit.gates) {
    if (g.controls.empty()) {
      os << "X target=" << g.target << "\n";
      continue;
    }
    os << "MCX target=" << g.target << " controls=";
    for (std::size_t i = 0; i < g.controls.size(); ++i) {
      os << (i ? "," : "") << g.controls[i].qubit << ":" << g.controls[i].polarity;
    }
    os << "\n";
  }
  return os.str();
}

Circuit parse_circuit(std::string_view text) {
  Circuit c;
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_width = false;
  int line_no = 0;
  auto fail = [&](const std::string& why) {
    throw ValidationError("circuit", "line " + std::to_string(line_no) + ": " + why);
  };
  auto parse_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      fail("expected an integer, got '" + s + "'");
    }
    if (used != s.size()) fail("expected an integer, got '" + s + "'");
    return v;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string op, target, controls;
    ls >> op;
    if (op == "width") {
      std::string w;
      ls >> w;
      c.width = parse_int(w);
      if (c.width < 1 || c.width > kMaxWidth) fail("width out of range");
      have_width = true;
      continue;
    }
    if (!have_width) fail("missing width header");
    ls >> target;
    if (target.rfind("target=", 0) != 0) fail("expected target=<q>");
    Gate g;
    g.target = parse_int(target.substr(7));
    if (op == "MCX") {
      ls >> controls;
      if (controls.rfind("controls=", 0) != 0) fail("expected controls=<q:pol,...>");
      std::istringstream cs(controls.substr(9));
      std::string item;
      while (std::getline(cs, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) fail("control '" + item + "' lacks a polarity");
        g.controls.push_back(
            {parse_int(item.substr(0, colon)), parse_int(item.substr(colon + 1))});
      }
    } else if (op != "X") {
      fail("unknown gate '" + op + "'");
    }
    std::string extra;
    if (ls >> extra) fail("unexpected trailing text '" + extra + "'");
    try {
      check_gate(g, c.width);
    } catch (const UsageError& e) {
      fail(e.what());
    }
    c.gates.push_back(std::move(g));
  }
  if (!have_width) throw ValidationError("circuit", "missing width header");
  return c;
}

}  // namespace qcool
