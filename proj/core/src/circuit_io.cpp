// Copyright 2026 The revtest Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "revtest/circuit_io.hpp"

#include <cctype>
#include <unordered_map>
#include <vector>

#include "revtest/error.hpp"

namespace revtest {
namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
         c == '.' || c == '[' || c == ']';
}

struct LineScanner {
  std::string_view text;
  unsigned line_no;
  std::size_t pos = 0;

  unsigned column() const { return static_cast<unsigned>(pos) + 1; }
  bool at_end() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void skip_spaces() {
    while (!at_end() && (peek() == ' ' || peek() == '\t')) ++pos;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_no, column());
  }

  std::string_view take_name() {
    skip_spaces();
    const std::size_t start = pos;
    while (!at_end() && is_name_char(peek())) ++pos;
    if (pos == start) fail("expected a wire name");
    return text.substr(start, pos - start);
  }

  bool take_comma() {
    skip_spaces();
    if (!at_end() && peek() == ',') {
      ++pos;
      return true;
    }
    return false;
  }

  void expect_end(const std::string& what) {
    skip_spaces();
    if (!at_end()) fail("unexpected trailing text after " + what);
  }
};

}  // namespace

Circuit parse_circuit(std::string_view text) {
  std::vector<std::string> names;
  std::unordered_map<std::string_view, unsigned> index_of;
  std::vector<std::string_view> name_views;
  std::vector<Gate> gates;
  bool have_header = false;

  std::size_t offset = 0;
  unsigned line_no = 0;
  while (offset <= text.size()) {
    if (offset == text.size() && line_no > 0) break;
    std::size_t eol = text.find('\n', offset);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(offset, eol - offset);
    offset = eol + 1;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (std::size_t hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);

    LineScanner scan{raw, line_no};
    scan.skip_spaces();
    if (scan.at_end()) continue;

    if (!have_header) {
      if (raw.substr(scan.pos, 2) != ".v")
        scan.fail("expected wire declaration '.v' before any gates");
      scan.pos += 2;
      for (;;) {
        std::string_view name = scan.take_name();
        if (index_of.contains(name))
          scan.fail("duplicate wire name '" + std::string(name) + "'");
        name_views.push_back(name);
        index_of.emplace(name, static_cast<unsigned>(name_views.size() - 1));
        if (!scan.take_comma()) break;
      }
      scan.expect_end("wire declaration");
      if (name_views.size() > kMaxWires)
        scan.fail("at most 64 wires are supported, got " +
                  std::to_string(name_views.size()));
      have_header = true;
      continue;
    }

    const unsigned tok_col = scan.column();
    if (scan.at_end() || scan.peek() != 't')
      scan.fail("expected a gate line 't1', 't2' or 't3'");
    ++scan.pos;
    if (scan.at_end() || !std::isdigit(static_cast<unsigned char>(scan.peek())))
      throw ParseError("expected a gate line 't1', 't2' or 't3'", line_no,
                       tok_col);
    unsigned arity = 0;
    while (!scan.at_end() &&
           std::isdigit(static_cast<unsigned char>(scan.peek()))) {
      arity = arity * 10 + static_cast<unsigned>(scan.peek() - '0');
      ++scan.pos;
    }
    if (arity < 1 || arity > 3)
      throw ParseError("unsupported gate arity t" + std::to_string(arity) +
                           "; only t1, t2, t3 are in the NCT library",
                       line_no, tok_col);

    std::vector<unsigned> wires;
    for (unsigned i = 0; i < arity; ++i) {
      if (i > 0 && !scan.take_comma()) scan.fail("expected ','");
      const unsigned col = scan.column();
      std::string_view name = scan.take_name();
      auto it = index_of.find(name);
      if (it == index_of.end())
        throw ParseError("unknown wire name '" + std::string(name) + "'",
                         line_no, col);
      for (unsigned w : wires)
        if (w == it->second)
          throw ParseError("duplicate wire '" + std::string(name) +
                               "' in gate",
                           line_no, col);
      wires.push_back(it->second);
    }
    scan.expect_end("gate");

    switch (arity) {
      case 1:
        gates.push_back(Gate::not_gate(wires[0]));
        break;
      case 2:
        gates.push_back(Gate::cnot(wires[0], wires[1]));
        break;
      default:
        gates.push_back(Gate::toffoli(wires[0], wires[1], wires[2]));
        break;
    }
  }

  if (!have_header) throw ParseError("missing '.v' wire declaration", 1, 1);

  names.reserve(name_views.size());
  for (std::string_view v : name_views) names.emplace_back(v);
  const unsigned width = static_cast<unsigned>(names.size());
  return Circuit(width, std::move(gates), std::move(names));
}

std::string emit_circuit(const Circuit& c) {
  std::string out = ".v ";
  for (unsigned w = 0; w < c.width(); ++w) {
    if (w > 0) out += ',';
    out += c.wire_name(w);
  }
  out += '\n';
  for (const Gate& g : c.gates()) {
    out += 't';
    out += static_cast<char>('0' + g.size());
    out += ' ';
    for (unsigned pin = 0; pin < g.size(); ++pin) {
      if (pin > 0) out += ',';
      out += c.wire_name(g.pin_wire(pin));
    }
    out += '\n';
  }
  return out;
}

}  // namespace revtest
