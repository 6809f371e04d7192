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

#pragma once

#include <string>
#include <string_view>

#include "revtest/circuit.hpp"

namespace revtest {

/// Parses circuit-file text.
///
/// Grammar: a header line ".v a,b,c" declares the wires left to right
/// (index 0..n-1), then one line per gate: "t1 w", "t2 c,w" or
/// "t3 c1,c2,w", the last wire being the target. "#" starts a comment and
/// blank lines are ignored; LF and CRLF both work. Throws ParseError with a
/// 1-based line/column position on malformed input.
Circuit parse_circuit(std::string_view text);

/// Emits the canonical file form: single spaces, no comments, LF endings.
/// parse_circuit(emit_circuit(c)) reproduces c.
std::string emit_circuit(const Circuit& c);

}  // namespace revtest
