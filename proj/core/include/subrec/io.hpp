// Copyright 2026 The subrec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>

#include "subrec/channel.hpp"
#include "subrec/linalg.hpp"
#include "subrec/subsystem.hpp"

namespace subrec::io {

// JSON text formats. Complex entries are [re, im] pairs; matrices are
// row-major nested lists. Output is canonical (two-space indent, shortest
// round-trip doubles), so write -> read -> write is byte-identical.
//
//   channel:   {"dim": d, "kraus": [K_1, K_2, ...]}
//   subsystem: {"dim": d, "dA": dA, "dB": dB, "W": [column_0, column_1, ...]}

std::string matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(std::string_view text);

std::string channel_to_json(const KrausChannel& ch);
/// Throws ParseError on malformed input, NotTracePreserving unless
/// check_tp is false.
KrausChannel channel_from_json(std::string_view text, double tol = kDefaultTolerance,
                               bool check_tp = true);

std::string subsystem_to_json(const SubsystemDecomposition& dec);
SubsystemDecomposition subsystem_from_json(std::string_view text, double tol = kDefaultTolerance);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace subrec::io
