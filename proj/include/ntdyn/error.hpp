// Copyright 2026 The ntdyn Authors
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

#include <stdexcept>
#include <string>
#include <string_view>

namespace ntdyn {

enum class Errc {
  MalformedEmbedding,
  NotNearTriangulation,
  DisconnectsGraph,
  EdgeAlreadyPresent,
  VerticesNotOnFace,
  PartialColoring,
  NotProper,
  NoReducibleVertex,
  HoleTriangulationFailed,
  ExtensionFailed,
  ColoringFailed,
  BudgetExhausted,
  ListTooSmall,
  InvalidParameter,
  InvariantViolated,
  ParseError,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::MalformedEmbedding: return "MalformedEmbedding";
    case Errc::NotNearTriangulation: return "NotNearTriangulation";
    case Errc::DisconnectsGraph: return "DisconnectsGraph";
    case Errc::EdgeAlreadyPresent: return "EdgeAlreadyPresent";
    case Errc::VerticesNotOnFace: return "VerticesNotOnFace";
    case Errc::PartialColoring: return "PartialColoring";
    case Errc::NotProper: return "NotProper";
    case Errc::NoReducibleVertex: return "NoReducibleVertex";
    case Errc::HoleTriangulationFailed: return "HoleTriangulationFailed";
    case Errc::ExtensionFailed: return "ExtensionFailed";
    case Errc::ColoringFailed: return "ColoringFailed";
    case Errc::BudgetExhausted: return "BudgetExhausted";
    case Errc::ListTooSmall: return "ListTooSmall";
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::InvariantViolated: return "InvariantViolated";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the Errc codes so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ntdyn
