// Copyright 2026 The isaowl Authors.
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

#ifndef ISAOWL_OWL_IO_H_
#define ISAOWL_OWL_IO_H_

#include <string>
#include <string_view>

#include "isaowl/knowledge_base.h"
#include "json.hpp"

namespace isaowl {

inline constexpr std::string_view kOntologyIri = "http://example.org/isaowl";

// OWL 2 functional-style document: fixed prefix block, declarations of every
// used symbol in sorted order, then one axiom per line in insertion order.
std::string SerializeOwl(const KnowledgeBase &kb);

// Reads documents produced by SerializeOwl. Throws Error(kParseError) with
// "line N: expected ..." on malformed input.
KnowledgeBase ParseOwl(std::string_view text);

// [{"kind", "owl", "dl", "annotations"}...] in insertion order.
nlohmann::json KbToJson(const KnowledgeBase &kb);

}  // namespace isaowl

#endif  // ISAOWL_OWL_IO_H_
