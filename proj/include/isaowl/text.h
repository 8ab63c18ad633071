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

#ifndef ISAOWL_TEXT_H_
#define ISAOWL_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace isaowl {

std::string ToLower(std::string_view s);
std::string Trim(std::string_view s);
std::vector<std::string> SplitOn(std::string_view s, char sep);
std::vector<std::string> SplitWhitespace(std::string_view s);
std::string Join(const std::vector<std::string> &parts, std::string_view sep);
bool IsAllDigits(std::string_view s);

// Concatenates words into a CamelCase label: each word keeps only its ASCII
// letters and digits, and its first character is upper-cased.
std::string CamelCase(const std::vector<std::string> &words);

// Matching key for labels: alphanumerics only, lower-cased. "Wild cat",
// "WildCat" and "wild_cat" all share the key "wildcat".
std::string LabelKey(std::string_view label);

// Reads a whole file; throws Error(kIo) when it cannot be opened.
std::string ReadFile(const std::string &path);
void WriteFile(const std::string &path, std::string_view contents);

}  // namespace isaowl

#endif  // ISAOWL_TEXT_H_
