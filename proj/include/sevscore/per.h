// Copyright 2026 The Sevscore Authors. All Rights Reserved.
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

#ifndef SEVSCORE_PER_H_
#define SEVSCORE_PER_H_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sevscore {

// Whitespace-separated tokens.
std::vector<std::string> tokenize(std::string_view text);

// Levenshtein distance with unit substitution, deletion and insertion costs.
std::size_t edit_distance(std::span<const std::string> ref,
                          std::span<const std::string> hyp);

// (S + D + I) / len(ref). May exceed 1 when insertions dominate. Throws
// ValidationError for an empty reference.
double phoneme_error_rate(std::span<const std::string> ref,
                          std::span<const std::string> hyp);
double phoneme_error_rate(std::string_view ref, std::string_view hyp);

// Reads a UTF-8 phoneme file (one utterance, whitespace-separated tokens).
std::vector<std::string> read_phoneme_file(const std::filesystem::path& path);

}  // namespace sevscore

#endif  // SEVSCORE_PER_H_
