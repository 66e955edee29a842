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

#ifndef SEVSCORE_UNIT_LM_H_
#define SEVSCORE_UNIT_LM_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sevscore/codebook.h"

namespace sevscore {

// Next-unit distribution over K units plus an end-of-sequence symbol.
// Symbols 0..K-1 are units, K is EOS and K+1 is BOS (context only).
class NextUnitModel {
 public:
  virtual ~NextUnitModel() = default;

  virtual std::size_t vocabulary_size() const = 0;  // K
  // Number of preceding symbols the model conditions on.
  virtual std::size_t context_length() const = 0;
  // ln p(symbol | context); context holds the most recent symbols last and may
  // include BOS padding. symbol is in [0, K].
  virtual double log_prob(std::span<const std::uint32_t> context,
                          std::uint32_t symbol) const = 0;

  std::uint32_t eos() const { return static_cast<std::uint32_t>(vocabulary_size()); }
  std::uint32_t bos() const { return static_cast<std::uint32_t>(vocabulary_size() + 1); }
};

// Additively smoothed n-gram over units with backoff by context truncation:
//   p(u | ctx) = (count(ctx, u) + alpha) / (count(ctx) + alpha * (K + 1))
// using the longest suffix of ctx that was observed in training. With no
// observed suffix at all the distribution is uniform, 1 / (K + 1).
class NGramUnitModel final : public NextUnitModel {
 public:
  struct ContextCounts {
    std::uint64_t total = 0;
    std::map<std::uint32_t, std::uint64_t> next;

    friend bool operator==(const ContextCounts&, const ContextCounts&) = default;
  };
  using CountTable = std::map<std::vector<std::uint32_t>, ContextCounts>;

  // Untrained model. Throws ValidationError unless k >= 1, order >= 2 and
  // alpha > 0.
  NGramUnitModel(std::size_t k, std::size_t order, double alpha);

  // Adds one training sequence wrapped as BOS^(order-1) units EOS. Throws
  // ValidationError for units >= K.
  void add_sequence(std::span<const std::uint32_t> units);

  std::size_t vocabulary_size() const override { return k_; }
  std::size_t context_length() const override { return order_ - 1; }
  double log_prob(std::span<const std::uint32_t> context,
                  std::uint32_t symbol) const override;
  double prob(std::span<const std::uint32_t> context, std::uint32_t symbol) const;

  std::size_t order() const { return order_; }
  double alpha() const { return alpha_; }
  const CountTable& counts() const { return counts_; }
  std::uint64_t config_hash() const { return config_hash_; }
  void set_config_hash(std::uint64_t h) { config_hash_ = h; }

  friend bool operator==(const NGramUnitModel& a, const NGramUnitModel& b) {
    return a.k_ == b.k_ && a.order_ == b.order_ && a.alpha_ == b.alpha_ &&
           a.config_hash_ == b.config_hash_ && a.counts_ == b.counts_;
  }

  // Restores a model from serialized counts.
  static NGramUnitModel from_counts(std::size_t k, std::size_t order, double alpha,
                                    CountTable counts);

 private:
  const ContextCounts* longest_observed(std::span<const std::uint32_t> context) const;

  std::size_t k_;
  std::size_t order_;
  double alpha_;
  std::uint64_t config_hash_ = 0;
  CountTable counts_;  // keyed by contexts of length 0..order-1
};

// Trains on every sequence. Throws ValidationError for an empty training set
// or units >= k.
NGramUnitModel train_unit_lm(std::span<const UnitSequence> sequences, std::size_t k,
                             std::size_t order = 3, double alpha = 0.1);

// exp(-(1/T) sum ln p(d_t | d_<t)) over the units and the final EOS.
// Throws ValidationError for an empty sequence or a unit outside the
// vocabulary.
double speechlm_score(std::span<const std::uint32_t> units, const NextUnitModel& lm);
double speechlm_score(const UnitSequence& seq, const NextUnitModel& lm);

// "UNLM" binary: magic, version u32, k u32, order u32, alpha f64,
// config_hash u64, context count u64, then per context: length u32, symbols
// u32..., entry count u32, (symbol u32, count u64)...; little-endian.
std::vector<std::uint8_t> encode_unit_lm(const NGramUnitModel& lm);
NGramUnitModel decode_unit_lm(std::span<const std::uint8_t> bytes);
void write_unit_lm(const NGramUnitModel& lm, const std::filesystem::path& path);
NGramUnitModel read_unit_lm(const std::filesystem::path& path);

// Diagnostic JSON dump of the counts.
std::string unit_lm_to_json(const NGramUnitModel& lm);

}  // namespace sevscore

#endif  // SEVSCORE_UNIT_LM_H_
