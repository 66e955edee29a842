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

#include "sevscore/unit_lm.h"

#include <algorithm>
#include <cmath>
#include <json.hpp>

#include "byte_io.h"
#include "sevscore/error.h"

namespace sevscore {
namespace {

constexpr std::uint32_t kUnitLmVersion = 1;

}  // namespace

NGramUnitModel::NGramUnitModel(std::size_t k, std::size_t order, double alpha)
    : k_(k), order_(order), alpha_(alpha) {
  if (k == 0) throw ValidationError("unit LM vocabulary must be non-empty");
  if (order < 2) throw ValidationError("n-gram order must be >= 2");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw ValidationError("alpha must be positive");
  }
}

void NGramUnitModel::add_sequence(std::span<const std::uint32_t> units) {
  for (auto u : units) {
    if (u >= k_) {
      throw ValidationError("unit " + std::to_string(u) + " outside vocabulary of size " +
                            std::to_string(k_));
    }
  }
  std::vector<std::uint32_t> padded(order_ - 1, bos());
  padded.insert(padded.end(), units.begin(), units.end());
  padded.push_back(eos());
  std::vector<std::uint32_t> ctx;
  for (std::size_t t = order_ - 1; t < padded.size(); ++t) {
    const std::uint32_t target = padded[t];
    for (std::size_t m = 0; m < order_; ++m) {
      ctx.assign(padded.begin() + static_cast<std::ptrdiff_t>(t - m),
                 padded.begin() + static_cast<std::ptrdiff_t>(t));
      auto& entry = counts_[ctx];
      ++entry.total;
      ++entry.next[target];
    }
  }
}

const NGramUnitModel::ContextCounts* NGramUnitModel::longest_observed(
    std::span<const std::uint32_t> context) const {
  const std::size_t max_len = std::min(context.size(), order_ - 1);
  std::vector<std::uint32_t> key;
  for (std::size_t m = max_len + 1; m-- > 0;) {
    key.assign(context.end() - static_cast<std::ptrdiff_t>(m), context.end());
    const auto it = counts_.find(key);
    if (it != counts_.end() && it->second.total > 0) return &it->second;
  }
  return nullptr;
}

double NGramUnitModel::prob(std::span<const std::uint32_t> context,
                            std::uint32_t symbol) const {
  if (symbol > k_) throw ValidationError("symbol outside vocabulary");
  const double denom_smoothing = alpha_ * static_cast<double>(k_ + 1);
  const ContextCounts* c = longest_observed(context);
  if (c == nullptr) return alpha_ / denom_smoothing;
  const auto it = c->next.find(symbol);
  const double count = it == c->next.end() ? 0.0 : static_cast<double>(it->second);
  return (count + alpha_) / (static_cast<double>(c->total) + denom_smoothing);
}

double NGramUnitModel::log_prob(std::span<const std::uint32_t> context,
                                std::uint32_t symbol) const {
  return std::log(prob(context, symbol));
}

NGramUnitModel NGramUnitModel::from_counts(std::size_t k, std::size_t order, double alpha,
                                           CountTable counts) {
  NGramUnitModel lm(k, order, alpha);
  for (const auto& [ctx, entry] : counts) {
    if (ctx.size() >= order) throw ValidationError("unit LM: context longer than order");
    std::uint64_t total = 0;
    for (const auto& [sym, n] : entry.next) {
      if (sym > k) throw ValidationError("unit LM: symbol outside vocabulary");
      total += n;
    }
    if (total != entry.total) throw ValidationError("unit LM: inconsistent counts");
  }
  lm.counts_ = std::move(counts);
  return lm;
}

NGramUnitModel train_unit_lm(std::span<const UnitSequence> sequences, std::size_t k,
                             std::size_t order, double alpha) {
  if (sequences.empty()) throw ValidationError("empty training set");
  NGramUnitModel lm(k, order, alpha);
  for (const auto& s : sequences) lm.add_sequence(s.units);
  return lm;
}

double speechlm_score(std::span<const std::uint32_t> units, const NextUnitModel& lm) {
  if (units.empty()) throw InsufficientDataError("empty unit sequence");
  const std::size_t k = lm.vocabulary_size();
  for (auto u : units) {
    if (u >= k) throw ValidationError("unit " + std::to_string(u) + " out of vocabulary");
  }
  const std::size_t ctx_len = lm.context_length();
  std::vector<std::uint32_t> padded(ctx_len, lm.bos());
  padded.insert(padded.end(), units.begin(), units.end());
  padded.push_back(lm.eos());
  const std::span<const std::uint32_t> all(padded);
  double log_sum = 0.0;
  for (std::size_t t = ctx_len; t < padded.size(); ++t) {
    log_sum += lm.log_prob(all.subspan(t - ctx_len, ctx_len), padded[t]);
  }
  const double scored = static_cast<double>(units.size() + 1);
  return std::exp(-log_sum / scored);
}

double speechlm_score(const UnitSequence& seq, const NextUnitModel& lm) {
  return speechlm_score(seq.units, lm);
}

std::vector<std::uint8_t> encode_unit_lm(const NGramUnitModel& lm) {
  internal::ByteWriter w;
  w.put_bytes("UNLM");
  w.put_uint<std::uint32_t>(kUnitLmVersion);
  w.put_uint<std::uint32_t>(static_cast<std::uint32_t>(lm.vocabulary_size()));
  w.put_uint<std::uint32_t>(static_cast<std::uint32_t>(lm.order()));
  w.put_f64(lm.alpha());
  w.put_uint<std::uint64_t>(lm.config_hash());
  w.put_uint<std::uint64_t>(lm.counts().size());
  for (const auto& [ctx, entry] : lm.counts()) {
    w.put_uint<std::uint32_t>(static_cast<std::uint32_t>(ctx.size()));
    for (auto s : ctx) w.put_uint<std::uint32_t>(s);
    w.put_uint<std::uint32_t>(static_cast<std::uint32_t>(entry.next.size()));
    for (const auto& [sym, n] : entry.next) {
      w.put_uint<std::uint32_t>(sym);
      w.put_uint<std::uint64_t>(n);
    }
  }
  return w.take();
}

NGramUnitModel decode_unit_lm(std::span<const std::uint8_t> bytes) {
  internal::ByteReader r(bytes, "unit LM");
  const auto magic = r.get_bytes(4);
  if (std::string(magic.begin(), magic.end()) != "UNLM") {
    throw ValidationError("unit LM: bad magic");
  }
  if (r.get_uint<std::uint32_t>() != kUnitLmVersion) {
    throw ValidationError("unit LM: version mismatch");
  }
  const std::size_t k = r.get_uint<std::uint32_t>();
  const std::size_t order = r.get_uint<std::uint32_t>();
  const double alpha = r.get_f64();
  const std::uint64_t hash = r.get_uint<std::uint64_t>();
  const std::uint64_t n_contexts = r.get_uint<std::uint64_t>();
  NGramUnitModel::CountTable counts;
  for (std::uint64_t c = 0; c < n_contexts; ++c) {
    const std::uint32_t len = r.get_uint<std::uint32_t>();
    if (len >= order) throw ValidationError("unit LM: context longer than order");
    std::vector<std::uint32_t> ctx(len);
    for (auto& s : ctx) s = r.get_uint<std::uint32_t>();
    NGramUnitModel::ContextCounts entry;
    const std::uint32_t n_next = r.get_uint<std::uint32_t>();
    for (std::uint32_t i = 0; i < n_next; ++i) {
      const std::uint32_t sym = r.get_uint<std::uint32_t>();
      const std::uint64_t n = r.get_uint<std::uint64_t>();
      entry.next[sym] = n;
      entry.total += n;
    }
    counts.emplace(std::move(ctx), std::move(entry));
  }
  if (r.remaining() != 0) throw ValidationError("unit LM: trailing data");
  auto lm = NGramUnitModel::from_counts(k, order, alpha, std::move(counts));
  lm.set_config_hash(hash);
  return lm;
}

void write_unit_lm(const NGramUnitModel& lm, const std::filesystem::path& path) {
  internal::write_file_bytes(path, encode_unit_lm(lm));
}

NGramUnitModel read_unit_lm(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) throw IoError("missing file: " + path.string());
  return decode_unit_lm(internal::read_file_bytes(path));
}

std::string unit_lm_to_json(const NGramUnitModel& lm) {
  nlohmann::json j;
  j["k"] = lm.vocabulary_size();
  j["order"] = lm.order();
  j["alpha"] = lm.alpha();
  j["eos"] = lm.eos();
  j["bos"] = lm.bos();
  auto& contexts = j["contexts"] = nlohmann::json::array();
  for (const auto& [ctx, entry] : lm.counts()) {
    nlohmann::json next = nlohmann::json::array();
    for (const auto& [sym, n] : entry.next) next.push_back({sym, n});
    contexts.push_back({{"context", ctx}, {"total", entry.total}, {"next", next}});
  }
  return j.dump(2);
}

}  // namespace sevscore
