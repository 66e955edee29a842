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

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "sevscore/aggregate.h"
#include "sevscore/audio.h"
#include "sevscore/cli.h"
#include "sevscore/codebook.h"
#include "sevscore/config.h"
#include "sevscore/csv.h"
#include "sevscore/error.h"
#include "sevscore/features.h"
#include "sevscore/frame_matrix.h"
#include "sevscore/manifest.h"
#include "sevscore/mfcc.h"
#include "sevscore/per.h"
#include "sevscore/pitch.h"
#include "sevscore/report.h"
#include "sevscore/stats.h"
#include "sevscore/unit_lm.h"

namespace sevscore::cli {
namespace {

namespace fs = std::filesystem;

void init_logging() {
  auto logger = spdlog::stderr_color_mt("sevscore");
  logger->set_pattern("[%l] %v");
  auto level = spdlog::level::warn;
  if (const char* env = std::getenv("SEVSCORE_LOG")) {
    level = spdlog::level::from_str(env);
  }
  logger->set_level(level);
  spdlog::set_default_logger(logger);
}

// Config file plus one flag per config key; flags win.
struct ConfigFlags {
  std::string config_path;
  std::map<std::string, std::string> raw;
  std::vector<std::pair<std::string, CLI::Option*>> options;

  void attach(CLI::App* app) {
    app->add_option("--config", config_path, "key = value configuration file");
    for (const auto& key : config_keys()) {
      std::string flag(key.name);
      std::replace(flag.begin(), flag.end(), '_', '-');
      const std::string name(key.name);
      options.emplace_back(name, app->add_option(
          "--" + flag, raw[name],
          fmt::format("{} (default {})", key.description, key.default_value)));
    }
  }

  RunConfig resolve() const {
    RunConfig cfg;
    if (!config_path.empty()) cfg.load_file(config_path);
    for (const auto& [name, opt] : options) {
      if (opt->count() > 0) cfg.set(name, raw.at(name));
    }
    return cfg;
  }
};

void write_text(const std::optional<fs::path>& path, const std::string& text) {
  if (!path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path->string());
  out << text;
  if (!out) throw IoError("write failed: " + path->string());
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("missing file: " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::optional<fs::path> optional_path(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return fs::path(s);
}

std::vector<const ManifestRow*> sorted_rows(const EvaluationManifest& manifest) {
  std::vector<const ManifestRow*> rows;
  for (const auto& r : manifest.rows) rows.push_back(&r);
  std::sort(rows.begin(), rows.end(), [](const ManifestRow* a, const ManifestRow* b) {
    return a->utterance_id < b->utterance_id;
  });
  return rows;
}

// Runs fn(i) for i in [0, n) on up to `jobs` threads. The first exception in
// index order is rethrown.
template <typename Fn>
void parallel_for(std::size_t n, std::size_t jobs, Fn fn) {
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(n, 1));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// Frame embeddings for one utterance from the configured source.
FrameMatrix normalized(FrameMatrix m, const RunConfig& cfg) {
  if (cfg.get("embedding_norm") == "cmvn") normalize_frames(m);
  return m;
}

FrameMatrix embed(const ManifestRow& row, const RunConfig& cfg, const AudioClip* clip) {
  if (cfg.embedding() == EmbeddingSource::kFrameMatrix) {
    if (!row.frame_matrix_path) {
      throw ValidationError("no frame_matrix_path for " + row.utterance_id);
    }
    return normalized(read_frame_matrix(*row.frame_matrix_path), cfg);
  }
  if (clip != nullptr) return normalized(compute_mfcc(*clip, cfg.mfcc_options()), cfg);
  return normalized(compute_mfcc(load_audio(row.wav_path), cfg.mfcc_options()), cfg);
}

std::string source_tag(const RunConfig& cfg) {
  if (cfg.embedding() == EmbeddingSource::kFrameMatrix) return "frame-matrix";
  return "mfcc" + cfg.get("mfcc_coeffs");
}

struct NamedMatrix {
  std::string id;
  FrameMatrix matrix;
};

// Embeddings from either a manifest or explicit FMTX files (id = file stem).
std::vector<NamedMatrix> load_embeddings(const std::string& manifest_path,
                                         const std::vector<std::string>& fmtx_paths,
                                         const RunConfig& cfg, std::size_t jobs) {
  std::vector<NamedMatrix> out;
  if (!fmtx_paths.empty()) {
    for (const auto& p : fmtx_paths) {
      out.push_back({fs::path(p).stem().string(), normalized(read_frame_matrix(p), cfg)});
    }
    std::sort(out.begin(), out.end(),
              [](const NamedMatrix& a, const NamedMatrix& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < out.size(); ++i) {
      if (out[i].id == out[i - 1].id) throw ValidationError("duplicate utterance_id " + out[i].id);
    }
    return out;
  }
  if (manifest_path.empty()) throw ValidationError("one of --manifest or --fmtx is required");
  const auto manifest = load_manifest(manifest_path);
  const auto rows = sorted_rows(manifest);
  out.resize(rows.size());
  parallel_for(rows.size(), jobs, [&](std::size_t i) {
    out[i] = {rows[i]->utterance_id, embed(*rows[i], cfg, nullptr)};
  });
  return out;
}

std::string hash_comment(const RunConfig& cfg) { return "config_hash=" + cfg.hash_hex(); }

std::string units_line(const UnitSequence& seq) {
  std::string line = seq.utterance_id;
  for (auto u : seq.units) line += fmt::format(" {}", u);
  return line + "\n";
}

std::vector<UnitSequence> read_units_file(const fs::path& path) {
  std::vector<UnitSequence> out;
  std::istringstream in(read_text(path));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    UnitSequence seq;
    seq.utterance_id = tokens[0];
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      std::uint32_t u = 0;
      const auto& t = tokens[i];
      const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), u);
      if (ec != std::errc() || ptr != t.data() + t.size()) {
        throw ValidationError(fmt::format("{}:{}: bad unit '{}'", path.string(), line_no, t));
      }
      seq.units.push_back(u);
    }
    out.push_back(std::move(seq));
  }
  return out;
}

// ---- features extract

struct FeaturesArgs {
  ConfigFlags config;
  std::string manifest, out, codebook, lm, pitch_dir;
  std::size_t jobs = 1;
};

int features_extract(const FeaturesArgs& a) {
  const RunConfig cfg = a.config.resolve();
  const FeatureOptions options = cfg.feature_options();
  const auto manifest = load_manifest(a.manifest);
  const auto rows = sorted_rows(manifest);

  std::optional<Codebook> cb;
  std::optional<NGramUnitModel> lm;
  if (a.codebook.empty() != a.lm.empty()) {
    throw ValidationError("--codebook and --lm must be given together");
  }
  if (!a.codebook.empty()) {
    cb = read_codebook(a.codebook);
    lm = read_unit_lm(a.lm);
    if (cb->k != lm->vocabulary_size()) {
      throw ValidationError(fmt::format("codebook K={} does not match LM K={}", cb->k,
                                        lm->vocabulary_size()));
    }
  }
  if (!a.pitch_dir.empty()) fs::create_directories(a.pitch_dir);

  FeatureTable table;
  for (Feature f : kAllFeatures) table.columns.emplace_back(feature_key(f));
  std::vector<std::vector<std::optional<double>>> values(rows.size());
  parallel_for(rows.size(), a.jobs, [&](std::size_t i) {
    const ManifestRow& row = *rows[i];
    values[i].assign(kFeatureCount, std::nullopt);
    AudioClip clip;
    try {
      clip = load_audio(row.wav_path);
    } catch (const ValidationError& e) {
      spdlog::warn("{}: {}", row.utterance_id, e.what());
      return;
    }
    const FeatureBundle bundle = compute_features(clip, options);
    for (std::size_t f = 0; f < kFeatureCount; ++f) {
      values[i][f] = bundle.values[f];
      if (!bundle.errors[f].empty()) {
        spdlog::info("{}: {} missing: {}", row.utterance_id, feature_key(kAllFeatures[f]),
                     bundle.errors[f]);
      }
    }
    if (!a.pitch_dir.empty()) {
      write_pitch_csv(bundle.track, fs::path(a.pitch_dir) / (row.utterance_id + ".pitch.csv"));
    }
    if (cb) {
      try {
        const auto units = encode_units(embed(row, cfg, &clip), *cb, cfg.get_bool("dedup"));
        values[i][static_cast<std::size_t>(Feature::kSpeechLmPpl)] = speechlm_score(units, *lm);
      } catch (const InsufficientDataError& e) {
        spdlog::info("{}: speechlm_ppl missing: {}", row.utterance_id, e.what());
      }
    }
  });
  for (std::size_t i = 0; i < rows.size(); ++i) {
    table.rows[rows[i]->utterance_id] = std::move(values[i]);
  }
  write_text(optional_path(a.out),
             render_feature_table(table, {hash_comment(cfg), "dedup=" + cfg.get("dedup")}));
  return kExitOk;
}

// ---- units

struct UnitsArgs {
  ConfigFlags config;
  std::string manifest, out, codebook;
  std::vector<std::string> fmtx;
  std::size_t jobs = 1;
};

int units_train_codebook(const UnitsArgs& a) {
  RunConfig cfg = a.config.resolve();
  if (!a.fmtx.empty()) cfg.set("embedding", "frame-matrix");
  const auto named = load_embeddings(a.manifest, a.fmtx, cfg, a.jobs);
  std::vector<FrameMatrix> frames;
  for (const auto& n : named) frames.push_back(n.matrix);
  auto result = train_codebook(frames, cfg.kmeans_options());
  result.codebook.source_tag = source_tag(cfg);
  result.codebook.config_hash = cfg.hash();
  spdlog::info("k-means: {} iterations, final inertia {}", result.iterations,
               result.inertia_history.empty() ? 0.0 : result.inertia_history.back());
  write_codebook(result.codebook, a.out);
  return kExitOk;
}

std::vector<UnitSequence> encode_all(const UnitsArgs& a, RunConfig& cfg) {
  if (!a.fmtx.empty()) cfg.set("embedding", "frame-matrix");
  const Codebook cb = read_codebook(a.codebook);
  const auto named = load_embeddings(a.manifest, a.fmtx, cfg, a.jobs);
  std::vector<UnitSequence> seqs;
  for (const auto& n : named) {
    auto seq = encode_units(n.matrix, cb, cfg.get_bool("dedup"));
    seq.utterance_id = n.id;
    seqs.push_back(std::move(seq));
  }
  return seqs;
}

int units_encode(const UnitsArgs& a) {
  RunConfig cfg = a.config.resolve();
  const auto seqs = encode_all(a, cfg);
  std::string text = "# " + hash_comment(cfg) + "\n";
  for (const auto& s : seqs) text += units_line(s);
  write_text(optional_path(a.out), text);
  return kExitOk;
}

// ---- lm

struct LmArgs {
  ConfigFlags config;
  std::vector<std::string> units;
  std::string codebook, lm, out, export_json, manifest;
  std::vector<std::string> fmtx;
  std::size_t jobs = 1;
};

int lm_train(const LmArgs& a) {
  const RunConfig cfg = a.config.resolve();
  std::size_t k = static_cast<std::size_t>(cfg.get_int("k"));
  if (!a.codebook.empty()) k = read_codebook(a.codebook).k;
  std::vector<UnitSequence> seqs;
  for (const auto& p : a.units) {
    auto more = read_units_file(p);
    seqs.insert(seqs.end(), more.begin(), more.end());
  }
  auto lm = train_unit_lm(seqs, k, static_cast<std::size_t>(cfg.get_int("order")),
                          cfg.get_double("alpha"));
  lm.set_config_hash(cfg.hash());
  write_unit_lm(lm, a.out);
  if (!a.export_json.empty()) write_text(fs::path(a.export_json), unit_lm_to_json(lm));
  return kExitOk;
}

int lm_score(const LmArgs& a) {
  RunConfig cfg = a.config.resolve();
  const NGramUnitModel lm = read_unit_lm(a.lm);
  std::vector<UnitSequence> seqs;
  if (!a.units.empty()) {
    for (const auto& p : a.units) {
      auto more = read_units_file(p);
      seqs.insert(seqs.end(), more.begin(), more.end());
    }
  } else {
    if (a.codebook.empty()) throw ValidationError("--codebook is required without --units");
    const Codebook cb = read_codebook(a.codebook);
    if (cb.k != lm.vocabulary_size()) {
      throw ValidationError(fmt::format("codebook K={} does not match LM K={}", cb.k,
                                        lm.vocabulary_size()));
    }
    UnitsArgs ua;
    ua.manifest = a.manifest;
    ua.fmtx = a.fmtx;
    ua.codebook = a.codebook;
    ua.jobs = a.jobs;
    seqs = encode_all(ua, cfg);
  }
  FeatureTable table;
  table.columns = {std::string(feature_key(Feature::kSpeechLmPpl))};
  for (const auto& s : seqs) {
    if (table.rows.count(s.utterance_id)) {
      throw ValidationError("duplicate utterance_id " + s.utterance_id);
    }
    std::optional<double> ppl;
    try {
      ppl = speechlm_score(s, lm);
    } catch (const InsufficientDataError& e) {
      spdlog::warn("{}: {}", s.utterance_id, e.what());
    }
    table.rows[s.utterance_id] = {ppl};
  }
  write_text(optional_path(a.out),
             render_feature_table(table, {hash_comment(cfg), "dedup=" + cfg.get("dedup"),
                                          fmt::format("lm_config_hash={}",
                                                      hash_to_hex(lm.config_hash()))}));
  return kExitOk;
}

// ---- eval

struct EvalArgs {
  ConfigFlags config;
  std::string manifest, out, format = "markdown", target = "perceptual", ratings, ref, hyp;
  std::vector<std::string> features;
};

// "# key=value" lines at the top of a CSV written by this tool.
std::map<std::string, std::string> comment_metadata(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) != 0) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    out[line.substr(2, eq - 2)] = line.substr(eq + 1);
  }
  return out;
}

int eval_correlate(const EvalArgs& a) {
  const RunConfig cfg = a.config.resolve();
  const auto manifest = load_manifest(a.manifest);
  if (a.features.empty()) throw ValidationError("at least one --features file is required");
  FeatureTable table;
  std::vector<std::string> dedup_flags;
  for (const auto& p : a.features) {
    const std::string text = read_text(p);
    table.merge(parse_feature_table(text));
    const auto meta = comment_metadata(text);
    if (const auto it = meta.find("dedup"); it != meta.end()) dedup_flags.push_back(it->second);
  }

  bool any_per = false;
  FeatureTable per_table;
  per_table.columns = {std::string(kPerColumn)};
  for (const auto* row : sorted_rows(manifest)) {
    std::optional<double> v;
    if (row->ref_phonemes_path && row->hyp_phonemes_path) {
      try {
        v = phoneme_error_rate(read_phoneme_file(*row->ref_phonemes_path),
                               read_phoneme_file(*row->hyp_phonemes_path));
        any_per = true;
      } catch (const ValidationError& e) {
        spdlog::warn("{}: per missing: {}", row->utterance_id, e.what());
      }
    }
    per_table.rows[row->utterance_id] = {v};
  }
  if (any_per && !table.column_index(kPerColumn)) table.merge(per_table);

  auto report = correlate_features(table, manifest, cfg.aggregation_key(), parse_target(a.target));
  if (report.rows.empty()) {
    throw ValidationError(report.exclusions.empty() ? "empty report"
                                                    : "empty report: " + report.exclusions.front());
  }
  std::sort(dedup_flags.begin(), dedup_flags.end());
  dedup_flags.erase(std::unique(dedup_flags.begin(), dedup_flags.end()), dedup_flags.end());
  report.metadata.emplace_back(
      "dedup", dedup_flags.empty() ? cfg.get("dedup") : fmt::format("{}", fmt::join(dedup_flags, "/")));
  report.metadata.emplace_back("config_hash", cfg.hash_hex());
  write_text(optional_path(a.out), render_report(report, parse_report_format(a.format)));
  return kExitOk;
}

int eval_icc(const EvalArgs& a) {
  const RunConfig cfg = a.config.resolve();
  const auto records = read_csv_records(a.ratings);
  if (records.size() < 2) throw ValidationError("ratings need a header and at least one subject");
  const std::size_t n_raters = records[0].size() - 1;
  std::vector<std::vector<double>> matrix;
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].size() != n_raters + 1) throw ValidationError("incomplete matrix");
    std::vector<double> row;
    for (std::size_t j = 1; j < records[i].size(); ++j) {
      if (records[i][j].empty()) throw ValidationError("incomplete matrix");
      row.push_back(parse_double(records[i][j], "rating for " + records[i][0]));
    }
    matrix.push_back(std::move(row));
  }
  const double icc = icc_2k(matrix);
  write_text(optional_path(a.out),
             fmt::format("# {}\nicc_2k,n_subjects,n_raters\n{},{},{}\n", hash_comment(cfg),
                         format_double(icc), matrix.size(), n_raters));
  return kExitOk;
}

int eval_per(const EvalArgs& a) {
  const RunConfig cfg = a.config.resolve();
  std::string text = "# " + hash_comment(cfg) + "\n";
  if (!a.manifest.empty()) {
    const auto manifest = load_manifest(a.manifest);
    FeatureTable table;
    table.columns = {std::string(kPerColumn)};
    for (const auto* row : sorted_rows(manifest)) {
      std::optional<double> v;
      if (row->ref_phonemes_path && row->hyp_phonemes_path) {
        v = phoneme_error_rate(read_phoneme_file(*row->ref_phonemes_path),
                               read_phoneme_file(*row->hyp_phonemes_path));
      }
      table.rows[row->utterance_id] = {v};
    }
    write_text(optional_path(a.out), render_feature_table(table, {hash_comment(cfg)}));
    return kExitOk;
  }
  if (a.ref.empty() || a.hyp.empty()) {
    throw ValidationError("give --ref and --hyp, or --manifest");
  }
  const double per = phoneme_error_rate(read_phoneme_file(a.ref), read_phoneme_file(a.hyp));
  text += "per\n" + format_double(per) + "\n";
  write_text(optional_path(a.out), text);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  if (!spdlog::get("sevscore")) init_logging();

  CLI::App app{"sevscore: reference-free speech severity features and evaluation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "0.1.0");

  FeaturesArgs fa;
  auto* features = app.add_subcommand("features", "acoustic feature extraction");
  features->require_subcommand(1);
  auto* extract = features->add_subcommand("extract", "per-utterance feature CSV");
  extract->add_option("--manifest", fa.manifest, "evaluation manifest CSV")->required();
  extract->add_option("--out", fa.out, "output CSV (default stdout)");
  extract->add_option("--jobs", fa.jobs, "worker threads")->check(CLI::PositiveNumber);
  extract->add_option("--codebook", fa.codebook, "UCBK codebook for speechlm_ppl");
  extract->add_option("--lm", fa.lm, "UNLM model for speechlm_ppl");
  extract->add_option("--export-pitch-csv", fa.pitch_dir, "directory for per-utterance pitch CSVs");
  fa.config.attach(extract);

  UnitsArgs ua;
  auto* units = app.add_subcommand("units", "acoustic unit discovery");
  units->require_subcommand(1);
  auto* train_cb = units->add_subcommand("train-codebook", "k-means codebook over frame embeddings");
  auto* encode = units->add_subcommand("encode", "quantize frame embeddings to unit sequences");
  for (auto* sub : {train_cb, encode}) {
    sub->add_option("--manifest", ua.manifest, "evaluation manifest CSV");
    sub->add_option("--fmtx", ua.fmtx, "FMTX frame-matrix files (utterance id = file stem)");
    sub->add_option("--out", ua.out, "output path");
    sub->add_option("--jobs", ua.jobs, "worker threads")->check(CLI::PositiveNumber);
    ua.config.attach(sub);
  }
  train_cb->get_option("--out")->required();
  encode->add_option("--codebook", ua.codebook, "UCBK codebook")->required();

  LmArgs la;
  auto* lm = app.add_subcommand("lm", "unit language model");
  lm->require_subcommand(1);
  auto* lm_tr = lm->add_subcommand("train", "train an n-gram unit LM");
  lm_tr->add_option("--units", la.units, "unit sequence files")->required();
  lm_tr->add_option("--codebook", la.codebook, "take K from this codebook");
  lm_tr->add_option("--out", la.out, "output UNLM file")->required();
  lm_tr->add_option("--export-json", la.export_json, "diagnostic JSON dump of the counts");
  la.config.attach(lm_tr);
  LmArgs ls;
  auto* lm_sc = lm->add_subcommand("score", "per-utterance SpeechLMScore perplexity");
  lm_sc->add_option("--lm", ls.lm, "UNLM model")->required();
  lm_sc->add_option("--units", ls.units, "unit sequence files");
  lm_sc->add_option("--codebook", ls.codebook, "UCBK codebook");
  lm_sc->add_option("--manifest", ls.manifest, "evaluation manifest CSV");
  lm_sc->add_option("--fmtx", ls.fmtx, "FMTX frame-matrix files (utterance id = file stem)");
  lm_sc->add_option("--out", ls.out, "output CSV (default stdout)");
  lm_sc->add_option("--jobs", ls.jobs, "worker threads")->check(CLI::PositiveNumber);
  ls.config.attach(lm_sc);

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "evaluation harness");
  eval->require_subcommand(1);
  auto* corr = eval->add_subcommand("correlate", "Pearson correlation report");
  corr->add_option("--manifest", ea.manifest, "evaluation manifest CSV")->required();
  corr->add_option("--features", ea.features, "feature CSV files")->required();
  corr->add_option("--out", ea.out, "report path (default stdout)");
  corr->add_option("--format", ea.format, "csv or markdown")->check(CLI::IsMember({"csv", "markdown", "md"}));
  corr->add_option("--target", ea.target, "perceptual or noise")->check(CLI::IsMember({"perceptual", "noise"}));
  auto* icc = eval->add_subcommand("icc", "ICC(2,k) rater reliability");
  icc->add_option("--ratings", ea.ratings, "CSV: subject, then one column per rater")->required();
  icc->add_option("--out", ea.out, "output path (default stdout)");
  auto* per = eval->add_subcommand("per", "phoneme error rate");
  per->add_option("--ref", ea.ref, "reference phoneme file");
  per->add_option("--hyp", ea.hyp, "hypothesis phoneme file");
  per->add_option("--manifest", ea.manifest, "manifest with phoneme paths");
  per->add_option("--out", ea.out, "output path (default stdout)");
  for (auto* sub : {corr, icc, per}) ea.config.attach(sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (extract->parsed()) return features_extract(fa);
    if (train_cb->parsed()) return units_train_codebook(ua);
    if (encode->parsed()) return units_encode(ua);
    if (lm_tr->parsed()) return lm_train(la);
    if (lm_sc->parsed()) return lm_score(ls);
    if (corr->parsed()) return eval_correlate(ea);
    if (icc->parsed()) return eval_icc(ea);
    if (per->parsed()) return eval_per(ea);
  } catch (const IoError& e) {
    spdlog::error("{}", e.what());
    return kExitIo;
  } catch (const ValidationError& e) {
    spdlog::error("{}", e.what());
    return kExitUsage;
  } catch (const fs::filesystem_error& e) {
    spdlog::error("{}", e.what());
    return kExitIo;
  } catch (const Error& e) {
    spdlog::error("{}", e.what());
    return kExitUsage;
  }
  std::cerr << app.help();
  return kExitUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args);
}

}  // namespace sevscore::cli
