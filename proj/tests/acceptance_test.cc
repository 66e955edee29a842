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

// Acceptance suite. Usage: sevscore_acceptance <path-to-sevscore> <work-dir>
//
// Runs every acceptance criterion, prints one PASS/FAIL line per criterion
// and exits non-zero if any criterion fails or overruns its time budget.

#include <fmt/core.h>
#include <sys/wait.h>

#include <algorithm>
#include <boost/math/distributions/students_t.hpp>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sevscore/audio.h"
#include "sevscore/codebook.h"
#include "sevscore/csv.h"
#include "sevscore/features.h"
#include "sevscore/per.h"
#include "sevscore/pitch.h"
#include "sevscore/stats.h"
#include "sevscore/unit_lm.h"
#include "synth.h"

namespace sevscore {
namespace {

namespace fs = std::filesystem;

// Pinned tolerances.
constexpr double kFormulaTol = 1e-9;
constexpr double kPearsonRTol = 1e-9;
constexpr double kPearsonPTol = 1e-6;
constexpr double kHnrAtPoint9 = 9.5424;
constexpr double kHnrTol = 5e-5;
constexpr double kPerturbationRelTol = 0.25;
constexpr double kWadaTol = 3.0;  // dB at a true SNR of 10 dB
constexpr double kProbSumTol = 1e-9;
constexpr int kShuffleTrials = 20;
constexpr int kShuffleWinsRequired = 19;
constexpr std::size_t kLmK = 100;
constexpr std::size_t kKMeansFrames = 50000;
constexpr double kPerturbationMinAbsR = 0.7;
constexpr double kPplMinAbsR = 0.5;

// Time budgets in seconds.
constexpr double kFormulaBudget = 5.0;
constexpr double kMonotonicityBudget = 30.0;
constexpr double kWadaBudget = 30.0;
constexpr double kUnitLmBudget = 60.0;
constexpr double kEndToEndBudget = 300.0;
constexpr double kNoiseBudget = 120.0;
constexpr double kDeterminismBudget = 120.0;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("violated: " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

std::string cli_path;
fs::path work_dir;

std::string quote(const std::string& s) { return "'" + s + "'"; }

// Runs the CLI with stderr appended to work_dir/cli.log; returns its exit status.
int run_cli(const std::vector<std::string>& args) {
  std::string cmd = quote(cli_path);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>>" + quote((work_dir / "cli.log").string());
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void run_cli_or_throw(const std::vector<std::string>& args) {
  const int code = run_cli(args);
  if (code != 0) {
    std::string joined;
    for (const auto& a : args) joined += " " + a;
    throw std::runtime_error(fmt::format("sevscore{} exited {}", joined, code));
  }
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

struct ReportRow {
  double r = 0.0;
  double p = 1.0;
  std::size_t n = 0;
};

std::map<std::string, ReportRow> parse_report_csv(const fs::path& path) {
  std::map<std::string, ReportRow> out;
  std::istringstream in(slurp(path));
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    if (f.size() < 4) continue;
    out[f[0]] = {std::stod(f[1]), std::stod(f[2]), std::stoul(f[3])};
  }
  return out;
}

std::string manifest_header() {
  return "utterance_id,speaker_id,stage_id,wav_path,frame_matrix_path,ref_phonemes_path,"
         "hyp_phonemes_path,perceptual_score,noise_score\n";
}

// ---------------------------------------------------------------------------

Outcome formula_oracles() {
  Outcome o;
  const double j = jitter(std::vector<double>{0.010, 0.011, 0.010, 0.011});
  o.check(std::abs(j - (0.001 / 0.010 + 0.001 / 0.011 + 0.001 / 0.010) / 3.0) <= kFormulaTol,
          "jitter hand case");
  o.check(jitter(std::vector<double>{0.010, 0.010, 0.010}) == 0.0, "jitter of constant periods");
  const double s = shimmer(std::vector<double>{1.0, 1.2, 1.0});
  o.check(std::abs(s - (0.2 / 1.0 + 0.2 / 1.2) / 2.0) <= kFormulaTol, "shimmer hand case");
  const double sf = sigma_f0(std::vector<double>{100, 110, 120});
  o.check(std::abs(sf - std::sqrt(200.0 / 3.0)) <= kFormulaTol, "sigma_f0 hand case");
  const double h = hnr_from_correlation(0.9);
  o.check(std::abs(h - kHnrAtPoint9) <= kHnrTol, "hnr at r=0.9");
  o.check(std::abs(h - 10.0 * std::log10(0.9 / 0.1)) <= kFormulaTol, "hnr closed form");

  std::mt19937_64 rng(101);
  std::normal_distribution<double> g(0.0, 1.0);
  double worst_r = 0.0, worst_p = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(3, 60)(rng);
    const double rho = std::uniform_real_distribution<double>(-0.95, 0.95)(rng);
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = g(rng);
      y[i] = rho * x[i] + std::sqrt(1 - rho * rho) * g(rng);
    }
    long double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
      mx += x[i];
      my += y[i];
    }
    mx /= n;
    my /= n;
    long double sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
      sxx += (x[i] - mx) * (x[i] - mx);
      syy += (y[i] - my) * (y[i] - my);
      sxy += (x[i] - mx) * (y[i] - my);
    }
    const double r = static_cast<double>(sxy / std::sqrt(sxx * syy));
    const double df = static_cast<double>(n - 2);
    const double t = r * std::sqrt(df / (1 - r * r));
    const double p =
        2.0 * boost::math::cdf(boost::math::complement(boost::math::students_t(df), std::abs(t)));
    const PearsonResult got = pearson(x, y);
    worst_r = std::max(worst_r, std::abs(got.r - r));
    worst_p = std::max(worst_p, std::abs(got.p - p));
  }
  o.check(worst_r <= kPearsonRTol, fmt::format("pearson r (worst {:.2e})", worst_r));
  o.check(worst_p <= kPearsonPTol, fmt::format("pearson p (worst {:.2e})", worst_p));

  double worst_icc = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 15)(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(2, 5)(rng);
    std::vector<std::vector<double>> m(n, std::vector<double>(k));
    for (auto& row : m) {
      const double subject = 2.0 * g(rng);
      for (auto& v : row) v = subject + g(rng);
    }
    long double grand = 0;
    for (const auto& row : m) {
      for (double v : row) grand += v;
    }
    grand /= n * k;
    long double ssr = 0, ssc = 0, sst = 0;
    for (std::size_t i = 0; i < n; ++i) {
      long double rm = 0;
      for (double v : m[i]) rm += v;
      ssr += k * (rm / k - grand) * (rm / k - grand);
    }
    for (std::size_t c = 0; c < k; ++c) {
      long double cm = 0;
      for (std::size_t i = 0; i < n; ++i) cm += m[i][c];
      ssc += n * (cm / n - grand) * (cm / n - grand);
    }
    for (const auto& row : m) {
      for (double v : row) sst += (v - grand) * (v - grand);
    }
    const long double msr = ssr / (n - 1), msc = ssc / (k - 1);
    const long double mse = (sst - ssr - ssc) / ((n - 1) * (k - 1));
    const double oracle = static_cast<double>((msr - mse) / (msr + (msc - mse) / n));
    worst_icc = std::max(worst_icc, std::abs(icc_2k(m) - oracle));
  }
  o.check(worst_icc <= kFormulaTol, fmt::format("icc (worst {:.2e})", worst_icc));

  // Levenshtein over all pairs of short strings from a 3-symbol alphabet.
  std::function<std::size_t(const std::vector<std::string>&, const std::vector<std::string>&,
                            std::size_t, std::size_t)>
      brute = [&](const auto& a, const auto& b, std::size_t i, std::size_t k) -> std::size_t {
    if (i == a.size()) return b.size() - k;
    if (k == b.size()) return a.size() - i;
    return std::min({brute(a, b, i + 1, k) + 1, brute(a, b, i, k + 1) + 1,
                     brute(a, b, i + 1, k + 1) + (a[i] == b[k] ? 0 : 1)});
  };
  std::vector<std::vector<std::string>> words = {{}};
  for (std::size_t len = 1; len <= 4; ++len) {
    const std::size_t before = words.size();
    for (std::size_t w = 0; w < before; ++w) {
      if (words[w].size() != len - 1) continue;
      for (const char* sym : {"a", "b", "c"}) {
        auto next = words[w];
        next.push_back(sym);
        words.push_back(next);
      }
    }
  }
  std::size_t per_mismatches = 0;
  for (const auto& ref : words) {
    if (ref.empty()) continue;
    for (const auto& hyp : words) {
      const double want = static_cast<double>(brute(ref, hyp, 0, 0)) / ref.size();
      if (std::abs(phoneme_error_rate(ref, hyp) - want) > kFormulaTol) ++per_mismatches;
    }
  }
  o.check(per_mismatches == 0, fmt::format("per brute force ({} mismatches)", per_mismatches));
  o.note(fmt::format("pearson |dr|<={:.1e} |dp|<={:.1e}, icc |d|<={:.1e}, {} per pairs", worst_r,
                     worst_p, worst_icc, (words.size() - 1) * words.size()));
  return o;
}

Outcome degradation_monotonicity() {
  Outcome o;
  double prev_j = -1.0, prev_s = -1.0;
  std::string jitters, shimmers;
  for (double eps : {0.005, 0.01, 0.02, 0.04}) {
    const auto periods = testing::alternating(0.010, eps, 2);
    const std::vector<double> unit = {0.8};
    const AudioClip pj = testing::clip_of(testing::pulse_train(periods, unit, 1.0));
    const double j = jitter(extract_cycles(pj, estimate_pitch_track(pj)));
    o.check(j > prev_j, fmt::format("jitter increasing at eps={}", eps));
    o.check(std::abs(j - eps) <= kPerturbationRelTol * eps, fmt::format("jitter near eps={}", eps));
    prev_j = j;

    const std::vector<double> steady = {0.010};
    const auto amps = testing::alternating(0.8, eps, 2);
    const AudioClip ps = testing::clip_of(testing::pulse_train(steady, amps, 1.0));
    const double s = shimmer(extract_cycles(ps, estimate_pitch_track(ps)));
    o.check(s > prev_s, fmt::format("shimmer increasing at eps={}", eps));
    o.check(std::abs(s - eps) <= kPerturbationRelTol * eps, fmt::format("shimmer near eps={}", eps));
    prev_s = s;
    jitters += fmt::format(" {:.5f}", j);
    shimmers += fmt::format(" {:.5f}", s);
  }
  o.note("jitter" + jitters + "; shimmer" + shimmers);
  return o;
}

Outcome wada_recovery() {
  Outcome o;
  const auto source = testing::gamma_source(64000, 0.4, 11);
  const auto noise = testing::white_noise(64000, 1.0, 12);
  double prev = -std::numeric_limits<double>::infinity();
  std::string estimates;
  for (double snr : {0.0, 5.0, 10.0, 15.0, 20.0}) {
    const auto mix = testing::normalize_peak(testing::mix_at_snr(source, noise, snr), 0.9);
    const double est = wada_snr(testing::clip_of(mix));
    o.check(est > prev, fmt::format("monotone at {} dB", snr));
    if (snr == 10.0) o.check(std::abs(est - 10.0) <= kWadaTol, "within 3 dB at 10 dB");
    prev = est;
    estimates += fmt::format(" {}:{:.2f}", snr, est);
  }
  o.note("estimates" + estimates);
  return o;
}

std::vector<std::uint32_t> markov_units(std::size_t k, std::size_t len, std::mt19937_64& rng) {
  std::vector<std::uint32_t> out;
  std::uniform_int_distribution<std::uint32_t> any(0, static_cast<std::uint32_t>(k - 1));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uint32_t cur = any(rng);
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back(cur);
    const double r = u(rng);
    if (r < 0.7) {
      cur = static_cast<std::uint32_t>((cur * 7 + 3) % k);
    } else if (r < 0.9) {
      cur = static_cast<std::uint32_t>((cur * 11 + 5) % k);
    } else {
      cur = any(rng);
    }
  }
  return out;
}

Outcome unit_lm_suite() {
  Outcome o;
  std::mt19937_64 rng(202);

  const NGramUnitModel untrained(kLmK, 3, 0.1);
  const double ppl0 = speechlm_score(markov_units(kLmK, 200, rng), untrained);
  o.check(std::abs(ppl0 - static_cast<double>(kLmK + 1)) <= 1e-9 * kLmK, "untrained ppl = K+1");

  std::vector<UnitSequence> train;
  for (int i = 0; i < 200; ++i) train.push_back({markov_units(kLmK, 250, rng), "", false});
  const NGramUnitModel lm = train_unit_lm(train, kLmK, 3, 0.1);
  double worst_sum = 0.0;
  auto check_sum = [&](std::span<const std::uint32_t> ctx) {
    double total = 0.0;
    for (std::uint32_t s = 0; s <= kLmK; ++s) total += lm.prob(ctx, s);
    worst_sum = std::max(worst_sum, std::abs(total - 1.0));
  };
  for (const auto& [ctx, counts] : lm.counts()) check_sum(ctx);
  check_sum(std::vector<std::uint32_t>{});
  check_sum(std::vector<std::uint32_t>{lm.bos(), 99});
  o.check(worst_sum <= kProbSumTol, fmt::format("probability sums (worst {:.1e})", worst_sum));

  int wins = 0;
  for (int trial = 0; trial < kShuffleTrials; ++trial) {
    const auto test = markov_units(kLmK, 200, rng);
    const double original = speechlm_score(test, lm);
    double shuffled = 0.0;
    for (int s = 0; s < 20; ++s) {
      auto t = test;
      std::shuffle(t.begin(), t.end(), rng);
      shuffled += speechlm_score(t, lm) / 20.0;
    }
    wins += original < shuffled;
  }
  o.check(wins >= kShuffleWinsRequired, fmt::format("shuffle oracle {}/{}", wins, kShuffleTrials));

  // k-means over 50k 13-dimensional frames drawn around 100 centres.
  FrameMatrix m;
  m.n_frames = kKMeansFrames;
  m.dim = 13;
  m.hop = 0.01;
  std::normal_distribution<float> g(0.0f, 1.0f);
  std::vector<float> centres(kLmK * m.dim);
  for (auto& c : centres) c = 6.0f * g(rng);
  m.values.resize(m.n_frames * m.dim);
  for (std::size_t i = 0; i < m.n_frames; ++i) {
    const std::size_t c = std::uniform_int_distribution<std::size_t>(0, kLmK - 1)(rng);
    for (std::size_t d = 0; d < m.dim; ++d) m.values[i * m.dim + d] = centres[c * m.dim + d] + g(rng);
  }
  const auto km = train_codebook(std::span(&m, 1), {.k = kLmK, .seed = 3, .max_iters = 100, .tol = 1e-6});
  bool non_increasing = true;
  for (std::size_t i = 1; i < km.inertia_history.size(); ++i) {
    non_increasing &= km.inertia_history[i] <= km.inertia_history[i - 1] * (1 + 1e-12);
  }
  o.check(non_increasing, "k-means inertia non-increasing");

  // 1-D case with a unique optimum found by enumerating all splits.
  FrameMatrix line;
  const std::vector<float> pts = {0.0f, 0.5f, 1.0f, 7.0f, 7.5f, 30.0f, 31.0f};
  line.n_frames = pts.size();
  line.dim = 1;
  line.hop = 0.01;
  line.values = pts;
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> best_c;
  for (std::size_t a = 1; a < pts.size(); ++a) {
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      const std::size_t cuts[] = {0, a, b, pts.size()};
      std::vector<double> c;
      double sse = 0.0;
      for (int s = 0; s < 3; ++s) {
        double mean = 0.0;
        for (std::size_t i = cuts[s]; i < cuts[s + 1]; ++i) mean += pts[i];
        mean /= static_cast<double>(cuts[s + 1] - cuts[s]);
        for (std::size_t i = cuts[s]; i < cuts[s + 1]; ++i) sse += (pts[i] - mean) * (pts[i] - mean);
        c.push_back(mean);
      }
      if (sse < best) {
        best = sse;
        best_c = c;
      }
    }
  }
  bool exact = true;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto r = train_codebook(std::span(&line, 1), {.k = 3, .seed = seed});
    auto c = r.codebook.centroids;
    std::sort(c.begin(), c.end());
    for (int i = 0; i < 3; ++i) exact &= std::abs(c[i] - best_c[i]) <= 1e-6;
  }
  o.check(exact, "1-D k-means oracle");
  o.note(fmt::format("ppl0={:.6f} shuffle {}/{} k-means {} iters over {} frames", ppl0, wins,
                     kShuffleTrials, km.iterations, m.n_frames));
  return o;
}

// Writes clips and a manifest for a synthetic severity continuum.
struct Study {
  fs::path dir;
  fs::path manifest;
};

Study make_continuum(const fs::path& dir, int speakers, int utterances) {
  fs::create_directories(dir);
  std::string manifest = manifest_header();
  for (int s = 0; s < speakers; ++s) {
    const double d = speakers > 1 ? static_cast<double>(s) / (speakers - 1) : 0.0;
    for (int u = 0; u < utterances; ++u) {
      testing::VoiceSpec spec;
      spec.f0 = 100.0 + 12.0 * ((s * 5 + u) % 7);
      spec.period_perturbation = 0.002 + 0.03 * d;
      spec.amplitude_perturbation = 0.02 + 0.2 * d;
      spec.snr_db = 40.0 - 35.0 * d;
      spec.seed = 1000 + static_cast<std::uint64_t>(s * 31 + u);
      const std::string id = fmt::format("s{:02d}u{}", s, u);
      const fs::path wav = dir / (id + ".wav");
      write_wav16(wav, testing::synth_voice(spec), testing::kRate);
      manifest += fmt::format("{},spk{:02d},stage{},{},,,,{},\n", id, s, u, wav.string(),
                              format_double(-d));
    }
  }
  const fs::path path = dir / "manifest.csv";
  std::ofstream(path) << manifest;
  return {dir, path};
}

fs::path make_clean_training(const fs::path& dir, int clips) {
  fs::create_directories(dir);
  std::string manifest = manifest_header();
  for (int i = 0; i < clips; ++i) {
    testing::VoiceSpec spec;
    spec.f0 = 100.0 + 12.0 * (i % 7);
    spec.period_perturbation = 0.002;
    spec.amplitude_perturbation = 0.02;
    spec.snr_db = 40.0;
    spec.seed = 5000 + static_cast<std::uint64_t>(i);
    const std::string id = fmt::format("clean{:02d}", i);
    const fs::path wav = dir / (id + ".wav");
    write_wav16(wav, testing::synth_voice(spec), testing::kRate);
    manifest += fmt::format("{},clean{:02d},stage0,{},,,,0,\n", id, i, wav.string());
  }
  const fs::path path = dir / "manifest.csv";
  std::ofstream(path) << manifest;
  return path;
}

struct Pipeline {
  fs::path codebook, units, lm, features, ppl;
};

// Trains codebook and LM on `train_manifest`, then extracts features and
// scores `eval_manifest`. Every step goes through the CLI.
Pipeline run_pipeline(const fs::path& dir, const fs::path& train_manifest,
                      const fs::path& eval_manifest, const std::string& k, const std::string& seed) {
  Pipeline p{dir / "codebook.ucbk", dir / "train.units", dir / "lm.unlm", dir / "features.csv",
             dir / "ppl.csv"};
  run_cli_or_throw({"units", "train-codebook", "--manifest", train_manifest.string(), "--k", k,
                    "--seed", seed, "--jobs", "4", "--out", p.codebook.string()});
  run_cli_or_throw({"units", "encode", "--manifest", train_manifest.string(), "--codebook",
                    p.codebook.string(), "--seed", seed, "--jobs", "4", "--out", p.units.string()});
  run_cli_or_throw({"lm", "train", "--units", p.units.string(), "--codebook", p.codebook.string(),
                    "--seed", seed, "--out", p.lm.string()});
  run_cli_or_throw({"features", "extract", "--manifest", eval_manifest.string(), "--seed", seed,
                    "--jobs", "4", "--out", p.features.string()});
  run_cli_or_throw({"lm", "score", "--lm", p.lm.string(), "--codebook", p.codebook.string(),
                    "--manifest", eval_manifest.string(), "--seed", seed, "--jobs", "4", "--out",
                    p.ppl.string()});
  return p;
}

Outcome end_to_end() {
  Outcome o;
  const fs::path dir = work_dir / "end_to_end";
  fs::remove_all(dir);
  const Study study = make_continuum(dir / "eval", 40, 5);
  const fs::path train = make_clean_training(dir / "train", 40);
  const Pipeline p = run_pipeline(dir, train, study.manifest, "50", "0");
  const fs::path csv = dir / "report.csv";
  const fs::path md = dir / "report.md";
  for (const auto& [out, format] : {std::pair{csv, "csv"}, std::pair{md, "markdown"}}) {
    run_cli_or_throw({"eval", "correlate", "--manifest", study.manifest.string(), "--features",
                      p.features.string(), "--features", p.ppl.string(), "--agg-key", "speaker",
                      "--format", format, "--out", out.string()});
  }
  const auto rows = parse_report_csv(csv);
  auto r_of = [&](const std::string& f) {
    const auto it = rows.find(f);
    return it == rows.end() ? std::numeric_limits<double>::quiet_NaN() : it->second.r;
  };
  o.check(std::abs(r_of("jitter")) > kPerturbationMinAbsR, "|r| jitter > 0.7");
  o.check(std::abs(r_of("shimmer")) > kPerturbationMinAbsR, "|r| shimmer > 0.7");
  o.check(std::abs(r_of("speechlm_ppl")) > kPplMinAbsR, "|r| speechlm_ppl > 0.5");
  std::string summary;
  for (const auto& [f, row] : rows) summary += fmt::format(" {}={:.3f}", f, row.r);
  o.note("r against perceptual score:" + summary);
  o.note("report:\n" + slurp(md));
  return o;
}

Outcome noise_study() {
  Outcome o;
  const fs::path dir = work_dir / "noise";
  fs::remove_all(dir);
  fs::create_directories(dir);
  constexpr double kLevels[] = {30.0, 15.0, 5.0};
  std::string manifest = manifest_header();
  std::vector<std::vector<double>> wada(12);
  for (int c = 0; c < 12; ++c) {
    testing::VoiceSpec spec;
    spec.f0 = 95.0 + 15.0 * (c % 8);
    spec.period_perturbation = 0.005;
    spec.amplitude_perturbation = 0.04;
    spec.seed = 7000 + static_cast<std::uint64_t>(c);
    const auto clean = testing::synth_voice(spec);
    const auto noise = testing::white_noise(clean.size(), 1.0, 9000 + static_cast<std::uint64_t>(c));
    for (int level = 0; level < 3; ++level) {
      const auto mix = testing::normalize_peak(testing::mix_at_snr(clean, noise, kLevels[level]), 0.5);
      wada[c].push_back(wada_snr(testing::clip_of(mix)));
      const std::string id = fmt::format("clip{:02d}n{}", c, level);
      const fs::path wav = dir / (id + ".wav");
      write_wav16(wav, mix, testing::kRate);
      manifest += fmt::format("{},clip{:02d}n{},stage0,{},,,,0,{}\n", id, c, level, wav.string(), level);
    }
  }
  const fs::path manifest_path = dir / "manifest.csv";
  std::ofstream(manifest_path) << manifest;
  int monotone = 0;
  for (const auto& w : wada) monotone += w[0] > w[1] && w[1] > w[2];
  o.check(monotone == static_cast<int>(wada.size()),
          fmt::format("WADA strictly decreasing in noise level ({}/{} clips)", monotone, wada.size()));

  const fs::path features = dir / "features.csv";
  run_cli_or_throw({"features", "extract", "--manifest", manifest_path.string(), "--jobs", "4",
                    "--out", features.string()});
  // Re-check monotonicity on the CLI output, which goes through 16-bit WAV files.
  std::map<std::string, double> cli_wada;
  {
    std::istringstream in(slurp(features));
    std::string line, header;
    std::size_t col = 0;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::vector<std::string> f;
      std::stringstream ls(line);
      std::string cell;
      while (std::getline(ls, cell, ',')) f.push_back(cell);
      if (header.empty()) {
        header = line;
        col = std::find(f.begin(), f.end(), "wada_snr") - f.begin();
        continue;
      }
      if (col < f.size() && !f[col].empty()) cli_wada[f[0]] = std::stod(f[col]);
    }
  }
  int cli_monotone = 0;
  for (int c = 0; c < 12; ++c) {
    auto at = [&](int level) {
      const auto it = cli_wada.find(fmt::format("clip{:02d}n{}", c, level));
      return it == cli_wada.end() ? std::numeric_limits<double>::quiet_NaN() : it->second;
    };
    cli_monotone += at(0) > at(1) && at(1) > at(2);
  }
  o.check(cli_monotone == 12, fmt::format("CLI WADA strictly decreasing ({}/12 clips)", cli_monotone));

  const fs::path csv = dir / "report.csv";
  const fs::path md = dir / "report.md";
  for (const auto& [out, format] : {std::pair{csv, "csv"}, std::pair{md, "markdown"}}) {
    run_cli_or_throw({"eval", "correlate", "--manifest", manifest_path.string(), "--features",
                      features.string(), "--target", "noise", "--format", format, "--out",
                      out.string()});
  }
  std::string summary;
  for (const auto& [f, row] : parse_report_csv(csv)) summary += fmt::format(" {}={:.3f}", f, row.r);
  o.note("r against noise score:" + summary);
  o.note("report:\n" + slurp(md));
  return o;
}

Outcome determinism() {
  Outcome o;
  const fs::path dir = work_dir / "determinism";
  fs::remove_all(dir);
  const Study study = make_continuum(dir / "eval", 6, 2);
  const fs::path train = make_clean_training(dir / "train", 6);
  std::vector<std::map<std::string, std::string>> outputs;
  for (const char* run : {"a", "b"}) {
    const fs::path rd = dir / run;
    fs::create_directories(rd);
    const Pipeline p = run_pipeline(rd, train, study.manifest, "16", "7");
    run_cli_or_throw({"lm", "train", "--units", p.units.string(), "--codebook", p.codebook.string(),
                      "--seed", "7", "--out", (rd / "lm2.unlm").string(), "--export-json",
                      (rd / "lm.json").string()});
    run_cli_or_throw({"eval", "correlate", "--manifest", study.manifest.string(), "--features",
                      p.features.string(), "--features", p.ppl.string(), "--agg-key", "speaker",
                      "--seed", "7", "--out", (rd / "report.csv").string()});
    std::map<std::string, std::string> files;
    for (const auto& entry : fs::directory_iterator(rd)) {
      files[entry.path().filename().string()] = slurp(entry.path());
    }
    outputs.push_back(std::move(files));
  }
  o.check(outputs[0].size() == 8, fmt::format("expected 8 outputs, got {}", outputs[0].size()));
  for (const auto& [name, bytes] : outputs[0]) {
    const auto it = outputs[1].find(name);
    o.check(it != outputs[1].end() && it->second == bytes && !bytes.empty(),
            name + " byte-identical");
  }
  o.note(fmt::format("{} files compared", outputs[0].size()));
  return o;
}

struct Criterion {
  const char* name;
  double budget;
  Outcome (*run)();
};

}  // namespace
}  // namespace sevscore

int main(int argc, char** argv) {
  using namespace sevscore;
  if (argc != 3) {
    std::cerr << "usage: sevscore_acceptance <sevscore-binary> <work-dir>\n";
    return 2;
  }
  cli_path = fs::absolute(argv[1]).string();
  work_dir = fs::absolute(argv[2]);
  fs::create_directories(work_dir);
  fs::remove(work_dir / "cli.log");

  const Criterion criteria[] = {
      {"formula-oracles", kFormulaBudget, formula_oracles},
      {"degradation-monotonicity", kMonotonicityBudget, degradation_monotonicity},
      {"wada-recovery", kWadaBudget, wada_recovery},
      {"unit-lm-suite", kUnitLmBudget, unit_lm_suite},
      {"end-to-end-severity", kEndToEndBudget, end_to_end},
      {"noise-influence", kNoiseBudget, noise_study},
      {"determinism", kDeterminismBudget, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.notes.push_back(std::string("error: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget) {
      outcome.pass = false;
      outcome.notes.push_back(fmt::format("violated: runtime budget {} s", c.budget));
    }
    failures += !outcome.pass;
    std::string first;
    for (const auto& n : outcome.notes) {
      if (n.find('\n') == std::string::npos) first += (first.empty() ? "" : "; ") + n;
    }
    fmt::print("{} {} ({:.2f} s / {} s) {}\n", outcome.pass ? "PASS" : "FAIL", c.name, secs,
               c.budget, first);
    for (const auto& n : outcome.notes) {
      if (n.find('\n') != std::string::npos) fmt::print("{}\n", n);
    }
    std::fflush(stdout);
  }
  fmt::print("{} of {} criteria passed\n", std::size(criteria) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
