// Copyright 2026 The Audlet Authors. All Rights Reserved.
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

// Acceptance suite. Each criterion runs against its own tolerance and time
// budget and prints exactly one PASS or FAIL line. Usage:
//
//   acceptance <path-to-audlet-cli>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "audlet/error.h"
#include "audlet/filterbank.h"
#include "audlet/finite_frames.h"
#include "audlet/frame_diagnostics.h"
#include "audlet/io/number_format.h"
#include "audlet/io/wav.h"
#include "audlet/masking.h"
#include "audlet/scales.h"
#include "audlet/synthesis.h"
#include "test_util.h"

namespace audlet {
namespace {

using testing::RandomBank;
using testing::RandomPainlessBank;
using testing::RandomSignal;

// Collects the first violated condition of a criterion.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
  }
  // Records a measured value against its limit: value <= limit.
  void AtMost(double value, double limit, const std::string& what) {
    Expect(value <= limit, what + " = " + io::FormatDouble(value) + " > " +
                               io::FormatDouble(limit));
  }
  void Note(const std::string& text) { note_ = text; }

  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }
  const std::string& note() const { return note_; }

 private:
  std::string failure_;
  std::string note_;
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<void(Check&)> body;
};

FilterBank DefaultAudlet(std::size_t length = 16384) {
  AudletParams p;
  p.length = length;
  return BuildAudlet(p);
}

// Voiced fixture: a harmonic source with vibrato, two moving formant
// weightings, syllabic envelope and a breath-noise floor.
ComplexVector SpeechLike(std::size_t length, double fs) {
  std::mt19937 rng(2026);
  std::normal_distribution<double> noise(0.0, 0.003);
  ComplexVector x(length);
  double phase = 0.0;
  for (std::size_t n = 0; n < length; ++n) {
    const double t = static_cast<double>(n) / fs;
    const double f0 = 120.0 + 8.0 * std::sin(2 * std::numbers::pi * 5.0 * t);
    phase += 2 * std::numbers::pi * f0 / fs;
    const double f1 = 600.0 + 200.0 * std::sin(2 * std::numbers::pi * 1.3 * t);
    const double f2 = 1700.0 + 400.0 * std::cos(2 * std::numbers::pi * 0.9 * t);
    double v = 0.0;
    for (int h = 1; h * f0 < 0.45 * fs; ++h) {
      const double fh = h * f0;
      const double gain = 1.0 / (1.0 + std::pow((fh - f1) / 120.0, 2)) +
                          0.5 / (1.0 + std::pow((fh - f2) / 180.0, 2));
      v += gain * std::sin(h * phase) / h;
    }
    const double envelope = 0.5 - 0.5 * std::cos(2 * std::numbers::pi * 3.0 * t);
    x[n] = 0.3 * envelope * v + noise(rng);
  }
  return x;
}

ComplexVector SineAt(double hz, std::size_t length, double fs) {
  ComplexVector x(length);
  for (std::size_t n = 0; n < length; ++n) {
    x[n] = std::sin(2.0 * std::numbers::pi * hz * static_cast<double>(n) / fs);
  }
  return x;
}

// 1. Scale anchors and inversion.
void ScaleAnchors(Check& c) {
  c.Expect(Bandwidth(AuditoryScale::kErb, 0.0) == 24.7, "ERB bandwidth at 0 Hz != 24.7");
  c.Expect(Bandwidth(AuditoryScale::kBark, 0.0) == 100.0, "Bark bandwidth at 0 Hz != 100");
  double worst = 0.0;
  for (AuditoryScale s : {AuditoryScale::kErb, AuditoryScale::kBark}) {
    for (int i = 0; i < 10000; ++i) {
      const double f = std::pow(20000.0, i / 9999.0);  // 1 Hz .. 20 kHz, log spaced
      worst = std::max(worst, std::abs(InverseScale(s, ScaleValue(s, f)) - f) / f);
    }
  }
  c.AtMost(worst, 1e-9, "max roundtrip relative error");
  c.Note("roundtrip " + io::FormatDouble(worst));
}

// 2. Painless-dual perfect reconstruction of the default bank.
void PerfectReconstruction(Check& c) {
  const FilterBank bank = DefaultAudlet();
  const FilterBank dual = PainlessDual(bank);
  std::mt19937 rng(1);
  double worst = 0.0;
  for (int trial = 0; trial < 21; ++trial) {
    const ComplexVector x = trial < 20 ? RandomSignal(rng, bank.length(), true)
                                       : SpeechLike(bank.length(), 16000.0);
    worst = std::max(worst, RelativeError(Synthesize(dual, Analyze(bank, x)), x));
  }
  c.AtMost(worst, 1e-10, "max relative l2 error");
  c.Note("error " + io::FormatDouble(worst));
}

// 3. Channel count of the full-band V = 6 ERB bank.
void ChannelCount(Check& c) {
  AudletParams p;
  p.fmin_hz = 0.0;
  p.fmax_hz = 8000.0;
  p.length = 16384;
  const FilterBank bank = BuildAudlet(p);
  c.Expect(bank.size() == 201, "K = " + std::to_string(bank.size()) + ", expected 201");
  c.Note("K = " + std::to_string(bank.size()));
}

// 4. Walnut sum against analysis followed by adjoint synthesis.
void WalnutEquivalence(Check& c) {
  std::mt19937 rng(4);
  double worst = 0.0;
  int non_painless = 0;
  for (int b = 0; b < 10; ++b) {
    const FilterBank bank = b < 8 ? RandomBank(rng, 256, 6, b % 2 == 0)
                                  : RandomPainlessBank(rng, 256);
    non_painless += !IsPainless(bank);
    const double s_norm = EstimateBounds(bank, BoundsMethod::kDenseEigen).bounds.upper;
    for (int t = 0; t < 10; ++t) {
      const ComplexVector x = RandomSignal(rng, 256);
      std::vector<Complex> diff = WalnutApply(bank, x);
      const ComplexVector ref = ApplyFrameOperatorByComposition(bank, x);
      for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= ref[i];
      worst = std::max(worst, Norm(diff) / (s_norm * Norm(x)));
    }
  }
  c.Expect(non_painless >= 4, "too few non-painless banks in the sample");
  c.AtMost(worst, 1e-10, "max ||walnut - composition|| / (||S|| ||x||)");
  c.Note("ratio " + io::FormatDouble(worst) + ", " + std::to_string(non_painless) +
         " non-painless banks");
}

// 5. Diagonal-dominance bounds bracket the eigenvalue bounds.
void BoundSandwich(Check& c) {
  std::mt19937 rng(5);
  double painless_gap = 0.0;
  for (int b = 0; b < 10; ++b) {
    const std::size_t length = b % 2 == 0 ? 256 : 128;
    const FilterBank bank = b < 6 ? RandomBank(rng, length, 5, true)
                                  : RandomPainlessBank(rng, length);
    const BoundsEstimate dd = EstimateBounds(bank, BoundsMethod::kDiagonalDominance).bounds;
    const BoundsEstimate eig = EstimateBounds(bank, BoundsMethod::kDenseEigen).bounds;
    const double slack = 1e-12 * eig.upper;  // eigen-solver rounding
    c.Expect(dd.lower <= eig.lower + slack, "A_dd > A_eig on bank " + std::to_string(b));
    c.Expect(eig.lower <= eig.upper, "A_eig > B_eig on bank " + std::to_string(b));
    c.Expect(eig.upper <= dd.upper + slack, "B_eig > B_dd on bank " + std::to_string(b));
    if (IsPainless(bank)) {
      const RealVector h0 = FrequencyResponse(bank);
      const auto [lo, hi] = std::minmax_element(h0.begin(), h0.end());
      painless_gap = std::max({painless_gap, std::abs(eig.lower - *lo) / *hi,
                               std::abs(eig.upper - *hi) / *hi});
    }
  }
  c.AtMost(painless_gap, 1e-8, "painless |eig - H0 extrema| / max H0");
  c.Note("painless gap " + io::FormatDouble(painless_gap));
}

// 6. Finite-frame duals and Parseval normalization.
void FiniteFrames(Check& c) {
  std::mt19937 rng(6);
  std::normal_distribution<double> g;
  double recon = 0.0, dual_bounds = 0.0, parseval_bounds = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    Eigen::MatrixXcd v(16, 40);
    for (Eigen::Index i = 0; i < v.size(); ++i) v.data()[i] = Complex(g(rng), g(rng));
    const FiniteFrame frame(v);
    const FiniteFrame dual = frame.CanonicalDual();
    Eigen::VectorXcd x(16);
    for (Eigen::Index i = 0; i < 16; ++i) x(i) = Complex(g(rng), g(rng));
    recon = std::max(recon, (dual.Synthesize(frame.Analyze(x)) - x).norm() / x.norm());
    const BoundsEstimate b = frame.Bounds();
    const BoundsEstimate db = dual.Bounds();
    dual_bounds = std::max({dual_bounds, std::abs(db.lower * b.upper - 1.0),
                            std::abs(db.upper * b.lower - 1.0)});
    const BoundsEstimate pb = frame.Parsevalize().Bounds();
    parseval_bounds = std::max({parseval_bounds, std::abs(pb.lower - 1.0),
                                std::abs(pb.upper - 1.0)});
  }
  c.AtMost(recon, 1e-9, "canonical-dual reconstruction error");
  c.AtMost(dual_bounds, 1e-8, "dual bounds vs (1/B, 1/A)");
  c.AtMost(parseval_bounds, 1e-8, "Parsevalized bounds vs (1, 1)");
  Eigen::MatrixXcd fixture = Eigen::MatrixXcd::Zero(2, 3);
  fixture(0, 0) = 1.0;
  fixture(1, 1) = fixture(1, 2) = 1.0 / std::sqrt(2.0);
  const double identity =
      (FiniteFrame(fixture).FrameOperator() - Eigen::MatrixXcd::Identity(2, 2)).norm();
  c.AtMost(identity, 1e-12, "fixture ||S - I||");
  c.Note("recon " + io::FormatDouble(recon));
}

// 7. Conjugate gradients and the Neumann iteration.
void IterativeSynthesis(Check& c) {
  std::mt19937 rng(7);
  std::vector<FilterBank> fixtures = {DefaultAudlet()};
  {
    AudletParams p;
    p.length = 8192;
    p.scale = AuditoryScale::kBark;
    p.channels_per_unit = 3.0;
    p.fmin_hz = 50.0;
    fixtures.push_back(BuildAudlet(p));
    p.scale = AuditoryScale::kErb;
    p.prototype = Prototype::kGaussian;
    p.fmin_hz = 0.0;
    fixtures.push_back(BuildAudlet(p));
  }
  std::size_t worst_pcg = 0, worst_plain = 0, worst_neumann = 0;
  double worst_ratio_excess = -1.0;
  for (const FilterBank& bank : fixtures) {
    c.Expect(IsPainless(bank), "fixture is not painless");
    const ComplexVector x = RandomSignal(rng, bank.length(), true);
    const SubbandCoefficients coefficients = Analyze(bank, x);
    const IterativeResult pcg = CgSynthesize(bank, coefficients);
    worst_pcg = std::max(worst_pcg, pcg.iterations);
    c.Expect(pcg.iterations <= 10, "preconditioned CG took " +
                                       std::to_string(pcg.iterations) + " iterations");
    c.AtMost(pcg.trace.empty() ? 0.0 : pcg.trace.back(), 1e-10, "PCG final residual");

    CgConfig plain;
    plain.preconditioned = false;
    const IterativeResult cg = CgSynthesize(bank, coefficients, plain);
    worst_plain = std::max(worst_plain, cg.iterations);
    c.Expect(cg.iterations <= bank.length(), "unpreconditioned CG exceeded L iterations");
    c.AtMost(RelativeError(cg.signal, pcg.signal), 1e-8, "CG vs PCG");

    const BoundsEstimate bounds = EstimateBounds(bank, BoundsMethod::kPainlessExact).bounds;
    std::vector<double> errors;
    NeumannConfig config;
    config.observer = [&](std::span<const Complex> xm) {
      errors.push_back(RelativeError(xm, x));
    };
    const IterativeResult neumann = NeumannSynthesize(bank, coefficients, bounds, config);
    worst_neumann = std::max(worst_neumann, neumann.iterations);
    c.AtMost(RelativeError(neumann.signal, pcg.signal), 1e-8, "Neumann vs PCG");
    const double rate = (bounds.upper - bounds.lower) / (bounds.upper + bounds.lower);
    for (std::size_t i = 1; i < errors.size() && errors[i - 1] > 1e-11; ++i) {
      const double excess = errors[i] / errors[i - 1] - rate;
      worst_ratio_excess = std::max(worst_ratio_excess, excess);
    }
  }
  c.AtMost(worst_ratio_excess, 1e-6, "Neumann error ratio above (B-A)/(B+A)");
  c.Note("iterations pcg " + std::to_string(worst_pcg) + ", cg " +
         std::to_string(worst_plain) + ", neumann " + std::to_string(worst_neumann));
}

// 8. Equivalent uniform filter bank.
void EquivalentUniformBank(Check& c) {
  std::mt19937 rng(8);
  double worst = 0.0;
  for (int b = 0; b < 6; ++b) {
    const bool audlet = b == 5;
    const FilterBank bank = audlet ? DefaultAudlet(2048) : RandomBank(rng, 256, 6, b % 2 == 0);
    const FilterBank uniform = EquivalentUniform(bank);
    std::size_t expected = 0;
    for (std::size_t k = 0; k < bank.size(); ++k) {
      expected += bank.CommonDecimation() / bank.decimation(k);
    }
    c.Expect(uniform.size() == expected, "channel count != sum q_k");
    for (std::size_t k = 0; k < uniform.size(); ++k) {
      c.Expect(uniform.decimation(k) == bank.CommonDecimation(), "non-uniform output");
    }
    for (int t = 0; t < 5; ++t) {
      // Banks with conjugate pairs act on real signals.
      const ComplexVector x = RandomSignal(rng, bank.length(), audlet);
      worst = std::max(worst, RelativeError(ApplyFrameOperatorByComposition(uniform, x),
                                            ApplyFrameOperatorByComposition(bank, x)));
    }
  }
  c.AtMost(worst, 1e-10, "frame operator relative difference");
  c.Note("difference " + io::FormatDouble(worst));
}

// 9. Frame multipliers.
void MultiplierContracts(Check& c) {
  {
    const FilterBank bank = DefaultAudlet(4096);
    const FilterBank dual = PainlessDual(bank);
    std::mt19937 rng(9);
    const ComplexVector x = RandomSignal(rng, bank.length(), true);
    c.AtMost(RelativeError(ApplyMultiplier(MaskSymbol::Constant(bank, 1.0), dual, bank, x), x),
             1e-10, "identity mask error");
    const double b_ana = EstimateBounds(bank, BoundsMethod::kPainlessExact).bounds.upper;
    const double b_syn = EstimateBounds(dual, BoundsMethod::kPainlessExact).bounds.upper;
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      MaskSymbol m = MaskSymbol::Constant(bank, 0.0);
      m.binary = false;
      for (RealVector& row : m.weights) {
        for (double& w : row) w = u(rng);
      }
      const ComplexVector y = RandomSignal(rng, bank.length(), true);
      worst = std::max(worst, Norm(ApplyMultiplier(m, dual, bank, y)) /
                                  (m.SupNorm() * std::sqrt(b_ana * b_syn) * Norm(y)));
    }
    c.AtMost(worst, 1.0 + 1e-12, "||Mx|| / (||m|| sqrt(B_ana B_syn) ||x||)");
  }
  const FilterBank bank = DefaultAudlet();
  MaskSymbol high = MaskSymbol::Constant(bank, 0.0);
  for (std::size_t k = 0; k < bank.size(); ++k) {
    if (bank.info().centers_hz[k] > 1000.0) {
      std::fill(high.weights[k].begin(), high.weights[k].end(), 1.0);
    }
  }
  const ComplexVector top = SineAt(4000.0, bank.length(), 16000.0);
  ComplexVector both = SineAt(250.0, bank.length(), 16000.0);
  for (std::size_t i = 0; i < both.size(); ++i) both[i] += top[i];
  const ComplexVector out = ApplyMultiplier(high, PainlessDual(bank), bank, both);
  const double leakage_db = 20.0 * std::log10(RelativeError(out, top) + 1e-300);
  c.AtMost(leakage_db, -40.0, "two-tone leakage dB");
  c.Note("leakage " + io::FormatDouble(leakage_db) + " dB");
}

// 10. Irrelevance filter.
void IrrelevanceProperties(Check& c) {
  const FilterBank bank = DefaultAudlet(8192);
  const ComplexVector x = SpeechLike(bank.length(), 16000.0);
  double previous = -1.0;
  for (int i = 0; i <= 20; ++i) {
    IrrelevanceModel model;
    model.offset_db = -60.0 + 4.0 * i;
    const double fraction = IrrelevanceFilter(bank, x, model).removal_fraction;
    c.Expect(fraction >= previous, "removal fraction decreased at offset " +
                                       io::FormatDouble(model.offset_db));
    previous = fraction;
  }
  IrrelevanceModel model;
  model.offset_db = INFINITY;
  const double all = IrrelevanceFilter(bank, x, model).removal_fraction;
  model.offset_db = -INFINITY;
  const IrrelevanceResult none = IrrelevanceFilter(bank, x, model);
  c.Expect(all == 1.0, "offset +inf removes " + io::FormatDouble(all));
  c.Expect(none.removal_fraction == 0.0, "offset -inf removes something");
  c.AtMost(RelativeError(Synthesize(PainlessDual(bank), none.coefficients), x), 1e-10,
           "mask = 1 roundtrip error");
  c.Note("default-offset removal " +
         io::FormatDouble(IrrelevanceFilter(bank, x).removal_fraction));
}

// 11. Perfect-reconstruction residual and delay recovery.
void PrCondition(Check& c) {
  const FilterBank bank = DefaultAudlet(4096);
  const FilterBank dual = PainlessDual(bank);
  const PRResidual direct = PrResidual(bank, dual);
  c.Expect(direct.delay == 0, "delay " + std::to_string(direct.delay) + " != 0");
  c.AtMost(direct.max_deviation, 1e-10, "residual");
  std::vector<BandFilter> delayed = dual.filters();
  const std::size_t length = bank.length();
  for (BandFilter& f : delayed) {
    for (std::size_t i = 0; i < f.values.size(); ++i) {
      const std::size_t j = (f.offset + i) % length;
      f.values[i] *= std::polar(1.0, -2.0 * std::numbers::pi *
                                         static_cast<double>((3 * j) % length) / length);
    }
  }
  const PRResidual shifted = PrResidual(bank, dual.WithFilters(delayed));
  c.Expect(shifted.delay == 3, "delayed dual gives l = " + std::to_string(shifted.delay));
  c.AtMost(shifted.max_deviation, 1e-10, "delayed residual");
  c.Note("residual " + io::FormatDouble(direct.max_deviation));
}

// 12. CLI roundtrip and byte determinism.
void CliEndToEnd(Check& c, const std::string& cli) {
  if (cli.empty()) {
    c.Expect(false, "no CLI path given");
    return;
  }
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "audlet_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const ComplexVector speech = SpeechLike(48000, 16000.0);
  RealVector samples(speech.size());
  for (std::size_t i = 0; i < speech.size(); ++i) {
    samples[i] = static_cast<float>(speech[i].real());  // representable exactly
  }
  const std::string in = (dir / "in.wav").string();
  io::WriteWavFloat32(in, 16000, samples);
  auto run = [&](const std::string& args) {
    const std::string command = "\"" + cli + "\" " + args + " > /dev/null";
    return std::system(command.c_str()) == 0;
  };
  const std::string p = dir.string() + "/";
  c.Expect(run("analyze " + in + " " + p + "a.coef"), "analyze failed");
  c.Expect(run("analyze " + in + " " + p + "b.coef"), "second analyze failed");
  c.Expect(run("synthesize " + p + "a.coef " + p + "a.wav"), "synthesize failed");
  c.Expect(run("synthesize " + p + "b.coef " + p + "b.wav"), "second synthesize failed");
  c.Expect(run("spectrogram " + in + " " + p + "a.csv"), "spectrogram failed");
  c.Expect(run("spectrogram " + in + " " + p + "b.csv"), "second spectrogram failed");
  if (!c.ok()) return;
  for (const char* stem : {".coef", ".wav", ".csv"}) {
    c.Expect(io::ReadFileBytes(p + "a" + stem) == io::ReadFileBytes(p + "b" + stem),
             std::string(stem) + " outputs differ between runs");
  }
  const RealVector back = io::ReadWav(p + "a.wav").samples;
  c.Expect(back.size() == samples.size(), "output length differs");
  if (back.size() == samples.size()) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < back.size(); ++i) {
      num += (back[i] - samples[i]) * (back[i] - samples[i]);
      den += samples[i] * samples[i];
    }
    c.AtMost(std::sqrt(num / den), 1e-6, "roundtrip relative l2 error");
    c.Note("error " + io::FormatDouble(std::sqrt(num / den)));
  }
  fs::remove_all(dir);
}

}  // namespace
}  // namespace audlet

int main(int argc, char** argv) {
  using namespace audlet;
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<Criterion> criteria = {
      {1, "scale anchors and roundtrip", 1.0, ScaleAnchors},
      {2, "perfect reconstruction", 5.0, PerfectReconstruction},
      {3, "channel count K = 201", 1.0, ChannelCount},
      {4, "Walnut equivalence", 10.0, WalnutEquivalence},
      {5, "bound sandwich", 60.0, BoundSandwich},
      {6, "finite frames", 10.0, FiniteFrames},
      {7, "CG and Neumann convergence", 30.0, IterativeSynthesis},
      {8, "equivalent uniform bank", 10.0, EquivalentUniformBank},
      {9, "multiplier contracts", 10.0, MultiplierContracts},
      {10, "irrelevance filter properties", 10.0, IrrelevanceProperties},
      {11, "PR residual and delay", 10.0, PrCondition},
      {12, "CLI end-to-end", 10.0, [&cli](Check& c) { CliEndToEnd(c, cli); }},
  };
  int failures = 0;
  for (const Criterion& criterion : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.body(check);
    } catch (const std::exception& e) {
      check.Expect(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.Expect(seconds < criterion.budget_seconds,
                 "runtime " + io::FormatDouble(seconds) + " s over budget");
    const bool ok = check.ok();
    failures += !ok;
    std::printf("%s %2d %s (%.3f s of %.0f s)%s%s\n", ok ? "PASS" : "FAIL", criterion.id,
                criterion.name.c_str(), seconds, criterion.budget_seconds,
                ok ? "" : ": ", ok ? ("  " + check.note()).c_str() : check.failure().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
