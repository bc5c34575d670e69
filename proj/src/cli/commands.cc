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

#include "audlet/cli/commands.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "audlet/frame_diagnostics.h"
#include "audlet/io/container.h"
#include "audlet/io/matrix_export.h"
#include "audlet/io/number_format.h"
#include "audlet/io/wav.h"
#include "audlet/synthesis.h"

namespace audlet::cli {
namespace {

struct Signal {
  std::uint32_t sample_rate = 0;
  std::size_t original_length = 0;
  ComplexVector padded;
};

// Reads the WAV, fixes f_s and L in `options` and zero-pads the samples.
Signal LoadSignal(const std::string& path, BankOptions& options) {
  const io::WavData wav = io::ReadWav(path);
  options.params.sample_rate = wav.sample_rate;
  options.params.length =
      PlanAudletLength(options.params, std::max<std::size_t>(wav.samples.size(), 1));
  Signal s;
  s.sample_rate = wav.sample_rate;
  s.original_length = wav.samples.size();
  s.padded.assign(options.params.length, Complex(0.0));
  for (std::size_t i = 0; i < wav.samples.size(); ++i) s.padded[i] = wav.samples[i];
  return s;
}

ComplexVector Reconstruct(const FilterBank& bank,
                          const SubbandCoefficients& coefficients,
                          const SynthesisOptions& synthesis, std::ostream& out) {
  if (synthesis.method == "dual") {
    return Synthesize(PainlessDual(bank), coefficients);
  }
  if (synthesis.method == "cg") {
    CgConfig config;
    config.tolerance = synthesis.tolerance;
    const IterativeResult r = CgSynthesize(bank, coefficients, config);
    out << "iterations " << r.iterations << '\n' << FormatTrace(r.trace);
    return r.signal;
  }
  if (synthesis.method == "neumann") {
    const BoundsMethod method = IsPainless(bank) ? BoundsMethod::kPainlessExact
                                                 : BoundsMethod::kDiagonalDominance;
    const FrameReport report = EstimateBounds(bank, method);
    NeumannConfig config;
    config.tolerance = synthesis.tolerance;
    const IterativeResult r =
        NeumannSynthesize(bank, coefficients, report.bounds, config);
    out << "iterations " << r.iterations << '\n';
    return r.signal;
  }
  throw Error(ErrorCode::kDomain, "unknown synthesis method '" + synthesis.method + "'");
}

void WriteSignal(const std::string& path, std::uint32_t sample_rate,
                 const ComplexVector& x, std::size_t original_length) {
  RealVector samples(std::min(original_length, x.size()));
  for (std::size_t i = 0; i < samples.size(); ++i) samples[i] = x[i].real();
  io::WriteWavFloat32(path, sample_rate, samples);
}

std::uint32_t IntegerRate(double rate) {
  if (!(rate >= 1.0) || rate > 4294967295.0 || rate != std::floor(rate)) {
    throw Error(ErrorCode::kFormat, "sample rate is not a positive integer");
  }
  return static_cast<std::uint32_t>(rate);
}

// Runs `body`, translating library errors into exit codes.
template <typename Fn>
int Guarded(std::ostream& err, Fn&& body) {
  try {
    return body();
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n' << "residual trace:\n" << FormatTrace(e.trace());
    return kExitSoftware;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCodeFor(e);
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kExitSoftware;
  }
}

void AddBankOptions(CLI::App* app, BankOptions& o) {
  AudletParams& p = o.params;
  app->add_option_function<std::string>(
         "--scale", [&p](const std::string& s) { p.scale = ParseScale(s); },
         "auditory frequency scale")
      ->check(CLI::IsMember({"erb", "bark"}))
      ->default_str("erb");
  app->add_option("--fmin", p.fmin_hz, "lowest regular centre frequency in Hz")
      ->default_val(0.0);
  app->add_option("--fmax", p.fmax_hz, "highest centre frequency in Hz (0: Nyquist)")
      ->default_val(0.0);
  app->add_option("--channels-per-unit", p.channels_per_unit,
                  "channels per scale unit (V)")
      ->default_val(6.0);
  app->add_option("--rbw", p.bandwidth_factor, "bandwidth factor r_bw")->default_val(1.0);
  app->add_option("--rd", p.decimation_factor, "decimation factor r_d")->default_val(1.0);
  app->add_option_function<std::string>(
         "--prototype",
         [&p](const std::string& s) { p.prototype = ParsePrototype(s); },
         "filter prototype")
      ->check(CLI::IsMember({"hann", "gauss", "rect"}))
      ->default_str("hann");
  app->add_flag_callback("--no-dc", [&p] { p.dc_filter = false; },
                         "omit the 0 Hz channel when fmin > 0");
  app->add_flag("--parseval", o.parseval, "normalize the bank to a Parseval frame");
}

void AddSynthesisOptions(CLI::App* app, SynthesisOptions& s) {
  app->add_option("--method", s.method, "reconstruction method")
      ->check(CLI::IsMember({"dual", "cg", "neumann"}))
      ->default_val("dual");
  app->add_option("--tolerance", s.tolerance,
                  "relative residual (cg) or relative update (neumann)")
      ->check(CLI::PositiveNumber)
      ->default_val(1e-10);
}

}  // namespace

int ExitCodeFor(const Error& error) {
  switch (error.code()) {
    case ErrorCode::kNotAFrame: return kExitNotAFrame;
    case ErrorCode::kDomain:
    case ErrorCode::kShape:
    case ErrorCode::kUnsupported: return kExitUsage;
    case ErrorCode::kFormat: return kExitDataError;
    case ErrorCode::kIo: return kExitIoError;
    case ErrorCode::kConvergence:
    case ErrorCode::kInternal: return kExitSoftware;
  }
  return kExitSoftware;
}

FilterBank BuildBank(const BankOptions& options) {
  FilterBank bank = BuildAudlet(options.params);
  return options.parseval ? NormalizeToParseval(bank) : bank;
}

int RunDiagnose(const BankOptions& options, const std::string& bounds_method,
                std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const FilterBank bank = BuildBank(options);
    BoundsMethod method;
    if (bounds_method == "auto") {
      method = IsPainless(bank) ? BoundsMethod::kPainlessExact
                                : BoundsMethod::kDiagonalDominance;
    } else {
      method = ParseBoundsMethod(bounds_method);
    }
    const FrameReport report = EstimateBounds(bank, method);
    out << FormatReport(report, bank);
    return report.is_frame() ? kExitOk : kExitNotAFrame;
  });
}

int RunAnalyze(const std::string& wav_path, const BankOptions& options,
               const std::string& out_path, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    BankOptions o = options;
    const Signal s = LoadSignal(wav_path, o);
    const FilterBank bank = BuildBank(o);
    io::WriteContainer(out_path, io::MakeContainer(o.params, o.parseval, bank,
                                                   Analyze(bank, s.padded),
                                                   s.original_length));
    out << "channels " << bank.size() << '\n' << "length " << bank.length() << '\n';
    return kExitOk;
  });
}

int RunSynthesize(const std::string& container_path, const std::string& wav_path,
                  const SynthesisOptions& synthesis, std::ostream& out,
                  std::ostream& err) {
  return Guarded(err, [&] {
    const io::CoefficientContainer c = io::ReadContainer(container_path);
    if (c.binary_mask) {
      throw Error(ErrorCode::kFormat, "container holds a mask, not coefficients");
    }
    const std::uint32_t rate = IntegerRate(c.params.sample_rate);
    BankOptions o{c.params, c.parseval};
    FilterBank bank = [&] {
      try {
        return BuildBank(o);
      } catch (const Error& e) {
        throw Error(ErrorCode::kFormat, std::string("container parameters: ") + e.what());
      }
    }();
    io::CheckContainerMatchesBank(c, bank);
    const ComplexVector x = Reconstruct(bank, c.coefficients, synthesis, out);
    WriteSignal(wav_path, rate, x, c.original_length);
    return kExitOk;
  });
}

int RunSpectrogram(const std::string& wav_path, const BankOptions& options,
                   const std::string& out_path, const std::string& format,
                   std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    BankOptions o = options;
    const Signal s = LoadSignal(wav_path, o);
    const FilterBank bank = BuildBank(o);
    const std::vector<RealVector> db = io::MagnitudeDb(Analyze(bank, s.padded));
    if (format == "csv") {
      const std::string text =
          io::EncodeCsv(bank.info().centers_hz, db, io::kSpectrogramFloorDb);
      io::WriteFileBytes(out_path, std::span(reinterpret_cast<const std::uint8_t*>(
                                                 text.data()),
                                             text.size()));
    } else if (format == "pgm") {
      io::WriteFileBytes(out_path, io::EncodePgm(db, io::kSpectrogramFloorDb));
    } else {
      throw Error(ErrorCode::kDomain, "unknown matrix format '" + format + "'");
    }
    out << "rows " << db.size() << '\n';
    return kExitOk;
  });
}

int RunIrrelevance(const std::string& wav_path, const BankOptions& options,
                   const IrrelevanceModel& model, const SynthesisOptions& synthesis,
                   const std::string& out_wav, const std::string& out_mask,
                   std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    BankOptions o = options;
    const Signal s = LoadSignal(wav_path, o);
    const FilterBank bank = BuildBank(o);
    IrrelevanceModel m = model;
    m.scale = o.params.scale;
    const IrrelevanceResult r = IrrelevanceFilter(bank, s.padded, m);
    std::ostringstream discard;
    const ComplexVector x = Reconstruct(bank, r.coefficients, synthesis, discard);
    WriteSignal(out_wav, s.sample_rate, x, s.original_length);
    if (!out_mask.empty()) {
      SubbandCoefficients weights;
      for (const RealVector& row : r.mask.weights) {
        weights.emplace_back(row.begin(), row.end());
      }
      io::CoefficientContainer c =
          io::MakeContainer(o.params, o.parseval, bank, std::move(weights),
                            s.original_length);
      c.binary_mask = true;
      io::WriteContainer(out_mask, c);
    }
    out << io::FormatDouble(r.removal_fraction) << '\n';
    return kExitOk;
  });
}

int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"Perceptually spaced, perfectly invertible filter banks (AUDlet)",
               "audlet"};
  app.require_subcommand(1);

  BankOptions bank;
  SynthesisOptions synthesis;
  IrrelevanceModel model;
  std::string input, output, mask_path, format = "csv", bounds = "auto";
  double fs = 16000.0;
  std::size_t length = 0;

  CLI::App* diagnose = app.add_subcommand("diagnose", "print frame bounds and diagnostics");
  AddBankOptions(diagnose, bank);
  diagnose->add_option("--fs", fs, "sample rate in Hz")->default_val(16000.0);
  diagnose->add_option("--length", length, "signal length L (0: one second, rounded up)")
      ->default_val(0);
  diagnose->add_option("--bounds", bounds, "bound estimator")
      ->check(CLI::IsMember({"auto", "painless-exact", "diag-dominance", "dense-eigen"}))
      ->default_val("auto");

  CLI::App* analyze = app.add_subcommand("analyze", "WAV to coefficient container");
  AddBankOptions(analyze, bank);
  analyze->add_option("input", input, "input WAV")->required();
  analyze->add_option("output", output, "output container")->required();

  CLI::App* synth = app.add_subcommand("synthesize", "coefficient container to WAV");
  AddSynthesisOptions(synth, synthesis);
  synth->add_option("input", input, "input container")->required();
  synth->add_option("output", output, "output WAV (32-bit float)")->required();

  CLI::App* spectrogram = app.add_subcommand("spectrogram", "dB magnitude matrix");
  AddBankOptions(spectrogram, bank);
  spectrogram->add_option("--format", format, "matrix format")
      ->check(CLI::IsMember({"csv", "pgm"}))
      ->default_val("csv");
  spectrogram->add_option("input", input, "input WAV")->required();
  spectrogram->add_option("output", output, "output matrix")->required();

  CLI::App* irrelevance =
      app.add_subcommand("irrelevance", "remove coefficients below the masking threshold");
  AddBankOptions(irrelevance, bank);
  AddSynthesisOptions(irrelevance, synthesis);
  irrelevance->add_option("--offset-db", model.offset_db,
                          "threshold offset in dB (default -2.59, the reference "
                          "AUDlet irrelevance-filter setting)")
      ->default_val(-2.59);
  irrelevance->add_option("--spread-lower", model.spread_lower_db_per_unit,
                          "masking slope toward lower frequencies, dB per scale unit")
      ->check(CLI::PositiveNumber)
      ->default_val(27.0);
  irrelevance->add_option("--spread-upper", model.spread_upper_db_per_unit,
                          "masking slope toward higher frequencies, dB per scale unit")
      ->check(CLI::PositiveNumber)
      ->default_val(12.0);
  irrelevance->add_option("--mask", mask_path, "write the binary mask container here");
  irrelevance->add_option("input", input, "input WAV")->required();
  irrelevance->add_option("output", output, "output WAV (32-bit float)")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (*diagnose) {
    bank.params.sample_rate = fs;
    bank.params.length = length;
    if (length == 0) {
      const int code = Guarded(err, [&] {
        bank.params.length = PlanAudletLength(
            bank.params, static_cast<std::size_t>(std::ceil(fs)));
        return kExitOk;
      });
      if (code != kExitOk) return code;
    }
    return RunDiagnose(bank, bounds, out, err);
  }
  if (*analyze) return RunAnalyze(input, bank, output, out, err);
  if (*synth) return RunSynthesize(input, output, synthesis, out, err);
  if (*spectrogram) return RunSpectrogram(input, bank, output, format, out, err);
  return RunIrrelevance(input, bank, model, synthesis, output, mask_path, out, err);
}

}  // namespace audlet::cli
