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

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "audlet/io/container.h"
#include "audlet/io/number_format.h"
#include "audlet/io/wav.h"
#include "gtest/gtest.h"

namespace audlet::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "audlet");
  std::ostringstream out, err;
  const int code = Main(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  CliTest() {
    dir_ = fs::temp_directory_path() /
           ("audlet_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()
                                                    ->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  ~CliTest() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  // Two tones plus a little noise, 16 kHz; length deliberately not a
  // multiple of any decimation factor.
  std::string WriteFixture(std::size_t samples = 12345) const {
    std::mt19937 rng(7);
    std::normal_distribution<double> g(0.0, 0.01);
    RealVector x(samples);
    for (std::size_t n = 0; n < samples; ++n) {
      const double t = static_cast<double>(n) / 16000.0;
      x[n] = 0.5 * std::sin(2 * std::numbers::pi * 440.0 * t) +
             0.25 * std::sin(2 * std::numbers::pi * 3000.0 * t) + g(rng);
    }
    const std::string path = Path("in.wav");
    io::WriteWavFloat32(path, 16000, x);
    return path;
  }

  static double RelativeDiff(const RealVector& a, const RealVector& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      num += (a[i] - b[i]) * (a[i] - b[i]);
      den += b[i] * b[i];
    }
    return std::sqrt(num / den);
  }

  fs::path dir_;
};

TEST_F(CliTest, DiagnoseDefaultBank) {
  const Outcome r = Invoke({"diagnose"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("method painless-exact\n"), std::string::npos);
  EXPECT_NE(r.out.find("painless true\n"), std::string::npos);
  EXPECT_NE(r.out.find("frame true\n"), std::string::npos);
  EXPECT_NE(r.out.find("channels 201\n"), std::string::npos);
  EXPECT_NE(r.out.find("length 16384\n"), std::string::npos);
}

TEST_F(CliTest, DiagnoseReportsGapsWithExitTwo) {
  const Outcome r = Invoke({"diagnose", "--channels-per-unit", "0.5", "--rbw", "0.5"});
  EXPECT_EQ(r.code, kExitNotAFrame);
  EXPECT_NE(r.out.find("frame false\n"), std::string::npos);
  EXPECT_NE(r.out.find("lower_bound 0\n"), std::string::npos);
  // Nothing covers 0 .. 4 kHz once the lowpass channel is dropped.
  EXPECT_EQ(Invoke({"diagnose", "--fmin", "4000", "--no-dc"}).code, kExitNotAFrame);
  EXPECT_EQ(Invoke({"diagnose", "--fmin", "4000"}).code, kExitOk);
}

TEST_F(CliTest, DiagnoseParsevalAndMethods) {
  const Outcome p = Invoke({"diagnose", "--parseval", "--length", "4096"});
  EXPECT_EQ(p.code, kExitOk);
  EXPECT_NE(p.out.find("condition_number 1.00000000000000"), std::string::npos) << p.out;
  const Outcome d = Invoke({"diagnose", "--length", "512", "--bounds", "diag-dominance"});
  EXPECT_EQ(d.code, kExitOk);
  EXPECT_NE(d.out.find("method diag-dominance\n"), std::string::npos);
  EXPECT_EQ(Invoke({"diagnose", "--length", "4096", "--bounds", "dense-eigen"}).code,
            kExitUsage);  // above the dense ceiling
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Invoke({}).code, kExitUsage);
  EXPECT_EQ(Invoke({"transmogrify"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"diagnose", "--scale", "mel"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"diagnose", "--fmin", "9000"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"analyze", Path("missing.wav"), Path("x.coef")}).code, kExitIoError);
}

TEST_F(CliTest, HelpDocumentsOffsetDefault) {
  const Outcome r = Invoke({"irrelevance", "--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("-2.59"), std::string::npos);
}

TEST_F(CliTest, RoundTripAllMethodsAndDeterminism) {
  const std::string in = WriteFixture();
  const RealVector original = io::ReadWav(in).samples;
  ASSERT_EQ(Invoke({"analyze", in, Path("a.coef")}).code, kExitOk);
  ASSERT_EQ(Invoke({"analyze", in, Path("b.coef")}).code, kExitOk);
  EXPECT_EQ(io::ReadFileBytes(Path("a.coef")), io::ReadFileBytes(Path("b.coef")));
  for (const std::string method : {"dual", "cg", "neumann"}) {
    const std::string out = Path(method + ".wav");
    const Outcome r = Invoke({"synthesize", "--method", method, Path("a.coef"), out});
    ASSERT_EQ(r.code, kExitOk) << method << ": " << r.err;
    const io::WavData back = io::ReadWav(out);
    EXPECT_EQ(back.sample_rate, 16000u);
    ASSERT_EQ(back.samples.size(), original.size());
    EXPECT_LE(RelativeDiff(back.samples, original), 1e-6) << method;
    ASSERT_EQ(Invoke({"synthesize", "--method", method, Path("a.coef"), out + "2"}).code, kExitOk);
    EXPECT_EQ(io::ReadFileBytes(out), io::ReadFileBytes(out + "2")) << method;
  }
}

TEST_F(CliTest, ParsevalAndBarkRoundTrip) {
  const std::string in = WriteFixture(4000);
  const RealVector original = io::ReadWav(in).samples;
  ASSERT_EQ(Invoke({"analyze", "--parseval", "--scale", "bark", "--channels-per-unit", "3",
                 "--prototype", "gauss", in, Path("p.coef")})
                .code,
            kExitOk);
  const io::CoefficientContainer c = io::ReadContainer(Path("p.coef"));
  EXPECT_TRUE(c.parseval);
  EXPECT_EQ(c.params.scale, AuditoryScale::kBark);
  EXPECT_EQ(c.original_length, 4000u);
  ASSERT_EQ(Invoke({"synthesize", Path("p.coef"), Path("p.wav")}).code, kExitOk);
  EXPECT_LE(RelativeDiff(io::ReadWav(Path("p.wav")).samples, original), 1e-6);
}

TEST_F(CliTest, CorruptContainerIsDataError) {
  const std::string in = WriteFixture(2000);
  ASSERT_EQ(Invoke({"analyze", in, Path("a.coef")}).code, kExitOk);
  std::vector<std::uint8_t> bytes = io::ReadFileBytes(Path("a.coef"));
  bytes.resize(bytes.size() - 16);
  io::WriteFileBytes(Path("cut.coef"), bytes);
  EXPECT_EQ(Invoke({"synthesize", Path("cut.coef"), Path("o.wav")}).code, kExitDataError);
  io::WriteFileBytes(Path("junk.wav"), std::vector<std::uint8_t>{'R', 'I', 'F', 'F'});
  EXPECT_EQ(Invoke({"analyze", Path("junk.wav"), Path("o.coef")}).code, kExitDataError);
}

TEST_F(CliTest, SpectrogramPeaksAtToneChannel) {
  const std::string in = WriteFixture(8000);
  const Outcome r = Invoke({"spectrogram", in, Path("s.csv")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::vector<std::uint8_t> bytes = io::ReadFileBytes(Path("s.csv"));
  std::istringstream text(std::string(bytes.begin(), bytes.end()));
  std::string line, cell;
  std::getline(text, line);
  RealVector centers;
  for (std::istringstream header(line); std::getline(header, cell, ',');) {
    centers.push_back(io::ParseDouble(cell));
  }
  RealVector peak;
  while (std::getline(text, line)) {
    double best = -1e300;
    for (std::istringstream row(line); std::getline(row, cell, ',');) {
      best = std::max(best, io::ParseDouble(cell));
    }
    peak.push_back(best);
  }
  ASSERT_EQ(peak.size(), centers.size());
  const std::size_t k = std::max_element(peak.begin(), peak.end()) - peak.begin();
  EXPECT_NEAR(centers[k], 440.0, 20.0);
  ASSERT_EQ(Invoke({"spectrogram", "--format", "pgm", in, Path("s.pgm")}).code, kExitOk);
  const std::vector<std::uint8_t> pgm = io::ReadFileBytes(Path("s.pgm"));
  EXPECT_EQ(std::string(pgm.begin(), pgm.begin() + 3), "P5\n");
}

TEST_F(CliTest, IrrelevanceFractionAndMask) {
  const std::string in = WriteFixture(8000);
  const Outcome none =
      Invoke({"irrelevance", "--offset-db", "-1000", in, Path("keep.wav")});
  ASSERT_EQ(none.code, kExitOk) << none.err;
  EXPECT_EQ(none.out, "0\n");
  const Outcome some =
      Invoke({"irrelevance", "--mask", Path("m.coef"), in, Path("cut.wav")});
  ASSERT_EQ(some.code, kExitOk) << some.err;
  const double fraction = io::ParseDouble(some.out.substr(0, some.out.size() - 1));
  EXPECT_GT(fraction, 0.0);
  EXPECT_LT(fraction, 1.0);
  const io::CoefficientContainer mask = io::ReadContainer(Path("m.coef"));
  EXPECT_TRUE(mask.binary_mask);
  std::size_t zeros = 0, total = 0;
  for (const ComplexVector& row : mask.coefficients) {
    for (const Complex& v : row) {
      EXPECT_TRUE(v == Complex(0.0) || v == Complex(1.0));
      zeros += v == Complex(0.0);
      ++total;
    }
  }
  EXPECT_EQ(static_cast<double>(zeros) / total, fraction);
  // A mask is not a coefficient set.
  EXPECT_EQ(Invoke({"synthesize", Path("m.coef"), Path("x.wav")}).code, kExitDataError);
  EXPECT_EQ(Invoke({"irrelevance", "--spread-lower", "0", in, Path("x.wav")}).code, kExitUsage);
}

TEST(CliBinaryTest, StandaloneExecutableRuns) {
  const std::string command = std::string("\"") + AUDLET_CLI_PATH +
                              "\" diagnose --length 2048 > /dev/null";
  EXPECT_EQ(std::system(command.c_str()), 0);
}

}  // namespace
}  // namespace audlet::cli
