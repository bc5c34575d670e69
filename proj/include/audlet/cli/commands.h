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

// The `audlet` command line tool, kept in the library so tests can drive it
// in-process.

#ifndef AUDLET_CLI_COMMANDS_H_
#define AUDLET_CLI_COMMANDS_H_

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "audlet/error.h"
#include "audlet/filterbank.h"
#include "audlet/masking.h"

namespace audlet::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitNotAFrame = 2,
  kExitUsage = 64,
  kExitDataError = 65,
  kExitSoftware = 70,
  kExitIoError = 74,
};

int ExitCodeFor(const Error& error);

struct BankOptions {
  AudletParams params;
  bool parseval = false;
};

struct SynthesisOptions {
  std::string method = "dual";  // dual | cg | neumann
  double tolerance = 1e-10;
};

// Builds the AUDlet bank for `params` (with length set), optionally
// normalized to a Parseval frame.
FilterBank BuildBank(const BankOptions& options);

int RunDiagnose(const BankOptions& options, const std::string& bounds_method,
                std::ostream& out, std::ostream& err);
int RunAnalyze(const std::string& wav_path, const BankOptions& options,
               const std::string& out_path, std::ostream& out, std::ostream& err);
int RunSynthesize(const std::string& container_path, const std::string& wav_path,
                  const SynthesisOptions& synthesis, std::ostream& out,
                  std::ostream& err);
int RunSpectrogram(const std::string& wav_path, const BankOptions& options,
                   const std::string& out_path, const std::string& format,
                   std::ostream& out, std::ostream& err);
int RunIrrelevance(const std::string& wav_path, const BankOptions& options,
                   const IrrelevanceModel& model, const SynthesisOptions& synthesis,
                   const std::string& out_wav, const std::string& out_mask,
                   std::ostream& out, std::ostream& err);

// Parses argv-style arguments (args[0] is the program name) and runs the
// selected subcommand.
int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err);

}  // namespace audlet::cli

#endif  // AUDLET_CLI_COMMANDS_H_
