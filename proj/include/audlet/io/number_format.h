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

#ifndef AUDLET_IO_NUMBER_FORMAT_H_
#define AUDLET_IO_NUMBER_FORMAT_H_

#include <string>
#include <string_view>

namespace audlet::io {

// 17 significant digits ("%.17g"); round-trips every double. Infinities and
// NaN print as inf / -inf / nan.
std::string FormatDouble(double value);

// Strict parse of a full token; throws Error(kFormat) on trailing garbage.
double ParseDouble(std::string_view token);

}  // namespace audlet::io

#endif  // AUDLET_IO_NUMBER_FORMAT_H_
