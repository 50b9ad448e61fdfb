// Copyright 2026 The qnir Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QNIR_IO_HPP
#define QNIR_IO_HPP

#include <string>
#include <vector>

namespace qnir {

// Shortest decimal string that round-trips to the same double ('.' decimal
// separator, no locale). All numeric file output goes through this so that
// reruns with identical config are byte-identical.
std::string format_double(double v);

double parse_double(const std::string& s);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
bool file_exists(const std::string& path);

// Minimal RFC-4180 reader for the artifact's own files: no quoted fields.
std::vector<std::vector<std::string>> read_csv(const std::string& path);

} // namespace qnir

#endif // QNIR_IO_HPP
