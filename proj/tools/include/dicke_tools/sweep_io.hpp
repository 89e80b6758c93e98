// Copyright 2026 The dicke-squeezing Authors
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

#pragma once

// Row serialization for the command-line tool. CSV carries a header and
// 17 significant digits; unbounded spectroscopic parameters are written as
// the token `inf` in both formats.

#include "dicke/scenario.hpp"

#include <optional>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dicke::io {

enum class Format { kCsv, kJson };

std::optional<Format> parse_format(std::string_view name) noexcept;

/// Column names in output order, starting with "param".
std::span<const std::string_view> sweep_columns() noexcept;

/// Shortest text of `x` at 17 significant digits; `inf`, `-inf`, `nan` for
/// non-finite values.
std::string format_number(double x);

void write_rows(std::ostream& out, std::span<const SweepRow> rows, Format format);

/// A single steady state with its parameters in place of the sweep value.
void write_state(std::ostream& out, const SystemParams& p, const SweepRow& row, Format format);

/// Parses CSV written by write_rows. Throws dicke::Error(kInvalidInput) on a
/// malformed header or row.
std::vector<SweepRow> read_csv(std::istream& in);

}  // namespace dicke::io
