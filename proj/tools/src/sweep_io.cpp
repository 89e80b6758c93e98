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

#include "dicke_tools/sweep_io.hpp"

#include "dicke/error.hpp"

#include "json.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <sstream>

namespace dicke::io {
namespace {

constexpr std::array<std::string_view, 14> kColumns = {
    "param",   "rho_ee",  "rho_ss",  "rho_eg",  "rho_gg",  "rho_es",    "rho_sg",
    "alpha",   "xi_s_n1", "xi_s_n2", "xi_r_n1", "xi_r_n2", "measure_e", "pt_min_eigenvalue"};

std::array<double, 14> fields(const SweepRow& r) {
  return {r.param,   r.rho_ee,  r.rho_ss,  r.rho_eg,  r.rho_gg,    r.rho_es, r.rho_sg,
          r.alpha,   r.xi_s_n1, r.xi_s_n2, r.xi_r_n1, r.xi_r_n2, r.measure_e, r.pt_min_eigenvalue};
}

SweepRow from_fields(const std::array<double, 14>& f) {
  return {f[0], f[1], f[2], f[3], f[4], f[5], f[6], f[7], f[8], f[9], f[10], f[11], f[12], f[13]};
}

nlohmann::ordered_json json_number(double x) {
  if (std::isfinite(x)) return x;
  return format_number(x);
}

double parse_number(std::string_view s) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  double x = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc{} || end != s.data() + s.size())
    throw Error(ErrorKind::kInvalidInput, "malformed number '" + std::string(s) + "'");
  return x;
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) noexcept {
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  return std::nullopt;
}

std::span<const std::string_view> sweep_columns() noexcept { return kColumns; }

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                 std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

void write_rows(std::ostream& out, std::span<const SweepRow> rows, Format format) {
  if (format == Format::kCsv) {
    for (std::size_t i = 0; i < kColumns.size(); ++i) out << (i ? "," : "") << kColumns[i];
    out << '\n';
    for (const auto& r : rows) {
      const auto f = fields(r);
      for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << format_number(f[i]);
      out << '\n';
    }
    return;
  }
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    const auto f = fields(r);
    for (std::size_t i = 0; i < f.size(); ++i) j[std::string(kColumns[i])] = json_number(f[i]);
    out << j.dump() << '\n';
  }
}

void write_state(std::ostream& out, const SystemParams& p, const SweepRow& row, Format format) {
  const std::array<std::pair<std::string_view, double>, 4> head = {
      {{"omega", p.omega}, {"gamma", p.gamma}, {"n_ph", p.n_ph}, {"m_corr", p.m_corr.real()}}};
  const auto f = fields(row);
  if (format == Format::kCsv) {
    for (std::size_t i = 0; i < head.size(); ++i) out << (i ? "," : "") << head[i].first;
    for (std::size_t i = 1; i < kColumns.size(); ++i) out << ',' << kColumns[i];
    out << '\n';
    for (std::size_t i = 0; i < head.size(); ++i)
      out << (i ? "," : "") << format_number(head[i].second);
    for (std::size_t i = 1; i < f.size(); ++i) out << ',' << format_number(f[i]);
    out << '\n';
    return;
  }
  nlohmann::ordered_json j;
  for (const auto& [k, v] : head) j[std::string(k)] = json_number(v);
  for (std::size_t i = 1; i < f.size(); ++i) j[std::string(kColumns[i])] = json_number(f[i]);
  out << j.dump() << '\n';
}

std::vector<SweepRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw Error(ErrorKind::kInvalidInput, "empty input: expected a CSV header");
  std::string expected;
  for (std::size_t i = 0; i < kColumns.size(); ++i) (expected += (i ? "," : "")) += kColumns[i];
  if (line != expected) throw Error(ErrorKind::kInvalidInput, "unexpected CSV header: " + line);

  std::vector<SweepRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::array<double, 14> f{};
    std::size_t col = 0;
    std::string_view rest = line;
    while (true) {
      const auto comma = rest.find(',');
      if (col >= f.size())
        throw Error(ErrorKind::kInvalidInput, "too many fields on line " + std::to_string(line_no));
      f[col++] = parse_number(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (col != f.size())
      throw Error(ErrorKind::kInvalidInput, "expected 14 fields on line " + std::to_string(line_no));
    rows.push_back(from_fields(f));
  }
  return rows;
}

}  // namespace dicke::io
