// Copyright 2026 The pgspan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include "pgspan/pg_analysis.hpp"

namespace pgspan {

/// One CSV row per constructed spanner.
struct SpannerReport {
  VertexId n = 0;
  std::size_t m_input = 0;
  int t = 0;
  std::string algorithm;  // "seq" or "par"
  std::string strategy;
  std::uint64_t seed = 0;
  std::size_t m_spanner = 0;
  std::size_t rounds = 0;
  /// Not computed when nullopt and girth_computed is false; infinite for forests otherwise.
  std::optional<std::uint32_t> girth;
  bool girth_computed = true;
  std::uint32_t degeneracy = 0;
  ArboricityResult arboricity;
  std::string max_stretch;
  double millis = 0.0;
};

inline constexpr const char* kReportHeader =
    "n,m_input,t,algorithm,strategy,seed,m_spanner,rounds,girth,degeneracy,arboricity,max_stretch,"
    "millis";

/// girth: "inf" for forests, "-" when skipped. arboricity: "a" when exact,
/// "lo..hi" otherwise.
std::string to_csv_row(const SpannerReport& r);
/// The row without its trailing millis field.
std::string to_csv_row_without_millis(const SpannerReport& r);

void write_report_csv(std::ostream& out, std::span<const SpannerReport> rows);
void write_report_csv(std::span<const SpannerReport> rows, const std::filesystem::path& path);

}  // namespace pgspan
