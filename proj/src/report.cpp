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

#include "pgspan/report.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "pgspan/errors.hpp"

namespace pgspan {

std::string to_csv_row_without_millis(const SpannerReport& r) {
  std::ostringstream out;
  out << r.n << ',' << r.m_input << ',' << r.t << ',' << r.algorithm << ',' << r.strategy << ','
      << r.seed << ',' << r.m_spanner << ',' << r.rounds << ',';
  if (!r.girth_computed) {
    out << '-';
  } else if (r.girth) {
    out << *r.girth;
  } else {
    out << "inf";
  }
  out << ',' << r.degeneracy << ',';
  if (r.arboricity.exact) {
    out << *r.arboricity.exact;
  } else {
    out << r.arboricity.lower << ".." << r.arboricity.upper;
  }
  out << ',' << r.max_stretch;
  return out.str();
}

std::string to_csv_row(const SpannerReport& r) {
  std::ostringstream out;
  out << to_csv_row_without_millis(r) << ',' << std::fixed << std::setprecision(3) << r.millis;
  return out.str();
}

void write_report_csv(std::ostream& out, std::span<const SpannerReport> rows) {
  out << kReportHeader << '\n';
  for (const auto& r : rows) out << to_csv_row(r) << '\n';
}

void write_report_csv(std::span<const SpannerReport> rows, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open " + path.string() + " for writing");
  write_report_csv(out, rows);
  if (!out) throw InputError("failed writing " + path.string());
}

}  // namespace pgspan
