// Copyright 2026 The mutfl Authors
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

#include "mutfl/matrix_io.h"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mutfl/error.h"

namespace mutfl {

namespace {

using json = nlohmann::json;

constexpr std::string_view kTestPrefix = "t:";

[[noreturn]] void FormatFail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kFormatError,
              "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> SplitCsvLine(std::string_view line,
                                      std::size_t line_no) {
  std::vector<std::string> fields;
  std::string field;
  std::size_t i = 0;
  while (true) {
    field.clear();
    if (i < line.size() && line[i] == '"') {
      ++i;
      while (true) {
        if (i >= line.size()) FormatFail(line_no, "unterminated quoted field");
        if (line[i] == '"') {
          if (i + 1 < line.size() && line[i + 1] == '"') {
            field.push_back('"');
            i += 2;
            continue;
          }
          ++i;
          break;
        }
        field.push_back(line[i++]);
      }
      if (i < line.size() && line[i] != ',') {
        FormatFail(line_no, "unexpected character after quoted field");
      }
    } else {
      while (i < line.size() && line[i] != ',') {
        if (line[i] == '"') FormatFail(line_no, "stray quote in field");
        field.push_back(line[i++]);
      }
    }
    fields.push_back(field);
    if (i >= line.size()) break;
    ++i;  // ','
  }
  return fields;
}

std::string CsvField(std::string_view value) {
  if (value.find_first_of(",\"\n") == std::string_view::npos) {
    return std::string(value);
  }
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

}  // namespace

MatrixFormat FormatFromPath(const std::filesystem::path& path) {
  return path.extension() == ".json" ? MatrixFormat::kJson : MatrixFormat::kCsv;
}

KillMatrix ParseMatrixCsv(std::string_view text) {
  auto lines = SplitLines(text);
  if (lines.empty() || lines[0].empty()) FormatFail(1, "missing header");
  auto header = SplitCsvLine(lines[0], 1);
  static const std::vector<std::string> kFixed = {"mutant_id", "method",
                                                  "operator", "description"};
  if (header.size() < kFixed.size() ||
      !std::equal(kFixed.begin(), kFixed.end(), header.begin())) {
    FormatFail(1, "header must start with mutant_id,method,operator,description");
  }
  std::vector<TestId> tests;
  std::set<std::string> seen_tests;
  for (std::size_t c = kFixed.size(); c < header.size(); ++c) {
    const std::string& col = header[c];
    if (!col.starts_with(kTestPrefix) || col.size() == kTestPrefix.size()) {
      FormatFail(1, "test column '" + col + "' must be 't:<name>'");
    }
    std::string name = col.substr(kTestPrefix.size());
    if (!seen_tests.insert(name).second) {
      FormatFail(1, "duplicate test '" + name + "'");
    }
    tests.push_back(std::move(name));
  }

  std::vector<MutantRecord> mutants;
  std::vector<std::uint8_t> kills;
  std::set<std::string> seen_mutants;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const std::size_t line_no = l + 1;
    auto fields = SplitCsvLine(lines[l], line_no);
    if (fields.size() != header.size()) {
      FormatFail(line_no, "expected " + std::to_string(header.size()) +
                              " fields, found " + std::to_string(fields.size()));
    }
    MutantRecord rec{fields[0], fields[1], fields[2], fields[3]};
    if (rec.id.empty()) FormatFail(line_no, "empty mutant id");
    if (rec.method.empty()) FormatFail(line_no, "empty method");
    if (!IsKnownOperatorTag(rec.op)) {
      FormatFail(line_no, "unknown operator '" + rec.op + "'");
    }
    if (!seen_mutants.insert(rec.id).second) {
      FormatFail(line_no, "duplicate mutant '" + rec.id + "'");
    }
    for (std::size_t c = kFixed.size(); c < fields.size(); ++c) {
      if (fields[c] == "0") {
        kills.push_back(0);
      } else if (fields[c] == "1") {
        kills.push_back(1);
      } else {
        FormatFail(line_no, "kill cell '" + fields[c] + "' is not 0 or 1");
      }
    }
    mutants.push_back(std::move(rec));
  }
  return KillMatrix(std::move(tests), std::move(mutants), std::move(kills));
}

std::string WriteMatrixCsv(const KillMatrix& matrix) {
  std::string out = "mutant_id,method,operator,description";
  for (const auto& t : matrix.tests()) {
    out += ',';
    out += CsvField(std::string(kTestPrefix) + t);
  }
  out += '\n';
  for (std::size_t m = 0; m < matrix.num_mutants(); ++m) {
    const MutantRecord& rec = matrix.mutants()[m];
    out += CsvField(rec.id) + ',' + CsvField(rec.method) + ',' +
           CsvField(rec.op) + ',' + CsvField(rec.description);
    for (std::uint8_t cell : matrix.row(m)) {
      out += cell ? ",1" : ",0";
    }
    out += '\n';
  }
  return out;
}

KillMatrix ParseMatrixJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kFormatError, e.what());
  }
  try {
    auto tests = doc.at("tests").get<std::vector<TestId>>();
    std::vector<MethodId> methods;
    if (doc.contains("methods")) {
      methods = doc.at("methods").get<std::vector<MethodId>>();
    }
    std::vector<MutantRecord> mutants;
    std::vector<std::uint8_t> kills;
    for (const auto& m : doc.at("mutants")) {
      MutantRecord rec{m.at("id").get<std::string>(),
                       m.at("method").get<std::string>(),
                       m.at("operator").get<std::string>(),
                       m.value("description", std::string())};
      if (!IsKnownOperatorTag(rec.op)) {
        throw Error(ErrorCode::kFormatError,
                    "mutant '" + rec.id + "': unknown operator '" + rec.op + "'");
      }
      const auto& row = m.at("kills");
      if (row.size() != tests.size()) {
        throw Error(ErrorCode::kFormatError,
                    "mutant '" + rec.id + "': kills has " +
                        std::to_string(row.size()) + " entries, expected " +
                        std::to_string(tests.size()));
      }
      for (const auto& cell : row) {
        if (!cell.is_number_integer() || (cell != 0 && cell != 1)) {
          throw Error(ErrorCode::kFormatError,
                      "mutant '" + rec.id + "': kill cell is not 0 or 1");
        }
        kills.push_back(cell.get<int>() == 1 ? 1 : 0);
      }
      mutants.push_back(std::move(rec));
    }
    return KillMatrix(std::move(tests), std::move(mutants), std::move(kills),
                      std::move(methods));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kFormatError, e.what());
  }
}

std::string WriteMatrixJson(const KillMatrix& matrix) {
  json doc;
  doc["tests"] = matrix.tests();
  doc["methods"] = matrix.methods();
  json mutants = json::array();
  for (std::size_t m = 0; m < matrix.num_mutants(); ++m) {
    const MutantRecord& rec = matrix.mutants()[m];
    std::vector<int> row(matrix.row(m).begin(), matrix.row(m).end());
    mutants.push_back({{"id", rec.id},
                       {"method", rec.method},
                       {"operator", rec.op},
                       {"description", rec.description},
                       {"kills", row}});
  }
  doc["mutants"] = std::move(mutants);
  return doc.dump(2) + "\n";
}

KillMatrix LoadMatrix(const std::filesystem::path& path, MatrixFormat format) {
  std::string text = ReadTextFile(path);
  return format == MatrixFormat::kJson ? ParseMatrixJson(text)
                                       : ParseMatrixCsv(text);
}

KillMatrix LoadMatrix(const std::filesystem::path& path) {
  return LoadMatrix(path, FormatFromPath(path));
}

void SaveMatrix(const KillMatrix& matrix, const std::filesystem::path& path,
                MatrixFormat format) {
  WriteTextFile(path, format == MatrixFormat::kJson ? WriteMatrixJson(matrix)
                                                    : WriteMatrixCsv(matrix));
}

void SaveMatrix(const KillMatrix& matrix, const std::filesystem::path& path) {
  SaveMatrix(matrix, path, FormatFromPath(path));
}

FailureObservation ParseObservationJson(std::string_view text) {
  try {
    json doc = json::parse(text);
    FailureObservation obs;
    for (const auto& t : doc.at("failing")) obs.failing.insert(t.get<TestId>());
    if (doc.contains("passing") && !doc.at("passing").is_null()) {
      std::set<TestId> passing;
      for (const auto& t : doc.at("passing")) passing.insert(t.get<TestId>());
      obs.passing = std::move(passing);
    }
    return obs;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kFormatError, e.what());
  }
}

std::string WriteObservationJson(const FailureObservation& obs) {
  json doc;
  doc["failing"] = obs.failing;
  if (obs.passing) doc["passing"] = *obs.passing;
  return doc.dump(2) + "\n";
}

FailureObservation LoadObservation(const std::filesystem::path& path) {
  return ParseObservationJson(ReadTextFile(path));
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIoError, "cannot write '" + path.string() + "'");
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) {
    throw Error(ErrorCode::kIoError, "write failed for '" + path.string() + "'");
  }
}

}  // namespace mutfl
