/*
 * Copyright 2026 The heterobench Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef HETEROBENCH_CSV_H_
#define HETEROBENCH_CSV_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace heterobench::csv {

// Shortest decimal string that parses back to exactly `value`.
std::string FormatDouble(double value);

// Strict whole-field parsers; throw ValidationError with `context` prefixed.
double ParseDouble(std::string_view field, std::string_view context);
std::int64_t ParseInt(std::string_view field, std::string_view context);
bool TryParseInt(std::string_view field, std::int64_t* out);

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view contents);

// Delimited text reader. Lines are split on '\n' (a trailing '\r' is
// stripped so CRLF raw data can be imported); fields are split on the
// delimiter without quoting. Blank lines are skipped.
class Reader {
 public:
  Reader(const std::filesystem::path& path, char delimiter = ',');

  // Advances to the next nonblank line. Returns false at end of file.
  bool Next();

  const std::vector<std::string_view>& fields() const { return fields_; }
  std::size_t line_number() const { return line_number_; }
  // "<file>:<line>" for error messages.
  std::string Where() const;

  // Throws ValidationError unless the current row has `count` fields.
  void ExpectFields(std::size_t count) const;

 private:
  std::string name_;
  std::string contents_;
  char delimiter_;
  std::size_t pos_ = 0;
  std::size_t line_number_ = 0;
  std::vector<std::string_view> fields_;
};

// Builds canonical output: comma-separated, LF-terminated rows.
class Writer {
 public:
  Writer& Field(std::string_view text);
  Writer& Field(std::int64_t value);
  Writer& Field(double value);
  Writer& EndRow();

  const std::string& str() const { return out_; }

 private:
  std::string out_;
  bool row_started_ = false;
};

}  // namespace heterobench::csv

#endif  // HETEROBENCH_CSV_H_
