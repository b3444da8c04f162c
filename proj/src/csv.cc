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

#include "heterobench/csv.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "heterobench/error.h"

namespace heterobench::csv {

std::string FormatDouble(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

double ParseDouble(std::string_view field, std::string_view context) {
  double value = 0.0;
  const char* end = field.data() + field.size();
  const auto result = std::from_chars(field.data(), end, value);
  if (field.empty() || result.ec != std::errc() || result.ptr != end) {
    throw ValidationError(std::string(context) + ": '" + std::string(field) +
                          "' is not a number");
  }
  return value;
}

bool TryParseInt(std::string_view field, std::int64_t* out) {
  const char* end = field.data() + field.size();
  const auto result = std::from_chars(field.data(), end, *out);
  return !field.empty() && result.ec == std::errc() && result.ptr == end;
}

std::int64_t ParseInt(std::string_view field, std::string_view context) {
  std::int64_t value = 0;
  if (!TryParseInt(field, &value)) {
    throw ValidationError(std::string(context) + ": '" + std::string(field) +
                          "' is not an integer");
  }
  return value;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error while reading " + path.string());
  return std::move(ss).str();
}

void WriteFile(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("error while writing " + path.string());
}

Reader::Reader(const std::filesystem::path& path, char delimiter)
    : name_(path.string()), contents_(ReadFile(path)), delimiter_(delimiter) {}

bool Reader::Next() {
  while (pos_ < contents_.size()) {
    std::size_t eol = contents_.find('\n', pos_);
    if (eol == std::string::npos) eol = contents_.size();
    std::string_view line(contents_.data() + pos_, eol - pos_);
    pos_ = eol + 1;
    ++line_number_;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    fields_.clear();
    std::size_t start = 0;
    for (;;) {
      const std::size_t cut = line.find(delimiter_, start);
      if (cut == std::string_view::npos) {
        fields_.push_back(line.substr(start));
        break;
      }
      fields_.push_back(line.substr(start, cut - start));
      start = cut + 1;
    }
    return true;
  }
  return false;
}

std::string Reader::Where() const {
  return name_ + ":" + std::to_string(line_number_);
}

void Reader::ExpectFields(std::size_t count) const {
  if (fields_.size() != count) {
    throw ValidationError(Where() + ": expected " + std::to_string(count) +
                          " fields, found " + std::to_string(fields_.size()));
  }
}

Writer& Writer::Field(std::string_view text) {
  if (row_started_) out_ += ',';
  out_ += text;
  row_started_ = true;
  return *this;
}

Writer& Writer::Field(std::int64_t value) { return Field(std::to_string(value)); }

Writer& Writer::Field(double value) { return Field(FormatDouble(value)); }

Writer& Writer::EndRow() {
  out_ += '\n';
  row_started_ = false;
  return *this;
}

}  // namespace heterobench::csv
