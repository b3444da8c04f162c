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

#include <cmath>
#include <filesystem>
#include <limits>
#include <random>

#include "gtest/gtest.h"
#include "heterobench/error.h"

namespace heterobench::csv {
namespace {

TEST(CsvTest, FormatDoubleIsShortestRoundTrip) {
  EXPECT_EQ(FormatDouble(0.0), "0");
  EXPECT_EQ(FormatDouble(1.0), "1");
  EXPECT_EQ(FormatDouble(0.1), "0.1");
  EXPECT_EQ(FormatDouble(-2.5), "-2.5");

  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> dist(-1e6, 1e6);
  for (int i = 0; i < 2000; ++i) {
    const double x = dist(gen) * std::pow(10.0, static_cast<int>(gen() % 40) - 20);
    EXPECT_EQ(ParseDouble(FormatDouble(x), "test"), x);
  }
}

TEST(CsvTest, ParsersRejectPartialFields) {
  EXPECT_THROW(ParseInt("12a", "ctx"), ValidationError);
  EXPECT_THROW(ParseInt("", "ctx"), ValidationError);
  EXPECT_THROW(ParseDouble("1.5x", "ctx"), ValidationError);
  EXPECT_EQ(ParseInt("-42", "ctx"), -42);
}

TEST(CsvTest, ReaderReportsLineNumbers) {
  const auto path = std::filesystem::temp_directory_path() / "heterobench_csv_test.csv";
  WriteFile(path, "a,b\r\n1,2\n\n3\n");
  Reader reader(path);
  ASSERT_TRUE(reader.Next());
  EXPECT_EQ(reader.fields().size(), 2u);
  ASSERT_TRUE(reader.Next());
  EXPECT_EQ(reader.fields()[1], "2");
  ASSERT_TRUE(reader.Next());
  EXPECT_EQ(reader.line_number(), 4u);
  try {
    reader.ExpectFields(2);
    FAIL() << "expected a field-count error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find(":4"), std::string::npos);
  }
  EXPECT_FALSE(reader.Next());
  std::filesystem::remove(path);
}

TEST(CsvTest, MissingFileIsIoError) {
  EXPECT_THROW(Reader("/nonexistent/heterobench/file.csv"), IoError);
}

}  // namespace
}  // namespace heterobench::csv
