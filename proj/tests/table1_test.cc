// Copyright 2026 The xsinc Authors.
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

#include "xsinc/harness/table1.h"

#include <algorithm>
#include <sstream>

#include "gtest/gtest.h"

namespace xsinc::harness {
namespace {

TEST(Table1Test, RowLayout) {
  const auto rows = EmitTable1();
  ASSERT_EQ(rows.size(), 18u);
  EXPECT_EQ(rows[0].c, 0.0);
  EXPECT_EQ(rows[0].theta, 1.0);
  EXPECT_EQ(rows[0].r, 0.0);
  EXPECT_EQ(rows[17].c, 2.0);
  EXPECT_EQ(rows[17].theta, 2.0);
  EXPECT_EQ(rows[17].r, 1.0);
}

TEST(Table1Test, UnbiasedRowsAreExactlyZero) {
  int unbiased = 0;
  for (const auto& row : EmitTable1()) {
    if (!row.unbiased) continue;
    ++unbiased;
    EXPECT_EQ(row.bias_grid, 0.0);
    EXPECT_EQ(row.bias_exact, 0.0);
  }
  EXPECT_EQ(unbiased, 8);
}

TEST(Table1Test, NoExclusionNeedsNoExtraScreening) {
  for (const auto& row : EmitTable1()) {
    if (row.c != 0.0) continue;
    EXPECT_EQ(row.screened_swp, 5000);
    EXPECT_EQ(row.screened_id, 5000);
  }
}

TEST(Table1Test, GridAndExactRulesClose) {
  for (const auto& row : EmitTable1()) {
    EXPECT_NEAR(row.bias_grid, row.bias_exact, 5e-5);
  }
}

TEST(Table1Test, SwpNeedsLessScreeningWithPositiveAttendance) {
  for (const auto& row : EmitTable1()) {
    if (row.c > 0.0 && row.r > 0.0) {
      EXPECT_LT(row.screened_swp, row.screened_id);
    }
    if (row.r == 0.0) {
      EXPECT_EQ(row.screened_swp, row.screened_id);
    }
  }
}

TEST(Table1Test, Csv) {
  std::ostringstream out;
  WriteTable1Csv(EmitTable1(), out);
  const std::string text = out.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 19);
}

}  // namespace
}  // namespace xsinc::harness
