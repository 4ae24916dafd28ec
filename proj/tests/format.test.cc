// Copyright 2026 The paulilearn Authors
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

#include "paulilearn/format.h"

#include <cmath>
#include <limits>
#include <sstream>

#include "gtest/gtest.h"

using namespace paulilearn;

TEST(format, shortest_round_trip) {
    ASSERT_EQ(format_double(1.0), "1");
    ASSERT_EQ(format_double(0.1), "0.1");
    ASSERT_EQ(format_double(-2.5), "-2.5");
    ASSERT_EQ(format_double(1e-20), "1e-20");
    for (double v : {1.0 / 3, 0.8575, 3.0e8, 6.02214076e23, -1e-300}) {
        ASSERT_EQ(std::stod(format_double(v)), v);
    }
}

TEST(format, special_values) {
    ASSERT_EQ(format_double(std::numeric_limits<double>::quiet_NaN()), "nan");
    ASSERT_EQ(format_double(std::numeric_limits<double>::infinity()), "inf");
    ASSERT_EQ(format_double(-std::numeric_limits<double>::infinity()), "-inf");
}

TEST(format, csv_row) {
    std::ostringstream out;
    write_csv_row(out, {"a", "1", "x y"});
    ASSERT_EQ(out.str(), "a,1,x y\n");
}
