// Copyright 2026 The qram_repair Authors
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

#include <gtest/gtest.h>

#include <set>

#include "qrr/errors.h"
#include "qrr/repair.h"

namespace qrr {
namespace {

TEST(Address, FormatAndParseAreMsbFirst) {
    EXPECT_EQ(format_address(2, 2), "10");
    EXPECT_EQ(format_address(1, 3), "001");
    EXPECT_EQ(parse_address("10", 2), 2u);
    EXPECT_EQ(parse_address("110", 3), 6u);
    for (Address a = 0; a < 16; a++) {
        EXPECT_EQ(parse_address(format_address(a, 4), 4), a);
    }
    EXPECT_THROW(parse_address("1", 2), std::invalid_argument);
    EXPECT_THROW(parse_address("1x", 2), std::invalid_argument);
}

TEST(BuildFat, PairsFaultsWithSparesInOrder) {
    const auto fat = build_fat(DefectMap(2, {3, 1}), 2);
    ASSERT_EQ(fat.size(), 2u);
    EXPECT_EQ(fat.entries()[0], (FatEntry{1, 0}));
    EXPECT_EQ(fat.entries()[1], (FatEntry{3, 1}));
    EXPECT_EQ(fat.to_text(), "01 -> S0\n11 -> S1\n");
}

TEST(BuildFat, SingleFaultExample) {
    EXPECT_EQ(build_fat(DefectMap(2, {2}), 1).to_text(), "10 -> S0\n");
}

TEST(BuildFat, SkipsDefectiveSpares) {
    const auto fat = build_fat(DefectMap(3, {5}, {0, 1}), 3);
    ASSERT_EQ(fat.size(), 1u);
    EXPECT_EQ(fat.entries()[0], (FatEntry{5, 2}));
}

TEST(BuildFat, NoFaultsGivesEmptyTable) {
    EXPECT_TRUE(build_fat(DefectMap(2, {}), 0).empty());
    EXPECT_TRUE(build_fat(DefectMap(2, {}), 4).empty());
}

TEST(BuildFat, UnrepairableWhenSparesRunOut) {
    EXPECT_THROW(build_fat(DefectMap(2, {2, 3}), 1), Unrepairable);
    EXPECT_THROW(build_fat(DefectMap(2, {2}), 0), Unrepairable);
    EXPECT_THROW(build_fat(DefectMap(2, {2}, {0}), 1), Unrepairable);
    EXPECT_NO_THROW(build_fat(DefectMap(2, {2, 3}), 2));
}

TEST(BuildFat, RejectsOutOfRangeInputs) {
    EXPECT_THROW(DefectMap(2, {4}), std::invalid_argument);
    EXPECT_THROW(build_fat(DefectMap(2, {}, {3}), 2), std::invalid_argument);
}

TEST(FaultAddressTable, RejectsDuplicates) {
    EXPECT_THROW(FaultAddressTable(2, {{1, 0}, {1, 1}}), InvalidFat);
    EXPECT_THROW(FaultAddressTable(2, {{1, 0}, {2, 0}}), InvalidFat);
    EXPECT_THROW(FaultAddressTable(2, {{1, -1}}), InvalidFat);
}

TEST(FaultAddressTable, TextRoundTrip) {
    const FaultAddressTable fat(3, {{6, 1}, {0, 0}, {5, 3}});
    EXPECT_EQ(FaultAddressTable::from_text(fat.to_text(), 3), fat);
    const auto parsed = FaultAddressTable::from_text("# tester output\n  10 -> S0   # first\n\n11->S1\n", 2);
    EXPECT_EQ(parsed, FaultAddressTable(2, {{2, 0}, {3, 1}}));
}

TEST(FaultAddressTable, MalformedText) {
    EXPECT_THROW(FaultAddressTable::from_text("10 S0\n", 2), InvalidFat);
    EXPECT_THROW(FaultAddressTable::from_text("10 -> 0\n", 2), InvalidFat);
    EXPECT_THROW(FaultAddressTable::from_text("102 -> S0\n", 2), InvalidFat);
    EXPECT_THROW(FaultAddressTable::from_text("10 -> S0\n10 -> S1\n", 2), InvalidFat);
}

TEST(Translate, FaultyAddressesGoToSpares) {
    const FaultAddressTable fat(2, {{2, 0}});
    const auto t = translate_address(fat, 2);
    EXPECT_TRUE(t.repaired);
    EXPECT_EQ(t.location, MemoryLocation::spare(0));
    EXPECT_EQ(to_string(t.location, 2), "S0");
    const auto u = translate_address(fat, 3);
    EXPECT_FALSE(u.repaired);
    EXPECT_EQ(u.location, MemoryLocation::original(3));
    EXPECT_EQ(to_string(u.location, 2), "11");
}

TEST(Translate, BatchLeavesSparesAlone) {
    const FaultAddressTable fat(2, {{1, 1}, {3, 0}});
    const std::vector<Address> addrs{0, 1, 2, 3};
    EXPECT_EQ(translate_batch(fat, addrs),
              (std::vector{MemoryLocation::original(0), MemoryLocation::spare(1), MemoryLocation::original(2),
                           MemoryLocation::spare(0)}));
    const std::vector<MemoryLocation> locs{MemoryLocation::spare(1), MemoryLocation::original(3)};
    EXPECT_EQ(translate_batch(fat, locs), (std::vector{MemoryLocation::spare(1), MemoryLocation::spare(0)}));
}

// Every healthy logical address resolves to a distinct working cell.
TEST(Translate, RepairedMapIsInjectiveOntoHealthyCells) {
    for (uint32_t faults = 0; faults < 16; faults++) {
        std::vector<Address> bad;
        for (Address a = 0; a < 4; a++) {
            if ((faults >> a) & 1u) {
                bad.push_back(a);
            }
        }
        for (int x = static_cast<int>(bad.size()); x <= 4; x++) {
            const auto fat = build_fat(DefectMap(2, bad), x);
            std::set<MemoryLocation> seen;
            for (Address a = 0; a < 4; a++) {
                const auto loc = translate_address(fat, a).location;
                EXPECT_TRUE(seen.insert(loc).second);
                if (!loc.is_spare()) {
                    EXPECT_FALSE((faults >> loc.index) & 1u);
                }
            }
        }
    }
}

}  // namespace
}  // namespace qrr
