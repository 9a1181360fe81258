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

#ifndef QRR_REPAIR_H
#define QRR_REPAIR_H

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qrr {

using Address = uint32_t;

/// n-bit address rendered MSB first, e.g. format_address(2, 2) == "10".
std::string format_address(Address a, int address_bits);

/// Inverse of format_address. Throws std::invalid_argument on non-binary
/// input or a width mismatch.
Address parse_address(std::string_view bits, int address_bits);

/// Result of the tester's scan: which originals and which spares are broken.
class DefectMap {
   public:
    /// Sorts and de-duplicates both lists. Throws std::invalid_argument when an
    /// address does not fit in address_bits or a spare index is negative.
    DefectMap(int address_bits, std::vector<Address> defective_originals, std::vector<int> defective_spares = {});

    int address_bits() const { return address_bits_; }
    const std::vector<Address> &defective_originals() const { return originals_; }
    const std::vector<int> &defective_spares() const { return spares_; }

   private:
    int address_bits_;
    std::vector<Address> originals_;
    std::vector<int> spares_;
};

struct FatEntry {
    Address faulty;
    int spare;

    bool operator==(const FatEntry &) const = default;
};

/// Ordered (faulty address, spare index) pairs. Faulty addresses are pairwise
/// distinct and so are spare indices.
class FaultAddressTable {
   public:
    explicit FaultAddressTable(int address_bits, std::vector<FatEntry> entries = {});

    int address_bits() const { return address_bits_; }
    const std::vector<FatEntry> &entries() const { return entries_; }
    size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    /// One `FA -> S<index>` line per entry, FA in binary.
    std::string to_text() const;
    /// Parses to_text() output; blank lines and '#' comments are skipped.
    static FaultAddressTable from_text(std::string_view text, int address_bits);

    bool operator==(const FaultAddressTable &) const = default;

   private:
    int address_bits_;
    std::vector<FatEntry> entries_;
};

/// Pairs defective originals (ascending) with healthy spares (ascending).
/// Throws Unrepairable when there are fewer healthy spares than broken originals.
FaultAddressTable build_fat(const DefectMap &map, int num_spares);

struct MemoryLocation {
    enum class Kind { Original, Spare };
    Kind kind = Kind::Original;
    uint32_t index = 0;

    static MemoryLocation original(uint32_t a) { return {Kind::Original, a}; }
    static MemoryLocation spare(uint32_t s) { return {Kind::Spare, s}; }
    bool is_spare() const { return kind == Kind::Spare; }

    auto operator<=>(const MemoryLocation &) const = default;
};

std::string to_string(const MemoryLocation &loc, int address_bits);

struct Translation {
    MemoryLocation location;
    bool repaired;
};

/// Faulty addresses are redirected to their spare; everything else passes through.
Translation translate_address(const FaultAddressTable &fat, Address a);

/// Element-wise translate_address over a list of addresses.
std::vector<MemoryLocation> translate_batch(const FaultAddressTable &fat, std::span<const Address> addresses);

/// Same, over locations: originals are translated, spares pass through untouched.
std::vector<MemoryLocation> translate_batch(const FaultAddressTable &fat, std::span<const MemoryLocation> locations);

}  // namespace qrr

#endif  // QRR_REPAIR_H
