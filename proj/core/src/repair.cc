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

#include "qrr/repair.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qrr/errors.h"

namespace qrr {

namespace {

void check_width(int address_bits) {
    if (address_bits < 0 || address_bits > 31) {
        throw std::invalid_argument("address width must lie in [0, 31], got " + std::to_string(address_bits));
    }
}

void check_fits(Address a, int address_bits) {
    if (address_bits < 32 && (static_cast<uint64_t>(a) >> address_bits) != 0) {
        throw std::invalid_argument("address " + std::to_string(a) + " does not fit in " +
                                    std::to_string(address_bits) + " bits");
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

}  // namespace

std::string format_address(Address a, int address_bits) {
    std::string out(static_cast<size_t>(address_bits), '0');
    for (int b = 0; b < address_bits; b++) {
        if ((a >> b) & 1u) {
            out[static_cast<size_t>(address_bits - 1 - b)] = '1';
        }
    }
    return out;
}

Address parse_address(std::string_view bits, int address_bits) {
    check_width(address_bits);
    if (static_cast<int>(bits.size()) != address_bits) {
        throw std::invalid_argument("address '" + std::string(bits) + "' is not " + std::to_string(address_bits) +
                                    " bits wide");
    }
    Address a = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("address '" + std::string(bits) + "' is not binary");
        }
        a = (a << 1) | static_cast<Address>(c - '0');
    }
    return a;
}

DefectMap::DefectMap(int address_bits, std::vector<Address> defective_originals, std::vector<int> defective_spares)
    : address_bits_(address_bits), originals_(std::move(defective_originals)), spares_(std::move(defective_spares)) {
    check_width(address_bits);
    for (Address a : originals_) {
        check_fits(a, address_bits);
    }
    for (int s : spares_) {
        if (s < 0) {
            throw std::invalid_argument("spare index must be >= 0");
        }
    }
    std::sort(originals_.begin(), originals_.end());
    originals_.erase(std::unique(originals_.begin(), originals_.end()), originals_.end());
    std::sort(spares_.begin(), spares_.end());
    spares_.erase(std::unique(spares_.begin(), spares_.end()), spares_.end());
}

FaultAddressTable::FaultAddressTable(int address_bits, std::vector<FatEntry> entries)
    : address_bits_(address_bits), entries_(std::move(entries)) {
    check_width(address_bits);
    std::set<Address> seen_fa;
    std::set<int> seen_sa;
    for (const auto &e : entries_) {
        check_fits(e.faulty, address_bits);
        if (e.spare < 0) {
            throw InvalidFat("spare index must be >= 0");
        }
        if (!seen_fa.insert(e.faulty).second) {
            throw InvalidFat("faulty address " + format_address(e.faulty, address_bits) + " listed twice");
        }
        if (!seen_sa.insert(e.spare).second) {
            throw InvalidFat("spare S" + std::to_string(e.spare) + " assigned twice");
        }
    }
}

std::string FaultAddressTable::to_text() const {
    std::string out;
    for (const auto &e : entries_) {
        out += format_address(e.faulty, address_bits_) + " -> S" + std::to_string(e.spare) + "\n";
    }
    return out;
}

FaultAddressTable FaultAddressTable::from_text(std::string_view text, int address_bits) {
    std::vector<FatEntry> entries;
    size_t line_no = 0;
    while (!text.empty()) {
        const size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        line_no++;
        if (const size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const size_t arrow = line.find("->");
        if (arrow == std::string_view::npos) {
            throw InvalidFat("FAT line " + std::to_string(line_no) + ": missing '->'");
        }
        const auto fa = trim(line.substr(0, arrow));
        const auto sa = trim(line.substr(arrow + 2));
        if (sa.size() < 2 || sa.front() != 'S' ||
            !std::all_of(sa.begin() + 1, sa.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw InvalidFat("FAT line " + std::to_string(line_no) + ": expected S<index>, got '" + std::string(sa) +
                             "'");
        }
        try {
            entries.push_back({parse_address(fa, address_bits), std::stoi(std::string(sa.substr(1)))});
        } catch (const std::invalid_argument &e) {
            throw InvalidFat("FAT line " + std::to_string(line_no) + ": " + e.what());
        } catch (const std::out_of_range &) {
            throw InvalidFat("FAT line " + std::to_string(line_no) + ": spare index out of range");
        }
    }
    return FaultAddressTable(address_bits, std::move(entries));
}

FaultAddressTable build_fat(const DefectMap &map, int num_spares) {
    if (num_spares < 0) {
        throw std::invalid_argument("number of spares must be >= 0");
    }
    for (int s : map.defective_spares()) {
        if (s >= num_spares) {
            throw std::invalid_argument("defective spare index " + std::to_string(s) + " is not below X = " +
                                        std::to_string(num_spares));
        }
    }
    std::vector<int> healthy;
    for (int s = 0; s < num_spares; s++) {
        if (!std::binary_search(map.defective_spares().begin(), map.defective_spares().end(), s)) {
            healthy.push_back(s);
        }
    }
    const auto &faulty = map.defective_originals();
    if (faulty.size() > healthy.size()) {
        throw Unrepairable(std::to_string(faulty.size()) + " defective original(s) but only " +
                           std::to_string(healthy.size()) + " healthy spare(s)");
    }
    std::vector<FatEntry> entries;
    for (size_t i = 0; i < faulty.size(); i++) {
        entries.push_back({faulty[i], healthy[i]});
    }
    return FaultAddressTable(map.address_bits(), std::move(entries));
}

std::string to_string(const MemoryLocation &loc, int address_bits) {
    if (loc.is_spare()) {
        return "S" + std::to_string(loc.index);
    }
    return format_address(loc.index, address_bits);
}

Translation translate_address(const FaultAddressTable &fat, Address a) {
    check_fits(a, fat.address_bits());
    for (const auto &e : fat.entries()) {
        if (e.faulty == a) {
            return {MemoryLocation::spare(static_cast<uint32_t>(e.spare)), true};
        }
    }
    return {MemoryLocation::original(a), false};
}

std::vector<MemoryLocation> translate_batch(const FaultAddressTable &fat, std::span<const Address> addresses) {
    std::vector<MemoryLocation> out;
    out.reserve(addresses.size());
    for (Address a : addresses) {
        out.push_back(translate_address(fat, a).location);
    }
    return out;
}

std::vector<MemoryLocation> translate_batch(const FaultAddressTable &fat, std::span<const MemoryLocation> locations) {
    std::vector<MemoryLocation> out;
    out.reserve(locations.size());
    for (const auto &loc : locations) {
        out.push_back(loc.is_spare() ? loc : translate_address(fat, loc.index).location);
    }
    return out;
}

}  // namespace qrr
