#pragma once

// Binary cache layout (all integers little-endian u64 unless noted):
//   "IMGT"  magic, 4 bytes
//   version, 1 byte (currently 1)
//   |S|, then each element of S
//   |D|, then each element of D
//   N (table limit)
//   N + 1 bytes, one g-value per heap 0..N

#include <filesystem>
#include <iosfwd>
#include <string>

#include "imark/engine.hpp"

namespace imark {

inline constexpr std::uint8_t kTableFormatVersion = 1;

void write_table(std::ostream& out, const GrundyTable& table);
GrundyTable read_table(std::istream& in);

void save_table(const std::filesystem::path& path, const GrundyTable& table);
GrundyTable load_table(const std::filesystem::path& path);

// "n,g" header then one row per heap.
void write_table_csv(std::ostream& out, const GrundyTable& table);

// Stable file name for a spec inside a cache directory, e.g. "imark_s1-2_d2.imgt".
std::string cache_file_name(const GameSpec& spec);

}  // namespace imark
