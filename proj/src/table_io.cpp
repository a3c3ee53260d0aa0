#include "imark/table_io.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

#include "imark/errors.hpp"

namespace imark {

namespace {

constexpr std::array<char, 4> kMagic{'I', 'M', 'G', 'T'};

void put_u64(std::ostream& out, std::uint64_t v) {
  std::array<char, 8> b;
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b.data(), b.size());
}

std::uint64_t get_u64(std::istream& in) {
  std::array<unsigned char, 8> b;
  if (!in.read(reinterpret_cast<char*>(b.data()), b.size()))
    throw Error(ErrorCode::BadCacheFile, "truncated table file");
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

std::vector<std::int64_t> get_set(std::istream& in) {
  std::uint64_t len = get_u64(in);
  if (len > kMaxMoveRules) throw Error(ErrorCode::BadCacheFile, "implausible set length");
  std::vector<std::int64_t> v(len);
  for (auto& x : v) {
    std::uint64_t raw = get_u64(in);
    if (raw > static_cast<std::uint64_t>(INT64_MAX))
      throw Error(ErrorCode::BadCacheFile, "set element out of range");
    x = static_cast<std::int64_t>(raw);
  }
  return v;
}

}  // namespace

void write_table(std::ostream& out, const GrundyTable& table) {
  out.write(kMagic.data(), kMagic.size());
  out.put(static_cast<char>(kTableFormatVersion));
  for (const auto* set : {&table.spec().subtractions(), &table.spec().divisors()}) {
    put_u64(out, set->size());
    for (Heap v : *set) put_u64(out, v);
  }
  put_u64(out, table.limit());
  auto vals = table.values();
  out.write(reinterpret_cast<const char*>(vals.data()), static_cast<std::streamsize>(vals.size()));
}

GrundyTable read_table(std::istream& in) {
  std::array<char, 4> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic)
    throw Error(ErrorCode::BadCacheFile, "missing IMGT magic");
  int version = in.get();
  if (version != kTableFormatVersion)
    throw Error(ErrorCode::BadCacheFile, "unsupported table version " + std::to_string(version));
  auto s = get_set(in);
  auto d = get_set(in);
  GameSpec spec = [&] {
    try {
      return GameSpec::make(s, d);
    } catch (const Error& e) {
      throw Error(ErrorCode::BadCacheFile, std::string("invalid spec in table: ") + e.what());
    }
  }();
  std::uint64_t limit = get_u64(in);
  if (limit >= kDefaultOracleBudget * 100)
    throw Error(ErrorCode::BadCacheFile, "implausible table limit");
  std::vector<std::uint8_t> vals(limit + 1);
  if (!in.read(reinterpret_cast<char*>(vals.data()), static_cast<std::streamsize>(vals.size())))
    throw Error(ErrorCode::BadCacheFile, "truncated g-values");
  return GrundyTable(std::move(spec), std::move(vals));
}

void save_table(const std::filesystem::path& path, const GrundyTable& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::BadCacheFile, "cannot open " + path.string() + " for writing");
  write_table(out, table);
  if (!out) throw Error(ErrorCode::BadCacheFile, "write failed for " + path.string());
}

GrundyTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::BadCacheFile, "cannot open " + path.string());
  return read_table(in);
}

void write_table_csv(std::ostream& out, const GrundyTable& table) {
  out << "n,g\n";
  for (Heap n = 0; n <= table.limit(); ++n) out << n << ',' << table[n] << '\n';
}

std::string cache_file_name(const GameSpec& spec) {
  std::string name = "imark_s";
  for (std::size_t i = 0; i < spec.subtractions().size(); ++i)
    name += (i ? "-" : "") + std::to_string(spec.subtractions()[i]);
  name += "_d";
  for (std::size_t i = 0; i < spec.divisors().size(); ++i)
    name += (i ? "-" : "") + std::to_string(spec.divisors()[i]);
  return name + ".imgt";
}

}  // namespace imark
