#include "voa/cache.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "voa/spec_json.hpp"

namespace voa {

namespace {

constexpr char kMagic[4] = {'F', 'A', 'M', 'C'};
constexpr std::uint32_t kVersion = 1;

void write_u32(std::ostream& out, std::uint32_t v) {
    for (int k = 0; k < 4; ++k) out.put(static_cast<char>((v >> (8 * k)) & 0xff));
}

bool read_u32(std::istream& in, std::uint32_t& v) {
    v = 0;
    for (int k = 0; k < 4; ++k) {
        const int c = in.get();
        if (c == EOF) return false;
        v |= static_cast<std::uint32_t>(c) << (8 * k);
    }
    return true;
}

void write_int(std::ostream& out, const Int& v) {
    const std::string s = v.str();
    write_u32(out, static_cast<std::uint32_t>(s.size()));
    out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

bool read_int(std::istream& in, Int& v) {
    std::uint32_t len = 0;
    if (!read_u32(in, len) || len > (1u << 24)) return false;
    std::string s(len, '\0');
    in.read(s.data(), static_cast<std::streamsize>(len));
    if (!in) return false;
    try {
        v = Int(s);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

void write_matrix(std::ostream& out, const IntMat& m) {
    write_u32(out, static_cast<std::uint32_t>(m.size()));
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) write_int(out, m.at(i, j));
}

bool read_matrix(std::istream& in, IntMat& m) {
    std::uint32_t n = 0;
    if (!read_u32(in, n) || n > 4096) return false;
    m = IntMat(static_cast<int>(n));
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            if (!read_int(in, m.at(static_cast<int>(i), static_cast<int>(j)))) return false;
    return true;
}

}  // namespace

std::string cache_path(const std::string& dir, const VoaSpec& spec) {
    std::ostringstream name;
    name << std::hex << spec_content_hash(spec);
    return (std::filesystem::path(dir) / (name.str() + ".famc")).string();
}

std::optional<FusionCacheEntry> cache_load(const std::string& dir, const VoaSpec& spec) {
    std::ifstream in(cache_path(dir, spec), std::ios::binary);
    if (!in) return std::nullopt;
    char magic[4];
    in.read(magic, 4);
    if (!in || std::string(magic, 4) != std::string(kMagic, 4)) return std::nullopt;
    std::uint32_t version = 0, count = 0;
    if (!read_u32(in, version) || version != kVersion) return std::nullopt;
    if (!read_u32(in, count) || count != static_cast<std::uint32_t>(spec.size()))
        return std::nullopt;
    FusionCacheEntry entry;
    entry.fusion.resize(count);
    for (auto& m : entry.fusion)
        if (!read_matrix(in, m)) return std::nullopt;
    if (!read_matrix(in, entry.averaging)) return std::nullopt;
    return entry;
}

void cache_store(const std::string& dir, const VoaSpec& spec, const FusionCacheEntry& entry) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::ofstream out(cache_path(dir, spec), std::ios::binary | std::ios::trunc);
    if (!out) return;  // caching is best-effort
    out.write(kMagic, 4);
    write_u32(out, kVersion);
    write_u32(out, static_cast<std::uint32_t>(entry.fusion.size()));
    for (const auto& m : entry.fusion) write_matrix(out, m);
    write_matrix(out, entry.averaging);
}

}  // namespace voa
