// cache.hpp
// Optional on-disk cache for factor-table segments. One file per segment:
//   magic "APL1" | lo (8 bytes LE) | hi (8 bytes LE) | spf payload | lpf payload
// with 8 bytes little-endian per entry. The cache is a pure accelerator:
// unreadable or mismatched files are ignored and the segment is re-sieved.

#pragma once

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "aplab/common.hpp"

namespace aplab::cache {

inline std::string segment_path(const std::string& dir, u64 lo, u64 hi) {
    return dir + "/seg_" + std::to_string(lo) + "_" + std::to_string(hi) + ".apl1";
}

inline void put_le64(std::vector<unsigned char>& buf, u64 v) {
    for (int i = 0; i < 8; ++i) buf.push_back(static_cast<unsigned char>(v >> (8 * i)));
}

inline u64 get_le64(const unsigned char* p) {
    u64 v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<u64>(p[i]) << (8 * i);
    return v;
}

// Returns true and fills spf/lpf (each hi-lo entries) on a cache hit.
inline bool read_segment(const std::string& dir, u64 lo, u64 hi, u64* spf, u64* lpf) {
    std::string path = segment_path(dir, lo, hi);
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) return false;
    u64 len = hi - lo;
    std::size_t expect = 4 + 16 + 2 * 8 * len;
    std::vector<unsigned char> buf(expect);
    std::size_t got = std::fread(buf.data(), 1, expect, f);
    bool extra = std::fgetc(f) != EOF;
    std::fclose(f);
    if (got != expect || extra) return false;
    if (std::memcmp(buf.data(), "APL1", 4) != 0) return false;
    if (get_le64(buf.data() + 4) != lo || get_le64(buf.data() + 12) != hi) return false;
    const unsigned char* p = buf.data() + 20;
    for (u64 i = 0; i < len; ++i, p += 8) spf[i] = get_le64(p);
    for (u64 i = 0; i < len; ++i, p += 8) lpf[i] = get_le64(p);
    return true;
}

inline void write_segment(const std::string& dir, u64 lo, u64 hi, const u64* spf, const u64* lpf) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    u64 len = hi - lo;
    std::vector<unsigned char> buf;
    buf.reserve(20 + 16 * len);
    buf.insert(buf.end(), {'A', 'P', 'L', '1'});
    put_le64(buf, lo);
    put_le64(buf, hi);
    for (u64 i = 0; i < len; ++i) put_le64(buf, spf[i]);
    for (u64 i = 0; i < len; ++i) put_le64(buf, lpf[i]);
    std::string path = segment_path(dir, lo, hi);
    std::string tmp = path + ".tmp";
    std::FILE* f = std::fopen(tmp.c_str(), "wb");
    if (!f) return;  // cache failures are non-fatal
    std::size_t wrote = std::fwrite(buf.data(), 1, buf.size(), f);
    std::fclose(f);
    if (wrote == buf.size())
        std::filesystem::rename(tmp, path, ec);
    else
        std::filesystem::remove(tmp, ec);
}

}  // namespace aplab::cache
