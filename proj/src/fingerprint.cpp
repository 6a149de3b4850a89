#include "tab2img/fingerprint.hpp"

#include <algorithm>
#include <fstream>

#include "tab2img/errors.hpp"

namespace tab2img {

std::string to_hex(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

std::string subset_fingerprint(const std::string& dataset_id, std::vector<std::size_t> indices) {
    std::sort(indices.begin(), indices.end());
    std::uint64_t h = fnv1a64(dataset_id.data(), dataset_id.size());
    for (std::size_t idx : indices) {
        std::uint64_t v = idx;
        h = fnv1a64(&v, sizeof(v), h);
    }
    return to_hex(h);
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot read file for digest: " + path);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char buf[65536];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        h = fnv1a64(buf, static_cast<std::size_t>(in.gcount()), h);
        if (!in) break;
    }
    return "fnv64:" + to_hex(h);
}

}  // namespace tab2img
