#ifndef TAB2IMG_FINGERPRINT_HPP
#define TAB2IMG_FINGERPRINT_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace tab2img {

// FNV-1a 64-bit. Used for run manifests and leakage-guard fingerprints;
// not a cryptographic hash.
inline std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t h = 0xcbf29ce484222325ULL) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

std::string to_hex(std::uint64_t v);

// Fingerprint of a training subset: dataset id plus the sorted sample indices.
// Binners and t-SNE maps record this so the evaluation layer can verify that
// every fitted artifact saw exactly the training fold and nothing else.
std::string subset_fingerprint(const std::string& dataset_id, std::vector<std::size_t> indices);

// Hash of a whole file, as "fnv64:<hex>". Throws on unreadable path.
std::string file_digest(const std::string& path);

}  // namespace tab2img

#endif
