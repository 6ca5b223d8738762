#pragma once

// Append-only count cache: one JSON document holding (variety, p) -> count
// entries stamped with the computing method and tool version.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bnqcli {

struct CacheEntry {
    std::string variety;  // "U", "U_square", "cayley_c1", "cayley_cover_open"
    std::int64_t p = 0;
    std::int64_t count = 0;
    std::string method;
    std::string tool_version;
};

class CountCache {
public:
    // Missing file loads as an empty cache; malformed JSON throws.
    static CountCache load(const std::string& path);
    static CountCache from_json(const std::string& text);

    void save(const std::string& path) const;
    std::string to_json() const;

    std::optional<CacheEntry> lookup(const std::string& variety, std::int64_t p) const;

    // Append-only: re-inserting the same key with the same count is a no-op,
    // a different count throws std::runtime_error.
    void insert(const CacheEntry& e);

    std::size_t size() const { return entries_.size(); }
    const std::vector<CacheEntry>& entries() const { return entries_; }

private:
    std::vector<CacheEntry> entries_;
};

// Explicit flag beats the BNQ_COUNT_CACHE environment variable; nullopt
// means caching is off.
std::optional<std::string> resolve_cache_path(const std::string& flag_value);

inline constexpr const char* cache_env_var = "BNQ_COUNT_CACHE";

}  // namespace bnqcli
