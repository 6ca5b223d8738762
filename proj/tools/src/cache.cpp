#include "bnqcli/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "bnq/version.hpp"

namespace bnqcli {

using nlohmann::json;

CountCache CountCache::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) return CountCache{};
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

CountCache CountCache::from_json(const std::string& text) {
    CountCache cache;
    const json doc = json::parse(text);
    for (const auto& e : doc.at("entries")) {
        CacheEntry entry;
        entry.variety = e.at("variety").get<std::string>();
        entry.p = e.at("p").get<std::int64_t>();
        entry.count = e.at("count").get<std::int64_t>();
        entry.method = e.at("method").get<std::string>();
        entry.tool_version = e.at("tool_version").get<std::string>();
        cache.insert(entry);
    }
    return cache;
}

std::string CountCache::to_json() const {
    json doc;
    doc["tool_version"] = bnq::tool_version;
    doc["entries"] = json::array();
    for (const auto& e : entries_)
        doc["entries"].push_back({{"variety", e.variety},
                                  {"p", e.p},
                                  {"count", e.count},
                                  {"method", e.method},
                                  {"tool_version", e.tool_version}});
    return doc.dump(2);
}

void CountCache::save(const std::string& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + path);
    out << to_json() << '\n';
}

std::optional<CacheEntry> CountCache::lookup(const std::string& variety,
                                             std::int64_t p) const {
    for (const auto& e : entries_)
        if (e.variety == variety && e.p == p) return e;
    return std::nullopt;
}

void CountCache::insert(const CacheEntry& e) {
    if (auto hit = lookup(e.variety, e.p)) {
        if (hit->count != e.count)
            throw std::runtime_error(
                "cache conflict for (" + e.variety + ", p=" + std::to_string(e.p) +
                "): stored " + std::to_string(hit->count) + ", new " +
                std::to_string(e.count));
        return;  // append-only: identical re-insertion is a no-op
    }
    entries_.push_back(e);
}

std::optional<std::string> resolve_cache_path(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv(cache_env_var); env && *env)
        return std::string(env);
    return std::nullopt;
}

}  // namespace bnqcli
