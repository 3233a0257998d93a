#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

namespace dtk {

struct CacheRecord {
    std::string key;
    std::string query_id;
    std::string reference_id;
    std::string prompt_sha256;
    std::string raw_response;
    std::string created_at;  // RFC 3339
};

// JSON-Lines response cache. Loaded fully at open; appends go through a
// single writer. The key binds the rendered prompt, so template or binding
// changes invalidate stale entries.
class ResponseCache {
public:
    explicit ResponseCache(std::string path);

    static std::string make_key(const std::string& query_id, const std::string& reference_id,
                                const std::string& prompt_sha256);

    std::optional<std::string> lookup(const std::string& key) const;
    void put(CacheRecord record);

    std::size_t size() const;
    std::size_t hits() const;
    std::size_t misses() const;
    const std::string& path() const { return path_; }

private:
    std::string path_;
    mutable std::mutex mutex_;
    std::unordered_map<std::string, std::string> entries_;
    mutable std::size_t hits_ = 0;
    mutable std::size_t misses_ = 0;
};

}  // namespace dtk
