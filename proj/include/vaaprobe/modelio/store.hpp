#pragma once

#include "vaaprobe/modelio/key.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace vaaprobe {

enum class ResponseSource { Live, Cache, Synthetic };

std::string_view to_string(ResponseSource s);
ResponseSource response_source_from_string(std::string_view s);

struct RawResponse {
    ResponseKey key;
    std::string text;
    ResponseSource source = ResponseSource::Synthetic;
    std::int64_t timestamp = 0; // unix seconds; 0 for deterministic sources
};

std::string to_json_line(const RawResponse& r);
RawResponse raw_response_from_json_line(const std::string& line);

// Append-only JSONL store, at most one record per key. A trailing partial
// line (interrupted write) is dropped on load and truncated away when the
// store is opened for appending, so an interrupted run can resume into a
// file identical to an uninterrupted one.
class ResponseStore {
public:
    ResponseStore() = default;

    static ResponseStore load(const std::filesystem::path& path);
    static ResponseStore open_for_append(const std::filesystem::path& path);

    bool contains(const ResponseKey& key) const;
    const RawResponse* find(const ResponseKey& key) const;
    void append(const RawResponse& response); // writes through when file-backed

    std::size_t size() const { return order_.size(); }
    const std::vector<RawResponse>& records() const { return order_; }
    const std::filesystem::path& path() const { return path_; }

private:
    void insert(RawResponse response, bool write_through);

    std::unordered_map<std::string, std::size_t> index_; // key string -> position
    std::vector<RawResponse> order_;                     // in append order
    std::filesystem::path path_;
    std::ofstream out_;
};

} // namespace vaaprobe
