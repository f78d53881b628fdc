#include "vaaprobe/modelio/store.hpp"

#include "vaaprobe/errors.hpp"

#include <fmt/format.h>
#include <json.hpp>

namespace vaaprobe {

using nlohmann::json;

std::string_view to_string(ResponseSource s) {
    switch (s) {
    case ResponseSource::Live: return "live";
    case ResponseSource::Cache: return "cache";
    case ResponseSource::Synthetic: return "synthetic";
    }
    return "synthetic";
}

ResponseSource response_source_from_string(std::string_view s) {
    if (s == "live") return ResponseSource::Live;
    if (s == "cache") return ResponseSource::Cache;
    if (s == "synthetic") return ResponseSource::Synthetic;
    throw ParseError(fmt::format("unknown response source '{}'", s));
}

std::string to_json_line(const RawResponse& r) {
    json j;
    j["template_id"] = r.key.template_id;
    j["label_order"] = to_string(r.key.label_order);
    j["statement_id"] = r.key.statement_id;
    j["variant"] = to_string(r.key.variant);
    j["sample_index"] = r.key.sample_index;
    j["text"] = r.text;
    j["source"] = to_string(r.source);
    j["timestamp"] = r.timestamp;
    return j.dump();
}

RawResponse raw_response_from_json_line(const std::string& line) {
    json j = json::parse(line); // caller handles json::exception
    RawResponse r;
    r.key.template_id = j.at("template_id").get<std::string>();
    r.key.label_order = label_order_from_string(j.at("label_order").get<std::string>());
    r.key.statement_id = j.at("statement_id").get<std::string>();
    r.key.variant = variant_kind_from_string(j.at("variant").get<std::string>());
    r.key.sample_index = j.at("sample_index").get<int>();
    r.text = j.at("text").get<std::string>();
    r.source = response_source_from_string(j.at("source").get<std::string>());
    r.timestamp = j.at("timestamp").get<std::int64_t>();
    return r;
}

namespace {

// Reads every complete record; returns the byte offset where valid content
// ends (ahead of any interrupted trailing line).
std::size_t read_records(const std::filesystem::path& path, std::vector<RawResponse>& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return 0;
    std::string line;
    std::size_t valid_end = 0;
    while (std::getline(in, line)) {
        const bool had_newline = !in.eof();
        if (line.empty()) {
            if (had_newline) valid_end += 1;
            continue;
        }
        try {
            out.push_back(raw_response_from_json_line(line));
        } catch (const std::exception&) {
            if (had_newline) {
                throw ParseError(fmt::format("response store '{}': malformed record '{}'",
                                             path.string(), line.substr(0, 80)));
            }
            break; // interrupted trailing write; drop it
        }
        if (!had_newline) break; // complete JSON but no newline: treat as partial
        valid_end += line.size() + 1;
    }
    return valid_end;
}

} // namespace

ResponseStore ResponseStore::load(const std::filesystem::path& path) {
    ResponseStore store;
    store.path_ = path;
    std::vector<RawResponse> records;
    read_records(path, records);
    for (auto& r : records) store.insert(std::move(r), false);
    return store;
}

ResponseStore ResponseStore::open_for_append(const std::filesystem::path& path) {
    ResponseStore store;
    store.path_ = path;
    if (!path.parent_path().empty()) std::filesystem::create_directories(path.parent_path());

    std::vector<RawResponse> records;
    const std::size_t valid_end = read_records(path, records);
    if (std::filesystem::exists(path) && std::filesystem::file_size(path) > valid_end) {
        std::filesystem::resize_file(path, valid_end);
    }
    for (auto& r : records) store.insert(std::move(r), false);

    store.out_.open(path, std::ios::binary | std::ios::app);
    if (!store.out_) throw ParseError(fmt::format("cannot open response store '{}' for append", path.string()));
    return store;
}

bool ResponseStore::contains(const ResponseKey& key) const {
    return index_.find(to_string(key)) != index_.end();
}

const RawResponse* ResponseStore::find(const ResponseKey& key) const {
    auto it = index_.find(to_string(key));
    return it == index_.end() ? nullptr : &order_[it->second];
}

void ResponseStore::append(const RawResponse& response) { insert(response, true); }

void ResponseStore::insert(RawResponse response, bool write_through) {
    std::string key = to_string(response.key);
    auto [it, fresh] = index_.emplace(std::move(key), order_.size());
    if (!fresh) {
        throw ValidationError(fmt::format("response store: duplicate key '{}'", to_string(response.key)));
    }
    if (write_through && out_.is_open()) {
        out_ << to_json_line(response) << '\n';
        out_.flush();
    }
    order_.push_back(std::move(response));
}

} // namespace vaaprobe
