#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace vaaprobe {

// Input file could not be parsed at all (bad JSON, wrong top-level shape).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Parsed fine but violates a documented invariant. The message names the
// first violated invariant.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class NetworkError : public std::runtime_error {
public:
    explicit NetworkError(const std::string& what) : std::runtime_error(what) {}
};

class AuthError : public std::runtime_error {
public:
    explicit AuthError(const std::string& what) : std::runtime_error(what) {}
};

// Strict replay was asked for a key the store does not contain.
class ReplayMissError : public std::runtime_error {
public:
    explicit ReplayMissError(const std::string& key)
        : std::runtime_error("replay miss: no stored response for key '" + key + "'"), key_(key) {}
    const std::string& key() const { return key_; }

private:
    std::string key_;
};

// An operation needed a complete response store and found holes.
class IncompleteStoreError : public std::runtime_error {
public:
    IncompleteStoreError(std::string what, std::vector<std::string> missing)
        : std::runtime_error(std::move(what)), missing_(std::move(missing)) {}
    const std::vector<std::string>& missing_keys() const { return missing_; }

private:
    std::vector<std::string> missing_;
};

} // namespace vaaprobe
