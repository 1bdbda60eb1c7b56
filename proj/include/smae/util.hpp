#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace smae {

using json = nlohmann::json;

/// Bad command line or conflicting flags. CLI exit code 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data. CLI exit code 2.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Non-finite values, divergence, failed gradient checks. CLI exit code 3.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Warning sink, defaults to stderr. Tests swap it to count warnings.
void set_warn_handler(std::function<void(const std::string&)> handler);
void warn(const std::string& message);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

/// Hex-encoded SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path& path);

/// Rejects keys outside `allowed`; silent typos in config files are errors.
void require_known_keys(const json& object, const std::vector<std::string>& allowed,
                        const std::string& context);

uint64_t fnv1a64(std::string_view s);

}  // namespace smae
