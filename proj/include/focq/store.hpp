#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace focq::store {

// Every persisted record carries this in its "schema_version" field.
inline constexpr int kSchemaVersion = 1;

std::string read_text(const std::filesystem::path& path);

// Writes through "<path>.tmp" and renames, so readers never see partial files.
void write_atomic(const std::filesystem::path& path, std::string_view content);

// Line-delimited JSON. Records missing "schema_version" get it added on write;
// on read, records with a different version are rejected.
void write_jsonl(const std::filesystem::path& path, const std::vector<nlohmann::json>& records);
std::vector<nlohmann::json> read_jsonl(const std::filesystem::path& path);

// Lowercase hex SHA-256 of a file's content.
std::string sha256_file(const std::filesystem::path& path);

}  // namespace focq::store
