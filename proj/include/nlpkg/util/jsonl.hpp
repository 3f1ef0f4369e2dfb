#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace nlpkg::jsonl {

using json = nlohmann::json;

/// Calls `on_record` for every non-blank line of `path`, passing the parsed
/// object and its 1-based line number. Malformed lines raise ParseError with
/// the line number; exceptions thrown by the callback are rethrown as
/// ParseError for the same line unless they already are one.
void for_each(const std::filesystem::path& path,
              const std::function<void(const json&, std::size_t)>& on_record);

std::vector<json> read_all(const std::filesystem::path& path);

// Written to a sibling temp file and renamed, so readers never see a torn file.
void write_atomic(const std::filesystem::path& path, const std::vector<json>& records);

void write_text_atomic(const std::filesystem::path& path, const std::string& text);

std::string read_text(const std::filesystem::path& path);

}  // namespace nlpkg::jsonl
