#include "nlpkg/util/jsonl.hpp"

#include <fstream>
#include <sstream>

#include "nlpkg/error.hpp"

namespace nlpkg::jsonl {

void for_each(const std::filesystem::path& path,
              const std::function<void(const json&, std::size_t)>& on_record) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        json record;
        try {
            record = json::parse(line);
        } catch (const json::parse_error& e) {
            throw ParseError(path.string(), line_no, e.what());
        }
        if (!record.is_object()) {
            throw ParseError(path.string(), line_no, "expected a JSON object");
        }
        try {
            on_record(record, line_no);
        } catch (const ParseError&) {
            throw;
        } catch (const json::exception& e) {
            throw ParseError(path.string(), line_no, e.what());
        }
    }
}

std::vector<json> read_all(const std::filesystem::path& path) {
    std::vector<json> out;
    for_each(path, [&](const json& j, std::size_t) { out.push_back(j); });
    return out;
}

void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot write " + tmp.string());
        }
        out << text;
        if (!out) {
            throw IoError("short write on " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

void write_atomic(const std::filesystem::path& path, const std::vector<json>& records) {
    std::string buf;
    for (const auto& r : records) {
        buf += r.dump();
        buf += '\n';
    }
    write_text_atomic(path, buf);
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace nlpkg::jsonl
