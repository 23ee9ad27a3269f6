#include "arena/llm/provider.hpp"

#include <filesystem>
#include <fstream>

#include "arena/core/errors.hpp"
#include "arena/core/text.hpp"

namespace arena::llm {

namespace fs = std::filesystem;

namespace {

std::string safe_segment(const std::string& s) {
    std::string out;
    for (char c : s) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '.' ||
                        c == '-' || c == '_';
        out.push_back(ok ? c : '_');
    }
    if (out.empty() || out == "." || out == "..") out = "_" + out;
    return out;
}

} // namespace

std::string reply_path(const std::string& root, const RequestKey& key) {
    return (fs::path(root) / safe_segment(key.agent) / safe_segment(key.asset) / key.date.to_string() /
            (std::to_string(key.attempt) + ".txt"))
        .string();
}

std::string RecordedReplyProvider::complete(const CompletionRequest& request) {
    const auto path = reply_path(root_, request.key);
    if (!fs::exists(path)) throw ProviderError("no recorded reply at " + path);
    return text::read_file(path);
}

std::string RecordingProvider::complete(const CompletionRequest& request) {
    auto reply = inner_.complete(request);
    const fs::path path = reply_path(root_, request.key);
    fs::create_directories(path.parent_path());
    text::write_file(path.string(), reply);
    return reply;
}

} // namespace arena::llm
