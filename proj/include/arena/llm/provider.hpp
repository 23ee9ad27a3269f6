#pragma once

#include <string>

#include "arena/core/date.hpp"

namespace arena::llm {

// Identifies a request for record/replay. Live providers ignore it.
struct RequestKey {
    std::string agent;
    std::string asset;
    Date date;
    int attempt = 1;  // 1-based
};

struct CompletionRequest {
    std::string system;
    std::string user;
    double temperature = 0.5;
    RequestKey key;
};

/// Text-completion backend. Retries reuse identical requests apart from
/// `key.attempt`. Throws ProviderError when no reply can be produced.
class TextProvider {
public:
    virtual ~TextProvider() = default;
    virtual std::string complete(const CompletionRequest& request) = 0;
};

/// `<root>/<agent>/<asset>/<date>/<attempt>.txt`, with path-unsafe
/// characters in the agent and asset names replaced by '_'.
std::string reply_path(const std::string& root, const RequestKey& key);

/// Serves replies recorded on disk; a missing file is a provider failure.
class RecordedReplyProvider final : public TextProvider {
public:
    explicit RecordedReplyProvider(std::string root) : root_(std::move(root)) {}
    std::string complete(const CompletionRequest& request) override;

private:
    std::string root_;
};

/// Forwards to `inner` and writes every successful reply to the store so the
/// run can be replayed with RecordedReplyProvider.
class RecordingProvider final : public TextProvider {
public:
    RecordingProvider(TextProvider& inner, std::string root) : inner_(inner), root_(std::move(root)) {}
    std::string complete(const CompletionRequest& request) override;

private:
    TextProvider& inner_;
    std::string root_;
};

} // namespace arena::llm
