#pragma once

#include <matchdeg/store.hpp>

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

namespace matchdeg {

// HTTP facade over a ProfileStore:
//
//   GET    /healthz                  -> 200 "ok"
//   GET    /profiles/{owner}/{role}  -> 200 profile document | 404
//   PUT    /profiles/{owner}/{role}  -> 200 stored document | 400 | 422
//   DELETE /profiles/{owner}/{role}  -> 204 | 404
//   POST   /match                    -> 200 {"results": [...]}
//
// POST /match takes {"search": document-or-owner, "k"?, "fuzzy"?, "weights"?}
// and never mutates the store. Error bodies are always JSON of the form
// {"status", "code", "message", "detail"?}. When a persistence path is set,
// every successful mutation is written through to it atomically.
class MatchService {
public:
    explicit MatchService(ProfileStore store,
                          std::optional<std::filesystem::path> persist_path =
                              std::nullopt);
    ~MatchService();

    MatchService(const MatchService&) = delete;
    MatchService& operator=(const MatchService&) = delete;

    // Binds and serves until stop() is called; returns false when the
    // address cannot be bound.
    bool listen(const std::string& host, int port);

    // Split bind/serve for callers that need the chosen port before serving.
    bool bind(const std::string& host, int port);
    int bind_any_port(const std::string& host);  // returns the port, or -1
    bool serve_after_bind();

    void stop();
    bool is_running() const;

    // Blocks until the server accepts connections (call after serving starts
    // on another thread).
    void wait_until_ready() const;

    ProfileStore& store() noexcept;
    const ProfileStore& store() const noexcept;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace matchdeg
