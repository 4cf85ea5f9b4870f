#include <matchdeg/service.hpp>

#include <matchdeg/engine.hpp>
#include <matchdeg/json_codec.hpp>

#include "codec_detail.hpp"

#include <httplib.h>

#include <chrono>
#include <mutex>
#include <thread>
#include <utility>

namespace matchdeg {

namespace {

using detail::Json;

void send_json(httplib::Response& res, int status, const Json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, int status, const char* code,
                const std::string& message,
                const std::optional<std::string>& detail = std::nullopt) {
    Json body{{"status", status}, {"code", code}, {"message", message}};
    if (detail && !detail->empty()) body["detail"] = *detail;
    send_json(res, status, body);
}

const char* default_code(int status) {
    switch (status) {
        case 400: return "bad_request";
        case 404: return "not_found";
        case 405: return "method_not_allowed";
        case 422: return "validation_failed";
        default: return status >= 500 ? "internal_error" : "error";
    }
}

// (owner, role) segments shared by the three /profiles handlers. On failure
// the response is already written.
struct PathKey {
    OwnerId owner;
    Role role;
};

std::optional<PathKey> parse_path_key(const httplib::Request& req,
                                      httplib::Response& res) {
    const std::optional<Role> role = role_from_string(req.path_params.at("role"));
    if (!role) {
        send_error(res, 400, "bad_request",
                   "role must be \"search\" or \"advertising\"");
        return std::nullopt;
    }
    try {
        return PathKey{OwnerId{req.path_params.at("owner")}, *role};
    } catch (const std::invalid_argument&) {
        send_error(res, 400, "bad_request", "owner must be non-empty");
        return std::nullopt;
    }
}

std::optional<Json> parse_body(const httplib::Request& req, httplib::Response& res) {
    Json body = Json::parse(req.body, nullptr, false);
    if (body.is_discarded()) {
        send_error(res, 400, "bad_request", "malformed JSON body");
        return std::nullopt;
    }
    return body;
}

}  // namespace

struct MatchService::Impl {
    ProfileStore profiles;
    std::optional<std::filesystem::path> persist_path;
    std::mutex persist_mutex;
    httplib::Server server;

    Impl(ProfileStore store, std::optional<std::filesystem::path> path)
        : profiles(std::move(store)), persist_path(std::move(path)) {
        setup();
    }

    void persist() {
        if (!persist_path) return;
        std::lock_guard lock(persist_mutex);
        profiles.save_file(*persist_path);
    }

    void setup() {
        server.set_exception_handler([](const httplib::Request&,
                                        httplib::Response& res, std::exception_ptr ep) {
            std::string message = "internal error";
            try {
                std::rethrow_exception(ep);
            } catch (const std::exception& e) {
                message = e.what();
            } catch (...) {
            }
            send_error(res, 500, "internal_error", message);
        });
        server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
            if (res.body.empty() && res.status >= 400)
                send_error(res, res.status, default_code(res.status),
                           httplib::status_message(res.status));
        });

        server.Get("/healthz", [](const httplib::Request&, httplib::Response& res) {
            res.set_content("ok", "text/plain");
        });

        server.Get("/profiles/:owner/:role",
                   [this](const httplib::Request& req, httplib::Response& res) {
                       const auto key = parse_path_key(req, res);
                       if (!key) return;
                       const auto entry = profiles.get(key->owner, key->role);
                       if (!entry) {
                           send_error(res, 404, "not_found",
                                      "no stored profile for owner \"" +
                                          key->owner.value() + "\" in role " +
                                          to_string(key->role));
                           return;
                       }
                       res.set_content(profile_to_json(entry->profile),
                                       "application/json");
                   });

        server.Put("/profiles/:owner/:role",
                   [this](const httplib::Request& req, httplib::Response& res) {
                       handle_put(req, res);
                   });

        server.Delete("/profiles/:owner/:role",
                      [this](const httplib::Request& req, httplib::Response& res) {
                          const auto key = parse_path_key(req, res);
                          if (!key) return;
                          if (!profiles.remove(key->owner, key->role)) {
                              send_error(res, 404, "not_found",
                                         "no stored profile for owner \"" +
                                             key->owner.value() + "\" in role " +
                                             to_string(key->role));
                              return;
                          }
                          persist();
                          res.status = 204;
                      });

        server.Post("/match", [this](const httplib::Request& req,
                                     httplib::Response& res) {
            handle_match(req, res);
        });
    }

    void handle_put(const httplib::Request& req, httplib::Response& res) {
        const auto key = parse_path_key(req, res);
        if (!key) return;
        const auto body = parse_body(req, res);
        if (!body) return;

        std::vector<ValidationIssue> issues;
        std::optional<Profile> profile = detail::parse_profile(*body, "", issues);
        if (!profile) {
            send_error(res, 422, "validation_failed", issues.front().message,
                       issues.front().path);
            return;
        }
        if (profile->owner != key->owner) {
            send_error(res, 422, "validation_failed",
                       "document owner \"" + profile->owner.value() +
                           "\" does not match the path owner \"" +
                           key->owner.value() + "\"",
                       "owner");
            return;
        }
        if (ValidationReport report = validate_profile(*profile, key->role);
            !report.ok()) {
            send_error(res, 422, "validation_failed", report.issues.front().message,
                       report.issues.front().path);
            return;
        }

        const std::string stored = profile_to_json(*profile);
        profiles.put(key->owner, key->role, std::move(*profile));
        persist();
        res.set_content(stored, "application/json");
    }

    void handle_match(const httplib::Request& req, httplib::Response& res) {
        const auto body = parse_body(req, res);
        if (!body) return;
        if (!body->is_object()) {
            send_error(res, 400, "bad_request", "request body must be a JSON object");
            return;
        }
        for (const auto& item : body->items()) {
            const std::string& field = item.key();
            if (field != "search" && field != "k" && field != "fuzzy" &&
                field != "weights") {
                send_error(res, 400, "bad_request", "unknown field \"" + field + "\"");
                return;
            }
        }
        if (!body->contains("search")) {
            send_error(res, 400, "bad_request", "\"search\" is required");
            return;
        }

        // search: inline document or a reference to a stored search profile
        std::optional<Profile> search;
        const Json& search_field = (*body)["search"];
        if (search_field.is_string()) {
            std::optional<OwnerId> ref;
            try {
                ref.emplace(search_field.get<std::string>());
            } catch (const std::invalid_argument&) {
                send_error(res, 422, "validation_failed",
                           "search owner reference must be non-empty", "search");
                return;
            }
            auto entry = profiles.get(*ref, Role::search);
            if (!entry) {
                send_error(res, 404, "not_found",
                           "no stored search profile for owner \"" + ref->value() +
                               "\"");
                return;
            }
            search = std::move(entry->profile);
        } else if (search_field.is_object()) {
            std::vector<ValidationIssue> issues;
            search = detail::parse_profile(search_field, "search.", issues);
            if (!search) {
                send_error(res, 422, "validation_failed", issues.front().message,
                           issues.front().path);
                return;
            }
        } else {
            send_error(res, 400, "bad_request",
                       "\"search\" must be a profile document or an owner string");
            return;
        }

        if (ValidationReport report = validate_profile(*search, Role::search);
            !report.ok()) {
            send_error(res, 422, "validation_failed", report.issues.front().message,
                       "search." + report.issues.front().path);
            return;
        }
        if (search->item_count() == 0) {
            send_error(res, 422, "validation_failed", "empty search profile",
                       "search");
            return;
        }

        MatchQuery query{std::move(*search), {}, std::nullopt};

        if (body->contains("k")) {
            const Json& k = (*body)["k"];
            if (k.is_string() && k.get<std::string>() == "all") {
                query.k = std::nullopt;
            } else if (k.is_number_integer() && k.get<long long>() > 0) {
                query.k = static_cast<std::size_t>(k.get<long long>());
            } else {
                send_error(res, 400, "bad_request",
                           "k must be a positive integer or \"all\"", "k");
                return;
            }
        }
        if (body->contains("fuzzy")) {
            const Json& fuzzy = (*body)["fuzzy"];
            bool ok = fuzzy.is_number();
            if (ok) {
                try {
                    query.config.fuzzy = FuzzyLevel{fuzzy.get<double>()};
                } catch (const std::invalid_argument&) {
                    ok = false;
                }
            }
            if (!ok) {
                send_error(res, 400, "bad_request", "fuzzy level must be in (0,1)",
                           "fuzzy");
                return;
            }
        }
        if (body->contains("weights")) {
            std::vector<ValidationIssue> issues;
            std::optional<Weights> weights =
                detail::parse_weights((*body)["weights"], "weights.", issues);
            if (!weights) {
                send_error(res, 400, "bad_request", issues.front().message,
                           issues.front().path);
                return;
            }
            query.config.weights = std::move(*weights);
        }

        try {
            const std::vector<MatchResult> results =
                rank(query, profiles.eligible_adverts(query.search.owner));
            res.set_content(results_to_json(results), "application/json");
        } catch (const ValidationError& e) {
            send_error(res, 422, "validation_failed", e.what());
        } catch (const std::invalid_argument& e) {
            send_error(res, 422, "validation_failed", e.what());
        }
    }
};

MatchService::MatchService(ProfileStore store,
                           std::optional<std::filesystem::path> persist_path)
    : impl_(std::make_unique<Impl>(std::move(store), std::move(persist_path))) {}

MatchService::~MatchService() {
    if (impl_) impl_->server.stop();
}

bool MatchService::listen(const std::string& host, int port) {
    return impl_->server.listen(host, port);
}

bool MatchService::bind(const std::string& host, int port) {
    return impl_->server.bind_to_port(host, port);
}

int MatchService::bind_any_port(const std::string& host) {
    return impl_->server.bind_to_any_port(host);
}

bool MatchService::serve_after_bind() { return impl_->server.listen_after_bind(); }

void MatchService::stop() { impl_->server.stop(); }

bool MatchService::is_running() const { return impl_->server.is_running(); }

void MatchService::wait_until_ready() const {
    const auto deadline = std::chrono::steady_clock::now() + std::chrono::seconds(5);
    while (!impl_->server.is_running() &&
           std::chrono::steady_clock::now() < deadline)
        std::this_thread::sleep_for(std::chrono::milliseconds(1));
}

ProfileStore& MatchService::store() noexcept { return impl_->profiles; }

const ProfileStore& MatchService::store() const noexcept { return impl_->profiles; }

}  // namespace matchdeg
