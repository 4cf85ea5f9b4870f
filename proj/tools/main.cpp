#include <matchdeg/engine.hpp>
#include <matchdeg/json_codec.hpp>
#include <matchdeg/profile.hpp>
#include <matchdeg/scoring.hpp>
#include <matchdeg/service.hpp>
#include <matchdeg/store.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <csignal>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int kOk = 0;
constexpr int kRuntimeError = 1;
constexpr int kUsageError = 2;
constexpr int kValidationError = 3;

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream text;
    text << in.rdbuf();
    if (in.bad()) return std::nullopt;
    return text.str();
}

void print_issues(const char* label, const matchdeg::ValidationReport& report,
                  std::FILE* to) {
    for (const matchdeg::ValidationIssue& issue : report.issues) {
        if (issue.path.empty())
            std::fprintf(to, "%s: %s\n", label, issue.message.c_str());
        else
            std::fprintf(to, "%s: %s: %s\n", label, issue.path.c_str(),
                         issue.message.c_str());
    }
}

void print_diagnostics(const std::vector<std::string>& diagnostics) {
    for (const std::string& diagnostic : diagnostics)
        std::fprintf(stderr, "diagnostic: %s\n", diagnostic.c_str());
}

// Shared by score and rank: --fuzzy is a usage error when outside (0,1).
bool apply_fuzzy(const std::optional<double>& fuzzy, matchdeg::MatchConfig& config) {
    if (!fuzzy) return true;
    if (!(*fuzzy > 0.0 && *fuzzy < 1.0)) {
        std::fprintf(stderr, "error: fuzzy level must be in (0,1)\n");
        return false;
    }
    config.fuzzy = matchdeg::FuzzyLevel{*fuzzy};
    return true;
}

// Loads and checks one profile document for a role. Returns nullopt after
// printing the failure; sets `exit_code` to the matching exit status.
std::optional<matchdeg::Profile> load_profile(const std::string& path,
                                              matchdeg::Role role, const char* label,
                                              int& exit_code) {
    const std::optional<std::string> text = read_file(path);
    if (!text) {
        std::fprintf(stderr, "error: cannot read %s\n", path.c_str());
        exit_code = kRuntimeError;
        return std::nullopt;
    }
    const matchdeg::ValidationReport report = matchdeg::check_profile_json(*text, role);
    if (!report.ok()) {
        print_issues(label, report, stderr);
        exit_code = kValidationError;
        return std::nullopt;
    }
    return matchdeg::profile_from_json(*text);
}

struct ScoreArgs {
    std::string search_file;
    std::string advert_file;
    std::optional<double> fuzzy;
    std::string weights_file;
    bool json = false;
};

int run_score(const ScoreArgs& args) {
    int exit_code = kOk;
    const auto search =
        load_profile(args.search_file, matchdeg::Role::search, "search profile",
                     exit_code);
    if (!search) return exit_code;
    const auto advert =
        load_profile(args.advert_file, matchdeg::Role::advertising, "advert profile",
                     exit_code);
    if (!advert) return exit_code;

    matchdeg::MatchConfig config;
    if (!apply_fuzzy(args.fuzzy, config)) return kUsageError;
    if (!args.weights_file.empty()) {
        const std::optional<std::string> text = read_file(args.weights_file);
        if (!text) {
            std::fprintf(stderr, "error: cannot read %s\n", args.weights_file.c_str());
            return kRuntimeError;
        }
        try {
            config.weights = matchdeg::weights_from_json(*text);
        } catch (const matchdeg::DocumentError& e) {
            std::fprintf(stderr, "weights: %s\n", e.what());
            return kValidationError;
        }
    }

    matchdeg::ScoreBreakdown breakdown;
    try {
        breakdown = matchdeg::total_degree(*search, *advert, config);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kValidationError;
    }
    print_diagnostics(breakdown.diagnostics);

    if (args.json) {
        const std::vector<matchdeg::MatchResult> results{
            {advert->owner, std::move(breakdown), 1}};
        std::printf("%s\n", matchdeg::results_to_json(results).c_str());
        return kOk;
    }

    std::size_t width = 5;  // fits "total"
    for (const auto& [name, score] : breakdown.per_item)
        width = std::max(width, name.size());
    std::printf("%-*s  %-9s  %8s  %6s\n", static_cast<int>(width), "item", "kind",
                "partial", "weight");
    for (const auto& [name, score] : breakdown.per_item)
        std::printf("%-*s  %-9s  %8.4f  %6g\n", static_cast<int>(width), name.c_str(),
                    matchdeg::to_string(score.kind).c_str(), score.partial,
                    score.weight);
    std::printf("%-*s  %-9s  %8.4f\n", static_cast<int>(width), "total", "",
                breakdown.total);
    return kOk;
}

struct RankArgs {
    std::string search_file;
    std::string store_file;
    std::optional<std::size_t> top;
    std::optional<double> fuzzy;
    bool json = false;
};

int run_rank(const RankArgs& args) {
    int exit_code = kOk;
    const auto search = load_profile(args.search_file, matchdeg::Role::search,
                                     "search profile", exit_code);
    if (!search) return exit_code;

    matchdeg::MatchQuery query{std::move(*search), {}, args.top};
    if (!apply_fuzzy(args.fuzzy, query.config)) return kUsageError;
    if (args.top && *args.top == 0) {
        std::fprintf(stderr, "error: top must be a positive integer\n");
        return kUsageError;
    }

    matchdeg::ProfileStore store;
    try {
        store = matchdeg::ProfileStore::load_file(args.store_file);
    } catch (const std::system_error&) {
        std::fprintf(stderr, "error: cannot read %s\n", args.store_file.c_str());
        return kRuntimeError;
    } catch (const matchdeg::DocumentError& e) {
        std::fprintf(stderr, "error: %s: %s\n", args.store_file.c_str(), e.what());
        return kRuntimeError;
    }

    std::vector<std::string> diagnostics;
    std::vector<matchdeg::MatchResult> results;
    try {
        results = matchdeg::rank(query, store.eligible_adverts(query.search.owner),
                                 &diagnostics);
    } catch (const matchdeg::ValidationError& e) {
        std::fprintf(stderr, "search profile: %s\n", e.what());
        return kValidationError;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kValidationError;
    }
    print_diagnostics(diagnostics);

    if (args.json) {
        std::printf("%s\n", matchdeg::results_to_json(results).c_str());
        return kOk;
    }

    std::size_t width = 5;  // fits "owner"
    for (const matchdeg::MatchResult& result : results)
        width = std::max(width, result.advert_owner.value().size());
    std::printf("%4s  %-*s  %s\n", "rank", static_cast<int>(width), "owner", "total");
    for (const matchdeg::MatchResult& result : results)
        std::printf("%4zu  %-*s  %.4f\n", result.rank, static_cast<int>(width),
                    result.advert_owner.value().c_str(), result.breakdown.total);
    return kOk;
}

int run_validate(const std::string& file) {
    const std::optional<std::string> text = read_file(file);
    if (!text) {
        std::fprintf(stderr, "error: cannot read %s\n", file.c_str());
        return kRuntimeError;
    }
    // A document with a "profiles" key is a store file; anything else is
    // checked as a single profile document without assuming a role.
    bool is_store = false;
    {
        const auto probe = nlohmann::json::parse(*text, nullptr, false);
        is_store = probe.is_object() && probe.contains("profiles");
    }
    const matchdeg::ValidationReport report =
        is_store ? matchdeg::check_store_json(*text)
                 : matchdeg::check_profile_json(*text);
    if (report.ok()) {
        std::printf("ok\n");
        return kOk;
    }
    for (const matchdeg::ValidationIssue& issue : report.issues) {
        if (issue.path.empty())
            std::printf("%s\n", issue.message.c_str());
        else
            std::printf("%s: %s\n", issue.path.c_str(), issue.message.c_str());
    }
    return kValidationError;
}

struct ServeArgs {
    std::string store_file;
    std::string addr;
};

int run_serve(const ServeArgs& args) {
    const std::size_t colon = args.addr.rfind(':');
    if (colon == std::string::npos || colon == 0) {
        std::fprintf(stderr, "error: addr must be HOST:PORT\n");
        return kUsageError;
    }
    const std::string host = args.addr.substr(0, colon);
    int port = -1;
    try {
        port = std::stoi(args.addr.substr(colon + 1));
    } catch (const std::exception&) {
        port = -1;
    }
    if (port < 0 || port > 65535) {
        std::fprintf(stderr, "error: addr port must be a number in [0, 65535]\n");
        return kUsageError;
    }

    matchdeg::ProfileStore store;
    if (std::filesystem::exists(args.store_file)) {
        try {
            store = matchdeg::ProfileStore::load_file(args.store_file);
        } catch (const std::system_error&) {
            std::fprintf(stderr, "error: cannot read %s\n", args.store_file.c_str());
            return kRuntimeError;
        } catch (const matchdeg::DocumentError& e) {
            std::fprintf(stderr, "error: %s: %s\n", args.store_file.c_str(), e.what());
            return kRuntimeError;
        }
    } else {
        std::fprintf(stderr, "note: %s does not exist yet; starting empty\n",
                     args.store_file.c_str());
    }

    matchdeg::MatchService service{std::move(store), args.store_file};

    int bound_port = port;
    if (port == 0) {
        bound_port = service.bind_any_port(host);
        if (bound_port <= 0) {
            std::fprintf(stderr, "error: cannot bind %s\n", args.addr.c_str());
            return kRuntimeError;
        }
    } else if (!service.bind(host, port)) {
        std::fprintf(stderr, "error: cannot bind %s\n", args.addr.c_str());
        return kRuntimeError;
    }

    // Block the shutdown signals before the worker starts so they are only
    // ever delivered through sigwait below.
    sigset_t signals;
    sigemptyset(&signals);
    sigaddset(&signals, SIGINT);
    sigaddset(&signals, SIGTERM);
    pthread_sigmask(SIG_BLOCK, &signals, nullptr);

    std::thread worker([&service] { service.serve_after_bind(); });
    service.wait_until_ready();
    if (!service.is_running()) {
        worker.join();
        std::fprintf(stderr, "error: server failed to start\n");
        return kRuntimeError;
    }

    std::printf("listening on http://%s:%d\n", host.c_str(), bound_port);
    std::fflush(stdout);

    int received = 0;
    sigwait(&signals, &received);
    service.stop();
    worker.join();
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fuzzy matchmaking over profile stores: score pairs, rank "
                 "adverts, validate files, serve HTTP"};
    app.require_subcommand(1);

    ScoreArgs score_args;
    CLI::App* score = app.add_subcommand(
        "score", "Score one advertising profile against a search profile");
    score->add_option("--search", score_args.search_file, "search profile document")
        ->required();
    score->add_option("--advert", score_args.advert_file,
                      "advertising profile document")
        ->required();
    score->add_option("--fuzzy", score_args.fuzzy, "fuzzy level in (0,1)");
    score->add_option("--weights", score_args.weights_file, "weights document");
    score->add_flag("--json", score_args.json, "emit the POST /match JSON form");

    RankArgs rank_args;
    CLI::App* rank = app.add_subcommand(
        "rank", "Rank a store's advertising profiles against a search profile");
    rank->add_option("--search", rank_args.search_file, "search profile document")
        ->required();
    rank->add_option("--store", rank_args.store_file, "profile store file")
        ->required();
    rank->add_option("--top", rank_args.top, "return only the best K results");
    rank->add_option("--fuzzy", rank_args.fuzzy, "fuzzy level in (0,1)");
    rank->add_flag("--json", rank_args.json, "emit the POST /match JSON form");

    std::string validate_file;
    CLI::App* validate =
        app.add_subcommand("validate", "Validate a profile or store file");
    validate->add_option("file", validate_file, "profile or store document")
        ->required();

    ServeArgs serve_args{.store_file = {}, .addr = "127.0.0.1:8080"};
    CLI::App* serve = app.add_subcommand("serve", "Serve the HTTP API over a store");
    serve->add_option("--store", serve_args.store_file,
                      "profile store file (created on first write)")
        ->required();
    serve->add_option("--addr", serve_args.addr, "listen address HOST:PORT")
        ->envname("MATCHDEG_ADDR");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (score->parsed()) return run_score(score_args);
        if (rank->parsed()) return run_rank(rank_args);
        if (validate->parsed()) return run_validate(validate_file);
        return run_serve(serve_args);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kRuntimeError;
    }
}
