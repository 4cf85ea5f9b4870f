#include <matchdeg/json_codec.hpp>

#include "codec_detail.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <utility>

namespace matchdeg {

DocumentError::DocumentError(std::string path, const std::string& message)
    : std::runtime_error(path.empty() ? message : path + ": " + message),
      path_(std::move(path)) {}

namespace detail {

namespace {

void check_fields(const Json& doc, const std::string& prefix,
                  const std::vector<std::string>& allowed,
                  std::vector<ValidationIssue>& issues) {
    for (const auto& item : doc.items())
        if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end())
            issues.push_back({prefix + item.key(), "unknown field"});
}

std::optional<NumericRange> parse_range(const Json& value, const std::string& path,
                                        std::vector<ValidationIssue>& issues) {
    if (!value.is_object()) {
        issues.push_back({path, "must be an object with \"min\"/\"max\" "
                                "or {\"empty\": true}"});
        return std::nullopt;
    }
    check_fields(value, path + ".", {"min", "max", "empty"}, issues);
    if (value.contains("empty")) {
        if (!value["empty"].is_boolean() || !value["empty"].get<bool>()) {
            issues.push_back({path + ".empty", "must be true when present"});
            return std::nullopt;
        }
        if (value.contains("min") || value.contains("max")) {
            issues.push_back({path, "an empty range cannot carry endpoints"});
            return std::nullopt;
        }
        return NumericRange::empty();
    }
    double lower = -std::numeric_limits<double>::infinity();
    double upper = std::numeric_limits<double>::infinity();
    bool ok = true;
    if (value.contains("min")) {
        if (value["min"].is_number()) {
            lower = value["min"].get<double>();
        } else {
            issues.push_back({path + ".min", "must be a number"});
            ok = false;
        }
    }
    if (value.contains("max")) {
        if (value["max"].is_number()) {
            upper = value["max"].get<double>();
        } else {
            issues.push_back({path + ".max", "must be a number"});
            ok = false;
        }
    }
    if (!ok) return std::nullopt;
    try {
        return NumericRange::closed(lower, upper);
    } catch (const std::invalid_argument& e) {
        issues.push_back({path, e.what()});
        return std::nullopt;
    }
}

std::optional<DiscreteSet> parse_set(const Json& value, const std::string& path,
                                     std::vector<ValidationIssue>& issues) {
    if (!value.is_array()) {
        issues.push_back({path, "must be an array of strings"});
        return std::nullopt;
    }
    std::vector<std::string> values;
    bool ok = true;
    for (const Json& element : value) {
        if (!element.is_string()) {
            issues.push_back({path, "values must be strings"});
            ok = false;
            break;
        }
        values.push_back(element.get<std::string>());
    }
    if (!ok) return std::nullopt;
    try {
        return DiscreteSet(std::move(values));
    } catch (const std::invalid_argument& e) {
        issues.push_back({path, e.what()});
        return std::nullopt;
    }
}

std::optional<InterestLevel> parse_level(const Json& value, const std::string& path,
                                         std::vector<ValidationIssue>& issues) {
    if (!value.is_number()) {
        issues.push_back({path, "must be a number"});
        return std::nullopt;
    }
    try {
        return InterestLevel(value.get<double>());
    } catch (const std::invalid_argument& e) {
        issues.push_back({path, e.what()});
        return std::nullopt;
    }
}

}  // namespace

std::optional<Profile> parse_profile(const Json& doc, const std::string& prefix,
                                     std::vector<ValidationIssue>& issues,
                                     const std::vector<std::string>& extra_fields) {
    const std::size_t issues_before = issues.size();
    if (!doc.is_object()) {
        issues.push_back({prefix.empty() ? "" : prefix.substr(0, prefix.size() - 1),
                          "profile document must be a JSON object"});
        return std::nullopt;
    }

    std::vector<std::string> allowed = {"owner", "numeric", "discrete", "interests"};
    allowed.insert(allowed.end(), extra_fields.begin(), extra_fields.end());
    check_fields(doc, prefix, allowed, issues);

    std::optional<OwnerId> owner;
    if (!doc.contains("owner")) {
        issues.push_back({prefix + "owner", "required field is missing"});
    } else if (!doc["owner"].is_string()) {
        issues.push_back({prefix + "owner", "must be a string"});
    } else {
        try {
            owner.emplace(doc["owner"].get<std::string>());
        } catch (const std::invalid_argument& e) {
            issues.push_back({prefix + "owner", e.what()});
        }
    }

    Profile profile{owner ? std::move(*owner) : OwnerId{"?"}, {}, {}, {}};

    if (doc.contains("numeric")) {
        if (!doc["numeric"].is_object()) {
            issues.push_back({prefix + "numeric", "must be an object"});
        } else {
            for (const auto& item : doc["numeric"].items())
                if (auto range = parse_range(item.value(),
                                             prefix + "numeric." + item.key(), issues))
                    profile.numeric.emplace(item.key(), *range);
        }
    }
    if (doc.contains("discrete")) {
        if (!doc["discrete"].is_object()) {
            issues.push_back({prefix + "discrete", "must be an object"});
        } else {
            for (const auto& item : doc["discrete"].items())
                if (auto set = parse_set(item.value(),
                                         prefix + "discrete." + item.key(), issues))
                    profile.discrete.emplace(item.key(), std::move(*set));
        }
    }
    if (doc.contains("interests")) {
        if (!doc["interests"].is_object()) {
            issues.push_back({prefix + "interests", "must be an object"});
        } else {
            for (const auto& item : doc["interests"].items())
                if (auto level = parse_level(item.value(),
                                             prefix + "interests." + item.key(), issues))
                    profile.interests.emplace(item.key(), *level);
        }
    }

    if (issues.size() != issues_before) return std::nullopt;
    return profile;
}

Json profile_doc(const Profile& profile) {
    Json doc = Json::object();
    doc["owner"] = profile.owner.value();
    if (!profile.numeric.empty()) {
        Json section = Json::object();
        for (const auto& [name, range] : profile.numeric) {
            Json entry = Json::object();
            if (range.is_empty()) {
                entry["empty"] = true;
            } else {
                // Omitted endpoints mean -inf / +inf; the opposite infinities
                // have no JSON representation.
                if (std::isinf(range.lower()) && range.lower() > 0)
                    throw DocumentError("numeric." + name,
                                        "lower endpoint +inf is not representable "
                                        "in the document format");
                if (std::isinf(range.upper()) && range.upper() < 0)
                    throw DocumentError("numeric." + name,
                                        "upper endpoint -inf is not representable "
                                        "in the document format");
                if (!std::isinf(range.lower())) entry["min"] = range.lower();
                if (!std::isinf(range.upper())) entry["max"] = range.upper();
            }
            section[name] = std::move(entry);
        }
        doc["numeric"] = std::move(section);
    }
    if (!profile.discrete.empty()) {
        Json section = Json::object();
        for (const auto& [name, set] : profile.discrete)
            section[name] = set.values();
        doc["discrete"] = std::move(section);
    }
    if (!profile.interests.empty()) {
        Json section = Json::object();
        for (const auto& [name, level] : profile.interests)
            section[name] = level.value();
        doc["interests"] = std::move(section);
    }
    return doc;
}

std::optional<Weights> parse_weights(const Json& doc, const std::string& prefix,
                                     std::vector<ValidationIssue>& issues) {
    const std::size_t issues_before = issues.size();
    if (!doc.is_object()) {
        issues.push_back({prefix.empty() ? "" : prefix.substr(0, prefix.size() - 1),
                          "weights document must be a JSON object"});
        return std::nullopt;
    }
    check_fields(doc, prefix, {"numeric", "discrete", "interest"}, issues);

    Weights weights;
    auto parse_section = [&](const char* key, std::map<std::string, double>& into) {
        if (!doc.contains(key)) return;
        const Json& section = doc[key];
        if (!section.is_object()) {
            issues.push_back({prefix + key, "must be an object"});
            return;
        }
        for (const auto& item : section.items()) {
            const std::string path = prefix + key + "." + item.key();
            if (!item.value().is_number()) {
                issues.push_back({path, "must be a positive number"});
                continue;
            }
            const double value = item.value().get<double>();
            if (!(value > 0.0) || std::isinf(value)) {
                issues.push_back({path, "must be a positive number"});
                continue;
            }
            into.emplace(item.key(), value);
        }
    };
    parse_section("numeric", weights.numeric);
    parse_section("discrete", weights.discrete);
    parse_section("interest", weights.interest);

    if (issues.size() != issues_before) return std::nullopt;
    return weights;
}

Json results_doc(const std::vector<MatchResult>& results) {
    Json list = Json::array();
    for (const MatchResult& result : results) {
        Json breakdown = Json::object();
        for (const auto& [name, score] : result.breakdown.per_item)
            breakdown[name] = Json{{"kind", to_string(score.kind)},
                                   {"partial", score.partial},
                                   {"weight", score.weight}};
        list.push_back(Json{{"owner", result.advert_owner.value()},
                            {"total", result.breakdown.total},
                            {"rank", result.rank},
                            {"breakdown", std::move(breakdown)}});
    }
    return Json{{"results", std::move(list)}};
}

std::string format_timestamp(TimePoint time) {
    const auto day = std::chrono::floor<std::chrono::days>(time);
    const std::chrono::year_month_day date{day};
    const std::chrono::hh_mm_ss clock{time - day};
    char buffer[24];
    std::snprintf(buffer, sizeof buffer, "%04d-%02u-%02uT%02d:%02d:%02dZ",
                  static_cast<int>(date.year()),
                  static_cast<unsigned>(date.month()),
                  static_cast<unsigned>(date.day()),
                  static_cast<int>(clock.hours().count()),
                  static_cast<int>(clock.minutes().count()),
                  static_cast<int>(clock.seconds().count()));
    return buffer;
}

std::optional<TimePoint> parse_timestamp(const std::string& text) {
    int year = 0, month = 0, day = 0, hour = 0, minute = 0, second = 0;
    char zone = '\0';
    if (text.size() != 20 ||
        std::sscanf(text.c_str(), "%4d-%2d-%2dT%2d:%2d:%2d%c", &year, &month, &day,
                    &hour, &minute, &second, &zone) != 7 ||
        zone != 'Z')
        return std::nullopt;
    const std::chrono::year_month_day date{
        std::chrono::year{year}, std::chrono::month{static_cast<unsigned>(month)},
        std::chrono::day{static_cast<unsigned>(day)}};
    if (!date.ok() || hour < 0 || hour > 23 || minute < 0 || minute > 59 ||
        second < 0 || second > 59)
        return std::nullopt;
    return std::chrono::sys_days{date} + std::chrono::hours{hour} +
           std::chrono::minutes{minute} + std::chrono::seconds{second};
}

namespace {

[[noreturn]] void throw_first(const std::vector<ValidationIssue>& issues) {
    throw DocumentError(issues.front().path, issues.front().message);
}

Json parse_text(std::string_view text, std::vector<ValidationIssue>& issues) {
    Json doc = Json::parse(text, nullptr, false);
    if (doc.is_discarded())
        issues.push_back({"", "invalid JSON"});
    return doc;
}

std::optional<ProfileStore> parse_store(
    const Json& doc, std::vector<ValidationIssue>& issues,
    std::vector<std::pair<std::string, StoredProfile>>* checked_entries) {
    const std::size_t issues_before = issues.size();
    if (!doc.is_object()) {
        issues.push_back({"", "store document must be a JSON object"});
        return std::nullopt;
    }
    check_fields(doc, "", {"profiles"}, issues);
    if (!doc.contains("profiles")) {
        issues.push_back({"profiles", "required field is missing"});
        return std::nullopt;
    }
    if (!doc["profiles"].is_array()) {
        issues.push_back({"profiles", "must be an array"});
        return std::nullopt;
    }

    ProfileStore store;
    std::set<std::pair<std::string, Role>> seen;
    std::size_t index = 0;
    for (const Json& entry : doc["profiles"]) {
        const std::string prefix = "profiles[" + std::to_string(index) + "].";
        ++index;

        std::optional<Role> role;
        if (!entry.is_object() || !entry.contains("role")) {
            issues.push_back({prefix + "role", "required field is missing"});
        } else if (!entry["role"].is_string() ||
                   !(role = role_from_string(entry["role"].get<std::string>()))) {
            issues.push_back({prefix + "role",
                              "must be \"search\" or \"advertising\""});
        }

        TimePoint updated_at{};
        if (entry.is_object() && entry.contains("updated_at") &&
            !entry["updated_at"].is_null()) {
            std::optional<TimePoint> parsed;
            if (entry["updated_at"].is_string())
                parsed = parse_timestamp(entry["updated_at"].get<std::string>());
            if (!parsed) {
                issues.push_back({prefix + "updated_at",
                                  "must be a UTC timestamp of the form "
                                  "YYYY-MM-DDThh:mm:ssZ"});
            } else {
                updated_at = *parsed;
            }
        }

        std::optional<Profile> profile =
            parse_profile(entry, prefix, issues, {"role", "updated_at"});
        if (!profile || !role) continue;

        if (!seen.emplace(profile->owner.value(), *role).second) {
            issues.push_back({prefix.substr(0, prefix.size() - 1),
                              "duplicate profile for owner \"" +
                                  profile->owner.value() + "\" in role " +
                                  to_string(*role)});
            continue;
        }
        StoredProfile stored{profile->owner, *role, std::move(*profile), updated_at};
        if (checked_entries) checked_entries->emplace_back(prefix, stored);
        StoreAccess::insert(store, std::move(stored));
    }

    if (issues.size() != issues_before) return std::nullopt;
    return store;
}

}  // namespace
}  // namespace detail

Profile profile_from_json(std::string_view text) {
    std::vector<ValidationIssue> issues;
    detail::Json doc = detail::parse_text(text, issues);
    std::optional<Profile> profile;
    if (issues.empty()) profile = detail::parse_profile(doc, "", issues);
    if (!issues.empty()) detail::throw_first(issues);
    return std::move(*profile);
}

std::string profile_to_json(const Profile& profile) {
    return detail::profile_doc(profile).dump();
}

ValidationReport check_profile_json(std::string_view text, std::optional<Role> role) {
    ValidationReport report;
    detail::Json doc = detail::parse_text(text, report.issues);
    if (!report.issues.empty()) return report;
    std::optional<Profile> profile = detail::parse_profile(doc, "", report.issues);
    if (profile) {
        ValidationReport semantic = validate_profile(*profile, role);
        report.issues.insert(report.issues.end(), semantic.issues.begin(),
                             semantic.issues.end());
    }
    return report;
}

Weights weights_from_json(std::string_view text) {
    std::vector<ValidationIssue> issues;
    detail::Json doc = detail::parse_text(text, issues);
    std::optional<Weights> weights;
    if (issues.empty()) weights = detail::parse_weights(doc, "", issues);
    if (!issues.empty()) detail::throw_first(issues);
    return std::move(*weights);
}

ProfileStore store_from_json(std::string_view text) {
    std::vector<ValidationIssue> issues;
    detail::Json doc = detail::parse_text(text, issues);
    std::optional<ProfileStore> store;
    if (issues.empty()) store = detail::parse_store(doc, issues, nullptr);
    if (!issues.empty()) detail::throw_first(issues);
    return std::move(*store);
}

std::string store_to_json(const ProfileStore& store) {
    detail::Json list = detail::Json::array();
    for (const StoredProfile& entry : StoreAccess::snapshot(store)) {
        detail::Json doc = detail::profile_doc(entry.profile);
        doc["role"] = to_string(entry.role);
        doc["updated_at"] = detail::format_timestamp(entry.updated_at);
        list.push_back(std::move(doc));
    }
    return detail::Json{{"profiles", std::move(list)}}.dump();
}

ValidationReport check_store_json(std::string_view text) {
    ValidationReport report;
    detail::Json doc = detail::parse_text(text, report.issues);
    if (!report.issues.empty()) return report;
    std::vector<std::pair<std::string, StoredProfile>> entries;
    detail::parse_store(doc, report.issues, &entries);
    for (const auto& [prefix, stored] : entries) {
        ValidationReport semantic = validate_profile(stored.profile, stored.role);
        for (ValidationIssue& issue : semantic.issues)
            report.issues.push_back({prefix + issue.path, std::move(issue.message)});
    }
    return report;
}

std::string results_to_json(const std::vector<MatchResult>& results) {
    return detail::results_doc(results).dump();
}

}  // namespace matchdeg
