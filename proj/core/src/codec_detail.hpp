#pragma once

#include <matchdeg/json_codec.hpp>
#include <matchdeg/store.hpp>

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace matchdeg {

// Codec-side access to the store: store files round-trip entries that parse
// but fail role validation, which put() would reject.
struct StoreAccess {
    static void insert(ProfileStore& store, StoredProfile entry);
    static std::vector<StoredProfile> snapshot(const ProfileStore& store);
};

namespace detail {

using Json = nlohmann::json;

// Best-effort walk of a profile document. Appends one issue per problem,
// prefixing paths with `prefix` ("profiles[2]." inside a store file), and
// returns the profile only when the document was clean. `extra_fields` names
// sibling keys that are legal in the enclosing document (store bookkeeping).
std::optional<Profile> parse_profile(const Json& doc, const std::string& prefix,
                                     std::vector<ValidationIssue>& issues,
                                     const std::vector<std::string>& extra_fields = {});

Json profile_doc(const Profile& profile);

std::optional<Weights> parse_weights(const Json& doc, const std::string& prefix,
                                     std::vector<ValidationIssue>& issues);

Json results_doc(const std::vector<MatchResult>& results);

// "YYYY-MM-DDThh:mm:ssZ", UTC, seconds precision.
std::string format_timestamp(TimePoint time);
std::optional<TimePoint> parse_timestamp(const std::string& text);

}  // namespace detail
}  // namespace matchdeg
