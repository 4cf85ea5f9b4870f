#pragma once

#include <matchdeg/engine.hpp>
#include <matchdeg/profile.hpp>
#include <matchdeg/scoring.hpp>
#include <matchdeg/store.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace matchdeg {

// A malformed document: carries the dotted path of the offending field
// ("interests.tennis", "profiles[2].role"; empty for whole-document problems).
class DocumentError : public std::runtime_error {
public:
    DocumentError(std::string path, const std::string& message);

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

// Profile document format, shared by the store file, the CLI, and the HTTP
// service:
//
//   {
//     "owner":     "Alice",
//     "numeric":   { "age": {"min": 20, "max": 40} },
//     "discrete":  { "eye_color": ["blue", "green"] },
//     "interests": { "tennis": 1.0 }
//   }
//
// All three sections are optional. Omitting "min" means -inf, omitting "max"
// means +inf; {"empty": true} encodes the empty range. Unknown fields are
// rejected. Throws DocumentError on the first problem found.
Profile profile_from_json(std::string_view text);

std::string profile_to_json(const Profile& profile);

// Non-throwing check of a profile document: collects every document problem
// plus, when a role is given, the role's validation issues.
ValidationReport check_profile_json(std::string_view text,
                                    std::optional<Role> role = std::nullopt);

// Weights document: {"numeric": {...}, "discrete": {...}, "interest": {...}},
// each section mapping item names to positive numbers. All sections optional.
// Throws DocumentError.
Weights weights_from_json(std::string_view text);

// Store file format:
//   {"profiles": [ {"role": "search"|"advertising",
//                   "updated_at": "2026-06-01T12:00:00Z",  // optional
//                   ...profile document...}, ... ]}
// A duplicate (owner, role) entry is an error naming the duplicate. Throws
// DocumentError.
ProfileStore store_from_json(std::string_view text);

std::string store_to_json(const ProfileStore& store);

// Non-throwing check of a store file: document problems plus role-aware
// validation of every entry.
ValidationReport check_store_json(std::string_view text);

// Wire form of ranked results, used verbatim by POST /match and the CLI's
// JSON mode so the two are byte-identical:
//   {"results": [{"owner": ..., "total": ..., "rank": ...,
//                 "breakdown": {item: {"kind", "partial", "weight"}}}]}
std::string results_to_json(const std::vector<MatchResult>& results);

}  // namespace matchdeg
