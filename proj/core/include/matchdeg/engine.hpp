#pragma once

#include <matchdeg/profile.hpp>
#include <matchdeg/scoring.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace matchdeg {

// One scored advert. Ranks are 1-based and contiguous within a result list,
// which is ordered by breakdown.total descending.
struct MatchResult {
    OwnerId advert_owner;
    ScoreBreakdown breakdown;
    std::size_t rank = 0;

    double total() const noexcept { return breakdown.total; }
};

// A match request: the searching profile, scoring configuration, and how many
// results to return. A k of nullopt means all; 0 is rejected at query time.
struct MatchQuery {
    Profile search;
    MatchConfig config{};
    std::optional<std::size_t> k{};
};

// A feasible scoring pair. Pointers refer into the caller's collections.
struct CandidatePair {
    const Profile* search;
    const Profile* advert;
};

// Pairs the search with every advert not owned by the searcher.
std::vector<CandidatePair> build_search_space(
    const Profile& search, const std::vector<const Profile*>& adverts);

// Scores every pair from build_search_space and sorts by total descending,
// advert owner ascending on ties, then truncates to k and assigns ranks 1..n.
// The result is deterministic and independent of the input order. Adverts
// failing advertising-role validation are skipped; when `diagnostics` is
// given, one message per skipped advert is appended to it. Throws
// ValidationError when the search profile is invalid, std::invalid_argument
// when it has no items or k is 0.
std::vector<MatchResult> rank(const MatchQuery& query,
                              const std::vector<const Profile*>& adverts,
                              std::vector<std::string>* diagnostics = nullptr);

std::vector<MatchResult> rank(const MatchQuery& query,
                              const std::vector<Profile>& adverts,
                              std::vector<std::string>* diagnostics = nullptr);

// The top-ranked result, or nullopt when no advert is eligible.
std::optional<MatchResult> best_match(const MatchQuery& query,
                                      const std::vector<const Profile*>& adverts);

std::optional<MatchResult> best_match(const MatchQuery& query,
                                      const std::vector<Profile>& adverts);

}  // namespace matchdeg
