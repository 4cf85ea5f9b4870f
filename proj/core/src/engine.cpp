#include <matchdeg/engine.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace matchdeg {

std::vector<CandidatePair> build_search_space(
    const Profile& search, const std::vector<const Profile*>& adverts) {
    std::vector<CandidatePair> pairs;
    pairs.reserve(adverts.size());
    for (const Profile* advert : adverts)
        if (advert->owner != search.owner) pairs.push_back({&search, advert});
    return pairs;
}

std::vector<MatchResult> rank(const MatchQuery& query,
                              const std::vector<const Profile*>& adverts,
                              std::vector<std::string>* diagnostics) {
    if (ValidationReport report = validate_profile(query.search, Role::search);
        !report.ok())
        throw ValidationError(std::move(report));
    if (query.search.item_count() == 0)
        throw std::invalid_argument("empty search profile");
    if (query.k && *query.k == 0)
        throw std::invalid_argument("k must be positive");

    std::vector<MatchResult> results;
    for (const CandidatePair& pair : build_search_space(query.search, adverts)) {
        if (ValidationReport report = validate_profile(*pair.advert, Role::advertising);
            !report.ok()) {
            if (diagnostics) {
                const ValidationIssue& first = report.issues.front();
                diagnostics->push_back("skipped advert \"" +
                                       pair.advert->owner.value() + "\": " +
                                       first.path + ": " + first.message);
            }
            continue;
        }
        results.push_back(MatchResult{
            pair.advert->owner,
            total_degree(*pair.search, *pair.advert, query.config), 0});
    }

    std::sort(results.begin(), results.end(),
              [](const MatchResult& lhs, const MatchResult& rhs) {
                  if (lhs.breakdown.total != rhs.breakdown.total)
                      return lhs.breakdown.total > rhs.breakdown.total;
                  return lhs.advert_owner < rhs.advert_owner;
              });

    if (query.k && results.size() > *query.k)
        results.erase(results.begin() + static_cast<std::ptrdiff_t>(*query.k),
                      results.end());
    for (std::size_t i = 0; i < results.size(); ++i) results[i].rank = i + 1;
    return results;
}

namespace {

std::vector<const Profile*> as_pointers(const std::vector<Profile>& adverts) {
    std::vector<const Profile*> pointers;
    pointers.reserve(adverts.size());
    for (const Profile& advert : adverts) pointers.push_back(&advert);
    return pointers;
}

}  // namespace

std::vector<MatchResult> rank(const MatchQuery& query,
                              const std::vector<Profile>& adverts,
                              std::vector<std::string>* diagnostics) {
    return rank(query, as_pointers(adverts), diagnostics);
}

std::optional<MatchResult> best_match(const MatchQuery& query,
                                      const std::vector<const Profile*>& adverts) {
    std::vector<MatchResult> results = rank(query, adverts);
    if (results.empty()) return std::nullopt;
    return std::move(results.front());
}

std::optional<MatchResult> best_match(const MatchQuery& query,
                                      const std::vector<Profile>& adverts) {
    return best_match(query, as_pointers(adverts));
}

}  // namespace matchdeg
