#pragma once

#include <matchdeg/profile.hpp>

#include <chrono>
#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <utility>
#include <vector>

namespace matchdeg {

using TimePoint = std::chrono::sys_seconds;

// A profile with its storage bookkeeping. Timestamps are metadata only and
// never influence scoring or ordering.
struct StoredProfile {
    OwnerId owner;
    Role role;
    Profile profile;
    TimePoint updated_at{};
};

// Keyed collection of profiles, at most one per (owner, role), so one owner
// may hold a search and an advertising profile at the same time. Reads may
// run concurrently; writes are serialized and a concurrent read sees either
// the whole old state or the whole new state.
class ProfileStore {
public:
    ProfileStore() = default;
    ProfileStore(ProfileStore&& other) noexcept;
    ProfileStore& operator=(ProfileStore&& other) noexcept;
    ProfileStore(const ProfileStore&) = delete;
    ProfileStore& operator=(const ProfileStore&) = delete;

    // Validates the profile for the role and upserts it under (owner, role),
    // returning the replaced profile if one existed. The key owner must equal
    // the profile's owner. On validation failure throws ValidationError and
    // leaves the store unchanged. updated_at defaults to the current time.
    std::optional<Profile> put(const OwnerId& owner, Role role, Profile profile,
                               std::optional<TimePoint> updated_at = std::nullopt);

    std::optional<StoredProfile> get(const OwnerId& owner, Role role) const;
    bool remove(const OwnerId& owner, Role role);
    std::size_t size() const;

    // Every stored profile of the role, owner ascending.
    std::vector<StoredProfile> profiles(Role role) const;

    // Advertising profiles whose owner differs from the searcher, owner
    // ascending. The searcher need not be in the store.
    std::vector<Profile> eligible_adverts(const OwnerId& searcher) const;

    // Reads a store file. Throws DocumentError (see json_codec.hpp) on
    // malformed content, including duplicate (owner, role) entries, and
    // std::system_error when the file cannot be read. A file that fails to
    // parse yields no store at all rather than a partial one.
    static ProfileStore load_file(const std::filesystem::path& path);

    // Writes the documented JSON format atomically: a temporary file in the
    // target directory is renamed over the destination. Throws
    // std::system_error on IO failure.
    void save_file(const std::filesystem::path& path) const;

private:
    // Bridge for the JSON codec: store files round-trip profiles that parse
    // but fail role validation, so rank can skip them with a diagnostic.
    friend struct StoreAccess;

    using Key = std::pair<std::string, Role>;

    mutable std::shared_mutex mutex_;
    std::map<Key, StoredProfile> entries_;
};

}  // namespace matchdeg
