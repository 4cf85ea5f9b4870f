#include <matchdeg/store.hpp>

#include <matchdeg/json_codec.hpp>

#include "codec_detail.hpp"

#include <atomic>
#include <cerrno>
#include <fstream>
#include <mutex>
#include <sstream>
#include <system_error>
#include <utility>

#include <unistd.h>

namespace matchdeg {

ProfileStore::ProfileStore(ProfileStore&& other) noexcept {
    std::unique_lock lock(other.mutex_);
    entries_ = std::move(other.entries_);
}

ProfileStore& ProfileStore::operator=(ProfileStore&& other) noexcept {
    if (this != &other) {
        std::scoped_lock lock(mutex_, other.mutex_);
        entries_ = std::move(other.entries_);
    }
    return *this;
}

std::optional<Profile> ProfileStore::put(const OwnerId& owner, Role role,
                                         Profile profile,
                                         std::optional<TimePoint> updated_at) {
    ValidationReport report = validate_profile(profile, role);
    if (owner != profile.owner)
        report.issues.insert(report.issues.begin(),
                             {"owner", "key owner \"" + owner.value() +
                                           "\" differs from profile owner \"" +
                                           profile.owner.value() + "\""});
    if (!report.ok()) throw ValidationError(std::move(report));

    const TimePoint stamp =
        updated_at ? *updated_at
                   : std::chrono::floor<std::chrono::seconds>(
                         std::chrono::system_clock::now());

    std::unique_lock lock(mutex_);
    const Key key{owner.value(), role};
    std::optional<Profile> previous;
    if (auto it = entries_.find(key); it != entries_.end())
        previous = std::move(it->second.profile);
    entries_.insert_or_assign(key,
                              StoredProfile{owner, role, std::move(profile), stamp});
    return previous;
}

std::optional<StoredProfile> ProfileStore::get(const OwnerId& owner, Role role) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(Key{owner.value(), role});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

bool ProfileStore::remove(const OwnerId& owner, Role role) {
    std::unique_lock lock(mutex_);
    return entries_.erase(Key{owner.value(), role}) != 0;
}

std::size_t ProfileStore::size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
}

std::vector<StoredProfile> ProfileStore::profiles(Role role) const {
    std::shared_lock lock(mutex_);
    std::vector<StoredProfile> out;
    for (const auto& [key, entry] : entries_)
        if (key.second == role) out.push_back(entry);
    return out;
}

std::vector<Profile> ProfileStore::eligible_adverts(const OwnerId& searcher) const {
    std::shared_lock lock(mutex_);
    std::vector<Profile> out;
    for (const auto& [key, entry] : entries_)
        if (key.second == Role::advertising && entry.owner != searcher)
            out.push_back(entry.profile);
    return out;
}

ProfileStore ProfileStore::load_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::system_error(errno, std::generic_category(),
                                "cannot read " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    if (in.bad())
        throw std::system_error(errno, std::generic_category(),
                                "cannot read " + path.string());
    return store_from_json(text.str());
}

void ProfileStore::save_file(const std::filesystem::path& path) const {
    const std::string text = store_to_json(*this);

    static std::atomic<unsigned> save_serial{0};
    std::filesystem::path temp = path;
    temp += ".tmp." + std::to_string(::getpid()) + "." +
            std::to_string(save_serial.fetch_add(1));
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::system_error(errno, std::generic_category(),
                                    "cannot write " + temp.string());
        out << text << '\n';
        out.flush();
        if (!out) {
            const int saved = errno;
            out.close();
            std::error_code ignored;
            std::filesystem::remove(temp, ignored);
            throw std::system_error(saved, std::generic_category(),
                                    "cannot write " + temp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(temp, path, ec);
    if (ec) {
        std::error_code ignored;
        std::filesystem::remove(temp, ignored);
        throw std::system_error(ec, "cannot replace " + path.string());
    }
}

void StoreAccess::insert(ProfileStore& store, StoredProfile entry) {
    std::unique_lock lock(store.mutex_);
    ProfileStore::Key key{entry.owner.value(), entry.role};
    store.entries_.insert_or_assign(std::move(key), std::move(entry));
}

std::vector<StoredProfile> StoreAccess::snapshot(const ProfileStore& store) {
    std::shared_lock lock(store.mutex_);
    std::vector<StoredProfile> out;
    out.reserve(store.entries_.size());
    for (const auto& [key, entry] : store.entries_) out.push_back(entry);
    return out;
}

}  // namespace matchdeg
