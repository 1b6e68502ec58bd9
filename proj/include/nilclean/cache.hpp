#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>

namespace nilclean {

// Content-addressed result store: one file per key under a directory.
// Writes are serialized through a single mutex.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir);

    std::optional<std::string> get(const std::string& key) const;
    void put(const std::string& key, const std::string& value);

    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path path_for(const std::string& key) const;
    std::filesystem::path dir_;
    mutable std::mutex mu_;
};

}  // namespace nilclean
