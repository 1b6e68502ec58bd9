#include "nilclean/cache.hpp"

#include <fstream>
#include <sstream>

#include "nilclean/hash.hpp"

namespace nilclean {

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::filesystem::path ResultCache::path_for(const std::string& key) const {
    return dir_ / (string_hash(key) + ".json");
}

std::optional<std::string> ResultCache::get(const std::string& key) const {
    std::lock_guard lock(mu_);
    std::ifstream in(path_for(key), std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void ResultCache::put(const std::string& key, const std::string& value) {
    std::lock_guard lock(mu_);
    auto tmp = path_for(key);
    auto final = tmp;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        out << value;
    }
    std::filesystem::rename(tmp, final);
}

}  // namespace nilclean
