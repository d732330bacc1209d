#ifndef ZETA4_CACHE_HPP
#define ZETA4_CACHE_HPP

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace zeta4 {

// Persistent store of computed values, one JSON object per line:
// {"index":[2,1,1,1],"star":false,"value":"...","err":"...","prec_bits":128}
// Decimal strings round-trip exactly at the recorded precision.
class MzvCache {
public:
    struct Record {
        std::vector<int> index;
        bool star = false;
        std::string value;
        std::string err;
        long prec_bits = 0;
    };

    MzvCache() = default;
    explicit MzvCache(std::string path) : path_(std::move(path)) { load(); }

    // Missing file yields an empty cache; unparseable lines are dropped.
    void load();
    void save() const;

    std::optional<Record> lookup(const std::vector<int>& index, bool star) const;
    void store(const Record& r);

    std::size_t size() const;
    const std::string& path() const { return path_; }

private:
    using Key = std::pair<std::vector<int>, bool>;
    std::string path_;
    std::map<Key, Record> entries_;
    mutable std::mutex mu_;
};

} // namespace zeta4

#endif
