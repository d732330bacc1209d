#include "zeta4/cache.hpp"

#include <fstream>

#include <json.hpp>

namespace zeta4 {

void MzvCache::load() {
    std::lock_guard<std::mutex> lock(mu_);
    entries_.clear();
    if (path_.empty()) return;
    std::ifstream in(path_);
    if (!in) return; // missing file: start empty
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            nlohmann::json j = nlohmann::json::parse(line);
            Record r;
            r.index = j.at("index").get<std::vector<int>>();
            r.star = j.at("star").get<bool>();
            r.value = j.at("value").get<std::string>();
            r.err = j.at("err").get<std::string>();
            r.prec_bits = j.at("prec_bits").get<long>();
            entries_[{r.index, r.star}] = std::move(r);
        } catch (const nlohmann::json::exception&) {
            // corrupt line: skip and recompute later
        }
    }
}

void MzvCache::save() const {
    std::lock_guard<std::mutex> lock(mu_);
    if (path_.empty()) return;
    std::ofstream out(path_, std::ios::trunc);
    for (const auto& [key, r] : entries_) {
        nlohmann::json j;
        j["index"] = r.index;
        j["star"] = r.star;
        j["value"] = r.value;
        j["err"] = r.err;
        j["prec_bits"] = r.prec_bits;
        out << j.dump() << '\n';
    }
}

std::optional<MzvCache::Record> MzvCache::lookup(const std::vector<int>& index, bool star) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find({index, star});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void MzvCache::store(const Record& r) {
    std::lock_guard<std::mutex> lock(mu_);
    entries_[{r.index, r.star}] = r;
}

std::size_t MzvCache::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return entries_.size();
}

} // namespace zeta4
