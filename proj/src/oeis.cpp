#include "logprim/oeis.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#include <json.hpp>

namespace logprim {

namespace {

constexpr size_t kMaxMatches = 10;

std::string join_terms(const std::vector<Integer>& seq, size_t limit) {
    std::ostringstream os;
    for (size_t i = 0; i < seq.size() && i < limit; ++i) {
        if (i) os << ',';
        os << seq[i].get_str();
    }
    return os.str();
}

// Matches are stored/served as {"matches": [{"id", "name", "matched_prefix_len"}],
// "no_match": bool} keyed by fixture_key.
OeisResult parse_record(const nlohmann::json& rec) {
    OeisResult res;
    for (const auto& m : rec.value("matches", nlohmann::json::array())) {
        OeisMatch match;
        match.sequence_id = m.value("id", "");
        match.name = m.value("name", "");
        match.matched_prefix_len = m.value("matched_prefix_len", 1);
        res.matches.push_back(std::move(match));
        if (res.matches.size() == kMaxMatches) {
            res.truncated = true;
            break;
        }
    }
    return res;
}

// Longest run of query terms appearing contiguously at the start of the
// OEIS data field.
int prefix_match_len(const std::vector<Integer>& query,
                     const std::string& data_csv) {
    std::vector<std::string> data;
    std::stringstream ss(data_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) data.push_back(tok);
    int best = 0;
    for (size_t start = 0; start < data.size(); ++start) {
        int len = 0;
        while ((size_t)len < query.size() && start + len < data.size() &&
               data[start + len] == query[len].get_str())
            ++len;
        best = std::max(best, len);
        if ((size_t)best == query.size()) break;
    }
    return std::max(best, 1);
}

}  // namespace

std::string OeisClient::fixture_key(const std::vector<Integer>& sequence) {
    std::string s = join_terms(sequence, 8);
    uint64_t h = 1469598103934665603ULL;  // FNV-1a 64
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

OeisClient::OeisClient(bool offline, std::string cache_dir,
                       std::string fixtures_dir)
    : offline_(offline),
      cache_dir_(std::move(cache_dir)),
      fixtures_dir_(std::move(fixtures_dir)) {}

OeisResult OeisClient::lookup(const std::vector<Integer>& sequence) {
    if (sequence.empty() || sequence.size() > 64)
        throw std::invalid_argument("oeis: sequence length must be 1..64");
    const std::string key = fixture_key(sequence);

    auto try_file = [&](const std::string& dir, OeisResult& out) {
        if (dir.empty()) return false;
        std::filesystem::path p = std::filesystem::path(dir) / (key + ".json");
        std::ifstream in(p);
        if (!in) return false;
        nlohmann::json rec = nlohmann::json::parse(in);
        out = parse_record(rec);
        return true;
    };

    if (!offline_) {
        httplib::SSLClient client("oeis.org");
        client.set_connection_timeout(10);
        auto resp = client.Get("/search?q=" + join_terms(sequence, 64) +
                               "&fmt=json");
        if (resp && resp->status == 200) {
            nlohmann::json body = nlohmann::json::parse(resp->body, nullptr,
                                                        false);
            nlohmann::json rec{{"matches", nlohmann::json::array()},
                               {"no_match", true}};
            if (!body.is_discarded() && body.contains("results") &&
                body["results"].is_array()) {
                for (const auto& r : body["results"]) {
                    char id[16];
                    snprintf(id, sizeof id, "A%06d", r.value("number", 0));
                    rec["matches"].push_back(
                        {{"id", id},
                         {"name", r.value("name", "")},
                         {"matched_prefix_len",
                          prefix_match_len(sequence, r.value("data", ""))}});
                }
                rec["no_match"] = rec["matches"].empty();
            }
            if (!cache_dir_.empty()) {
                std::filesystem::create_directories(cache_dir_);
                std::ofstream out(std::filesystem::path(cache_dir_) /
                                  (key + ".json"));
                out << rec.dump(2) << "\n";
            }
            return parse_record(rec);
        }
        // network failure: fall back to cache, flagged
        OeisResult res;
        if (try_file(cache_dir_, res) || try_file(fixtures_dir_, res)) {
            res.outcome = OeisOutcome::NetworkFallback;
            return res;
        }
        res.outcome = OeisOutcome::CacheMiss;
        return res;
    }

    OeisResult res;
    if (try_file(cache_dir_, res) || try_file(fixtures_dir_, res))
        return res;
    res.outcome = OeisOutcome::CacheMiss;
    return res;
}

}  // namespace logprim
