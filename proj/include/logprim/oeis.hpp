#ifndef LOGPRIM_OEIS_HPP
#define LOGPRIM_OEIS_HPP

#include <string>
#include <vector>

#include "logprim/rational.hpp"

namespace logprim {

struct OeisMatch {
    std::string sequence_id;  // e.g. "A014963"
    int matched_prefix_len = 1;
    std::string name;
};

enum class OeisOutcome {
    Ok,            // query answered (possibly with zero matches on record)
    CacheMiss,     // offline and nothing cached or bundled
    NetworkFallback  // online request failed, served from cache
};

struct OeisResult {
    OeisOutcome outcome = OeisOutcome::Ok;
    std::vector<OeisMatch> matches;
    bool truncated = false;
};

class OeisClient {
public:
    OeisClient(bool offline, std::string cache_dir,
               std::string fixtures_dir = LOGPRIM_FIXTURES_DIR);

    // At most 10 matches reported; online responses are written to the
    // cache so later offline runs replay them.
    OeisResult lookup(const std::vector<Integer>& sequence);

    // Stable key for a query: hex FNV-1a of the first 8 terms, comma-joined.
    static std::string fixture_key(const std::vector<Integer>& sequence);

private:
    bool offline_;
    std::string cache_dir_;
    std::string fixtures_dir_;
};

}  // namespace logprim

#endif
