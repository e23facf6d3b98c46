#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace queuelab {

enum class CensusKind {
    queues_by_n,
    queues_by_n_m,
    kqueues_by_n_m_k,
    labelled_qn_le,
    labelled_regular,
};

std::string to_string(CensusKind kind);
CensusKind census_kind_from_string(const std::string& s);

// One cached census record. Absent parameters stay disengaged and serialize
// as "-". Counts are exact decimal integers.
struct CensusEntry {
    CensusKind kind = CensusKind::queues_by_n;
    int n = 0;
    std::optional<int> m;
    std::optional<int> k;
    std::optional<int> delta;
    mpz_class count;
    std::string method;    // single token, no whitespace
    std::string timestamp; // ISO-8601 UTC, preserved verbatim on reread

    friend bool operator==(const CensusEntry&, const CensusEntry&) = default;
};

// Line format (tab-separated, one record per line, '#' comments allowed):
//   kind  n  m  k  delta  count  method  timestamp
// Formatting then parsing a record is the identity, so a cache file rereads
// bit-exactly.
std::string format_cache_line(const CensusEntry& entry);
CensusEntry parse_cache_line(const std::string& line, int line_no);

// Append-only census cache backed by a text file. Entries are immutable
// once written; a recomputed count is checked against the cached one.
class CensusCache {
public:
    explicit CensusCache(std::string path);

    const std::string& path() const { return path_; }
    const std::vector<CensusEntry>& entries() const { return entries_; }

    std::optional<CensusEntry> find(CensusKind kind, int n, std::optional<int> m,
                                    std::optional<int> k, std::optional<int> delta) const;

    // Appends to memory and to the backing file.
    void append(const CensusEntry& entry);

    // Verifies a fresh count against the cache; stores it when absent.
    // Returns false on a mismatch with an existing entry.
    bool record_or_verify(const CensusEntry& entry);

private:
    std::string path_;
    std::vector<CensusEntry> entries_;
};

std::string utc_timestamp();

} // namespace queuelab
