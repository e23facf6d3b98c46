#include "queuelab/cache.hpp"

#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace queuelab {

std::string to_string(CensusKind kind)
{
    switch (kind) {
    case CensusKind::queues_by_n: return "queues_by_n";
    case CensusKind::queues_by_n_m: return "queues_by_n_m";
    case CensusKind::kqueues_by_n_m_k: return "kqueues_by_n_m_k";
    case CensusKind::labelled_qn_le: return "labelled_qn_le";
    case CensusKind::labelled_regular: return "labelled_regular";
    }
    throw std::logic_error("unknown census kind");
}

CensusKind census_kind_from_string(const std::string& s)
{
    if (s == "queues_by_n") return CensusKind::queues_by_n;
    if (s == "queues_by_n_m") return CensusKind::queues_by_n_m;
    if (s == "kqueues_by_n_m_k") return CensusKind::kqueues_by_n_m_k;
    if (s == "labelled_qn_le") return CensusKind::labelled_qn_le;
    if (s == "labelled_regular") return CensusKind::labelled_regular;
    throw std::invalid_argument("unknown census kind '" + s + "'");
}

namespace {

std::string opt_to_string(std::optional<int> v)
{
    return v ? std::to_string(*v) : "-";
}

std::optional<int> opt_from_string(const std::string& s, int line_no)
{
    if (s == "-")
        return std::nullopt;
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size())
            throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("cache line " + std::to_string(line_no) +
                                 ": bad integer field '" + s + "'");
    }
}

} // namespace

std::string format_cache_line(const CensusEntry& e)
{
    std::ostringstream out;
    out << to_string(e.kind) << '\t' << e.n << '\t' << opt_to_string(e.m) << '\t'
        << opt_to_string(e.k) << '\t' << opt_to_string(e.delta) << '\t' << e.count.get_str()
        << '\t' << e.method << '\t' << e.timestamp;
    return out.str();
}

CensusEntry parse_cache_line(const std::string& line, int line_no)
{
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, '\t'))
        fields.push_back(field);
    if (fields.size() != 8)
        throw std::runtime_error("cache line " + std::to_string(line_no) + ": expected 8 fields, got " +
                                 std::to_string(fields.size()));
    CensusEntry e;
    e.kind = census_kind_from_string(fields[0]);
    auto n = opt_from_string(fields[1], line_no);
    if (!n)
        throw std::runtime_error("cache line " + std::to_string(line_no) + ": n is required");
    e.n = *n;
    e.m = opt_from_string(fields[2], line_no);
    e.k = opt_from_string(fields[3], line_no);
    e.delta = opt_from_string(fields[4], line_no);
    if (mpz_set_str(e.count.get_mpz_t(), fields[5].c_str(), 10) != 0 || fields[5].empty())
        throw std::runtime_error("cache line " + std::to_string(line_no) + ": bad count '" +
                                 fields[5] + "'");
    e.method = fields[6];
    e.timestamp = fields[7];
    return e;
}

CensusCache::CensusCache(std::string path) : path_(std::move(path))
{
    std::ifstream in(path_);
    if (!in)
        return; // absent cache: start empty, recompute silently
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#')
            continue;
        entries_.push_back(parse_cache_line(line, line_no));
    }
}

std::optional<CensusEntry> CensusCache::find(CensusKind kind, int n, std::optional<int> m,
                                             std::optional<int> k,
                                             std::optional<int> delta) const
{
    for (const auto& e : entries_)
        if (e.kind == kind && e.n == n && e.m == m && e.k == k && e.delta == delta)
            return e;
    return std::nullopt;
}

void CensusCache::append(const CensusEntry& entry)
{
    std::ofstream out(path_, std::ios::app);
    if (!out)
        throw std::runtime_error("cannot write cache file " + path_);
    out << format_cache_line(entry) << '\n';
    entries_.push_back(entry);
}

bool CensusCache::record_or_verify(const CensusEntry& entry)
{
    auto existing = find(entry.kind, entry.n, entry.m, entry.k, entry.delta);
    if (existing)
        return existing->count == entry.count;
    append(entry);
    return true;
}

std::string utc_timestamp()
{
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace queuelab
