#include "kac/partitions.hpp"

#include <deque>
#include <mutex>
#include <numeric>

#include "kac/errors.hpp"

namespace kac {

namespace {

void emit_partitions(long long m, long long max_part, Partition& prefix,
                     std::vector<Partition>& out) {
    if (m == 0) {
        out.push_back(prefix);
        return;
    }
    for (long long p = std::min(m, max_part); p >= 1; --p) {
        prefix.push_back(p);
        emit_partitions(m - p, p, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

const std::vector<Partition>& partitions_of(long long m) {
    if (m < 0) fail(ErrorKind::BadConfig, "partitions of a negative number");
    // deque: growth never moves existing entries, so returned references
    // stay valid while other threads extend the cache
    static std::deque<std::vector<Partition>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while ((long long)cache.size() <= m) {
        long long k = (long long)cache.size();
        std::vector<Partition> all;
        Partition prefix;
        emit_partitions(k, k, prefix, all);
        cache.push_back(std::move(all));
    }
    return cache[m];
}

long long partition_weight(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0LL);
}

long long part(const Partition& p, size_t k) {
    if (k == 0) fail(ErrorKind::BadIndex, "parts are 1-indexed");
    return k <= p.size() ? p[k - 1] : 0;
}

size_t max_length(const Multipartition& mp) {
    size_t len = 0;
    for (const Partition& p : mp) len = std::max(len, p.size());
    return len;
}

DimVector multipartition_weight(const Multipartition& mp) {
    DimVector w(mp.size());
    for (size_t i = 0; i < mp.size(); ++i) w[i] = partition_weight(mp[i]);
    return w;
}

DimVector row(const Multipartition& mp, size_t k) {
    DimVector r(mp.size());
    for (size_t i = 0; i < mp.size(); ++i) r[i] = part(mp[i], k);
    return r;
}

MultipartitionStream::MultipartitionStream(const DimVector& alpha) {
    lists_.reserve(alpha.size());
    for (long long m : alpha) {
        if (m < 0) fail(ErrorKind::BadConfig, "negative entry in dimension vector");
        lists_.push_back(&partitions_of(m));
    }
    idx_.assign(alpha.size(), 0);
    // every partitions_of(m) list is nonempty (m = 0 gives the empty partition)
}

std::optional<Multipartition> MultipartitionStream::next() {
    if (done_) return std::nullopt;
    if (!fresh_) {
        // odometer increment, last coordinate fastest
        size_t i = idx_.size();
        while (i-- > 0) {
            if (++idx_[i] < lists_[i]->size()) break;
            idx_[i] = 0;
            if (i == 0) {
                done_ = true;
                return std::nullopt;
            }
        }
        if (idx_.empty()) {
            done_ = true;
            return std::nullopt;
        }
    }
    fresh_ = false;
    Multipartition mp(idx_.size());
    for (size_t i = 0; i < idx_.size(); ++i) mp[i] = (*lists_[i])[idx_[i]];
    return mp;
}

std::vector<Multipartition> multipartitions_of(const DimVector& alpha) {
    std::vector<Multipartition> out;
    MultipartitionStream s(alpha);
    while (auto mp = s.next()) out.push_back(std::move(*mp));
    return out;
}

} // namespace kac
