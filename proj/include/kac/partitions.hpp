#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kac/quiver.hpp"

namespace kac {

// Partition of m as a weakly decreasing list of positive parts; m = 0 is the
// empty list.
using Partition = std::vector<long long>;

// All partitions of m, largest-part-first within each partition, listed in
// reverse lexicographic order: (m), (m-1,1), ..., (1,...,1). Cached.
const std::vector<Partition>& partitions_of(long long m);

// One partition per vertex; component i partitions alpha_i.
using Multipartition = std::vector<Partition>;

long long partition_weight(const Partition& p);
// k-th part (1-indexed), 0 when k exceeds the length
long long part(const Partition& p, size_t k);
size_t max_length(const Multipartition& mp);
// the dimension vector (|lambda^1|, ..., |lambda^n|)
DimVector multipartition_weight(const Multipartition& mp);
// row vector (lambda^1_k, ..., lambda^n_k) for 1-indexed k
DimVector row(const Multipartition& mp, size_t k);

// All multipartitions of alpha: the product of the per-vertex partition
// lists, iterated odometer-style (last coordinate fastest).
class MultipartitionStream {
public:
    explicit MultipartitionStream(const DimVector& alpha);
    std::optional<Multipartition> next();

private:
    std::vector<const std::vector<Partition>*> lists_;
    std::vector<size_t> idx_;
    bool done_ = false;
    bool fresh_ = true;
};

std::vector<Multipartition> multipartitions_of(const DimVector& alpha);

} // namespace kac
