#ifndef ARLAB_PARTITIONS_HPP
#define ARLAB_PARTITIONS_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace arlab {

// Visits every partition of {0..m-1} into exactly r non-empty unlabeled
// blocks, encoded as a restricted growth string (a[0] = 0,
// a[i] <= 1 + max(a[0..i-1])), in lexicographic order. The visitor returns
// false to stop; the function returns false iff it was stopped.
bool for_each_partition_rgs(int m, int r, const std::function<bool(const std::vector<int>&)>& visit);

// Number of partitions of an m-set into exactly r blocks (Stirling, second
// kind). Saturates at a large sentinel beyond 64-bit range.
unsigned long long stirling2(int m, int r);

} // namespace arlab

#endif
