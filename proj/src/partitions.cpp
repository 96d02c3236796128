#include "arlab/partitions.hpp"

#include <stdexcept>

namespace arlab {

namespace {

bool rec(std::vector<int>& a, int i, int curmax, int m, int r,
         const std::function<bool(const std::vector<int>&)>& visit) {
    if (i == m) return curmax == r - 1 ? visit(a) : true;
    int hi = curmax + 1 < r - 1 ? curmax + 1 : r - 1;
    for (int val = 0; val <= hi; ++val) {
        int newmax = val > curmax ? val : curmax;
        // the remaining positions must still be able to introduce the
        // missing block labels
        if (r - 1 - newmax > m - 1 - i) continue;
        a[i] = val;
        if (!rec(a, i + 1, newmax, m, r, visit)) return false;
    }
    return true;
}

} // namespace

bool for_each_partition_rgs(int m, int r,
                            const std::function<bool(const std::vector<int>&)>& visit) {
    if (m < 0 || r < 1) throw std::invalid_argument("need m >= 0 and r >= 1");
    if (r > m) return true; // no partition of m elements into more than m blocks
    std::vector<int> a(m, 0);
    if (m == 0) return true;
    return rec(a, 1, 0, m, r, visit); // a[0] is fixed to 0
}

unsigned long long stirling2(int m, int r) {
    if (r < 0 || m < 0) throw std::invalid_argument("need m, r >= 0");
    if (r > m) return 0;
    if (m == 0) return 1; // r == 0 here
    if (r == 0) return 0;
    constexpr unsigned long long kCap = ~0ull / 4;
    std::vector<unsigned long long> row(r + 1, 0);
    row[0] = 1; // S(0, 0)
    for (int i = 1; i <= m; ++i) {
        for (int j = r < i ? r : i; j >= 1; --j) {
            unsigned long long v = row[j] * j + row[j - 1];
            row[j] = v > kCap ? kCap : v;
        }
        row[0] = 0;
    }
    return row[r];
}

} // namespace arlab
