#include "paragrass/berezin.hpp"

#include <stdexcept>

namespace paragrass {

static void check_n(int n) {
    if (n < 1) throw std::invalid_argument("berezin table needs n >= 1");
}

GTable g_recurrence(int n) {
    check_n(n);
    GTable t{n, std::vector<long>(static_cast<size_t>(n) + 1, 0)};
    t.g[static_cast<size_t>(n)] = 1;
    for (int k = n - 1; k >= 0; --k) {
        long next = t.g[static_cast<size_t>(k) + 1];
        t.g[static_cast<size_t>(k)] = 1 + ((k + 1) % 2 == 0 ? next : -next);
    }
    return t;
}

GTable g_closed(int n) {
    check_n(n);
    GTable t{n, std::vector<long>(static_cast<size_t>(n) + 1, 0)};
    for (int k = 0; k <= n; ++k) {
        long sum = 1;
        for (int i = 1; i <= n - k; ++i) {
            long e = static_cast<long>(k) * i + static_cast<long>(i) * (i + 1) / 2;
            sum += (e % 2 == 0) ? 1 : -1;
        }
        t.g[static_cast<size_t>(k)] = sum;
    }
    return t;
}

}  // namespace paragrass
