#include "csp/enumerate.hpp"

#include <stdexcept>

namespace csp {

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > kCountSaturated / b) return kCountSaturated;
    return a * b;
}

std::uint64_t pow_sat(std::uint64_t base, int exp) {
    std::uint64_t out = 1;
    for (int i = 0; i < exp; ++i) out = mul_sat(out, base);
    return out;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t out = 1;
    for (int i = 1; i <= k; ++i) {
        // out * (n-k+i) / i is always integral at this point
        const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        if (out > kCountSaturated / num) return kCountSaturated;
        out = out * num / static_cast<std::uint64_t>(i);
    }
    return out;
}

void decode_mixed_radix(std::uint64_t rank, int radix, std::span<int> digits) {
    const auto r = static_cast<std::uint64_t>(radix);
    for (std::size_t i = digits.size(); i-- > 0;) {
        digits[i] = static_cast<int>(rank % r);
        rank /= r;
    }
}

void decode_combination(std::uint64_t rank, int n, std::span<int> out) {
    const int k = static_cast<int>(out.size());
    int next = 0;
    for (int i = 0; i < k; ++i) {
        for (int c = next;; ++c) {
            const std::uint64_t with_c = binomial(n - 1 - c, k - 1 - i);
            if (rank < with_c) {
                out[static_cast<std::size_t>(i)] = c;
                next = c + 1;
                break;
            }
            rank -= with_c;
            if (c >= n - 1) throw std::invalid_argument("combination rank out of range");
        }
    }
}

void decode_multiset(std::uint64_t rank, int n, std::span<int> out) {
    const int k = static_cast<int>(out.size());
    int floor = 0;
    for (int i = 0; i < k; ++i) {
        for (int c = floor;; ++c) {
            // multisets of the remaining k-1-i slots over values >= c
            const std::uint64_t with_c = binomial((n - c) + (k - 1 - i) - 1, k - 1 - i);
            if (rank < with_c) {
                out[static_cast<std::size_t>(i)] = c;
                floor = c;
                break;
            }
            rank -= with_c;
            if (c >= n - 1) throw std::invalid_argument("multiset rank out of range");
        }
    }
}

}  // namespace csp
