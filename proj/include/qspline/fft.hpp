#ifndef QSPLINE_FFT_HPP
#define QSPLINE_FFT_HPP

#include <bit>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace qspline {

/// In-place radix-2 Cooley-Tukey transform.  sign = -1 computes
/// X_k = sum_j x_j e^{-2 pi i jk/n} (forward), sign = +1 the unnormalized
/// inverse; caller divides by n where needed.
inline void fft(std::vector<std::complex<double>>& x, int sign) {
    const std::size_t n = x.size();
    if (n == 0) return;
    if (!std::has_single_bit(n)) throw std::invalid_argument("fft: size must be a power of two");

    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const auto even = x[i + k];
                const auto odd = x[i + k + len / 2] * w;
                x[i + k] = even + odd;
                x[i + k + len / 2] = even - odd;
                w *= wlen;
            }
        }
    }
}

inline void fft_forward(std::vector<std::complex<double>>& x) { fft(x, -1); }
inline void fft_inverse_unscaled(std::vector<std::complex<double>>& x) { fft(x, +1); }

} // namespace qspline

#endif
