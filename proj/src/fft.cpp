#include "fft.hpp"

#include <cmath>

namespace nullcurves::detail {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

static void fft_pow2(std::vector<cplx>& x, int sign) {
  const std::size_t n = x.size();
  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * kPi / static_cast<double>(len);
    const cplx wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      cplx w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        cplx u = x[i + k];
        cplx v = x[i + k + len / 2] * w;
        x[i + k] = u + v;
        x[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

void dft(std::vector<cplx>& x, int sign) {
  const std::size_t n = x.size();
  if (n <= 1) return;
  if (is_pow2(n)) {
    fft_pow2(x, sign);
    return;
  }
  std::vector<cplx> out(n, cplx(0.0, 0.0));
  for (std::size_t j = 0; j < n; ++j) {
    cplx acc(0.0, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      const double ang =
          sign * 2.0 * kPi * static_cast<double>((j * k) % n) / static_cast<double>(n);
      acc += x[k] * cplx(std::cos(ang), std::sin(ang));
    }
    out[j] = acc;
  }
  x = std::move(out);
}

std::vector<cplx> convolve(const std::vector<cplx>& a,
                           const std::vector<cplx>& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t out_len = a.size() + b.size() - 1;
  if (out_len <= 512) {
    std::vector<cplx> out(out_len, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
  }
  const std::size_t n = next_pow2(out_len);
  std::vector<cplx> fa(n, cplx(0.0, 0.0)), fb(n, cplx(0.0, 0.0));
  std::copy(a.begin(), a.end(), fa.begin());
  std::copy(b.begin(), b.end(), fb.begin());
  dft(fa, -1);
  dft(fb, -1);
  for (std::size_t i = 0; i < n; ++i) fa[i] *= fb[i];
  dft(fa, +1);
  const double inv = 1.0 / static_cast<double>(n);
  std::vector<cplx> out(out_len);
  for (std::size_t i = 0; i < out_len; ++i) out[i] = fa[i] * inv;
  return out;
}

}  // namespace nullcurves::detail
