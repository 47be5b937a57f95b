#pragma once

#include <complex>
#include <vector>

namespace nullcurves::detail {

using cplx = std::complex<double>;

bool is_pow2(std::size_t n);
std::size_t next_pow2(std::size_t n);

// In-place DFT: x[j] <- sum_k x[k] * exp(sign * 2*pi*i * j*k / n).
// Radix-2 for power-of-two sizes, direct O(n^2) evaluation otherwise.
// No 1/n normalization in either direction.
void dft(std::vector<cplx>& x, int sign);

// Linear convolution of coefficient vectors. Schoolbook for short results,
// FFT-based for long ones.
std::vector<cplx> convolve(const std::vector<cplx>& a,
                           const std::vector<cplx>& b);

}  // namespace nullcurves::detail
