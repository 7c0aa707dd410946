#include "msregion/kernels.hpp"

#include <immintrin.h>

namespace msr::detail {

// Four points per lane group; multiplies and adds in the scalar order, no FMA.
void eval_batch_avx2(const CompiledPoly& p, const double* soa, std::size_t n, double* value, double* magnitude) {
  const std::size_t nt = p.coeffs.size();
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d val = _mm256_setzero_pd(), mag = _mm256_setzero_pd();
    for (std::size_t t = 0; t < nt; ++t) {
      __m256d term = _mm256_set1_pd(p.coeffs[t]);
      const std::uint32_t* e = &p.exps[t * p.nvars];
      for (std::size_t v = 0; v < p.nvars; ++v) {
        if (e[v] == 0) continue;
        __m256d x = _mm256_loadu_pd(soa + v * n + i);
        for (std::uint32_t k = 0; k < e[v]; ++k) term = _mm256_mul_pd(term, x);
      }
      val = _mm256_add_pd(val, term);
      mag = _mm256_add_pd(mag, _mm256_andnot_pd(sign_mask, term));
    }
    _mm256_storeu_pd(value + i, val);
    _mm256_storeu_pd(magnitude + i, mag);
  }
  if (i < n) {
    // tail through the scalar kernel on a compacted copy
    std::size_t rest = n - i;
    std::vector<double> tail(p.nvars * rest);
    for (std::size_t v = 0; v < p.nvars; ++v)
      for (std::size_t j = 0; j < rest; ++j) tail[v * rest + j] = soa[v * n + i + j];
    eval_batch_scalar(p, tail.data(), rest, value + i, magnitude + i);
  }
}

}  // namespace msr::detail
