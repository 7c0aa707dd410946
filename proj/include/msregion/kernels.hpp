#pragma once

#include "msregion/poly.hpp"
#include "msregion/regions.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace msr {

/// A polynomial flattened for batched double evaluation.
struct CompiledPoly {
  std::size_t nvars = 0;
  std::vector<double> coeffs;
  std::vector<std::uint32_t> exps;  // term-major, nvars entries per term
};

CompiledPoly compile(const Poly& p);

enum class Isa { Scalar, Avx2 };
const char* isa_name(Isa isa);
/// Best instruction set available on this machine.
Isa detected_isa();

/// Points are structure-of-arrays: coordinate v of point i is soa[v * n + i].
/// Writes p(x_i) and sum |terms|(x_i). Both paths perform the same operations
/// in the same order, so results agree bit for bit.
void eval_batch(Isa isa, const CompiledPoly& p, std::span<const double> soa, std::size_t n, double* value,
                double* magnitude);

namespace detail {
void eval_batch_scalar(const CompiledPoly& p, const double* soa, std::size_t n, double* value, double* magnitude);
void eval_batch_avx2(const CompiledPoly& p, const double* soa, std::size_t n, double* value, double* magnitude);
}  // namespace detail

/// Region membership for many double points. A sign is trusted only when
/// |p| > rel_guard * sum |terms|; other points are decided exactly.
class BatchClassifier {
 public:
  explicit BatchClassifier(const Region& region, Isa isa = detected_isa(), double rel_guard = 1e-12);

  /// Returns, per point, the index of the first containing conjunct or -1.
  std::vector<int> classify(std::span<const double> soa, std::size_t n) const;
  /// Bit j set when the point lies in conjunct j (at most 64 conjuncts).
  std::vector<std::uint64_t> masks(std::span<const double> soa, std::size_t n) const;
  /// Number of exact (point, conjunct) evaluations in the last call.
  std::size_t exact_fallbacks() const { return fallbacks_; }

 private:
  const Region& region_;
  Isa isa_;
  double guard_;
  std::vector<std::vector<CompiledPoly>> compiled_;
  mutable std::size_t fallbacks_ = 0;
};

}  // namespace msr
