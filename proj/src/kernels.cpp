#include "msregion/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace msr {

CompiledPoly compile(const Poly& p) {
  CompiledPoly out;
  out.nvars = p.nvars();
  for (const auto& [m, c] : p.terms()) {
    out.coeffs.push_back(to_double(c));
    out.exps.insert(out.exps.end(), m.begin(), m.end());
  }
  return out;
}

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

Isa detected_isa() {
#if defined(__x86_64__) && defined(MSR_HAVE_AVX2)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return Isa::Avx2;
#endif
  return Isa::Scalar;
}

namespace detail {

void eval_batch_scalar(const CompiledPoly& p, const double* soa, std::size_t n, double* value, double* magnitude) {
  const std::size_t nt = p.coeffs.size();
  for (std::size_t i = 0; i < n; ++i) {
    double val = 0.0, mag = 0.0;
    for (std::size_t t = 0; t < nt; ++t) {
      double term = p.coeffs[t];
      const std::uint32_t* e = &p.exps[t * p.nvars];
      for (std::size_t v = 0; v < p.nvars; ++v)
        for (std::uint32_t k = 0; k < e[v]; ++k) term = term * soa[v * n + i];
      val = val + term;
      mag = mag + std::fabs(term);
    }
    value[i] = val;
    magnitude[i] = mag;
  }
}

}  // namespace detail

void eval_batch(Isa isa, const CompiledPoly& p, std::span<const double> soa, std::size_t n, double* value,
                double* magnitude) {
  if (soa.size() != p.nvars * n) throw std::invalid_argument("point buffer size does not match");
#ifdef MSR_HAVE_AVX2
  if (isa == Isa::Avx2) return detail::eval_batch_avx2(p, soa.data(), n, value, magnitude);
#else
  if (isa == Isa::Avx2) throw std::runtime_error("built without the AVX2 kernel");
#endif
  detail::eval_batch_scalar(p, soa.data(), n, value, magnitude);
}

BatchClassifier::BatchClassifier(const Region& region, Isa isa, double rel_guard)
    : region_(region), isa_(isa), guard_(rel_guard) {
  for (const auto& conj : region.conjuncts) {
    std::vector<CompiledPoly> cs;
    for (const auto& c : conj) cs.push_back(compile(c.poly));
    compiled_.push_back(std::move(cs));
  }
}

std::vector<std::uint64_t> BatchClassifier::masks(std::span<const double> soa, std::size_t n) const {
  const std::size_t dim = region_.dimension();
  if (soa.size() != dim * n) throw std::invalid_argument("point buffer size does not match");
  if (compiled_.size() > 64) throw std::invalid_argument("too many conjuncts for a membership mask");
  fallbacks_ = 0;
  std::vector<std::uint64_t> out(n, 0);
  std::vector<double> val(n), mag(n);
  std::vector<Rational> pt(dim);
  for (std::size_t j = 0; j < compiled_.size(); ++j) {
    std::vector<char> inside(n, 1), uncertain(n, 0);
    for (std::size_t c = 0; c < compiled_[j].size(); ++c) {
      eval_batch(isa_, compiled_[j][c], soa, n, val.data(), mag.data());
      Relation rel = region_.conjuncts[j][c].rel;
      for (std::size_t i = 0; i < n; ++i) {
        if (!inside[i]) continue;
        if (std::fabs(val[i]) <= guard_ * mag[i]) {
          uncertain[i] = 1;
          continue;
        }
        bool ok = rel == Relation::Positive ? val[i] > 0 : (rel == Relation::Negative ? val[i] < 0 : false);
        if (!ok) inside[i] = 0;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!inside[i]) continue;
      if (uncertain[i]) {
        ++fallbacks_;
        for (std::size_t v = 0; v < dim; ++v) pt[v] = from_double(soa[v * n + i]);
        const auto& conj = region_.conjuncts[j];
        if (!std::all_of(conj.begin(), conj.end(), [&](const SignCondition& sc) { return sc.holds(pt); })) continue;
      }
      out[i] |= std::uint64_t{1} << j;
    }
  }
  return out;
}

std::vector<int> BatchClassifier::classify(std::span<const double> soa, std::size_t n) const {
  auto m = masks(soa, n);
  std::vector<int> out(n, -1);
  for (std::size_t i = 0; i < n; ++i)
    if (m[i]) out[i] = std::countr_zero(m[i]);
  return out;
}

}  // namespace msr
