#include "minuscule/kernels.hpp"

#include <algorithm>

namespace minuscule::kernels {
namespace {

Int common_denominator(std::span<const Rat> v) {
  Int l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

std::vector<Int> lift(std::span<const Rat> v, const Int& scale) {
  std::vector<Int> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Int q;
    mpz_divexact(q.get_mpz_t(), scale.get_mpz_t(), v[i].get_den_mpz_t());
    out[i] = v[i].get_num() * q;
  }
  return out;
}

}  // namespace

std::vector<Rat> convolve_reference(std::span<const Rat> a, std::span<const Rat> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rat> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<Int> convolve_reference(std::span<const Int> a, std::span<const Int> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Int> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<Int> convolve_parallel(std::span<const Int> a, std::span<const Int> b) {
  if (a.empty() || b.empty()) return {};
  const long na = static_cast<long>(a.size());
  const long nb = static_cast<long>(b.size());
  const long n = na + nb - 1;
  std::vector<Int> out(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 4)
  for (long k = 0; k < n; ++k) {
    mpz_t acc;
    mpz_init(acc);
    const long lo = std::max(0L, k - nb + 1);
    const long hi = std::min(k, na - 1);
    for (long i = lo; i <= hi; ++i)
      mpz_addmul(acc, a[static_cast<std::size_t>(i)].get_mpz_t(),
                 b[static_cast<std::size_t>(k - i)].get_mpz_t());
    out[static_cast<std::size_t>(k)] = Int(acc);
    mpz_clear(acc);
  }
  return out;
}

std::vector<Rat> convolve_parallel(std::span<const Rat> a, std::span<const Rat> b) {
  if (a.empty() || b.empty()) return {};
  const Int da = common_denominator(a);
  const Int db = common_denominator(b);
  const auto prod = convolve_parallel(std::span<const Int>(lift(a, da)), std::span<const Int>(lift(b, db)));
  const Int den = da * db;
  std::vector<Rat> out(prod.size());
#pragma omp parallel for schedule(static)
  for (long k = 0; k < static_cast<long>(prod.size()); ++k) {
    Rat& r = out[static_cast<std::size_t>(k)];
    r = Rat(prod[static_cast<std::size_t>(k)], den);
    r.canonicalize();
  }
  return out;
}

std::vector<Rat> convolve(std::span<const Rat> a, std::span<const Rat> b) {
  if (std::min(a.size(), b.size()) < kParallelConvolveThreshold) return convolve_reference(a, b);
  return convolve_parallel(a, b);
}

}  // namespace minuscule::kernels
