#include "psd/cyclotomy.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "psd/error.hpp"
#include "psd/number_theory.hpp"

namespace psd {

CyclotomyContext::CyclotomyContext(int p, int e, int gamma) : p_(p), e_(e), gamma_(gamma) {
  if (p < 3 || !is_prime(p)) throw InputError(fmt::format("cyclotomy needs an odd prime, got {}", p));
  if (e < 1 || (p - 1) % e != 0) throw InputError(fmt::format("order {} does not divide p-1 = {}", e, p - 1));
  if (gamma % p == 0 || multiplicative_order(gamma, p) != p - 1) {
    throw InputError(fmt::format("{} is not a primitive root mod {}", gamma, p));
  }
  classes_.resize(static_cast<std::size_t>(e));
  index_.assign(static_cast<std::size_t>(p), -1);
  std::int64_t x = 1;
  for (int n = 0; n < p - 1; ++n) {
    classes_[static_cast<std::size_t>(n % e)].push_back(static_cast<int>(x));
    index_[static_cast<std::size_t>(x)] = n % e;
    x = x * gamma % p;
  }
  for (auto& c : classes_) std::sort(c.begin(), c.end());
}

int CyclotomyContext::class_of(int x) const { return index_[static_cast<std::size_t>(((x % p_) + p_) % p_)]; }

int cyclotomic_number(const CyclotomyContext& ctx, int i, int j) {
  const int target = ctx.wrap(j);
  int n = 0;
  for (int x : ctx.cls(i)) n += ctx.class_of(x + 1) == target;
  return n;
}

CyclotomicTable cyclotomic_table(const CyclotomyContext& ctx) {
  const int e = ctx.order();
  CyclotomicTable t(static_cast<std::size_t>(e), std::vector<int>(static_cast<std::size_t>(e)));
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = cyclotomic_number(ctx, i, j);
  return t;
}

CyclotomicTable order2_closed_form(int p) {
  if (p < 3 || !is_prime(p)) throw InputError(fmt::format("order-2 closed form needs an odd prime, got {}", p));
  if (p % 4 == 1) {
    const int a = (p - 5) / 4;
    const int b = (p - 1) / 4;
    return {{a, b}, {b, b}};
  }
  const int a = (p - 3) / 4;
  const int b = (p + 1) / 4;
  return {{a, b}, {a, a}};
}

CyclotomicTable order4_closed_form(int p, const QuarticDecomposition& xy) {
  if (p % 8 != 5) throw InputError(fmt::format("order-4 closed form needs p = 4f+1 with f odd, got {}", p));
  if (xy.x * xy.x + 4 * xy.y * xy.y != p || ((xy.x % 4) + 4) % 4 != 1) {
    throw InputError(fmt::format("({}, {}) is not a decomposition p = x^2 + 4y^2 with x = 1 mod 4 of {}", xy.x, xy.y, p));
  }
  const auto sixteenth = [&](int numerator) {
    if (numerator % 16 != 0) throw VerificationError(fmt::format("order-4 formula not integral for p={}", p));
    return numerator / 16;
  };
  const int x = xy.x;
  const int y = xy.y;
  const int a = sixteenth(p - 7 + 2 * x);
  const int b = sixteenth(p + 1 + 2 * x - 8 * y);
  const int c = sixteenth(p + 1 + 2 * x + 8 * y);
  const int d = sixteenth(p + 1 - 6 * x);
  const int o = sixteenth(p - 3 - 2 * x);
  CyclotomicTable t(4, std::vector<int>(4, o));
  t[0][0] = t[2][2] = t[2][0] = a;
  t[0][1] = t[1][3] = t[3][2] = b;
  t[1][2] = t[0][3] = t[3][1] = c;
  t[0][2] = d;
  return t;
}

QuarticDecomposition quartic_decomposition(const CyclotomyContext& ctx) {
  const int p = ctx.prime();
  if (p % 8 != 5) throw InputError(fmt::format("quartic decomposition needs p = 4f+1 with f odd, got {}", p));
  QuarticDecomposition found{p, 0, 0};
  bool any = false;
  for (int y = 1; 4 * y * y < p && !any; ++y) {
    const int rest = p - 4 * y * y;
    const int root = static_cast<int>(std::lround(std::sqrt(static_cast<double>(rest))));
    if (root * root != rest) continue;
    found.x = (root % 4 == 1) ? root : -root;
    found.y = y;
    any = true;
  }
  if (!any) throw VerificationError(fmt::format("no decomposition p = x^2 + 4y^2 for p = {}", p));

  const CyclotomyContext quartic = ctx.order() == 4 ? ctx : CyclotomyContext(p, 4, ctx.generator());
  const auto counted = cyclotomic_table(quartic);
  const bool plus = order4_closed_form(p, found) == counted;
  const bool minus = order4_closed_form(p, {p, found.x, -found.y}) == counted;
  if (plus == minus) {
    throw VerificationError(fmt::format("p={} gamma={}: y sign does not resolve uniquely", p, ctx.generator()));
  }
  if (minus) found.y = -found.y;
  return found;
}

int negation_class(const CyclotomyContext& ctx, int i) {
  if (ctx.order() % 2 != 0) throw InputError("negation_class needs an even order");
  return ctx.class_of(ctx.prime() - ctx.cls(i).front());
}

namespace {

ConvolutionCoefficients collect(const CyclotomyContext& ctx, int i, int j, int sign, const char* what) {
  const int p = ctx.prime();
  std::vector<int> count(static_cast<std::size_t>(p), 0);
  for (int u : ctx.cls(i))
    for (int w : ctx.cls(j)) ++count[static_cast<std::size_t>(((u + sign * w) % p + p) % p)];
  ConvolutionCoefficients out;
  out.zero = count[0];
  for (int k = 0; k < ctx.order(); ++k) {
    const auto& c = ctx.cls(k);
    const int value = count[static_cast<std::size_t>(c.front())];
    for (int z : c) {
      if (count[static_cast<std::size_t>(z)] != value) {
        throw VerificationError(fmt::format("{}: coefficient not constant on C_{} (p={}, e={}, i={}, j={})", what, k, p,
                                            ctx.order(), i, j));
      }
    }
    out.per_class.push_back(value);
  }
  return out;
}

void expect_lemma(const CyclotomyContext& ctx, int i, int j, const ConvolutionCoefficients& got, const char* what) {
  const int e = ctx.order();
  const int f = ctx.class_size();
  const bool hit = (f % 2 == 0) ? ctx.wrap(j) == ctx.wrap(i) : ctx.wrap(j) == ctx.wrap(i + e / 2);
  const int a = hit ? f : 0;
  if (got.zero != a) {
    throw VerificationError(fmt::format("{}: identity coefficient {} != {} (p={}, e={}, i={}, j={})", what, got.zero, a,
                                        ctx.prime(), e, i, j));
  }
  for (int k = 0; k < e; ++k) {
    const int want = cyclotomic_number(ctx, j - i, k - i);
    if (got.per_class[static_cast<std::size_t>(k)] != want) {
      throw VerificationError(fmt::format("{}: coefficient of C_{} is {}, expected ({},{}) = {} (p={}, e={})", what, k,
                                          got.per_class[static_cast<std::size_t>(k)], ctx.wrap(j - i), ctx.wrap(k - i),
                                          want, ctx.prime(), e));
    }
  }
}

}  // namespace

ConvolutionCoefficients convolution_check(const CyclotomyContext& ctx, int i, int j) {
  auto got = collect(ctx, i, j, -1, "difference convolution");
  if (ctx.order() % 2 == 0) {
    expect_lemma(ctx, i, negation_class(ctx, j), got, "difference convolution");
  } else {
    // e odd forces f even (p odd), where -C_j = C_j
    expect_lemma(ctx, i, j, got, "difference convolution");
  }
  return got;
}

ConvolutionCoefficients lemma_product_check(const CyclotomyContext& ctx, int i, int j) {
  auto got = collect(ctx, i, j, +1, "sum convolution");
  expect_lemma(ctx, i, j, got, "sum convolution");
  return got;
}

}  // namespace psd
