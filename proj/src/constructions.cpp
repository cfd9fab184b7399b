#include "psd/constructions.hpp"

#include <array>
#include <cmath>

#include <fmt/format.h>

#include "psd/cyclotomy.hpp"
#include "psd/error.hpp"
#include "psd/number_theory.hpp"

namespace psd {
namespace {

// Index t holds a primitive polynomial of degree t (x^t term included).
constexpr std::array<std::uint32_t, 17> kPrimitivePolynomials = {
    0,       0,      0,
    0xB,     // x^3 + x + 1
    0x13,    // x^4 + x + 1
    0x25,    // x^5 + x^2 + 1
    0x43,    // x^6 + x + 1
    0x83,    // x^7 + x + 1
    0x11D,   // x^8 + x^4 + x^3 + x^2 + 1
    0x211,   // x^9 + x^4 + 1
    0x409,   // x^10 + x^3 + 1
    0x805,   // x^11 + x^2 + 1
    0x1053,  // x^12 + x^6 + x^4 + x + 1
    0x201B,  // x^13 + x^4 + x^3 + x + 1
    0x4443,  // x^14 + x^10 + x^6 + x + 1
    0x8003,  // x^15 + x + 1
    0x1100B, // x^16 + x^12 + x^3 + x + 1
};

void require_prime(int p, std::string_view who) {
  if (!is_prime(p)) throw InputError(fmt::format("{}: {} is not prime", who, p));
}

ResidueSet union_of(int p, std::initializer_list<const std::vector<int>*> parts, bool with_zero) {
  std::vector<int> out;
  if (with_zero) out.push_back(0);
  for (const auto* part : parts) out.insert(out.end(), part->begin(), part->end());
  return ResidueSet(p, std::move(out));
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::paley_a: return "paley-a";
    case Family::singer_b: return "singer-b";
    case Family::twin_prime_c: return "twin-prime-c";
    case Family::hall_d: return "hall-d";
    case Family::qr_plus0: return "qr-plus0";
    case Family::qnr: return "qnr";
    case Family::z4p: return "z4p";
    case Family::quartic: return "quartic";
    case Family::quartic_plus0: return "quartic-plus0";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (auto f : {Family::paley_a, Family::singer_b, Family::twin_prime_c, Family::hall_d, Family::qr_plus0, Family::qnr,
                 Family::z4p, Family::quartic, Family::quartic_plus0}) {
    if (family_name(f) == name) return f;
  }
  throw InputError(fmt::format("unknown family '{}'", name));
}

ResidueSet paley_a(int p) {
  require_prime(p, "paley_a");
  if (p % 4 != 3) throw InputError(fmt::format("paley_a: need p = 3 mod 4, got {}", p));
  auto qr = quadratic_residues(p);
  return union_of(p, {&qr}, true);
}

std::uint32_t primitive_polynomial(int t) {
  if (t < 3 || t > 16) throw InputError(fmt::format("no primitive polynomial of degree {} in table (3..16)", t));
  return kPrimitivePolynomials[static_cast<std::size_t>(t)];
}

ResidueSet singer_b(int t) {
  const std::uint32_t poly = primitive_polynomial(t);
  const int period = (1 << t) - 1;
  std::vector<int> seq(static_cast<std::size_t>(period + t), 0);
  seq[0] = 1;
  // s[n+t] = sum over i < t of c_i s[n+i]
  for (int n = 0; n + t < static_cast<int>(seq.size()); ++n) {
    int bit = 0;
    for (int i = 0; i < t; ++i)
      if ((poly >> i) & 1U) bit ^= seq[static_cast<std::size_t>(n + i)];
    seq[static_cast<std::size_t>(n + t)] = bit;
  }
  std::vector<int> support;
  for (int n = 0; n < period; ++n)
    if (seq[static_cast<std::size_t>(n)]) support.push_back(n);
  return ResidueSet(period, std::move(support));
}

ResidueSet twin_prime_c(int p) {
  if (!is_prime(p) || !is_prime(p + 2)) throw InputError(fmt::format("twin_prime_c: {} and {} are not both prime", p, p + 2));
  const int q = p + 2;
  std::vector<int> out;
  for (int g = 0; g < p; ++g) {
    for (int h = 0; h < q; ++h) {
      const bool pick = (g != 0 && h != 0) ? quadratic_character(g, p) * quadratic_character(h, q) == -1 : (g == 0 && h != 0);
      if (pick) out.push_back(crt(g, p, h, q));
    }
  }
  return ResidueSet(p * q, std::move(out));
}

ResidueSet hall_d(int p) {
  require_prime(p, "hall_d");
  const int rest = p - 27;
  const int s = rest > 0 ? static_cast<int>(std::lround(std::sqrt(rest / 4.0))) : 0;
  if (rest <= 0 || rest % 4 != 0 || 4 * s * s != rest) {
    throw InputError(fmt::format("hall_d: {} is not of the form 4s^2 + 27", p));
  }
  if ((p - 1) % 6 != 0) throw InputError(fmt::format("hall_d: 6 does not divide {}", p - 1));
  const DesignClass want = DifferenceSet{p, (p + 1) / 2, (p + 1) / 4};
  for (int gamma : primitive_roots(p)) {
    const CyclotomyContext ctx(p, 6, gamma);
    for (int r = 0; r < 6; ++r) {
      auto d = union_of(p, {&ctx.cls(r), &ctx.cls(r + 1), &ctx.cls(r + 3)}, true);
      if (classify(d) == want) return d;
    }
  }
  throw VerificationError(fmt::format("hall_d: no primitive root yields a ({},{},{}) difference set", p, (p + 1) / 2,
                                      (p + 1) / 4));
}

ResidueSet qr_variants(int p, bool with_zero) {
  require_prime(p, "qr_variants");
  if (p % 4 != 1) throw InputError(fmt::format("qr_variants: need p = 1 mod 4, got {}", p));
  if (with_zero) {
    auto qr = quadratic_residues(p);
    return union_of(p, {&qr}, true);
  }
  auto qnr = quadratic_nonresidues(p);
  return union_of(p, {&qnr}, false);
}

ResidueSet z4p_ads(int p) {
  require_prime(p, "z4p_ads");
  if (p % 4 != 3) throw InputError(fmt::format("z4p_ads: need p = 3 mod 4, got {}", p));
  std::vector<int> out;
  for (int a : quadratic_residues(p)) out.push_back(crt(0, 4, a, p));
  for (int first : {1, 2, 3})
    for (int b : quadratic_nonresidues(p)) out.push_back(crt(first, 4, b, p));
  for (int first : {0, 1, 3}) out.push_back(crt(first, 4, 0, p));
  return ResidueSet(4 * p, std::move(out));
}

ResidueSet quartic_union(int p, int i, bool with_zero) {
  require_prime(p, "quartic_union");
  if (p % 8 != 5) throw InputError(fmt::format("quartic_union: need p = 4f+1 with f odd, got {}", p));
  if (i < 0 || i > 3) throw InputError(fmt::format("quartic_union: class index {} outside 0..3", i));
  if (i % 2 != 0) {
    // Under the y = -1 root, C_i + C_{i+1} has (p-1)/4 consecutive pairs for odd i,
    // one short of its top difference level, so the circulant is not special.
    throw InputError(fmt::format("quartic_union: class index {} is not special under the y = -1 root; use 0 or 2", i));
  }
  for (int gamma : primitive_roots(p)) {
    const CyclotomyContext ctx(p, 4, gamma);
    const auto xy = quartic_decomposition(ctx);
    if (xy.y != 1 && xy.y != -1) {
      throw InputError(fmt::format("quartic_union: p = {} has |y| = {}, need p = x^2 + 4", p, std::abs(xy.y)));
    }
    if (xy.y == -1) return union_of(p, {&ctx.cls(i), &ctx.cls(i + 1)}, with_zero);
  }
  throw VerificationError(fmt::format("quartic_union: no primitive root of {} gives y = -1", p));
}

ResidueSet generate(const ConstructionSpec& spec) {
  switch (spec.family) {
    case Family::paley_a: return paley_a(spec.parameter);
    case Family::singer_b: return singer_b(spec.parameter);
    case Family::twin_prime_c: return twin_prime_c(spec.parameter);
    case Family::hall_d: return hall_d(spec.parameter);
    case Family::qr_plus0: return qr_variants(spec.parameter, true);
    case Family::qnr: return qr_variants(spec.parameter, false);
    case Family::z4p: return z4p_ads(spec.parameter);
    case Family::quartic: return quartic_union(spec.parameter, spec.class_index, false);
    case Family::quartic_plus0: return quartic_union(spec.parameter, spec.class_index, true);
  }
  throw InputError("unknown family");
}

ClaimedDesign claimed_design(const ConstructionSpec& spec) {
  const int p = spec.parameter;
  switch (spec.family) {
    case Family::paley_a:
    case Family::hall_d:
      return {DifferenceSet{p, (p + 1) / 2, (p + 1) / 4}, false, SOptimality::near_s_optimal};
    case Family::singer_b: {
      const int v = (1 << p) - 1;
      return {DifferenceSet{v, 1 << (p - 1), 0}, true, SOptimality::near_s_optimal};
    }
    case Family::twin_prime_c: {
      const int v = p * (p + 2);
      return {DifferenceSet{v, (v + 1) / 2, (v + 1) / 4}, false, SOptimality::near_s_optimal};
    }
    case Family::qr_plus0:
    case Family::quartic_plus0:
      return {AlmostDifferenceSet{p, (p + 1) / 2, (p - 1) / 4, (p - 1) / 2}, false, SOptimality::s_optimal};
    case Family::qnr:
    case Family::quartic:
      return {AlmostDifferenceSet{p, (p - 1) / 2, (p - 5) / 4, (p - 1) / 2}, false, SOptimality::near_s_optimal};
    case Family::z4p:
      return {AlmostDifferenceSet{4 * p, 2 * p + 1, p, p - 1}, false, SOptimality::s_optimal};
  }
  throw InputError("unknown family");
}

VerificationReport verify_construction(const ConstructionSpec& spec) {
  auto set = generate(spec);
  auto spectrum = difference_spectrum(set);
  VerificationReport rep{set, spectrum, classify(spectrum), is_special(spectrum), {}, claimed_design(spec), false, false};
  if (rep.claim.lambda_computed) {
    const auto* got = std::get_if<DifferenceSet>(&rep.design);
    const auto& want = std::get<DifferenceSet>(rep.claim.design);
    rep.design_matches = got != nullptr && got->v == want.v && got->k == want.k;
  } else {
    rep.design_matches = rep.design == rep.claim.design;
  }
  if (rep.special) {
    rep.soptimality = soptimality(set);
    rep.class_matches = rep.soptimality.cls == rep.claim.promised;
  }
  return rep;
}

}  // namespace psd
