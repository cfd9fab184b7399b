#include "psd/design.hpp"

#include <algorithm>
#include <map>

#include <fmt/format.h>

#include "psd/correlation.hpp"
#include "psd/error.hpp"

namespace psd {

DifferenceSpectrum difference_spectrum(const ResidueSet& d) {
  const int v = d.modulus();
  const int k = d.size();
  if (k < 2 || k >= v) {
    throw InputError(fmt::format("degenerate set: need 2 <= k < v, got k={} v={}", k, v));
  }
  DifferenceSpectrum s;
  s.modulus = v;
  s.size = k;
  s.multiplicity.assign(static_cast<std::size_t>(v), 0);
  for (int a : d.elements())
    for (int b : d.elements())
      if (a != b) ++s.multiplicity[static_cast<std::size_t>((a - b + v) % v)];

  std::map<int, int> by_level;
  for (int g = 1; g < v; ++g) ++by_level[s.multiplicity[static_cast<std::size_t>(g)]];
  for (const auto& [level, count] : by_level) {
    s.levels.push_back(level);
    s.level_counts.push_back(count);
  }
  s.lambda_max = s.levels.back();
  s.periodic_distance = k - s.lambda_max;
  s.consecutive_pairs = 0;
  for (int x : d.elements()) s.consecutive_pairs += d.contains(x + 1);
  return s;
}

DesignClass classify(const DifferenceSpectrum& s) {
  if (s.levels.size() == 1) return DifferenceSet{s.modulus, s.size, s.levels[0]};
  if (s.levels.size() == 2 && s.levels[1] == s.levels[0] + 1) {
    return AlmostDifferenceSet{s.modulus, s.size, s.levels[0], s.level_counts[0]};
  }
  return GenericSet{static_cast<int>(s.levels.size())};
}

DesignClass classify(const ResidueSet& d) { return classify(difference_spectrum(d)); }

std::string to_string(const DesignClass& c) {
  struct Visitor {
    std::string operator()(const DifferenceSet& x) const { return fmt::format("({},{},{})-DS", x.v, x.k, x.lambda); }
    std::string operator()(const AlmostDifferenceSet& x) const {
      return fmt::format("({},{},{},{})-ADS", x.v, x.k, x.lambda, x.t);
    }
    std::string operator()(const GenericSet& x) const { return fmt::format("generic ({} levels)", x.levels); }
  };
  return std::visit(Visitor{}, c);
}

bool is_special(const DifferenceSpectrum& s) { return s.consecutive_pairs == s.lambda_max; }
bool is_special(const ResidueSet& d) { return is_special(difference_spectrum(d)); }

int bv_bound(int v) {
  if (v < 2) throw InputError(fmt::format("B_v needs v >= 2, got {}", v));
  const auto vv = static_cast<long long>(v);
  return static_cast<int>((vv * vv) / (4 * (vv - 1)));
}

int special_bound(int v) { return (v + 1) * bv_bound(v) + 1; }

bool equality_condition(const DifferenceSpectrum& s) {
  const long long v = s.modulus;
  const long long k = s.size;
  long long weighted = 0;
  for (std::size_t i = 0; i + 1 < s.levels.size(); ++i) {
    weighted += static_cast<long long>(s.lambda_max - s.levels[i]) * s.level_counts[i];
  }
  // 4|k - v/2|^2 = (2k - v)^2
  const long long lhs = (2 * k - v) * (2 * k - v) + 4 * weighted;
  const long long rhs = v * v - 4 * (v - 1) * bv_bound(static_cast<int>(v));
  return lhs == rhs;
}

bool equality_condition(const ResidueSet& d) { return equality_condition(difference_spectrum(d)); }

BinaryMatrix circulant(const ResidueSet& d) {
  const int v = d.modulus();
  BinaryMatrix r(v, v);
  for (int g = 0; g < v; ++g)
    for (int x : d.elements()) r.set(g, (g + x) % v, true);
  return r;
}

ResidueSet complement(const ResidueSet& d) {
  std::vector<int> rest;
  for (int x = 0; x < d.modulus(); ++x)
    if (!d.contains(x)) rest.push_back(x);
  return ResidueSet(d.modulus(), std::move(rest));
}

std::string to_string(SOptimality c) {
  switch (c) {
    case SOptimality::s_optimal: return "s-optimal";
    case SOptimality::near_s_optimal: return "near-s-optimal";
    case SOptimality::neither: return "neither";
  }
  return "neither";
}

SOptimalityReport soptimality(const ResidueSet& d) {
  const auto spectrum = difference_spectrum(d);
  if (!is_special(spectrum)) throw InputError("not special: bound inapplicable");
  const int v = d.modulus();
  const auto r = circulant(d);
  const auto table = autocorrelation_table(r);
  const auto full = profile(table);

  SOptimalityReport rep;
  const int unit = std::max(table.at(1, 0), table.at(0, 1));
  rep.unit_shift_q = table.peak() - unit;
  rep.closed_form_q = v * (spectrum.size - spectrum.lambda_max) + spectrum.lambda_max;
  rep.measured_q = full.d1;
  rep.sidelobe_at_unit_shift = unit == full.nearest_sidelobe;
  rep.bound = special_bound(v);
  if (rep.unit_shift_q != rep.closed_form_q) {
    throw VerificationError(fmt::format("{}: unit-shift distance {} disagrees with v(k-L)+L = {}", to_text(d),
                                        rep.unit_shift_q, rep.closed_form_q));
  }
  if (rep.unit_shift_q == rep.bound) {
    rep.cls = SOptimality::s_optimal;
  } else if (rep.unit_shift_q == rep.bound - 1) {
    rep.cls = SOptimality::near_s_optimal;
  }
  return rep;
}

}  // namespace psd
