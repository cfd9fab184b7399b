#pragma once

#include <vector>

namespace psd {

/// Cyclotomic classes of order e modulo an odd prime p: C_i = gamma^i <gamma^e>.
class CyclotomyContext {
 public:
  /// Requires p an odd prime, e | p-1, gamma a primitive root of p.
  CyclotomyContext(int p, int e, int gamma);

  int prime() const { return p_; }
  int order() const { return e_; }
  int class_size() const { return (p_ - 1) / e_; }
  int generator() const { return gamma_; }

  /// C_{i mod e}, ascending.
  const std::vector<int>& cls(int i) const { return classes_[static_cast<std::size_t>(wrap(i))]; }
  const std::vector<std::vector<int>>& classes() const { return classes_; }

  /// Index of the class containing x, or -1 for x = 0 mod p.
  int class_of(int x) const;

  int wrap(int i) const { return ((i % e_) + e_) % e_; }

 private:
  int p_;
  int e_;
  int gamma_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> index_;  // residue -> class index
};

inline CyclotomyContext cyclotomic_classes(int p, int e, int gamma) { return CyclotomyContext(p, e, gamma); }

/// (i,j)_e = #{x in C_i : x + 1 in C_j}, counted directly.
int cyclotomic_number(const CyclotomyContext& ctx, int i, int j);

/// e x e matrix of all cyclotomic numbers, indexed [i][j].
using CyclotomicTable = std::vector<std::vector<int>>;
CyclotomicTable cyclotomic_table(const CyclotomyContext& ctx);

/// Closed-form order-2 numbers for an odd prime p.
CyclotomicTable order2_closed_form(int p);

/// p = x^2 + 4y^2 with x = 1 (mod 4); the sign of y depends on the generator.
struct QuarticDecomposition {
  int p = 0;
  int x = 0;
  int y = 0;
  friend bool operator==(const QuarticDecomposition&, const QuarticDecomposition&) = default;
};

/// Closed-form order-4 numbers for p = 4f+1 with f odd.
CyclotomicTable order4_closed_form(int p, const QuarticDecomposition& xy);

/// Finds (x, y) and fixes the sign of y so that order4_closed_form reproduces
/// the counted numbers for ctx's generator. Requires p = 5 (mod 8).
QuarticDecomposition quartic_decomposition(const CyclotomyContext& ctx);

/// Index of the class equal to -C_i (e even).
int negation_class(const CyclotomyContext& ctx, int i);

struct ConvolutionCoefficients {
  int zero = 0;                 // coefficient of the identity
  std::vector<int> per_class;   // constant coefficient on each C_k
};

/// Brute-force C_i(X) C_j(X^{-1}), i.e. the multiset {u - w : u in C_i, w in C_j}.
/// Verifies it is constant on every class and equals a_{i j*} 1 + sum_k (j*-i, k-i) C_k,
/// where C_{j*} = -C_j (so j* = j when f is even). Throws VerificationError on mismatch.
ConvolutionCoefficients convolution_check(const CyclotomyContext& ctx, int i, int j);

/// Brute-force C_i(X) C_j(X), the multiset {u + w}. Verifies the group-ring
/// identity a_ij 1 + sum_k (j-i, k-i) C_k with a_ij = f when (f even, j = i)
/// or (f odd, j = i + e/2), else 0.
ConvolutionCoefficients lemma_product_check(const CyclotomyContext& ctx, int i, int j);

}  // namespace psd
