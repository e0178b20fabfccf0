#pragma once

#include <vector>

#include "segeuler/bipoly.hpp"
#include "segeuler/rational.hpp"
#include "segeuler/unipoly.hpp"

namespace segeuler {

/// Binomial coefficient; zero when k < 0, k > n or n < 0.
Int binomial(int n, int k);
Int factorial(int n);

/// A(n, k): permutations of [n] with k descents, by the two-term recurrence
/// A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1). Zero outside 0 <= k <= n-1.
Int eulerian_number(int n, int k);
/// Row A(n, 0..n-1).
std::vector<Int> eulerian_row(int n);
/// A_n(t) = sum_k A(n,k) t^k.
UniPoly eulerian_poly(int n);

/// Stirling numbers of the second kind.
Int stirling2(int n, int k);

/// sum_{r=0}^{n-1} (r+1)! S(n, r+1) q^r.
UniPoly ordered_bell_poly(int n);

/// alpha_n(t,q) from the Eulerian row: sum_k A(n,k) (t+q)^k (1+q)^(n-1-k).
BiPoly closed_alpha(int n);
/// P_n(t) = alpha_n(t, 1) = sum_k A(n,k) (t+1)^k 2^(n-1-k).
UniPoly closed_P(int n);

/// sum_k binom(k, i) binom(n-1-k, i+j-k) A(n, k).
Int k_convolution(int n, int i, int j);

/// Bracket for the coefficient of t^m in P_n(t) / (1-t)^(n+1) obtained from
/// the series sum_{k>=1} (1+t)^(k-1) k^n / 2^(k+1).
struct GfBracket {
  Rat partial;     ///< sum_{k=m+1}^{cutoff} binom(k-1, m) k^n / 2^(k+1)
  Rat tail_bound;  ///< upper bound on the dropped terms k > cutoff
  int cutoff;
};

/// Smallest cutoff for which the tail bound is proven: 4(n+m)+8. From there
/// on consecutive terms shrink by a factor <= 3/4, so the tail is at most
/// four times the first dropped term.
int gf_min_cutoff(int n, int m);

/// Throws RangeError on bad n/m and UsageError when cutoff < gf_min_cutoff.
GfBracket gf_partial_sum(int n, int m, int cutoff);

/// Exact coefficient of t^m in P_n(t) / (1-t)^(n+1), by series division:
/// sum_a [t^a] P_n * binom(m - a + n, n).
Rat gf_target(int n, int m);

}  // namespace segeuler
