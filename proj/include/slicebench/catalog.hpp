#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slicebench/function.hpp"
#include "slicebench/io.hpp"
#include "slicebench/slice_graph.hpp"

namespace slicebench {

/// Equality on slice(4k, 2k): x is positions 0..2k-1, y is 2k..4k-1.
LabeledFunction make_eq(int k);

/// Element distinctness on slice(kl, kl/2): k blocks of l bits (block i is
/// positions il..il+l-1), value 1 iff the blocks are pairwise distinct.
/// Requires kl even and 2 <= k <= 2^l.
LabeledFunction make_ed(int k, int l);

struct GrahamSloane {
  /// sizes[i] = number of k-subsets of Z_n whose elements sum to i mod n.
  std::vector<std::uint64_t> sizes;
  /// argmax of sizes, smallest index on ties.
  int best = 0;
  /// Indicator of class `best` on slice(n, k).
  LabeledFunction indicator;
};

/// Sum classes of k-subsets of Z_n (positions are the elements of Z_n).
GrahamSloane graham_sloane(int n, int k);
/// Indicator of the k-subsets of Z_n summing to `index` mod n.
LabeledFunction graham_sloane_class(int n, int k, int index);

/// Indicator on slice(2^r, 2^(r-1)) of the sets whose elements (positions read
/// as vectors of Z_2^r) XOR to zero. Requires 2 <= r <= 5.
LabeledFunction kml_set(int r);
/// Closed-form size of the kml_set family:
/// (C(n, n/2) + (n-1) (-1)^(n/4) C(n/2, n/4)) / n with n = 2^r.
std::uint64_t kml_formula(int r);

/// True when no two members are at Hamming distance 2.
bool johnson_independent(const std::vector<Mask>& set);

/// Paley graph on q vertices: u ~ v iff u - v is a nonzero square mod q.
/// Requires q prime, q = 1 mod 4, q <= 61.
SliceGraph paley_graph(int q);
/// Each pair u < v (lexicographic) is an edge iff the next output of
/// mt19937_64(seed) is odd.
SliceGraph random_graph(int n, std::uint64_t seed);

/// OR over sqrt(n) blocks of a pattern predicate on cube(n). The variant
/// accepts blocks (01)^i 10 (01)^(s/2-i-1); the original accepts
/// (00)^i 11 (00)^(s/2-i-1). Requires n = s^2 with s even.
LabeledFunction rubinstein_variant(int n);
LabeledFunction rubinstein_original(int n);

/// The same values on the members of slice(n, k) of a cube function.
LabeledFunction slice_of_cube_function(const LabeledFunction& g, int k);

/// f(x, y) = g(x) on slice(2n, n) for g on cube(n); x is positions 0..n-1.
LabeledFunction lift(const LabeledFunction& g);

/// Multiset of block weights (descending tuple) on slice(nm, k); the domain
/// is the single all-0 or all-1 string when k is 0 or nm.
LabeledFunction weights_task(int n, int m, int k);
/// The label weights_task assigns to x.
Label weights_label(int n, int m, Mask x);

/// (f o g)(z_1..z_n) = outer[sum_i inner[|z_i|]] on slice(nm, k), blocks of m
/// bits. inner has m+1 entries in {0,1}; outer has n+1 entries.
LabeledFunction compose_symmetric(const std::vector<int>& outer, const std::vector<int>& inner,
                                  int k);

/// Uniform table with labels 0..alphabet-1 drawn as mt19937_64(seed)() % alphabet.
LabeledFunction random_slice_function(int n, int k, std::uint64_t seed, int alphabet = 2);
/// Uniform Boolean function on cube(n), same generator.
LabeledFunction random_cube_function(int n, std::uint64_t seed);

/// x_i on slice(n, k).
LabeledFunction dictator(int n, int k, int i);
/// OR of positions 0..floor(n/2)-1 on slice(n, 1).
LabeledFunction or_first_half(int n);

/// Builds a function from {"name": ..., "params": {...}}. Throws InputError
/// for unknown names or bad parameters. See docs/formats.md for the names.
LabeledFunction construct(const Json& spec);

}  // namespace slicebench
