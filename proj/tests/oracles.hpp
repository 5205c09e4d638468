#pragma once

// Deliberately naive reference implementations. They share no search code
// with the library and only run at tiny sizes.

#include <cstdint>
#include <vector>

#include "slicebench/function.hpp"
#include "slicebench/slice_graph.hpp"

namespace oracle {

using slicebench::LabeledFunction;
using slicebench::Mask;

/// Plain minimax over member subsets, no memo and no pruning.
int plain_depth(const LabeledFunction& f);

/// C(f) by trying every position subset in order of size.
int brute_certificate(const LabeledFunction& f);

/// Cube: count of flipping bits. Slice: largest set of disjoint flipping
/// transpositions, by exhaustive recursion.
int brute_sensitivity(const LabeledFunction& f);

/// bs_l(f) by exhaustive search over families of disjoint sensitive blocks.
int brute_block_sensitivity(const LabeledFunction& f, int max_block = 64);

/// min / max over inputs of the smallest balanced certificate.
int brute_balanced_certificate(const LabeledFunction& f, bool minimum);

/// Cube only: largest monomial with a nonzero Moebius coefficient.
int mobius_degree(const LabeledFunction& f);

/// Smallest d such that f lies in the span of degree-<=d monomials
/// restricted to the domain, by Gaussian elimination mod `prime`.
int modp_degree(const LabeledFunction& f, std::uint64_t prime);

/// max(clique number, independence number) over all vertex subsets.
int brute_monochromatic(const slicebench::SliceGraph& g);

/// Half-size subsets of {0..2^r - 1} whose elements XOR to zero.
std::uint64_t brute_kml_count(int r);

/// Largest number of 1-inputs inside a subcube of {0,1}^n that contains no
/// 0-input, over all 3^n subcubes.
int brute_max_one_subcube(const LabeledFunction& f);

/// Smallest position set S such that x restricted to S determines f(x).
int brute_nonadaptive(const LabeledFunction& f);

/// All n-bit strings of weight k, by scanning every n-bit integer.
std::vector<Mask> weight_k_strings(int n, int k);

}  // namespace oracle
