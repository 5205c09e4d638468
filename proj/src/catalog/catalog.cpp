#include "slicebench/catalog.hpp"

#include <algorithm>
#include <random>

#include "slicebench/binomial.hpp"
#include "slicebench/errors.hpp"

namespace slicebench {

namespace {

Mask block_of(Mask x, int block, int width) { return (x >> (block * width)) & low_bits(width); }

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

int checked_root(int n) {
  int s = 0;
  while ((s + 1) * (s + 1) <= n) ++s;
  if (s * s != n || s % 2 != 0 || s == 0) {
    throw DomainError("n = " + std::to_string(n) + " must be the square of an even number");
  }
  return s;
}

// Blocks of the form (ab)^i cd (ab)^(k-i-1), position 0 first.
bool pattern_block(Mask z, int s, Mask background_pair, Mask marked_pair) {
  for (int i = 0; i < s / 2; ++i) {
    bool match = true;
    for (int j = 0; j < s / 2 && match; ++j) {
      match = ((z >> (2 * j)) & 3U) == (j == i ? marked_pair : background_pair);
    }
    if (match) return true;
  }
  return false;
}

LabeledFunction or_of_pattern(int n, Mask background_pair, Mask marked_pair) {
  const int s = checked_root(n);
  return LabeledFunction::tabulate_boolean(Domain::cube(n), [&](Mask x) {
    for (int b = 0; b < s; ++b) {
      if (pattern_block(block_of(x, b, s), s, background_pair, marked_pair)) return true;
    }
    return false;
  });
}

}  // namespace

LabeledFunction make_eq(int k) {
  if (k < 1 || k > 16) throw DomainError("EQ needs 1 <= k <= 16");
  const int half = 2 * k;
  return LabeledFunction::tabulate_boolean(Domain::slice(4 * k, 2 * k), [half](Mask x) {
    return (x & low_bits(half)) == (x >> half);
  });
}

LabeledFunction make_ed(int k, int l) {
  if (l < 1 || l > 6 || k < 2 || k > (1 << l)) throw DomainError("ED needs l >= 1 and 2 <= k <= 2^l");
  if ((k * l) % 2 != 0) throw DomainError("ED needs kl even");
  if (k * l > 64) throw DomainError("ED needs kl <= 64");
  return LabeledFunction::tabulate_boolean(Domain::slice(k * l, k * l / 2), [k, l](Mask x) {
    Mask seen = 0;
    for (int i = 0; i < k; ++i) {
      const Mask b = block_of(x, i, l);
      if (test_bit(seen, static_cast<int>(b))) return false;
      seen |= Mask{1} << b;
    }
    return true;
  });
}

LabeledFunction graham_sloane_class(int n, int k, int index) {
  if (index < 0 || index >= n) throw DomainError("class index must be in [0, n)");
  return LabeledFunction::tabulate_boolean(Domain::slice(n, k), [n, index](Mask x) {
    int sum = 0;
    for (int p : positions_of(x)) sum += p;
    return sum % n == index;
  });
}

GrahamSloane graham_sloane(int n, int k) {
  const Domain d = Domain::slice(n, k);
  std::vector<std::uint64_t> sizes(static_cast<std::size_t>(n), 0);
  for (Mask x : d.members()) {
    int sum = 0;
    for (int p : positions_of(x)) sum += p;
    ++sizes[static_cast<std::size_t>(sum % n)];
  }
  const int best = static_cast<int>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  return {sizes, best, graham_sloane_class(n, k, best)};
}

LabeledFunction kml_set(int r) {
  if (r < 2 || r > 5) throw DomainError("kml_set needs 2 <= r <= 5");
  const int n = 1 << r;
  return LabeledFunction::tabulate_boolean(Domain::slice(n, n / 2), [](Mask x) {
    int acc = 0;
    for (int p : positions_of(x)) acc ^= p;
    return acc == 0;
  });
}

std::uint64_t kml_formula(int r) {
  if (r < 2 || r > 5) throw DomainError("kml_formula needs 2 <= r <= 5");
  const int n = 1 << r;
  const auto sign = (n / 4) % 2 == 0 ? 1 : -1;
  const auto total = static_cast<long long>(binomial(n, n / 2)) +
                     sign * static_cast<long long>(n - 1) * static_cast<long long>(binomial(n / 2, n / 4));
  return static_cast<std::uint64_t>(total / n);
}

bool johnson_independent(const std::vector<Mask>& set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (popcount(set[i] ^ set[j]) == 2) return false;
    }
  }
  return true;
}

SliceGraph paley_graph(int q) {
  if (!is_prime(q) || q % 4 != 1 || q > 61) {
    throw DomainError("Paley graphs need a prime q = 1 mod 4 with q <= 61");
  }
  std::vector<bool> square(static_cast<std::size_t>(q), false);
  for (int a = 1; a < q; ++a) square[static_cast<std::size_t>(a * a % q)] = true;
  SliceGraph g(q);
  for (int u = 0; u < q; ++u) {
    for (int v = u + 1; v < q; ++v) {
      if (square[static_cast<std::size_t>((v - u) % q)]) g.add_edge(u, v);
    }
  }
  return g;
}

SliceGraph random_graph(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SliceGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng() & 1U) g.add_edge(u, v);
    }
  }
  return g;
}

// Pairs read position 0 first: "01" has bit 1 set (value 2), "10" value 1.
LabeledFunction rubinstein_variant(int n) { return or_of_pattern(n, 2, 1); }
LabeledFunction rubinstein_original(int n) { return or_of_pattern(n, 0, 3); }

LabeledFunction slice_of_cube_function(const LabeledFunction& g, int k) {
  if (!g.domain().is_cube()) throw DomainError("slice_of_cube_function needs a cube function");
  const Domain d = Domain::slice(g.n(), k);
  std::vector<std::uint8_t> table;
  table.reserve(d.size());
  for (Mask x : d.members()) table.push_back(g.index_at(x));
  return LabeledFunction(d, g.alphabet(), std::move(table));
}

LabeledFunction lift(const LabeledFunction& g) {
  if (!g.domain().is_cube() || g.n() < 1 || g.n() > 32) {
    throw DomainError("lift needs a function on cube(n) with 1 <= n <= 32");
  }
  const int n = g.n();
  const Domain d = Domain::slice(2 * n, n);
  std::vector<std::uint8_t> table;
  table.reserve(d.size());
  for (Mask x : d.members()) table.push_back(g.index_at(x & low_bits(n)));
  return LabeledFunction(d, g.alphabet(), std::move(table));
}

Label weights_label(int n, int m, Mask x) {
  std::vector<int> weights;
  for (int i = 0; i < n; ++i) weights.push_back(popcount(block_of(x, i, m)));
  std::sort(weights.rbegin(), weights.rend());
  return Label::tuple(std::move(weights));
}

LabeledFunction weights_task(int n, int m, int k) {
  if (n < 1 || m < 1 || n * m > 64) throw DomainError("weights task needs n, m >= 1 and nm <= 64");
  if (k < 0 || k > n * m) throw DomainError("weights task needs 0 <= k <= nm");
  const int total = n * m;
  const Domain d = k == 0 ? Domain::explicit_set(total, {0})
                   : k == total ? Domain::explicit_set(total, {low_bits(total)})
                                : Domain::slice(total, k);
  return LabeledFunction::tabulate(d, [n, m](Mask x) { return weights_label(n, m, x); });
}

LabeledFunction compose_symmetric(const std::vector<int>& outer, const std::vector<int>& inner,
                                  int k) {
  const int n = static_cast<int>(outer.size()) - 1;
  const int m = static_cast<int>(inner.size()) - 1;
  if (n < 1 || m < 1 || n * m > 64) throw DomainError("composition needs n, m >= 1 and nm <= 64");
  for (int v : inner) {
    if (v != 0 && v != 1) throw DomainError("inner symmetric function must be Boolean");
  }
  auto value = [&, n, m](Mask x) {
    int count = 0;
    for (int i = 0; i < n; ++i) count += inner[static_cast<std::size_t>(popcount(block_of(x, i, m)))];
    return outer[static_cast<std::size_t>(count)];
  };
  const Domain d = Domain::slice(n * m, k);
  const bool boolean = std::all_of(outer.begin(), outer.end(), [](int v) { return v == 0 || v == 1; });
  if (boolean) return LabeledFunction::tabulate_boolean(d, [&](Mask x) { return value(x) == 1; });
  return LabeledFunction::tabulate(d, [&](Mask x) { return Label::scalar(value(x)); });
}

LabeledFunction random_slice_function(int n, int k, std::uint64_t seed, int alphabet) {
  if (alphabet < 2 || alphabet > 256) throw DomainError("alphabet size must be in [2, 256]");
  const Domain d = Domain::slice(n, k);
  if (d.size() > kMaxTableSize) throw ResourceError("domain " + d.describe() + " exceeds 2^26");
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> table(d.size());
  for (auto& v : table) v = static_cast<std::uint8_t>(rng() % static_cast<std::uint64_t>(alphabet));
  std::vector<Label> labels;
  for (int i = 0; i < alphabet; ++i) labels.push_back(Label::scalar(i));
  return LabeledFunction(d, std::move(labels), std::move(table));
}

LabeledFunction random_cube_function(int n, std::uint64_t seed) {
  const Domain d = Domain::cube(n);
  if (d.size() > kMaxTableSize) throw ResourceError("domain " + d.describe() + " exceeds 2^26");
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> table(d.size());
  for (auto& v : table) v = static_cast<std::uint8_t>(rng() % 2);
  return LabeledFunction::boolean(d, std::move(table));
}

LabeledFunction dictator(int n, int k, int i) {
  if (i < 0 || i >= n) throw DomainError("dictator position out of range");
  return LabeledFunction::tabulate_boolean(Domain::slice(n, k), [i](Mask x) { return test_bit(x, i); });
}

LabeledFunction or_first_half(int n) {
  const Mask half = low_bits(n / 2);
  return LabeledFunction::tabulate_boolean(Domain::slice(n, 1), [half](Mask x) { return (x & half) != 0; });
}

}  // namespace slicebench
