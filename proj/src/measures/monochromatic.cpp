#include "slicebench/monochromatic.hpp"

#include <vector>

#include "slicebench/errors.hpp"

namespace slicebench {

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(const SliceGraph& g) : g_(g) {}

  MonochromaticResult run() {
    expand(0, low_bits(g_.n()));
    return {popcount(best_), best_, true};
  }

 private:
  // Greedy colouring of `candidates` in vertex order. Fills `order` with the
  // vertices by colour class and `bound[i]` with the colour count up to and
  // including order[i].
  void colour(Mask candidates, std::vector<int>& order, std::vector<int>& bound) const {
    int colours = 0;
    for (Mask uncoloured = candidates; uncoloured;) {
      ++colours;
      Mask available = uncoloured;
      while (available) {
        const int v = std::countr_zero(available);
        uncoloured &= ~(Mask{1} << v);
        available &= ~(Mask{1} << v) & ~g_.neighbours(v);
        order.push_back(v);
        bound.push_back(colours);
      }
    }
  }

  void expand(Mask clique, Mask candidates) {
    std::vector<int> order;
    std::vector<int> bound;
    colour(candidates, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (popcount(clique) + bound[i] <= popcount(best_)) return;
      const int v = order[i];
      const Mask grown = clique | (Mask{1} << v);
      const Mask next = candidates & g_.neighbours(v);
      if (next == 0) {
        if (popcount(grown) > popcount(best_)) best_ = grown;
      } else {
        expand(grown, next);
      }
      candidates &= ~(Mask{1} << v);
    }
  }

  const SliceGraph& g_;
  Mask best_ = 0;
};

}  // namespace

MonochromaticResult max_clique(const SliceGraph& g) { return CliqueSearch(g).run(); }

MonochromaticResult monochromatic_number(const SliceGraph& g) {
  if (g.n() > 40) throw ResourceError("monochromatic number: n = " + std::to_string(g.n()) + " > 40");
  const auto clique = max_clique(g);
  auto independent = max_clique(g.complement());
  independent.clique = false;
  return independent.value > clique.value ? independent : clique;
}

}  // namespace slicebench
