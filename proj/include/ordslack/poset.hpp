#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordslack/error.hpp"

namespace ordslack {

// A finite poset on string labels. The canonical element order is the input
// order; everything downstream (filters, facets, certificates) enumerates in
// that order, so results are reproducible byte for byte.
//
// `covers` holds exactly the cover relation a <. b, derived from the
// transitive closure of whatever relations were supplied. `leq` is the full
// reflexive-transitive order.
class Poset {
 public:
  Poset() = default;

  // Builds the poset from an arbitrary acyclic relation set. Relations need
  // not be covers; the closure is computed and covers are re-derived.
  // Throws UnknownLabel, LabelCollision, CycleError.
  static Poset build(std::vector<std::string> elements,
                     const std::vector<std::pair<std::string, std::string>>& relations);

  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& label(int i) const { return elements_[i]; }
  int index_of(const std::string& label) const;  // throws UnknownLabel
  bool has_label(const std::string& label) const;

  bool leq(int a, int b) const { return leq_[a][b]; }
  bool less(int a, int b) const { return a != b && leq_[a][b]; }
  bool incomparable(int a, int b) const { return !leq_[a][b] && !leq_[b][a]; }

  // Cover pairs (a, b) with a <. b, ordered lexicographically by index.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  bool is_maximal(int i) const;
  bool is_minimal(int i) const;
  std::vector<int> maximal_elements() const;
  std::vector<int> minimal_elements() const;

  // Connected components of the Hasse diagram, each sorted, in order of
  // smallest member.
  std::vector<std::vector<int>> hasse_components() const;

  // Induced subposet on the given elements (keeps relative order of labels).
  Poset restrict(const std::vector<int>& keep) const;

  bool operator==(const Poset& o) const {
    return elements_ == o.elements_ && covers_ == o.covers_;
  }

 private:
  std::vector<std::string> elements_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::pair<int, int>> covers_;

  static Poset from_closure(std::vector<std::string> elements,
                            std::vector<std::vector<bool>> leq);
  friend Poset reverse(const Poset&);
  friend Poset op_join(const Poset&, const Poset&);
  friend Poset op_ordinal_sum(const Poset&, const Poset&);
  friend Poset op_direct_sum(const Poset&, const Poset&);
  friend Poset op_partial_ordinal_sum(const Poset&, const std::string&, const Poset&,
                                      const std::string&);
  friend Poset split_cover(const Poset&, const std::string&, const std::string&);
  friend Poset split_extremal(const Poset&, const std::string&);
};

// A filter (upward-closed set) as a bitmask over element indices. Bit i set
// means element i is in the filter. Posets are capped at 64 elements, far
// beyond desk scale.
struct Filter {
  std::uint64_t bits = 0;
  bool contains(int i) const { return (bits >> i) & 1u; }
  bool operator==(const Filter& o) const { return bits == o.bits; }
  bool operator<(const Filter& o) const { return bits < o.bits; }
};

// All filters of P, each exactly once, sorted ascending by bitmask (element 0
// is the lowest bit), i.e. by sorted characteristic vector.
std::vector<Filter> enumerate_filters(const Poset& P);

std::string filter_label(const Poset& P, Filter f);

// One maximum-cardinality antichain, the lexicographically least one in
// canonical element order (Dilworth width + greedy completion).
std::vector<int> max_antichain(const Poset& P);

// Lexicographically least antichain of size 3, if any.
std::optional<std::vector<int>> find_3antichain(const Poset& P);

struct RankFunction {
  std::vector<int> rho;  // one value per element, min 0 per Hasse component
  int poset_rank = 0;    // maximum length of a maximal chain
};

// A witness that no rank function exists: two walks in the Hasse diagram with
// the same endpoints whose net up-minus-down step counts differ. Each step is
// a cover index into P.covers() with +1 (up) or -1 (down).
struct UnrankedWitness {
  std::vector<std::pair<int, int>> walk_a;  // (cover index, direction)
  std::vector<std::pair<int, int>> walk_b;
};

// Returns the rank function when P is ranked, otherwise nullopt; the witness
// output parameter (optional) is filled on failure.
std::optional<RankFunction> rank_function(const Poset& P,
                                          UnrankedWitness* witness = nullptr);

// The seven poset operations. Join/sums require disjoint label sets.
Poset reverse(const Poset& P);
Poset op_join(const Poset& P, const Poset& Q);
Poset op_ordinal_sum(const Poset& P, const Poset& Q);
Poset op_direct_sum(const Poset& P, const Poset& Q);
Poset op_partial_ordinal_sum(const Poset& P, const std::string& a, const Poset& Q,
                             const std::string& b);
Poset split_cover(const Poset& P, const std::string& a, const std::string& b);
Poset split_extremal(const Poset& P, const std::string& c);

// Fresh element label "*1", "*2", ... not colliding with the given posets.
std::string fresh_star_label(const std::vector<const Poset*>& posets);

// JSON interchange: {"elements": [...], "relations": [[a,b], ...]}. Readers
// also accept a "covers" key; writers emit "covers".
Poset poset_from_json(const std::string& text);
std::string poset_to_json(const Poset& P);

// Hasse diagram in DOT, edges oriented upward, one edge per cover.
std::string poset_to_dot(const Poset& P);

// Convenience constructors used all over the tests.
Poset chain_poset(int n);      // labels "1".."n", 1 < 2 < ... < n
Poset antichain_poset(int n);  // labels "1".."n", no relations

}  // namespace ordslack
