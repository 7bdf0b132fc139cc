#include "bollobas/search.hpp"

#include "bollobas/constructions.hpp"
#include "bollobas/errors.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace bollobas {

namespace {

class Bits {
public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  Bits operator&(const Bits& o) const {
    Bits r(*this);
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= o.words_[k];
    return r;
  }
  template <typename Visit>
  void for_each(Visit&& visit) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      for (std::uint64_t w = words_[k]; w != 0; w &= w - 1) {
        visit(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      }
    }
  }

private:
  std::vector<std::uint64_t> words_;
};

struct BudgetExceeded {};
struct BoundReached {};

// Greedy sequential colouring of `p` in `adj`, vertices taken in index
// order. Returns (vertex, colour) sorted by colour, colours starting at 1.
std::vector<std::pair<std::size_t, std::size_t>> colour_order(const Bits& p,
                                                              const std::vector<Bits>& adj) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  Bits uncoloured = p;
  std::size_t colour = 0;
  while (!uncoloured.none()) {
    ++colour;
    Bits available = uncoloured;
    while (!available.none()) {
      std::size_t v = 0;
      bool found = false;
      available.for_each([&](std::size_t x) {
        if (!found) { v = x; found = true; }
      });
      out.emplace_back(v, colour);
      uncoloured.reset(v);
      available.reset(v);
      // Drop neighbours of v: they cannot share its colour.
      available.for_each([&](std::size_t x) {
        if (adj[v].test(x)) available.reset(x);
      });
    }
  }
  return out;
}

std::size_t colour_bound(const Bits& p, const std::vector<Bits>& adj) {
  const auto order = colour_order(p, adj);
  return order.empty() ? 0 : order.back().second;
}

struct SearchState {
  SearchState(const SearchOptions& o, std::size_t bound) : opts(o), bound_size(bound) {}

  const SearchOptions& opts;
  std::size_t bound_size;
  std::size_t best = 0;
  std::vector<std::size_t> best_members;
  std::vector<std::size_t> current;
  std::uint64_t nodes = 0;

  void visit_node() {
    ++nodes;
    if (opts.node_budget != 0 && nodes > opts.node_budget) throw BudgetExceeded{};
  }
  void record() {
    if (current.size() > best) {
      best = current.size();
      best_members = current;
      if (opts.stop_at_bound && best >= bound_size) throw BoundReached{};
    }
  }
};

void expand_clique(SearchState& st, Bits p, const std::vector<Bits>& adj) {
  st.visit_node();
  auto order = colour_order(p, adj);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto [v, colour] = *it;
    if (st.current.size() + colour <= st.best) return;
    st.current.push_back(v);
    Bits next = p & adj[v];
    if (next.none()) st.record();
    else expand_clique(st, next, adj);
    st.current.pop_back();
    p.reset(v);
  }
}

void extend_chain(SearchState& st, const Bits& p, const std::vector<Bits>& out,
                  const std::vector<Bits>& compatible) {
  st.visit_node();
  st.record();
  if (p.none()) return;
  if (st.current.size() + colour_bound(p, compatible) <= st.best) return;
  std::vector<std::size_t> choices;
  p.for_each([&](std::size_t x) { choices.push_back(x); });
  for (std::size_t x : choices) {
    st.current.push_back(x);
    extend_chain(st, p & out[x], out, compatible);
    st.current.pop_back();
    if (st.current.size() + colour_bound(p, compatible) <= st.best) return;
  }
}

std::vector<DTuple> candidates_for(GroundSet ground, const TupleType& t, const SearchOptions& opts) {
  auto cands = all_tuples_of_type(ground, t);
  if (cands.size() > opts.max_candidates) {
    throw SizeError(std::to_string(cands.size()) + " candidate tuples exceed the limit of " +
                    std::to_string(opts.max_candidates));
  }
  return cands;
}

template <typename Run>
SearchResult run_search(GroundSet ground, const TupleType& t, const SearchOptions& opts,
                        const std::vector<DTuple>& cands, bool sort_witness, Run&& run) {
  SearchResult result{0, Family(ground, t.arity()), 0, multinomial(t), true};
  const std::size_t bound_size = result.bound > BigInteger(cands.size())
                                     ? cands.size() + 1
                                     : static_cast<std::size_t>(result.bound);
  SearchState st(opts, bound_size);
  try {
    run(st);
  } catch (const BudgetExceeded&) {
    result.complete = false;
  } catch (const BoundReached&) {
  }
  auto members = st.best_members;
  if (sort_witness) std::sort(members.begin(), members.end());
  for (std::size_t v : members) result.witness.push_back(cands[v]);
  result.max_size = members.size();
  result.nodes_explored = st.nodes;
  return result;
}

} // namespace

SearchResult max_bollobas_uniform(GroundSet ground, const TupleType& t, const SearchOptions& opts) {
  const auto cands = candidates_for(ground, t, opts);
  const std::size_t c = cands.size();
  std::vector<Bits> adj(c, Bits(c));
  Bits all(c);
  for (std::size_t a = 0; a < c; ++a) {
    all.set(a);
    for (std::size_t b = a + 1; b < c; ++b) {
      if (cross_condition(cands[a], cands[b]) && cross_condition(cands[b], cands[a])) {
        adj[a].set(b);
        adj[b].set(a);
      }
    }
  }
  return run_search(ground, t, opts, cands, true, [&](SearchState& st) {
    if (c > 0) expand_clique(st, all, adj);
  });
}

SearchResult max_skew_uniform(GroundSet ground, const TupleType& t, const SearchOptions& opts) {
  const auto cands = candidates_for(ground, t, opts);
  const std::size_t c = cands.size();
  // out[a]: tuples that may follow a. compatible: may share a chain in
  // some order.
  std::vector<Bits> out(c, Bits(c));
  std::vector<Bits> compatible(c, Bits(c));
  Bits all(c);
  for (std::size_t a = 0; a < c; ++a) {
    all.set(a);
    for (std::size_t b = 0; b < c; ++b) {
      if (a != b && cross_condition(cands[a], cands[b])) {
        out[a].set(b);
        compatible[a].set(b);
        compatible[b].set(a);
      }
    }
  }
  return run_search(ground, t, opts, cands, false, [&](SearchState& st) {
    extend_chain(st, all, out, compatible);
  });
}

} // namespace bollobas
