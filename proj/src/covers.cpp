#include "hw/covers.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "hw/bits.hpp"
#include "hw/errors.hpp"
#include "hw/simplex.hpp"

namespace hw {

CoverSystem CoverSystem::of(const Hypergraph& h) {
  CoverSystem sys;
  sys.num_items = h.num_vertices();
  sys.slot_items = h.edges();
  sys.item_slots.resize(h.num_vertices());
  for (int v = 0; v < h.num_vertices(); ++v) sys.item_slots[v] = h.incident_edges(v);
  sys.coverable.assign(h.num_vertices(), true);
  return sys;
}

CoverSystem CoverSystem::of(const ILabeledGraph& ilg) {
  CoverSystem sys;
  sys.num_items = ilg.num_vertices();
  sys.item_slots.resize(ilg.num_vertices());
  sys.coverable.assign(ilg.num_vertices(), false);
  for (int x : ilg.n_set()) sys.coverable[x] = true;
  for (int y : ilg.m_set()) {
    VertexSet covered;
    for (int x : ilg.graph().closed_neighborhood(y))
      if (ilg.in_n(x)) covered.push_back(x);
    const int slot = static_cast<int>(sys.slot_items.size());
    for (int x : covered) sys.item_slots[x].push_back(slot);
    sys.slot_items.push_back(std::move(covered));
  }
  return sys;
}

namespace {

void check_request(const CoverSystem& sys, const VertexSet& s) {
  for (int v : s)
    if (v < 0 || v >= sys.num_items || !sys.coverable[v])
      throw InvalidInput("vertex " + std::to_string(v) + " cannot be covered in this host");
}

VertexSet relevant_slots(const CoverSystem& sys, const VertexSet& s) {
  VertexSet slots;
  for (int v : s) slots.insert(slots.end(), sys.item_slots[v].begin(), sys.item_slots[v].end());
  normalize(slots);
  return slots;
}

}  // namespace

CoverSolution fractional_cover(const CoverSystem& sys, const VertexSet& s_in) {
  VertexSet s = s_in;
  normalize(s);
  check_request(sys, s);
  CoverSolution sol;
  sol.labeling = Labeling(sys.slot_items.size());
  sol.cost = 0;
  sol.request = s;
  if (s.empty()) {
    sol.integral = true;
    return sol;
  }
  // Solve the packing dual: max sum y_v, sum over each slot's items <= 1.
  const VertexSet slots = relevant_slots(sys, s);
  std::vector<std::vector<Rational>> a(slots.size(), std::vector<Rational>(s.size(), Rational(0)));
  for (std::size_t r = 0; r < slots.size(); ++r)
    for (std::size_t c = 0; c < s.size(); ++c)
      if (contains(sys.slot_items[slots[r]], s[c])) a[r][c] = 1;
  const std::vector<Rational> ones_rows(slots.size(), Rational(1)), ones_cols(s.size(), Rational(1));
  PackingLpResult lp = solve_packing_lp(a, ones_rows, ones_cols);

  for (std::size_t r = 0; r < slots.size(); ++r) sol.labeling.set(slots[r], lp.row_duals[r]);
  sol.cost = lp.objective;
  sol.dual = std::move(lp.primal);
  sol.integral = sol.labeling.is_binary();
  return sol;
}

CoverSolution fractional_cover(const Hypergraph& h, const VertexSet& s) {
  return fractional_cover(CoverSystem::of(h), s);
}

CoverSolution fractional_cover(const ILabeledGraph& ilg, const VertexSet& s) {
  return fractional_cover(CoverSystem::of(ilg), s);
}

bool certify_fractional(const CoverSystem& sys, const CoverSolution& sol) {
  if (sol.labeling.domain() != sys.slot_items.size()) return false;
  if (sol.labeling.size() != sol.cost) return false;
  for (int v : sol.request) {
    Rational sum = 0;
    for (int e : sys.item_slots[v]) sum += sol.labeling[e];
    if (sum < 1) return false;
  }
  if (sol.request.empty()) return sol.cost == 0;
  if (sol.dual.size() != sol.request.size()) return false;
  Rational dual_total = 0;
  for (const auto& y : sol.dual) {
    if (y < 0) return false;
    dual_total += y;
  }
  for (const auto& items : sys.slot_items) {
    Rational load = 0;
    for (std::size_t i = 0; i < sol.request.size(); ++i)
      if (contains(items, sol.request[i])) load += sol.dual[i];
    if (load > 1) return false;
  }
  return dual_total == sol.cost;
}

// ------------------------------------------------------ integral cover

namespace {

struct IntegralSearch {
  const CoverSystem& sys;
  std::vector<Bits> slot_bits;
  int best_count;
  std::vector<int> best;
  std::vector<int> current;

  void run(const Bits& uncovered) {
    const int v = uncovered.first();
    if (v < 0) {
      if (static_cast<int>(current.size()) < best_count) {
        best_count = static_cast<int>(current.size());
        best = current;
      }
      return;
    }
    if (static_cast<int>(current.size()) + 1 >= best_count) return;
    for (int slot : sys.item_slots[v]) {
      current.push_back(slot);
      run(uncovered - slot_bits[slot]);
      current.pop_back();
    }
  }
};

}  // namespace

CoverSolution integral_cover(const CoverSystem& sys, const VertexSet& s_in) {
  VertexSet s = s_in;
  normalize(s);
  check_request(sys, s);
  IntegralSearch search{sys, {}, 0, {}, {}};
  for (const auto& items : sys.slot_items) search.slot_bits.push_back(Bits::of(sys.num_items, items));
  // One slot per item is always feasible.
  for (int v : s) search.best.push_back(sys.item_slots[v].front());
  normalize(search.best);
  search.best_count = static_cast<int>(search.best.size());
  search.run(Bits::of(sys.num_items, s));

  CoverSolution sol;
  normalize(search.best);
  sol.labeling = Labeling::binary(sys.slot_items.size(), search.best);
  sol.cost = static_cast<long>(search.best.size());
  sol.integral = true;
  sol.request = s;
  return sol;
}

CoverSolution integral_cover(const Hypergraph& h, const VertexSet& s) {
  return integral_cover(CoverSystem::of(h), s);
}

// --------------------------------------------------- transversal cover

namespace {

class TransversalSearch {
 public:
  TransversalSearch(const CoverSystem& sys, const std::vector<VertexSet>& family,
                    std::atomic<std::int64_t>& nodes, std::int64_t limit)
      : sys_(sys), family_(family), nodes_(nodes), limit_(limit) {
    for (const auto& f : family_) family_bits_.push_back(Bits::of(sys.num_items, f));
  }

  const Rational& cost(const Bits& chosen) {
    auto it = memo_.find(chosen);
    if (it != memo_.end()) return it->second;
    Rational c = fractional_cover(sys_, chosen.to_vector()).cost;
    return memo_.emplace(chosen, std::move(c)).first->second;
  }

  // Depth-first over the family in order; a set already hit by `chosen`
  // needs no new representative. `bound` prunes partial sets whose cost
  // is >= bound (or > bound when inclusive). Returns true if a solution
  // was recorded.
  bool search(std::size_t index, const Bits& chosen, const Rational& chosen_cost, bool first_only,
              bool inclusive) {
    if (++nodes_ > limit_) throw LimitExceeded("transversal enumeration exceeded its node limit");
    while (index < family_.size() && family_bits_[index].intersects(chosen)) ++index;
    if (index == family_.size()) {
      best_ = chosen_cost;
      best_set_ = chosen;
      have_best_ = true;
      return true;
    }
    bool found = false;
    for (int v : family_[index]) {
      Bits next = chosen;
      next.set(v);
      const Rational& c = cost(next);
      if (have_best_ && (inclusive ? c > best_ : c >= best_)) continue;
      if (search(index + 1, next, c, first_only, inclusive)) {
        found = true;
        if (first_only) return true;
      }
    }
    return found;
  }

  void set_bound(const Rational& bound) {
    best_ = bound;
    have_best_ = true;
  }
  bool have_best() const { return have_best_; }
  const Rational& best() const { return best_; }
  const Bits& best_set() const { return best_set_; }

 private:
  const CoverSystem& sys_;
  const std::vector<VertexSet>& family_;
  std::vector<Bits> family_bits_;
  std::atomic<std::int64_t>& nodes_;
  std::int64_t limit_;
  std::unordered_map<Bits, Rational, BitsHash> memo_;
  Rational best_;
  Bits best_set_;
  bool have_best_ = false;
};

}  // namespace

TransversalResult transversal_cover(const CoverSystem& sys, const std::vector<VertexSet>& family_in,
                                    const TransversalOptions& options) {
  std::vector<VertexSet> family = family_in;
  for (auto& f : family) {
    normalize(f);
    if (f.empty()) throw InvalidInput("transversal family contains an empty set");
    check_request(sys, f);
  }
  std::stable_sort(family.begin(), family.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  TransversalResult result;
  if (family.empty()) {
    result.cover = fractional_cover(sys, {});
    return result;
  }

  std::atomic<std::int64_t> nodes{0};
  const Bits empty(sys.num_items);
  Rational optimum;

  if (options.exec == Exec::serial) {
    TransversalSearch search(sys, family, nodes, options.node_limit);
    search.search(0, empty, Rational(0), false, false);
    result.hitting_set = search.best_set().to_vector();
  } else {
    // Phase 1: optimum value, branches over the first set's representatives
    // run concurrently and share the best bound.
    std::mutex best_mutex;
    bool have_global = false;
    Rational global_best;
    const VertexSet& head = family.front();
    for_each_index(Exec::parallel, static_cast<std::int64_t>(head.size()), [&](std::int64_t i) {
      TransversalSearch search(sys, family, nodes, options.node_limit);
      {
        std::lock_guard lock(best_mutex);
        if (have_global) search.set_bound(global_best);
      }
      Bits start = empty;
      start.set(head[i]);
      const Rational c = search.cost(start);
      if (search.have_best() && c >= search.best()) return;
      if (!search.search(1, start, c, false, false)) return;
      std::lock_guard lock(best_mutex);
      if (!have_global || search.best() < global_best) {
        global_best = search.best();
        have_global = true;
      }
    });
    optimum = global_best;
    // Phase 2: the first optimal hitting set in serial search order, so the
    // witness does not depend on scheduling.
    TransversalSearch replay(sys, family, nodes, options.node_limit);
    replay.set_bound(optimum);
    replay.search(0, empty, Rational(0), true, true);
    result.hitting_set = replay.best_set().to_vector();
  }
  result.cover = fractional_cover(sys, result.hitting_set);
  result.nodes = nodes.load();
  return result;
}

}  // namespace hw
