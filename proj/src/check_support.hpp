#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sst/classes.hpp"
#include "sst/number_theory.hpp"
#include "sst/permutability.hpp"
#include "sst/series.hpp"
#include "sst/subgroups.hpp"
#include "sst/theorems.hpp"

namespace sst::detail {

/// Counterexamples kept per statement.
inline constexpr std::size_t kMaxCounterexamples = 3;

/// Accumulates a universally quantified statement over instances.
class Tally {
 public:
  explicit Tally(std::string label) : label_(std::move(label)) {}

  /// Counts one instance; `explain` is called only for failures.
  void record(bool ok, const std::function<Counterexample()>& explain) {
    ++instances_;
    if (ok) return;
    ++failures_;
    if (examples_.size() < kMaxCounterexamples) {
      Counterexample ce = explain();
      ce.statement = label_;
      examples_.push_back(std::move(ce));
    }
  }

  /// NotApplicable when no instance was recorded.
  Statement statement() const {
    if (instances_ == 0) return {label_, Tri::NotApplicable, 0};
    return {label_, tri(failures_ == 0), instances_};
  }

  void finish(TheoremReport& r) const {
    r.statements.push_back(statement());
    r.counterexamples.insert(r.counterexamples.end(), examples_.begin(), examples_.end());
  }

 private:
  std::string label_;
  std::size_t instances_ = 0;
  std::size_t failures_ = 0;
  std::vector<Counterexample> examples_;
};

inline Counterexample example(std::string description,
                              std::vector<std::pair<std::string, SubgroupRef>> subgroups = {}) {
  Counterexample ce;
  ce.description = std::move(description);
  ce.subgroups = std::move(subgroups);
  return ce;
}

inline TheoremReport start(TheoremId id, const Group& g) {
  TheoremReport r;
  r.id = id;
  r.group_name = g.name();
  return r;
}

inline void settle_all_hold(TheoremReport& r) { ::sst::settle_all_hold(r); }

inline Tri gated(bool hypothesis, bool value) { return hypothesis ? tri(value) : Tri::NotApplicable; }

/// Every subgroup of k satisfies pred; fills `first` with the least failure.
template <class Pred>
bool every_subgroup(const Group& g, SubgroupId k, Pred pred, std::optional<SubgroupId>* first = nullptr) {
  bool ok = true;
  g.subgroups_of(k).for_each([&](SubgroupId h) {
    if (!ok) return;
    if (!pred(static_cast<SubgroupId>(h))) {
      ok = false;
      if (first) *first = static_cast<SubgroupId>(h);
    }
  });
  return ok;
}

inline bool in_class(GroupView v, GroupClass c) { return classify(v, c).is_true(); }
inline bool solvable_in(GroupView v, GroupClass c) { return solvable(v) && in_class(v, c); }

inline bool is_p_subgroup_of_order(const Group& g, SubgroupId h, std::uint64_t p) {
  return p_part(g.size_of(h), p) == g.size_of(h);
}

/// <K^L>: the least subgroup containing K and normalized by L.
inline SubgroupId closure_under(const Group& g, SubgroupId k, SubgroupId l) {
  return relative_normal_closure(g, k, l);
}

/// HK is a subgroup of order |G|_p.
inline bool product_is_sylow(const Group& g, SubgroupId h, SubgroupId k, std::uint64_t p) {
  return g.permutes(h, k) && g.product_size(h, k) == p_part(g.order(), p);
}

/// Primes of |G| not dividing |L|.
inline std::vector<std::uint64_t> primes_outside(const Group& g, SubgroupId l) {
  std::vector<std::uint64_t> out;
  for (auto p : g.primes_of(g.top()))
    if (g.size_of(l) % p != 0) out.push_back(p);
  return out;
}

}  // namespace sst::detail
