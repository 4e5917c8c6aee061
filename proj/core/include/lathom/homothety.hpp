#pragma once

#include <atomic>
#include <functional>
#include <optional>

#include "lathom/lattice.hpp"

namespace lathom {

// Total map between lattices together with its declared scale factor d >= 1.
// A homothety is an order-embedding whose rank differences scale by exactly d;
// a lattice homothety additionally preserves join and meet.
struct HomothetyMap {
    LatticePtr domain;
    LatticePtr codomain;
    std::vector<ElementId> images;  // indexed by domain element
    int scale = 1;
};

struct Violation {
    std::string condition;  // "scale" | "order-embedding" | "rank-affinity" | "join" | "meet"
    ElementId p = -1;
    ElementId p2 = -1;
    std::string detail;
};

struct VerifyReport {
    bool ok = true;
    // A single-rank-level domain satisfies the rank condition for every d.
    bool scale_underdetermined = false;
    std::vector<Violation> violations;  // one witnessing pair per failed condition
};

// Order-embedding + rank affinity at the declared scale.
VerifyReport verify_homothety(const HomothetyMap& f);
// Same, then join/meet preservation; skips the join/meet phase if the
// homothety conditions already failed.
VerifyReport verify_lattice_homothety(const HomothetyMap& f);

HomothetyMap identity_map(LatticePtr lattice);

// Applies f first, then g; scales multiply.
HomothetyMap compose(const HomothetyMap& f, const HomothetyMap& g);

// p -> (f1(p), f2(p)) into the product codomain; scales add.
HomothetyMap pair_product(const HomothetyMap& f1, const HomothetyMap& f2);

// Sections of a map defined on a product domain.
HomothetyMap section_fixing_second(const HomothetyMap& embed, ElementId fixed_second);
HomothetyMap section_fixing_first(const HomothetyMap& embed, ElementId fixed_first);

// The unique scale a homothety with these images could declare, from the
// bottom/top rank gap; 1 when the domain has a single rank level.  nullopt if
// the gap does not divide evenly (no homothety has these images).
std::optional<int> infer_scale(const LatticeModel& domain, const LatticeModel& codomain,
                               const std::vector<ElementId>& images);

// images lexicographic, then scale
bool map_less(const HomothetyMap& a, const HomothetyMap& b);

// Shared node counter for one logical search; throws budget_error on overrun.
class SearchBudget {
public:
    explicit SearchBudget(long long cap) : cap_(cap) {}
    void charge(long long amount = 1) {
        if (used_.fetch_add(amount, std::memory_order_relaxed) + amount > cap_)
            throw budget_error("search budget of " + std::to_string(cap_) + " nodes exceeded",
                               cap_, -1);
    }
    long long used() const { return used_.load(std::memory_order_relaxed); }
    long long cap() const { return cap_; }

private:
    std::atomic<long long> used_{0};
    long long cap_;
};

struct SearchOptions {
    std::optional<int> scale;           // restrict enumeration to one scale factor
    long long node_budget = 100000000;  // candidate assignments tried
    int workers = 1;
};

// Extra constraints for the backtracking engine, used by the monochromatic and
// anchored searches layered on top of plain enumeration.
struct SearchConstraints {
    std::vector<std::optional<ElementId>> pinned;     // per domain element
    std::function<bool(ElementId, ElementId)> admit;  // (domain element, candidate image)
};

// Depth-first search over image assignments in increasing (rank, id) order of
// the domain, pruning by rank arithmetic, order-embedding against assigned
// elements and join/meet closure.  Deterministic order: ascending scale, then
// base rank, then candidate ids.  The callback may return false to stop.
// Single-threaded.
void for_each_lattice_homothety(const LatticePtr& domain, const LatticePtr& codomain,
                                const SearchOptions& options, SearchBudget& budget,
                                const SearchConstraints& constraints,
                                const std::function<bool(HomothetyMap&&)>& emit);

// All lattice homotheties domain -> codomain, sorted by (images, scale).  The
// search tree is split across options.workers; results do not depend on
// scheduling.
std::vector<HomothetyMap> enumerate_lattice_homotheties(const LatticePtr& domain,
                                                        const LatticePtr& codomain,
                                                        const SearchOptions& options = {});

std::vector<HomothetyMap> enumerate_lattice_homotheties(const LatticePtr& domain,
                                                        const LatticePtr& codomain,
                                                        const SearchOptions& options,
                                                        SearchBudget& budget);

} // namespace lathom
