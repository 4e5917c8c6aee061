#pragma once

#include <optional>
#include <vector>

#include "lathom/homothety.hpp"
#include "lathom/systems.hpp"

namespace lathom {

// Element colors are 1-based: values live in {1, ..., k}.
struct Coloring {
    LatticePtr lattice;
    int k = 1;
    std::vector<int> colors;
};

void validate_coloring(const Coloring& chi);

// Relabels colors by order of first appearance in element order. If perm is
// given it receives the relabeling as old color -> new color (index 1..k).
Coloring canonical_coloring(const Coloring& chi, std::vector<int>* perm = nullptr);

// S is a sorted element subset owning a minimum p; p_prime is any other
// distinguished element of S.
struct AdmissibleTriple {
    std::vector<ElementId> S;
    ElementId p = -1;
    ElementId p_prime = -1;
};

void validate_triple(const LatticeModel& lattice, const AdmissibleTriple& triple);

// All admissible triples with |S| = s, ordered by S lex then p_prime.
std::vector<AdmissibleTriple> enumerate_admissible_triples(const LatticePtr& lattice, int s);

// True iff f is a system member that sends p to q and p_prime to q_prime and
// colors f(S) minus {q_prime} with a single color. Requires q < q_prime.
bool check_anchored(const HomothetyMap& f, const AdmissibleTriple& triple, ElementId q,
                    ElementId q_prime, const Coloring& chi, SystemId system);

struct MonoWitness {
    HomothetyMap map;
    int color = 0;
};

// Smallest witness by (images, scale) whose image is monochromatic under chi,
// or nullopt when no system member qualifies.
std::optional<MonoWitness> find_mono_homothety(const LatticePtr& domain, const Coloring& chi,
                                               SystemId system, const SearchOptions& options);

// Existence-only variant sharing an external budget; stops at the first hit.
bool exists_mono_homothety(const LatticePtr& domain, const Coloring& chi, SystemId system,
                           const SearchOptions& options, SearchBudget& budget);

// Lexicographic generator of colorings in canonical form: position 0 is color
// 1 and every later color exceeds the running maximum by at most one.
class CanonicalColoringGen {
public:
    CanonicalColoringGen(LatticePtr lattice, int k);
    // Fills out with the next canonical coloring; false once exhausted.
    bool next(Coloring& out);
    long long yielded() const { return yielded_; }

private:
    LatticePtr lattice_;
    int k_;
    std::vector<int> cur_;
    bool fresh_ = true;
    bool done_ = false;
    long long yielded_ = 0;
};

// Number of canonical colorings of `size` elements with at most k colors,
// saturating at cap + 1 to keep the arithmetic overflow-free.
long long count_canonical_colorings(std::size_t size, int k, long long cap);

// Coordinate-permutation automorphisms as element permutations, identity
// first. Defined for chain and boolean lattices with arity at most 8.
std::vector<std::vector<ElementId>> coordinate_automorphisms(const LatticeModel& lattice);

struct RamseyOptions {
    SearchOptions search;
    long long max_colorings = 1LL << 30;
    bool automorphism_reduction = false;
};

struct LPredicateResult {
    bool holds = true;
    long long triples = 0;
    long long colorings_total = 0;  // canonical colorings per triple
    long long pairs_checked = 0;    // (triple, coloring) pairs fully decided
    struct Certificate {
        AdmissibleTriple triple;
        Coloring coloring;
    };
    std::optional<Certificate> certificate;
};

// Checks that every admissible size-s triple of A(n) and every canonical
// k-coloring of A(big_n) admit a chain q_1 < ... < q_ell whose pairs all
// carry an anchored system member A(n) -> A(big_n).
LPredicateResult check_L_predicate(const LatticeSequence& sequence, int n, int s, int k, int ell,
                                   int big_n, SystemId system, const RamseyOptions& options);

struct RamseyRound {
    int big_n = 0;
    bool works = false;
    long long colorings_total = 0;  // canonical colorings examined this round
    long long failing_index = 0;    // 1-based position of the bad coloring, 0 if none
    std::optional<Coloring> bad_coloring;
};

struct RamseyResult {
    std::optional<int> value;
    std::optional<int> budget_stopped_at;
    std::vector<RamseyRound> rounds;
};

// Smallest N in n..n_max such that every canonical k-coloring of A(N) admits
// a monochromatic system member A(n) -> A(N). Rounds carry replayable
// lower-bound certificates; a budget overrun stops the scan at that N.
RamseyResult ramsey_number(const LatticeSequence& sequence, SystemId system, int n, int k,
                           int n_max, const RamseyOptions& options);

} // namespace lathom
