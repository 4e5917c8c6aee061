#pragma once

#include <map>
#include <variant>

#include "lathom/homothety.hpp"

namespace lathom {

// Families of restricted maps closed under identity (H1) and composition (H2).
//   trivial  every lattice homothety
//   hj       Hales-Jewett type maps between chains over one alphabet
enum class SystemId { trivial, hj };

std::string system_name(SystemId s);
std::optional<SystemId> system_from_name(const std::string& name);

// phi(a) = a_1*1_{S_1} + ... + a_n*1_{S_n} + alpha between chain lattices
// C_t(n) -> C_t(N): pairwise disjoint coordinate sets of one common size k
// (the scale factor), alpha zero on their union.
struct HJForm {
    int t = 2;
    int domain_arity = 0;              // n
    int codomain_arity = 0;            // N
    std::vector<std::vector<int>> sets;  // 1-based coordinates, each sorted
    std::vector<int> alpha;              // length N, values 0..t-1
};

// Throws std::invalid_argument describing the broken invariant.
void validate(const HJForm& form);

int hj_scale(const HJForm& form);  // |S_1|

// Materialize over chain(t, n) -> chain(t, N).
HomothetyMap hj_to_map(const HJForm& form);

struct NotHJ {
    // Domain element where the map disagrees with the reconstructed form, or
    // -1 when the reconstruction itself broke an invariant.
    ElementId witness_input = -1;
    std::string reason;
};

// Reconstructs the only candidate form (alpha from the bottom, the sets from
// the atoms) and checks it pointwise.  The map must already pass
// verify_lattice_homothety; both sides must be chains over one alphabet
// (boolean counts as alphabet 2).
std::variant<HJForm, NotHJ> recognize_hj(const HomothetyMap& f);

// Form of the composite map, for composable forms (f then g).
HJForm compose_hj(const HJForm& f, const HJForm& g);

bool is_member(SystemId system, const HomothetyMap& f);

// H1 (identities restricted) and H2 (closure under composition) over
// A(1)..A(bound) of the given sequence.  For the hj system the composite of
// each member pair is also cross-checked against compose_hj pointwise.
struct AxiomsReport {
    SystemId system;
    LatticeSequence sequence;
    int bound = 0;
    bool h1_ok = true;
    std::vector<int> h1_failures;
    struct MemberCount {
        int i, j;
        long long members;
    };
    std::vector<MemberCount> member_counts;
    long long h2_checked = 0;
    long long hj_compose_checked = 0;
    std::vector<std::string> violations;
    bool ok = true;
};
AxiomsReport check_system_axioms(SystemId system, const LatticeSequence& sequence, int bound,
                                 const SearchOptions& options = {});

// Compatibility of an embedding A(m) x A(n) -> A(N) with a system:
//   C1  whenever g: A(i) -> A(m) x A(n) is a lattice homothety whose two
//       projection composites are restricted, embed . g is restricted;
//       checked for i = 1..i_bound (the truncation is recorded)
//   C2  every section x -> embed(x, q) and y -> embed(p, y) is restricted
struct CompatReport {
    SystemId system;
    int i_bound = 0;
    bool c2_ok = true;
    long long c2_sections = 0;
    std::string c2_violation;
    struct C1Level {
        int i;
        long long candidates;       // lattice homotheties A(i) -> A(m) x A(n)
        long long premise_passed;   // both projections restricted
    };
    std::vector<C1Level> c1_levels;
    bool c1_ok = true;
    std::string c1_violation;
    bool ok = true;
};
CompatReport check_compatibility(const HomothetyMap& embed, SystemId system, int i_bound,
                                 const SearchOptions& options = {});

// Every lattice homothety between boolean lattices (chains with t = 2) should
// be of Hales-Jewett type; counts the enumerated maps per scale factor.
struct RigidityReport {
    int n = 0;
    int codomain_n = 0;
    long long total = 0;
    std::map<int, long long> by_scale;
    std::vector<HomothetyMap> rejects;  // expected empty
    bool ok = true;
};
RigidityReport check_boolean_rigidity(int n, int codomain_n, const SearchOptions& options = {});

// First lattice homothety chain(t, n) -> chain(t, codomain_n) in search order
// that recognize_hj rejects, if any.
std::optional<std::pair<HomothetyMap, NotHJ>> find_non_hj(int t, int n, int codomain_n,
                                                          const SearchOptions& options = {});

} // namespace lathom
