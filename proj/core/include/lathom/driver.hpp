#pragma once

#include <optional>
#include <string>

#include "lathom/serialize.hpp"

// Structured front ends shared by the command line tool and the test
// harnesses, so both observe byte-identical reports for identical configs.
namespace lathom::driver {

json lattice_info(const json& descriptor);

json hom_enumerate(const json& domain_desc, const json& codomain_desc, std::optional<int> scale,
                   const SearchOptions& options);
json hom_verify(const json& map_json);

json embed_partition(int n1, int n2);
json embed_boolean(int n1, int n2);
json embed_chain(int t, int n1, int n2);
json embed_division(long long m, long long n);

json system_axioms(const std::string& system, const std::string& family, int t, int bound,
                   const SearchOptions& options);
json system_compat(const std::string& system, const std::string& family, int t, long long m,
                   long long n, int i_bound, const SearchOptions& options);
json system_rigidity(int n, int codomain_n, const SearchOptions& options);
json system_counterexample(int t, int n, int codomain_n, const SearchOptions& options);

json mono_search(const json& coloring_json, const std::string& system, int n,
                 const SearchOptions& options);
json l_predicate(const std::string& family, int t, int n, int s, int k, int ell, int big_n,
                 const std::string& system, const RamseyOptions& options);
json ramsey(const std::string& family, int t, const std::string& system, int n, int k, int n_max,
            const RamseyOptions& options);

} // namespace lathom::driver
