#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lathom/errors.hpp"

namespace lathom {

// Elements are dense indices 0..size()-1 in the canonical order of each family.
using ElementId = std::int32_t;

enum class Family { boolean, chain, partition, division, product };

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

class LatticeModel;
using LatticePtr = std::shared_ptr<const LatticeModel>;

// A finite graded lattice from one of the supported families.  Canonical
// element encodings:
//   boolean   n-bit subset masks, ordered by integer value; bit i-1 <=> ground
//             element i
//   chain     n digits base t, digit i-1 is coordinate i; index is the
//             little-endian mixed-radix value, so chain(t=2, n) and boolean(n)
//             share indices
//   partition restricted growth strings over {1..n} in lexicographic order;
//             pi <= tau iff tau refines pi, rank is the block count
//   division  exponent vectors over the sorted prime factors, lexicographic
//   product   pairs, index = first * second_size + second, rank adds
// Bottom is always index 0 and top is size()-1 (asserted at build time).
class LatticeModel : public std::enable_shared_from_this<LatticeModel> {
public:
    static constexpr std::int64_t max_elements = 1000000;

    static LatticePtr boolean(int ground_size);
    static LatticePtr chain(int alphabet, int arity);
    static LatticePtr partition(int ground_size);
    static LatticePtr division(std::int64_t modulus);
    static LatticePtr product(LatticePtr first, LatticePtr second);
    static LatticePtr from_descriptor(const nlohmann::json& descriptor);

    Family family() const { return family_; }
    int size() const { return size_; }
    int max_rank() const { return max_rank_; }
    int min_rank() const { return min_rank_; }
    // Height of the rank interval; every rank arithmetic downstream uses
    // differences, so per-family offsets (partitions start at rank 1) are safe.
    int rank_span() const { return max_rank_ - min_rank_; }
    ElementId bottom() const { return 0; }
    ElementId top() const { return size_ - 1; }

    int rank(ElementId a) const { return ranks_[check(a)]; }
    bool leq(ElementId a, ElementId b) const;
    ElementId join(ElementId a, ElementId b) const;
    ElementId meet(ElementId a, ElementId b) const;

    // Elements of each absolute rank, ascending id.  Index 0 is rank min_rank().
    const std::vector<std::vector<ElementId>>& rank_buckets() const { return buckets_; }

    nlohmann::json descriptor() const;
    nlohmann::json render(ElementId a) const;
    std::string render_text(ElementId a) const;
    ElementId parse_element(const nlohmann::json& rendered) const;

    // Family parameters; throw std::logic_error when not applicable.
    int ground_size() const;           // boolean, partition
    int alphabet() const;              // chain
    int arity() const;                 // chain
    std::int64_t modulus() const;      // division
    const LatticePtr& first() const;   // product
    const LatticePtr& second() const;  // product

    LatticeModel(const LatticeModel&) = delete;
    LatticeModel& operator=(const LatticeModel&) = delete;

private:
    LatticeModel() = default;

    ElementId check(ElementId a) const;
    void finish();  // ranks -> buckets, bottom/top sanity
    ElementId partition_index(const std::vector<std::uint8_t>& rgs) const;

    bool leq_raw(ElementId a, ElementId b) const;
    ElementId join_raw(ElementId a, ElementId b) const;
    ElementId meet_raw(ElementId a, ElementId b) const;

    Family family_ = Family::boolean;
    int size_ = 0;
    int max_rank_ = 0;
    int min_rank_ = 0;
    std::vector<int> ranks_;
    std::vector<std::vector<ElementId>> buckets_;

    // boolean / partition
    int ground_ = 0;
    // chain
    int alphabet_ = 0;
    int arity_ = 0;
    std::vector<std::int64_t> chain_pow_;
    // partition
    std::vector<std::vector<std::uint8_t>> rgs_;
    // division
    std::int64_t modulus_ = 0;
    std::vector<std::int64_t> primes_;
    std::vector<int> prime_caps_;
    std::vector<std::int64_t> exp_radix_;     // big-endian mixed radix weights
    std::vector<std::int64_t> divisor_value_;
    // product
    LatticePtr first_, second_;

    // Lookup tables for families whose raw ops are not O(1); built when small.
    bool tables_ = false;
    std::vector<ElementId> join_tab_, meet_tab_;
    std::vector<std::uint64_t> leq_bits_;
    int leq_words_ = 0;
};

// Structural equality (same family and parameters).
bool same_lattice(const LatticeModel& a, const LatticeModel& b);

// The indexed family A(1), A(2), ... that homothety systems and Ramsey
// searches range over: boolean(i), chain(t, i), partition(i) or division(i).
struct LatticeSequence {
    Family family = Family::boolean;
    int alphabet = 2;  // chain only

    LatticePtr at(int i) const;
    nlohmann::json descriptor() const;
    static LatticeSequence from_descriptor(const nlohmann::json& j);
    // Sequence a concrete lattice belongs to; rejects product lattices.
    static LatticeSequence from_lattice(const LatticeModel& lattice);
};

} // namespace lathom
