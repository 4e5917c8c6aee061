#include "lathom/lattice.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <sstream>

namespace lathom {

using nlohmann::json;

std::string family_name(Family f) {
    switch (f) {
        case Family::boolean: return "boolean";
        case Family::chain: return "chain";
        case Family::partition: return "partition";
        case Family::division: return "division";
        case Family::product: return "product";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    if (name == "boolean") return Family::boolean;
    if (name == "chain") return Family::chain;
    if (name == "partition") return Family::partition;
    if (name == "division") return Family::division;
    if (name == "product") return Family::product;
    return std::nullopt;
}

ElementId LatticeModel::check(ElementId a) const {
    if (a < 0 || a >= size_)
        throw std::out_of_range("element index " + std::to_string(a) + " out of range 0.." +
                                std::to_string(size_ - 1));
    return a;
}

// ---- construction ----------------------------------------------------------

namespace {

// Relabel block labels by first occurrence; result is a restricted growth string.
std::vector<std::uint8_t> canonical_rgs(const std::vector<int>& labels) {
    int top = *std::max_element(labels.begin(), labels.end());
    std::vector<int> seen(top + 1, -1);
    std::vector<std::uint8_t> out(labels.size());
    int next = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        int l = labels[i];
        if (seen[l] < 0) seen[l] = next++;
        out[i] = static_cast<std::uint8_t>(seen[l]);
    }
    return out;
}

std::uint64_t bell_number_capped(int n, std::uint64_t cap) {
    // Bell triangle; saturates once past cap.
    std::vector<std::uint64_t> row{1};
    for (int i = 1; i < n; ++i) {
        std::vector<std::uint64_t> next;
        next.reserve(row.size() + 1);
        next.push_back(row.back());
        for (std::size_t j = 0; j < row.size(); ++j) {
            std::uint64_t v = next[j] + row[j];
            if (v > cap) return cap + 1;
            next.push_back(v);
        }
        row = std::move(next);
    }
    return row.back();
}

} // namespace

LatticePtr LatticeModel::boolean(int ground_size) {
    if (ground_size < 1) throw std::invalid_argument("boolean lattice needs n >= 1");
    if (ground_size >= 63 || (std::int64_t{1} << ground_size) > max_elements)
        throw size_limit_error("boolean(" + std::to_string(ground_size) + ") exceeds the element cap");
    auto m = std::shared_ptr<LatticeModel>(new LatticeModel());
    m->family_ = Family::boolean;
    m->ground_ = ground_size;
    m->size_ = 1 << ground_size;
    m->ranks_.resize(m->size_);
    for (ElementId a = 0; a < m->size_; ++a)
        m->ranks_[a] = std::popcount(static_cast<unsigned>(a));
    m->finish();
    return m;
}

LatticePtr LatticeModel::chain(int alphabet, int arity) {
    if (alphabet < 2) throw std::invalid_argument("chain lattice needs t >= 2");
    if (arity < 1) throw std::invalid_argument("chain lattice needs n >= 1");
    std::int64_t size = 1;
    std::vector<std::int64_t> pow{1};
    for (int i = 0; i < arity; ++i) {
        size *= alphabet;
        if (size > max_elements)
            throw size_limit_error("chain(t=" + std::to_string(alphabet) + ", n=" +
                                   std::to_string(arity) + ") exceeds the element cap");
        pow.push_back(size);
    }
    auto m = std::shared_ptr<LatticeModel>(new LatticeModel());
    m->family_ = Family::chain;
    m->alphabet_ = alphabet;
    m->arity_ = arity;
    m->chain_pow_ = std::move(pow);
    m->size_ = static_cast<int>(size);
    m->ranks_.resize(m->size_);
    for (ElementId a = 0; a < m->size_; ++a) {
        int r = 0;
        for (int v = a; v > 0; v /= alphabet) r += v % alphabet;
        m->ranks_[a] = r;
    }
    m->finish();
    return m;
}

LatticePtr LatticeModel::partition(int ground_size) {
    if (ground_size < 1) throw std::invalid_argument("partition lattice needs n >= 1");
    if (bell_number_capped(ground_size, max_elements) > static_cast<std::uint64_t>(max_elements))
        throw size_limit_error("partition(" + std::to_string(ground_size) + ") exceeds the element cap");

    auto m = std::shared_ptr<LatticeModel>(new LatticeModel());
    m->family_ = Family::partition;
    m->ground_ = ground_size;

    // All restricted growth strings, generated in lexicographic order.
    std::vector<std::uint8_t> cur(ground_size, 0);
    auto gen = [&](auto&& self, int pos, int used) -> void {
        if (pos == ground_size) {
            m->rgs_.push_back(cur);
            return;
        }
        for (int v = 0; v <= used; ++v) {
            cur[pos] = static_cast<std::uint8_t>(v);
            self(self, pos + 1, std::max(used, v + 1));
        }
    };
    cur[0] = 0;
    gen(gen, 1, 1);

    m->size_ = static_cast<int>(m->rgs_.size());
    m->ranks_.resize(m->size_);
    for (ElementId a = 0; a < m->size_; ++a)
        m->ranks_[a] = 1 + *std::max_element(m->rgs_[a].begin(), m->rgs_[a].end());
    m->finish();

    // Raw partition ops cost O(n); memoize them for small models.
    if (m->size_ <= 1024) {
        int n = m->size_;
        m->leq_words_ = (n + 63) / 64;
        m->leq_bits_.assign(static_cast<std::size_t>(n) * m->leq_words_, 0);
        m->join_tab_.resize(static_cast<std::size_t>(n) * n);
        m->meet_tab_.resize(static_cast<std::size_t>(n) * n);
        for (ElementId a = 0; a < n; ++a)
            for (ElementId b = 0; b < n; ++b) {
                if (m->leq_raw(a, b))
                    m->leq_bits_[static_cast<std::size_t>(a) * m->leq_words_ + b / 64] |=
                        std::uint64_t{1} << (b % 64);
                m->join_tab_[static_cast<std::size_t>(a) * n + b] = m->join_raw(a, b);
                m->meet_tab_[static_cast<std::size_t>(a) * n + b] = m->meet_raw(a, b);
            }
        m->tables_ = true;
    }
    return m;
}

LatticePtr LatticeModel::division(std::int64_t modulus) {
    if (modulus < 1) throw std::invalid_argument("division lattice needs n >= 1");
    if (modulus > 1000000000000LL)
        throw std::invalid_argument("division lattice modulus too large to factor");

    std::vector<std::int64_t> primes;
    std::vector<int> caps;
    std::int64_t rest = modulus;
    for (std::int64_t p = 2; p * p <= rest; ++p) {
        if (rest % p) continue;
        int k = 0;
        while (rest % p == 0) { rest /= p; ++k; }
        primes.push_back(p);
        caps.push_back(k);
    }
    if (rest > 1) { primes.push_back(rest); caps.push_back(1); }

    std::int64_t size = 1;
    for (int k : caps) {
        size *= k + 1;
        if (size > max_elements)
            throw size_limit_error("division(" + std::to_string(modulus) + ") exceeds the element cap");
    }

    auto m = std::shared_ptr<LatticeModel>(new LatticeModel());
    m->family_ = Family::division;
    m->modulus_ = modulus;
    m->primes_ = std::move(primes);
    m->prime_caps_ = std::move(caps);
    m->size_ = static_cast<int>(size);

    // Big-endian mixed radix: first prime's exponent is the most significant,
    // so ascending index is lexicographic order of exponent vectors.
    int r = static_cast<int>(m->primes_.size());
    m->exp_radix_.assign(r, 1);
    for (int i = r - 2; i >= 0; --i)
        m->exp_radix_[i] = m->exp_radix_[i + 1] * (m->prime_caps_[i + 1] + 1);

    m->ranks_.resize(m->size_);
    m->divisor_value_.resize(m->size_);
    for (ElementId a = 0; a < m->size_; ++a) {
        int rank = 0;
        std::int64_t value = 1;
        for (int i = 0; i < r; ++i) {
            int e = static_cast<int>((a / m->exp_radix_[i]) % (m->prime_caps_[i] + 1));
            rank += e;
            for (int j = 0; j < e; ++j) value *= m->primes_[i];
        }
        m->ranks_[a] = rank;
        m->divisor_value_[a] = value;
    }
    m->finish();
    return m;
}

LatticePtr LatticeModel::product(LatticePtr first, LatticePtr second) {
    if (!first || !second) throw std::invalid_argument("product lattice needs two factors");
    std::int64_t size = std::int64_t{first->size()} * second->size();
    if (size > max_elements) throw size_limit_error("product lattice exceeds the element cap");

    auto m = std::shared_ptr<LatticeModel>(new LatticeModel());
    m->family_ = Family::product;
    m->first_ = std::move(first);
    m->second_ = std::move(second);
    m->size_ = static_cast<int>(size);
    m->ranks_.resize(m->size_);
    int s2 = m->second_->size();
    for (ElementId a = 0; a < m->size_; ++a)
        m->ranks_[a] = m->first_->rank(a / s2) + m->second_->rank(a % s2);
    m->finish();
    return m;
}

ElementId LatticeModel::partition_index(const std::vector<std::uint8_t>& rgs) const {
    auto it = std::lower_bound(rgs_.begin(), rgs_.end(), rgs);
    assert(it != rgs_.end() && *it == rgs);
    return static_cast<ElementId>(it - rgs_.begin());
}

void LatticeModel::finish() {
    min_rank_ = ranks_.front();
    max_rank_ = ranks_.front();
    for (int r : ranks_) {
        min_rank_ = std::min(min_rank_, r);
        max_rank_ = std::max(max_rank_, r);
    }
    assert(ranks_.front() == min_rank_ && ranks_.back() == max_rank_);
    buckets_.assign(max_rank_ - min_rank_ + 1, {});
    for (ElementId a = 0; a < size_; ++a)
        buckets_[ranks_[a] - min_rank_].push_back(a);
}

// ---- order and operations --------------------------------------------------

bool LatticeModel::leq(ElementId a, ElementId b) const {
    check(a); check(b);
    if (tables_)
        return (leq_bits_[static_cast<std::size_t>(a) * leq_words_ + b / 64] >> (b % 64)) & 1;
    return leq_raw(a, b);
}

ElementId LatticeModel::join(ElementId a, ElementId b) const {
    check(a); check(b);
    if (tables_) return join_tab_[static_cast<std::size_t>(a) * size_ + b];
    return join_raw(a, b);
}

ElementId LatticeModel::meet(ElementId a, ElementId b) const {
    check(a); check(b);
    if (tables_) return meet_tab_[static_cast<std::size_t>(a) * size_ + b];
    return meet_raw(a, b);
}

bool LatticeModel::leq_raw(ElementId a, ElementId b) const {
    switch (family_) {
        case Family::boolean:
            return (a & b) == a;
        case Family::chain: {
            for (int i = 0; i < arity_; ++i)
                if ((a / chain_pow_[i]) % alphabet_ > (b / chain_pow_[i]) % alphabet_) return false;
            return true;
        }
        case Family::partition: {
            // a <= b iff b refines a: b's blocks map into a's blocks.
            const auto& ra = rgs_[a];
            const auto& rb = rgs_[b];
            std::array<int, 256> to_a;
            to_a.fill(-1);
            for (int i = 0; i < ground_; ++i) {
                int lb = rb[i];
                if (to_a[lb] < 0) to_a[lb] = ra[i];
                else if (to_a[lb] != ra[i]) return false;
            }
            return true;
        }
        case Family::division: {
            for (std::size_t i = 0; i < primes_.size(); ++i)
                if ((a / exp_radix_[i]) % (prime_caps_[i] + 1) >
                    (b / exp_radix_[i]) % (prime_caps_[i] + 1)) return false;
            return true;
        }
        case Family::product: {
            int s2 = second_->size();
            return first_->leq(a / s2, b / s2) && second_->leq(a % s2, b % s2);
        }
    }
    return false;
}

ElementId LatticeModel::join_raw(ElementId a, ElementId b) const {
    switch (family_) {
        case Family::boolean:
            return a | b;
        case Family::chain: {
            ElementId out = 0;
            for (int i = 0; i < arity_; ++i) {
                int da = static_cast<int>((a / chain_pow_[i]) % alphabet_);
                int db = static_cast<int>((b / chain_pow_[i]) % alphabet_);
                out += static_cast<ElementId>(std::max(da, db) * chain_pow_[i]);
            }
            return out;
        }
        case Family::partition: {
            // Coarsest common refinement: blocks are pairwise intersections.
            const auto& ra = rgs_[a];
            const auto& rb = rgs_[b];
            std::vector<int> labels(ground_);
            for (int i = 0; i < ground_; ++i)
                labels[i] = ra[i] * ground_ + rb[i];
            return partition_index(canonical_rgs(labels));
        }
        case Family::division: {
            ElementId out = 0;
            for (std::size_t i = 0; i < primes_.size(); ++i) {
                int ea = static_cast<int>((a / exp_radix_[i]) % (prime_caps_[i] + 1));
                int eb = static_cast<int>((b / exp_radix_[i]) % (prime_caps_[i] + 1));
                out += static_cast<ElementId>(std::max(ea, eb) * exp_radix_[i]);
            }
            return out;
        }
        case Family::product: {
            int s2 = second_->size();
            return first_->join(a / s2, b / s2) * s2 + second_->join(a % s2, b % s2);
        }
    }
    return 0;
}

ElementId LatticeModel::meet_raw(ElementId a, ElementId b) const {
    switch (family_) {
        case Family::boolean:
            return a & b;
        case Family::chain: {
            ElementId out = 0;
            for (int i = 0; i < arity_; ++i) {
                int da = static_cast<int>((a / chain_pow_[i]) % alphabet_);
                int db = static_cast<int>((b / chain_pow_[i]) % alphabet_);
                out += static_cast<ElementId>(std::min(da, db) * chain_pow_[i]);
            }
            return out;
        }
        case Family::partition: {
            // Finest partition refined by both: union-find over shared blocks.
            const auto& ra = rgs_[a];
            const auto& rb = rgs_[b];
            std::vector<int> parent(ground_);
            for (int i = 0; i < ground_; ++i) parent[i] = i;
            auto find = [&](int x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            std::array<int, 256> first_of_a, first_of_b;
            first_of_a.fill(-1);
            first_of_b.fill(-1);
            for (int i = 0; i < ground_; ++i) {
                if (first_of_a[ra[i]] < 0) first_of_a[ra[i]] = i;
                else parent[find(i)] = find(first_of_a[ra[i]]);
                if (first_of_b[rb[i]] < 0) first_of_b[rb[i]] = i;
                else parent[find(i)] = find(first_of_b[rb[i]]);
            }
            std::vector<int> labels(ground_);
            for (int i = 0; i < ground_; ++i) labels[i] = find(i);
            return partition_index(canonical_rgs(labels));
        }
        case Family::division: {
            ElementId out = 0;
            for (std::size_t i = 0; i < primes_.size(); ++i) {
                int ea = static_cast<int>((a / exp_radix_[i]) % (prime_caps_[i] + 1));
                int eb = static_cast<int>((b / exp_radix_[i]) % (prime_caps_[i] + 1));
                out += static_cast<ElementId>(std::min(ea, eb) * exp_radix_[i]);
            }
            return out;
        }
        case Family::product: {
            int s2 = second_->size();
            return first_->meet(a / s2, b / s2) * s2 + second_->meet(a % s2, b % s2);
        }
    }
    return 0;
}

// ---- descriptors and rendering ---------------------------------------------

json LatticeModel::descriptor() const {
    json params;
    switch (family_) {
        case Family::boolean: params = {{"n", ground_}}; break;
        case Family::chain: params = {{"t", alphabet_}, {"n", arity_}}; break;
        case Family::partition: params = {{"n", ground_}}; break;
        case Family::division: params = {{"n", modulus_}}; break;
        case Family::product:
            params = {{"first", first_->descriptor()}, {"second", second_->descriptor()}};
            break;
    }
    return {{"family", family_name(family_)}, {"params", params}};
}

LatticePtr LatticeModel::from_descriptor(const json& descriptor) {
    if (!descriptor.is_object() || !descriptor.contains("family") || !descriptor.contains("params"))
        throw std::invalid_argument("lattice descriptor needs \"family\" and \"params\"");
    auto fam = family_from_name(descriptor["family"].get<std::string>());
    if (!fam) throw std::invalid_argument("unknown lattice family \"" +
                                          descriptor["family"].get<std::string>() + "\"");
    const json& p = descriptor["params"];
    auto need_int = [&](const char* key) -> std::int64_t {
        if (!p.contains(key) || !p[key].is_number_integer())
            throw std::invalid_argument(std::string("descriptor params need integer \"") + key + "\"");
        return p[key].get<std::int64_t>();
    };
    switch (*fam) {
        case Family::boolean: return boolean(static_cast<int>(need_int("n")));
        case Family::chain:
            return chain(static_cast<int>(need_int("t")), static_cast<int>(need_int("n")));
        case Family::partition: return partition(static_cast<int>(need_int("n")));
        case Family::division: return division(need_int("n"));
        case Family::product:
            if (!p.contains("first") || !p.contains("second"))
                throw std::invalid_argument("product descriptor needs \"first\" and \"second\"");
            return product(from_descriptor(p["first"]), from_descriptor(p["second"]));
    }
    throw std::invalid_argument("unreachable");
}

json LatticeModel::render(ElementId a) const {
    check(a);
    switch (family_) {
        case Family::boolean: {
            json out = json::array();
            for (int i = 0; i < ground_; ++i)
                if (a & (1 << i)) out.push_back(i + 1);
            return out;
        }
        case Family::chain: {
            json out = json::array();
            for (int i = 0; i < arity_; ++i)
                out.push_back(static_cast<int>((a / chain_pow_[i]) % alphabet_));
            return out;
        }
        case Family::partition: {
            const auto& r = rgs_[a];
            int blocks = ranks_[a];
            json out = json::array();
            for (int l = 0; l < blocks; ++l) {
                json block = json::array();
                for (int i = 0; i < ground_; ++i)
                    if (r[i] == l) block.push_back(i + 1);
                out.push_back(block);
            }
            return out;
        }
        case Family::division:
            return divisor_value_[a];
        case Family::product:
            return json::array({first_->render(a / second_->size()),
                                second_->render(a % second_->size())});
    }
    return {};
}

std::string LatticeModel::render_text(ElementId a) const {
    check(a);
    std::ostringstream os;
    switch (family_) {
        case Family::boolean: {
            os << '{';
            bool sep = false;
            for (int i = 0; i < ground_; ++i)
                if (a & (1 << i)) {
                    if (sep) os << ',';
                    os << i + 1;
                    sep = true;
                }
            os << '}';
            break;
        }
        case Family::chain: {
            os << '(';
            for (int i = 0; i < arity_; ++i) {
                if (i) os << ',';
                os << (a / chain_pow_[i]) % alphabet_;
            }
            os << ')';
            break;
        }
        case Family::partition: {
            const auto& r = rgs_[a];
            os << '{';
            for (int l = 0; l < ranks_[a]; ++l) {
                if (l) os << ',';
                os << '{';
                bool sep = false;
                for (int i = 0; i < ground_; ++i)
                    if (r[i] == l) {
                        if (sep) os << ',';
                        os << i + 1;
                        sep = true;
                    }
                os << '}';
            }
            os << '}';
            break;
        }
        case Family::division:
            os << divisor_value_[a];
            break;
        case Family::product:
            os << '(' << first_->render_text(a / second_->size()) << ", "
               << second_->render_text(a % second_->size()) << ')';
            break;
    }
    return os.str();
}

ElementId LatticeModel::parse_element(const json& rendered) const {
    switch (family_) {
        case Family::boolean: {
            if (!rendered.is_array()) throw std::invalid_argument("boolean element must be a subset array");
            ElementId mask = 0;
            for (const auto& v : rendered) {
                int x = v.get<int>();
                if (x < 1 || x > ground_)
                    throw std::invalid_argument("subset member " + std::to_string(x) + " outside ground set");
                if (mask & (1 << (x - 1)))
                    throw std::invalid_argument("subset member repeated");
                mask |= 1 << (x - 1);
            }
            return mask;
        }
        case Family::chain: {
            if (!rendered.is_array() || static_cast<int>(rendered.size()) != arity_)
                throw std::invalid_argument("chain element must list " + std::to_string(arity_) + " digits");
            ElementId out = 0;
            for (int i = 0; i < arity_; ++i) {
                int d = rendered[i].get<int>();
                if (d < 0 || d >= alphabet_)
                    throw std::invalid_argument("chain digit " + std::to_string(d) + " outside alphabet");
                out += static_cast<ElementId>(d * chain_pow_[i]);
            }
            return out;
        }
        case Family::partition: {
            if (!rendered.is_array()) throw std::invalid_argument("partition element must be a block list");
            std::vector<int> labels(ground_, -1);
            int label = 0;
            for (const auto& block : rendered) {
                if (!block.is_array() || block.empty())
                    throw std::invalid_argument("partition blocks must be nonempty arrays");
                for (const auto& v : block) {
                    int x = v.get<int>();
                    if (x < 1 || x > ground_)
                        throw std::invalid_argument("block member " + std::to_string(x) + " outside ground set");
                    if (labels[x - 1] >= 0)
                        throw std::invalid_argument("block member " + std::to_string(x) + " repeated");
                    labels[x - 1] = label;
                }
                ++label;
            }
            for (int i = 0; i < ground_; ++i)
                if (labels[i] < 0)
                    throw std::invalid_argument("blocks do not cover element " + std::to_string(i + 1));
            return partition_index(canonical_rgs(labels));
        }
        case Family::division: {
            std::int64_t v = rendered.get<std::int64_t>();
            if (v < 1) throw std::invalid_argument("divisor must be positive");
            ElementId out = 0;
            std::int64_t rest = v;
            for (std::size_t i = 0; i < primes_.size(); ++i) {
                int e = 0;
                while (rest % primes_[i] == 0) { rest /= primes_[i]; ++e; }
                if (e > prime_caps_[i])
                    throw std::invalid_argument(std::to_string(v) + " does not divide " + std::to_string(modulus_));
                out += static_cast<ElementId>(e * exp_radix_[i]);
            }
            if (rest != 1)
                throw std::invalid_argument(std::to_string(v) + " does not divide " + std::to_string(modulus_));
            return out;
        }
        case Family::product: {
            if (!rendered.is_array() || rendered.size() != 2)
                throw std::invalid_argument("product element must be a pair");
            return first_->parse_element(rendered[0]) * second_->size() +
                   second_->parse_element(rendered[1]);
        }
    }
    throw std::invalid_argument("unreachable");
}

// ---- family accessors -------------------------------------------------------

int LatticeModel::ground_size() const {
    if (family_ != Family::boolean && family_ != Family::partition)
        throw std::logic_error("ground_size: not a boolean/partition lattice");
    return ground_;
}

int LatticeModel::alphabet() const {
    if (family_ == Family::chain) return alphabet_;
    if (family_ == Family::boolean) return 2;
    throw std::logic_error("alphabet: not a chain lattice");
}

int LatticeModel::arity() const {
    if (family_ == Family::chain) return arity_;
    if (family_ == Family::boolean) return ground_;
    throw std::logic_error("arity: not a chain lattice");
}

std::int64_t LatticeModel::modulus() const {
    if (family_ != Family::division) throw std::logic_error("modulus: not a division lattice");
    return modulus_;
}

const LatticePtr& LatticeModel::first() const {
    if (family_ != Family::product) throw std::logic_error("first: not a product lattice");
    return first_;
}

const LatticePtr& LatticeModel::second() const {
    if (family_ != Family::product) throw std::logic_error("second: not a product lattice");
    return second_;
}

bool same_lattice(const LatticeModel& a, const LatticeModel& b) {
    if (&a == &b) return true;
    if (a.family() != b.family() || a.size() != b.size()) return false;
    return a.descriptor() == b.descriptor();
}

// ---- sequences ---------------------------------------------------------------

LatticePtr LatticeSequence::at(int i) const {
    switch (family) {
        case Family::boolean: return LatticeModel::boolean(i);
        case Family::chain: return LatticeModel::chain(alphabet, i);
        case Family::partition: return LatticeModel::partition(i);
        case Family::division: return LatticeModel::division(i);
        case Family::product: break;
    }
    throw std::invalid_argument("no indexed sequence for product lattices");
}

json LatticeSequence::descriptor() const {
    json out{{"family", family_name(family)}};
    if (family == Family::chain) out["t"] = alphabet;
    return out;
}

LatticeSequence LatticeSequence::from_descriptor(const json& j) {
    if (!j.is_object() || !j.contains("family"))
        throw std::invalid_argument("sequence descriptor needs \"family\"");
    auto fam = family_from_name(j["family"].get<std::string>());
    if (!fam || *fam == Family::product)
        throw std::invalid_argument("sequence family must be boolean/chain/partition/division");
    LatticeSequence s;
    s.family = *fam;
    if (*fam == Family::chain) {
        if (!j.contains("t")) throw std::invalid_argument("chain sequence needs \"t\"");
        s.alphabet = j["t"].get<int>();
        if (s.alphabet < 2) throw std::invalid_argument("chain sequence needs t >= 2");
    }
    return s;
}

LatticeSequence LatticeSequence::from_lattice(const LatticeModel& lattice) {
    LatticeSequence s;
    s.family = lattice.family();
    if (s.family == Family::product)
        throw std::invalid_argument("product lattices do not belong to an indexed sequence");
    if (s.family == Family::chain) s.alphabet = lattice.alphabet();
    return s;
}

} // namespace lathom
