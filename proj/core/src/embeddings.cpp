#include "lathom/embeddings.hpp"

#include <cassert>

namespace lathom {

using nlohmann::json;

HomothetyMap partition_combine(int n1, int n2) {
    LatticePtr a = LatticeModel::partition(n1);
    LatticePtr b = LatticeModel::partition(n2);
    HomothetyMap f;
    f.domain = LatticeModel::product(a, b);
    f.codomain = LatticeModel::partition(n1 + n2);
    f.scale = 1;
    f.images.resize(f.domain->size());
    for (ElementId x = 0; x < a->size(); ++x) {
        json blocks = a->render(x);
        for (ElementId y = 0; y < b->size(); ++y) {
            json merged = blocks;
            for (const auto& block : b->render(y)) {
                json shifted = json::array();
                for (const auto& v : block) shifted.push_back(v.get<int>() + n1);
                merged.push_back(shifted);
            }
            f.images[x * b->size() + y] = f.codomain->parse_element(merged);
        }
    }
    return f;
}

HomothetyMap boolean_combine(int n1, int n2) {
    LatticePtr a = LatticeModel::boolean(n1);
    LatticePtr b = LatticeModel::boolean(n2);
    HomothetyMap f;
    f.domain = LatticeModel::product(a, b);
    f.codomain = LatticeModel::boolean(n1 + n2);
    f.scale = 1;
    f.images.resize(f.domain->size());
    for (ElementId x = 0; x < a->size(); ++x)
        for (ElementId y = 0; y < b->size(); ++y)
            f.images[x * b->size() + y] = x | (y << n1);
    return f;
}

HomothetyMap chain_combine(int alphabet, int n1, int n2) {
    LatticePtr a = LatticeModel::chain(alphabet, n1);
    LatticePtr b = LatticeModel::chain(alphabet, n2);
    HomothetyMap f;
    f.domain = LatticeModel::product(a, b);
    f.codomain = LatticeModel::chain(alphabet, n1 + n2);
    f.scale = 1;
    f.images.resize(f.domain->size());
    ElementId shift = a->size();  // t^n1
    for (ElementId x = 0; x < a->size(); ++x)
        for (ElementId y = 0; y < b->size(); ++y)
            f.images[x * b->size() + y] = x + y * shift;
    return f;
}

namespace {

std::vector<std::pair<std::int64_t, int>> factor(std::int64_t x) {
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= x; ++p) {
        if (x % p) continue;
        int k = 0;
        while (x % p == 0) { x /= p; ++k; }
        out.emplace_back(p, k);
    }
    if (x > 1) out.emplace_back(x, 1);
    return out;
}

std::int64_t next_prime(std::int64_t p) {
    for (std::int64_t q = p + 1;; ++q) {
        bool prime = q >= 2;
        for (std::int64_t d = 2; d * d <= q; ++d)
            if (q % d == 0) { prime = false; break; }
        if (prime) return q;
    }
}

} // namespace

DivisionCombine division_combine(std::int64_t m, std::int64_t n) {
    if (m < 1 || n < 1) throw std::invalid_argument("division combine needs m, n >= 1");
    auto fm = factor(m);
    auto fn = factor(n);

    // Fresh primes: smallest first, the m-side block before the n-side block,
    // so codomain prime order matches the concatenated exponent vectors.
    std::vector<std::int64_t> fresh;
    std::int64_t p = 1;
    for (std::size_t i = 0; i < fm.size() + fn.size(); ++i) {
        p = next_prime(p);
        fresh.push_back(p);
    }

    std::int64_t big_n = 1;
    for (std::size_t i = 0; i < fm.size(); ++i)
        for (int e = 0; e < fm[i].second; ++e) big_n *= fresh[i];
    for (std::size_t j = 0; j < fn.size(); ++j)
        for (int e = 0; e < fn[j].second; ++e) big_n *= fresh[fm.size() + j];

    LatticePtr a = LatticeModel::division(m);
    LatticePtr b = LatticeModel::division(n);
    HomothetyMap f;
    f.domain = LatticeModel::product(a, b);
    f.codomain = LatticeModel::division(big_n);
    assert(f.codomain->size() == a->size() * b->size());
    f.scale = 1;
    f.images.resize(f.domain->size());
    for (ElementId x = 0; x < a->size(); ++x) {
        std::int64_t va = a->render(x).get<std::int64_t>();
        std::int64_t part = 1;
        for (std::size_t i = 0; i < fm.size(); ++i)
            while (va % fm[i].first == 0) { va /= fm[i].first; part *= fresh[i]; }
        for (ElementId y = 0; y < b->size(); ++y) {
            std::int64_t vb = b->render(y).get<std::int64_t>();
            std::int64_t value = part;
            for (std::size_t j = 0; j < fn.size(); ++j)
                while (vb % fn[j].first == 0) { vb /= fn[j].first; value *= fresh[fm.size() + j]; }
            f.images[x * b->size() + y] = f.codomain->parse_element(json(value));
        }
    }
    return {big_n, f};
}

} // namespace lathom
