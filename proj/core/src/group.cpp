#include "grsets/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace grsets {

namespace {

int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

} // namespace

Group Group::from_cayley(std::vector<std::vector<Elem>> table) {
    const int n = static_cast<int>(table.size());
    if (n == 0)
        throw not_a_group("empty Cayley table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw not_a_group("Cayley table is not square");
        for (Elem x : row)
            if (x < 0 || x >= n)
                throw not_a_group("Cayley table entry out of range");
    }

    // Latin square: every row and column is a permutation.
    for (int i = 0; i < n; ++i) {
        std::vector<bool> row_seen(n, false), col_seen(n, false);
        for (int j = 0; j < n; ++j) {
            if (row_seen[table[i][j]])
                throw not_a_group("row is not a permutation");
            row_seen[table[i][j]] = true;
            if (col_seen[table[j][i]])
                throw not_a_group("column is not a permutation");
            col_seen[table[j][i]] = true;
        }
    }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw not_a_group("multiplication is not associative");

    Elem identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            ok = table[e][x] == x && table[x][e] == x;
        if (ok) {
            identity = e;
            break;
        }
    }
    if (identity < 0)
        throw not_a_group("no identity element");

    std::vector<Elem> inverse(n, -1);
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h) {
            if (table[g][h] == identity && table[h][g] == identity) {
                inverse[g] = h;
                break;
            }
        }
        if (inverse[g] < 0)
            throw not_a_group("element without a two-sided inverse");
    }

    Group g;
    g.n_ = n;
    g.cayley_ = std::move(table);
    g.identity_ = identity;
    g.inverse_ = std::move(inverse);
    g.exponent_ = 1;
    for (int x = 0; x < n; ++x)
        g.exponent_ = lcm_int(g.exponent_, g.element_order(x));
    return g;
}

Group Group::named(Kind kind, int m) {
    if (m < 1)
        throw unsupported_kind("named group size must be >= 1");
    switch (kind) {
    case Kind::cyclic: {
        std::vector<std::vector<Elem>> t(m, std::vector<Elem>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                t[i][j] = (i + j) % m;
        return from_cayley(std::move(t));
    }
    case Kind::dihedral: {
        // Element k + m*f is r^k s^f with s r s = r^-1.
        const int n = 2 * m;
        auto enc = [m](int k, int f) { return k + m * f; };
        std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
        for (int k1 = 0; k1 < m; ++k1)
            for (int f1 = 0; f1 < 2; ++f1)
                for (int k2 = 0; k2 < m; ++k2)
                    for (int f2 = 0; f2 < 2; ++f2) {
                        int k = (k1 + (f1 ? m - k2 : k2)) % m;
                        t[enc(k1, f1)][enc(k2, f2)] = enc(k, f1 ^ f2);
                    }
        return from_cayley(std::move(t));
    }
    }
    throw unsupported_kind("unknown named group kind");
}

int Group::element_order(Elem a) const {
    int order = 1;
    Elem x = a;
    while (x != identity_) {
        x = mul(x, a);
        ++order;
    }
    return order;
}

bool Group::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (cayley_[a][b] != cayley_[b][a])
                return false;
    return true;
}

GroupPtr make_group(std::vector<std::vector<Elem>> table) {
    return std::make_shared<const Group>(Group::from_cayley(std::move(table)));
}

GroupPtr make_named_group(Group::Kind kind, int m) {
    return std::make_shared<const Group>(Group::named(kind, m));
}

Subgroup::Subgroup(GroupPtr group, std::vector<Elem> elements)
    : group_(std::move(group)), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    if (elements_.empty())
        throw not_a_group("subgroup must contain the identity");
    for (Elem x : elements_)
        if (x < 0 || x >= group_->order())
            throw not_a_group("subgroup element out of range");
    if (!std::binary_search(elements_.begin(), elements_.end(), group_->identity()))
        throw not_a_group("subgroup must contain the identity");
    for (Elem a : elements_)
        for (Elem b : elements_)
            if (!std::binary_search(elements_.begin(), elements_.end(), group_->mul(a, b)))
                throw not_a_group("subgroup is not closed under multiplication");
}

Subgroup Subgroup::closure(GroupPtr group, std::span<const Elem> gens) {
    for (Elem g : gens)
        if (g < 0 || g >= group->order())
            throw not_a_group("generator out of range");
    std::set<Elem> elems{group->identity()};
    std::vector<Elem> todo(gens.begin(), gens.end());
    for (Elem g : gens)
        elems.insert(g);
    while (!todo.empty()) {
        Elem x = todo.back();
        todo.pop_back();
        for (Elem y : std::vector<Elem>(elems.begin(), elems.end())) {
            for (Elem p : {group->mul(x, y), group->mul(y, x), group->inv(x)}) {
                if (elems.insert(p).second)
                    todo.push_back(p);
            }
        }
    }
    return Subgroup(std::move(group), std::vector<Elem>(elems.begin(), elems.end()));
}

Subgroup Subgroup::trivial(GroupPtr group) {
    Elem e = group->identity();
    return Subgroup(std::move(group), {e});
}

Subgroup Subgroup::whole(GroupPtr group) {
    std::vector<Elem> all(group->order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup(std::move(group), std::move(all));
}

bool Subgroup::contains(Elem g) const {
    return std::binary_search(elements_.begin(), elements_.end(), g);
}

bool Subgroup::operator==(const Subgroup& other) const {
    return (group_ == other.group_ || *group_ == *other.group_) && elements_ == other.elements_;
}

Subgroup conjugate_subgroup(Elem g, const Subgroup& h) {
    const Group& grp = *h.group();
    std::vector<Elem> conj;
    conj.reserve(h.elements().size());
    for (Elem x : h.elements())
        conj.push_back(grp.conjugate(g, x));
    return Subgroup(h.group(), std::move(conj));
}

Subgroup normalizer(const Subgroup& h) {
    const Group& grp = *h.group();
    std::vector<Elem> result;
    for (Elem g = 0; g < grp.order(); ++g) {
        bool fixes = true;
        for (Elem x : h.elements()) {
            if (!h.contains(grp.conjugate(g, x))) {
                fixes = false;
                break;
            }
        }
        if (fixes)
            result.push_back(g);
    }
    return Subgroup(h.group(), std::move(result));
}

std::vector<Elem> double_cosets(const Subgroup& h, const Subgroup& k) {
    if (!(*h.group() == *k.group()))
        throw group_mismatch("double cosets require subgroups of one group");
    const Group& grp = *h.group();
    std::vector<bool> covered(grp.order(), false);
    std::vector<Elem> reps;
    for (Elem g = 0; g < grp.order(); ++g) {
        if (covered[g])
            continue;
        reps.push_back(g);
        for (Elem a : h.elements())
            for (Elem b : k.elements())
                covered[grp.mul(grp.mul(a, g), b)] = true;
    }
    return reps;
}

std::pair<Subgroup, Elem> canonical_conjugate(const Subgroup& h) {
    const Group& grp = *h.group();
    std::vector<Elem> best = h.elements();
    Elem best_g = grp.identity();
    for (Elem g = 0; g < grp.order(); ++g) {
        std::vector<Elem> conj;
        conj.reserve(h.elements().size());
        for (Elem x : h.elements())
            conj.push_back(grp.conjugate(g, x));
        std::sort(conj.begin(), conj.end());
        if (conj < best) {
            best = conj;
            best_g = g;
        }
    }
    return {Subgroup(h.group(), best), best_g};
}

Character::Character(Subgroup domain, std::vector<int> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
    const int N = domain_.group()->exponent();
    const auto& elems = domain_.elements();
    if (values_.size() != elems.size())
        throw invalid_character("one value per domain element required");
    for (int& v : values_)
        v = ((v % N) + N) % N;
    auto value_of = [&](Elem g) {
        auto it = std::lower_bound(elems.begin(), elems.end(), g);
        return values_[static_cast<size_t>(it - elems.begin())];
    };
    if (value_of(domain_.group()->identity()) != 0)
        throw invalid_character("identity must map to 0");
    for (Elem a : elems)
        for (Elem b : elems)
            if (value_of(domain_.group()->mul(a, b)) != (value_of(a) + value_of(b)) % N)
                throw invalid_character("value map is not a homomorphism");
}

Character Character::trivial(Subgroup domain) {
    std::vector<int> zeros(domain.elements().size(), 0);
    return Character(std::move(domain), std::move(zeros));
}

int Character::modulus() const { return domain_.group()->exponent(); }

int Character::value(Elem g) const {
    const auto& elems = domain_.elements();
    auto it = std::lower_bound(elems.begin(), elems.end(), g);
    if (it == elems.end() || *it != g)
        throw domain_mismatch("element outside character domain");
    return values_[static_cast<size_t>(it - elems.begin())];
}

bool Character::is_trivial() const {
    return std::all_of(values_.begin(), values_.end(), [](int v) { return v == 0; });
}

bool Character::operator==(const Character& other) const {
    return domain_ == other.domain_ && values_ == other.values_;
}

std::strong_ordering Character::operator<=>(const Character& other) const {
    if (auto c = domain_.elements() <=> other.domain_.elements(); c != 0)
        return c;
    return values_ <=> other.values_;
}

std::vector<Character> one_dim_characters(const Subgroup& h) {
    const Group& grp = *h.group();
    const int N = grp.exponent();

    // Greedy generating sequence of H.
    std::vector<Elem> gens;
    {
        Subgroup span = Subgroup::trivial(h.group());
        for (Elem x : h.elements()) {
            if (!span.contains(x)) {
                gens.push_back(x);
                std::vector<Elem> g2(span.elements());
                g2.push_back(x);
                span = Subgroup::closure(h.group(), g2);
            }
        }
    }

    // Backtracking over generator values with closure propagation.
    // A value v for g must satisfy order(g) * v = 0 mod N, so v runs
    // over the multiples of N / order(g).
    std::vector<Character> result;
    std::map<Elem, int> assigned{{grp.identity(), 0}};

    auto propagate = [&grp, N](std::map<Elem, int> vals) -> std::pair<bool, std::map<Elem, int>> {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& [a, va] : vals) {
                for (const auto& [b, vb] : vals) {
                    Elem p = grp.mul(a, b);
                    int vp = (va + vb) % N;
                    auto it = vals.find(p);
                    if (it == vals.end()) {
                        vals.emplace(p, vp);
                        changed = true;
                    } else if (it->second != vp) {
                        return {false, {}};
                    }
                }
            }
        }
        return {true, std::move(vals)};
    };

    auto emit = [&](const std::map<Elem, int>& vals) {
        std::vector<int> values;
        values.reserve(h.elements().size());
        for (Elem x : h.elements())
            values.push_back(vals.at(x));
        result.emplace_back(h, std::move(values));
    };

    std::function<void(size_t, const std::map<Elem, int>&)> go =
        [&](size_t i, const std::map<Elem, int>& vals) {
            if (i == gens.size()) {
                emit(vals);
                return;
            }
            Elem g = gens[i];
            const int step = N / grp.element_order(g);
            for (int k = 0; k < grp.element_order(g); ++k) {
                auto vals2 = vals;
                vals2[g] = k * step;
                auto [ok, closed] = propagate(std::move(vals2));
                if (ok)
                    go(i + 1, closed);
            }
        };
    go(0, assigned);
    return result;
}

Character conjugate_character(Elem a, const Character& chi) {
    const Group& grp = *chi.domain().group();
    Subgroup new_domain = conjugate_subgroup(a, chi.domain());
    std::vector<int> values;
    values.reserve(new_domain.elements().size());
    for (Elem g : new_domain.elements())
        values.push_back(chi.value(grp.conjugate(grp.inv(a), g)));
    return Character(std::move(new_domain), std::move(values));
}

Character restrict_character(const Character& chi, const Subgroup& s) {
    if (!(*s.group() == *chi.domain().group()))
        throw domain_mismatch("restriction across different groups");
    std::vector<int> values;
    values.reserve(s.elements().size());
    for (Elem g : s.elements()) {
        if (!chi.domain().contains(g))
            throw domain_mismatch("restriction target is not a subgroup of the domain");
        values.push_back(chi.value(g));
    }
    return Character(s, std::move(values));
}

Character multiply_characters(const Character& a, const Character& b) {
    if (!(a.domain() == b.domain()))
        throw domain_mismatch("character product requires equal domains");
    const int N = a.modulus();
    std::vector<int> values;
    values.reserve(a.values().size());
    for (size_t i = 0; i < a.values().size(); ++i)
        values.push_back((a.values()[i] + b.values()[i]) % N);
    return Character(a.domain(), std::move(values));
}

} // namespace grsets
