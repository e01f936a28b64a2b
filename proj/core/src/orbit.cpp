#include "grsets/orbit.hpp"

#include <algorithm>
#include <set>

namespace grsets {

namespace {

struct CosetTable {
    std::vector<Elem> reps;    // reps[0] is the identity
    std::vector<int> coset_of; // element index -> point index
};

// Left cosets of H: the identity coset first, the rest in ascending
// order of their minimal element, represented by that element.
CosetTable left_cosets(const Group& g, const Subgroup& h) {
    CosetTable t;
    t.coset_of.assign(static_cast<size_t>(g.order()), -1);
    t.reps.push_back(g.identity());
    for (Elem x : h.elements())
        t.coset_of[static_cast<size_t>(x)] = 0;
    for (Elem x = 0; x < g.order(); ++x) {
        if (t.coset_of[static_cast<size_t>(x)] >= 0)
            continue;
        const int idx = static_cast<int>(t.reps.size());
        t.reps.push_back(x);
        for (Elem hh : h.elements())
            t.coset_of[static_cast<size_t>(g.mul(x, hh))] = idx;
    }
    return t;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    std::vector<Elem> common;
    std::set_intersection(a.elements().begin(), a.elements().end(),
                          b.elements().begin(), b.elements().end(),
                          std::back_inserter(common));
    return Subgroup(a.group(), std::move(common));
}

} // namespace

Orbit Orbit::make(const GroupPtr& group, const Subgroup& stabilizer,
                  const Character& character,
                  const std::vector<std::pair<Elem, Weight>>& points, int r) {
    if (!group)
        throw group_mismatch("orbit requires a group");
    if (!(*stabilizer.group() == *group))
        throw group_mismatch("stabilizer belongs to a different group");
    if (!(character.domain() == stabilizer))
        throw character_domain_mismatch("character must live on the stabilizer");
    if (r < 0)
        throw bad_transversal("negative index count");

    const Group& g = *group;
    CosetTable raw = left_cosets(g, stabilizer);
    const int m = static_cast<int>(raw.reps.size());

    std::vector<Weight> raw_weights(static_cast<size_t>(m));
    std::vector<bool> seen(static_cast<size_t>(m), false);
    for (const auto& [rep, w] : points) {
        if (rep < 0 || rep >= g.order())
            throw bad_transversal("point representative out of range");
        if (static_cast<int>(w.size()) != r)
            throw bad_transversal("weight arity differs from the index count");
        for (int v : w)
            if (v < 0)
                throw negative_weight("weights must be nonnegative");
        const int idx = raw.coset_of[static_cast<size_t>(rep)];
        if (seen[static_cast<size_t>(idx)])
            throw bad_transversal("two representatives of one coset");
        seen[static_cast<size_t>(idx)] = true;
        raw_weights[static_cast<size_t>(idx)] = w;
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        throw bad_transversal("points must cover every coset");

    // Move the stabilizer to its canonical conjugate K = c H c^-1 and
    // transport the data along G/H -> G/K, gH -> g c^-1 K.
    auto [canon_stab, c] = canonical_conjugate(stabilizer);
    Character moved_chi = conjugate_character(c, character);
    CosetTable ct = left_cosets(g, canon_stab);
    std::vector<Weight> moved(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        Elem back = g.mul(ct.reps[static_cast<size_t>(i)], c);
        moved[static_cast<size_t>(i)] = raw_weights[static_cast<size_t>(raw.coset_of[static_cast<size_t>(back)])];
    }

    // Minimize over the equivariant self-bijections of G/K: the right
    // action of N_G(K)/K on cosets.
    Subgroup norm = normalizer(canon_stab);
    std::vector<bool> tried(static_cast<size_t>(m), false);
    std::vector<Weight> best_weights;
    Character best_chi = moved_chi;
    std::vector<int> best_code;
    for (Elem nels : norm.elements()) {
        const int ncoset = ct.coset_of[static_cast<size_t>(nels)];
        if (tried[static_cast<size_t>(ncoset)])
            continue;
        tried[static_cast<size_t>(ncoset)] = true;

        std::vector<Weight> cand(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) {
            Elem shifted = g.mul(ct.reps[static_cast<size_t>(i)], nels);
            cand[static_cast<size_t>(i)] = moved[static_cast<size_t>(ct.coset_of[static_cast<size_t>(shifted)])];
        }
        Character cand_chi = conjugate_character(nels, moved_chi);

        std::vector<int> code;
        code.reserve(static_cast<size_t>(m * r) + cand_chi.values().size());
        for (const auto& w : cand)
            code.insert(code.end(), w.begin(), w.end());
        code.insert(code.end(), cand_chi.values().begin(), cand_chi.values().end());

        if (best_code.empty() || code < best_code) {
            best_code = std::move(code);
            best_weights = std::move(cand);
            best_chi = std::move(cand_chi);
        }
    }

    return Orbit(group, r, std::move(canon_stab), std::move(best_chi),
                 std::move(ct.reps), std::move(best_weights), std::move(ct.coset_of));
}

Orbit::Orbit(GroupPtr group, int r, Subgroup stab, Character chi,
             std::vector<Elem> transversal, std::vector<Weight> weights,
             std::vector<int> coset_of)
    : group_(std::move(group)), r_(r), stab_(std::move(stab)), chi_(std::move(chi)),
      transversal_(std::move(transversal)), weights_(std::move(weights)),
      coset_of_(std::move(coset_of)) {
    key_.push_back(static_cast<int>(transversal_.size()));
    for (const auto& w : weights_)
        key_.insert(key_.end(), w.begin(), w.end());
    key_.push_back(stab_.order());
    key_.insert(key_.end(), stab_.elements().begin(), stab_.elements().end());
    key_.insert(key_.end(), chi_.values().begin(), chi_.values().end());
}

int Orbit::act(Elem a, int point) const {
    return point_of(group_->mul(a, transversal_[static_cast<size_t>(point)]));
}

Character Orbit::character_at(int point) const {
    return conjugate_character(transversal_[static_cast<size_t>(point)], chi_);
}

std::vector<std::pair<Elem, Weight>> Orbit::points() const {
    std::vector<std::pair<Elem, Weight>> pts;
    pts.reserve(transversal_.size());
    for (size_t i = 0; i < transversal_.size(); ++i)
        pts.emplace_back(transversal_[i], weights_[i]);
    return pts;
}

bool Orbit::positively_weighted() const {
    for (const auto& w : weights_)
        if (std::all_of(w.begin(), w.end(), [](int v) { return v == 0; }))
            return false;
    return true;
}

bool Orbit::exceeds_bound(std::span<const int> bound) const {
    if (static_cast<int>(bound.size()) != r_)
        throw context_mismatch("bound arity differs from the orbit index count");
    for (const auto& w : weights_) {
        bool above = false;
        for (int j = 0; j < r_; ++j) {
            if (w[static_cast<size_t>(j)] > bound[static_cast<size_t>(j)]) {
                above = true;
                break;
            }
        }
        if (!above)
            return false;
    }
    return true;
}

bool Orbit::is_unit() const {
    if (!stab_.is_whole_group() || !chi_.is_trivial())
        return false;
    const auto& w = weights_.front();
    return std::all_of(w.begin(), w.end(), [](int v) { return v == 0; });
}

bool Orbit::operator==(const Orbit& other) const {
    return (group_ == other.group_ || *group_ == *other.group_) && r_ == other.r_ &&
           key_ == other.key_;
}

Orbit canonicalize(const Orbit& o) {
    return Orbit::make(o.group(), o.stabilizer(), o.base_character(), o.points(), o.r());
}

std::vector<Orbit> orbit_product(const Orbit& a, const Orbit& b) {
    if (!(*a.group() == *b.group()))
        throw group_mismatch("orbit product across different groups");
    if (a.r() != b.r())
        throw context_mismatch("orbit product across different index counts");
    const Group& g = *a.group();
    const int r = a.r();

    std::vector<Orbit> factors;
    for (Elem rep : double_cosets(a.stabilizer(), b.stabilizer())) {
        Subgroup conj = conjugate_subgroup(rep, b.stabilizer());
        Subgroup stab = intersect(a.stabilizer(), conj);
        Character chi = multiply_characters(
            restrict_character(a.base_character(), stab),
            restrict_character(conjugate_character(rep, b.base_character()), stab));

        std::vector<std::pair<Elem, Weight>> pts;
        // The orbit of the pair (eH_a, rep H_b); the point bS pairs the
        // cosets b H_a and b rep H_b, so weights add accordingly.
        CosetTable ct = left_cosets(g, stab);
        pts.reserve(ct.reps.size());
        for (Elem p : ct.reps) {
            const Weight& wa = a.weight(a.point_of(p));
            const Weight& wb = b.weight(b.point_of(g.mul(p, rep)));
            Weight w(static_cast<size_t>(r));
            for (int j = 0; j < r; ++j)
                w[static_cast<size_t>(j)] = wa[static_cast<size_t>(j)] + wb[static_cast<size_t>(j)];
            pts.emplace_back(p, std::move(w));
        }
        factors.push_back(Orbit::make(a.group(), stab, chi, pts, r));
    }
    return factors;
}

} // namespace grsets
