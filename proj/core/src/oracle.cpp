#include "grsets/oracle.hpp"

#include <algorithm>

namespace grsets::oracle {

namespace {

bool is_signed_permutation(const std::array<int, 4>& m) {
    for (int v : m)
        if (v < -1 || v > 1)
            return false;
    const bool diag = m[0] != 0 && m[3] != 0 && m[1] == 0 && m[2] == 0;
    const bool anti = m[0] == 0 && m[3] == 0 && m[1] != 0 && m[2] != 0;
    return diag || anti;
}

std::array<int, 4> mat_mul(const std::array<int, 4>& a, const std::array<int, 4>& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

// Image of x^a y^b under the variable substitution m: a single signed
// monomial (sign, a', b').
struct MonomialImage {
    int sign;
    int a;
    int b;
};

MonomialImage apply(const std::array<int, 4>& m, int a, int b) {
    auto powsign = [](int s, int e) { return (s == -1 && e % 2 != 0) ? -1 : 1; };
    if (m[0] != 0) // diagonal
        return {powsign(m[0], a) * powsign(m[3], b), a, b};
    return {powsign(m[1], a) * powsign(m[2], b), b, a};
}

// Quarter turns: value q stands for i^q.
int quarter_of_sign(int s) { return s == 1 ? 0 : 2; }

int quarter_to_residue(int q, int n_mod) {
    q = ((q % 4) + 4) % 4;
    if ((q * n_mod) % 4 != 0)
        throw non_abelian_action("eigenvalue order does not divide the group exponent");
    return (q * n_mod / 4) % n_mod;
}

} // namespace

MonomialAction::MonomialAction(GroupPtr group, std::vector<std::array<int, 4>> matrices)
    : group_(std::move(group)), matrices_(std::move(matrices)) {
    const Group& g = *group_;
    if (static_cast<int>(matrices_.size()) != g.order())
        throw non_abelian_action("one matrix per group element required");
    if (!g.is_abelian())
        throw non_abelian_action("the jet oracle handles abelian actions only");
    for (const auto& m : matrices_)
        if (!is_signed_permutation(m))
            throw non_abelian_action("matrices must be signed permutations or diagonal +-1");
    if (matrices_[static_cast<size_t>(g.identity())] != std::array<int, 4>{1, 0, 0, 1})
        throw non_abelian_action("identity must act trivially");
    for (Elem a = 0; a < g.order(); ++a)
        for (Elem b = 0; b < g.order(); ++b)
            if (mat_mul(matrices_[static_cast<size_t>(a)], matrices_[static_cast<size_t>(b)]) !=
                matrices_[static_cast<size_t>(g.mul(a, b))])
                throw non_abelian_action("matrix assignment is not a homomorphism");
}

MonomialAction MonomialAction::antipodal() {
    GroupPtr z2 = make_named_group(Group::Kind::cyclic, 2);
    return MonomialAction(z2, {{{1, 0, 0, 1}}, {{-1, 0, 0, -1}}});
}

MonomialAction MonomialAction::swap_xy() {
    GroupPtr z2 = make_named_group(Group::Kind::cyclic, 2);
    return MonomialAction(z2, {{{1, 0, 0, 1}}, {{0, 1, 1, 0}}});
}

EquivariantSeries equivariant_jet_series(const MonomialAction& action, int k_max) {
    const GroupPtr& group = action.group();
    const Group& g = *group;
    const int n = g.order();
    const int n_mod = g.exponent();
    Subgroup whole = Subgroup::whole(group);
    EquivariantSeries out(group, 1, {k_max});

    // Functions transform through the inverse substitution.
    std::vector<std::array<int, 4>> sub(static_cast<size_t>(n));
    for (Elem e = 0; e < n; ++e)
        sub[static_cast<size_t>(e)] = action.matrix(g.inv(e));

    auto emit = [&](int degree, const std::vector<int>& values) {
        out.add_term({degree}, Character(whole, values), 1);
    };

    for (int k = 0; k <= k_max; ++k) {
        for (int a = 0; 2 * a <= k; ++a) {
            const int b = k - a;
            if (a == b) {
                // One-monomial cell: every element acts by a sign.
                std::vector<int> values(static_cast<size_t>(n));
                for (Elem e = 0; e < n; ++e) {
                    MonomialImage im = apply(sub[static_cast<size_t>(e)], a, b);
                    values[static_cast<size_t>(e)] =
                        quarter_to_residue(quarter_of_sign(im.sign), n_mod);
                }
                emit(k, values);
                continue;
            }

            // Cell spanned by x^a y^b and x^b y^a.
            Elem swapper = -1;
            int swap_s = 1, swap_sp = 1;
            for (Elem e = 0; e < n; ++e) {
                MonomialImage im = apply(sub[static_cast<size_t>(e)], a, b);
                if (im.a == b) {
                    swapper = e;
                    swap_s = im.sign; // x^a y^b -> s * x^b y^a
                    MonomialImage im2 = apply(sub[static_cast<size_t>(e)], b, a);
                    swap_sp = im2.sign;
                    break;
                }
            }

            if (swapper < 0) {
                // Both monomials span invariant lines.
                std::vector<int> v1(static_cast<size_t>(n)), v2(static_cast<size_t>(n));
                for (Elem e = 0; e < n; ++e) {
                    v1[static_cast<size_t>(e)] = quarter_to_residue(
                        quarter_of_sign(apply(sub[static_cast<size_t>(e)], a, b).sign), n_mod);
                    v2[static_cast<size_t>(e)] = quarter_to_residue(
                        quarter_of_sign(apply(sub[static_cast<size_t>(e)], b, a).sign), n_mod);
                }
                emit(k, v1);
                emit(k, v2);
                continue;
            }

            // Eigenvalues of the swapping element are the square roots
            // of s*s'; the two eigenlines diagonalize the whole image.
            const int mu_plus_q = (swap_s * swap_sp == 1) ? 0 : 1;
            for (int root = 0; root < 2; ++root) {
                const int mu_q = (mu_plus_q + 2 * root) % 4;
                std::vector<int> values(static_cast<size_t>(n));
                for (Elem e = 0; e < n; ++e) {
                    MonomialImage im = apply(sub[static_cast<size_t>(e)], a, b);
                    int q;
                    if (im.a == a) {
                        MonomialImage im2 = apply(sub[static_cast<size_t>(e)], b, a);
                        if (im.sign != im2.sign)
                            throw non_abelian_action("cell action does not diagonalize");
                        q = quarter_of_sign(im.sign);
                    } else {
                        // e maps m1 -> u*m2, m2 -> u'*m1; on the
                        // eigenvector of mu the eigenvalue is u'*s/mu.
                        MonomialImage im2 = apply(sub[static_cast<size_t>(e)], b, a);
                        const int u_prime = im2.sign;
                        q = (quarter_of_sign(u_prime * swap_s) + (4 - mu_q)) % 4;
                    }
                    values[static_cast<size_t>(e)] = quarter_to_residue(q, n_mod);
                }
                emit(k, values);
            }
        }
    }
    return out;
}

MultiIndexSeries jet_dimension_series(int k_max) {
    MultiIndexSeries out(1, {k_max});
    for (int k = 0; k <= k_max; ++k) {
        int count = 0;
        for (int a = 0; a <= k; ++a)
            for (int b = 0; b <= k; ++b)
                if (a + b == k)
                    ++count;
        out.add_term({k}, count);
    }
    return out;
}

MultiIndexSeries semigroup_series(const std::vector<int>& gens, int k_max) {
    if (gens.empty())
        throw error("semigroup requires at least one generator");
    for (int g : gens)
        if (g < 1)
            throw error("semigroup generators must be positive");
    std::vector<bool> reachable(static_cast<size_t>(k_max) + 1, false);
    reachable[0] = true;
    for (int g : gens)
        for (int s = g; s <= k_max; ++s)
            if (reachable[static_cast<size_t>(s - g)])
                reachable[static_cast<size_t>(s)] = true;
    MultiIndexSeries out(1, {k_max});
    for (int s = 0; s <= k_max; ++s)
        if (reachable[static_cast<size_t>(s)])
            out.add_term({s}, 1);
    return out;
}

} // namespace grsets::oracle
