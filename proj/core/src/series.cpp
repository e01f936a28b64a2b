#include "grsets/series.hpp"

#include <algorithm>
#include <sstream>

namespace grsets {

namespace {

bool within(const std::vector<int>& index, const Bound& bound) {
    for (size_t i = 0; i < index.size(); ++i)
        if (index[i] > bound[i])
            return false;
    return true;
}

void check_index(const std::vector<int>& index, int r) {
    if (static_cast<int>(index.size()) != r)
        throw context_mismatch("multi-index arity differs from the series");
    for (int v : index)
        if (v < 0)
            throw context_mismatch("multi-index entries must be nonnegative");
}

std::string monomial_string(const std::vector<int>& index) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < index.size(); ++i) {
        if (index[i] == 0)
            continue;
        if (!first)
            os << "*";
        first = false;
        os << "t" << (i + 1);
        if (index[i] > 1)
            os << "^" << index[i];
    }
    return os.str();
}

} // namespace

MultiIndexSeries::MultiIndexSeries(int r, Bound bound) : r_(r), bound_(std::move(bound)) {
    if (r_ < 0 || static_cast<int>(bound_.size()) != r_)
        throw context_mismatch("bound arity differs from the index count");
}

void MultiIndexSeries::add_term(const std::vector<int>& index, const Int& c) {
    check_index(index, r_);
    if (c == 0 || !within(index, bound_))
        return;
    auto it = coeffs_.find(index);
    if (it == coeffs_.end()) {
        coeffs_.emplace(index, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        coeffs_.erase(it);
}

Int MultiIndexSeries::coefficient(const std::vector<int>& index) const {
    auto it = coeffs_.find(index);
    return it == coeffs_.end() ? Int(0) : it->second;
}

MultiIndexSeries MultiIndexSeries::add(const MultiIndexSeries& other) const {
    if (r_ != other.r_ || bound_ != other.bound_)
        throw context_mismatch("series from different contexts");
    MultiIndexSeries out(*this);
    for (const auto& [index, c] : other.coeffs_)
        out.add_term(index, c);
    return out;
}

MultiIndexSeries MultiIndexSeries::mul(const MultiIndexSeries& other) const {
    if (r_ != other.r_ || bound_ != other.bound_)
        throw context_mismatch("series from different contexts");
    MultiIndexSeries out(r_, bound_);
    for (const auto& [ia, ca] : coeffs_) {
        for (const auto& [ib, cb] : other.coeffs_) {
            std::vector<int> index(static_cast<size_t>(r_));
            for (int j = 0; j < r_; ++j)
                index[static_cast<size_t>(j)] =
                    ia[static_cast<size_t>(j)] + ib[static_cast<size_t>(j)];
            out.add_term(index, ca * cb);
        }
    }
    return out;
}

bool MultiIndexSeries::equals(const MultiIndexSeries& other) const {
    if (r_ != other.r_ || bound_ != other.bound_)
        throw context_mismatch("series from different contexts");
    return coeffs_ == other.coeffs_;
}

std::string MultiIndexSeries::to_string() const {
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [index, c] : coeffs_) {
        const bool negative = c < 0;
        Int mag = negative ? Int(-c) : c;
        if (first) {
            if (negative)
                os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        std::string mono = monomial_string(index);
        if (mono.empty())
            os << mag.str();
        else if (mag == 1)
            os << mono;
        else
            os << mag.str() << "*" << mono;
    }
    return os.str();
}

EquivariantSeries::EquivariantSeries(GroupPtr group, int r, Bound bound)
    : group_(std::move(group)), r_(r), bound_(std::move(bound)) {
    if (!group_)
        throw context_mismatch("equivariant series requires a group");
    if (r_ < 0 || static_cast<int>(bound_.size()) != r_)
        throw context_mismatch("bound arity differs from the index count");
}

void EquivariantSeries::add_term(const std::vector<int>& index, const Character& chi,
                                 const Int& c) {
    check_index(index, r_);
    if (!chi.domain().is_whole_group() || !(*chi.domain().group() == *group_))
        throw domain_mismatch("coefficients are characters of the whole group");
    if (c == 0 || !within(index, bound_))
        return;
    auto& cell = coeffs_[index];
    auto it = cell.find(chi);
    if (it == cell.end()) {
        cell.emplace(chi, c);
    } else {
        it->second += c;
        if (it->second == 0)
            cell.erase(it);
    }
    if (cell.empty())
        coeffs_.erase(index);
}

EquivariantSeries EquivariantSeries::add(const EquivariantSeries& other) const {
    if (r_ != other.r_ || bound_ != other.bound_ || !(*group_ == *other.group_))
        throw context_mismatch("series from different contexts");
    EquivariantSeries out(*this);
    for (const auto& [index, cell] : other.coeffs_)
        for (const auto& [chi, c] : cell)
            out.add_term(index, chi, c);
    return out;
}

EquivariantSeries EquivariantSeries::mul(const EquivariantSeries& other) const {
    if (r_ != other.r_ || bound_ != other.bound_ || !(*group_ == *other.group_))
        throw context_mismatch("series from different contexts");
    EquivariantSeries out(group_, r_, bound_);
    for (const auto& [ia, cell_a] : coeffs_) {
        for (const auto& [ib, cell_b] : other.coeffs_) {
            std::vector<int> index(static_cast<size_t>(r_));
            for (int j = 0; j < r_; ++j)
                index[static_cast<size_t>(j)] =
                    ia[static_cast<size_t>(j)] + ib[static_cast<size_t>(j)];
            for (const auto& [ca, va] : cell_a)
                for (const auto& [cb, vb] : cell_b)
                    out.add_term(index, multiply_characters(ca, cb), va * vb);
        }
    }
    return out;
}

bool EquivariantSeries::equals(const EquivariantSeries& other) const {
    if (r_ != other.r_ || bound_ != other.bound_ || !(*group_ == *other.group_))
        throw context_mismatch("series from different contexts");
    return coeffs_ == other.coeffs_;
}

std::string EquivariantSeries::to_string() const {
    if (coeffs_.empty())
        return "0";
    const int n_mod = group_->exponent();
    std::ostringstream os;
    bool first_term = true;
    for (const auto& [index, cell] : coeffs_) {
        if (!first_term)
            os << " + ";
        first_term = false;
        os << "(";
        bool first_chi = true;
        for (const auto& [chi, c] : cell) {
            const bool negative = c < 0;
            Int mag = negative ? Int(-c) : c;
            if (first_chi) {
                if (negative)
                    os << "-";
                first_chi = false;
            } else {
                os << (negative ? " - " : " + ");
            }
            if (mag != 1)
                os << mag.str() << "*";
            os << "chi{";
            const auto& elems = chi.domain().elements();
            for (size_t i = 0; i < elems.size(); ++i) {
                if (i)
                    os << ",";
                os << elems[i] << ":" << chi.values()[i];
            }
            os << "}/" << n_mod;
        }
        os << ")";
        std::string mono = monomial_string(index);
        if (!mono.empty())
            os << "*" << mono;
    }
    return os.str();
}

MultiIndexSeries project_pi(const RingElement& a) {
    const Context& ctx = a.context();
    MultiIndexSeries out(ctx.r, ctx.bound);
    for (const auto& [orbit, coeff] : a.terms())
        for (const Weight& w : orbit.weights())
            out.add_term(w, coeff);
    return out;
}

EquivariantSeries project_pi_prime(const RingElement& a) {
    const Context& ctx = a.context();
    EquivariantSeries out(ctx.group, ctx.r, ctx.bound);
    for (const auto& [orbit, coeff] : a.terms()) {
        if (!orbit.stabilizer().is_whole_group())
            continue;
        out.add_term(orbit.weight(0), orbit.base_character(), coeff);
    }
    return out;
}

} // namespace grsets
