#include "necklace/graded.hpp"

#include "necklace/linalg.hpp"

#include <set>
#include <sstream>

namespace necklace {

GradedSpace::GradedSpace(std::vector<std::pair<std::string, int>> generators, int shift)
    : shift_(shift)
{
    std::set<std::string> seen;
    for (auto& [name, deg] : generators) {
        if (!seen.insert(name).second)
            throw InputError("duplicate generator name '" + name + "'");
        names_.push_back(name);
        degrees_.push_back(deg);
    }
}

std::size_t GradedSpace::index_of(const std::string& name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return i;
    throw InputError("unknown generator '" + name + "'");
}

GradedSpace GradedSpace::shifted(int k) const
{
    GradedSpace s = *this;
    s.shift_ += k;
    return s;
}

bool GradedSpace::same_as(const GradedSpace& other) const
{
    return names_ == other.names_ && degrees_ == other.degrees_ && shift_ == other.shift_;
}

InnerProduct::InnerProduct(SpacePtr base, int form_degree,
                           std::vector<std::tuple<std::size_t, std::size_t, Rational>> entries)
    : base_(std::move(base)), degree_(form_degree)
{
    for (auto& [i, j, v] : entries) {
        if (i >= base_->dim() || j >= base_->dim())
            throw InputError("form entry index out of range");
        if (is_zero(v))
            continue;
        if (base_->degree(i) + base_->degree(j) != degree_) {
            std::ostringstream msg;
            msg << "form entry (" << base_->name(i) << "," << base_->name(j)
                << ") violates degree " << degree_;
            throw InputError(msg.str());
        }
        int sign = (base_->degree(i) * base_->degree(j)) % 2 ? -1 : 1;
        Rational mirrored = sign * v;
        auto put = [&](std::size_t a, std::size_t b, const Rational& val) {
            auto it = entries_.find({a, b});
            if (it != entries_.end()) {
                if (it->second != val)
                    throw InputError("graded symmetry conflict in form entries");
            } else {
                entries_[{a, b}] = val;
            }
        };
        put(i, j, v);
        put(j, i, mirrored);
        if (i == j && sign < 0 && !is_zero(v))
            throw InputError("diagonal form entry on odd-degree generator must vanish");
    }
}

Rational InnerProduct::value(std::size_t i, std::size_t j) const
{
    auto it = entries_.find({i, j});
    return it == entries_.end() ? Rational(0) : it->second;
}

bool InnerProduct::is_nondegenerate() const
{
    std::size_t d = base_->dim();
    SparseExactMatrix gram(d, d);
    for (const auto& [ij, v] : entries_)
        gram.add(ij.first, ij.second, v);
    return gram.rank() == d;
}

std::vector<std::vector<Rational>> InnerProduct::inverse_gram() const
{
    std::size_t d = base_->dim();
    // Gauss-Jordan on [G | I].
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(2 * d, Rational(0)));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j)
            m[i][j] = value(i, j);
        m[i][d + i] = 1;
    }
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t sel = c;
        while (sel < d && is_zero(m[sel][c]))
            ++sel;
        if (sel == d)
            throw PreconditionError("form is degenerate; cannot raise indices");
        std::swap(m[sel], m[c]);
        Rational inv = 1 / m[c][c];
        for (auto& x : m[c])
            x *= inv;
        for (std::size_t i = 0; i < d; ++i) {
            if (i == c || is_zero(m[i][c]))
                continue;
            Rational f = m[i][c];
            for (std::size_t j = 0; j < 2 * d; ++j)
                m[i][j] -= f * m[c][j];
        }
    }
    std::vector<std::vector<Rational>> inv(d, std::vector<Rational>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            inv[i][j] = m[i][d + j];
    return inv;
}

bool InnerProduct::same_as(const InnerProduct& other) const
{
    return degree_ == other.degree_ && base_->same_as(*other.base_) &&
           entries_ == other.entries_;
}

FormPtr make_form(SpacePtr space, int n,
                  std::vector<std::tuple<std::size_t, std::size_t, Rational>> entries)
{
    return std::make_shared<InnerProduct>(std::move(space), n, std::move(entries));
}

FrobeniusAlgebra::FrobeniusAlgebra(
    SpacePtr space, FormPtr form,
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, Rational>>>
        mult)
    : space_(std::move(space)), form_(std::move(form))
{
    if (!form_->space().same_as(*space_))
        throw InputError("form is defined on a different space");
    std::size_t d = space_->dim();
    for (auto& [ij, terms] : mult) {
        auto [i, j] = ij;
        if (i >= d || j >= d)
            throw InputError("multiplication table index out of range");
        std::vector<Rational> dense(d, Rational(0));
        for (auto& [k, c] : terms) {
            if (k >= d)
                throw InputError("multiplication table index out of range");
            dense[k] += c;
        }
        for (std::size_t k = 0; k < d; ++k) {
            if (is_zero(dense[k]))
                continue;
            if (space_->degree(k) != space_->degree(i) + space_->degree(j)) {
                std::ostringstream msg;
                msg << "product " << space_->name(i) << "*" << space_->name(j)
                    << " has a component of wrong degree (" << space_->name(k) << ")";
                throw InputError(msg.str());
            }
        }
        table_[ij] = std::move(dense);
    }

    // Associativity and invariance, exhaustively over basis triples.
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                std::vector<Rational> lhs(d, Rational(0)), rhs(d, Rational(0));
                auto ij_prod = product(i, j);
                for (std::size_t m = 0; m < d; ++m)
                    if (!is_zero(ij_prod[m])) {
                        auto mk = product(m, k);
                        for (std::size_t t = 0; t < d; ++t)
                            lhs[t] += ij_prod[m] * mk[t];
                    }
                auto jk_prod = product(j, k);
                for (std::size_t m = 0; m < d; ++m)
                    if (!is_zero(jk_prod[m])) {
                        auto im = product(i, m);
                        for (std::size_t t = 0; t < d; ++t)
                            rhs[t] += jk_prod[m] * im[t];
                    }
                if (lhs != rhs) {
                    std::ostringstream msg;
                    msg << "associativity fails on (" << space_->name(i) << ","
                        << space_->name(j) << "," << space_->name(k) << ")";
                    throw InputError(msg.str());
                }

                Rational pair_lhs(0), pair_rhs(0);
                for (std::size_t m = 0; m < d; ++m) {
                    pair_lhs += ij_prod[m] * form_->value(m, k);
                    pair_rhs += jk_prod[m] * form_->value(i, m);
                }
                if (pair_lhs != pair_rhs) {
                    std::ostringstream msg;
                    msg << "invariance (ab,c)=(a,bc) fails on (" << space_->name(i) << ","
                        << space_->name(j) << "," << space_->name(k) << ")";
                    throw InputError(msg.str());
                }
            }
}

Rational FrobeniusAlgebra::mult(std::size_t i, std::size_t j, std::size_t k) const
{
    auto it = table_.find({i, j});
    return it == table_.end() ? Rational(0) : it->second.at(k);
}

std::vector<Rational> FrobeniusAlgebra::product(std::size_t i, std::size_t j) const
{
    auto it = table_.find({i, j});
    if (it != table_.end())
        return it->second;
    return std::vector<Rational>(space_->dim(), Rational(0));
}

FrobeniusPtr frobenius_from_table(
    SpacePtr space, FormPtr form,
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, Rational>>>
        mult)
{
    return std::make_shared<FrobeniusAlgebra>(std::move(space), std::move(form), std::move(mult));
}

} // namespace necklace
