#include "necklace/linalg.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace necklace {

void SparseExactMatrix::add(std::size_t r, std::size_t c, const Rational& v)
{
    if (r >= rows_ || c >= cols_)
        throw InputError("matrix index out of range");
    if (is_zero(v))
        return;
    entries_.push_back({r, c, v});
    dirty_ = true;
}

void SparseExactMatrix::normalize() const
{
    if (!dirty_)
        return;
    std::map<std::pair<std::size_t, std::size_t>, Rational> acc;
    for (const auto& e : entries_)
        acc[{e.row, e.col}] += e.value;
    entries_.clear();
    for (auto& [rc, v] : acc)
        if (!is_zero(v))
            entries_.push_back({rc.first, rc.second, v});
    dirty_ = false;
}

SparseExactMatrix SparseExactMatrix::transposed() const
{
    normalize();
    SparseExactMatrix t(cols_, rows_);
    for (const auto& e : entries_)
        t.add(e.col, e.row, e.value);
    return t;
}

SparseExactMatrix SparseExactMatrix::multiply(const SparseExactMatrix& rhs) const
{
    if (cols_ != rhs.rows())
        throw InputError("matrix product shape mismatch");
    normalize();
    rhs.normalize();
    // rows of rhs indexed for the sparse row pass
    std::vector<std::vector<const Entry*>> rhs_rows(rhs.rows());
    for (const auto& e : rhs.entries())
        rhs_rows[e.row].push_back(&e);
    SparseExactMatrix out(rows_, rhs.cols());
    for (const auto& e : entries_)
        for (const Entry* f : rhs_rows[e.col])
            out.add(e.row, f->col, e.value * f->value);
    out.normalize();
    return out;
}

bool SparseExactMatrix::is_zero() const
{
    normalize();
    return entries_.empty();
}

namespace {

// Sparse row representation with integer entries for the Bareiss pass.
using IntRow = std::map<std::size_t, Integer>;

} // namespace

std::size_t SparseExactMatrix::rank() const
{
    normalize();
    if (entries_.empty())
        return 0;

    // Clear denominators per row; scaling rows preserves rank.
    std::vector<IntRow> work;
    {
        std::unordered_map<std::size_t, std::size_t> row_slot;
        std::vector<Integer> lcm_den;
        for (const auto& e : entries_) {
            auto [it, fresh] = row_slot.try_emplace(e.row, work.size());
            if (fresh) {
                work.emplace_back();
                lcm_den.emplace_back(1);
            }
            lcm_den[it->second] = lcm(lcm_den[it->second], Integer(e.value.get_den()));
        }
        for (const auto& e : entries_) {
            std::size_t slot = row_slot[e.row];
            Integer scaled = Integer(e.value.get_num()) * (lcm_den[slot] / Integer(e.value.get_den()));
            work[slot][e.col] = scaled;
        }
    }

    std::size_t rank = 0;
    Integer prev_pivot = 1;
    std::vector<bool> used_col(cols_, false);

    while (!work.empty()) {
        // Markowitz-ish pivot: smallest (row_nnz - 1) * (col_nnz - 1).
        std::map<std::size_t, std::size_t> col_count;
        for (const auto& row : work)
            for (const auto& [c, v] : row)
                col_count[c]++;

        std::size_t best_row = work.size(), best_col = 0;
        unsigned long best_cost = 0;
        for (std::size_t i = 0; i < work.size(); ++i) {
            for (const auto& [c, v] : work[i]) {
                unsigned long cost =
                    (unsigned long)(work[i].size() - 1) * (unsigned long)(col_count[c] - 1);
                if (best_row == work.size() || cost < best_cost) {
                    best_row = i;
                    best_col = c;
                    best_cost = cost;
                }
            }
        }
        if (best_row == work.size())
            break; // all remaining rows empty

        IntRow pivot_row = std::move(work[best_row]);
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(best_row));
        Integer pivot = pivot_row[best_col];
        ++rank;
        used_col[best_col] = true;

        // One-step fraction-free elimination:
        //   row' = (pivot * row - row[pc] * pivot_row) / prev_pivot
        std::vector<IntRow> next;
        next.reserve(work.size());
        for (auto& row : work) {
            auto hit = row.find(best_col);
            if (hit == row.end()) {
                next.push_back(std::move(row));
                continue;
            }
            Integer factor = hit->second;
            IntRow out;
            for (auto& [c, v] : row) {
                if (c == best_col)
                    continue;
                Integer nv = pivot * v;
                auto pv = pivot_row.find(c);
                if (pv != pivot_row.end())
                    nv -= factor * pv->second;
                if (nv != 0)
                    out[c] = nv / prev_pivot; // exact by Bareiss
            }
            for (auto& [c, v] : pivot_row) {
                if (c == best_col || row.count(c))
                    continue;
                Integer nv = -factor * v;
                out[c] = nv / prev_pivot;
            }
            if (!out.empty())
                next.push_back(std::move(out));
        }
        work = std::move(next);
        prev_pivot = pivot;
    }
    return rank;
}

std::vector<std::vector<Rational>> SparseExactMatrix::kernel_basis() const
{
    normalize();
    // Dense rational RREF. Desk scale keeps these matrices small.
    std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(cols_, Rational(0)));
    for (const auto& e : entries_)
        m[e.row][e.col] = e.value;

    std::vector<std::size_t> pivot_col_of_row;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t sel = r;
        while (sel < rows_ && is_zero(m[sel][c]))
            ++sel;
        if (sel == rows_)
            continue;
        std::swap(m[sel], m[r]);
        Rational inv = 1 / m[r][c];
        for (std::size_t j = c; j < cols_; ++j)
            m[r][j] *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || is_zero(m[i][c]))
                continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols_; ++j)
                m[i][j] -= f * m[r][j];
        }
        pivot_col_of_row.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t pc : pivot_col_of_row)
        is_pivot[pc] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_c = 0; free_c < cols_; ++free_c) {
        if (is_pivot[free_c])
            continue;
        std::vector<Rational> v(cols_, Rational(0));
        v[free_c] = 1;
        for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i)
            v[pivot_col_of_row[i]] = -m[i][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

void SparseExactMatrix::write(std::ostream& os) const
{
    normalize();
    os << rows_ << ' ' << cols_ << ' ' << entries_.size() << '\n';
    for (const auto& e : entries_)
        os << e.row << ' ' << e.col << ' ' << format_rational(e.value) << '\n';
}

SparseExactMatrix SparseExactMatrix::read(std::istream& is)
{
    std::size_t rows, cols, nnz;
    if (!(is >> rows >> cols >> nnz))
        throw InputError("bad matrix header");
    SparseExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < nnz; ++i) {
        std::size_t r, c;
        std::string v;
        if (!(is >> r >> c >> v))
            throw InputError("truncated matrix body");
        m.add(r, c, parse_rational(v));
    }
    m.normalize();
    return m;
}

std::size_t homology_rank(const SparseExactMatrix& d_in, const SparseExactMatrix& d_out)
{
    if (d_in.rows() != d_out.cols())
        throw InputError("homology_rank: middle dimensions disagree");
    SparseExactMatrix comp = d_out.multiply(d_in);
    if (!comp.is_zero()) {
        std::size_t witness = comp.entries().front().col;
        std::ostringstream msg;
        msg << "homology_rank: d_out * d_in != 0 (witness column " << witness << ")";
        throw InputError(msg.str());
    }
    return d_in.rows() - d_in.rank() - d_out.rank();
}

} // namespace necklace
