#include "taut/linear.hpp"

#include "taut/errors.hpp"

#include <algorithm>
#include <map>

namespace taut {

SparseVec to_sparse(const Vector& v)
{
    SparseVec out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0)
            out.emplace_back(i, v[i]);
    return out;
}

Vector to_dense(const SparseVec& v, std::size_t n)
{
    Vector out(n);
    for (const auto& [i, x] : v) {
        if (i >= n)
            throw InputError("sparse index out of range");
        out[i] = x;
    }
    return out;
}

SparseVec sparse_add(const SparseVec& a, const SparseVec& b, const Rational& scale)
{
    SparseVec out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first < j->first)) {
            out.push_back(*i++);
        } else if (i == a.end() || j->first < i->first) {
            out.emplace_back(j->first, scale * j->second);
            ++j;
        } else {
            Rational s = i->second + scale * j->second;
            if (sgn(s) != 0)
                out.emplace_back(i->first, std::move(s));
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVec sparse_scale(const SparseVec& a, const Rational& s)
{
    if (sgn(s) == 0)
        return {};
    SparseVec out = a;
    for (auto& e : out)
        e.second *= s;
    return out;
}

IntRow primitive_row(const SparseVec& v, Rational* factor)
{
    IntRow out;
    if (v.empty()) {
        if (factor)
            *factor = 1;
        return out;
    }
    Integer den = 1;
    for (const auto& e : v)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.second.get_den_mpz_t());
    Integer g = 0;
    out.reserve(v.size());
    for (const auto& [i, x] : v) {
        Integer n = x.get_num() * (den / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        out.emplace_back(i, std::move(n));
    }
    if (sgn(out.front().second) < 0)
        g = -g;
    for (auto& e : out)
        mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
    if (factor)
        *factor = Rational(den, g);
    if (factor)
        factor->canonicalize();
    return out;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries)
    : rows_(rows), cols_(cols)
{
    std::map<std::pair<std::size_t, std::size_t>, Rational> acc;
    for (auto& [r, c, v] : entries) {
        if (r >= rows || c >= cols)
            throw InputError("matrix entry index out of range");
        acc[{r, c}] += v;
    }
    for (auto& [rc, v] : acc)
        if (sgn(v) != 0)
            entries_.emplace_back(rc.first, rc.second, v);
}

SparseMatrix SparseMatrix::from_dense(const std::vector<Vector>& rows, std::size_t cols)
{
    std::vector<Entry> entries;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw InputError("ragged dense matrix");
        for (std::size_t c = 0; c < cols; ++c)
            if (sgn(rows[r][c]) != 0)
                entries.emplace_back(r, c, rows[r][c]);
    }
    return SparseMatrix(rows.size(), cols, std::move(entries));
}

SparseMatrix SparseMatrix::from_rows(const std::vector<SparseVec>& rows, std::size_t cols)
{
    std::vector<Entry> entries;
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r])
            entries.emplace_back(r, c, v);
    return SparseMatrix(rows.size(), cols, std::move(entries));
}

std::vector<SparseVec> SparseMatrix::row_vectors() const
{
    std::vector<SparseVec> out(rows_);
    for (const auto& [r, c, v] : entries_)
        out[r].emplace_back(c, v);
    return out;
}

SparseMatrix SparseMatrix::transpose() const
{
    std::vector<Entry> t;
    t.reserve(entries_.size());
    for (const auto& [r, c, v] : entries_)
        t.emplace_back(c, r, v);
    return SparseMatrix(cols_, rows_, std::move(t));
}

Vector SparseMatrix::apply(const Vector& x) const
{
    if (x.size() != cols_)
        throw InputError("vector length does not match matrix columns");
    Vector out(rows_);
    for (const auto& [r, c, v] : entries_)
        out[r] += v * x[c];
    return out;
}

Echelon::Echelon(std::size_t ncols, bool track) : ncols_(ncols), track_(track), pivot_of_col_(ncols, -1) {}

namespace {

// target := a*target - b*pivot, with a = pivot lead, b = target's entry at the pivot column.
void combine(IntRow& target, const Integer& a, const Integer& b, const IntRow& pivot)
{
    IntRow out;
    out.reserve(target.size() + pivot.size());
    auto i = target.begin();
    auto j = pivot.begin();
    while (i != target.end() || j != pivot.end()) {
        if (j == pivot.end() || (i != target.end() && i->first < j->first)) {
            out.emplace_back(i->first, a * i->second);
            ++i;
        } else if (i == target.end() || j->first < i->first) {
            out.emplace_back(j->first, -b * j->second);
            ++j;
        } else {
            Integer s = a * i->second - b * j->second;
            if (sgn(s) != 0)
                out.emplace_back(i->first, std::move(s));
            ++i;
            ++j;
        }
    }
    target = std::move(out);
}

Integer content(const IntRow& row)
{
    Integer g = 0;
    for (const auto& e : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

Integer entry_at(const IntRow& row, std::size_t col)
{
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, std::size_t c) { return e.first < c; });
    if (it != row.end() && it->first == col)
        return it->second;
    return 0;
}

}  // namespace

void Echelon::eliminate(Row& target, const Row& pivot) const
{
    const std::size_t col = pivot.entries.front().first;
    Integer a = pivot.entries.front().second;
    Integer b = entry_at(target.entries, col);
    if (sgn(b) == 0)
        return;
    Integer g = gcd(a, b);
    a /= g;
    b /= g;
    combine(target.entries, a, b, pivot.entries);
    if (track_) {
        target.combo = sparse_add(sparse_scale(target.combo, Rational(a)), pivot.combo, Rational(-b));
    }
    Integer c = content(target.entries);
    if (c > 1) {
        for (auto& e : target.entries)
            mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), c.get_mpz_t());
        if (track_)
            target.combo = sparse_scale(target.combo, Rational(Integer(1), c));
    }
}

bool Echelon::insert(const SparseVec& v, std::size_t id)
{
    if (!v.empty() && v.back().first >= ncols_)
        throw InputError("vector index out of range for echelon");
    Rational factor;
    Row row{primitive_row(v, &factor), {}};
    if (track_)
        row.combo.emplace_back(id, factor);
    while (!row.entries.empty()) {
        long p = pivot_of_col_[row.entries.front().first];
        if (p < 0)
            break;
        eliminate(row, rows_[static_cast<std::size_t>(p)]);
    }
    if (row.entries.empty())
        return false;
    if (sgn(row.entries.front().second) < 0) {
        for (auto& e : row.entries)
            e.second = -e.second;
        if (track_)
            row.combo = sparse_scale(row.combo, -1);
    }
    pivot_of_col_[row.entries.front().first] = static_cast<long>(rows_.size());
    rows_.push_back(std::move(row));
    return true;
}

bool Echelon::contains(const SparseVec& v) const
{
    return reduce(v).empty();
}

SparseVec Echelon::reduce(const SparseVec& v) const
{
    std::map<std::size_t, Rational> w(v.begin(), v.end());
    auto it = w.begin();
    while (it != w.end()) {
        if (it->first >= ncols_)
            throw InputError("vector index out of range for echelon");
        long p = pivot_of_col_[it->first];
        if (p < 0) {
            ++it;
            continue;
        }
        const std::size_t col = it->first;
        const IntRow& row = rows_[static_cast<std::size_t>(p)].entries;
        Rational lambda = it->second / Rational(row.front().second);
        for (const auto& [c, x] : row) {
            auto jt = w.find(c);
            if (jt == w.end()) {
                w.emplace(c, -lambda * x);
            } else {
                jt->second -= lambda * x;
                if (sgn(jt->second) == 0)
                    w.erase(jt);
            }
        }
        it = w.upper_bound(col);
    }
    return SparseVec(w.begin(), w.end());
}

std::optional<SparseVec> Echelon::express(const SparseVec& v) const
{
    if (!track_)
        throw ModelError("express() requires a tracking echelon");
    std::map<std::size_t, Rational> w(v.begin(), v.end());
    SparseVec acc;
    auto it = w.begin();
    while (it != w.end()) {
        long p = it->first < ncols_ ? pivot_of_col_[it->first] : -1;
        if (p < 0)
            return std::nullopt;
        const std::size_t col = it->first;
        const Row& row = rows_[static_cast<std::size_t>(p)];
        Rational lambda = it->second / Rational(row.entries.front().second);
        for (const auto& [c, x] : row.entries) {
            auto jt = w.find(c);
            if (jt == w.end()) {
                w.emplace(c, -lambda * x);
            } else {
                jt->second -= lambda * x;
                if (sgn(jt->second) == 0)
                    w.erase(jt);
            }
        }
        acc = sparse_add(acc, row.combo, lambda);
        it = w.upper_bound(col);
    }
    return acc;
}

std::vector<std::size_t> Echelon::pivot_columns() const
{
    std::vector<std::size_t> cols;
    cols.reserve(rows_.size());
    for (const auto& r : rows_)
        cols.push_back(r.entries.front().first);
    std::sort(cols.begin(), cols.end());
    return cols;
}

std::vector<SparseVec> Echelon::reduced_rows() const
{
    std::vector<IntRow> rows;
    rows.reserve(rows_.size());
    for (const auto& r : rows_)
        rows.push_back(r.entries);
    std::sort(rows.begin(), rows.end(), [](const IntRow& a, const IntRow& b) { return a.front().first < b.front().first; });
    for (std::size_t i = rows.size(); i-- > 0;) {
        const std::size_t col = rows[i].front().first;
        const Integer& a0 = rows[i].front().second;
        for (std::size_t j = 0; j < i; ++j) {
            Integer b = entry_at(rows[j], col);
            if (sgn(b) == 0)
                continue;
            Integer g = gcd(a0, b);
            combine(rows[j], a0 / g, b / g, rows[i]);
            Integer c = content(rows[j]);
            if (c > 1)
                for (auto& e : rows[j])
                    mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), c.get_mpz_t());
        }
    }
    std::vector<SparseVec> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        Rational lead(r.front().second);
        SparseVec v;
        v.reserve(r.size());
        for (const auto& [c, x] : r) {
            Rational q(x);
            q /= lead;
            v.emplace_back(c, std::move(q));
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::size_t rank(const SparseMatrix& m)
{
    Echelon e(m.cols());
    for (const auto& row : m.row_vectors())
        e.insert(row);
    return e.rank();
}

std::vector<SparseVec> kernel_basis_sparse(const SparseMatrix& m)
{
    Echelon e(m.cols());
    for (const auto& row : m.row_vectors())
        e.insert(row);
    std::vector<SparseVec> rref = e.reduced_rows();
    std::vector<bool> pivot(m.cols(), false);
    for (const auto& r : rref)
        pivot[r.front().first] = true;
    // column -> list of (pivot column, entry) over the reduced rows
    std::vector<std::vector<std::pair<std::size_t, Rational>>> by_col(m.cols());
    for (const auto& r : rref)
        for (std::size_t k = 1; k < r.size(); ++k)
            by_col[r[k].first].emplace_back(r.front().first, r[k].second);
    std::vector<SparseVec> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (pivot[f])
            continue;
        SparseVec v;
        for (const auto& [pc, x] : by_col[f])
            v.emplace_back(pc, -x);
        v.emplace_back(f, Rational(1));
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Vector> kernel_basis(const SparseMatrix& m)
{
    std::vector<Vector> out;
    for (const auto& v : kernel_basis_sparse(m))
        out.push_back(to_dense(v, m.cols()));
    return out;
}

std::optional<Vector> solve(const SparseMatrix& m, const Vector& b)
{
    if (b.size() != m.rows())
        throw InputError("right-hand side length does not match matrix rows");
    const std::size_t n = m.cols();
    std::vector<SparseVec> rows = m.row_vectors();
    Echelon e(n + 1);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        SparseVec aug = rows[r];
        if (sgn(b[r]) != 0)
            aug.emplace_back(n, b[r]);
        e.insert(aug);
    }
    if (e.is_pivot(n))
        return std::nullopt;
    Vector x(n);
    for (const auto& r : e.reduced_rows()) {
        if (r.back().first == n)
            x[r.front().first] = r.back().second;
    }
    if (m.apply(x) != b)
        throw ModelError("solve: substitution check failed");
    return x;
}

std::vector<Vector> quotient_representatives(std::size_t space_dim, const std::vector<Vector>& subspace)
{
    Echelon e(space_dim);
    for (const auto& v : subspace) {
        if (v.size() != space_dim)
            throw InputError("subspace vector has wrong length");
        e.insert(to_sparse(v));
    }
    std::vector<Vector> reps;
    for (std::size_t c = 0; c < space_dim; ++c) {
        if (e.is_pivot(c))
            continue;
        Vector u(space_dim);
        u[c] = 1;
        reps.push_back(std::move(u));
    }
    return reps;
}

std::vector<SparseVec> kernel_of_images(const std::vector<SparseVec>& images, std::size_t target_dim)
{
    Echelon e(target_dim, true);
    std::vector<SparseVec> out;
    for (std::size_t j = 0; j < images.size(); ++j) {
        if (e.insert(images[j], j))
            continue;
        SparseVec combo = *e.express(images[j]);
        out.push_back(sparse_add({{j, Rational(1)}}, combo, -1));
    }
    return out;
}

std::vector<SparseVec> complement_representatives(std::size_t dim, const std::vector<SparseVec>& sub,
                                                  const std::vector<SparseVec>& space)
{
    Echelon e(dim);
    for (const auto& v : sub)
        e.insert(v);
    std::vector<SparseVec> reps;
    for (const auto& v : space)
        if (e.insert(v))
            reps.push_back(v);
    return reps;
}

}  // namespace taut
