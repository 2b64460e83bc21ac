#include "seqop/linalg.hpp"

#include <algorithm>
#include <map>

namespace seqop {

void SparseMat::add(int r, int c, const Scalar& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw ShapeError("sparse entry out of range");
    row_[r].emplace_back(c, v);
}

void SparseMat::set(int r, int c, const Scalar& v) { add(r, c, v); }

Scalar SparseMat::at(int r, int c) const {
    Scalar s(0);
    for (const auto& [cc, vv] : row_[r])
        if (cc == c) s += vv;
    return s;
}

void SparseMat::compress(const Field& f) {
    for (auto& r : row_) {
        std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::pair<int, Scalar>> out;
        for (auto& [c, v] : r) {
            if (!out.empty() && out.back().first == c)
                out.back().second = f.add(out.back().second, v);
            else
                out.emplace_back(c, f.reduce(v));
        }
        std::erase_if(out, [&](const auto& e) { return f.is_zero(e.second); });
        r = std::move(out);
    }
}

long long SparseMat::nonzeros() const {
    long long n = 0;
    for (const auto& r : row_) n += static_cast<long long>(r.size());
    return n;
}

bool SparseMat::is_zero(const Field& f) const {
    for (const auto& r : row_)
        for (const auto& [c, v] : r)
            if (!f.is_zero(v)) return false;
    return true;
}

Vec SparseMat::apply(const Vec& x, const Field& f) const {
    if (static_cast<int>(x.size()) != cols_) throw ShapeError("matrix/vector size mismatch");
    Vec y(rows_, Scalar(0));
    for (int r = 0; r < rows_; ++r) {
        Scalar s(0);
        for (const auto& [c, v] : row_[r]) s += v * x[c];
        y[r] = f.reduce(s);
    }
    return y;
}

SparseMat SparseMat::multiply(const SparseMat& b, const Field& f) const {
    if (cols_ != b.rows_) throw ShapeError("matrix product shape mismatch");
    SparseMat out(rows_, b.cols_);
    for (int r = 0; r < rows_; ++r) {
        std::map<int, Scalar> acc;
        for (const auto& [k, v] : row_[r])
            for (const auto& [c, w] : b.row_[k]) acc[c] += v * w;
        for (auto& [c, v] : acc) {
            Scalar rv = f.reduce(v);
            if (!f.is_zero(rv)) out.row_[r].emplace_back(c, rv);
        }
    }
    return out;
}

SparseMat SparseMat::transpose() const {
    SparseMat out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : row_[r]) out.row_[c].emplace_back(r, v);
    for (auto& r : out.row_)
        std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

SparseMat SparseMat::identity(int n) {
    SparseMat out(n, n);
    for (int i = 0; i < n; ++i) out.row_[i].emplace_back(i, Scalar(1));
    return out;
}

SparseMat SparseMat::from_dense(const std::vector<Vec>& rows, const Field& f) {
    int nr = static_cast<int>(rows.size());
    int nc = nr == 0 ? 0 : static_cast<int>(rows[0].size());
    SparseMat out(nr, nc);
    for (int r = 0; r < nr; ++r)
        for (int c = 0; c < nc; ++c) {
            Scalar v = f.reduce(rows[r][c]);
            if (!f.is_zero(v)) out.row_[r].emplace_back(c, v);
        }
    return out;
}

std::vector<Vec> SparseMat::to_dense() const {
    std::vector<Vec> out(rows_, Vec(cols_, Scalar(0)));
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : row_[r]) out[r][c] += v;
    return out;
}

SparseMat SparseMat::scaled(const Scalar& c, const Field& f) const {
    SparseMat out(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [cc, v] : row_[r]) {
            Scalar w = f.mul(c, v);
            if (!f.is_zero(w)) out.row_[r].emplace_back(cc, w);
        }
    return out;
}

SparseMat SparseMat::plus(const SparseMat& b, const Field& f) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw ShapeError("matrix sum shape mismatch");
    SparseMat out(rows_, cols_);
    for (int r = 0; r < rows_; ++r) {
        out.row_[r] = row_[r];
        out.row_[r].insert(out.row_[r].end(), b.row_[r].begin(), b.row_[r].end());
    }
    out.compress(f);
    return out;
}

bool SparseMat::equals(const SparseMat& b, const Field& f) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) return false;
    SparseMat d = plus(b.scaled(Scalar(-1), f), f);
    return d.is_zero(f);
}

namespace {

using Row = std::vector<std::pair<int, Scalar>>;

Row row_axpy(const Row& target, const Scalar& coeff, const Row& pivot, const Field& f) {
    // target + coeff * pivot, merged by column.
    Row out;
    out.reserve(target.size() + pivot.size());
    size_t i = 0, j = 0;
    while (i < target.size() || j < pivot.size()) {
        if (j >= pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
            out.push_back(target[i++]);
        } else if (i >= target.size() || pivot[j].first < target[i].first) {
            Scalar v = f.mul(coeff, pivot[j].second);
            if (!f.is_zero(v)) out.emplace_back(pivot[j].first, v);
            ++j;
        } else {
            Scalar v = f.add(target[i].second, f.mul(coeff, pivot[j].second));
            if (!f.is_zero(v)) out.emplace_back(target[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

struct WorkRow {
    Row row;
    Row ops; // combination of original rows, (orig index, coeff)
    int orig;
};

Echelon eliminate(const SparseMat& a, const Field& f, bool track_ops,
                  std::vector<Row>* ops_out, std::vector<int>* perm_out) {
    Echelon e;
    e.ncols = a.cols();
    e.pivot_of_col.assign(a.cols(), -1);

    std::vector<WorkRow> work;
    for (int r = 0; r < a.rows(); ++r) {
        Row row = a.row(r);
        std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        Row merged;
        for (auto& [c, v] : row) {
            if (!merged.empty() && merged.back().first == c)
                merged.back().second = f.add(merged.back().second, v);
            else
                merged.emplace_back(c, f.reduce(v));
        }
        std::erase_if(merged, [&](const auto& p) { return f.is_zero(p.second); });
        if (merged.empty()) continue;
        WorkRow w;
        w.row = std::move(merged);
        if (track_ops) w.ops = {{r, f.one()}};
        w.orig = r;
        work.push_back(std::move(w));
    }

    // Bucket rows by leading column.
    std::map<int, std::vector<int>> bucket;
    for (int i = 0; i < static_cast<int>(work.size()); ++i) bucket[work[i].row.front().first].push_back(i);

    while (!bucket.empty()) {
        auto it = bucket.begin();
        int col = it->first;
        std::vector<int> rows_here = std::move(it->second);
        bucket.erase(it);
        if (rows_here.empty()) continue;

        // Deterministic pivot: fewest entries, then smallest original index.
        int piv = rows_here[0];
        for (int idx : rows_here) {
            if (work[idx].row.size() < work[piv].row.size() ||
                (work[idx].row.size() == work[piv].row.size() && work[idx].orig < work[piv].orig))
                piv = idx;
        }

        Scalar lead = work[piv].row.front().second;
        Scalar leadinv = f.inv(lead);
        for (auto& [c, v] : work[piv].row) v = f.mul(leadinv, v);
        if (track_ops)
            for (auto& [c, v] : work[piv].ops) v = f.mul(leadinv, v);

        for (int idx : rows_here) {
            if (idx == piv) continue;
            Scalar coeff = f.neg(work[idx].row.front().second);
            work[idx].row = row_axpy(work[idx].row, coeff, work[piv].row, f);
            if (track_ops) {
                Row merged = work[idx].ops;
                for (const auto& [o, v] : work[piv].ops) merged.emplace_back(o, f.mul(coeff, v));
                std::sort(merged.begin(), merged.end(),
                          [](const auto& x, const auto& y) { return x.first < y.first; });
                Row out;
                for (auto& [o, v] : merged) {
                    if (!out.empty() && out.back().first == o)
                        out.back().second = f.add(out.back().second, v);
                    else
                        out.emplace_back(o, v);
                }
                std::erase_if(out, [&](const auto& p) { return f.is_zero(p.second); });
                work[idx].ops = std::move(out);
            }
            if (!work[idx].row.empty()) bucket[work[idx].row.front().first].push_back(idx);
        }

        e.pivot_of_col[col] = static_cast<int>(e.rows.size());
        e.pivot_col.push_back(col);
        e.rows.push_back(work[piv].row);
        if (ops_out) ops_out->push_back(work[piv].ops);
        if (perm_out) perm_out->push_back(work[piv].orig);
    }
    return e;
}

Vec back_substitute(const Echelon& e, const Vec& rhs_reduced, const Field& f) {
    Vec x(e.ncols, Scalar(0));
    for (int i = static_cast<int>(e.rows.size()) - 1; i >= 0; --i) {
        Scalar s = rhs_reduced[i];
        for (const auto& [c, v] : e.rows[i])
            if (c != e.pivot_col[i]) s = f.sub(s, f.mul(v, x[c]));
        x[e.pivot_col[i]] = s;
    }
    return x;
}

} // namespace

Echelon echelon_form(const SparseMat& a, const Field& f) { return eliminate(a, f, false, nullptr, nullptr); }

int rank(const SparseMat& a, const Field& f) { return echelon_form(a, f).rank(); }

std::vector<Vec> kernel_basis(const SparseMat& a, const Field& f) {
    Echelon e = echelon_form(a, f);
    std::vector<Vec> basis;
    for (int c = 0; c < a.cols(); ++c) {
        if (e.pivot_of_col[c] != -1) continue;
        Vec x(a.cols(), Scalar(0));
        x[c] = f.one();
        for (int i = static_cast<int>(e.rows.size()) - 1; i >= 0; --i) {
            if (e.pivot_col[i] > c) continue;
            Scalar s(0);
            for (const auto& [cc, v] : e.rows[i])
                if (cc != e.pivot_col[i]) s = f.add(s, f.mul(v, x[cc]));
            x[e.pivot_col[i]] = f.neg(s);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

Solver::Solver(const SparseMat& a, const Field& f) : field_(f), nrows_(a.rows()) {
    ech_ = eliminate(a, f, true, &ops_, &perm_);
    // Keep the original matrix rows for the consistency check.
    amat_rows_.reserve(a.rows());
    for (int r = 0; r < a.rows(); ++r) amat_rows_.push_back(a.row(r));
    ncols_ = a.cols();
}

std::optional<Vec> Solver::solve(const Vec& b) const {
    if (static_cast<int>(b.size()) != nrows_) throw ShapeError("solver rhs size mismatch");
    Vec reduced(ech_.rows.size(), Scalar(0));
    for (size_t i = 0; i < ech_.rows.size(); ++i) {
        Scalar s(0);
        for (const auto& [o, v] : ops_[i]) s += v * b[o];
        reduced[i] = field_.reduce(s);
    }
    Vec x = back_substitute(ech_, reduced, field_);
    // Verify (covers the dropped zero-row combinations).
    for (int r = 0; r < nrows_; ++r) {
        Scalar s(0);
        for (const auto& [c, v] : amat_rows_[r]) s += v * x[c];
        if (!field_.eq(field_.reduce(s), field_.reduce(b[r]))) return std::nullopt;
    }
    return x;
}

std::optional<Vec> solve(const SparseMat& a, const Vec& b, const Field& f) {
    Solver s(a, f);
    return s.solve(b);
}

Vec vec_add(const Vec& a, const Vec& b, const Field& f) {
    if (a.size() != b.size()) throw ShapeError("vector sum size mismatch");
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b, const Field& f) {
    if (a.size() != b.size()) throw ShapeError("vector difference size mismatch");
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
    return out;
}

Vec vec_scale(const Scalar& c, const Vec& a, const Field& f) {
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = f.mul(c, a[i]);
    return out;
}

bool vec_is_zero(const Vec& a, const Field& f) {
    for (const auto& x : a)
        if (!f.is_zero(x)) return false;
    return true;
}

Vec vec_zero(int n) { return Vec(n, Scalar(0)); }

} // namespace seqop
