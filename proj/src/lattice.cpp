#include "toricmon/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace toricmon {

Int pairing(const IntVec& m, const IntVec& v) {
    if (m.size() != v.size())
        throw ValidationError("pairing: dimension mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        s += m[i] * v[i];
    return s;
}

bool is_zero_vec(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

IntVec vec_add(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size())
        throw ValidationError("vec_add: dimension mismatch");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size())
        throw ValidationError("vec_sub: dimension mismatch");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

IntVec vec_neg(const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = -a[i];
    return r;
}

IntVec vec_scale(const Int& c, const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = c * a[i];
    return r;
}

IntVec primitive_part(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v)
        g = gcd_int(g, x);
    if (g == 0)
        throw ValidationError("primitive_part: zero vector has no primitive part");
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = v[i] / g;
    return r;
}

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows) {
    if (rows.empty())
        return IntMat(0, 0);
    IntMat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw ValidationError("from_rows: ragged row lengths");
        for (std::size_t j = 0; j < m.cols_; ++j)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

IntVec IntMat::row(std::size_t i) const {
    IntVec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        r[j] = at(i, j);
    return r;
}

IntVec IntMat::col(std::size_t j) const {
    IntVec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        c[i] = at(i, j);
    return c;
}

std::vector<IntVec> IntMat::row_vectors() const {
    std::vector<IntVec> rows;
    rows.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        rows.push_back(row(i));
    return rows;
}

IntMat IntMat::transpose() const {
    IntMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

IntMat IntMat::operator*(const IntMat& other) const {
    if (cols_ != other.rows_)
        throw ValidationError("matrix product: dimension mismatch");
    IntMat p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                p.at(i, j) += a * other.at(k, j);
        }
    return p;
}

IntVec IntMat::apply(const IntVec& v) const {
    if (cols_ != v.size())
        throw ValidationError("matrix apply: dimension mismatch");
    IntVec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            s += at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

void IntMat::swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap(at(i, c), at(j, c));
}

void IntMat::swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap(at(r, i), at(r, j));
}

void IntMat::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c)
        at(i, c) = -at(i, c);
}

void IntMat::negate_col(std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r)
        at(r, j) = -at(r, j);
}

void IntMat::add_row_multiple(std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t k = 0; k < cols_; ++k)
        at(dst, k) += c * at(src, k);
}

void IntMat::add_col_multiple(std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t k = 0; k < rows_; ++k)
        at(k, dst) += c * at(k, src);
}

Int det(const IntMat& m) {
    if (m.rows() != m.cols())
        throw ValidationError("det: matrix not square");
    std::size_t n = m.rows();
    if (n == 0)
        return 1;
    IntMat a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j)) / prev;
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

std::size_t rank_q(const IntMat& m) {
    IntMat a = m;
    std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a.at(p, c) == 0)
            ++p;
        if (p == rows)
            continue;
        a.swap_rows(r, p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a.at(i, c) == 0)
                continue;
            // fraction-free: row_i := pivot*row_i - a(i,c)*row_r
            Int f = a.at(i, c);
            Int piv = a.at(r, c);
            for (std::size_t j = c; j < cols; ++j)
                a.at(i, j) = piv * a.at(i, j) - f * a.at(r, j);
        }
        ++r;
    }
    return r;
}

std::optional<IntMat> inverse_unimodular(const IntMat& m) {
    Int d = det(m);
    if (d != 1 && d != -1)
        return std::nullopt;
    // adjugate / det via Gauss-Jordan over the rationals stays exact here,
    // but integer row reduction via SNF transforms is simpler: m = u^-1 d v^-1
    // with d = identity up to signs. Use rational inversion and read off the
    // integer entries.
    RatMat r = RatMat::from_int(m);
    auto inv = r.inverse();
    if (!inv)
        return std::nullopt;
    IntMat out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rat& x = inv->at(i, j);
            if (boost::multiprecision::denominator(x) != 1)
                return std::nullopt;
            out.at(i, j) = Int(boost::multiprecision::numerator(x));
        }
    return out;
}

std::vector<Int> SmithResult::invariant_factors() const {
    std::vector<Int> f;
    std::size_t n = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < n; ++i)
        if (d.at(i, i) != 0)
            f.push_back(d.at(i, i));
    return f;
}

SmithResult smith_normal_form(const IntMat& m) {
    std::size_t rows = m.rows(), cols = m.cols();
    SmithResult res{IntMat::identity(rows), m, IntMat::identity(cols)};
    IntMat& d = res.d;
    IntMat& u = res.u;
    IntMat& v = res.v;

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // pick the nonzero entry of least absolute value in the remaining
        // block, first occurrence in row-major order (deterministic)
        std::size_t pi = t, pj = t;
        Int best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                Int a = abs_int(d.at(i, j));
                if (a != 0 && (best == 0 || a < best)) {
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0)
            break;
        if (pi != t) {
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
        }
        if (pj != t) {
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
        }

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d.at(i, t) == 0)
                    continue;
                Int q = d.at(i, t) / d.at(t, t);
                d.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                if (d.at(i, t) != 0) {
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d.at(t, j) == 0)
                    continue;
                Int q = d.at(t, j) / d.at(t, t);
                d.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
                if (d.at(t, j) != 0) {
                    d.swap_cols(t, j);
                    v.swap_cols(t, j);
                    clean = false;
                }
            }
        }
        ++t;
    }

    // positive diagonal, then enforce the divisibility chain
    std::size_t n = std::min(rows, cols);
    for (std::size_t i = 0; i < n; ++i)
        if (d.at(i, i) < 0) {
            d.negate_row(i);
            u.negate_row(i);
        }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            Int a = d.at(i, i), b = d.at(i + 1, i + 1);
            if (a == 0 && b != 0) {
                d.swap_rows(i, i + 1);
                u.swap_rows(i, i + 1);
                d.swap_cols(i, i + 1);
                v.swap_cols(i, i + 1);
                changed = true;
                continue;
            }
            if (a == 0 || b % a == 0)
                continue;
            // standard 2x2 repair: put gcd(a, b) at position i
            // col_i += col_{i+1}; makes entry (i+1, i) = b
            d.add_col_multiple(i, i + 1, 1);
            v.add_col_multiple(i, i + 1, 1);
            // row reduce the 2x2 corner back to diagonal(g, lcm)
            while (d.at(i + 1, i) != 0) {
                Int q = d.at(i + 1, i) / d.at(i, i);
                d.add_row_multiple(i + 1, i, -q);
                u.add_row_multiple(i + 1, i, -q);
                if (d.at(i + 1, i) != 0) {
                    d.swap_rows(i, i + 1);
                    u.swap_rows(i, i + 1);
                }
            }
            while (d.at(i, i + 1) != 0) {
                Int q = d.at(i, i + 1) / d.at(i, i);
                d.add_col_multiple(i + 1, i, -q);
                v.add_col_multiple(i + 1, i, -q);
            }
            if (d.at(i, i) < 0) {
                d.negate_row(i);
                u.negate_row(i);
            }
            if (d.at(i + 1, i + 1) < 0) {
                d.negate_row(i + 1);
                u.negate_row(i + 1);
            }
            changed = true;
        }
    }
    return res;
}

namespace {

/// Row Hermite form (row style, pivots positive, entries above a pivot
/// reduced into [0, pivot) ). Returns the nonzero rows. Canonical for a
/// given row lattice.
std::vector<IntVec> row_hermite(std::vector<IntVec> rows) {
    if (rows.empty())
        return {};
    std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        // eliminate column c below row r via gcd steps
        while (true) {
            std::size_t p = rows.size();
            Int best = 0;
            for (std::size_t i = r; i < rows.size(); ++i) {
                Int a = abs_int(rows[i][c]);
                if (a != 0 && (best == 0 || a < best)) {
                    best = a;
                    p = i;
                }
            }
            if (p == rows.size())
                break;
            std::swap(rows[r], rows[p]);
            bool done = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0)
                    continue;
                Int q = rows[i][c] / rows[r][c];
                for (std::size_t j = 0; j < cols; ++j)
                    rows[i][j] -= q * rows[r][j];
                if (rows[i][c] != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (rows[r][c] == 0)
            continue;
        if (rows[r][c] < 0)
            for (std::size_t j = 0; j < cols; ++j)
                rows[r][j] = -rows[r][j];
        for (std::size_t i = 0; i < r; ++i) {
            // reduce entries above pivot into [0, pivot)
            Int q = rows[i][c] / rows[r][c];
            if (rows[i][c] % rows[r][c] < 0)
                q -= 1;
            if (q != 0)
                for (std::size_t j = 0; j < cols; ++j)
                    rows[i][j] -= q * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

} // namespace

std::vector<IntVec> kernel_basis(const IntMat& m) {
    // m * x = 0  <=>  x in the lattice spanned by the columns of v past the
    // rank, where u m v = d is the Smith form
    SmithResult s = smith_normal_form(m);
    std::size_t rank = s.invariant_factors().size();
    std::vector<IntVec> gens;
    for (std::size_t j = rank; j < m.cols(); ++j)
        gens.push_back(s.v.col(j));
    return row_hermite(std::move(gens));
}

std::vector<IntVec> saturated_row_basis(const IntMat& m) {
    // saturation of the row lattice = (kernel of (kernel of m as rows))
    // computed via double kernel; rows of m span a sublattice, its rational
    // span meets Z^n in the kernel of the integer kernel of m^T... simpler:
    // kernel_basis of kernel_basis (as matrix) of m^T is exactly the
    // saturated row space.
    std::vector<IntVec> ker = kernel_basis(IntMat::from_rows(m.row_vectors()));
    if (ker.empty()) {
        // rows span full rank: saturation is all of Z^n
        std::vector<IntVec> basis;
        for (std::size_t i = 0; i < m.cols(); ++i) {
            IntVec e(m.cols(), 0);
            e[i] = 1;
            basis.push_back(e);
        }
        return basis;
    }
    return kernel_basis(IntMat::from_rows(ker));
}

namespace {

/// Reduces w modulo the lattice spanned by the rows of h, which must be in
/// row Hermite form. Floor division against each pivot yields the canonical
/// coset representative with pivot-column entries in [0, pivot).
IntVec reduce_mod_hermite(IntVec w, const std::vector<IntVec>& h) {
    for (const IntVec& row : h) {
        std::size_t c = 0;
        while (c < row.size() && row[c] == 0)
            ++c;
        if (c == row.size())
            continue;
        const Int& p = row[c];
        Int q = w[c] / p;
        if (w[c] % p < 0)
            q -= 1;
        if (q != 0)
            for (std::size_t j = 0; j < w.size(); ++j)
                w[j] -= q * row[j];
    }
    return w;
}

} // namespace

AdaptedBasis extend_to_basis(const std::vector<IntVec>& vectors, std::size_t rank) {
    std::size_t k = vectors.size();
    if (rank == 0)
        throw ValidationError("extend_to_basis: rank must be positive");
    if (k > rank)
        throw ValidationError("extend_to_basis: more vectors than the lattice rank");
    for (const IntVec& v : vectors)
        if (v.size() != rank)
            throw ValidationError("extend_to_basis: vector length differs from rank");

    // Column Hermite reduction of the k x n input matrix W, mirrored on
    // Cinv = C^-1 so that W_orig = W_cur * Cinv throughout. Once W reaches
    // (I_k | 0) the first k rows of Cinv are exactly the inputs and the
    // remaining rows complete them to a basis.
    IntMat w = k > 0 ? IntMat::from_rows(vectors) : IntMat(0, rank);
    IntMat cinv = IntMat::identity(rank);
    for (std::size_t r = 0; r < k; ++r) {
        while (true) {
            std::size_t jbest = rank;
            Int best = 0;
            for (std::size_t j = r; j < rank; ++j) {
                Int a = abs_int(w.at(r, j));
                if (a != 0 && (best == 0 || a < best)) {
                    best = a;
                    jbest = j;
                }
            }
            if (jbest == rank)
                throw ValidationError("extend_to_basis: vectors are linearly dependent");
            if (jbest != r) {
                w.swap_cols(r, jbest);
                cinv.swap_rows(r, jbest);
            }
            bool done = true;
            for (std::size_t j = r + 1; j < rank; ++j) {
                if (w.at(r, j) == 0)
                    continue;
                Int q = w.at(r, j) / w.at(r, r);
                w.add_col_multiple(j, r, -q);
                cinv.add_row_multiple(r, j, q);
                if (w.at(r, j) != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (w.at(r, r) < 0) {
            w.negate_col(r);
            cinv.negate_row(r);
        }
        if (w.at(r, r) != 1) {
            SmithResult s = smith_normal_form(IntMat::from_rows(vectors));
            std::vector<std::string> conds;
            for (const Int& f : s.invariant_factors())
                if (f != 1)
                    conds.push_back("invariant factor " + f.str() + " > 1");
            conds.insert(conds.begin(),
                         "extend_to_basis: vectors do not extend to a lattice basis");
            throw ValidationError(conds);
        }
        for (std::size_t j = 0; j < r; ++j) {
            if (w.at(r, j) == 0)
                continue;
            Int q = w.at(r, j);
            w.add_col_multiple(j, r, -q);
            cinv.add_row_multiple(r, j, q);
        }
    }

    // the completion rows are only determined up to the sublattice spanned
    // by the earlier rows; normalize each to the reduced coset
    // representative with positive leading coordinate
    std::vector<IntVec> primal = cinv.row_vectors();
    for (std::size_t i = k; i < rank; ++i) {
        std::vector<IntVec> prev(primal.begin(), primal.begin() + i);
        std::vector<IntVec> h = row_hermite(std::move(prev));
        primal[i] = reduce_mod_hermite(primal[i], h);
        std::size_t lead = 0;
        while (lead < rank && primal[i][lead] == 0)
            ++lead;
        if (lead < rank && primal[i][lead] < 0)
            primal[i] = reduce_mod_hermite(vec_neg(primal[i]), h);
    }

    IntMat p = IntMat::from_rows(primal);
    auto pinv = inverse_unimodular(p);
    if (!pinv)
        throw ValidationError("extend_to_basis: completed matrix not unimodular");
    AdaptedBasis out;
    out.primal = std::move(primal);
    out.dual = pinv->transpose().row_vectors();
    out.given = k;
    return out;
}

RatMat RatMat::from_int(const IntMat& m) {
    RatMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.at(i, j) = Rat(m.at(i, j));
    return r;
}

RatMat RatMat::from_rows(const std::vector<RatVec>& rows) {
    if (rows.empty())
        return RatMat(0, 0);
    RatMat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw ValidationError("from_rows: ragged row lengths");
        for (std::size_t j = 0; j < m.cols_; ++j)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

RatMat RatMat::operator*(const RatMat& other) const {
    if (cols_ != other.rows_)
        throw ValidationError("matrix product: dimension mismatch");
    RatMat p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                p.at(i, j) += a * other.at(k, j);
        }
    return p;
}

std::optional<RatMat> RatMat::inverse() const {
    if (rows_ != cols_)
        return std::nullopt;
    std::size_t n = rows_;
    RatMat a = *this;
    RatMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        inv.at(i, i) = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a.at(p, c) == 0)
            ++p;
        if (p == n)
            return std::nullopt;
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(c, j), a.at(p, j));
                std::swap(inv.at(c, j), inv.at(p, j));
            }
        Rat piv = a.at(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(c, j) /= piv;
            inv.at(c, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a.at(i, c) == 0)
                continue;
            Rat f = a.at(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(c, j);
                inv.at(i, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

std::optional<RatVec> solve_rational(const RatMat& m, const RatVec& b) {
    if (m.rows() != b.size())
        throw ValidationError("solve_rational: dimension mismatch");
    std::size_t rows = m.rows(), cols = m.cols();
    RatMat a(rows, cols + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j)
            a.at(i, j) = m.at(i, j);
        a.at(i, cols) = b[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a.at(p, c) == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != r)
            for (std::size_t j = 0; j <= cols; ++j)
                std::swap(a.at(r, j), a.at(p, j));
        Rat piv = a.at(r, c);
        for (std::size_t j = 0; j <= cols; ++j)
            a.at(r, j) /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a.at(i, c) == 0)
                continue;
            Rat f = a.at(i, c);
            for (std::size_t j = 0; j <= cols; ++j)
                a.at(i, j) -= f * a.at(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (a.at(i, cols) != 0)
            return std::nullopt;
    RatVec x(cols, Rat(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        x[pivot_col[i]] = a.at(i, cols);
    return x;
}

IntVec primitive_from_rational(const RatVec& v) {
    Int lcm_den = 1;
    for (const Rat& x : v) {
        Int d(boost::multiprecision::denominator(x));
        lcm_den = lcm_den / gcd_int(lcm_den, d) * d;
    }
    IntVec w(v.size());
    bool all_zero = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat scaled = v[i] * Rat(lcm_den);
        w[i] = Int(boost::multiprecision::numerator(scaled));
        if (w[i] != 0)
            all_zero = false;
    }
    if (all_zero)
        throw ValidationError("primitive_from_rational: zero vector");
    return primitive_part(w);
}

} // namespace toricmon
