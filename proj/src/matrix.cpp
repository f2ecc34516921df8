#include "sdym/matrix.hpp"

#include <sstream>

namespace sdym {

ConstMatrix ConstMatrix::identity(int n) {
    ConstMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, GaussianRational(1));
    return m;
}

bool ConstMatrix::is_zero() const {
    for (const auto& v : e_)
        if (!v.is_zero()) return false;
    return true;
}

bool ConstMatrix::is_identity() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (!(at(i, j) == GaussianRational(i == j ? 1 : 0))) return false;
    return true;
}

ConstMatrix ConstMatrix::operator-() const {
    ConstMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.set(i, j, -at(i, j));
    return r;
}

static void check_dims(const ConstMatrix& a, const ConstMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("matrix dimension mismatch");
}

ConstMatrix operator+(const ConstMatrix& a, const ConstMatrix& b) {
    check_dims(a, b);
    ConstMatrix r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) r.set(i, j, a.at(i, j) + b.at(i, j));
    return r;
}

ConstMatrix operator-(const ConstMatrix& a, const ConstMatrix& b) {
    check_dims(a, b);
    ConstMatrix r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) r.set(i, j, a.at(i, j) - b.at(i, j));
    return r;
}

ConstMatrix operator*(const ConstMatrix& a, const ConstMatrix& b) {
    check_dims(a, b);
    int n = a.dim();
    ConstMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            GaussianRational s;
            for (int k = 0; k < n; ++k) s += a.at(i, k) * b.at(k, j);
            r.set(i, j, std::move(s));
        }
    return r;
}

ConstMatrix operator*(const GaussianRational& s, const ConstMatrix& a) {
    ConstMatrix r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) r.set(i, j, s * a.at(i, j));
    return r;
}

GaussianRational ConstMatrix::trace() const {
    GaussianRational s;
    for (int i = 0; i < n_; ++i) s += at(i, i);
    return s;
}

ConstMatrix ConstMatrix::inverse() const {
    int n = n_;
    // augmented [A | I], Gauss-Jordan
    std::vector<std::vector<GaussianRational>> m(n, std::vector<GaussianRational>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = at(i, j);
        m[i][n + i] = GaussianRational(1);
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!m[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw SingularMatrix("singular matrix");
        std::swap(m[col], m[piv]);
        GaussianRational inv = m[col][col].inverse();
        for (int j = 0; j < 2 * n; ++j) m[col][j] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            GaussianRational f = m[r][col];
            for (int j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
        }
    }
    ConstMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.set(i, j, m[i][n + j]);
    return out;
}

std::string ConstMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < n_; ++j) os << (j ? ", " : "") << at(i, j).str();
        os << "]";
    }
    os << "]";
    return os.str();
}

ConstMatrix commutator(const ConstMatrix& a, const ConstMatrix& b) {
    check_dims(a, b);
    return a * b - b * a;
}

std::optional<std::vector<GaussianRational>> solve_linear(
    int rows, int cols, const std::vector<GaussianRational>& a,
    const std::vector<GaussianRational>& b) {
    // row-reduce the augmented matrix [a | b]
    std::vector<std::vector<GaussianRational>> m(rows, std::vector<GaussianRational>(cols + 1));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) m[i][j] = a[static_cast<size_t>(i) * cols + j];
        m[i][cols] = b[i];
    }
    std::vector<int> pivot_col(rows, -1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        GaussianRational inv = m[r][c].inverse();
        for (int j = c; j <= cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            GaussianRational f = m[i][c];
            for (int j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col[r] = c;
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (!m[i][cols].is_zero()) return std::nullopt;
    std::vector<GaussianRational> x(cols);
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = m[i][cols];
    return x;
}

int matrix_rank(int rows, int cols, std::vector<GaussianRational> a) {
    auto at = [&](int i, int j) -> GaussianRational& { return a[static_cast<size_t>(i) * cols + j]; };
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (!at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < cols; ++j) std::swap(at(rank, j), at(piv, j));
        GaussianRational inv = at(rank, c).inverse();
        for (int j = c; j < cols; ++j) at(rank, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == rank || at(i, c).is_zero()) continue;
            GaussianRational f = at(i, c);
            for (int j = c; j < cols; ++j) at(i, j) -= f * at(rank, j);
        }
        ++rank;
    }
    return rank;
}

std::vector<GaussianRational> structure_constants(const std::vector<ConstMatrix>& basis) {
    if (basis.empty()) throw BasisError("empty basis");
    int n = basis[0].dim();
    int d = static_cast<int>(basis.size());
    for (const auto& t : basis) {
        if (t.dim() != n) throw DimensionMismatch("basis matrices of mixed dimension");
        if (!t.trace().is_zero()) throw BasisError("basis element not traceless");
    }
    // columns of T are the flattened basis elements
    int rows = n * n;
    std::vector<GaussianRational> t(static_cast<size_t>(rows) * d);
    for (int k = 0; k < d; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) t[static_cast<size_t>(i * n + j) * d + k] = basis[k].at(i, j);
    if (matrix_rank(rows, d, t) != d) throw BasisError("basis linearly dependent");

    std::vector<GaussianRational> c(static_cast<size_t>(d) * d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            ConstMatrix br = commutator(basis[i], basis[j]);
            std::vector<GaussianRational> rhs(rows);
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) rhs[p * n + q] = br.at(p, q);
            auto x = solve_linear(rows, d, t, rhs);
            if (!x) throw BasisError("basis not closed under the bracket");
            for (int k = 0; k < d; ++k)
                c[(static_cast<size_t>(i) * d + j) * d + k] = (*x)[k];
        }
    return c;
}

LieBasis make_sl_basis(int n) {
    if (n < 2) throw Error("sl(n) needs n >= 2");
    LieBasis b;
    b.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (n == 2 && i > j) continue;  // keep the pinned sl(2) ordering below
            ConstMatrix m(n);
            m.set(i, j, GaussianRational(1));
            b.taus.push_back(m);
        }
    if (n == 2) {
        ConstMatrix e21(2);
        e21.set(1, 0, GaussianRational(1));
        b.taus.push_back(e21);
    }
    for (int i = 0; i + 1 < n; ++i) {
        ConstMatrix m(n);
        m.set(i, i, GaussianRational(1));
        m.set(i + 1, i + 1, GaussianRational(-1));
        b.taus.push_back(m);
    }
    b.c = structure_constants(b.taus);
    return b;
}

}  // namespace sdym
