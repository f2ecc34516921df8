#pragma once

#include <optional>
#include <vector>

#include "sdym/rational.hpp"

namespace sdym {

/// Constant n x n matrix over the Gaussian rationals. Immutable value type
/// apart from the entry setter used during construction.
class ConstMatrix {
  public:
    explicit ConstMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n) {}

    static ConstMatrix zero(int n) { return ConstMatrix(n); }
    static ConstMatrix identity(int n);

    int dim() const { return n_; }
    const GaussianRational& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
    void set(int i, int j, GaussianRational v) { e_[static_cast<size_t>(i) * n_ + j] = std::move(v); }

    bool is_zero() const;
    bool is_identity() const;

    ConstMatrix operator-() const;
    friend ConstMatrix operator+(const ConstMatrix& a, const ConstMatrix& b);
    friend ConstMatrix operator-(const ConstMatrix& a, const ConstMatrix& b);
    friend ConstMatrix operator*(const ConstMatrix& a, const ConstMatrix& b);
    friend ConstMatrix operator*(const GaussianRational& s, const ConstMatrix& a);
    friend bool operator==(const ConstMatrix& a, const ConstMatrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }
    friend bool operator!=(const ConstMatrix& a, const ConstMatrix& b) { return !(a == b); }

    GaussianRational trace() const;

    /// exact inverse by Gauss-Jordan elimination; throws SingularMatrix
    ConstMatrix inverse() const;

    std::string str() const;

  private:
    int n_;
    std::vector<GaussianRational> e_;
};

ConstMatrix commutator(const ConstMatrix& a, const ConstMatrix& b);

/// Ordered traceless basis tau_1..tau_d of sl(n) together with the exact
/// structure constants of [tau_i, tau_j] = C_ij^k tau_k.
struct LieBasis {
    int n = 0;
    std::vector<ConstMatrix> taus;
    std::vector<GaussianRational> c;  // d*d*d, index (i*d + j)*d + k

    int d() const { return static_cast<int>(taus.size()); }
    const GaussianRational& structure(int i, int j, int k) const {
        int dd = d();
        return c[(static_cast<size_t>(i) * dd + j) * dd + k];
    }
};

/// Exact expansion coefficients C_ij^k for a bracket-closed list of traceless
/// matrices; throws BasisError when the list is dependent or not closed.
std::vector<GaussianRational> structure_constants(const std::vector<ConstMatrix>& basis);

/// Standard basis: off-diagonal units E_ij (upper block first, row-major),
/// then the diagonal differences E_ii - E_{i+1,i+1}. For n = 2 this is
/// tau1 = [[0,1],[0,0]], tau2 = [[0,0],[1,0]], tau3 = [[1,0],[0,-1]].
LieBasis make_sl_basis(int n);

/// Exact dense linear solve helpers (shared by the expression-level solvers).
/// rows x cols matrix in row-major order; returns a solution of A x = b with
/// free variables pinned to zero, or nullopt when the system is inconsistent.
std::optional<std::vector<GaussianRational>> solve_linear(
    int rows, int cols, const std::vector<GaussianRational>& a,
    const std::vector<GaussianRational>& b);

int matrix_rank(int rows, int cols, std::vector<GaussianRational> a);

}  // namespace sdym
