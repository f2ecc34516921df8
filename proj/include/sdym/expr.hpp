#pragma once

#include <array>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "sdym/rational.hpp"

namespace sdym {

/// The four base coordinates y, z, ybar, zbar in their fixed total order.
enum class Coord : int { Y = 0, Z = 1, Yb = 2, Zb = 3 };

constexpr std::array<Coord, 4> all_coords{Coord::Y, Coord::Z, Coord::Yb, Coord::Zb};

const char* coord_name(Coord c);  // "y" "z" "yb" "zb"

/// Derivative orders per coordinate.
struct MultiIndex {
    std::array<int, 4> o{0, 0, 0, 0};

    int& operator[](Coord c) { return o[static_cast<int>(c)]; }
    int operator[](Coord c) const { return o[static_cast<int>(c)]; }
    int total() const { return o[0] + o[1] + o[2] + o[3]; }
    bool is_zero() const { return total() == 0; }
    MultiIndex plus(Coord c) const {
        MultiIndex r = *this;
        ++r[c];
        return r;
    }
    MultiIndex minus(Coord c) const {
        MultiIndex r = *this;
        --r[c];
        return r;
    }
    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

enum class VarKind : int { J = 0, Jinv = 1, X = 2, Cst = 3, Generic = 4, Nonlocal = 5 };

/// A dependent variable together with a derivative multi-index.
struct JetAtom {
    VarKind kind;
    std::string name;  // constant or generic-characteristic name; empty otherwise
    int id = 0;        // nonlocal registry id; 0 otherwise
    MultiIndex mi;

    friend bool operator==(const JetAtom&, const JetAtom&) = default;
};

struct Monomial;

/// Formal antiderivative D_zb^{-1} of a single monomial for which the
/// exactness solver found no antiderivative. The content has unit
/// coefficient and no y/z/yb coordinate part (those are pulled outside).
struct OpaqueIntegral {
    std::shared_ptr<const Monomial> content;
};

struct Factor {
    std::variant<JetAtom, OpaqueIntegral> v;

    bool is_atom() const { return v.index() == 0; }
    const JetAtom& atom() const { return std::get<JetAtom>(v); }
    JetAtom& atom() { return std::get<JetAtom>(v); }
    const OpaqueIntegral& integral() const { return std::get<OpaqueIntegral>(v); }
};

/// Scalar factor tr(f1 f2 ... fk), stored with the cyclically-minimal
/// rotation of the word.
struct TraceWord {
    std::vector<Factor> w;
};

/// coefficient * y^a z^b yb^c zb^d * (trace factors) * (ordered matrix word)
struct Monomial {
    GaussianRational coeff{1};
    std::array<int, 4> pw{0, 0, 0, 0};
    std::vector<TraceWord> traces;  // kept sorted
    std::vector<Factor> factors;

    int& power(Coord c) { return pw[static_cast<int>(c)]; }
    int power(Coord c) const { return pw[static_cast<int>(c)]; }
};

int cmp_factor(const Factor& a, const Factor& b);
int cmp_word(const std::vector<Factor>& a, const std::vector<Factor>& b);
/// key comparison ignoring the coefficient (graded: word length first)
int cmp_monomial_key(const Monomial& a, const Monomial& b);

/// Canonical sum of monomials: sorted by key, like terms merged, zero
/// coefficients dropped. Arithmetic here is config-independent; everything
/// that rewrites atoms lives in rewrite.hpp.
class Expr {
  public:
    Expr() = default;

    static Expr zero() { return {}; }
    static Expr identity();
    static Expr scalar(GaussianRational v);
    static Expr coordinate(Coord c);
    static Expr from_monomials(std::vector<Monomial> ms);

    bool is_zero() const { return ms_.empty(); }
    bool is_identity() const;
    const std::vector<Monomial>& monomials() const { return ms_; }
    size_t size() const { return ms_.size(); }

    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    Expr operator-() const;
    friend Expr operator*(const GaussianRational& s, const Expr& e);
    friend bool operator==(const Expr& a, const Expr& b);
    friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

    /// noncommutative product; cancels J.Jinv / Jinv.J pairs that form at
    /// the seams (both factors underived)
    friend Expr operator*(const Expr& a, const Expr& b);

  private:
    std::vector<Monomial> ms_;
};

inline Expr comm(const Expr& a, const Expr& b) { return a * b - b * a; }

/// true when a word position holds an underived J (resp. Jinv) atom
bool is_plain(const Factor& f, VarKind k);

/// remove adjacent J.Jinv / Jinv.J pairs anywhere in the word
void cancel_inverse_pairs(std::vector<Factor>& w);

/// cyclically rotate a trace word to its minimal form
void canonicalize_trace(TraceWord& t);

}  // namespace sdym
