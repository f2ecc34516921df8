#include "sdym/expr.hpp"

#include <algorithm>

namespace sdym {

const char* coord_name(Coord c) {
    switch (c) {
        case Coord::Y: return "y";
        case Coord::Z: return "z";
        case Coord::Yb: return "yb";
        case Coord::Zb: return "zb";
    }
    return "?";
}

static int cmp_int(int a, int b) { return a < b ? -1 : (a > b ? 1 : 0); }

static int cmp_mi(const MultiIndex& a, const MultiIndex& b) {
    for (int i = 0; i < 4; ++i)
        if (int c = cmp_int(a.o[i], b.o[i])) return c;
    return 0;
}

static int cmp_atom(const JetAtom& a, const JetAtom& b) {
    if (int c = cmp_int(static_cast<int>(a.kind), static_cast<int>(b.kind))) return c;
    if (int c = a.name.compare(b.name)) return c < 0 ? -1 : 1;
    if (int c = cmp_int(a.id, b.id)) return c;
    return cmp_mi(a.mi, b.mi);
}

int cmp_factor(const Factor& a, const Factor& b) {
    if (int c = cmp_int(static_cast<int>(a.v.index()), static_cast<int>(b.v.index()))) return c;
    if (a.is_atom()) return cmp_atom(a.atom(), b.atom());
    return cmp_monomial_key(*a.integral().content, *b.integral().content);
}

int cmp_word(const std::vector<Factor>& a, const std::vector<Factor>& b) {
    if (int c = cmp_int(static_cast<int>(a.size()), static_cast<int>(b.size()))) return c;
    for (size_t i = 0; i < a.size(); ++i)
        if (int c = cmp_factor(a[i], b[i])) return c;
    return 0;
}

static int cmp_traces(const std::vector<TraceWord>& a, const std::vector<TraceWord>& b) {
    if (int c = cmp_int(static_cast<int>(a.size()), static_cast<int>(b.size()))) return c;
    for (size_t i = 0; i < a.size(); ++i)
        if (int c = cmp_word(a[i].w, b[i].w)) return c;
    return 0;
}

int cmp_monomial_key(const Monomial& a, const Monomial& b) {
    if (int c = cmp_word(a.factors, b.factors)) return c;
    for (int i = 0; i < 4; ++i)
        if (int c = cmp_int(a.pw[i], b.pw[i])) return c;
    return cmp_traces(a.traces, b.traces);
}

bool is_plain(const Factor& f, VarKind k) {
    return f.is_atom() && f.atom().kind == k && f.atom().mi.is_zero();
}

void cancel_inverse_pairs(std::vector<Factor>& w) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            bool jj = is_plain(w[i], VarKind::J) && is_plain(w[i + 1], VarKind::Jinv);
            bool ij = is_plain(w[i], VarKind::Jinv) && is_plain(w[i + 1], VarKind::J);
            if (jj || ij) {
                w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
                changed = true;
                break;
            }
        }
    }
}

void canonicalize_trace(TraceWord& t) {
    size_t n = t.w.size();
    if (n < 2) return;
    size_t best = 0;
    for (size_t r = 1; r < n; ++r) {
        // compare rotation r against rotation best
        int c = 0;
        for (size_t i = 0; i < n && c == 0; ++i)
            c = cmp_factor(t.w[(r + i) % n], t.w[(best + i) % n]);
        if (c < 0) best = r;
    }
    if (best != 0) {
        std::rotate(t.w.begin(), t.w.begin() + static_cast<long>(best), t.w.end());
    }
}

Expr Expr::identity() {
    Monomial m;
    return from_monomials({m});
}

Expr Expr::scalar(GaussianRational v) {
    Monomial m;
    m.coeff = std::move(v);
    return from_monomials({m});
}

Expr Expr::coordinate(Coord c) {
    Monomial m;
    m.power(c) = 1;
    return from_monomials({m});
}

bool Expr::is_identity() const {
    if (ms_.size() != 1) return false;
    const Monomial& m = ms_[0];
    return m.coeff.is_one() && m.factors.empty() && m.traces.empty() &&
           m.pw == std::array<int, 4>{0, 0, 0, 0};
}

Expr Expr::from_monomials(std::vector<Monomial> ms) {
    std::sort(ms.begin(), ms.end(),
              [](const Monomial& a, const Monomial& b) { return cmp_monomial_key(a, b) < 0; });
    Expr out;
    for (auto& m : ms) {
        if (m.coeff.is_zero()) continue;
        if (!out.ms_.empty() && cmp_monomial_key(out.ms_.back(), m) == 0) {
            out.ms_.back().coeff += m.coeff;
            if (out.ms_.back().coeff.is_zero()) out.ms_.pop_back();
        } else {
            out.ms_.push_back(std::move(m));
        }
    }
    return out;
}

Expr operator+(const Expr& a, const Expr& b) {
    std::vector<Monomial> ms = a.ms_;
    ms.insert(ms.end(), b.ms_.begin(), b.ms_.end());
    return Expr::from_monomials(std::move(ms));
}

Expr Expr::operator-() const {
    Expr r = *this;
    for (auto& m : r.ms_) m.coeff = -m.coeff;
    return r;
}

Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }

Expr operator*(const GaussianRational& s, const Expr& e) {
    if (s.is_zero()) return Expr::zero();
    Expr r = e;
    for (auto& m : r.ms_) m.coeff *= s;
    return r;
}

bool operator==(const Expr& a, const Expr& b) {
    if (a.ms_.size() != b.ms_.size()) return false;
    for (size_t i = 0; i < a.ms_.size(); ++i) {
        if (cmp_monomial_key(a.ms_[i], b.ms_[i]) != 0) return false;
        if (a.ms_[i].coeff != b.ms_[i].coeff) return false;
    }
    return true;
}

Expr operator*(const Expr& a, const Expr& b) {
    std::vector<Monomial> out;
    out.reserve(a.ms_.size() * b.ms_.size());
    for (const Monomial& ma : a.ms_)
        for (const Monomial& mb : b.ms_) {
            Monomial m;
            m.coeff = ma.coeff * mb.coeff;
            for (int i = 0; i < 4; ++i) m.pw[i] = ma.pw[i] + mb.pw[i];
            m.traces = ma.traces;
            m.traces.insert(m.traces.end(), mb.traces.begin(), mb.traces.end());
            std::sort(m.traces.begin(), m.traces.end(),
                      [](const TraceWord& x, const TraceWord& y) { return cmp_word(x.w, y.w) < 0; });
            m.factors = ma.factors;
            m.factors.insert(m.factors.end(), mb.factors.begin(), mb.factors.end());
            cancel_inverse_pairs(m.factors);
            out.push_back(std::move(m));
        }
    return Expr::from_monomials(std::move(out));
}

}  // namespace sdym
