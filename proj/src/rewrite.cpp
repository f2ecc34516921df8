#include "sdym/rewrite.hpp"

#include <algorithm>
#include <map>

#include "sdym/error.hpp"

namespace sdym {

namespace {

Expr mono_expr(Monomial m) { return Expr::from_monomials({std::move(m)}); }

Expr atom_mono(JetAtom a) {
    Monomial m;
    m.factors.push_back(Factor{std::move(a)});
    return mono_expr(std::move(m));
}

Coord first_nonzero(const MultiIndex& mi) {
    for (Coord c : all_coords)
        if (mi[c] > 0) return c;
    throw Error("empty multi-index");
}

std::optional<ConstMatrix> known_const(Session& s, const std::string& name) {
    if (name.rfind("tau", 0) == 0) {
        int k = std::atoi(name.c_str() + 3);
        if (k >= 1 && k <= s.basis().d()) return s.basis().taus[static_cast<size_t>(k) - 1];
    }
    return std::nullopt;
}

}  // namespace

Expr var_expr(Session& s, VarKind k, MultiIndex mi) {
    return atom_expr(s, JetAtom{k, "", 0, mi});
}

Expr const_expr(const std::string& name) { return atom_mono(JetAtom{VarKind::Cst, name, 0, {}}); }

Expr tau_expr(Session& s, int k) {
    if (k < 1 || k > s.basis().d()) throw Error("tau index out of range");
    return const_expr("tau" + std::to_string(k));
}

Expr generic_expr(Session& s, const std::string& name, MultiIndex mi) {
    return atom_expr(s, JetAtom{VarKind::Generic, name, 0, mi});
}

Expr nonlocal_expr(Session& s, int id, MultiIndex mi) {
    return atom_expr(s, JetAtom{VarKind::Nonlocal, "", id, mi});
}

Expr atom_expr(Session& s, JetAtom a) {
    switch (a.kind) {
        case VarKind::Cst:
            if (!a.mi.is_zero()) return Expr::zero();
            return atom_mono(std::move(a));

        case VarKind::J: {
            if (s.cfg.bt_reduce && (a.mi[Coord::Y] > 0 || a.mi[Coord::Z] > 0)) {
                if (a.mi[Coord::Y] > 0) {
                    Expr base = var_expr(s, VarKind::J) * var_expr(s, VarKind::X, MultiIndex{}.plus(Coord::Zb));
                    return d_multi(s, base, a.mi.minus(Coord::Y));
                }
                Expr base = -(var_expr(s, VarKind::J) * var_expr(s, VarKind::X, MultiIndex{}.plus(Coord::Yb)));
                return d_multi(s, base, a.mi.minus(Coord::Z));
            }
            return atom_mono(std::move(a));
        }

        case VarKind::Jinv: {
            if (!a.mi.is_zero()) {
                Coord c = first_nonzero(a.mi);
                Expr jinv = atom_mono(JetAtom{VarKind::Jinv, "", 0, {}});
                Expr base = -(jinv * atom_expr(s, JetAtom{VarKind::J, "", 0, MultiIndex{}.plus(c)}) * jinv);
                return d_multi(s, base, a.mi.minus(c));
            }
            return atom_mono(std::move(a));
        }

        case VarKind::X: {
            if (s.cfg.psdym_reduce && a.mi[Coord::Y] > 0 && a.mi[Coord::Yb] > 0) {
                MultiIndex rest = a.mi.minus(Coord::Y).minus(Coord::Yb);
                MultiIndex zzb = MultiIndex{}.plus(Coord::Z).plus(Coord::Zb);
                Expr xyb = var_expr(s, VarKind::X, MultiIndex{}.plus(Coord::Yb));
                Expr xzb = var_expr(s, VarKind::X, MultiIndex{}.plus(Coord::Zb));
                Expr base = -var_expr(s, VarKind::X, zzb) + comm(xyb, xzb);
                return d_multi(s, base, rest);
            }
            return atom_mono(std::move(a));
        }

        case VarKind::Generic: {
            GenericCharInfo info = s.char_info(a.name);
            if (info.symmetry_imposed && a.mi[Coord::Y] > 0 && a.mi[Coord::Yb] > 0) {
                MultiIndex rest = a.mi.minus(Coord::Y).minus(Coord::Yb);
                MultiIndex zzb = MultiIndex{}.plus(Coord::Z).plus(Coord::Zb);
                Expr xyb = var_expr(s, VarKind::X, MultiIndex{}.plus(Coord::Yb));
                Expr xzb = var_expr(s, VarKind::X, MultiIndex{}.plus(Coord::Zb));
                Expr g_yb = atom_mono(JetAtom{VarKind::Generic, a.name, 0, MultiIndex{}.plus(Coord::Yb)});
                Expr g_zb = atom_mono(JetAtom{VarKind::Generic, a.name, 0, MultiIndex{}.plus(Coord::Zb)});
                Expr base = -atom_mono(JetAtom{VarKind::Generic, a.name, 0, zzb}) - comm(xzb, g_yb) + comm(xyb, g_zb);
                return d_multi(s, base, rest);
            }
            return atom_mono(std::move(a));
        }

        case VarKind::Nonlocal: {
            const NonlocalDef& def = s.nonlocals.info(a.id);
            if (a.mi[Coord::Zb] > 0) return d_multi(s, def.dzb, a.mi.minus(Coord::Zb));
            if (a.mi[Coord::Yb] > 0) return d_multi(s, def.dyb, a.mi.minus(Coord::Yb));
            return atom_mono(std::move(a));
        }
    }
    throw Error("unreachable atom kind");
}

namespace {

/// derivative of a single word factor; may expand into a full expression
Expr d_factor(Session& s, const Factor& f, Coord c) {
    if (f.is_atom()) {
        JetAtom a = f.atom();
        a.mi = a.mi.plus(c);
        return atom_expr(s, a);
    }
    const Monomial& content = *f.integral().content;
    if (c == Coord::Zb) return mono_expr(content);
    return inv_dzbar(s, d(s, mono_expr(content), c));
}

Expr trace_word_expr(Session& s, std::vector<Factor> w);

/// trace of an arbitrary expression (linear extension of trace_word_expr)
Expr trace_of(Session& s, const Expr& e) {
    Expr out;
    for (const Monomial& m : e.monomials()) {
        Monomial base;
        base.coeff = m.coeff;
        base.pw = m.pw;
        base.traces = m.traces;
        out = out + mono_expr(base) * trace_word_expr(s, m.factors);
    }
    return out;
}

Expr trace_word_expr(Session& s, std::vector<Factor> w) {
    if (w.empty()) return Expr::scalar(GaussianRational(s.dim()));
    if (w.size() == 1) {
        if (!w[0].is_atom()) {
            // tr(IDzb(m)) = IDzb(tr m)
            return inv_dzbar(s, trace_of(s, mono_expr(*w[0].integral().content)));
        }
        const JetAtom& a = w[0].atom();
        switch (a.kind) {
            case VarKind::X:
                return Expr::zero();  // the session enforces tr X = 0
            case VarKind::Cst:
                return Expr::zero();  // all named constants are sl(N, C)-valued
            case VarKind::Generic:
                if (s.char_info(a.name).traceless) return Expr::zero();
                break;
            case VarKind::Nonlocal:
                if (s.nonlocals.info(a.id).traceless) return Expr::zero();
                break;
            default:
                break;
        }
    } else {
        // exact evaluation for words of known constant matrices
        bool all_known = true;
        for (const Factor& f : w) {
            if (!f.is_atom() || f.atom().kind != VarKind::Cst || !f.atom().mi.is_zero() ||
                !known_const(s, f.atom().name)) {
                all_known = false;
                break;
            }
        }
        if (all_known) {
            ConstMatrix p = *known_const(s, w[0].atom().name);
            for (size_t i = 1; i < w.size(); ++i) p = p * *known_const(s, w[i].atom().name);
            return Expr::scalar(p.trace());
        }
    }
    TraceWord t{std::move(w)};
    canonicalize_trace(t);
    Monomial m;
    m.traces.push_back(std::move(t));
    return mono_expr(std::move(m));
}

Expr word_segment(const std::vector<Factor>& w, size_t from, size_t to) {
    Monomial m;
    m.factors.assign(w.begin() + static_cast<long>(from), w.begin() + static_cast<long>(to));
    return mono_expr(std::move(m));
}

}  // namespace

Expr trace_expr(Session& s, const Expr& e) { return trace_of(s, e); }

Expr d(Session& s, const Expr& e, Coord c) {
    Expr out;
    for (const Monomial& m : e.monomials()) {
        // coordinate power
        if (m.power(c) > 0) {
            Monomial t = m;
            t.coeff *= GaussianRational(m.power(c));
            --t.power(c);
            out = out + mono_expr(std::move(t));
        }
        // word factors
        for (size_t i = 0; i < m.factors.size(); ++i) {
            Expr df = d_factor(s, m.factors[i], c);
            if (df.is_zero()) continue;
            Monomial head;
            head.coeff = m.coeff;
            head.pw = m.pw;
            head.traces = m.traces;
            Expr term = mono_expr(head) * word_segment(m.factors, 0, i) * df *
                        word_segment(m.factors, i + 1, m.factors.size());
            out = out + term;
        }
        // trace factors
        for (size_t ti = 0; ti < m.traces.size(); ++ti) {
            const std::vector<Factor>& tw = m.traces[ti].w;
            for (size_t p = 0; p < tw.size(); ++p) {
                Expr df = d_factor(s, tw[p], c);
                if (df.is_zero()) continue;
                Monomial host = m;
                host.traces.erase(host.traces.begin() + static_cast<long>(ti));
                for (const Monomial& dm : df.monomials()) {
                    std::vector<Factor> w2(tw.begin(), tw.begin() + static_cast<long>(p));
                    w2.insert(w2.end(), dm.factors.begin(), dm.factors.end());
                    w2.insert(w2.end(), tw.begin() + static_cast<long>(p) + 1, tw.end());
                    Monomial carry;  // scalar payload of the differentiated factor
                    carry.coeff = dm.coeff;
                    carry.pw = dm.pw;
                    carry.traces = dm.traces;
                    out = out + mono_expr(host) * mono_expr(carry) * trace_word_expr(s, std::move(w2));
                }
            }
        }
    }
    return out;
}

Expr d_multi(Session& s, const Expr& e, const MultiIndex& mi) {
    Expr r = e;
    for (Coord c : all_coords)
        for (int k = 0; k < mi[c]; ++k) r = d(s, r, c);
    return r;
}

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) {
        for (int i = 0; i < n; ++i) p[i] = i;
    }
    int find(int a) { return p[a] == a ? a : p[a] = find(p[a]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

/// candidates for an antiderivative of monomial m: raise the zbar power, or
/// lower one zbar-order on any differentiated factor
std::vector<Monomial> antideriv_candidates(const Monomial& m) {
    std::vector<Monomial> out;
    Monomial up = m;
    up.coeff = GaussianRational(1);
    ++up.power(Coord::Zb);
    out.push_back(std::move(up));
    for (size_t i = 0; i < m.factors.size(); ++i) {
        if (!m.factors[i].is_atom()) continue;
        const JetAtom& a = m.factors[i].atom();
        if (a.mi[Coord::Zb] == 0) continue;
        Monomial c = m;
        c.coeff = GaussianRational(1);
        c.factors[i].atom().mi = a.mi.minus(Coord::Zb);
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace

Expr inv_dzbar(Session& s, const Expr& e) {
    if (e.is_zero()) return Expr::zero();

    Expr exact;
    Expr remainder = e;

    if (s.cfg.integrate_exact) {
        // gather candidates
        std::vector<Monomial> cands;
        for (const Monomial& m : e.monomials()) {
            auto cs = antideriv_candidates(m);
            cands.insert(cands.end(), cs.begin(), cs.end());
        }
        std::sort(cands.begin(), cands.end(),
                  [](const Monomial& a, const Monomial& b) { return cmp_monomial_key(a, b) < 0; });
        cands.erase(std::unique(cands.begin(), cands.end(),
                                [](const Monomial& a, const Monomial& b) {
                                    return cmp_monomial_key(a, b) == 0;
                                }),
                    cands.end());

        // expand derivatives and index rows by monomial key
        std::vector<Expr> dcand(cands.size());
        std::map<const Monomial*, int, bool (*)(const Monomial*, const Monomial*)> dummy(
            [](const Monomial* a, const Monomial* b) { return cmp_monomial_key(*a, *b) < 0; });
        std::vector<Monomial> row_keys;
        auto row_of = [&](const Monomial& m) -> int {
            for (size_t i = 0; i < row_keys.size(); ++i)
                if (cmp_monomial_key(row_keys[i], m) == 0) return static_cast<int>(i);
            row_keys.push_back(m);
            row_keys.back().coeff = GaussianRational(1);
            return static_cast<int>(row_keys.size()) - 1;
        };
        for (const Monomial& m : e.monomials()) row_of(m);
        std::vector<std::vector<std::pair<int, GaussianRational>>> cols(cands.size());
        for (size_t k = 0; k < cands.size(); ++k) {
            dcand[k] = d(s, mono_expr(cands[k]), Coord::Zb);
            for (const Monomial& dm : dcand[k].monomials())
                cols[k].push_back({row_of(dm), dm.coeff});
        }

        // connected components over rows and candidates
        int nrows = static_cast<int>(row_keys.size());
        int ncand = static_cast<int>(cands.size());
        UnionFind uf(nrows + ncand);
        for (int k = 0; k < ncand; ++k)
            for (auto& [r, v] : cols[k]) uf.unite(nrows + k, r);

        std::vector<GaussianRational> b(nrows);
        for (const Monomial& m : e.monomials()) b[row_of(m)] = m.coeff;

        std::map<int, std::pair<std::vector<int>, std::vector<int>>> comps;  // root -> rows, cands
        for (int r = 0; r < nrows; ++r) comps[uf.find(r)].first.push_back(r);
        for (int k = 0; k < ncand; ++k) comps[uf.find(nrows + k)].second.push_back(k);

        std::vector<GaussianRational> sol(cands.size());
        for (auto& [root, rc] : comps) {
            auto& [rows, cs] = rc;
            if (cs.empty()) continue;
            bool has_rhs = false;
            for (int r : rows)
                if (!b[r].is_zero()) has_rhs = true;
            if (!has_rhs) continue;
            std::vector<GaussianRational> a(rows.size() * cs.size());
            std::vector<GaussianRational> bb(rows.size());
            std::map<int, int> rpos;
            for (size_t i = 0; i < rows.size(); ++i) {
                rpos[rows[i]] = static_cast<int>(i);
                bb[i] = b[rows[i]];
            }
            for (size_t j = 0; j < cs.size(); ++j)
                for (auto& [r, v] : cols[cs[j]]) {
                    auto it = rpos.find(r);
                    if (it != rpos.end()) a[static_cast<size_t>(it->second) * cs.size() + j] = v;
                }
            auto x = solve_linear(static_cast<int>(rows.size()), static_cast<int>(cs.size()), a, bb);
            if (!x) continue;  // component not exact; stays formal
            for (size_t j = 0; j < cs.size(); ++j) sol[cs[j]] = (*x)[j];
        }

        for (size_t k = 0; k < cands.size(); ++k) {
            if (sol[k].is_zero()) continue;
            exact = exact + sol[k] * mono_expr(cands[k]);
        }
        if (!exact.is_zero()) remainder = e - d(s, exact, Coord::Zb);
    }

    Expr out = exact;
    for (const Monomial& m : remainder.monomials()) {
        auto content = std::make_shared<Monomial>();
        content->coeff = GaussianRational(1);
        content->pw = {0, 0, 0, m.pw[3]};
        content->factors = m.factors;
        content->traces = m.traces;
        Monomial host;
        host.coeff = m.coeff;
        host.pw = {m.pw[0], m.pw[1], m.pw[2], 0};
        host.factors.push_back(Factor{OpaqueIntegral{std::move(content)}});
        out = out + mono_expr(std::move(host));
    }
    return out;
}

Expr renormalize(Session& s, const Expr& e) {
    Expr out;
    for (const Monomial& m : e.monomials()) {
        Monomial base;
        base.coeff = m.coeff;
        base.pw = m.pw;
        Expr term = mono_expr(base);
        for (const TraceWord& t : m.traces) {
            Expr inner = Expr::identity();
            for (const Factor& f : t.w) {
                if (f.is_atom())
                    inner = inner * atom_expr(s, f.atom());
                else
                    inner = inner * inv_dzbar(s, renormalize(s, mono_expr(*f.integral().content)));
            }
            term = term * trace_of(s, inner);
        }
        for (const Factor& f : m.factors) {
            if (f.is_atom())
                term = term * atom_expr(s, f.atom());
            else
                term = term * inv_dzbar(s, renormalize(s, mono_expr(*f.integral().content)));
        }
        out = out + term;
    }
    return out;
}

namespace {

bool word_has_nonlocal(const std::vector<Factor>& w) {
    for (const Factor& f : w) {
        if (!f.is_atom()) return true;
        if (f.atom().kind == VarKind::Nonlocal) return true;
    }
    return false;
}

bool word_has_j_nonlocal(const std::vector<Factor>& w) {
    for (const Factor& f : w) {
        if (!f.is_atom()) return true;
        const JetAtom& a = f.atom();
        if (a.kind == VarKind::Nonlocal) return true;
        if (a.kind == VarKind::X && a.mi[Coord::Yb] == 0 && a.mi[Coord::Zb] == 0) return true;
    }
    return false;
}

}  // namespace

bool has_nonlocal_part(const Expr& e) {
    for (const Monomial& m : e.monomials()) {
        if (word_has_nonlocal(m.factors)) return true;
        for (const TraceWord& t : m.traces)
            if (word_has_nonlocal(t.w)) return true;
    }
    return false;
}

bool local_in_x(const Expr& e) { return !has_nonlocal_part(e); }

bool local_in_j(const Expr& e) {
    for (const Monomial& m : e.monomials()) {
        if (word_has_j_nonlocal(m.factors)) return false;
        for (const TraceWord& t : m.traces)
            if (word_has_j_nonlocal(t.w)) return false;
    }
    return true;
}

}  // namespace sdym
