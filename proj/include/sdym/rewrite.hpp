#pragma once

#include "sdym/expr.hpp"
#include "sdym/session.hpp"

namespace sdym {

/// Atom constructors. atom_expr applies the oriented ideal rewrites, so the
/// result is in normal form:
///   J_y -> J X_zb and J_z -> -J X_yb            (BT, Eq. of motion for J)
///   D_mu Jinv -> -Jinv J_mu Jinv                (all derivatives eliminated)
///   X_{y yb} -> -X_{z zb} + [X_yb, X_zb]        (potential equation)
///   derivatives of constants -> 0
///   W_zb / W_yb -> defining relations of the covering variable
///   Phi_{y yb} -> oriented symmetry condition, when imposed on Phi
Expr atom_expr(Session& s, JetAtom a);

Expr var_expr(Session& s, VarKind k, MultiIndex mi = {});
Expr const_expr(const std::string& name);
Expr tau_expr(Session& s, int k);  // 1-based
Expr generic_expr(Session& s, const std::string& name, MultiIndex mi = {});
Expr nonlocal_expr(Session& s, int id, MultiIndex mi = {});

/// Total derivative; Leibniz over words and trace factors, coordinate powers
/// via D_mu x^nu = delta_mu^nu, opaque integrals via
///   D_zb IDzb(e) = e   and   D_mu IDzb(e) = IDzb(D_mu e), mu != zb.
Expr d(Session& s, const Expr& e, Coord c);
Expr d_multi(Session& s, const Expr& e, const MultiIndex& mi);

/// Formal zbar-antiderivative. When cfg.integrate_exact is set, a linear
/// exactness solver extracts the integrable part: candidates are built by
/// decrementing one zbar-order in each factor (or raising the zbar power),
/// and the system sum c_i D_zb(candidate_i) = e is solved exactly per
/// connected component; unsolved components stay behind opaque nodes. Pure
/// integration "constants" in (y, z) never appear by construction.
Expr inv_dzbar(Session& s, const Expr& e);

/// Matrix trace as a scalar-valued Expr: linear, cyclic on words, zero on
/// every declared-traceless single atom, pushes through IDzb, evaluates
/// words made of known constants exactly.
Expr trace_expr(Session& s, const Expr& e);

/// Rebuild an expression under the current rewrite configuration (used when
/// an Expr was produced under different toggles).
Expr renormalize(Session& s, const Expr& e);

inline bool equals_mod_ideal(const Expr& a, const Expr& b) { return (a - b).is_zero(); }

/// true when the expression contains a nonlocal atom or an opaque integral
bool has_nonlocal_part(const Expr& e);

/// locality in the potential X: no covering variables, no opaque integrals
bool local_in_x(const Expr& e);
/// locality in J: additionally no X-jet free of yb/zb derivatives
bool local_in_j(const Expr& e);

}  // namespace sdym
