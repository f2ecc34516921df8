#pragma once

#include <deque>
#include <map>
#include <optional>
#include <string>

#include "sdym/expr.hpp"
#include "sdym/matrix.hpp"

namespace sdym {

/// Orientation switches of the rewrite system. The defaults implement the
/// full ideal reduction; individual checks toggle them to probe off-shell
/// behaviour or to keep D_zb^{-1} purely formal.
struct RewriteConfig {
    bool bt_reduce = true;        // J_y -> J X_zb, J_z -> -J X_yb
    bool psdym_reduce = true;     // X_{y yb} -> -X_{z zb} + [X_yb, X_zb]
    bool integrate_exact = true;  // inv_dzbar runs the exactness solver
};

struct GenericCharInfo {
    bool traceless = true;
    bool symmetry_imposed = false;  // orient Phi_{y yb} via the symmetry condition
};

/// A covering variable W materialized for a failed zbar-antiderivative,
/// carrying both defining relations W_zb = dzb and W_yb = dyb.
struct NonlocalDef {
    int id = 0;
    int level = 1;
    Expr dzb;
    Expr dyb;
    bool traceless = true;
    std::string note;
};

class NonlocalRegistry {
  public:
    /// ids are 1-based and stable for the lifetime of the session
    int add(Expr dzb, Expr dyb, int level, bool traceless, std::string note = "");
    const NonlocalDef& info(int id) const;
    bool contains(int id) const { return id >= 1 && id <= static_cast<int>(defs_.size()); }
    int count() const { return static_cast<int>(defs_.size()); }

    /// memo for Frechet images of nonlocals: (atom id, characteristic key) -> id
    std::optional<int> frechet_image(int id, const std::string& chkey) const;
    void set_frechet_image(int id, const std::string& chkey, int image);

  private:
    std::deque<NonlocalDef> defs_;
    std::map<std::pair<int, std::string>, int> frechet_memo_;
};

/// Shared state of one computation: matrix dimension, Lie basis, rewrite
/// configuration, declared generic characteristics and the nonlocal
/// registry. Expressions are plain values and carry no session pointer.
class Session {
  public:
    explicit Session(int n = 2) : basis_(make_sl_basis(n)) {}

    int dim() const { return basis_.n; }
    const LieBasis& basis() const { return basis_; }

    GenericCharInfo char_info(const std::string& name) const {
        auto it = generic_chars.find(name);
        return it == generic_chars.end() ? GenericCharInfo{} : it->second;
    }
    void declare_char(const std::string& name, GenericCharInfo info = {}) {
        generic_chars[name] = info;
    }
    bool char_declared(const std::string& name) const {
        return generic_chars.count(name) != 0;
    }

    RewriteConfig cfg;
    NonlocalRegistry nonlocals;
    std::map<std::string, GenericCharInfo> generic_chars;
};

/// RAII toggle for RewriteConfig fields
class ConfigGuard {
  public:
    ConfigGuard(Session& s, RewriteConfig next) : s_(s), saved_(s.cfg) { s_.cfg = next; }
    ~ConfigGuard() { s_.cfg = saved_; }
    ConfigGuard(const ConfigGuard&) = delete;

  private:
    Session& s_;
    RewriteConfig saved_;
};

}  // namespace sdym
