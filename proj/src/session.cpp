#include "sdym/session.hpp"

#include "sdym/error.hpp"

namespace sdym {

int NonlocalRegistry::add(Expr dzb, Expr dyb, int level, bool traceless, std::string note) {
    NonlocalDef d;
    d.id = static_cast<int>(defs_.size()) + 1;
    d.level = level;
    d.dzb = std::move(dzb);
    d.dyb = std::move(dyb);
    d.traceless = traceless;
    d.note = std::move(note);
    defs_.push_back(std::move(d));
    return defs_.back().id;
}

const NonlocalDef& NonlocalRegistry::info(int id) const {
    if (!contains(id)) throw Error("unknown nonlocal id W" + std::to_string(id));
    return defs_[static_cast<size_t>(id) - 1];
}

std::optional<int> NonlocalRegistry::frechet_image(int id, const std::string& chkey) const {
    auto it = frechet_memo_.find({id, chkey});
    if (it == frechet_memo_.end()) return std::nullopt;
    return it->second;
}

void NonlocalRegistry::set_frechet_image(int id, const std::string& chkey, int image) {
    frechet_memo_[{id, chkey}] = image;
}

}  // namespace sdym
