#include "kvb/var.hpp"

#include <algorithm>
#include <charconv>

#include "kvb/errors.hpp"

namespace kvb {

VarTable::VarTable() : params_{"hbar"} {}

VarTable::VarTable(std::vector<std::string> vertex_names)
    : params_{"hbar"}, vertices_(std::move(vertex_names)) {
    if (vertices_.size() > Var::kMaxVertices) throw StructuralError("too many vertices");
}

Var VarTable::add_param(const std::string& name) {
    if (auto v = find_param(name)) return *v;
    if (name.empty() || name == "z" || name == "w" || name.find('(') != std::string::npos)
        throw StructuralError("invalid parameter name '" + name + "'");
    params_.push_back(name);
    return Var::param(unsigned(params_.size() - 1));
}

std::optional<Var> VarTable::find_param(std::string_view name) const {
    auto it = std::find(params_.begin(), params_.end(), name);
    if (it == params_.end()) return std::nullopt;
    return Var::param(unsigned(it - params_.begin()));
}

std::optional<unsigned> VarTable::find_vertex(std::string_view name) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), name);
    if (it == vertices_.end()) return std::nullopt;
    return unsigned(it - vertices_.begin());
}

bool VarTable::contains(Var v) const {
    switch (v.kind()) {
        case Var::Kind::Param: return v.param_id() < params_.size();
        case Var::Kind::Formal: return v.formal_id() < 2;
        case Var::Kind::Slot: return v.tag() < kMaxTags && v.vertex() < vertices_.size();
    }
    return false;
}

std::string VarTable::name(Var v) const {
    if (!contains(v)) throw StructuralError("variable not registered in table");
    switch (v.kind()) {
        case Var::Kind::Param: return params_[v.param_id()];
        case Var::Kind::Formal: return v.formal_id() == 0 ? "z" : "w";
        case Var::Kind::Slot:
            return std::string("s(") + tag_letter(v.tag()) + "," + vertices_[v.vertex()] + "," +
                   std::to_string(v.slot_index() + 1) + ")";
    }
    return {};
}

namespace {

std::vector<std::string_view> split_commas(std::string_view s) {
    std::vector<std::string_view> out;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == ',') {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

}  // namespace

Var VarTable::parse(std::string_view name, Tag default_tag) const {
    if (name == "z") return kZ;
    if (name == "w") return kW;
    if (auto p = find_param(name)) return *p;
    if (name.size() > 3 && name.substr(0, 2) == "s(" && name.back() == ')') {
        auto parts = split_commas(name.substr(2, name.size() - 3));
        Tag tag = default_tag;
        if (parts.size() == 3) {
            if (parts[0].size() != 1 || parts[0][0] < 'A' || parts[0][0] >= 'A' + kMaxTags)
                throw StructuralError("bad tag in variable '" + std::string(name) + "'");
            tag = Tag(parts[0][0] - 'A');
            parts.erase(parts.begin());
        }
        if (parts.size() == 2) {
            auto vertex = find_vertex(parts[0]);
            unsigned k = 0;
            auto [ptr, ec] = std::from_chars(parts[1].data(), parts[1].data() + parts[1].size(), k);
            if (vertex && ec == std::errc() && ptr == parts[1].data() + parts[1].size() && k >= 1 &&
                k <= Var::kMaxSlots)
                return Var::slot(tag, *vertex, k - 1);
        }
    }
    throw StructuralError("unknown variable '" + std::string(name) + "'");
}

}  // namespace kvb
