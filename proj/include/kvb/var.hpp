#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kvb {

using Tag = std::uint8_t;

inline constexpr Tag kTagA = 0;
inline constexpr Tag kTagB = 1;
inline constexpr Tag kTagC = 2;
inline constexpr Tag kTagD = 3;
inline constexpr Tag kMaxTags = 26;

// A variable packed into 32 bits. The numeric order of the code is the
// variable order used by the monomial order: parameters, then formal
// variables, then slot variables by (tag, vertex, slot).
class Var {
public:
    enum class Kind : std::uint8_t { Param = 0, Formal = 1, Slot = 2 };

    constexpr Var() = default;

    static constexpr Var param(unsigned id) { return Var(id); }
    static constexpr Var formal(unsigned id) { return Var((1u << 30) | id); }
    static constexpr Var slot(Tag tag, unsigned vertex, unsigned slot) {
        return Var((2u << 30) | (unsigned(tag) << 22) | (vertex << 12) | slot);
    }
    static constexpr Var from_code(std::uint32_t code) { return Var(code); }

    constexpr std::uint32_t code() const { return code_; }
    constexpr Kind kind() const { return Kind(code_ >> 30); }
    constexpr bool is_param() const { return kind() == Kind::Param; }
    constexpr bool is_formal() const { return kind() == Kind::Formal; }
    constexpr bool is_slot() const { return kind() == Kind::Slot; }

    constexpr unsigned param_id() const { return code_ & 0x3fffffffu; }
    constexpr unsigned formal_id() const { return code_ & 0x3fffffffu; }
    constexpr Tag tag() const { return Tag((code_ >> 22) & 0xffu); }
    constexpr unsigned vertex() const { return (code_ >> 12) & 0x3ffu; }
    constexpr unsigned slot_index() const { return code_ & 0xfffu; }

    constexpr Var with_tag(Tag t) const { return slot(t, vertex(), slot_index()); }

    constexpr auto operator<=>(const Var&) const = default;

    static constexpr unsigned kMaxVertices = 1024;
    static constexpr unsigned kMaxSlots = 4096;

private:
    constexpr explicit Var(std::uint32_t code) : code_(code) {}
    std::uint32_t code_ = 0;
};

inline constexpr Var kHbar = Var::param(0);
inline constexpr Var kZ = Var::formal(0);
inline constexpr Var kW = Var::formal(1);

inline char tag_letter(Tag t) { return char('A' + t); }

// Names of parameters and vertices; used for serialization and parsing.
// Parameter 0 is always "hbar". Slot variables print as s(T,v,k) with a
// 1-based slot index k.
class VarTable {
public:
    VarTable();
    explicit VarTable(std::vector<std::string> vertex_names);

    Var add_param(const std::string& name);
    std::optional<Var> find_param(std::string_view name) const;
    const std::vector<std::string>& params() const { return params_; }

    const std::vector<std::string>& vertices() const { return vertices_; }
    std::optional<unsigned> find_vertex(std::string_view name) const;

    bool contains(Var v) const;
    std::string name(Var v) const;

    // Accepts parameter names, "z", "w", "s(T,v,k)" and "s(v,k)"; the last
    // form takes default_tag.
    Var parse(std::string_view name, Tag default_tag = kTagA) const;

private:
    std::vector<std::string> params_;
    std::vector<std::string> vertices_;
};

}  // namespace kvb
