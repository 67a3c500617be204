#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "kvb/monomial.hpp"

namespace kvb {

enum class QuiverKind { Plain, Doubled, Tripled };

// Sign of the bilinear class. VertexMinusEdge is the default; with it the
// full-form Hall kernel is the shuffle kernel whose products are Laurent
// polynomials. EdgeMinusVertex is the literal sign.
enum class SignConvention { VertexMinusEdge, EdgeMinusVertex };

struct Edge {
    unsigned src = 0;
    unsigned dst = 0;
    Monomial weight;
};

class DimVector {
public:
    DimVector() = default;
    explicit DimVector(std::vector<unsigned> dims) : dims_(std::move(dims)) {}
    static DimVector zero(size_t n) { return DimVector(std::vector<unsigned>(n, 0)); }

    size_t size() const { return dims_.size(); }
    unsigned operator[](size_t i) const { return dims_[i]; }
    const std::vector<unsigned>& dims() const { return dims_; }
    unsigned total() const;
    bool is_zero() const { return total() == 0; }
    // Componentwise a <= b.
    bool fits_in(const DimVector& b) const;

    DimVector operator+(const DimVector& o) const;
    // Throws if some component would become negative.
    DimVector operator-(const DimVector& o) const;
    auto operator<=>(const DimVector&) const = default;

    std::string str() const;

private:
    std::vector<unsigned> dims_;
};

class Quiver {
public:
    // A plain quiver; edge weights are parameter names ("hbar" allowed).
    Quiver(std::vector<std::string> vertices, const std::vector<std::tuple<unsigned, unsigned, std::string>>& edges);

    static Quiver edgeless(unsigned n = 1);
    static Quiver jordan();
    static Quiver a2();

    static Quiver from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    QuiverKind kind() const { return kind_; }
    SignConvention convention() const { return convention_; }
    Quiver with_convention(SignConvention c) const;
    Quiver extend(QuiverKind mode) const;

    const VarTable& vars() const { return vars_; }
    unsigned num_vertices() const { return unsigned(vars_.vertices().size()); }
    const std::vector<Edge>& base_edges() const { return base_; }
    // All edges of the (possibly extended) quiver: base edges, then the
    // duals e*: j -> i of weight hbar/a_e, then the loops of weight 1/hbar.
    std::vector<Edge> edges() const;

    DimVector dim(std::vector<unsigned> d) const;

private:
    Quiver() = default;

    VarTable vars_;
    std::vector<Edge> base_;
    QuiverKind kind_ = QuiverKind::Plain;
    SignConvention convention_ = SignConvention::VertexMinusEdge;
};

const char* to_string(QuiverKind k);
QuiverKind kind_from_string(const std::string& s);
const char* to_string(SignConvention c);
SignConvention convention_from_string(const std::string& s);

// All (a, b) with a + b = alpha, ordered lexicographically by a.
std::vector<std::pair<DimVector, DimVector>> splittings(const DimVector& alpha);

struct FourSplit {
    DimVector alpha1, alpha2, beta1, beta2;
};

// All (a1, a2, b1, b2) with a1 + a2 = alpha, b1 + b2 = beta, a1 + b1 = gamma1,
// a2 + b2 = gamma2; ordered lexicographically by a1.
std::vector<FourSplit> splittings(const DimVector& alpha, const DimVector& beta, const DimVector& gamma1,
                                  const DimVector& gamma2);

// All dimension vectors on n vertices with components <= max_component and
// total <= max_total, in lexicographic order.
std::vector<DimVector> dims_up_to(size_t n, unsigned max_component, unsigned max_total);

}  // namespace kvb
