#include "kvb/quiver.hpp"

#include <tuple>

#include "kvb/errors.hpp"

namespace kvb {

unsigned DimVector::total() const {
    unsigned t = 0;
    for (unsigned d : dims_) t += d;
    return t;
}

bool DimVector::fits_in(const DimVector& b) const {
    if (b.size() != size()) throw StructuralError("dimension vectors of different lengths");
    for (size_t i = 0; i < size(); ++i)
        if (dims_[i] > b.dims_[i]) return false;
    return true;
}

DimVector DimVector::operator+(const DimVector& o) const {
    if (o.size() != size()) throw StructuralError("dimension vectors of different lengths");
    DimVector r = *this;
    for (size_t i = 0; i < size(); ++i) r.dims_[i] += o.dims_[i];
    return r;
}

DimVector DimVector::operator-(const DimVector& o) const {
    if (!o.fits_in(*this)) throw StructuralError("negative dimension vector");
    DimVector r = *this;
    for (size_t i = 0; i < size(); ++i) r.dims_[i] -= o.dims_[i];
    return r;
}

std::string DimVector::str() const {
    std::string s = "(";
    for (size_t i = 0; i < size(); ++i) s += (i ? "," : "") + std::to_string(dims_[i]);
    return s + ")";
}

Quiver::Quiver(std::vector<std::string> vertices,
               const std::vector<std::tuple<unsigned, unsigned, std::string>>& edges)
    : vars_(std::move(vertices)) {
    for (size_t i = 0; i < vars_.vertices().size(); ++i)
        for (size_t j = 0; j < i; ++j)
            if (vars_.vertices()[i] == vars_.vertices()[j]) throw StructuralError("duplicate vertex name");
    for (const auto& [src, dst, weight] : edges) {
        if (src >= num_vertices() || dst >= num_vertices()) throw StructuralError("edge endpoint is not a vertex");
        base_.push_back({src, dst, Monomial::var(vars_.add_param(weight))});
    }
}

Quiver Quiver::edgeless(unsigned n) {
    std::vector<std::string> v;
    for (unsigned i = 1; i <= n; ++i) v.push_back(std::to_string(i));
    return Quiver(v, {});
}

Quiver Quiver::jordan() { return Quiver({"1"}, {{0, 0, "a"}}); }

Quiver Quiver::a2() { return Quiver({"1", "2"}, {{0, 1, "a"}}); }

Quiver Quiver::with_convention(SignConvention c) const {
    Quiver q = *this;
    q.convention_ = c;
    return q;
}

Quiver Quiver::extend(QuiverKind mode) const {
    if (kind_ != QuiverKind::Plain) throw StructuralError("only a plain quiver can be extended");
    Quiver q = *this;
    q.kind_ = mode;
    return q;
}

std::vector<Edge> Quiver::edges() const {
    std::vector<Edge> out = base_;
    if (kind_ == QuiverKind::Plain) return out;
    for (const auto& e : base_) out.push_back({e.dst, e.src, Monomial::var(kHbar) / e.weight});
    if (kind_ == QuiverKind::Tripled)
        for (unsigned i = 0; i < num_vertices(); ++i) out.push_back({i, i, Monomial::var(kHbar, -1)});
    return out;
}

DimVector Quiver::dim(std::vector<unsigned> d) const {
    if (d.size() != num_vertices()) throw StructuralError("dimension vector length does not match the quiver");
    return DimVector(std::move(d));
}

const char* to_string(QuiverKind k) {
    switch (k) {
        case QuiverKind::Plain: return "plain";
        case QuiverKind::Doubled: return "double";
        case QuiverKind::Tripled: return "triple";
    }
    return "?";
}

QuiverKind kind_from_string(const std::string& s) {
    if (s == "plain") return QuiverKind::Plain;
    if (s == "double" || s == "doubled") return QuiverKind::Doubled;
    if (s == "triple" || s == "tripled") return QuiverKind::Tripled;
    throw StructuralError("unknown quiver kind '" + s + "'");
}

const char* to_string(SignConvention c) {
    return c == SignConvention::VertexMinusEdge ? "vertex-minus-edge" : "edge-minus-vertex";
}

SignConvention convention_from_string(const std::string& s) {
    if (s == "vertex-minus-edge" || s == "default") return SignConvention::VertexMinusEdge;
    if (s == "edge-minus-vertex" || s == "literal") return SignConvention::EdgeMinusVertex;
    throw StructuralError("unknown sign convention '" + s + "'");
}

Quiver Quiver::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.at("vertices").is_array())
        throw StructuralError("quiver JSON needs a \"vertices\" array");
    std::vector<std::string> vertices;
    for (const auto& v : j.at("vertices")) {
        if (v.is_string())
            vertices.push_back(v.get<std::string>());
        else if (v.is_number_integer())
            vertices.push_back(std::to_string(v.get<long long>()));
        else
            throw StructuralError("vertex names must be strings");
        if (vertices.back().empty() || vertices.back().find_first_of(",()") != std::string::npos)
            throw StructuralError("vertex name '" + vertices.back() + "' may not be empty or contain ',', '(' or ')'");
    }
    VarTable probe(vertices);
    auto vertex = [&](const nlohmann::json& v) {
        std::string name = v.is_string() ? v.get<std::string>() : v.dump();
        auto idx = probe.find_vertex(name);
        if (!idx) throw StructuralError("edge endpoint '" + name + "' is not a vertex");
        return *idx;
    };
    std::vector<std::tuple<unsigned, unsigned, std::string>> edges;
    if (j.contains("edges")) {
        size_t n = 0;
        for (const auto& e : j.at("edges")) {
            ++n;
            if (!e.contains("src") || !e.contains("dst")) throw StructuralError("edge needs \"src\" and \"dst\"");
            std::string w = e.contains("weight") ? e.at("weight").get<std::string>() : "a" + std::to_string(n);
            edges.emplace_back(vertex(e.at("src")), vertex(e.at("dst")), w);
        }
    }
    Quiver q(vertices, edges);
    if (j.contains("kind")) {
        QuiverKind k = kind_from_string(j.at("kind").get<std::string>());
        if (k != QuiverKind::Plain) q = q.extend(k);
    }
    if (j.contains("convention")) q.convention_ = convention_from_string(j.at("convention").get<std::string>());
    return q;
}

nlohmann::json Quiver::to_json() const {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : base_) {
        edges.push_back({{"src", vars_.vertices()[e.src]},
                         {"dst", vars_.vertices()[e.dst]},
                         {"weight", vars_.name(e.weight.entries().front().first)}});
    }
    return {{"vertices", vars_.vertices()},
            {"edges", edges},
            {"kind", to_string(kind_)},
            {"convention", to_string(convention_)}};
}

std::vector<std::pair<DimVector, DimVector>> splittings(const DimVector& alpha) {
    std::vector<std::pair<DimVector, DimVector>> out;
    std::vector<unsigned> a(alpha.size(), 0);
    while (true) {
        DimVector first(a);
        out.emplace_back(first, alpha - first);
        size_t i = alpha.size();
        while (i > 0) {
            --i;
            if (a[i] < alpha[i]) {
                ++a[i];
                break;
            }
            a[i] = 0;
            if (i == 0) return out;
        }
        if (alpha.size() == 0) return out;
    }
}

std::vector<FourSplit> splittings(const DimVector& alpha, const DimVector& beta, const DimVector& gamma1,
                                  const DimVector& gamma2) {
    if (alpha + beta != gamma1 + gamma2) throw StructuralError("inconsistent splitting constraints");
    std::vector<FourSplit> out;
    for (const auto& [a1, a2] : splittings(alpha)) {
        if (!a1.fits_in(gamma1)) continue;
        DimVector b1 = gamma1 - a1;
        if (!b1.fits_in(beta)) continue;
        DimVector b2 = beta - b1;
        if (a2 + b2 != gamma2) continue;
        out.push_back({a1, a2, b1, b2});
    }
    return out;
}

std::vector<DimVector> dims_up_to(size_t n, unsigned max_component, unsigned max_total) {
    std::vector<DimVector> out;
    for (const auto& [a, rest] : splittings(DimVector(std::vector<unsigned>(n, max_component))))
        if (a.total() <= max_total) out.push_back(a);
    return out;
}

}  // namespace kvb
