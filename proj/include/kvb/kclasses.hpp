#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kvb/laurent_poly.hpp"
#include "kvb/quiver.hpp"
#include "kvb/report.hpp"
#include "kvb/symmetrize.hpp"

namespace kvb {

// An element of K_T(X(dim)): a Laurent polynomial in s(tag, i, k), k < dim[i],
// symmetric in the slots of each vertex.
struct KClass {
    DimVector dim;
    Tag tag = kTagA;
    LaurentPoly value;
};

// Signed multiset of K-theoretic Chern roots; a root with multiplicity -2
// stands for two copies with sign -1.
class SignedRoots {
public:
    using Map = std::map<Monomial, int, GrlexLess>;

    void add(const Monomial& m, int count);
    const Map& roots() const { return roots_; }
    bool empty() const { return roots_.empty(); }
    size_t size() const;

    SignedRoots operator+(const SignedRoots& o) const;
    SignedRoots operator-(const SignedRoots& o) const;
    SignedRoots dual() const;
    friend bool operator==(const SignedRoots& a, const SignedRoots& b) { return a.roots_ == b.roots_; }

    template <typename F>
    SignedRoots transform(F f) const {
        SignedRoots r;
        for (const auto& [m, k] : roots_) r.add(f(m), k);
        return r;
    }

    // Sum of signed roots as a Laurent polynomial.
    LaurentPoly character() const;
    std::string to_string(const VarTable& vars) const;

private:
    Map roots_;
};

// First monomial at which the multiplicities of a and b differ.
std::optional<Monomial> first_difference(const SignedRoots& a, const SignedRoots& b);

// E_{alpha,beta}: for every edge e: i -> j and slots k, l the root
// weight(e) s(a,i,k)^-1 s(b,j,l), and for every vertex i the root
// s(a,i,k)^-1 s(b,i,l), with signs set by the quiver's convention.
SignedRoots bilinear_class(const Quiver& q, const DimVector& alpha, Tag a, const DimVector& beta, Tag b);

// V_{tag,i} = sum_k s(tag, i, k).
LaurentPoly tautological(const DimVector& d, unsigned vertex, Tag tag);

struct SlotPart {
    DimVector dim;
    Tag tag;
};

// s(src, i, k) goes to s(parts[p].tag, i, k - offset_p) where p is the
// part containing slot k (parts taken in order). Throws on slot overflow.
Monomial split_slots(const Monomial& m, Tag src, const std::vector<SlotPart>& parts);
// Inverse of split_slots.
Monomial merge_slots(const Monomial& m, const std::vector<SlotPart>& parts, Tag dst);
// Multiplies every slot variable with the given tag by factor.
Monomial scale_tag(const Monomial& m, Tag tag, const Monomial& factor);
// Multiplies every slot variable by factor.
Monomial scale_slots(const Monomial& m, const Monomial& factor);

using TagMap = std::array<Tag, kMaxTags>;
TagMap identity_tags();
TagMap swap_tags(Tag a, Tag b);
Monomial retag(const Monomial& m, const TagMap& map);

LaurentPoly split_embed(const LaurentPoly& h, Tag src, const DimVector& alpha, const DimVector& beta, Tag a = kTagA,
                        Tag b = kTagB);
LaurentPoly merge_embed(const LaurentPoly& p, const DimVector& alpha, Tag a, const DimVector& beta, Tag b, Tag dst);

LaurentPoly deg_substitute(const LaurentPoly& p, Tag tag, Var formal, int exponent);
SignedRoots deg_substitute(const SignedRoots& r, Tag tag, Var formal, int exponent);

SymGroupAction symmetry_group(const DimVector& d, Tag tag);
bool is_symmetric(const KClass& f);

// {1} together with the monomial symmetric functions m_(1), m_(2), m_(1,1)
// and m_(-1) of each vertex block.
std::vector<LaurentPoly> test_classes(const DimVector& d, Tag tag);

// Splitting identities for E in each argument and the z-weights of its roots.
CheckReport check_bilinearity(const Quiver& q, const DimVector& alpha, const DimVector& beta, const DimVector& gamma);

nlohmann::json dims_json(const DimVector& d);

}  // namespace kvb
