#pragma once

#include <string>
#include <vector>

#include "toralab/degree.hpp"
#include "toralab/simple_lie.hpp"

namespace toralab {

struct InadmissibleElement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The graded Lie algebra families handled here.
///
///   Toroidal       g(x)A + Z + D
///   FullToroidal   g(x)A + Z + DerA
///   TauS           g(x)A + Z + S_N
///   TauH           g(x)A + Z/K + H_N + D           (N even)
///   TauD           g(x)A + Z/K_M + D_M + D         (N odd)
///   MinimalEALA    g(x)A + sum C K_i + sum C d_i
///   HN, SN, DM     the pure derivation algebras (degree derivations included)
///   DerA           all derivations of the Laurent ring
enum class Family { Toroidal, FullToroidal, TauS, TauH, TauD, MinimalEALA, HN, SN, DM, DerA };

std::string family_name(Family f);
Family parse_family(const std::string& s);

struct AlgebraSpec {
    Family family;
    int N;
    const SimpleLieDatum* g = nullptr;  // absent for pure derivation families

    AlgebraSpec(Family f, int n, const SimpleLieDatum* lie = nullptr);

    bool has_g() const;
    bool has_center() const;        // some central part (graded or degree-0)
    bool has_graded_center() const; // central symbols at nonzero degree
    bool abelian_extension() const; // (2.5)(1)-(2) terms present in D brackets
    std::string str() const;
};

enum class Kind : uint8_t { G, K, D };

/// Tagged basis atom of the ambient algebra: X[idx](r), K(u|r) or D(u|r).
struct BasisSymbol {
    Kind kind;
    int gidx = -1;
    Deg deg;
    RatVec u;

    static BasisSymbol G(int idx, const Deg& r) {
        BasisSymbol s;
        s.kind = Kind::G;
        s.gidx = idx;
        s.deg = r;
        return s;
    }
    static BasisSymbol K(const RatVec& u, const Deg& r) {
        BasisSymbol s;
        s.kind = Kind::K;
        s.u = u;
        s.deg = r;
        return s;
    }
    static BasisSymbol D(const RatVec& u, const Deg& r) {
        BasisSymbol s;
        s.kind = Kind::D;
        s.u = u;
        s.deg = r;
        return s;
    }
    std::string str() const;
};

/// Finite rational linear combination of basis symbols, kept with one g-slot
/// per (basis index, degree) and one coefficient vector per degree for the
/// central and derivation parts.
class Element {
public:
    struct GTerm {
        int idx;
        Deg deg;
        Rational c;
    };
    struct VTerm {
        Deg deg;
        RatVec u;
    };

    void clear() {
        g_.clear();
        k_.clear();
        d_.clear();
    }

    void add_g(int idx, const Deg& d, const Rational& c);
    void add_k(const Deg& d, const RatVec& u);
    void add_d(const Deg& d, const RatVec& u);
    void add_k_int(const Deg& d, const Deg& u, const Rational& scale);  // scale * K(u, d)
    void add_d_int(const Deg& d, const Deg& u, const Rational& scale);
    void add_symbol(const BasisSymbol& s, const Rational& c);

    void axpy(const Rational& c, const Element& o);
    void negate();
    /// Drops exact zeros.
    void compact();

    bool is_zero() const;
    friend bool operator==(const Element& a, const Element& b);

    const std::vector<GTerm>& g_terms() const { return g_; }
    const std::vector<VTerm>& k_terms() const { return k_; }
    const std::vector<VTerm>& d_terms() const { return d_; }
    std::vector<VTerm>& k_terms_mut() { return k_; }

    /// All terms as symbols with coefficient 1 folded in (K/D carry u).
    std::vector<std::pair<BasisSymbol, Rational>> symbols() const;

    std::string str() const;

private:
    std::vector<GTerm> g_;
    std::vector<VTerm> k_;
    std::vector<VTerm> d_;
};

/// Canonical normal form for the ambient family: central vectors reduced to
/// the quotient's canonical representative, derivation vectors validated
/// against the family's span. Throws InadmissibleElement when a symbol does
/// not live in the family.
void normal_form(const AlgebraSpec& spec, Element& e);

/// Raw bilinear bracket products, no normal form; inputs must be canonical.
void bracket_raw(const AlgebraSpec& spec, const Element& a, const Element& b, Element& out);

/// Family bracket: normalizes the inputs, multiplies out, normalizes back.
Element bracket(const AlgebraSpec& spec, const Element& a, const Element& b);
Element bracket(const AlgebraSpec& spec, const BasisSymbol& a, const BasisSymbol& b);

Element element_of(const AlgebraSpec& spec, const BasisSymbol& s);

/// Hamiltonian generator h_r = D(bar r, r); zero element for r = 0.
Element hamiltonian(const AlgebraSpec& spec, const Deg& r);
/// Contact generator D(underline r, r).
Element contact(const AlgebraSpec& spec, const Deg& r);

/// Canonical basis generators of the degree-r component, with labels.
struct Generator {
    std::string label;
    Deg deg;
    Element elem;
};
std::vector<Generator> canonical_generators(const AlgebraSpec& spec, const Deg& r);

enum class SpaceTag { Z, ZmodK, ZmodKM, HN, HNtilde, DM, DMtilde, Full };
SpaceTag parse_space_tag(const std::string& s);

/// Exact dimension of a graded component, as the rank of the span of the
/// normal forms of its raw generators.
int component_dimension(const AlgebraSpec& spec, SpaceTag tag, const Deg& r);

enum class TriPart { MM, M, Zero, P, PP };
enum class TriTag { N2, GeneralN, LevelZero };
std::string tri_part_name(TriPart p);
TriTag parse_tri_tag(const std::string& s);

/// Classification of a canonical symbol in the chosen triangular
/// decomposition of tau(H_N). LevelZero uses only {P, Zero, M}.
TriPart triangular_part(const AlgebraSpec& spec, TriTag tag, const BasisSymbol& s);

}  // namespace toralab
