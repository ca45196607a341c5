//! The claim registry: every claim id the suite can report, with the
//! statement it checks.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    /// Checked on each algebra separately.
    Algebra,
    /// Checked once over a fixed family; only run by corpus verification.
    Corpus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Needs {
    Nothing,
    Cubic,
    Mr,
    /// MR with at least one g-filter.
    GFilter,
}

#[derive(Clone, Copy, Debug)]
pub struct Claim {
    pub id: &'static str,
    pub scope: Scope,
    pub needs: Needs,
    pub statement: &'static str,
}

const fn algebra(id: &'static str, needs: Needs, statement: &'static str) -> Claim {
    Claim {
        id,
        scope: Scope::Algebra,
        needs,
        statement,
    }
}

const fn corpus(id: &'static str, statement: &'static str) -> Claim {
    Claim {
        id,
        scope: Scope::Corpus,
        needs: Needs::Nothing,
        statement,
    }
}

use Needs::*;

pub const CLAIMS: &[Claim] = &[
    algebra("ax:cubic", Nothing, "the tables satisfy cubic axioms (a)-(f)"),
    algebra("lem:caret", Cubic, "the MR axiom holds iff x ⋏ y exists for all x, y"),
    algebra("lem:kl", Mr, "for every a the localization at a is an atomic MR-subalgebra, {Δ(y,x) : a <= x <= y} = {x : a ≼ x}, a <= k_a <= l_a, and (l_a, k_a) is a bijection onto the pairs q <= p above a"),
    algebra("lem:intComp", Mr, "in the localization at a, for g >= a and h = g → a, z = (z ∨ Δ(g∨z, g)) ∧ (z ∨ Δ(h∨z, h))"),
    algebra("lem:fab", Mr, "for a Boolean filter G of the quotient and any a, with g the element above a in the class G.least ∨ [a] and b = Δ(g, a): φ_G(a) = b, f̂_ab agrees with φ_G on the localization at a after joining with b and with Δ(1, b), and φ_G has the local form (z ∨ Δ(z∨g, g)) ∧ Δ(1, z ∨ Δ(z∨h, h))"),
    algebra("thm:present", Mr, "iterated carets along a presentation end at an element whose up-set is a g-filter"),
    algebra("thm:localization", Mr, "closing a set X under carets and a group of automorphisms and taking the union of localizations gives an upward-closed MR-subalgebra containing X, presented by the closed set, on which every group element restricts to an automorphism"),
    algebra("cor:filterAuts", GFilter, "for g-filters F, G the map Δ(β_G α_F(x), β_G β_F(x)) is an inner automorphism carrying F onto G"),
    algebra("thm:factoring", GFilter, "for a g-filter F every automorphism φ factors as φ_(F, φ[F]) composed with the extension of Ξ𝖢(φ)"),
    algebra("lem:fixed", GFilter, "the fixed points of φ_(F,G) are exactly the Δ-closure of F ∩ G"),
    algebra("lem:DeltaFixed", GFilter, "the points with φ_(F,G)(x) = Δ(1, x) are exactly the Δ-closure of (F ∩ G) → F, and Δ(1, G) ∩ F = (F ∩ G) → F"),
    algebra("lem:twoThreeSame", Cubic, "for filters G ⊆ F the three descriptions of G → F (least witness, join of disjoint subfilters, elementwise) agree, in the algebra and in its quotient"),
    algebra("thm:lots", GFilter, "for g-filters F, H the intersection G = F ∩ H is F-Boolean with H = Δ(G, F); conversely for F-Boolean G the filter Δ(G, F) is a g-filter meeting F in G"),
    algebra("thm:Boolean", GFilter, "a filter that is F-Boolean for one g-filter F is H-Boolean for every g-filter H containing it"),
    algebra("lem:localBoolean", GFilter, "if G is F-Boolean and H ⊆ F is a filter then G ∩ H is H-Boolean"),
    algebra("lem:localPrincBool", GFilter, "if G is F-Boolean and f ∈ F then f = g ∧ h with g ∈ G, h ∈ G → F, and G ∩ [f, 1] = [g, 1]"),
    algebra("thm:kerFilter", Mr, "an automorphism is inner (x ∼ φ(x) for all x) iff it induces the identity on the quotient"),
    algebra("thm:TwoTorsion", Mr, "the inner automorphisms form an abelian normal subgroup in which every element is an involution"),
    algebra("lem:upper", Mr, "the fixed set of an inner automorphism is an upward-closed MR-subalgebra"),
    algebra("rem:notInM", Mr, "for inner φ other than the identity, x ∨ Δ(1, φ(x)) lies outside the fixed set unless x = 1"),
    algebra("eq:oneA", Mr, "for inner φ: x = (x ∨ φx) ∧ (x ∨ Δ(1, φx)), φx = (x ∨ φx) ∧ (Δ(1, x) ∨ φx), and Δ(1, x) ∨ φx = Δ(1, x ∨ Δ(1, φx))"),
    algebra("lem:somethingIn", Mr, "for inner φ, Δ(1, x) ∨ φ(x) lies in D_φ"),
    algebra("lem:DeltaOne", Mr, "for inner φ, φ(z) = Δ(1, z) on D_φ"),
    algebra("cor:intersect", Mr, "for inner φ the fixed set meets D_φ only in 1"),
    algebra("cor:metsExist", Mr, "for inner φ, x in the fixed set and y in D_φ, x ∧ Δ(1, y) exists"),
    algebra("lem:repsMD", Mr, "for inner φ every z is z₀ ∧ z₁ for exactly one z₀ in the fixed set and z₁ in D_φ"),
    algebra("lem:gotIt", Mr, "for inner φ and z = z₀ ∧ z₁ as above, φ(z) = z₀ ∧ Δ(1, z₁)"),
    algebra("lem:BoolCC", Mr, "Ω(φ), the classes of the fixed set, is a Boolean filter of the quotient"),
    algebra("thm:MPhiIsGood", Mr, "distinct inner automorphisms have distinct fixed sets"),
    algebra("thm:recoveryII", Mr, "for every Boolean filter G of the quotient the preimages S₁ of G and S₂ of G → 𝖢(M) meet in 1, split every element uniquely, and x₁ ∧ Δ(1, x₂) is an inner automorphism with Ω = G; every inner φ is recovered from Ω(φ)"),
    algebra("thm:isoGroups", Mr, "Ω is a group isomorphism onto the Boolean filters of the quotient under their sum, and the inner groups of M and 𝖨𝖢(M) have the same order"),
    algebra("thm:isoIota", Cubic, "for the quotient I, ι: I → 𝖢𝖨(I) is a bijective implication isomorphism with inverse [⟨a,b⟩] ↦ a ∧ b"),
    algebra("nat:e", Cubic, "e commutes with 𝖨(f) for implication automorphisms f of the quotient"),
    algebra("nat:eta", Cubic, "η commutes with 𝖢(φ) for automorphisms φ"),
    algebra("nat:iota", Cubic, "ι commutes with 𝖢𝖨(f) for implication automorphisms f of the quotient"),
    algebra("nat:kappa", Cubic, "ι at the quotient equals 𝖢(κ) where κ = e ∘ η"),
    algebra("rem:filterAlg", Mr, "𝖨𝖢(M) is an MR algebra isomorphic to M"),
    algebra("thm:incl", Cubic, "for every upward-closed subalgebra M, classes in M agree with classes in the algebra and 𝖢 of the inclusion is the inclusion of quotients"),
    algebra("cor:restrict", Cubic, "for every automorphism f and upward-closed subalgebra M, 𝖢(f restricted to M) = 𝖢(f) restricted to 𝖢(M)"),
    algebra("lem:collapseDewt", Cubic, "upward-closed subalgebras are equal iff their quotients are"),
    corpus("thm:count", "the pair algebra over the Boolean algebra with n atoms has 3^n elements and is isomorphic to the face poset of the n-cube, n = 1..4"),
    corpus("cube:groups", "the n-cube algebra has 2^n n! automorphisms of which 2^n are inner, n = 1..3"),
    corpus("thm:isoIota", "ι is a bijective implication isomorphism for B2, B3, the three-element algebra without meets, and seeded implication subalgebras of B3"),
    corpus("nat:e", "e commutes with 𝖨(f) for the inclusion of the three-element algebra into B2"),
];

/// Looks up a claim id.
pub fn claim(id: &str) -> Option<&'static Claim> {
    CLAIMS.iter().find(|c| c.id == id)
}
