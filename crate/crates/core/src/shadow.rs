//! The shadow of a Type 0 code and the coset structure around it.
//!
//! For a Type 0 code `C` with even-weight subcode `C_0`, the quotient
//! `C_0^perp / C_0` is a Klein four-group whose cosets are
//! `C_{i,j} = C_0 + i t + j s` with `s = (1^alpha, 2^beta)` and `t` an
//! odd-weight codeword. `C = C_{0,0} u C_{1,0}` and the shadow is the rest,
//! `C_{0,1} u C_{1,1} = C_0^perp \ C`.

use std::collections::BTreeSet;

use crate::algebra::MixedVector;
use crate::classify::{classify, SelfDualClass};
use crate::code::{span, AdditiveCode, GeneratorMatrix};
use crate::duality::{dual, is_self_dual};
use crate::error::{Error, Result};

/// Pairings between the cosets `C_{0,0}, C_{1,0}, C_{0,1}, C_{1,1}`.
pub const ORTHOGONALITY_TABLE: [[u8; 4]; 4] = [
    [0, 0, 0, 0],
    [0, 0, 2, 2],
    [0, 2, 0, 2],
    [0, 2, 2, 0],
];

/// Coset labels in table order.
pub const COSET_LABELS: [&str; 4] = ["C00", "C10", "C01", "C11"];

/// The four cosets of `C_0` inside `C_0^perp`, each sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShadowDecomposition {
    pub c00: Vec<MixedVector>,
    pub c10: Vec<MixedVector>,
    pub c01: Vec<MixedVector>,
    pub c11: Vec<MixedVector>,
    pub s: MixedVector,
    pub t: MixedVector,
    /// A generating set of `C_0`.
    pub even_generators: Vec<MixedVector>,
}

impl ShadowDecomposition {
    /// The cosets in table order.
    pub fn cosets(&self) -> [&[MixedVector]; 4] {
        [&self.c00, &self.c10, &self.c01, &self.c11]
    }

    /// `C_{0,1} u C_{1,1}`, sorted.
    pub fn shadow(&self) -> Vec<MixedVector> {
        let mut out: Vec<_> = self.c01.iter().chain(&self.c11).copied().collect();
        out.sort_unstable();
        out
    }
}

fn require_self_dual(code: &AdditiveCode) -> Result<()> {
    if is_self_dual(code) {
        Ok(())
    } else {
        Err(Error::precondition("the shadow is defined for self-dual codes"))
    }
}

fn require_type0(code: &AdditiveCode) -> Result<()> {
    match classify(code) {
        SelfDualClass::Type0 => Ok(()),
        other => Err(Error::precondition(format!("expected a Type 0 code, got {other}"))),
    }
}

/// `C_0^perp \ C`, sorted. Empty for Type I and Type II codes, whose
/// even-weight subcode is the whole code.
pub fn shadow(code: &AdditiveCode) -> Result<Vec<MixedVector>> {
    require_self_dual(code)?;
    let c0 = code.even_weight_subcode();
    if c0.len() == code.len() {
        return Ok(Vec::new());
    }
    let c0_perp = dual(&c0)?;
    Ok(c0_perp
        .codewords()
        .iter()
        .copied()
        .filter(|v| !code.contains(v))
        .collect())
}

fn translate(base: &[MixedVector], by: MixedVector) -> Vec<MixedVector> {
    let mut out: Vec<_> = base.iter().map(|&v| v + by).collect();
    out.sort_unstable();
    out
}

/// Splits `C_0^perp` into the four cosets, with `s = (1^alpha, 2^beta)` and
/// `t` the lexicographically least odd-weight codeword, and checks every
/// structural property of the split.
pub fn decompose(code: &AdditiveCode) -> Result<ShadowDecomposition> {
    require_type0(code)?;
    let ambient = code.ambient();
    let c0 = code.even_weight_subcode();
    let s = MixedVector::constant(ambient, 1, 2);
    let t = *code
        .codewords()
        .iter()
        .find(|c| c.weight() % 2 == 1)
        .ok_or_else(|| Error::invariant("Type 0 code without an odd-weight word"))?;
    let base = c0.codewords();
    let d = ShadowDecomposition {
        c00: base.to_vec(),
        c10: translate(base, t),
        c01: translate(base, s),
        c11: translate(base, s + t),
        s,
        t,
        even_generators: c0.generators().rows().to_vec(),
    };

    let fail = |what: &str| Err(Error::invariant(format!("shadow decomposition: {what}")));
    if 2 * c0.len() != code.len() {
        return fail("the even-weight subcode does not have index 2");
    }
    if !s.weight().is_multiple_of(2) || t.weight() % 2 != 1 {
        return fail("s must have even weight and t odd weight");
    }
    if s.dot(&t) != 2 || s.dot(&s) != 0 || t.dot(&t) != 0 {
        return fail("expected <s,t> = 2 and <s,s> = <t,t> = 0");
    }
    let mut union = BTreeSet::new();
    for coset in d.cosets() {
        for v in coset {
            if !union.insert(*v) {
                return fail("cosets are not disjoint");
            }
        }
    }
    let in_code: BTreeSet<_> = d.c00.iter().chain(&d.c10).copied().collect();
    if !in_code.iter().eq(code.codewords().iter()) {
        return fail("C00 u C10 is not the code");
    }
    let c0_perp = dual(&c0)?;
    if !union.iter().eq(c0_perp.codewords().iter()) {
        return fail("the four cosets do not fill the dual of the even subcode");
    }
    // Klein four-group quotient: 2s and 2t fall back into C_0.
    if !c0.contains(&(s + s)) || !c0.contains(&(t + t)) {
        return fail("quotient is not elementary abelian");
    }
    Ok(d)
}

/// Largest coset size for which every pair is checked explicitly.
const EXHAUSTIVE_COSET_LIMIT: usize = 256;

/// Entry `(a, b)` is the common value of `<u, v>` for `u` in coset `a` and
/// `v` in coset `b`. Small decompositions are checked pair by pair; larger
/// ones through bilinearity (coset representatives, plus orthogonality of
/// the generators of `C_0` against all representatives).
pub fn orthogonality_table(d: &ShadowDecomposition) -> Result<[[u8; 4]; 4]> {
    let cosets = d.cosets();
    let mut table = [[0u8; 4]; 4];
    for a in 0..4 {
        for b in 0..4 {
            let value = cosets[a][0].dot(&cosets[b][0]);
            table[a][b] = value;
            if cosets[a].len() <= EXHAUSTIVE_COSET_LIMIT {
                let constant = cosets[a]
                    .iter()
                    .all(|u| cosets[b].iter().all(|v| u.dot(v) == value));
                if !constant {
                    return Err(Error::invariant(format!(
                        "pairing between {} and {} is not constant",
                        COSET_LABELS[a], COSET_LABELS[b]
                    )));
                }
            }
        }
    }
    if cosets[0].len() > EXHAUSTIVE_COSET_LIMIT {
        let reps = [cosets[0][0], cosets[1][0], cosets[2][0], cosets[3][0]];
        if !d
            .even_generators
            .iter()
            .all(|g| reps.iter().all(|r| g.dot(r) == 0))
        {
            return Err(Error::invariant("even subcode is not orthogonal to its cosets"));
        }
    }
    Ok(table)
}

/// Which of the two gluing rules produced a code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GlueVariant {
    /// `(C00,D00) u (C01,D01) u (C10,D10) u (C11,D11)`.
    Matched,
    /// `(C00,D00) u (C01,D11) u (C10,D10) u (C11,D01)`.
    Crossed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlueResult {
    pub code: AdditiveCode,
    pub variant: GlueVariant,
}

/// Glues two Type 0 codes coset by coset into a self-dual code on the
/// concatenated ambient. The matched rule is tried first, then the crossed
/// one; whichever is self-dual is returned.
pub fn glue(c: &AdditiveCode, d: &AdditiveCode) -> Result<GlueResult> {
    let dc = decompose(c)?;
    let dd = decompose(d)?;
    let ambient = c.ambient().concat(&d.ambient())?;
    let zc = MixedVector::zero(c.ambient());
    let zd = MixedVector::zero(d.ambient());
    let mut base = Vec::new();
    for g in &dc.even_generators {
        base.push(g.concat(&zd)?);
    }
    for g in &dd.even_generators {
        base.push(zc.concat(g)?);
    }
    let expected_size = 4 * dc.c00.len() * dd.c00.len();
    let attempts = [
        (GlueVariant::Matched, dd.t, dd.s),
        (GlueVariant::Crossed, dd.t, dd.s + dd.t),
    ];
    for (variant, t_partner, s_partner) in attempts {
        let mut rows = base.clone();
        rows.push(dc.t.concat(&t_partner)?);
        rows.push(dc.s.concat(&s_partner)?);
        let code = span(&GeneratorMatrix::new(ambient, rows)?)?;
        if code.len() == expected_size && is_self_dual(&code) {
            return Ok(GlueResult { code, variant });
        }
    }
    Err(Error::invariant("neither gluing rule gives a self-dual code"))
}

/// `C_{0,0} u C_{0,1} = <C_0, s>` and `C_{0,0} u C_{1,1} = <C_0, s + t>`:
/// the two self-dual neighbors of a Type 0 code through its shadow.
///
/// Both are self-dual by the orthogonality table. With `s` of even weight the
/// first has only even weights; the second contains the odd coset `C_{1,1}`
/// and is therefore again Type 0.
pub fn non_type0_neighbors(code: &AdditiveCode) -> Result<(AdditiveCode, AdditiveCode)> {
    let d = decompose(code)?;
    let build = |extra: MixedVector| -> Result<AdditiveCode> {
        let mut rows = d.even_generators.clone();
        rows.push(extra);
        let out = span(&GeneratorMatrix::new(code.ambient(), rows)?)?;
        if !is_self_dual(&out) {
            return Err(Error::invariant(format!("neighbor through {extra} is not self-dual")));
        }
        Ok(out)
    };
    Ok((build(d.s)?, build(d.s + d.t)?))
}
