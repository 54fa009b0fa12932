//! Type 0/I/II classification of self-dual codes, the structural relations
//! between antipodality, separability and class, linearity of the Gray image,
//! and the admissible lengths for each class.

use std::fmt;
use std::str::FromStr;

use crate::algebra::MixedVector;
use crate::code::{gf2_rank, AdditiveCode};
use crate::duality::{is_self_dual, is_self_orthogonal};
use crate::error::{Error, Result};

/// Class of a code with respect to self-duality and weight residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SelfDualClass {
    NotSelfDual,
    /// Self-dual with at least one odd-weight codeword.
    Type0,
    /// Self-dual, all weights even, some weight `2 mod 4`.
    TypeI,
    /// Self-dual, all weights divisible by four.
    TypeII,
}

impl SelfDualClass {
    /// The three self-dual classes.
    pub const SELF_DUAL: [SelfDualClass; 3] =
        [SelfDualClass::Type0, SelfDualClass::TypeI, SelfDualClass::TypeII];
}

impl fmt::Display for SelfDualClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SelfDualClass::NotSelfDual => "not self-dual",
            SelfDualClass::Type0 => "Type 0",
            SelfDualClass::TypeI => "Type I",
            SelfDualClass::TypeII => "Type II",
        })
    }
}

impl FromStr for SelfDualClass {
    type Err = Error;

    /// Accepts `0`, `I`, `II` with an optional `type` prefix, any case.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase().replace([' ', '-', '_'], "");
        let t = t.strip_prefix("type").unwrap_or(&t);
        match t {
            "0" => Ok(SelfDualClass::Type0),
            "i" | "1" => Ok(SelfDualClass::TypeI),
            "ii" | "2" => Ok(SelfDualClass::TypeII),
            _ => Err(Error::InvalidLiteral {
                literal: s.to_string(),
                reason: "expected a class 0, I or II".into(),
            }),
        }
    }
}

/// `NotSelfDual` unless the code is self-dual; otherwise the class given by
/// the residues of its weights.
pub fn classify(code: &AdditiveCode) -> SelfDualClass {
    if !is_self_dual(code) {
        return SelfDualClass::NotSelfDual;
    }
    let weights = code.codewords().iter().map(MixedVector::weight);
    let mut all_doubly_even = true;
    for w in weights {
        if w % 2 == 1 {
            return SelfDualClass::Type0;
        }
        all_doubly_even &= w % 4 == 0;
    }
    if all_doubly_even {
        SelfDualClass::TypeII
    } else {
        SelfDualClass::TypeI
    }
}

/// A question "does a self-dual code of this class exist on `(alpha, beta)`?".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdmissibilityQuery {
    pub alpha: usize,
    pub beta: usize,
    pub cls: SelfDualClass,
    /// `None` asks about either variant.
    pub separable: Option<bool>,
}

impl AdmissibilityQuery {
    pub fn new(alpha: usize, beta: usize, cls: SelfDualClass, separable: Option<bool>) -> Self {
        AdmissibilityQuery {
            alpha,
            beta,
            cls,
            separable,
        }
    }
}

/// `v >= min` and `v - min` is a multiple of `step`.
fn on_ladder(v: usize, min: usize, step: usize) -> bool {
    v >= min && (v - min).is_multiple_of(step)
}

/// Why the query has no code, or `None` if a code exists.
///
/// With both parts nonempty:
///
/// | class                | alpha        | beta         |
/// |----------------------|--------------|--------------|
/// | Type 0               | `2 + 2a`     | `2 + b`      |
/// | Type I, separable    | `2 + 2a`     | `1 + b`      |
/// | Type I, non-separable| `4 + 2a`     | `4 + b`      |
/// | Type II              | `8 + 8a`     | `4 + 4b`     |
///
/// A Type II code exists in both variants on every Type II cell. Purely
/// binary or purely quaternary ambients only carry separable codes; those are
/// governed by the parity conditions on binary and quaternary self-dual codes.
pub fn admissibility_violation(q: &AdmissibilityQuery) -> Result<Option<String>> {
    let (a, b) = (q.alpha, q.beta);
    if a == 0 && b == 0 {
        return Err(Error::precondition("alpha and beta cannot both be zero"));
    }
    match q.cls {
        SelfDualClass::NotSelfDual => {
            return Err(Error::precondition("admissibility is asked of a self-dual class"))
        }
        SelfDualClass::Type0 if q.separable == Some(true) => {
            return Err(Error::precondition(
                "Type 0 codes are never separable (they are non-separable and non-antipodal)",
            ))
        }
        _ => {}
    }
    let variants: Vec<bool> = match q.separable {
        Some(s) => vec![s],
        None => vec![true, false],
    };
    let mut reasons = Vec::new();
    for separable in variants {
        match variant_violation(a, b, q.cls, separable) {
            None => return Ok(None),
            Some(r) if !reasons.contains(&r) => reasons.push(r),
            Some(_) => {}
        }
    }
    Ok(Some(reasons.join("; ")))
}

fn variant_violation(a: usize, b: usize, cls: SelfDualClass, separable: bool) -> Option<String> {
    let check = |ok: bool, why: String| if ok { None } else { Some(why) };
    if a == 0 || b == 0 {
        let (part, len) = if a == 0 { ("quaternary", b) } else { ("binary", a) };
        if cls == SelfDualClass::Type0 {
            return Some(format!(
                "a purely {part} self-dual code has no odd-weight codewords, so it is never Type 0"
            ));
        }
        if !separable {
            return Some(format!("a purely {part} code is always separable"));
        }
        return match (cls, a == 0) {
            (SelfDualClass::TypeI, false) => check(
                len % 2 == 0,
                format!("a binary self-dual code needs an even length, got alpha = {len}"),
            ),
            (SelfDualClass::TypeI, true) => None,
            (_, false) => check(
                len % 8 == 0,
                format!("a doubly-even binary self-dual code needs alpha = 0 mod 8, got {len}"),
            ),
            (_, true) => check(
                len % 4 == 0,
                format!("a Type II quaternary code needs beta = 0 mod 4, got {len}"),
            ),
        };
    }
    match (cls, separable) {
        (SelfDualClass::Type0, _) => check(
            on_ladder(a, 2, 2) && b >= 2,
            format!("Type 0 needs alpha = 2 + 2a and beta >= 2, got ({a}, {b})"),
        ),
        (SelfDualClass::TypeI, true) => check(
            on_ladder(a, 2, 2) && b >= 1,
            format!("separable Type I needs alpha = 2 + 2a and beta >= 1, got ({a}, {b})"),
        ),
        (SelfDualClass::TypeI, false) => check(
            on_ladder(a, 4, 2) && b >= 4,
            format!("non-separable Type I needs alpha = 4 + 2a and beta >= 4, got ({a}, {b})"),
        ),
        (SelfDualClass::TypeII, _) => check(
            on_ladder(a, 8, 8) && on_ladder(b, 4, 4),
            format!("Type II needs alpha = 8 + 8a and beta = 4 + 4b, got ({a}, {b})"),
        ),
        (SelfDualClass::NotSelfDual, _) => Some("not a self-dual class".into()),
    }
}

/// Whether a self-dual code of the queried class exists on `(alpha, beta)`.
pub fn admissible(q: &AdmissibilityQuery) -> Result<bool> {
    Ok(admissibility_violation(q)?.is_none())
}

/// The structural relations of a self-dual code, each evaluated on the code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub class: SelfDualClass,
    pub antipodal: bool,
    pub separable: bool,
    pub delta: usize,
    /// Antipodal exactly when the class is I or II.
    pub antipodal_iff_even: bool,
    /// Separable codes are antipodal.
    pub separable_implies_antipodal: bool,
    /// Non-separable codes have `delta >= 1`.
    pub nonseparable_implies_delta: bool,
    /// For non-separable codes: codewords `(v|w), (v'|w')` with
    /// `<v, v'>_2 = 1` and `<w, w'>_4 = 2`.
    pub witness: Option<(MixedVector, MixedVector)>,
}

impl StructureReport {
    /// Every relation holds, and a non-separable code exhibits its witness.
    pub fn consistent(&self) -> bool {
        self.antipodal_iff_even
            && self.separable_implies_antipodal
            && self.nonseparable_implies_delta
            && (self.separable || self.witness.is_some())
    }
}

/// A pair of codewords whose binary parts pair to 1 (and so whose quaternary
/// parts pair to 2). The binary pairing is bilinear, so if any pair exists a
/// generator pair does.
pub fn separability_witness(code: &AdditiveCode) -> Option<(MixedVector, MixedVector)> {
    let gens = code.generators().rows();
    for (i, u) in gens.iter().enumerate() {
        for v in &gens[i..] {
            let b = u.binary_inner(v).expect("same shape");
            let q = u.quaternary_inner(v).expect("same shape");
            if b == 1 && q == 2 {
                return Some((*u, *v));
            }
        }
    }
    None
}

/// Evaluates the antipodality/separability/class relations on a self-dual
/// code.
pub fn check_structure_relations(code: &AdditiveCode) -> Result<StructureReport> {
    let class = classify(code);
    if class == SelfDualClass::NotSelfDual {
        return Err(Error::precondition("structure relations need a self-dual code"));
    }
    let antipodal = code.is_antipodal();
    let separable = code.is_separable();
    let delta = code.type_params().delta;
    let witness = if separable { None } else { separability_witness(code) };
    Ok(StructureReport {
        class,
        antipodal,
        separable,
        delta,
        antipodal_iff_even: antipodal == (class != SelfDualClass::Type0),
        separable_implies_antipodal: !separable || antipodal,
        nonseparable_implies_delta: separable || delta >= 1,
        witness,
    })
}

/// A GF(2) basis of the Gray image, as packed rows.
fn gray_basis(code: &AdditiveCode) -> Vec<u128> {
    let mut basis: Vec<u128> = Vec::new();
    for c in code.codewords() {
        let mut r = c.gray_packed();
        for &b in &basis {
            r = r.min(r ^ b);
        }
        if r != 0 {
            basis.push(r);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis
}

/// The Gray image is closed under XOR. The Gray map is injective, so this
/// holds exactly when the image spans no more than `|C|` vectors.
pub fn gray_image_linear(code: &AdditiveCode) -> bool {
    gf2_rank(code.codewords().iter().map(MixedVector::gray_packed)) == code.log2_size()
}

/// The Gray image is a linear binary self-dual code with all weights
/// divisible by four.
pub fn gray_image_doubly_even_self_dual(code: &AdditiveCode) -> bool {
    if !gray_image_linear(code) {
        return false;
    }
    let basis = gray_basis(code);
    let n = code.ambient().length();
    2 * basis.len() == n
        && code.codewords().iter().all(|c| c.weight() % 4 == 0)
        && basis
            .iter()
            .enumerate()
            .all(|(i, a)| basis[i..].iter().all(|b| (a & b).count_ones() % 2 == 0))
}

/// The seven statements that characterise separability of a self-dual code:
/// `C_X` self-orthogonal, `C_X` self-dual, `|C_X| = 2^kappa`, `C_Y`
/// self-orthogonal, `C_Y` self-dual, `|C_Y| = 2^beta`, `C` separable.
pub fn separability_predicates(code: &AdditiveCode) -> [bool; 7] {
    let cx = code.puncture_x();
    let cy = code.puncture_y();
    let p = code.type_params();
    [
        is_self_orthogonal(&cx),
        is_self_dual(&cx),
        cx.log2_size() == p.kappa,
        is_self_orthogonal(&cy),
        is_self_dual(&cy),
        cy.log2_size() == p.beta,
        code.is_separable(),
    ]
}

/// Every codeword `(x|y)` has `wt(x)` even with `p(y) = 0 mod 4`, or `wt(x)`
/// odd with `p(y) = 2 mod 4`, where `p(y)` counts the entries 1 and 3.
pub fn weight_congruences_hold(code: &AdditiveCode) -> bool {
    code.codewords()
        .iter()
        .all(|c| (2 * c.hamming_weight_x() + c.p_count()) % 4 == 0)
}

/// The binary projection of the order-two subcode is a binary self-dual code
/// of length `alpha = 2 kappa`.
pub fn binary_kernel_self_dual(code: &AdditiveCode) -> bool {
    let projected = code.order_two_subcode().puncture_x();
    is_self_dual(&projected) && code.ambient().alpha() == 2 * code.type_params().kappa
}
