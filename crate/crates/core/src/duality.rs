//! Additive duals, dual type parameters and self-duality predicates.
//!
//! [`dual`] builds a generator matrix of `C^perp` directly from the canonical
//! form of `C`; [`brute_force_dual`] scans the ambient group and serves as an
//! independent check.

use crate::algebra::MixedVector;
use crate::code::{span, AdditiveCode, GeneratorMatrix, TypeParams};
use crate::error::{Error, Result};
use crate::guard::Guard;
use crate::standard_form::StandardFormMatrix;

/// Summary of a code's relation to its dual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityReport {
    pub dual: AdditiveCode,
    pub dual_params: TypeParams,
    pub self_orthogonal: bool,
    pub self_dual: bool,
}

/// Generator matrix of the dual, in the canonical coordinates of `sf`:
///
/// ```text
///   [ T_b^t  I_{alpha-kappa} | 0    0        2 S_b^t          ]
///   [ 0      0               | 0    2I_g     2 R^t            ]
///   [ T_2^t  0               | I_m  T_1^t    -(S_q + R T_1)^t ]
/// ```
pub fn parity_check_rows(sf: &StandardFormMatrix) -> Vec<MixedVector> {
    let ambient = sf.ambient();
    let k = sf.kappa();
    let g = sf.gamma() - k;
    let m = sf.leading_width();
    let d = sf.delta();
    let free_x = ambient.alpha() - k;
    let mut rows = Vec::with_capacity(free_x + g + m);

    for j in 0..free_x {
        let mut v = MixedVector::zero(ambient);
        for i in 0..k {
            v.set_binary(i, sf.t_b()[i][j]);
        }
        v.set_binary(k + j, 1);
        for e in 0..d {
            v.set_quaternary(m + g + e, 2 * sf.s_b()[e][j]);
        }
        rows.push(v);
    }
    for l in 0..g {
        let mut v = MixedVector::zero(ambient);
        v.set_quaternary(m + l, 2);
        for e in 0..d {
            v.set_quaternary(m + g + e, 2 * sf.r()[e][l]);
        }
        rows.push(v);
    }
    for i in 0..m {
        let mut v = MixedVector::zero(ambient);
        for p in 0..k {
            // binary image of the {0,1} entry of T_2
            v.set_binary(p, sf.t_2()[p][i] & 1);
        }
        v.set_quaternary(i, 1);
        for l in 0..g {
            v.set_quaternary(m + l, sf.t_1()[l][i]);
        }
        for e in 0..d {
            let rt1: u32 = (0..g).map(|l| u32::from(sf.r()[e][l]) * u32::from(sf.t_1()[l][i])).sum();
            let entry = (u32::from(sf.s_q()[e][i]) + rt1) % 4;
            v.set_quaternary(m + g + e, ((4 - entry) % 4) as u8);
        }
        rows.push(v);
    }
    rows
}

/// The additive dual, built from the canonical form of the code's
/// generators and mapped back to the original coordinates.
pub fn dual(code: &AdditiveCode) -> Result<AdditiveCode> {
    let sf = StandardFormMatrix::compute(code.generators());
    let rows = parity_check_rows(&sf).iter().map(|v| sf.to_original(v)).collect();
    span(&GeneratorMatrix::new(code.ambient(), rows)?)
}

/// `{v : <u, v> = 0 for all u in C}` by scanning the whole ambient group.
pub fn brute_force_dual(code: &AdditiveCode) -> Result<AdditiveCode> {
    let ambient = code.ambient();
    Guard::current().check_oracle(ambient)?;
    let gens = code.generators().rows();
    let words: Vec<MixedVector> = ambient
        .vectors()
        .filter(|v| gens.iter().all(|g| g.dot(v) == 0))
        .collect();
    Guard::current().check_log_size(words.len().trailing_zeros() as usize)?;
    AdditiveCode::from_subgroup(ambient, words)
}

/// `(alpha, beta; alpha + gamma - 2 kappa, beta - gamma - delta + kappa; alpha - kappa)`.
pub fn dual_type(p: &TypeParams) -> Result<TypeParams> {
    let a = p.alpha as i64;
    let b = p.beta as i64;
    let (g, d, k) = (p.gamma as i64, p.delta as i64, p.kappa as i64);
    let gamma = a + g - 2 * k;
    let delta = b - g - d + k;
    let kappa = a - k;
    if gamma < 0 || delta < 0 || kappa < 0 {
        return Err(Error::InconsistentParams(format!(
            "{p} yields a negative dual component ({gamma}, {delta}, {kappa})"
        )));
    }
    Ok(TypeParams::new(
        p.alpha,
        p.beta,
        gamma as usize,
        delta as usize,
        kappa as usize,
    ))
}

/// `C` is contained in `C^perp`. Checking generator pairs (self-pairs
/// included) suffices by bilinearity.
pub fn is_self_orthogonal(code: &AdditiveCode) -> bool {
    let gens = code.generators().rows();
    gens.iter()
        .enumerate()
        .all(|(i, u)| gens[i..].iter().all(|v| u.dot(v) == 0))
}

/// Self-orthogonal and `|C|^2 = 2^alpha 4^beta`.
pub fn is_self_dual(code: &AdditiveCode) -> bool {
    2 * code.log2_size() == code.ambient().length() && is_self_orthogonal(code)
}

pub fn duality_report(code: &AdditiveCode) -> Result<DualityReport> {
    let dual = dual(code)?;
    let dual_params = dual.type_params();
    Ok(DualityReport {
        self_orthogonal: is_self_orthogonal(code),
        self_dual: is_self_dual(code),
        dual,
        dual_params,
    })
}
