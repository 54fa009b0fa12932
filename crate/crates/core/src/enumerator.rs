//! Hamming weight enumerators as exact homogeneous bivariate polynomials.
//!
//! A degree-`n` enumerator is stored as the coefficient list of
//! `x^(n-k) y^k` for `k = 0..=n`. Substitutions `x -> a x + b y`,
//! `y -> c x + d y` are carried out exactly over the rationals; the `1/sqrt 2`
//! factors of the orthogonal transforms are absorbed through homogeneity as a
//! single `2^(-n/2)`.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::classify::SelfDualClass;
use crate::code::AdditiveCode;
use crate::error::{Error, Result};

/// `sqrt 2` times the matrix acting on `(x, y)` under MacWilliams duality.
pub const MACWILLIAMS_MATRIX: [[i64; 2]; 2] = [[1, 1], [1, -1]];
/// `(x, y) -> (-x, -y)`.
pub const NEGATION_MATRIX: [[i64; 2]; 2] = [[-1, 0], [0, -1]];

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightEnumerator {
    degree: usize,
    coeffs: Vec<BigRational>,
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Coefficients of `(a + b y)^e` in `y`.
fn binomial_power(a: i64, b: i64, e: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    for _ in 0..e {
        let mut next = vec![BigInt::zero(); out.len() + 1];
        for (i, c) in out.iter().enumerate() {
            next[i] += c * a;
            next[i + 1] += c * b;
        }
        out = next;
    }
    out
}

impl WeightEnumerator {
    /// `coeffs[k]` is the coefficient of `x^(n-k) y^k`.
    pub fn new(degree: usize, coeffs: Vec<BigRational>) -> Result<Self> {
        if coeffs.len() != degree + 1 {
            return Err(Error::InconsistentParams(format!(
                "degree {degree} needs {} coefficients, got {}",
                degree + 1,
                coeffs.len()
            )));
        }
        Ok(WeightEnumerator { degree, coeffs })
    }

    pub fn from_integers(degree: usize, coeffs: &[i64]) -> Result<Self> {
        WeightEnumerator::new(degree, coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// `x^(n-k) y^k`.
    pub fn monomial(degree: usize, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); degree + 1];
        coeffs[k] = BigRational::one();
        WeightEnumerator { degree, coeffs }
    }

    /// `sum over c in C of x^(n - wt c) y^(wt c)`, by full enumeration.
    pub fn of_code(code: &AdditiveCode) -> WeightEnumerator {
        let n = code.ambient().length();
        let mut counts = vec![0u64; n + 1];
        for c in code.codewords() {
            counts[c.weight()] += 1;
        }
        WeightEnumerator {
            degree: n,
            coeffs: counts
                .into_iter()
                .map(|c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        }
    }

    /// Enumerator of an arbitrary set of vectors of binary length `degree`.
    pub fn of_words<'a>(degree: usize, words: impl IntoIterator<Item = &'a crate::MixedVector>) -> Self {
        let mut counts = vec![0u64; degree + 1];
        for w in words {
            counts[w.weight()] += 1;
        }
        WeightEnumerator {
            degree,
            coeffs: counts
                .into_iter()
                .map(|c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^(n-k) y^k`.
    pub fn coefficient(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    /// `W(1, 1)`.
    pub fn eval_at_one(&self) -> BigRational {
        self.coeffs.iter().fold(BigRational::zero(), |acc, c| acc + c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn scaled(&self, factor: &BigRational) -> Self {
        WeightEnumerator {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// `W(a x + b y, c x + d y)` for `m = [[a, b], [c, d]]`.
    pub fn substitute(&self, m: [[i64; 2]; 2]) -> Self {
        let n = self.degree;
        let mut out = vec![BigInt::zero(); n + 1];
        let mut scale = BigInt::one();
        let mut any_denominator = false;
        for c in &self.coeffs {
            if !c.denom().is_one() {
                any_denominator = true;
                scale = scale.lcm(c.denom());
            }
        }
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let c_int = (c * BigRational::from_integer(scale.clone())).to_integer();
            let xs = binomial_power(m[0][0], m[0][1], n - k);
            let ys = binomial_power(m[1][0], m[1][1], k);
            for (i, a) in xs.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in ys.iter().enumerate() {
                    out[i + j] += &c_int * a * b;
                }
            }
        }
        let denom = if any_denominator { scale } else { BigInt::one() };
        WeightEnumerator {
            degree: n,
            coeffs: out
                .into_iter()
                .map(|v| BigRational::new(v, denom.clone()))
                .collect(),
        }
    }

    /// Applies one of the orthogonal transforms above with its `2^(-n/2)`
    /// normalisation; `n` must be even.
    pub fn act_by(&self, m: [[i64; 2]; 2], sqrt2_normalised: bool) -> Result<Self> {
        let out = self.substitute(m);
        if !sqrt2_normalised {
            return Ok(out);
        }
        if self.degree % 2 == 1 {
            return Err(Error::precondition("transform needs an even degree"));
        }
        Ok(out.scaled(&BigRational::new(
            BigInt::one(),
            BigInt::one() << (self.degree / 2),
        )))
    }

    /// `(1/|C|) W(x + y, x - y)`, the enumerator of the dual code.
    pub fn macwilliams(&self, size: u64) -> Result<Self> {
        if size == 0 {
            return Err(Error::InconsistentParams("code size must be positive".into()));
        }
        let out = self
            .substitute(MACWILLIAMS_MATRIX)
            .scaled(&BigRational::new(BigInt::one(), BigInt::from(size)));
        if !out.is_integral() || out.coeffs.iter().any(Signed::is_negative) {
            return Err(Error::InconsistentParams(format!(
                "MacWilliams transform with |C| = {size} is not a code enumerator: {out}"
            )));
        }
        Ok(out)
    }

    /// `(W(x, -y) + W(x, y)) / 2`: keeps the even-weight terms.
    pub fn even_subcode(&self) -> Self {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let flipped = self.substitute([[1, 0], [0, -1]]);
        (&flipped + self).scaled(&half)
    }

    /// `2^(-n/2) W(x + y, -(x - y))`.
    pub fn shadow(&self) -> Result<Self> {
        if self.degree % 2 == 1 {
            return Err(Error::precondition(format!(
                "shadow enumerator needs an even length, got {}",
                self.degree
            )));
        }
        self.act_by([[1, 1], [-1, 1]], true)
    }

    /// Integer power.
    pub fn pow(&self, e: usize) -> Self {
        let mut out = WeightEnumerator::monomial(0, 0);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Machine-readable form `n: c_0 c_1 ... c_n`.
    pub fn to_coefficient_line(&self) -> String {
        let body: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        if body.is_empty() {
            format!("{}:", self.degree)
        } else {
            format!("{}: {}", self.degree, body.join(" "))
        }
    }

    /// Parses the output of [`WeightEnumerator::to_coefficient_line`].
    pub fn from_coefficient_line(line: &str) -> Result<Self> {
        let bad = |reason: String| Error::Parse { line: 1, reason };
        let (deg, rest) = line
            .split_once(':')
            .ok_or_else(|| bad("missing ':' after the degree".into()))?;
        let degree: usize = deg
            .trim()
            .parse()
            .map_err(|_| bad(format!("bad degree {deg:?}")))?;
        let coeffs = rest
            .split_whitespace()
            .map(|t| t.parse::<BigRational>().map_err(|_| bad(format!("bad coefficient {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        WeightEnumerator::new(degree, coeffs)
    }
}

impl Add for &WeightEnumerator {
    type Output = WeightEnumerator;

    fn add(self, rhs: &WeightEnumerator) -> WeightEnumerator {
        assert_eq!(self.degree, rhs.degree, "adding enumerators of different degree");
        WeightEnumerator {
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &WeightEnumerator {
    type Output = WeightEnumerator;

    fn sub(self, rhs: &WeightEnumerator) -> WeightEnumerator {
        assert_eq!(self.degree, rhs.degree, "subtracting enumerators of different degree");
        WeightEnumerator {
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &WeightEnumerator {
    type Output = WeightEnumerator;

    fn mul(self, rhs: &WeightEnumerator) -> WeightEnumerator {
        let degree = self.degree + rhs.degree;
        let mut coeffs = vec![BigRational::zero(); degree + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        WeightEnumerator { degree, coeffs }
    }
}

impl fmt::Display for WeightEnumerator {
    /// Decreasing powers of `x`, explicit coefficients:
    /// `x^6 + 4*x^3*y^3 + 3*x^2*y^4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let power = |var: &str, e: usize| match e {
            0 => None,
            1 => Some(var.to_string()),
            _ => Some(format!("{var}^{e}")),
        };
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono: Vec<String> = [power("x", self.degree - k), power("y", k)]
                .into_iter()
                .flatten()
                .collect();
            let magnitude = c.abs();
            let mut term = String::new();
            if !magnitude.is_one() || mono.is_empty() {
                term.push_str(&magnitude.to_string());
                if !mono.is_empty() {
                    term.push('*');
                }
            }
            term.push_str(&mono.join("*"));
            match (first, c.is_negative()) {
                (true, false) => f.write_str(&term)?,
                (true, true) => write!(f, "-{term}")?,
                (false, false) => write!(f, " + {term}")?,
                (false, true) => write!(f, " - {term}")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// The two generators of the invariant ring that holds every enumerator of
/// the given class.
pub fn ring_generators(cls: SelfDualClass) -> Result<(WeightEnumerator, WeightEnumerator)> {
    let p = |n: usize, c: &[i64]| WeightEnumerator::from_integers(n, c).expect("well-formed");
    let x2_plus_y2 = p(2, &[1, 0, 1]);
    match cls {
        // x^2 + y^2, y(x - y)
        SelfDualClass::Type0 => Ok((x2_plus_y2, p(2, &[0, 1, -1]))),
        // x^2 + y^2, x^2 y^2 (x^2 - y^2)^2
        SelfDualClass::TypeI => {
            let xy_sq = WeightEnumerator::monomial(4, 2);
            let diff_sq = p(2, &[1, 0, -1]).pow(2);
            Ok((x2_plus_y2, &xy_sq * &diff_sq))
        }
        // x^8 + 14 x^4 y^4 + y^8, x^4 y^4 (x^4 - y^4)^4
        SelfDualClass::TypeII => {
            let g1 = p(8, &[1, 0, 0, 0, 14, 0, 0, 0, 1]);
            let x4y4 = WeightEnumerator::monomial(8, 4);
            let diff = p(4, &[1, 0, 0, 0, -1]).pow(4);
            Ok((g1, &x4y4 * &diff))
        }
        SelfDualClass::NotSelfDual => Err(Error::precondition(
            "no invariant ring for a code that is not self-dual",
        )),
    }
}

/// One term `coefficient * g1^g1_power * g2^g2_power`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GleasonTerm {
    pub g1_power: usize,
    pub g2_power: usize,
    pub coefficient: BigRational,
}

/// An enumerator written in the ring generators of its class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GleasonDecomposition {
    pub cls: SelfDualClass,
    pub degree: usize,
    /// Ordered by increasing power of the second generator.
    pub terms: Vec<GleasonTerm>,
}

impl GleasonDecomposition {
    /// Expands the combination back into an enumerator.
    pub fn reconstruct(&self) -> Result<WeightEnumerator> {
        let (g1, g2) = ring_generators(self.cls)?;
        let mut acc = WeightEnumerator::new(self.degree, vec![BigRational::zero(); self.degree + 1])?;
        for t in &self.terms {
            let term = (&g1.pow(t.g1_power) * &g2.pow(t.g2_power)).scaled(&t.coefficient);
            acc = &acc + &term;
        }
        Ok(acc)
    }

    pub fn coefficients(&self) -> Vec<BigRational> {
        self.terms.iter().map(|t| t.coefficient.clone()).collect()
    }
}

impl fmt::Display for GleasonDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| format!("({})*g1^{}*g2^{}", t.coefficient, t.g1_power, t.g2_power))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Solves `w = sum c_ab g1^a g2^b` exactly over the monomials of total degree
/// `deg w`. Every one of the `n + 1` coefficient equations must hold.
pub fn gleason_decompose(w: &WeightEnumerator, cls: SelfDualClass) -> Result<GleasonDecomposition> {
    let (g1, g2) = ring_generators(cls)?;
    let n = w.degree();
    let (d1, d2) = (g1.degree(), g2.degree());
    if !n.is_multiple_of(d1) {
        return Err(Error::NotInRing(format!(
            "degree {n} is not a multiple of {d1}, the degree of the first generator for {cls}"
        )));
    }
    let exponents: Vec<(usize, usize)> = (0..=n / d2)
        .filter(|b| (n - b * d2).is_multiple_of(d1))
        .map(|b| ((n - b * d2) / d1, b))
        .collect();
    let columns: Vec<WeightEnumerator> = exponents
        .iter()
        .map(|&(a, b)| &g1.pow(a) * &g2.pow(b))
        .collect();

    // Augmented system: rows are coefficient positions, columns the basis.
    let unknowns = columns.len();
    let mut m: Vec<Vec<BigRational>> = (0..=n)
        .map(|k| {
            let mut row: Vec<BigRational> = columns.iter().map(|c| c.coefficient(k).clone()).collect();
            row.push(w.coefficient(k).clone());
            row
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivot_cols = Vec::new();
    for col in 0..unknowns {
        let Some(p) = (pivot_row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, p);
        let inv = m[pivot_row][col].recip();
        for e in m[pivot_row].iter_mut() {
            *e = &*e * &inv;
        }
        let pivot = m[pivot_row].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != pivot_row && !row[col].is_zero() {
                let factor = row[col].clone();
                for (e, p) in row.iter_mut().zip(&pivot).skip(col) {
                    *e = &*e - &factor * p;
                }
            }
        }
        pivot_cols.push(col);
        pivot_row += 1;
    }
    if let Some(r) = (pivot_row..m.len()).find(|&r| !m[r][unknowns].is_zero()) {
        return Err(Error::NotInRing(format!(
            "{w} has no exact expansion in the {cls} ring (equation {r} is inconsistent)"
        )));
    }
    if pivot_cols.len() != unknowns {
        return Err(Error::invariant("ring monomials are linearly dependent"));
    }
    let terms = exponents
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| GleasonTerm {
            g1_power: a,
            g2_power: b,
            coefficient: m[i][unknowns].clone(),
        })
        .collect();
    let out = GleasonDecomposition {
        cls,
        degree: n,
        terms,
    };
    if out.reconstruct()? != *w {
        return Err(Error::invariant("Gleason decomposition does not reconstruct"));
    }
    Ok(out)
}

/// `|C|` as read from an enumerator, when it is a positive integer.
pub fn size_of(w: &WeightEnumerator) -> Option<u64> {
    let v = w.eval_at_one();
    if v.is_integer() && v.is_positive() {
        v.to_integer().to_u64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{span, GeneratorMatrix};

    fn we(n: usize, c: &[i64]) -> WeightEnumerator {
        WeightEnumerator::from_integers(n, c).unwrap()
    }

    fn w_c1() -> WeightEnumerator {
        we(6, &[1, 0, 0, 4, 3, 0, 0])
    }

    #[test]
    fn enumerator_of_c1() {
        let c1 = span(&GeneratorMatrix::from_literals(2, 2, &["11|20", "01|11"]).unwrap()).unwrap();
        let w = WeightEnumerator::of_code(&c1);
        assert_eq!(w, w_c1());
        assert_eq!(w.to_string(), "x^6 + 4*x^3*y^3 + 3*x^2*y^4");
    }

    #[test]
    fn enumerator_of_zero_code_and_c2() {
        let zero = crate::AdditiveCode::zero(crate::AmbientParams::new(1, 2).unwrap());
        assert_eq!(WeightEnumerator::of_code(&zero).to_string(), "x^5");
        let c2 = span(&GeneratorMatrix::from_literals(2, 1, &["11|0", "00|2"]).unwrap()).unwrap();
        assert_eq!(WeightEnumerator::of_code(&c2).to_string(), "x^4 + 2*x^2*y^2 + y^4");
    }

    #[test]
    fn display_format() {
        assert_eq!(we(2, &[0, 1, -1]).to_string(), "x*y - y^2");
        assert_eq!(we(0, &[1]).to_string(), "1");
        assert_eq!(we(3, &[0, 0, 0, 0]).to_string(), "0");
        assert_eq!(we(1, &[-2, 1]).to_string(), "-2*x + y");
        let half = WeightEnumerator::new(1, vec![BigRational::new(1.into(), 2.into()), rat(0)]).unwrap();
        assert_eq!(half.to_string(), "1/2*x");
    }

    #[test]
    fn coefficient_line_round_trip() {
        let w = w_c1();
        assert_eq!(w.to_coefficient_line(), "6: 1 0 0 4 3 0 0");
        assert_eq!(WeightEnumerator::from_coefficient_line(&w.to_coefficient_line()).unwrap(), w);
        assert!(WeightEnumerator::from_coefficient_line("3: 1 2").is_err());
    }

    #[test]
    fn macwilliams_examples() {
        assert_eq!(w_c1().macwilliams(8).unwrap(), w_c1());
        let xn = we(4, &[1, 0, 0, 0, 0]);
        assert_eq!(xn.macwilliams(1).unwrap(), we(4, &[1, 4, 6, 4, 1]));
        let c2 = we(4, &[1, 0, 2, 0, 1]);
        assert_eq!(c2.macwilliams(4).unwrap(), c2);
        assert!(w_c1().macwilliams(3).is_err());
    }

    #[test]
    fn macwilliams_is_an_involution() {
        // {00|0, 11|0} inside Z2^2 x Z4
        let w = we(4, &[1, 0, 1, 0, 0]);
        let dual = w.macwilliams(2).unwrap();
        assert_eq!(dual, we(4, &[1, 2, 2, 2, 1]));
        assert_eq!(dual.macwilliams(8).unwrap(), w);
    }

    #[test]
    fn even_subcode_and_shadow_of_c1() {
        assert_eq!(w_c1().even_subcode(), we(6, &[1, 0, 0, 0, 3, 0, 0]));
        let s = w_c1().shadow().unwrap();
        assert_eq!(s.to_string(), "3*x^4*y^2 + 4*x^3*y^3 + y^6");
        assert_eq!(s.eval_at_one(), rat(8));
        let even = we(4, &[1, 0, 2, 0, 1]);
        assert_eq!(even.even_subcode(), even);
        assert!(we(3, &[1, 0, 0, 0]).shadow().is_err());
    }

    #[test]
    fn transform_matrices() {
        // M^2 = I with M = MACWILLIAMS_MATRIX / sqrt 2.
        let w = we(4, &[3, -1, 2, 5, 7]);
        let once = w.act_by(MACWILLIAMS_MATRIX, true).unwrap();
        assert_eq!(once.act_by(MACWILLIAMS_MATRIX, true).unwrap(), w);
        assert_eq!(w_c1().act_by(NEGATION_MATRIX, false).unwrap(), w_c1());
    }

    #[test]
    fn gleason_c1() {
        let d = gleason_decompose(&w_c1(), SelfDualClass::Type0).unwrap();
        assert_eq!(d.coefficients(), vec![rat(1), rat(0), rat(-3), rat(-2)]);
        assert_eq!(
            d.terms.iter().map(|t| (t.g1_power, t.g2_power)).collect::<Vec<_>>(),
            vec![(3, 0), (2, 1), (1, 2), (0, 3)]
        );
        assert_eq!(d.reconstruct().unwrap(), w_c1());
    }

    #[test]
    fn gleason_trivial_and_wrong_ring() {
        let d = gleason_decompose(&we(2, &[1, 0, 1]), SelfDualClass::Type0).unwrap();
        assert_eq!(d.coefficients(), vec![rat(1), rat(0)]);
        assert!(matches!(
            gleason_decompose(&w_c1(), SelfDualClass::TypeI),
            Err(Error::NotInRing(_))
        ));
        assert!(matches!(
            gleason_decompose(&w_c1(), SelfDualClass::TypeII),
            Err(Error::NotInRing(_))
        ));
        assert!(gleason_decompose(&w_c1(), SelfDualClass::NotSelfDual).is_err());
    }

    #[test]
    fn ring_generator_shapes() {
        let (_, g2) = ring_generators(SelfDualClass::TypeI).unwrap();
        assert_eq!(g2, we(8, &[0, 0, 1, 0, -2, 0, 1, 0, 0]));
        let (g1, g2) = ring_generators(SelfDualClass::TypeII).unwrap();
        assert_eq!(g1.degree(), 8);
        assert_eq!(g2.degree(), 24);
        assert_eq!(g2.coefficient(8), &rat(-4));
        assert_eq!(g2.coefficient(12), &rat(6));
    }
}
