//! Arithmetic on mixed vectors of `Z2^alpha x Z4^beta`.
//!
//! A [`MixedVector`] is stored as three bitplanes: one for the binary part and
//! a low/high pair for the quaternary part (`value = lo + 2*hi`). Coordinate
//! `i` of a part of length `len` lives at bit `len - 1 - i`, so integer order of
//! a bitplane coincides with lexicographic order of the coordinate sequence.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Shape `(alpha, beta)` of the ambient group `Z2^alpha x Z4^beta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct AmbientParams {
    alpha: usize,
    beta: usize,
}

impl AmbientParams {
    /// Largest supported length of either part.
    pub const MAX_PART: usize = 64;
    /// Largest supported binary length `alpha + 2*beta`.
    pub const MAX_LENGTH: usize = 128;

    pub fn new(alpha: usize, beta: usize) -> Result<Self> {
        if alpha > Self::MAX_PART || beta > Self::MAX_PART || alpha + 2 * beta > Self::MAX_LENGTH {
            return Err(Error::UnsupportedAmbient {
                alpha,
                beta,
                reason: format!(
                    "parts are limited to {} coordinates and the binary length to {}",
                    Self::MAX_PART,
                    Self::MAX_LENGTH
                ),
            });
        }
        Ok(AmbientParams { alpha, beta })
    }

    #[inline]
    pub fn alpha(&self) -> usize {
        self.alpha
    }

    #[inline]
    pub fn beta(&self) -> usize {
        self.beta
    }

    /// Binary length `n = alpha + 2*beta`; the ambient group has `2^n` elements.
    #[inline]
    pub fn length(&self) -> usize {
        self.alpha + 2 * self.beta
    }

    /// Shape of the direct product of two ambients (binary parts adjacent,
    /// quaternary parts adjacent).
    pub fn concat(&self, other: &AmbientParams) -> Result<AmbientParams> {
        AmbientParams::new(self.alpha + other.alpha, self.beta + other.beta)
    }

    /// Every vector of the ambient group, in lexicographic order.
    ///
    /// Only meaningful for small ambients; the caller is responsible for
    /// bounding `length()`.
    pub fn vectors(&self) -> AmbientIter {
        assert!(self.length() < 64, "ambient too large to enumerate");
        AmbientIter {
            shape: *self,
            next: 0,
            end: 1u64 << self.length(),
        }
    }
}

impl fmt::Display for AmbientParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.alpha, self.beta)
    }
}

/// Iterator over an ambient group in lexicographic order.
#[derive(Debug, Clone)]
pub struct AmbientIter {
    shape: AmbientParams,
    next: u64,
    end: u64,
}

impl Iterator for AmbientIter {
    type Item = MixedVector;

    fn next(&mut self) -> Option<MixedVector> {
        if self.next >= self.end {
            return None;
        }
        let k = self.next;
        self.next += 1;
        let beta = self.shape.beta;
        let (mut lo, mut hi) = (0u64, 0u64);
        for j in 0..beta {
            let digit = (k >> (2 * j)) & 3;
            lo |= (digit & 1) << j;
            hi |= (digit >> 1) << j;
        }
        Some(MixedVector {
            shape: self.shape,
            x: k >> (2 * beta),
            lo,
            hi,
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for AmbientIter {}

#[inline]
fn mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

#[inline]
fn bit(len: usize, i: usize) -> u64 {
    1u64 << (len - 1 - i)
}

/// An element `(x | y)` of `Z2^alpha x Z4^beta`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MixedVector {
    shape: AmbientParams,
    x: u64,
    lo: u64,
    hi: u64,
}

impl MixedVector {
    pub fn zero(shape: AmbientParams) -> Self {
        MixedVector {
            shape,
            x: 0,
            lo: 0,
            hi: 0,
        }
    }

    /// Builds a vector from residues; entries are validated, not reduced.
    pub fn from_parts(binary: &[u8], quaternary: &[u8]) -> Result<Self> {
        let shape = AmbientParams::new(binary.len(), quaternary.len())?;
        let mut v = MixedVector::zero(shape);
        for (i, &b) in binary.iter().enumerate() {
            if b > 1 {
                return Err(Error::InvalidLiteral {
                    literal: format!("{binary:?}|{quaternary:?}"),
                    reason: format!("binary entry {b} is not in {{0,1}}"),
                });
            }
            v.set_binary(i, b);
        }
        for (j, &q) in quaternary.iter().enumerate() {
            if q > 3 {
                return Err(Error::InvalidLiteral {
                    literal: format!("{binary:?}|{quaternary:?}"),
                    reason: format!("quaternary entry {q} is not in {{0,1,2,3}}"),
                });
            }
            v.set_quaternary(j, q);
        }
        Ok(v)
    }

    /// The constant vector `(b^alpha, q^beta)`, e.g. `(1^alpha, 2^beta)`.
    pub fn constant(shape: AmbientParams, b: u8, q: u8) -> Self {
        let xm = mask(shape.alpha);
        let ym = mask(shape.beta);
        MixedVector {
            shape,
            x: if b & 1 == 1 { xm } else { 0 },
            lo: if q & 1 == 1 { ym } else { 0 },
            hi: if q & 2 == 2 { ym } else { 0 },
        }
    }

    #[inline]
    pub fn shape(&self) -> AmbientParams {
        self.shape
    }

    #[inline]
    pub fn alpha(&self) -> usize {
        self.shape.alpha
    }

    #[inline]
    pub fn beta(&self) -> usize {
        self.shape.beta
    }

    pub fn binary_at(&self, i: usize) -> u8 {
        assert!(i < self.shape.alpha);
        u8::from(self.x & bit(self.shape.alpha, i) != 0)
    }

    pub fn quaternary_at(&self, j: usize) -> u8 {
        assert!(j < self.shape.beta);
        let b = bit(self.shape.beta, j);
        u8::from(self.lo & b != 0) | (u8::from(self.hi & b != 0) << 1)
    }

    pub fn set_binary(&mut self, i: usize, value: u8) {
        assert!(i < self.shape.alpha);
        let b = bit(self.shape.alpha, i);
        if value & 1 == 1 {
            self.x |= b;
        } else {
            self.x &= !b;
        }
    }

    pub fn set_quaternary(&mut self, j: usize, value: u8) {
        assert!(j < self.shape.beta);
        let b = bit(self.shape.beta, j);
        self.lo = if value & 1 == 1 { self.lo | b } else { self.lo & !b };
        self.hi = if value & 2 == 2 { self.hi | b } else { self.hi & !b };
    }

    pub fn binary_part(&self) -> Vec<u8> {
        (0..self.shape.alpha).map(|i| self.binary_at(i)).collect()
    }

    pub fn quaternary_part(&self) -> Vec<u8> {
        (0..self.shape.beta).map(|j| self.quaternary_at(j)).collect()
    }

    /// The vector with its quaternary part zeroed.
    pub fn binary_only(&self) -> Self {
        MixedVector {
            lo: 0,
            hi: 0,
            ..*self
        }
    }

    /// The vector with its binary part zeroed.
    pub fn quaternary_only(&self) -> Self {
        MixedVector { x: 0, ..*self }
    }

    /// Projection onto the binary coordinates, as a vector of shape `(alpha, 0)`.
    pub fn project_x(&self) -> Self {
        MixedVector {
            shape: AmbientParams {
                alpha: self.shape.alpha,
                beta: 0,
            },
            x: self.x,
            lo: 0,
            hi: 0,
        }
    }

    /// Projection onto the quaternary coordinates, as a vector of shape `(0, beta)`.
    pub fn project_y(&self) -> Self {
        MixedVector {
            shape: AmbientParams {
                alpha: 0,
                beta: self.shape.beta,
            },
            x: 0,
            lo: self.lo,
            hi: self.hi,
        }
    }

    /// `(x, x' | y, y')` for `self = (x | y)` and `other = (x' | y')`.
    pub fn concat(&self, other: &MixedVector) -> Result<Self> {
        let shape = self.shape.concat(&other.shape)?;
        let sx = |a: u64, len: usize| if len >= 64 { 0 } else { a << len };
        Ok(MixedVector {
            shape,
            x: sx(self.x, other.shape.alpha) | other.x,
            lo: sx(self.lo, other.shape.beta) | other.lo,
            hi: sx(self.hi, other.shape.beta) | other.hi,
        })
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.x == 0 && self.lo == 0 && self.hi == 0
    }

    /// Additive order: 1, 2 or 4.
    pub fn order(&self) -> u8 {
        if self.is_zero() {
            1
        } else if self.lo == 0 {
            2
        } else {
            4
        }
    }

    /// Multiplication by a scalar of `Z4`; it acts mod 2 on the binary part.
    pub fn scale(&self, k: u8) -> Self {
        match k & 3 {
            0 => MixedVector::zero(self.shape),
            1 => *self,
            2 => MixedVector {
                shape: self.shape,
                x: 0,
                lo: 0,
                hi: self.lo,
            },
            _ => -*self,
        }
    }

    /// Hamming weight of the binary part.
    #[inline]
    pub fn hamming_weight_x(&self) -> usize {
        self.x.count_ones() as usize
    }

    /// Lee weight of the quaternary part (0, 1, 2, 1 for 0, 1, 2, 3).
    #[inline]
    pub fn lee_weight_y(&self) -> usize {
        (self.lo.count_ones() + 2 * (self.hi & !self.lo).count_ones()) as usize
    }

    /// Number of quaternary coordinates of order four (entries 1 or 3).
    #[inline]
    pub fn p_count(&self) -> usize {
        self.lo.count_ones() as usize
    }

    /// `wt_H(x) + wt_L(y)`, the Hamming weight of the Gray image.
    #[inline]
    pub fn weight(&self) -> usize {
        self.hamming_weight_x() + self.lee_weight_y()
    }

    /// Lee distance, equal to the Hamming distance of the Gray images.
    pub fn distance(&self, other: &MixedVector) -> Result<usize> {
        self.check_shape(other)?;
        Ok((*self - *other).weight())
    }

    /// Gray image `(x, phi(y_1), ..., phi(y_beta))` with
    /// `phi(0)=00, phi(1)=01, phi(2)=11, phi(3)=10`.
    pub fn gray_map(&self) -> Vec<u8> {
        let mut out = self.binary_part();
        out.reserve(2 * self.shape.beta);
        for j in 0..self.shape.beta {
            let b = bit(self.shape.beta, j);
            let hi = u8::from(self.hi & b != 0);
            let lo = u8::from(self.lo & b != 0);
            out.push(hi);
            out.push(hi ^ lo);
        }
        out
    }

    /// Gray image packed into a `u128` (binary length is at most 128).
    pub(crate) fn gray_packed(&self) -> u128 {
        let beta = self.shape.beta;
        let mut y = 0u128;
        for j in 0..beta {
            let b = bit(beta, j);
            let hi = u128::from(self.hi & b != 0);
            let lo = u128::from(self.lo & b != 0);
            y = (y << 2) | (hi << 1) | (hi ^ lo);
        }
        if 2 * beta >= 128 {
            y
        } else {
            (u128::from(self.x) << (2 * beta)) | y
        }
    }

    fn check_shape(&self, other: &MixedVector) -> Result<()> {
        if self.shape != other.shape {
            Err(Error::ShapeMismatch(self.shape, other.shape))
        } else {
            Ok(())
        }
    }

    /// `2*sum(u_i v_i) + sum(u_j v_j)` in `Z4`.
    pub fn inner_product(&self, other: &MixedVector) -> Result<u8> {
        self.check_shape(other)?;
        Ok(self.dot(other))
    }

    /// Unchecked inner product; shapes must agree.
    #[inline]
    pub(crate) fn dot(&self, other: &MixedVector) -> u8 {
        debug_assert_eq!(self.shape, other.shape);
        let bin = (self.x & other.x).count_ones() & 1;
        let units = (self.lo & other.lo).count_ones();
        let cross = ((self.lo & other.hi).count_ones() + (self.hi & other.lo).count_ones()) & 1;
        ((2 * bin + units + 2 * cross) & 3) as u8
    }

    /// Binary inner product of the binary parts, in `Z2`.
    pub fn binary_inner(&self, other: &MixedVector) -> Result<u8> {
        if self.shape.alpha != other.shape.alpha {
            return Err(Error::ShapeMismatch(self.shape, other.shape));
        }
        Ok(((self.x & other.x).count_ones() & 1) as u8)
    }

    /// Quaternary inner product of the quaternary parts, in `Z4`.
    pub fn quaternary_inner(&self, other: &MixedVector) -> Result<u8> {
        if self.shape.beta != other.shape.beta {
            return Err(Error::ShapeMismatch(self.shape, other.shape));
        }
        Ok(self.quaternary_only().project_y().dot(&other.project_y()))
    }

    /// Componentwise product (AND on the binary part, product mod 4 on the
    /// quaternary part).
    pub fn componentwise_product(&self, other: &MixedVector) -> Result<Self> {
        self.check_shape(other)?;
        Ok(MixedVector {
            shape: self.shape,
            x: self.x & other.x,
            lo: self.lo & other.lo,
            hi: (self.lo & other.hi) ^ (self.hi & other.lo),
        })
    }

    /// Applies a coordinate permutation: coordinate `i` of the result is
    /// coordinate `x_perm[i]` (resp. `y_perm[i]`) of `self`.
    pub fn permute(&self, x_perm: &[usize], y_perm: &[usize]) -> Self {
        debug_assert_eq!(x_perm.len(), self.shape.alpha);
        debug_assert_eq!(y_perm.len(), self.shape.beta);
        let mut out = MixedVector::zero(self.shape);
        for (i, &src) in x_perm.iter().enumerate() {
            out.set_binary(i, self.binary_at(src));
        }
        for (j, &src) in y_perm.iter().enumerate() {
            out.set_quaternary(j, self.quaternary_at(src));
        }
        out
    }

    /// Inverse of [`MixedVector::permute`].
    pub fn unpermute(&self, x_perm: &[usize], y_perm: &[usize]) -> Self {
        let mut out = MixedVector::zero(self.shape);
        for (i, &dst) in x_perm.iter().enumerate() {
            out.set_binary(dst, self.binary_at(i));
        }
        for (j, &dst) in y_perm.iter().enumerate() {
            out.set_quaternary(dst, self.quaternary_at(j));
        }
        out
    }

    #[inline]
    pub(crate) fn x_bits(&self) -> u64 {
        self.x
    }

}

impl Add for MixedVector {
    type Output = MixedVector;

    #[inline]
    fn add(self, rhs: MixedVector) -> MixedVector {
        debug_assert_eq!(self.shape, rhs.shape);
        MixedVector {
            shape: self.shape,
            x: self.x ^ rhs.x,
            lo: self.lo ^ rhs.lo,
            hi: self.hi ^ rhs.hi ^ (self.lo & rhs.lo),
        }
    }
}

impl AddAssign for MixedVector {
    #[inline]
    fn add_assign(&mut self, rhs: MixedVector) {
        *self = *self + rhs;
    }
}

impl Neg for MixedVector {
    type Output = MixedVector;

    #[inline]
    fn neg(self) -> MixedVector {
        MixedVector {
            hi: self.hi ^ self.lo,
            ..self
        }
    }
}

impl Sub for MixedVector {
    type Output = MixedVector;

    #[inline]
    fn sub(self, rhs: MixedVector) -> MixedVector {
        self + (-rhs)
    }
}

impl Ord for MixedVector {
    /// Lexicographic on `(binary_part, quaternary_part)`, after the shape.
    fn cmp(&self, other: &Self) -> Ordering {
        self.shape
            .cmp(&other.shape)
            .then(self.x.cmp(&other.x))
            .then_with(|| {
                let diff = (self.lo ^ other.lo) | (self.hi ^ other.hi);
                if diff == 0 {
                    return Ordering::Equal;
                }
                let top = 63 - diff.leading_zeros();
                let val = |v: &MixedVector| ((v.hi >> top) & 1) * 2 + ((v.lo >> top) & 1);
                val(self).cmp(&val(other))
            })
    }
}

impl PartialOrd for MixedVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MixedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.binary_part() {
            write!(f, "{b}")?;
        }
        f.write_str("|")?;
        for q in self.quaternary_part() {
            write!(f, "{q}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MixedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for MixedVector {
    type Err = Error;

    /// Parses the literal syntax `xx..x|yy..y`, e.g. `11|20` or `|2`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidLiteral {
            literal: s.to_string(),
            reason: reason.to_string(),
        };
        let (xs, ys) = s.split_once('|').ok_or_else(|| bad("missing '|' separator"))?;
        if ys.contains('|') {
            return Err(bad("more than one '|' separator"));
        }
        let binary = xs
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(bad("binary part must use only 0 and 1")),
            })
            .collect::<Result<Vec<u8>>>()?;
        let quaternary = ys
            .chars()
            .map(|c| match c {
                '0'..='3' => Ok(c as u8 - b'0'),
                _ => Err(bad("quaternary part must use only 0, 1, 2 and 3")),
            })
            .collect::<Result<Vec<u8>>>()?;
        MixedVector::from_parts(&binary, &quaternary)
    }
}

/// Parses a vector literal and checks it against an expected shape.
pub fn parse_vector(literal: &str, shape: AmbientParams) -> Result<MixedVector> {
    let v: MixedVector = literal.trim().parse()?;
    if v.shape() != shape {
        return Err(Error::InvalidLiteral {
            literal: literal.to_string(),
            reason: format!("expected shape {shape}, found {}", v.shape()),
        });
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(s: &str) -> MixedVector {
        s.parse().unwrap()
    }

    #[test]
    fn gray_map_table() {
        assert_eq!(v("|0").gray_map(), vec![0, 0]);
        assert_eq!(v("|1").gray_map(), vec![0, 1]);
        assert_eq!(v("|2").gray_map(), vec![1, 1]);
        assert_eq!(v("|3").gray_map(), vec![1, 0]);
        assert_eq!(v("01|11").gray_map(), vec![0, 1, 0, 1, 0, 1]);
        assert_eq!(v("000|0000").gray_map(), vec![0; 11]);
    }

    #[test]
    fn weights() {
        assert_eq!(v("01|11").weight(), 3);
        assert_eq!(v("11|20").weight(), 4);
        assert_eq!(v("00|00").weight(), 0);
        assert_eq!(v("|0123").lee_weight_y(), 4);
    }

    #[test]
    fn inner_products() {
        assert_eq!(v("11|20").inner_product(&v("01|11")).unwrap(), 0);
        assert_eq!(v("01|11").inner_product(&v("01|11")).unwrap(), 0);
        assert_eq!(v("00|00").inner_product(&v("10|31")).unwrap(), 0);
        assert!(v("1|2").inner_product(&v("11|2")).is_err());

        assert_eq!(v("0101|").binary_inner(&v("0011|")).unwrap(), 1);
        assert_eq!(v("|2000").quaternary_inner(&v("|1111")).unwrap(), 2);
        assert_eq!(v("0000|0000").quaternary_inner(&v("1011|3212")).unwrap(), 0);
        assert!(v("01|").binary_inner(&v("011|")).is_err());
    }

    #[test]
    fn p_count_examples() {
        assert_eq!(v("|1111").p_count(), 4);
        assert_eq!(v("|20").p_count(), 0);
        assert_eq!(v("|13").p_count(), 2);
    }

    #[test]
    fn literal_edge_cases() {
        let a = v("|2");
        assert_eq!((a.alpha(), a.beta()), (0, 1));
        let b = v("11|");
        assert_eq!((b.alpha(), b.beta()), (2, 0));
        assert_eq!(v("|").to_string(), "|");
        assert!("112|0".parse::<MixedVector>().is_err());
        assert!("11|4".parse::<MixedVector>().is_err());
        assert!("1120".parse::<MixedVector>().is_err());
        assert!("1|1|1".parse::<MixedVector>().is_err());
        let shape = AmbientParams::new(2, 2).unwrap();
        assert!(parse_vector("11|2", shape).is_err());
        assert_eq!(parse_vector(" 11|22 ", shape).unwrap(), v("11|22"));
    }

    #[test]
    fn scalar_action_and_order() {
        let a = v("11|13");
        assert_eq!(a.scale(2), v("00|22"));
        assert_eq!(a.scale(3), v("11|31"));
        assert_eq!(a.order(), 4);
        assert_eq!(v("10|20").order(), 2);
        assert_eq!(v("00|00").order(), 1);
        assert_eq!(a + a.scale(3), v("00|00"));
    }

    #[test]
    fn lexicographic_order() {
        let shape = AmbientParams::new(1, 2).unwrap();
        let all: Vec<_> = shape.vectors().collect();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        assert_eq!(all[0], v("0|00"));
        assert_eq!(all[1], v("0|01"));
        assert_eq!(all[4], v("0|10"));
        assert_eq!(all[16], v("1|00"));
    }

    #[test]
    fn concat_and_permute() {
        let a = v("10|21");
        let b = v("1|3");
        assert_eq!(a.concat(&b).unwrap(), v("101|213"));
        let p = a.permute(&[1, 0], &[1, 0]);
        assert_eq!(p, v("01|12"));
        assert_eq!(p.unpermute(&[1, 0], &[1, 0]), a);
    }

    fn arb_pair() -> impl Strategy<Value = (MixedVector, MixedVector, MixedVector)> {
        (0usize..6, 0usize..6).prop_flat_map(|(a, b)| {
            let part = move || {
                (
                    proptest::collection::vec(0u8..2, a),
                    proptest::collection::vec(0u8..4, b),
                )
                    .prop_map(|(x, y)| MixedVector::from_parts(&x, &y).unwrap())
            };
            (part(), part(), part())
        })
    }

    fn hamming(a: &[u8], b: &[u8]) -> usize {
        a.iter().zip(b).filter(|(p, q)| p != q).count()
    }

    proptest! {
        #[test]
        fn gray_map_is_an_isometry((u, w, _) in arb_pair()) {
            prop_assert_eq!((u - w).weight(), hamming(&u.gray_map(), &w.gray_map()));
            prop_assert_eq!(u.weight(), u.gray_map().iter().filter(|&&b| b == 1).count());
        }

        #[test]
        fn self_inner_product_congruence((u, _, _) in arb_pair()) {
            let expected = ((2 * u.hamming_weight_x() + u.p_count()) % 4) as u8;
            prop_assert_eq!(u.inner_product(&u).unwrap(), expected);
        }

        #[test]
        fn gray_image_of_a_sum((u, w, _) in arb_pair()) {
            let (u, w) = (u.quaternary_only(), w.quaternary_only());
            let twice_product = u.componentwise_product(&w).unwrap().scale(2);
            let lhs = (u + w).gray_map();
            let rhs: Vec<u8> = u.gray_map().iter()
                .zip(w.gray_map())
                .zip(twice_product.gray_map())
                .map(|((a, b), c)| a ^ b ^ c)
                .collect();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn inner_product_is_bilinear_and_symmetric((u, w, z) in arb_pair()) {
            let lhs = (u + w).inner_product(&z).unwrap();
            let rhs = (u.inner_product(&z).unwrap() + w.inner_product(&z).unwrap()) % 4;
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(u.inner_product(&w).unwrap(), w.inner_product(&u).unwrap());
            let split = (2 * u.binary_inner(&w).unwrap() + u.quaternary_inner(&w).unwrap()) % 4;
            prop_assert_eq!(u.inner_product(&w).unwrap(), split);
        }

        #[test]
        fn literal_round_trip((u, _, _) in arb_pair()) {
            prop_assert_eq!(u.to_string().parse::<MixedVector>().unwrap(), u);
        }
    }
}
