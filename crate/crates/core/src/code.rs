//! Additive codes: closure of generators, group-structure parameters,
//! projections and distinguished subcodes.

use std::collections::HashSet;
use std::fmt;

use crate::algebra::{AmbientParams, MixedVector};
use crate::error::{Error, Result};
use crate::guard::Guard;

/// An ordered list of generator rows over a fixed ambient. Rows may be
/// redundant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorMatrix {
    ambient: AmbientParams,
    rows: Vec<MixedVector>,
}

impl GeneratorMatrix {
    pub fn new(ambient: AmbientParams, rows: Vec<MixedVector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.shape() != ambient) {
            return Err(Error::ShapeMismatch(ambient, bad.shape()));
        }
        Ok(GeneratorMatrix { ambient, rows })
    }

    /// Convenience constructor from vector literals.
    pub fn from_literals(alpha: usize, beta: usize, rows: &[&str]) -> Result<Self> {
        let ambient = AmbientParams::new(alpha, beta)?;
        let rows = rows
            .iter()
            .map(|s| crate::algebra::parse_vector(s, ambient))
            .collect::<Result<Vec<_>>>()?;
        Ok(GeneratorMatrix { ambient, rows })
    }

    pub fn ambient(&self) -> AmbientParams {
        self.ambient
    }

    pub fn rows(&self) -> &[MixedVector] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// The quintuple `(alpha, beta; gamma, delta; kappa)`: the code is
/// isomorphic to `Z2^gamma x Z4^delta` and `kappa` is the dimension of the
/// binary projection of its order-two subcode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TypeParams {
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
    pub delta: usize,
    pub kappa: usize,
}

impl TypeParams {
    pub fn new(alpha: usize, beta: usize, gamma: usize, delta: usize, kappa: usize) -> Self {
        TypeParams {
            alpha,
            beta,
            gamma,
            delta,
            kappa,
        }
    }

    /// `log2 |C| = gamma + 2*delta`.
    pub fn log2_size(&self) -> usize {
        self.gamma + 2 * self.delta
    }
}

impl fmt::Display for TypeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}; {}, {}; {})",
            self.alpha, self.beta, self.gamma, self.delta, self.kappa
        )
    }
}

/// Incremental closure of a set of generators.
pub(crate) struct Closure {
    ambient: AmbientParams,
    set: HashSet<MixedVector>,
    elems: Vec<MixedVector>,
    gens: Vec<MixedVector>,
    log_size: usize,
    max_log_size: usize,
}

impl Closure {
    pub(crate) fn new(ambient: AmbientParams, max_log_size: usize) -> Self {
        let zero = MixedVector::zero(ambient);
        Closure {
            ambient,
            set: HashSet::from([zero]),
            elems: vec![zero],
            gens: Vec::new(),
            log_size: 0,
            max_log_size,
        }
    }

    /// Adds a generator; returns whether the group grew.
    pub(crate) fn add(&mut self, g: MixedVector) -> Result<bool> {
        if self.set.contains(&g) {
            return Ok(false);
        }
        // Index of the current group in <group, g> is the order of g modulo it.
        let grows_by = if self.set.contains(&g.scale(2)) { 1 } else { 2 };
        Guard {
            max_log_size: self.max_log_size,
            ..Guard::current()
        }
        .check_log_size(self.log_size + grows_by)?;
        let base_len = self.elems.len();
        let mut shift = g;
        for _ in 0..(1usize << grows_by) - 1 {
            for i in 0..base_len {
                let w = self.elems[i] + shift;
                self.set.insert(w);
                self.elems.push(w);
            }
            shift += g;
        }
        self.log_size += grows_by;
        self.gens.push(g);
        Ok(true)
    }

    pub(crate) fn into_code(self, generators: Option<Vec<MixedVector>>) -> AdditiveCode {
        let mut codewords = self.elems;
        codewords.sort_unstable();
        AdditiveCode {
            ambient: self.ambient,
            codewords,
            generators: GeneratorMatrix {
                ambient: self.ambient,
                rows: generators.unwrap_or(self.gens),
            },
        }
    }
}

/// A subgroup of `Z2^alpha x Z4^beta`, fully enumerated, together with the
/// generator matrix it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditiveCode {
    ambient: AmbientParams,
    /// Sorted lexicographically.
    codewords: Vec<MixedVector>,
    generators: GeneratorMatrix,
}

/// The additive closure of the rows of `gen`.
pub fn span(gen: &GeneratorMatrix) -> Result<AdditiveCode> {
    AdditiveCode::span(gen)
}

impl AdditiveCode {
    /// The smallest subgroup containing every row, subject to the current
    /// [`Guard`].
    pub fn span(gen: &GeneratorMatrix) -> Result<AdditiveCode> {
        let guard = Guard::current();
        guard.check_length(gen.ambient)?;
        let mut closure = Closure::new(gen.ambient, guard.max_log_size);
        for &row in &gen.rows {
            closure.add(row)?;
        }
        Ok(closure.into_code(Some(gen.rows.clone())))
    }

    /// Wraps a set that is already known to be a subgroup, choosing a small
    /// generating set greedily. Fails if the set is not closed.
    pub fn from_subgroup(ambient: AmbientParams, mut words: Vec<MixedVector>) -> Result<AdditiveCode> {
        if let Some(bad) = words.iter().find(|w| w.shape() != ambient) {
            return Err(Error::ShapeMismatch(ambient, bad.shape()));
        }
        words.sort_unstable();
        words.dedup();
        let guard = Guard::current();
        let mut closure = Closure::new(ambient, guard.max_log_size.max(usize::BITS as usize));
        for &w in &words {
            closure.add(w)?;
            if closure.elems.len() > words.len() {
                break;
            }
        }
        if closure.elems.len() != words.len() {
            return Err(Error::invariant("codeword set is not closed under addition"));
        }
        Ok(closure.into_code(None))
    }

    /// The zero code `{0}`.
    pub fn zero(ambient: AmbientParams) -> AdditiveCode {
        AdditiveCode {
            ambient,
            codewords: vec![MixedVector::zero(ambient)],
            generators: GeneratorMatrix {
                ambient,
                rows: Vec::new(),
            },
        }
    }

    /// The whole ambient group.
    pub fn full(ambient: AmbientParams) -> Result<AdditiveCode> {
        let mut rows = Vec::new();
        for i in 0..ambient.alpha() {
            let mut v = MixedVector::zero(ambient);
            v.set_binary(i, 1);
            rows.push(v);
        }
        for j in 0..ambient.beta() {
            let mut v = MixedVector::zero(ambient);
            v.set_quaternary(j, 1);
            rows.push(v);
        }
        span(&GeneratorMatrix::new(ambient, rows)?)
    }

    pub fn ambient(&self) -> AmbientParams {
        self.ambient
    }

    pub fn generators(&self) -> &GeneratorMatrix {
        &self.generators
    }

    /// Codewords in lexicographic order.
    pub fn codewords(&self) -> &[MixedVector] {
        &self.codewords
    }

    pub fn len(&self) -> usize {
        self.codewords.len()
    }

    /// Never true: a code always contains the zero word.
    pub fn is_empty(&self) -> bool {
        self.codewords.is_empty()
    }

    pub fn log2_size(&self) -> usize {
        self.codewords.len().trailing_zeros() as usize
    }

    pub fn contains(&self, v: &MixedVector) -> bool {
        v.shape() == self.ambient && self.codewords.binary_search(v).is_ok()
    }

    /// Same codeword set (generators may differ).
    pub fn same_set(&self, other: &AdditiveCode) -> bool {
        self.ambient == other.ambient && self.codewords == other.codewords
    }

    /// Applies a coordinate permutation to every codeword.
    pub fn permuted(&self, x_perm: &[usize], y_perm: &[usize]) -> AdditiveCode {
        let mut codewords: Vec<_> = self.codewords.iter().map(|c| c.permute(x_perm, y_perm)).collect();
        codewords.sort_unstable();
        let rows = self.generators.rows.iter().map(|c| c.permute(x_perm, y_perm)).collect();
        AdditiveCode {
            ambient: self.ambient,
            codewords,
            generators: GeneratorMatrix {
                ambient: self.ambient,
                rows,
            },
        }
    }

    /// Group-structure parameters computed from the enumerated codeword set.
    pub fn type_params(&self) -> TypeParams {
        let log_c = self.log2_size();
        let order_two: Vec<_> = self.codewords.iter().filter(|c| c.order() <= 2).collect();
        let log_b = order_two.len().trailing_zeros() as usize;
        let kappa = gf2_rank(order_two.iter().map(|c| u128::from(c.x_bits())));
        TypeParams {
            alpha: self.ambient.alpha(),
            beta: self.ambient.beta(),
            gamma: 2 * log_b - log_c,
            delta: log_c - log_b,
            kappa,
        }
    }

    /// `C_b`: all codewords of order at most two.
    pub fn order_two_subcode(&self) -> AdditiveCode {
        self.filtered(|c| c.order() <= 2)
    }

    /// `C_0`: all codewords of even weight.
    pub fn even_weight_subcode(&self) -> AdditiveCode {
        self.filtered(|c| c.weight() % 2 == 0)
    }

    fn filtered(&self, keep: impl Fn(&MixedVector) -> bool) -> AdditiveCode {
        let words: Vec<_> = self.codewords.iter().copied().filter(|c| keep(c)).collect();
        AdditiveCode::from_subgroup(self.ambient, words).expect("filtered set is a subgroup")
    }

    /// `C_X`: projection onto the binary coordinates, shape `(alpha, 0)`.
    pub fn puncture_x(&self) -> AdditiveCode {
        self.projected(MixedVector::project_x, AmbientParams::new(self.ambient.alpha(), 0))
    }

    /// `C_Y`: projection onto the quaternary coordinates, shape `(0, beta)`.
    pub fn puncture_y(&self) -> AdditiveCode {
        self.projected(MixedVector::project_y, AmbientParams::new(0, self.ambient.beta()))
    }

    fn projected(
        &self,
        project: fn(&MixedVector) -> MixedVector,
        ambient: Result<AmbientParams>,
    ) -> AdditiveCode {
        let ambient = ambient.expect("projection of a valid ambient is valid");
        let mut codewords: Vec<_> = self.codewords.iter().map(project).collect();
        codewords.sort_unstable();
        codewords.dedup();
        let rows = self.generators.rows.iter().map(project).collect();
        AdditiveCode {
            ambient,
            codewords,
            generators: GeneratorMatrix { ambient, rows },
        }
    }

    /// `r = dim {x : (x, 0) in C}`; every word of `C_Y` occurs `2^r` times.
    pub fn x_kernel_dimension(&self) -> usize {
        let count = self
            .codewords
            .iter()
            .filter(|c| c.quaternary_only().is_zero())
            .count();
        count.trailing_zeros() as usize
    }

    /// `C = C_X x C_Y`. Since `C` always sits inside the product, comparing
    /// sizes suffices.
    pub fn is_separable(&self) -> bool {
        self.len() == self.puncture_x().len() * self.puncture_y().len()
    }

    /// `(1^alpha, 2^beta)` is a codeword, i.e. the Gray image is closed under
    /// complement.
    pub fn is_antipodal(&self) -> bool {
        self.contains(&MixedVector::constant(self.ambient, 1, 2))
    }
}

/// Rank over GF(2) of a set of packed bit rows.
pub(crate) fn gf2_rank(rows: impl IntoIterator<Item = u128>) -> usize {
    let mut basis: Vec<u128> = Vec::new();
    for mut r in rows {
        for &b in &basis {
            r = r.min(r ^ b);
        }
        if r != 0 {
            basis.push(r);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> MixedVector {
        s.parse().unwrap()
    }

    fn code(alpha: usize, beta: usize, rows: &[&str]) -> AdditiveCode {
        span(&GeneratorMatrix::from_literals(alpha, beta, rows).unwrap()).unwrap()
    }

    fn c1() -> AdditiveCode {
        code(2, 2, &["11|20", "01|11"])
    }

    fn c2() -> AdditiveCode {
        code(2, 1, &["11|0", "00|2"])
    }

    fn c6() -> AdditiveCode {
        code(
            8,
            4,
            &[
                "10010110|0000",
                "01001110|0000",
                "00100111|0000",
                "00000110|2000",
                "00000110|0200",
                "00000110|0020",
                "00011011|1111",
            ],
        )
    }

    fn set(words: &[&str]) -> Vec<MixedVector> {
        let mut out: Vec<_> = words.iter().map(|s| v(s)).collect();
        out.sort();
        out
    }

    #[test]
    fn span_of_c1() {
        let c = c1();
        let d = ["00|00", "00|22", "11|02", "11|20"];
        let shifted: Vec<String> = d.iter().map(|w| (v(w) + v("01|11")).to_string()).collect();
        let mut all: Vec<&str> = d.to_vec();
        all.extend(shifted.iter().map(String::as_str));
        assert_eq!(c.codewords(), set(&all).as_slice());
    }

    #[test]
    fn span_of_nothing_is_zero() {
        let c = code(3, 2, &[]);
        assert_eq!(c.codewords(), &[MixedVector::zero(c.ambient())]);
        assert_eq!(c.type_params(), TypeParams::new(3, 2, 0, 0, 0));
    }

    #[test]
    fn span_of_c2() {
        assert_eq!(c2().codewords(), set(&["00|0", "00|2", "11|0", "11|2"]).as_slice());
    }

    #[test]
    fn type_params_of_examples() {
        assert_eq!(c1().type_params(), TypeParams::new(2, 2, 1, 1, 1));
        assert_eq!(c2().type_params(), TypeParams::new(2, 1, 2, 0, 1));
        let t = c6().type_params();
        assert_eq!((t.gamma, t.delta), (6, 1));
    }

    #[test]
    fn projections() {
        let c = c2();
        assert_eq!(c.puncture_y().codewords(), set(&["|0", "|2"]).as_slice());
        let pure_q = code(0, 2, &["|11"]);
        assert_eq!(pure_q.puncture_x().codewords(), set(&["|"]).as_slice());
        let c = c1();
        assert_eq!(c.puncture_y().len(), 8);
        assert_eq!(c.x_kernel_dimension(), 0);
        assert_eq!(c.len(), c.puncture_y().len() << c.x_kernel_dimension());
        assert_eq!(c2().x_kernel_dimension(), 1);
    }

    #[test]
    fn distinguished_subcodes() {
        assert_eq!(
            c1().order_two_subcode().codewords(),
            set(&["00|00", "11|20", "11|02", "00|22"]).as_slice()
        );
        assert!(c2().order_two_subcode().same_set(&c2()));
        assert_eq!(c6().order_two_subcode().len(), 1 << 7);
        assert_eq!(
            c1().even_weight_subcode().codewords(),
            set(&["00|00", "11|20", "11|02", "00|22"]).as_slice()
        );
        assert!(c2().even_weight_subcode().same_set(&c2()));
    }

    #[test]
    fn separability_and_antipodality() {
        assert!(c2().is_separable());
        assert!(c2().is_antipodal());
        assert!(!c1().is_separable());
        assert!(!c1().is_antipodal());
        let c3 = code(
            4,
            4,
            &["1111|0000", "0101|2000", "0101|0200", "0101|0020", "0011|1111"],
        );
        assert!(!c3.is_separable());
    }

    #[test]
    fn from_subgroup_rejects_non_groups() {
        let ambient = AmbientParams::new(2, 0).unwrap();
        assert!(AdditiveCode::from_subgroup(ambient, vec![v("00|"), v("10|"), v("01|")]).is_err());
        let ok = AdditiveCode::from_subgroup(ambient, vec![v("00|"), v("11|")]).unwrap();
        assert_eq!(ok.generators().rows(), &[v("11|")]);
    }

    #[test]
    fn guard_is_enforced() {
        let big = AmbientParams::new(40, 0).unwrap();
        assert!(matches!(AdditiveCode::full(big), Err(Error::GuardExceeded(_))));
    }

    #[test]
    fn full_ambient_size() {
        let full = AdditiveCode::full(AmbientParams::new(2, 2).unwrap()).unwrap();
        assert_eq!(full.len(), 64);
        assert_eq!(full.type_params(), TypeParams::new(2, 2, 2, 2, 2));
    }
}
