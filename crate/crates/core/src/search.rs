//! Exhaustive search for self-dual codes on a small ambient.
//!
//! A self-dual code of type `(alpha, beta; gamma, delta; kappa)` has
//! `alpha = 2 kappa` and `gamma = beta + kappa - 2 delta`, so up to a
//! permutation within the binary and within the quaternary coordinates it has
//! a generator matrix
//!
//! ```text
//!   [ I_k  T_b | 2T_2  0    0   ]     k rows
//!   [ 0    0   | 2T_1  2I_g 0   ]     g = beta - 2 delta rows
//!   [ 0    S_b | S_q   R    I_d ]     d = delta rows
//! ```
//!
//! with `delta` leading quaternary columns. The search walks these templates
//! row by row, keeping only rows orthogonal to themselves and to all earlier
//! rows, and pruning on weight residues when a class is requested. Each leaf
//! is a self-dual code.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::algebra::{AmbientParams, MixedVector};
use crate::classify::{classify, SelfDualClass};
use crate::code::{span, AdditiveCode, GeneratorMatrix};
use crate::error::{Error, Result};
use crate::guard::Guard;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchOptions {
    /// Keep only codes of this class.
    pub cls: Option<SelfDualClass>,
    /// Keep one code per class of permutation equivalence (permuting within
    /// the binary and within the quaternary coordinates).
    pub dedup_permutations: bool,
    /// Overrides the search limit on `alpha + 2 beta` of the current guard.
    pub max_length: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchHit {
    pub generators: GeneratorMatrix,
    pub code: AdditiveCode,
    pub class: SelfDualClass,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchCensus {
    pub ambient: AmbientParams,
    pub options: SearchOptions,
    /// Sorted by generator matrix.
    pub hits: Vec<SearchHit>,
}

impl SearchCensus {
    pub fn len(&self) -> usize {
        self.hits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hits.is_empty()
    }
}

/// One free position of a row template.
#[derive(Debug, Clone, Copy)]
enum Slot {
    /// A binary coordinate taking 0 or 1.
    Binary(usize),
    /// A quaternary coordinate taking 0 or 2.
    Doubled(usize),
    /// A quaternary coordinate taking 0 or 1.
    Unit(usize),
    /// A quaternary coordinate taking any value.
    Free(usize),
}

impl Slot {
    fn bits(self) -> u32 {
        match self {
            Slot::Free(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone)]
struct Template {
    fixed: MixedVector,
    slots: Vec<Slot>,
    /// 2 for rows of order two, 4 for rows of order four.
    order: u8,
}

impl Template {
    fn bits(&self) -> u32 {
        self.slots.iter().map(|s| s.bits()).sum()
    }

    fn instantiate(&self, mut word: u64) -> MixedVector {
        let mut v = self.fixed;
        for slot in &self.slots {
            match *slot {
                Slot::Binary(i) => v.set_binary(i, (word & 1) as u8),
                Slot::Doubled(j) => v.set_quaternary(j, 2 * (word & 1) as u8),
                Slot::Unit(j) => v.set_quaternary(j, (word & 1) as u8),
                Slot::Free(j) => v.set_quaternary(j, (word & 3) as u8),
            }
            word >>= slot.bits();
        }
        v
    }
}

fn templates(ambient: AmbientParams, delta: usize) -> Vec<Template> {
    let k = ambient.alpha() / 2;
    let m = delta;
    let g = ambient.beta() - 2 * delta;
    let mut out = Vec::new();
    for i in 0..k {
        let mut fixed = MixedVector::zero(ambient);
        fixed.set_binary(i, 1);
        let slots = (0..k)
            .map(|j| Slot::Binary(k + j))
            .chain((0..m).map(Slot::Doubled))
            .collect();
        out.push(Template { fixed, slots, order: 2 });
    }
    for l in 0..g {
        let mut fixed = MixedVector::zero(ambient);
        fixed.set_quaternary(m + l, 2);
        out.push(Template {
            fixed,
            slots: (0..m).map(Slot::Doubled).collect(),
            order: 2,
        });
    }
    for e in 0..delta {
        let mut fixed = MixedVector::zero(ambient);
        fixed.set_quaternary(m + g + e, 1);
        let slots = (0..k)
            .map(|j| Slot::Binary(k + j))
            .chain((0..m).map(Slot::Free))
            .chain((0..g).map(|l| Slot::Unit(m + l)))
            .collect();
        out.push(Template { fixed, slots, order: 4 });
    }
    out
}

/// Weight condition every codeword must meet for the class to be reachable.
fn weight_ok(cls: Option<SelfDualClass>, w: usize) -> bool {
    match cls {
        Some(SelfDualClass::TypeI) => w.is_multiple_of(2),
        Some(SelfDualClass::TypeII) => w.is_multiple_of(4),
        _ => true,
    }
}

struct Walker<'a> {
    templates: &'a [Template],
    cls: Option<SelfDualClass>,
    leaves: Vec<(Vec<MixedVector>, Vec<MixedVector>)>,
}

impl Walker<'_> {
    fn descend(&mut self, depth: usize, rows: &mut Vec<MixedVector>, words: &[MixedVector]) {
        if depth == self.templates.len() {
            let mut sorted = words.to_vec();
            sorted.sort_unstable();
            self.leaves.push((rows.clone(), sorted));
            return;
        }
        let t = &self.templates[depth];
        for assignment in 0..(1u64 << t.bits()) {
            let v = t.instantiate(assignment);
            if let Some(next) = extend(rows, words, &v, t.order, self.cls) {
                rows.push(v);
                self.descend(depth + 1, rows, &next);
                rows.pop();
            }
        }
    }
}

/// The span of `words` and `v`, if `v` is orthogonal to itself and to every
/// row so far and every new word passes the class weight filter.
fn extend(
    rows: &[MixedVector],
    words: &[MixedVector],
    v: &MixedVector,
    order: u8,
    cls: Option<SelfDualClass>,
) -> Option<Vec<MixedVector>> {
    if v.dot(v) != 0 || rows.iter().any(|r| r.dot(v) != 0) {
        return None;
    }
    let mut next = Vec::with_capacity(words.len() * order as usize);
    next.extend_from_slice(words);
    let mut shift = *v;
    for _ in 1..order {
        for w in words {
            let u = *w + shift;
            if !weight_ok(cls, u.weight()) {
                return None;
            }
            next.push(u);
        }
        shift += *v;
    }
    Some(next)
}

/// All self-dual codes on `(alpha, beta)` whose generator matrix has the
/// template shape above, after optional class and equivalence filtering.
pub fn search(alpha: usize, beta: usize, options: SearchOptions) -> Result<SearchCensus> {
    let ambient = AmbientParams::new(alpha, beta)?;
    let mut guard = Guard::current();
    if let Some(limit) = options.max_length {
        guard.max_search_length = limit;
    }
    guard.check_search(ambient)?;
    if options.cls == Some(SelfDualClass::NotSelfDual) {
        return Err(Error::precondition("the search only produces self-dual codes"));
    }
    let mut census = SearchCensus {
        ambient,
        options,
        hits: Vec::new(),
    };
    if alpha % 2 == 1 {
        return Ok(census);
    }

    let shapes: Vec<Vec<Template>> = (0..=beta / 2).map(|d| templates(ambient, d)).collect();
    let zero = vec![MixedVector::zero(ambient)];
    // Split the tree at the first row so workers share the load.
    let tasks: Vec<(usize, Vec<MixedVector>, Vec<MixedVector>)> = shapes
        .iter()
        .enumerate()
        .flat_map(|(si, ts)| match ts.first() {
            None => vec![(si, Vec::new(), zero.clone())],
            Some(t) => (0..(1u64 << t.bits()))
                .filter_map(|a| {
                    let v = t.instantiate(a);
                    extend(&[], &zero, &v, t.order, options.cls).map(|w| (si, vec![v], w))
                })
                .collect(),
        })
        .collect();
    let leaves: Vec<(Vec<MixedVector>, Vec<MixedVector>)> = tasks
        .into_par_iter()
        .flat_map_iter(|(si, mut rows, words)| {
            let mut walker = Walker {
                templates: &shapes[si],
                cls: options.cls,
                leaves: Vec::new(),
            };
            walker.descend(rows.len(), &mut rows, &words);
            walker.leaves
        })
        .collect();

    // Identical codeword sets collapse to the smallest generator matrix.
    let mut unique: BTreeMap<Vec<MixedVector>, Vec<MixedVector>> = BTreeMap::new();
    for (rows, words) in leaves {
        unique
            .entry(words)
            .and_modify(|r| {
                if rows < *r {
                    *r = rows.clone();
                }
            })
            .or_insert(rows);
    }
    let mut hits = Vec::new();
    for (_, rows) in unique {
        let generators = GeneratorMatrix::new(ambient, rows)?;
        let code = span(&generators)?;
        let class = classify(&code);
        if class == SelfDualClass::NotSelfDual {
            return Err(Error::invariant(format!(
                "search produced a code that is not self-dual: {:?}",
                generators.rows()
            )));
        }
        if options.cls.is_none_or(|c| c == class) {
            hits.push(SearchHit {
                generators,
                code,
                class,
            });
        }
    }
    hits.sort_by(|a, b| a.generators.rows().cmp(b.generators.rows()));
    if options.dedup_permutations {
        let mut kept: Vec<SearchHit> = Vec::new();
        for h in hits {
            if !kept.iter().any(|k| permutation_equivalent(&k.code, &h.code)) {
                kept.push(h);
            }
        }
        hits = kept;
    }
    census.hits = hits;
    Ok(census)
}

/// Sorted projection of the codewords onto the listed coordinates, packed as
/// integers (two bits per coordinate).
fn projection(code: &AdditiveCode, xs: &[usize], ys: &[usize]) -> Vec<u128> {
    let mut out: Vec<u128> = code
        .codewords()
        .iter()
        .map(|c| {
            let mut key = 0u128;
            for &i in xs {
                key = (key << 2) | u128::from(c.binary_at(i));
            }
            for &j in ys {
                key = (key << 2) | u128::from(c.quaternary_at(j));
            }
            key
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Value counts of one coordinate over the code.
fn column_signature(code: &AdditiveCode, binary: bool, idx: usize) -> [usize; 4] {
    let mut counts = [0usize; 4];
    for c in code.codewords() {
        let v = if binary { c.binary_at(idx) } else { c.quaternary_at(idx) };
        counts[v as usize] += 1;
    }
    counts
}

/// Whether some permutation of the binary coordinates together with some
/// permutation of the quaternary coordinates maps `a` onto `b`.
pub fn permutation_equivalent(a: &AdditiveCode, b: &AdditiveCode) -> bool {
    if a.ambient() != b.ambient() || a.len() != b.len() {
        return false;
    }
    if a.type_params() != b.type_params()
        || crate::enumerator::WeightEnumerator::of_code(a) != crate::enumerator::WeightEnumerator::of_code(b)
    {
        return false;
    }
    let ambient = a.ambient();
    let sig = |c: &AdditiveCode, binary: bool, n: usize| -> Vec<[usize; 4]> {
        (0..n).map(|i| column_signature(c, binary, i)).collect()
    };
    let (ax, bx) = (sig(a, true, ambient.alpha()), sig(b, true, ambient.alpha()));
    let (ay, by) = (sig(a, false, ambient.beta()), sig(b, false, ambient.beta()));
    let sorted = |mut v: Vec<[usize; 4]>| {
        v.sort_unstable();
        v
    };
    if sorted(ax.clone()) != sorted(bx.clone()) || sorted(ay.clone()) != sorted(by.clone()) {
        return false;
    }
    let mut state = Matching {
        a,
        b,
        ax: &ax,
        bx: &bx,
        ay: &ay,
        by: &by,
        x_src: Vec::new(),
        x_dst: Vec::new(),
        y_src: Vec::new(),
        y_dst: Vec::new(),
    };
    state.assign()
}

struct Matching<'a> {
    a: &'a AdditiveCode,
    b: &'a AdditiveCode,
    ax: &'a [[usize; 4]],
    bx: &'a [[usize; 4]],
    ay: &'a [[usize; 4]],
    by: &'a [[usize; 4]],
    x_src: Vec<usize>,
    x_dst: Vec<usize>,
    y_src: Vec<usize>,
    y_dst: Vec<usize>,
}

impl Matching<'_> {
    fn consistent(&self) -> bool {
        projection(self.a, &self.x_src, &self.y_src) == projection(self.b, &self.x_dst, &self.y_dst)
    }

    fn assign(&mut self) -> bool {
        let alpha = self.ax.len();
        let beta = self.ay.len();
        if self.x_src.len() < alpha {
            let i = self.x_src.len();
            for j in 0..alpha {
                if self.x_dst.contains(&j) || self.ax[i] != self.bx[j] {
                    continue;
                }
                self.x_src.push(i);
                self.x_dst.push(j);
                if self.consistent() && self.assign() {
                    return true;
                }
                self.x_src.pop();
                self.x_dst.pop();
            }
            return false;
        }
        if self.y_src.len() < beta {
            let i = self.y_src.len();
            for j in 0..beta {
                if self.y_dst.contains(&j) || self.ay[i] != self.by[j] {
                    continue;
                }
                self.y_src.push(i);
                self.y_dst.push(j);
                if self.consistent() && self.assign() {
                    return true;
                }
                self.y_src.pop();
                self.y_dst.pop();
            }
            return false;
        }
        true
    }
}
