//! Reduction of a generator matrix to the canonical shape
//!
//! ```text
//!   [ I_k  T_b | 2T_2   0      0   ]   kappa rows
//!   [ 0    0   | 2T_1   2I_g   0   ]   gamma - kappa rows
//!   [ 0    S_b | S_q    R      I_d ]   delta rows
//! ```
//!
//! reached after permuting coordinates within the binary part and within the
//! quaternary part (never across).
//!
//! Elimination runs over `Z4` on the quaternary columns first, pivoting on
//! units, then over `Z2` on the binary columns of the remaining order-two
//! rows, then over `Z2` on their halved quaternary columns. Unit and
//! order-two quaternary pivots are taken at the highest available column so
//! that a matrix already in this shape is returned with the identity
//! permutation.

use crate::algebra::{AmbientParams, MixedVector};
use crate::code::{GeneratorMatrix, TypeParams};

/// A generator matrix in canonical shape plus the column permutation that
/// maps the original code onto it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardFormMatrix {
    ambient: AmbientParams,
    kappa: usize,
    gamma: usize,
    delta: usize,
    t_b: Vec<Vec<u8>>,
    t_2: Vec<Vec<u8>>,
    t_1: Vec<Vec<u8>>,
    s_b: Vec<Vec<u8>>,
    s_q: Vec<Vec<u8>>,
    r: Vec<Vec<u8>>,
    x_perm: Vec<usize>,
    y_perm: Vec<usize>,
}

#[derive(Clone)]
struct Row {
    x: Vec<u8>,
    y: Vec<u8>,
}

impl Row {
    fn from_vector(v: &MixedVector) -> Row {
        Row {
            x: v.binary_part(),
            y: v.quaternary_part(),
        }
    }

    /// `self += k * other`
    fn add_scaled(&mut self, other: &Row, k: u8) {
        if k & 1 == 1 {
            for (a, b) in self.x.iter_mut().zip(&other.x) {
                *a ^= b;
            }
        }
        for (a, b) in self.y.iter_mut().zip(&other.y) {
            *a = (*a + k * b) & 3;
        }
    }

    fn scale(&mut self, k: u8) {
        if k & 1 == 0 {
            self.x.iter_mut().for_each(|a| *a = 0);
        }
        self.y.iter_mut().for_each(|a| *a = (*a * k) & 3);
    }

    fn is_zero(&self) -> bool {
        self.x.iter().all(|&a| a == 0) && self.y.iter().all(|&a| a == 0)
    }
}

fn apply_row_op(rows: &mut [Row], target: usize, source: usize, k: u8) {
    let src = rows[source].clone();
    rows[target].add_scaled(&src, k);
}

/// Reduces `gen` to canonical shape.
pub fn standard_form(gen: &GeneratorMatrix) -> StandardFormMatrix {
    StandardFormMatrix::compute(gen)
}

impl StandardFormMatrix {
    pub fn compute(gen: &GeneratorMatrix) -> StandardFormMatrix {
        let ambient = gen.ambient();
        let (alpha, beta) = (ambient.alpha(), ambient.beta());
        let mut rows: Vec<Row> = gen.rows().iter().map(Row::from_vector).collect();
        let nrows = rows.len();

        // Order-four pivots.
        let mut q_pivots: Vec<(usize, usize)> = Vec::new();
        let mut is_q_row = vec![false; nrows];
        while let Some((r, c)) = (0..nrows)
            .filter(|&r| !is_q_row[r])
            .find_map(|r| (0..beta).rev().find(|&c| rows[r].y[c] & 1 == 1).map(|c| (r, c)))
        {
            if rows[r].y[c] == 3 {
                rows[r].scale(3);
            }
            for other in 0..nrows {
                let e = rows[other].y[c];
                if other != r && e != 0 {
                    apply_row_op(&mut rows, other, r, 4 - e);
                }
            }
            is_q_row[r] = true;
            q_pivots.push((r, c));
        }
        let q_cols: Vec<bool> = (0..beta).map(|c| q_pivots.iter().any(|&(_, qc)| qc == c)).collect();

        // Binary pivots among the order-two rows.
        let mut x_pivots: Vec<(usize, usize)> = Vec::new();
        let mut used = is_q_row.clone();
        for col in 0..alpha {
            let Some(r) = (0..nrows).find(|&r| !used[r] && rows[r].x[col] == 1) else {
                continue;
            };
            for other in 0..nrows {
                if other != r && rows[other].x[col] == 1 {
                    apply_row_op(&mut rows, other, r, 1);
                }
            }
            used[r] = true;
            x_pivots.push((r, col));
        }

        // Pivots on the halved quaternary part of the rows left over (their
        // binary part is now zero).
        let mut z_pivots: Vec<(usize, usize)> = Vec::new();
        for col in (0..beta).rev().filter(|&c| !q_cols[c]) {
            let Some(r) = (0..nrows).find(|&r| !used[r] && rows[r].y[col] == 2) else {
                continue;
            };
            for other in 0..nrows {
                if other != r && rows[other].y[col] >= 2 {
                    apply_row_op(&mut rows, other, r, 1);
                }
            }
            used[r] = true;
            z_pivots.push((r, col));
        }
        debug_assert!((0..nrows).filter(|&r| !used[r]).all(|r| rows[r].is_zero()));

        x_pivots.sort_by_key(|&(_, c)| c);
        z_pivots.sort_by_key(|&(_, c)| c);
        q_pivots.sort_by_key(|&(_, c)| c);

        let kappa = x_pivots.len();
        let g = z_pivots.len();
        let delta = q_pivots.len();

        let x_perm: Vec<usize> = x_pivots
            .iter()
            .map(|&(_, c)| c)
            .chain((0..alpha).filter(|c| !x_pivots.iter().any(|&(_, pc)| pc == *c)))
            .collect();
        let y_first: Vec<usize> = (0..beta)
            .filter(|&c| !q_cols[c] && !z_pivots.iter().any(|&(_, zc)| zc == c))
            .collect();
        let y_perm: Vec<usize> = y_first
            .iter()
            .copied()
            .chain(z_pivots.iter().map(|&(_, c)| c))
            .chain(q_pivots.iter().map(|&(_, c)| c))
            .collect();

        let x_other = &x_perm[kappa..];
        let y_mid: Vec<usize> = z_pivots.iter().map(|&(_, c)| c).collect();
        let pick = |row: &Row, cols: &[usize], binary: bool, halve: bool| -> Vec<u8> {
            cols.iter()
                .map(|&c| {
                    let e = if binary { row.x[c] } else { row.y[c] };
                    if halve {
                        e / 2
                    } else {
                        e
                    }
                })
                .collect()
        };

        let sf = StandardFormMatrix {
            ambient,
            kappa,
            gamma: kappa + g,
            delta,
            t_b: x_pivots.iter().map(|&(r, _)| pick(&rows[r], x_other, true, false)).collect(),
            t_2: x_pivots.iter().map(|&(r, _)| pick(&rows[r], &y_first, false, true)).collect(),
            t_1: z_pivots.iter().map(|&(r, _)| pick(&rows[r], &y_first, false, true)).collect(),
            s_b: q_pivots.iter().map(|&(r, _)| pick(&rows[r], x_other, true, false)).collect(),
            s_q: q_pivots.iter().map(|&(r, _)| pick(&rows[r], &y_first, false, false)).collect(),
            r: q_pivots.iter().map(|&(r, _)| pick(&rows[r], &y_mid, false, false)).collect(),
            x_perm,
            y_perm,
        };

        // The assembled rows must be exactly the reduced rows, permuted.
        let reduced: Vec<MixedVector> = x_pivots
            .iter()
            .chain(&z_pivots)
            .chain(&q_pivots)
            .map(|&(r, _)| {
                MixedVector::from_parts(&rows[r].x, &rows[r].y)
                    .expect("reduced row has the ambient shape")
                    .permute(&sf.x_perm, &sf.y_perm)
            })
            .collect();
        assert_eq!(reduced, sf.rows(), "standard form reduction produced a malformed matrix");
        sf
    }

    pub fn ambient(&self) -> AmbientParams {
        self.ambient
    }

    pub fn kappa(&self) -> usize {
        self.kappa
    }

    pub fn gamma(&self) -> usize {
        self.gamma
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    /// Width of the leading quaternary column block, `beta - (gamma - kappa) - delta`.
    pub fn leading_width(&self) -> usize {
        self.ambient.beta() - (self.gamma - self.kappa) - self.delta
    }

    /// Type parameters read off the block sizes.
    pub fn type_params(&self) -> TypeParams {
        TypeParams::new(
            self.ambient.alpha(),
            self.ambient.beta(),
            self.gamma,
            self.delta,
            self.kappa,
        )
    }

    pub fn t_b(&self) -> &[Vec<u8>] {
        &self.t_b
    }

    pub fn t_2(&self) -> &[Vec<u8>] {
        &self.t_2
    }

    pub fn t_1(&self) -> &[Vec<u8>] {
        &self.t_1
    }

    pub fn s_b(&self) -> &[Vec<u8>] {
        &self.s_b
    }

    pub fn s_q(&self) -> &[Vec<u8>] {
        &self.s_q
    }

    pub fn r(&self) -> &[Vec<u8>] {
        &self.r
    }

    /// Position `i` of the canonical binary part is original binary column `x_perm()[i]`.
    pub fn x_perm(&self) -> &[usize] {
        &self.x_perm
    }

    /// Position `j` of the canonical quaternary part is original quaternary column `y_perm()[j]`.
    pub fn y_perm(&self) -> &[usize] {
        &self.y_perm
    }

    /// The canonical rows, in permuted coordinates.
    pub fn rows(&self) -> Vec<MixedVector> {
        let (alpha, beta) = (self.ambient.alpha(), self.ambient.beta());
        let (k, g, m) = (self.kappa, self.gamma - self.kappa, self.leading_width());
        let mut out = Vec::with_capacity(self.gamma + self.delta);
        for i in 0..k {
            let mut v = MixedVector::zero(self.ambient);
            v.set_binary(i, 1);
            for (j, &e) in self.t_b[i].iter().enumerate() {
                v.set_binary(k + j, e);
            }
            for (j, &e) in self.t_2[i].iter().enumerate() {
                v.set_quaternary(j, 2 * e);
            }
            out.push(v);
        }
        for l in 0..g {
            let mut v = MixedVector::zero(self.ambient);
            for (j, &e) in self.t_1[l].iter().enumerate() {
                v.set_quaternary(j, 2 * e);
            }
            v.set_quaternary(m + l, 2);
            out.push(v);
        }
        for d in 0..self.delta {
            let mut v = MixedVector::zero(self.ambient);
            for (j, &e) in self.s_b[d].iter().enumerate() {
                v.set_binary(k + j, e);
            }
            for (j, &e) in self.s_q[d].iter().enumerate() {
                v.set_quaternary(j, e);
            }
            for (l, &e) in self.r[d].iter().enumerate() {
                v.set_quaternary(m + l, e);
            }
            v.set_quaternary(m + g + d, 1);
            out.push(v);
        }
        debug_assert!(out.iter().all(|v| v.alpha() == alpha && v.beta() == beta));
        out
    }

    /// The canonical matrix as a generator matrix in permuted coordinates.
    pub fn generator_matrix(&self) -> GeneratorMatrix {
        GeneratorMatrix::new(self.ambient, self.rows()).expect("rows have the ambient shape")
    }

    /// Maps a vector from original to canonical coordinates.
    pub fn to_canonical(&self, v: &MixedVector) -> MixedVector {
        v.permute(&self.x_perm, &self.y_perm)
    }

    /// Maps a vector from canonical back to original coordinates.
    pub fn to_original(&self, v: &MixedVector) -> MixedVector {
        v.unpermute(&self.x_perm, &self.y_perm)
    }
}
