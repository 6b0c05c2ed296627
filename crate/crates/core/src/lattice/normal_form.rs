//! Hermite and Smith normal forms over `Z` with unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// Row-style Hermite normal form: `u * m = h`, `u` unimodular.
#[derive(Clone, Debug)]
pub struct Hnf {
    pub h: IntMatrix,
    pub u: IntMatrix,
    pub pivots: Vec<usize>,
}

impl Hnf {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// The nonzero rows of `h`: a canonical basis of the row lattice.
    pub fn basis(&self) -> IntMatrix {
        self.h.select_rows(&(0..self.rank()).collect::<Vec<_>>())
    }

    /// Rows of `u` spanning the left kernel `{x : x m = 0}`.
    pub fn left_kernel(&self) -> IntMatrix {
        self.u.select_rows(&(self.rank()..self.u.rows()).collect::<Vec<_>>())
    }
}

fn row_axpy(m: &mut IntMatrix, target: usize, q: &BigInt, source: usize) {
    // row[target] -= q * row[source]
    for c in 0..m.cols() {
        if !m[(source, c)].is_zero() {
            let v = q * &m[(source, c)];
            m[(target, c)] -= v;
        }
    }
}

fn col_axpy(m: &mut IntMatrix, target: usize, q: &BigInt, source: usize) {
    for r in 0..m.rows() {
        if !m[(r, source)].is_zero() {
            let v = q * &m[(r, source)];
            m[(r, target)] -= v;
        }
    }
}

fn negate_row(m: &mut IntMatrix, r: usize) {
    for c in 0..m.cols() {
        let v = -&m[(r, c)];
        m[(r, c)] = v;
    }
}

/// Row-style HNF. Pivot rows are chosen column by column (leftmost first),
/// picking the entry of least absolute value and the lowest row index on ties.
/// Pivots are positive and entries above each pivot lie in `[0, pivot)`.
pub fn hermite_normal_form(m: &IntMatrix) -> Hnf {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.rows());
    let mut pivots = Vec::new();
    let mut prow = 0;
    for col in 0..h.cols() {
        if prow == h.rows() {
            break;
        }
        let mut found = false;
        loop {
            let best = (prow..h.rows())
                .filter(|&r| !h[(r, col)].is_zero())
                .min_by(|&a, &b| h[(a, col)].abs().cmp(&h[(b, col)].abs()).then(a.cmp(&b)));
            let Some(best) = best else { break };
            found = true;
            h.swap_rows(prow, best);
            u.swap_rows(prow, best);
            let mut clean = true;
            for r in prow + 1..h.rows() {
                if h[(r, col)].is_zero() {
                    continue;
                }
                let q = h[(r, col)].div_floor(&h[(prow, col)]);
                row_axpy(&mut h, r, &q, prow);
                row_axpy(&mut u, r, &q, prow);
                if !h[(r, col)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if !found {
            continue;
        }
        if h[(prow, col)].is_negative() {
            negate_row(&mut h, prow);
            negate_row(&mut u, prow);
        }
        for r in 0..prow {
            let q = h[(r, col)].div_floor(&h[(prow, col)]);
            if !q.is_zero() {
                row_axpy(&mut h, r, &q, prow);
                row_axpy(&mut u, r, &q, prow);
            }
        }
        pivots.push(col);
        prow += 1;
    }
    Hnf { h, u, pivots }
}

/// Smith normal form `u * m * v = d` with `d` diagonal.
#[derive(Clone, Debug)]
pub struct Snf {
    /// The diagonal `d_1 | d_2 | ...`, `min(rows, cols)` entries, zeros last.
    pub invariant_factors: Vec<BigInt>,
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    pub fn rank(&self) -> usize {
        self.invariant_factors.iter().filter(|d| !d.is_zero()).count()
    }

    /// Product of the nonzero invariant factors.
    pub fn nonzero_product(&self) -> BigInt {
        self.invariant_factors.iter().filter(|d| !d.is_zero()).product()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let (rows, cols) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let n = rows.min(cols);
    for t in 0..n {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for r in t..rows {
                for c in t..cols {
                    if d[(r, c)].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(br, bc)| d[(r, c)].abs() < d[(br, bc)].abs()) {
                        best = Some((r, c));
                    }
                }
            }
            let Some((br, bc)) = best else { break };
            d.swap_rows(t, br);
            u.swap_rows(t, br);
            d.swap_cols(t, bc);
            v.swap_cols(t, bc);

            let mut clean = true;
            for r in t + 1..rows {
                if d[(r, t)].is_zero() {
                    continue;
                }
                let q = d[(r, t)].div_floor(&d[(t, t)]);
                row_axpy(&mut d, r, &q, t);
                row_axpy(&mut u, r, &q, t);
                clean &= d[(r, t)].is_zero();
            }
            for c in t + 1..cols {
                if d[(t, c)].is_zero() {
                    continue;
                }
                let q = d[(t, c)].div_floor(&d[(t, t)]);
                col_axpy(&mut d, c, &q, t);
                col_axpy(&mut v, c, &q, t);
                clean &= d[(t, c)].is_zero();
            }
            if !clean {
                continue;
            }
            // enforce d_t | every remaining entry
            let pivot = d[(t, t)].clone();
            let offender = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| !d[(r, c)].is_multiple_of(&pivot)));
            match offender {
                Some(r) => {
                    let minus_one = -BigInt::one();
                    row_axpy(&mut d, t, &minus_one, r);
                    row_axpy(&mut u, t, &minus_one, r);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            negate_row(&mut d, t);
            negate_row(&mut u, t);
        }
    }
    let invariant_factors = (0..n).map(|k| d[(k, k)].clone()).collect();
    Snf {
        invariant_factors,
        d,
        u,
        v,
    }
}
