//! Exact rational linear algebra: fraction-free null-space computation and
//! incremental row reduction for span/membership/quotient work.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, Zero};

use crate::coeff::Rat;

/// Dense matrix over the exact rationals, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct QMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rat>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        QMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = Rat::zero();
                for c in 0..self.cols {
                    let a = self.get(r, c);
                    if !a.is_zero() && !v[c].is_zero() {
                        acc += &(a * &v[c]);
                    }
                }
                acc
            })
            .collect()
    }
}

/// Reduced basis of the kernel of `mat`, computed by fraction-free
/// (Bareiss-style) forward elimination over the integers followed by exact
/// rational back-substitution.
///
/// Pivot choice is deterministic (leftmost nonzero column, topmost nonzero
/// row). Each basis vector carries 1 at its own free column and 0 at every
/// other free column, so the basis is canonical.
pub fn nullspace(mat: &QMatrix) -> Vec<Vec<Rat>> {
    let (rows, cols) = (mat.rows, mat.cols);
    if cols == 0 {
        return Vec::new();
    }

    // Clear denominators row by row; scaling rows preserves the kernel.
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|r| {
            let mut lcm = BigInt::from(1);
            for c in 0..cols {
                lcm = lcm.lcm(mat.get(r, c).denom());
            }
            (0..cols)
                .map(|c| {
                    let q: BigRational = mat.get(r, c).big() * BigRational::from_integer(lcm.clone());
                    debug_assert!(q.is_integer());
                    q.to_integer()
                })
                .collect()
        })
        .collect();

    // Bareiss fraction-free elimination.
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut pivot_rows: Vec<usize> = Vec::new();
    let mut prev_pivot = BigInt::from(1);
    let mut row = 0;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        let Some(pr) = (row..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, pr);
        let pivot = a[row][col].clone();
        for r in row + 1..rows {
            for c in col + 1..cols {
                let num = &pivot * &a[r][c] - &a[r][col] * &a[row][c];
                let (q, rem) = num.div_rem(&prev_pivot);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                a[r][c] = q;
            }
            a[r][col] = BigInt::zero();
        }
        prev_pivot = pivot;
        pivot_cols.push(col);
        pivot_rows.push(row);
        row += 1;
    }

    let pivot_set: Vec<bool> = {
        let mut s = vec![false; cols];
        for &c in &pivot_cols {
            s[c] = true;
        }
        s
    };
    let free_cols: Vec<usize> = (0..cols).filter(|&c| !pivot_set[c]).collect();

    // Back-substitute one kernel vector per free column.
    free_cols
        .iter()
        .map(|&f| {
            let mut x = vec![Rat::zero(); cols];
            x[f] = Rat::one();
            for k in (0..pivot_cols.len()).rev() {
                let (r, pc) = (pivot_rows[k], pivot_cols[k]);
                let mut acc = BigRational::zero();
                for c in pc + 1..cols {
                    if !a[r][c].is_zero() && !x[c].is_zero() {
                        acc += BigRational::from_integer(a[r][c].clone()) * x[c].big();
                    }
                }
                let pivot = BigRational::from_integer(a[r][pc].clone());
                x[pc] = Rat::from_big(-acc / pivot);
            }
            x
        })
        .collect()
}

/// Incrementally maintained reduced row-echelon basis of a span.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Echelon {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// The reduced rows spanning the space, in pivot order.
    pub fn rows_cloned(&self) -> Vec<Vec<Rat>> {
        self.rows.clone()
    }

    /// Canonical representative of `v` modulo the span.
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !out[p].is_zero() {
                let factor = out[p].clone();
                for c in p..self.cols {
                    if !row[c].is_zero() {
                        out[c] -= &(&factor * &row[c]);
                    }
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.reduce(v).iter().all(Rat::is_zero)
    }

    /// Adds `v` to the span; returns false if it was already contained.
    pub fn insert(&mut self, v: &[Rat]) -> bool {
        let mut red = self.reduce(v);
        let Some(p) = red.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = red[p].clone();
        for x in red.iter_mut() {
            if !x.is_zero() {
                *x = &*x / &lead;
            }
        }
        // Back-eliminate the new pivot from existing rows to keep RREF.
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let factor = row[p].clone();
                for c in 0..self.cols {
                    if !red[c].is_zero() {
                        row[c] -= &(&factor * &red[c]);
                    }
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, red);
        true
    }
}

/// Solves `A x = b` exactly where `A` is given by columns with full column
/// rank; returns `None` when the system is inconsistent.
pub fn solve_columns(cols: &[Vec<Rat>], target: &[Rat]) -> Option<Vec<Rat>> {
    let n = target.len();
    let k = cols.len();
    assert!(cols.iter().all(|c| c.len() == n));
    // Augmented Gaussian elimination at desk scale.
    let mut m: Vec<Vec<Rat>> = (0..n)
        .map(|r| {
            let mut row: Vec<Rat> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let mut pivot_rows: Vec<(usize, usize)> = Vec::new();
    let mut row = 0;
    for col in 0..k {
        let Some(pr) = (row..n).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, pr);
        let pivot = m[row][col].clone();
        for r in 0..n {
            if r != row && !m[r][col].is_zero() {
                let factor = &m[r][col] / &pivot;
                for c in col..=k {
                    let delta = &factor * &m[row][c];
                    m[r][c] -= &delta;
                }
            }
        }
        pivot_rows.push((row, col));
        row += 1;
    }
    // Inconsistent if a zero row has nonzero rhs.
    for r in row..n {
        if !m[r][k].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); k];
    for &(r, c) in &pivot_rows {
        x[c] = &m[r][k] / &m[r][c];
    }
    // Columns without pivots stay zero; verify the solution exactly.
    for r in 0..n {
        let mut acc = Rat::zero();
        for c in 0..k {
            if !x[c].is_zero() {
                acc += &(&x[c] * &cols[c][r]);
            }
        }
        if acc != target[r] {
            return None;
        }
    }
    Some(x)
}
