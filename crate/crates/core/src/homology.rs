//! Integer linear algebra for surgery presentations.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomologyError {
    DimensionMismatch,
    NotSquare,
    NotSymmetric,
    /// `pseudoseiferter_det` needs `p ≥ 2` and `gcd(p, q) = 1`.
    BadParameters,
}

impl fmt::Display for HomologyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomologyError::DimensionMismatch => f.write_str("matrix dimensions do not match"),
            HomologyError::NotSquare => f.write_str("matrix is not square"),
            HomologyError::NotSymmetric => f.write_str("linking matrix must be symmetric with zero diagonal"),
            HomologyError::BadParameters => f.write_str("need p >= 2 and gcd(p, q) = 1"),
        }
    }
}

impl core::error::Error for HomologyError {}

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self, HomologyError> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(HomologyError::DimensionMismatch);
        }
        let data = rows.iter().flat_map(|r| r.iter().cloned().map(Into::into)).collect();
        Ok(IntMatrix { rows: rows.len(), cols, data })
    }

    pub fn diagonal<T: Into<BigInt> + Clone>(entries: &[T]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone().into();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, HomologyError> {
        if self.cols != other.rows {
            return Err(HomologyError::DimensionMismatch);
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// Fraction-free (Bareiss) determinant.
    pub fn det(&self) -> Result<BigInt, HomologyError> {
        if self.rows != self.cols {
            return Err(HomologyError::NotSquare);
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(sign * &a[n - 1][n - 1])
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// `row[dst] += k · row[src]`
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for c in 0..self.cols {
            let v = self.get(src, c) * k;
            self.data[dst * self.cols + c] += v;
        }
    }

    /// `col[dst] += k · col[src]`
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for r in 0..self.rows {
            let v = self.get(r, src) * k;
            self.data[r * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.get(r, c);
            self.set(r, c, v);
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            f.write_str("[")?;
            for (i, v) in self.row(r).iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}

/// `U · m · V = D` with `U`, `V` unimodular and `D` diagonal, nonnegative,
/// `d_i | d_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols)).map(|i| self.d.get(i, i).clone()).collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the remaining block becomes the pivot
            let pivot = (t..rows)
                .flat_map(|r| (t..cols).map(move |c| (r, c)))
                .filter(|&(r, c)| !d.get(r, c).is_zero())
                .min_by(|&(r1, c1), &(r2, c2)| d.get(r1, c1).abs().cmp(&d.get(r2, c2).abs()));
            let Some((pr, pc)) = pivot else {
                return SmithForm { u, d, v };
            };
            d.swap_rows(t, pr);
            u.swap_rows(t, pr);
            d.swap_cols(t, pc);
            v.swap_cols(t, pc);
            let p = d.get(t, t).clone();
            let mut clean = true;
            for r in t + 1..rows {
                let q = -d.get(r, t).div_floor(&p);
                if !q.is_zero() {
                    d.add_row(r, t, &q);
                    u.add_row(r, t, &q);
                }
                clean &= d.get(r, t).is_zero();
            }
            for c in t + 1..cols {
                let q = -d.get(t, c).div_floor(&p);
                if !q.is_zero() {
                    d.add_col(c, t, &q);
                    v.add_col(c, t, &q);
                }
                clean &= d.get(t, c).is_zero();
            }
            if !clean {
                continue;
            }
            // the pivot must divide everything left; otherwise fold the
            // offending row in and go again
            let bad = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| !d.get(r, c).is_multiple_of(&p)));
            match bad {
                Some(r) => {
                    let one = BigInt::one();
                    d.add_row(t, r, &one);
                    u.add_row(t, r, &one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithForm { u, d, v }
}

/// Abelian group presented by relation rows over generator columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct H1Report {
    /// `|H_1|`, 0 when infinite.
    pub order: BigInt,
    /// Torsion invariant factors greater than 1.
    pub invariant_factors: Vec<BigInt>,
    pub free_rank: usize,
}

pub fn h1_from_presentation(m: &IntMatrix) -> H1Report {
    let diag = smith_normal_form(m).diagonal();
    let rank = diag.iter().filter(|d| !d.is_zero()).count();
    let free_rank = m.cols - rank;
    let invariant_factors: Vec<BigInt> = diag.into_iter().filter(|d| !d.is_zero() && !d.is_one()).collect();
    let order = if free_rank == 0 { invariant_factors.iter().product() } else { BigInt::zero() };
    H1Report {
        order,
        invariant_factors,
        free_rank,
    }
}

/// Negative continued fraction `p/q = c_1 - 1/(c_2 - 1/(… - 1/c_k))` with
/// each `c_i = ⌈·⌉`. The chain of unknots framed `c_1, …, c_k`, each linking
/// its neighbours once, has the same filling as one `p/q`-framed unknot.
pub fn rational_chain(framing: Rational) -> Vec<i64> {
    let mut out = Vec::new();
    let mut x = framing;
    loop {
        let c = x.ceil().to_integer();
        out.push(c);
        let rest = Rational::from_integer(c) - x;
        if rest.is_zero() {
            return out;
        }
        x = rest.recip();
    }
}

/// Unknotted components with pairwise linking numbers and rational framings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurgeryDescription {
    linking: Vec<Vec<i64>>,
    framings: Vec<Rational>,
}

impl SurgeryDescription {
    pub fn new(linking: Vec<Vec<i64>>, framings: Vec<Rational>) -> Result<Self, HomologyError> {
        let n = framings.len();
        if linking.len() != n || linking.iter().any(|r| r.len() != n) {
            return Err(HomologyError::DimensionMismatch);
        }
        for (i, row) in linking.iter().enumerate() {
            if row[i] != 0 || (0..n).any(|j| row[j] != linking[j][i]) {
                return Err(HomologyError::NotSymmetric);
            }
        }
        Ok(SurgeryDescription { linking, framings })
    }

    pub fn components(&self) -> usize {
        self.framings.len()
    }

    pub fn linking(&self) -> &[Vec<i64>] {
        &self.linking
    }

    pub fn framings(&self) -> &[Rational] {
        &self.framings
    }

    /// Integer linking matrix after replacing every rational framing by its
    /// chain; the chain links the original component through its first
    /// entry.
    pub fn integer_matrix(&self) -> IntMatrix {
        let chains: Vec<Vec<i64>> = self.framings.iter().map(|f| rational_chain(*f)).collect();
        let size: usize = chains.iter().map(Vec::len).sum();
        let mut start = Vec::with_capacity(chains.len());
        let mut acc = 0;
        for c in &chains {
            start.push(acc);
            acc += c.len();
        }
        let mut m = IntMatrix::zeros(size, size);
        for (i, chain) in chains.iter().enumerate() {
            for (k, &c) in chain.iter().enumerate() {
                let idx = start[i] + k;
                m.set(idx, idx, BigInt::from(c));
                if k + 1 < chain.len() {
                    m.set(idx, idx + 1, BigInt::one());
                    m.set(idx + 1, idx, BigInt::one());
                }
            }
            for j in 0..chains.len() {
                if i != j {
                    m.set(start[i], start[j], BigInt::from(self.linking[i][j]));
                }
            }
        }
        m
    }

    /// Presentation with one relation `p_i μ_i + q_i Σ_j lk_ij μ_j = 0` per
    /// component of framing `p_i/q_i`.
    pub fn rational_presentation(&self) -> IntMatrix {
        let n = self.components();
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            let (p, q) = (*self.framings[i].numer(), *self.framings[i].denom());
            for j in 0..n {
                let v = if i == j { p } else { q * self.linking[i][j] };
                m.set(i, j, BigInt::from(v));
            }
        }
        m
    }
}

/// `|H_1|` of the surgered manifold (0 when infinite).
pub fn surgery_h1(s: &SurgeryDescription) -> BigInt {
    s.integer_matrix().det().expect("square by construction").abs()
}

/// The matrix
/// ```text
/// [ a11  a12      0    ]
/// [ a21   0       1    ]
/// [  0  npq+1  -n p^2  ]
/// ```
pub fn pseudoseiferter_matrix(a11: i64, a12: i64, a21: i64, p: i64, q: i64, n: i64) -> IntMatrix {
    let rows = vec![vec![a11, a12, 0], vec![a21, 0, 1], vec![0, n * p * q + 1, -n * p * p]];
    IntMatrix::from_rows(&rows).expect("3x3 literal")
}

/// `|det M_n| = |np(Ap + Bq) + B|` with `A = -a12·a21`, `B = a11`.
pub fn pseudoseiferter_det(a11: i64, a12: i64, a21: i64, p: i64, q: i64, n: i64) -> Result<BigInt, HomologyError> {
    if p < 2 || p.gcd(&q) != 1 {
        return Err(HomologyError::BadParameters);
    }
    Ok(pseudoseiferter_matrix(a11, a12, a21, p, q, n).det()?.abs())
}
