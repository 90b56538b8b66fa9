//! Sparse Laurent polynomials with integer coefficients in one or two
//! variables.
//!
//! Both arities share one representation: a sorted map from exponent vectors
//! to nonzero big-integer coefficients. [`KnotPoly1`] carries knot Alexander
//! polynomials in `t`, [`LinkPoly2`] carries two-variable link polynomials in
//! `x`, `y`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// One-variable Laurent polynomial in `t`.
pub type KnotPoly1 = Laurent<1>;
/// Two-variable Laurent polynomial in `x`, `y`.
pub type LinkPoly2 = Laurent<2>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LaurentError {
    ZeroPolynomial,
    DivisionByZero,
    InexactDivision,
}

impl fmt::Display for LaurentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LaurentError::ZeroPolynomial => f.write_str("zero polynomial has no unit normal form"),
            LaurentError::DivisionByZero => f.write_str("division by the zero polynomial"),
            LaurentError::InexactDivision => f.write_str("division leaves a nonzero remainder"),
        }
    }
}

impl core::error::Error for LaurentError {}

/// Breadth of a Laurent polynomial along one variable.
///
/// The zero polynomial has breadth `NegInfinity`, which orders below every
/// finite breadth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Breadth {
    NegInfinity,
    Finite(u64),
}

impl Breadth {
    pub fn finite(self) -> Option<u64> {
        match self {
            Breadth::NegInfinity => None,
            Breadth::Finite(b) => Some(b),
        }
    }
}

impl PartialOrd for Breadth {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Breadth {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Breadth::NegInfinity, Breadth::NegInfinity) => Ordering::Equal,
            (Breadth::NegInfinity, _) => Ordering::Less,
            (_, Breadth::NegInfinity) => Ordering::Greater,
            (Breadth::Finite(a), Breadth::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Breadth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Breadth::NegInfinity => f.write_str("-inf"),
            Breadth::Finite(b) => write!(f, "{b}"),
        }
    }
}

/// Laurent polynomial in `N` variables over the integers.
///
/// Invariant: no stored coefficient is zero. The empty map is the zero
/// polynomial.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Laurent<const N: usize> {
    terms: BTreeMap<[i64; N], BigInt>,
}

impl<const N: usize> Default for Laurent<N> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<const N: usize> Laurent<N> {
    pub fn zero() -> Self {
        Laurent { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial([0; N], BigInt::one())
    }

    pub fn monomial(exp: [i64; N], coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, combining
    /// repeated exponents.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = ([i64; N], C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, exp: [i64; N], coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, coeff);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&[i64; N], &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[i64; N]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn min_exponent(&self, axis: usize) -> Option<i64> {
        self.terms.keys().map(|e| e[axis]).min()
    }

    pub fn max_exponent(&self, axis: usize) -> Option<i64> {
        self.terms.keys().map(|e| e[axis]).max()
    }

    pub fn breadth(&self, axis: usize) -> Breadth {
        match (self.min_exponent(axis), self.max_exponent(axis)) {
            (Some(lo), Some(hi)) => Breadth::Finite((hi - lo) as u64),
            _ => Breadth::NegInfinity,
        }
    }

    /// Multiplies by the monomial with exponent `shift`.
    pub fn shift(&self, shift: [i64; N]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e2 = *e;
                for (a, s) in e2.iter_mut().zip(shift) {
                    *a += s;
                }
                (e2, c.clone())
            })
            .collect();
        Laurent { terms }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Applies an exponent map monomial by monomial and collects like terms.
    pub fn map_exponents<const M: usize>(&self, f: impl Fn([i64; N]) -> [i64; M]) -> Laurent<M> {
        let mut out = Laurent::<M>::zero();
        for (e, c) in &self.terms {
            out.add_term(f(*e), c.clone());
        }
        out
    }

    /// Substitutes every variable by its reciprocal.
    pub fn invert_variables(&self) -> Self {
        self.map_exponents(|e| e.map(|a| -a))
    }

    /// Value at `(1, …, 1)`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Canonical representative of the class up to multiplication by
    /// `±x^a y^b`: every minimum exponent is 0 and the coefficient of the
    /// lexicographically smallest monomial is positive.
    pub fn normalize_unit(&self) -> Result<Self, LaurentError> {
        if self.is_zero() {
            return Err(LaurentError::ZeroPolynomial);
        }
        let mut shift = [0i64; N];
        for (axis, s) in shift.iter_mut().enumerate() {
            *s = -self.min_exponent(axis).unwrap_or(0);
        }
        let shifted = self.shift(shift);
        let lead_negative = shifted.terms.values().next().is_some_and(|c| c.is_negative());
        Ok(if lead_negative { -shifted } else { shifted })
    }

    /// Equality up to multiplication by a unit `±x^a y^b`.
    pub fn unit_equivalent(&self, other: &Self) -> bool {
        match (self.normalize_unit(), other.normalize_unit()) {
            (Ok(a), Ok(b)) => a == b,
            (Err(_), Err(_)) => true,
            _ => false,
        }
    }
}

impl<const N: usize> Zero for Laurent<N> {
    fn zero() -> Self {
        Laurent::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<const N: usize> One for Laurent<N> {
    fn one() -> Self {
        Laurent::one()
    }
}

impl<const N: usize> Neg for Laurent<N> {
    type Output = Self;
    fn neg(mut self) -> Self {
        for c in self.terms.values_mut() {
            *c = -core::mem::take(c);
        }
        self
    }
}

impl<const N: usize> Neg for &Laurent<N> {
    type Output = Laurent<N>;
    fn neg(self) -> Laurent<N> {
        -self.clone()
    }
}

impl<const N: usize> AddAssign<&Laurent<N>> for Laurent<N> {
    fn add_assign(&mut self, rhs: &Laurent<N>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<const N: usize> Add<&Laurent<N>> for &Laurent<N> {
    type Output = Laurent<N>;
    fn add(self, rhs: &Laurent<N>) -> Laurent<N> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<const N: usize> Add for Laurent<N> {
    type Output = Laurent<N>;
    fn add(mut self, rhs: Laurent<N>) -> Laurent<N> {
        self += &rhs;
        self
    }
}

impl<const N: usize> Sub<&Laurent<N>> for &Laurent<N> {
    type Output = Laurent<N>;
    fn sub(self, rhs: &Laurent<N>) -> Laurent<N> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl<const N: usize> Sub for Laurent<N> {
    type Output = Laurent<N>;
    fn sub(self, rhs: Laurent<N>) -> Laurent<N> {
        &self - &rhs
    }
}

impl<const N: usize> Mul<&Laurent<N>> for &Laurent<N> {
    type Output = Laurent<N>;
    fn mul(self, rhs: &Laurent<N>) -> Laurent<N> {
        let mut out = Laurent::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = *ea;
                for (a, b) in e.iter_mut().zip(eb) {
                    *a += b;
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl<const N: usize> Mul for Laurent<N> {
    type Output = Laurent<N>;
    fn mul(self, rhs: Laurent<N>) -> Laurent<N> {
        &self * &rhs
    }
}

const VARS_1: [&str; 1] = ["t"];
const VARS_2: [&str; 2] = ["x", "y"];

fn var_names(n: usize) -> &'static [&'static str] {
    match n {
        1 => &VARS_1,
        2 => &VARS_2,
        _ => &[],
    }
}

impl<const N: usize> fmt::Display for Laurent<N> {
    /// Human-readable form, highest monomial first: `t^2 - 2t + 3 - 2t^-1 + t^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let names = var_names(N);
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let mut mono = String::new();
            for (axis, &a) in e.iter().enumerate() {
                let name = names.get(axis).copied().unwrap_or("z");
                match a {
                    0 => {}
                    1 => mono.push_str(name),
                    _ => {
                        mono.push_str(name);
                        mono.push('^');
                        mono.push_str(&alloc::format!("{a}"));
                    }
                }
            }
            let abs = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{abs}{mono}")?;
            }
        }
        Ok(())
    }
}

impl<const N: usize> fmt::Debug for Laurent<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

impl Laurent<1> {
    /// `Σ coeffs[i] · t^(low + i)`.
    pub fn from_coeffs(low: i64, coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, &c)| ([low + i as i64], c)))
    }

    pub fn t_pow(e: i64) -> Self {
        Self::monomial([e], 1)
    }

    /// `1 + t + … + t^(n-1)`, i.e. `(t^n - 1)/(t - 1)` for `n ≥ 0`.
    pub fn geometric(n: u64) -> Self {
        Self::from_terms((0..n as i64).map(|e| ([e], 1)))
    }

    pub fn coeff_at(&self, e: i64) -> BigInt {
        self.coeff(&[e])
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.min_exponent(0)
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.max_exponent(0)
    }

    pub fn span(&self) -> Breadth {
        self.breadth(0)
    }

    /// Dense coefficient vector from the lowest to the highest degree.
    pub fn dense_coeffs(&self) -> Vec<BigInt> {
        match (self.min_degree(), self.max_degree()) {
            (Some(lo), Some(hi)) => (lo..=hi).map(|e| self.coeff_at(e)).collect(),
            _ => Vec::new(),
        }
    }

    pub fn eval_i64(&self, t: i64) -> Option<BigInt> {
        if t == 0 && self.min_degree().is_some_and(|d| d < 0) {
            return None;
        }
        let base = BigInt::from(t);
        let mut acc = BigInt::zero();
        for (e, c) in self.terms() {
            let p = e[0];
            let v = if p >= 0 {
                num_traits::pow(base.clone(), p as usize)
            } else if t == 1 || t == -1 {
                num_traits::pow(base.clone(), (-p) as usize)
            } else {
                return None;
            };
            acc += c * v;
        }
        Some(acc)
    }

    /// `p(t^-1)`.
    pub fn mirror(&self) -> Self {
        self.invert_variables()
    }

    /// True when `p(t) = p(t^-1)` exactly.
    pub fn is_symmetric(&self) -> bool {
        *self == self.mirror()
    }

    /// Symmetric representative of the unit class of a knot-type polynomial:
    /// exponents centered on 0 and sign chosen so that `p(1) > 0` (or the top
    /// coefficient is positive when `p(1) = 0`). Polynomials of odd breadth
    /// cannot be centered and fall back to [`Laurent::normalize_unit`].
    pub fn symmetrized(&self) -> Result<Self, LaurentError> {
        let (lo, hi) = match (self.min_degree(), self.max_degree()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Err(LaurentError::ZeroPolynomial),
        };
        if (hi - lo) % 2 != 0 {
            return self.normalize_unit();
        }
        let centered = self.shift([-(lo + hi) / 2]);
        let at_one = centered.eval_at_one();
        let flip = match at_one.sign() {
            num_bigint::Sign::Minus => true,
            num_bigint::Sign::Plus => false,
            num_bigint::Sign::NoSign => centered.terms().last().is_some_and(|(_, c)| c.is_negative()),
        };
        Ok(if flip { -centered } else { centered })
    }

    /// Exact division in `ℤ[t^{±1}]`.
    pub fn divide_exact(&self, den: &Self) -> Result<Self, LaurentError> {
        if den.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let num_lo = self.min_degree().unwrap_or(0);
        let den_lo = den.min_degree().unwrap_or(0);
        let mut rem = self.shift([-num_lo]).dense_coeffs_from_zero();
        let d = den.shift([-den_lo]).dense_coeffs_from_zero();
        let dn = d.len() - 1;
        if rem.len() < d.len() {
            return Err(LaurentError::InexactDivision);
        }
        let lead = &d[dn];
        let qlen = rem.len() - dn;
        let mut quot = alloc::vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = &rem[k + dn];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(LaurentError::InexactDivision);
            }
            for (j, dj) in d.iter().enumerate() {
                rem[k + j] -= &q * dj;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(LaurentError::InexactDivision);
        }
        Ok(Self::from_terms(quot.into_iter().enumerate().map(|(i, c)| ([i as i64], c))).shift([num_lo - den_lo]))
    }

    fn dense_coeffs_from_zero(&self) -> Vec<BigInt> {
        match self.max_degree() {
            Some(hi) => (0..=hi).map(|e| self.coeff_at(e)).collect(),
            None => Vec::new(),
        }
    }
}

impl Laurent<2> {
    pub fn breadth_x(&self) -> Breadth {
        self.breadth(0)
    }

    pub fn breadth_y(&self) -> Breadth {
        self.breadth(1)
    }

    /// Regards a one-variable polynomial `p(t)` as `p(x)`.
    pub fn from_x_poly(p: &KnotPoly1) -> Self {
        p.map_exponents(|[e]| [e, 0])
    }

    /// Monomial substitution `x ↦ x^a y^b`, `y ↦ x^c y^d` for
    /// `x_image = (a, b)`, `y_image = (c, d)`.
    pub fn substitute_monomial(&self, x_image: (i64, i64), y_image: (i64, i64)) -> Self {
        let (a, b) = x_image;
        let (c, d) = y_image;
        self.map_exponents(|[i, j]| [i * a + j * c, i * b + j * d])
    }

    /// `p(t^x_pow, t^y_pow)`.
    pub fn specialize(&self, x_pow: i64, y_pow: i64) -> KnotPoly1 {
        self.map_exponents(|[i, j]| [i * x_pow + j * y_pow])
    }

    /// Exchanges the roles of `x` and `y`.
    pub fn swap_variables(&self) -> Self {
        self.map_exponents(|[i, j]| [j, i])
    }

    /// Coefficients `a_i(x)` of `p = Σ a_i(x) y^(i + min_y)`, lowest
    /// `y`-degree first.
    pub fn y_coefficients(&self) -> Vec<KnotPoly1> {
        let (lo, hi) = match (self.min_exponent(1), self.max_exponent(1)) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Vec::new(),
        };
        let mut out = alloc::vec![KnotPoly1::zero(); (hi - lo + 1) as usize];
        for (e, c) in self.terms() {
            out[(e[1] - lo) as usize] += &KnotPoly1::monomial([e[0]], c.clone());
        }
        out
    }
}
