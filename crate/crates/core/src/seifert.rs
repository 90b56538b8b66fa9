//! Seifert fibered spaces over `S²`, their L-space status, and
//! one-parameter families `Y_n = S²(b; r_1, …, r_{s-1}, r_s(n))`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::rational::{floor_fract, lt_frac, ExtRational, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeifertError {
    TooManyDegenerate,
    /// The operation is not defined for forms with a degenerate fiber.
    Unsupported,
    /// `t·w - u·v` must be `±1`.
    BadDeterminant(i64),
    EmptyWindow,
}

impl fmt::Display for SeifertError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeifertError::TooManyDegenerate => f.write_str("at most one degenerate fiber is allowed"),
            SeifertError::Unsupported => f.write_str("not defined for a degenerate Seifert form"),
            SeifertError::BadDeterminant(d) => write!(f, "family has t*w - u*v = {d}, expected +1 or -1"),
            SeifertError::EmptyWindow => f.write_str("window is empty"),
        }
    }
}

impl core::error::Error for SeifertError {}

/// `S²(b; r_1, …, r_s)` with `0 < r_1 ≤ … ≤ r_s < 1`, possibly with one
/// degenerate (slope `∞`) fiber.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeifertForm {
    b: i64,
    ratios: Vec<Rational>,
    degenerate: bool,
}

impl SeifertForm {
    /// Folds integer parts into `b`, drops regular fibers and sorts.
    pub fn normalize(b: i64, raw: &[ExtRational]) -> Result<Self, SeifertError> {
        let mut b = b;
        let mut ratios = Vec::with_capacity(raw.len());
        let mut degenerate = false;
        for r in raw {
            match r {
                ExtRational::Infinity if degenerate => return Err(SeifertError::TooManyDegenerate),
                ExtRational::Infinity => degenerate = true,
                ExtRational::Finite(q) => {
                    let (fl, fr) = floor_fract(*q);
                    b += fl;
                    if !fr.is_zero() {
                        ratios.push(fr);
                    }
                }
            }
        }
        ratios.sort();
        Ok(SeifertForm { b, ratios, degenerate })
    }

    pub fn from_rationals(b: i64, raw: &[Rational]) -> Self {
        let ext: Vec<ExtRational> = raw.iter().map(|&r| r.into()).collect();
        Self::normalize(b, &ext).expect("finite ratios never produce a degenerate fiber")
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn ratios(&self) -> &[Rational] {
        &self.ratios
    }

    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    /// Number of exceptional fibers.
    pub fn s(&self) -> usize {
        self.ratios.len()
    }

    /// `S²(-b-s; 1-r_s, …, 1-r_1)`, the same manifold with reversed
    /// orientation.
    pub fn dual(&self) -> Self {
        let s = self.ratios.len() as i64;
        let mut ratios: Vec<Rational> = self.ratios.iter().map(|r| Rational::from_integer(1) - r).collect();
        ratios.sort();
        SeifertForm {
            b: -self.b - s,
            ratios,
            degenerate: self.degenerate,
        }
    }

    /// `α_1⋯α_s · (b + Σ β_i/α_i)` as an integer.
    fn scaled_euler(&self) -> BigInt {
        let alphas: Vec<BigInt> = self.ratios.iter().map(|r| BigInt::from(*r.denom())).collect();
        let prod: BigInt = alphas.iter().product();
        let mut total = &prod * BigInt::from(self.b);
        for r in &self.ratios {
            total += &prod / BigInt::from(*r.denom()) * BigInt::from(*r.numer());
        }
        total
    }

    /// `|H_1|`, with 0 standing for an infinite group.
    pub fn h1_order(&self) -> Result<BigInt, SeifertError> {
        if self.degenerate {
            return Err(SeifertError::Unsupported);
        }
        Ok(self.scaled_euler().abs())
    }

    /// Euler number `e = b + Σ r_i`.
    pub fn euler(&self) -> Rational {
        self.ratios.iter().fold(Rational::from_integer(self.b), |acc, r| acc + r)
    }

    pub fn is_lspace(&self) -> LSpaceVerdict {
        is_lspace(self)
    }
}

impl fmt::Display for SeifertForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.b)?;
        let mut first = true;
        for r in &self.ratios {
            f.write_str(if first { " " } else { "," })?;
            write!(f, "{r}")?;
            first = false;
        }
        if self.degenerate {
            f.write_str(if first { " inf" } else { ",inf" })?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct JnWitness {
    pub a: i64,
    pub k: i64,
}

/// Smallest `(a, k)` (by `k`, then `a`) with `gcd(a, k) = 1`,
/// `0 < a ≤ k/2` and
/// `(r_1, …, r_{s-2}, r_{s-1}, r_s) < (1/k, …, 1/k, a/k, (k-a)/k)`
/// componentwise and strictly. `ratios` must be sorted ascending in `(0,1)`
/// with at least three entries.
pub fn jn_witness(ratios: &[Rational]) -> Option<JnWitness> {
    let s = ratios.len();
    if s < 3 {
        return None;
    }
    let (small, rs1, rs) = (ratios[s - 3], ratios[s - 2], ratios[s - 1]);
    if rs1 >= Rational::new(1, 2) {
        return None;
    }
    let mut k = 2i64;
    // every r_i with i ≤ s-2 is below 1/k exactly when k·r_{s-2} < 1
    while (k as i128) * (*small.numer() as i128) < *small.denom() as i128 {
        for a in 1..=k / 2 {
            if a.gcd(&k) == 1 && lt_frac(rs1, a, k) && lt_frac(rs, k - a, k) {
                return Some(JnWitness { a, k });
            }
        }
        k += 1;
    }
    None
}

/// Which branch of the decision procedure settled the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Certificate {
    /// One degenerate fiber: a connected sum of lens spaces.
    Degenerate,
    /// At most two exceptional fibers with nonzero Euler number.
    Lens,
    /// At most two exceptional fibers with Euler number 0.
    LensZeroEuler,
    /// `-(s-2) ≤ b ≤ -2`.
    Branch1,
    /// `b = -1` with a witness on the ratios.
    Branch2(JnWitness),
    /// `b = -(s-1)` with a witness on the complements.
    Branch3(JnWitness),
    NoWitness2,
    NoWitness3,
    /// `b ≥ 0` or `b ≤ -s`.
    OutsideRange,
}

impl Certificate {
    pub fn name(&self) -> &'static str {
        match self {
            Certificate::Degenerate => "degenerate",
            Certificate::Lens => "lens",
            Certificate::LensZeroEuler => "lens-zero-euler",
            Certificate::Branch1 => "branch(1)",
            Certificate::Branch2(_) => "branch(2)",
            Certificate::Branch3(_) => "branch(3)",
            Certificate::NoWitness2 => "no-witness(2)",
            Certificate::NoWitness3 => "no-witness(3)",
            Certificate::OutsideRange => "outside-range",
        }
    }

    pub fn witness(&self) -> Option<JnWitness> {
        match self {
            Certificate::Branch2(w) | Certificate::Branch3(w) => Some(*w),
            _ => None,
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())?;
        if let Some(w) = self.witness() {
            write!(f, " a={} k={}", w.a, w.k)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LSpaceVerdict {
    pub lspace: bool,
    pub certificate: Certificate,
}

impl LSpaceVerdict {
    pub fn label(&self) -> &'static str {
        if self.lspace {
            "LSpace"
        } else {
            "NotLSpace"
        }
    }
}

/// Decides whether `S²(b; r_1, …, r_s)` is an L-space; with three or more
/// exceptional fibers it is not one exactly when it carries a horizontal
/// foliation.
pub fn is_lspace(form: &SeifertForm) -> LSpaceVerdict {
    let verdict = |lspace, certificate| LSpaceVerdict { lspace, certificate };
    if form.degenerate {
        return verdict(true, Certificate::Degenerate);
    }
    let s = form.s() as i64;
    if s <= 2 {
        return if form.scaled_euler().is_zero() {
            verdict(false, Certificate::LensZeroEuler)
        } else {
            verdict(true, Certificate::Lens)
        };
    }
    let b = form.b;
    if -(s - 2) <= b && b <= -2 {
        return verdict(false, Certificate::Branch1);
    }
    if b == -1 {
        return match jn_witness(&form.ratios) {
            Some(w) => verdict(false, Certificate::Branch2(w)),
            None => verdict(true, Certificate::NoWitness2),
        };
    }
    if b == -(s - 1) {
        return match jn_witness(&form.dual().ratios) {
            Some(w) => verdict(false, Certificate::Branch3(w)),
            None => verdict(true, Certificate::NoWitness3),
        };
    }
    verdict(true, Certificate::OutsideRange)
}

/// `Y_n = S²(b; r_1, …, r_{s-1}, (n·u + w)/(n·t + v))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertFamily {
    b: i64,
    base: Vec<Rational>,
    t: i64,
    u: i64,
    v: i64,
    w: i64,
}

/// Verdict for one member of a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MemberVerdict {
    pub n: i64,
    pub form: SeifertForm,
    pub verdict: LSpaceVerdict,
}

/// One side of the window, split at the pole `n = -v/t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailReport {
    /// Inclusive range of `n` covered by the tail.
    pub range: (i64, i64),
    /// Closest-to-pole `n` from which the verdict is constant out to the
    /// window edge, when that run covers at least the outer half of the tail.
    pub stable_from: Option<i64>,
    pub stable_lspace: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    pub window: (i64, i64),
    pub members: Vec<MemberVerdict>,
    pub limit: SeifertForm,
    pub limit_verdict: LSpaceVerdict,
    /// Exceptional fibers counted as in `Y_n`: the base ones plus `r_s(n)`.
    pub fiber_count: usize,
    pub lower: Option<TailReport>,
    pub upper: Option<TailReport>,
    /// For four or more fibers: whether "some tail is eventually all L-spaces"
    /// agrees with the limit verdict. `None` when the count is at most three
    /// or a tail is missing or unstable.
    pub dichotomy: Option<bool>,
    /// No tail stabilized inside the window.
    pub unstable: bool,
}

impl SeifertFamily {
    pub fn new(b: i64, base: Vec<Rational>, t: i64, u: i64, v: i64, w: i64) -> Result<Self, SeifertError> {
        let det = t * w - u * v;
        if det != 1 && det != -1 {
            return Err(SeifertError::BadDeterminant(det));
        }
        Ok(SeifertFamily { b, base, t, u, v, w })
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn base(&self) -> &[Rational] {
        &self.base
    }

    pub fn coefficients(&self) -> (i64, i64, i64, i64) {
        (self.t, self.u, self.v, self.w)
    }

    pub fn r_s(&self, n: i64) -> ExtRational {
        ExtRational::from_fraction(n * self.u + self.w, n * self.t + self.v)
    }

    fn with_last(&self, last: ExtRational) -> SeifertForm {
        let mut raw: Vec<ExtRational> = self.base.iter().map(|&r| r.into()).collect();
        raw.push(last);
        SeifertForm::normalize(self.b, &raw).expect("base ratios are finite")
    }

    pub fn member(&self, n: i64) -> SeifertForm {
        self.with_last(self.r_s(n))
    }

    /// `Y_∞`, with `r_s(∞) = u/t`.
    pub fn limit(&self) -> SeifertForm {
        self.with_last(ExtRational::from_fraction(self.u, self.t))
    }

    pub fn fiber_count(&self) -> usize {
        self.base.iter().filter(|r| !r.is_integer()).count() + 1
    }

    /// Where the two tails meet: the pole `-v/t` of `r_s`, or for `t = 0` the
    /// twist at which the integral `r_s(n)` vanishes.
    pub fn center(&self) -> Rational {
        if self.t != 0 {
            Rational::new(-self.v, self.t)
        } else {
            Rational::new(-self.w, self.u)
        }
    }

    pub fn member_verdict(&self, n: i64) -> MemberVerdict {
        let form = self.member(n);
        let verdict = is_lspace(&form);
        MemberVerdict { n, form, verdict }
    }

    pub fn classify(&self, window: (i64, i64)) -> Result<FamilyReport, SeifertError> {
        if window.0 > window.1 {
            return Err(SeifertError::EmptyWindow);
        }
        let members = (window.0..=window.1).map(|n| self.member_verdict(n)).collect();
        self.summarize(window, members)
    }

    /// Builds the report from member verdicts listed in ascending `n`.
    pub fn summarize(&self, window: (i64, i64), members: Vec<MemberVerdict>) -> Result<FamilyReport, SeifertError> {
        if window.0 > window.1 {
            return Err(SeifertError::EmptyWindow);
        }
        let center = self.center();
        let below: Vec<&MemberVerdict> = members.iter().filter(|m| Rational::from_integer(m.n) < center).collect();
        let above: Vec<&MemberVerdict> = members.iter().filter(|m| Rational::from_integer(m.n) > center).collect();
        let lower = tail_report(below.iter().rev().copied());
        let upper = tail_report(above.iter().copied());
        let limit = self.limit();
        let limit_verdict = is_lspace(&limit);
        let fiber_count = self.fiber_count();
        let stable = |t: &Option<TailReport>| t.as_ref().and_then(|t| t.stable_lspace);
        let dichotomy = match (fiber_count >= 4, stable(&lower), stable(&upper)) {
            (true, Some(lo), Some(up)) => Some((lo || up) == limit_verdict.lspace),
            _ => None,
        };
        let unstable = stable(&lower).is_none() && stable(&upper).is_none();
        Ok(FamilyReport {
            window,
            members,
            limit,
            limit_verdict,
            fiber_count,
            lower,
            upper,
            dichotomy,
            unstable,
        })
    }
}

/// `members` runs from the pole outwards.
fn tail_report<'a>(members: impl DoubleEndedIterator<Item = &'a MemberVerdict>) -> Option<TailReport> {
    let inward: Vec<&MemberVerdict> = members.rev().collect();
    let edge = inward.first()?;
    let near = inward.last()?;
    let target = edge.verdict.lspace;
    let run = inward.iter().take_while(|m| m.verdict.lspace == target).count();
    let len = inward.len();
    let (stable_from, stable_lspace) = if 2 * run >= len {
        (Some(inward[run - 1].n), Some(target))
    } else {
        (None, None)
    };
    let range = if edge.n <= near.n { (edge.n, near.n) } else { (near.n, edge.n) };
    Some(TailReport {
        range,
        stable_from,
        stable_lspace,
    })
}

/// Comma-separated ratios, as accepted on the command line.
pub fn format_ratios(ratios: &[Rational]) -> String {
    let mut out = String::new();
    for (i, r) in ratios.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&alloc::format!("{r}"));
    }
    out
}
