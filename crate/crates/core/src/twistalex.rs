//! Alexander polynomials of twist families.
//!
//! A twist family `{K_n}` comes from twisting a knot `K` `n` times along an
//! unknot `c` with linking number `ω`. Everything here is driven by the
//! two-variable polynomial `Δ_{K∪c}(x, y)`: it is validated against the
//! Torres conditions, transported under twisting by `y ↦ x^{-nω} y`, and
//! specialized to `Δ_{K∪c}(t, t^{-nω}) = (t^ω - 1)/(t - 1) · Δ_{K_n}(t)`.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::laurent::{Breadth, KnotPoly1, LaurentError, LinkPoly2};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwistError {
    /// The input failed the Torres / parity gate.
    InvalidLinkData(TorresReport),
    /// The operation needs a nonzero linking number.
    LinkingNumberZero,
    /// `Δ_{K∪c}(t, t^{-nω})` vanished.
    ZeroSpecialization {
        n: i64,
    },
    InexactDivision,
    NotACandidate,
    EmptyWindow,
}

impl fmt::Display for TwistError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwistError::InvalidLinkData(r) => write!(f, "link polynomial failed validation ({r})"),
            TwistError::LinkingNumberZero => f.write_str("operation requires a nonzero linking number"),
            TwistError::ZeroSpecialization { n } => write!(f, "specialized polynomial vanishes at n = {n}"),
            TwistError::InexactDivision => f.write_str("specialization is not divisible by (t^w - 1)/(t - 1)"),
            TwistError::NotACandidate => f.write_str("polynomial is not an L-space knot candidate"),
            TwistError::EmptyWindow => f.write_str("window is empty"),
        }
    }
}

impl core::error::Error for TwistError {}

impl From<LaurentError> for TwistError {
    fn from(_: LaurentError) -> Self {
        TwistError::InexactDivision
    }
}

/// Outcome of checking a two-variable polynomial against the Torres
/// conditions and the breadth parity law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorresReport {
    /// `Δ(x, y) = x^m y^n Δ(x^-1, y^-1)` for the witness `(m, n)`.
    pub t1: bool,
    pub t1_witness: Option<(i64, i64)>,
    /// Specialization to the first component, `Δ(t, 1)`.
    pub t2_first: bool,
    /// Specialization to the second component, `Δ(1, t)`.
    pub t2_second: bool,
    pub t2: bool,
    /// `Δ(1, 1) = ±ω`.
    pub t3: bool,
    pub value_at_one: BigInt,
    /// `br_x ≡ br_y ≡ ω - 1 (mod 2)`.
    pub parity: bool,
    pub breadth_x: Breadth,
    pub breadth_y: Breadth,
}

impl TorresReport {
    pub fn all_pass(&self) -> bool {
        self.t1 && self.t2 && self.t3 && self.parity
    }
}

impl fmt::Display for TorresReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T1={} T2={} T3={} parity={}", self.t1, self.t2, self.t3, self.parity)
    }
}

fn symmetry_witness(p: &LinkPoly2) -> Option<(i64, i64)> {
    if p.is_zero() {
        return Some((0, 0));
    }
    let m = p.min_exponent(0)? + p.max_exponent(0)?;
    let n = p.min_exponent(1)? + p.max_exponent(1)?;
    (p.invert_variables().shift([m, n]) == *p).then_some((m, n))
}

/// Whether `q` looks like the Alexander polynomial of a knot: symmetric up to
/// a unit with `|q(1)| = 1`.
fn is_knot_like(q: &KnotPoly1) -> bool {
    match q.symmetrized() {
        Ok(s) => s.is_symmetric() && s.eval_at_one().abs().is_one(),
        Err(_) => false,
    }
}

fn component_check(spec: &KnotPoly1, omega: u64, known: Option<&KnotPoly1>) -> bool {
    let factor = KnotPoly1::geometric(omega);
    match known {
        Some(dk) => spec.unit_equivalent(&(&factor * dk)),
        None if omega == 0 => spec.is_zero(),
        None => spec.divide_exact(&factor).map(|q| is_knot_like(&q)).unwrap_or(false),
    }
}

/// Checks `Δ_{L₁∪L₂}` against the Torres conditions for linking number
/// `omega`, the second component's polynomial `delta_c`, and optionally the
/// first component's polynomial `delta_k`. Without `delta_k` the first
/// specialization only has to be divisible by `(t^ω - 1)/(t - 1)` with a
/// knot-like quotient.
pub fn torres_verify(delta2: &LinkPoly2, omega: i64, delta_c: &KnotPoly1, delta_k: Option<&KnotPoly1>) -> TorresReport {
    let w = omega.unsigned_abs();
    let t1_witness = symmetry_witness(delta2);
    let t2_first = component_check(&delta2.specialize(1, 0), w, delta_k);
    let t2_second = component_check(&delta2.specialize(0, 1), w, Some(delta_c));
    let value_at_one = delta2.eval_at_one();
    let t3 = value_at_one.abs() == BigInt::from(w);
    let breadth_x = delta2.breadth_x();
    let breadth_y = delta2.breadth_y();
    let target = (w as i64 - 1).rem_euclid(2) as u64;
    let parity = matches!((breadth_x, breadth_y), (Breadth::Finite(bx), Breadth::Finite(by)) if bx % 2 == target && by % 2 == target);
    TorresReport {
        t1: t1_witness.is_some(),
        t1_witness,
        t2_first,
        t2_second,
        t2: t2_first && t2_second,
        t3,
        value_at_one,
        parity,
        breadth_x,
        breadth_y,
    }
}

/// `Δ_{K_n∪c_n}(x, y) = Δ_{K∪c}(x, x^{-nω} y)`.
pub fn twist_link(delta2: &LinkPoly2, omega: i64, n: i64) -> LinkPoly2 {
    delta2.substitute_monomial((1, 0), (-n * omega, 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// Linking number zero.
    LinkingZero,
    /// `|ω| = 1` and `Δ_{K∪c}` does not involve `y`: every `K_n` shares `Δ_K`.
    MeridianLike,
    /// Genera grow without bound in `|n|`.
    GenusUnbounded,
}

impl CaseTag {
    pub fn number(self) -> u8 {
        match self {
            CaseTag::LinkingZero => 1,
            CaseTag::MeridianLike => 2,
            CaseTag::GenusUnbounded => 3,
        }
    }
}

/// Which of the three twist-family behaviours a validated input exhibits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyCase {
    pub tag: CaseTag,
    pub y_breadth: u64,
    /// Asymptotic growth of `br Δ(t, t^{-nω})` per twist, `|ω| · br_y`.
    pub slope: u64,
    /// `br Δ(t, t^{-nω}) = slope·n + constant_pos` for all large `n > 0`.
    pub constant_pos: i64,
    /// `br Δ(t, t^{-nω}) = slope·|n| + constant_neg` for all large `n < 0`.
    pub constant_neg: i64,
}

/// L-space surgery obstruction over a window of twists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LSpaceWindow {
    /// Twists whose surgery passes the necessary inequality on either side.
    pub candidates: Vec<i64>,
    /// Twists passing `r_n ≥ br - ω` (positive L-space surgery possible).
    pub positive: Vec<i64>,
    /// Twists passing `-r_n ≥ br - ω` (mirror side).
    pub negative: Vec<i64>,
    /// Set for meridian-like families, where the breadth never grows and the
    /// window says nothing about finiteness.
    pub unbounded: bool,
}

/// Per-twist evaluation of the L-space surgery inequality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowMember {
    pub n: i64,
    pub slope: Rational,
    pub breadth: u64,
    pub positive: bool,
    pub negative: bool,
}

/// A validated twist family `(Δ_{K∪c}, ω)` with unknotted `c`.
///
/// The stored polynomial is reoriented so that the linking number is
/// non-negative; `omega` keeps the caller's sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistFamily {
    delta2: LinkPoly2,
    oriented: LinkPoly2,
    omega: i64,
}

impl TwistFamily {
    /// Validates `delta2` with `Δ_c = 1` and fails with the full report
    /// otherwise.
    pub fn new(delta2: LinkPoly2, omega: i64) -> Result<Self, TwistError> {
        let report = torres_verify(&delta2, omega, &KnotPoly1::one(), None);
        if !report.all_pass() {
            return Err(TwistError::InvalidLinkData(report));
        }
        let oriented = if omega < 0 {
            delta2.substitute_monomial((1, 0), (0, -1))
        } else {
            delta2.clone()
        };
        Ok(TwistFamily { delta2, oriented, omega })
    }

    pub fn delta2(&self) -> &LinkPoly2 {
        &self.delta2
    }

    pub fn omega(&self) -> i64 {
        self.omega
    }

    pub fn abs_omega(&self) -> u64 {
        self.omega.unsigned_abs()
    }

    fn require_linked(&self) -> Result<u64, TwistError> {
        match self.abs_omega() {
            0 => Err(TwistError::LinkingNumberZero),
            w => Ok(w),
        }
    }

    pub fn twist_link(&self, n: i64) -> LinkPoly2 {
        twist_link(&self.delta2, self.omega, n)
    }

    /// `Δ_{K∪c}(t, t^{-n|ω|})` for the positively oriented family.
    pub fn specialization(&self, n: i64) -> KnotPoly1 {
        self.oriented.specialize(1, -n * self.abs_omega() as i64)
    }

    /// Breadth of `Δ_{K∪c}(t, t^{-n|ω|})`.
    pub fn specialized_breadth(&self, n: i64) -> Result<u64, TwistError> {
        self.specialization(n).span().finite().ok_or(TwistError::ZeroSpecialization { n })
    }

    /// `Δ_{K_n}(t)`, symmetrized.
    pub fn twist_knot(&self, n: i64) -> Result<KnotPoly1, TwistError> {
        let w = self.require_linked()?;
        let spec = self.specialization(n);
        if spec.is_zero() {
            return Err(TwistError::ZeroSpecialization { n });
        }
        let q = spec.divide_exact(&KnotPoly1::geometric(w))?;
        Ok(q.symmetrized()?)
    }

    /// `⌈(br Δ(t, t^{-nω}) - (ω - 1)) / 2⌉`, floored at 0; a lower bound for
    /// the genus of `K_n`.
    pub fn genus_lower_bound(&self, n: i64) -> Result<u64, TwistError> {
        let w = self.require_linked()? as i64;
        let br = self.specialized_breadth(n)? as i64;
        let excess = br - (w - 1);
        Ok(if excess <= 0 { 0 } else { ((excess + 1) / 2) as u64 })
    }

    pub fn classify(&self) -> FamilyCase {
        let w = self.abs_omega();
        let y_breadth = self.oriented.breadth_y().finite().unwrap_or(0);
        let coeffs = self.oriented.y_coefficients();
        let (constant_pos, constant_neg) = match (coeffs.first(), coeffs.last()) {
            (Some(a0), Some(al)) => (
                a0.max_degree().unwrap_or(0) - al.min_degree().unwrap_or(0),
                al.max_degree().unwrap_or(0) - a0.min_degree().unwrap_or(0),
            ),
            _ => (0, 0),
        };
        let tag = if w == 0 {
            CaseTag::LinkingZero
        } else if w == 1 && y_breadth == 0 {
            CaseTag::MeridianLike
        } else {
            CaseTag::GenusUnbounded
        };
        FamilyCase {
            tag,
            y_breadth,
            slope: w * y_breadth,
            constant_pos,
            constant_neg,
        }
    }

    /// Evaluates the necessary condition for `(K_n, r_n)` with
    /// `r_n = r0 + nω²` to be an L-space surgery: a positive L-space surgery
    /// needs `r_n ≥ 2g(K_n) - 1 ≥ br Δ(t, t^{-nω}) - ω`, and the mirror needs
    /// the same of `-r_n`.
    pub fn window_member(&self, r0: Rational, n: i64) -> Result<WindowMember, TwistError> {
        let w = self.require_linked()? as i64;
        let breadth = self.specialized_breadth(n)?;
        let slope = r0 + Rational::from_integer(n * w * w);
        let bound = Rational::from_integer(breadth as i64 - w);
        Ok(WindowMember {
            n,
            slope,
            breadth,
            positive: slope >= bound,
            negative: -slope >= bound,
        })
    }

    pub fn lspace_window(&self, r0: Rational, window: (i64, i64)) -> Result<LSpaceWindow, TwistError> {
        if window.0 > window.1 {
            return Err(TwistError::EmptyWindow);
        }
        let members = (window.0..=window.1).map(|n| self.window_member(r0, n)).collect::<Result<Vec<_>, _>>()?;
        Ok(self.collect_window(window, &members))
    }

    /// Folds per-twist evaluations (in ascending `n`) into a window report.
    pub fn collect_window(&self, window: (i64, i64), members: &[WindowMember]) -> LSpaceWindow {
        if self.classify().tag == CaseTag::MeridianLike {
            let all: Vec<i64> = (window.0..=window.1).collect();
            return LSpaceWindow {
                candidates: all.clone(),
                positive: all.clone(),
                negative: all,
                unbounded: true,
            };
        }
        let pick = |f: fn(&WindowMember) -> bool| members.iter().filter(|m| f(m)).map(|m| m.n).collect::<Vec<_>>();
        LSpaceWindow {
            candidates: pick(|m| m.positive || m.negative),
            positive: pick(|m| m.positive),
            negative: pick(|m| m.negative),
            unbounded: false,
        }
    }
}

/// Both slope–genus inequalities for an L-space surgery of slope `r` on a
/// knot of genus `g`: `r ≥ 2g - 1` and `g ≤ (1 + |r|)/2`.
pub fn slope_genus_bounds(g: u64, r: Rational) -> (bool, bool) {
    let g = Rational::from_integer(g as i64);
    let two = Rational::from_integer(2);
    let one = Rational::one();
    (r >= two * g - one, g <= (one + r.abs()) / two)
}

/// Whether `delta` satisfies the Alexander polynomial restrictions for an
/// L-space knot: after symmetrizing, all nonzero coefficients are `±1`,
/// alternate in sign starting from `+1` at the top, and `Δ(1) = 1`.
pub fn os_candidate_check(delta: &KnotPoly1) -> bool {
    let Ok(s) = delta.symmetrized() else {
        return false;
    };
    if !s.is_symmetric() || !s.eval_at_one().is_one() {
        return false;
    }
    let coeffs: Vec<&BigInt> = s.terms().map(|(_, c)| c).collect();
    coeffs.iter().rev().enumerate().all(|(i, c)| {
        let expected = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        **c == expected
    })
}

fn candidate_from_exponents(genus: u64, inner: &[i64]) -> KnotPoly1 {
    // `inner` lists the exponents strictly between 0 and `genus`, descending.
    let mut positive: Vec<i64> = Vec::with_capacity(inner.len() + 1);
    positive.push(genus as i64);
    positive.extend_from_slice(inner);
    let j = positive.len();
    let mut terms = Vec::with_capacity(2 * j + 1);
    for (i, &e) in positive.iter().enumerate() {
        let c: i64 = if i % 2 == 0 { 1 } else { -1 };
        terms.push(([e], c));
        terms.push(([-e], c));
    }
    terms.push(([0], if j.is_multiple_of(2) { 1 } else { -1 }));
    KnotPoly1::from_terms(terms)
}

/// Every symmetrized polynomial of breadth `2·genus` passing
/// [`os_candidate_check`].
///
/// A symmetric alternating `±1` polynomial has an odd number of terms with
/// the middle one at `t^0`, so candidates correspond to subsets of
/// `{1, …, genus - 1}`; they are listed from the full subset downwards in
/// binary order.
pub fn enumerate_candidates(genus: u64) -> Vec<KnotPoly1> {
    if genus == 0 {
        return alloc::vec![KnotPoly1::one()];
    }
    let inner_count = genus - 1;
    assert!(inner_count < 63, "candidate enumeration beyond genus 63 does not fit a subset mask");
    let full: u64 = (1u64 << inner_count) - 1;
    (0..=full)
        .rev()
        .map(|mask| {
            let inner: Vec<i64> = (1..genus as i64).rev().filter(|&e| mask >> (e - 1) & 1 == 1).collect();
            candidate_from_exponents(genus, &inner)
        })
        .collect()
}

/// Knot Floer homology of an L-space knot: one `ℤ` per nonzero coefficient
/// of `Δ`, listed from the top Alexander grading down.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaircaseHfk {
    /// `(alexander grading, maslov grading)` pairs.
    pub generators: Vec<(i64, i64)>,
}

/// Maslov gradings of the staircase determined by an L-space knot
/// polynomial `Σ (-1)^{k+j} t^{n_j}`: the top generator sits in grading 0,
/// and walking down, a step into an odd position from the top drops by
/// `2(n_{j+1} - n_j) - 1`, a step into an even position drops by 1.
pub fn staircase(delta: &KnotPoly1) -> Result<StaircaseHfk, TwistError> {
    if !os_candidate_check(delta) {
        return Err(TwistError::NotACandidate);
    }
    let s = delta.symmetrized()?;
    let exps: Vec<i64> = s.terms().map(|(e, _)| e[0]).rev().collect();
    let mut generators = Vec::with_capacity(exps.len());
    let mut maslov = 0i64;
    for (i, &a) in exps.iter().enumerate() {
        if i > 0 {
            if i % 2 == 1 {
                maslov -= 2 * (exps[i - 1] - a) - 1;
            } else {
                maslov -= 1;
            }
        }
        generators.push((a, maslov));
    }
    Ok(StaircaseHfk { generators })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::Laurent;

    fn p2(terms: &[((i64, i64), i64)]) -> LinkPoly2 {
        LinkPoly2::from_terms(terms.iter().map(|&((x, y), c)| ([x, y], c)))
    }

    fn l7a5() -> LinkPoly2 {
        p2(&[((2, 1), 1), ((1, 2), 1), ((2, 0), -1), ((0, 2), -1), ((1, 1), -3), ((1, 0), 1), ((0, 1), 1)])
    }

    fn whitehead() -> LinkPoly2 {
        p2(&[((1, 1), -1), ((1, 0), 1), ((0, 1), 1), ((0, 0), -1)])
    }

    fn trefoil() -> KnotPoly1 {
        KnotPoly1::from_coeffs(-1, &[1, -1, 1])
    }

    #[test]
    fn torres_accepts_l7a5() {
        let r = torres_verify(&l7a5(), 1, &KnotPoly1::one(), None);
        assert!(r.all_pass(), "{r:?}");
        assert_eq!(r.t1_witness, Some((2, 2)));
        assert_eq!(r.value_at_one, BigInt::from(-1));
    }

    #[test]
    fn torres_accepts_whitehead() {
        let r = torres_verify(&whitehead(), 0, &KnotPoly1::one(), Some(&KnotPoly1::one()));
        assert!(r.all_pass(), "{r:?}");
    }

    #[test]
    fn torres_rejects_bad_value_at_one() {
        let r = torres_verify(&p2(&[((2, 1), 1), ((2, 0), -1)]), 1, &KnotPoly1::one(), None);
        assert!(!r.t3);
        assert!(!r.all_pass());
    }

    #[test]
    fn torres_checks_the_knot_component_when_given() {
        let r = torres_verify(&l7a5(), 1, &KnotPoly1::one(), Some(&KnotPoly1::one()));
        assert!(r.t2_first);
        let r = torres_verify(&l7a5(), 1, &KnotPoly1::one(), Some(&trefoil()));
        assert!(!r.t2_first);
    }

    #[test]
    fn twist_link_examples() {
        assert_eq!(twist_link(&l7a5(), 1, 0), l7a5());
        let once = p2(&[((1, 1), 1), ((-1, 2), 1), ((2, 0), -1), ((-2, 2), -1), ((0, 1), -3), ((1, 0), 1), ((-1, 1), 1)]);
        assert_eq!(twist_link(&l7a5(), 1, 1), once);
        for (a, b) in [(2, 3), (-1, 4), (5, -5)] {
            assert_eq!(twist_link(&twist_link(&l7a5(), 1, a), 1, b), twist_link(&l7a5(), 1, a + b));
        }
    }

    #[test]
    fn twist_knot_examples() {
        let fam = TwistFamily::new(l7a5(), 1).unwrap();
        assert_eq!(fam.twist_knot(0).unwrap(), KnotPoly1::one());
        assert_eq!(fam.twist_knot(1).unwrap(), KnotPoly1::from_coeffs(-2, &[1, -2, 3, -2, 1]));
        let meridian = TwistFamily::new(LinkPoly2::from_x_poly(&trefoil()), 1).unwrap();
        for n in -5..=5 {
            assert_eq!(meridian.twist_knot(n).unwrap(), trefoil());
        }
    }

    #[test]
    fn genus_bound_examples() {
        let fam = TwistFamily::new(l7a5(), 1).unwrap();
        assert_eq!(fam.genus_lower_bound(1).unwrap(), 2);
        assert_eq!(fam.genus_lower_bound(2).unwrap(), 3);
        assert_eq!(fam.specialization(2), KnotPoly1::from_coeffs(-4, &[-1, 1, 1, -3, 1, 1, -1]));
        assert_eq!(fam.genus_lower_bound(0).unwrap(), 0);
    }

    #[test]
    fn classification_examples() {
        let wh = TwistFamily::new(whitehead(), 0).unwrap();
        assert_eq!(wh.classify().tag, CaseTag::LinkingZero);
        let mer = TwistFamily::new(LinkPoly2::from_x_poly(&trefoil()), 1).unwrap();
        assert_eq!(mer.classify().tag, CaseTag::MeridianLike);
        let l = TwistFamily::new(l7a5(), 1).unwrap().classify();
        assert_eq!(l.tag, CaseTag::GenusUnbounded);
        assert_eq!(l.slope, 2);
        assert_eq!((l.constant_pos, l.constant_neg), (2, 0));
    }

    #[test]
    fn invalid_input_is_rejected() {
        match TwistFamily::new(p2(&[((2, 1), 1), ((2, 0), -1)]), 1) {
            Err(TwistError::InvalidLinkData(r)) => assert!(!r.t3),
            other => panic!("expected validation failure, got {other:?}"),
        }
    }

    #[test]
    fn negative_linking_uses_orientation_flip() {
        // reversing c sends y to 1/y and ω to -ω
        let flipped = l7a5().substitute_monomial((1, 0), (0, -1));
        let fam = TwistFamily::new(flipped, -1).unwrap();
        let orig = TwistFamily::new(l7a5(), 1).unwrap();
        for n in -4..=4 {
            assert_eq!(fam.twist_knot(n).unwrap(), orig.twist_knot(n).unwrap());
            assert_eq!(fam.genus_lower_bound(n).unwrap(), orig.genus_lower_bound(n).unwrap());
        }
    }

    #[test]
    fn lspace_window_examples() {
        let fam = TwistFamily::new(l7a5(), 1).unwrap();
        let w = fam.lspace_window(Rational::from_integer(0), (-50, 50)).unwrap();
        assert_eq!(w.candidates, alloc::vec![-1, 0]);
        assert!(!w.unbounded);
        let big = fam.lspace_window(Rational::from_integer(1_000_000), (-50, 50)).unwrap();
        assert_eq!(big.candidates.len(), 101);
        let mer = TwistFamily::new(LinkPoly2::from_x_poly(&trefoil()), 1).unwrap();
        let mw = mer.lspace_window(Rational::from_integer(1), (-7, 7)).unwrap();
        assert!(mw.unbounded);
        assert_eq!(mw.candidates.len(), 15);
        assert_eq!(fam.lspace_window(Rational::from_integer(0), (3, 2)), Err(TwistError::EmptyWindow));
    }

    #[test]
    fn slope_genus_examples() {
        assert_eq!(slope_genus_bounds(3, Rational::from_integer(5)), (true, true));
        assert_eq!(slope_genus_bounds(3, Rational::from_integer(4)), (false, false));
        assert_eq!(slope_genus_bounds(3, Rational::from_integer(-5)), (false, true));
        assert_eq!(slope_genus_bounds(0, Rational::from_integer(0)), (true, true));
    }

    #[test]
    fn candidate_check_examples() {
        assert!(os_candidate_check(&trefoil()));
        assert!(!os_candidate_check(&KnotPoly1::from_coeffs(-1, &[-1, 3, -1])));
        assert!(os_candidate_check(&KnotPoly1::one()));
        assert!(os_candidate_check(&trefoil().shift([7])));
        assert!(!os_candidate_check(&KnotPoly1::zero()));
    }

    #[test]
    fn candidate_enumeration_small_genera() {
        assert_eq!(enumerate_candidates(0), alloc::vec![KnotPoly1::one()]);
        assert_eq!(enumerate_candidates(1), alloc::vec![trefoil()]);
        assert_eq!(
            enumerate_candidates(2),
            alloc::vec![KnotPoly1::from_coeffs(-2, &[1, -1, 1, -1, 1]), KnotPoly1::from_coeffs(-2, &[1, 0, -1, 0, 1])]
        );
    }

    /// Independent oracle: every coefficient vector in {-1,0,1}^(2g+1).
    fn brute_force_candidates(genus: u64) -> Vec<KnotPoly1> {
        let len = 2 * genus as usize + 1;
        let mut out = Vec::new();
        for code in 0..3u64.pow(len as u32) {
            let mut c = code;
            let coeffs: Vec<i64> = (0..len)
                .map(|_| {
                    let d = (c % 3) as i64 - 1;
                    c /= 3;
                    d
                })
                .collect();
            if coeffs[0] == 0 || coeffs[len - 1] == 0 {
                continue;
            }
            let p = Laurent::from_coeffs(-(genus as i64), &coeffs);
            if os_candidate_check(&p) && p.symmetrized().unwrap() == p {
                out.push(p);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for g in 0..=4 {
            let mut fast = enumerate_candidates(g);
            fast.sort();
            assert_eq!(fast, brute_force_candidates(g), "genus {g}");
        }
    }

    #[test]
    fn staircase_examples() {
        assert_eq!(staircase(&trefoil()).unwrap().generators, alloc::vec![(1, 0), (0, -1), (-1, -2)]);
        assert_eq!(staircase(&KnotPoly1::one()).unwrap().generators, alloc::vec![(0, 0)]);
        assert_eq!(
            staircase(&KnotPoly1::from_coeffs(-2, &[1, -1, 1, -1, 1])).unwrap().generators,
            alloc::vec![(2, 0), (1, -1), (0, -2), (-1, -3), (-2, -4)]
        );
        // T(3,4): t^3 - t^2 + 1 - t^-2 + t^-3
        assert_eq!(
            staircase(&KnotPoly1::from_coeffs(-3, &[1, -1, 0, 1, 0, -1, 1])).unwrap().generators,
            alloc::vec![(3, 0), (2, -1), (0, -2), (-2, -5), (-3, -6)]
        );
        assert_eq!(staircase(&KnotPoly1::from_coeffs(-1, &[-1, 3, -1])), Err(TwistError::NotACandidate));
    }

    #[test]
    fn staircase_gradings_follow_support() {
        for g in 0..=5 {
            for p in enumerate_candidates(g) {
                let st = staircase(&p).unwrap();
                let support: Vec<i64> = p.terms().map(|(e, _)| e[0]).rev().collect();
                let alex: Vec<i64> = st.generators.iter().map(|g| g.0).collect();
                assert_eq!(alex, support);
                // symmetry of the staircase: M(-a) = M(a) - 2a
                let lookup = |a: i64| st.generators.iter().find(|g| g.0 == a).unwrap().1;
                for &(a, m) in &st.generators {
                    assert_eq!(lookup(-a), m - 2 * a);
                }
            }
        }
    }
}
