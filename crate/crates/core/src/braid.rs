//! Braid words, their closures, and the braids of torus and twisted torus
//! knots.

pub mod census;
pub mod garside;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::laurent::{KnotPoly1, LaurentError};
use garside::{NormalForm, Simple};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BraidError {
    /// A letter is 0 or outside `±1..=strands-1`.
    InvalidGenerator(i32),
    NotAKnot {
        components: usize,
    },
    NotPositive,
    InvalidParameters,
    /// Twisted torus braids with `p < 0` are only constructed for `n ≤ 2`.
    OutOfProvenRange,
    /// Simplification did not reach a positive or negative word.
    NotHomogeneous,
    Polynomial(LaurentError),
}

impl fmt::Display for BraidError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidError::InvalidGenerator(g) => write!(f, "generator {g} is out of range"),
            BraidError::NotAKnot { components } => write!(f, "closure has {components} components, expected a knot"),
            BraidError::NotPositive => f.write_str("word mixes positive and negative letters"),
            BraidError::InvalidParameters => f.write_str("need q >= 2, p != 0 and gcd(|p|, q) = 1"),
            BraidError::OutOfProvenRange => f.write_str("p < 0 is only supported for n <= 2"),
            BraidError::NotHomogeneous => f.write_str("could not simplify to a positive or negative braid"),
            BraidError::Polynomial(e) => write!(f, "polynomial arithmetic failed: {e}"),
        }
    }
}

impl core::error::Error for BraidError {}

impl From<LaurentError> for BraidError {
    fn from(e: LaurentError) -> Self {
        BraidError::Polynomial(e)
    }
}

/// A word in `σ_1^{±1}, …, σ_{n-1}^{±1}`; letter `±i` is `σ_i^{±1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        let strands = strands.max(1);
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands) {
            return Err(BraidError::InvalidGenerator(bad));
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord {
            strands: strands.max(1),
            letters: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&l| l > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.letters.iter().all(|&l| l < 0)
    }

    pub fn inverse(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn mirror(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|l| -l).collect(),
        }
    }

    /// Conjugation by `Δ`: `σ_i ↦ σ_{n-i}`.
    pub fn reflect(&self) -> Self {
        let n = self.strands as i32;
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|&l| l.signum() * (n - l.abs())).collect(),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> Self {
        let strands = self.strands.max(other.strands);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { strands, letters }
    }

    /// `perm[i]` is the final position of the strand starting at position `i`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }

    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; perm.len()];
        let mut cycles = 0;
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
            }
        }
        cycles
    }

    pub fn is_knot(&self) -> bool {
        self.closure_components() == 1
    }

    fn require_knot(&self) -> Result<(), BraidError> {
        match self.closure_components() {
            1 => Ok(()),
            components => Err(BraidError::NotAKnot { components }),
        }
    }

    /// Cancels `σ_i^{ε} σ_i^{-ε}` pairs, also across commuting letters and
    /// around the end of the word (the closure is unchanged).
    pub fn free_reduced(&self) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            push_reduced(&mut out, l);
        }
        // cyclic pass: rotate letters from the front onto the back while
        // they cancel there
        while let Some(&first) = out.first() {
            let mut trial = out[1..].to_vec();
            let before = trial.len();
            push_reduced(&mut trial, first);
            if trial.len() < before {
                out = trial;
            } else {
                break;
            }
        }
        BraidWord {
            strands: self.strands,
            letters: out,
        }
    }

    /// Deletes the single occurrence of generator `i` and merges strands
    /// `i`, `i+1`; valid whenever `σ_i^{±1}` occurs exactly once.
    ///
    /// Up to conjugation the word is `X·Y·σ_i^{±1}` with `X` on the
    /// generators below `i` and `Y` above, since those commute; the result
    /// is `X·Y'` with `Y'` shifted down by one.
    pub fn destabilize_at(&self, i: i32) -> Self {
        let at = self.letters.iter().position(|l| l.abs() == i).expect("generator occurs");
        let rotated = self.letters[at + 1..].iter().chain(&self.letters[..at]);
        let mut letters: Vec<i32> = rotated.clone().copied().filter(|l| l.abs() < i).collect();
        letters.extend(rotated.filter(|l| l.abs() > i).map(|&l| l - l.signum()));
        BraidWord {
            strands: self.strands - 1,
            letters,
        }
    }

    fn occurrences(&self) -> Vec<usize> {
        let mut count = vec![0usize; self.strands];
        for &l in &self.letters {
            count[l.unsigned_abs() as usize] += 1;
        }
        count
    }

    /// `det(I - ψ(β))` for the reduced Burau representation `ψ`; a
    /// conjugacy invariant equal to `Δ(t)·(1 + t + … + t^{n-1})` up to units
    /// for knot closures.
    pub fn burau_det(&self) -> KnotPoly1 {
        let m = self.strands - 1;
        if m == 0 {
            return KnotPoly1::one();
        }
        let t = KnotPoly1::t_pow(1);
        let t_inv = KnotPoly1::t_pow(-1);
        let mut mat: Vec<Vec<KnotPoly1>> = (0..m)
            .map(|i| (0..m).map(|j| if i == j { KnotPoly1::one() } else { KnotPoly1::zero() }).collect())
            .collect();
        for &l in &self.letters {
            let j = l.unsigned_abs() as usize - 1;
            // column j of M·ψ(σ_j^{±1})
            for row in mat.iter_mut() {
                let left = if j >= 1 { row[j - 1].clone() } else { KnotPoly1::zero() };
                let right = if j + 1 < m { row[j + 1].clone() } else { KnotPoly1::zero() };
                let mid = row[j].clone();
                row[j] = if l > 0 {
                    &(&(&t * &left) - &(&t * &mid)) + &right
                } else {
                    &(&left - &(&t_inv * &mid)) + &(&t_inv * &right)
                };
            }
        }
        for (i, row) in mat.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                let neg = -&*e;
                *e = if i == j { &KnotPoly1::one() + &neg } else { neg };
            }
        }
        poly_det(mat)
    }

    /// Alexander polynomial of the closure, symmetrized.
    pub fn burau_alexander(&self) -> Result<KnotPoly1, BraidError> {
        self.require_knot()?;
        let d = self.burau_det();
        Ok(d.divide_exact(&KnotPoly1::geometric(self.strands as u64))?.symmetrized()?)
    }

    /// `(1 - n + ℓ)/2`, the genus of the closure of a positive (or negative)
    /// braid.
    pub fn genus_positive(&self) -> Result<u64, BraidError> {
        self.require_knot()?;
        if !self.is_positive() && !self.is_negative() {
            return Err(BraidError::NotPositive);
        }
        Ok(((1 + self.letters.len()) - self.strands) as u64 / 2)
    }
}

fn push_reduced(out: &mut Vec<i32>, l: i32) {
    for k in (0..out.len()).rev() {
        let prev = out[k];
        if prev == -l {
            out.remove(k);
            return;
        }
        if (prev.abs() - l.abs()).abs() < 2 {
            break;
        }
    }
    out.push(l);
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}[", self.strands)?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("]")
    }
}

/// Fraction-free elimination over `ℤ[t, t^{-1}]`.
fn poly_det(mut a: Vec<Vec<KnotPoly1>>) -> KnotPoly1 {
    let n = a.len();
    let mut sign = false;
    let mut prev = KnotPoly1::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = !sign;
                }
                None => return KnotPoly1::zero(),
            }
        }
        if k + 1 == n {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = v.divide_exact(&prev).expect("Bareiss quotients are exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReduceOutcome {
    /// At least one destabilization happened; no generator of the result is
    /// absent or used once.
    Reduced(BraidWord),
    /// Some generator is absent, so the closure is a split link.
    Split,
    Irreducible,
}

/// Repeatedly removes generators that occur once, merging their strands.
pub fn reduce(w: &BraidWord) -> ReduceOutcome {
    let mut cur = w.clone();
    let mut changed = false;
    loop {
        let count = cur.occurrences();
        if (1..cur.strands).any(|i| count[i] == 0) {
            return ReduceOutcome::Split;
        }
        match (1..cur.strands).find(|&i| count[i] == 1) {
            Some(i) => {
                cur = cur.destabilize_at(i as i32);
                changed = true;
            }
            None if changed => return ReduceOutcome::Reduced(cur),
            None => return ReduceOutcome::Irreducible,
        }
    }
}

/// `(σ_1 ⋯ σ_{q-1})^{|p|}` on `q` strands, inverted letters when `p < 0`.
pub fn torus_braid(p: i64, q: usize) -> BraidWord {
    let sign = if p < 0 { -1 } else { 1 };
    let mut letters = Vec::with_capacity(p.unsigned_abs() as usize * q.saturating_sub(1));
    for _ in 0..p.unsigned_abs() {
        letters.extend((1..q as i32).map(|i| sign * i));
    }
    BraidWord::identity(q).concat(&BraidWord { strands: q.max(1), letters })
}

/// `(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))`, symmetrized.
pub fn torus_alexander(p: u64, q: u64) -> KnotPoly1 {
    let (p, q) = (p as i64, q as i64);
    let minus_one = |e: i64| &KnotPoly1::t_pow(e) - &KnotPoly1::one();
    let num = &minus_one(p * q) * &minus_one(1);
    let den = &minus_one(p) * &minus_one(q);
    num.divide_exact(&den).expect("cyclotomic quotient is exact").symmetrized().expect("nonzero")
}

fn delta_power(n: usize, k: i64) -> BraidWord {
    let d = Simple::delta(n).letters();
    let sign = if k < 0 { -1 } else { 1 };
    let mut letters = Vec::new();
    for _ in 0..k.unsigned_abs() {
        if k > 0 {
            letters.extend(d.iter().map(|&i| (i + 1) as i32));
        } else {
            letters.extend(d.iter().rev().map(|&i| sign * (i + 1) as i32));
        }
    }
    BraidWord { strands: n.max(1), letters }
}

/// Rotation by `q` on `p + q` points as a positive permutation braid: the
/// Lorenz braid whose closure is `T(p, q)`.
fn lorenz_simple(p: usize, q: usize) -> Simple {
    let n = p + q;
    let perm: Vec<usize> = (0..n).map(|i| (i + q) % n).collect();
    // rebuild through letters so the result is checked as a permutation braid
    let w = BraidWord {
        strands: n,
        letters: simple_word(&perm),
    };
    let nf = NormalForm::from_word(&w);
    nf.factors().first().cloned().unwrap_or_else(|| Simple::identity(n))
}

fn simple_word(perm: &[usize]) -> Vec<i32> {
    let n = perm.len();
    let mut arr: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    let mut changed = true;
    while changed {
        changed = false;
        for pos in 0..n.saturating_sub(1) {
            if perm[arr[pos]] > perm[arr[pos + 1]] {
                arr.swap(pos, pos + 1);
                out.push(pos as i32 + 1);
                changed = true;
            }
        }
    }
    out
}

/// Braid for `T_{p,q,n}`, the torus knot `T_{p,q}` twisted `n` times along
/// the unknot `c₊` with `lk(T_{p,q}, c₊) = p + q`.
///
/// For `p > 0`, `c₊` is a braid axis of the `(p+q)`-strand Lorenz braid of
/// `T_{p,q}`, so the twist appends `Δ^{2n}`; the word is positive for
/// `n ≥ 0` and rewritten as a negative word for `n < 0`. For `p < 0` the
/// knot is the mirror of `T_{|p|,q}` with `|p+q|` adjacent strands twisted:
/// negative for `n ≤ 0`, and simplified by conjugation and
/// destabilization for `n ∈ {1, 2}`.
pub fn twisted_torus_braid(p: i64, q: i64, n: i64) -> Result<BraidWord, BraidError> {
    if q < 2 || p == 0 || p.unsigned_abs().gcd(&(q as u64)) != 1 {
        return Err(BraidError::InvalidParameters);
    }
    if p > 0 {
        let (a, b) = (p as usize, q as usize);
        let strands = a + b;
        let lorenz = lorenz_simple(a, b);
        if n >= 0 {
            let base = BraidWord {
                strands,
                letters: lorenz.letters().iter().map(|&i| i as i32 + 1).collect(),
            };
            return Ok(base.concat(&delta_power(strands, 2 * n)));
        }
        // L = Δ C^{-1} with C = L^{-1}Δ, so L Δ^{2n} = τ(C)^{-1} Δ^{2n+1}
        let c = lorenz.right_complement().tau();
        let inv: Vec<i32> = c.letters().iter().rev().map(|&i| -(i as i32 + 1)).collect();
        let base = BraidWord { strands, letters: inv };
        return Ok(base.concat(&delta_power(strands, 2 * n + 1)));
    }
    if n >= 3 {
        return Err(BraidError::OutOfProvenRange);
    }
    let big = p.unsigned_abs().max(q as u64) as usize;
    let small = p.unsigned_abs().min(q as u64) as i64;
    let r = big - small as usize;
    let base = torus_braid(-small, big);
    let twist = BraidWord::identity(big).concat(&delta_power(r, 2 * n));
    let word = base.concat(&twist);
    if n <= 0 {
        return Ok(word);
    }
    if let Some(w) = homogenize(&word) {
        return Ok(w);
    }
    if 2 * small as usize <= big {
        if let Some(w) = homogenize(&block_form(big, small as usize, n)) {
            return Ok(w);
        }
    }
    Err(BraidError::NotHomogeneous)
}

/// For `a ≥ 2b`, `r = a − b`, `s = r − b` and `n ≥ 1`, a conjugate of
/// `(σ_1^{-1} ⋯ σ_{a-1}^{-1})^b Δ_r^{2n}` on `a` strands, written as
/// `Δ_r^{2(n-1)} · Δ_s^2 · S · N`. Here `Δ_s^2` twists strands `b..r`,
/// `S` is the positive block swap taking the first `b` strands past the
/// next `s`, and `N` is the negative block swap of the two trailing blocks
/// of `b` strands. It has only `b²` negative letters.
fn block_form(a: usize, b: usize, n: i64) -> BraidWord {
    let r = a - b;
    let s = r - b;
    let mut w = BraidWord::identity(a);
    w = w.concat(&delta_power(r, 2 * (n - 1)));
    let twist = delta_power(s, 2);
    w = w.concat(&BraidWord {
        strands: a,
        letters: twist.letters.iter().map(|&l| l + b as i32).collect(),
    });
    let swap: Vec<usize> = (0..a)
        .map(|i| {
            if i < b {
                i + s
            } else if i < r {
                i - b
            } else {
                i
            }
        })
        .collect();
    w = w.concat(&BraidWord {
        strands: a,
        letters: simple_word(&swap),
    });
    // N has permutation: block at s..s+b moves to the end; its inverse
    // permutation is the reverse swap
    let back: Vec<usize> = (0..a)
        .map(|i| {
            if i < s {
                i
            } else if i < s + b {
                i + b
            } else {
                i - b
            }
        })
        .collect();
    let mut inverse = alloc::vec![0; a];
    for (i, &p) in back.iter().enumerate() {
        inverse[p] = i;
    }
    let neg: Vec<i32> = simple_word(&inverse).iter().rev().map(|l| -l).collect();
    w.concat(&BraidWord { strands: a, letters: neg })
}

/// Searches for a positive or negative word with the same closure, using
/// cyclic free reduction, Garside cycling of the braid and its inverse, and
/// Markov destabilization.
pub fn homogenize(w: &BraidWord) -> Option<BraidWord> {
    let mut cur = w.free_reduced();
    for _ in 0..4 * w.len() + 8 {
        if cur.is_positive() || cur.is_negative() {
            return Some(cur);
        }
        if let Some(next) = destabilize_once(&cur) {
            cur = next.free_reduced();
            continue;
        }
        let n = cur.strands;
        let budget = n * n + 4;
        let mut words: Vec<BraidWord> = Vec::new();
        let mut nf = NormalForm::from_word(&cur);
        for _ in 0..budget {
            if nf.inf() >= 0 || nf.sup() <= 0 {
                return Some(nf.to_word().free_reduced());
            }
            words.push(nf.to_word());
            nf = nf.cycle();
        }
        let mut inv = NormalForm::from_word(&cur.inverse());
        for _ in 0..budget {
            if inv.inf() >= 0 || inv.sup() <= 0 {
                return Some(inv.to_word().inverse().free_reduced());
            }
            words.push(inv.to_word().inverse());
            inv = inv.cycle();
        }
        let next = words
            .iter()
            .map(BraidWord::free_reduced)
            .find_map(|w| destabilize_once(&w).or_else(|| (w.len() < cur.len()).then_some(w)))
            .or_else(|| rewrite_search(&cur, REWRITE_NODES));
        cur = next?.free_reduced();
    }
    None
}

const REWRITE_NODES: usize = 20_000;

/// Three-letter identities `σ_i^a σ_j^b σ_i^c = σ_j^d σ_i^e σ_j^f` for
/// `|i - j| = 1`, as sign patterns.
fn triple_identities() -> Vec<([i32; 3], [i32; 3])> {
    let signs = [1, -1];
    let mut out = Vec::new();
    for lhs in sign_triples(&signs) {
        let left = NormalForm::from_word(&BraidWord {
            strands: 3,
            letters: alloc::vec![lhs[0], 2 * lhs[1], lhs[2]],
        });
        for rhs in sign_triples(&signs) {
            let right = NormalForm::from_word(&BraidWord {
                strands: 3,
                letters: alloc::vec![2 * rhs[0], rhs[1], 2 * rhs[2]],
            });
            if left == right {
                out.push((lhs, rhs));
            }
        }
    }
    out
}

fn sign_triples(signs: &[i32]) -> Vec<[i32; 3]> {
    let mut out = Vec::new();
    for &a in signs {
        for &b in signs {
            for &c in signs {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Breadth-first search over cyclic words reachable by commutations and
/// three-letter braid identities, stopping at the first word that
/// destabilizes, free-reduces to something shorter, or is homogeneous.
fn rewrite_search(w: &BraidWord, max_nodes: usize) -> Option<BraidWord> {
    use alloc::collections::{BTreeSet, VecDeque};
    let ids = triple_identities();
    let len = w.letters.len();
    if len < 2 {
        return None;
    }
    let mut seen: BTreeSet<Vec<i32>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<i32>> = VecDeque::new();
    seen.insert(min_rotation(&w.letters));
    queue.push_back(w.letters.clone());
    while let Some(cur) = queue.pop_front() {
        let mut found = None;
        let mut visit = |next: Vec<i32>, queue: &mut VecDeque<Vec<i32>>| {
            if found.is_some() || !seen.insert(min_rotation(&next)) {
                return;
            }
            let cand = BraidWord {
                strands: w.strands,
                letters: next.clone(),
            };
            let reduced = cand.free_reduced();
            if reduced.len() < len || reduced.is_positive() || reduced.is_negative() {
                found = Some(reduced);
            } else if let Some(d) = destabilize_once(&cand) {
                found = Some(d);
            } else {
                queue.push_back(next);
            }
        };
        for k in 0..len {
            let (x, y) = (cur[k], cur[(k + 1) % len]);
            if (x.abs() - y.abs()).abs() >= 2 {
                let mut next = cur.clone();
                next.swap(k, (k + 1) % len);
                visit(next, &mut queue);
            }
            if len >= 3 {
                let z = cur[(k + 2) % len];
                if x.abs() == z.abs() && (x.abs() - y.abs()).abs() == 1 {
                    let pattern = [x.signum(), y.signum(), z.signum()];
                    for (lhs, rhs) in &ids {
                        if *lhs == pattern {
                            let mut next = cur.clone();
                            next[k] = rhs[0] * y.abs();
                            next[(k + 1) % len] = rhs[1] * x.abs();
                            next[(k + 2) % len] = rhs[2] * y.abs();
                            visit(next, &mut queue);
                        }
                    }
                }
            }
        }
        if found.is_some() {
            return found;
        }
        if seen.len() > max_nodes {
            return None;
        }
    }
    None
}

fn min_rotation(w: &[i32]) -> Vec<i32> {
    (0..w.len().max(1))
        .map(|s| w[s..].iter().chain(&w[..s]).copied().collect::<Vec<i32>>())
        .min()
        .unwrap_or_default()
}

fn destabilize_once(w: &BraidWord) -> Option<BraidWord> {
    let count = w.occurrences();
    (1..w.strands).find(|&i| count[i] == 1).map(|i| w.destabilize_at(i as i32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn word(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    fn trefoil() -> KnotPoly1 {
        KnotPoly1::from_coeffs(-1, &[1, -1, 1])
    }

    #[test]
    fn rejects_bad_generators() {
        assert_eq!(BraidWord::new(3, vec![3]), Err(BraidError::InvalidGenerator(3)));
        assert_eq!(BraidWord::new(3, vec![0]), Err(BraidError::InvalidGenerator(0)));
    }

    #[test]
    fn closure_component_examples() {
        assert_eq!(word(2, &[1]).closure_components(), 1);
        assert_eq!(word(3, &[]).closure_components(), 3);
        assert_eq!(word(2, &[1, 1]).closure_components(), 2);
    }

    #[test]
    fn genus_examples() {
        assert_eq!(word(2, &[1, 1, 1]).genus_positive().unwrap(), 1);
        assert_eq!(word(3, &[1, 2, 1, 2, 1, 2, 1, 2]).genus_positive().unwrap(), 3);
        assert_eq!(word(2, &[1]).genus_positive().unwrap(), 0);
        assert_eq!(word(2, &[-1, -1, -1]).genus_positive().unwrap(), 1);
        assert_eq!(word(2, &[1, 1]).genus_positive(), Err(BraidError::NotAKnot { components: 2 }));
        assert_eq!(word(3, &[1, -2]).genus_positive(), Err(BraidError::NotPositive));
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(&word(3, &[2])), ReduceOutcome::Split);
        assert_eq!(reduce(&word(3, &[1, 2, 2])), ReduceOutcome::Reduced(word(2, &[1, 1])));
        assert_eq!(reduce(&word(2, &[1, 1, 1])), ReduceOutcome::Irreducible);
        assert_eq!(reduce(&word(3, &[1, 2])), ReduceOutcome::Reduced(word(1, &[])));
    }

    #[test]
    fn alexander_examples() {
        assert_eq!(word(2, &[1]).burau_alexander().unwrap(), KnotPoly1::one());
        assert_eq!(word(2, &[1, 1, 1]).burau_alexander().unwrap(), trefoil());
        let t43 = word(3, &[1, 2, 1, 2, 1, 2, 1, 2]).burau_alexander().unwrap();
        assert_eq!(t43, torus_alexander(4, 3));
        assert_eq!(t43.span().finite(), Some(6));
        // figure eight: σ1 σ2^-1 σ1 σ2^-1
        assert_eq!(word(3, &[1, -2, 1, -2]).burau_alexander().unwrap(), KnotPoly1::from_coeffs(-1, &[-1, 3, -1]));
        assert_eq!(word(2, &[1, 1]).burau_alexander(), Err(BraidError::NotAKnot { components: 2 }));
    }

    #[test]
    fn torus_braid_examples() {
        assert_eq!(torus_braid(3, 2), word(2, &[1, 1, 1]));
        assert_eq!(torus_braid(-3, 2), word(2, &[-1, -1, -1]));
        assert_eq!(torus_braid(2, 3), word(3, &[1, 2, 1, 2]));
    }

    #[test]
    fn torus_closed_form_examples() {
        assert_eq!(torus_alexander(3, 2), trefoil());
        assert_eq!(torus_alexander(5, 2), KnotPoly1::from_coeffs(-2, &[1, -1, 1, -1, 1]));
    }

    #[test]
    fn free_reduction() {
        assert_eq!(word(3, &[1, 2, -2, -1]).free_reduced(), word(3, &[]));
        assert_eq!(word(4, &[1, 3, -1]).free_reduced(), word(4, &[3]));
        assert_eq!(word(3, &[-1, 2, 1]).free_reduced(), word(3, &[2]));
        assert_eq!(word(3, &[1, 2, -1]).free_reduced(), word(3, &[2]));
        assert_eq!(word(3, &[1, -2, -1, -2]).free_reduced(), word(3, &[1, -2, -1, -2]));
    }

    #[test]
    fn twisted_torus_untwisted_is_torus() {
        for (p, q) in [(3i64, 2i64), (2, 3), (5, 2), (5, 3), (-3, 2), (-5, 2), (-2, 5), (-5, 3)] {
            let w = twisted_torus_braid(p, q, 0).unwrap();
            assert!(w.is_knot());
            assert_eq!(w.burau_alexander().unwrap(), torus_alexander(p.unsigned_abs(), q as u64), "({p},{q})");
            assert_eq!(w.is_positive(), p > 0);
        }
    }

    #[test]
    fn twisted_torus_errors() {
        assert_eq!(twisted_torus_braid(-3, 2, 3), Err(BraidError::OutOfProvenRange));
        assert_eq!(twisted_torus_braid(4, 2, 0), Err(BraidError::InvalidParameters));
        assert_eq!(twisted_torus_braid(3, 1, 0), Err(BraidError::InvalidParameters));
        assert_eq!(twisted_torus_braid(0, 3, 0), Err(BraidError::InvalidParameters));
    }

    #[test]
    fn twisted_torus_sign_contract_positive_p() {
        for (p, q) in [(2i64, 3i64), (3, 2), (5, 2), (5, 3), (3, 4)] {
            for n in -3..=3 {
                let w = twisted_torus_braid(p, q, n).unwrap();
                assert!(w.is_knot(), "({p},{q},{n})");
                if n >= 0 {
                    assert!(w.is_positive(), "({p},{q},{n})");
                } else {
                    assert!(w.is_negative(), "({p},{q},{n})");
                }
                let g = w.genus_positive().unwrap();
                assert_eq!(w.burau_alexander().unwrap().span().finite(), Some(2 * g));
            }
        }
    }

    #[test]
    fn twisted_torus_negative_p() {
        for (p, q) in [(-2i64, 3i64), (-3, 2), (-5, 2), (-5, 3), (-2, 5), (-3, 5), (-3, 4), (-2, 7), (-3, 7)] {
            let a = p.unsigned_abs().max(q as u64) as usize;
            let b = p.unsigned_abs().min(q as u64) as usize;
            for n in -2..=2 {
                let w = twisted_torus_braid(p, q, n).unwrap();
                assert!(w.is_knot(), "({p},{q},{n})");
                // same closure as the unsimplified word
                let mut raw: Vec<i32> = Vec::new();
                for _ in 0..b {
                    raw.extend((1..a as i32).map(|i| -i));
                }
                let r = (a - b) as i32;
                for _ in 0..2 * n.max(0) {
                    for k in 1..r {
                        raw.extend((1..=k).rev());
                    }
                }
                let raw = BraidWord::new(a, raw).unwrap();
                if n >= 0 {
                    assert_eq!(w.burau_alexander().unwrap(), raw.burau_alexander().unwrap(), "({p},{q},{n})");
                }
                match n {
                    ..=0 => assert!(w.is_negative(), "({p},{q},{n})"),
                    1 => assert!(w.is_positive() || w.is_negative()),
                    _ => assert_eq!(w.is_positive(), a >= 2 * b, "({p},{q},{n})"),
                }
            }
        }
    }

    fn random_word() -> impl Strategy<Value = BraidWord> {
        (2usize..=5).prop_flat_map(|n| {
            let gen = (1..n as i32).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]);
            proptest::collection::vec(gen, 0..12).prop_map(move |l| BraidWord::new(n, l).unwrap())
        })
    }

    fn positive_word() -> impl Strategy<Value = BraidWord> {
        (2usize..=5).prop_flat_map(|n| proptest::collection::vec(1..n as i32, 0..12).prop_map(move |l| BraidWord::new(n, l).unwrap()))
    }

    proptest! {
        #[test]
        fn reduce_preserves_closure(w in positive_word()) {
            if let ReduceOutcome::Reduced(r) = reduce(&w) {
                prop_assert_eq!(r.closure_components(), w.closure_components());
                if w.is_knot() {
                    prop_assert_eq!(r.burau_alexander().unwrap(), w.burau_alexander().unwrap());
                }
                prop_assert!(r.is_positive());
            }
        }

        #[test]
        fn free_reduction_preserves_closure(w in random_word()) {
            let r = w.free_reduced();
            prop_assert_eq!(r.closure_components(), w.closure_components());
            prop_assert_eq!(r.burau_det().normalize_unit().ok(), w.burau_det().normalize_unit().ok());
        }

        #[test]
        fn positive_knot_span_is_twice_genus(w in positive_word()) {
            if w.is_knot() {
                let g = w.genus_positive().unwrap();
                prop_assert_eq!(w.burau_alexander().unwrap().span().finite(), Some(2 * g));
            }
        }

        #[test]
        fn single_occurrence_destabilization(w in random_word()) {
            let count = w.occurrences();
            if let Some(i) = (1..w.strands()).find(|&i| count[i] == 1) {
                let d = w.destabilize_at(i as i32);
                prop_assert_eq!(d.closure_components(), w.closure_components());
                if w.is_knot() {
                    prop_assert_eq!(d.burau_alexander().unwrap(), w.burau_alexander().unwrap());
                }
            }
        }
    }
}
