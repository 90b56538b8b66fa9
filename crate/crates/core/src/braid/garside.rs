//! Garside normal forms in `B_n`, via permutation braids.
//!
//! A simple element is stored as the permutation `perm` with `perm[i]` the
//! final position of the strand starting at position `i`; strands `i < j`
//! cross exactly when `perm[i] > perm[j]`. Products compose left to right:
//! `perm(AB)[i] = perm(B)[perm(A)[i]]`.

use alloc::vec::Vec;

use super::BraidWord;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simple(Vec<usize>);

impl Simple {
    pub fn identity(n: usize) -> Self {
        Simple((0..n).collect())
    }

    pub fn delta(n: usize) -> Self {
        Simple((0..n).rev().collect())
    }

    pub fn generator(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(i, i + 1);
        p
    }

    pub fn perm(&self) -> &[usize] {
        &self.0
    }

    fn n(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn is_delta(&self) -> bool {
        let n = self.n();
        self.0.iter().enumerate().all(|(i, &p)| p == n - 1 - i)
    }

    fn inverse_perm(&self) -> Vec<usize> {
        let mut inv = alloc::vec![0; self.n()];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p] = i;
        }
        inv
    }

    /// `σ_i ≼ A`: the strands starting at `i`, `i+1` cross.
    fn starts_with(&self, i: usize) -> bool {
        self.0[i] > self.0[i + 1]
    }

    /// `A ≽ σ_i`: the strands ending at `i`, `i+1` crossed.
    fn ends_with(&self, i: usize) -> bool {
        let inv = self.inverse_perm();
        inv[i] > inv[i + 1]
    }

    /// `A·σ_i`, assuming it is still simple.
    fn push_generator(&mut self, i: usize) {
        for p in self.0.iter_mut() {
            if *p == i {
                *p = i + 1;
            } else if *p == i + 1 {
                *p = i;
            }
        }
    }

    /// `σ_i^{-1}·A`, assuming `σ_i ≼ A`.
    fn pop_front_generator(&mut self, i: usize) {
        self.0.swap(i, i + 1);
    }

    /// `Δ A Δ^{-1}`.
    pub fn tau(&self) -> Self {
        let n = self.n();
        let mut out = alloc::vec![0; n];
        for (i, &p) in self.0.iter().enumerate() {
            out[n - 1 - i] = n - 1 - p;
        }
        Simple(out)
    }

    /// `A^{-1} Δ`, the simple element completing `A` to `Δ` on the right.
    pub fn right_complement(&self) -> Self {
        let n = self.n();
        let inv = self.inverse_perm();
        Simple(inv.iter().map(|&p| n - 1 - p).collect())
    }

    /// Positive word for the permutation braid (0-based generator indices).
    pub fn letters(&self) -> Vec<usize> {
        let n = self.n();
        let mut arr: Vec<usize> = (0..n).collect();
        let mut out = Vec::new();
        let mut changed = true;
        while changed {
            changed = false;
            for pos in 0..n.saturating_sub(1) {
                if self.0[arr[pos]] > self.0[arr[pos + 1]] {
                    arr.swap(pos, pos + 1);
                    out.push(pos);
                    changed = true;
                }
            }
        }
        out
    }
}

/// `Δ^inf · A_1 ⋯ A_r` with every pair `(A_j, A_{j+1})` left-weighted and
/// no `A_j` equal to `Δ` or the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    n: usize,
    inf: i64,
    factors: Vec<Simple>,
}

/// Moves the largest possible prefix of `b` onto the end of `a`.
fn left_weight(a: &mut Simple, b: &mut Simple) {
    let n = a.n();
    loop {
        let movable = (0..n - 1).find(|&i| b.starts_with(i) && !a.ends_with(i));
        match movable {
            Some(i) => {
                a.push_generator(i);
                b.pop_front_generator(i);
            }
            None => return,
        }
    }
}

impl NormalForm {
    pub fn identity(n: usize) -> Self {
        NormalForm {
            n,
            inf: 0,
            factors: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    pub fn factors(&self) -> &[Simple] {
        &self.factors
    }

    pub fn from_word(w: &BraidWord) -> Self {
        let n = w.strands();
        let mut nf = Self::identity(n);
        for &l in w.letters() {
            let i = l.unsigned_abs() as usize - 1;
            if l > 0 {
                nf.mul_simple(Simple::generator(n, i));
            } else {
                // σ_i^{-1} = (σ_i^{-1} Δ) Δ^{-1}
                nf.mul_simple(Simple::generator(n, i).right_complement());
                nf.mul_delta_inverse();
            }
        }
        nf
    }

    fn mul_delta_inverse(&mut self) {
        self.inf -= 1;
        for f in self.factors.iter_mut() {
            *f = f.tau();
        }
    }

    /// Right multiplication by a simple element, restoring normality with
    /// one right-to-left pass.
    pub fn mul_simple(&mut self, s: Simple) {
        if s.is_identity() {
            return;
        }
        self.factors.push(s);
        for j in (0..self.factors.len() - 1).rev() {
            let (left, right) = self.factors.split_at_mut(j + 1);
            left_weight(&mut left[j], &mut right[0]);
        }
        let leading = self.factors.iter().take_while(|f| f.is_delta()).count();
        if leading > 0 {
            // Δ·A = τ(A)·Δ, so leading Δs move left untouched
            self.factors.drain(..leading);
            self.inf += leading as i64;
        }
        while self.factors.last().is_some_and(Simple::is_identity) {
            self.factors.pop();
        }
    }

    /// `Δ^k A_2 ⋯ A_r τ^k(A_1)`.
    pub fn cycle(&self) -> Self {
        if self.factors.is_empty() {
            return self.clone();
        }
        let mut first = self.factors[0].clone();
        if self.inf.rem_euclid(2) == 1 {
            first = first.tau();
        }
        let mut out = NormalForm {
            n: self.n,
            inf: self.inf,
            factors: self.factors[1..].to_vec(),
        };
        out.mul_simple(first);
        out
    }

    /// Word `N^{-1} P` with `N`, `P` positive.
    pub fn to_word(&self) -> BraidWord {
        let n = self.n;
        let to_letter = |i: usize| (i + 1) as i32;
        let mut letters: Vec<i32> = Vec::new();
        if self.inf >= 0 {
            let delta = Simple::delta(n).letters();
            for _ in 0..self.inf {
                letters.extend(delta.iter().map(|&i| to_letter(i)));
            }
            for f in &self.factors {
                letters.extend(f.letters().into_iter().map(to_letter));
            }
        } else {
            let u = (-self.inf) as usize;
            let m = u.min(self.factors.len());
            let delta = Simple::delta(n).letters();
            for _ in 0..u - m {
                letters.extend(delta.iter().rev().map(|&i| -to_letter(i)));
            }
            for (i, a) in self.factors[..m].iter().enumerate() {
                let mut b = a.right_complement();
                if (m - 1 - i) % 2 == 1 {
                    b = b.tau();
                }
                letters.extend(b.letters().into_iter().rev().map(|i| -to_letter(i)));
            }
            for f in &self.factors[m..] {
                letters.extend(f.letters().into_iter().map(to_letter));
            }
        }
        BraidWord::new(n, letters).expect("letters come from permutations on n strands")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn word(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn delta_letters_have_full_length() {
        for n in 1..7 {
            assert_eq!(Simple::delta(n).letters().len(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn normal_form_examples() {
        // σ1σ2σ1 = Δ in B3
        let nf = NormalForm::from_word(&word(3, &[1, 2, 1]));
        assert_eq!((nf.inf(), nf.sup()), (1, 1));
        let nf = NormalForm::from_word(&word(3, &[1, -1]));
        assert_eq!(nf, NormalForm::identity(3));
        let nf = NormalForm::from_word(&word(3, &[-1]));
        assert_eq!((nf.inf(), nf.sup()), (-1, 0));
        // σ1σ2 σ2σ1 needs two factors
        let nf = NormalForm::from_word(&word(3, &[1, 2, 2, 1]));
        assert_eq!((nf.inf(), nf.sup()), (0, 2));
    }

    fn random_word() -> impl Strategy<Value = BraidWord> {
        (2usize..=5).prop_flat_map(|n| {
            let gen = (1..n as i32).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]);
            proptest::collection::vec(gen, 0..14).prop_map(move |l| BraidWord::new(n, l).unwrap())
        })
    }

    proptest! {
        #[test]
        fn normal_form_is_a_braid_invariant(w in random_word()) {
            let nf = NormalForm::from_word(&w);
            let back = nf.to_word();
            // the word read off the normal form has the same normal form
            prop_assert_eq!(NormalForm::from_word(&back), nf.clone());
            // w · w^{-1} is trivial
            let mut both = w.letters().to_vec();
            both.extend(w.inverse().letters());
            prop_assert_eq!(NormalForm::from_word(&BraidWord::new(w.strands(), both).unwrap()), NormalForm::identity(w.strands()));
            prop_assert_eq!(back.permutation(), w.permutation());
        }

        #[test]
        fn braid_relations_hold(n in 3usize..=6, i in 1i32..=4) {
            prop_assume!((i as usize) < n - 1);
            let lhs = NormalForm::from_word(&word(n, &[i, i + 1, i]));
            let rhs = NormalForm::from_word(&word(n, &[i + 1, i, i + 1]));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn cycling_is_conjugation(w in random_word()) {
            let nf = NormalForm::from_word(&w);
            let c = nf.cycle();
            prop_assert!(c.inf() >= nf.inf());
            prop_assert_eq!(c.to_word().closure_components(), w.closure_components());
            prop_assert_eq!(c.to_word().burau_det(), w.burau_det());
        }
    }

    #[test]
    fn complement_composes_to_delta() {
        let a = Simple(vec![2, 0, 3, 1]);
        let mut nf = NormalForm::identity(4);
        nf.mul_simple(a.clone());
        nf.mul_simple(a.right_complement());
        assert_eq!((nf.inf(), nf.sup()), (1, 1));
    }
}
