//! Finite census of positive-braid knots of a given genus.
//!
//! A positive braid knot of genus `g` on `n` strands has `ℓ = 2g + n − 1`
//! letters, and a word in which some generator occurs at most once either
//! closes to a split link or destabilizes to fewer strands with the same
//! genus. So it suffices to enumerate words in which every generator occurs
//! at least twice, which forces `n ≤ 2g + 1`. Words are taken up to
//! rotation, reversal and the reflection `i ↦ n − i`; classes are keyed by
//! `(genus, Δ)`, so two knots sharing both would be merged.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::BraidWord;
use crate::laurent::KnotPoly1;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CensusEntry {
    pub genus: u64,
    /// Symmetrized Alexander polynomial of the closure.
    pub alexander: KnotPoly1,
    /// Least `(strands, letters)` among canonical words in the class.
    pub representative: BraidWord,
    /// Number of canonical words found in the class.
    pub words: u64,
}

/// All words on `strands` strands whose letters begin with `prefix`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CensusUnit {
    pub genus: u64,
    pub strands: usize,
    pub prefix: Vec<i32>,
}

impl CensusUnit {
    pub fn length(&self) -> usize {
        2 * self.genus as usize + self.strands - 1
    }
}

/// Work units for genus `genus`, split on prefixes of up to `prefix_len`
/// letters. Every canonical word starts with `1`, so every prefix does.
pub fn census_units(genus: u64, prefix_len: usize) -> Vec<CensusUnit> {
    let mut units = Vec::new();
    if genus == 0 {
        units.push(CensusUnit {
            genus,
            strands: 1,
            prefix: Vec::new(),
        });
        return units;
    }
    for strands in 2..=2 * genus as usize + 1 {
        let len = 2 * genus as usize + strands - 1;
        let depth = prefix_len.clamp(1, len);
        let mut prefixes: Vec<Vec<i32>> = alloc::vec![alloc::vec![1]];
        for _ in 1..depth {
            prefixes = prefixes
                .into_iter()
                .flat_map(|p| {
                    (1..strands as i32).map(move |g| {
                        let mut q = p.clone();
                        q.push(g);
                        q
                    })
                })
                .collect();
        }
        units.extend(prefixes.into_iter().map(|prefix| CensusUnit { genus, strands, prefix }));
    }
    units
}

/// Enumerates one unit, returning its classes in key order.
pub fn run_unit(unit: &CensusUnit) -> Vec<CensusEntry> {
    let n = unit.strands;
    let len = unit.length();
    let mut classes: BTreeMap<KnotPoly1, CensusEntry> = BTreeMap::new();
    let mut count = alloc::vec![0usize; n];
    for &l in &unit.prefix {
        count[l as usize] += 1;
    }
    let mut word = unit.prefix.clone();
    extend(n, len, &mut word, &mut count, &mut |w| {
        if !is_canonical(n, w) {
            return;
        }
        let braid = BraidWord {
            strands: n,
            letters: w.to_vec(),
        };
        if !braid.is_knot() {
            return;
        }
        let alexander = braid.burau_alexander().expect("closure is a knot");
        classes
            .entry(alexander.clone())
            .and_modify(|e| {
                e.words += 1;
                if braid < e.representative {
                    e.representative = braid.clone();
                }
            })
            .or_insert_with(|| CensusEntry {
                genus: unit.genus,
                alexander,
                representative: braid.clone(),
                words: 1,
            });
    });
    classes.into_values().collect()
}

fn extend(n: usize, len: usize, word: &mut Vec<i32>, count: &mut [usize], visit: &mut impl FnMut(&[i32])) {
    let missing: usize = (1..n).map(|i| 2usize.saturating_sub(count[i])).sum();
    if len - word.len() < missing {
        return;
    }
    if word.len() == len {
        visit(word);
        return;
    }
    for g in 1..n as i32 {
        word.push(g);
        count[g as usize] += 1;
        extend(n, len, word, count, visit);
        count[g as usize] -= 1;
        word.pop();
    }
}

/// Whether `w` is lexicographically least among its rotations, the
/// rotations of its reversal, and the reflections of both.
pub fn is_canonical(strands: usize, w: &[i32]) -> bool {
    let n = strands as i32;
    let len = w.len();
    let reflected: Vec<i32> = w.iter().map(|&l| n - l).collect();
    let mut images: [Vec<i32>; 4] = [
        w.to_vec(),
        w.iter().rev().copied().collect(),
        reflected.clone(),
        reflected.into_iter().rev().collect(),
    ];
    for (k, img) in images.iter_mut().enumerate() {
        for shift in 0..len {
            if k == 0 && shift == 0 {
                continue;
            }
            let smaller = (0..len).map(|i| img[(i + shift) % len]).cmp(w.iter().copied()).is_lt();
            if smaller {
                return false;
            }
        }
    }
    true
}

/// Merges per-unit results: one entry per `(genus, Δ)` with the least
/// representative, sorted by genus then representative.
pub fn merge_census(parts: impl IntoIterator<Item = Vec<CensusEntry>>) -> Vec<CensusEntry> {
    let mut classes: BTreeMap<(u64, KnotPoly1), CensusEntry> = BTreeMap::new();
    for part in parts {
        for e in part {
            match classes.get_mut(&(e.genus, e.alexander.clone())) {
                Some(old) => {
                    old.words += e.words;
                    if e.representative < old.representative {
                        old.representative = e.representative;
                    }
                }
                None => {
                    classes.insert((e.genus, e.alexander.clone()), e);
                }
            }
        }
    }
    let mut out: Vec<CensusEntry> = classes.into_values().collect();
    out.sort_by(|a, b| (a.genus, &a.representative).cmp(&(b.genus, &b.representative)));
    out
}

/// Positive-braid knot classes of genus exactly `genus`, single-threaded.
pub fn enumerate_genus(genus: u64) -> Vec<CensusEntry> {
    merge_census(census_units(genus, 1).iter().map(run_unit))
}
