//! Exhaustive reference computations over explicitly enumerated groups.
//!
//! These routines make no use of coset-space machinery: sets of group
//! elements are manipulated directly. They are deliberately slow and
//! simple, and serve as independent oracles for the label-based
//! implementations in [`crate::factor`] and [`crate::hecke`]. Several
//! checker contracts (the three-condition equivalence record, `G = ABA`,
//! the normalizer condition) are defined through these set products and
//! call into this module.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

/// All elements of `g`, failing above `bound`.
pub fn elements_of(g: &PermGroup, bound: u64) -> Result<Vec<Permutation>> {
    Ok(g.elements_bounded(bound)?.collect())
}

/// Setwise product `S * T`.
pub fn set_product(s: &HashSet<Permutation>, t: &HashSet<Permutation>) -> HashSet<Permutation> {
    let mut out = HashSet::with_capacity(s.len().max(t.len()));
    for u in s {
        for v in t {
            out.insert(u * v);
        }
    }
    out
}

/// The double coset `A x A` as an element set.
pub fn double_coset(a_elems: &[Permutation], x: &Permutation) -> HashSet<Permutation> {
    let mut out = HashSet::new();
    for a1 in a_elems {
        let left = a1 * x;
        for a2 in a_elems {
            out.insert(&left * a2);
        }
    }
    out
}

/// The subgroup `A` as a set, conjugated by `x`.
pub fn conjugate_set(a_elems: &[Permutation], x: &Permutation) -> HashSet<Permutation> {
    let xi = x.inverse();
    a_elems.iter().map(|a| &(&xi * a) * x).collect()
}

/// The product `A * A^{x_1} * A^{x_2} * ...` as an element set.
pub fn conjugate_product(a_elems: &[Permutation], xs: &[&Permutation]) -> HashSet<Permutation> {
    let mut acc: HashSet<Permutation> = a_elems.iter().cloned().collect();
    for x in xs {
        let conj = conjugate_set(a_elems, x);
        acc = set_product(&acc, &conj);
    }
    acc
}

/// Structure constants of the double-coset algebra by direct expansion
/// in the group algebra: multiplies the sums over `A x A` and `A y A`
/// elementwise, tallies coefficients, and checks that the tally is
/// constant on every double coset and exactly divisible by `|A|`.
///
/// `reps[j]` must hold one representative per double coset; the labeling
/// function classifies arbitrary elements. Returns `a[x][y][j]`.
pub fn group_algebra_tensor(
    a_elems: &[Permutation],
    reps: &[Permutation],
    label_of: impl Fn(&Permutation) -> u32,
) -> Result<Vec<Vec<Vec<u64>>>> {
    let r = reps.len();
    let a_order = a_elems.len() as u64;
    let cosets: Vec<Vec<Permutation>> = reps
        .iter()
        .map(|x| {
            let mut v: Vec<Permutation> = double_coset(a_elems, x).into_iter().collect();
            v.sort();
            v
        })
        .collect();

    let mut tensor = vec![vec![vec![0u64; r]; r]; r];
    for x in 0..r {
        for y in 0..r {
            let mut tally: HashMap<Permutation, u64> = HashMap::new();
            for u in &cosets[x] {
                for v in &cosets[y] {
                    *tally.entry(u * v).or_insert(0) += 1;
                }
            }
            // coefficient per double coset: constant, and |A| * a_{xyj}
            let mut per_label: HashMap<u32, u64> = HashMap::new();
            for (g, count) in &tally {
                let j = label_of(g);
                match per_label.get(&j) {
                    None => {
                        per_label.insert(j, *count);
                    }
                    Some(&prev) if prev == *count => {}
                    Some(&prev) => {
                        return Err(Error::Internal(format!(
                            "group algebra tally not constant on double coset {j}: {prev} vs {count}"
                        )));
                    }
                }
            }
            for (j, count) in per_label {
                if count % a_order != 0 {
                    return Err(Error::Internal(format!(
                        "tally {count} not divisible by |A| = {a_order}"
                    )));
                }
                tensor[x][y][j as usize] = count / a_order;
            }
        }
    }
    Ok(tensor)
}
