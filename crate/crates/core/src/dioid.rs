//! The idempotent semiring of unions of Bruhat double cosets.
//!
//! Double cosets of a Borel-type subgroup are labeled by Weyl group
//! elements, so a union of double cosets is a bit-vector over the
//! enumerated group. Addition is union, multiplication is the setwise
//! product, driven entirely by the one-generator recursion
//!
//! ```text
//! d_w * d_s = d_{ws}          if l(ws) = l(w) + 1
//! d_w * d_s = d_{ws} + d_w    if l(ws) = l(w) - 1
//! ```
//!
//! extended to arbitrary right factors through reduced words. The star
//! operation sends a union to the union of inverse double cosets. The
//! structure is independent of any concrete group with the given Weyl
//! group; the comparison against a concrete coset-space model is in
//! [`bn_oracle_compare`].

use std::collections::BTreeSet;

use crate::cosets::CosetSpace;
use crate::coxeter::{CoxeterSystem, ElementTable};
use crate::error::{Error, Result};

/// Fixed-width bit set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    words: Vec<u64>,
    len: usize,
}

impl BitSet {
    pub fn new(len: usize) -> BitSet {
        BitSet {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn set(&mut self, i: u32) {
        self.words[i as usize / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn get(&self, i: u32) -> bool {
        self.words[i as usize / 64] >> (i % 64) & 1 == 1
    }

    pub fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros();
                    bits &= bits - 1;
                    Some(wi as u32 * 64 + b)
                }
            })
        })
    }
}

/// A union of double cosets: bit `w` set means the double coset labeled
/// by the group element with index `w` belongs to the union.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DioidElement {
    bits: BitSet,
}

impl DioidElement {
    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    pub fn count(&self) -> usize {
        self.bits.count()
    }

    pub fn contains(&self, idx: u32) -> bool {
        self.bits.get(idx)
    }

    /// Natural dioid order: set inclusion.
    pub fn le(&self, other: &DioidElement) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn indices(&self) -> Vec<u32> {
        self.bits.iter_ones().collect()
    }
}

/// The dioid over one enumerated Coxeter system.
///
/// ```
/// use trifactor_core::coxeter::{build_coxeter, CoxeterType};
/// use trifactor_core::dioid::DoubleCosetDioid;
///
/// let sys = build_coxeter(CoxeterType::A(2)).unwrap();
/// let d = DoubleCosetDioid::new(&sys, 1000).unwrap();
/// // the double coset of the longest element squares to everything
/// let w0 = d.singleton(d.table().w0());
/// assert!(d.is_full(&d.mult(&w0, &w0).unwrap()));
/// ```
#[derive(Debug, Clone)]
pub struct DoubleCosetDioid {
    table: ElementTable,
}

/// Above this group size the all-elements multiplication cache is not
/// materialized and products fall back to per-bit folds.
const SHARED_ROUTE_LIMIT: usize = 20_000;

impl DoubleCosetDioid {
    /// Enumerates the system and prepares index tables.
    pub fn new(sys: &CoxeterSystem, enum_bound: u64) -> Result<DoubleCosetDioid> {
        Ok(DoubleCosetDioid {
            table: sys.enumerate(enum_bound)?,
        })
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn table(&self) -> &ElementTable {
        &self.table
    }

    /// Additive identity: the empty set.
    pub fn zero(&self) -> DioidElement {
        DioidElement {
            bits: BitSet::new(self.size()),
        }
    }

    /// Multiplicative identity: the trivial double coset.
    pub fn one(&self) -> DioidElement {
        self.singleton(0)
    }

    pub fn singleton(&self, idx: u32) -> DioidElement {
        let mut bits = BitSet::new(self.size());
        bits.set(idx);
        DioidElement { bits }
    }

    pub fn from_indices(&self, indices: &[u32]) -> DioidElement {
        let mut bits = BitSet::new(self.size());
        for &i in indices {
            bits.set(i);
        }
        DioidElement { bits }
    }

    /// The whole group as a union of double cosets.
    pub fn full(&self) -> DioidElement {
        let mut bits = BitSet::new(self.size());
        for i in 0..self.size() as u32 {
            bits.set(i);
        }
        DioidElement { bits }
    }

    pub fn is_full(&self, a: &DioidElement) -> bool {
        a.count() == self.size()
    }

    fn check(&self, a: &DioidElement) -> Result<()> {
        if a.bits.len() != self.size() {
            return Err(Error::input("dioid element belongs to a different system"));
        }
        Ok(())
    }

    /// Union.
    pub fn add(&self, a: &DioidElement, b: &DioidElement) -> Result<DioidElement> {
        self.check(a)?;
        self.check(b)?;
        let mut bits = a.bits.clone();
        bits.union_with(&b.bits);
        Ok(DioidElement { bits })
    }

    /// Product with the double coset of generator `i` on the right.
    pub fn mult_by_generator(&self, a: &DioidElement, i: usize) -> Result<DioidElement> {
        self.check(a)?;
        if i >= self.table.rank() {
            return Err(Error::input(format!("generator index {i} out of range")));
        }
        Ok(self.mult_gen_unchecked(a, i, false))
    }

    fn mult_gen_unchecked(&self, a: &DioidElement, i: usize, left: bool) -> DioidElement {
        let mut out = BitSet::new(self.size());
        for w in a.bits.iter_ones() {
            let ws = if left {
                self.table.left_mult(w, i)
            } else {
                self.table.right_mult(w, i)
            };
            out.set(ws);
            if self.table.length(ws) < self.table.length(w) {
                out.set(w);
            }
        }
        DioidElement { bits: out }
    }

    /// Setwise product: decomposes the second factor into reduced words
    /// and folds generator multiplications, distributing over the union.
    pub fn mult(&self, a: &DioidElement, b: &DioidElement) -> Result<DioidElement> {
        self.check(a)?;
        self.check(b)?;
        let b_count = b.count();
        if b_count == 0 || a.count() == 0 {
            return Ok(self.zero());
        }
        // cheap route for sparse right factors: fold each word separately
        let max_len = self.table.length(self.table.w0()) as usize;
        if self.size() > SHARED_ROUTE_LIMIT || b_count.saturating_mul(max_len.max(1)) <= self.size()
        {
            let mut acc = self.zero();
            for w in b.bits.iter_ones() {
                let mut cur = a.clone();
                for &i in &self.table.reduced_word(w) {
                    cur = self.mult_gen_unchecked(&cur, i as usize, false);
                }
                acc.bits.union_with(&cur.bits);
            }
            return Ok(acc);
        }
        // dense route: one pass over the weak right order computes
        // a * d_w for every w, sharing prefixes
        let mut by_w: Vec<Option<DioidElement>> = vec![None; self.size()];
        by_w[0] = Some(a.clone());
        let mut order: Vec<u32> = (0..self.size() as u32).collect();
        order.sort_by_key(|&w| self.table.length(w));
        let mut acc = self.zero();
        for &w in &order {
            if w != 0 {
                let lw = self.table.length(w);
                let i = (0..self.table.rank())
                    .find(|&i| self.table.length(self.table.right_mult(w, i)) < lw)
                    .expect("descent exists");
                let parent = self.table.right_mult(w, i);
                let value = self.mult_gen_unchecked(
                    by_w[parent as usize].as_ref().expect("parent computed"),
                    i,
                    false,
                );
                by_w[w as usize] = Some(value);
            }
            if b.bits.get(w) {
                acc.bits.union_with(&by_w[w as usize].as_ref().unwrap().bits);
            }
        }
        Ok(acc)
    }

    /// Same product, but decomposing the *first* factor and folding
    /// left multiplications. Used to cross-check the two recursions.
    pub fn mult_via_left(&self, a: &DioidElement, b: &DioidElement) -> Result<DioidElement> {
        self.check(a)?;
        self.check(b)?;
        let mut acc = self.zero();
        for w in a.bits.iter_ones() {
            let mut cur = b.clone();
            for &i in self.table.reduced_word(w).iter().rev() {
                cur = self.mult_gen_unchecked(&cur, i as usize, true);
            }
            acc.bits.union_with(&cur.bits);
        }
        Ok(acc)
    }

    /// Star: the union of the inverse double cosets.
    pub fn star(&self, a: &DioidElement) -> Result<DioidElement> {
        self.check(a)?;
        let mut bits = BitSet::new(self.size());
        for w in a.bits.iter_ones() {
            bits.set(self.table.inverse(w));
        }
        Ok(DioidElement { bits })
    }

    /// The square of the double coset of the longest element covers the
    /// whole group.
    pub fn verify_theorem_longest_square(&self) -> Result<bool> {
        let dw0 = self.singleton(self.table.w0());
        let square = self.mult(&dw0, &dw0)?;
        Ok(self.is_full(&square))
    }

    /// With `P` the union of double cosets over the parabolic omitting
    /// one generator: is `P d_z P d_w P` the whole group?
    pub fn parabolic_lift_check(
        &self,
        sys: &CoxeterSystem,
        omitted: usize,
        z: &crate::perm::Permutation,
        w: &crate::perm::Permutation,
    ) -> Result<bool> {
        if omitted >= self.table.rank() {
            return Err(Error::input(format!("generator index {omitted} out of range")));
        }
        let gens: Vec<usize> = (0..sys.rank()).filter(|&i| i != omitted).collect();
        let p = self.from_indices(&self.table.parabolic_indices(&gens));
        let z_idx = self
            .table
            .index_of(z)
            .ok_or_else(|| Error::input("z is not an element of the system"))?;
        let w_idx = self
            .table
            .index_of(w)
            .ok_or_else(|| Error::input("w is not an element of the system"))?;
        let mut acc = self.mult(&p, &self.singleton(z_idx))?;
        acc = self.mult(&acc, &p)?;
        acc = self.mult(&acc, &self.singleton(w_idx))?;
        acc = self.mult(&acc, &p)?;
        Ok(self.is_full(&acc))
    }
}

/// Matches the double cosets of a concrete coset-space model against
/// the dioid and compares all products.
///
/// The bijection is forced structurally: the trivial labels correspond,
/// the generator double cosets are the labels whose self-product is
/// `{trivial, self}` (assigned to generators in ascending label order),
/// and every longer element extends uniquely through reduced words
/// because products that go up in length are single double cosets. A
/// model whose double cosets cannot be matched this way is rejected as
/// corrupt data. Returns whether all pairwise products agree.
pub fn bn_oracle_compare(oracle: &CosetSpace, dioid: &DoubleCosetDioid) -> Result<bool> {
    let n = dioid.size();
    if oracle.rank() != n {
        return Err(Error::data(format!(
            "oracle has {} double cosets, system has {} elements",
            oracle.rank(),
            n
        )));
    }
    let table = dioid.table();
    let rank = table.rank();

    // generator-like labels of the oracle
    let mut candidates: Vec<u32> = Vec::new();
    for label in 1..n as u32 {
        let rep = oracle.transversal(oracle.dc_rep(label));
        let square = oracle.dc_product_labels(label, &rep)?;
        let expected: BTreeSet<u32> = [0u32, label].into_iter().collect();
        if square == expected {
            candidates.push(label);
        }
    }
    if candidates.len() != rank {
        return Err(Error::data(format!(
            "oracle has {} generator-like double cosets, expected {}",
            candidates.len(),
            rank
        )));
    }

    // label_of[element index] = oracle label, grown along reduced words
    let mut label_of: Vec<Option<u32>> = vec![None; n];
    label_of[0] = Some(0);
    let mut gen_label: Vec<u32> = vec![0; rank];
    for (i, &label) in candidates.iter().enumerate() {
        gen_label[i] = label;
        let si = table.evaluate_word(&[i as u32]);
        label_of[si as usize] = Some(label);
    }

    let mut order: Vec<u32> = (0..n as u32).collect();
    order.sort_by_key(|&w| table.length(w));
    for &w in &order {
        if label_of[w as usize].is_some() {
            continue;
        }
        let lw = table.length(w);
        let i = (0..rank)
            .find(|&i| table.length(table.right_mult(w, i)) < lw)
            .expect("descent exists");
        let parent = table.right_mult(w, i);
        let parent_label =
            label_of[parent as usize].ok_or_else(|| Error::data("extension order broken"))?;
        let gen_rep = oracle.transversal(oracle.dc_rep(gen_label[i]));
        let product = oracle.dc_product_labels(parent_label, &gen_rep)?;
        if product.len() != 1 {
            return Err(Error::data(format!(
                "length-increasing product is not a single double coset (element {w})"
            )));
        }
        label_of[w as usize] = product.into_iter().next();
    }

    let label_of: Vec<u32> = label_of
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::data("label bijection incomplete"))?;
    {
        let mut seen = vec![false; n];
        for &l in &label_of {
            if seen[l as usize] {
                return Err(Error::data("label map is not a bijection"));
            }
            seen[l as usize] = true;
        }
    }

    // all pairwise products must agree
    for u in 0..n as u32 {
        for v in 0..n as u32 {
            let dioid_product = dioid.mult(&dioid.singleton(u), &dioid.singleton(v))?;
            let expected: BTreeSet<u32> = dioid_product
                .indices()
                .into_iter()
                .map(|x| label_of[x as usize])
                .collect();
            let v_rep = oracle.transversal(oracle.dc_rep(label_of[v as usize]));
            let actual = oracle.dc_product_labels(label_of[u as usize], &v_rep)?;
            if expected != actual {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
