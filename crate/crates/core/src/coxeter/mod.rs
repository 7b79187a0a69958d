//! Finite Coxeter systems with elements as permutations of their root
//! systems.
//!
//! Roots are kept as exact coefficient vectors over the simple-root
//! basis (rational, or in Q(sqrt 5) for the icosahedral types), so a
//! group element is fully described by how it permutes the root index
//! set: indices `0..N` are the positive roots in lexicographic order
//! and `k + N` is the negative of root `k`. The dihedral family `I2(m)`
//! carries no coordinates at all; its root permutations are written
//! down directly from the rotation index arithmetic of the 2m-gon.
//!
//! Element composition follows the crate's right-action convention, and
//! the stored permutation of `w` tracks `w^{-1}` on roots so that
//! composition of permutations matches composition in the group. The
//! length of `w` is the number of positive roots sent negative, and all
//! descent tests reduce to sign lookups.

mod parabolic;
pub mod scalar;

pub use parabolic::{
    parabolic_coset_action, parabolic_coset_action_bounded, parabolic_factorization_check,
    parabolic_factorization_check_bounded, ParabolicAction, ParabolicReport, ParabolicVerdict,
};

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::limits;
use crate::perm::Permutation;
use scalar::Scalar;

/// Type symbol of a finite irreducible Coxeter group.
///
/// ```
/// use trifactor_core::coxeter::{build_coxeter, CoxeterType};
///
/// let t: CoxeterType = "B3".parse().unwrap();
/// let sys = build_coxeter(t).unwrap();
/// assert_eq!(sys.order(), 48);
/// assert_eq!(sys.length(sys.longest_element()), 9);
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H3,
    H4,
    I2(usize),
}

impl CoxeterType {
    pub fn rank(&self) -> usize {
        match *self {
            CoxeterType::A(n) | CoxeterType::B(n) | CoxeterType::D(n) => n,
            CoxeterType::E(n) => n,
            CoxeterType::F4 => 4,
            CoxeterType::H3 => 3,
            CoxeterType::H4 => 4,
            CoxeterType::I2(_) => 2,
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = match *self {
            CoxeterType::A(n) => n >= 1,
            CoxeterType::B(n) => n >= 2,
            CoxeterType::D(n) => n >= 4,
            CoxeterType::E(n) => (6..=8).contains(&n),
            CoxeterType::F4 | CoxeterType::H3 | CoxeterType::H4 => true,
            CoxeterType::I2(m) => m >= 3,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::input(format!("invalid Coxeter type {self}")))
        }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CoxeterType::A(n) => write!(f, "A{n}"),
            CoxeterType::B(n) => write!(f, "B{n}"),
            CoxeterType::D(n) => write!(f, "D{n}"),
            CoxeterType::E(n) => write!(f, "E{n}"),
            CoxeterType::F4 => write!(f, "F4"),
            CoxeterType::H3 => write!(f, "H3"),
            CoxeterType::H4 => write!(f, "H4"),
            CoxeterType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

impl FromStr for CoxeterType {
    type Err = Error;

    /// Accepts `A<k>`, `B<k>`, `D<k>`, `E6`, `E7`, `E8`, `F4`, `H3`,
    /// `H4`, `I2(<m>)`.
    fn from_str(s: &str) -> Result<CoxeterType> {
        let s = s.trim();
        let bad = || Error::input(format!("cannot parse Coxeter type '{s}'"));
        let t = if let Some(rest) = s.strip_prefix("I2(") {
            let m: usize = rest.strip_suffix(')').ok_or_else(bad)?.parse().map_err(|_| bad())?;
            CoxeterType::I2(m)
        } else {
            let (family, num) = s.split_at(1);
            let n: usize = num.parse().map_err(|_| bad())?;
            match family {
                "A" => CoxeterType::A(n),
                "B" => CoxeterType::B(n),
                "D" => CoxeterType::D(n),
                "E" => CoxeterType::E(n),
                "F" if n == 4 => CoxeterType::F4,
                "H" if n == 3 => CoxeterType::H3,
                "H" if n == 4 => CoxeterType::H4,
                _ => return Err(bad()),
            }
        };
        t.validate()?;
        Ok(t)
    }
}

/// Root data: exact coordinates, or the synthetic dihedral model.
#[derive(Debug, Clone)]
pub(crate) enum RootData {
    Coordinates {
        /// `cartan[i][j] = <alpha_j, alpha_i^vee>`.
        cartan: Vec<Vec<Scalar>>,
        /// All `2N` roots in index order (positives first).
        vectors: Vec<Vec<Scalar>>,
    },
    Dihedral { m: usize },
}

/// A finite Coxeter system: simple reflections as root permutations,
/// the Coxeter matrix, length data and the longest element.
#[derive(Debug, Clone)]
pub struct CoxeterSystem {
    ctype: CoxeterType,
    rank: usize,
    coxeter_matrix: Vec<Vec<u32>>,
    pub(crate) roots: RootData,
    num_positive: usize,
    simple_perms: Vec<Permutation>,
    /// Root index of each simple root.
    simple_root_idx: Vec<u32>,
    order: u64,
    w0: Permutation,
}

/// Builds the system for a type symbol under the default order bound.
pub fn build_coxeter(t: CoxeterType) -> Result<CoxeterSystem> {
    build_coxeter_bounded(t, limits::DEFAULT_COXETER_BOUND)
}

/// Builds the system, rejecting groups larger than `order_bound`.
pub fn build_coxeter_bounded(t: CoxeterType, order_bound: u64) -> Result<CoxeterSystem> {
    t.validate()?;
    let mut sys = match t {
        CoxeterType::I2(m) => build_dihedral(m)?,
        _ => build_from_cartan(t)?,
    };
    sys.order = parabolic::group_order(&sys)?;
    if sys.order > order_bound {
        return Err(Error::Resource {
            what: "Coxeter group order",
            needed: sys.order,
            bound: order_bound,
        });
    }
    sys.w0 = sys.compute_longest();
    sys.verify()?;
    Ok(sys)
}

fn build_dihedral(m: usize) -> Result<CoxeterSystem> {
    // 2m root labels on a circle; negation is k -> k+m. The two simple
    // reflections negate roots 0 and m-1 respectively, and their product
    // is the rotation by two steps, of order m.
    let two_m = 2 * m;
    let refl = |c: i64| -> Permutation {
        let images = (0..two_m as i64)
            .map(|k| (c - k).rem_euclid(two_m as i64) as u32)
            .collect();
        Permutation::from_images(images).unwrap()
    };
    let s0 = refl(m as i64);
    let s1 = refl(m as i64 - 2);
    let mut cox = vec![vec![1u32; 2]; 2];
    cox[0][1] = m as u32;
    cox[1][0] = m as u32;
    Ok(CoxeterSystem {
        ctype: CoxeterType::I2(m),
        rank: 2,
        coxeter_matrix: cox,
        roots: RootData::Dihedral { m },
        num_positive: m,
        simple_perms: vec![s0, s1],
        simple_root_idx: vec![0, m as u32 - 1],
        order: 0,
        w0: Permutation::identity(two_m),
    })
}

fn build_from_cartan(t: CoxeterType) -> Result<CoxeterSystem> {
    let rank = t.rank();
    let cartan = cartan_matrix(t);
    let coxeter_matrix = coxeter_matrix_from_cartan(&cartan)?;

    // close the simple roots under all simple reflections
    let mut vectors: Vec<Vec<Scalar>> = Vec::new();
    let mut seen: HashMap<Vec<Scalar>, u32> = HashMap::new();
    for i in 0..rank {
        let mut e = vec![Scalar::ZERO; rank];
        e[i] = Scalar::ONE;
        seen.insert(e.clone(), vectors.len() as u32);
        vectors.push(e);
    }
    let mut head = 0;
    while head < vectors.len() {
        let v = vectors[head].clone();
        head += 1;
        for i in 0..rank {
            let w = reflect(&cartan, i, &v);
            if !seen.contains_key(&w) {
                seen.insert(w.clone(), vectors.len() as u32);
                vectors.push(w);
            }
        }
    }

    // canonical indexing: positives sorted lexicographically, then the
    // matching negatives
    let mut positives: Vec<Vec<Scalar>> = vectors
        .iter()
        .filter(|v| vector_sign(v) > 0)
        .cloned()
        .collect();
    positives.sort();
    let num_positive = positives.len();
    if 2 * num_positive != vectors.len() {
        return Err(Error::Internal(format!(
            "root system of {t} is not symmetric: {} roots, {} positive",
            vectors.len(),
            num_positive
        )));
    }
    let mut ordered = positives;
    for k in 0..num_positive {
        let neg = ordered[k].iter().map(|&c| -c).collect();
        ordered.push(neg);
    }
    let index: HashMap<Vec<Scalar>, u32> = ordered
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), i as u32))
        .collect();

    let simple_root_idx: Vec<u32> = (0..rank)
        .map(|i| {
            let mut e = vec![Scalar::ZERO; rank];
            e[i] = Scalar::ONE;
            index[&e]
        })
        .collect();

    let simple_perms: Vec<Permutation> = (0..rank)
        .map(|i| {
            let images = ordered.iter().map(|v| index[&reflect(&cartan, i, v)]).collect();
            Permutation::from_images(images).unwrap()
        })
        .collect();

    Ok(CoxeterSystem {
        ctype: t,
        rank,
        coxeter_matrix,
        roots: RootData::Coordinates {
            cartan,
            vectors: ordered,
        },
        num_positive,
        simple_perms,
        simple_root_idx,
        order: 0,
        w0: Permutation::identity(2 * num_positive),
    })
}

/// Applies the simple reflection `i` to a coefficient vector:
/// only coordinate `i` changes, by the Cartan pairing.
pub(crate) fn reflect(cartan: &[Vec<Scalar>], i: usize, v: &[Scalar]) -> Vec<Scalar> {
    let pairing = cartan[i]
        .iter()
        .zip(v)
        .fold(Scalar::ZERO, |acc, (&c, &x)| acc + c * x);
    let mut out = v.to_vec();
    out[i] = out[i] - pairing;
    out
}

/// Sign of a root vector: every root has all coefficients of one sign.
fn vector_sign(v: &[Scalar]) -> i32 {
    for c in v {
        let s = c.signum();
        if s != 0 {
            return s;
        }
    }
    0
}

/// `cartan[i][j] = <alpha_j, alpha_i^vee>` for the standard simple systems.
fn cartan_matrix(t: CoxeterType) -> Vec<Vec<Scalar>> {
    let n = t.rank();
    let mut m = vec![vec![Scalar::ZERO; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Scalar::from_int(2);
    }
    let mut link = |i: usize, j: usize, cij: Scalar, cji: Scalar| {
        m[i][j] = cij;
        m[j][i] = cji;
    };
    let minus_one = Scalar::from_int(-1);
    let minus_two = Scalar::from_int(-2);
    let minus_phi = Scalar::ZERO - Scalar::golden();
    match t {
        CoxeterType::A(_) => {
            for i in 0..n - 1 {
                link(i, i + 1, minus_one, minus_one);
            }
        }
        CoxeterType::B(_) => {
            // short root last: the bond n-2 -- n-1 is the double one
            for i in 0..n.saturating_sub(2) {
                link(i, i + 1, minus_one, minus_one);
            }
            link(n - 2, n - 1, minus_one, minus_two);
        }
        CoxeterType::D(_) => {
            for i in 0..n - 3 {
                link(i, i + 1, minus_one, minus_one);
            }
            link(n - 3, n - 2, minus_one, minus_one);
            link(n - 3, n - 1, minus_one, minus_one);
        }
        CoxeterType::E(_) => {
            // chain 0-2-3-4-5(-6(-7)) with node 1 attached to node 3
            link(0, 2, minus_one, minus_one);
            link(1, 3, minus_one, minus_one);
            for i in 2..n - 1 {
                link(i, i + 1, minus_one, minus_one);
            }
        }
        CoxeterType::F4 => {
            link(0, 1, minus_one, minus_one);
            link(1, 2, minus_one, minus_two);
            link(2, 3, minus_one, minus_one);
        }
        CoxeterType::H3 | CoxeterType::H4 => {
            link(0, 1, minus_phi, minus_phi);
            for i in 1..n - 1 {
                link(i, i + 1, minus_one, minus_one);
            }
        }
        CoxeterType::I2(_) => unreachable!("dihedral types carry no Cartan matrix"),
    }
    m
}

/// Bond orders from the Cartan products `c_ij c_ji = 4 cos^2(pi/m)`.
fn coxeter_matrix_from_cartan(cartan: &[Vec<Scalar>]) -> Result<Vec<Vec<u32>>> {
    let n = cartan.len();
    let mut m = vec![vec![1u32; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let prod = cartan[i][j] * cartan[j][i];
            m[i][j] = if prod == Scalar::ZERO {
                2
            } else if prod == Scalar::ONE {
                3
            } else if prod == Scalar::from_int(2) {
                4
            } else if prod == Scalar::from_int(3) {
                6
            } else if prod == Scalar::golden() * Scalar::golden() {
                5
            } else {
                return Err(Error::Internal(format!(
                    "unrecognized Cartan product at ({i},{j}): {prod:?}"
                )));
            };
        }
    }
    Ok(m)
}

impl CoxeterSystem {
    pub fn coxeter_type(&self) -> CoxeterType {
        self.ctype
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coxeter_matrix(&self) -> &Vec<Vec<u32>> {
        &self.coxeter_matrix
    }

    pub fn num_positive_roots(&self) -> usize {
        self.num_positive
    }

    /// Total number of roots.
    pub fn num_roots(&self) -> usize {
        2 * self.num_positive
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(2 * self.num_positive)
    }

    pub fn simple_reflection(&self, i: usize) -> &Permutation {
        &self.simple_perms[i]
    }

    /// The longest element.
    pub fn longest_element(&self) -> &Permutation {
        &self.w0
    }

    /// Group product (right-action composition of root permutations).
    pub fn multiply(&self, u: &Permutation, v: &Permutation) -> Permutation {
        u * v
    }

    pub fn inverse(&self, w: &Permutation) -> Permutation {
        w.inverse()
    }

    /// Number of positive roots sent negative.
    pub fn length(&self, w: &Permutation) -> usize {
        let n = self.num_positive as u32;
        (0..n).filter(|&k| w.image(k) >= n).count()
    }

    /// True iff `l(w s_i) < l(w)`; `w_inv` must be the inverse of `w`.
    fn right_descent_with_inv(&self, w_inv: &Permutation, i: usize) -> bool {
        w_inv.image(self.simple_root_idx[i]) >= self.num_positive as u32
    }

    /// Evaluates a word over the generators; the empty word is the identity.
    pub fn evaluate(&self, word: &[u32]) -> Result<Permutation> {
        let mut acc = self.identity();
        for &i in word {
            if i as usize >= self.rank {
                return Err(Error::input(format!("generator index {i} out of range")));
            }
            acc = &acc * &self.simple_perms[i as usize];
        }
        Ok(acc)
    }

    /// Deterministic reduced word: repeatedly peels the smallest right
    /// descent off the right end.
    pub fn find_reduced_word(&self, w: &Permutation) -> Vec<u32> {
        let mut letters = Vec::with_capacity(self.length(w));
        let mut cur = w.clone();
        let mut cur_inv = w.inverse();
        while !cur.is_identity() {
            let i = (0..self.rank)
                .find(|&i| self.right_descent_with_inv(&cur_inv, i))
                .expect("non-identity element has a descent");
            letters.push(i as u32);
            cur = &cur * &self.simple_perms[i];
            cur_inv = &self.simple_perms[i] * &cur_inv;
        }
        letters.reverse();
        letters
    }

    /// Greedy ascent to the unique element of maximal length.
    fn compute_longest(&self) -> Permutation {
        let mut cur = self.identity();
        let mut cur_inv = self.identity();
        loop {
            let ascent = (0..self.rank).find(|&i| !self.right_descent_with_inv(&cur_inv, i));
            match ascent {
                None => return cur,
                Some(i) => {
                    cur = &cur * &self.simple_perms[i];
                    cur_inv = &self.simple_perms[i] * &cur_inv;
                }
            }
        }
    }

    /// Build-time sanity: generator orders match the Coxeter matrix, the
    /// longest element is an involution of length `|Phi^+|`.
    fn verify(&self) -> Result<()> {
        for i in 0..self.rank {
            for j in 0..self.rank {
                let expected = self.coxeter_matrix[i][j];
                let prod = &self.simple_perms[i] * &self.simple_perms[j];
                if perm_order(&prod, expected + 1) != expected {
                    return Err(Error::Internal(format!(
                        "generator pair ({i},{j}) violates bond order {expected}"
                    )));
                }
            }
        }
        if self.length(&self.w0) != self.num_positive {
            return Err(Error::Internal("longest element has wrong length".into()));
        }
        if !(&self.w0 * &self.w0).is_identity() {
            return Err(Error::Internal("longest element is not an involution".into()));
        }
        Ok(())
    }

    /// Exact coordinates of root `k` in the simple-root basis; the
    /// dihedral family carries no coordinates.
    pub fn root_vector(&self, k: usize) -> Option<&[Scalar]> {
        match &self.roots {
            RootData::Coordinates { vectors, .. } => vectors.get(k).map(|v| v.as_slice()),
            RootData::Dihedral { .. } => None,
        }
    }

    /// Enumerates the whole group into an element table usable for
    /// index arithmetic, failing above `bound`.
    pub fn enumerate(&self, bound: u64) -> Result<ElementTable> {
        if self.order > bound {
            return Err(Error::Resource {
                what: "Coxeter group enumeration",
                needed: self.order,
                bound,
            });
        }
        ElementTable::build(self)
    }
}

fn perm_order(p: &Permutation, cap: u32) -> u32 {
    let mut acc = p.clone();
    let mut k = 1;
    while !acc.is_identity() {
        if k > cap {
            return k;
        }
        acc = &acc * p;
        k += 1;
    }
    k
}

/// Exhaustive element table: permutations, lengths, generator
/// multiplication tables, inverses and reduced words by index.
#[derive(Debug, Clone)]
pub struct ElementTable {
    elements: Vec<Permutation>,
    index_of: HashMap<Permutation, u32>,
    lengths: Vec<u16>,
    /// `right_mult[i][w] = index of w * s_i`.
    right_mult: Vec<Vec<u32>>,
    /// `left_mult[i][w] = index of s_i * w`.
    left_mult: Vec<Vec<u32>>,
    inverse: Vec<u32>,
    w0: u32,
    rank: usize,
}

impl ElementTable {
    fn build(sys: &CoxeterSystem) -> Result<ElementTable> {
        let rank = sys.rank();
        let mut elements = vec![sys.identity()];
        let mut index_of = HashMap::new();
        index_of.insert(sys.identity(), 0u32);
        let mut lengths = vec![0u16];
        let mut head = 0;
        while head < elements.len() {
            let w = elements[head].clone();
            let lw = lengths[head];
            head += 1;
            for i in 0..rank {
                let next = &w * sys.simple_reflection(i);
                if !index_of.contains_key(&next) {
                    index_of.insert(next.clone(), elements.len() as u32);
                    elements.push(next);
                    lengths.push(lw + 1);
                }
            }
        }
        if elements.len() as u64 != sys.order() {
            return Err(Error::Internal(format!(
                "enumeration found {} elements, order says {}",
                elements.len(),
                sys.order()
            )));
        }

        let right_mult: Vec<Vec<u32>> = (0..rank)
            .map(|i| {
                elements
                    .iter()
                    .map(|w| index_of[&(w * sys.simple_reflection(i))])
                    .collect()
            })
            .collect();
        let left_mult: Vec<Vec<u32>> = (0..rank)
            .map(|i| {
                elements
                    .iter()
                    .map(|w| index_of[&(sys.simple_reflection(i) * w)])
                    .collect()
            })
            .collect();
        let inverse: Vec<u32> = elements.iter().map(|w| index_of[&w.inverse()]).collect();
        let w0 = index_of[sys.longest_element()];

        Ok(ElementTable {
            elements,
            index_of,
            lengths,
            right_mult,
            left_mult,
            inverse,
            w0,
            rank,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn element(&self, idx: u32) -> &Permutation {
        &self.elements[idx as usize]
    }

    pub fn index_of(&self, w: &Permutation) -> Option<u32> {
        self.index_of.get(w).copied()
    }

    pub fn length(&self, idx: u32) -> u16 {
        self.lengths[idx as usize]
    }

    pub fn right_mult(&self, idx: u32, gen: usize) -> u32 {
        self.right_mult[gen][idx as usize]
    }

    pub fn left_mult(&self, idx: u32, gen: usize) -> u32 {
        self.left_mult[gen][idx as usize]
    }

    pub fn inverse(&self, idx: u32) -> u32 {
        self.inverse[idx as usize]
    }

    pub fn w0(&self) -> u32 {
        self.w0
    }

    /// Reduced word of the element at `idx`, by greedy right descents
    /// over the multiplication tables.
    pub fn reduced_word(&self, idx: u32) -> Vec<u32> {
        let mut letters = Vec::new();
        let mut w = idx;
        while w != 0 {
            let lw = self.lengths[w as usize];
            let i = (0..self.rank)
                .find(|&i| self.lengths[self.right_mult[i][w as usize] as usize] < lw)
                .expect("descent exists");
            letters.push(i as u32);
            w = self.right_mult[i][w as usize];
        }
        letters.reverse();
        letters
    }

    /// Indices of the standard parabolic subgroup generated by `gens`.
    pub fn parabolic_indices(&self, gens: &[usize]) -> Vec<u32> {
        let mut seen = vec![false; self.elements.len()];
        seen[0] = true;
        let mut out = vec![0u32];
        let mut head = 0;
        while head < out.len() {
            let w = out[head];
            head += 1;
            for &i in gens {
                let next = self.right_mult[i][w as usize];
                if !seen[next as usize] {
                    seen[next as usize] = true;
                    out.push(next);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Word evaluation at the index level.
    pub fn evaluate_word(&self, word: &[u32]) -> u32 {
        word.iter().fold(0u32, |w, &i| self.right_mult[i as usize][w as usize])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_symbols_round_trip() {
        for s in ["A1", "A5", "B3", "D4", "E6", "E7", "E8", "F4", "H3", "H4", "I2(7)"] {
            let t: CoxeterType = s.parse().unwrap();
            assert_eq!(t.to_string(), s);
        }
        for s in ["A0", "B1", "D3", "E5", "E9", "F3", "H5", "I2(2)", "G2", "Q3"] {
            assert!(s.parse::<CoxeterType>().is_err(), "{s} should be rejected");
        }
    }

    #[test]
    fn a2_basics() {
        let sys = build_coxeter(CoxeterType::A(2)).unwrap();
        assert_eq!(sys.order(), 6);
        assert_eq!(sys.num_roots(), 6);
        assert_eq!(sys.length(sys.longest_element()), 3);
    }

    #[test]
    fn b2_order_eight() {
        let sys = build_coxeter(CoxeterType::B(2)).unwrap();
        assert_eq!(sys.order(), 8);
        assert_eq!(sys.num_roots(), 8);
    }

    #[test]
    fn f4_order_and_longest() {
        let sys = build_coxeter(CoxeterType::F4).unwrap();
        assert_eq!(sys.order(), 1152);
        assert_eq!(sys.num_roots(), 48);
        assert_eq!(sys.length(sys.longest_element()), 24);
    }

    #[test]
    fn root_counts_of_small_types() {
        let cases = [
            (CoxeterType::A(1), 2),
            (CoxeterType::A(3), 12),
            (CoxeterType::B(3), 18),
            (CoxeterType::D(4), 24),
            (CoxeterType::H3, 30),
            (CoxeterType::E(6), 72),
        ];
        for (t, roots) in cases {
            let sys = build_coxeter(t).unwrap();
            assert_eq!(sys.num_roots(), roots, "{t}");
        }
    }

    #[test]
    fn orders_of_shipped_types() {
        let cases = [
            (CoxeterType::A(5), 720),
            (CoxeterType::B(4), 384),
            (CoxeterType::D(5), 1920),
            (CoxeterType::H3, 120),
            (CoxeterType::H4, 14_400),
            (CoxeterType::E(6), 51_840),
            (CoxeterType::I2(7), 14),
        ];
        for (t, order) in cases {
            assert_eq!(build_coxeter(t).unwrap().order(), order, "{t}");
        }
    }

    #[test]
    fn empty_word_and_involution_words() {
        let sys = build_coxeter(CoxeterType::A(2)).unwrap();
        assert!(sys.evaluate(&[]).unwrap().is_identity());
        assert!(sys.evaluate(&[0, 0]).unwrap().is_identity());
        assert!(sys.evaluate(&[5]).is_err());
    }

    #[test]
    fn braid_relation_in_a2() {
        let sys = build_coxeter(CoxeterType::A(2)).unwrap();
        assert_eq!(sys.evaluate(&[0, 1, 0]).unwrap(), sys.evaluate(&[1, 0, 1]).unwrap());
    }

    #[test]
    fn reduced_word_of_identity_and_generators() {
        let sys = build_coxeter(CoxeterType::B(3)).unwrap();
        assert!(sys.find_reduced_word(&sys.identity()).is_empty());
        for i in 0..3 {
            assert_eq!(sys.find_reduced_word(sys.simple_reflection(i)), vec![i as u32]);
        }
    }

    #[test]
    fn greedy_word_for_a2_longest() {
        let sys = build_coxeter(CoxeterType::A(2)).unwrap();
        assert_eq!(sys.find_reduced_word(sys.longest_element()), vec![0, 1, 0]);
    }

    #[test]
    fn reduced_words_have_length_l_and_evaluate_back() {
        for t in [CoxeterType::A(3), CoxeterType::B(3), CoxeterType::I2(5)] {
            let sys = build_coxeter(t).unwrap();
            let table = sys.enumerate(10_000).unwrap();
            for idx in 0..table.len() as u32 {
                let w = table.element(idx);
                let word = sys.find_reduced_word(w);
                assert_eq!(word.len(), sys.length(w), "{t} idx {idx}");
                assert_eq!(&sys.evaluate(&word).unwrap(), w);
            }
        }
    }

    #[test]
    fn a1_longest_is_the_reflection() {
        let sys = build_coxeter(CoxeterType::A(1)).unwrap();
        assert_eq!(sys.longest_element(), sys.simple_reflection(0));
    }

    #[test]
    fn length_changes_by_one_under_generators() {
        for t in [CoxeterType::A(3), CoxeterType::B(3), CoxeterType::F4, CoxeterType::I2(6)] {
            let sys = build_coxeter(t).unwrap();
            let table = sys.enumerate(10_000).unwrap();
            for idx in 0..table.len() as u32 {
                let lw = table.length(idx) as i32;
                for i in 0..sys.rank() {
                    let lnext = table.length(table.right_mult(idx, i)) as i32;
                    assert_eq!((lnext - lw).abs(), 1, "{t}");
                }
            }
        }
    }

    #[test]
    fn enumeration_respects_bound() {
        assert!(matches!(
            build_coxeter(CoxeterType::F4).unwrap().enumerate(100),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn dihedral_model_matches_coordinate_b2() {
        // I2(4) and B2 are the same abstract group
        let b2 = build_coxeter(CoxeterType::B(2)).unwrap();
        let i24 = build_coxeter(CoxeterType::I2(4)).unwrap();
        assert_eq!(b2.order(), i24.order());
        assert_eq!(b2.length(b2.longest_element()), i24.length(i24.longest_element()));
    }

    #[test]
    fn parabolic_indices_of_element_table() {
        let sys = build_coxeter(CoxeterType::A(3)).unwrap();
        let table = sys.enumerate(10_000).unwrap();
        assert_eq!(table.parabolic_indices(&[0, 1]).len(), 6);
        assert_eq!(table.parabolic_indices(&[]).len(), 1);
        assert_eq!(table.parabolic_indices(&[0, 1, 2]).len(), 24);
    }
}
