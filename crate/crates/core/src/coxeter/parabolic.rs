//! Parabolic coset actions and the triple-product sweep over maximal
//! parabolics.
//!
//! For a coordinate type, the right cosets of the standard parabolic
//! `W_{I'}` (omit one generator) are identified with the orbit of the
//! fundamental weight dual to the omitted node: the stabilizer of that
//! weight is exactly `W_{I'}`, and right multiplication becomes the
//! reflection action on orbit vectors. This keeps even the largest
//! quotients (a few hundred thousand cosets) as flat arrays of exact
//! integer keys. The dihedral family uses its m-point reflection model
//! directly.
//!
//! Group orders fall out of the same machinery: peel one node at a
//! time, multiplying the orbit sizes of the successive weights.

use std::collections::HashMap;

use crate::cosets::CosetSpace;
use crate::error::{Error, Result};
use crate::factor;
use crate::limits;
use crate::perm::{PermGroup, Permutation};

use super::scalar::{Rat, Scalar};
use super::{reflect, CoxeterSystem, RootData};

/// A parabolic quotient realized as a permutation action: the coset
/// space with `A = image of the parabolic = Stab(0)`, plus the two
/// permutation-group images.
#[derive(Debug, Clone)]
pub struct ParabolicAction {
    pub omitted: usize,
    pub space: CosetSpace,
    pub full: PermGroup,
    pub parabolic: PermGroup,
}

/// Result of the triple-product check for one maximal parabolic.
#[derive(Debug, Clone)]
pub struct ParabolicVerdict {
    pub omitted: usize,
    /// Coset count of the quotient.
    pub index: u64,
    /// Number of double cosets of the parabolic.
    pub rank: u64,
    /// Witness double coset and transversal word, when the group is the
    /// product of three conjugates of this parabolic.
    pub witness: Option<(u32, Vec<u32>)>,
}

/// Sweep over all maximal standard parabolics.
#[derive(Debug, Clone)]
pub struct ParabolicReport {
    pub per_parabolic: Vec<ParabolicVerdict>,
    pub overall: bool,
}

/// Builds the coset action of the maximal parabolic omitting one generator.
pub fn parabolic_coset_action(sys: &CoxeterSystem, omitted: usize) -> Result<ParabolicAction> {
    parabolic_coset_action_bounded(sys, omitted, limits::DEFAULT_INDEX_BOUND)
}

pub fn parabolic_coset_action_bounded(
    sys: &CoxeterSystem,
    omitted: usize,
    index_bound: u64,
) -> Result<ParabolicAction> {
    if omitted >= sys.rank() {
        return Err(Error::input(format!(
            "generator index {omitted} out of range for rank {}",
            sys.rank()
        )));
    }
    let gens = match &sys.roots {
        RootData::Dihedral { m } => dihedral_action(*m, omitted),
        RootData::Coordinates { cartan, .. } => {
            let support: Vec<usize> = (0..sys.rank()).collect();
            let weight = solve_weight(cartan, &support, omitted)?;
            let orbit = WeightOrbit::explore(cartan, &support, &weight, index_bound)?;
            orbit.generator_images(cartan, &support)
        }
    };

    let sub_gens: Vec<Permutation> = (0..sys.rank())
        .filter(|&i| i != omitted)
        .map(|i| gens[i].clone())
        .collect();
    let space = CosetSpace::from_action(gens.clone(), sub_gens.clone())?;

    let degree = gens[0].degree();
    let full = PermGroup::new(degree, gens)?;
    let parabolic = if sub_gens.is_empty() {
        PermGroup::trivial(degree)?
    } else {
        PermGroup::new(degree, sub_gens)?
    };
    Ok(ParabolicAction {
        omitted,
        space,
        full,
        parabolic,
    })
}

/// The dihedral group of order 2m on the m points of a regular m-gon:
/// the kept generator fixes point 0, so the stabilizer of 0 is exactly
/// the parabolic generated by it.
fn dihedral_action(m: usize, omitted: usize) -> Vec<Permutation> {
    let refl = |c: i64| -> Permutation {
        let images = (0..m as i64)
            .map(|v| (c - v).rem_euclid(m as i64) as u32)
            .collect();
        Permutation::from_images(images).unwrap()
    };
    let fixing_zero = refl(0);
    let other = refl(m as i64 - 1);
    if omitted == 0 {
        vec![other, fixing_zero]
    } else {
        vec![fixing_zero, other]
    }
}

/// Runs the triple-product criterion over every maximal parabolic: the
/// group is a product of three conjugates of the parabolic iff some
/// double-coset representative `x` satisfies `W = P P^x P`, and the
/// criterion is constant on double cosets, so one transversal word per
/// suborbit decides it.
pub fn parabolic_factorization_check(sys: &CoxeterSystem) -> Result<ParabolicReport> {
    parabolic_factorization_check_bounded(sys, limits::DEFAULT_INDEX_BOUND)
}

pub fn parabolic_factorization_check_bounded(
    sys: &CoxeterSystem,
    index_bound: u64,
) -> Result<ParabolicReport> {
    let mut per_parabolic = Vec::with_capacity(sys.rank());
    for omitted in 0..sys.rank() {
        let action = parabolic_coset_action_bounded(sys, omitted, index_bound)?;
        let space = &action.space;
        let mut witness = None;
        for label in 0..space.rank() as u32 {
            let word = space.rep_word(space.dc_rep(label));
            if factor::triple_check_word(space, &word) {
                witness = Some((label, word));
                break;
            }
        }
        per_parabolic.push(ParabolicVerdict {
            omitted,
            index: space.index() as u64,
            rank: space.rank() as u64,
            witness,
        });
    }
    let overall = per_parabolic.iter().any(|v| v.witness.is_some());
    Ok(ParabolicReport {
        per_parabolic,
        overall,
    })
}

/// Order of the group: peel nodes off the support one at a time; each
/// step contributes the orbit size of the weight dual to the peeled
/// node under the reflections of the remaining support.
pub(super) fn group_order(sys: &CoxeterSystem) -> Result<u64> {
    match &sys.roots {
        RootData::Dihedral { m } => Ok(2 * *m as u64),
        RootData::Coordinates { cartan, .. } => {
            let mut support: Vec<usize> = (0..sys.rank()).collect();
            let mut total: u64 = 1;
            while let Some(&node) = support.last() {
                let weight = solve_weight(cartan, &support, node)?;
                let orbit = WeightOrbit::explore(cartan, &support, &weight, u64::MAX)?;
                total = total
                    .checked_mul(orbit.len() as u64)
                    .ok_or_else(|| Error::Internal("group order overflow".into()))?;
                support.pop();
            }
            Ok(total)
        }
    }
}

/// Solves for the vector in the span of the support whose Cartan
/// pairing is 1 against the `node` root and 0 against the others.
fn solve_weight(cartan: &[Vec<Scalar>], support: &[usize], node: usize) -> Result<Vec<Scalar>> {
    let k = support.len();
    let pos = support
        .iter()
        .position(|&i| i == node)
        .ok_or_else(|| Error::input("node not in support"))?;
    // augmented system over the support submatrix
    let mut m: Vec<Vec<Scalar>> = (0..k)
        .map(|r| {
            let mut row: Vec<Scalar> = (0..k).map(|c| cartan[support[r]][support[c]]).collect();
            row.push(if r == pos { Scalar::ONE } else { Scalar::ZERO });
            row
        })
        .collect();

    // exact Gaussian elimination
    for col in 0..k {
        let pivot = (col..k)
            .find(|&r| !m[r][col].is_zero())
            .ok_or_else(|| Error::Internal("singular Cartan submatrix".into()))?;
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for c in col..=k {
            m[col][c] = m[col][c] * inv;
        }
        for r in 0..k {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col];
                for c in col..=k {
                    m[r][c] = m[r][c] - factor * m[col][c];
                }
            }
        }
    }

    let mut full = vec![Scalar::ZERO; cartan.len()];
    for (r, &i) in support.iter().enumerate() {
        full[i] = m[r][k];
    }
    Ok(full)
}

/// Orbit of a weight vector under the reflections of a support set,
/// with exact integer keys.
struct WeightOrbit {
    vectors: Vec<Vec<Scalar>>,
    keys: HashMap<Box<[i64]>, u32>,
    denom: i64,
}

impl WeightOrbit {
    fn explore(
        cartan: &[Vec<Scalar>],
        support: &[usize],
        start: &[Scalar],
        bound: u64,
    ) -> Result<WeightOrbit> {
        // all orbit vectors live in (1/denom) * Z[phi]^rank because the
        // Cartan entries are golden integers; the denominator of the
        // starting weight therefore never grows
        let denom = start.iter().fold(1i64, |acc, s| {
            let (p_den, q_den) = golden_denominators(s);
            lcm(acc, lcm(p_den, q_den))
        });

        let mut orbit = WeightOrbit {
            vectors: Vec::new(),
            keys: HashMap::new(),
            denom,
        };
        orbit.insert(start.to_vec());
        let mut head = 0;
        while head < orbit.vectors.len() {
            let v = orbit.vectors[head].clone();
            head += 1;
            for &i in support {
                let w = reflect(cartan, i, &v);
                if !orbit.keys.contains_key(orbit.key_of(&w).as_slice()) {
                    if orbit.vectors.len() as u64 >= bound {
                        return Err(Error::Resource {
                            what: "parabolic coset index",
                            needed: bound + 1,
                            bound,
                        });
                    }
                    orbit.insert(w);
                }
            }
        }
        Ok(orbit)
    }

    fn insert(&mut self, v: Vec<Scalar>) {
        let key = self.key_of(&v).into_boxed_slice();
        let idx = self.vectors.len() as u32;
        self.keys.insert(key, idx);
        self.vectors.push(v);
    }

    /// Two integers per coordinate: the golden-integer parts scaled by
    /// the fixed denominator.
    fn key_of(&self, v: &[Scalar]) -> Vec<i64> {
        let mut out = Vec::with_capacity(2 * v.len());
        for s in v {
            let (p, q) = golden_parts(s);
            out.push(rat_scaled(p, self.denom));
            out.push(rat_scaled(q, self.denom));
        }
        out
    }

    fn len(&self) -> usize {
        self.vectors.len()
    }

    /// Permutation images of every reflection of the full generator set.
    fn generator_images(&self, cartan: &[Vec<Scalar>], support: &[usize]) -> Vec<Permutation> {
        support
            .iter()
            .map(|&i| {
                let images = self
                    .vectors
                    .iter()
                    .map(|v| self.keys[self.key_of(&reflect(cartan, i, v)).as_slice()])
                    .collect();
                Permutation::from_images(images).unwrap()
            })
            .collect()
    }
}

/// Writes `a + b sqrt(5)` as `p + q phi` with `p = a - b`, `q = 2b`.
fn golden_parts(s: &Scalar) -> (Rat, Rat) {
    (s.a - s.b, s.b + s.b)
}

fn golden_denominators(s: &Scalar) -> (i64, i64) {
    let (p, q) = golden_parts(s);
    (p.denom(), q.denom())
}

fn rat_scaled(r: Rat, denom: i64) -> i64 {
    let num = r.numer() as i128 * denom as i128;
    let den = r.denom() as i128;
    debug_assert_eq!(num % den, 0, "scaled rational is not integral");
    i64::try_from(num / den).expect("scaled key overflow")
}

fn lcm(a: i64, b: i64) -> i64 {
    let g = gcd64(a.abs(), b.abs()).max(1);
    a.abs() / g * b.abs()
}

fn gcd64(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::super::{build_coxeter, CoxeterType};
    use super::*;

    #[test]
    fn a_series_natural_degree() {
        for n in 1..=5usize {
            let sys = build_coxeter(CoxeterType::A(n)).unwrap();
            let act = parabolic_coset_action(&sys, n - 1).unwrap();
            assert_eq!(act.space.index(), n + 1, "A{n} natural action");
        }
    }

    #[test]
    fn e6_d5_quotient_has_degree_27() {
        let sys = build_coxeter(CoxeterType::E(6)).unwrap();
        let act = parabolic_coset_action(&sys, 0).unwrap();
        assert_eq!(act.space.index(), 27);
    }

    #[test]
    fn parabolic_image_fixes_base_coset() {
        let sys = build_coxeter(CoxeterType::B(3)).unwrap();
        for omitted in 0..3 {
            let act = parabolic_coset_action(&sys, omitted).unwrap();
            for g in act.parabolic.generators() {
                assert_eq!(g.image(0), 0);
            }
        }
    }

    #[test]
    fn faithful_action_image_has_group_order() {
        for t in [CoxeterType::A(3), CoxeterType::B(3), CoxeterType::D(4)] {
            let sys = build_coxeter(t).unwrap();
            let act = parabolic_coset_action(&sys, 0).unwrap();
            assert_eq!(act.full.order(), sys.order(), "{t}");
        }
    }

    #[test]
    fn quotient_indices_multiply_to_order() {
        let sys = build_coxeter(CoxeterType::H3).unwrap();
        for omitted in 0..3 {
            let act = parabolic_coset_action(&sys, omitted).unwrap();
            assert_eq!(act.space.index() as u64 * act.parabolic.order(), 120);
        }
    }

    #[test]
    fn dihedral_quotients() {
        let sys = build_coxeter(CoxeterType::I2(7)).unwrap();
        for omitted in 0..2 {
            let act = parabolic_coset_action(&sys, omitted).unwrap();
            assert_eq!(act.space.index(), 7);
            assert_eq!(act.full.order(), 14);
            assert_eq!(act.parabolic.order(), 2);
        }
    }

    #[test]
    fn triple_sweep_small_types() {
        let positive = [CoxeterType::A(2), CoxeterType::A(3), CoxeterType::B(3)];
        for t in positive {
            let report = parabolic_factorization_check(&build_coxeter(t).unwrap()).unwrap();
            assert!(report.overall, "{t} should factor");
        }
        let negative = [
            CoxeterType::A(1),
            CoxeterType::B(2),
            CoxeterType::H3,
            CoxeterType::I2(5),
            CoxeterType::I2(6),
        ];
        for t in negative {
            let report = parabolic_factorization_check(&build_coxeter(t).unwrap()).unwrap();
            assert!(!report.overall, "{t} should not factor");
        }
    }

    #[test]
    fn word_route_matches_element_route_on_small_types() {
        for t in [CoxeterType::A(3), CoxeterType::B(3)] {
            let sys = build_coxeter(t).unwrap();
            for omitted in 0..sys.rank() {
                let act = parabolic_coset_action(&sys, omitted).unwrap();
                let space = &act.space;
                for label in 0..space.rank() as u32 {
                    let word = space.rep_word(space.dc_rep(label));
                    let elem = space.transversal(space.dc_rep(label));
                    assert_eq!(
                        factor::triple_check_word(space, &word),
                        factor::triple_check(space, &elem).unwrap(),
                        "{t} omitted={omitted} label={label}"
                    );
                }
            }
        }
    }
}
