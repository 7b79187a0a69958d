//! Exact permutation and permutation-group arithmetic.
//!
//! Permutations act on the points `1..=degree` and are written on the
//! right: `point^(pq) = (point^p)^q`, so `compose(p, q)` applies `p`
//! first. Internally points are stored 0-based; cycle notation in
//! parsing and display is 1-based.
//!
//! Groups are given by generators. Order, membership and element
//! enumeration go through a deterministic stabilizer chain (base points
//! chosen in increasing point order), built once and then read-only, so
//! a [`PermGroup`] is safe to share between threads after construction.

mod chain;
mod parse;

pub use chain::StabilizerChain;
pub use parse::{load_perm_file, parse_cycles, GroupFile};

use std::fmt;
use std::ops::Mul;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::limits;

/// A permutation of `{1..degree}`, stored as the image of each point.
///
/// ```
/// use trifactor_core::perm::parse_cycles;
///
/// let p = parse_cycles(5, "(1,2)(3,4,5)").unwrap();
/// let q = parse_cycles(5, "(2,3)").unwrap();
/// // right action: p applies first
/// assert_eq!((&p * &q).to_string(), "(1,3,4,5,2)");
/// assert!((&p * &p.inverse()).is_identity());
/// ```
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// The identity on `degree` points.
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            if (im as usize) >= n || seen[im as usize] {
                return Err(Error::input("image list is not a bijection"));
            }
            seen[im as usize] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn image(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i as u32 == im)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            inv[im as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `self` followed by `rhs` (right-action convention).
    pub fn compose(&self, rhs: &Permutation) -> Result<Permutation> {
        if self.degree() != rhs.degree() {
            return Err(Error::input(format!(
                "degree mismatch: {} vs {}",
                self.degree(),
                rhs.degree()
            )));
        }
        Ok(self * rhs)
    }

    /// Conjugate `x^{-1} * self * x`.
    pub fn conjugate_by(&self, x: &Permutation) -> Result<Permutation> {
        let xi = x.inverse();
        Ok(&(&xi * self) * x)
    }

    pub fn is_involution(&self) -> bool {
        !self.is_identity() && self.images.iter().enumerate().all(|(i, &im)| {
            self.images[im as usize] == i as u32
        })
    }

    /// Smallest moved point (0-based), if any.
    pub fn first_moved_point(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &im)| *i as u32 != im)
            .map(|(i, _)| i as u32)
    }

    /// Disjoint cycle decomposition, fixed points omitted, 0-based points.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start as u32 {
                continue;
            }
            let mut cyc = vec![start as u32];
            seen[start] = true;
            let mut p = self.images[start];
            while p as usize != start {
                seen[p as usize] = true;
                cyc.push(p);
                p = self.images[p as usize];
            }
            out.push(cyc);
        }
        out
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Unchecked product; degrees must match.
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "permutation degree mismatch");
        let images = self
            .images
            .iter()
            .map(|&mid| rhs.images[mid as usize])
            .collect();
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cyc in cycles {
            write!(f, "(")?;
            for (k, p) in cyc.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finitely generated permutation group with a lazily built,
/// deterministic stabilizer chain.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabilizerChain>,
}

impl PermGroup {
    /// Builds a group from a nonempty generator list of equal degree.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::input("degree must be positive"));
        }
        if generators.is_empty() {
            return Err(Error::input("generator list must be nonempty"));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::input(format!(
                    "generator degree {} does not match group degree {}",
                    g.degree(),
                    degree
                )));
            }
        }
        Ok(PermGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    /// The trivial group on `degree` points.
    pub fn trivial(degree: usize) -> Result<Self> {
        PermGroup::new(degree, vec![Permutation::identity(degree)])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    /// The stabilizer chain, built on first use.
    pub fn chain(&self) -> &StabilizerChain {
        self.chain
            .get_or_init(|| StabilizerChain::build(self.degree, &self.generators))
    }

    /// Exact group order.
    pub fn order(&self) -> u64 {
        self.chain().order()
    }

    /// Membership via sifting through the stabilizer chain.
    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::input(format!(
                "degree mismatch: element has degree {}, group has {}",
                p.degree(),
                self.degree
            )));
        }
        Ok(self.chain().contains(p))
    }

    /// Orbit of a 0-based point under the group.
    pub fn orbit(&self, point: u32) -> Result<Vec<u32>> {
        if point as usize >= self.degree {
            return Err(Error::input(format!(
                "point {} out of range for degree {}",
                point + 1,
                self.degree
            )));
        }
        let mut orbit = vec![point];
        let mut seen = vec![false; self.degree];
        seen[point as usize] = true;
        let mut head = 0;
        while head < orbit.len() {
            let p = orbit[head];
            head += 1;
            for g in &self.generators {
                let q = g.image(p);
                if !seen[q as usize] {
                    seen[q as usize] = true;
                    orbit.push(q);
                }
            }
        }
        Ok(orbit)
    }

    /// Conjugate subgroup `x^{-1} A x`, generated by the conjugated generators.
    pub fn conjugate_by(&self, x: &Permutation) -> Result<PermGroup> {
        if x.degree() != self.degree {
            return Err(Error::input("degree mismatch in subgroup conjugation"));
        }
        let gens = self
            .generators
            .iter()
            .map(|g| g.conjugate_by(x))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(self.degree, gens)
    }

    /// Iterates over all elements, failing if the order exceeds `bound`.
    pub fn elements_bounded(&self, bound: u64) -> Result<Elements<'_>> {
        let order = self.order();
        if order > bound {
            return Err(Error::Resource {
                what: "group enumeration",
                needed: order,
                bound,
            });
        }
        Ok(Elements::new(self.chain()))
    }

    /// Iterates over all elements under the default enumeration bound.
    pub fn elements(&self) -> Result<Elements<'_>> {
        self.elements_bounded(limits::DEFAULT_ENUM_BOUND)
    }

    /// Uniform random element, sampled by independent uniform choices in
    /// each transversal level of the stabilizer chain.
    pub fn random_element<R: rand::Rng>(&self, rng: &mut R) -> Permutation {
        self.chain().random_element(self.degree, rng)
    }

    /// True when every generator of `sub` lies in `self`.
    pub fn contains_subgroup(&self, sub: &PermGroup) -> Result<bool> {
        for g in sub.generators() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Iterator over all group elements, one per transversal combination.
pub struct Elements<'a> {
    chain: &'a StabilizerChain,
    counters: Vec<usize>,
    done: bool,
}

impl<'a> Elements<'a> {
    fn new(chain: &'a StabilizerChain) -> Self {
        Elements {
            counters: vec![0; chain.num_levels()],
            chain,
            done: false,
        }
    }
}

impl Iterator for Elements<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let elem = self.chain.element_from_indices(&self.counters);
        // odometer increment over the transversal sizes
        let mut level = 0;
        loop {
            if level == self.counters.len() {
                self.done = true;
                break;
            }
            self.counters[level] += 1;
            if self.counters[level] < self.chain.orbit_len(level) {
                break;
            }
            self.counters[level] = 0;
            level += 1;
        }
        if self.counters.is_empty() {
            self.done = true;
        }
        Some(elem)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(degree: usize, cycles: &str) -> Permutation {
        parse_cycles(degree, cycles).unwrap()
    }

    #[test]
    fn involution_squares_to_identity() {
        let t = perm(3, "(1,2)");
        assert!((&t * &t).is_identity());
    }

    #[test]
    fn three_cycle_squared() {
        let c = perm(3, "(1,2,3)");
        assert_eq!(&c * &c, perm(3, "(1,3,2)"));
    }

    #[test]
    fn compose_with_inverse_is_identity() {
        let p = perm(7, "(1,4,6)(2,7)");
        assert!((&p * &p.inverse()).is_identity());
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
    }

    #[test]
    fn compose_degree_mismatch_is_input_error() {
        let p = perm(3, "(1,2)");
        let q = perm(4, "(1,2)");
        assert!(p.compose(&q).is_err());
    }

    #[test]
    fn conjugating_subgroup_relabels_points() {
        // <(1,2)> conjugated by (1,3) is <(2,3)>
        let a = PermGroup::new(3, vec![perm(3, "(1,2)")]).unwrap();
        let conj = a.conjugate_by(&perm(3, "(1,3)")).unwrap();
        assert_eq!(conj.generators()[0], perm(3, "(2,3)"));
    }

    #[test]
    fn conjugate_of_abelian_by_own_element_stays_inside() {
        let a = PermGroup::new(4, vec![perm(4, "(1,2)(3,4)"), perm(4, "(1,3)(2,4)")]).unwrap();
        let x = perm(4, "(1,2)(3,4)");
        let conj = a.conjugate_by(&x).unwrap();
        for g in conj.generators() {
            assert!(a.contains(g).unwrap());
        }
    }

    #[test]
    fn conjugated_point_stabilizer_fixes_conjugated_point() {
        // stabilizer of 4 in Alt(4), conjugated by (1,4)(2,3), stabilizes 1
        let a = PermGroup::new(4, vec![perm(4, "(1,2,3)")]).unwrap();
        let conj = a.conjugate_by(&perm(4, "(1,4)(2,3)")).unwrap();
        assert_eq!(conj.orbit(0).unwrap(), vec![0]);
        let moved: Vec<u32> = conj.orbit(1).unwrap();
        assert_eq!(moved.len(), 3);
    }

    #[test]
    fn s3_is_transitive() {
        let g = PermGroup::new(3, vec![perm(3, "(1,2)"), perm(3, "(1,2,3)")]).unwrap();
        let mut orb = g.orbit(0).unwrap();
        orb.sort();
        assert_eq!(orb, vec![0, 1, 2]);
    }

    #[test]
    fn trivial_group_orbit_is_singleton() {
        let g = PermGroup::trivial(5).unwrap();
        assert_eq!(g.orbit(1).unwrap(), vec![1]);
    }

    #[test]
    fn s3_order() {
        let g = PermGroup::new(3, vec![perm(3, "(1,2)"), perm(3, "(1,2,3)")]).unwrap();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn klein_group_order_and_elements() {
        let g = PermGroup::new(4, vec![perm(4, "(1,2)(3,4)"), perm(4, "(1,3)(2,4)")]).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.elements().unwrap().count(), 4);
    }

    #[test]
    fn alt4_does_not_contain_transposition() {
        let g = PermGroup::new(4, vec![perm(4, "(1,2,3)"), perm(4, "(2,3,4)")]).unwrap();
        assert_eq!(g.order(), 12);
        assert!(!g.contains(&perm(4, "(1,2)")).unwrap());
    }

    #[test]
    fn group_contains_its_generators_and_random_words() {
        let gens = vec![perm(5, "(1,2,3,4,5)"), perm(5, "(1,2,3)")];
        let g = PermGroup::new(5, gens.clone()).unwrap();
        for gen in &gens {
            assert!(g.contains(gen).unwrap());
        }
        let word = &(&gens[0] * &gens[1]) * &gens[0].inverse();
        assert!(g.contains(&word).unwrap());
    }

    #[test]
    fn elements_matches_chain_order_for_small_groups() {
        let g = PermGroup::new(5, vec![perm(5, "(1,2)"), perm(5, "(1,2,3,4,5)")]).unwrap();
        assert_eq!(g.order(), 120);
        let elems: Vec<_> = g.elements().unwrap().collect();
        assert_eq!(elems.len(), 120);
        let set: std::collections::HashSet<_> = elems.into_iter().collect();
        assert_eq!(set.len(), 120, "each element exactly once");
    }

    #[test]
    fn enumeration_bound_is_enforced() {
        let g = PermGroup::new(5, vec![perm(5, "(1,2)"), perm(5, "(1,2,3,4,5)")]).unwrap();
        match g.elements_bounded(100) {
            Err(Error::Resource { needed, bound, .. }) => {
                assert_eq!(needed, 120);
                assert_eq!(bound, 100);
            }
            other => panic!("expected resource error, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn contains_agrees_with_linear_scan() {
        let g = PermGroup::new(4, vec![perm(4, "(1,2,3)"), perm(4, "(2,3,4)")]).unwrap();
        let elems: std::collections::HashSet<_> = g.elements().unwrap().collect();
        // all of S4, member or not
        let s4 = PermGroup::new(4, vec![perm(4, "(1,2)"), perm(4, "(1,2,3,4)")]).unwrap();
        for p in s4.elements().unwrap() {
            assert_eq!(g.contains(&p).unwrap(), elems.contains(&p));
        }
    }

    #[test]
    fn random_element_is_member() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let g = PermGroup::new(5, vec![perm(5, "(1,2,3)"), perm(5, "(3,4,5)")]).unwrap();
        for _ in 0..50 {
            let p = g.random_element(&mut rng);
            assert!(g.contains(&p).unwrap());
        }
    }
}
