//! Deterministic Schreier-Sims stabilizer chain.
//!
//! The chain keeps one strong generating set and a sorted list of base
//! points; level `k` consists of the strong generators fixing the first
//! `k` base points, with the orbit and transversal of base point `k`.
//! Construction runs Schreier-generator sifting to a fixpoint,
//! rebuilding the levels after every addition. Base points are kept in
//! increasing point order and all scans are in list order, so repeated
//! builds over the same generators give identical chains.
//!
//! Sizes here are desk scale (degrees up to a few hundred, orders up to
//! about 10^6); nothing is optimized beyond that.

use super::Permutation;

#[derive(Debug, Clone)]
struct Level {
    /// Indices into the strong set of the generators active here.
    gen_idx: Vec<usize>,
    /// Orbit of the base point, in BFS discovery order.
    orbit: Vec<u32>,
    /// `transversal[p]` maps the base point to `p`.
    transversal: Vec<Option<Permutation>>,
}

/// Stabilizer chain of a permutation group.
#[derive(Debug, Clone)]
pub struct StabilizerChain {
    degree: usize,
    base: Vec<u32>,
    strong: Vec<Permutation>,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn build(degree: usize, generators: &[Permutation]) -> Self {
        let mut chain = StabilizerChain {
            degree,
            base: Vec::new(),
            strong: Vec::new(),
            levels: Vec::new(),
        };
        for g in generators {
            if !g.is_identity() && !chain.strong.contains(g) {
                chain.strong.push(g.clone());
            }
        }
        chain.extend_base_coverage();
        chain.rebuild_levels();
        chain.close();
        chain
    }

    /// Every strong generator must move some base point; new base points
    /// are the smallest moved points, kept sorted.
    fn extend_base_coverage(&mut self) {
        for i in 0..self.strong.len() {
            let g = &self.strong[i];
            if self.base.iter().all(|&b| g.image(b) == b) {
                let p = g.first_moved_point().expect("non-identity");
                match self.base.binary_search(&p) {
                    Ok(_) => unreachable!("base point both fixed and moved"),
                    Err(pos) => self.base.insert(pos, p),
                }
            }
        }
    }

    fn rebuild_levels(&mut self) {
        self.levels = (0..self.base.len())
            .map(|k| {
                let earlier = &self.base[..k];
                let gen_idx: Vec<usize> = self
                    .strong
                    .iter()
                    .enumerate()
                    .filter(|(_, g)| earlier.iter().all(|&b| g.image(b) == b))
                    .map(|(i, _)| i)
                    .collect();
                let mut level = Level {
                    gen_idx,
                    orbit: Vec::new(),
                    transversal: vec![None; self.degree],
                };
                self.fill_orbit(self.base[k], &mut level);
                level
            })
            .collect();
    }

    fn fill_orbit(&self, base: u32, level: &mut Level) {
        level.orbit.push(base);
        level.transversal[base as usize] = Some(Permutation::identity(self.degree));
        let mut head = 0;
        while head < level.orbit.len() {
            let p = level.orbit[head];
            head += 1;
            for &gi in &level.gen_idx {
                let g = &self.strong[gi];
                let q = g.image(p);
                if level.transversal[q as usize].is_none() {
                    let rep = level.transversal[p as usize].as_ref().unwrap() * g;
                    level.transversal[q as usize] = Some(rep);
                    level.orbit.push(q);
                }
            }
        }
    }

    /// Sift Schreier generators until every one reduces to the identity,
    /// extending the strong set (and base) after each failure.
    fn close(&mut self) {
        'restart: loop {
            for k in 0..self.levels.len() {
                for oi in 0..self.levels[k].orbit.len() {
                    for gii in 0..self.levels[k].gen_idx.len() {
                        let schreier = {
                            let level = &self.levels[k];
                            let p = level.orbit[oi];
                            let s = &self.strong[level.gen_idx[gii]];
                            let u_p = level.transversal[p as usize].as_ref().unwrap();
                            let u_q = level.transversal[s.image(p) as usize].as_ref().unwrap();
                            &(u_p * s) * &u_q.inverse()
                        };
                        if schreier.is_identity() {
                            continue;
                        }
                        let (residue, _) = self.strip(schreier, k + 1);
                        if !residue.is_identity() {
                            self.strong.push(residue);
                            self.extend_base_coverage();
                            self.rebuild_levels();
                            continue 'restart;
                        }
                    }
                }
            }
            return;
        }
    }

    /// Sifts `g` starting at level `from`, returning the residue and the
    /// level at which sifting stopped.
    fn strip(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        let mut level = from;
        while level < self.levels.len() {
            let lvl = &self.levels[level];
            let p = g.image(self.base[level]);
            match &lvl.transversal[p as usize] {
                None => return (g, level),
                Some(u) => {
                    if p != self.base[level] {
                        g = &g * &u.inverse();
                    }
                }
            }
            level += 1;
        }
        (g, level)
    }

    pub fn num_levels(&self) -> usize {
        self.levels.len()
    }

    pub fn orbit_len(&self, level: usize) -> usize {
        self.levels[level].orbit.len()
    }

    pub fn base_points(&self) -> &[u32] {
        &self.base
    }

    pub fn order(&self) -> u64 {
        self.levels.iter().fold(1u64, |acc, l| {
            acc.checked_mul(l.orbit.len() as u64)
                .expect("group order overflows u64")
        })
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        let (residue, _) = self.strip(p.clone(), 0);
        residue.is_identity()
    }

    /// Element determined by one transversal choice per level; index `i`
    /// selects the `i`-th orbit point at that level. Every element of the
    /// group arises from exactly one index tuple.
    pub(super) fn element_from_indices(&self, indices: &[usize]) -> Permutation {
        let mut acc = Permutation::identity(self.degree);
        // an element factors as u_k ... u_1 u_0 with u_j in the level-j
        // transversal, so multiply from the deepest level down
        for (level, &i) in self.levels.iter().zip(indices).rev() {
            let point = level.orbit[i];
            let u = level.transversal[point as usize].as_ref().unwrap();
            acc = &acc * u;
        }
        acc
    }

    pub(super) fn random_element<R: rand::Rng>(&self, degree: usize, rng: &mut R) -> Permutation {
        let mut acc = Permutation::identity(degree);
        for level in self.levels.iter().rev() {
            let point = level.orbit[rng.random_range(0..level.orbit.len())];
            let u = level.transversal[point as usize].as_ref().unwrap();
            acc = &acc * u;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse_cycles;
    use super::*;

    #[test]
    fn symmetric_group_order_and_sorted_base() {
        let gens = vec![
            parse_cycles(6, "(1,2)").unwrap(),
            parse_cycles(6, "(1,2,3,4,5,6)").unwrap(),
        ];
        let chain = StabilizerChain::build(6, &gens);
        assert_eq!(chain.order(), 720);
        let base = chain.base_points();
        for w in base.windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn adjacent_transpositions_generate_s4() {
        let gens = vec![
            parse_cycles(4, "(1,2)").unwrap(),
            parse_cycles(4, "(2,3)").unwrap(),
            parse_cycles(4, "(3,4)").unwrap(),
        ];
        assert_eq!(StabilizerChain::build(4, &gens).order(), 24);
    }

    #[test]
    fn chain_of_trivial_group() {
        let chain = StabilizerChain::build(4, &[Permutation::identity(4)]);
        assert_eq!(chain.order(), 1);
        assert_eq!(chain.num_levels(), 0);
        assert!(chain.contains(&Permutation::identity(4)));
        assert!(!chain.contains(&parse_cycles(4, "(1,2)").unwrap()));
    }

    #[test]
    fn alternating_group_membership() {
        let gens = vec![
            parse_cycles(5, "(1,2,3)").unwrap(),
            parse_cycles(5, "(3,4,5)").unwrap(),
        ];
        let chain = StabilizerChain::build(5, &gens);
        assert_eq!(chain.order(), 60);
        assert!(!chain.contains(&parse_cycles(5, "(1,2)").unwrap()));
        assert!(chain.contains(&parse_cycles(5, "(1,2)(3,4)").unwrap()));
    }

    #[test]
    fn rebuilding_gives_same_base() {
        let gens = vec![
            parse_cycles(7, "(1,2,3,4,5,6,7)").unwrap(),
            parse_cycles(7, "(2,3)(4,7)").unwrap(),
        ];
        let a = StabilizerChain::build(7, &gens);
        let b = StabilizerChain::build(7, &gens);
        assert_eq!(a.base_points(), b.base_points());
        assert_eq!(a.order(), b.order());
    }

    #[test]
    fn dihedral_on_twelve_points() {
        let gens = vec![
            parse_cycles(12, "(1,2,3,4,5,6,7,8,9,10,11,12)").unwrap(),
            parse_cycles(12, "(2,12)(3,11)(4,10)(5,9)(6,8)").unwrap(),
        ];
        assert_eq!(StabilizerChain::build(12, &gens).order(), 24);
    }
}
