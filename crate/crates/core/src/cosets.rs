//! Right coset spaces and their double-coset structure.
//!
//! For `A <= G` the space holds one canonical representative per right
//! coset `Ax`, the partition of cosets into orbits of `A` acting by
//! right multiplication (suborbits), and the induced double-coset
//! labeling: suborbits correspond bijectively to double cosets `AxA`,
//! with suborbit 0 the singleton `{A}`.
//!
//! Two constructions are supported. [`build_coset_space`] materializes
//! the transversal of an arbitrary subgroup, deciding coset identity by
//! testing `transversal[c] * g^{-1}` for membership in `A` through the
//! stabilizer chain. [`CosetSpace::from_action`] wraps a transitive
//! action on points where `A` is the stabilizer of point 0; cosets are
//! the points themselves and representatives are Schreier words, which
//! keeps parabolic quotients with hundreds of thousands of cosets cheap.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::limits;
use crate::perm::{PermGroup, Permutation};

#[derive(Debug, Clone)]
enum Backing {
    /// Explicit transversal; representatives are group elements.
    Explicit {
        group: PermGroup,
        subgroup: PermGroup,
        transversal: Vec<Permutation>,
    },
    /// Transitive action with `A = Stab(0)`; cosets are points. The
    /// generator images (and their inverses) act directly.
    Action {
        gens: Vec<Permutation>,
        gen_invs: Vec<Permutation>,
        sub_gens: Vec<Permutation>,
    },
}

/// The right coset space of a subgroup, with suborbit partition.
#[derive(Debug, Clone)]
pub struct CosetSpace {
    backing: Backing,
    index: usize,
    /// Schreier tree: for each coset != 0, the coset it was discovered
    /// from and the generator index used.
    tree: Vec<(u32, u32)>,
    suborbit_id: Vec<u32>,
    suborbits: Vec<Vec<u32>>,
    dc_reps: Vec<u32>,
    inverse_label: Vec<u32>,
    enum_bound: u64,
}

/// Builds the coset space of `a` in `g` with default bounds.
pub fn build_coset_space(g: &PermGroup, a: &PermGroup) -> Result<CosetSpace> {
    build_coset_space_bounded(g, a, limits::DEFAULT_INDEX_BOUND, limits::DEFAULT_ENUM_BOUND)
}

/// Builds the coset space of `a` in `g`, failing once more than
/// `index_bound` cosets appear.
pub fn build_coset_space_bounded(
    g: &PermGroup,
    a: &PermGroup,
    index_bound: u64,
    enum_bound: u64,
) -> Result<CosetSpace> {
    if g.degree() != a.degree() {
        return Err(Error::input("subgroup degree differs from group degree"));
    }
    if !g.contains_subgroup(a)? {
        return Err(Error::input(
            "subgroup generators do not all lie in the group",
        ));
    }

    // breadth-first closure over right cosets, identity coset first
    let mut transversal: Vec<Permutation> = vec![g.identity()];
    let mut tree: Vec<(u32, u32)> = vec![(0, 0)];
    let mut head = 0usize;
    while head < transversal.len() {
        let current = transversal[head].clone();
        for (gi, gen) in g.generators().iter().enumerate() {
            let h = &current * gen;
            let known = locate_coset(a, &transversal, &h)?;
            if known.is_none() {
                if transversal.len() as u64 >= index_bound {
                    return Err(Error::Resource {
                        what: "coset index",
                        needed: index_bound + 1,
                        bound: index_bound,
                    });
                }
                transversal.push(h);
                tree.push((head as u32, gi as u32));
            }
        }
        head += 1;
    }

    let backing = Backing::Explicit {
        group: g.clone(),
        subgroup: a.clone(),
        transversal,
    };
    CosetSpace::finish(backing, tree, enum_bound)
}

/// Finds the coset of `h` in the current transversal, or None.
fn locate_coset(a: &PermGroup, transversal: &[Permutation], h: &Permutation) -> Result<Option<u32>> {
    let h_inv = h.inverse();
    for (c, t) in transversal.iter().enumerate() {
        if a.contains(&(t * &h_inv))? {
            return Ok(Some(c as u32));
        }
    }
    Ok(None)
}

impl CosetSpace {
    /// Wraps a transitive action on `0..degree` whose point stabilizer at
    /// 0 is generated by `sub_gens`. The caller guarantees that
    /// `<sub_gens>` is the full stabilizer of 0 in `<gens>`; the
    /// double-coset semantics depend on it.
    pub fn from_action(gens: Vec<Permutation>, sub_gens: Vec<Permutation>) -> Result<CosetSpace> {
        let degree = match gens.first() {
            Some(g) => g.degree(),
            None => return Err(Error::input("action needs at least one generator")),
        };
        for g in gens.iter().chain(sub_gens.iter()) {
            if g.degree() != degree {
                return Err(Error::input("action generators have mixed degrees"));
            }
        }
        for s in &sub_gens {
            if s.image(0) != 0 {
                return Err(Error::input("subgroup generator does not fix the base point"));
            }
        }

        // Schreier tree over the whole point set
        let mut tree: Vec<(u32, u32)> = vec![(0, 0); degree];
        let mut seen = vec![false; degree];
        seen[0] = true;
        let mut queue = vec![0u32];
        let mut head = 0;
        while head < queue.len() {
            let p = queue[head];
            head += 1;
            for (gi, g) in gens.iter().enumerate() {
                let q = g.image(p);
                if !seen[q as usize] {
                    seen[q as usize] = true;
                    tree[q as usize] = (p, gi as u32);
                    queue.push(q);
                }
            }
        }
        if queue.len() != degree {
            return Err(Error::input("action is not transitive"));
        }

        let gen_invs = gens.iter().map(Permutation::inverse).collect();
        let backing = Backing::Action {
            gens,
            gen_invs,
            sub_gens,
        };
        CosetSpace::finish(backing, tree, limits::DEFAULT_ENUM_BOUND)
    }

    fn finish(backing: Backing, tree: Vec<(u32, u32)>, enum_bound: u64) -> Result<CosetSpace> {
        let index = tree.len();
        let mut space = CosetSpace {
            backing,
            index,
            tree,
            suborbit_id: Vec::new(),
            suborbits: Vec::new(),
            dc_reps: Vec::new(),
            inverse_label: Vec::new(),
            enum_bound,
        };
        space.compute_suborbits()?;
        space.compute_inverse_labels()?;
        Ok(space)
    }

    /// Orbits of A on cosets by right multiplication. Scanning seeds in
    /// increasing coset order makes each suborbit's representative its
    /// smallest coset index and puts the trivial suborbit first.
    fn compute_suborbits(&mut self) -> Result<()> {
        let index = self.index;
        let mut id = vec![u32::MAX; index];
        let mut suborbits: Vec<Vec<u32>> = Vec::new();
        let mut reps: Vec<u32> = Vec::new();

        let sub_gen_count = match &self.backing {
            Backing::Explicit { subgroup, .. } => subgroup.generators().len(),
            Backing::Action { sub_gens, .. } => sub_gens.len(),
        };

        for seed in 0..index as u32 {
            if id[seed as usize] != u32::MAX {
                continue;
            }
            let label = suborbits.len() as u32;
            let mut members = vec![seed];
            id[seed as usize] = label;
            let mut head = 0;
            while head < members.len() {
                let c = members[head];
                head += 1;
                for k in 0..sub_gen_count {
                    let d = self.act_by_subgroup_gen(c, k)?;
                    if id[d as usize] == u32::MAX {
                        id[d as usize] = label;
                        members.push(d);
                    }
                }
            }
            reps.push(seed);
            suborbits.push(members);
        }

        self.suborbit_id = id;
        self.suborbits = suborbits;
        self.dc_reps = reps;
        Ok(())
    }

    fn act_by_subgroup_gen(&self, c: u32, k: usize) -> Result<u32> {
        match &self.backing {
            Backing::Explicit { subgroup, .. } => {
                let gen = subgroup.generators()[k].clone();
                self.act_right(c, &gen)
            }
            Backing::Action { sub_gens, .. } => Ok(sub_gens[k].image(c)),
        }
    }

    /// Double-coset inversion `j -> label of (A x_j A)^{-1}`.
    fn compute_inverse_labels(&mut self) -> Result<()> {
        let mut out = Vec::with_capacity(self.suborbits.len());
        for j in 0..self.suborbits.len() {
            let rep = self.dc_reps[j];
            let q = self.trace_inverse_rep(rep);
            out.push(self.suborbit_id[q as usize]);
        }
        self.inverse_label = out;
        Ok(())
    }

    /// Coset of `t_c^{-1}`, via the Schreier word of `c`.
    fn trace_inverse_rep(&self, c: u32) -> u32 {
        let word = self.rep_word(c);
        let mut p = 0u32;
        for &gi in word.iter().rev() {
            p = self.act_gen_inv(p, gi as usize);
        }
        p
    }

    pub fn index(&self) -> usize {
        self.index
    }

    /// Number of suborbits = number of double cosets of A in G.
    pub fn rank(&self) -> usize {
        self.suborbits.len()
    }

    pub fn suborbit_id(&self, coset: u32) -> u32 {
        self.suborbit_id[coset as usize]
    }

    pub fn suborbit(&self, label: u32) -> &[u32] {
        &self.suborbits[label as usize]
    }

    /// Smallest coset index in the suborbit.
    pub fn dc_rep(&self, label: u32) -> u32 {
        self.dc_reps[label as usize]
    }

    /// Suborbit sizes, in label order.
    pub fn subdegrees(&self) -> Vec<u64> {
        self.suborbits.iter().map(|s| s.len() as u64).collect()
    }

    /// Label of the inverse double coset.
    pub fn inverse_label(&self, label: u32) -> u32 {
        self.inverse_label[label as usize]
    }

    pub fn enum_bound(&self) -> u64 {
        self.enum_bound
    }

    /// The ambient group, when representatives are explicit elements.
    pub fn group(&self) -> Option<&PermGroup> {
        match &self.backing {
            Backing::Explicit { group, .. } => Some(group),
            Backing::Action { .. } => None,
        }
    }

    pub fn subgroup(&self) -> Option<&PermGroup> {
        match &self.backing {
            Backing::Explicit { subgroup, .. } => Some(subgroup),
            Backing::Action { .. } => None,
        }
    }

    /// Generators of the acting group, in the degree of this space's
    /// elements (original degree for explicit spaces, point degree for
    /// action-backed spaces).
    pub fn acting_generators(&self) -> &[Permutation] {
        match &self.backing {
            Backing::Explicit { group, .. } => group.generators(),
            Backing::Action { gens, .. } => gens,
        }
    }

    pub fn subgroup_generators(&self) -> &[Permutation] {
        match &self.backing {
            Backing::Explicit { subgroup, .. } => subgroup.generators(),
            Backing::Action { sub_gens, .. } => sub_gens,
        }
    }

    /// Canonical representative of coset `c`; `transversal(0)` is the identity.
    pub fn transversal(&self, c: u32) -> Permutation {
        match &self.backing {
            Backing::Explicit { transversal, .. } => transversal[c as usize].clone(),
            Backing::Action { gens, .. } => {
                let degree = gens[0].degree();
                let mut acc = Permutation::identity(degree);
                for gi in self.rep_word(c) {
                    acc = &acc * &gens[gi as usize];
                }
                acc
            }
        }
    }

    /// Generator word carrying coset 0 to coset `c` along the Schreier tree.
    pub fn rep_word(&self, c: u32) -> Vec<u32> {
        let mut word = Vec::new();
        let mut p = c;
        while p != 0 {
            let (parent, gi) = self.tree[p as usize];
            word.push(gi);
            p = parent;
        }
        word.reverse();
        word
    }

    /// Index of the coset `A g`. For explicit spaces `g` must lie in G
    /// (anything else is an input error); for action-backed spaces `g`
    /// is an element of the acting image and the result is `0^g`.
    pub fn coset_of(&self, g: &Permutation) -> Result<u32> {
        match &self.backing {
            Backing::Explicit {
                subgroup,
                transversal,
                ..
            } => {
                if g.degree() != subgroup.degree() {
                    return Err(Error::input("element degree does not match coset space"));
                }
                match locate_coset(subgroup, transversal, g)? {
                    Some(c) => Ok(c),
                    None => Err(Error::input("element lies outside the group")),
                }
            }
            Backing::Action { gens, .. } => {
                if g.degree() != gens[0].degree() {
                    return Err(Error::input("element degree does not match action degree"));
                }
                Ok(g.image(0))
            }
        }
    }

    /// Right multiplication action on coset indices.
    pub fn act_right(&self, c: u32, g: &Permutation) -> Result<u32> {
        if (c as usize) >= self.index {
            return Err(Error::input(format!("coset index {c} out of range")));
        }
        match &self.backing {
            Backing::Explicit { .. } => {
                let t = self.transversal(c);
                self.coset_of(&(&t * g))
            }
            Backing::Action { gens, .. } => {
                if g.degree() != gens[0].degree() {
                    return Err(Error::input("element degree does not match action degree"));
                }
                Ok(g.image(c))
            }
        }
    }

    /// Action of the generator with index `gi`.
    pub fn act_gen(&self, c: u32, gi: usize) -> u32 {
        match &self.backing {
            Backing::Explicit { group, .. } => self
                .act_right(c, &group.generators()[gi])
                .expect("generator action"),
            Backing::Action { gens, .. } => gens[gi].image(c),
        }
    }

    /// Action of the inverse of generator `gi`.
    pub fn act_gen_inv(&self, c: u32, gi: usize) -> u32 {
        match &self.backing {
            Backing::Explicit { group, .. } => self
                .act_right(c, &group.generators()[gi].inverse())
                .expect("generator action"),
            Backing::Action { gen_invs, .. } => gen_invs[gi].image(c),
        }
    }

    /// Applies a generator word to a coset.
    pub fn act_word(&self, c: u32, word: &[u32]) -> u32 {
        word.iter().fold(c, |p, &gi| self.act_gen(p, gi as usize))
    }

    /// Applies the inverse of a generator word to a coset.
    pub fn act_word_inv(&self, c: u32, word: &[u32]) -> u32 {
        word.iter()
            .rev()
            .fold(c, |p, &gi| self.act_gen_inv(p, gi as usize))
    }

    /// Double-coset label of `g`: the suborbit containing its coset.
    /// Constant on each double coset `AgA`.
    pub fn dc_index(&self, g: &Permutation) -> Result<u32> {
        Ok(self.suborbit_id(self.coset_of(g)?))
    }

    /// Labels of the double cosets covered by `(A x A)(A y A)` where `x`
    /// is any representative of suborbit `x_sub`: the product is the
    /// union over cosets `Ag` in `AxA` of `AgyA`, so acting on the whole
    /// suborbit by `y` and reading labels enumerates exactly the
    /// components of the product.
    pub fn dc_product_labels(&self, x_sub: u32, y: &Permutation) -> Result<BTreeSet<u32>> {
        if (x_sub as usize) >= self.rank() {
            return Err(Error::input(format!("suborbit index {x_sub} out of range")));
        }
        let mut labels = BTreeSet::new();
        for &c in self.suborbit(x_sub) {
            labels.insert(self.suborbit_id(self.act_right(c, y)?));
        }
        Ok(labels)
    }
}
