//! Intersection numbers and collapsed adjacency matrices, by exact
//! counting on an explicit coset space.
//!
//! Two closely related objects are computed from one table of pair
//! labels:
//!
//! * the structure-constant tensor `a[x][y][j]`, defined by
//!   `e_x e_y = sum_j a_{xyj} e_j` for the normalized double-coset sums
//!   `e_j` in the group algebra; and
//! * the collapsed adjacency matrix of each orbital graph,
//!   `matrix(y)[i][j] = #{cosets d in suborbit j paired with a fixed
//!   coset of suborbit i under orbital y}`.
//!
//! The two presentations carry the same information: `matrix(y)[i][j]`
//! equals `a[j][y*][i]` with `y*` the label of the inverse double coset.
//! Both are validated elementwise against the group-algebra expansion in
//! [`crate::bruteforce`] by the test and verification suites. Row `i` of
//! `matrix(i)` having no zero entry is equivalent to `(A x_i A)^2 = G`.

use crate::cosets::CosetSpace;
use crate::error::{Error, Result};

/// The full set of intersection numbers of a coset space.
#[derive(Debug, Clone)]
pub struct CollapsedAdjacency {
    rank: usize,
    subdegrees: Vec<u64>,
    inverse_label: Vec<u32>,
    /// `tensor[x][y][j] = a_{xyj}`.
    tensor: Vec<Vec<Vec<u64>>>,
}

/// Computes the intersection numbers of `cs`.
///
/// For each suborbit representative `c_i` and every coset `d`, the pair
/// `(c_i, d)` lies in a unique orbital; `a_{xyj}` then counts the cosets
/// of suborbit `y` whose pair with the representative of suborbit `j`
/// lands in the orbital inverse to `x`. Internal mass-conservation and
/// identity checks run before returning.
pub fn intersection_numbers(cs: &CosetSpace) -> Result<CollapsedAdjacency> {
    let r = cs.rank();
    let index = cs.index();

    // orbital label of the pair (rep_i, d) for every suborbit rep and coset:
    // the pair (Aa, Ab) lies in orbital y iff b a^{-1} lies in the y-th
    // double coset
    let mut pair_label = vec![vec![0u32; index]; r];
    for i in 0..r {
        let rep_inv = cs.transversal(cs.dc_rep(i as u32)).inverse();
        for d in 0..index as u32 {
            let elem = &cs.transversal(d) * &rep_inv;
            pair_label[i][d as usize] = cs.dc_index(&elem)?;
        }
    }

    // With right cosets the map from the double-coset algebra to orbital
    // adjacency matrices reverses products, so the structure constant is
    // the walk count with the factors swapped:
    //   a_{xyj} = #{gamma in suborbit y : (gamma, rep_j) in orbital x}
    //           = #{gamma in suborbit y : pair_label[j][gamma] = x*}
    let mut tensor = vec![vec![vec![0u64; r]; r]; r];
    for y in 0..r {
        for j in 0..r {
            for &gamma in cs.suborbit(y as u32) {
                let x_star = pair_label[j][gamma as usize];
                let x = cs.inverse_label(x_star) as usize;
                tensor[x][y][j] += 1;
            }
        }
    }

    let ca = CollapsedAdjacency {
        rank: r,
        subdegrees: cs.subdegrees(),
        inverse_label: (0..r as u32).map(|j| cs.inverse_label(j)).collect(),
        tensor,
    };
    ca.consistency_check()?;
    Ok(ca)
}

impl CollapsedAdjacency {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn subdegrees(&self) -> &[u64] {
        &self.subdegrees
    }

    /// `a_{xyj}`.
    pub fn a(&self, x: usize, y: usize, j: usize) -> u64 {
        self.tensor[x][y][j]
    }

    pub fn tensor(&self) -> &Vec<Vec<Vec<u64>>> {
        &self.tensor
    }

    /// Collapsed adjacency matrix of orbital `y`: entry `[i][j]` counts
    /// the suborbit-`j` cosets adjacent in orbital `y` to a fixed coset
    /// of suborbit `i`.
    pub fn matrix(&self, y: usize) -> Vec<Vec<u64>> {
        let y_star = self.inverse_label[y] as usize;
        let mut m = vec![vec![0u64; self.rank]; self.rank];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = self.tensor[y_star][j][i];
            }
        }
        m
    }

    /// All collapsed adjacency matrices in label order.
    pub fn matrices(&self) -> Vec<Vec<Vec<u64>>> {
        (0..self.rank).map(|y| self.matrix(y)).collect()
    }

    /// Boolean structure constants `c_{xyj} = [a_{xyj} != 0]`.
    pub fn boolean_constants(&self) -> Vec<Vec<Vec<bool>>> {
        self.tensor
            .iter()
            .map(|plane| {
                plane
                    .iter()
                    .map(|row| row.iter().map(|&v| v != 0).collect())
                    .collect()
            })
            .collect()
    }

    /// True iff every entry of row `i` of `matrix(i)` is nonzero, which
    /// holds exactly when the `i`-th double coset squares to the group.
    pub fn squares_to_group(&self, i: usize) -> Result<bool> {
        if i >= self.rank {
            return Err(Error::input(format!("suborbit index {i} out of range")));
        }
        let m = self.matrix(i);
        Ok(m[i].iter().all(|&v| v != 0))
    }

    /// Labels whose double coset squares to the group.
    pub fn squaring_labels(&self) -> Result<Vec<u32>> {
        (0..self.rank)
            .filter_map(|i| match self.squares_to_group(i) {
                Ok(true) => Some(Ok(i as u32)),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            })
            .collect()
    }

    /// Mass conservation and identity-row checks; a failure means the
    /// counting went wrong and is reported as an internal error.
    fn consistency_check(&self) -> Result<()> {
        let r = self.rank;
        for x in 0..r {
            for y in 0..r {
                let mass: u64 = (0..r).map(|j| self.tensor[x][y][j] * self.subdegrees[j]).sum();
                let expect = self.subdegrees[x] * self.subdegrees[y];
                if mass != expect {
                    return Err(Error::Internal(format!(
                        "mass conservation failed at ({x},{y}): {mass} != {expect}"
                    )));
                }
            }
        }
        for y in 0..r {
            for j in 0..r {
                let expect = u64::from(y == j);
                if self.tensor[0][y][j] != expect || self.tensor[y][0][j] != u64::from(y == j) {
                    return Err(Error::Internal(format!(
                        "identity row/column failed at y={y}, j={j}"
                    )));
                }
            }
        }
        Ok(())
    }
}
