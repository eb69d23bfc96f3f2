//! The lattice of ideals, enumerated through socles of quotients of the
//! adjoint module.

use std::collections::HashSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::linalg::Subspace;

use super::module::{image, preimage};
use super::LieAlgebra;

#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub max_dim: usize,
    pub max_ideals: usize,
    /// Random algebra elements tried per irreducibility test.
    pub attempts: usize,
    pub seed: u64,
    /// Above this dimension the centroid is not computed; its linear
    /// system has `dim^2` unknowns and `dim^3` equations.
    pub max_centroid_dim: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_dim: 10, max_ideals: 4096, attempts: 64, seed: 0x5eed, max_centroid_dim: 24 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Completeness {
    Complete,
    /// Two distinct isomorphic ideals that are minimal over a common ideal;
    /// every line of the plane they span gives another ideal.
    InfiniteFamilyDetected { first: Subspace, second: Subspace },
    Unknown(String),
}

#[derive(Clone, Debug)]
pub struct IdealLattice {
    /// Sorted by dimension, including `0` and the whole algebra.
    pub ideals: Vec<Subspace>,
    pub completeness: Completeness,
}

impl IdealLattice {
    pub fn nonzero(&self) -> impl Iterator<Item = &Subspace> {
        self.ideals.iter().filter(|s| !s.is_zero())
    }

    pub fn contains(&self, s: &Subspace) -> bool {
        self.ideals.contains(s)
    }
}

/// Every ideal containing `K` is `K` itself or contains a minimal one above
/// `K`, i.e. the preimage of a simple submodule of `g / K`. When the socle
/// of `g / K` is multiplicity free these are finitely many and the search
/// recurses on each.
pub fn ideal_lattice(l: &LieAlgebra, budget: &Budget) -> IdealLattice {
    let n = l.dim();
    let mut seen: HashSet<Subspace> = HashSet::from([Subspace::zero(n), l.whole()]);
    if n > budget.max_dim {
        return finish(seen, Completeness::Unknown(format!("dimension {n} exceeds bound {}", budget.max_dim)));
    }
    let adj = l.adjoint_module();
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let mut family = None;
    let mut unknown = None;
    let mut stack = vec![Subspace::zero(n)];
    while let Some(k) = stack.pop() {
        if k.is_full() {
            continue;
        }
        if seen.len() > budget.max_ideals {
            unknown = Some(format!("more than {} ideals", budget.max_ideals));
            break;
        }
        let Some(blocks) = adj.quotient(&k).socle(&mut rng, budget.attempts) else {
            unknown = Some("irreducibility test inconclusive".to_string());
            continue;
        };
        for b in blocks {
            let mut found: Vec<Subspace> = Vec::new();
            for h in &b.homs {
                let s = preimage(&k, &image(h));
                if !found.contains(&s) {
                    found.push(s);
                }
                if b.multiplicity == 1 {
                    break;
                }
            }
            if b.multiplicity > 1 {
                if family.is_none() {
                    family = Some((found[0].clone(), found[1].clone()));
                }
                let block = found.iter().fold(k.clone(), |acc, s| acc.sum(s));
                found.push(block);
            }
            for s in found {
                if seen.insert(s.clone()) {
                    stack.push(s);
                }
            }
        }
    }
    let completeness = match (family, unknown) {
        (Some((first, second)), _) => Completeness::InfiniteFamilyDetected { first, second },
        (None, Some(r)) => Completeness::Unknown(r),
        (None, None) => Completeness::Complete,
    };
    finish(seen, completeness)
}

fn finish(seen: HashSet<Subspace>, completeness: Completeness) -> IdealLattice {
    let mut ideals: Vec<Subspace> = seen.into_iter().collect();
    ideals.sort_by(|a, b| (a.dim(), a.basis()).cmp(&(b.dim(), b.basis())));
    IdealLattice { ideals, completeness }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::catalogue::*;

    fn lattice(l: &LieAlgebra) -> IdealLattice {
        ideal_lattice(l, &Budget::default())
    }

    #[test]
    fn af_has_one_proper_ideal() {
        let af = af();
        let lat = lattice(&af);
        assert_eq!(lat.completeness, Completeness::Complete);
        let nz: Vec<_> = lat.nonzero().cloned().collect();
        assert_eq!(nz, vec![Subspace::coordinates(2, &[0]), af.whole()]);
    }

    #[test]
    fn sol_has_four_nonzero_ideals() {
        let sol = sol();
        let lat = lattice(&sol);
        assert_eq!(lat.completeness, Completeness::Complete);
        assert_eq!(lat.nonzero().count(), 4);
        for idx in [&[0][..], &[1], &[0, 1], &[0, 1, 2]] {
            assert!(lat.contains(&Subspace::coordinates(3, idx)));
        }
    }

    #[test]
    fn simple_algebras() {
        for l in [sl2(), so(2, 1), so(3, 0), so(3, 1)] {
            let lat = lattice(&l);
            assert_eq!(lat.completeness, Completeness::Complete);
            assert_eq!(lat.ideals.len(), 2);
        }
    }

    #[test]
    fn repeated_modules_give_infinite_family() {
        let l = vr_semidirect(2, 1, 2);
        assert!(matches!(lattice(&l).completeness, Completeness::InfiniteFamilyDetected { .. }));
        let h = heisenberg();
        let lat = lattice(&h);
        // the centre is the unique minimal ideal; above it g/z is abelian of dim 2
        assert!(matches!(lat.completeness, Completeness::InfiniteFamilyDetected { .. }));
        assert!(lat.contains(&h.centre()));
    }

    #[test]
    fn semisimple_sum_has_four_ideals() {
        let l = sl2().direct_sum(&sl2());
        let lat = lattice(&l);
        assert_eq!(lat.completeness, Completeness::Complete);
        assert_eq!(lat.ideals.len(), 4);
    }

    #[test]
    fn oversized_algebra_is_unknown() {
        let lat = ideal_lattice(&abelian(4), &Budget { max_dim: 3, ..Budget::default() });
        assert!(matches!(lat.completeness, Completeness::Unknown(_)));
    }
}
