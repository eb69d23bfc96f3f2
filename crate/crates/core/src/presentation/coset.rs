use std::collections::{HashMap, VecDeque};

use serde::Deserialize;

use super::{FinitePresentation, Letter, PresentationError, Word};

pub const DEFAULT_COSET_LIMIT: usize = 1_000_000;

/// A homomorphism from a presentation to a permutation group, given by the
/// images of the generators. Permutations act on the right: `(p q)(x) = q(p(x))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationHom {
    degree: usize,
    images: Vec<Vec<usize>>,
}

impl PermutationHom {
    pub fn new(images: Vec<Vec<usize>>) -> Result<Self, PresentationError> {
        let degree = images.first().map_or(0, Vec::len);
        for (g, p) in images.iter().enumerate() {
            if p.len() != degree {
                return Err(PresentationError::InvalidHom(format!("image {g} has the wrong degree")));
            }
            let mut seen = vec![false; degree];
            for &x in p {
                if x >= degree || std::mem::replace(&mut seen[x], true) {
                    return Err(PresentationError::InvalidHom(format!("image {g} is not a permutation")));
                }
            }
        }
        Ok(PermutationHom { degree, images })
    }

    /// Parses `{"images": {"s": [1,0,2], "t": [0,2,1]}}` against the
    /// generator names of `p`.
    pub fn from_json(text: &str, p: &FinitePresentation) -> Result<Self, PresentationError> {
        #[derive(Deserialize)]
        struct Raw {
            images: HashMap<String, Vec<usize>>,
        }
        let raw: Raw = serde_json::from_str(text).map_err(|e| PresentationError::Json(e.to_string()))?;
        for name in raw.images.keys() {
            if p.index_of(name).is_none() {
                return Err(PresentationError::UnknownGenerator(name.clone()));
            }
        }
        let images = p
            .generator_names()
            .iter()
            .map(|n| {
                raw.images
                    .get(n)
                    .cloned()
                    .ok_or_else(|| PresentationError::InvalidHom(format!("no image for `{n}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        PermutationHom::new(images)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn images(&self) -> &[Vec<usize>] {
        &self.images
    }

    fn letter(&self, (g, e): Letter) -> Vec<usize> {
        if e > 0 {
            self.images[g].clone()
        } else {
            invert(&self.images[g])
        }
    }

    pub fn image(&self, w: &Word) -> Vec<usize> {
        let mut acc: Vec<usize> = (0..self.degree).collect();
        for &l in w.letters() {
            acc = compose(&acc, &self.letter(l));
        }
        acc
    }
}

fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    p.iter().map(|&x| q[x]).collect()
}

fn invert(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

fn is_identity(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &x)| i == x)
}

/// Right action of the generators on the cosets `0..d` of a subgroup, with
/// coset `0` the subgroup itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    action: Vec<Vec<usize>>,
    inverse: Vec<Vec<usize>>,
}

impl CosetTable {
    /// Checks that every generator acts bijectively and that the action is
    /// transitive from coset 0.
    pub fn new(action: Vec<Vec<usize>>) -> Result<Self, PresentationError> {
        let d = action.first().map_or(1, Vec::len);
        if d == 0 {
            return Err(PresentationError::InvalidTable("no cosets".into()));
        }
        for (g, a) in action.iter().enumerate() {
            let mut seen = vec![false; d];
            if a.len() != d || a.iter().any(|&x| x >= d || std::mem::replace(&mut seen[x], true)) {
                return Err(PresentationError::InvalidTable(format!("generator {g} is not a bijection")));
            }
        }
        let inverse = action.iter().map(|a| invert(a)).collect();
        let t = CosetTable { action, inverse };
        let mut reached = vec![false; d];
        reached[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(c) = queue.pop_front() {
            for g in 0..t.action.len() {
                for e in [1, -1] {
                    let x = t.apply(c, (g, e));
                    if !std::mem::replace(&mut reached[x], true) {
                        queue.push_back(x);
                    }
                }
            }
        }
        if reached.iter().any(|r| !r) {
            return Err(PresentationError::InvalidTable("action is not transitive".into()));
        }
        Ok(t)
    }

    pub fn index(&self) -> usize {
        self.action.first().map_or(1, Vec::len)
    }

    pub fn generator_count(&self) -> usize {
        self.action.len()
    }

    pub fn action(&self) -> &[Vec<usize>] {
        &self.action
    }

    pub fn apply(&self, c: usize, (g, e): Letter) -> usize {
        if e > 0 {
            self.action[g][c]
        } else {
            self.inverse[g][c]
        }
    }

    pub fn apply_word(&self, c: usize, w: &Word) -> usize {
        w.letters().iter().fold(c, |x, &l| self.apply(x, l))
    }

    /// Checks that the table belongs to `p`: matching generator count and
    /// every relator acting trivially on every coset.
    pub fn validate_for(&self, p: &FinitePresentation) -> Result<(), PresentationError> {
        if self.generator_count() != p.generator_count() {
            return Err(PresentationError::InvalidTable(format!(
                "table has {} generators, presentation has {}",
                self.generator_count(),
                p.generator_count()
            )));
        }
        for (i, r) in p.relators().iter().enumerate() {
            if (0..self.index()).any(|c| self.apply_word(c, r) != c) {
                return Err(PresentationError::RelatorNotKilled(i));
            }
        }
        Ok(())
    }
}

pub fn coset_enumerate(p: &FinitePresentation, target: &PermutationHom) -> Result<CosetTable, PresentationError> {
    coset_enumerate_with_limit(p, target, DEFAULT_COSET_LIMIT)
}

/// Coset table of the kernel of `target`. Cosets correspond to elements of
/// the image, numbered in breadth-first order over the letters
/// `g0, g0^-1, g1, g1^-1, ...`.
pub fn coset_enumerate_with_limit(
    p: &FinitePresentation,
    target: &PermutationHom,
    limit: usize,
) -> Result<CosetTable, PresentationError> {
    if target.images.len() != p.generator_count() {
        return Err(PresentationError::InvalidHom(format!(
            "{} images for {} generators",
            target.images.len(),
            p.generator_count()
        )));
    }
    for (i, r) in p.relators().iter().enumerate() {
        if !is_identity(&target.image(r)) {
            return Err(PresentationError::RelatorNotKilled(i));
        }
    }
    let a = p.generator_count();
    let gens: Vec<Vec<usize>> = target.images.clone();
    let invs: Vec<Vec<usize>> = gens.iter().map(|g| invert(g)).collect();
    let mut elems: Vec<Vec<usize>> = vec![(0..target.degree).collect()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(elems[0].clone(), 0)]);
    let mut action: Vec<Vec<usize>> = vec![Vec::new(); a];
    let mut i = 0;
    while i < elems.len() {
        for g in 0..a {
            for (e, img) in [(1, &gens[g]), (-1, &invs[g])] {
                let prod = compose(&elems[i], img);
                let next = match index.get(&prod) {
                    Some(&j) => j,
                    None => {
                        if elems.len() >= limit {
                            return Err(PresentationError::BoundExceeded(limit));
                        }
                        index.insert(prod.clone(), elems.len());
                        elems.push(prod);
                        elems.len() - 1
                    }
                };
                if e == 1 {
                    action[g].push(next);
                }
            }
        }
        i += 1;
    }
    if a == 0 {
        return CosetTable::new(Vec::new());
    }
    CosetTable::new(action)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_three() {
        let p = FinitePresentation::with_rank(1, vec![Word::power(0, 3)]).unwrap();
        let hom = PermutationHom::new(vec![vec![1, 2, 0]]).unwrap();
        let t = coset_enumerate(&p, &hom).unwrap();
        assert_eq!(t.index(), 3);
        t.validate_for(&p).unwrap();
    }

    #[test]
    fn z2_onto_c2() {
        let a = Word::gen(0);
        let b = Word::gen(1);
        let p = FinitePresentation::with_rank(2, vec![Word::commutator(&a, &b)]).unwrap();
        let hom = PermutationHom::new(vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(coset_enumerate(&p, &hom).unwrap().index(), 2);
    }

    #[test]
    fn bs22_onto_c2_times_d() {
        let p = FinitePresentation::baumslag_solitar(2, 2);
        // s: transposition on {0,1}; t: transposition on {2,3}
        let hom = PermutationHom::new(vec![vec![1, 0, 2, 3], vec![0, 1, 3, 2]]).unwrap();
        assert_eq!(coset_enumerate(&p, &hom).unwrap().index(), 4);
    }

    #[test]
    fn relator_not_killed() {
        let p = FinitePresentation::with_rank(1, vec![Word::power(0, 2)]).unwrap();
        let hom = PermutationHom::new(vec![vec![1, 2, 0]]).unwrap();
        assert_eq!(coset_enumerate(&p, &hom), Err(PresentationError::RelatorNotKilled(0)));
    }

    #[test]
    fn bound_exceeded() {
        let p = FinitePresentation::free(2);
        let hom = PermutationHom::new(vec![vec![1, 2, 3, 4, 0], vec![1, 0, 2, 3, 4]]).unwrap();
        assert_eq!(
            coset_enumerate_with_limit(&p, &hom, 50),
            Err(PresentationError::BoundExceeded(50))
        );
        assert_eq!(coset_enumerate(&p, &hom).unwrap().index(), 120);
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(CosetTable::new(vec![vec![0, 0]]).is_err());
        assert!(CosetTable::new(vec![vec![0, 1]]).is_err());
        assert!(CosetTable::new(vec![vec![1, 0]]).is_ok());
    }

    #[test]
    fn hom_json() {
        let p = FinitePresentation::baumslag_solitar(2, 2);
        let h = PermutationHom::from_json(r#"{"images":{"s":[1,0,2,3],"t":[0,1,3,2]}}"#, &p).unwrap();
        assert_eq!(h.degree(), 4);
        assert!(PermutationHom::from_json(r#"{"images":{"s":[1,0],"u":[0,1]}}"#, &p).is_err());
    }
}
