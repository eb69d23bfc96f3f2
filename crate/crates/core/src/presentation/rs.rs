use std::collections::VecDeque;

use super::{free_reduce, CosetTable, FinitePresentation, PresentationError, Word};

/// A Reidemeister-Schreier presentation of a finite-index subgroup together
/// with each subgroup generator written as a word in the parent group.
#[derive(Clone, Debug)]
pub struct SubgroupPresentation {
    pub presentation: FinitePresentation,
    pub generators_in_parent: Vec<Word>,
    /// Schreier transversal: representative word of each coset.
    pub transversal: Vec<Word>,
}

/// Schreier generators are the pairs (coset `c`, generator `g`) whose edge
/// `c -> c g` is not in the breadth-first spanning tree; each relator is
/// rewritten once from every coset. No Tietze simplification is applied, so
/// the counts are exactly `(a-1)d+1` and `b d`.
pub fn reidemeister_schreier(
    p: &FinitePresentation,
    t: &CosetTable,
) -> Result<SubgroupPresentation, PresentationError> {
    t.validate_for(p)?;
    let a = p.generator_count();
    let d = t.index();

    // Breadth-first transversal; letters scanned in the order g0, g0^-1, g1, ...
    let mut rep: Vec<Option<Word>> = vec![None; d];
    let mut tree = vec![vec![false; a]; d];
    rep[0] = Some(Word::identity());
    let mut queue = VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        for g in 0..a {
            for e in [1i8, -1] {
                let x = t.apply(c, (g, e));
                if rep[x].is_none() {
                    let w = rep[c].as_ref().unwrap().juxtapose(&Word::new(vec![(g, e)]));
                    rep[x] = Some(w);
                    if e == 1 {
                        tree[c][g] = true;
                    } else {
                        tree[x][g] = true;
                    }
                    queue.push_back(x);
                }
            }
        }
    }
    let rep: Vec<Word> = rep.into_iter().map(|r| r.expect("transitive table")).collect();

    let mut label = vec![vec![None; a]; d];
    let mut names = Vec::new();
    let mut in_parent = Vec::new();
    for c in 0..d {
        for g in 0..a {
            if tree[c][g] {
                continue;
            }
            label[c][g] = Some(names.len());
            let target = t.apply(c, (g, 1));
            names.push(format!("y{}", names.len()));
            in_parent.push(free_reduce(
                &rep[c].juxtapose(&Word::gen(g)).juxtapose(&rep[target].inverse()),
            ));
        }
    }

    let mut relators = Vec::with_capacity(p.relator_count() * d);
    for r in p.relators() {
        for c in 0..d {
            let mut x = c;
            let mut out = Vec::new();
            for &(g, e) in r.letters() {
                if e == 1 {
                    if let Some(k) = label[x][g] {
                        out.push((k, 1));
                    }
                    x = t.apply(x, (g, 1));
                } else {
                    let y = t.apply(x, (g, -1));
                    if let Some(k) = label[y][g] {
                        out.push((k, -1));
                    }
                    x = y;
                }
            }
            debug_assert_eq!(x, c);
            relators.push(Word::new(out));
        }
    }

    Ok(SubgroupPresentation {
        presentation: FinitePresentation::new(names, relators)?,
        generators_in_parent: in_parent,
        transversal: rep,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{abelianization, coset_enumerate, rs_counts, PermutationHom};

    #[test]
    fn free_rank_two_index_two() {
        let p = FinitePresentation::free(2);
        let hom = PermutationHom::new(vec![vec![1, 0], vec![1, 0]]).unwrap();
        let t = coset_enumerate(&p, &hom).unwrap();
        let sp = reidemeister_schreier(&p, &t).unwrap();
        assert_eq!(sp.presentation.generator_count(), 3);
        assert_eq!(sp.presentation.relator_count(), 0);
    }

    #[test]
    fn cyclic_index_three() {
        let p = FinitePresentation::free(1);
        let hom = PermutationHom::new(vec![vec![1, 2, 0]]).unwrap();
        let t = coset_enumerate(&p, &hom).unwrap();
        let sp = reidemeister_schreier(&p, &t).unwrap();
        assert_eq!(sp.presentation.generator_count(), 1);
        assert_eq!(sp.generators_in_parent, vec![Word::power(0, 3)]);
    }

    #[test]
    fn bs22_kernel() {
        let p = FinitePresentation::baumslag_solitar(2, 2);
        let hom = PermutationHom::new(vec![vec![1, 0, 2, 3], vec![0, 1, 3, 2]]).unwrap();
        let t = coset_enumerate(&p, &hom).unwrap();
        let sp = reidemeister_schreier(&p, &t).unwrap();
        assert_eq!(
            (sp.presentation.generator_count() as u64, sp.presentation.relator_count() as u64),
            rs_counts(2, 1, 4)
        );
        let ab = abelianization(&sp.presentation);
        assert_eq!(ab.free_rank, 4);
        assert!(ab.torsion.is_empty());
        // Every Schreier generator lies in the kernel.
        for w in &sp.generators_in_parent {
            assert_eq!(t.apply_word(0, w), 0);
        }
    }

    #[test]
    fn table_must_match_presentation() {
        let p = FinitePresentation::with_rank(1, vec![Word::power(0, 2)]).unwrap();
        let t = CosetTable::new(vec![vec![1, 2, 0]]).unwrap();
        assert!(reidemeister_schreier(&p, &t).is_err());
    }
}
