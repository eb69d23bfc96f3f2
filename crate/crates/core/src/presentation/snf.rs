use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::FinitePresentation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    /// Invariant factors `>= 2`, each dividing the next.
    pub torsion: Vec<BigInt>,
}

/// Nonzero diagonal entries of the Smith normal form, positive and forming
/// a divisibility chain.
pub fn smith_diagonal(m: &[Vec<BigInt>], cols: usize) -> Vec<BigInt> {
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let rows = a.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..cols {
                    let d = &q * &a[t][j];
                    a[i][j] -= d;
                }
                if !a[i][t].is_zero() {
                    dirty = true;
                    if a[i][t].abs() < a[t][t].abs() {
                        a.swap(t, i);
                    }
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let d = &q * &row[t];
                    row[j] -= d;
                }
                if !a[t][j].is_zero() {
                    dirty = true;
                    if a[t][j].abs() < a[t][t].abs() {
                        for row in a.iter_mut() {
                            row.swap(t, j);
                        }
                    }
                }
            }
            if dirty {
                continue;
            }
            // divisibility of the remaining block
            let p = a[t][t].clone();
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&a[i][j] % &p).is_zero()));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

/// Abelian invariants from the exponent-sum matrix of the relators.
pub fn abelianization(p: &FinitePresentation) -> AbelianInvariants {
    let a = p.generator_count();
    let m: Vec<Vec<BigInt>> = p
        .relators()
        .iter()
        .map(|r| (0..a).map(|g| BigInt::from(r.exponent_sum(g))).collect())
        .collect();
    let diag = smith_diagonal(&m, a);
    AbelianInvariants {
        free_rank: a - diag.len(),
        torsion: diag.into_iter().filter(|d| !d.is_one()).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Word;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    #[test]
    fn known_forms() {
        assert_eq!(
            smith_diagonal(&big(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]), 3),
            vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]
        );
        assert_eq!(smith_diagonal(&big(&[&[4, 6]]), 2), vec![BigInt::from(2)]);
        assert!(smith_diagonal(&big(&[&[0, 0]]), 2).is_empty());
    }

    #[test]
    fn examples() {
        let c4 = FinitePresentation::with_rank(1, vec![Word::power(0, 4)]).unwrap();
        assert_eq!(
            abelianization(&c4),
            AbelianInvariants { free_rank: 0, torsion: vec![BigInt::from(4)] }
        );
        let bs23 = FinitePresentation::baumslag_solitar(2, 3);
        assert_eq!(abelianization(&bs23), AbelianInvariants { free_rank: 1, torsion: vec![] });
    }
}
