//! The finite-index subgroup `Z x F_(2m-1)` of `BS(m, ±m)` and its checks.

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::presentation::{abelianization, coset_enumerate, reidemeister_schreier, PermutationHom, Word};

use super::{britton_reduce, BsError, BsGroup, S, T};

#[derive(Clone, Debug)]
pub struct SubgroupWitness {
    pub m: i64,
    pub eta: i64,
    /// `s^m`, central in the subgroup.
    pub zs_generator: Word,
    /// `s^i t s^-i` for `0 <= i < m`, over `{s, t}`.
    pub t_words: Vec<Word>,
    /// Words over the letters `x_i = t_words[i]`: the Schreier basis of the
    /// even-length subgroup for the transversal `{1, x0}`, ordered
    /// `x_i x0^-1 (i >= 1)` then `x0 x_i (i >= 0)`.
    pub fii_basis: Vec<Word>,
    /// `π` as a permutation action of degree `m + 2`: `s` cycles the first
    /// `m` points and `t` swaps the last two.
    pub pi: PermutationHom,
}

pub fn witness_subgroup(m: i64, eta: i64) -> Result<SubgroupWitness, BsError> {
    if m < 2 {
        return Err(BsError::SmallModulus(m));
    }
    let mu = m as usize;
    let t_words = (0..m).map(|i| Word::from_syllables(&[(S, i), (T, 1), (S, -i)])).collect();
    let mut fii_basis = Vec::with_capacity(2 * mu - 1);
    for i in 1..mu {
        fii_basis.push(Word::new(vec![(i, 1), (0, -1)]));
    }
    for i in 0..mu {
        fii_basis.push(Word::new(vec![(0, 1), (i, 1)]));
    }
    let s_perm: Vec<usize> = (0..mu).map(|i| (i + 1) % mu).chain([mu, mu + 1]).collect();
    let t_perm: Vec<usize> = (0..mu).chain([mu + 1, mu]).collect();
    Ok(SubgroupWitness {
        m,
        eta,
        zs_generator: Word::power(S, m),
        t_words,
        fii_basis,
        pi: PermutationHom::new(vec![s_perm, t_perm]).expect("permutations"),
    })
}

impl SubgroupWitness {
    pub fn group(&self) -> BsGroup {
        BsGroup::new(self.m, self.eta * self.m).expect("m >= 2")
    }

    /// Expands a word over `T` into `{s, t}`.
    pub fn expand(&self, w: &Word) -> Word {
        w.substitute(&self.t_words)
    }

    pub fn fii_in_parent(&self) -> Vec<Word> {
        self.fii_basis.iter().map(|w| self.expand(w)).collect()
    }

    pub fn to_json(&self) -> Value {
        let st = ["s".to_string(), "t".to_string()];
        let xs: Vec<String> = (0..self.m).map(|i| format!("x{i}")).collect();
        json!({
            "zs_generator": self.zs_generator.render(&st),
            "T": self.t_words.iter().map(|w| w.render(&st)).collect::<Vec<_>>(),
            "fii_basis": self.fii_basis.iter().map(|w| w.render(&xs)).collect::<Vec<_>>(),
            "fii_basis_in_s_t": self.fii_in_parent().iter().map(|w| w.render(&st)).collect::<Vec<_>>(),
            "pi": {"s": "(c, 1)", "t": "(1, d)", "target": format!("C_{} x C_2", self.m)},
            "index": 2 * self.m,
        })
    }
}

/// `(s-exponent mod |m|, t-exponent mod 2)`; the identity is `(0, 0)`.
pub fn pi_image(b: &BsGroup, w: &Word) -> Result<(i64, i64), BsError> {
    if b.m().abs() != b.n().abs() {
        return Err(BsError::UnequalModuli(b.m(), b.n()));
    }
    Ok((w.exponent_sum(S).rem_euclid(b.m().abs()), w.exponent_sum(T).rem_euclid(2)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct WitnessReport {
    pub checks: Vec<Check>,
    pub index: usize,
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
    /// Nontrivial reduced words over `T` examined by the freeness check.
    pub words_checked: usize,
}

impl WitnessReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "checks": self.checks.iter().map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail})).collect::<Vec<_>>(),
            "index": self.index,
            "abelianization": {"free_rank": self.free_rank, "torsion": self.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>()},
            "words_checked": self.words_checked,
        })
    }
}

/// Runs the five checks: commutation with `s^m`, kernel membership, index,
/// bounded freeness of the subgroup generated by `T`, and the kernel's
/// abelianization.
pub fn verify_witness(b: &BsGroup, w: &SubgroupWitness, bound: usize) -> Result<WitnessReport, BsError> {
    if b.m().abs() != b.n().abs() {
        return Err(BsError::UnequalModuli(b.m(), b.n()));
    }
    if b.m().abs() < 2 {
        return Err(BsError::SmallModulus(b.m()));
    }
    let st = ["s".to_string(), "t".to_string()];
    let m = b.m().abs();
    let mut checks = Vec::new();

    let fii = w.fii_in_parent();
    let bad = fii
        .iter()
        .find(|x| !britton_reduce(b, &Word::commutator(&w.zs_generator, x)).is_identity());
    checks.push(Check {
        name: "commutes",
        passed: bad.is_none(),
        detail: bad.map_or("every basis word commutes with s^m".into(), |x| {
            format!("[s^m, {}] is not trivial", x.render(&st))
        }),
    });

    let gens: Vec<&Word> = std::iter::once(&w.zs_generator).chain(&fii).collect();
    let bad = gens.iter().find(|x| pi_image(b, x) != Ok((0, 0)));
    checks.push(Check {
        name: "in-kernel",
        passed: bad.is_none(),
        detail: bad.map_or("all generators map to the identity".into(), |x| {
            format!("pi({}) = {:?}", x.render(&st), pi_image(b, x).ok())
        }),
    });

    let p = b.presentation();
    let (index, free_rank, torsion) = match coset_enumerate(&p, &w.pi) {
        Ok(table) => {
            let sub = reidemeister_schreier(&p, &table).expect("table validated");
            let ab = abelianization(&sub.presentation);
            (table.index(), ab.free_rank, ab.torsion)
        }
        Err(e) => {
            checks.push(Check { name: "index", passed: false, detail: e.to_string() });
            (0, 0, Vec::new())
        }
    };
    if index > 0 {
        checks.push(Check {
            name: "index",
            passed: index as i64 == 2 * m,
            detail: format!("index {index}, expected {}", 2 * m),
        });
    }

    let (words_checked, counterexample) = bounded_freeness(b, w, bound);
    checks.push(Check {
        name: "free",
        passed: counterexample.is_none(),
        detail: match &counterexample {
            None => format!("{words_checked} reduced words of length <= {bound} over T are nontrivial"),
            Some(x) => {
                let xs: Vec<String> = (0..m).map(|i| format!("x{i}")).collect();
                format!("{} is trivial in the group", x.render(&xs))
            }
        },
    });

    checks.push(Check {
        name: "abelianization",
        passed: index > 0 && free_rank as i64 == 2 * m && torsion.is_empty(),
        detail: format!("free rank {free_rank}, torsion {:?}, expected free rank {}", torsion, 2 * m),
    });

    Ok(WitnessReport { checks, index, free_rank, torsion, words_checked })
}

/// Depth-first over freely reduced words in the letters of `T`.
fn bounded_freeness(b: &BsGroup, w: &SubgroupWitness, bound: usize) -> (usize, Option<Word>) {
    let k = w.t_words.len();
    let mut count = 0;
    let mut stack: Vec<Vec<(usize, i8)>> = vec![Vec::new()];
    while let Some(cur) = stack.pop() {
        if !cur.is_empty() {
            count += 1;
            let word = Word::new(cur.clone());
            if britton_reduce(b, &w.expand(&word)).is_identity() {
                return (count, Some(word));
            }
        }
        if cur.len() == bound {
            continue;
        }
        for g in 0..k {
            for e in [1i8, -1] {
                if cur.last() == Some(&(g, -e)) {
                    continue;
                }
                let mut next = cur.clone();
                next.push((g, e));
                stack.push(next);
            }
        }
    }
    (count, None)
}
