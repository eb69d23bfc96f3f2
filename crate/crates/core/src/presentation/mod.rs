//! Free-group words, finite presentations and their JSON form.

mod coset;
mod rs;
mod snf;

pub use coset::{coset_enumerate, coset_enumerate_with_limit, CosetTable, PermutationHom, DEFAULT_COSET_LIMIT};
pub use rs::{reidemeister_schreier, SubgroupPresentation};
pub use snf::{abelianization, smith_diagonal, AbelianInvariants};

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("zero exponent in `{0}`")]
    ZeroExponent(String),
    #[error("malformed token `{0}`")]
    BadToken(String),
    #[error("generator index {0} out of range")]
    GeneratorOutOfRange(usize),
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("relator {0} does not map to the identity")]
    RelatorNotKilled(usize),
    #[error("coset enumeration exceeded the limit of {0} cosets")]
    BoundExceeded(usize),
    #[error("invalid coset table: {0}")]
    InvalidTable(String),
    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),
    #[error("json: {0}")]
    Json(String),
}

/// One letter: generator index and exponent sign (`1` or `-1`).
pub type Letter = (usize, i8);

#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    /// Builds a word as given; no reduction.
    pub fn new(letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|&(_, e)| e == 1 || e == -1));
        Word(letters)
    }

    pub fn gen(g: usize) -> Self {
        Word(vec![(g, 1)])
    }

    /// `g^e` as `|e|` letters.
    pub fn power(g: usize, e: i64) -> Self {
        let sign = if e < 0 { -1 } else { 1 };
        Word(vec![(g, sign); e.unsigned_abs() as usize])
    }

    /// Product of syllables `g^e`, freely reduced.
    pub fn from_syllables(syl: &[(usize, i64)]) -> Self {
        let mut w = Word::identity();
        for &(g, e) in syl {
            w = w.concat(&Word::power(g, e));
        }
        w
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&(g, e)| (g, -e)).collect())
    }

    /// Freely reduced product.
    pub fn concat(&self, o: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        free_reduce(&Word(v))
    }

    /// Concatenation without reduction.
    pub fn juxtapose(&self, o: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Word(v)
    }

    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.concat(b).concat(&a.inverse()).concat(&b.inverse())
    }

    pub fn exponent_sum(&self, g: usize) -> i64 {
        self.0.iter().filter(|l| l.0 == g).map(|l| l.1 as i64).sum()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|l| l.0).max()
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|p| !(p[0].0 == p[1].0 && p[0].1 == -p[1].1))
    }

    /// Cyclic rotation by `k` letters.
    pub fn rotate(&self, k: usize) -> Word {
        let mut v = self.0.clone();
        if !v.is_empty() {
            let k = k % v.len();
            v.rotate_left(k);
        }
        Word(v)
    }

    /// Rewrites each generator `g` by the word `images[g]`.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut out = Vec::new();
        for &(g, e) in &self.0 {
            if e > 0 {
                out.extend_from_slice(&images[g].0);
            } else {
                out.extend_from_slice(&images[g].inverse().0);
            }
        }
        free_reduce(&Word(out))
    }

    /// Renders with the given generator names as space-separated syllables.
    pub fn render(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let (g, e) = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == (g, e) {
                j += 1;
            }
            let k = (j - i) as i64 * e as i64;
            let name = names.get(g).cloned().unwrap_or_else(|| format!("x{g}"));
            parts.push(if k == 1 { name } else { format!("{name}^{k}") });
            i = j;
        }
        parts.join(" ")
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&[]))
    }
}

/// The unique freely reduced word equal to `w`.
pub fn free_reduce(w: &Word) -> Word {
    let mut out: Vec<Letter> = Vec::with_capacity(w.0.len());
    for &l in &w.0 {
        match out.last() {
            Some(&(g, e)) if g == l.0 && e == -l.1 => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    Word(out)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinitePresentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl FinitePresentation {
    /// Relators are freely reduced on ingestion.
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, PresentationError> {
        let mut seen = std::collections::HashSet::new();
        for g in &generators {
            if !seen.insert(g) {
                return Err(PresentationError::DuplicateGenerator(g.clone()));
            }
        }
        for r in &relators {
            if let Some(g) = r.max_generator() {
                if g >= generators.len() {
                    return Err(PresentationError::GeneratorOutOfRange(g));
                }
            }
        }
        let relators = relators.iter().map(free_reduce).collect();
        Ok(FinitePresentation { generators, relators })
    }

    /// Generators named `x0, x1, ...`.
    pub fn with_rank(a: usize, relators: Vec<Word>) -> Result<Self, PresentationError> {
        FinitePresentation::new((0..a).map(|i| format!("x{i}")).collect(), relators)
    }

    pub fn free(a: usize) -> Self {
        FinitePresentation::with_rank(a, Vec::new()).unwrap()
    }

    /// `<s, t | t s^m t^-1 s^-n>`
    pub fn baumslag_solitar(m: i64, n: i64) -> Self {
        let r = Word::from_syllables(&[(1, 1), (0, m), (1, -1), (0, -n)]);
        FinitePresentation::new(vec!["s".into(), "t".into()], vec![r]).unwrap()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn relator_count(&self) -> usize {
        self.relators.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Parses a whitespace-separated `name^exp` word over these generators.
    pub fn parse_word(&self, text: &str) -> Result<Word, PresentationError> {
        parse_word(text, &self.generators)
    }

    pub fn from_json(text: &str) -> Result<Self, PresentationError> {
        let raw: PresentationJson =
            serde_json::from_str(text).map_err(|e| PresentationError::Json(e.to_string()))?;
        let relators = raw
            .relators
            .iter()
            .map(|r| parse_word(r, &raw.generators))
            .collect::<Result<Vec<_>, _>>()?;
        FinitePresentation::new(raw.generators, relators)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "generators": self.generators,
            "relators": self.relators.iter().map(|r| self.render(r)).collect::<Vec<_>>(),
        })
    }

    pub fn render(&self, w: &Word) -> String {
        w.render(&self.generators)
    }
}

#[derive(Deserialize, Serialize)]
struct PresentationJson {
    generators: Vec<String>,
    #[serde(default)]
    relators: Vec<String>,
}

pub fn parse_word(text: &str, names: &[String]) -> Result<Word, PresentationError> {
    let index: HashMap<&str, usize> = names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
    let mut syl = Vec::new();
    for tok in text.split_whitespace() {
        if tok == "1" {
            continue;
        }
        let (name, exp) = match tok.split_once('^') {
            None => (tok, 1i64),
            Some((n, e)) => {
                let e: i64 = e.parse().map_err(|_| PresentationError::BadToken(tok.into()))?;
                if e == 0 {
                    return Err(PresentationError::ZeroExponent(tok.into()));
                }
                (n, e)
            }
        };
        let g = *index
            .get(name)
            .ok_or_else(|| PresentationError::UnknownGenerator(name.into()))?;
        syl.push((g, exp));
    }
    Ok(Word::from_syllables(&syl))
}

/// `a - b` for this presentation.
pub fn deficiency_count(p: &FinitePresentation) -> i64 {
    p.generator_count() as i64 - p.relator_count() as i64
}

/// Generator and relator counts of an index-`d` subgroup presentation
/// obtained by Reidemeister-Schreier from `a` generators and `b` relators.
pub fn rs_counts(a: u64, b: u64, d: u64) -> (u64, u64) {
    ((a - 1) * d + 1, b * d)
}

/// The deficiency bound `k + l - k l` for the direct product of free
/// groups of ranks `k` and `l`.
pub fn kunneth_bound(k: i64, l: i64) -> i64 {
    k + l - k * l
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[(usize, i8)]) -> Word {
        Word::new(v.to_vec())
    }

    #[test]
    fn free_reduce_examples() {
        // s t t^-1 s -> s s
        assert_eq!(free_reduce(&w(&[(0, 1), (1, 1), (1, -1), (0, 1)])), w(&[(0, 1), (0, 1)]));
        assert_eq!(free_reduce(&Word::identity()), Word::identity());
        assert_eq!(free_reduce(&w(&[(0, -1), (0, 1), (1, 1)])), w(&[(1, 1)]));
    }

    #[test]
    fn free_reduce_exhaustive_to_length_12() {
        let letters = [(0, 1), (0, -1), (1, 1), (1, -1)];
        let mut buf = Vec::with_capacity(12);
        for len in 0..=12u32 {
            for code in 0..4u64.pow(len) {
                buf.clear();
                let mut c = code;
                for _ in 0..len {
                    buf.push(letters[(c % 4) as usize]);
                    c /= 4;
                }
                let v = Word::new(buf.clone());
                let r = free_reduce(&v);
                assert!(r.len() <= v.len());
                assert!(r.is_reduced());
                assert_eq!(free_reduce(&r), r);
            }
        }
    }

    #[test]
    fn parse_and_render() {
        let p = FinitePresentation::from_json(r#"{"generators":["s","t"],"relators":["t s^2 t^-1 s^-2"]}"#).unwrap();
        assert_eq!(p.relators()[0], Word::from_syllables(&[(1, 1), (0, 2), (1, -1), (0, -2)]));
        assert_eq!(p.render(&p.relators()[0]), "t s^2 t^-1 s^-2");
        assert_eq!(deficiency_count(&p), 1);
    }

    #[test]
    fn parser_rejects_bad_input() {
        let names = vec!["a".to_string()];
        assert_eq!(parse_word("a b", &names), Err(PresentationError::UnknownGenerator("b".into())));
        assert_eq!(parse_word("a^0", &names), Err(PresentationError::ZeroExponent("a^0".into())));
        assert!(matches!(parse_word("a^x", &names), Err(PresentationError::BadToken(_))));
    }

    #[test]
    fn deficiency_examples() {
        assert_eq!(deficiency_count(&FinitePresentation::baumslag_solitar(2, 2)), 1);
        assert_eq!(deficiency_count(&FinitePresentation::free(4)), 4);
        let c5 = FinitePresentation::with_rank(1, vec![Word::power(0, 5)]).unwrap();
        assert_eq!(deficiency_count(&c5), 0);
    }

    #[test]
    fn rs_count_examples() {
        assert_eq!(rs_counts(2, 1, 4), (5, 4));
        assert_eq!(rs_counts(1, 0, 3), (1, 0));
        for d in 1..20 {
            for a in 1..6u64 {
                let (ab, bb) = rs_counts(a, a - 1, d);
                assert_eq!(ab as i64 - bb as i64, 1);
            }
        }
    }
}
