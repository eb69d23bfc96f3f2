//! Test oracles written independently of the library code.

#![allow(dead_code)]

use rand::Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Syl {
    S(i64),
    T(i8),
}

fn tidy(w: &mut Vec<Syl>) {
    let mut out: Vec<Syl> = Vec::with_capacity(w.len());
    for &x in w.iter() {
        match (out.last_mut(), x) {
            (Some(Syl::S(a)), Syl::S(b)) => *a += b,
            _ => out.push(x),
        }
        if out.last() == Some(&Syl::S(0)) {
            out.pop();
        }
    }
    *w = out;
}

/// Positions `i` where `w[i..]` starts a pinch `t^e s^k t^-e`.
fn pinches(w: &[Syl], m: i64, n: i64) -> Vec<usize> {
    let mut out = Vec::new();
    for i in 0..w.len() {
        let Syl::T(e) = w[i] else { continue };
        let base = if e > 0 { m } else { n };
        match (w.get(i + 1), w.get(i + 2)) {
            (Some(Syl::T(f)), _) if *f == -e => out.push(i),
            (Some(Syl::S(k)), Some(Syl::T(f))) if *f == -e && k % base == 0 => out.push(i),
            _ => {}
        }
    }
    out
}

fn apply_pinch(w: &mut Vec<Syl>, i: usize, m: i64, n: i64) {
    let Syl::T(e) = w[i] else { unreachable!() };
    let (from, to) = if e > 0 { (m, n) } else { (n, m) };
    let (k, len) = match w[i + 1] {
        Syl::S(k) => (k, 3),
        Syl::T(_) => (0, 2),
    };
    w.splice(i..i + len, [Syl::S(k / from * to)]);
    tidy(w);
}

/// Britton normal form of a word in `BS(m, n)` given as `(generator, ±1)`
/// letters with `0 = s`, `1 = t`. Pinches are removed in an order chosen by
/// `pick` from the list of available positions.
pub fn britton_oracle(
    m: i64,
    n: i64,
    letters: &[(usize, i8)],
    mut pick: impl FnMut(usize) -> usize,
) -> (i64, Vec<(i8, i64)>) {
    let mut w: Vec<Syl> = letters
        .iter()
        .map(|&(g, e)| if g == 0 { Syl::S(e as i64) } else { Syl::T(e) })
        .collect();
    tidy(&mut w);
    loop {
        let p = pinches(&w, m, n);
        if p.is_empty() {
            break;
        }
        let i = p[pick(p.len())];
        apply_pinch(&mut w, i, m, n);
    }
    // split into head and (t-letter, following s-exponent) pairs
    let mut head = 0;
    let mut tail: Vec<(i8, i64)> = Vec::new();
    for x in w {
        match x {
            Syl::S(k) => match tail.last_mut() {
                Some(t) => t.1 += k,
                None => head += k,
            },
            Syl::T(e) => tail.push((e, 0)),
        }
    }
    // t s^(q m + r) = s^(q n) t s^r and t^-1 s^(q n + r) = s^(q m) t^-1 s^r
    for i in (0..tail.len()).rev() {
        let (e, k) = tail[i];
        let (from, to) = if e > 0 { (m, n) } else { (n, m) };
        let r = k.rem_euclid(from.abs());
        let q = (k - r) / from;
        tail[i].1 = r;
        if i == 0 {
            head += q * to;
        } else {
            tail[i - 1].1 += q * to;
        }
    }
    (head, tail)
}

pub fn random_pick<R: Rng>(rng: &mut R) -> impl FnMut(usize) -> usize + '_ {
    move |len| rng.gen_range(0..len)
}

/// Every word of length exactly `len` over `{s, s^-1, t, t^-1}`.
pub fn all_words(len: usize) -> Vec<Vec<(usize, i8)>> {
    const LETTERS: [(usize, i8); 4] = [(0, 1), (0, -1), (1, 1), (1, -1)];
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                LETTERS.iter().map(move |&l| {
                    let mut x = w.clone();
                    x.push(l);
                    x
                })
            })
            .collect();
    }
    out
}

/// Fixed seed, no persistence files.
pub fn config(cases: u32) -> proptest::test_runner::Config {
    proptest::test_runner::Config {
        cases,
        rng_seed: proptest::test_runner::RngSeed::Fixed(0x5eed),
        failure_persistence: None,
        ..Default::default()
    }
}
