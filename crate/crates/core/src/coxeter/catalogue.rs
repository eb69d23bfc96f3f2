//! Named Coxeter diagrams.

use super::CoxeterMatrix;

fn path(labels: &[Option<u32>]) -> CoxeterMatrix {
    let edges: Vec<_> = labels.iter().enumerate().map(|(i, &v)| (i, i + 1, v)).collect();
    CoxeterMatrix::from_edges(labels.len() + 1, &edges)
}

pub fn a(n: usize) -> CoxeterMatrix {
    assert!(n >= 1);
    path(&vec![Some(3); n - 1])
}

pub fn b(n: usize) -> CoxeterMatrix {
    assert!(n >= 2);
    let mut l = vec![Some(3); n - 1];
    l[n - 2] = Some(4);
    path(&l)
}

pub fn d(n: usize) -> CoxeterMatrix {
    assert!(n >= 4);
    let mut edges: Vec<_> = (0..n - 2).map(|i| (i, i + 1, Some(3))).collect();
    edges.push((n - 3, n - 1, Some(3)));
    CoxeterMatrix::from_edges(n, &edges)
}

/// Star with three arms of `p`, `q`, `r` nodes around a centre node.
pub fn t_shape(p: usize, q: usize, r: usize) -> CoxeterMatrix {
    let n = 1 + p + q + r;
    let mut edges = Vec::new();
    let mut next = 1;
    for arm in [p, q, r] {
        let mut prev = 0;
        for _ in 0..arm {
            edges.push((prev, next, Some(3)));
            prev = next;
            next += 1;
        }
    }
    CoxeterMatrix::from_edges(n, &edges)
}

pub fn e(n: usize) -> CoxeterMatrix {
    assert!((6..=8).contains(&n));
    t_shape(1, 2, n - 4)
}

pub fn f4() -> CoxeterMatrix {
    path(&[Some(3), Some(4), Some(3)])
}

pub fn h3() -> CoxeterMatrix {
    path(&[Some(5), Some(3)])
}

pub fn h4() -> CoxeterMatrix {
    path(&[Some(5), Some(3), Some(3)])
}

pub fn i2(m: u32) -> CoxeterMatrix {
    path(&[Some(m)])
}

pub fn affine_a1() -> CoxeterMatrix {
    path(&[None])
}

pub fn affine_a(n: usize) -> CoxeterMatrix {
    assert!(n >= 2);
    let edges: Vec<_> = (0..=n).map(|i| (i, (i + 1) % (n + 1), Some(3))).collect();
    CoxeterMatrix::from_edges(n + 1, &edges)
}

pub fn affine_c2() -> CoxeterMatrix {
    path(&[Some(4), Some(4)])
}

pub fn affine_g2() -> CoxeterMatrix {
    path(&[Some(6), Some(3)])
}

pub fn affine_f4() -> CoxeterMatrix {
    path(&[Some(3), Some(3), Some(4), Some(3)])
}

pub fn affine_e8() -> CoxeterMatrix {
    t_shape(1, 2, 5)
}

/// Triangle group diagram with labels `a, b, c` on its three edges.
pub fn triangle(a: u32, b: u32, c: u32) -> CoxeterMatrix {
    CoxeterMatrix::from_edges(3, &[(0, 1, Some(a)), (1, 2, Some(b)), (0, 2, Some(c))])
}

/// Every finite irreducible type up to rank 8 plus `I2(m)` for `m <= 12`.
pub fn finite_irreducible() -> Vec<(String, CoxeterMatrix)> {
    let mut out = Vec::new();
    for n in 1..=8 {
        out.push((format!("A{n}"), a(n)));
    }
    for n in 2..=8 {
        out.push((format!("B{n}"), b(n)));
    }
    for n in 4..=8 {
        out.push((format!("D{n}"), d(n)));
    }
    for n in 6..=8 {
        out.push((format!("E{n}"), e(n)));
    }
    out.push(("F4".into(), f4()));
    out.push(("H3".into(), h3()));
    out.push(("H4".into(), h4()));
    for m in 3..=12 {
        out.push((format!("I2({m})"), i2(m)));
    }
    out
}

pub fn affine_irreducible() -> Vec<(String, CoxeterMatrix)> {
    vec![
        ("~A1".into(), affine_a1()),
        ("~A2".into(), affine_a(2)),
        ("~C2".into(), affine_c2()),
        ("~G2".into(), affine_g2()),
        ("~F4".into(), affine_f4()),
        ("~E8".into(), affine_e8()),
    ]
}

pub fn by_name(name: &str) -> Option<CoxeterMatrix> {
    finite_irreducible()
        .into_iter()
        .chain(affine_irreducible())
        .find(|(n, _)| n == name)
        .map(|(_, m)| m)
}
