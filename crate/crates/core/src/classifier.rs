//! Rules engine mapping group descriptors to presentability verdicts.
//!
//! Structured kinds (Coxeter, Baumslag-Solitar, free products, direct
//! products) are decided directly. Flagged descriptors go through the flag
//! rules, which are all evaluated; their trace order is [`RULES`] order.
//! A positive and an unqualified negative conclusion together are an
//! [`ClassifyError::InconsistentInput`]. A qualified negative only excludes
//! finitely generated factors, so a positive conclusion overrides it.

use std::fmt;

use serde::Deserialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::bs::bs_presentable;
use crate::cite;
use crate::coxeter::{coxeter_presentable, CoxeterError, CoxeterMatrix};
use crate::presentation::{deficiency_count, FinitePresentation};
use crate::verdict::{Answer, Verdict, QUALIFIER_FG};

/// Rule ids in priority order: structural kinds, then the flag rules.
pub const RULES: [&str; 12] = [
    "coxeter",
    "bs",
    "free-product",
    "direct-product",
    "infinite-centre",
    "ends",
    "hyperbolic",
    "seifert",
    "cd-two",
    "deficiency",
    "simple",
    "schreier",
];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("inconsistent input: {first} conflicts with {second}")]
    InconsistentInput { first: String, second: String },
    #[error("delegated procedure failed: {0}")]
    Delegate(String),
}

fn conflict(first: &str, second: &str) -> ClassifyError {
    ClassifyError::InconsistentInput { first: first.into(), second: second.into() }
}

fn invalid(msg: impl Into<String>) -> ClassifyError {
    ClassifyError::InvalidDescriptor(msg.into())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ends {
    Zero,
    One,
    Two,
    Infinite,
}

impl<'de> Deserialize<'de> for Ends {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match Value::deserialize(d)? {
            Value::Number(n) if n.as_u64() == Some(0) => Ok(Ends::Zero),
            Value::Number(n) if n.as_u64() == Some(1) => Ok(Ends::One),
            Value::Number(n) if n.as_u64() == Some(2) => Ok(Ends::Two),
            Value::String(s) if s == "inf" => Ok(Ends::Infinite),
            other => Err(serde::de::Error::custom(format!("ends must be 0, 1, 2 or \"inf\", got {other}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Centre {
    Finite,
    Infinite,
}

/// A finite-index subgroup the group is asserted to contain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VirtualForm {
    /// `F_k`; `F_0` is trivial and `F_1 = Z`.
    Free(u32),
    /// `F_k x F_l` with `k, l >= 1`.
    ProductOfFree([u32; 2]),
}

impl VirtualForm {
    fn is_finite(self) -> bool {
        self == VirtualForm::Free(0)
    }

    /// Virtually `Z` or virtually `F_k x F_l` with `k, l >= 1`.
    fn is_cd_two_product(self) -> bool {
        matches!(self, VirtualForm::Free(1) | VirtualForm::ProductOfFree(_))
    }

    /// Virtually `Z` or virtually `F_k x Z`.
    fn is_free_times_z(self) -> bool {
        match self {
            VirtualForm::Free(k) => k == 1,
            VirtualForm::ProductOfFree([k, l]) => k == 1 || l == 1,
        }
    }
}

/// User-asserted properties; absent means unknown.
#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct Flags {
    pub infinite: Option<bool>,
    pub finitely_generated: Option<bool>,
    pub finitely_presented: Option<bool>,
    pub schreier: Option<bool>,
    pub ends: Option<Ends>,
    pub vcd: Option<u32>,
    pub deficiency: Option<i64>,
    pub l2_betti1_positive: Option<bool>,
    pub hyperbolic: Option<bool>,
    pub elementary: Option<bool>,
    pub simple: Option<bool>,
    pub centre: Option<Centre>,
    pub seifert: Option<bool>,
    /// Fundamental group of a connected 3-manifold.
    pub three_manifold: Option<bool>,
    pub virtually: Option<VirtualForm>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorOrder {
    Finite(u64),
    Infinite,
}

impl fmt::Display for FactorOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorOrder::Finite(n) => write!(f, "{n}"),
            FactorOrder::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Debug)]
pub enum GroupDescriptor {
    Coxeter(CoxeterMatrix),
    Bs(i64, i64),
    FreeProduct(Vec<FactorOrder>),
    DirectProductOfInfinite(usize),
    Flagged(Option<FinitePresentation>, Flags),
    /// A group containing the inner one with finite index.
    Virtually(Box<GroupDescriptor>),
}

impl GroupDescriptor {
    pub fn from_json(text: &str) -> Result<Self, ClassifyError> {
        let v: Value = serde_json::from_str(text).map_err(|e| invalid(e.to_string()))?;
        GroupDescriptor::from_value(&v)
    }

    /// `{"kind": "coxeter", "m": [[...]]}`, `{"kind": "bs", "m": 2, "n": 3}`,
    /// `{"kind": "free-product", "factors": [2, "inf"]}`,
    /// `{"kind": "direct-product", "count": 2}`,
    /// `{"kind": "flagged", "presentation": {...}, "flags": {...}}`,
    /// `{"kind": "virtually", "of": {...}}`.
    pub fn from_value(v: &Value) -> Result<Self, ClassifyError> {
        let kind = v.get("kind").and_then(Value::as_str).ok_or_else(|| invalid("missing string `kind`"))?;
        let int = |key: &str| {
            v.get(key).and_then(Value::as_i64).ok_or_else(|| invalid(format!("missing integer `{key}`")))
        };
        match kind {
            "coxeter" => CoxeterMatrix::from_value(v).map(GroupDescriptor::Coxeter).map_err(|e| invalid(e.to_string())),
            "bs" => Ok(GroupDescriptor::Bs(int("m")?, int("n")?)),
            "free-product" => {
                let raw = v.get("factors").and_then(Value::as_array).ok_or_else(|| invalid("missing array `factors`"))?;
                let factors = raw
                    .iter()
                    .map(|f| match f {
                        Value::String(s) if s == "inf" => Ok(FactorOrder::Infinite),
                        Value::Number(n) => match n.as_u64() {
                            Some(k) if k >= 2 => Ok(FactorOrder::Finite(k)),
                            _ => Err(invalid(format!("factor order must be >= 2, got {n}"))),
                        },
                        other => Err(invalid(format!("bad factor {other}"))),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if factors.len() < 2 {
                    return Err(invalid("a free product needs at least two factors"));
                }
                Ok(GroupDescriptor::FreeProduct(factors))
            }
            "direct-product" => {
                let count = int("count")?;
                if count < 2 {
                    return Err(invalid("a direct product needs at least two factors"));
                }
                Ok(GroupDescriptor::DirectProductOfInfinite(count as usize))
            }
            "flagged" => {
                let presentation = match v.get("presentation") {
                    None | Some(Value::Null) => None,
                    Some(p) => Some(FinitePresentation::from_json(&p.to_string()).map_err(|e| invalid(e.to_string()))?),
                };
                let flags = match v.get("flags") {
                    None => Flags::default(),
                    Some(f) => Flags::deserialize(f).map_err(|e| invalid(format!("flags: {e}")))?,
                };
                if let Some(VirtualForm::ProductOfFree([k, l])) = flags.virtually {
                    if k == 0 || l == 0 {
                        return Err(invalid("product-of-free ranks must be >= 1"));
                    }
                }
                Ok(GroupDescriptor::Flagged(presentation, flags))
            }
            "virtually" => {
                let inner = v.get("of").ok_or_else(|| invalid("missing `of`"))?;
                Ok(GroupDescriptor::Virtually(Box::new(GroupDescriptor::from_value(inner)?)))
            }
            other => Err(invalid(format!("unknown kind `{other}`"))),
        }
    }
}

pub fn classify(d: &GroupDescriptor) -> Result<Verdict, ClassifyError> {
    match d {
        GroupDescriptor::Coxeter(m) => coxeter_presentable(m).map_err(|e| match e {
            CoxeterError::InvalidMatrix(_) | CoxeterError::Json(_) => invalid(e.to_string()),
            _ => ClassifyError::Delegate(e.to_string()),
        }),
        GroupDescriptor::Bs(m, n) => bs_presentable(*m, *n).map_err(|e| invalid(e.to_string())),
        GroupDescriptor::FreeProduct(f) => Ok(free_product(f)),
        GroupDescriptor::DirectProductOfInfinite(k) => Ok(Verdict::yes(Some(json!({
            "kind": "direct-product",
            "factors": *k,
            "map": "identity",
        })))
        .cite("direct-product", cite::DIRECT_PRODUCT)),
        GroupDescriptor::Flagged(p, f) => classify_flags(p.as_ref(), f),
        GroupDescriptor::Virtually(inner) => {
            let v = classify(inner)?;
            Ok(match v.answer {
                Answer::Yes | Answer::No => {
                    let mut out = Verdict { trace: Vec::new(), ..v.clone() }.cite("finite-index", cite::FINITE_INDEX);
                    out.trace.extend(v.trace);
                    out
                }
                _ => v,
            })
        }
    }
}

fn free_product(f: &[FactorOrder]) -> Verdict {
    if f == [FactorOrder::Finite(2), FactorOrder::Finite(2)] {
        Verdict::yes(Some(json!({"kind": "finite-index", "index": 2, "subgroup": "Z = <ab>"})))
            .cite("free-product", cite::FREE_PRODUCT_DIHEDRAL)
    } else {
        Verdict::no().cite("free-product", cite::FREE_PRODUCT_NOT)
    }
}

/// Flags after folding in what a presentation witnesses, plus a lower
/// bound for the deficiency.
struct Facts {
    f: Flags,
    deficiency_at_least: Option<i64>,
}

fn facts(p: Option<&FinitePresentation>, flags: &Flags) -> Result<Facts, ClassifyError> {
    let mut f = flags.clone();
    let mut lb = f.deficiency;
    if let Some(p) = p {
        if f.finitely_presented == Some(false) {
            return Err(conflict("presentation", "finitely-presented=false"));
        }
        if f.finitely_generated == Some(false) {
            return Err(conflict("presentation", "finitely-generated=false"));
        }
        f.finitely_presented = Some(true);
        let count = deficiency_count(p);
        if f.deficiency.is_some_and(|d| d < count) {
            return Err(conflict("presentation", "deficiency"));
        }
        lb = Some(lb.map_or(count, |d| d.max(count)));
    }
    if f.finitely_presented == Some(true) {
        if f.finitely_generated == Some(false) {
            return Err(conflict("finitely-presented", "finitely-generated=false"));
        }
        f.finitely_generated = Some(true);
    }
    Ok(Facts { f, deficiency_at_least: lb })
}

/// Flags that force the group to be infinite, and flags that force it
/// to be finite.
fn infinite_witnesses(f: &Flags) -> Vec<&'static str> {
    let mut out = Vec::new();
    let mut note = |hit: bool, name| if hit { out.push(name) };
    note(f.infinite == Some(true), "infinite=true");
    note(matches!(f.ends, Some(Ends::One | Ends::Two | Ends::Infinite)), "ends");
    note(f.centre == Some(Centre::Infinite), "centre=infinite");
    note(f.l2_betti1_positive == Some(true), "l2-betti1-positive");
    note(f.hyperbolic == Some(true) && f.elementary == Some(false), "hyperbolic non-elementary");
    note(f.virtually.is_some_and(|v| !v.is_finite()), "virtually");
    out
}

fn finite_witnesses(f: &Flags) -> Vec<&'static str> {
    let mut out = Vec::new();
    let mut note = |hit: bool, name| if hit { out.push(name) };
    note(f.infinite == Some(false), "infinite=false");
    note(f.ends == Some(Ends::Zero), "ends=0");
    note(f.virtually.is_some_and(VirtualForm::is_finite), "virtually free(0)");
    out
}

fn check_consistency(facts: &Facts) -> Result<(), ClassifyError> {
    let f = &facts.f;
    if let (Some(a), Some(b)) = (infinite_witnesses(f).first(), finite_witnesses(f).first()) {
        return Err(conflict(a, b));
    }
    let centre_inf = f.centre == Some(Centre::Infinite);
    // Z and F_k x Z have vanishing first L2 Betti number, and deficiency at
    // least two forces it to be positive.
    let z_form = f.virtually.is_some_and(VirtualForm::is_free_times_z);
    let checks: [(bool, &str, &str); 5] = [
        (f.simple == Some(true) && centre_inf, "simple", "centre=infinite"),
        (f.hyperbolic == Some(true) && f.elementary == Some(false) && centre_inf, "hyperbolic non-elementary", "centre=infinite"),
        (f.seifert.is_some() && f.three_manifold == Some(false), "seifert", "three-manifold=false"),
        (f.l2_betti1_positive == Some(true) && z_form, "l2-betti1-positive", "virtually"),
        (facts.deficiency_at_least.is_some_and(|d| d >= 2) && z_form, "deficiency", "virtually"),
    ];
    match checks.iter().find(|c| c.0) {
        Some((_, a, b)) => Err(conflict(a, b)),
        None => Ok(()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Outcome {
    Yes,
    No,
    QualifiedNo,
}

#[derive(Clone, Copy, Debug)]
struct Fired {
    rule: &'static str,
    cite: &'static str,
    outcome: Outcome,
}

/// Each flag rule in [`RULES`] order; at most one conclusion per rule.
fn fire(facts: &Facts) -> Vec<Fired> {
    let f = &facts.f;
    let t = |x: Option<bool>| x == Some(true);
    let infinite = t(f.infinite);
    let fp = t(f.finitely_presented);
    let mut out = Vec::new();
    let mut push = |rule, cite, outcome| out.push(Fired { rule, cite, outcome });

    if f.centre == Some(Centre::Infinite) {
        push("infinite-centre", cite::INFINITE_CENTRE, Outcome::Yes);
    }
    match f.ends {
        Some(Ends::Two) => push("ends", cite::ENDS_TWO, Outcome::Yes),
        Some(Ends::Infinite) => push("ends", cite::ENDS_INFINITE, Outcome::No),
        _ => {}
    }
    if t(f.hyperbolic) {
        match f.elementary {
            Some(true) if infinite => push("hyperbolic", cite::ELEMENTARY_HYPERBOLIC, Outcome::Yes),
            Some(false) => push("hyperbolic", cite::HYPERBOLIC, Outcome::No),
            _ => {}
        }
    }
    match f.seifert {
        Some(true) if infinite => push("seifert", cite::SEIFERT, Outcome::Yes),
        Some(false) if infinite && fp && t(f.three_manifold) => push("seifert", cite::SEIFERT, Outcome::No),
        _ => {}
    }
    if let (true, true, Some(vcd), Some(v)) = (infinite, fp, f.vcd, f.virtually) {
        if vcd <= 2 {
            let o = if v.is_cd_two_product() { Outcome::Yes } else { Outcome::No };
            push("cd-two", cite::VCD_TWO, o);
        }
    }
    if t(f.l2_betti1_positive) {
        push("deficiency", cite::L2_BETTI, Outcome::No);
    } else if let (true, true, Some(d)) = (infinite, fp, facts.deficiency_at_least) {
        if d >= 2 {
            push("deficiency", cite::DEFICIENCY_L2, Outcome::No);
        } else if let (1, Some(v)) = (d, f.virtually) {
            let o = if v.is_free_times_z() { Outcome::Yes } else { Outcome::No };
            push("deficiency", cite::DEFICIENCY, o);
        }
    }
    if t(f.simple) && infinite {
        push("simple", cite::SIMPLE, Outcome::No);
    }
    if t(f.schreier) && t(f.finitely_generated) && f.ends == Some(Ends::One) {
        push("schreier", cite::SCHREIER_ONE_ENDED, Outcome::QualifiedNo);
    }
    out
}

fn classify_flags(p: Option<&FinitePresentation>, flags: &Flags) -> Result<Verdict, ClassifyError> {
    let mut facts = facts(p, flags)?;
    check_consistency(&facts)?;
    if !infinite_witnesses(&facts.f).is_empty() {
        facts.f.infinite = Some(true);
    }
    let f = &facts.f;
    if f.infinite == Some(false) || f.ends == Some(Ends::Zero) || f.virtually.is_some_and(VirtualForm::is_finite) {
        return Ok(Verdict::not_applicable().cite("finite-group", cite::FINITE_GROUP));
    }
    let fired = fire(&facts);
    let of = |o: Outcome| fired.iter().filter(move |x| x.outcome == o);
    if let (Some(y), Some(n)) = (of(Outcome::Yes).next(), of(Outcome::No).next()) {
        return Err(conflict(y.rule, n.rule));
    }
    let collect = |v: Verdict, keep: &dyn Fn(Outcome) -> bool| {
        fired.iter().filter(|x| keep(x.outcome)).fold(v, |v, x| v.cite(x.rule, x.cite))
    };
    Ok(if of(Outcome::Yes).next().is_some() {
        collect(Verdict::yes(None), &|o| o == Outcome::Yes)
    } else if of(Outcome::No).next().is_some() {
        collect(Verdict::no(), &|o| o != Outcome::Yes)
    } else if of(Outcome::QualifiedNo).next().is_some() {
        collect(Verdict::no().qualified(QUALIFIER_FG), &|o| o == Outcome::QualifiedNo)
    } else {
        Verdict::unknown()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flagged(flags: Value) -> GroupDescriptor {
        GroupDescriptor::from_value(&json!({"kind": "flagged", "flags": flags})).unwrap()
    }

    fn run(flags: Value) -> Result<Verdict, ClassifyError> {
        classify(&flagged(flags))
    }

    fn rules(v: &Verdict) -> Vec<&str> {
        v.trace.iter().map(|t| t.rule.as_str()).collect()
    }

    #[test]
    fn worked_examples() {
        assert_eq!(run(json!({"centre": "infinite"})).unwrap().answer, Answer::Yes);
        let fp = |f: Value| classify(&GroupDescriptor::from_value(&json!({"kind": "free-product", "factors": f})).unwrap()).unwrap();
        assert_eq!(fp(json!([2, 2])).answer, Answer::Yes);
        assert_eq!(fp(json!([2, 3])).answer, Answer::No);
        assert_eq!(fp(json!([2, 2, 2])).answer, Answer::No);
        assert_eq!(fp(json!(["inf", "inf"])).answer, Answer::No);
        let s = run(json!({"schreier": true, "finitely-generated": true, "ends": 1})).unwrap();
        assert_eq!((s.answer, s.qualifier.as_deref()), (Answer::No, Some(QUALIFIER_FG)));
        assert_eq!(run(json!({"seifert": true, "infinite": true})).unwrap().answer, Answer::Yes);
        assert_eq!(run(json!({"hyperbolic": true, "elementary": false})).unwrap().answer, Answer::No);
        assert_eq!(run(json!({})).unwrap().answer, Answer::Unknown);
    }

    #[test]
    fn flag_consistency() {
        let bad = [
            json!({"ends": 2, "infinite": false}),
            json!({"simple": true, "centre": "infinite"}),
            json!({"hyperbolic": true, "elementary": false, "centre": "infinite"}),
            json!({"centre": "infinite", "infinite": false}),
            json!({"finitely-presented": true, "finitely-generated": false}),
            json!({"hyperbolic": true, "elementary": false, "ends": 0}),
            json!({"l2-betti1-positive": true, "virtually": {"product-of-free": [1, 3]}}),
            json!({"deficiency": 2, "virtually": {"free": 1}}),
        ];
        for f in bad {
            assert!(matches!(run(f.clone()), Err(ClassifyError::InconsistentInput { .. })), "{f}");
        }
        assert!(GroupDescriptor::from_value(&json!({"kind": "flagged", "flags": {"colour": 1}})).is_err());
        assert!(GroupDescriptor::from_value(&json!({"kind": "flagged", "flags": {"ends": 3}})).is_err());
    }

    #[test]
    fn conflicting_rules_are_reported() {
        let e = run(json!({"centre": "infinite", "ends": "inf", "infinite": true})).unwrap_err();
        assert_eq!(e, conflict("infinite-centre", "ends"));
        // a qualified negative does not contradict a positive rule
        let v = run(json!({"centre": "infinite", "schreier": true, "finitely-generated": true, "ends": 1})).unwrap();
        assert_eq!((v.answer, rules(&v)), (Answer::Yes, vec!["infinite-centre"]));
    }

    #[test]
    fn finite_groups_are_not_applicable() {
        for f in [json!({"infinite": false}), json!({"ends": 0}), json!({"virtually": {"free": 0}})] {
            assert_eq!(run(f).unwrap().answer, Answer::NotApplicable);
        }
    }

    // For each flag rule: a minimal firing flag set, and each flag removed
    // in turn stops the rule from firing.
    #[test]
    fn rule_hypotheses_are_all_needed() {
        let cases = [
            ("infinite-centre", json!({"centre": "infinite"})),
            ("ends", json!({"ends": 2})),
            ("hyperbolic", json!({"hyperbolic": true, "elementary": false})),
            ("hyperbolic", json!({"hyperbolic": true, "elementary": true, "infinite": true})),
            ("seifert", json!({"seifert": true, "infinite": true})),
            ("seifert", json!({"seifert": false, "three-manifold": true, "infinite": true, "finitely-presented": true})),
            ("cd-two", json!({"vcd": 2, "finitely-presented": true, "virtually": {"product-of-free": [2, 3]}})),
            ("deficiency", json!({"deficiency": 2, "infinite": true, "finitely-presented": true})),
            ("deficiency", json!({"deficiency": 1, "finitely-presented": true, "virtually": {"free": 3}})),
            ("simple", json!({"simple": true, "infinite": true})),
            ("schreier", json!({"schreier": true, "finitely-generated": true, "ends": 1})),
        ];
        for (rule, flags) in cases {
            let v = run(flags.clone()).unwrap();
            assert_eq!(rules(&v), vec![rule], "{flags}");
            for key in flags.as_object().unwrap().keys() {
                let mut fewer = flags.clone();
                fewer.as_object_mut().unwrap().remove(key);
                let v = run(fewer).unwrap();
                assert!(!rules(&v).contains(&rule), "{rule} fired without {key}");
            }
        }
    }

    #[test]
    fn presentation_witnesses_deficiency() {
        let d = json!({
            "kind": "flagged",
            "presentation": {"generators": ["a", "b", "c"], "relators": ["a b a^-1 b^-1"]},
            "flags": {"infinite": true},
        });
        let v = classify(&GroupDescriptor::from_value(&d).unwrap()).unwrap();
        assert_eq!((v.answer, rules(&v)), (Answer::No, vec!["deficiency"]));
        let mut lying = d.clone();
        lying["flags"]["deficiency"] = json!(1);
        assert_eq!(classify(&GroupDescriptor::from_value(&lying).unwrap()).unwrap_err(), conflict("presentation", "deficiency"));
    }

    #[test]
    fn cd_two_and_deficiency_forms() {
        let base = json!({"infinite": true, "finitely-presented": true, "vcd": 2, "deficiency": 1});
        let with = |v: Value| {
            let mut f = base.clone();
            f["virtually"] = v;
            run(f).unwrap()
        };
        let zf = with(json!({"product-of-free": [1, 4]}));
        assert_eq!((zf.answer, rules(&zf)), (Answer::Yes, vec!["cd-two", "deficiency"]));
        assert_eq!(with(json!({"free": 1})).answer, Answer::Yes);
        // F_2 x F_2 satisfies the vcd rule but cannot have deficiency 1
        let mut f = base.clone();
        f["virtually"] = json!({"product-of-free": [2, 2]});
        assert_eq!(run(f).unwrap_err(), conflict("cd-two", "deficiency"));
        let free = with(json!({"free": 3}));
        assert_eq!((free.answer, rules(&free)), (Answer::No, vec!["cd-two", "deficiency"]));
    }

    #[test]
    fn virtually_wrapper_keeps_answer() {
        let inner = json!({"kind": "bs", "m": 2, "n": 3});
        let d = GroupDescriptor::from_value(&json!({"kind": "virtually", "of": inner})).unwrap();
        let v = classify(&d).unwrap();
        assert_eq!(v.answer, Answer::No);
        assert_eq!(rules(&v), vec!["finite-index", "bs.criterion", "bs.moldavanskii"]);
    }

    #[test]
    fn rule_table_is_distinct() {
        let mut r = RULES.to_vec();
        r.sort_unstable();
        r.dedup();
        assert_eq!(r.len(), RULES.len());
    }
}
