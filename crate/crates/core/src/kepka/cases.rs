//! The eight positive cases: laws on R^5, inner-mapping subgroups with coset
//! coordinates, and the transversal families.

use crate::groupcat::{GroupError, GroupLaw, SubgroupSpec};
use crate::liealg::{catalog, LieAlgebra, Subspace};
use crate::loopcore::SectionLoop;
use crate::rational::{int, Rational};

use super::TransversalSpec;

/// `{g(0, t, k, k, 0)}`.
pub fn inn1() -> SubgroupSpec {
    SubgroupSpec::new(
        "inn1",
        5,
        vec![vec![0, 1, 0, 0, 0], vec![0, 0, 1, 1, 0]],
        vec![vec![1, 0, 0, 0, 0], vec![0, 0, 0, 0, 1], vec![0, 0, 1, -1, 0]],
        |g| vec![g[0], g[4], g[2] + g[0] * g[1] - g[3]],
        |p| vec![p[0], 0.0, p[2], 0.0, p[1]],
    )
}

/// `{g(t, 0, k, 0, t + k)}`.
pub fn inn2() -> SubgroupSpec {
    SubgroupSpec::new(
        "inn2",
        5,
        vec![vec![1, 0, 0, 0, 1], vec![0, 0, 1, 0, 1]],
        vec![vec![0, 1, 0, 0, 0], vec![0, 0, 0, 1, 0], vec![-1, 0, -1, 0, 1]],
        |g| vec![g[1], g[3], g[4] - g[0] - g[2]],
        |p| vec![0.0, p[0], 0.0, p[1], p[2]],
    )
}

/// `{g(t, s, 0, 0, t)}` in the third law.
pub fn inn3_1() -> SubgroupSpec {
    SubgroupSpec::new(
        "inn3.1",
        5,
        vec![vec![1, 0, 0, 0, 1], vec![0, 1, 0, 0, 0]],
        vec![vec![0, 0, 1, 0, 0], vec![0, 0, 0, 1, 0], vec![-1, 0, 0, 0, 1]],
        |g| vec![g[2], g[3], g[0] - g[3].exp() * g[4] + g[2] * g[1]],
        |p| vec![p[2], 0.0, p[0], p[1], 0.0],
    )
}

/// `{g(t, s, 0, 0, t + s)}` in the third law.
pub fn inn3_2() -> SubgroupSpec {
    SubgroupSpec::new(
        "inn3.2",
        5,
        vec![vec![1, 0, 0, 0, 1], vec![0, 1, 0, 0, 1]],
        vec![vec![0, 0, 1, 0, 0], vec![0, 0, 0, 1, 0], vec![-1, -1, 0, 0, 1]],
        |g| vec![g[2], g[3], g[0] - g[3].exp() * g[4] + (1.0 + g[2]) * g[1]],
        |p| vec![p[2], 0.0, p[0], p[1], 0.0],
    )
}

/// `{g(t, s, 0, 0, αt + βs)}` for laws that act trivially on this slice
/// from the right.
fn inn_last(name: &str, alpha: i64, beta: i64) -> SubgroupSpec {
    let (a, b) = (alpha as f64, beta as f64);
    SubgroupSpec::new(
        name,
        5,
        vec![vec![1, 0, 0, 0, alpha], vec![0, 1, 0, 0, beta]],
        vec![vec![0, 0, 1, 0, 0], vec![0, 0, 0, 1, 0], vec![-alpha, -beta, 0, 0, 1]],
        move |g| vec![g[2], g[3], g[4] - a * g[0] - b * g[1]],
        |p| vec![0.0, 0.0, p[0], p[1], p[2]],
    )
}

pub fn inn4_1() -> SubgroupSpec {
    inn_last("inn4.1", 1, 0)
}

pub fn inn4_2() -> SubgroupSpec {
    inn_last("inn4.2", 0, 1)
}

pub fn inn4_3() -> SubgroupSpec {
    inn_last("inn4.3", 1, 1)
}

/// `{g(t, s, 0, αt + βs, 0)}`.
fn inn_fourth(name: &str, alpha: i64, beta: i64) -> SubgroupSpec {
    let (a, b) = (alpha as f64, beta as f64);
    SubgroupSpec::new(
        name,
        5,
        vec![vec![1, 0, 0, alpha, 0], vec![0, 1, 0, beta, 0]],
        vec![vec![0, 0, 1, 0, 0], vec![0, 0, 0, 0, 1], vec![-alpha, -beta, 0, 1, 0]],
        move |g| vec![g[2], g[4], g[3] - a * g[0] - b * g[1]],
        |p| vec![0.0, 0.0, p[0], p[2], p[1]],
    )
}

pub fn inn5() -> SubgroupSpec {
    inn_fourth("inn5", 0, 1)
}

pub fn inn6_1() -> SubgroupSpec {
    inn_fourth("inn6.1", 1, 1)
}

pub fn inn6_2() -> SubgroupSpec {
    inn_fourth("inn6.2", 1, 0)
}

pub fn inn6_3() -> SubgroupSpec {
    inn_fourth("inn6.3", 0, 1)
}

pub fn a1() -> TransversalSpec {
    TransversalSpec::new("A1", 3, |p| vec![p[0], p[2].exp() - 1.0, p[1], 0.0, p[2]])
}

pub fn b1() -> TransversalSpec {
    TransversalSpec::new("B1", 3, |p| vec![p[2], 0.0, p[0], -p[2], p[1]])
}

pub fn a2() -> TransversalSpec {
    TransversalSpec::new("A2", 3, |p| {
        let u = 2.0 - p[0].exp() - p[1].exp();
        vec![u, p[0], 0.0, p[1], p[2] + u]
    })
}

pub fn b2() -> TransversalSpec {
    TransversalSpec::new("B2", 3, |p| {
        let u = 1.0 - p[0].exp();
        vec![u, p[0], u, p[1], p[2]]
    })
}

pub fn a3() -> TransversalSpec {
    TransversalSpec::new("A3", 3, |p| {
        let ew = p[1].exp();
        vec![(ew - 1.0) * (p[0] + 2.0) - p[0], 1.0 - ew, p[0], p[1], p[2]]
    })
}

pub fn b3() -> TransversalSpec {
    TransversalSpec::new("B3", 3, |p| {
        let el = p[1].exp();
        vec![(2.0 - el) * p[0], el - 1.0, p[0], p[1], p[2]]
    })
}

pub fn c3() -> TransversalSpec {
    TransversalSpec::new("C3", 3, |p| {
        let ew = p[1].exp();
        vec![p[0] * (ew - 2.0), 1.0 - ew, p[0], p[1], p[2]]
    })
}

pub fn a4() -> TransversalSpec {
    TransversalSpec::new("A4", 3, |p| {
        let e = p[0].exp();
        vec![1.0 - e * p[1].cos(), -e * p[1].sin(), p[0], p[1], p[2]]
    })
}

pub fn a5() -> TransversalSpec {
    TransversalSpec::new("A5", 3, |p| {
        let u = 1.0 - p[0].exp() * (1.0 + p[0]);
        vec![0.0, u, p[0], p[1] + u, p[2]]
    })
}

pub fn b5() -> TransversalSpec {
    TransversalSpec::new("B5", 3, |p| {
        let u = 1.0 - p[0].exp();
        vec![u, u, p[0], p[1], p[2]]
    })
}

pub fn a6(a: f64) -> TransversalSpec {
    TransversalSpec::new("A6", 3, move |p| {
        let (e, s, c) = ((a * p[0]).exp(), p[0].sin(), p[0].cos());
        vec![1.0 + e * (s - c), 1.0 - e * (s + c), p[0], p[1], p[2]]
    })
}

pub fn a7(a: f64, b: f64) -> TransversalSpec {
    TransversalSpec::new("A7", 3, move |p| {
        let u = 2.0 - (b * p[0]).exp() - (a * p[0]).exp();
        vec![u, u, p[0], p[1], p[2]]
    })
}

pub fn a8(a: f64) -> TransversalSpec {
    TransversalSpec::new("A8", 3, move |p| vec![1.0 - (a * p[0]).exp() - p[0], p[0], p[0], p[1], p[2]])
}

/// Two families connected with respect to a subgroup, with the subgroup's
/// tangent as printed in the catalog basis.
#[derive(Clone, Debug)]
pub struct ConnectedPair {
    pub label: String,
    pub a: TransversalSpec,
    pub b: TransversalSpec,
    pub subgroup: SubgroupSpec,
    pub inn_catalog: Subspace,
}

/// One positive case: the law, its pairs and the generating sets.
#[derive(Clone, Debug)]
pub struct KepkaCase {
    pub index: usize,
    pub law: GroupLaw,
    pub pairs: Vec<ConnectedPair>,
    pub generating_sets: Vec<Vec<TransversalSpec>>,
}

impl KepkaCase {
    pub fn name(&self) -> String {
        format!("case{}", self.index)
    }

    pub fn algebra(&self) -> &LieAlgebra {
        self.law.catalog_algebra()
    }
}

fn sub(rows: &[&[i64]]) -> Subspace {
    Subspace::from_int_rows(5, rows).expect("five-dimensional rows")
}

fn pair(label: &str, a: TransversalSpec, b: TransversalSpec, s: SubgroupSpec, inn: Subspace) -> ConnectedPair {
    ConnectedPair { label: label.to_string(), a, b, subgroup: s, inn_catalog: inn }
}

pub const CASES: std::ops::RangeInclusive<usize> = 1..=8;

/// Case `i` at default parameters (case 6: a = 1; case 7: a = 1, b = 2;
/// case 8: a = 1).
pub fn case(i: usize) -> Option<KepkaCase> {
    Some(match i {
        1 => KepkaCase {
            index: 1,
            law: GroupLaw::mult1(),
            pairs: vec![pair("1", a1(), b1(), inn1(), sub(&[&[0, 1, 0, 0, 0], &[0, 0, 1, 1, 0]]))],
            generating_sets: vec![vec![a1(), b1()]],
        },
        2 => KepkaCase {
            index: 2,
            law: GroupLaw::mult2(),
            pairs: vec![pair("2", a2(), b2(), inn2(), sub(&[&[1, 0, 0, 0, 1], &[0, 0, 1, 0, 1]]))],
            generating_sets: vec![vec![a2(), b2()]],
        },
        3 => KepkaCase {
            index: 3,
            law: GroupLaw::mult3(),
            pairs: vec![
                pair("3.1", b3(), c3(), inn3_1(), sub(&[&[1, 0, 0, 0, 1], &[0, 1, 0, 0, 0]])),
                pair("3.2", a3(), b3(), inn3_2(), sub(&[&[1, 0, 0, 0, 1], &[0, 1, 0, 0, 1]])),
            ],
            generating_sets: vec![vec![a3(), b3()], vec![b3(), c3()]],
        },
        4 => KepkaCase {
            index: 4,
            law: GroupLaw::mult4(),
            pairs: vec![
                pair("4.1", a4(), a4(), inn4_1(), sub(&[&[1, 0, 0, 0, 1], &[0, 1, 0, 0, 0]])),
                pair("4.2", a4(), a4(), inn4_2(), sub(&[&[1, 0, 0, 0, 0], &[0, 1, 0, 0, 1]])),
                pair("4.3", a4(), a4(), inn4_3(), sub(&[&[1, 0, 0, 0, 1], &[0, 1, 0, 0, 1]])),
            ],
            generating_sets: vec![vec![a4()]],
        },
        5 => KepkaCase {
            index: 5,
            law: GroupLaw::mult5(),
            pairs: vec![pair("5", a5(), b5(), inn5(), sub(&[&[1, 0, 0, 0, 0], &[0, 1, 0, 1, 0]]))],
            generating_sets: vec![vec![a5(), b5()]],
        },
        6 => case6(int(1)).expect("a = 1 is valid"),
        7 => case7(int(1), int(2)).expect("a = 1, b = 2 is valid"),
        8 => case8(int(1)).expect("a = 1 is valid"),
        _ => return None,
    })
}

fn inn_6_1_catalog() -> Subspace {
    sub(&[&[1, 0, 0, 1, 0], &[0, 1, 0, 1, 0]])
}

pub fn case6(a: Rational) -> Result<KepkaCase, GroupError> {
    let law = GroupLaw::mult6(a.clone())?;
    let af = crate::rational::to_f64(&a);
    Ok(KepkaCase {
        index: 6,
        law,
        pairs: vec![
            pair("6.1", a6(af), a6(af), inn6_1(), inn_6_1_catalog()),
            // The catalog basis exchanges the first two coordinates, so the
            // slice {g(t, s, 0, t, 0)} lands on <e1, e2+e4> and vice versa.
            pair("6.2", a6(af), a6(af), inn6_2(), sub(&[&[1, 0, 0, 0, 0], &[0, 1, 0, 1, 0]])),
            pair("6.3", a6(af), a6(af), inn6_3(), sub(&[&[1, 0, 0, 1, 0], &[0, 1, 0, 0, 0]])),
        ],
        generating_sets: vec![vec![a6(af)]],
    })
}

pub fn case7(a: Rational, b: Rational) -> Result<KepkaCase, GroupError> {
    let law = GroupLaw::mult7(a.clone(), b.clone())?;
    let (af, bf) = (crate::rational::to_f64(&a), crate::rational::to_f64(&b));
    Ok(KepkaCase {
        index: 7,
        law,
        pairs: vec![pair("7", a7(af, bf), a7(af, bf), inn6_1(), inn_6_1_catalog())],
        generating_sets: vec![vec![a7(af, bf)]],
    })
}

pub fn case8(a: Rational) -> Result<KepkaCase, GroupError> {
    let law = GroupLaw::mult8(a.clone())?;
    let af = crate::rational::to_f64(&a);
    Ok(KepkaCase {
        index: 8,
        law,
        pairs: vec![pair("8", a8(af), a8(af), inn6_1(), inn_6_1_catalog())],
        generating_sets: vec![vec![a8(af)]],
    })
}

/// Loop induced by the first family of case 1 or 2, as a section of the
/// coset space.
pub fn section_loop(i: usize) -> Option<SectionLoop> {
    match i {
        1 => Some(SectionLoop::new("section_case1", GroupLaw::mult1(), inn1(), |p| {
            let u = p[1].exp() - 1.0;
            vec![p[0], u, p[2] - p[0] * u, 0.0, p[1]]
        })),
        2 => {
            let fam = a2();
            Some(SectionLoop::new("section_case2", GroupLaw::mult2(), inn2(), move |p| fam.at(p)))
        }
        _ => None,
    }
}

/// Central-direction candidate for the section loops.
pub const SECTION_CENTRAL_DIR: [f64; 3] = [0.0, 0.0, 1.0];

/// An algebra paired with a candidate inner-mapping subalgebra, and whether
/// the normalizer condition is expected to hold.
#[derive(Clone, Debug)]
pub struct NiemenmaaPair {
    pub name: String,
    pub algebra: LieAlgebra,
    pub inn: Subspace,
    pub expect_pass: bool,
}

/// Named pairs: the 4-dimensional counterexample, its product with R, and
/// the positive cases (with sub-cases for 3, 4 and 6).
pub fn niemenmaa_pairs() -> Vec<NiemenmaaPair> {
    let mut out = vec![
        NiemenmaaPair {
            name: "cor4".into(),
            algebra: catalog::g4_3(),
            inn: Subspace::from_int_rows(4, &[&[1, 1, 0, 0]]).expect("dim 4"),
            expect_pass: false,
        },
        NiemenmaaPair {
            name: "g43xR".into(),
            algebra: catalog::g4_3_plus_r(),
            inn: sub(&[&[1, 1, 0, 0, 0], &[1, 0, 0, 0, 1]]),
            expect_pass: false,
        },
    ];
    for i in CASES {
        let c = case(i).expect("index in range");
        for p in &c.pairs {
            let name = format!("case{}", p.label);
            out.push(NiemenmaaPair { name, algebra: c.algebra().clone(), inn: p.inn_catalog.clone(), expect_pass: true });
        }
    }
    out
}

/// Pairs selected by a target name; `caseN` also selects its sub-cases,
/// `all` selects every pair.
pub fn niemenmaa_select(name: &str) -> Vec<NiemenmaaPair> {
    niemenmaa_pairs()
        .into_iter()
        .filter(|p| name == "all" || p.name == name || p.name.starts_with(&format!("{name}.")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kepka::{connectedness_check, generation_witness, is_left_transversal, niemenmaa_check, CheckConfig};

    #[test]
    fn coset_coordinates_are_invariant() {
        let cfg = CheckConfig { samples: 30, ..CheckConfig::default() };
        for i in CASES {
            let c = case(i).unwrap();
            for p in &c.pairs {
                let o = is_left_transversal(&c.law, &p.a, &p.subgroup, &cfg).unwrap();
                assert!(o.passed, "case {} pair {}: {:?}", i, p.label, o);
            }
        }
    }

    #[test]
    fn subgroup_tangents_match_printed_inner_algebras() {
        for i in CASES {
            let c = case(i).unwrap();
            for p in &c.pairs {
                assert_eq!(c.law.to_catalog_basis(&p.subgroup.tangent()), p.inn_catalog, "pair {}", p.label);
            }
        }
    }

    #[test]
    fn commutator_example_lies_in_inn1() {
        let law = GroupLaw::mult1();
        let e = std::f64::consts::E;
        let c = law.comm(&a1().at(&[0.0, 0.0, 1.0]), &b1().at(&[0.0, 0.0, 1.0]));
        let want = [0.0, 0.0, e - 1.0, e - 1.0, 0.0];
        assert!(c.iter().zip(want).all(|(x, y)| (x - y).abs() < 1e-14), "{c:?}");
        assert!(inn1().membership_residual(&c) < 1e-14);
    }

    #[test]
    fn wrong_law_coset_coordinates_are_rejected() {
        let cfg = CheckConfig { samples: 10, ..CheckConfig::default() };
        let r = is_left_transversal(&GroupLaw::mult1(), &a1(), &inn2(), &cfg);
        assert!(matches!(r, Err(crate::kepka::KepkaError::CosetCoordsInvalid { .. })));
    }

    #[test]
    fn case_one_pipeline() {
        let c = case(1).unwrap();
        let cfg = CheckConfig::default();
        let p = &c.pairs[0];
        assert!(is_left_transversal(&c.law, &p.b, &p.subgroup, &cfg).unwrap().passed);
        assert!(connectedness_check(&c.law, &p.a, &p.b, &p.subgroup, &cfg).passed);
        let g = generation_witness(&c.law, &[&p.a, &p.b], 5, &cfg).unwrap();
        assert_eq!(g.rank, 5);
        assert!(niemenmaa_check(c.algebra(), &p.inn_catalog).unwrap().passed);
    }

    #[test]
    fn niemenmaa_catalog_polarity() {
        let pairs = niemenmaa_pairs();
        let names: Vec<&str> = pairs.iter().map(|p| p.name.as_str()).collect();
        assert_eq!(
            names,
            [
                "cor4", "g43xR", "case1", "case2", "case3.1", "case3.2", "case4.1", "case4.2", "case4.3", "case5", "case6.1",
                "case6.2", "case6.3", "case7", "case8"
            ]
        );
        for p in pairs {
            let o = niemenmaa_check(&p.algebra, &p.inn).unwrap();
            assert_eq!(o.passed, p.expect_pass, "{}", p.name);
        }
        assert_eq!(niemenmaa_select("case4").len(), 3);
    }
}
