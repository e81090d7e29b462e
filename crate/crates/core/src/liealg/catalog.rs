//! Named algebras. Parametric families are instantiated at rational values.

use super::text::AlgebraRecord;
use super::LieAlgebra;
use crate::rational::{int, Rational};

fn build(name: &str, dim: usize, rels: &[(usize, usize, usize, i64)]) -> LieAlgebra {
    let rels: Vec<_> = rels.iter().map(|&(i, j, k, v)| (i, j, k, int(v))).collect();
    LieAlgebra::from_relations(name, dim, &rels).expect("catalog relations are well-formed")
}

pub fn abelian(n: usize) -> LieAlgebra {
    LieAlgebra::new(format!("R{n}"), n).expect("abelian dimension within range")
}

/// Non-abelian 2-dimensional algebra, `[e1,e2]=e1`.
pub fn l2() -> LieAlgebra {
    build("l2", 2, &[(1, 2, 1, 1)])
}

/// Elementary filiform algebra `[e1,e_i]=e_{i+1}`, `3 ≤ n ≤ 6`.
pub fn filiform(n: usize) -> LieAlgebra {
    let rels: Vec<_> = (2..n).map(|i| (1, i, i + 1, 1)).collect();
    build(&format!("F{n}"), n, &rels)
}

/// The filiform algebra under its classification label.
pub fn g4_1() -> LieAlgebra {
    let mut a = filiform(4);
    a.name = "g4_1".into();
    a
}

pub fn g4_3() -> LieAlgebra {
    build("g4_3", 4, &[(1, 4, 1, 1), (3, 4, 2, 1)])
}

pub fn g4_10() -> LieAlgebra {
    build("g4_10", 4, &[(1, 3, 1, 1), (2, 3, 2, 1), (1, 4, 2, -1), (2, 4, 1, 1)])
}

/// `l2 ⊕ R^2` presented as `[e4,e3]=e4`, matching the coordinate law on R^4
/// with factor `e^{y3}` in the last coordinate.
pub fn r2l2() -> LieAlgebra {
    build("r2l2", 4, &[(3, 4, 4, -1)])
}

pub fn g5_33(beta: Rational, gamma: Rational) -> LieAlgebra {
    let mut a = build("g5_33", 5, &[(1, 4, 1, 1), (2, 5, 2, 1)]);
    a.set(2, 3, 2, beta.clone());
    a.set(2, 4, 2, gamma.clone());
    a.with_param("beta", beta).with_param("gamma", gamma)
}

pub fn g5_38() -> LieAlgebra {
    build("g5_38", 5, &[(1, 4, 1, 1), (2, 5, 2, 1), (4, 5, 3, 1)])
}

/// The four 5-dimensional algebras with a 1-dimensional ideal that carry
/// explicit coordinate laws (`which` in 1..=4).
pub fn g5_prop(which: usize) -> LieAlgebra {
    let name = format!("g5_p{which}");
    match which {
        1 => build(&name, 5, &[(2, 3, 1, 1), (2, 5, 3, 1), (4, 5, 4, 1)]),
        2 => build(&name, 5, &[(2, 4, 1, 1), (1, 5, 1, 1), (2, 5, 2, 1), (4, 5, 3, 1)]),
        3 => build(&name, 5, &[(1, 4, 1, 1), (2, 5, 2, 1), (4, 5, 3, 1)]),
        4 => build(
            &name,
            5,
            &[(1, 4, 1, 1), (2, 4, 2, 1), (1, 5, 2, -1), (2, 5, 1, 1), (4, 5, 3, 1)],
        ),
        _ => panic!("g5_prop index must be 1..=4"),
    }
}

/// `F3 ⊕ l2`.
pub fn mult1() -> LieAlgebra {
    build("mult1", 5, &[(1, 2, 3, 1), (4, 5, 4, 1)])
}

/// `l2 ⊕ l2 ⊕ R`.
pub fn mult2() -> LieAlgebra {
    build("mult2", 5, &[(1, 2, 1, 1), (3, 4, 3, 1)])
}

pub fn mult3() -> LieAlgebra {
    build("mult3", 5, &[(2, 3, 1, 1), (1, 4, 1, 1), (2, 4, 2, 1)])
}

/// `g4_10 ⊕ R`.
pub fn mult4() -> LieAlgebra {
    let mut a = LieAlgebra::direct_sum(&g4_10(), &abelian(1)).expect("dim 5");
    a.name = "mult4".into();
    a
}

/// Jordan-block algebra `[e1,e3]=e1+e2, [e2,e3]=e2` plus `R^2`.
pub fn mult5() -> LieAlgebra {
    build("mult5", 5, &[(1, 3, 1, 1), (1, 3, 2, 1), (2, 3, 2, 1)])
}

/// `[e1,e3]=p e1 − e2, [e2,e3]=e1 + p e2` plus `R^2`; `p = 0` is the
/// euclidean motion algebra.
pub fn mult6(p: Rational) -> LieAlgebra {
    let mut a = build("mult6", 5, &[(1, 3, 2, -1), (2, 3, 1, 1)]);
    a.set(0, 2, 0, p.clone());
    a.set(1, 2, 1, p.clone());
    a.with_param("p", p)
}

/// `[e1,e3]=a e1, [e2,e3]=b e2` plus `R^2`.
pub fn mult7(a: Rational, b: Rational) -> LieAlgebra {
    let mut m = LieAlgebra::new("mult7", 5).expect("dim 5");
    m.set(0, 2, 0, a.clone());
    m.set(1, 2, 1, b.clone());
    m.with_param("a", a).with_param("b", b)
}

pub fn mult8(a: Rational) -> LieAlgebra {
    let mut m = mult7(a.clone(), a.clone());
    m.name = "mult8".into();
    m.params.clear();
    m.with_param("a", a)
}

/// `g4_3 ⊕ R`.
pub fn g4_3_plus_r() -> LieAlgebra {
    let mut a = LieAlgebra::direct_sum(&g4_3(), &abelian(1)).expect("dim 5");
    a.name = "g4_3xR".into();
    a
}

/// Names whose brackets are not written out; kept as flagged stubs.
pub const STUBS: &[(&str, usize)] = &[
    ("g4_2", 4),
    ("g4_8", 4),
    ("g4_9", 4),
    ("g5_1", 5),
    ("g5_6", 5),
    ("g5_7", 5),
    ("g5_8", 5),
    ("g5_9", 5),
    ("g5_10", 5),
    ("g5_11", 5),
    ("g5_12", 5),
    ("g5_13", 5),
    ("g5_14", 5),
    ("g5_15", 5),
    ("g5_16", 5),
    ("g5_17", 5),
    ("g5_18", 5),
    ("g5_19", 5),
    ("g5_20", 5),
    ("g5_21", 5),
    ("g5_22", 5),
    ("g5_23", 5),
    ("g5_24", 5),
    ("g5_25", 5),
    ("g5_26", 5),
    ("g5_27", 5),
    ("g5_28", 5),
    ("g5_29", 5),
    ("g5_30", 5),
    ("g5_31", 5),
    ("g5_37", 5),
    ("g5_39", 5),
];

/// Every defined entry at its default parameters.
pub fn defined() -> Vec<LieAlgebra> {
    let mut v = vec![l2(), filiform(3), filiform(4), filiform(5), filiform(6)];
    v.extend([g4_1(), g4_3(), g4_10(), r2l2(), g5_33(int(1), int(1)), g5_38()]);
    v.extend((1..=4).map(g5_prop));
    v.extend([mult1(), mult2(), mult3(), mult4(), mult5(), mult6(int(1))]);
    v.extend([mult7(int(1), int(2)), mult8(int(1)), g4_3_plus_r()]);
    v.extend((3..=5).map(abelian));
    v
}

/// The full catalog, defined entries first, then stubs.
pub fn records() -> Vec<AlgebraRecord> {
    let mut out: Vec<AlgebraRecord> = defined().iter().map(AlgebraRecord::from_algebra).collect();
    out.extend(STUBS.iter().map(|&(name, dim)| AlgebraRecord::stub(name, dim)));
    out
}

/// Looks up a defined algebra by name at default parameters.
pub fn by_name(name: &str) -> Option<LieAlgebra> {
    defined().into_iter().find(|a| a.name == name)
}

pub fn is_stub(name: &str) -> bool {
    STUBS.iter().any(|(n, _)| *n == name)
}
