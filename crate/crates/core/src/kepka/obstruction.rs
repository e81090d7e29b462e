//! Forced identities that cannot hold, and forced families that cannot
//! generate. A case is confirmed when the contradiction shows up
//! numerically.

use crate::exprdsl::{parse, Expr};
use crate::groupcat::GroupLaw;
use crate::linalg::least_squares;
use crate::loopcore::{functional_residual, seeded_pairs};
use crate::report::{Outcome, Witness};
use crate::sampling::{linspace, rng_for, uniform_point};

use super::cases::{inn6_1, inn6_2, inn6_3};
use super::{generation_witness, CheckConfig, KepkaError, TransversalSpec};

pub const DELTA_OBS: f64 = 0.01;

type Scalar = fn(&[f64]) -> f64;

#[derive(Clone, Debug)]
pub enum ObstructionKind {
    /// `target(x) ≈ Σ c_k basis_k(x)` over the plan; confirmed iff the best
    /// fit still leaves a residual of at least δ.
    Identity { target: Scalar, basis: Vec<Scalar>, plan: Vec<Vec<f64>> },
    /// The additive-exponential functional equation for a candidate `f`.
    Functional { f: &'static str, pairs: usize },
    /// A single family of the given form in the 4-dimensional `R^2 × L_2`
    /// law; confirmed iff the generated rank stays below 4.
    DecomposableRank { k: f64 },
    /// Two trigonometric families linked through one of the motion-group
    /// subgroups; confirmed iff the generated rank stays below 5.
    SinCos { subgroup: usize },
}

#[derive(Clone, Debug)]
pub struct ObstructionCase {
    pub name: &'static str,
    pub description: &'static str,
    pub kind: ObstructionKind,
}

impl ObstructionCase {
    pub fn fit_dim(&self) -> usize {
        match &self.kind {
            ObstructionKind::Identity { basis, .. } => basis.len(),
            ObstructionKind::Functional { .. } => 1,
            ObstructionKind::DecomposableRank { .. } => 0,
            ObstructionKind::SinCos { .. } => 4,
        }
    }
}

fn pts1(vals: &[f64]) -> Vec<Vec<f64>> {
    vals.iter().map(|&v| vec![v]).collect()
}

fn trig_plan() -> Vec<Vec<f64>> {
    pts1(&linspace(-3.0, 3.0, 13))
}

fn one(_: &[f64]) -> f64 {
    1.0
}

fn neg_m(x: &[f64]) -> f64 {
    -x[0]
}

pub fn catalog() -> Vec<ObstructionCase> {
    use ObstructionKind::*;
    vec![
        ObstructionCase {
            name: "OBS-NONCONST-V",
            description: "v e^v / (1 - e^v) is not constant",
            kind: Identity { target: |x| x[0] * x[0].exp() / (1.0 - x[0].exp()), basis: vec![one], plan: pts1(&[-1.0, 1.0]) },
        },
        ObstructionCase {
            name: "OBS-NONCONST-EPS-PLUS",
            description: "(1 - e^v) / v is not constant",
            kind: Identity { target: |x| (1.0 - x[0].exp()) / x[0], basis: vec![one], plan: pts1(&[-1.0, 1.0]) },
        },
        ObstructionCase {
            name: "OBS-NONCONST-EPS-MINUS",
            description: "(1 - e^-v) / v is not constant",
            kind: Identity { target: |x| (1.0 - (-x[0]).exp()) / x[0], basis: vec![one], plan: pts1(&[-1.0, 1.0]) },
        },
        ObstructionCase {
            name: "OBS-NONCONST-M",
            description: "(e^m - 1) / (m e^m) is not constant",
            kind: Identity {
                target: |x| (x[0].exp() - 1.0) / (x[0] * x[0].exp()),
                basis: vec![one],
                plan: pts1(&[-1.0, 1.0]),
            },
        },
        ObstructionCase {
            name: "OBS-EXP-M",
            description: "m = c (1 - e^-m) has no constant solution",
            kind: Identity { target: |x| x[0], basis: vec![|x| 1.0 - (-x[0]).exp()], plan: pts1(&[-1.0, 1.0]) },
        },
        ObstructionCase {
            name: "OBS-TRIG-1",
            description: "-m = c (cos m + sin m - 1) + d (cos m - sin m - 1) has no solution",
            kind: Identity {
                target: neg_m,
                basis: vec![|x| x[0].cos() + x[0].sin() - 1.0, |x| x[0].cos() - x[0].sin() - 1.0],
                plan: trig_plan(),
            },
        },
        ObstructionCase {
            name: "OBS-TRIG-2",
            description: "-m = c sin m + d (cos m - 1) has no solution",
            kind: Identity { target: neg_m, basis: vec![|x| x[0].sin(), |x| x[0].cos() - 1.0], plan: trig_plan() },
        },
        ObstructionCase {
            name: "OBS-TRIG-3",
            description: "-m = c (cos m - 1) - d sin m has no solution",
            kind: Identity { target: neg_m, basis: vec![|x| x[0].cos() - 1.0, |x| -x[0].sin()], plan: trig_plan() },
        },
        ObstructionCase {
            name: "OBS-VEW",
            description: "v (e^w - 1) does not vanish identically",
            kind: Identity {
                target: |x| x[0] * (x[1].exp() - 1.0),
                basis: vec![],
                plan: vec![vec![1.0, 1.0], vec![1.0, -1.0], vec![-1.0, 1.0], vec![-1.0, -1.0]],
            },
        },
        ObstructionCase {
            name: "OBS-FUNCEQ-LINEAR",
            description: "f(z) = z violates f(z2) + e^-z2 f(z1) = f(z1 + z2)",
            kind: Functional { f: "z", pairs: 200 },
        },
        ObstructionCase {
            name: "OBS-4DIM-G1",
            description: "the forced family (x, y, z, k(1 - e^z)) in R^2 x L_2 spans only a 3-dim subalgebra",
            kind: DecomposableRank { k: 1.5 },
        },
        ObstructionCase {
            name: "OBS-SINCOS-1",
            description: "forced sin/cos families linked through {g(t, s, 0, t + s, 0)} do not generate R^2 x E(2)",
            kind: SinCos { subgroup: 1 },
        },
        ObstructionCase {
            name: "OBS-SINCOS-2",
            description: "forced sin/cos families linked through {g(t, s, 0, t, 0)} do not generate R^2 x E(2)",
            kind: SinCos { subgroup: 2 },
        },
        ObstructionCase {
            name: "OBS-SINCOS-3",
            description: "forced sin/cos families linked through {g(t, s, 0, s, 0)} do not generate R^2 x E(2)",
            kind: SinCos { subgroup: 3 },
        },
    ]
}

pub fn by_name(name: &str) -> Option<ObstructionCase> {
    catalog().into_iter().find(|c| c.name.eq_ignore_ascii_case(name))
}

/// Cases selected by `name`, `all`, or a prefix such as `OBS-SINCOS`.
pub fn select(name: &str) -> Vec<ObstructionCase> {
    if name == "all" {
        return catalog();
    }
    let up = name.to_ascii_uppercase();
    catalog().into_iter().filter(|c| c.name == up || c.name.starts_with(&format!("{up}-"))).collect()
}

fn identity_fit(target: Scalar, basis: &[Scalar], plan: &[Vec<f64>]) -> (Vec<f64>, f64, Vec<f64>) {
    let b: Vec<f64> = plan.iter().map(|x| target(x)).collect();
    let coeffs = if basis.is_empty() {
        Vec::new()
    } else {
        let a: Vec<Vec<f64>> = plan.iter().map(|x| basis.iter().map(|f| f(x)).collect()).collect();
        least_squares(&a, &b)
    };
    let mut worst = (0.0f64, Vec::new());
    for (x, t) in plan.iter().zip(&b) {
        let fit: f64 = basis.iter().zip(&coeffs).map(|(f, c)| c * f(x)).sum();
        let r = (t - fit).abs();
        if r > worst.0 || r.is_nan() {
            worst = (r, x.clone());
        }
    }
    (coeffs, worst.0, worst.1)
}

/// Member of the forced form `(f1(l), f2(l), l, m, n)` with
/// `f_j = c[0][j] (1 - cos l) + c[1][j] sin l`.
fn trig_family(name: &str, c: [[f64; 2]; 2]) -> TransversalSpec {
    TransversalSpec::new(name, 3, move |p| {
        let (u, v) = (1.0 - p[0].cos(), p[0].sin());
        vec![c[0][0] * u + c[1][0] * v, c[0][1] * u + c[1][1] * v, p[0], p[1], p[2]]
    })
}

fn coeffs(a: &[f64]) -> [[f64; 2]; 2] {
    [[a[0], a[1]], [a[2], a[3]]]
}

fn sincos_report(subgroup: usize, cfg: &CheckConfig) -> Result<Outcome, KepkaError> {
    let law = GroupLaw::motion();
    let sg = match subgroup {
        1 => inn6_1(),
        2 => inn6_2(),
        _ => inn6_3(),
    };
    let mut rng = rng_for(cfg.seed, &format!("obstruction:sincos:{subgroup}"));
    let b = uniform_point(&mut rng, 4, 1.0);
    let a_fam = trig_family("A", coeffs(&b));
    let plan: Vec<(Vec<f64>, Vec<f64>)> = (0..24)
        .map(|_| (uniform_point(&mut rng, 3, cfg.half_width), uniform_point(&mut rng, 3, cfg.half_width)))
        .collect();
    let link = |a: &[f64]| -> Vec<f64> {
        let fam = trig_family("B", coeffs(a));
        plan.iter()
            .flat_map(|(p, q)| {
                let c = law.comm(&a_fam.at(p), &fam.at(q));
                let x = (sg.coset_coords)(&c);
                x.into_iter()
            })
            .collect()
    };
    // The link residual is affine in the unknown coefficients.
    let r0 = link(&[0.0; 4]);
    let cols: Vec<Vec<f64>> = (0..4)
        .map(|k| {
            let mut e = [0.0; 4];
            e[k] = 1.0;
            link(&e).iter().zip(&r0).map(|(x, y)| x - y).collect()
        })
        .collect();
    let rows: Vec<Vec<f64>> = (0..r0.len()).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
    let rhs: Vec<f64> = r0.iter().map(|v| -v).collect();
    let a = least_squares(&rows, &rhs);
    let link_residual = link(&a).iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let b_fam = trig_family("B", coeffs(&a));
    let gen = generation_witness(&law, &[&a_fam, &b_fam], 5, cfg)?;
    Ok(Outcome::new(gen.rank <= 4, 5.0 - gen.rank as f64)
        .with(Witness::scalar("rank", gen.rank as f64))
        .with(Witness::new("singular_values", gen.singular_values))
        .with(Witness::scalar("link_residual", link_residual))
        .with(Witness::new("coefficients_a", b))
        .with(Witness::new("coefficients_b", a)))
}

fn decomposable_report(k: f64, cfg: &CheckConfig) -> Result<Outcome, KepkaError> {
    let law = GroupLaw::r2l2();
    let fam = TransversalSpec::new("forced", 3, move |p| vec![p[0], p[1], p[2], k * (1.0 - p[2].exp())]);
    let gen = generation_witness(&law, &[&fam, &fam], 4, cfg)?;
    Ok(Outcome::new(gen.rank <= 3, 4.0 - gen.rank as f64)
        .with(Witness::scalar("rank", gen.rank as f64))
        .with(Witness::new("singular_values", gen.singular_values)))
}

/// Runs one case. For identities `max_residual` is the residual left by the
/// best fit; for rank cases it is the rank deficiency.
pub fn obstruction_report(case: &ObstructionCase, cfg: &CheckConfig, delta_obs: f64) -> Result<Outcome, KepkaError> {
    match &case.kind {
        ObstructionKind::Identity { target, basis, plan } => {
            let (c, r, at) = identity_fit(*target, basis, plan);
            Ok(Outcome::new(r >= delta_obs, r).with(Witness::new("constants", c)).with(Witness::new("worst_point", at)))
        }
        ObstructionKind::Functional { f, pairs } => {
            let e: Expr = parse(f).expect("catalog expressions parse");
            let pairs = seeded_pairs(cfg.seed, &format!("obstruction:{}", case.name), *pairs, cfg.half_width);
            let fit = functional_residual(&e, &pairs).expect("catalog expressions evaluate");
            let (z1, z2) = fit.worst_pair;
            Ok(Outcome::new(fit.max_residual >= delta_obs, fit.max_residual)
                .with(Witness::new("worst_pair", vec![z1, z2]))
                .with(Witness::scalar("fitted_c", fit.c)))
        }
        ObstructionKind::DecomposableRank { k } => decomposable_report(*k, cfg),
        ObstructionKind::SinCos { subgroup } => sincos_report(*subgroup, cfg),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(name: &str) -> Outcome {
        obstruction_report(&by_name(name).unwrap(), &CheckConfig::default(), DELTA_OBS).unwrap()
    }

    #[test]
    fn two_point_constancy_gaps() {
        let o = run("OBS-NONCONST-V");
        assert!(o.passed);
        assert!((o.max_residual - 0.5).abs() < 1e-12);
        let o = run("OBS-EXP-M");
        assert!(o.passed && o.max_residual >= 0.2, "{o:?}");
        for n in ["OBS-NONCONST-EPS-PLUS", "OBS-NONCONST-EPS-MINUS", "OBS-NONCONST-M", "OBS-VEW"] {
            assert!(run(n).passed, "{n}");
        }
        assert!((run("OBS-VEW").max_residual - (std::f64::consts::E - 1.0)).abs() < 1e-12);
    }

    #[test]
    fn trig_identities_have_no_fit() {
        for n in ["OBS-TRIG-1", "OBS-TRIG-2", "OBS-TRIG-3"] {
            let o = run(n);
            assert!(o.passed && o.max_residual > 0.5, "{n}: {o:?}");
        }
    }

    #[test]
    fn linear_solution_fails_functional_equation() {
        assert!(run("OBS-FUNCEQ-LINEAR").max_residual >= 0.1);
    }

    #[test]
    fn decomposable_family_is_rank_deficient() {
        let o = run("OBS-4DIM-G1");
        assert!(o.passed);
        assert_eq!(o.witnesses[0].values, vec![3.0]);
    }

    #[test]
    fn selection() {
        assert_eq!(select("all").len(), catalog().len());
        assert_eq!(select("obs-sincos").len(), 3);
        assert_eq!(select("OBS-TRIG-2").len(), 1);
        assert!(select("nope").is_empty());
    }
}
