//! Connected-transversal criterion: transversality, commutator membership,
//! generation, and the normalizer splitting condition.

pub mod cases;
pub mod obstruction;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::groupcat::{tangent_algebra, GroupError, GroupLaw, SubgroupSpec};
use crate::liealg::{normalizer_split, LieAlgebra, LieError, Subspace};
use crate::linalg::{numeric_rank, orthonormal_span};
use crate::report::{Outcome, Witness};
use crate::sampling::{lattice, rng_for, uniform_point};
use crate::solve::newton_nd;

pub const TOL_GRP: f64 = 1e-9;
pub const TOL_FD: f64 = 1e-5;
pub const RANK_THRESHOLD: f64 = 1e-6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum KepkaError {
    #[error("coset coordinates of {subgroup} are not constant on cosets (residual {residual:e})")]
    CosetCoordsInvalid { subgroup: String, residual: f64 },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// A family `R^d → G` through the identity.
#[derive(Clone)]
pub struct TransversalSpec {
    pub name: String,
    pub param_dim: usize,
    pub family: Arc<dyn Fn(&[f64]) -> Vec<f64> + Send + Sync>,
}

impl fmt::Debug for TransversalSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TransversalSpec({})", self.name)
    }
}

impl TransversalSpec {
    pub fn new(name: &str, param_dim: usize, family: impl Fn(&[f64]) -> Vec<f64> + Send + Sync + 'static) -> Self {
        TransversalSpec { name: name.to_string(), param_dim, family: Arc::new(family) }
    }

    /// The one-point family `{e}`.
    pub fn identity_only(law_dim: usize) -> Self {
        TransversalSpec::new("identity", 0, move |_| vec![0.0; law_dim])
    }

    pub fn at(&self, p: &[f64]) -> Vec<f64> {
        (self.family)(p)
    }
}

/// Sampling and tolerance settings shared by the checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckConfig {
    pub seed: u64,
    pub samples: usize,
    pub half_width: f64,
    pub per_axis: usize,
    pub tol_grp: f64,
    pub tol_fd: f64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            seed: crate::sampling::DEFAULT_SEED,
            samples: 200,
            half_width: 2.0,
            per_axis: 7,
            tol_grp: TOL_GRP,
            tol_fd: TOL_FD,
        }
    }
}

fn sup(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

/// Every sampled group element factors as `family(p)·s` with `s ∈ S`, and
/// the parameter `p` is the only one found from several starts.
pub fn is_left_transversal(
    law: &GroupLaw,
    ts: &TransversalSpec,
    sg: &SubgroupSpec,
    cfg: &CheckConfig,
) -> Result<Outcome, KepkaError> {
    let n = law.dim();
    let d = sg.coset_dim();
    let mut rng = rng_for(cfg.seed, &format!("transversal:{}:{}", ts.name, sg.name));
    let mut worst = sup(&ts.at(&vec![0.0; ts.param_dim]));
    let mut worst_at = Vec::new();
    for _ in 0..cfg.samples {
        let g = uniform_point(&mut rng, n, cfg.half_width);
        let s = sg.parametrize(&uniform_point(&mut rng, sg.dim(), cfg.half_width));
        let target = (sg.coset_coords)(&g);
        let moved = (sg.coset_coords)(&law.mul(&g, &s));
        let drift = dist(&target, &moved);
        if drift > cfg.tol_grp || !drift.is_finite() {
            return Err(KepkaError::CosetCoordsInvalid { subgroup: sg.name.clone(), residual: drift });
        }
        if ts.param_dim != d {
            return Ok(Outcome::new(false, f64::INFINITY).with(Witness::scalar("parameter_dim_mismatch", ts.param_dim as f64)));
        }
        let resid = |p: &[f64]| -> Vec<f64> {
            let c = (sg.coset_coords)(&ts.at(p));
            c.iter().zip(&target).map(|(a, b)| a - b).collect()
        };
        let mut starts = vec![vec![0.0; d], target.clone()];
        starts.push(uniform_point(&mut rng, d, cfg.half_width));
        starts.push(uniform_point(&mut rng, d, cfg.half_width));
        let tol = 1e-11 * (1.0 + sup(&target));
        let sols: Vec<Vec<f64>> = starts.iter().filter_map(|s| newton_nd(resid, s, tol, 80)).collect();
        let Some(p) = sols.first() else {
            return Ok(Outcome::new(false, f64::INFINITY).with(Witness::new("no_preimage", g)));
        };
        if let Some(q) = sols.iter().find(|q| dist(q, p) > 1e-6 * (1.0 + sup(p))) {
            return Ok(Outcome::new(false, f64::INFINITY)
                .with(Witness::new("two_preimages", [p.clone(), q.clone()].concat()))
                .with(Witness::new("element", g)));
        }
        let s = law.mul(&law.inv(&ts.at(p)), &g);
        let r = sg.membership_residual(&s);
        if r > worst || !r.is_finite() {
            worst = r;
            worst_at = [g.clone(), p.clone()].concat();
        }
    }
    Ok(Outcome::new(worst < cfg.tol_grp, worst).with(Witness::new("worst", worst_at)))
}

/// Largest membership residual of `a⁻¹b⁻¹ab` in `S` over the parameter
/// lattices of both families.
pub fn connectedness_check(
    law: &GroupLaw,
    a: &TransversalSpec,
    b: &TransversalSpec,
    sg: &SubgroupSpec,
    cfg: &CheckConfig,
) -> Outcome {
    let pa: Vec<Vec<f64>> = lattice(cfg.per_axis, a.param_dim, cfg.half_width);
    let pb: Vec<Vec<f64>> = lattice(cfg.per_axis, b.param_dim, cfg.half_width);
    let ga: Vec<Vec<f64>> = pa.iter().map(|p| a.at(p)).collect();
    let gb: Vec<Vec<f64>> = pb.iter().map(|p| b.at(p)).collect();
    let mut worst = 0.0f64;
    let mut worst_at = Vec::new();
    for (i, x) in ga.iter().enumerate() {
        for (j, y) in gb.iter().enumerate() {
            let r = sg.membership_residual(&law.comm(x, y));
            if r > worst || !r.is_finite() {
                worst = r;
                worst_at = [pa[i].clone(), pb[j].clone()].concat();
            }
        }
    }
    Outcome::new(worst < cfg.tol_grp, worst).with(Witness::new("worst", worst_at))
}

/// Numerical rank of the Lie algebra generated by the families' tangents.
#[derive(Debug, Clone)]
pub struct GenerationReport {
    pub rank: usize,
    pub singular_values: Vec<f64>,
    pub outcome: Outcome,
}

/// Left-translated tangent vectors `g(p)⁻¹ ∂g/∂p_i` at the identity
/// parameter and at `extra` seeded base points.
pub fn family_tangents(law: &GroupLaw, ts: &TransversalSpec, cfg: &CheckConfig, extra: usize) -> Vec<Vec<f64>> {
    let mut rng = rng_for(cfg.seed, &format!("tangents:{}", ts.name));
    let mut bases = vec![vec![0.0; ts.param_dim]];
    bases.extend((0..extra).map(|_| uniform_point(&mut rng, ts.param_dim, cfg.half_width)));
    let h = 1e-5;
    let mut out = Vec::new();
    for p in &bases {
        let g_inv = law.inv(&ts.at(p));
        for i in 0..ts.param_dim {
            let (mut pp, mut pm) = (p.clone(), p.clone());
            pp[i] += h;
            pm[i] -= h;
            let fp = law.mul(&g_inv, &ts.at(&pp));
            let fm = law.mul(&g_inv, &ts.at(&pm));
            out.push(fp.iter().zip(&fm).map(|(a, b)| (a - b) / (2.0 * h)).collect());
        }
    }
    out
}

const BRACKET_DEPTH: usize = 3;

/// Pass iff the tangent span closed under brackets has rank `target_dim`.
pub fn generation_witness(
    law: &GroupLaw,
    families: &[&TransversalSpec],
    target_dim: usize,
    cfg: &CheckConfig,
) -> Result<GenerationReport, KepkaError> {
    let table = tangent_algebra(law, cfg.tol_fd)?;
    let mut vecs: Vec<Vec<f64>> = Vec::new();
    for f in families {
        vecs.extend(family_tangents(law, f, cfg, 4));
    }
    let keep = |v: &Vec<f64>| sup(v) > RANK_THRESHOLD;
    let mut basis = orthonormal_span(&vecs.into_iter().filter(keep).collect::<Vec<_>>(), RANK_THRESHOLD);
    for _ in 0..BRACKET_DEPTH {
        let mut rows = basis.clone();
        for (i, x) in basis.iter().enumerate() {
            for y in &basis[i + 1..] {
                let v = table.bracket(x, y);
                if keep(&v) {
                    rows.push(v);
                }
            }
        }
        let next = orthonormal_span(&rows, RANK_THRESHOLD);
        let done = next.len() == basis.len();
        basis = next;
        if done {
            break;
        }
    }
    let (rank, sv) = numeric_rank(&basis, RANK_THRESHOLD);
    let outcome = Outcome::new(rank == target_dim, (target_dim as f64 - rank as f64).abs())
        .with(Witness::scalar("rank", rank as f64))
        .with(Witness::new("singular_values", sv.clone()));
    Ok(GenerationReport { rank, singular_values: sv, outcome })
}

/// Exact test of `normalizer(inn) = inn ⊕ center`.
pub fn niemenmaa_check(alg: &LieAlgebra, inn: &Subspace) -> Result<Outcome, KepkaError> {
    if inn.ambient_dim() != alg.dim() {
        return Err(LieError::DimensionMismatch { expected: alg.dim(), got: inn.ambient_dim() }.into());
    }
    if !alg.is_subalgebra(inn) {
        return Err(LieError::NotSubalgebra.into());
    }
    let split = normalizer_split(alg, inn)?;
    let passed = split.holds();
    let gap = split.normalizer.dim() as f64 - split.inn_plus_center.dim() as f64;
    Ok(Outcome::new(passed, if passed { 0.0 } else { gap.abs().max(1.0) })
        .with(Witness::scalar("normalizer_dim", split.normalizer.dim() as f64))
        .with(Witness::scalar("inn_plus_center_dim", split.inn_plus_center.dim() as f64))
        .with(Witness::scalar("center_dim", split.center.dim() as f64)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::catalog;

    #[test]
    fn niemenmaa_examples() {
        let m1 = catalog::mult1();
        let inn = Subspace::from_int_rows(5, &[&[0, 1, 0, 0, 0], &[0, 0, 1, 1, 0]]).unwrap();
        assert!(niemenmaa_check(&m1, &inn).unwrap().passed);
        let g = catalog::g4_3();
        let o = niemenmaa_check(&g, &Subspace::from_int_rows(4, &[&[1, 1, 0, 0]]).unwrap()).unwrap();
        assert!(!o.passed);
        assert_eq!(o.witnesses[0].values, vec![3.0]);
        assert_eq!(o.witnesses[1].values, vec![2.0]);
        let r3 = catalog::abelian(3);
        assert!(niemenmaa_check(&r3, &Subspace::coordinate(3, &[]).unwrap()).unwrap().passed);
        assert!(!niemenmaa_check(&r3, &Subspace::coordinate(3, &[1]).unwrap()).unwrap().passed);
        let bad = Subspace::from_int_rows(5, &[&[1, 0, 0, 0, 0], &[0, 1, 0, 0, 0]]).unwrap();
        assert!(matches!(niemenmaa_check(&m1, &bad), Err(KepkaError::Lie(LieError::NotSubalgebra))));
    }

    #[test]
    fn degenerate_transversal_and_generation() {
        let law = GroupLaw::mult1();
        let cfg = CheckConfig { samples: 20, ..CheckConfig::default() };
        let whole = SubgroupSpec::whole(5);
        let id = TransversalSpec::identity_only(5);
        assert!(is_left_transversal(&law, &id, &whole, &cfg).unwrap().passed);
        let g = generation_witness(&law, &[&id], 5, &cfg).unwrap();
        assert_eq!(g.rank, 0);
        assert!(!g.outcome.passed);
    }
}
