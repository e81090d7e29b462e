//! Named check suites: target parsing, the catalog listing and report
//! assembly for the command line.

use std::time::Instant;

use thiserror::Error;

use crate::exprdsl::{parse, ExprError};
use crate::groupcat::{catalog_laws, law_by_name, matches_catalog, tangent_algebra, GroupError, GroupLaw};
use crate::kepka::cases::{self, KepkaCase};
use crate::kepka::obstruction::{self, ObstructionCase, DELTA_OBS};
use crate::kepka::{
    connectedness_check, generation_witness, is_left_transversal, niemenmaa_check, CheckConfig, KepkaError, TOL_FD,
    TOL_GRP,
};
use crate::liealg::{catalog, LieAlgebra, Subspace};
use crate::loopcore::{
    associator_scan, axioms_check, bijectivity_witness, family, family_info, functional_residual,
    nilpotency_class2_check, seeded_pairs, Bijectivity, LoopError, LoopGrid, LoopLaw, Point, FAMILIES, TOL_LOOP,
};
use crate::report::{Expectation, Outcome, Report, Witness};
use crate::sampling::{rng_for, uniform_point, DEFAULT_SEED};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown target `{0}`")]
    UnknownTarget(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Syntax(#[from] ExprError),
    #[error(transparent)]
    Loop(#[from] LoopError),
    #[error(transparent)]
    Kepka(#[from] KepkaError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Seed, sample counts and tolerance overrides for one run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub seed: u64,
    /// Overrides every suite's sample count when set.
    pub samples: Option<usize>,
    pub half_width: f64,
    pub tol_grp: f64,
    pub tol_loop: f64,
    pub tol_fd: f64,
    pub delta_obs: f64,
    /// Record wall-clock time per report; off by default so output is
    /// reproducible.
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: DEFAULT_SEED,
            samples: None,
            half_width: 2.0,
            tol_grp: TOL_GRP,
            tol_loop: TOL_LOOP,
            tol_fd: TOL_FD,
            delta_obs: DELTA_OBS,
            timings: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), VerifyError> {
        let positive = [
            ("box", self.half_width),
            ("tol-grp", self.tol_grp),
            ("tol-loop", self.tol_loop),
            ("tol-fd", self.tol_fd),
            ("delta-obs", self.delta_obs),
        ];
        if let Some((k, v)) = positive.iter().find(|(_, v)| !(v.is_finite() && *v > 0.0)) {
            return Err(VerifyError::InvalidConfig(format!("{k} must be positive, got {v}")));
        }
        if self.samples == Some(0) {
            return Err(VerifyError::InvalidConfig("samples must be at least 1".into()));
        }
        Ok(())
    }

    fn check_config(&self) -> CheckConfig {
        CheckConfig {
            seed: self.seed,
            samples: self.samples.unwrap_or(200),
            half_width: self.half_width,
            tol_grp: self.tol_grp,
            tol_fd: self.tol_fd,
            ..CheckConfig::default()
        }
    }

    fn loop_grid(&self, label: &str) -> LoopGrid {
        LoopGrid::new(self.seed, label, self.half_width, 7, self.samples.unwrap_or(500))
    }
}

/// Collects reports and stamps seed and timing.
struct Run<'a> {
    cfg: &'a RunConfig,
    reports: Vec<Report>,
}

impl Run<'_> {
    fn push(&mut self, check: &str, case: &str, expected: Expectation, started: Instant, o: Outcome) -> &mut Report {
        let mut r = Report::from_outcome(check, case, expected, o, self.cfg.seed);
        if self.cfg.timings {
            r.runtime_ms = started.elapsed().as_millis() as u64;
        }
        self.reports.push(r);
        self.reports.last_mut().expect("just pushed")
    }

    fn param(&mut self, k: &str, v: impl ToString) {
        if let Some(r) = self.reports.pop() {
            self.reports.push(r.param(k, v));
        }
    }
}

/// Runs the suite named by `target`.
pub fn run_target(target: &str, cfg: &RunConfig) -> Result<Vec<Report>, VerifyError> {
    cfg.validate()?;
    let mut run = Run { cfg, reports: Vec::new() };
    dispatch(target, &mut run)?;
    Ok(run.reports)
}

fn unknown(target: &str) -> VerifyError {
    VerifyError::UnknownTarget(target.to_string())
}

fn dispatch(target: &str, run: &mut Run) -> Result<(), VerifyError> {
    let (kind, rest) = target.split_once(':').ok_or_else(|| unknown(target))?;
    match kind {
        "algebra" => algebra_suite(rest, run).ok_or_else(|| unknown(target)),
        "group" => group_suite(rest, run),
        "loop" => loop_suite(rest, run, None).map_err(|e| match e {
            VerifyError::UnknownTarget(_) => unknown(target),
            other => other,
        }),
        "kepka" => {
            let i = rest.strip_prefix("case").and_then(|n| n.parse().ok()).ok_or_else(|| unknown(target))?;
            let c = cases::case(i).ok_or_else(|| unknown(target))?;
            kepka_suite(&c, run)
        }
        "obstruction" => {
            let sel = obstruction::select(rest);
            if sel.is_empty() {
                return Err(unknown(target));
            }
            sel.iter().try_for_each(|c| obstruction_one(c, run))
        }
        "niemenmaa" => {
            let sel = cases::niemenmaa_select(rest);
            if sel.is_empty() {
                return Err(unknown(target));
            }
            for p in sel {
                let expected = if p.expect_pass { Expectation::Pass } else { Expectation::Fail };
                niemenmaa_one(&p.name, &p.algebra, &p.inn, expected, run)?;
            }
            Ok(())
        }
        "lemma" if rest == "functional" => {
            lemma_suite(run)?;
            Ok(())
        }
        "repro" if rest == "all" => repro_all(run),
        _ => Err(unknown(target)),
    }
}

fn dims_witness(label: &str, dims: Vec<usize>) -> Witness {
    Witness::new(label, dims.into_iter().map(|d| d as f64).collect::<Vec<_>>())
}

fn algebra_one(a: &LieAlgebra, run: &mut Run) {
    let t = Instant::now();
    let defects = a.jacobi_defects().len();
    let anti = a.is_antisymmetric();
    let fp = a.fingerprint();
    let mut o = Outcome::new(anti && defects == 0, defects as f64 + if anti { 0.0 } else { 1.0 })
        .with(Witness::scalar("dim", a.dim() as f64))
        .with(Witness::scalar("center_dim", fp.center_dim as f64))
        .with(dims_witness("derived_series", fp.derived_dims))
        .with(dims_witness("lower_central_series", fp.lower_central_dims));
    if let Some(c) = a.nilpotency_class() {
        o = o.with(Witness::scalar("nilpotency_class", c as f64));
    }
    if let Some(l) = a.derived_length() {
        o = o.with(Witness::scalar("derived_length", l as f64));
    }
    run.push("lie_axioms", &a.name, Expectation::Pass, t, o);
    for (k, v) in &a.params {
        run.param(k, crate::rational::format_rational(v));
    }
}

/// Structural facts asserted for particular catalog entries.
fn algebra_invariants(a: &LieAlgebra, run: &mut Run) {
    let t = Instant::now();
    let (what, holds) = match a.name.as_str() {
        "F4" => ("nilpotency_class=3", a.nilpotency_class() == Some(3)),
        "l2" => ("solvable_not_nilpotent", a.is_solvable() && !a.is_nilpotent()),
        "mult2" => (
            "center=<e5>",
            Subspace::coordinate(5, &[5]).is_ok_and(|e5| a.center() == e5),
        ),
        _ => return,
    };
    run.push("invariant", &a.name, Expectation::Pass, t, Outcome::new(holds, if holds { 0.0 } else { 1.0 }));
    run.param("property", what);
}

fn algebra_suite(name: &str, run: &mut Run) -> Option<()> {
    let algs = if name == "all" { catalog::defined() } else { vec![catalog::by_name(name)?] };
    for a in &algs {
        algebra_one(a, run);
        algebra_invariants(a, run);
    }
    Some(())
}

fn sup_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

fn group_axioms(law: &GroupLaw, cfg: &RunConfig) -> Outcome {
    let n = law.dim();
    let e = law.identity();
    let mut rng = rng_for(cfg.seed, &format!("group:{}", law.name));
    let mut worst = 0.0f64;
    let mut at = Vec::new();
    for _ in 0..cfg.samples.unwrap_or(1000) {
        let x = uniform_point(&mut rng, n, cfg.half_width);
        let y = uniform_point(&mut rng, n, cfg.half_width);
        let z = uniform_point(&mut rng, n, cfg.half_width);
        let xi = law.inv(&x);
        let r = [
            sup_diff(&law.mul(&law.mul(&x, &y), &z), &law.mul(&x, &law.mul(&y, &z))),
            sup_diff(&law.mul(&x, &e), &x),
            sup_diff(&law.mul(&e, &x), &x),
            sup_diff(&law.mul(&x, &xi), &e),
            sup_diff(&law.mul(&xi, &x), &e),
        ]
        .into_iter()
        .fold(0.0, f64::max);
        if r > worst || r.is_nan() {
            worst = r;
            at = [x, y, z].concat();
        }
    }
    Outcome::new(worst < cfg.tol_grp, worst).with(Witness::new("worst", at))
}

fn group_one(law: &GroupLaw, run: &mut Run) {
    let t = Instant::now();
    let o = group_axioms(law, run.cfg);
    run.push("group_axioms", &law.name, Expectation::Pass, t, o);
    let t = Instant::now();
    let o = match tangent_algebra(law, run.cfg.tol_fd) {
        Ok(ext) => Outcome::new(matches_catalog(law, &ext), ext.max_rounding_error)
            .with(Witness::scalar("step_disagreement", ext.max_step_disagreement)),
        Err(GroupError::ExtractionUnstable { disagreement, .. }) => {
            Outcome::new(false, f64::INFINITY).with(Witness::scalar("step_disagreement", disagreement))
        }
        Err(GroupError::NoRationalMatch { value }) => {
            Outcome::new(false, f64::INFINITY).with(Witness::scalar("unmatched_constant", value))
        }
        Err(_) => Outcome::new(false, f64::INFINITY),
    };
    run.push("tangent_algebra", &law.name, Expectation::Pass, t, o);
    run.param("catalog_algebra", &law.catalog_algebra().name);
}

fn group_suite(name: &str, run: &mut Run) -> Result<(), VerifyError> {
    let laws = if name == "all" {
        catalog_laws()
    } else {
        vec![law_by_name(name).map_err(|_| unknown(&format!("group:{name}")))?]
    };
    for l in &laws {
        group_one(l, run);
    }
    Ok(())
}

/// Expected outcome of the associativity scan, when the caller knows it.
#[derive(Clone, Copy)]
enum AssocExpect {
    Associative,
    Proper,
}

fn retol(mut o: Outcome, tol: f64) -> Outcome {
    o.passed = o.max_residual < tol;
    o
}

fn loop_reports(lp: &LoopLaw, case: &str, dir: Option<Point>, assoc: Option<AssocExpect>, run: &mut Run) -> Result<(), VerifyError> {
    let grid = run.cfg.loop_grid(case);
    let tol = run.cfg.tol_loop;
    let t = Instant::now();
    let o = retol(axioms_check(lp, &grid), tol);
    let solver_failed = !o.max_residual.is_finite();
    run.push("axioms", case, Expectation::Pass, t, o);
    if solver_failed {
        return Ok(());
    }
    let t = Instant::now();
    let (max, triple, v) = associator_scan(lp, &grid)?;
    let o = Outcome::new(max < tol, max)
        .with(Witness::new("triple", triple.concat()))
        .with(Witness::new("associator", v.to_vec()));
    let expected = match assoc {
        Some(AssocExpect::Associative) => Expectation::Pass,
        Some(AssocExpect::Proper) => Expectation::Fail,
        None => Expectation::Info,
    };
    run.push("associativity", case, expected, t, o);
    if let Some(d) = dir {
        let t = Instant::now();
        let rep = nilpotency_class2_check(lp, &d, &grid);
        // The class-two claim concerns proper loops; for a group it is only
        // reported.
        let expected = if matches!(assoc, Some(AssocExpect::Associative)) { Expectation::Info } else { Expectation::Pass };
        run.push("class_two", case, expected, t, retol(rep.outcome, tol));
        run.param("central_dir", format!("({}, {}, {})", d[0], d[1], d[2]));
    }
    Ok(())
}

fn loop_suite(spec: &str, run: &mut Run, assoc: Option<AssocExpect>) -> Result<(), VerifyError> {
    if let Some(which) = spec.strip_prefix("section:") {
        let i: usize = which.strip_prefix("case").and_then(|n| n.parse().ok()).ok_or_else(|| unknown(spec))?;
        let sec = cases::section_loop(i).ok_or_else(|| unknown(spec))?;
        let case = sec.name.clone();
        let t = Instant::now();
        let r = sec.invariant_residual(run.cfg.seed, run.cfg.samples.unwrap_or(200), run.cfg.half_width);
        run.push("coset_invariance", &case, Expectation::Pass, t, Outcome::new(r < run.cfg.tol_grp, r));
        let lp = LoopLaw::from_section(sec);
        return loop_reports(&lp, &case, Some(cases::SECTION_CENTRAL_DIR), assoc, run);
    }
    let (name, assignment) = spec.split_once(':').ok_or_else(|| unknown(spec))?;
    let info = family_info(name).ok_or_else(|| unknown(spec))?;
    let (param, src) = assignment.split_once('=').ok_or_else(|| unknown(spec))?;
    if param.trim() != info.param {
        return Err(unknown(spec));
    }
    let expr = parse(src)?;
    let lp = family(name, expr.clone()).ok_or_else(|| unknown(spec))??;
    let before = run.reports.len();
    loop_reports(&lp, name, info.central_dir, assoc, run)?;
    for r in &mut run.reports[before..] {
        r.params.push((info.param.to_string(), expr.to_string()));
    }
    if matches!(name, "family_c" | "family_d") {
        let t = Instant::now();
        let o = match bijectivity_witness(&expr)? {
            Bijectivity::IndependentOfZ => Outcome::new(true, 0.0).with(Witness::scalar("independent_of_z", 1.0)),
            Bijectivity::Witness { u, x0, y0, z1, z2 } => {
                Outcome::new(false, (z1 - z2).abs()).with(Witness::new("collision", vec![u, x0, y0, z1, z2]))
            }
            Bijectivity::Inconclusive => Outcome::new(true, 0.0).with(Witness::scalar("inconclusive", 1.0)),
        };
        run.push("z_independence", name, Expectation::Info, t, o);
        run.param(info.param, expr.to_string());
    }
    Ok(())
}

fn kepka_suite(c: &KepkaCase, run: &mut Run) -> Result<(), VerifyError> {
    let cc = run.cfg.check_config();
    let case = c.name();
    let mut seen: Vec<(String, String)> = Vec::new();
    for p in &c.pairs {
        for f in [&p.a, &p.b] {
            let key = (f.name.clone(), p.subgroup.name.clone());
            if seen.contains(&key) {
                continue;
            }
            seen.push(key);
            let t = Instant::now();
            let o = is_left_transversal(&c.law, f, &p.subgroup, &cc)?;
            run.push("transversal", &case, Expectation::Pass, t, o);
            run.param("family", &f.name);
            run.param("subgroup", &p.subgroup.name);
        }
    }
    for p in &c.pairs {
        let t = Instant::now();
        let o = connectedness_check(&c.law, &p.a, &p.b, &p.subgroup, &cc);
        run.push("connectedness", &case, Expectation::Pass, t, o);
        run.param("families", format!("{},{}", p.a.name, p.b.name));
        run.param("subgroup", &p.subgroup.name);
    }
    for set in &c.generating_sets {
        let t = Instant::now();
        let refs: Vec<_> = set.iter().collect();
        let g = generation_witness(&c.law, &refs, c.law.dim(), &cc)?;
        run.push("generation", &case, Expectation::Pass, t, g.outcome);
        run.param("families", set.iter().map(|f| f.name.as_str()).collect::<Vec<_>>().join(","));
    }
    for p in &c.pairs {
        let inn = c.law.to_catalog_basis(&p.subgroup.tangent());
        niemenmaa_one(&format!("case{}", p.label), c.algebra(), &inn, Expectation::Pass, run)?;
        run.param("subgroup", &p.subgroup.name);
    }
    for r in &mut run.reports {
        if r.case == case && !r.params.iter().any(|(k, _)| k == "law") {
            r.params.insert(0, ("law".into(), c.law.name.clone()));
        }
    }
    Ok(())
}

fn niemenmaa_one(name: &str, alg: &LieAlgebra, inn: &Subspace, expected: Expectation, run: &mut Run) -> Result<(), VerifyError> {
    let t = Instant::now();
    let o = niemenmaa_check(alg, inn)?;
    run.push("niemenmaa", name, expected, t, o);
    run.param("algebra", &alg.name);
    run.param("inn", inn_text(inn));
    Ok(())
}

fn inn_text(s: &Subspace) -> String {
    let rows: Vec<String> = s.basis().iter().map(|v| crate::liealg::format_vector(v)).collect();
    format!("<{}>", rows.join(", "))
}

fn obstruction_one(c: &ObstructionCase, run: &mut Run) -> Result<(), VerifyError> {
    let t = Instant::now();
    let o = obstruction::obstruction_report(c, &run.cfg.check_config(), run.cfg.delta_obs)?;
    run.push("obstruction", c.name, Expectation::Pass, t, o);
    run.param("fit_dim", c.fit_dim());
    Ok(())
}

/// The exponential functional equation on its solution family and on a
/// linear counterexample, and a collision for `z + u z^2`.
fn lemma_suite(run: &mut Run) -> Result<(), VerifyError> {
    let n = run.cfg.samples.unwrap_or(200);
    let pairs = seeded_pairs(run.cfg.seed, "lemma:functional", n, run.cfg.half_width);
    for (src, solution) in [("-2*(1 - exp(-z))", true), ("0", true), ("3*(1 - exp(-z))", true), ("z", false)] {
        let t = Instant::now();
        let fit = functional_residual(&parse(src)?, &pairs)?;
        let o = Outcome::new(fit.max_residual < 1e-12, fit.max_residual)
            .with(Witness::new("worst_pair", vec![fit.worst_pair.0, fit.worst_pair.1]))
            .with(Witness::scalar("fitted_c", fit.c))
            .with(Witness::scalar("fit_residual", fit.fit_residual));
        let expected = if solution { Expectation::Pass } else { Expectation::Fail };
        run.push("functional_equation", "lemma", expected, t, o);
        run.param("f", src);
    }
    let t = Instant::now();
    let o = match bijectivity_witness(&parse("z^2")?)? {
        Bijectivity::Witness { u, x0, y0, z1, z2 } => {
            Outcome::new(true, 0.0).with(Witness::new("collision", vec![u, x0, y0, z1, z2]))
        }
        _ => Outcome::new(false, 1.0),
    };
    run.push("collision_witness", "lemma", Expectation::Pass, t, o);
    run.param("f", "z^2");
    Ok(())
}

fn repro_all(run: &mut Run) -> Result<(), VerifyError> {
    algebra_suite("all", run);
    group_suite("all", run)?;
    for i in cases::CASES {
        kepka_suite(&cases::case(i).expect("index in range"), run)?;
    }
    for p in cases::niemenmaa_select("cor4").into_iter().chain(cases::niemenmaa_select("g43xR")) {
        niemenmaa_one(&p.name, &p.algebra, &p.inn, Expectation::Fail, run)?;
    }
    for c in obstruction::catalog() {
        obstruction_one(&c, run)?;
    }
    loop_suite("family_a:f=z^2", run, Some(AssocExpect::Proper))?;
    loop_suite("family_a:f=z", run, Some(AssocExpect::Associative))?;
    loop_suite("section:case1", run, None)?;
    lemma_suite(run)
}

/// One line of the catalog listing.
#[derive(Debug, Clone, PartialEq)]
pub struct CatalogEntry {
    pub kind: &'static str,
    pub name: String,
    pub dim: usize,
    pub description: String,
}

/// Everything addressable by `verify`, filtered by a case-insensitive
/// substring of the name.
pub fn catalog_listing(filter: &str) -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    let laws = catalog_laws();
    for l in &laws {
        out.push(CatalogEntry {
            kind: "group",
            name: l.name.clone(),
            dim: l.dim(),
            description: format!("{}; algebra {}", l.description, l.catalog_algebra().name),
        });
    }
    for r in catalog::records() {
        if laws.iter().any(|l| l.catalog_algebra().name == r.name) {
            continue;
        }
        let description = match r.to_algebra() {
            Some(a) => {
                let rels: Vec<String> = a
                    .relations()
                    .iter()
                    .map(|(i, j, k, c)| format!("[e{i},e{j}]={}e{k}", crate::rational::format_rational(c)))
                    .collect();
                if rels.is_empty() { "abelian".to_string() } else { rels.join(" ") }
            }
            None => "not defined here".to_string(),
        };
        out.push(CatalogEntry { kind: "algebra", name: r.name.clone(), dim: r.dim, description });
    }
    for f in FAMILIES {
        out.push(CatalogEntry {
            kind: "loop",
            name: f.name.to_string(),
            dim: 3,
            description: format!("{}; parameter {}({})", f.description, f.param, f.variables),
        });
    }
    for i in [1, 2] {
        out.push(CatalogEntry {
            kind: "loop",
            name: format!("section:case{i}"),
            dim: 3,
            description: format!("loop on the coset space of case {i}"),
        });
    }
    for i in cases::CASES {
        let c = cases::case(i).expect("index in range");
        let pairs: Vec<String> =
            c.pairs.iter().map(|p| format!("{}/{} in {}", p.a.name, p.b.name, p.subgroup.name)).collect();
        out.push(CatalogEntry {
            kind: "kepka",
            name: c.name(),
            dim: c.law.dim(),
            description: format!("law {}: {}", c.law.name, pairs.join(", ")),
        });
    }
    for p in cases::niemenmaa_pairs() {
        out.push(CatalogEntry {
            kind: "niemenmaa",
            name: p.name.clone(),
            dim: p.algebra.dim(),
            description: format!(
                "{} with {}, expected {}",
                p.algebra.name,
                inn_text(&p.inn),
                if p.expect_pass { "pass" } else { "fail" }
            ),
        });
    }
    for c in obstruction::catalog() {
        out.push(CatalogEntry { kind: "obstruction", name: c.name.to_string(), dim: c.fit_dim(), description: c.description.into() });
    }
    let needle = filter.to_lowercase();
    out.retain(|e| e.name.to_lowercase().contains(&needle));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_filters() {
        let mult = catalog_listing("mult");
        assert_eq!(mult.len(), 8, "{mult:?}");
        assert!(mult.iter().all(|e| e.kind == "group"));
        assert!(catalog_listing("zzz").is_empty());
        assert!(catalog_listing("").len() > 60);
    }

    #[test]
    fn unknown_targets() {
        let cfg = RunConfig::default();
        for t in ["nope", "algebra:nope", "kepka:case9", "loop:family_a:h=z", "loop:family_q:f=z", "obstruction:x"] {
            assert!(matches!(run_target(t, &cfg), Err(VerifyError::UnknownTarget(_))), "{t}");
        }
        assert!(matches!(run_target("loop:family_a:f=z^", &cfg), Err(VerifyError::Syntax(_))));
        let bad = RunConfig { tol_grp: -1.0, ..RunConfig::default() };
        assert!(matches!(run_target("algebra:l2", &bad), Err(VerifyError::InvalidConfig(_))));
    }

    #[test]
    fn kepka_case_one_reports() {
        let r = run_target("kepka:case1", &RunConfig::default()).unwrap();
        let checks: Vec<&str> = r.iter().map(|r| r.check.as_str()).collect();
        assert_eq!(checks, ["transversal", "transversal", "connectedness", "generation", "niemenmaa"]);
        assert!(r.iter().all(|r| r.passed && r.matched()));
    }

    #[test]
    fn linear_family_a_is_a_group() {
        let r = run_target("loop:family_a:f=z", &RunConfig::default()).unwrap();
        let a = r.iter().find(|r| r.check == "associativity").unwrap();
        assert!(a.max_residual < 1e-8);
    }
}
