//! Loops on R^3: the four families over the 4-dimensional group, loops
//! induced by sections, divisions, and grid diagnostics.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::exprdsl::{partial, Env, Expr, ExprError, Var};
use crate::groupcat::{CosetMap, GroupLaw, SubgroupSpec};
use crate::linalg::least_squares;
use crate::report::{Outcome, Witness};
use crate::sampling::{lattice, linspace, rng_for, uniform_point};
use crate::solve::{newton_nd, scan_roots, SCAN_HI, SCAN_LO, SCAN_POINTS};

pub type Point = [f64; 3];

pub const TOL_LOOP: f64 = 1e-8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LoopError {
    #[error("{function}(0) = {value}, expected 0")]
    NotNormalized { function: &'static str, value: f64 },
    #[error("{function} may only use the variables {allowed}")]
    Variables { function: &'static str, allowed: &'static str },
    #[error("no solution in the scan interval")]
    NoSolution,
    #[error("{} solutions found: {roots:?}", roots.len())]
    MultipleSolutions { roots: Vec<f64> },
    #[error("division solver did not converge")]
    NoConvergence,
    #[error(transparent)]
    Expr(#[from] ExprError),
}

/// Loop induced by a section of `G → G/S`.
#[derive(Clone)]
pub struct SectionLoop {
    pub name: String,
    pub law: GroupLaw,
    pub subgroup: SubgroupSpec,
    /// Coset coordinates to group elements, `section(0) = identity`.
    pub section: CosetMap,
}

impl SectionLoop {
    pub fn new(
        name: &str,
        law: GroupLaw,
        subgroup: SubgroupSpec,
        section: impl Fn(&[f64]) -> Vec<f64> + Send + Sync + 'static,
    ) -> Self {
        SectionLoop { name: name.to_string(), law, subgroup, section: Arc::new(section) }
    }

    fn cc(&self, g: &[f64]) -> Point {
        let v = (self.subgroup.coset_coords)(g);
        [v[0], v[1], v[2]]
    }

    /// Largest violation of: `cc∘lift = id`, `cc` constant along `g·S`,
    /// `cc∘section = id`, `section(0) = e`, over seeded samples.
    pub fn invariant_residual(&self, seed: u64, samples: usize, half_width: f64) -> f64 {
        let mut rng = rng_for(seed, &format!("section-invariants:{}", self.name));
        let n = self.law.dim();
        let k = self.subgroup.dim();
        let mut worst = norm(&self.law.identity().iter().zip((self.section)(&[0.0; 3])).map(|(a, b)| a - b).collect::<Vec<_>>());
        for _ in 0..samples {
            let p = uniform_point(&mut rng, 3, half_width);
            let g = uniform_point(&mut rng, n, half_width);
            let s = self.subgroup.parametrize(&uniform_point(&mut rng, k, half_width));
            let back = (self.subgroup.coset_coords)(&(self.subgroup.lift)(&p));
            let sec = (self.subgroup.coset_coords)(&(self.section)(&p));
            let moved = (self.subgroup.coset_coords)(&self.law.mul(&g, &s));
            let fixed = (self.subgroup.coset_coords)(&g);
            for i in 0..3 {
                worst = worst.max((back[i] - p[i]).abs()).max((sec[i] - p[i]).abs()).max((moved[i] - fixed[i]).abs());
            }
        }
        worst
    }
}

#[derive(Clone)]
enum LoopKind {
    A(Expr),
    B(Expr),
    C(Expr),
    D(Expr),
    Section(Arc<SectionLoop>),
}

/// A loop law on R^3 with identity at the origin.
#[derive(Clone)]
pub struct LoopLaw {
    pub name: String,
    pub params: Vec<(String, String)>,
    kind: LoopKind,
}

impl fmt::Debug for LoopLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LoopLaw").field("name", &self.name).field("params", &self.params).finish()
    }
}

fn ev(e: &Expr, x: f64, y: f64, z: f64) -> Result<f64, LoopError> {
    Ok(e.eval(&Env::xyz(x, y, z))?)
}

fn check_fn(e: &Expr, function: &'static str, allowed: &[Var], label: &'static str) -> Result<(), LoopError> {
    if !e.free_vars().iter().all(|v| allowed.contains(v)) {
        return Err(LoopError::Variables { function, allowed: label });
    }
    let value = ev(e, 0.0, 0.0, 0.0)?;
    if value.abs() > 1e-12 {
        return Err(LoopError::NotNormalized { function, value });
    }
    Ok(())
}

/// Single root of `phi` on the scan interval, or the matching error.
fn unique_root(phi: impl Fn(f64) -> Result<f64, LoopError>) -> Result<f64, LoopError> {
    let roots = scan_roots(phi, SCAN_LO, SCAN_HI, SCAN_POINTS)?;
    match roots.len() {
        0 => Err(LoopError::NoSolution),
        1 => Ok(roots[0]),
        _ => Err(LoopError::MultipleSolutions { roots }),
    }
}

impl LoopLaw {
    /// `(x1 + x2 e^{f(z1)}, y1 + y2 + z2 f(z1), z1 + z2)`.
    pub fn family_a(f: Expr) -> Result<Self, LoopError> {
        check_fn(&f, "f", &[Var::Z], "z")?;
        Ok(LoopLaw { name: "family_a".into(), params: vec![("f".into(), f.to_string())], kind: LoopKind::A(f) })
    }

    /// `(x1 + x2 e^{z1}, y1 + y2 − z2 h(x1,z1), z1 + z2)`.
    pub fn family_b(h: Expr) -> Result<Self, LoopError> {
        check_fn(&h, "h", &[Var::X, Var::Z], "x, z")?;
        Ok(LoopLaw { name: "family_b".into(), params: vec![("h".into(), h.to_string())], kind: LoopKind::B(h) })
    }

    /// `(x1 + e^{z1}(x2 + f(p1)(1 − e^{z2})), y1 + y2 − z2 f(p1), z1 + z2)`.
    pub fn family_c(f: Expr) -> Result<Self, LoopError> {
        check_fn(&f, "f", &[Var::X, Var::Y, Var::Z], "x, y, z")?;
        Ok(LoopLaw { name: "family_c".into(), params: vec![("f".into(), f.to_string())], kind: LoopKind::C(f) })
    }

    /// `(x1 + e^{z1}[x2 + k(p1) − e^{z2}(z1 y2 + k(p1))], y1 + y2, z1 + z2)`.
    pub fn family_d(k: Expr) -> Result<Self, LoopError> {
        check_fn(&k, "k", &[Var::X, Var::Y, Var::Z], "x, y, z")?;
        Ok(LoopLaw { name: "family_d".into(), params: vec![("k".into(), k.to_string())], kind: LoopKind::D(k) })
    }

    pub fn from_section(s: SectionLoop) -> Self {
        LoopLaw { name: s.name.clone(), params: Vec::new(), kind: LoopKind::Section(Arc::new(s)) }
    }

    pub fn mul(&self, p: &Point, q: &Point) -> Result<Point, LoopError> {
        let ([x1, y1, z1], [x2, y2, z2]) = (*p, *q);
        Ok(match &self.kind {
            LoopKind::A(f) => {
                let fz = ev(f, 0.0, 0.0, z1)?;
                [x1 + x2 * fz.exp(), y1 + y2 + z2 * fz, z1 + z2]
            }
            LoopKind::B(h) => [x1 + x2 * z1.exp(), y1 + y2 - z2 * ev(h, x1, 0.0, z1)?, z1 + z2],
            LoopKind::C(f) => {
                let fv = ev(f, x1, y1, z1)?;
                [x1 + z1.exp() * (x2 + fv * (1.0 - z2.exp())), y1 + y2 - z2 * fv, z1 + z2]
            }
            LoopKind::D(k) => {
                let kv = ev(k, x1, y1, z1)?;
                [x1 + z1.exp() * (x2 + kv - z2.exp() * (z1 * y2 + kv)), y1 + y2, z1 + z2]
            }
            LoopKind::Section(s) => s.cc(&s.law.mul(&(s.section)(p), &(s.subgroup.lift)(q))),
        })
    }

    /// The unique `q` with `a ∗ q = b`.
    pub fn ldiv(&self, a: &Point, b: &Point) -> Result<Point, LoopError> {
        let ([xa, ya, za], [xb, yb, zb]) = (*a, *b);
        let z = zb - za;
        Ok(match &self.kind {
            LoopKind::A(f) => {
                let fz = ev(f, 0.0, 0.0, za)?;
                [(xb - xa) * (-fz).exp(), yb - ya - z * fz, z]
            }
            LoopKind::B(h) => [(xb - xa) * (-za).exp(), yb - ya + z * ev(h, xa, 0.0, za)?, z],
            LoopKind::C(f) => {
                let fv = ev(f, xa, ya, za)?;
                [(xb - xa) * (-za).exp() - fv * (1.0 - z.exp()), yb - ya + z * fv, z]
            }
            LoopKind::D(k) => {
                let kv = ev(k, xa, ya, za)?;
                let y = yb - ya;
                [(xb - xa) * (-za).exp() - kv + z.exp() * (za * y + kv), y, z]
            }
            LoopKind::Section(s) => {
                let g = s.law.mul(&s.law.inv(&(s.section)(a)), &(s.subgroup.lift)(b));
                s.cc(&g)
            }
        })
    }

    /// The unique `p` with `p ∗ a = b`.
    pub fn rdiv(&self, b: &Point, a: &Point) -> Result<Point, LoopError> {
        let ([xa, ya, za], [xb, yb, zb]) = (*a, *b);
        let z = zb - za;
        match &self.kind {
            LoopKind::A(f) => {
                let fz = ev(f, 0.0, 0.0, z)?;
                Ok([xb - xa * fz.exp(), yb - ya - za * fz, z])
            }
            LoopKind::B(h) => {
                let x = xb - xa * z.exp();
                Ok([x, yb - ya + za * ev(h, x, 0.0, z)?, z])
            }
            LoopKind::C(f) => {
                // x and y are affine in the value F = f(x, y, z).
                let x_of = |fv: f64| xb - z.exp() * (xa + fv * (1.0 - za.exp()));
                let y_of = |fv: f64| yb - ya + za * fv;
                let fv = unique_root(|t| Ok(t - ev(f, x_of(t), y_of(t), z)?))?;
                Ok([x_of(fv), y_of(fv), z])
            }
            LoopKind::D(k) => {
                let y = yb - ya;
                let x_of = |kv: f64| xb - z.exp() * (xa + kv - za.exp() * (z * ya + kv));
                let kv = unique_root(|t| Ok(t - ev(k, x_of(t), y, z)?))?;
                Ok([x_of(kv), y, z])
            }
            LoopKind::Section(_) => {
                let resid = |p: &[f64]| -> Vec<f64> {
                    match self.mul(&[p[0], p[1], p[2]], a) {
                        Ok(m) => vec![m[0] - xb, m[1] - yb, m[2] - zb],
                        Err(_) => vec![f64::NAN; 3],
                    }
                };
                let starts = [b.to_vec(), vec![xb - xa, yb - ya, zb - za], vec![0.0; 3]];
                starts
                    .iter()
                    .find_map(|s| newton_nd(resid, s, 1e-12, 60))
                    .map(|p| [p[0], p[1], p[2]])
                    .ok_or(LoopError::NoConvergence)
            }
        }
    }

    pub fn section(&self) -> Option<&SectionLoop> {
        match &self.kind {
            LoopKind::Section(s) => Some(s),
            _ => None,
        }
    }
}

fn norm(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

fn diff(a: &Point, b: &Point) -> f64 {
    (0..3).fold(0.0, |m, i| m.max((a[i] - b[i]).abs()))
}

/// Sample points for loop diagnostics: a lattice, a coarse lattice used as
/// the second factor of pairs and triples, and seeded random triples.
#[derive(Debug, Clone)]
pub struct LoopGrid {
    pub lattice: Vec<Point>,
    pub coarse: Vec<Point>,
    pub random: Vec<[Point; 3]>,
}

fn to_point(v: &[f64]) -> Point {
    [v[0], v[1], v[2]]
}

impl LoopGrid {
    pub fn new(seed: u64, label: &str, half_width: f64, per_axis: usize, random: usize) -> Self {
        let mut rng = rng_for(seed, &format!("loop-grid:{label}"));
        let random = (0..random)
            .map(|_| {
                let mut t = [[0.0; 3]; 3];
                for p in t.iter_mut() {
                    *p = to_point(&uniform_point(&mut rng, 3, half_width));
                }
                t
            })
            .collect();
        LoopGrid {
            lattice: lattice(per_axis, 3, half_width).iter().map(|v| to_point(v)).collect(),
            coarse: lattice(3, 3, half_width).iter().map(|v| to_point(v)).collect(),
            random,
        }
    }

    /// 7 points per axis on `[-2, 2]^3` and 500 random triples.
    pub fn standard(seed: u64, label: &str) -> Self {
        LoopGrid::new(seed, label, 2.0, 7, 500)
    }

    pub fn pairs(&self) -> Vec<(Point, Point)> {
        let mut out: Vec<(Point, Point)> =
            self.lattice.iter().flat_map(|a| self.coarse.iter().map(move |b| (*a, *b))).collect();
        out.extend(self.random.iter().map(|t| (t[0], t[1])));
        out
    }

    pub fn small_pairs(&self) -> Vec<(Point, Point)> {
        let mut out: Vec<(Point, Point)> =
            self.coarse.iter().flat_map(|a| self.coarse.iter().map(move |b| (*a, *b))).collect();
        out.extend(self.random.iter().map(|t| (t[0], t[1])));
        out
    }

    pub fn triples(&self) -> Vec<[Point; 3]> {
        let mut out = Vec::new();
        for a in &self.coarse {
            for b in &self.coarse {
                for c in &self.coarse {
                    out.push([*a, *b, *c]);
                }
            }
        }
        out.extend(self.random.iter().copied());
        out
    }
}

fn failure(a: &Point, b: &Point, e: &LoopError) -> Outcome {
    let mut w = a.to_vec();
    w.extend_from_slice(b);
    Outcome::new(false, f64::INFINITY).with(Witness::new(format!("solver_failure: {e}"), w))
}

/// Identity and division residuals over the grid.
pub fn axioms_check(lp: &LoopLaw, grid: &LoopGrid) -> Outcome {
    let e = [0.0; 3];
    let mut worst = 0.0f64;
    let mut at: Vec<f64> = Vec::new();
    let mut note = |r: f64, w: &[Point]| {
        if r > worst || !r.is_finite() {
            worst = r;
            at = w.iter().flatten().copied().collect();
        }
    };
    for p in &grid.lattice {
        match (lp.mul(&e, p), lp.mul(p, &e)) {
            (Ok(l), Ok(r)) => note(diff(&l, p).max(diff(&r, p)), &[*p]),
            (Err(err), _) | (_, Err(err)) => return failure(&e, p, &err),
        }
    }
    for (a, b) in grid.pairs() {
        let q = match lp.ldiv(&a, &b) {
            Ok(q) => q,
            Err(err) => return failure(&a, &b, &err),
        };
        let p = match lp.rdiv(&b, &a) {
            Ok(p) => p,
            Err(err) => return failure(&a, &b, &err),
        };
        match (lp.mul(&a, &q), lp.mul(&p, &a)) {
            (Ok(l), Ok(r)) => note(diff(&l, &b).max(diff(&r, &b)), &[a, b]),
            (Err(err), _) | (_, Err(err)) => return failure(&a, &b, &err),
        }
    }
    Outcome::new(worst < TOL_LOOP, worst).with(Witness::new("worst", at))
}

/// `a(bc) \ (ab)c`; zero exactly when the triple associates.
pub fn associator(lp: &LoopLaw, a: &Point, b: &Point, c: &Point) -> Result<Point, LoopError> {
    let left = lp.mul(a, &lp.mul(b, c)?)?;
    let right = lp.mul(&lp.mul(a, b)?, c)?;
    lp.ldiv(&left, &right)
}

/// `ab \ ba`; zero exactly when the pair commutes.
pub fn commutator(lp: &LoopLaw, a: &Point, b: &Point) -> Result<Point, LoopError> {
    lp.ldiv(&lp.mul(a, b)?, &lp.mul(b, a)?)
}

/// Largest associator over the grid triples, with the triple attaining it.
pub fn associator_scan(lp: &LoopLaw, grid: &LoopGrid) -> Result<(f64, [Point; 3], Point), LoopError> {
    let mut best = (0.0, [[0.0; 3]; 3], [0.0; 3]);
    for t in grid.triples() {
        let v = associator(lp, &t[0], &t[1], &t[2])?;
        let n = norm(&v);
        if n > best.0 {
            best = (n, t, v);
        }
    }
    Ok(best)
}

/// Residual of the centre identities for `z` against the pair `(x, y)`.
fn central_residual(lp: &LoopLaw, z: &Point, x: &Point, y: &Point) -> Result<f64, LoopError> {
    let m = |a: &Point, b: &Point| lp.mul(a, b);
    let r1 = diff(&m(&m(z, x)?, y)?, &m(z, &m(x, y)?)?);
    let r2 = diff(&m(x, &m(y, z)?)?, &m(&m(x, y)?, z)?);
    let r3 = diff(&m(&m(x, z)?, y)?, &m(x, &m(z, y)?)?);
    let r4 = diff(&m(z, x)?, &m(x, z)?);
    Ok(r1.max(r2).max(r3).max(r4))
}

/// `zx·y = z·xy`, `x·yz = xy·z`, `xz·y = x·zy`, `zx = xz` on grid pairs.
pub fn is_central(lp: &LoopLaw, z: &Point, grid: &LoopGrid) -> Outcome {
    let mut worst = 0.0f64;
    let mut at = Vec::new();
    for (x, y) in grid.small_pairs() {
        match central_residual(lp, z, &x, &y) {
            Ok(r) if r > worst => {
                worst = r;
                at = [x, y].concat();
            }
            Ok(_) => {}
            Err(e) => return failure(&x, &y, &e),
        }
    }
    Outcome::new(worst < TOL_LOOP, worst).with(Witness::new("worst", at))
}

fn off_line(v: &Point, dir: &Point) -> f64 {
    let n2: f64 = dir.iter().map(|d| d * d).sum();
    if n2 == 0.0 {
        return norm(v);
    }
    let t: f64 = v.iter().zip(dir).map(|(a, b)| a * b).sum::<f64>() / n2;
    (0..3).fold(0.0, |m, i| m.max((v[i] - t * dir[i]).abs()))
}

/// Outcome of the class-two check.
#[derive(Debug, Clone)]
pub struct ClassTwoReport {
    pub outcome: Outcome,
    /// `Some(1)` if every associator and commutator vanishes, `Some(2)` if the
    /// check passes otherwise, `None` when it fails.
    pub class: Option<u8>,
    pub max_associator: f64,
}

/// Multiples of `dir` are central, and associators and commutators lie on
/// the line spanned by `dir`.
pub fn nilpotency_class2_check(lp: &LoopLaw, dir: &Point, grid: &LoopGrid) -> ClassTwoReport {
    let fail = |o: Outcome| ClassTwoReport { outcome: o, class: None, max_associator: f64::NAN };
    let mut worst = 0.0f64;
    let mut worst_at = Vec::new();
    for t in [-2.0, -1.0, -0.5, 0.5, 1.0, 2.0] {
        let z = [t * dir[0], t * dir[1], t * dir[2]];
        let o = is_central(lp, &z, grid);
        if !o.max_residual.is_finite() {
            return fail(o);
        }
        if o.max_residual > worst {
            worst = o.max_residual;
            worst_at = z.to_vec();
        }
    }
    let mut max_comm = 0.0f64;
    for (a, b) in grid.small_pairs() {
        match commutator(lp, &a, &b) {
            Ok(c) => {
                max_comm = max_comm.max(norm(&c));
                let r = off_line(&c, dir);
                if r > worst {
                    worst = r;
                    worst_at = [a, b, c].concat();
                }
            }
            Err(e) => return fail(failure(&a, &b, &e)),
        }
    }
    let mut proper = (0.0f64, Vec::new());
    for t in grid.triples() {
        match associator(lp, &t[0], &t[1], &t[2]) {
            Ok(v) => {
                let n = norm(&v);
                if n > proper.0 {
                    proper = (n, [t[0], t[1], t[2], v].concat());
                }
                let r = off_line(&v, dir);
                if r > worst {
                    worst = r;
                    worst_at = [t[0], t[1], t[2], v].concat();
                }
            }
            Err(e) => return fail(failure(&t[0], &t[1], &e)),
        }
    }
    let passed = worst < TOL_LOOP;
    let class = match (passed, proper.0.max(max_comm) < TOL_LOOP) {
        (false, _) => None,
        (true, true) => Some(1),
        (true, false) => Some(2),
    };
    let mut outcome = Outcome::new(passed, worst).with(Witness::new("worst", worst_at));
    if proper.0 > 0.0 {
        outcome = outcome.with(Witness::new("properness", proper.1));
    }
    if let Some(c) = class {
        outcome = outcome.with(Witness::scalar("class", f64::from(c)));
    }
    ClassTwoReport { outcome, class, max_associator: proper.0 }
}

/// Result of probing `z ↦ z + u f(x0, y0, z)` for injectivity.
#[derive(Debug, Clone, PartialEq)]
pub enum Bijectivity {
    IndependentOfZ,
    Witness { u: f64, x0: f64, y0: f64, z1: f64, z2: f64 },
    /// `f` depends on `z` but no collision was found on the probes.
    Inconclusive,
}

const U_PROBES: [f64; 8] = [1.0, -1.0, 2.0, -2.0, 0.5, -0.5, 4.0, -4.0];
const XY_PROBES: [(f64, f64); 6] = [(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0), (1.0, 1.0)];

pub fn bijectivity_witness(f: &Expr) -> Result<Bijectivity, LoopError> {
    let mut depends = false;
    for &(x0, y0) in &XY_PROBES {
        for z in linspace(-2.0, 2.0, 9) {
            if partial(f, &Env::xyz(x0, y0, z), Var::Z, 1e-3)?.abs() > 1e-7 {
                depends = true;
            }
        }
    }
    if !depends {
        return Ok(Bijectivity::IndependentOfZ);
    }
    let mut z1s = linspace(SCAN_LO, SCAN_HI, SCAN_POINTS);
    z1s.sort_by(|a, b| a.abs().total_cmp(&b.abs()).then(a.total_cmp(b)));
    for &u in &U_PROBES {
        for &(x0, y0) in &XY_PROBES {
            let psi = |z: f64| -> Result<f64, LoopError> { Ok(z + u * ev(f, x0, y0, z)?) };
            for &z1 in &z1s {
                let target = psi(z1)?;
                let roots = scan_roots(|z| Ok::<_, LoopError>(psi(z)? - target), SCAN_LO, SCAN_HI, SCAN_POINTS)?;
                let other = roots
                    .iter()
                    .filter(|r| (*r - z1).abs() > 1e-6)
                    .min_by(|a, b| (*a - z1).abs().total_cmp(&(*b - z1).abs()));
                if let Some(&z2) = other {
                    if (psi(z2)? - target).abs() < TOL_LOOP {
                        return Ok(Bijectivity::Witness { u, x0, y0, z1, z2 });
                    }
                }
            }
        }
    }
    Ok(Bijectivity::Inconclusive)
}

/// Residual of `f(z2) + e^{−z2} f(z1) = f(z1 + z2)` and the best fit
/// `f ≈ c(1 − e^{−z})`.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionalFit {
    pub max_residual: f64,
    pub worst_pair: (f64, f64),
    pub c: f64,
    pub fit_residual: f64,
}

pub fn functional_residual(f: &Expr, pairs: &[(f64, f64)]) -> Result<FunctionalFit, LoopError> {
    let fz = |z: f64| ev(f, 0.0, 0.0, z);
    let mut worst = (0.0f64, (0.0, 0.0));
    for &(z1, z2) in pairs {
        let r = (fz(z2)? + (-z2).exp() * fz(z1)? - fz(z1 + z2)?).abs();
        if r > worst.0 || r.is_nan() {
            worst = (r, (z1, z2));
        }
    }
    let zs = linspace(-2.0, 2.0, 41);
    let basis: Vec<Vec<f64>> = zs.iter().map(|z| vec![1.0 - (-z).exp()]).collect();
    let vals: Vec<f64> = zs.iter().map(|&z| fz(z)).collect::<Result<_, _>>()?;
    let c = least_squares(&basis, &vals)[0];
    let fit_residual = zs.iter().zip(&vals).fold(0.0f64, |m, (z, v)| m.max((v - c * (1.0 - (-z).exp())).abs()));
    Ok(FunctionalFit { max_residual: worst.0, worst_pair: worst.1, c, fit_residual })
}

/// `n` seeded pairs in `[-w, w]^2`.
pub fn seeded_pairs(seed: u64, label: &str, n: usize, half_width: f64) -> Vec<(f64, f64)> {
    let mut rng = rng_for(seed, label);
    (0..n)
        .map(|_| {
            let p = uniform_point(&mut rng, 2, half_width);
            (p[0], p[1])
        })
        .collect()
}

/// Loop families addressable by name, with their parameter name, allowed
/// variables and central-direction candidate.
pub struct FamilyInfo {
    pub name: &'static str,
    pub param: &'static str,
    pub variables: &'static str,
    pub central_dir: Option<Point>,
    pub description: &'static str,
}

pub const FAMILIES: &[FamilyInfo] = &[
    FamilyInfo {
        name: "family_a",
        param: "f",
        variables: "z",
        central_dir: Some([0.0, 1.0, 0.0]),
        description: "(x1 + x2 e^{f(z1)}, y1 + y2 + z2 f(z1), z1 + z2)",
    },
    FamilyInfo {
        name: "family_b",
        param: "h",
        variables: "x, z",
        central_dir: Some([0.0, 1.0, 0.0]),
        description: "(x1 + x2 e^{z1}, y1 + y2 - z2 h(x1,z1), z1 + z2)",
    },
    FamilyInfo {
        name: "family_c",
        param: "f",
        variables: "x, y, z",
        central_dir: None,
        description: "(x1 + e^{z1}(x2 + f(1 - e^{z2})), y1 + y2 - z2 f, z1 + z2), f = f(x1,y1,z1)",
    },
    FamilyInfo {
        name: "family_d",
        param: "k",
        variables: "x, y, z",
        central_dir: None,
        description: "(x1 + e^{z1}[x2 + k - e^{z2}(z1 y2 + k)], y1 + y2, z1 + z2), k = k(x1,y1,z1)",
    },
];

pub fn family_info(name: &str) -> Option<&'static FamilyInfo> {
    FAMILIES.iter().find(|f| f.name == name)
}

/// Builds a family loop from its name and parameter expression.
pub fn family(name: &str, e: Expr) -> Option<Result<LoopLaw, LoopError>> {
    Some(match name {
        "family_a" => LoopLaw::family_a(e),
        "family_b" => LoopLaw::family_b(e),
        "family_c" => LoopLaw::family_c(e),
        "family_d" => LoopLaw::family_d(e),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exprdsl::parse;
    use std::f64::consts::E;

    fn close(a: &Point, b: &Point, tol: f64) -> bool {
        diff(a, b) < tol
    }

    fn fa(src: &str) -> LoopLaw {
        LoopLaw::family_a(parse(src).unwrap()).unwrap()
    }

    #[test]
    fn family_a_examples() {
        let l = fa("z^2");
        assert!(close(&l.mul(&[0., 0., 1.], &[1., 1., 1.]).unwrap(), &[E, 2., 2.], 1e-15));
        assert_eq!(l.mul(&[0.; 3], &[0.3, -1.0, 2.0]).unwrap(), [0.3, -1.0, 2.0]);
        let q = l.ldiv(&[1., 2., 3.], &[2., 3., 4.]).unwrap();
        assert!(close(&q, &[(-9f64).exp(), -8., 1.], 1e-15));
        assert!(matches!(LoopLaw::family_a(parse("z+1").unwrap()), Err(LoopError::NotNormalized { .. })));
        assert!(matches!(LoopLaw::family_a(parse("x").unwrap()), Err(LoopError::Variables { .. })));
    }

    #[test]
    fn family_b_examples() {
        let l = LoopLaw::family_b(parse("x*z").unwrap()).unwrap();
        assert!(close(&l.mul(&[1., 0., 1.], &[1., 1., 1.]).unwrap(), &[1. + E, 0., 2.], 1e-15));
        let l = LoopLaw::family_b(parse("x^2").unwrap()).unwrap();
        let p = l.rdiv(&[1., 1., 1.], &[0., 0., 1.]).unwrap();
        assert!(close(&p, &[1., 2., 0.], 1e-15));
        assert!(close(&l.mul(&p, &[0., 0., 1.]).unwrap(), &[1., 1., 1.], 1e-15));
    }

    #[test]
    fn families_c_and_d_examples() {
        let d = LoopLaw::family_d(parse("0").unwrap()).unwrap();
        assert!(close(&d.mul(&[0., 1., 1.], &[0., 1., 0.]).unwrap(), &[-E, 2., 1.], 1e-15));
        let c = LoopLaw::family_c(parse("0").unwrap()).unwrap();
        assert!(close(&c.mul(&[1., 0., 1.], &[1., 1., 1.]).unwrap(), &[1. + E, 1., 2.], 1e-15));
        let c = LoopLaw::family_c(parse("x*z/10").unwrap()).unwrap();
        let (a, b) = ([0.5, -1.0, 1.5], [1.0, 0.25, -0.5]);
        let p = c.rdiv(&b, &a).unwrap();
        assert!(close(&c.mul(&p, &a).unwrap(), &b, 1e-10));
    }

    #[test]
    fn family_c_non_unique_division_is_surfaced() {
        let c = LoopLaw::family_c(parse("y^2").unwrap()).unwrap();
        let err = c.rdiv(&[0., 0., 1.], &[0., 0., 1.]).unwrap_err();
        assert_eq!(err, LoopError::MultipleSolutions { roots: vec![0.0, 1.0] });
        let o = axioms_check(&c, &LoopGrid::standard(1, "t"));
        assert!(!o.passed);
        assert!(o.witnesses[0].label.starts_with("solver_failure"));
    }

    #[test]
    fn associator_examples() {
        let l = fa("z^2");
        let a = [0., 0., 1.];
        let v = associator(&l, &a, &a, &[1., 0., 0.]).unwrap();
        assert!(close(&v, &[1.0 - (-2f64).exp(), 0., 0.], 1e-12));
        assert_eq!(associator(&l, &[0.; 3], &a, &[1., 2., 3.]).unwrap(), [0.0; 3]);
    }

    #[test]
    fn central_elements_of_family_a() {
        let l = fa("z^2");
        let g = LoopGrid::new(3, "c", 2.0, 3, 50);
        assert!(is_central(&l, &[0., 5., 0.], &g).passed);
        assert!(is_central(&l, &[0.; 3], &g).passed);
        assert!(!is_central(&l, &[1., 0., 0.], &g).passed);
    }

    #[test]
    fn bijectivity_examples() {
        assert_eq!(bijectivity_witness(&parse("x+y").unwrap()).unwrap(), Bijectivity::IndependentOfZ);
        assert_eq!(
            bijectivity_witness(&parse("z^2").unwrap()).unwrap(),
            Bijectivity::Witness { u: 1.0, x0: 0.0, y0: 0.0, z1: 0.0, z2: -1.0 }
        );
        match bijectivity_witness(&parse("sin(z)").unwrap()).unwrap() {
            Bijectivity::Witness { u, z1, z2, .. } => {
                assert_eq!(u, 2.0);
                assert!(((z1 + 2.0 * z1.sin()) - (z2 + 2.0 * z2.sin())).abs() < 1e-8);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn functional_equation_examples() {
        let pairs = seeded_pairs(5, "fe", 200, 2.0);
        let r = functional_residual(&parse("3*(1-exp(-z))").unwrap(), &pairs).unwrap();
        assert!(r.max_residual < 1e-12);
        assert!((r.c - 3.0).abs() < 1e-12);
        assert_eq!(functional_residual(&parse("0").unwrap(), &pairs).unwrap().max_residual, 0.0);
        let r = functional_residual(&parse("z").unwrap(), &[(1.0, 1.0)]).unwrap();
        assert!((r.max_residual - (1.0 - (-1f64).exp())).abs() < 1e-15);
    }
}
