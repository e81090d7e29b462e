//! Coordinate Lie group laws on R^n with identity at the origin.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::liealg::{catalog, LieAlgebra, Subspace};
use crate::rational::{self, int, Rational};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GroupError {
    #[error("dimension mismatch: law has dimension {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("finite-difference estimates disagree by {disagreement:e} (tolerance {tolerance:e})")]
    ExtractionUnstable { disagreement: f64, tolerance: f64 },
    #[error("structure constant {value} has no rational match with denominator <= 12")]
    NoRationalMatch { value: f64 },
    #[error("unknown group law {0}")]
    UnknownLaw(String),
}

#[derive(Debug, Clone, PartialEq)]
enum LawKind {
    G43,
    R2L2,
    G5P1,
    G5P2,
    G5P3,
    G5P4,
    Mult1,
    Mult2,
    Mult3,
    Mult4,
    Mult5,
    /// Rotation-dilation on the first two coordinates; `a = 0` is allowed
    /// only through [`GroupLaw::motion`].
    Mult6 { a: f64 },
    Mult7 { a: f64, b: f64 },
    Abelian(usize),
}

/// A closed-form coordinate group law with its linked catalog algebra.
#[derive(Clone)]
pub struct GroupLaw {
    pub name: String,
    kind: LawKind,
    dim: usize,
    pub params: BTreeMap<String, Rational>,
    algebra: LieAlgebra,
    /// Rows are the catalog basis vectors written in coordinate-curve basis.
    basis_change: Vec<Vec<Rational>>,
    pub description: &'static str,
}

impl fmt::Debug for GroupLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupLaw").field("name", &self.name).field("params", &self.params).finish()
    }
}

/// Signed permutation rows: entry `(i, s)` means catalog `E_k = s * c_i`.
fn signed_perm(n: usize, entries: &[(usize, i64)]) -> Vec<Vec<Rational>> {
    entries
        .iter()
        .map(|&(i, s)| {
            let mut r = vec![int(0); n];
            r[i - 1] = int(s);
            r
        })
        .collect()
}

fn identity_change(n: usize) -> Vec<Vec<Rational>> {
    let e: Vec<(usize, i64)> = (1..=n).map(|i| (i, 1)).collect();
    signed_perm(n, &e)
}

fn nonzero(name: &str, v: &Rational) -> Result<(), GroupError> {
    if num::Zero::is_zero(v) {
        return Err(GroupError::InvalidParameter(format!("{name} must be nonzero")));
    }
    Ok(())
}

impl GroupLaw {
    fn make(
        name: &str,
        kind: LawKind,
        dim: usize,
        algebra: LieAlgebra,
        basis_change: Vec<Vec<Rational>>,
        description: &'static str,
    ) -> Self {
        GroupLaw {
            name: name.to_string(),
            kind,
            dim,
            params: algebra.params.clone(),
            algebra,
            basis_change,
            description,
        }
    }

    /// `g(x1 + y1 e^{x4}, x2 + y2 + x4 y3, x3 + y3, x4 + y4)`.
    pub fn g4_3() -> Self {
        let bc = signed_perm(4, &[(1, -1), (2, -1), (3, -1), (4, -1)]);
        Self::make("g4_3", LawKind::G43, 4, catalog::g4_3(), bc, "4-dim group with 1-dim centre")
    }

    /// `R^2 × L_2`: `g(x1+y1, x2+y2, x3+y3, y4 + x4 e^{y3})`.
    pub fn r2l2() -> Self {
        Self::make("r2l2", LawKind::R2L2, 4, catalog::r2l2(), identity_change(4), "R^2 x L_2")
    }

    /// The four 5-dimensional laws whose algebras have a 1-dim ideal.
    pub fn g5_prop(which: usize) -> Self {
        let name = format!("g5_p{which}");
        let (kind, bc) = match which {
            1 => (LawKind::G5P1, signed_perm(5, &[(1, -1), (5, 1), (2, -1), (4, 1), (3, -1)])),
            2 => (LawKind::G5P2, signed_perm(5, &[(1, 1), (2, 1), (3, 1), (4, 1), (5, -1)])),
            3 => (LawKind::G5P3, signed_perm(5, &[(1, 1), (2, 1), (3, -1), (4, -1), (5, -1)])),
            4 => (LawKind::G5P4, signed_perm(5, &[(1, 1), (2, 1), (3, 1), (4, 1), (5, -1)])),
            _ => panic!("g5_prop index must be 1..=4"),
        };
        let mut law = Self::make(&name, kind, 5, catalog::g5_prop(which), bc, "5-dim law with 1-dim ideal");
        law.name = name;
        law
    }

    /// `F_3 × L_2`.
    pub fn mult1() -> Self {
        let bc = signed_perm(5, &[(1, -1), (2, 1), (3, 1), (4, 1), (5, 1)]);
        Self::make("mult1", LawKind::Mult1, 5, catalog::mult1(), bc, "F_3 x L_2")
    }

    /// `L_2 × L_2 × R`.
    pub fn mult2() -> Self {
        Self::make("mult2", LawKind::Mult2, 5, catalog::mult2(), identity_change(5), "L_2 x L_2 x R")
    }

    pub fn mult3() -> Self {
        let bc = signed_perm(5, &[(1, 1), (2, 1), (3, 1), (4, -1), (5, 1)]);
        Self::make("mult3", LawKind::Mult3, 5, catalog::mult3(), bc, "indecomposable 4-dim factor x R")
    }

    /// Matrix group with `e^w` rotation block, times R.
    pub fn mult4() -> Self {
        let bc = signed_perm(5, &[(1, 1), (2, 1), (3, 1), (4, -1), (5, 1)]);
        Self::make("mult4", LawKind::Mult4, 5, catalog::mult4(), bc, "G_{4,10} x R (matrix group)")
    }

    /// `R^2 ×` the 3-dim group with exactly one 1-dim normal subgroup.
    pub fn mult5() -> Self {
        Self::make("mult5", LawKind::Mult5, 5, catalog::mult5(), identity_change(5), "R^2 x Jordan-type 3-dim group")
    }

    /// `R^2 ×` rotation-dilation group, `a > 0`.
    pub fn mult6(a: Rational) -> Result<Self, GroupError> {
        if a <= int(0) {
            return Err(GroupError::InvalidParameter("a must be positive".into()));
        }
        let af = rational::to_f64(&a);
        let bc = signed_perm(5, &[(2, 1), (1, 1), (3, 1), (4, 1), (5, 1)]);
        Ok(Self::make("mult6", LawKind::Mult6 { a: af }, 5, catalog::mult6(a), bc, "R^2 x rotation-dilation group"))
    }

    /// `R^2 ×` the connected euclidean motion group of the plane.
    pub fn motion() -> Self {
        let bc = signed_perm(5, &[(2, 1), (1, 1), (3, 1), (4, 1), (5, 1)]);
        let mut alg = catalog::mult6(int(0));
        alg.name = "motion".into();
        Self::make("motion", LawKind::Mult6 { a: 0.0 }, 5, alg, bc, "R^2 x euclidean motion group")
    }

    /// `g(y1 + x1 e^{a y3}, y2 + x2 e^{b y3}, …)` with `a ≠ b`, both nonzero.
    pub fn mult7(a: Rational, b: Rational) -> Result<Self, GroupError> {
        nonzero("a", &a)?;
        nonzero("b", &b)?;
        if a == b {
            return Err(GroupError::InvalidParameter("a and b must differ".into()));
        }
        let kind = LawKind::Mult7 { a: rational::to_f64(&a), b: rational::to_f64(&b) };
        Ok(Self::make("mult7", kind, 5, catalog::mult7(a, b), identity_change(5), "R^2 x 3-dim group, two 1-dim normal subgroups"))
    }

    pub fn mult8(a: Rational) -> Result<Self, GroupError> {
        nonzero("a", &a)?;
        let af = rational::to_f64(&a);
        let kind = LawKind::Mult7 { a: af, b: af };
        Ok(Self::make("mult8", kind, 5, catalog::mult8(a), identity_change(5), "R^2 x 3-dim group, infinitely many 1-dim normal subgroups"))
    }

    pub fn abelian(n: usize) -> Self {
        Self::make(&format!("R{n}"), LawKind::Abelian(n), n, catalog::abelian(n), identity_change(n), "vector group")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn identity(&self) -> Vec<f64> {
        vec![0.0; self.dim]
    }

    /// Linked catalog algebra at this law's parameters.
    pub fn catalog_algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn basis_change(&self) -> &[Vec<Rational>] {
        &self.basis_change
    }

    /// Maps a coordinate-basis tangent subspace into the catalog basis.
    pub fn to_catalog_basis(&self, s: &Subspace) -> Subspace {
        let vs: Vec<Vec<Rational>> = s
            .basis()
            .iter()
            .map(|v| crate::liealg::coordinates_in_basis(&self.basis_change, v).expect("basis change is invertible"))
            .collect();
        Subspace::span(self.dim, &vs).expect("same ambient dimension")
    }

    fn check(&self, v: &[f64]) -> Result<(), GroupError> {
        if v.len() != self.dim {
            return Err(GroupError::DimensionMismatch { expected: self.dim, got: v.len() });
        }
        Ok(())
    }

    pub fn g_mul(&self, a: &[f64], b: &[f64]) -> Result<Vec<f64>, GroupError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub fn g_inv(&self, a: &[f64]) -> Result<Vec<f64>, GroupError> {
        self.check(a)?;
        Ok(self.inv(a))
    }

    pub fn g_comm(&self, a: &[f64], b: &[f64]) -> Result<Vec<f64>, GroupError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.comm(a, b))
    }

    /// Product without length checks; callers guarantee `len == dim`.
    pub fn mul(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        match self.kind {
            LawKind::G43 => vec![x[0] + y[0] * x[3].exp(), x[1] + y[1] + x[3] * y[2], x[2] + y[2], x[3] + y[3]],
            LawKind::R2L2 => vec![x[0] + y[0], x[1] + y[1], x[2] + y[2], y[3] + x[3] * y[2].exp()],
            LawKind::G5P1 => vec![
                x[0] + x[4] * y[1] + x[4] * x[4] * y[2] / 2.0 + y[0],
                x[1] + x[4] * y[2] + y[1],
                x[2] + y[2],
                x[3] + x[2].exp() * y[3],
                x[4] + y[4],
            ],
            LawKind::G5P2 => vec![
                x[0] + x[4].exp() * y[0] + x[1] * y[3],
                x[1] + x[4].exp() * y[1],
                x[2] + x[4] * y[3] + y[2],
                x[3] + y[3],
                x[4] + y[4],
            ],
            LawKind::G5P3 => vec![
                x[0] + x[3].exp() * y[0],
                x[1] + x[4].exp() * y[1],
                x[2] + x[4] * y[3] + y[2],
                x[3] + y[3],
                x[4] + y[4],
            ],
            LawKind::G5P4 => {
                let (e, c, s) = (y[3].exp(), y[4].cos(), y[4].sin());
                vec![
                    y[0] + e * (x[0] * c - x[1] * s),
                    y[1] + e * (x[0] * s + x[1] * c),
                    x[2] + y[2] - x[3] * y[4],
                    x[3] + y[3],
                    x[4] + y[4],
                ]
            }
            LawKind::Mult1 => vec![
                x[0] + y[0],
                x[1] + y[1],
                x[2] + y[2] - x[0] * y[1],
                y[3] + x[3] * y[4].exp(),
                x[4] + y[4],
            ],
            LawKind::Mult2 => vec![
                y[0] + x[0] * y[1].exp(),
                x[1] + y[1],
                y[2] + x[2] * y[3].exp(),
                x[3] + y[3],
                x[4] + y[4],
            ],
            LawKind::Mult3 => {
                let e = x[3].exp();
                vec![x[0] + e * y[0] - x[2] * e * y[1], x[1] + e * y[1], x[2] + y[2], x[3] + y[3], x[4] + y[4]]
            }
            LawKind::Mult4 => {
                let (e, c, s) = (y[2].exp(), y[3].cos(), y[3].sin());
                vec![
                    y[0] + e * (x[0] * c - x[1] * s),
                    y[1] + e * (x[0] * s + x[1] * c),
                    x[2] + y[2],
                    x[3] + y[3],
                    x[4] + y[4],
                ]
            }
            LawKind::Mult5 => {
                let e = y[2].exp();
                vec![y[0] + x[0] * e, y[1] + x[1] * e + x[0] * y[2] * e, x[2] + y[2], x[3] + y[3], x[4] + y[4]]
            }
            LawKind::Mult6 { a } => {
                let (e, c, s) = ((a * y[2]).exp(), y[2].cos(), y[2].sin());
                vec![
                    y[0] + e * (x[0] * c - x[1] * s),
                    y[1] + e * (x[0] * s + x[1] * c),
                    x[2] + y[2],
                    x[3] + y[3],
                    x[4] + y[4],
                ]
            }
            LawKind::Mult7 { a, b } => vec![
                y[0] + x[0] * (a * y[2]).exp(),
                y[1] + x[1] * (b * y[2]).exp(),
                x[2] + y[2],
                x[3] + y[3],
                x[4] + y[4],
            ],
            LawKind::Abelian(_) => x.iter().zip(y).map(|(a, b)| a + b).collect(),
        }
    }

    /// Closed-form inverse without length checks.
    pub fn inv(&self, x: &[f64]) -> Vec<f64> {
        match self.kind {
            LawKind::G43 => vec![-x[0] * (-x[3]).exp(), -x[1] + x[3] * x[2], -x[2], -x[3]],
            LawKind::R2L2 => vec![-x[0], -x[1], -x[2], -x[3] * (-x[2]).exp()],
            LawKind::G5P1 => vec![
                -x[0] + x[1] * x[4] - x[2] * x[4] * x[4] / 2.0,
                -x[1] + x[2] * x[4],
                -x[2],
                -x[3] * (-x[2]).exp(),
                -x[4],
            ],
            LawKind::G5P2 => vec![
                (-x[0] + x[1] * x[3]) * (-x[4]).exp(),
                -x[1] * (-x[4]).exp(),
                -x[2] + x[3] * x[4],
                -x[3],
                -x[4],
            ],
            LawKind::G5P3 => vec![
                -x[0] * (-x[3]).exp(),
                -x[1] * (-x[4]).exp(),
                -x[2] + x[3] * x[4],
                -x[3],
                -x[4],
            ],
            LawKind::G5P4 => {
                let (e, c, s) = ((-x[3]).exp(), x[4].cos(), x[4].sin());
                vec![-(x[0] * c + x[1] * s) * e, (x[0] * s - x[1] * c) * e, -x[2] - x[3] * x[4], -x[3], -x[4]]
            }
            LawKind::Mult1 => vec![-x[0], -x[1], -x[0] * x[1] - x[2], -x[3] * (-x[4]).exp(), -x[4]],
            LawKind::Mult2 => vec![-x[0] * (-x[1]).exp(), -x[1], -x[2] * (-x[3]).exp(), -x[3], -x[4]],
            LawKind::Mult3 => {
                let e = (-x[3]).exp();
                vec![(-x[0] - x[1] * x[2]) * e, -x[1] * e, -x[2], -x[3], -x[4]]
            }
            LawKind::Mult4 => {
                let (e, c, s) = ((-x[2]).exp(), x[3].cos(), x[3].sin());
                vec![-(x[0] * c + x[1] * s) * e, (x[0] * s - x[1] * c) * e, -x[2], -x[3], -x[4]]
            }
            LawKind::Mult5 => {
                let e = (-x[2]).exp();
                vec![-x[0] * e, (x[0] * x[2] - x[1]) * e, -x[2], -x[3], -x[4]]
            }
            LawKind::Mult6 { a } => {
                let (e, c, s) = ((-a * x[2]).exp(), x[2].cos(), x[2].sin());
                vec![-(x[0] * c + x[1] * s) * e, (x[0] * s - x[1] * c) * e, -x[2], -x[3], -x[4]]
            }
            LawKind::Mult7 { a, b } => vec![
                -x[0] * (-a * x[2]).exp(),
                -x[1] * (-b * x[2]).exp(),
                -x[2],
                -x[3],
                -x[4],
            ],
            LawKind::Abelian(_) => x.iter().map(|v| -v).collect(),
        }
    }

    /// `a⁻¹ b⁻¹ a b`.
    pub fn comm(&self, a: &[f64], b: &[f64]) -> Vec<f64> {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(&self.inv(&ba), &ab)
    }
}

/// Every catalog law at default parameters.
pub fn catalog_laws() -> Vec<GroupLaw> {
    let mut v = vec![GroupLaw::g4_3(), GroupLaw::r2l2()];
    v.extend((1..=4).map(GroupLaw::g5_prop));
    v.extend([GroupLaw::mult1(), GroupLaw::mult2(), GroupLaw::mult3(), GroupLaw::mult4(), GroupLaw::mult5()]);
    v.push(GroupLaw::mult6(int(1)).expect("a = 1 is valid"));
    v.push(GroupLaw::mult7(int(1), int(2)).expect("a = 1, b = 2 is valid"));
    v.push(GroupLaw::mult8(int(1)).expect("a = 1 is valid"));
    v.push(GroupLaw::motion());
    v.push(GroupLaw::abelian(5));
    v
}

pub fn law_by_name(name: &str) -> Result<GroupLaw, GroupError> {
    catalog_laws()
        .into_iter()
        .find(|l| l.name == name)
        .ok_or_else(|| GroupError::UnknownLaw(name.to_string()))
}

/// Result of reading structure constants off a law numerically.
#[derive(Debug, Clone)]
pub struct TangentExtraction {
    /// Rounded constants in the coordinate-curve basis.
    pub algebra: LieAlgebra,
    /// Unrounded estimates `c[i][j][k]`, flattened.
    pub raw: Vec<f64>,
    pub max_rounding_error: f64,
    pub max_step_disagreement: f64,
}

impl TangentExtraction {
    /// Float bracket from the unrounded table.
    pub fn bracket(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        let n = x.len();
        let mut out = vec![0.0; n];
        for i in 0..n {
            if x[i] == 0.0 {
                continue;
            }
            for j in 0..n {
                let w = x[i] * y[j];
                if w == 0.0 {
                    continue;
                }
                for (k, o) in out.iter_mut().enumerate() {
                    *o += w * self.raw[(i * n + j) * n + k];
                }
            }
        }
        out
    }
}

pub const FD_STEP: f64 = 1e-3;
pub const MAX_DENOMINATOR: i64 = 12;

/// Mixed second differences of `(s,t) ↦ comm(s e_i, t e_j)` at 0, one
/// Richardson step with `h` and `h/2`, compared with the same estimate at
/// `h/2` and `h/4`.
pub fn tangent_algebra(law: &GroupLaw, tol_fd: f64) -> Result<TangentExtraction, GroupError> {
    let n = law.dim();
    let d = |i: usize, j: usize, h: f64| -> Vec<f64> {
        let c = |s: f64, t: f64| {
            let mut a = vec![0.0; n];
            let mut b = vec![0.0; n];
            a[i] = s;
            b[j] = t;
            law.comm(&a, &b)
        };
        let (pp, pm, mp, mm) = (c(h, h), c(h, -h), c(-h, h), c(-h, -h));
        (0..n).map(|k| (pp[k] - pm[k] - mp[k] + mm[k]) / (4.0 * h * h)).collect()
    };
    let rich = |i: usize, j: usize, h: f64| -> Vec<f64> {
        let (d1, d2) = (d(i, j, h), d(i, j, h / 2.0));
        d1.iter().zip(&d2).map(|(a, b)| (4.0 * b - a) / 3.0).collect()
    };
    let mut raw = vec![0.0; n * n * n];
    let mut disagreement: f64 = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            let (r1, r2) = (rich(i, j, FD_STEP), rich(i, j, FD_STEP / 2.0));
            for k in 0..n {
                disagreement = disagreement.max((r1[k] - r2[k]).abs());
                raw[(i * n + j) * n + k] = r1[k];
                raw[(j * n + i) * n + k] = -r1[k];
            }
        }
    }
    if disagreement > tol_fd {
        return Err(GroupError::ExtractionUnstable { disagreement, tolerance: tol_fd });
    }
    let mut alg = LieAlgebra::new(format!("T({})", law.name), n).expect("law dimension within range");
    let mut max_err: f64 = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let v = raw[(i * n + j) * n + k];
                let (r, err) = rational::nearest_small_rational(v, MAX_DENOMINATOR);
                if err > tol_fd {
                    return Err(GroupError::NoRationalMatch { value: v });
                }
                max_err = max_err.max(err);
                alg.set(i, j, k, r);
            }
        }
    }
    Ok(TangentExtraction { algebra: alg, raw, max_rounding_error: max_err, max_step_disagreement: disagreement })
}

/// Whether the extracted algebra equals the law's catalog algebra after the
/// stored basis change.
pub fn matches_catalog(law: &GroupLaw, ext: &TangentExtraction) -> bool {
    ext.algebra
        .change_basis(law.basis_change())
        .map(|a| a.same_constants(law.catalog_algebra()))
        .unwrap_or(false)
}

pub type CosetMap = Arc<dyn Fn(&[f64]) -> Vec<f64> + Send + Sync>;

/// A closed subgroup given as a linear coordinate slice, with coordinates on
/// the left coset space `G/S`.
#[derive(Clone)]
pub struct SubgroupSpec {
    pub name: String,
    pub law_dim: usize,
    /// Spanning vectors of the slice; also its tangent space.
    pub generators: Vec<Vec<i64>>,
    /// Linear forms vanishing on the slice.
    pub equations: Vec<Vec<i64>>,
    /// Invariant of right multiplication by the subgroup: `gS ↦ R^{n-k}`.
    pub coset_coords: CosetMap,
    /// A group element in each coset: `coset_coords(lift(p)) = p`.
    pub lift: CosetMap,
}

impl fmt::Debug for SubgroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SubgroupSpec").field("name", &self.name).field("generators", &self.generators).finish()
    }
}

impl SubgroupSpec {
    pub fn new(
        name: &str,
        law_dim: usize,
        generators: Vec<Vec<i64>>,
        equations: Vec<Vec<i64>>,
        coset_coords: impl Fn(&[f64]) -> Vec<f64> + Send + Sync + 'static,
        lift: impl Fn(&[f64]) -> Vec<f64> + Send + Sync + 'static,
    ) -> Self {
        SubgroupSpec {
            name: name.to_string(),
            law_dim,
            generators,
            equations,
            coset_coords: Arc::new(coset_coords),
            lift: Arc::new(lift),
        }
    }

    /// Whole group as a subgroup; the coset space is a point.
    pub fn whole(law_dim: usize) -> Self {
        let gens = (0..law_dim)
            .map(|i| (0..law_dim).map(|j| i64::from(i == j)).collect())
            .collect();
        SubgroupSpec::new("whole", law_dim, gens, Vec::new(), |_| Vec::new(), move |_| vec![0.0; law_dim])
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn coset_dim(&self) -> usize {
        self.law_dim - self.dim()
    }

    pub fn parametrize(&self, s: &[f64]) -> Vec<f64> {
        let mut g = vec![0.0; self.law_dim];
        for (gen, t) in self.generators.iter().zip(s) {
            for (x, &c) in g.iter_mut().zip(gen) {
                *x += c as f64 * t;
            }
        }
        g
    }

    /// Largest violation of the defining equations.
    pub fn membership_residual(&self, g: &[f64]) -> f64 {
        self.equations
            .iter()
            .map(|eq| eq.iter().zip(g).map(|(&c, x)| c as f64 * x).sum::<f64>().abs())
            .fold(0.0, f64::max)
    }

    pub fn tangent(&self) -> Subspace {
        let vs: Vec<Vec<Rational>> =
            self.generators.iter().map(|g| g.iter().map(|&x| int(x)).collect()).collect();
        Subspace::span(self.law_dim, &vs).expect("generator length matches law dimension")
    }
}

/// `subgroup_member` with tolerance `tol`.
pub fn subgroup_member(spec: &SubgroupSpec, g: &[f64], tol: f64) -> bool {
    g.len() == spec.law_dim && spec.membership_residual(g) < tol
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::E;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < tol)
    }

    #[test]
    fn hand_evaluated_products() {
        let m1 = GroupLaw::mult1();
        assert_eq!(m1.g_mul(&[1., 0., 0., 0., 0.], &[0., 1., 0., 0., 0.]).unwrap(), vec![1., 1., -1., 0., 0.]);
        let g = GroupLaw::g4_3();
        assert!(close(&g.g_mul(&[0., 0., 0., 1.], &[1., 0., 0., 0.]).unwrap(), &[E, 0., 0., 1.], 1e-15));
        assert!(matches!(g.g_mul(&[0.; 3], &[0.; 4]), Err(GroupError::DimensionMismatch { .. })));
    }

    #[test]
    fn identity_is_exact() {
        for law in catalog_laws() {
            let x: Vec<f64> = (0..law.dim()).map(|i| 0.3 * i as f64 - 0.7).collect();
            assert_eq!(law.mul(&law.identity(), &x), x, "{}", law.name);
            assert_eq!(law.mul(&x, &law.identity()), x, "{}", law.name);
            assert_eq!(law.inv(&law.identity()).iter().map(|v| v.abs()).sum::<f64>(), 0.0);
        }
    }

    #[test]
    fn closed_form_inverses() {
        let g = GroupLaw::g4_3();
        let x = [0.4, -1.2, 0.9, 1.5];
        let want = [-0.4 * (-1.5f64).exp(), 1.2 + 1.5 * 0.9, -0.9, -1.5];
        assert!(close(&g.inv(&x), &want, 1e-15));
        let m1 = GroupLaw::mult1();
        let i = m1.inv(&[0., 0., 0., 2.0, 0.5]);
        assert!(close(&i[3..], &[-2.0 * (-0.5f64).exp(), -0.5], 1e-15));
    }

    #[test]
    fn commutator_examples() {
        let g = GroupLaw::g4_3();
        let c = g.g_comm(&[1., 0., 0., 0.], &[0., 0., 0., 1.]).unwrap();
        assert!(close(&c, &[(-1f64).exp() - 1.0, 0., 0., 0.], 1e-15));
        let m1 = GroupLaw::mult1();
        let c = m1.comm(&[0., E - 1.0, 0., 0., 1.], &[1., 0., 0., -1., 0.]);
        assert!(close(&c, &[0., 0., E - 1.0, E - 1.0, 0.], 1e-14));
        let x = [0.3, 0.1, -0.2, 0.5, 0.9];
        assert!(close(&m1.comm(&x, &x), &[0.; 5], 1e-15));
    }

    #[test]
    fn parameter_validation() {
        assert!(GroupLaw::mult6(int(0)).is_err());
        assert!(GroupLaw::mult6(int(-1)).is_err());
        assert!(GroupLaw::mult7(int(1), int(1)).is_err());
        assert!(GroupLaw::mult7(int(0), int(1)).is_err());
        assert!(GroupLaw::mult8(int(0)).is_err());
    }

    #[test]
    fn tangent_algebra_examples() {
        let m2 = GroupLaw::mult2();
        let t = tangent_algebra(&m2, 1e-5).unwrap();
        assert!(t.algebra.same_constants(&catalog::mult2()));
        let r5 = tangent_algebra(&GroupLaw::abelian(5), 1e-5).unwrap();
        assert!(r5.algebra.relations().is_empty());
        let m7 = GroupLaw::mult7(int(2), int(3)).unwrap();
        let t = tangent_algebra(&m7, 1e-5).unwrap();
        assert_eq!(t.algebra.relations(), vec![(1, 3, 1, int(2)), (2, 3, 2, int(3))]);
    }

    #[test]
    fn every_law_matches_its_catalog_algebra() {
        for law in catalog_laws() {
            let t = tangent_algebra(&law, 1e-5).unwrap();
            assert!(matches_catalog(&law, &t), "{}: {:?}", law.name, t.algebra.relations());
            assert!(t.max_rounding_error < 1e-6, "{}", law.name);
        }
    }

    #[test]
    fn subgroup_membership() {
        let inn1 = SubgroupSpec::new(
            "inn1",
            5,
            vec![vec![0, 1, 0, 0, 0], vec![0, 0, 1, 1, 0]],
            vec![vec![1, 0, 0, 0, 0], vec![0, 0, 0, 0, 1], vec![0, 0, 1, -1, 0]],
            |g| vec![g[0], g[4], g[2] + g[0] * g[1] - g[3]],
            |p| vec![p[0], 0.0, p[2], 0.0, p[1]],
        );
        assert!(subgroup_member(&inn1, &[0., 0., E - 1.0, E - 1.0, 0.], 1e-9));
        assert!(subgroup_member(&inn1, &[0.; 5], 1e-9));
        assert!(!subgroup_member(&inn1, &[0., 1., 2., 3., 0.], 1e-9));
        assert_eq!(inn1.parametrize(&[2.0, 3.0]), vec![0., 2., 3., 3., 0.]);
    }
}
