//! Explicit matrix models of `AI(n)`, `CI(n)` and `BDI(p,q)`.
//!
//! The Lie algebra is cut out by its defining linear constraints and solved
//! exactly over the rationals. `k` and `p` are then the images of `1 ± θ`,
//! orthonormalized in the Frobenius inner product.

use serde::{Deserialize, Serialize};

use super::linalg::{bracket, coords, nullspace, orthonormalize, residual, Mat};
use crate::elements::TypedElement;
use crate::error::{Error, Result};
use crate::exact;
use crate::rootsys::{CartanClass, RestrictedClass, Root};

/// Residual bound for the structure audit, relative to unit-norm inputs.
pub const AUDIT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Model {
    /// `sl(n, R)`, θ(X) = −Xᵀ.
    Sl(usize),
    /// `sp(n, R)` in `2n × 2n` matrices, θ(X) = −Xᵀ.
    Sp(usize),
    /// `so(p, q)`, θ(X) = I_{p,q} X I_{p,q}.
    So(usize, usize),
}

/// Whether [`Realization::build`] accepts the class.
pub fn realizable(cc: &CartanClass) -> bool {
    model_of(cc).is_ok()
}

fn model_of(cc: &CartanClass) -> Result<Model> {
    let cc = cc.validated()?;
    let m = match cc {
        CartanClass::AI(n) if (2..=6).contains(&n) => Model::Sl(n),
        CartanClass::CI(n) if (1..=5).contains(&n) => Model::Sp(n),
        CartanClass::BDI(p, q) if p + q <= 10 => Model::So(p, q),
        CartanClass::DI(p) if 2 * p <= 10 => Model::So(p, p),
        _ => {
            return Err(Error::Capacity(format!(
                "no matrix realization for {cc}; supported: AI(2..=6), CI(1..=5), BDI(p,q) with p+q ≤ 10"
            )))
        }
    };
    Ok(m)
}

/// Residuals of the structure audit; every entry must stay below
/// [`AUDIT_TOL`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StructureAudit {
    pub cartan: String,
    pub matrix_size: usize,
    pub dim_g: usize,
    pub dim_k: usize,
    pub dim_p: usize,
    pub dim_a: usize,
    /// `rank + Σ_{α>0} dim g_α` from the multiplicity table.
    pub predicted_dim_p: u64,
    /// Largest `‖θ²X − X‖` and `‖θX ∓ X‖` over the bases.
    pub theta: f64,
    pub bracket_kk: f64,
    pub bracket_kp: f64,
    pub bracket_pp: f64,
    /// Distance of the `a` basis from `p`.
    pub a_in_p: f64,
    pub a_abelian: f64,
    pub passed: bool,
}

impl StructureAudit {
    pub fn max_residual(&self) -> f64 {
        [self.theta, self.bracket_kk, self.bracket_kp, self.bracket_pp, self.a_in_p, self.a_abelian]
            .into_iter()
            .fold(0.0, f64::max)
    }
}

/// Measured `dim g_α` against the table, with the `[Z, X⁺] = α(Z) X⁻`
/// residual over a unit basis of `g_α`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootSpaceCheck {
    pub root: String,
    pub expected: u32,
    pub measured: usize,
    pub ad_residual: f64,
}

#[derive(Debug, Clone)]
pub struct Realization {
    cartan: CartanClass,
    model: Model,
    matrix_size: usize,
    basis_k: Vec<Mat>,
    basis_p: Vec<Mat>,
    basis_a: Vec<Mat>,
    /// Identifying vector of each `basis_a` entry.
    a_vectors: Vec<Vec<f64>>,
    dim_g: usize,
    audit: StructureAudit,
}

impl Realization {
    /// Builds the model and runs the structure audit; a failed audit is a
    /// [`Error::Defect`].
    pub fn build(cc: &CartanClass) -> Result<Self> {
        let model = model_of(cc)?;
        let size = match model {
            Model::Sl(n) => n,
            Model::Sp(n) => 2 * n,
            Model::So(p, q) => p + q,
        };
        let constraints = constraints(model, size);
        let g = exact::nullspace(&constraints, size * size);
        let dim_g = g.len();
        let mut plus = Vec::with_capacity(dim_g);
        let mut minus = Vec::with_capacity(dim_g);
        for x in &g {
            let t = theta_int(model, size, x);
            plus.push(x.iter().zip(&t).map(|(a, b)| a + b).collect::<Vec<i64>>());
            minus.push(x.iter().zip(&t).map(|(a, b)| a - b).collect::<Vec<i64>>());
        }
        let basis_k = orthonormalize(&span_basis(&plus, size), AUDIT_TOL);
        let basis_p = orthonormalize(&span_basis(&minus, size), AUDIT_TOL);
        if basis_k.len() + basis_p.len() != dim_g {
            return Err(Error::Defect(format!(
                "{cc}: dim k + dim p = {} + {} differs from dim g = {dim_g}",
                basis_k.len(),
                basis_p.len()
            )));
        }
        let rank = cc.restricted_class().rank();
        let a_vectors: Vec<Vec<f64>> = match model {
            Model::Sl(n) => (0..n - 1)
                .map(|i| {
                    let mut v = vec![0.0; n];
                    v[i] = 1.0;
                    v[i + 1] = -1.0;
                    v
                })
                .collect(),
            _ => (0..rank)
                .map(|i| {
                    let mut v = vec![0.0; rank];
                    v[i] = 1.0;
                    v
                })
                .collect(),
        };
        let mut r = Self {
            cartan: *cc,
            model,
            matrix_size: size,
            basis_k,
            basis_p,
            basis_a: Vec::new(),
            a_vectors: Vec::new(),
            dim_g,
            audit: placeholder_audit(),
        };
        r.basis_a = a_vectors.iter().map(|v| r.embed_vector(v)).collect();
        r.a_vectors = a_vectors;
        r.audit = r.run_audit();
        if !r.audit.passed {
            return Err(Error::Defect(format!("{cc}: structure audit failed: {:?}", r.audit)));
        }
        Ok(r)
    }

    pub fn cartan(&self) -> CartanClass {
        self.cartan
    }

    pub fn restricted_class(&self) -> RestrictedClass {
        self.cartan.restricted_class()
    }

    pub fn matrix_size(&self) -> usize {
        self.matrix_size
    }

    pub fn basis_k(&self) -> &[Mat] {
        &self.basis_k
    }

    pub fn basis_p(&self) -> &[Mat] {
        &self.basis_p
    }

    pub fn basis_a(&self) -> &[Mat] {
        &self.basis_a
    }

    pub fn dim_g(&self) -> usize {
        self.dim_g
    }

    pub fn audit(&self) -> &StructureAudit {
        &self.audit
    }

    pub fn theta(&self, x: &Mat) -> Mat {
        match self.model {
            Model::Sl(_) | Model::Sp(_) => -x.transpose(),
            Model::So(p, _) => {
                let mut y = x.clone();
                for i in 0..self.matrix_size {
                    for j in 0..self.matrix_size {
                        if (i < p) != (j < p) {
                            y[(i, j)] = -y[(i, j)];
                        }
                    }
                }
                y
            }
        }
    }

    /// Coordinates of `x` in the orthonormal `p` basis.
    pub fn p_coords(&self, x: &Mat) -> nalgebra::DVector<f64> {
        coords(&self.basis_p, x)
    }

    /// The element of `a` with identifying vector `v` (length `n` for
    /// `AI(n)`, the rank otherwise).
    pub fn embed_vector(&self, v: &[f64]) -> Mat {
        let s = self.matrix_size;
        let mut m = Mat::zeros(s, s);
        match self.model {
            Model::Sl(_) => {
                for (i, &x) in v.iter().enumerate() {
                    m[(i, i)] = x;
                }
            }
            Model::Sp(n) => {
                for (i, &x) in v.iter().enumerate() {
                    m[(i, i)] = x;
                    m[(n + i, n + i)] = -x;
                }
            }
            Model::So(p, _) => {
                for (i, &x) in v.iter().enumerate() {
                    m[(i, p + i)] = x;
                    m[(p + i, i)] = x;
                }
            }
        }
        m
    }

    /// The matrix of `Z` with its canonical tag values.
    pub fn embed(&self, z: &TypedElement) -> Result<Mat> {
        self.check_context(z)?;
        let v: Vec<f64> = z.vector().iter().map(|&x| x as f64).collect();
        Ok(self.embed_vector(&v))
    }

    pub(crate) fn check_context(&self, z: &TypedElement) -> Result<()> {
        let rc = self.restricted_class();
        if z.context() != rc {
            return Err(Error::Domain(format!(
                "{z} does not live in {rc} ({})",
                self.cartan
            )));
        }
        Ok(())
    }

    fn run_audit(&self) -> StructureAudit {
        let mut theta: f64 = 0.0;
        for x in &self.basis_k {
            theta = theta.max((self.theta(x) - x).norm());
        }
        for x in &self.basis_p {
            theta = theta.max((self.theta(x) + x).norm());
        }
        for x in self.basis_k.iter().chain(&self.basis_p) {
            theta = theta.max((self.theta(&self.theta(x)) - x).norm());
        }
        let worst = |xs: &[Mat], ys: &[Mat], target: &[Mat]| {
            let mut w: f64 = 0.0;
            for x in xs {
                for y in ys {
                    w = w.max(residual(target, &bracket(x, y)).norm());
                }
            }
            w
        };
        let a_in_p = self
            .basis_a
            .iter()
            .map(|a| residual(&self.basis_p, a).norm() / a.norm())
            .fold(0.0, f64::max);
        let mut a_abelian: f64 = 0.0;
        for x in &self.basis_a {
            for y in &self.basis_a {
                a_abelian = a_abelian.max(bracket(x, y).norm());
            }
        }
        let mut audit = StructureAudit {
            cartan: self.cartan.to_string(),
            matrix_size: self.matrix_size,
            dim_g: self.dim_g,
            dim_k: self.basis_k.len(),
            dim_p: self.basis_p.len(),
            dim_a: self.basis_a.len(),
            predicted_dim_p: self.cartan.dim_p(),
            theta,
            bracket_kk: worst(&self.basis_k, &self.basis_k, &self.basis_k),
            bracket_kp: worst(&self.basis_k, &self.basis_p, &self.basis_p),
            bracket_pp: worst(&self.basis_p, &self.basis_p, &self.basis_k),
            a_in_p,
            a_abelian,
            passed: false,
        };
        audit.passed = audit.max_residual() < AUDIT_TOL
            && audit.dim_p as u64 == audit.predicted_dim_p
            && audit.dim_a == self.restricted_class().rank();
        audit
    }

    /// Measures `dim g_α` for every positive root by simultaneous
    /// diagonalization of `ad(a)` on `g`, and checks `[Z, X⁺] = α(Z) X⁻` on
    /// the resulting root vectors for the given `Z`.
    pub fn root_space_checks(&self, z: &TypedElement) -> Result<Vec<RootSpaceCheck>> {
        let zm = self.embed(z)?;
        let zv: Vec<f64> = z.vector().iter().map(|&x| x as f64).collect();
        let g: Vec<Mat> = self.basis_k.iter().chain(&self.basis_p).cloned().collect();
        let d = g.len();
        let ads: Vec<Mat> = self
            .basis_a
            .iter()
            .map(|a| {
                let mut m = Mat::zeros(d, d);
                for (c, b) in g.iter().enumerate() {
                    m.set_column(c, &coords(&g, &bracket(a, b)));
                }
                m
            })
            .collect();
        let eval = |r: &Root, v: &[f64]| -> f64 {
            r.coeffs().iter().zip(v).map(|(&c, &x)| f64::from(c) * x).sum()
        };
        let rc = self.restricted_class();
        let mut out = Vec::new();
        for root in rc.positive_roots() {
            let mut stacked = Mat::zeros(d * ads.len(), d);
            for (i, (ad, av)) in ads.iter().zip(&self.a_vectors).enumerate() {
                let shift = ad - Mat::identity(d, d) * eval(&root, av);
                stacked.view_mut((i * d, 0), (d, d)).copy_from(&shift);
            }
            let space = nullspace(&stacked, 1e-9);
            let alpha_z = eval(&root, &zv);
            let mut ad_residual: f64 = 0.0;
            for c in &space {
                let x = g.iter().zip(c.iter()).fold(Mat::zeros(self.matrix_size, self.matrix_size), |acc, (b, &w)| acc + b * w);
                let tx = self.theta(&x);
                let lhs = bracket(&zm, &(&x + &tx));
                let rhs = (&x - &tx) * alpha_z;
                ad_residual = ad_residual.max((lhs - rhs).norm() / zm.norm().max(1.0));
            }
            out.push(RootSpaceCheck {
                root: root.to_string(),
                expected: self.cartan.multiplicity(&root)?,
                measured: space.len(),
                ad_residual,
            });
        }
        Ok(out)
    }
}

fn placeholder_audit() -> StructureAudit {
    StructureAudit {
        cartan: String::new(),
        matrix_size: 0,
        dim_g: 0,
        dim_k: 0,
        dim_p: 0,
        dim_a: 0,
        predicted_dim_p: 0,
        theta: 0.0,
        bracket_kk: 0.0,
        bracket_kp: 0.0,
        bracket_pp: 0.0,
        a_in_p: 0.0,
        a_abelian: 0.0,
        passed: false,
    }
}

/// Rows of the linear system defining `g`, in row-major entry coordinates.
fn constraints(model: Model, s: usize) -> Vec<Vec<i64>> {
    let idx = |i: usize, j: usize| i * s + j;
    match model {
        Model::Sl(_) => {
            let mut row = vec![0; s * s];
            for i in 0..s {
                row[idx(i, i)] = 1;
            }
            vec![row]
        }
        Model::Sp(n) => {
            // Xᵀ J + J X = 0 with J = [[0, I], [−I, 0]].
            let j = |a: usize, b: usize| -> i64 {
                if a < n && b == a + n {
                    1
                } else if a >= n && b + n == a {
                    -1
                } else {
                    0
                }
            };
            let mut rows = Vec::new();
            for a in 0..s {
                for b in 0..s {
                    let mut row = vec![0; s * s];
                    for k in 0..s {
                        row[idx(k, a)] += j(k, b);
                        row[idx(k, b)] += j(a, k);
                    }
                    rows.push(row);
                }
            }
            rows
        }
        Model::So(p, _) => {
            // Xᵀ I_{p,q} + I_{p,q} X = 0.
            let sign = |i: usize| if i < p { 1 } else { -1 };
            let mut rows = Vec::new();
            for a in 0..s {
                for b in a..s {
                    let mut row = vec![0; s * s];
                    row[idx(b, a)] += sign(b);
                    row[idx(a, b)] += sign(a);
                    rows.push(row);
                }
            }
            rows
        }
    }
}

fn theta_int(model: Model, s: usize, x: &[i64]) -> Vec<i64> {
    let mut y = vec![0; s * s];
    for i in 0..s {
        for j in 0..s {
            y[i * s + j] = match model {
                Model::Sl(_) | Model::Sp(_) => -x[j * s + i],
                Model::So(p, _) => {
                    if (i < p) == (j < p) {
                        x[i * s + j]
                    } else {
                        -x[i * s + j]
                    }
                }
            };
        }
    }
    y
}

/// Exact basis of the span of integer vectors, as matrices.
fn span_basis(vectors: &[Vec<i64>], s: usize) -> Vec<Mat> {
    let mut rows: Vec<Vec<exact::Q>> = vectors
        .iter()
        .map(|v| v.iter().map(|&x| exact::Q::from_integer(x)).collect())
        .collect();
    if rows.is_empty() {
        return Vec::new();
    }
    exact::rref(&mut rows);
    rows.iter()
        .map(|r| {
            let v = exact::integerize(r);
            Mat::from_row_iterator(s, s, v.iter().map(|&x| x as f64))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_dimensions() {
        let r = Realization::build(&CartanClass::AI(2)).unwrap();
        assert_eq!((r.matrix_size(), r.basis_k().len(), r.basis_p().len()), (2, 1, 2));
        let r = Realization::build(&CartanClass::BDI(3, 3)).unwrap();
        assert_eq!(r.basis_p().len(), 9);
        let r = Realization::build(&CartanClass::CI(2)).unwrap();
        assert_eq!(r.matrix_size(), 4);
        assert_eq!(r.basis_p().len(), 6);
    }

    #[test]
    fn out_of_range_is_capacity() {
        for cc in [CartanClass::AI(7), CartanClass::CI(6), CartanClass::BDI(5, 6), CartanClass::AII(3)] {
            assert!(matches!(Realization::build(&cc), Err(Error::Capacity(_))), "{cc}");
        }
    }

    #[test]
    fn embeddings() {
        let r = Realization::build(&CartanClass::BDI(2, 3)).unwrap();
        let z = TypedElement::parse_in(r.restricted_class(), "v=0,1").unwrap();
        let m = r.embed(&z).unwrap();
        assert_eq!(m[(1, 3)], 1.0);
        assert_eq!(m[(3, 1)], 1.0);
        assert_eq!(m.norm(), 2f64.sqrt());
        let r = Realization::build(&CartanClass::CI(2)).unwrap();
        let z = TypedElement::parse_in(r.restricted_class(), "v=1,2").unwrap();
        let m = r.embed(&z).unwrap();
        assert_eq!(m.diagonal().as_slice(), &[1.0, 2.0, -1.0, -2.0]);
        for a in r.basis_a() {
            assert!(bracket(&m, a).norm() < AUDIT_TOL);
        }
    }

    #[test]
    fn root_multiplicities_measured() {
        for cc in [CartanClass::AI(3), CartanClass::CI(2), CartanClass::BDI(2, 4), CartanClass::BDI(3, 3)] {
            let r = Realization::build(&cc).unwrap();
            let rc = r.restricted_class();
            let z = crate::elements::enumerate_types(rc).into_iter().find(|z| z.is_regular()).unwrap();
            for c in r.root_space_checks(&z).unwrap() {
                assert_eq!(c.measured, c.expected as usize, "{cc} {}", c.root);
                assert!(c.ad_residual < 1e-9, "{cc} {}", c.root);
            }
        }
    }
}
