//! Polynomial bases on triangles and edges, quadrature rules and local
//! L2 projections.
//!
//! Element bases are scaled monomials `((x-xc)/h)^a ((y-yc)/h)^b` centered
//! at the element centroid so that local mass matrices stay uniformly
//! conditioned under refinement. Edge bases are monomials in the arc-length
//! parameter `t in [0,1]` of the oriented edge.

use crate::{Error, Result};
use nalgebra::{Cholesky, DMatrix, DVector, Dyn};

/// Quadrature rule on the reference triangle, stored in barycentric
/// coordinates with weights normalized to sum to 1. Materializing the rule
/// on a physical triangle scales the weights by its area.
#[derive(Debug, Clone)]
pub struct TriangleRule {
    /// Guaranteed polynomial exactness degree.
    pub degree: usize,
    /// Barycentric coordinates (lambda0, lambda1, lambda2), strictly interior.
    pub points: Vec<[f64; 3]>,
    /// Weights, all positive, summing to 1.
    pub weights: Vec<f64>,
}

/// Quadrature rule on an edge, parameterized by t in (0,1), weights
/// normalized to sum to 1.
#[derive(Debug, Clone)]
pub struct EdgeRule {
    pub degree: usize,
    pub points: Vec<f64>,
    pub weights: Vec<f64>,
}

/// Gauss-Legendre nodes and weights on [-1,1], by Newton iteration on the
/// Legendre recurrence.
fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Legendre P_n(x) and derivative via three-term recurrence.
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

/// Gauss rule on [0,1] exact to polynomial degree `q`, using
/// ceil((q+1)/2) points. All nodes are interior.
pub fn quad_edge(q: usize) -> EdgeRule {
    let n = (q + 2) / 2;
    let (x, w) = gauss_legendre(n.max(1));
    EdgeRule {
        degree: 2 * n.max(1) - 1,
        points: x.iter().map(|&t| 0.5 * (t + 1.0)).collect(),
        weights: w.iter().map(|&v| 0.5 * v).collect(),
    }
}

// Symmetric orbit helpers: weights here are fractions of the triangle
// measure (they sum to 1 over the full rule).
fn orbit1(pts: &mut Vec<[f64; 3]>, ws: &mut Vec<f64>, w: f64) {
    pts.push([1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0]);
    ws.push(w);
}

fn orbit3(pts: &mut Vec<[f64; 3]>, ws: &mut Vec<f64>, a: f64, w: f64) {
    let b = 1.0 - 2.0 * a;
    pts.push([b, a, a]);
    pts.push([a, b, a]);
    pts.push([a, a, b]);
    ws.extend_from_slice(&[w, w, w]);
}

/// Quadrature on the reference triangle exact for all bivariate
/// polynomials of total degree <= q, with positive weights and strictly
/// interior points. Supported range: 1 <= q <= 12.
///
/// Low degrees use classical symmetric rules; q >= 7 uses a collapsed
/// tensor Gauss rule on the degenerate-square map, which keeps weights
/// positive at every order.
pub fn quad_triangle(q: usize) -> Result<TriangleRule> {
    if q == 0 || q > 12 {
        return Err(Error::QuadratureDegreeUnavailable(q));
    }
    let mut pts = Vec::new();
    let mut ws = Vec::new();
    let degree = match q {
        1 => {
            orbit1(&mut pts, &mut ws, 1.0);
            1
        }
        2 => {
            orbit3(&mut pts, &mut ws, 1.0 / 6.0, 1.0 / 3.0);
            2
        }
        3 | 4 => {
            orbit3(&mut pts, &mut ws, 0.445948490915965, 0.223381589678011);
            orbit3(&mut pts, &mut ws, 0.091576213509771, 0.109951743655322);
            4
        }
        5 => {
            orbit1(&mut pts, &mut ws, 0.225);
            orbit3(&mut pts, &mut ws, 0.470142064105115, 0.132394152788506);
            orbit3(&mut pts, &mut ws, 0.101286507323456, 0.125939180544827);
            5
        }
        6 => {
            orbit3(&mut pts, &mut ws, 0.249286745170910, 0.116786275726379);
            orbit3(&mut pts, &mut ws, 0.063089014491502, 0.050844906370207);
            // Six-point orbit: all permutations of three distinct coordinates.
            let (a, b) = (0.310352451033785, 0.053145049844816);
            let c = 1.0 - a - b;
            for p in [[a, b, c], [a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]] {
                pts.push(p);
                ws.push(0.082851075618374);
            }
            6
        }
        _ => {
            // Collapsed map: (xi, eta) in [0,1]^2 -> (xi*(1-eta), eta),
            // Jacobian (1-eta). Exact for degree q when the xi rule handles
            // degree q and the eta rule degree q+1.
            let n_xi = (q + 2) / 2;
            let n_eta = (q + 3) / 2;
            let (gx, gwx) = gauss_legendre(n_xi);
            let (ge, gwe) = gauss_legendre(n_eta);
            for (i, &xi) in gx.iter().enumerate() {
                let xi01 = 0.5 * (xi + 1.0);
                for (j, &eta) in ge.iter().enumerate() {
                    let eta01 = 0.5 * (eta + 1.0);
                    let x = xi01 * (1.0 - eta01);
                    let y = eta01;
                    // Factor 2 renormalizes: raw weights sum to the
                    // reference area 1/2.
                    let w = 2.0 * 0.25 * gwx[i] * gwe[j] * (1.0 - eta01);
                    pts.push([1.0 - x - y, x, y]);
                    ws.push(w);
                }
            }
            2 * n_xi - 1
        }
    };
    Ok(TriangleRule {
        degree,
        points: pts,
        weights: ws,
    })
}

impl TriangleRule {
    /// Physical quadrature points and weights on the triangle with the
    /// given vertex coordinates. Weights sum to the triangle area.
    pub fn materialize(&self, tri: &[[f64; 2]; 3]) -> Vec<([f64; 2], f64)> {
        let area = triangle_area(tri);
        self.points
            .iter()
            .zip(&self.weights)
            .map(|(lam, &w)| {
                let x = lam[0] * tri[0][0] + lam[1] * tri[1][0] + lam[2] * tri[2][0];
                let y = lam[0] * tri[0][1] + lam[1] * tri[1][1] + lam[2] * tri[2][1];
                ([x, y], w * area)
            })
            .collect()
    }
}

impl EdgeRule {
    /// Physical quadrature points and weights on the segment from `p0` to
    /// `p1`. Weights sum to the segment length.
    pub fn materialize(&self, p0: [f64; 2], p1: [f64; 2]) -> Vec<([f64; 2], f64)> {
        let len = ((p1[0] - p0[0]).powi(2) + (p1[1] - p0[1]).powi(2)).sqrt();
        self.points
            .iter()
            .zip(&self.weights)
            .map(|(&t, &w)| {
                (
                    [p0[0] + t * (p1[0] - p0[0]), p0[1] + t * (p1[1] - p0[1])],
                    w * len,
                )
            })
            .collect()
    }
}

/// Signed area of a triangle (positive for counterclockwise vertices).
pub fn triangle_signed_area(tri: &[[f64; 2]; 3]) -> f64 {
    0.5 * ((tri[1][0] - tri[0][0]) * (tri[2][1] - tri[0][1])
        - (tri[2][0] - tri[0][0]) * (tri[1][1] - tri[0][1]))
}

pub fn triangle_area(tri: &[[f64; 2]; 3]) -> f64 {
    triangle_signed_area(tri).abs()
}

/// Scaled monomial basis of P_m on a triangle: ((x-xc)/h)^a ((y-yc)/h)^b
/// with a+b <= m, ordered by total degree then descending x exponent.
#[derive(Debug, Clone)]
pub struct ElementBasis {
    pub degree: usize,
    pub center: [f64; 2],
    pub scale: f64,
    exps: Vec<(u32, u32)>,
}

impl ElementBasis {
    pub fn new(degree: usize, center: [f64; 2], scale: f64) -> Self {
        let mut exps = Vec::new();
        for d in 0..=degree as u32 {
            for b in 0..=d {
                exps.push((d - b, b));
            }
        }
        ElementBasis {
            degree,
            center,
            scale,
            exps,
        }
    }

    /// Basis centered at the centroid of `tri` and scaled by its diameter.
    pub fn for_triangle(degree: usize, tri: &[[f64; 2]; 3]) -> Self {
        let cx = (tri[0][0] + tri[1][0] + tri[2][0]) / 3.0;
        let cy = (tri[0][1] + tri[1][1] + tri[2][1]) / 3.0;
        Self::new(degree, [cx, cy], triangle_diameter(tri))
    }

    pub fn dim(&self) -> usize {
        self.exps.len()
    }

    fn local(&self, x: [f64; 2]) -> (f64, f64) {
        (
            (x[0] - self.center[0]) / self.scale,
            (x[1] - self.center[1]) / self.scale,
        )
    }

    /// Values of all basis functions at `x`.
    pub fn eval(&self, x: [f64; 2]) -> Vec<f64> {
        let (xi, eta) = self.local(x);
        self.exps
            .iter()
            .map(|&(a, b)| xi.powi(a as i32) * eta.powi(b as i32))
            .collect()
    }

    /// Gradients (d/dx, d/dy) of all basis functions at `x`.
    pub fn eval_grad(&self, x: [f64; 2]) -> Vec<[f64; 2]> {
        let (xi, eta) = self.local(x);
        let inv_h = 1.0 / self.scale;
        self.exps
            .iter()
            .map(|&(a, b)| {
                let dx = if a == 0 {
                    0.0
                } else {
                    a as f64 * xi.powi(a as i32 - 1) * eta.powi(b as i32) * inv_h
                };
                let dy = if b == 0 {
                    0.0
                } else {
                    b as f64 * xi.powi(a as i32) * eta.powi(b as i32 - 1) * inv_h
                };
                [dx, dy]
            })
            .collect()
    }

    /// Second derivatives [dxx, dxy, dyy] of all basis functions at `x`.
    pub fn eval_hess(&self, x: [f64; 2]) -> Vec<[f64; 3]> {
        let (xi, eta) = self.local(x);
        let inv_h2 = 1.0 / (self.scale * self.scale);
        self.exps
            .iter()
            .map(|&(a, b)| {
                let (a, b) = (a as i32, b as i32);
                let dxx = if a >= 2 {
                    (a * (a - 1)) as f64 * xi.powi(a - 2) * eta.powi(b) * inv_h2
                } else {
                    0.0
                };
                let dxy = if a >= 1 && b >= 1 {
                    (a * b) as f64 * xi.powi(a - 1) * eta.powi(b - 1) * inv_h2
                } else {
                    0.0
                };
                let dyy = if b >= 2 {
                    (b * (b - 1)) as f64 * xi.powi(a) * eta.powi(b - 2) * inv_h2
                } else {
                    0.0
                };
                [dxx, dxy, dyy]
            })
            .collect()
    }

    /// Value of the polynomial with the given coefficients at `x`.
    pub fn eval_with(&self, coeffs: &[f64], x: [f64; 2]) -> f64 {
        self.eval(x).iter().zip(coeffs).map(|(p, c)| p * c).sum()
    }

    pub fn grad_with(&self, coeffs: &[f64], x: [f64; 2]) -> [f64; 2] {
        let g = self.eval_grad(x);
        let mut out = [0.0; 2];
        for (gi, &c) in g.iter().zip(coeffs) {
            out[0] += gi[0] * c;
            out[1] += gi[1] * c;
        }
        out
    }

    /// Hessian [dxx, dxy, dyy] of the polynomial with given coefficients.
    pub fn hess_with(&self, coeffs: &[f64], x: [f64; 2]) -> [f64; 3] {
        let h = self.eval_hess(x);
        let mut out = [0.0; 3];
        for (hi, &c) in h.iter().zip(coeffs) {
            out[0] += hi[0] * c;
            out[1] += hi[1] * c;
            out[2] += hi[2] * c;
        }
        out
    }

    /// Local mass matrix on `tri` (symmetric positive definite).
    pub fn mass_matrix(&self, tri: &[[f64; 2]; 3], rule: &TriangleRule) -> DMatrix<f64> {
        let n = self.dim();
        let mut m = DMatrix::zeros(n, n);
        for (x, w) in rule.materialize(tri) {
            let phi = self.eval(x);
            for i in 0..n {
                for j in 0..=i {
                    m[(i, j)] += w * phi[i] * phi[j];
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                m[(i, j)] = m[(j, i)];
            }
        }
        m
    }
}

/// Diameter of a triangle (its longest edge).
pub fn triangle_diameter(tri: &[[f64; 2]; 3]) -> f64 {
    let mut d: f64 = 0.0;
    for i in 0..3 {
        let j = (i + 1) % 3;
        let l = ((tri[j][0] - tri[i][0]).powi(2) + (tri[j][1] - tri[i][1]).powi(2)).sqrt();
        d = d.max(l);
    }
    d
}

/// Monomial basis 1, t, t^2, ... on the unit parameter interval of an
/// oriented edge.
#[derive(Debug, Clone, Copy)]
pub struct EdgeBasis {
    pub degree: usize,
}

impl EdgeBasis {
    pub fn new(degree: usize) -> Self {
        EdgeBasis { degree }
    }

    pub fn dim(&self) -> usize {
        self.degree + 1
    }

    pub fn eval(&self, t: f64) -> Vec<f64> {
        (0..=self.degree as i32).map(|j| t.powi(j)).collect()
    }

    pub fn eval_with(&self, coeffs: &[f64], t: f64) -> f64 {
        self.eval(t).iter().zip(coeffs).map(|(p, c)| p * c).sum()
    }

    /// Edge mass matrix scaled by the physical edge length.
    pub fn mass_matrix(&self, len: f64, rule: &EdgeRule) -> DMatrix<f64> {
        let n = self.dim();
        let mut m = DMatrix::zeros(n, n);
        for (&t, &w) in rule.points.iter().zip(&rule.weights) {
            let phi = self.eval(t);
            for i in 0..n {
                for j in 0..n {
                    m[(i, j)] += len * w * phi[i] * phi[j];
                }
            }
        }
        m
    }
}

/// L2 projection of `f` onto P_m on the triangle, returned as coefficients
/// in the scaled monomial basis [`ElementBasis::for_triangle`].
pub fn l2_project_element<F: Fn([f64; 2]) -> f64>(
    f: F,
    m: usize,
    tri: &[[f64; 2]; 3],
    rule: &TriangleRule,
) -> Vec<f64> {
    let basis = ElementBasis::for_triangle(m, tri);
    let mass = basis.mass_matrix(tri, rule);
    let mut rhs = DVector::zeros(basis.dim());
    for (x, w) in rule.materialize(tri) {
        let phi = basis.eval(x);
        let fx = f(x);
        for i in 0..basis.dim() {
            rhs[i] += w * fx * phi[i];
        }
    }
    let chol = Cholesky::new(mass).expect("element mass matrix must be SPD");
    chol.solve(&rhs).data.into()
}

/// L2 projection of `f` onto degree-m polynomials on the segment from `p0`
/// to `p1`, as coefficients in the t-monomial basis.
pub fn l2_project_edge<F: Fn([f64; 2]) -> f64>(
    f: F,
    m: usize,
    p0: [f64; 2],
    p1: [f64; 2],
    rule: &EdgeRule,
) -> Vec<f64> {
    let basis = EdgeBasis::new(m);
    let len = ((p1[0] - p0[0]).powi(2) + (p1[1] - p0[1]).powi(2)).sqrt();
    let mass = basis.mass_matrix(len, rule);
    let mut rhs = DVector::zeros(basis.dim());
    for (&t, &w) in rule.points.iter().zip(&rule.weights) {
        let x = [p0[0] + t * (p1[0] - p0[0]), p0[1] + t * (p1[1] - p0[1])];
        let phi = basis.eval(t);
        let fx = f(x);
        for i in 0..basis.dim() {
            rhs[i] += len * w * fx * phi[i];
        }
    }
    let chol: Cholesky<f64, Dyn> = Cholesky::new(mass).expect("edge mass matrix must be SPD");
    chol.solve(&rhs).data.into()
}

#[cfg(test)]
mod tests {
    use super::*;

    const REF: [[f64; 2]; 3] = [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]];

    /// Exact integral of x^a y^b over the reference triangle:
    /// a! b! / (a+b+2)!.
    fn monomial_integral_ref(a: u32, b: u32) -> f64 {
        let fact = |n: u32| (1..=n as u64).product::<u64>() as f64;
        fact(a) * fact(b) / fact(a + b + 2)
    }

    fn integrate_ref(rule: &TriangleRule, a: u32, b: u32) -> f64 {
        rule.materialize(&REF)
            .iter()
            .map(|&([x, y], w)| w * x.powi(a as i32) * y.powi(b as i32))
            .sum()
    }

    #[test]
    fn triangle_rules_exact_for_all_monomials() {
        for q in 1..=12 {
            let rule = quad_triangle(q).unwrap();
            assert!(rule.degree >= q);
            for a in 0..=q as u32 {
                for b in 0..=(q as u32 - a) {
                    let exact = monomial_integral_ref(a, b);
                    let got = integrate_ref(&rule, a, b);
                    assert!(
                        (got - exact).abs() <= 1e-13 * exact.abs().max(1.0),
                        "q={q} x^{a} y^{b}: got {got}, exact {exact}"
                    );
                }
            }
        }
    }

    #[test]
    fn triangle_rules_positive_interior_normalized() {
        for q in 1..=12 {
            let rule = quad_triangle(q).unwrap();
            let sum: f64 = rule.weights.iter().sum();
            assert!((sum - 1.0).abs() <= 1e-14, "q={q} weight sum {sum}");
            for (lam, &w) in rule.points.iter().zip(&rule.weights) {
                assert!(w > 0.0);
                for &l in lam {
                    assert!(l > 0.0 && l < 1.0, "q={q} barycentric {lam:?}");
                }
                assert!((lam[0] + lam[1] + lam[2] - 1.0).abs() <= 1e-14);
            }
        }
    }

    #[test]
    fn triangle_rule_unavailable_degree() {
        assert!(matches!(
            quad_triangle(13),
            Err(Error::QuadratureDegreeUnavailable(13))
        ));
        assert!(quad_triangle(0).is_err());
    }

    #[test]
    fn unit_integral_is_area() {
        let rule = quad_triangle(2).unwrap();
        let total: f64 = rule.materialize(&REF).iter().map(|&(_, w)| w).sum();
        assert!((total - 0.5).abs() <= 1e-15);
    }

    #[test]
    fn x2y2_integral_matches_closed_form() {
        // a! b! / (a+b+2)! = 2! 2! / 6! = 1/180
        let rule = quad_triangle(8).unwrap();
        let got = integrate_ref(&rule, 2, 2);
        assert!((got - 1.0 / 180.0).abs() <= 1e-15, "got {got}");
    }

    #[test]
    fn q8_weights_sum_to_area() {
        let tri = [[0.2, -0.1], [1.7, 0.4], [0.6, 2.0]];
        let rule = quad_triangle(8).unwrap();
        let sum: f64 = rule.materialize(&tri).iter().map(|&(_, w)| w).sum();
        let area = triangle_area(&tri);
        assert!((sum - area).abs() <= 1e-14 * area);
    }

    #[test]
    fn edge_rule_basics() {
        let rule = quad_edge(1);
        let got: f64 = rule
            .points
            .iter()
            .zip(&rule.weights)
            .map(|(&t, &w)| w * t)
            .sum();
        assert!((got - 0.5).abs() <= 1e-15);

        let rule5 = quad_edge(5);
        let got: f64 = rule5
            .points
            .iter()
            .zip(&rule5.weights)
            .map(|(&t, &w)| w * t.powi(4))
            .sum();
        assert!((got - 0.2).abs() <= 1e-15);
    }

    #[test]
    fn edge_rule_nodes_interior() {
        for q in 0..=12 {
            let rule = quad_edge(q);
            assert_eq!(rule.points.len(), (q + 2) / 2);
            for &t in &rule.points {
                assert!(t > 0.0 && t < 1.0);
            }
        }
    }

    #[test]
    fn edge_rule_exactness_battery() {
        for q in 1..=12 {
            let rule = quad_edge(q);
            for p in 0..=q as i32 {
                let got: f64 = rule
                    .points
                    .iter()
                    .zip(&rule.weights)
                    .map(|(&t, &w)| w * t.powi(p))
                    .sum();
                let exact = 1.0 / (p as f64 + 1.0);
                assert!((got - exact).abs() <= 1e-14, "q={q} t^{p}");
            }
        }
    }

    /// Expand a scaled monomial basis function into plain x^a y^b monomial
    /// coefficients (for the dense closed-form oracle below).
    fn expand_scaled(basis: &ElementBasis, a: u32, b: u32) -> Vec<((u32, u32), f64)> {
        let binom = |n: u32, k: u32| -> f64 {
            (0..k).map(|i| (n - i) as f64 / (i + 1) as f64).product()
        };
        let [cx, cy] = basis.center;
        let h = basis.scale;
        let mut terms = Vec::new();
        for i in 0..=a {
            for j in 0..=b {
                let coef = binom(a, i)
                    * binom(b, j)
                    * (-cx).powi((a - i) as i32)
                    * (-cy).powi((b - j) as i32)
                    / h.powi((a + b) as i32);
                terms.push(((i, j), coef));
            }
        }
        terms
    }

    /// Projection of x^3 onto P2 on the reference triangle, cross-checked
    /// against dense normal equations built from closed-form monomial
    /// integrals only.
    #[test]
    fn project_element_matches_dense_oracle() {
        let m = 2;
        let rule = quad_triangle(8).unwrap();
        let got = l2_project_element(|x| x[0].powi(3), m, &REF, &rule);

        let basis = ElementBasis::for_triangle(m, &REF);
        let n = basis.dim();
        let exact_pair = |e1: &[((u32, u32), f64)], e2: &[((u32, u32), f64)]| -> f64 {
            let mut s = 0.0;
            for &((a1, b1), c1) in e1 {
                for &((a2, b2), c2) in e2 {
                    s += c1 * c2 * monomial_integral_ref(a1 + a2, b1 + b2);
                }
            }
            s
        };
        let expansions: Vec<_> = (0..n)
            .map(|i| {
                let mut exps = Vec::new();
                for d in 0..=m as u32 {
                    for b in 0..=d {
                        exps.push((d - b, b));
                    }
                }
                expand_scaled(&basis, exps[i].0, exps[i].1)
            })
            .collect();
        let f_exp = vec![((3u32, 0u32), 1.0)];
        let mut mass = DMatrix::zeros(n, n);
        let mut rhs = DVector::zeros(n);
        for i in 0..n {
            rhs[i] = exact_pair(&expansions[i], &f_exp);
            for j in 0..n {
                mass[(i, j)] = exact_pair(&expansions[i], &expansions[j]);
            }
        }
        let expected = mass.lu().solve(&rhs).unwrap();
        for i in 0..n {
            assert!(
                (got[i] - expected[i]).abs() <= 1e-12,
                "coeff {i}: {} vs {}",
                got[i],
                expected[i]
            );
        }
    }

    #[test]
    fn project_element_exact_on_polynomials() {
        let tri = [[0.3, 0.1], [1.2, 0.5], [0.4, 1.4]];
        let rule = quad_triangle(8).unwrap();
        let basis = ElementBasis::for_triangle(2, &tri);
        // f in P2: recovered exactly.
        let f = |x: [f64; 2]| 1.5 - 0.7 * x[0] + 2.0 * x[1] + 0.25 * x[0] * x[1] - x[1] * x[1];
        let coeffs = l2_project_element(f, 2, &tri, &rule);
        for (x, _) in rule.materialize(&tri) {
            assert!((basis.eval_with(&coeffs, x) - f(x)).abs() <= 1e-12);
        }
        // f = 0 -> zero vector.
        let zeros = l2_project_element(|_| 0.0, 2, &tri, &rule);
        assert!(zeros.iter().all(|&c| c == 0.0));
    }

    #[test]
    fn project_edge_matches_dense_oracle() {
        // f = t^5 onto degree-2 edge basis; oracle from closed-form 1D
        // moments int_0^1 t^(i+j) dt = 1/(i+j+1) on a unit-length edge.
        let p0 = [0.0, 0.0];
        let p1 = [1.0, 0.0];
        let rule = quad_edge(11);
        let got = l2_project_edge(|x| x[0].powi(5), 2, p0, p1, &rule);
        let mut mass = DMatrix::zeros(3, 3);
        let mut rhs = DVector::zeros(3);
        for i in 0..3usize {
            rhs[i] = 1.0 / (i as f64 + 6.0);
            for j in 0..3usize {
                mass[(i, j)] = 1.0 / ((i + j) as f64 + 1.0);
            }
        }
        let expected = mass.lu().solve(&rhs).unwrap();
        for i in 0..3 {
            assert!((got[i] - expected[i]).abs() <= 1e-12);
        }
    }

    #[test]
    fn project_edge_exact_on_polynomials() {
        let p0 = [0.5, -0.25];
        let p1 = [1.5, 0.75];
        let rule = quad_edge(7);
        let basis = EdgeBasis::new(2);
        let f = |x: [f64; 2]| 2.0 * x[0] * x[0] - x[1] + 0.3;
        let coeffs = l2_project_edge(f, 2, p0, p1, &rule);
        for &t in &rule.points {
            let x = [p0[0] + t * (p1[0] - p0[0]), p0[1] + t * (p1[1] - p0[1])];
            assert!((basis.eval_with(&coeffs, t) - f(x)).abs() <= 1e-12);
        }
        let c = l2_project_edge(|_| 4.25, 2, p0, p1, &rule);
        assert!((c[0] - 4.25).abs() <= 1e-13 && c[1].abs() <= 1e-13 && c[2].abs() <= 1e-13);
    }

    #[test]
    fn projections_idempotent_and_linear() {
        let tri = [[0.0, 0.0], [2.0, 0.1], [0.5, 1.7]];
        let rule = quad_triangle(8).unwrap();
        let basis = ElementBasis::for_triangle(2, &tri);
        let f = |x: [f64; 2]| (x[0] * 1.3).sin() * (x[1] - 0.2).cos();
        let g = |x: [f64; 2]| x[0] * x[0] * x[1];
        let pf = l2_project_element(f, 2, &tri, &rule);
        let pg = l2_project_element(g, 2, &tri, &rule);
        // Idempotent: projecting the projection reproduces it.
        let ppf = l2_project_element(|x| basis.eval_with(&pf, x), 2, &tri, &rule);
        for i in 0..pf.len() {
            assert!((ppf[i] - pf[i]).abs() <= 1e-13 * pf[i].abs().max(1.0));
        }
        // Linear.
        let (alpha, beta) = (2.5, -0.75);
        let pl = l2_project_element(|x| alpha * f(x) + beta * g(x), 2, &tri, &rule);
        for i in 0..pf.len() {
            let expect = alpha * pf[i] + beta * pg[i];
            assert!((pl[i] - expect).abs() <= 1e-12 * expect.abs().max(1.0));
        }
    }

    #[test]
    fn mass_matrix_conditioning_uniform_under_scaling() {
        // The scaled basis keeps the mass matrix spectrum proportional to
        // the area, so the condition number is scale invariant.
        let rule = quad_triangle(8).unwrap();
        let cond = |tri: &[[f64; 2]; 3]| {
            let basis = ElementBasis::for_triangle(2, tri);
            let m = basis.mass_matrix(tri, &rule);
            let eig = m.symmetric_eigen().eigenvalues;
            eig.max() / eig.min()
        };
        let big = [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]];
        let small = [[0.0, 0.0], [1e-6, 0.0], [0.0, 1e-6]];
        let (c1, c2) = (cond(&big), cond(&small));
        assert!((c1 / c2 - 1.0).abs() <= 1e-6, "cond {c1} vs {c2}");
    }
}
