//! Deterministic quadrature rules used by the asymptotic predictor:
//! Gauss-Hermite for expectations against Gaussian weight and composite
//! Gauss-Legendre for smooth finite-interval integrals.
//!
//! Nodes and weights come from the Golub-Welsch eigenvalue method on the
//! symmetric Jacobi matrix of the orthogonal-polynomial recurrence.

use nalgebra::DMatrix;

/// A Gauss-Hermite rule for the physicists' weight `exp(-x^2)` on the real
/// line: `integral exp(-x^2) f(x) dx ~= sum w_i f(x_i)`.
#[derive(Debug, Clone)]
pub struct GaussHermite {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussHermite {
    /// Build an `n`-point rule (exact for polynomials up to degree 2n-1).
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        // Jacobi matrix: zero diagonal, off-diagonal sqrt(k/2).
        let off: Vec<f64> = (1..n).map(|k| (k as f64 * 0.5).sqrt()).collect();
        let (nodes, mut weights) = golub_welsch(&off);
        let total = std::f64::consts::PI.sqrt();
        for w in &mut weights {
            *w *= total;
        }
        Self { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `integral exp(-x^2) f(x) dx`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(x, w)| w * f(*x))
            .sum()
    }

    /// Expectation of `f(G)` for standard normal `G` (change of variables
    /// `g = sqrt(2) x`).
    pub fn expect_normal<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        let inv = 1.0 / std::f64::consts::PI.sqrt();
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(x, w)| w * f(std::f64::consts::SQRT_2 * x))
            .sum::<f64>()
            * inv
    }

    /// Expectation of `f(G1, G2)` for independent standard normals, on the
    /// tensor-product grid of this rule.
    pub fn expect_normal_2d<F: Fn(f64, f64) -> f64>(&self, f: F) -> f64 {
        let inv = 1.0 / std::f64::consts::PI;
        let mut acc = 0.0;
        for (x1, w1) in self.nodes.iter().zip(&self.weights) {
            let g1 = std::f64::consts::SQRT_2 * x1;
            let mut row = 0.0;
            for (x2, w2) in self.nodes.iter().zip(&self.weights) {
                row += w2 * f(g1, std::f64::consts::SQRT_2 * x2);
            }
            acc += w1 * row;
        }
        acc * inv
    }
}

/// An `n`-point Gauss-Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        let off: Vec<f64> = (1..n)
            .map(|k| {
                let k = k as f64;
                k / (4.0 * k * k - 1.0).sqrt()
            })
            .collect();
        let (nodes, mut weights) = golub_welsch(&off);
        for w in &mut weights {
            *w *= 2.0;
        }
        Self { nodes, weights }
    }

    /// `integral_a^b f(x) dx` on one panel.
    pub fn integrate<F: Fn(f64) -> f64>(&self, a: f64, b: f64, f: F) -> f64 {
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(x, w)| w * f(mid + half * x))
            .sum::<f64>()
            * half
    }

    /// Composite integration over `panels` equal subintervals of `[a, b]`.
    pub fn integrate_composite<F: Fn(f64) -> f64>(
        &self,
        a: f64,
        b: f64,
        panels: usize,
        f: F,
    ) -> f64 {
        assert!(panels >= 1);
        let step = (b - a) / panels as f64;
        (0..panels)
            .map(|i| {
                let lo = a + i as f64 * step;
                self.integrate(lo, lo + step, &f)
            })
            .sum()
    }
}

/// Nodes (sorted ascending) and first-component-squared weights of the
/// symmetric tridiagonal Jacobi matrix with zero diagonal and the given
/// off-diagonal. Weights sum to 1 and are scaled by the caller.
fn golub_welsch(off_diagonal: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let n = off_diagonal.len() + 1;
    let mut jacobi = DMatrix::<f64>::zeros(n, n);
    for (k, b) in off_diagonal.iter().enumerate() {
        jacobi[(k, k + 1)] = *b;
        jacobi[(k + 1, k)] = *b;
    }
    let eigen = jacobi.symmetric_eigen();
    let mut pairs: Vec<(f64, f64)> = eigen
        .eigenvalues
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let v0 = eigen.eigenvectors[(0, i)];
            (*x, v0 * v0)
        })
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    pairs.into_iter().unzip()
}
