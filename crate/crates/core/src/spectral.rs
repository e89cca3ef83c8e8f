//! Exact spectral analysis of the simple random walk: transition matrix,
//! stationary distribution, full spectrum via cyclic Jacobi rotations, the
//! Dirichlet form, and the total-variation decay check.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

/// Stopping threshold on the off-diagonal Frobenius norm.
pub const JACOBI_TOLERANCE: f64 = 1e-12;
pub const JACOBI_MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("Jacobi iteration did not converge in {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },
    #[error("function has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("function is constant; the Rayleigh quotient is undefined")]
    ConstantFunction,
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("need at least one step")]
    NoSteps,
}

/// Dense square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    n: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Matrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    /// `self * v`.
    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `v^T * self`, i.e. one step of a distribution.
    pub fn apply_left(&self, v: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.n];
        for (i, &vi) in v.iter().enumerate() {
            if vi == 0.0 {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.row(i)) {
                *o += vi * a;
            }
        }
        out
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut sum = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    sum += self[(i, j)] * self[(i, j)];
                }
            }
        }
        sum.sqrt()
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.n + j]
    }
}

/// Transition matrix `K(x,y) = 1/deg(x)` on edges and the stationary
/// distribution `π(x) = deg(x) / 2|E|`.
#[derive(Debug, Clone, PartialEq)]
pub struct WalkKernel {
    matrix: Matrix,
    stationary: Vec<f64>,
}

impl WalkKernel {
    pub fn new(graph: &Graph) -> Self {
        let n = graph.vertex_count();
        let two_e = 2.0 * graph.edge_count() as f64;
        let mut matrix = Matrix::zeros(n);
        let mut stationary = Vec::with_capacity(n);
        for x in 0..n {
            let deg = graph.degree(x) as f64;
            for &y in graph.neighbors(x) {
                matrix[(x, y)] = 1.0 / deg;
            }
            stationary.push(deg / two_e);
        }
        WalkKernel { matrix, stationary }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn stationary(&self) -> &[f64] {
        &self.stationary
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// `S = D^{1/2} K D^{-1/2}` with `D = diag(π)`; symmetric by reversibility.
    pub fn symmetrized(&self) -> Matrix {
        let n = self.dim();
        let sqrt_pi: Vec<f64> = self.stationary.iter().map(|p| p.sqrt()).collect();
        let mut s = Matrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                s[(i, j)] = sqrt_pi[i] * self.matrix[(i, j)] / sqrt_pi[j];
            }
        }
        // symmetrize exactly; entries agree up to rounding
        for i in 0..n {
            for j in i + 1..n {
                let avg = 0.5 * (s[(i, j)] + s[(j, i)]);
                s[(i, j)] = avg;
                s[(j, i)] = avg;
            }
        }
        s
    }

    fn check_dim(&self, phi: &[f64]) -> Result<(), SpectralError> {
        if phi.len() != self.dim() {
            return Err(SpectralError::DimensionMismatch {
                expected: self.dim(),
                got: phi.len(),
            });
        }
        Ok(())
    }

    /// `½ Σ_{x,y} (φ(x) - φ(y))² π(x) K(x,y)`.
    pub fn dirichlet_form(&self, phi: &[f64]) -> Result<f64, SpectralError> {
        self.check_dim(phi)?;
        let n = self.dim();
        let mut sum = 0.0;
        for x in 0..n {
            for y in 0..n {
                let k = self.matrix[(x, y)];
                if k != 0.0 {
                    let d = phi[x] - phi[y];
                    sum += d * d * self.stationary[x] * k;
                }
            }
        }
        Ok(0.5 * sum)
    }

    /// The same quantity as `⟨φ, (I - K)φ⟩_π`.
    pub fn dirichlet_form_operator(&self, phi: &[f64]) -> Result<f64, SpectralError> {
        self.check_dim(phi)?;
        let k_phi = self.matrix.apply(phi);
        Ok(phi
            .iter()
            .zip(&k_phi)
            .zip(&self.stationary)
            .map(|((p, kp), pi)| p * (p - kp) * pi)
            .sum())
    }

    /// `½ Σ_{x,y} (φ(x) - φ(y))² π(x) π(y)`.
    pub fn variance(&self, phi: &[f64]) -> Result<f64, SpectralError> {
        self.check_dim(phi)?;
        let n = self.dim();
        let mut sum = 0.0;
        for x in 0..n {
            for y in 0..n {
                let d = phi[x] - phi[y];
                sum += d * d * self.stationary[x] * self.stationary[y];
            }
        }
        Ok(0.5 * sum)
    }

    /// `⟨φ - E_π φ, φ - E_π φ⟩_π`.
    pub fn variance_centered(&self, phi: &[f64]) -> Result<f64, SpectralError> {
        self.check_dim(phi)?;
        let mean = self.inner(phi, &vec![1.0; phi.len()]);
        let centered: Vec<f64> = phi.iter().map(|p| p - mean).collect();
        Ok(self.inner(&centered, &centered))
    }

    /// `⟨φ, ψ⟩_π`.
    pub fn inner(&self, phi: &[f64], psi: &[f64]) -> f64 {
        phi.iter()
            .zip(psi)
            .zip(&self.stationary)
            .map(|((a, b), p)| a * b * p)
            .sum()
    }

    /// `1 - E(φ,φ) / Var_π(φ)`, a lower bound on `β_1` for any
    /// nonconstant `φ`.
    pub fn rayleigh_lower_bound(&self, phi: &[f64]) -> Result<f64, SpectralError> {
        self.check_dim(phi)?;
        if phi.windows(2).all(|w| w[0] == w[1]) {
            return Err(SpectralError::ConstantFunction);
        }
        let var = self.variance(phi)?;
        if var <= f64::MIN_POSITIVE {
            return Err(SpectralError::ConstantFunction);
        }
        Ok(1.0 - self.dirichlet_form(phi)? / var)
    }

    /// Full eigendecomposition; eigenvalues descending.
    pub fn eigen(&self) -> Result<WalkEigen, SpectralError> {
        let sym = jacobi_eigen(&self.symmetrized())?;
        Ok(WalkEigen {
            sqrt_pi: self.stationary.iter().map(|p| p.sqrt()).collect(),
            sym,
        })
    }

    pub fn spectrum(&self) -> Result<SpectralReport, SpectralError> {
        Ok(SpectralReport::from_eigenvalues(self.eigen()?.sym.values))
    }
}

/// Eigenpairs of a symmetric matrix, sorted by descending eigenvalue.
/// `vectors[k]` is the unit eigenvector for `values[k]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
}

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops to
/// [`JACOBI_TOLERANCE`].
pub fn jacobi_eigen(matrix: &Matrix) -> Result<SymmetricEigen, SpectralError> {
    let n = matrix.dim();
    let mut a = matrix.clone();
    let mut v = Matrix::identity(n);
    let mut sweeps = 0;
    loop {
        let off = a.off_diagonal_norm();
        if off <= JACOBI_TOLERANCE {
            break;
        }
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(SpectralError::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[(k, p)], a[(k, q)]);
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[(p, k)], a[(q, k)]);
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
                a[(p, q)] = 0.0;
                a[(q, p)] = 0.0;
                for k in 0..n {
                    let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].total_cmp(&a[(i, i)]));
    Ok(SymmetricEigen {
        values: order.iter().map(|&i| a[(i, i)]).collect(),
        vectors: order
            .iter()
            .map(|&i| (0..n).map(|k| v[(k, i)]).collect())
            .collect(),
    })
}

/// Eigendecomposition of the walk, carrying the symmetric-form eigenvectors.
#[derive(Debug, Clone, PartialEq)]
pub struct WalkEigen {
    sqrt_pi: Vec<f64>,
    pub sym: SymmetricEigen,
}

impl WalkEigen {
    pub fn values(&self) -> &[f64] {
        &self.sym.values
    }

    /// Right eigenfunction of `K` for eigenvalue index `k`,
    /// `φ = D^{-1/2} u`, normalized so `⟨φ, φ⟩_π = 1`.
    pub fn eigenfunction(&self, k: usize) -> Vec<f64> {
        self.sym.vectors[k]
            .iter()
            .zip(&self.sqrt_pi)
            .map(|(u, s)| u / s)
            .collect()
    }
}

/// Spectrum summary: `β_0 ≥ β_1 ≥ ... ≥ β_{n-1}`, `β_1`, and
/// `β_* = max(β_1, |β_{n-1}|)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralReport {
    pub eigenvalues: Vec<f64>,
    pub beta1: f64,
    pub beta_star: f64,
}

impl SpectralReport {
    pub fn from_eigenvalues(eigenvalues: Vec<f64>) -> Self {
        let beta1 = eigenvalues.get(1).copied().unwrap_or(f64::NAN);
        let last = eigenvalues.last().copied().unwrap_or(f64::NAN);
        SpectralReport {
            beta_star: beta1.max(last.abs()),
            beta1,
            eigenvalues,
        }
    }
}

/// One step of the total-variation comparison.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TvStep {
    pub step: usize,
    pub distance: f64,
    pub bound: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TvReport {
    pub start: usize,
    pub beta_star: f64,
    pub steps: Vec<TvStep>,
    pub holds: bool,
}

/// Slack allowed between the exact distance and the bound.
pub const TV_SLACK: f64 = 1e-10;

/// Compares `‖K_x^r - π‖_TV` against `½ β_*^r sqrt((1-π(x))/π(x))` for
/// `r = 1..=r_max`, propagating the exact distribution step by step.
pub fn tv_bound_check(graph: &Graph, start: usize, r_max: usize) -> Result<TvReport, SpectralError> {
    let kernel = WalkKernel::new(graph);
    let n = kernel.dim();
    if start >= n {
        return Err(SpectralError::VertexOutOfRange(start));
    }
    if r_max == 0 {
        return Err(SpectralError::NoSteps);
    }
    let beta_star = kernel.spectrum()?.beta_star;
    let pi = kernel.stationary();
    let scale = 0.5 * ((1.0 - pi[start]) / pi[start]).sqrt();
    let mut dist = vec![0.0; n];
    dist[start] = 1.0;
    let mut steps = Vec::with_capacity(r_max);
    for step in 1..=r_max {
        dist = kernel.matrix().apply_left(&dist);
        let distance = 0.5 * dist.iter().zip(pi).map(|(a, b)| (a - b).abs()).sum::<f64>();
        steps.push(TvStep {
            step,
            distance,
            bound: scale * beta_star.powi(step as i32),
        });
    }
    let holds = steps.iter().all(|s| s.distance <= s.bound + TV_SLACK);
    Ok(TvReport {
        start,
        beta_star,
        steps,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph, random_connected_graph, star_graph};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn kernel_examples() {
        let k4 = WalkKernel::new(&complete_graph(4).unwrap());
        for x in 0..4 {
            for y in 0..4 {
                let expect = if x == y { 0.0 } else { 1.0 / 3.0 };
                assert_eq!(k4.matrix()[(x, y)], expect);
            }
        }
        assert!(k4.stationary().iter().all(|&p| p == 0.25));

        let s3 = WalkKernel::new(&star_graph(3).unwrap());
        assert_eq!(s3.stationary(), &[0.5, 0.25, 0.25]);

        let p2 = WalkKernel::new(&path_graph(2).unwrap());
        assert_eq!(p2.matrix().row(0), &[0.0, 1.0]);
        assert_eq!(p2.matrix().row(1), &[1.0, 0.0]);
    }

    #[test]
    fn kernel_rows_and_reversibility() {
        let g = random_connected_graph(9, 0.3, 11).unwrap();
        let k = WalkKernel::new(&g);
        let pi = k.stationary();
        assert!(close(pi.iter().sum(), 1.0, 1e-12));
        for x in 0..9 {
            assert!(close(k.matrix().row(x).iter().sum(), 1.0, 1e-12));
            for y in 0..9 {
                assert!(close(pi[x] * k.matrix()[(x, y)], pi[y] * k.matrix()[(y, x)], 1e-15));
            }
        }
    }

    #[test]
    fn complete_graph_spectrum() {
        for n in 3..12 {
            let spec = WalkKernel::new(&complete_graph(n).unwrap()).spectrum().unwrap();
            assert!(close(spec.eigenvalues[0], 1.0, 1e-12));
            let other = -1.0 / (n as f64 - 1.0);
            assert!(spec.eigenvalues[1..].iter().all(|&b| close(b, other, 1e-12)));
        }
    }

    #[test]
    fn cycle_spectrum_matches_fourier_modes() {
        for n in 3..15 {
            let spec = WalkKernel::new(&cycle_graph(n).unwrap()).spectrum().unwrap();
            let mut expect: Vec<f64> = (0..n)
                .map(|j| (2.0 * std::f64::consts::PI * j as f64 / n as f64).cos())
                .collect();
            expect.sort_by(|a, b| b.total_cmp(a));
            for (a, b) in spec.eigenvalues.iter().zip(&expect) {
                assert!(close(*a, *b, 1e-10), "n={n}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn fourier_vectors_are_eigenvectors_of_cycle_walk() {
        // independent check: K v = cos(2πj/n) v for v = cos(2πjx/n)
        let n = 8;
        let k = WalkKernel::new(&cycle_graph(n).unwrap());
        for j in 0..n {
            let w = 2.0 * std::f64::consts::PI * j as f64 / n as f64;
            let v: Vec<f64> = (0..n).map(|x| (w * x as f64).cos()).collect();
            let kv = k.matrix().apply(&v);
            for (a, b) in kv.iter().zip(&v) {
                assert!(close(*a, w.cos() * b, 1e-12));
            }
        }
    }

    #[test]
    fn k2_spectrum() {
        let spec = WalkKernel::new(&path_graph(2).unwrap()).spectrum().unwrap();
        assert!(close(spec.eigenvalues[0], 1.0, 1e-15));
        assert!(close(spec.eigenvalues[1], -1.0, 1e-15));
        assert!(close(spec.beta_star, 1.0, 1e-12));
    }

    #[test]
    fn eigenfunctions_are_pi_orthonormal() {
        let g = random_connected_graph(10, 0.35, 2).unwrap();
        let k = WalkKernel::new(&g);
        let eig = k.eigen().unwrap();
        for i in 0..10 {
            let u = &eig.sym.vectors[i];
            let su = k.symmetrized().apply(u);
            for (a, b) in su.iter().zip(u) {
                assert!(close(*a, eig.values()[i] * b, 1e-9));
            }
            for j in 0..10 {
                let dot: f64 = u.iter().zip(&eig.sym.vectors[j]).map(|(a, b)| a * b).sum();
                assert!(close(dot, (i == j) as u8 as f64, 1e-8));
                let ip = k.inner(&eig.eigenfunction(i), &eig.eigenfunction(j));
                assert!(close(ip, (i == j) as u8 as f64, 1e-8));
            }
        }
        assert!(close(eig.values().iter().sum(), 0.0, 1e-9));
    }

    #[test]
    fn dirichlet_and_variance_examples() {
        let k2 = WalkKernel::new(&path_graph(2).unwrap());
        assert_eq!(k2.dirichlet_form(&[0.0, 1.0]).unwrap(), 0.5);
        assert_eq!(k2.variance(&[0.0, 1.0]).unwrap(), 0.25);
        assert_eq!(k2.dirichlet_form(&[3.0, 3.0]).unwrap(), 0.0);
        assert_eq!(k2.variance(&[3.0, 3.0]).unwrap(), 0.0);
        assert!(matches!(
            k2.dirichlet_form(&[1.0]),
            Err(SpectralError::DimensionMismatch { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn rayleigh_quotient() {
        let g = path_graph(3).unwrap();
        let k = WalkKernel::new(&g);
        let eig = k.eigen().unwrap();
        let beta1 = eig.values()[1];
        let phi1 = eig.eigenfunction(1);
        assert!(close(k.rayleigh_lower_bound(&phi1).unwrap(), beta1, 1e-8));
        let e = k.dirichlet_form(&phi1).unwrap();
        let var = k.variance(&phi1).unwrap();
        assert!(close(e / var, 1.0 - beta1, 1e-8));
        let indicator = [1.0, 0.0, 0.0];
        assert!(k.rayleigh_lower_bound(&indicator).unwrap() <= beta1 + 1e-8);
        assert_eq!(
            k.rayleigh_lower_bound(&[2.0, 2.0, 2.0]),
            Err(SpectralError::ConstantFunction)
        );
    }

    #[test]
    fn tv_examples() {
        let k2 = tv_bound_check(&path_graph(2).unwrap(), 0, 10).unwrap();
        assert!(k2.holds);
        for s in &k2.steps {
            assert!(close(s.distance, 0.5, 1e-15));
            assert!(close(s.bound, 0.5, 1e-12));
        }
        let k4 = tv_bound_check(&complete_graph(4).unwrap(), 0, 20).unwrap();
        assert!(k4.holds);
        assert_eq!(k4.steps.len(), 20);
        // β_* = 1/3: by step 30 the bound is far below 1e-11
        let k4 = tv_bound_check(&complete_graph(4).unwrap(), 0, 30).unwrap();
        assert!(k4.steps[29].distance <= 1e-11);
        assert!(tv_bound_check(&complete_graph(4).unwrap(), 9, 3).is_err());
        assert!(tv_bound_check(&complete_graph(4).unwrap(), 0, 0).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn forms_agree(n in 2usize..10, p in 0.0f64..1.0, seed: u64,
                           phi in proptest::collection::vec(-5.0f64..5.0, 10)) {
                let g = random_connected_graph(n, p, seed).unwrap();
                let k = WalkKernel::new(&g);
                let phi = &phi[..n];
                let e1 = k.dirichlet_form(phi).unwrap();
                let e2 = k.dirichlet_form_operator(phi).unwrap();
                prop_assert!((e1 - e2).abs() <= 1e-10);
                let v1 = k.variance(phi).unwrap();
                let v2 = k.variance_centered(phi).unwrap();
                prop_assert!((v1 - v2).abs() <= 1e-10);
            }

            #[test]
            fn spectrum_invariants(n in 2usize..12, p in 0.0f64..1.0, seed: u64) {
                let g = random_connected_graph(n, p, seed).unwrap();
                let spec = WalkKernel::new(&g).spectrum().unwrap();
                prop_assert!((spec.eigenvalues[0] - 1.0).abs() <= 1e-10);
                prop_assert!(spec.beta1 < 1.0 - 1e-9);
                prop_assert!(*spec.eigenvalues.last().unwrap() >= -1.0 - 1e-10);
                prop_assert!(spec.eigenvalues.iter().sum::<f64>().abs() <= 1e-9);
            }
        }
    }
}
