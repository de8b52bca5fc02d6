//! Uniform discretization of the unit cell, weighted-L2 vectors, dense
//! operators with induced-norm semantics, and the discrete Fourier basis.
//!
//! Conventions, fixed project-wide:
//! * nodes are the midpoints (i + 1/2)/n per axis, row-major ordering;
//! * the inner product is (u, v) = h^d sum u_i conj(v_i) with h^d = n^{-d},
//!   so the all-ones vector has unit norm (the cell has unit volume);
//! * operator norms are largest singular values; the quadrature weight is
//!   uniform, so weighted and plain induced 2-norms coincide.

use crate::error::{Error, Result};
use faer::prelude::*;
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Relative tolerance of the power iteration behind `operator_norm`.
const OP_NORM_REL_TOL: f64 = 1e-8;
/// Iteration cap before falling back to a full SVD.
const OP_NORM_MAX_ITER: usize = 2000;
/// Seed of the deterministic start vector.
const OP_NORM_SEED: u64 = 0x5eed_0001;

/// Uniform midpoint grid on the unit cell [0, 1)^d.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CellGrid {
    dim: usize,
    points_per_axis: usize,
}

impl CellGrid {
    pub fn new(dim: usize, points_per_axis: usize) -> Result<Self> {
        if !(1..=2).contains(&dim) {
            return Err(Error::Config("grid dimension must be 1 or 2".into()));
        }
        if points_per_axis < 2 || points_per_axis % 2 != 0 {
            return Err(Error::Config("points per axis must be even and at least 2".into()));
        }
        Ok(Self { dim, points_per_axis })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points_per_axis(&self) -> usize {
        self.points_per_axis
    }

    /// Total degrees of freedom n^d.
    pub fn total(&self) -> usize {
        self.points_per_axis.pow(self.dim as u32)
    }

    /// Quadrature weight h^d = n^{-d}.
    pub fn weight(&self) -> f64 {
        1.0 / self.total() as f64
    }

    /// Multi-index of a flat index (row-major).
    pub fn multi_index(&self, idx: usize) -> [usize; 2] {
        match self.dim {
            1 => [idx, 0],
            _ => [idx / self.points_per_axis, idx % self.points_per_axis],
        }
    }

    /// Node coordinates; entries past `dim()` are zero.
    pub fn node(&self, idx: usize) -> [f64; 2] {
        let mi = self.multi_index(idx);
        let n = self.points_per_axis as f64;
        match self.dim {
            1 => [(mi[0] as f64 + 0.5) / n, 0.0],
            _ => [(mi[0] as f64 + 0.5) / n, (mi[1] as f64 + 0.5) / n],
        }
    }

    /// Integer frequency vector of the m-th Fourier mode, each component in
    /// {-n/2, ..., n/2 - 1}, same row-major layout as the nodes.
    pub fn frequency(&self, idx: usize) -> [i64; 2] {
        let mi = self.multi_index(idx);
        let half = (self.points_per_axis / 2) as i64;
        match self.dim {
            1 => [mi[0] as i64 - half, 0],
            _ => [mi[0] as i64 - half, mi[1] as i64 - half],
        }
    }

    /// Flat index of the zero frequency.
    pub fn zero_frequency_index(&self) -> usize {
        let half = self.points_per_axis / 2;
        match self.dim {
            1 => half,
            _ => half * self.points_per_axis + half,
        }
    }
}

/// Complex node values with the weighted-L2 norm.
#[derive(Debug, Clone)]
pub struct GridFunction {
    grid: CellGrid,
    values: Col<Complex64>,
}

impl GridFunction {
    pub fn new(grid: CellGrid, values: Col<Complex64>) -> Result<Self> {
        if values.nrows() != grid.total() {
            return Err(Error::Usage("value count does not match the grid".into()));
        }
        Ok(Self { grid, values })
    }

    pub fn from_fn(grid: CellGrid, f: impl Fn(&[f64]) -> Complex64) -> Self {
        let values = Col::from_fn(grid.total(), |i| {
            let x = grid.node(i);
            f(&x[..grid.dim()])
        });
        Self { grid, values }
    }

    pub fn from_real_fn(grid: CellGrid, f: impl Fn(&[f64]) -> f64) -> Self {
        Self::from_fn(grid, |x| Complex64::new(f(x), 0.0))
    }

    pub fn constant(grid: CellGrid, value: f64) -> Self {
        Self { grid, values: Col::from_fn(grid.total(), |_| Complex64::new(value, 0.0)) }
    }

    pub fn ones(grid: CellGrid) -> Self {
        Self::constant(grid, 1.0)
    }

    pub fn grid(&self) -> CellGrid {
        self.grid
    }

    pub fn values(&self) -> &Col<Complex64> {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut Col<Complex64> {
        &mut self.values
    }

    pub fn len(&self) -> usize {
        self.values.nrows()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Weighted-L2 norm: (h^d sum |u_i|^2)^{1/2}.
    pub fn norm(&self) -> f64 {
        self.grid.weight().sqrt() * self.values.norm_l2()
    }

    /// Largest pointwise imaginary magnitude (for realness checks).
    pub fn max_imag(&self) -> f64 {
        (0..self.len()).map(|i| self.values[i].im.abs()).fold(0.0, f64::max)
    }

    pub fn min_real(&self) -> f64 {
        (0..self.len()).map(|i| self.values[i].re).fold(f64::INFINITY, f64::min)
    }

    pub fn max_real(&self) -> f64 {
        (0..self.len()).map(|i| self.values[i].re).fold(f64::NEG_INFINITY, f64::max)
    }

    /// Cell average integral: h^d sum u_i.
    pub fn mean(&self) -> Complex64 {
        let mut s = Complex64::new(0.0, 0.0);
        for i in 0..self.len() {
            s += self.values[i];
        }
        s * self.grid.weight()
    }

    pub fn scale(&self, factor: Complex64) -> GridFunction {
        GridFunction { grid: self.grid, values: &self.values * faer::Scale(factor) }
    }

    pub fn sub(&self, other: &GridFunction) -> Result<GridFunction> {
        check_same_grid(self.grid, other.grid)?;
        Ok(GridFunction { grid: self.grid, values: &self.values - &other.values })
    }

    pub fn add(&self, other: &GridFunction) -> Result<GridFunction> {
        check_same_grid(self.grid, other.grid)?;
        Ok(GridFunction { grid: self.grid, values: &self.values + &other.values })
    }
}

fn check_same_grid(a: CellGrid, b: CellGrid) -> Result<()> {
    if a != b {
        return Err(Error::Usage("grid mismatch".into()));
    }
    Ok(())
}

/// Weighted-L2 inner product (u, v) = h^d sum u_i conj(v_i).
pub fn inner_product(u: &GridFunction, v: &GridFunction) -> Result<Complex64> {
    check_same_grid(u.grid, v.grid)?;
    let dot: Complex64 = v.values.adjoint() * &u.values;
    Ok(dot * u.grid.weight())
}

/// Dense operator on grid functions. With the uniform quadrature weight its
/// weighted induced norm equals the plain largest singular value.
#[derive(Debug, Clone)]
pub struct GridOperator {
    grid: CellGrid,
    mat: Mat<Complex64>,
}

impl GridOperator {
    pub fn new(grid: CellGrid, mat: Mat<Complex64>) -> Result<Self> {
        if mat.nrows() != grid.total() || mat.ncols() != grid.total() {
            return Err(Error::Usage("matrix shape does not match the grid".into()));
        }
        Ok(Self { grid, mat })
    }

    pub fn identity(grid: CellGrid) -> Self {
        Self { grid, mat: Mat::identity(grid.total(), grid.total()) }
    }

    pub fn zeros(grid: CellGrid) -> Self {
        Self { grid, mat: Mat::zeros(grid.total(), grid.total()) }
    }

    /// Multiplication operator u -> f * u.
    pub fn diagonal(f: &GridFunction) -> Self {
        let n = f.len();
        let mut mat = Mat::zeros(n, n);
        for i in 0..n {
            mat[(i, i)] = f.values[i];
        }
        Self { grid: f.grid, mat }
    }

    /// Rank-one map u -> (u, weight) * profile.
    pub fn rank_one(profile: &GridFunction, weight: &GridFunction) -> Result<Self> {
        check_same_grid(profile.grid, weight.grid)?;
        let n = profile.len();
        let h = profile.grid.weight();
        let mat = Mat::from_fn(n, n, |i, j| profile.values[i] * weight.values[j].conj() * h);
        Ok(Self { grid: profile.grid, mat })
    }

    pub fn grid(&self) -> CellGrid {
        self.grid
    }

    pub fn matrix(&self) -> &Mat<Complex64> {
        &self.mat
    }

    pub fn matrix_mut(&mut self) -> &mut Mat<Complex64> {
        &mut self.mat
    }

    pub fn apply(&self, u: &GridFunction) -> Result<GridFunction> {
        check_same_grid(self.grid, u.grid)?;
        Ok(GridFunction { grid: self.grid, values: &self.mat * &u.values })
    }

    /// Adjoint with respect to the weighted inner product (= conjugate
    /// transpose, since the weight is uniform).
    pub fn adjoint(&self) -> GridOperator {
        GridOperator { grid: self.grid, mat: self.mat.adjoint().to_owned() }
    }

    pub fn compose(&self, other: &GridOperator) -> Result<GridOperator> {
        check_same_grid(self.grid, other.grid)?;
        Ok(GridOperator { grid: self.grid, mat: &self.mat * &other.mat })
    }

    pub fn add(&self, other: &GridOperator) -> Result<GridOperator> {
        check_same_grid(self.grid, other.grid)?;
        Ok(GridOperator { grid: self.grid, mat: &self.mat + &other.mat })
    }

    pub fn sub(&self, other: &GridOperator) -> Result<GridOperator> {
        check_same_grid(self.grid, other.grid)?;
        Ok(GridOperator { grid: self.grid, mat: &self.mat - &other.mat })
    }

    pub fn scale(&self, factor: Complex64) -> GridOperator {
        GridOperator { grid: self.grid, mat: &self.mat * faer::Scale(factor) }
    }

    /// Add c * I in place.
    pub fn shift(&self, c: Complex64) -> GridOperator {
        let mut mat = self.mat.clone();
        for i in 0..mat.nrows() {
            mat[(i, i)] += c;
        }
        GridOperator { grid: self.grid, mat }
    }

    pub fn trace(&self) -> Complex64 {
        let mut t = Complex64::new(0.0, 0.0);
        for i in 0..self.mat.nrows() {
            t += self.mat[(i, i)];
        }
        t
    }

    pub fn max_entry_abs(&self) -> f64 {
        self.mat.norm_max()
    }

    /// Eigenvalues of the Hermitian part (M + M*) / 2, ascending.
    pub fn hermitian_part_eigenvalues(&self) -> Result<Vec<f64>> {
        let n = self.mat.nrows();
        let h: Mat<Complex64> =
            Mat::from_fn(n, n, |i, j| (self.mat[(i, j)] + self.mat[(j, i)].conj()) * 0.5);
        let eig = h
            .self_adjoint_eigen(faer::Side::Lower)
            .map_err(|e| Error::Numeric(format!("hermitian eigensolve failed: {e:?}")))?;
        let mut vals: Vec<f64> = (0..n).map(|i| eig.S().column_vector()[i].re).collect();
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        Ok(vals)
    }

    /// All singular values, descending.
    pub fn singular_values(&self) -> Result<Vec<f64>> {
        self.mat
            .singular_values()
            .map_err(|e| Error::Numeric(format!("svd failed: {e:?}")))
    }

    /// Number of singular values above the threshold.
    pub fn rank(&self, threshold: f64) -> Result<usize> {
        Ok(self.singular_values()?.into_iter().filter(|s| *s > threshold).count())
    }
}

/// Anything that can act as a linear operator for norm estimation.
pub trait ApplyLinear {
    fn dim(&self) -> usize;
    fn apply(&self, x: &Col<Complex64>) -> Col<Complex64>;
    fn apply_adjoint(&self, x: &Col<Complex64>) -> Col<Complex64>;
    /// Dense realization, used only by the SVD fallback.
    fn materialize(&self) -> Mat<Complex64>;
}

impl ApplyLinear for GridOperator {
    fn dim(&self) -> usize {
        self.mat.nrows()
    }
    fn apply(&self, x: &Col<Complex64>) -> Col<Complex64> {
        &self.mat * x
    }
    fn apply_adjoint(&self, x: &Col<Complex64>) -> Col<Complex64> {
        self.mat.adjoint() * x
    }
    fn materialize(&self) -> Mat<Complex64> {
        self.mat.clone()
    }
}

/// Largest singular value by power iteration on M*M with a deterministic
/// start vector; falls back to a full SVD if the iteration stalls.
pub fn operator_norm_of(op: &dyn ApplyLinear) -> Result<f64> {
    let n = op.dim();
    if n == 0 {
        return Ok(0.0);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(OP_NORM_SEED ^ n as u64);
    let mut x: Col<Complex64> =
        Col::from_fn(n, |_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
    let nx = x.norm_l2();
    if nx == 0.0 {
        return Ok(0.0);
    }
    x = &x * faer::Scale(Complex64::new(1.0 / nx, 0.0));

    let mut sigma_prev = -1.0f64;
    let mut settled = 0u32;
    for _ in 0..OP_NORM_MAX_ITER {
        let y = op.apply(&x);
        let sigma = y.norm_l2();
        if sigma < 1e-280 {
            // The operator annihilates the iterate; the norm is numerically zero.
            return Ok(sigma);
        }
        let z = op.apply_adjoint(&y);
        let nz = z.norm_l2();
        if nz < 1e-280 {
            return Ok(sigma);
        }
        x = &z * faer::Scale(Complex64::new(1.0 / nz, 0.0));
        if (sigma - sigma_prev).abs() <= OP_NORM_REL_TOL * sigma {
            settled += 1;
            if settled >= 3 {
                return Ok(sigma);
            }
        } else {
            settled = 0;
        }
        sigma_prev = sigma;
    }
    // Stalled: fall back to a dense SVD.
    let mat = op.materialize();
    let sv = mat
        .singular_values()
        .map_err(|e| Error::Numeric(format!("operator norm: power iteration stalled and svd failed: {e:?}")))?;
    Ok(sv.first().copied().unwrap_or(0.0))
}

/// Largest singular value of a dense grid operator.
pub fn operator_norm(m: &GridOperator) -> Result<f64> {
    if !m.mat.norm_max().is_finite() {
        return Err(Error::Numeric("operator has non-finite entries".into()));
    }
    operator_norm_of(m)
}

/// Discrete Fourier basis on the cell grid.
///
/// `unitary()` is the plain-unitary matrix V with rows indexed by the
/// frequency layout of [`CellGrid::frequency`]; `forward` maps node values
/// to plane-wave coefficients in the continuum normalization, so the
/// constant 1 maps to the indicator of frequency zero.
#[derive(Debug, Clone)]
pub struct DftBasis {
    grid: CellGrid,
    v: Mat<Complex64>,
}

impl DftBasis {
    pub fn new(grid: CellGrid) -> Self {
        let n = grid.total();
        let scale = 1.0 / (n as f64).sqrt();
        let v = Mat::from_fn(n, n, |m, j| {
            let k = grid.frequency(m);
            let x = grid.node(j);
            let arg = -2.0
                * std::f64::consts::PI
                * (k[0] as f64 * x[0] + k[1] as f64 * x[1]);
            Complex64::from_polar(scale, arg)
        });
        Self { grid, v }
    }

    pub fn grid(&self) -> CellGrid {
        self.grid
    }

    /// The plain-unitary matrix V (V^H V = I).
    pub fn unitary(&self) -> &Mat<Complex64> {
        &self.v
    }

    /// Analysis: coefficients c_k = h^d sum_j u_j e^{-2 pi i <k, x_j>}.
    pub fn forward(&self, u: &GridFunction) -> Result<Col<Complex64>> {
        check_same_grid(self.grid, u.grid)?;
        let c: Col<Complex64> = &self.v * &u.values;
        Ok(&c * faer::Scale(Complex64::new(self.grid.weight().sqrt(), 0.0)))
    }

    /// Synthesis: u(x_j) = sum_k c_k e^{2 pi i <k, x_j>}.
    pub fn inverse(&self, coeffs: &Col<Complex64>) -> Result<GridFunction> {
        if coeffs.nrows() != self.grid.total() {
            return Err(Error::Usage("coefficient count does not match the grid".into()));
        }
        let u: Col<Complex64> = self.v.adjoint() * coeffs;
        let scale = 1.0 / self.grid.weight().sqrt();
        Ok(GridFunction { grid: self.grid, values: &u * faer::Scale(Complex64::new(scale, 0.0)) })
    }

    /// Operator with the given Fourier multiplier: V^H diag(symbol) V.
    pub fn multiplier(&self, symbol: &[Complex64]) -> Result<GridOperator> {
        let n = self.grid.total();
        if symbol.len() != n {
            return Err(Error::Usage("symbol length does not match the grid".into()));
        }
        let mut scaled = Mat::zeros(n, n);
        for m in 0..n {
            for j in 0..n {
                scaled[(m, j)] = symbol[m] * self.v[(m, j)];
            }
        }
        let mat = self.v.adjoint() * &scaled;
        Ok(GridOperator { grid: self.grid, mat })
    }

    /// Trigonometric interpolant of a grid function evaluated off-grid.
    pub fn interpolate(&self, u: &GridFunction, x: &[f64]) -> Result<Complex64> {
        let c = self.forward(u)?;
        let mut acc = Complex64::new(0.0, 0.0);
        for m in 0..self.grid.total() {
            let k = self.grid.frequency(m);
            let arg = 2.0
                * std::f64::consts::PI
                * (k[0] as f64 * x[0] + k[1] as f64 * x.get(1).copied().unwrap_or(0.0));
            acc += c[m] * Complex64::from_polar(1.0, arg);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid64() -> CellGrid {
        CellGrid::new(1, 64).unwrap()
    }

    #[test]
    fn unit_cell_has_unit_mass() {
        let ones = GridFunction::ones(grid64());
        let ip = inner_product(&ones, &ones).unwrap();
        assert!((ip.re - 1.0).abs() < 1e-14 && ip.im == 0.0);
    }

    #[test]
    fn inner_product_is_sesquilinear() {
        let g = grid64();
        let u = GridFunction::from_fn(g, |x| Complex64::new(x[0], 1.0 - x[0]));
        let v = GridFunction::from_fn(g, |x| Complex64::new((2.0 * x[0]).sin(), 0.3));
        let uv = inner_product(&u, &v).unwrap();
        let vu = inner_product(&v, &u).unwrap();
        assert!((uv - vu.conj()).norm() < 1e-14);
        let uu = inner_product(&u, &u).unwrap();
        assert!(uu.re >= 0.0 && uu.im.abs() < 1e-15);
    }

    #[test]
    fn grid_mismatch_is_usage_error() {
        let u = GridFunction::ones(grid64());
        let v = GridFunction::ones(CellGrid::new(1, 32).unwrap());
        assert!(matches!(inner_product(&u, &v).unwrap_err(), Error::Usage(_)));
    }

    #[test]
    fn odd_grid_rejected() {
        assert!(CellGrid::new(1, 63).is_err());
        assert!(CellGrid::new(3, 8).is_err());
    }

    #[test]
    fn dft_constant_maps_to_zero_mode() {
        let g = grid64();
        let basis = DftBasis::new(g);
        let c = basis.forward(&GridFunction::ones(g)).unwrap();
        let z = g.zero_frequency_index();
        for m in 0..g.total() {
            let expected = if m == z { 1.0 } else { 0.0 };
            assert!((c[m] - Complex64::new(expected, 0.0)).norm() < 1e-13, "mode {m}");
        }
    }

    #[test]
    fn dft_plane_wave_is_exact() {
        let g = grid64();
        let basis = DftBasis::new(g);
        let wave = GridFunction::from_fn(g, |x| {
            Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * x[0])
        });
        let c = basis.forward(&wave).unwrap();
        for m in 0..g.total() {
            let k = g.frequency(m);
            let expected = if k[0] == 1 { 1.0 } else { 0.0 };
            assert!((c[m] - Complex64::new(expected, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn dft_is_unitary() {
        let g = grid64();
        let basis = DftBasis::new(g);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..5 {
            let u = GridFunction::new(
                g,
                Col::from_fn(g.total(), |_| {
                    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
                }),
            )
            .unwrap();
            let c = basis.forward(&u).unwrap();
            assert!((c.norm_l2() - u.norm()).abs() <= 1e-12);
            let back = basis.inverse(&c).unwrap();
            assert!(back.sub(&u).unwrap().norm() < 1e-12);
        }
    }

    #[test]
    fn operator_norm_identity_and_diagonal() {
        let g = CellGrid::new(1, 8).unwrap();
        assert!((operator_norm(&GridOperator::identity(g)).unwrap() - 1.0).abs() < 1e-9);
        let mut d = GridOperator::zeros(g);
        let diag = [2.0, -3.0, 1.0, 0.5, 0.1, -0.2, 0.7, 2.5];
        for (i, v) in diag.iter().enumerate() {
            d.matrix_mut()[(i, i)] = Complex64::new(*v, 0.0);
        }
        assert!((operator_norm(&d).unwrap() - 3.0).abs() < 1e-8);
    }

    #[test]
    fn operator_norm_rank_one_projector() {
        let g = grid64();
        let profile = GridFunction::ones(g);
        let weight = GridFunction::from_real_fn(g, |x| 1.0 + 0.4 * (2.0 * std::f64::consts::PI * x[0]).cos());
        let p = GridOperator::rank_one(&profile, &weight).unwrap();
        let expected = weight.norm();
        assert!((operator_norm(&p).unwrap() - expected).abs() < 1e-8 * expected);
    }

    #[test]
    fn operator_norm_submultiplicative() {
        let g = CellGrid::new(1, 16).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..5 {
            let a = GridOperator::new(
                g,
                Mat::from_fn(16, 16, |_, _| {
                    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
                }),
            )
            .unwrap();
            let b = GridOperator::new(
                g,
                Mat::from_fn(16, 16, |_, _| {
                    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
                }),
            )
            .unwrap();
            let na = operator_norm(&a).unwrap();
            let nb = operator_norm(&b).unwrap();
            let nab = operator_norm(&a.compose(&b).unwrap()).unwrap();
            assert!(nab <= na * nb * (1.0 + 1e-8));
        }
    }

    #[test]
    fn operator_norm_matches_svd() {
        let g = CellGrid::new(1, 32).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let a = GridOperator::new(
            g,
            Mat::from_fn(32, 32, |_, _| {
                Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
            }),
        )
        .unwrap();
        let power = operator_norm(&a).unwrap();
        let svd = a.singular_values().unwrap()[0];
        assert!((power - svd).abs() <= 1e-7 * svd, "power {power} vs svd {svd}");
    }

    #[test]
    fn zero_operator_norm_is_zero() {
        let g = CellGrid::new(1, 8).unwrap();
        assert!(operator_norm(&GridOperator::zeros(g)).unwrap() < 1e-250);
    }

    #[test]
    fn interpolation_reproduces_band_limited_values() {
        let g = CellGrid::new(1, 32).unwrap();
        let basis = DftBasis::new(g);
        let f = |x: f64| 1.0 + 0.3 * (2.0 * std::f64::consts::PI * x).cos()
            - 0.1 * (2.0 * std::f64::consts::PI * 3.0 * x).sin();
        let u = GridFunction::from_real_fn(g, |x| f(x[0]));
        for x in [0.011, 0.37, 0.777] {
            let v = basis.interpolate(&u, &[x]).unwrap();
            assert!((v.re - f(x)).abs() < 1e-12 && v.im.abs() < 1e-12);
        }
    }
}
