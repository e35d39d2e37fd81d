//! Two-sided twisted coalgebras H^(L,J), their coseparability pairing, dual
//! algebras, and an exact block decomposition (radical via the regular trace
//! form, blocks via central idempotents).

use crate::error::{HopfError, Result};
use crate::hopf::{HopfAlgebra, Tensor3, TensorElement};
use crate::integrals::{self, IntegralData};
use crate::rng::DetRng;
use crate::scalars::{split_into_roots, FieldSpec, Matrix, Scalar};
use crate::twisting::Twist;

/// The coalgebra H with comultiplication L^-1 Delta(h) J (counit unchanged).
#[derive(Debug, Clone)]
pub struct TwistedCoalgebra {
    field: FieldSpec,
    dim: usize,
    comul: Tensor3,
    counit: Vec<Scalar>,
    /// Sparse rows of the twisted comultiplication.
    comul_rows: Vec<Vec<(usize, usize, Scalar)>>,
}

impl TwistedCoalgebra {
    /// Builds H^(L,J) and verifies coassociativity and the counit law by
    /// contraction.
    pub fn build_two_sided(h: &HopfAlgebra, left: &Twist, right: &Twist) -> Result<Self> {
        let f = h.field();
        let n = h.dim();
        let mut comul = Tensor3::zeros(f, n);
        for i in 0..n {
            let d = h.comul_el(&h.basis_element(i));
            let twisted = left.j_inv().tensor_mul(h, &d).tensor_mul(h, right.j());
            for (a, b, v) in twisted.iter_nonzero(f) {
                comul.set(i, a, b, v.clone());
            }
        }
        Self::from_parts(f.clone(), comul, h.counit_vec().to_vec())
    }

    /// Builds a twisted coalgebra from raw data, verifying the coalgebra
    /// axioms.
    pub fn from_parts(field: FieldSpec, comul: Tensor3, counit: Vec<Scalar>) -> Result<Self> {
        let n = comul.n();
        let mut comul_rows = vec![Vec::new(); n];
        for (i, j, k, v) in comul.iter_nonzero(&field) {
            comul_rows[i].push((j, k, v.clone()));
        }
        let c = TwistedCoalgebra {
            field,
            dim: n,
            comul,
            counit,
            comul_rows,
        };
        c.verify_coalgebra()?;
        Ok(c)
    }

    fn verify_coalgebra(&self) -> Result<()> {
        let f = &self.field;
        let n = self.dim;
        // Coassociativity by contraction on each basis element.
        for i in 0..n {
            let mut lhs = vec![f.zero(); n * n * n];
            let mut rhs = vec![f.zero(); n * n * n];
            for (a, b, c) in &self.comul_rows[i] {
                for (x, y, d) in &self.comul_rows[*a] {
                    let idx = (*x * n + *y) * n + *b;
                    lhs[idx] = f.add(&lhs[idx], &f.mul(c, d));
                }
                for (x, y, d) in &self.comul_rows[*b] {
                    let idx = (*a * n + *x) * n + *y;
                    rhs[idx] = f.add(&rhs[idx], &f.mul(c, d));
                }
            }
            if lhs != rhs {
                return Err(HopfError::CoassociativityFailure(i));
            }
        }
        // Counit law.
        for i in 0..n {
            let mut left = vec![f.zero(); n];
            let mut right = vec![f.zero(); n];
            for (a, b, c) in &self.comul_rows[i] {
                left[*b] = f.add(&left[*b], &f.mul(c, &self.counit[*a]));
                right[*a] = f.add(&right[*a], &f.mul(c, &self.counit[*b]));
            }
            let mut e = vec![f.zero(); n];
            e[i] = f.one();
            if left != e || right != e {
                return Err(HopfError::CoassociativityFailure(i));
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn comul_tensor(&self) -> &Tensor3 {
        &self.comul
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn comul_row(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.comul_rows[i]
    }

    pub fn comul_el(&self, v: &[Scalar]) -> TensorElement {
        let f = &self.field;
        let mut t = TensorElement::zeros(f, self.dim);
        for (i, vi) in v.iter().enumerate() {
            if f.is_zero(vi) {
                continue;
            }
            for (a, b, c) in &self.comul_rows[i] {
                let cur = t.get(*a, *b).clone();
                t.set(*a, *b, f.add(&cur, &f.mul(vi, c)));
            }
        }
        t
    }
}

// ---------------------------------------------------------------------------
// Plain associative algebras (duals of twisted coalgebras, group blocks).
// ---------------------------------------------------------------------------

/// A finite-dimensional associative unital algebra given by structure
/// constants.
#[derive(Debug, Clone)]
pub struct Algebra {
    pub field: FieldSpec,
    pub dim: usize,
    pub mul: Tensor3,
    pub unit: Vec<Scalar>,
    mul_rows: Vec<Vec<(usize, Scalar)>>,
}

impl Algebra {
    pub fn new(field: FieldSpec, mul: Tensor3, unit: Vec<Scalar>) -> Result<Self> {
        let dim = mul.n();
        if unit.len() != dim {
            return Err(HopfError::ShapeError("unit length".into()));
        }
        let mut mul_rows = vec![Vec::new(); dim * dim];
        for (i, j, k, v) in mul.iter_nonzero(&field) {
            mul_rows[i * dim + j].push((k, v.clone()));
        }
        let a = Algebra {
            field,
            dim,
            mul,
            unit,
            mul_rows,
        };
        a.verify_associative_unital()?;
        Ok(a)
    }

    fn verify_associative_unital(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let ij = self.mul_el(&self.basis_element(i), &self.basis_element(j));
                    let lhs = self.mul_el(&ij, &self.basis_element(k));
                    let jk = self.mul_el(&self.basis_element(j), &self.basis_element(k));
                    let rhs = self.mul_el(&self.basis_element(i), &jk);
                    if lhs != rhs {
                        return Err(HopfError::AxiomFailure(format!(
                            "algebra associativity fails at ({i}, {j}, {k})"
                        )));
                    }
                }
            }
            let e = self.basis_element(i);
            if self.mul_el(&self.unit, &e) != e || self.mul_el(&e, &self.unit) != e {
                return Err(HopfError::AxiomFailure(format!("unit law fails at {i}")));
            }
        }
        Ok(())
    }

    pub fn basis_element(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    pub fn mul_el(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (i, ai) in a.iter().enumerate() {
            if f.is_zero(ai) {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if f.is_zero(bj) {
                    continue;
                }
                let c = f.mul(ai, bj);
                for (k, m) in &self.mul_rows[i * self.dim + j] {
                    out[*k] = f.add(&out[*k], &f.mul(&c, m));
                }
            }
        }
        out
    }

    pub fn left_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        let f = &self.field;
        let mut m = Matrix::zeros(f, self.dim, self.dim);
        for (i, ai) in a.iter().enumerate() {
            if f.is_zero(ai) {
                continue;
            }
            for j in 0..self.dim {
                for (k, c) in &self.mul_rows[i * self.dim + j] {
                    let v = f.add(&m[(*k, j)], &f.mul(ai, c));
                    m[(*k, j)] = v;
                }
            }
        }
        m
    }

    pub fn right_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        let f = &self.field;
        let mut m = Matrix::zeros(f, self.dim, self.dim);
        for (i, ai) in a.iter().enumerate() {
            if f.is_zero(ai) {
                continue;
            }
            for j in 0..self.dim {
                for (k, c) in &self.mul_rows[j * self.dim + i] {
                    let v = f.add(&m[(*k, j)], &f.mul(ai, c));
                    m[(*k, j)] = v;
                }
            }
        }
        m
    }

    pub fn invert_el(&self, a: &[Scalar]) -> Result<Vec<Scalar>> {
        use crate::scalars::{solve_linear, LinearSolution};
        let la = self.left_mult_matrix(a);
        match solve_linear(&self.field, &la, &self.unit) {
            crate::scalars::LinearSolution::Solution { particular, .. } => {
                if self.mul_el(&particular, a) != self.unit {
                    return Err(HopfError::NotInvertible);
                }
                Ok(particular)
            }
            LinearSolution::Inconsistent => Err(HopfError::NotInvertible),
        }
    }

    /// Basis of the center { z : za = az for all a }.
    pub fn center(&self) -> Vec<Vec<Scalar>> {
        let f = &self.field;
        let n = self.dim;
        let mut sys = Matrix::zeros(f, n * n, n);
        for a in 0..n {
            let la = self.left_mult_matrix(&self.basis_element(a));
            let ra = self.right_mult_matrix(&self.basis_element(a));
            let diff = la.sub(f, &ra);
            for r in 0..n {
                for c in 0..n {
                    let cur = sys[(a * n + r, c)].clone();
                    sys[(a * n + r, c)] = f.add(&cur, &diff[(r, c)]);
                }
            }
        }
        sys.kernel(f)
    }
}

/// The dual algebra of a twisted coalgebra: multiplication is the transpose
/// of the twisted comultiplication, the unit is the counit.
pub fn dual_algebra(c: &TwistedCoalgebra) -> Result<Algebra> {
    let f = c.field();
    let n = c.dim();
    let mut mul = Tensor3::zeros(f, n);
    for i in 0..n {
        for (a, b, v) in c.comul_row(i) {
            let cur = mul.get(*a, *b, i).clone();
            mul.set(*a, *b, i, f.add(&cur, v));
        }
    }
    Algebra::new(f.clone(), mul, c.counit().to_vec())
}

// ---------------------------------------------------------------------------
// Decomposition: radical + blocks.
// ---------------------------------------------------------------------------

/// Radical dimension, simple-block matrix sizes, and the central idempotents
/// of the semisimple part (coordinates in A when the radical is zero, in
/// A/rad otherwise).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraDecomposition {
    pub radical_dim: usize,
    /// Matrix sizes d_i, ascending, with sum d_i^2 = dim - radical_dim.
    pub block_dims: Vec<usize>,
    /// Linear dimensions of the blocks (d_i^2), same order.
    pub block_linear_dims: Vec<usize>,
    pub central_idempotents: Vec<Vec<Scalar>>,
}

/// Radical of A as the kernel of the regular trace form tr(L_a L_b).
///
/// The kernel always contains the radical. A zero kernel therefore certifies
/// semisimplicity in any characteristic; a nonzero kernel is trusted to *be*
/// the radical only under Dickson's hypothesis char = 0 or char > dim.
fn radical_basis(a: &Algebra) -> Result<Vec<Vec<Scalar>>> {
    let f = &a.field;
    let n = a.dim;
    let lms: Vec<Matrix> = (0..n).map(|i| a.left_mult_matrix(&a.basis_element(i))).collect();
    let mut form = Matrix::zeros(f, n, n);
    for i in 0..n {
        for j in 0..n {
            form[(i, j)] = lms[i].mul(f, &lms[j]).trace(f);
        }
    }
    let kernel = form.kernel(f);
    if kernel.is_empty() {
        return Ok(kernel);
    }
    let ch = f.characteristic();
    if ch != 0 && (ch as usize) <= n {
        return Err(HopfError::TraceCriterionInapplicable { ch, dim: n });
    }
    Ok(kernel)
}

/// The quotient A / span(ideal_basis), together with the projection that
/// maps A-coordinates to quotient coordinates.
fn quotient_algebra(a: &Algebra, ideal: &[Vec<Scalar>]) -> Result<(Algebra, Matrix)> {
    let f = &a.field;
    let n = a.dim;
    let mut rad = Matrix::from_rows(ideal.to_vec());
    let pivots = rad.rref(f);
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let complement: Vec<usize> = (0..n).filter(|c| !pivot_set.contains(c)).collect();
    let m = complement.len();
    // Projection: subtract the radical component, then read off complement
    // coordinates.
    let project = |v: &[Scalar]| -> Vec<Scalar> {
        let mut w = v.to_vec();
        for (ri, &pc) in pivots.iter().enumerate() {
            let c = w[pc].clone();
            if f.is_zero(&c) {
                continue;
            }
            for t in 0..n {
                let sub = f.mul(&c, &rad[(ri, t)]);
                w[t] = f.sub(&w[t], &sub);
            }
        }
        complement.iter().map(|&t| w[t].clone()).collect()
    };
    let mut proj = Matrix::zeros(f, m, n);
    for t in 0..n {
        let col = project(&a.basis_element(t));
        for r in 0..m {
            proj[(r, t)] = col[r].clone();
        }
    }
    let mut mul = Tensor3::zeros(f, m);
    for (bi, &ci) in complement.iter().enumerate() {
        for (bj, &cj) in complement.iter().enumerate() {
            let prod = a.mul_el(&a.basis_element(ci), &a.basis_element(cj));
            let q = project(&prod);
            for (k, v) in q.iter().enumerate() {
                if !f.is_zero(v) {
                    mul.set(bi, bj, k, v.clone());
                }
            }
        }
    }
    let unit = project(&a.unit);
    Ok((Algebra::new(f.clone(), mul, unit)?, proj))
}

/// A subalgebra with unit `e` spanned by `span` (vectors in parent
/// coordinates), returned with the embedding matrix (columns are the new
/// basis in parent coordinates).
fn subalgebra_on_span(a: &Algebra, span: &[Vec<Scalar>], unit: &[Scalar]) -> Result<(Algebra, Matrix)> {
    let f = &a.field;
    let n = a.dim;
    let mut basis = Matrix::from_rows(span.to_vec());
    let pivots = basis.rref(f);
    let m = pivots.len();
    // RREF rows have unit pivots and zeros above/below, so coordinates of a
    // vector in the span are just its pivot-column entries.
    let coords = |v: &[Scalar]| -> Result<Vec<Scalar>> {
        let c: Vec<Scalar> = pivots.iter().map(|&p| v[p].clone()).collect();
        // Confirm membership.
        let mut recon = vec![f.zero(); n];
        for (ri, cv) in c.iter().enumerate() {
            for t in 0..n {
                recon[t] = f.add(&recon[t], &f.mul(cv, &basis[(ri, t)]));
            }
        }
        if recon != v {
            return Err(HopfError::InternalInconsistency(
                "vector not in subalgebra span".into(),
            ));
        }
        Ok(c)
    };
    let mut mul = Tensor3::zeros(f, m);
    for i in 0..m {
        for j in 0..m {
            let bi: Vec<Scalar> = (0..n).map(|t| basis[(i, t)].clone()).collect();
            let bj: Vec<Scalar> = (0..n).map(|t| basis[(j, t)].clone()).collect();
            let prod = a.mul_el(&bi, &bj);
            let c = coords(&prod)?;
            for (k, v) in c.iter().enumerate() {
                if !f.is_zero(v) {
                    mul.set(i, j, k, v.clone());
                }
            }
        }
    }
    let unit_c = coords(unit)?;
    let mut embed = Matrix::zeros(f, n, m);
    for i in 0..m {
        for t in 0..n {
            embed[(t, i)] = basis[(i, t)].clone();
        }
    }
    Ok((Algebra::new(f.clone(), mul, unit_c)?, embed))
}

/// Splits a semisimple algebra into its simple blocks, returning
/// (linear dim, central idempotent in input coordinates) per block.
fn split_semisimple(a: &Algebra, rng: &mut DetRng) -> Result<Vec<(usize, Vec<Scalar>)>> {
    let f = &a.field;
    let center = a.center();
    if center.len() <= 1 {
        return Ok(vec![(a.dim, a.unit.clone())]);
    }
    // Deterministic generic central elements until the minimal polynomial
    // splits with at least two distinct roots.
    for _attempt in 0..64 {
        let z: Vec<Scalar> = {
            let mut v = vec![f.zero(); a.dim];
            for basis_vec in &center {
                let c = match f.characteristic() {
                    0 => f.from_i64(rng.small_int(8)),
                    p => f.from_i64(rng.below(p) as i64),
                };
                for t in 0..a.dim {
                    v[t] = f.add(&v[t], &f.mul(&c, &basis_vec[t]));
                }
            }
            v
        };
        let lz = a.left_mult_matrix(&z);
        let minpoly = crate::scalars::minimal_polynomial(f, &lz);
        let roots = match split_into_roots(f, &minpoly) {
            Ok(r) => r,
            Err(HopfError::FailedToSplit) => continue,
            Err(e) => return Err(e),
        };
        if roots.len() < 2 {
            continue;
        }
        if roots.len() != minpoly.len() - 1 {
            // Repeated roots cannot happen for a central element of a
            // semisimple algebra; treat as a failed attempt.
            continue;
        }
        // Lagrange idempotents of z.
        let mut blocks = Vec::new();
        for (i, ri) in roots.iter().enumerate() {
            let mut e = a.unit.clone();
            for (j, rj) in roots.iter().enumerate() {
                if i == j {
                    continue;
                }
                let denom = f.sub(ri, rj);
                let dinv = f.inv(&denom)?;
                // e *= (z - rj) / (ri - rj)
                let mut shifted = z.clone();
                for (t, u) in a.unit.iter().enumerate() {
                    shifted[t] = f.sub(&shifted[t], &f.mul(rj, u));
                }
                let scaled: Vec<Scalar> = shifted.iter().map(|c| f.mul(c, &dinv)).collect();
                e = a.mul_el(&e, &scaled);
            }
            blocks.push(e);
        }
        // Verify orthogonal idempotents summing to 1.
        let mut total = vec![f.zero(); a.dim];
        for e in &blocks {
            for (t, v) in e.iter().enumerate() {
                total[t] = f.add(&total[t], v);
            }
        }
        if total != a.unit {
            return Err(HopfError::InternalInconsistency(
                "idempotents do not sum to 1".into(),
            ));
        }
        for (i, ei) in blocks.iter().enumerate() {
            for (j, ej) in blocks.iter().enumerate() {
                let prod = a.mul_el(ei, ej);
                let expected = if i == j { ei.clone() } else { vec![f.zero(); a.dim] };
                if prod != expected {
                    return Err(HopfError::InternalInconsistency(
                        "idempotents not orthogonal".into(),
                    ));
                }
            }
        }
        // Recurse into each block subalgebra A e_i.
        let mut out = Vec::new();
        for e in &blocks {
            let span: Vec<Vec<Scalar>> = (0..a.dim)
                .map(|t| a.mul_el(&a.basis_element(t), e))
                .collect();
            let (sub, embed) = subalgebra_on_span(a, &span, e)?;
            for (dim, idem) in split_semisimple(&sub, rng)? {
                let lifted = embed.mul_vec(f, &idem);
                out.push((dim, lifted));
            }
        }
        return Ok(out);
    }
    Err(HopfError::FieldTooSmall)
}

/// Full decomposition: radical via the trace form, then central idempotents
/// and matrix block sizes of the semisimple part. Deterministic given the
/// seed.
pub fn decompose(a: &Algebra, seed: u64) -> Result<AlgebraDecomposition> {
    let rad = radical_basis(a)?;
    let radical_dim = rad.len();
    let semisimple_part = if radical_dim == 0 {
        a.clone()
    } else {
        quotient_algebra(a, &rad)?.0
    };
    let mut rng = DetRng::new(seed);
    let mut blocks = split_semisimple(&semisimple_part, &mut rng)?;
    blocks.sort_by_key(|(d, _)| *d);
    let mut block_dims = Vec::with_capacity(blocks.len());
    let mut block_linear_dims = Vec::with_capacity(blocks.len());
    let mut idempotents = Vec::with_capacity(blocks.len());
    for (lin, e) in blocks {
        let d = (1..=lin).find(|d| d * d == lin).ok_or(HopfError::FieldTooSmall)?;
        block_dims.push(d);
        block_linear_dims.push(lin);
        idempotents.push(e);
    }
    Ok(AlgebraDecomposition {
        radical_dim,
        block_dims,
        block_linear_dims,
        central_idempotents: idempotents,
    })
}

/// Simple means radical zero and exactly one block.
pub fn is_simple(c: &TwistedCoalgebra, seed: u64) -> Result<bool> {
    let a = dual_algebra(c)?;
    let d = decompose(&a, seed)?;
    Ok(d.radical_dim == 0 && d.block_dims.len() == 1)
}

/// A twist is non-degenerate when the one-sided coalgebra H^(1,J) is simple.
pub fn is_nondegenerate(h: &HopfAlgebra, twist: &Twist, seed: u64) -> Result<bool> {
    let trivial = Twist::trivial(h);
    let c = TwistedCoalgebra::build_two_sided(h, &trivial, twist)?;
    is_simple(&c, seed)
}

/// Number of group-like elements of the coalgebra: solutions of
/// Delta~(c) = c (x) c with eps(c) = 1. These biject with the characters of
/// the dual algebra, i.e. with its one-dimensional blocks, which is how the
/// count is computed.
pub fn grouplike_count(c: &TwistedCoalgebra, seed: u64) -> Result<usize> {
    let a = dual_algebra(c)?;
    let d = decompose(&a, seed)?;
    Ok(d.block_linear_dims.iter().filter(|&&m| m == 1).count())
}

// ---------------------------------------------------------------------------
// Coseparability pairing.
// ---------------------------------------------------------------------------

/// The explicit coseparability pairing psi(g (x) h) = lambda(h W S(g) V)
/// with V = S(Q_L) and W = Q_J^-1.
#[derive(Debug, Clone)]
pub struct CosepPairing {
    /// psi on basis pairs: psi[(i, j)] = psi(e_i (x) e_j).
    pub psi: Matrix,
    pub v: Vec<Scalar>,
    pub w: Vec<Scalar>,
}

/// Builds the pairing for H^(L,J) and verifies both defining conditions on
/// all basis pairs. Requires H cosemisimple and unimodular; with a trivial
/// left twist the unimodularity requirement is waived (Blattner-Montgomery
/// special case) and only lambda is needed.
pub fn coseparability_pairing(
    h: &HopfAlgebra,
    c: &TwistedCoalgebra,
    left: &Twist,
    right: &Twist,
    data: &IntegralData,
) -> Result<CosepPairing> {
    let f = h.field();
    if !integrals::is_cosemisimple_via_integral(h, data) {
        return Err(HopfError::HypothesisViolation("H not cosemisimple".into()));
    }
    if !left.is_trivial(h) && !integrals::is_unimodular(h, data) {
        return Err(HopfError::HypothesisViolation("H not unimodular".into()));
    }
    let n = h.dim();
    let v = h.antipode_el(left.q());
    let w = right.q_inv().to_vec();
    let mut psi = Matrix::zeros(f, n, n);
    for g in 0..n {
        let sg = h.antipode_el(&h.basis_element(g));
        let sgv = h.mul_el(&sg, &v);
        let wsgv = h.mul_el(&w, &sgv);
        for x in 0..n {
            let arg = h.mul_el(&h.basis_element(x), &wsgv);
            psi[(g, x)] = h.pair(&data.lambda, &arg);
        }
    }
    // Condition 2: psi(Delta~(c)) = eps(c).
    for i in 0..n {
        let mut s = f.zero();
        for (a, b, coeff) in c.comul_row(i) {
            s = f.add(&s, &f.mul(coeff, &psi[(*a, *b)]));
        }
        if s != h.counit_vec()[i] {
            return Err(HopfError::PairingConditionFailure(i, i));
        }
    }
    // Condition 1: c_(1~) psi(c_(2~) (x) d) = psi(c (x) d_(1~)) d_(2~).
    for ci in 0..n {
        for di in 0..n {
            let mut lhs = h.zero_el();
            for (a, b, coeff) in c.comul_row(ci) {
                let val = f.mul(coeff, &psi[(*b, di)]);
                lhs[*a] = f.add(&lhs[*a], &val);
            }
            let mut rhs = h.zero_el();
            for (a, b, coeff) in c.comul_row(di) {
                let val = f.mul(coeff, &psi[(ci, *a)]);
                rhs[*b] = f.add(&rhs[*b], &val);
            }
            if lhs != rhs {
                return Err(HopfError::PairingConditionFailure(ci, di));
            }
        }
    }
    Ok(CosepPairing { psi, v, w })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{group_algebra, FiniteGroup};
    use crate::scalars::FieldSpec;
    use crate::zoo;

    fn trivial_coalgebra(h: &HopfAlgebra) -> TwistedCoalgebra {
        let t = Twist::trivial(h);
        TwistedCoalgebra::build_two_sided(h, &t, &t).unwrap()
    }

    #[test]
    fn trivial_two_sided_is_delta() {
        let h = group_algebra(&FiniteGroup::cyclic(3), FieldSpec::prime(7)).unwrap();
        let c = trivial_coalgebra(&h);
        assert_eq!(c.comul_tensor(), h.comul_tensor());
    }

    #[test]
    fn dual_of_group_algebra_is_function_algebra() {
        let h = group_algebra(&FiniteGroup::elementary_abelian(2, 2), FieldSpec::prime(5)).unwrap();
        let c = trivial_coalgebra(&h);
        let a = dual_algebra(&c).unwrap();
        let d = decompose(&a, 0).unwrap();
        assert_eq!(d.radical_dim, 0);
        assert_eq!(d.block_dims, vec![1, 1, 1, 1]);
    }

    #[test]
    fn nilpotent_algebra_has_radical() {
        // k[x]/x^2 over Q.
        let f = FieldSpec::rationals();
        let mut mul = Tensor3::zeros(&f, 2);
        mul.set(0, 0, 0, f.one());
        mul.set(0, 1, 1, f.one());
        mul.set(1, 0, 1, f.one());
        let a = Algebra::new(f.clone(), mul, vec![f.one(), f.zero()]).unwrap();
        let d = decompose(&a, 0).unwrap();
        assert_eq!(d.radical_dim, 1);
        assert_eq!(d.block_dims, vec![1]);
    }

    #[test]
    fn sweedler_twisted_dual_is_single_two_block() {
        let h = zoo::sweedler_h4(FieldSpec::rationals()).unwrap();
        let tw = zoo::sweedler_twist(&h, &h.field().one()).unwrap();
        let trivial = Twist::trivial(&h);
        let c = TwistedCoalgebra::build_two_sided(&h, &trivial, &tw).unwrap();
        let a = dual_algebra(&c).unwrap();
        let d = decompose(&a, 0).unwrap();
        assert_eq!(d.radical_dim, 0);
        assert_eq!(d.block_dims, vec![2]);
        assert!(is_nondegenerate(&h, &tw, 0).unwrap());
    }

    #[test]
    fn sweedler_grouplike_counts() {
        let h = zoo::sweedler_h4(FieldSpec::rationals()).unwrap();
        let f = h.field();
        let trivial = Twist::trivial(&h);
        for (t, expected) in [(0i64, 2usize), (1, 0), (2, 0)] {
            let tw = zoo::sweedler_twist(&h, &f.from_i64(t)).unwrap();
            let c = TwistedCoalgebra::build_two_sided(&h, &trivial, &tw).unwrap();
            assert_eq!(grouplike_count(&c, 0).unwrap(), expected, "t = {t}");
        }
    }

    #[test]
    fn trivial_twist_on_group_algebra_is_degenerate() {
        let h = group_algebra(&FiniteGroup::cyclic(2), FieldSpec::prime(5)).unwrap();
        let trivial = Twist::trivial(&h);
        assert!(!is_nondegenerate(&h, &trivial, 0).unwrap());
        let c = trivial_coalgebra(&h);
        assert_eq!(grouplike_count(&c, 0).unwrap(), 2);
    }

    #[test]
    fn cosep_pairing_trivial_group_case() {
        let g = FiniteGroup::elementary_abelian(2, 2);
        let h = group_algebra(&g, FieldSpec::prime(5)).unwrap();
        let t = Twist::trivial(&h);
        let c = trivial_coalgebra(&h);
        let data = crate::integrals::integrals_on(&h).unwrap();
        let pairing = coseparability_pairing(&h, &c, &t, &t, &data).unwrap();
        // psi(g (x) h) = lambda(h g^-1) = delta_{h,g}.
        for i in 0..4 {
            for j in 0..4 {
                let expected = if i == j { h.field().one() } else { h.field().zero() };
                assert_eq!(pairing.psi[(i, j)], expected);
            }
        }
    }

    #[test]
    fn cosep_pairing_rejects_non_cosemisimple() {
        let h = zoo::sweedler_h4(FieldSpec::rationals()).unwrap();
        let t = Twist::trivial(&h);
        let c = trivial_coalgebra(&h);
        let data = crate::integrals::integrals_on(&h).unwrap();
        assert!(matches!(
            coseparability_pairing(&h, &c, &t, &t, &data),
            Err(HopfError::HypothesisViolation(_))
        ));
    }

    #[test]
    fn two_sided_equals_retwist_of_left_twisted() {
        // H^(L,J) has the same comultiplication tensor as (H^L)^(L^-1 J).
        let group = FiniteGroup::elementary_abelian(2, 2);
        let h = group_algebra(&group, FieldSpec::prime(5)).unwrap();
        let all: Vec<usize> = (0..group.order()).collect();
        let basis = crate::groups::abelian_basis(&group, &all).unwrap();
        let w = crate::groups::standard_symplectic_form(&basis.orders).unwrap();
        let l = crate::groups::symplectic_twist(&h, &basis, &w).unwrap();
        let j = Twist::trivial(&h);
        let c = TwistedCoalgebra::build_two_sided(&h, &l, &j).unwrap();
        let hl = crate::twisting::twist_hopf(&h, &l).unwrap();
        // L^-1 J = L^-1 as a twist for H^L.
        let linv_j = l.j_inv().tensor_mul(&h, j.j());
        let linv_j_inv = j.j_inv().tensor_mul(&h, l.j());
        let tw2 = Twist::verified_with_inverse(&hl, linv_j, linv_j_inv).unwrap();
        let c2 = TwistedCoalgebra::build_two_sided(&hl, &Twist::trivial(&hl), &tw2).unwrap();
        assert_eq!(c.comul_tensor(), c2.comul_tensor());
    }
}
