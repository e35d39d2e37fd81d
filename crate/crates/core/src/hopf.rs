//! Finite-dimensional Hopf algebras as structure-constant tensors.
//!
//! A [`HopfAlgebra`] stores the multiplication tensor `mul[i][j][k]`
//! (`e_i e_j = sum_k mul[i][j][k] e_k`), the comultiplication tensor
//! `comul[i][j][k]` (`Delta(e_i) = sum_{j,k} comul[i][j][k] e_j (x) e_k`),
//! the unit and counit vectors, and the antipode matrix. Elements are plain
//! coefficient vectors; elements of `H (x) H` are [`TensorElement`]s and
//! elements of the triple tensor power are [`Tensor3Element`]s.
//!
//! Products iterate over nonzero entries only, with precomputed sparse rows
//! of the structure tensors, so group algebras of moderate order stay cheap
//! even though storage is dense.

use crate::error::{HopfError, Result};
use crate::scalars::{solve_linear, FieldSpec, LinearSolution, Matrix, Scalar};

/// Dense rank-3 tensor with a fixed edge length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor3 {
    n: usize,
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(field: &FieldSpec, n: usize) -> Self {
        Tensor3 {
            n,
            data: vec![field.zero(); n * n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[(i * self.n + j) * self.n + k]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        self.data[(i * self.n + j) * self.n + k] = v;
    }

    /// Nonzero (i, j, k, coeff) entries.
    pub fn iter_nonzero<'a>(
        &'a self,
        field: &'a FieldSpec,
    ) -> impl Iterator<Item = (usize, usize, usize, &'a Scalar)> + 'a {
        let n = self.n;
        self.data.iter().enumerate().filter_map(move |(idx, v)| {
            if field.is_zero(v) {
                None
            } else {
                let k = idx % n;
                let j = (idx / n) % n;
                let i = idx / (n * n);
                Some((i, j, k, v))
            }
        })
    }
}

/// Sparse row cache: for each pair (i, j) the nonzero (k, coeff) of a
/// rank-3 tensor. Shared by products in H, H(x)H and H(x)H(x)H.
#[derive(Debug, Clone)]
pub struct RowCache {
    n: usize,
    rows: Vec<Vec<(usize, Scalar)>>,
}

impl RowCache {
    fn build(field: &FieldSpec, t: &Tensor3) -> Self {
        let n = t.n;
        let mut rows = vec![Vec::new(); n * n];
        for (i, j, k, v) in t.iter_nonzero(field) {
            rows[i * n + j].push((k, v.clone()));
        }
        RowCache { n, rows }
    }

    #[inline]
    pub fn row(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.rows[i * self.n + j]
    }
}

#[derive(Debug, Clone)]
pub struct HopfAlgebra {
    field: FieldSpec,
    dim: usize,
    basis_names: Vec<String>,
    mul: Tensor3,
    unit: Vec<Scalar>,
    comul: Tensor3,
    counit: Vec<Scalar>,
    antipode: Matrix,
    mul_rows: RowCache,
    /// For each i, the nonzero (j, k, coeff) of Delta(e_i).
    comul_rows: Vec<Vec<(usize, usize, Scalar)>>,
}

/// One axiom check with an optional witness (basis indices of the first
/// failing contraction).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: &'static str,
    pub ok: bool,
    pub witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failing(&self) -> Vec<&AxiomCheck> {
        self.checks.iter().filter(|c| !c.ok).collect()
    }
}

impl HopfAlgebra {
    /// Builds the algebra from raw tensors, checking shapes only. Run
    /// [`HopfAlgebra::verify`] to check the axioms.
    pub fn new(
        field: FieldSpec,
        basis_names: Vec<String>,
        mul: Tensor3,
        unit: Vec<Scalar>,
        comul: Tensor3,
        counit: Vec<Scalar>,
        antipode: Matrix,
    ) -> Result<Self> {
        let dim = basis_names.len();
        if mul.n != dim || comul.n != dim {
            return Err(HopfError::ShapeError(format!(
                "tensor edge length does not match dim {dim}"
            )));
        }
        if unit.len() != dim || counit.len() != dim {
            return Err(HopfError::ShapeError("unit/counit length".into()));
        }
        if antipode.rows() != dim || antipode.cols() != dim {
            return Err(HopfError::ShapeError("antipode shape".into()));
        }
        let mul_rows = RowCache::build(&field, &mul);
        let mut comul_rows = vec![Vec::new(); dim];
        for (i, j, k, v) in comul.iter_nonzero(&field) {
            comul_rows[i].push((j, k, v.clone()));
        }
        Ok(HopfAlgebra {
            field,
            dim,
            basis_names,
            mul,
            unit,
            comul,
            counit,
            antipode,
            mul_rows,
            comul_rows,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn mul_tensor(&self) -> &Tensor3 {
        &self.mul
    }

    pub fn comul_tensor(&self) -> &Tensor3 {
        &self.comul
    }

    pub fn unit_vec(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn counit_vec(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode_matrix(&self) -> &Matrix {
        &self.antipode
    }

    pub fn mul_rows(&self) -> &RowCache {
        &self.mul_rows
    }

    pub fn comul_row(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.comul_rows[i]
    }

    /// Basis element as a coefficient vector.
    pub fn basis_element(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    pub fn one(&self) -> Vec<Scalar> {
        self.unit.clone()
    }

    pub fn zero_el(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim]
    }

    // -- element-level operations ------------------------------------------

    pub fn mul_el(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(a.len(), self.dim);
        assert_eq!(b.len(), self.dim);
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
                for (k, m) in self.mul_rows.row(i, j) {
                    out[*k] = f.add(&out[*k], &f.mul(&c, m));
                }
            }
        }
        out
    }

    pub fn counit_el(&self, a: &[Scalar]) -> Scalar {
        let f = &self.field;
        let mut s = f.zero();
        for (i, ai) in a.iter().enumerate() {
            if !f.is_zero(ai) {
                s = f.add(&s, &f.mul(ai, &self.counit[i]));
            }
        }
        s
    }

    pub fn antipode_el(&self, a: &[Scalar]) -> Vec<Scalar> {
        self.antipode.mul_vec(&self.field, a)
    }

    pub fn comul_el(&self, a: &[Scalar]) -> TensorElement {
        let f = &self.field;
        let mut t = TensorElement::zeros(f, self.dim);
        for (i, ai) in a.iter().enumerate() {
            if f.is_zero(ai) {
                continue;
            }
            for (j, k, v) in &self.comul_rows[i] {
                let add = f.mul(ai, v);
                let cur = t.get(*j, *k).clone();
                t.set(*j, *k, f.add(&cur, &add));
            }
        }
        t
    }

    /// Matrix of left multiplication by `a`.
    pub fn left_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        let f = &self.field;
        let mut m = Matrix::zeros(f, self.dim, self.dim);
        for (i, ai) in a.iter().enumerate() {
            if f.is_zero(ai) {
                continue;
            }
            for j in 0..self.dim {
                for (k, c) in self.mul_rows.row(i, j) {
                    let v = f.add(&m[(*k, j)], &f.mul(ai, c));
                    m[(*k, j)] = v;
                }
            }
        }
        m
    }

    /// Matrix of right multiplication by `a`.
    pub fn right_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        let f = &self.field;
        let mut m = Matrix::zeros(f, self.dim, self.dim);
        for (i, ai) in a.iter().enumerate() {
            if f.is_zero(ai) {
                continue;
            }
            for j in 0..self.dim {
                for (k, c) in self.mul_rows.row(j, i) {
                    let v = f.add(&m[(*k, j)], &f.mul(ai, c));
                    m[(*k, j)] = v;
                }
            }
        }
        m
    }

    /// Two-sided inverse of `a`, when it exists.
    pub fn invert_el(&self, a: &[Scalar]) -> Result<Vec<Scalar>> {
        let la = self.left_mult_matrix(a);
        match solve_linear(&self.field, &la, &self.unit) {
            LinearSolution::Solution { particular, .. } => {
                // Check the other side too.
                let ba = self.mul_el(&particular, a);
                if ba != self.unit {
                    return Err(HopfError::NotInvertible);
                }
                Ok(particular)
            }
            LinearSolution::Inconsistent => Err(HopfError::NotInvertible),
        }
    }

    /// Pairing of a functional (coefficients over the dual basis) with an
    /// element.
    pub fn pair(&self, phi: &[Scalar], a: &[Scalar]) -> Scalar {
        let f = &self.field;
        let mut s = f.zero();
        for (x, y) in phi.iter().zip(a) {
            if !f.is_zero(x) && !f.is_zero(y) {
                s = f.add(&s, &f.mul(x, y));
            }
        }
        s
    }

    /// h ⇀ phi = phi_(1) <phi_(2), h>.
    pub fn hit_left(&self, h: &[Scalar], phi: &[Scalar]) -> Vec<Scalar> {
        // (h ⇀ phi)(x) = phi(x h): coefficients via the mul tensor.
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for a in 0..self.dim {
            for (b, hb) in h.iter().enumerate() {
                if f.is_zero(hb) {
                    continue;
                }
                for (k, c) in self.mul_rows.row(a, b) {
                    if f.is_zero(&phi[*k]) {
                        continue;
                    }
                    out[a] = f.add(&out[a], &f.mul(hb, &f.mul(c, &phi[*k])));
                }
            }
        }
        out
    }

    /// phi ↼ h = <phi_(1), h> phi_(2).
    pub fn hit_right(&self, phi: &[Scalar], h: &[Scalar]) -> Vec<Scalar> {
        // (phi ↼ h)(x) = phi(h x).
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (a, ha) in h.iter().enumerate() {
            if f.is_zero(ha) {
                continue;
            }
            for b in 0..self.dim {
                for (k, c) in self.mul_rows.row(a, b) {
                    if f.is_zero(&phi[*k]) {
                        continue;
                    }
                    out[b] = f.add(&out[b], &f.mul(ha, &f.mul(c, &phi[*k])));
                }
            }
        }
        out
    }

    // -- axiom verification -------------------------------------------------

    /// Checks every Hopf axiom by exact contraction and reports each one.
    pub fn verify(&self) -> AxiomReport {
        let f = &self.field;
        let n = self.dim;
        let mut checks = Vec::new();

        // Associativity.
        let mut assoc = AxiomCheck {
            axiom: "associativity",
            ok: true,
            witness: None,
        };
        'assoc: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let ij = self.mul_el(&self.basis_element(i), &self.basis_element(j));
                    let lhs = self.mul_el(&ij, &self.basis_element(k));
                    let jk = self.mul_el(&self.basis_element(j), &self.basis_element(k));
                    let rhs = self.mul_el(&self.basis_element(i), &jk);
                    if lhs != rhs {
                        assoc.ok = false;
                        assoc.witness = Some(vec![i, j, k]);
                        break 'assoc;
                    }
                }
            }
        }
        checks.push(assoc);

        // Unit.
        let mut unital = AxiomCheck {
            axiom: "unitality",
            ok: true,
            witness: None,
        };
        for i in 0..n {
            let e = self.basis_element(i);
            if self.mul_el(&self.unit, &e) != e || self.mul_el(&e, &self.unit) != e {
                unital.ok = false;
                unital.witness = Some(vec![i]);
                break;
            }
        }
        checks.push(unital);

        // Coassociativity.
        let mut coassoc = AxiomCheck {
            axiom: "coassociativity",
            ok: true,
            witness: None,
        };
        for i in 0..n {
            let d = self.comul_el(&self.basis_element(i));
            let lhs = self.delta_id(&d);
            let rhs = self.id_delta(&d);
            if lhs != rhs {
                coassoc.ok = false;
                coassoc.witness = Some(vec![i]);
                break;
            }
        }
        checks.push(coassoc);

        // Counit.
        let mut counital = AxiomCheck {
            axiom: "counitality",
            ok: true,
            witness: None,
        };
        for i in 0..n {
            let e = self.basis_element(i);
            let d = self.comul_el(&e);
            if d.eps_id(self) != e || d.id_eps(self) != e {
                counital.ok = false;
                counital.witness = Some(vec![i]);
                break;
            }
        }
        checks.push(counital);

        // Delta is an algebra map; Delta(1) = 1 (x) 1.
        let mut bialg = AxiomCheck {
            axiom: "comultiplication multiplicative",
            ok: true,
            witness: None,
        };
        if self.comul_el(&self.unit) != TensorElement::outer(f, &self.unit, &self.unit) {
            bialg.ok = false;
            bialg.witness = Some(vec![]);
        } else {
            'bialg: for i in 0..n {
                for j in 0..n {
                    let prod = self.mul_el(&self.basis_element(i), &self.basis_element(j));
                    let lhs = self.comul_el(&prod);
                    let rhs = self
                        .comul_el(&self.basis_element(i))
                        .tensor_mul(self, &self.comul_el(&self.basis_element(j)));
                    if lhs != rhs {
                        bialg.ok = false;
                        bialg.witness = Some(vec![i, j]);
                        break 'bialg;
                    }
                }
            }
        }
        checks.push(bialg);

        // eps is an algebra map; eps(1) = 1.
        let mut eps_alg = AxiomCheck {
            axiom: "counit multiplicative",
            ok: true,
            witness: None,
        };
        if !f.is_one(&self.counit_el(&self.unit)) {
            eps_alg.ok = false;
            eps_alg.witness = Some(vec![]);
        } else {
            'eps: for i in 0..n {
                for j in 0..n {
                    let prod = self.mul_el(&self.basis_element(i), &self.basis_element(j));
                    let lhs = self.counit_el(&prod);
                    let rhs = f.mul(&self.counit[i], &self.counit[j]);
                    if lhs != rhs {
                        eps_alg.ok = false;
                        eps_alg.witness = Some(vec![i, j]);
                        break 'eps;
                    }
                }
            }
        }
        checks.push(eps_alg);

        // Antipode axiom m(S (x) id)Delta = u eps = m(id (x) S)Delta.
        let mut anti = AxiomCheck {
            axiom: "antipode",
            ok: true,
            witness: None,
        };
        for i in 0..n {
            let e = self.basis_element(i);
            let expected: Vec<Scalar> = self
                .unit
                .iter()
                .map(|u| f.mul(u, &self.counit[i]))
                .collect();
            let mut left = self.zero_el();
            let mut right = self.zero_el();
            for (j, k, v) in &self.comul_rows[i] {
                let sj = self.antipode_el(&self.basis_element(*j));
                let sk = self.antipode_el(&self.basis_element(*k));
                let l = self.mul_el(&sj, &self.basis_element(*k));
                let r = self.mul_el(&self.basis_element(*j), &sk);
                for t in 0..n {
                    left[t] = f.add(&left[t], &f.mul(v, &l[t]));
                    right[t] = f.add(&right[t], &f.mul(v, &r[t]));
                }
            }
            let _ = e;
            if left != expected || right != expected {
                anti.ok = false;
                anti.witness = Some(vec![i]);
                break;
            }
        }
        checks.push(anti);

        AxiomReport { checks }
    }

    // -- tensor-power helpers ----------------------------------------------

    /// (Delta (x) id) applied to an element of H (x) H.
    pub fn delta_id(&self, t: &TensorElement) -> Tensor3Element {
        let f = &self.field;
        let mut out = Tensor3Element::zeros(f, self.dim);
        for (i, j, v) in t.iter_nonzero(f) {
            for (a, b, c) in &self.comul_rows[i] {
                let add = f.mul(v, c);
                let cur = out.get(*a, *b, j).clone();
                out.set(*a, *b, j, f.add(&cur, &add));
            }
        }
        out
    }

    /// (id (x) Delta) applied to an element of H (x) H.
    pub fn id_delta(&self, t: &TensorElement) -> Tensor3Element {
        let f = &self.field;
        let mut out = Tensor3Element::zeros(f, self.dim);
        for (i, j, v) in t.iter_nonzero(f) {
            for (a, b, c) in &self.comul_rows[j] {
                let add = f.mul(v, c);
                let cur = out.get(i, *a, *b).clone();
                out.set(i, *a, *b, f.add(&cur, &add));
            }
        }
        out
    }

    // -- duals, tensor products, opposites ----------------------------------

    /// The dual Hopf algebra on the dual basis.
    pub fn dual(&self) -> Result<HopfAlgebra> {
        let f = self.field.clone();
        let n = self.dim;
        let mut mul = Tensor3::zeros(&f, n);
        for (i, j, k, v) in self.comul.iter_nonzero(&f) {
            // (e^j e^k)(e_i) = comul[i][j][k].
            mul.set(j, k, i, f.add(mul.get(j, k, i), v));
        }
        let mut comul = Tensor3::zeros(&f, n);
        for (i, j, k, v) in self.mul.iter_nonzero(&f) {
            // Delta*(e^k) = sum mul[i][j][k] e^i (x) e^j.
            comul.set(k, i, j, f.add(comul.get(k, i, j), v));
        }
        let unit = self.counit.clone();
        let counit = self.unit.clone();
        let antipode = self.antipode.transpose();
        let names = (0..n).map(|i| format!("{}^*", self.basis_names[i])).collect();
        HopfAlgebra::new(f, names, mul, unit, comul, counit, antipode)
    }

    /// Tensor product Hopf algebra A (x) B with the untwisted structure.
    pub fn tensor_product(&self, other: &HopfAlgebra) -> Result<HopfAlgebra> {
        if self.field != other.field {
            return Err(HopfError::FieldMismatch);
        }
        let f = self.field.clone();
        let (na, nb) = (self.dim, other.dim);
        let n = na * nb;
        let idx = |i: usize, j: usize| i * nb + j;
        let mut mul = Tensor3::zeros(&f, n);
        for (i1, j1, k1, v1) in self.mul.iter_nonzero(&f) {
            for (i2, j2, k2, v2) in other.mul.iter_nonzero(&f) {
                mul.set(idx(i1, i2), idx(j1, j2), idx(k1, k2), f.mul(v1, v2));
            }
        }
        let mut comul = Tensor3::zeros(&f, n);
        for (i1, j1, k1, v1) in self.comul.iter_nonzero(&f) {
            for (i2, j2, k2, v2) in other.comul.iter_nonzero(&f) {
                comul.set(idx(i1, i2), idx(j1, j2), idx(k1, k2), f.mul(v1, v2));
            }
        }
        let mut unit = vec![f.zero(); n];
        let mut counit = vec![f.zero(); n];
        for i in 0..na {
            for j in 0..nb {
                unit[idx(i, j)] = f.mul(&self.unit[i], &other.unit[j]);
                counit[idx(i, j)] = f.mul(&self.counit[i], &other.counit[j]);
            }
        }
        let mut antipode = Matrix::zeros(&f, n, n);
        for i in 0..na {
            for k in 0..na {
                let sa = &self.antipode[(k, i)];
                if f.is_zero(sa) {
                    continue;
                }
                for j in 0..nb {
                    for l in 0..nb {
                        let sb = &other.antipode[(l, j)];
                        if f.is_zero(sb) {
                            continue;
                        }
                        antipode[(idx(k, l), idx(i, j))] = f.mul(sa, sb);
                    }
                }
            }
        }
        let mut names = Vec::with_capacity(n);
        for i in 0..na {
            for j in 0..nb {
                names.push(format!("{}(x){}", self.basis_names[i], other.basis_names[j]));
            }
        }
        HopfAlgebra::new(f, names, mul, unit, comul, counit, antipode)
    }

    /// Opposite-multiplication Hopf algebra; the antipode becomes S^{-1}.
    pub fn opposite(&self) -> Result<HopfAlgebra> {
        let f = self.field.clone();
        let n = self.dim;
        let mut mul = Tensor3::zeros(&f, n);
        for (i, j, k, v) in self.mul.iter_nonzero(&f) {
            mul.set(j, i, k, v.clone());
        }
        let antipode = self
            .antipode
            .inverse(&f)
            .ok_or(HopfError::NotInvertible)?;
        HopfAlgebra::new(
            f,
            self.basis_names.clone(),
            mul,
            self.unit.clone(),
            self.comul.clone(),
            self.counit.clone(),
            antipode,
        )
    }
}

// ---------------------------------------------------------------------------
// Elements of H (x) H.
// ---------------------------------------------------------------------------

/// An element of H (x) H stored as the n x n coefficient matrix of
/// `sum T[i][j] e_i (x) e_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorElement {
    n: usize,
    coeffs: Vec<Scalar>,
}

impl TensorElement {
    pub fn zeros(field: &FieldSpec, n: usize) -> Self {
        TensorElement {
            n,
            coeffs: vec![field.zero(); n * n],
        }
    }

    /// 1 (x) 1.
    pub fn identity(h: &HopfAlgebra) -> Self {
        Self::outer(h.field(), h.unit_vec(), h.unit_vec())
    }

    /// a (x) b.
    pub fn outer(field: &FieldSpec, a: &[Scalar], b: &[Scalar]) -> Self {
        let n = a.len();
        assert_eq!(n, b.len());
        let mut t = Self::zeros(field, n);
        for (i, ai) in a.iter().enumerate() {
            if field.is_zero(ai) {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if field.is_zero(bj) {
                    continue;
                }
                t.set(i, j, field.mul(ai, bj));
            }
        }
        t
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.coeffs[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.coeffs[i * self.n + j] = v;
    }

    pub fn iter_nonzero<'a>(
        &'a self,
        field: &'a FieldSpec,
    ) -> impl Iterator<Item = (usize, usize, &'a Scalar)> + 'a {
        let n = self.n;
        self.coeffs.iter().enumerate().filter_map(move |(idx, v)| {
            if field.is_zero(v) {
                None
            } else {
                Some((idx / n, idx % n, v))
            }
        })
    }

    /// Flip of the two tensor legs (the paper's `T_21`).
    pub fn flip(&self) -> TensorElement {
        let mut out = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                out.coeffs[j * self.n + i] = self.coeffs[i * self.n + j].clone();
            }
        }
        out
    }

    /// Componentwise product in H (x) H.
    pub fn tensor_mul(&self, h: &HopfAlgebra, other: &TensorElement) -> TensorElement {
        assert_eq!(self.n, h.dim());
        assert_eq!(other.n, h.dim());
        let f = h.field();
        let rows = h.mul_rows();
        let mut out = TensorElement::zeros(f, self.n);
        // Bucket the right factor by first leg for the inner loop.
        let mut right: Vec<Vec<(usize, &Scalar)>> = vec![Vec::new(); self.n];
        for (i, j, v) in other.iter_nonzero(f) {
            right[i].push((j, v));
        }
        for (i, j, v) in self.iter_nonzero(f) {
            for ip in 0..self.n {
                let row1 = rows.row(i, ip);
                if row1.is_empty() {
                    continue;
                }
                for (jp, w) in &right[ip] {
                    let row2 = rows.row(j, *jp);
                    if row2.is_empty() {
                        continue;
                    }
                    let vw = f.mul(v, w);
                    for (a, c1) in row1 {
                        let vwc = f.mul(&vw, c1);
                        for (b, c2) in row2 {
                            let cur = out.get(*a, *b).clone();
                            out.set(*a, *b, f.add(&cur, &f.mul(&vwc, c2)));
                        }
                    }
                }
            }
        }
        out
    }

    /// Inverse in the algebra H (x) H, by exact linear solve.
    pub fn tensor_invert(&self, h: &HopfAlgebra) -> Result<TensorElement> {
        let f = h.field();
        let n = h.dim();
        let dim2 = n * n;
        // Left multiplication by self as a dim2 x dim2 matrix.
        let rows = h.mul_rows();
        let mut m = Matrix::zeros(f, dim2, dim2);
        for (i, j, v) in self.iter_nonzero(f) {
            for ip in 0..n {
                let row1 = rows.row(i, ip);
                if row1.is_empty() {
                    continue;
                }
                for jp in 0..n {
                    let row2 = rows.row(j, jp);
                    if row2.is_empty() {
                        continue;
                    }
                    for (a, c1) in row1 {
                        let vc1 = f.mul(v, c1);
                        for (b, c2) in row2 {
                            let r = *a * n + *b;
                            let c = ip * n + jp;
                            let cur = m[(r, c)].clone();
                            m[(r, c)] = f.add(&cur, &f.mul(&vc1, c2));
                        }
                    }
                }
            }
        }
        let id = TensorElement::identity(h);
        match solve_linear(f, &m, &id.coeffs) {
            LinearSolution::Solution { particular, .. } => {
                let cand = TensorElement {
                    n,
                    coeffs: particular,
                };
                if cand.tensor_mul(h, self) != id {
                    return Err(HopfError::NotInvertible);
                }
                Ok(cand)
            }
            LinearSolution::Inconsistent => Err(HopfError::NotInvertible),
        }
    }

    /// (eps (x) id)(T) as an element of H.
    pub fn eps_id(&self, h: &HopfAlgebra) -> Vec<Scalar> {
        let f = h.field();
        let mut out = h.zero_el();
        for (i, j, v) in self.iter_nonzero(f) {
            let e = &h.counit_vec()[i];
            if !f.is_zero(e) {
                out[j] = f.add(&out[j], &f.mul(v, e));
            }
        }
        out
    }

    /// (id (x) eps)(T) as an element of H.
    pub fn id_eps(&self, h: &HopfAlgebra) -> Vec<Scalar> {
        let f = h.field();
        let mut out = h.zero_el();
        for (i, j, v) in self.iter_nonzero(f) {
            let e = &h.counit_vec()[j];
            if !f.is_zero(e) {
                out[i] = f.add(&out[i], &f.mul(v, e));
            }
        }
        out
    }

    /// Apply a linear map to both legs: (M (x) M)(T) = M T M^t.
    pub fn map_both(&self, h: &HopfAlgebra, m: &Matrix) -> TensorElement {
        let f = h.field();
        let mut out = TensorElement::zeros(f, self.n);
        for (i, j, v) in self.iter_nonzero(f) {
            for a in 0..self.n {
                let ma = &m[(a, i)];
                if f.is_zero(ma) {
                    continue;
                }
                let vma = f.mul(v, ma);
                for b in 0..self.n {
                    let mb = &m[(b, j)];
                    if f.is_zero(mb) {
                        continue;
                    }
                    let cur = out.get(a, b).clone();
                    out.set(a, b, f.add(&cur, &f.mul(&vma, mb)));
                }
            }
        }
        out
    }

    /// (S (x) S)(T).
    pub fn antipode_both(&self, h: &HopfAlgebra) -> TensorElement {
        self.map_both(h, h.antipode_matrix())
    }

    /// m(T): multiply the two legs together in H.
    pub fn multiply_legs(&self, h: &HopfAlgebra) -> Vec<Scalar> {
        let f = h.field();
        let mut out = h.zero_el();
        for (i, j, v) in self.iter_nonzero(f) {
            for (k, c) in h.mul_rows().row(i, j) {
                out[*k] = f.add(&out[*k], &f.mul(v, c));
            }
        }
        out
    }

    /// T (x) 1 in H (x) H (x) H.
    pub fn extend_right(&self, h: &HopfAlgebra) -> Tensor3Element {
        let f = h.field();
        let mut out = Tensor3Element::zeros(f, self.n);
        for (i, j, v) in self.iter_nonzero(f) {
            for (k, u) in h.unit_vec().iter().enumerate() {
                if f.is_zero(u) {
                    continue;
                }
                out.set(i, j, k, f.mul(v, u));
            }
        }
        out
    }

    /// 1 (x) T in H (x) H (x) H.
    pub fn extend_left(&self, h: &HopfAlgebra) -> Tensor3Element {
        let f = h.field();
        let mut out = Tensor3Element::zeros(f, self.n);
        for (i, j, v) in self.iter_nonzero(f) {
            for (k, u) in h.unit_vec().iter().enumerate() {
                if f.is_zero(u) {
                    continue;
                }
                out.set(k, i, j, f.mul(u, v));
            }
        }
        out
    }

    /// Embed into legs (1,3): sum T[i][j] e_i (x) 1 (x) e_j.
    pub fn embed_13(&self, h: &HopfAlgebra) -> Tensor3Element {
        let f = h.field();
        let mut out = Tensor3Element::zeros(f, self.n);
        for (i, j, v) in self.iter_nonzero(f) {
            for (k, u) in h.unit_vec().iter().enumerate() {
                if f.is_zero(u) {
                    continue;
                }
                out.set(i, k, j, f.mul(v, u));
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Elements of H (x) H (x) H.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor3Element {
    n: usize,
    coeffs: Vec<Scalar>,
}

impl Tensor3Element {
    pub fn zeros(field: &FieldSpec, n: usize) -> Self {
        Tensor3Element {
            n,
            coeffs: vec![field.zero(); n * n * n],
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.coeffs[(i * self.n + j) * self.n + k]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        self.coeffs[(i * self.n + j) * self.n + k] = v;
    }

    pub fn iter_nonzero<'a>(
        &'a self,
        field: &'a FieldSpec,
    ) -> impl Iterator<Item = (usize, usize, usize, &'a Scalar)> + 'a {
        let n = self.n;
        self.coeffs.iter().enumerate().filter_map(move |(idx, v)| {
            if field.is_zero(v) {
                None
            } else {
                let k = idx % n;
                let j = (idx / n) % n;
                let i = idx / (n * n);
                Some((i, j, k, v))
            }
        })
    }

    /// Product in H (x) H (x) H, bucketed by the first leg.
    pub fn mul3(&self, h: &HopfAlgebra, other: &Tensor3Element) -> Tensor3Element {
        let f = h.field();
        let rows = h.mul_rows();
        let n = self.n;
        let mut right: Vec<Vec<(usize, usize, &Scalar)>> = vec![Vec::new(); n];
        for (i, j, k, v) in other.iter_nonzero(f) {
            right[i].push((j, k, v));
        }
        let mut out = Tensor3Element::zeros(f, n);
        for (i, j, k, v) in self.iter_nonzero(f) {
            for ip in 0..n {
                let row1 = rows.row(i, ip);
                if row1.is_empty() {
                    continue;
                }
                for (jp, kp, w) in &right[ip] {
                    let row2 = rows.row(j, *jp);
                    if row2.is_empty() {
                        continue;
                    }
                    let row3 = rows.row(k, *kp);
                    if row3.is_empty() {
                        continue;
                    }
                    let vw = f.mul(v, w);
                    for (a, c1) in row1 {
                        let t1 = f.mul(&vw, c1);
                        for (b, c2) in row2 {
                            let t2 = f.mul(&t1, c2);
                            for (c, c3) in row3 {
                                let cur = out.get(*a, *b, *c).clone();
                                out.set(*a, *b, *c, f.add(&cur, &f.mul(&t2, c3)));
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::FiniteGroup;
    use crate::scalars::FieldSpec;

    fn z2_group_algebra(p: u64) -> HopfAlgebra {
        let g = FiniteGroup::cyclic(2);
        crate::groups::group_algebra(&g, FieldSpec::prime(p)).unwrap()
    }

    #[test]
    fn z2_group_algebra_passes_axioms() {
        let h = z2_group_algebra(5);
        let report = h.verify();
        assert!(report.all_pass(), "{:?}", report.failing());
    }

    #[test]
    fn z2_multiplication_table() {
        let h = z2_group_algebra(5);
        let e = h.basis_element(0);
        let g = h.basis_element(1);
        assert_eq!(h.mul_el(&h.one(), &g), g);
        assert_eq!(h.mul_el(&g, &g), e);
    }

    #[test]
    fn trivial_tensor_is_left_identity() {
        let h = z2_group_algebra(5);
        let f = h.field();
        let mut j = TensorElement::zeros(f, 2);
        j.set(0, 1, f.from_i64(3));
        j.set(1, 0, f.from_i64(2));
        j.set(1, 1, f.from_i64(4));
        let id = TensorElement::identity(&h);
        assert_eq!(id.tensor_mul(&h, &j), j);
        assert_eq!(j.tensor_mul(&h, &id), j);
    }

    #[test]
    fn g_tensor_g_is_self_inverse() {
        let h = z2_group_algebra(5);
        let g = h.basis_element(1);
        let t = TensorElement::outer(h.field(), &g, &g);
        let inv = t.tensor_invert(&h).unwrap();
        assert_eq!(inv, t);
    }

    #[test]
    fn identity_tensor_inverts_to_itself() {
        let h = z2_group_algebra(5);
        let id = TensorElement::identity(&h);
        assert_eq!(id.tensor_invert(&h).unwrap(), id);
    }

    #[test]
    fn dual_of_z2_passes_axioms() {
        let h = z2_group_algebra(5);
        let d = h.dual().unwrap();
        assert!(d.verify().all_pass());
        // Double dual has the same structure tensors.
        let dd = d.dual().unwrap();
        assert_eq!(dd.mul_tensor(), h.mul_tensor());
        assert_eq!(dd.comul_tensor(), h.comul_tensor());
        assert_eq!(dd.unit_vec(), h.unit_vec());
        assert_eq!(dd.counit_vec(), h.counit_vec());
        assert_eq!(dd.antipode_matrix(), h.antipode_matrix());
    }

    #[test]
    fn tensor_product_of_z2s_matches_klein_four() {
        let h = z2_group_algebra(5);
        let hh = h.tensor_product(&h).unwrap();
        assert!(hh.verify().all_pass());
        let klein = crate::groups::group_algebra(
            &FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)),
            FieldSpec::prime(5),
        )
        .unwrap();
        assert_eq!(hh.mul_tensor(), klein.mul_tensor());
        assert_eq!(hh.comul_tensor(), klein.comul_tensor());
    }

    #[test]
    fn opposite_of_commutative_is_identity() {
        let h = z2_group_algebra(5);
        let op = h.opposite().unwrap();
        assert_eq!(op.mul_tensor(), h.mul_tensor());
        assert!(op.verify().all_pass());
    }

    #[test]
    fn dual_op_tensor_passes_axioms() {
        let h = z2_group_algebra(5);
        let dual_op = h.dual().unwrap().opposite().unwrap();
        let big = dual_op.tensor_product(&h).unwrap();
        assert_eq!(big.dim(), 4);
        assert!(big.verify().all_pass());
    }

    #[test]
    fn actions_unit_laws() {
        let h = z2_group_algebra(7);
        let f = h.field();
        let phi = vec![f.from_i64(2), f.from_i64(3)];
        assert_eq!(h.hit_left(&h.one(), &phi), phi);
        assert_eq!(h.hit_right(&phi, &h.one()), phi);
    }

    #[test]
    fn actions_match_pointwise_evaluation() {
        // (h ⇀ phi)(x) = phi(x h) and (phi ↼ h)(x) = phi(h x), checked on
        // every basis triple of a small group algebra.
        let g = FiniteGroup::cyclic(3);
        let h = crate::groups::group_algebra(&g, FieldSpec::prime(7)).unwrap();
        let n = h.dim();
        for hi in 0..n {
            let hv = h.basis_element(hi);
            for pi in 0..n {
                let phi = h.basis_element(pi); // dual basis functional
                let left = h.hit_left(&hv, &phi);
                let right = h.hit_right(&phi, &hv);
                for xi in 0..n {
                    let x = h.basis_element(xi);
                    let xh = h.mul_el(&x, &hv);
                    let hx = h.mul_el(&hv, &x);
                    assert_eq!(h.pair(&left, &x), h.pair(&phi, &xh));
                    assert_eq!(h.pair(&right, &x), h.pair(&phi, &hx));
                }
            }
        }
    }
}
