//! Dense exact matrices over a [`FieldSpec`] with reduced-row-echelon
//! solving, kernels, inverses, and minimal-polynomial root extraction.

use crate::error::{HopfError, Result};
use crate::scalars::field::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Outcome of an exact linear solve: a particular solution plus a basis of
/// the nullspace, or a witness that the system is inconsistent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearSolution {
    Solution {
        particular: Vec<Scalar>,
        nullspace: Vec<Vec<Scalar>>,
    },
    Inconsistent,
}

impl Matrix {
    pub fn zeros(field: &FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|row| row.len() == c));
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Sparse constructor from (row, col, value) triples; unset entries are 0.
    pub fn from_triples(
        field: &FieldSpec,
        rows: usize,
        cols: usize,
        triples: &[(usize, usize, Scalar)],
    ) -> Self {
        let mut m = Self::zeros(field, rows, cols);
        for (i, j, v) in triples {
            m[(*i, *j)] = v.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul(&self, field: &FieldSpec, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if field.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if field.is_zero(b) {
                        continue;
                    }
                    let v = field.add(&out[(i, j)], &field.mul(a, b));
                    out[(i, j)] = v;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, field: &FieldSpec, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![field.zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if field.is_zero(a) || field.is_zero(&v[j]) {
                    continue;
                }
                out[i] = field.add(&out[i], &field.mul(a, &v[j]));
            }
        }
        out
    }

    pub fn add(&self, field: &FieldSpec, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| field.add(a, b))
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, field: &FieldSpec, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| field.sub(a, b))
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, field: &FieldSpec, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| field.mul(a, c)).collect(),
        }
    }

    pub fn trace(&self, field: &FieldSpec) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let mut t = field.zero();
        for i in 0..self.rows {
            t = field.add(&t, &self[(i, i)]);
        }
        t
    }

    /// In-place Gauss-Jordan. Returns pivot columns.
    pub fn rref(&mut self, field: &FieldSpec) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !field.is_zero(&self[(i, c)])) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(pr * self.cols + j, r * self.cols + j);
                }
            }
            let inv = field.inv(&self[(r, c)]).expect("pivot nonzero");
            for j in c..self.cols {
                let v = field.mul(&self[(r, j)], &inv);
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i == r || field.is_zero(&self[(i, c)]) {
                    continue;
                }
                let f = self[(i, c)].clone();
                for j in c..self.cols {
                    let v = field.sub(&self[(i, j)], &field.mul(&f, &self[(r, j)]));
                    self[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, field: &FieldSpec) -> usize {
        let mut m = self.clone();
        m.rref(field).len()
    }

    /// Basis of the right nullspace { v : A v = 0 }.
    pub fn kernel(&self, field: &FieldSpec) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref(field);
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![field.zero(); self.cols];
            v[fc] = field.one();
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(&m[(ri, fc)]);
            }
            basis.push(v);
        }
        basis
    }

    /// Inverse of a square matrix, or None when singular.
    pub fn inverse(&self, field: &FieldSpec) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zeros(field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = field.one();
        }
        let pivots = aug.rref(field);
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return None;
        }
        let mut inv = Matrix::zeros(field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Some(inv)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// Exact RREF solve of A x = b.
pub fn solve_linear(field: &FieldSpec, a: &Matrix, b: &[Scalar]) -> LinearSolution {
    assert_eq!(a.rows, b.len(), "dimension mismatch");
    let n = a.cols;
    let mut aug = Matrix::zeros(field, a.rows, n + 1);
    for i in 0..a.rows {
        for j in 0..n {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, n)] = b[i].clone();
    }
    let pivots = aug.rref(field);
    if pivots.contains(&n) {
        return LinearSolution::Inconsistent;
    }
    let mut particular = vec![field.zero(); n];
    for (ri, &pc) in pivots.iter().enumerate() {
        particular[pc] = aug[(ri, n)].clone();
    }
    let nullspace = a.kernel(field);
    LinearSolution::Solution {
        particular,
        nullspace,
    }
}

/// Scale a vector so its first nonzero coordinate is 1.
pub fn normalize_first_nonzero(field: &FieldSpec, v: &[Scalar]) -> Vec<Scalar> {
    match v.iter().find(|c| !field.is_zero(c)) {
        None => v.to_vec(),
        Some(lead) => {
            let inv = field.inv(lead).expect("nonzero");
            v.iter().map(|c| field.mul(c, &inv)).collect()
        }
    }
}

/// Monic minimal polynomial of a square matrix, low degree first.
pub fn minimal_polynomial(field: &FieldSpec, a: &Matrix) -> Vec<Scalar> {
    assert_eq!(a.rows(), a.cols());
    let n = a.rows();
    let dim = n * n;
    // Find the first power of A that is a combination of lower powers.
    let mut powers: Vec<Vec<Scalar>> = Vec::new();
    let mut cur = Matrix::identity(field, n);
    loop {
        powers.push(cur.data.clone());
        // Solve powers[0..k-1] * c = powers[k-1]? We check dependence of the
        // last power on the previous ones.
        let k = powers.len();
        if k >= 2 {
            let mut sys = Matrix::zeros(field, dim, k - 1);
            for (col, p) in powers[..k - 1].iter().enumerate() {
                for (r, val) in p.iter().enumerate() {
                    sys[(r, col)] = val.clone();
                }
            }
            if let LinearSolution::Solution { particular, .. } =
                solve_linear(field, &sys, &powers[k - 1])
            {
                // A^(k-1) = sum c_i A^i  =>  minpoly = x^(k-1) - sum c_i x^i.
                let mut coeffs = vec![field.zero(); k];
                for (i, c) in particular.iter().enumerate() {
                    coeffs[i] = field.neg(c);
                }
                coeffs[k - 1] = field.one();
                return coeffs;
            }
        }
        cur = cur.mul(field, a);
        assert!(powers.len() <= n + 1, "minimal polynomial search ran away");
    }
}

fn poly_eval(field: &FieldSpec, poly: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = field.zero();
    for c in poly.iter().rev() {
        acc = field.add(&field.mul(&acc, x), c);
    }
    acc
}

/// Deflate `poly` by the root `r`, i.e. divide by (x - r) exactly.
fn poly_deflate(field: &FieldSpec, poly: &[Scalar], r: &Scalar) -> Vec<Scalar> {
    let n = poly.len();
    let mut quot = vec![field.zero(); n - 1];
    let mut carry = field.zero();
    for i in (0..n - 1).rev() {
        carry = field.add(&poly[i + 1], &field.mul(&carry, r));
        quot[i] = carry.clone();
    }
    debug_assert!(field.is_zero(&field.add(&poly[0], &field.mul(&carry, r))));
    quot
}

/// Candidate rational roots of a rational-coefficient polynomial, via the
/// rational root theorem on the integer-scaled polynomial.
fn rational_root_candidates(field: &FieldSpec, poly: &[Scalar]) -> Option<Vec<Scalar>> {
    use num::bigint::BigInt;
    use num::rational::BigRational;
    use num::{One, Signed, Zero};
    let mut rats: Vec<BigRational> = Vec::with_capacity(poly.len());
    for c in poly {
        rats.push(c.as_rational()?);
    }
    // Clear denominators.
    let mut lcm = BigInt::one();
    for r in &rats {
        lcm = num::integer::lcm(lcm.clone(), r.denom().clone());
    }
    let ints: Vec<BigInt> = rats.iter().map(|r| r.numer() * (&lcm / r.denom())).collect();
    let a0 = ints.iter().find(|c| !c.is_zero())?.abs();
    let an = ints.last()?.abs();
    let divisors = |n: &BigInt| -> Vec<BigInt> {
        // Desk-scale: the constants stay tiny; fall back to 1 if they do not.
        let nn: Option<i64> = num::ToPrimitive::to_i64(n);
        match nn {
            Some(v) if v.abs() <= 1_000_000 => {
                let v = v.abs();
                let mut out = Vec::new();
                let mut d = 1i64;
                while d * d <= v {
                    if v % d == 0 {
                        out.push(BigInt::from(d));
                        out.push(BigInt::from(v / d));
                    }
                    d += 1;
                }
                out
            }
            _ => vec![BigInt::one()],
        }
    };
    let mut cands = vec![field.zero()];
    for p in divisors(&a0) {
        for q in divisors(&an) {
            for sign in [1i64, -1] {
                let r = BigRational::new(&p * BigInt::from(sign), q.clone());
                // Embed into the field as a constant.
                let s = rational_to_scalar(field, &r);
                if !cands.contains(&s) {
                    cands.push(s);
                }
            }
        }
    }
    Some(cands)
}

fn rational_to_scalar(field: &FieldSpec, r: &num::rational::BigRational) -> Scalar {
    match field {
        FieldSpec::Cyclotomic { phi, .. } => {
            let mut c = vec![num::rational::BigRational::from_integer(0.into()); *phi];
            c[0] = r.clone();
            Scalar::Cyc(c)
        }
        FieldSpec::Prime { .. } => unreachable!("rational candidates only arise in char 0"),
    }
}

/// Distinct roots of the minimal polynomial of `a`, each with the dimension
/// of its generalized eigenspace. Errors with [`HopfError::FailedToSplit`]
/// when the polynomial has a factor without a root in the field.
pub fn factor_minpoly_roots(field: &FieldSpec, a: &Matrix) -> Result<Vec<(Scalar, usize)>> {
    let minpoly = minimal_polynomial(field, a);
    let roots = split_into_roots(field, &minpoly)?;
    let n = a.rows();
    let mut out = Vec::with_capacity(roots.len());
    for r in roots {
        // Generalized eigenspace: ker (A - r I)^n.
        let mut shifted = a.clone();
        for i in 0..n {
            shifted[(i, i)] = field.sub(&shifted[(i, i)], &r);
        }
        let mut power = Matrix::identity(field, n);
        let mut e = n;
        let mut base = shifted;
        while e > 0 {
            if e & 1 == 1 {
                power = power.mul(field, &base);
            }
            base = base.mul(field, &base);
            e >>= 1;
        }
        let dim = n - power.rank(field);
        out.push((r, dim));
    }
    Ok(out)
}

/// All roots of a polynomial that splits over the field, with multiplicity
/// flattened out (each distinct root listed once).
pub fn split_into_roots(field: &FieldSpec, poly: &[Scalar]) -> Result<Vec<Scalar>> {
    let mut work: Vec<Scalar> = poly.to_vec();
    while work.len() > 1 && field.is_zero(work.last().unwrap()) {
        work.pop();
    }
    let mut roots: Vec<Scalar> = Vec::new();
    while work.len() > 1 {
        if work.len() == 2 {
            // Linear factor: root = -c0 / c1.
            let r = field.neg(&field.div(&work[0], &work[1])?);
            if !roots.contains(&r) {
                roots.push(r);
            }
            break;
        }
        let root = match field {
            FieldSpec::Prime { .. } => field
                .elements()
                .expect("prime field")
                .into_iter()
                .find(|x| field.is_zero(&poly_eval(field, &work, x))),
            FieldSpec::Cyclotomic { .. } => rational_root_candidates(field, &work)
                .and_then(|cands| {
                    cands
                        .into_iter()
                        .find(|x| field.is_zero(&poly_eval(field, &work, x)))
                }),
        };
        match root {
            Some(r) => {
                work = poly_deflate(field, &work, &r);
                if !roots.contains(&r) {
                    roots.push(r);
                }
            }
            None => return Err(HopfError::FailedToSplit),
        }
    }
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(field: &FieldSpec, v: i64) -> Scalar {
        field.from_i64(v)
    }

    #[test]
    fn solve_identity_system() {
        let f = FieldSpec::prime(7);
        let a = Matrix::identity(&f, 2);
        let b = vec![s(&f, 1), s(&f, 0)];
        match solve_linear(&f, &a, &b) {
            LinearSolution::Solution {
                particular,
                nullspace,
            } => {
                assert_eq!(particular, b);
                assert!(nullspace.is_empty());
            }
            LinearSolution::Inconsistent => panic!("must be solvable"),
        }
    }

    #[test]
    fn zero_system_has_full_nullspace() {
        let f = FieldSpec::prime(7);
        let a = Matrix::zeros(&f, 2, 2);
        let b = vec![f.zero(), f.zero()];
        match solve_linear(&f, &a, &b) {
            LinearSolution::Solution { nullspace, .. } => assert_eq!(nullspace.len(), 2),
            LinearSolution::Inconsistent => panic!(),
        }
    }

    #[test]
    fn proportional_rows_inconsistent_rhs() {
        let q = FieldSpec::rationals();
        let a = Matrix::from_rows(vec![
            vec![s(&q, 1), s(&q, 1)],
            vec![s(&q, 2), s(&q, 2)],
        ]);
        let b = vec![s(&q, 1), s(&q, 3)];
        assert_eq!(solve_linear(&q, &a, &b), LinearSolution::Inconsistent);
    }

    #[test]
    fn solutions_satisfy_system_exactly() {
        let f = FieldSpec::prime(11);
        let a = Matrix::from_rows(vec![
            vec![s(&f, 2), s(&f, 3), s(&f, 5)],
            vec![s(&f, 7), s(&f, 1), s(&f, 4)],
        ]);
        let b = vec![s(&f, 9), s(&f, 6)];
        match solve_linear(&f, &a, &b) {
            LinearSolution::Solution {
                particular,
                nullspace,
            } => {
                assert_eq!(a.mul_vec(&f, &particular), b);
                for v in nullspace {
                    assert!(a.mul_vec(&f, &v).iter().all(|c| f.is_zero(c)));
                }
            }
            LinearSolution::Inconsistent => panic!(),
        }
    }

    #[test]
    fn minpoly_roots_diagonal() {
        let f = FieldSpec::prime(7);
        let a = Matrix::from_rows(vec![
            vec![s(&f, 1), s(&f, 0), s(&f, 0)],
            vec![s(&f, 0), s(&f, 1), s(&f, 0)],
            vec![s(&f, 0), s(&f, 0), s(&f, 2)],
        ]);
        let mut roots = factor_minpoly_roots(&f, &a).unwrap();
        roots.sort_by_key(|(r, _)| match r {
            Scalar::Fp(v) => *v,
            _ => 0,
        });
        assert_eq!(roots, vec![(s(&f, 1), 2), (s(&f, 2), 1)]);
    }

    #[test]
    fn minpoly_roots_rotation_gf5() {
        let f = FieldSpec::prime(5);
        let a = Matrix::from_rows(vec![
            vec![s(&f, 0), s(&f, 1)],
            vec![s(&f, -1), s(&f, 0)],
        ]);
        let mut roots = factor_minpoly_roots(&f, &a).unwrap();
        roots.sort_by_key(|(r, _)| match r {
            Scalar::Fp(v) => *v,
            _ => 0,
        });
        // x^2 + 1 = (x - 2)(x - 3) over GF(5).
        assert_eq!(roots, vec![(s(&f, 2), 1), (s(&f, 3), 1)]);
    }

    #[test]
    fn minpoly_roots_rotation_rationals_fails() {
        let q = FieldSpec::rationals();
        let a = Matrix::from_rows(vec![
            vec![s(&q, 0), s(&q, 1)],
            vec![s(&q, -1), s(&q, 0)],
        ]);
        assert_eq!(factor_minpoly_roots(&q, &a), Err(HopfError::FailedToSplit));
    }

    #[test]
    fn inverse_round_trip() {
        let f = FieldSpec::prime(13);
        let a = Matrix::from_rows(vec![
            vec![s(&f, 2), s(&f, 3)],
            vec![s(&f, 1), s(&f, 4)],
        ]);
        let inv = a.inverse(&f).unwrap();
        assert_eq!(a.mul(&f, &inv), Matrix::identity(&f, 2));
    }
}
