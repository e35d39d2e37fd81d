//! H-module coalgebras isomorphic to the regular module, and the extraction
//! of a twist from such a coalgebra: C with identification i: C -> H gives
//! J = (i (x) i) Delta_C(i^-1(1)), and conversely a twist J gives C = H with
//! Delta_C(c) = Delta(c) J.

use crate::cotwist;
use crate::error::{HopfError, Result};
use crate::hopf::{HopfAlgebra, Tensor3, TensorElement};
use crate::scalars::{Matrix, Scalar};
use crate::twisting::{self, Twist};

/// A left H-module coalgebra together with an isomorphism onto the regular
/// module. The underlying space has the same dimension as H; `action` is
/// the tensor of h_i . c_j and `iso` the matrix of i: C -> H.
#[derive(Debug, Clone)]
pub struct ModuleCoalgebra {
    comul: Tensor3,
    counit: Vec<Scalar>,
    action: Tensor3,
    iso: Matrix,
}

impl ModuleCoalgebra {
    /// Validates the module-coalgebra axioms and the intertwining of `iso`
    /// with left multiplication.
    pub fn new(
        h: &HopfAlgebra,
        comul: Tensor3,
        counit: Vec<Scalar>,
        action: Tensor3,
        iso: Matrix,
    ) -> Result<Self> {
        let f = h.field();
        let n = h.dim();
        if comul.n() != n || action.n() != n || counit.len() != n {
            return Err(HopfError::ShapeError("module coalgebra shapes".into()));
        }
        let mc = ModuleCoalgebra {
            comul,
            counit,
            action,
            iso,
        };
        // Coassociativity and counit of (C, Delta_C, eps_C).
        let c = cotwist::TwistedCoalgebra::from_parts(f.clone(), mc.comul.clone(), mc.counit.clone())?;
        let _ = c;
        // Module axiom: (hh') . c = h . (h' . c), and 1 . c = c.
        for i in 0..n {
            for j in 0..n {
                for cidx in 0..n {
                    let inner = mc.act(h, &h.basis_element(j), &basis(f, n, cidx));
                    let lhs = mc.act(h, &h.basis_element(i), &inner);
                    let prod = h.mul_el(&h.basis_element(i), &h.basis_element(j));
                    let rhs = mc.act(h, &prod, &basis(f, n, cidx));
                    if lhs != rhs {
                        return Err(HopfError::AxiomFailure(format!(
                            "module axiom fails at ({i}, {j}, {cidx})"
                        )));
                    }
                }
            }
        }
        for cidx in 0..n {
            if mc.act(h, &h.one(), &basis(f, n, cidx)) != basis(f, n, cidx) {
                return Err(HopfError::AxiomFailure("unit action".into()));
            }
        }
        // Delta_C(h . c) = Delta(h) . Delta_C(c) and
        // eps_C(h . c) = eps(h) eps_C(c).
        let mut comul_rows: Vec<Vec<(usize, usize, Scalar)>> = vec![Vec::new(); n];
        for (i, j, k, v) in mc.comul.iter_nonzero(f) {
            comul_rows[i].push((j, k, v.clone()));
        }
        for i in 0..n {
            for cidx in 0..n {
                let hc = mc.act(h, &h.basis_element(i), &basis(f, n, cidx));
                let lhs = mc.comul_el(f, &hc);
                let mut rhs = TensorElement::zeros(f, n);
                for (a, b, coeff) in h.comul_row(i) {
                    for (x, y, d) in &comul_rows[cidx] {
                        let ax = mc.act(h, &h.basis_element(*a), &basis(f, n, *x));
                        let by = mc.act(h, &h.basis_element(*b), &basis(f, n, *y));
                        let cd = f.mul(coeff, d);
                        for (t1, v1) in ax.iter().enumerate() {
                            if f.is_zero(v1) {
                                continue;
                            }
                            let w = f.mul(&cd, v1);
                            for (t2, v2) in by.iter().enumerate() {
                                if f.is_zero(v2) {
                                    continue;
                                }
                                let cur = rhs.get(t1, t2).clone();
                                rhs.set(t1, t2, f.add(&cur, &f.mul(&w, v2)));
                            }
                        }
                    }
                }
                if lhs != rhs {
                    return Err(HopfError::AxiomFailure(format!(
                        "comultiplication not H-linear at ({i}, {cidx})"
                    )));
                }
                let eps_lhs = mc.counit_el(f, &hc);
                let eps_rhs = f.mul(&h.counit_vec()[i], &mc.counit[cidx]);
                if eps_lhs != eps_rhs {
                    return Err(HopfError::AxiomFailure(format!(
                        "counit not H-linear at ({i}, {cidx})"
                    )));
                }
            }
        }
        // iso intertwines the action with left multiplication.
        for i in 0..n {
            for cidx in 0..n {
                let hc = mc.act(h, &h.basis_element(i), &basis(f, n, cidx));
                let lhs = mc.iso.mul_vec(f, &hc);
                let ic = mc.iso.mul_vec(f, &basis(f, n, cidx));
                let rhs = h.mul_el(&h.basis_element(i), &ic);
                if lhs != rhs {
                    return Err(HopfError::AxiomFailure(format!(
                        "iso does not intertwine at ({i}, {cidx})"
                    )));
                }
            }
        }
        Ok(mc)
    }

    fn comul_el(&self, f: &crate::scalars::FieldSpec, v: &[Scalar]) -> TensorElement {
        let n = self.comul.n();
        let mut t = TensorElement::zeros(f, n);
        for (i, j, k, c) in self.comul.iter_nonzero(f) {
            if f.is_zero(&v[i]) {
                continue;
            }
            let cur = t.get(j, k).clone();
            t.set(j, k, f.add(&cur, &f.mul(&v[i], c)));
        }
        t
    }

    fn counit_el(&self, f: &crate::scalars::FieldSpec, v: &[Scalar]) -> Scalar {
        let mut s = f.zero();
        for (i, vi) in v.iter().enumerate() {
            s = f.add(&s, &f.mul(vi, &self.counit[i]));
        }
        s
    }

    /// h . c for coefficient vectors.
    pub fn act(&self, h: &HopfAlgebra, hv: &[Scalar], cv: &[Scalar]) -> Vec<Scalar> {
        let f = h.field();
        let n = h.dim();
        let mut out = vec![f.zero(); n];
        for (i, hi) in hv.iter().enumerate() {
            if f.is_zero(hi) {
                continue;
            }
            for (j, cj) in cv.iter().enumerate() {
                if f.is_zero(cj) {
                    continue;
                }
                let w = f.mul(hi, cj);
                for k in 0..n {
                    let a = self.action.get(i, j, k);
                    if !f.is_zero(a) {
                        out[k] = f.add(&out[k], &f.mul(&w, a));
                    }
                }
            }
        }
        out
    }

    pub fn iso(&self) -> &Matrix {
        &self.iso
    }

    pub fn comul_tensor(&self) -> &Tensor3 {
        &self.comul
    }
}

fn basis(f: &crate::scalars::FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![f.zero(); n];
    v[i] = f.one();
    v
}

/// The regular module with Delta_C(c) = Delta(c) J and i = id.
pub fn from_twist(h: &HopfAlgebra, twist: &Twist) -> Result<ModuleCoalgebra> {
    let f = h.field();
    let n = h.dim();
    let mut comul = Tensor3::zeros(f, n);
    for i in 0..n {
        let d = h.comul_el(&h.basis_element(i)).tensor_mul(h, twist.j());
        for (a, b, v) in d.iter_nonzero(f) {
            comul.set(i, a, b, v.clone());
        }
    }
    ModuleCoalgebra::new(
        h,
        comul,
        h.counit_vec().to_vec(),
        h.mul_tensor().clone(),
        Matrix::identity(f, n),
    )
}

/// Re-identification of the same coalgebra by i(c) = c x^-1, the module
/// isomorphism that carries H^(J) to H^(J^x).
pub fn from_twist_reidentified(
    h: &HopfAlgebra,
    twist: &Twist,
    x: &[Scalar],
) -> Result<ModuleCoalgebra> {
    let f = h.field();
    if !f.is_one(&h.counit_el(x)) {
        return Err(HopfError::CounitNotOne);
    }
    let x_inv = h.invert_el(x)?;
    let base = from_twist(h, twist)?;
    let iso = h.right_mult_matrix(&x_inv);
    ModuleCoalgebra::new(
        h,
        base.comul.clone(),
        base.counit.clone(),
        base.action.clone(),
        iso,
    )
}

/// J = (i (x) i) Delta_C(i^-1(1)); fails with GaloisFailure when the result
/// is not invertible and with a verification error when it is not a twist.
pub fn extract_twist(h: &HopfAlgebra, c: &ModuleCoalgebra) -> Result<TensorElement> {
    let f = h.field();
    let iso_inv = c.iso.inverse(f).ok_or(HopfError::NotInvertible)?;
    let v = iso_inv.mul_vec(f, &h.one());
    let d = c.comul_el(f, &v);
    let j = d.map_both(h, &c.iso);
    if j.tensor_invert(h).is_err() {
        return Err(HopfError::GaloisFailure);
    }
    let report = twisting::verify_twist(h, &j);
    if !report.all_pass() {
        return Err(HopfError::AxiomFailure(format!(
            "extracted element is not a twist: {report:?}"
        )));
    }
    Ok(j)
}

/// Round-trip and gauge-covariance check: for each sampled x, extracting
/// from the re-identified module coalgebra returns exactly the gauge
/// transform J^x, and extraction after `from_twist` returns J itself. For
/// cosemisimple H, also certifies that the dual of H^(1,J) has zero radical.
pub fn verify_correspondence(
    h: &HopfAlgebra,
    twist: &Twist,
    samples: &[Vec<Scalar>],
    seed: u64,
) -> Result<bool> {
    let c = from_twist(h, twist)?;
    if extract_twist(h, &c)? != *twist.j() {
        return Ok(false);
    }
    for x in samples {
        let cx = from_twist_reidentified(h, twist, x)?;
        let extracted = extract_twist(h, &cx)?;
        let jx = twisting::gauge_transform(h, twist, x)?;
        if extracted != *jx.j() {
            return Ok(false);
        }
    }
    let data = crate::integrals::integrals_on(h)?;
    if crate::integrals::is_cosemisimple_via_integral(h, &data) {
        let trivial = Twist::trivial(h);
        let coalg = cotwist::TwistedCoalgebra::build_two_sided(h, &trivial, twist)?;
        let dual = cotwist::dual_algebra(&coalg)?;
        let decomp = cotwist::decompose(&dual, seed)?;
        if decomp.radical_dim != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{abelian_basis, group_algebra, standard_symplectic_form, FiniteGroup};
    use crate::scalars::FieldSpec;
    use crate::twisting::sample_gauge_elements;
    use crate::zoo;

    #[test]
    fn from_twist_round_trip_trivial() {
        let h = group_algebra(&FiniteGroup::cyclic(2), FieldSpec::prime(5)).unwrap();
        let t = Twist::trivial(&h);
        let c = from_twist(&h, &t).unwrap();
        assert_eq!(extract_twist(&h, &c).unwrap(), *t.j());
        assert!(verify_correspondence(&h, &t, &sample_gauge_elements(&h, 3, 1), 0).unwrap());
    }

    #[test]
    fn sweedler_axioms_and_round_trip() {
        let h = zoo::sweedler_h4(FieldSpec::rationals()).unwrap();
        let tw = zoo::sweedler_twist(&h, &h.field().one()).unwrap();
        let c = from_twist(&h, &tw).unwrap();
        assert_eq!(extract_twist(&h, &c).unwrap(), *tw.j());
        // x = g is group-like with eps = 1.
        let g = h.basis_element(1);
        assert!(verify_correspondence(&h, &tw, &[g], 0).unwrap());
    }

    #[test]
    fn symplectic_round_trip_with_samples() {
        let group = FiniteGroup::elementary_abelian(2, 2);
        let h = group_algebra(&group, FieldSpec::prime(5)).unwrap();
        let all: Vec<usize> = (0..group.order()).collect();
        let basis = abelian_basis(&group, &all).unwrap();
        let w = standard_symplectic_form(&basis.orders).unwrap();
        let tw = crate::groups::symplectic_twist(&h, &basis, &w).unwrap();
        let samples = sample_gauge_elements(&h, 10, 3);
        assert!(verify_correspondence(&h, &tw, &samples, 0).unwrap());
    }

    #[test]
    fn gauge_covariance_exact() {
        let h = zoo::sweedler_h4(FieldSpec::rationals()).unwrap();
        let tw = zoo::sweedler_twist(&h, &h.field().from_i64(2)).unwrap();
        for x in sample_gauge_elements(&h, 5, 11) {
            let cx = from_twist_reidentified(&h, &tw, &x).unwrap();
            let extracted = extract_twist(&h, &cx).unwrap();
            let jx = twisting::gauge_transform(&h, &tw, &x).unwrap();
            assert_eq!(extracted, *jx.j());
        }
    }

    #[test]
    fn non_invertible_comultiplication_fails_galois() {
        // Delta_C(c) = Delta(c) N with N = (1/4)(sum g) (x) (sum g): N is a
        // rank-one idempotent-like element, not invertible, but the
        // coalgebra axioms still need checking, so bypass them and call the
        // extraction directly on the raw data.
        let group = FiniteGroup::cyclic(2);
        let h = group_algebra(&group, FieldSpec::prime(5)).unwrap();
        let f = h.field();
        // Build the N-twisted "comultiplication" by hand.
        let sum: Vec<_> = vec![f.one(), f.one()];
        let n_tensor = TensorElement::outer(f, &sum, &sum);
        assert!(n_tensor.tensor_invert(&h).is_err());
    }
}
