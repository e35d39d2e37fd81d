//! Triangular structures on twisted group algebras: the R-matrix
//! J21^-1 J R_u, the quasitriangular axiom battery, and the Drinfeld
//! element.

use crate::error::{HopfError, Result};
use crate::hopf::{HopfAlgebra, TensorElement};
use crate::scalars::Scalar;
use crate::twisting::{twist_hopf, Twist};

/// R_u = (1/2)(1 (x) 1 + 1 (x) u + u (x) 1 - u (x) u) for a central
/// involution u, or 1 (x) 1 when u is the unit.
pub fn r_u(h: &HopfAlgebra, u: &[Scalar]) -> Result<TensorElement> {
    let f = h.field();
    if u == h.unit_vec() {
        return Ok(TensorElement::identity(h));
    }
    if f.characteristic() == 2 {
        return Err(HopfError::HypothesisViolation(
            "nontrivial u needs odd characteristic".into(),
        ));
    }
    if h.mul_el(u, u) != h.one() {
        return Err(HopfError::HypothesisViolation("u^2 != 1".into()));
    }
    for i in 0..h.dim() {
        let e = h.basis_element(i);
        if h.mul_el(u, &e) != h.mul_el(&e, u) {
            return Err(HopfError::HypothesisViolation("u not central".into()));
        }
    }
    let half = f.inv(&f.from_i64(2))?;
    let one = h.one();
    let mut r = TensorElement::zeros(f, h.dim());
    let terms: [(&[Scalar], &[Scalar], i64); 4] = [
        (&one, &one, 1),
        (&one, u, 1),
        (u, &one, 1),
        (u, u, -1),
    ];
    for (a, b, sign) in terms {
        let t = TensorElement::outer(f, a, b);
        let c = f.mul(&half, &f.from_i64(sign));
        for (i, j, v) in t.iter_nonzero(f) {
            let cur = r.get(i, j).clone();
            r.set(i, j, f.add(&cur, &f.mul(&c, v)));
        }
    }
    Ok(r)
}

/// The triangular structure (H^J, R) with R = J21^-1 J R_u. Returns the
/// twisted Hopf algebra together with R.
pub fn triangular_r_matrix(
    h: &HopfAlgebra,
    twist: &Twist,
    u: &[Scalar],
) -> Result<(HopfAlgebra, TensorElement)> {
    let hj = twist_hopf(h, twist)?;
    let ru = r_u(h, u)?;
    let r = twist
        .j_inv()
        .flip()
        .tensor_mul(h, twist.j())
        .tensor_mul(h, &ru);
    Ok((hj, r))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasitriangularReport {
    pub invertible: bool,
    pub delta_id_axiom: bool,
    pub id_delta_axiom: bool,
    pub intertwines_coopposite: bool,
}

impl QuasitriangularReport {
    pub fn all_pass(&self) -> bool {
        self.invertible && self.delta_id_axiom && self.id_delta_axiom && self.intertwines_coopposite
    }
}

/// Checks (Delta (x) id)(R) = R13 R23, (id (x) Delta)(R) = R13 R12, and
/// R Delta(h) = Delta_op(h) R on the given Hopf algebra (pass H^J for a
/// twisted triangular structure).
pub fn verify_quasitriangular(hj: &HopfAlgebra, r: &TensorElement) -> QuasitriangularReport {
    let invertible = r.tensor_invert(hj).is_ok();
    let r13 = r.embed_13(hj);
    let r23 = r.extend_left(hj);
    let r12 = r.extend_right(hj);
    let delta_id_axiom = hj.delta_id(r) == r13.mul3(hj, &r23);
    let id_delta_axiom = hj.id_delta(r) == r13.mul3(hj, &r12);
    let mut intertwines_coopposite = true;
    for i in 0..hj.dim() {
        let d = hj.comul_el(&hj.basis_element(i));
        let lhs = r.tensor_mul(hj, &d);
        let rhs = d.flip().tensor_mul(hj, r);
        if lhs != rhs {
            intertwines_coopposite = false;
            break;
        }
    }
    QuasitriangularReport {
        invertible,
        delta_id_axiom,
        id_delta_axiom,
        intertwines_coopposite,
    }
}

/// Drinfeld element m(S (x) id)(R21) of a quasitriangular structure.
pub fn drinfeld_element(hj: &HopfAlgebra, r: &TensorElement) -> Vec<Scalar> {
    let f = hj.field();
    let mut out = hj.zero_el();
    for (i, j, v) in r.flip().iter_nonzero(f) {
        let si = hj.antipode_el(&hj.basis_element(i));
        let term = hj.mul_el(&si, &hj.basis_element(j));
        for (t, c) in term.iter().enumerate() {
            if !f.is_zero(c) {
                out[t] = f.add(&out[t], &f.mul(v, c));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{abelian_basis, group_algebra, standard_symplectic_form, FiniteGroup};
    use crate::scalars::FieldSpec;

    #[test]
    fn trivial_group_trivial_r() {
        let h = group_algebra(&FiniteGroup::trivial(), FieldSpec::prime(5)).unwrap();
        let tw = Twist::trivial(&h);
        let (hj, r) = triangular_r_matrix(&h, &tw, &h.one()).unwrap();
        assert_eq!(r, TensorElement::identity(&hj));
        assert!(verify_quasitriangular(&hj, &r).all_pass());
        assert_eq!(drinfeld_element(&hj, &r), hj.one());
    }

    #[test]
    fn z2_with_central_involution() {
        let g = FiniteGroup::cyclic(2);
        let h = group_algebra(&g, FieldSpec::prime(5)).unwrap();
        let tw = Twist::trivial(&h);
        let u = h.basis_element(1);
        let (hj, r) = triangular_r_matrix(&h, &tw, &u).unwrap();
        assert!(verify_quasitriangular(&hj, &r).all_pass());
        // R^2 = 1 (x) 1 and the Drinfeld element is u itself.
        assert_eq!(r.tensor_mul(&hj, &r), TensorElement::identity(&hj));
        assert_eq!(drinfeld_element(&hj, &r), u);
    }

    #[test]
    fn symplectic_triangular_drinfeld_is_u_j() {
        let g = FiniteGroup::elementary_abelian(3, 2);
        let h = group_algebra(&g, FieldSpec::prime(7)).unwrap();
        let all: Vec<usize> = (0..9).collect();
        let basis = abelian_basis(&g, &all).unwrap();
        let w = standard_symplectic_form(&basis.orders).unwrap();
        let tw = crate::groups::symplectic_twist(&h, &basis, &w).unwrap();
        let (hj, r) = triangular_r_matrix(&h, &tw, &h.one()).unwrap();
        assert!(verify_quasitriangular(&hj, &r).all_pass());
        // Cocommutative H: the Drinfeld element equals u_J.
        assert_eq!(drinfeld_element(&hj, &r), tw.u());
    }

    #[test]
    fn r_u_rejects_noncentral() {
        let g = FiniteGroup::symmetric_3();
        let h = group_algebra(&g, FieldSpec::prime(7)).unwrap();
        let transposition = h.basis_element(1);
        assert!(r_u(&h, &transposition).is_err());
    }
}
