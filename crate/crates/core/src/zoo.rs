//! Hard-coded flagship instances: Sweedler's four-dimensional Hopf algebra
//! with its one-parameter twist family, and the dual-bases twist on
//! A*op (x) A whose one-sided coalgebra dualizes to the Heisenberg double.

use crate::cotwist::{self, TwistedCoalgebra};
use crate::error::{HopfError, Result};
use crate::hopf::{HopfAlgebra, Tensor3, TensorElement};
use crate::scalars::{FieldSpec, Matrix, Scalar};
use crate::twisting::Twist;

/// Sweedler's H4 on the basis {1, g, x, gx} with g^2 = 1, x^2 = 0,
/// xg = -gx, Delta(g) = g (x) g, Delta(x) = x (x) 1 + g (x) x,
/// S(g) = g, S(x) = -gx.
pub fn sweedler_h4(field: FieldSpec) -> Result<HopfAlgebra> {
    if field.characteristic() == 2 {
        return Err(HopfError::CharTwo);
    }
    let f = &field;
    let one = f.one();
    let neg = f.from_i64(-1);
    let names = ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect();
    let mut mul = Tensor3::zeros(f, 4);
    // Row by row: products of basis elements, from the relations.
    let entries: [(usize, usize, usize, i64); 16] = [
        (0, 0, 0, 1),
        (0, 1, 1, 1),
        (0, 2, 2, 1),
        (0, 3, 3, 1),
        (1, 0, 1, 1),
        (1, 1, 0, 1),
        (1, 2, 3, 1),
        (1, 3, 2, 1),
        (2, 0, 2, 1),
        (2, 1, 3, -1),
        (2, 2, 0, 0),
        (2, 3, 0, 0),
        (3, 0, 3, 1),
        (3, 1, 2, -1),
        (3, 2, 0, 0),
        (3, 3, 0, 0),
    ];
    for (i, j, k, c) in entries {
        if c != 0 {
            mul.set(i, j, k, f.from_i64(c));
        }
    }
    let mut comul = Tensor3::zeros(f, 4);
    comul.set(0, 0, 0, one.clone());
    comul.set(1, 1, 1, one.clone());
    // Delta(x) = x (x) 1 + g (x) x
    comul.set(2, 2, 0, one.clone());
    comul.set(2, 1, 2, one.clone());
    // Delta(gx) = gx (x) g + 1 (x) gx
    comul.set(3, 3, 1, one.clone());
    comul.set(3, 0, 3, one.clone());
    let unit = vec![one.clone(), f.zero(), f.zero(), f.zero()];
    let counit = vec![one.clone(), one.clone(), f.zero(), f.zero()];
    let mut antipode = Matrix::zeros(f, 4, 4);
    antipode[(0, 0)] = one.clone();
    antipode[(1, 1)] = one.clone();
    antipode[(3, 2)] = neg; // S(x) = -gx
    antipode[(2, 3)] = one; // S(gx) = x
    let h = HopfAlgebra::new(field, names, mul, unit, comul, counit, antipode)?;
    let report = h.verify();
    if !report.all_pass() {
        return Err(HopfError::AxiomFailure(format!("{:?}", report.failing())));
    }
    Ok(h)
}

/// J(t) = 1 (x) 1 - (t/2) gx (x) x, verified.
pub fn sweedler_twist(h: &HopfAlgebra, t: &Scalar) -> Result<Twist> {
    let f = h.field();
    if f.characteristic() == 2 {
        return Err(HopfError::CharTwo);
    }
    let half = f.inv(&f.from_i64(2))?;
    let coeff = f.neg(&f.mul(t, &half));
    let mut j = TensorElement::identity(h);
    j.set(3, 2, coeff.clone());
    // (gx (x) x)^2 = 0, so the inverse is the sign flip.
    let mut j_inv = TensorElement::identity(h);
    j_inv.set(3, 2, f.neg(&coeff));
    Twist::verified_with_inverse(h, j, j_inv)
}

/// The twist J = sum_i (phi_i (x) 1) (x) (eps (x) a_i) on H = A*op (x) A,
/// returned together with H itself.
pub fn double_twist(a: &HopfAlgebra) -> Result<(HopfAlgebra, Twist)> {
    let report = a.verify();
    if !report.all_pass() {
        return Err(HopfError::AxiomFailure(format!("{:?}", report.failing())));
    }
    let dual_op = a.dual()?.opposite()?;
    let h = dual_op.tensor_product(a)?;
    let f = h.field();
    let na = a.dim();
    let idx = |p: usize, q: usize| p * na + q;
    let mut j = TensorElement::zeros(f, h.dim());
    // First leg phi_i (x) 1_A, second leg eps_A (x) a_i; eps_A is the unit
    // of A*op and 1_A the unit of A.
    for i in 0..na {
        for (q, uq) in a.unit_vec().iter().enumerate() {
            if f.is_zero(uq) {
                continue;
            }
            for (r, er) in a.counit_vec().iter().enumerate() {
                if f.is_zero(er) {
                    continue;
                }
                let cur = j.get(idx(i, q), idx(r, i)).clone();
                j.set(idx(i, q), idx(r, i), f.add(&cur, &f.mul(uq, er)));
            }
        }
    }
    let twist = Twist::verified(&h, j)?;
    Ok((h, twist))
}

/// Checks that the dual algebra of H^(1,J) for the double twist is simple
/// with one block of size dim(A), i.e. that J is non-degenerate.
pub fn heisenberg_check(a: &HopfAlgebra, seed: u64) -> Result<Vec<usize>> {
    let (h, twist) = double_twist(a)?;
    let trivial = Twist::trivial(&h);
    let coalg = TwistedCoalgebra::build_two_sided(&h, &trivial, &twist)?;
    let dual = cotwist::dual_algebra(&coalg)?;
    let decomp = cotwist::decompose(&dual, seed)?;
    if decomp.radical_dim != 0 || decomp.block_dims != vec![a.dim()] {
        return Err(HopfError::InternalInconsistency(format!(
            "Heisenberg dual not a single block of size {}: radical {}, blocks {:?}",
            a.dim(),
            decomp.radical_dim,
            decomp.block_dims
        )));
    }
    Ok(decomp.block_dims)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{group_algebra, FiniteGroup};
    use crate::twisting::verify_twist;

    #[test]
    fn sweedler_passes_axioms_over_q() {
        let h = sweedler_h4(FieldSpec::rationals()).unwrap();
        assert!(h.verify().all_pass());
        assert!(h.dual().unwrap().verify().all_pass());
    }

    #[test]
    fn sweedler_rejects_char_two() {
        assert_eq!(sweedler_h4(FieldSpec::prime(2)).unwrap_err(), HopfError::CharTwo);
    }

    #[test]
    fn sweedler_with_identity_antipode_fails_at_x() {
        let h = sweedler_h4(FieldSpec::rationals()).unwrap();
        let broken = HopfAlgebra::new(
            h.field().clone(),
            h.basis_names().to_vec(),
            h.mul_tensor().clone(),
            h.unit_vec().to_vec(),
            h.comul_tensor().clone(),
            h.counit_vec().to_vec(),
            Matrix::identity(h.field(), 4),
        )
        .unwrap();
        let report = broken.verify();
        assert!(!report.all_pass());
        let anti = report
            .checks
            .iter()
            .find(|c| c.axiom == "antipode")
            .unwrap();
        assert!(!anti.ok);
        // First failure happens at the skew-primitive x (index 2).
        assert_eq!(anti.witness, Some(vec![2]));
    }

    #[test]
    fn double_twist_trivial_algebra() {
        let a = group_algebra(&FiniteGroup::trivial(), FieldSpec::prime(5)).unwrap();
        let (h, twist) = double_twist(&a).unwrap();
        assert_eq!(h.dim(), 1);
        assert!(twist.is_trivial(&h));
    }

    #[test]
    fn double_twist_z2_verifies() {
        let a = group_algebra(&FiniteGroup::cyclic(2), FieldSpec::prime(5)).unwrap();
        let (h, twist) = double_twist(&a).unwrap();
        assert_eq!(h.dim(), 4);
        assert!(verify_twist(&h, twist.j()).all_pass());
    }

    #[test]
    fn double_twist_z3_verifies() {
        let a = group_algebra(&FiniteGroup::cyclic(3), FieldSpec::prime(7)).unwrap();
        let (h, twist) = double_twist(&a).unwrap();
        assert_eq!(h.dim(), 9);
        assert!(verify_twist(&h, twist.j()).all_pass());
    }

    #[test]
    fn heisenberg_blocks() {
        let a1 = group_algebra(&FiniteGroup::trivial(), FieldSpec::prime(5)).unwrap();
        assert_eq!(heisenberg_check(&a1, 0).unwrap(), vec![1]);
        let a2 = group_algebra(&FiniteGroup::cyclic(2), FieldSpec::prime(5)).unwrap();
        assert_eq!(heisenberg_check(&a2, 0).unwrap(), vec![2]);
    }
}
