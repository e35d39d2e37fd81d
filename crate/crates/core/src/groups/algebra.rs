//! Group algebras k[G] and function algebras k^G as Hopf algebras.

use crate::error::Result;
use crate::hopf::{HopfAlgebra, Tensor3};
use crate::scalars::{FieldSpec, Matrix};

use super::group::FiniteGroup;

/// k[G]: basis indexed by group elements, Delta(g) = g (x) g, S(g) = g^-1.
pub fn group_algebra(g: &FiniteGroup, field: FieldSpec) -> Result<HopfAlgebra> {
    let n = g.order();
    let mut mul = Tensor3::zeros(&field, n);
    for i in 0..n {
        for j in 0..n {
            mul.set(i, j, g.mul(i, j), field.one());
        }
    }
    let mut comul = Tensor3::zeros(&field, n);
    for i in 0..n {
        comul.set(i, i, i, field.one());
    }
    let mut unit = vec![field.zero(); n];
    unit[g.identity()] = field.one();
    let counit = vec![field.one(); n];
    let mut antipode = Matrix::zeros(&field, n, n);
    for i in 0..n {
        antipode[(g.inv(i), i)] = field.one();
    }
    HopfAlgebra::new(
        field,
        g.labels().to_vec(),
        mul,
        unit,
        comul,
        counit,
        antipode,
    )
}

/// k^G, the dual of the group algebra, on the delta-function basis.
pub fn function_algebra(g: &FiniteGroup, field: FieldSpec) -> Result<HopfAlgebra> {
    group_algebra(g, field)?.dual()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::integrals;

    #[test]
    fn group_algebra_z2_gf5_passes() {
        let g = FiniteGroup::cyclic(2);
        let h = group_algebra(&g, FieldSpec::prime(5)).unwrap();
        assert!(h.verify().all_pass());
    }

    #[test]
    fn function_algebra_s3_is_commutative_hopf() {
        let g = FiniteGroup::symmetric_3();
        let h = function_algebra(&g, FieldSpec::prime(7)).unwrap();
        assert!(h.verify().all_pass());
        // Commutative: mul tensor symmetric in the first two slots.
        for i in 0..h.dim() {
            for j in 0..h.dim() {
                for k in 0..h.dim() {
                    assert_eq!(h.mul_tensor().get(i, j, k), h.mul_tensor().get(j, i, k));
                }
            }
        }
    }

    #[test]
    fn modular_group_algebra_not_semisimple() {
        let g = FiniteGroup::cyclic(2);
        let h = group_algebra(&g, FieldSpec::prime(2)).unwrap();
        assert!(h.verify().all_pass());
        let data = integrals::integrals_on(&h).unwrap();
        assert!(integrals::is_unimodular(&h, &data));
        assert!(!integrals::is_semisimple_via_integral(&h, &data));
    }
}
