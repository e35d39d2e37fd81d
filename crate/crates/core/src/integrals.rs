//! Integrals in and on a finite-dimensional Hopf algebra, the unimodularity
//! and (co)semisimplicity tests they induce, Radford-style invariance
//! identities, and the transport of integrals to a twisted Hopf algebra.

use crate::error::{HopfError, Result};
use crate::hopf::HopfAlgebra;
use crate::scalars::{normalize_first_nonzero, Matrix, Scalar};
use crate::twisting::{twist_hopf, Twist};

/// Canonical integrals of H: lambda and rho are functionals on H (left and
/// right integrals on H), Lambda_left and Lambda_right are elements of H.
/// Each space is one-dimensional; representatives are scaled so the first
/// nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralData {
    pub lambda: Vec<Scalar>,
    pub rho: Vec<Scalar>,
    pub lambda_left: Vec<Scalar>,
    pub lambda_right: Vec<Scalar>,
}

/// Kernel of the system defining left integrals on H:
/// h_(1) <lambda, h_(2)> = <lambda, h> 1 for all basis h.
fn left_integral_on_space(h: &HopfAlgebra) -> Vec<Vec<Scalar>> {
    let f = h.field();
    let n = h.dim();
    // Rows indexed by (basis h = i, output coordinate a); unknowns lambda_b.
    let mut m = Matrix::zeros(f, n * n, n);
    for i in 0..n {
        for (a, b, c) in h.comul_row(i) {
            let cur = m[(i * n + a, *b)].clone();
            m[(i * n + a, *b)] = f.add(&cur, c);
        }
        for (a, u) in h.unit_vec().iter().enumerate() {
            if f.is_zero(u) {
                continue;
            }
            let cur = m[(i * n + a, i)].clone();
            m[(i * n + a, i)] = f.sub(&cur, u);
        }
    }
    m.kernel(f)
}

/// Kernel of <rho, h_(1)> h_(2) = <rho, h> 1.
fn right_integral_on_space(h: &HopfAlgebra) -> Vec<Vec<Scalar>> {
    let f = h.field();
    let n = h.dim();
    let mut m = Matrix::zeros(f, n * n, n);
    for i in 0..n {
        for (a, b, c) in h.comul_row(i) {
            let cur = m[(i * n + b, *a)].clone();
            m[(i * n + b, *a)] = f.add(&cur, c);
        }
        for (b, u) in h.unit_vec().iter().enumerate() {
            if f.is_zero(u) {
                continue;
            }
            let cur = m[(i * n + b, i)].clone();
            m[(i * n + b, i)] = f.sub(&cur, u);
        }
    }
    m.kernel(f)
}

/// Kernel of h Lambda = eps(h) Lambda over all basis h (integrals in H).
fn left_integral_in_space(h: &HopfAlgebra) -> Vec<Vec<Scalar>> {
    let f = h.field();
    let n = h.dim();
    let mut m = Matrix::zeros(f, n * n, n);
    for i in 0..n {
        for j in 0..n {
            for (k, c) in h.mul_rows().row(i, j) {
                let cur = m[(i * n + k, j)].clone();
                m[(i * n + k, j)] = f.add(&cur, c);
            }
            let cur = m[(i * n + j, j)].clone();
            m[(i * n + j, j)] = f.sub(&cur, &h.counit_vec()[i]);
        }
    }
    m.kernel(f)
}

fn right_integral_in_space(h: &HopfAlgebra) -> Vec<Vec<Scalar>> {
    let f = h.field();
    let n = h.dim();
    let mut m = Matrix::zeros(f, n * n, n);
    for i in 0..n {
        for j in 0..n {
            for (k, c) in h.mul_rows().row(j, i) {
                let cur = m[(i * n + k, j)].clone();
                m[(i * n + k, j)] = f.add(&cur, c);
            }
            let cur = m[(i * n + j, j)].clone();
            m[(i * n + j, j)] = f.sub(&cur, &h.counit_vec()[i]);
        }
    }
    m.kernel(f)
}

/// Solves all four integral spaces and asserts each is one-dimensional.
pub fn integrals_on(h: &HopfAlgebra) -> Result<IntegralData> {
    let f = h.field();
    let spaces = [
        left_integral_on_space(h),
        right_integral_on_space(h),
        left_integral_in_space(h),
        right_integral_in_space(h),
    ];
    for s in &spaces {
        if s.len() != 1 {
            return Err(HopfError::DegenerateIntegralSpace { dim: s.len() });
        }
    }
    let [lam, rho, ll, lr] = spaces;
    Ok(IntegralData {
        lambda: normalize_first_nonzero(f, &lam[0]),
        rho: normalize_first_nonzero(f, &rho[0]),
        lambda_left: normalize_first_nonzero(f, &ll[0]),
        lambda_right: normalize_first_nonzero(f, &lr[0]),
    })
}

/// Unimodular iff the left and right integrals in H coincide (canonical
/// representatives are equal after scaling).
pub fn is_unimodular(h: &HopfAlgebra, data: &IntegralData) -> bool {
    let _ = h;
    data.lambda_left == data.lambda_right
}

/// Semisimple iff eps(Lambda) != 0.
pub fn is_semisimple_via_integral(h: &HopfAlgebra, data: &IntegralData) -> bool {
    !h.field().is_zero(&h.counit_el(&data.lambda_left))
}

/// Cosemisimple iff lambda(1) != 0 (Maschke for the dual).
pub fn is_cosemisimple_via_integral(h: &HopfAlgebra, data: &IntegralData) -> bool {
    !h.field().is_zero(&h.pair(&data.lambda, &h.one()))
}

/// Verifies lambda(gh) = lambda(h S^2(g)), rho(gh) = rho(S^2(h) g), both
/// invariance identities, and the Frobenius non-degeneracy of
/// (h, g) -> lambda(hg), on all basis pairs. Needs H unimodular.
pub fn nakayama_check(h: &HopfAlgebra, data: &IntegralData) -> Result<bool> {
    if !is_unimodular(h, data) {
        return Err(HopfError::NotUnimodular);
    }
    let f = h.field();
    let n = h.dim();
    let s2 = h.antipode_matrix().mul(f, h.antipode_matrix());
    for g in 0..n {
        let eg = h.basis_element(g);
        let s2g = s2.mul_vec(f, &eg);
        for x in 0..n {
            let ex = h.basis_element(x);
            // lambda(g x) = lambda(x S^2(g))
            let gx = h.mul_el(&eg, &ex);
            let xs2g = h.mul_el(&ex, &s2g);
            if h.pair(&data.lambda, &gx) != h.pair(&data.lambda, &xs2g) {
                return Ok(false);
            }
            // rho(g x) = rho(S^2(x) g)
            let s2x = s2.mul_vec(f, &ex);
            let s2xg = h.mul_el(&s2x, &eg);
            if h.pair(&data.rho, &gx) != h.pair(&data.rho, &s2xg) {
                return Ok(false);
            }
        }
    }
    // Invariance: g_(1) lambda(h g_(2)) = S(h_(1)) lambda(h_(2) g) and
    // rho(g_(1) h) g_(2) = rho(g h_(1)) S(h_(2)).
    for g in 0..n {
        for x in 0..n {
            let eg = h.basis_element(g);
            let ex = h.basis_element(x);
            let mut lhs = h.zero_el();
            for (a, b, c) in h.comul_row(g) {
                let prod = h.mul_el(&ex, &h.basis_element(*b));
                let val = f.mul(c, &h.pair(&data.lambda, &prod));
                for (t, u) in h.basis_element(*a).iter().enumerate() {
                    if !f.is_zero(u) {
                        lhs[t] = f.add(&lhs[t], &f.mul(&val, u));
                    }
                }
            }
            let mut rhs = h.zero_el();
            for (a, b, c) in h.comul_row(x) {
                let sa = h.antipode_el(&h.basis_element(*a));
                let prod = h.mul_el(&h.basis_element(*b), &eg);
                let val = f.mul(c, &h.pair(&data.lambda, &prod));
                for (t, u) in sa.iter().enumerate() {
                    if !f.is_zero(u) {
                        rhs[t] = f.add(&rhs[t], &f.mul(&val, u));
                    }
                }
            }
            if lhs != rhs {
                return Ok(false);
            }
            let mut lhs2 = h.zero_el();
            for (a, b, c) in h.comul_row(g) {
                let prod = h.mul_el(&h.basis_element(*a), &ex);
                let val = f.mul(c, &h.pair(&data.rho, &prod));
                for (t, u) in h.basis_element(*b).iter().enumerate() {
                    if !f.is_zero(u) {
                        lhs2[t] = f.add(&lhs2[t], &f.mul(&val, u));
                    }
                }
            }
            let mut rhs2 = h.zero_el();
            for (a, b, c) in h.comul_row(x) {
                let prod = h.mul_el(&eg, &h.basis_element(*a));
                let sb = h.antipode_el(&h.basis_element(*b));
                let val = f.mul(c, &h.pair(&data.rho, &prod));
                for (t, u) in sb.iter().enumerate() {
                    if !f.is_zero(u) {
                        rhs2[t] = f.add(&rhs2[t], &f.mul(&val, u));
                    }
                }
            }
            if lhs2 != rhs2 {
                return Ok(false);
            }
        }
    }
    // Frobenius form lambda(hg) must be non-degenerate.
    let mut frob = Matrix::zeros(f, n, n);
    for a in 0..n {
        for b in 0..n {
            let prod = h.mul_el(&h.basis_element(a), &h.basis_element(b));
            frob[(a, b)] = h.pair(&data.lambda, &prod);
        }
    }
    Ok(frob.rank(f) == n)
}

/// The integrals of H^J: lambda_J = u_J ⇀ lambda and rho_J = rho ↼ u_J^-1,
/// each checked to satisfy the integral equations of the twisted algebra and
/// to lie in its independently solved one-dimensional integral space.
pub fn twisted_integrals(
    h: &HopfAlgebra,
    twist: &Twist,
    data: &IntegralData,
) -> Result<(Vec<Scalar>, Vec<Scalar>)> {
    if !is_unimodular(h, data) {
        return Err(HopfError::NotUnimodular);
    }
    let f = h.field();
    let lambda_j = h.hit_left(twist.u(), &data.lambda);
    let rho_j = h.hit_right(&data.rho, twist.u_inv());

    // Independent oracle: solve the integral spaces of H^J directly.
    let twisted = twist_hopf(h, twist)?;
    let left_space = left_integral_on_space(&twisted);
    let right_space = right_integral_on_space(&twisted);
    if left_space.len() != 1 || right_space.len() != 1 {
        return Err(HopfError::DegenerateIntegralSpace {
            dim: left_space.len().max(right_space.len()),
        });
    }
    if normalize_first_nonzero(f, &lambda_j) != normalize_first_nonzero(f, &left_space[0]) {
        return Err(HopfError::InternalInconsistency(
            "u_J ⇀ lambda is not a left integral on H^J".into(),
        ));
    }
    if normalize_first_nonzero(f, &rho_j) != normalize_first_nonzero(f, &right_space[0]) {
        return Err(HopfError::InternalInconsistency(
            "rho ↼ u_J^-1 is not a right integral on H^J".into(),
        ));
    }
    Ok((lambda_j, rho_j))
}

/// lambda_J(1) = lambda(1), the exact equality behind cosemisimplicity
/// being stable under twisting.
pub fn twisted_counit_value_matches(
    h: &HopfAlgebra,
    twist: &Twist,
    data: &IntegralData,
) -> Result<bool> {
    let (lambda_j, _) = twisted_integrals(h, twist, data)?;
    Ok(h.pair(&lambda_j, &h.one()) == h.pair(&data.lambda, &h.one()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{function_algebra, group_algebra, FiniteGroup};
    use crate::scalars::FieldSpec;
    use crate::zoo;

    #[test]
    fn group_algebra_integrals() {
        let g = FiniteGroup::elementary_abelian(3, 2);
        let h = group_algebra(&g, FieldSpec::prime(7)).unwrap();
        let data = integrals_on(&h).unwrap();
        // lambda = coefficient of the identity, Lambda = sum of all g.
        let f = h.field();
        let mut delta_e = h.zero_el();
        delta_e[g.identity()] = f.one();
        assert_eq!(data.lambda, delta_e);
        assert_eq!(data.lambda_left, vec![f.one(); 9]);
        assert!(is_unimodular(&h, &data));
        assert!(is_semisimple_via_integral(&h, &data));
        assert!(is_cosemisimple_via_integral(&h, &data));
    }

    #[test]
    fn sweedler_integrals() {
        let h = zoo::sweedler_h4(FieldSpec::rationals()).unwrap();
        let f = h.field();
        let data = integrals_on(&h).unwrap();
        // Lambda_left = x + gx, Lambda_right = x - gx.
        assert_eq!(
            data.lambda_left,
            vec![f.zero(), f.zero(), f.one(), f.one()]
        );
        assert_eq!(
            data.lambda_right,
            vec![f.zero(), f.zero(), f.one(), f.from_i64(-1)]
        );
        assert!(!is_unimodular(&h, &data));
        assert!(!is_semisimple_via_integral(&h, &data));
        assert!(!is_cosemisimple_via_integral(&h, &data));
        // g Lambda = Lambda and x Lambda = 0.
        let g = h.basis_element(1);
        let x = h.basis_element(2);
        assert_eq!(h.mul_el(&g, &data.lambda_left), data.lambda_left);
        assert_eq!(h.mul_el(&x, &data.lambda_left), h.zero_el());
    }

    #[test]
    fn function_algebra_integrals() {
        let g = FiniteGroup::cyclic(3);
        let h = function_algebra(&g, FieldSpec::prime(7)).unwrap();
        let f = h.field();
        let data = integrals_on(&h).unwrap();
        // lambda on k^G evaluates at the sum over the basis; the integral in
        // k^G is delta_e.
        assert_eq!(data.lambda, vec![f.one(); 3]);
        let mut delta_e = h.zero_el();
        delta_e[g.identity()] = f.one();
        assert_eq!(data.lambda_left, delta_e);
        assert!(is_unimodular(&h, &data));
    }

    #[test]
    fn nakayama_identities_hold() {
        let g = FiniteGroup::elementary_abelian(3, 2);
        let h = group_algebra(&g, FieldSpec::prime(7)).unwrap();
        let data = integrals_on(&h).unwrap();
        assert!(nakayama_check(&h, &data).unwrap());

        let s3 = FiniteGroup::symmetric_3();
        let hf = function_algebra(&s3, FieldSpec::prime(7)).unwrap();
        let dataf = integrals_on(&hf).unwrap();
        assert!(nakayama_check(&hf, &dataf).unwrap());
    }

    #[test]
    fn corrupted_antipode_fails_nakayama() {
        use crate::hopf::HopfAlgebra;
        use crate::scalars::Matrix;
        let g = FiniteGroup::cyclic(2);
        let h = group_algebra(&g, FieldSpec::prime(5)).unwrap();
        let f = h.field();
        // Replace S by something wrong but invertible: swap basis order
        // away from the true inverse map by scaling.
        let mut bad = Matrix::identity(f, 2);
        bad[(1, 1)] = f.from_i64(2);
        let broken = HopfAlgebra::new(
            f.clone(),
            h.basis_names().to_vec(),
            h.mul_tensor().clone(),
            h.unit_vec().to_vec(),
            h.comul_tensor().clone(),
            h.counit_vec().to_vec(),
            bad,
        )
        .unwrap();
        let data = integrals_on(&broken).unwrap();
        assert!(!nakayama_check(&broken, &data).unwrap());
    }

    #[test]
    fn twisted_integrals_trivial_twist() {
        let g = FiniteGroup::cyclic(3);
        let h = group_algebra(&g, FieldSpec::prime(7)).unwrap();
        let data = integrals_on(&h).unwrap();
        let trivial = Twist::trivial(&h);
        let (lj, rj) = twisted_integrals(&h, &trivial, &data).unwrap();
        assert_eq!(lj, data.lambda);
        assert_eq!(rj, data.rho);
    }

    #[test]
    fn sweedler_not_unimodular_rejected() {
        let h = zoo::sweedler_h4(FieldSpec::rationals()).unwrap();
        let data = integrals_on(&h).unwrap();
        let tw = zoo::sweedler_twist(&h, &h.field().one()).unwrap();
        assert_eq!(
            twisted_integrals(&h, &tw, &data),
            Err(HopfError::NotUnimodular)
        );
    }

    #[test]
    fn double_twist_integrals_transport() {
        // A genuinely non-grouplike unimodular instance.
        let a = group_algebra(&FiniteGroup::cyclic(2), FieldSpec::prime(5)).unwrap();
        let (h, twist) = zoo::double_twist(&a).unwrap();
        let data = integrals_on(&h).unwrap();
        assert!(is_unimodular(&h, &data));
        let (lj, _) = twisted_integrals(&h, &twist, &data).unwrap();
        assert_eq!(h.pair(&lj, &h.one()), h.pair(&data.lambda, &h.one()));
    }
}
