//! Twists on abelian group algebras from alternating bicharacters.
//!
//! For an abelian subgroup K with basis orders (d_1, ..., d_r) and exponent
//! e, an alternating bicharacter on the character group is an integer matrix
//! w mod e with zero diagonal, w_ij = -w_ji, and w_ij a multiple of
//! e / gcd(d_i, d_j). The twist is the inverse Fourier transform of a
//! 2-cocycle beta on the character group whose antisymmetrization is the
//! bicharacter; beta is either psi(w/2) (odd exponent) or a triangular
//! splitting of w (any exponent).

use crate::error::{HopfError, Result};
use crate::hopf::{HopfAlgebra, TensorElement};
use crate::scalars::{Matrix, Scalar};
use crate::twisting::Twist;

use super::group::AbelianBasis;

/// How the 2-cocycle representing a bicharacter class is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Splitting {
    /// beta = psi((1/2) w); needs odd exponent.
    Half,
    /// Upper-triangular bicharacter splitting (works in any exponent).
    Upper,
    /// Lower-triangular splitting; same bicharacter, different tensor.
    Lower,
}

/// Validates an alternating-bicharacter exponent matrix for the given basis
/// orders: square, zero diagonal, antisymmetric mod e, divisibility.
pub fn validate_form(orders: &[usize], w: &[Vec<i64>]) -> Result<()> {
    let r = orders.len();
    let e = orders.iter().copied().fold(1usize, num::integer::lcm) as i64;
    if w.len() != r || w.iter().any(|row| row.len() != r) {
        return Err(HopfError::ShapeError("form matrix shape".into()));
    }
    for i in 0..r {
        if w[i][i].rem_euclid(e) != 0 {
            return Err(HopfError::DegeneracyDetected);
        }
        for j in 0..r {
            if (w[i][j] + w[j][i]).rem_euclid(e) != 0 {
                return Err(HopfError::DegeneracyDetected);
            }
            let g = num::integer::gcd(orders[i], orders[j]) as i64;
            if w[i][j].rem_euclid(e) % (e / g) != 0 {
                return Err(HopfError::DegeneracyDetected);
            }
        }
    }
    Ok(())
}

/// Kernel check: the form is non-degenerate iff no nonzero character tuple
/// pairs trivially with everything.
pub fn form_is_nondegenerate(orders: &[usize], w: &[Vec<i64>]) -> bool {
    let r = orders.len();
    let e = orders.iter().copied().fold(1usize, num::integer::lcm) as i64;
    let total: usize = orders.iter().product::<usize>().max(1);
    'tuples: for flat in 1..total {
        let mut a = vec![0i64; r];
        let mut rem = flat;
        for (i, &d) in orders.iter().enumerate() {
            a[i] = (rem % d) as i64;
            rem /= d;
        }
        for j in 0..r {
            let s: i64 = (0..r).map(|i| a[i] * w[i][j]).sum();
            if s.rem_euclid(e) != 0 {
                continue 'tuples;
            }
        }
        return false;
    }
    true
}

/// The standard symplectic form on generators of equal order: hyperbolic
/// 2x2 blocks down the diagonal. Requires an even number of generators.
pub fn standard_symplectic_form(orders: &[usize]) -> Result<Vec<Vec<i64>>> {
    let r = orders.len();
    if r % 2 != 0 {
        return Err(HopfError::DegeneracyDetected);
    }
    let mut w = vec![vec![0i64; r]; r];
    for p in 0..r / 2 {
        if orders[2 * p] != orders[2 * p + 1] {
            return Err(HopfError::DegeneracyDetected);
        }
        w[2 * p][2 * p + 1] = 1;
        w[2 * p + 1][2 * p] = -1;
    }
    validate_form(orders, &w)?;
    Ok(w)
}

fn cocycle_exponent(
    w: &[Vec<i64>],
    e: i64,
    splitting: Splitting,
    a: &[i64],
    b: &[i64],
) -> Result<i64> {
    let r = w.len();
    match splitting {
        Splitting::Half => {
            if e % 2 == 0 {
                return Err(HopfError::HypothesisViolation(
                    "1/2 splitting needs odd exponent".into(),
                ));
            }
            let inv2 = (0..e).find(|x| (2 * x) % e == 1 % e).expect("odd e");
            let mut s = 0i64;
            for i in 0..r {
                for j in 0..r {
                    s += a[i] * w[i][j].rem_euclid(e) * b[j];
                }
            }
            Ok((s.rem_euclid(e) * inv2).rem_euclid(e))
        }
        Splitting::Upper => {
            let mut s = 0i64;
            for i in 0..r {
                for j in (i + 1)..r {
                    s += a[i] * w[i][j].rem_euclid(e) * b[j];
                }
            }
            Ok(s.rem_euclid(e))
        }
        Splitting::Lower => {
            let mut s = 0i64;
            for i in 0..r {
                for j in 0..i {
                    s += a[i] * w[i][j].rem_euclid(e) * b[j];
                }
            }
            Ok(s.rem_euclid(e))
        }
    }
}

/// The twist tensor and its inverse on k[G], supported on the abelian
/// subgroup described by `basis`.
pub fn symplectic_twist_tensor(
    h: &HopfAlgebra,
    basis: &AbelianBasis,
    w: &[Vec<i64>],
    splitting: Splitting,
) -> Result<(TensorElement, TensorElement)> {
    let f = h.field();
    validate_form(&basis.orders, w)?;
    if !form_is_nondegenerate(&basis.orders, w) {
        return Err(HopfError::DegeneracyDetected);
    }
    let e = basis.exponent() as i64;
    let k_order = basis.elements.len();
    if f.characteristic() != 0 && k_order as u64 % f.characteristic() == 0 {
        return Err(HopfError::HypothesisViolation(
            "characteristic divides the subgroup order".into(),
        ));
    }
    let zeta = f.primitive_root_of_unity(e as u64)?;
    let inv_k = f.inv(&f.from_i64(k_order as i64))?;
    // Character table on the subgroup: chi[a][v] = zeta^(sum a_i v_i e/d_i),
    // rows indexed by character tuples, columns by subgroup positions.
    let r = basis.orders.len();
    let coords_of = |flat: usize| -> Vec<i64> {
        let mut rem = flat;
        let mut v = vec![0i64; r];
        for (i, &d) in basis.orders.iter().enumerate() {
            v[i] = (rem % d) as i64;
            rem /= d;
        }
        v
    };
    let total = k_order;
    let mut zeta_pows: Vec<Scalar> = Vec::with_capacity(e as usize);
    let mut acc = f.one();
    for _ in 0..e {
        zeta_pows.push(acc.clone());
        acc = f.mul(&acc, &zeta);
    }
    let chr = |a: &[i64], v: &[i64]| -> Scalar {
        let mut s = 0i64;
        for i in 0..r {
            s += a[i] * v[i] * (e / basis.orders[i] as i64);
        }
        zeta_pows[s.rem_euclid(e) as usize].clone()
    };
    // Idempotent coefficients: E_a[v] = (1/|K|) chi_a(v)^-1.
    let mut idem = vec![vec![f.zero(); total]; total];
    for af in 0..total {
        let a = coords_of(af);
        for vf in 0..total {
            let v = coords_of(vf);
            let neg_a: Vec<i64> = a.iter().map(|x| -x).collect();
            idem[af][vf] = f.mul(&inv_k, &chr(&neg_a, &v));
        }
    }
    let n = h.dim();
    let mut j = TensorElement::zeros(f, n);
    let mut j_inv = TensorElement::zeros(f, n);
    // J = sum_{a,b} beta(a,b) E_a (x) E_b, expanded onto ambient indices.
    // Accumulate per ambient pair: row[v][w] = sum_a,b beta E_a[v] E_b[w].
    for af in 0..total {
        let a = coords_of(af);
        for bf in 0..total {
            let b = coords_of(bf);
            let exp = cocycle_exponent(w, e, splitting, &a, &b)?;
            let beta = &zeta_pows[exp as usize];
            let beta_inv = &zeta_pows[(-exp).rem_euclid(e) as usize];
            for (vp, ev) in idem[af].iter().enumerate() {
                if f.is_zero(ev) {
                    continue;
                }
                let amb_v = basis.elements[vp];
                let t = f.mul(beta, ev);
                let t_inv = f.mul(beta_inv, ev);
                for (wp, ew) in idem[bf].iter().enumerate() {
                    let amb_w = basis.elements[wp];
                    let cur = j.get(amb_v, amb_w).clone();
                    j.set(amb_v, amb_w, f.add(&cur, &f.mul(&t, ew)));
                    let cur2 = j_inv.get(amb_v, amb_w).clone();
                    j_inv.set(amb_v, amb_w, f.add(&cur2, &f.mul(&t_inv, ew)));
                }
            }
        }
    }
    Ok((j, j_inv))
}

/// Verified symplectic twist on k[G] supported on the subgroup of `basis`.
/// Uses the paper's psi(w/2) values when the exponent is odd and the
/// triangular splitting otherwise.
pub fn symplectic_twist(
    h: &HopfAlgebra,
    basis: &AbelianBasis,
    w: &[Vec<i64>],
) -> Result<Twist> {
    let splitting = if basis.exponent() % 2 == 1 {
        Splitting::Half
    } else {
        Splitting::Upper
    };
    symplectic_twist_with_splitting(h, basis, w, splitting)
}

pub fn symplectic_twist_with_splitting(
    h: &HopfAlgebra,
    basis: &AbelianBasis,
    w: &[Vec<i64>],
    splitting: Splitting,
) -> Result<Twist> {
    let (j, j_inv) = symplectic_twist_tensor(h, basis, w, splitting)?;
    Twist::verified_with_inverse(h, j, j_inv)
}

/// Gauge-invariant of a twist on an abelian group algebra: the matrix of
/// values b(a, b) = (chi_a (x) chi_b)(J) / (chi_b (x) chi_a)(J) over
/// character tuples.
pub fn twist_bicharacter(
    h: &HopfAlgebra,
    basis: &AbelianBasis,
    j: &TensorElement,
) -> Result<Matrix> {
    let f = h.field();
    let e = basis.exponent() as i64;
    let zeta = f.primitive_root_of_unity(e as u64)?;
    let r = basis.orders.len();
    let total = basis.elements.len();
    let coords_of = |flat: usize| -> Vec<i64> {
        let mut rem = flat;
        let mut v = vec![0i64; r];
        for (i, &d) in basis.orders.iter().enumerate() {
            v[i] = (rem % d) as i64;
            rem /= d;
        }
        v
    };
    // Character functionals on the ambient algebra (zero off the subgroup).
    let mut chars: Vec<Vec<Scalar>> = Vec::with_capacity(total);
    for af in 0..total {
        let a = coords_of(af);
        let mut phi = vec![f.zero(); h.dim()];
        for (vp, &amb) in basis.elements.iter().enumerate() {
            let v = coords_of(vp);
            let mut s = 0i64;
            for i in 0..r {
                s += a[i] * v[i] * (e / basis.orders[i] as i64);
            }
            phi[amb] = f.pow(&zeta, s.rem_euclid(e) as u64);
        }
        chars.push(phi);
    }
    let pair2 = |phi: &[Scalar], psi: &[Scalar]| -> Scalar {
        let mut s = f.zero();
        for (v, wi, c) in j.iter_nonzero(f) {
            let t = f.mul(&phi[v], &psi[wi]);
            s = f.add(&s, &f.mul(c, &t));
        }
        s
    };
    let mut out = Matrix::zeros(f, total, total);
    for a in 0..total {
        for b in 0..total {
            let num = pair2(&chars[a], &chars[b]);
            let den = pair2(&chars[b], &chars[a]);
            out[(a, b)] = f.div(&num, &den)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{abelian_basis, group_algebra, FiniteGroup};
    use crate::scalars::FieldSpec;
    use crate::twisting::verify_twist_with_inverse;

    fn setup(p: usize, m: usize, q: u64) -> (FiniteGroup, HopfAlgebra, AbelianBasis) {
        let g = FiniteGroup::elementary_abelian(p, m);
        let h = group_algebra(&g, FieldSpec::prime(q)).unwrap();
        let all: Vec<usize> = (0..g.order()).collect();
        let basis = abelian_basis(&g, &all).unwrap();
        (g, h, basis)
    }

    #[test]
    fn z3_squared_standard_twist_verifies() {
        let (_, h, basis) = setup(3, 2, 7);
        let w = standard_symplectic_form(&basis.orders).unwrap();
        let tw = symplectic_twist(&h, &basis, &w).unwrap();
        assert!(verify_twist_with_inverse(&h, tw.j(), Some(tw.j_inv())).all_pass());
    }

    #[test]
    fn z2_squared_both_splittings_verify_and_differ() {
        let (_, h, basis) = setup(2, 2, 5);
        let w = standard_symplectic_form(&basis.orders).unwrap();
        let up = symplectic_twist_with_splitting(&h, &basis, &w, Splitting::Upper).unwrap();
        let lo = symplectic_twist_with_splitting(&h, &basis, &w, Splitting::Lower).unwrap();
        assert!(verify_twist_with_inverse(&h, up.j(), Some(up.j_inv())).all_pass());
        assert!(verify_twist_with_inverse(&h, lo.j(), Some(lo.j_inv())).all_pass());
        assert_ne!(up.j(), lo.j());
        // Same bicharacter invariant.
        let b1 = twist_bicharacter(&h, &basis, up.j()).unwrap();
        let b2 = twist_bicharacter(&h, &basis, lo.j()).unwrap();
        assert_eq!(b1, b2);
    }

    #[test]
    fn trivial_subgroup_gives_trivial_twist() {
        let g = FiniteGroup::elementary_abelian(2, 2);
        let h = group_algebra(&g, FieldSpec::prime(5)).unwrap();
        let basis = abelian_basis(&g, &[g.identity()]).unwrap();
        let w: Vec<Vec<i64>> = vec![];
        let tw = symplectic_twist(&h, &basis, &w).unwrap();
        assert!(tw.is_trivial(&h));
    }

    #[test]
    fn degenerate_form_rejected() {
        let (_, h, basis) = setup(3, 2, 7);
        let w = vec![vec![0, 0], vec![0, 0]];
        assert_eq!(
            symplectic_twist(&h, &basis, &w).unwrap_err(),
            HopfError::DegeneracyDetected
        );
    }

    #[test]
    fn missing_root_of_unity_detected() {
        // GF(5) has no cube roots of unity.
        let (_, h, basis) = setup(3, 2, 5);
        let w = standard_symplectic_form(&basis.orders).unwrap();
        assert_eq!(
            symplectic_twist(&h, &basis, &w).unwrap_err(),
            HopfError::NoSuchRoot { order: 3 }
        );
    }

    #[test]
    fn scaled_form_changes_bicharacter() {
        let (_, h, basis) = setup(5, 2, 11);
        let w = standard_symplectic_form(&basis.orders).unwrap();
        let w2: Vec<Vec<i64>> = w.iter().map(|r| r.iter().map(|x| 2 * x).collect()).collect();
        let t1 = symplectic_twist(&h, &basis, &w).unwrap();
        let t2 = symplectic_twist(&h, &basis, &w2).unwrap();
        let b1 = twist_bicharacter(&h, &basis, t1.j()).unwrap();
        let b2 = twist_bicharacter(&h, &basis, t2.j()).unwrap();
        assert_ne!(b1, b2);
    }

    #[test]
    fn bicharacter_matches_form() {
        let (_, h, basis) = setup(3, 2, 7);
        let f = h.field();
        let w = standard_symplectic_form(&basis.orders).unwrap();
        let tw = symplectic_twist(&h, &basis, &w).unwrap();
        let b = twist_bicharacter(&h, &basis, tw.j()).unwrap();
        let e = basis.exponent() as i64;
        let zeta = f.primitive_root_of_unity(e as u64).unwrap();
        // b(a, c) should be zeta^(a^T w c).
        let total = basis.elements.len();
        for af in 0..total {
            for cf in 0..total {
                let a = [af % 3, af / 3];
                let c = [cf % 3, cf / 3];
                let mut s = 0i64;
                for i in 0..2 {
                    for j2 in 0..2 {
                        s += (a[i] as i64) * w[i][j2] * (c[j2] as i64);
                    }
                }
                let expected = f.pow(&zeta, s.rem_euclid(e) as u64);
                assert_eq!(b[(af, cf)], expected);
            }
        }
    }
}
