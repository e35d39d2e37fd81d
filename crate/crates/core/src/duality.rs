//! Duality for non-degenerate twists on group algebras: the Skolem-Noether
//! map pi into the simple algebra R = (H^(J))*, the dual twist
//! c(h (x) g) = pi(h_(1) g_(1)) pibar(g_(2)) pibar(h_(2)) on H*, and the
//! round trip D_{H*} o D_H = id on symplectic instances.
//!
//! pi is found one group element at a time: for group-like g the inner
//! action condition a . g = pi(g)^-1 a pi(g) is linear in pi(g), and by
//! Schur's lemma in the simple algebra R its solution space is exactly one
//! dimensional. No matrix realization of R is needed anywhere.

use crate::cotwist::{self, Algebra, TwistedCoalgebra};
use crate::error::{HopfError, Result};
use crate::groups::{self, FiniteGroup};
use crate::hopf::{HopfAlgebra, TensorElement};
use crate::rng::DetRng;
use crate::scalars::{normalize_first_nonzero, FieldSpec, Matrix, Scalar};
use crate::twisting::{verify_twist, Twist};

/// Reconstructs the group from a Hopf algebra whose basis consists of
/// group-like elements (i.e. a group algebra in its natural basis).
pub fn group_from_hopf(h: &HopfAlgebra) -> Option<FiniteGroup> {
    let f = h.field();
    let n = h.dim();
    for i in 0..n {
        let row = h.comul_row(i);
        if row.len() != 1 || row[0].0 != i || row[0].1 != i || !f.is_one(&row[0].2) {
            return None;
        }
        if !f.is_one(&h.counit_vec()[i]) {
            return None;
        }
    }
    let mut table = vec![vec![0usize; n]; n];
    for i in 0..n {
        for j in 0..n {
            let row = h.mul_rows().row(i, j);
            if row.len() != 1 || !f.is_one(&row[0].1) {
                return None;
            }
            table[i][j] = row[0].0;
        }
    }
    FiniteGroup::from_table(table, Some(h.basis_names().to_vec())).ok()
}

/// The Skolem-Noether map of a non-degenerate twist on a group algebra:
/// pi and its convolution inverse, tabulated on the group basis, with values
/// in the dual algebra R = (H^(J))*.
#[derive(Debug, Clone)]
pub struct SkolemNoetherMap {
    pub r: Algebra,
    /// pi(g) in R-coordinates, indexed by the group basis of H.
    pub pi: Vec<Vec<Scalar>>,
    /// pibar(g) = pi(g)^-1 in R.
    pub pibar: Vec<Vec<Scalar>>,
}

/// Right action of H on R = (H^(J))*: <a . h, c> = <a, h c>.
fn module_action(h: &HopfAlgebra, a: &[Scalar], g: usize) -> Vec<Scalar> {
    let f = h.field();
    let lg = h.left_mult_matrix(&h.basis_element(g));
    // Transpose action on functionals.
    let mut out = vec![f.zero(); h.dim()];
    for c in 0..h.dim() {
        let mut s = f.zero();
        for r in 0..h.dim() {
            let m = &lg[(r, c)];
            if !f.is_zero(m) && !f.is_zero(&a[r]) {
                s = f.add(&s, &f.mul(m, &a[r]));
            }
        }
        out[c] = s;
    }
    out
}

/// Computes pi by solving, per group element, the linear system
/// pi(g) (a . g) = a pi(g) for all basis a of R, normalizing the first
/// nonzero coordinate to 1.
pub fn skolem_noether(h: &HopfAlgebra, twist: &Twist, seed: u64) -> Result<SkolemNoetherMap> {
    let f = h.field();
    let group = group_from_hopf(h).ok_or(HopfError::NotGroupAlgebra)?;
    if !cotwist::is_nondegenerate(h, twist, seed)? {
        return Err(HopfError::DegenerateTwist);
    }
    let trivial = Twist::trivial(h);
    let coalg = TwistedCoalgebra::build_two_sided(h, &trivial, twist)?;
    let r = cotwist::dual_algebra(&coalg)?;
    let n = r.dim;
    let mut pi = Vec::with_capacity(n);
    let mut pibar = Vec::with_capacity(n);
    for g in 0..group.order() {
        // Stack [R_{a.g} - L_a] over all basis a.
        let mut sys = Matrix::zeros(f, n * n, n);
        for a in 0..n {
            let ag = module_action(h, &r.basis_element(a), g);
            let rm = r.right_mult_matrix(&ag);
            let lm = r.left_mult_matrix(&r.basis_element(a));
            let diff = rm.sub(f, &lm);
            for row in 0..n {
                for col in 0..n {
                    let cur = sys[(a * n + row, col)].clone();
                    sys[(a * n + row, col)] = f.add(&cur, &diff[(row, col)]);
                }
            }
        }
        let kernel = sys.kernel(f);
        if kernel.len() != 1 {
            return Err(HopfError::SchurFailure(g));
        }
        let p = normalize_first_nonzero(f, &kernel[0]);
        let p_inv = r.invert_el(&p).map_err(|_| HopfError::SchurFailure(g))?;
        pi.push(p);
        pibar.push(p_inv);
    }
    // pi(e) must be the unit of R.
    if pi[group.identity()] != r.unit {
        return Err(HopfError::InternalInconsistency(
            "pi at the identity is not 1".into(),
        ));
    }
    let map = SkolemNoetherMap { r, pi, pibar };
    verify_inner_action(h, twist, &map)?;
    Ok(map)
}

/// Checks a . h = pibar(h_(1)) a pi(h_(2)) on all basis pairs, and the
/// convolution-inverse law pi(h_(1)) pibar(h_(2)) = eps(h) 1.
fn verify_inner_action(h: &HopfAlgebra, _twist: &Twist, map: &SkolemNoetherMap) -> Result<()> {
    let f = h.field();
    let n = map.r.dim;
    for g in 0..h.dim() {
        // Group algebra: h_(1) = h_(2) = g.
        for a in 0..n {
            let lhs = module_action(h, &map.r.basis_element(a), g);
            let rhs = map
                .r
                .mul_el(&map.pibar[g], &map.r.mul_el(&map.r.basis_element(a), &map.pi[g]));
            if lhs != rhs {
                return Err(HopfError::InternalInconsistency(format!(
                    "inner action fails at basis pair ({a}, {g})"
                )));
            }
        }
        let conv = map.r.mul_el(&map.pi[g], &map.pibar[g]);
        if conv != map.r.unit {
            return Err(HopfError::InternalInconsistency(format!(
                "convolution inverse fails at {g}"
            )));
        }
    }
    let _ = f;
    Ok(())
}

/// The dual twist: scalars c(g (x) h) with
/// pi(gh) pibar(h) pibar(g) = c(g, h) 1_R, assembled into a tensor over H*
/// and verified to be a twist there, with the 2-cocycle identity checked on
/// all basis triples.
#[derive(Debug, Clone)]
pub struct DualTwist {
    /// The dual Hopf algebra H*.
    pub dual: HopfAlgebra,
    /// The twist tensor over H*.
    pub c: TensorElement,
    pub c_inv: TensorElement,
}

pub fn dual_twist(h: &HopfAlgebra, map: &SkolemNoetherMap) -> Result<DualTwist> {
    let f = h.field();
    let group = group_from_hopf(h).ok_or(HopfError::NotGroupAlgebra)?;
    let n = h.dim();
    let mut c = TensorElement::zeros(f, n);
    let mut c_inv = TensorElement::zeros(f, n);
    for g in 0..n {
        for x in 0..n {
            let prod = map
                .r
                .mul_el(&map.pi[group.mul(g, x)], &map.r.mul_el(&map.pibar[x], &map.pibar[g]));
            let scalar = scalar_of(&map.r, &prod).ok_or(HopfError::NotScalar)?;
            if f.is_zero(&scalar) {
                return Err(HopfError::NotScalar);
            }
            c_inv.set(g, x, f.inv(&scalar)?);
            c.set(g, x, scalar);
        }
    }
    // 2-cocycle identity c(fg, h) c(f, g) = c(f, gh) c(g, h).
    for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                let lhs = f.mul(c.get(group.mul(a, b), d), c.get(a, b));
                let rhs = f.mul(c.get(a, group.mul(b, d)), c.get(b, d));
                if lhs != rhs {
                    return Err(HopfError::CocycleFailure(a, b, d));
                }
            }
        }
    }
    let dual = h.dual()?;
    let report = verify_twist(&dual, &c);
    if !report.all_pass() {
        return Err(HopfError::HypothesisViolation(format!(
            "dual twist fails verification: {report:?}"
        )));
    }
    // Gauge-class stability for abelian groups: a gauge change of pi leaves
    // the antisymmetrization of c unchanged.
    if group.is_abelian() {
        let mut rng = DetRng::new(0x9a7f);
        for _ in 0..3 {
            let eta: Vec<Scalar> = (0..n)
                .map(|g| {
                    if g == group.identity() {
                        f.one()
                    } else {
                        loop {
                            let v = match f.characteristic() {
                                0 => f.from_i64(rng.small_int(5)),
                                p => f.from_i64(rng.below(p) as i64),
                            };
                            if !f.is_zero(&v) {
                                break v;
                            }
                        }
                    }
                })
                .collect();
            for g in 0..n {
                for x in 0..n {
                    // c'(g, x) = eta(gx) eta(g)^-1 eta(x)^-1 c(g, x); its
                    // antisymmetrization must match c's.
                    let co = f.mul(
                        &eta[group.mul(g, x)],
                        &f.mul(&f.inv(&eta[g])?, &f.inv(&eta[x])?),
                    );
                    let cp_gx = f.mul(&co, c.get(g, x));
                    let co_rev = f.mul(
                        &eta[group.mul(x, g)],
                        &f.mul(&f.inv(&eta[x])?, &f.inv(&eta[g])?),
                    );
                    let cp_xg = f.mul(&co_rev, c.get(x, g));
                    let b_orig = f.div(c.get(g, x), c.get(x, g))?;
                    let b_new = f.div(&cp_gx, &cp_xg)?;
                    if b_orig != b_new {
                        return Err(HopfError::InternalInconsistency(
                            "dual twist bicharacter moved under gauge change".into(),
                        ));
                    }
                }
            }
        }
    }
    Ok(DualTwist { dual, c, c_inv })
}

fn scalar_of(r: &Algebra, v: &[Scalar]) -> Option<Scalar> {
    let f = &r.field;
    let lead = r.unit.iter().position(|c| !f.is_zero(c))?;
    let s = f.div(&v[lead], &r.unit[lead]).ok()?;
    let scaled: Vec<Scalar> = r.unit.iter().map(|u| f.mul(u, &s)).collect();
    if scaled == v {
        Some(s)
    } else {
        None
    }
}

/// Bicharacter matrix of a 2-cocycle tensor on a group algebra's dual:
/// b[g][h] = c(g, h) / c(h, g).
pub fn cocycle_bicharacter(f: &FieldSpec, c: &TensorElement) -> Result<Matrix> {
    let n = c.n();
    let mut b = Matrix::zeros(f, n, n);
    for g in 0..n {
        for h in 0..n {
            b[(g, h)] = f.div(c.get(g, h), c.get(h, g))?;
        }
    }
    Ok(b)
}

/// Result of the double-dualization round trip on a symplectic instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundTrip {
    /// Bicharacter of D_H(J_omega) equals the inverse form matrix.
    pub dual_is_inverse_form: bool,
    /// Bicharacter of D_{H*}(D_H(J_omega)) equals the original form.
    pub round_trip_identity: bool,
}

/// Runs J_omega on k[(Z_p)^(2m)] through D_H and D_{H*} and compares the
/// bicharacter invariants: the dual twist must carry the inverse form and
/// the double dual the original form.
pub fn roundtrip_dh(
    p: usize,
    omega: &[Vec<i64>],
    field: FieldSpec,
    seed: u64,
) -> Result<RoundTrip> {
    let rank = omega.len();
    let group = FiniteGroup::elementary_abelian(p, rank);
    let h = groups::group_algebra(&group, field.clone())?;
    let f = h.field();
    let all: Vec<usize> = (0..group.order()).collect();
    let basis = groups::abelian_basis(&group, &all).ok_or(HopfError::NotGroupAlgebra)?;
    let tw = groups::symplectic_twist(&h, &basis, omega)?;

    // D_H.
    let sn = skolem_noether(&h, &tw, seed)?;
    let dt = dual_twist(&h, &sn)?;

    // Expected inverse form: invert omega over GF(p).
    let fp = FieldSpec::prime(p as u64);
    let mut omega_p = Matrix::zeros(&fp, rank, rank);
    for i in 0..rank {
        for j in 0..rank {
            omega_p[(i, j)] = fp.from_i64(omega[i][j]);
        }
    }
    let omega_inv = omega_p.inverse(&fp).ok_or(HopfError::DegeneracyDetected)?;
    let omega_inv_int: Vec<Vec<i64>> = (0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| match &omega_inv[(i, j)] {
                    Scalar::Fp(v) => *v as i64,
                    _ => unreachable!(),
                })
                .collect()
        })
        .collect();

    // Bicharacter of the dual twist, on group pairs. The group coordinates
    // of element g are basis.coords[g].
    let zeta = f.primitive_root_of_unity(p as u64)?;
    let b = cocycle_bicharacter(f, &dt.c)?;
    let pairing = |w: &[Vec<i64>], g: usize, x: usize| -> Scalar {
        let cg = &basis.coords[&g];
        let cx = &basis.coords[&x];
        let mut s = 0i64;
        for i in 0..rank {
            for j in 0..rank {
                s += cg[i] as i64 * w[i][j] * cx[j] as i64;
            }
        }
        f.pow(&zeta, s.rem_euclid(p as i64) as u64)
    };
    let mut dual_is_inverse_form = true;
    for g in 0..group.order() {
        for x in 0..group.order() {
            if b[(g, x)] != pairing(&omega_inv_int, g, x) {
                dual_is_inverse_form = false;
            }
        }
    }

    // Transport c to a twist on k[G-hat] (= k[G] for elementary abelian
    // groups) through the Fourier isomorphism Phi: k[G^] -> k^G,
    // chi_a -> sum_v zeta^(a.v) delta_v, and apply D again.
    let n = group.order();
    let mut phi = Matrix::zeros(f, n, n);
    for a in 0..n {
        let ca = &basis.coords[&a];
        for v in 0..n {
            let cv = &basis.coords[&v];
            let dot: i64 = (0..rank).map(|i| ca[i] as i64 * cv[i] as i64).sum();
            phi[(v, a)] = f.pow(&zeta, dot.rem_euclid(p as i64) as u64);
        }
    }
    let phi_inv = phi.inverse(f).ok_or(HopfError::NotInvertible)?;
    let j2 = dt.c.map_both(&h, &phi_inv);
    let j2_inv = dt.c_inv.map_both(&h, &phi_inv);
    let tw2 = Twist::verified_with_inverse(&h, j2, j2_inv)?;
    let sn2 = skolem_noether(&h, &tw2, seed)?;
    let dt2 = dual_twist(&h, &sn2)?;
    let b2 = cocycle_bicharacter(f, &dt2.c)?;
    let mut round_trip_identity = true;
    for g in 0..n {
        for x in 0..n {
            if b2[(g, x)] != pairing(omega, g, x) {
                round_trip_identity = false;
            }
        }
    }
    Ok(RoundTrip {
        dual_is_inverse_form,
        round_trip_identity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{abelian_basis, group_algebra, standard_symplectic_form};

    #[test]
    fn trivial_group_pi_is_unit() {
        let h = group_algebra(&FiniteGroup::trivial(), FieldSpec::prime(5)).unwrap();
        let tw = Twist::trivial(&h);
        let sn = skolem_noether(&h, &tw, 0).unwrap();
        assert_eq!(sn.pi, vec![vec![h.field().one()]]);
        let dt = dual_twist(&h, &sn).unwrap();
        assert!(dt.c.get(0, 0) == &h.field().one());
    }

    #[test]
    fn klein_four_projective_representation() {
        let group = FiniteGroup::elementary_abelian(2, 2);
        let h = group_algebra(&group, FieldSpec::prime(5)).unwrap();
        let all: Vec<usize> = (0..4).collect();
        let basis = abelian_basis(&group, &all).unwrap();
        let w = standard_symplectic_form(&basis.orders).unwrap();
        let tw = crate::groups::symplectic_twist(&h, &basis, &w).unwrap();
        let sn = skolem_noether(&h, &tw, 0).unwrap();
        let r = &sn.r;
        // pi(e) = 1 and the three nontrivial pi(g) pairwise anticommute.
        let f = h.field();
        let minus = f.from_i64(-1);
        for g in 1..4 {
            for x in (g + 1)..4 {
                let gx = r.mul_el(&sn.pi[g], &sn.pi[x]);
                let xg = r.mul_el(&sn.pi[x], &sn.pi[g]);
                let neg_xg: Vec<Scalar> = xg.iter().map(|c| f.mul(c, &minus)).collect();
                assert_eq!(gx, neg_xg, "pi({g}) and pi({x}) must anticommute");
            }
        }
        // Each pi(g)^2 is a scalar (projective involution).
        for g in 1..4 {
            let sq = r.mul_el(&sn.pi[g], &sn.pi[g]);
            assert!(scalar_of(r, &sq).is_some());
        }
    }

    #[test]
    fn z3_squared_scalar_cocycle_all_pairs() {
        let group = FiniteGroup::elementary_abelian(3, 2);
        let h = group_algebra(&group, FieldSpec::prime(7)).unwrap();
        let all: Vec<usize> = (0..9).collect();
        let basis = abelian_basis(&group, &all).unwrap();
        let w = standard_symplectic_form(&basis.orders).unwrap();
        let tw = crate::groups::symplectic_twist(&h, &basis, &w).unwrap();
        let sn = skolem_noether(&h, &tw, 0).unwrap();
        // dual_twist already asserts scalarity on all 81 pairs and the
        // cocycle identity on all 729 triples.
        let dt = dual_twist(&h, &sn).unwrap();
        assert!(verify_twist(&dt.dual, &dt.c).all_pass());
    }

    #[test]
    fn degenerate_twist_rejected() {
        let group = FiniteGroup::elementary_abelian(2, 2);
        let h = group_algebra(&group, FieldSpec::prime(5)).unwrap();
        let tw = Twist::trivial(&h);
        assert_eq!(
            skolem_noether(&h, &tw, 0).unwrap_err(),
            HopfError::DegenerateTwist
        );
    }

    #[test]
    fn non_group_algebra_rejected() {
        let h = crate::zoo::sweedler_h4(FieldSpec::rationals()).unwrap();
        let tw = crate::zoo::sweedler_twist(&h, &h.field().one()).unwrap();
        assert_eq!(
            skolem_noether(&h, &tw, 0).unwrap_err(),
            HopfError::NotGroupAlgebra
        );
    }

    #[test]
    fn roundtrip_z2_squared() {
        let w = vec![vec![0, 1], vec![-1, 0]];
        let rt = roundtrip_dh(2, &w, FieldSpec::prime(5), 0).unwrap();
        assert!(rt.dual_is_inverse_form);
        assert!(rt.round_trip_identity);
    }
}
