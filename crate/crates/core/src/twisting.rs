//! Drinfeld twists: verification, normalization, gauge transformations, the
//! elements Q_J and u_J, the twisted Hopf algebra H^J, and the identity
//! battery that every verified twist must satisfy.

use crate::error::{HopfError, Result};
use crate::hopf::{HopfAlgebra, TensorElement};
use crate::rng::DetRng;
use crate::scalars::{Matrix, Scalar};

/// Outcome of [`verify_twist`]: invertibility, the twist equation, and the
/// normalization, plus the counit scalar c with (eps (x) id)(J) = c 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistReport {
    pub invertible: bool,
    pub twist_eqn_holds: bool,
    pub normalized: bool,
    /// Some(c) when (eps (x) id)(J) and (id (x) eps)(J) are the same scalar
    /// multiple of 1; None when they are not scalar at all.
    pub counit_scalar: Option<Scalar>,
    /// First basis triple where the twist equation fails, if it does.
    pub twist_eqn_witness: Option<(usize, usize, usize)>,
}

impl TwistReport {
    pub fn all_pass(&self) -> bool {
        self.invertible && self.twist_eqn_holds && self.normalized
    }
}

/// A verified, normalized twist with its cached inverse and the derived
/// elements Q_J, Q_J^-1 and u_J = Q_J^-1 S(Q_J).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Twist {
    j: TensorElement,
    j_inv: TensorElement,
    q: Vec<Scalar>,
    q_inv: Vec<Scalar>,
    u: Vec<Scalar>,
    u_inv: Vec<Scalar>,
}

impl Twist {
    /// Verifies `j` and builds the twist, finding the inverse by a linear
    /// solve in H (x) H.
    pub fn verified(h: &HopfAlgebra, j: TensorElement) -> Result<Twist> {
        let j_inv = j.tensor_invert(h)?;
        Self::verified_with_inverse(h, j, j_inv)
    }

    /// Same as [`Twist::verified`] but with a known inverse, checked rather
    /// than recomputed (constructions such as the symplectic twist produce
    /// the inverse for free).
    pub fn verified_with_inverse(
        h: &HopfAlgebra,
        j: TensorElement,
        j_inv: TensorElement,
    ) -> Result<Twist> {
        let report = verify_twist_with_inverse(h, &j, Some(&j_inv));
        if !report.all_pass() {
            return Err(HopfError::HypothesisViolation(format!(
                "not a normalized twist: {report:?}"
            )));
        }
        let (q, q_inv, u, u_inv) = q_elements_raw(h, &j, &j_inv)?;
        Ok(Twist {
            j,
            j_inv,
            q,
            q_inv,
            u,
            u_inv,
        })
    }

    /// The trivial twist 1 (x) 1.
    pub fn trivial(h: &HopfAlgebra) -> Twist {
        let id = TensorElement::identity(h);
        Twist::verified_with_inverse(h, id.clone(), id).expect("1 (x) 1 is a twist")
    }

    pub fn j(&self) -> &TensorElement {
        &self.j
    }

    pub fn j_inv(&self) -> &TensorElement {
        &self.j_inv
    }

    pub fn q(&self) -> &[Scalar] {
        &self.q
    }

    pub fn q_inv(&self) -> &[Scalar] {
        &self.q_inv
    }

    pub fn u(&self) -> &[Scalar] {
        &self.u
    }

    pub fn u_inv(&self) -> &[Scalar] {
        &self.u_inv
    }

    pub fn is_trivial(&self, h: &HopfAlgebra) -> bool {
        self.j == TensorElement::identity(h)
    }
}

/// Checks the twist equation, invertibility and normalization of a candidate
/// twist by exact contraction.
pub fn verify_twist(h: &HopfAlgebra, j: &TensorElement) -> TwistReport {
    verify_twist_with_inverse(h, j, None)
}

/// As [`verify_twist`], with an optionally supplied inverse to check instead
/// of solving for one.
pub fn verify_twist_with_inverse(
    h: &HopfAlgebra,
    j: &TensorElement,
    known_inverse: Option<&TensorElement>,
) -> TwistReport {
    let f = h.field();
    let id2 = TensorElement::identity(h);
    let invertible = match known_inverse {
        Some(ji) => j.tensor_mul(h, ji) == id2 && ji.tensor_mul(h, j) == id2,
        None => j.tensor_invert(h).is_ok(),
    };

    // Normalization and the counit scalar.
    let left = j.eps_id(h);
    let right = j.id_eps(h);
    let counit_scalar = scalar_multiple_of_unit(h, &left).and_then(|c1| {
        scalar_multiple_of_unit(h, &right).and_then(|c2| if c1 == c2 { Some(c1) } else { None })
    });
    let normalized = left == h.one() && right == h.one();

    // (Delta (x) id)(J)(J (x) 1) = (id (x) Delta)(J)(1 (x) J).
    let lhs = h.delta_id(j).mul3(h, &j.extend_right(h));
    let rhs = h.id_delta(j).mul3(h, &j.extend_left(h));
    let mut twist_eqn_holds = true;
    let mut twist_eqn_witness = None;
    'outer: for a in 0..h.dim() {
        for b in 0..h.dim() {
            for c in 0..h.dim() {
                if lhs.get(a, b, c) != rhs.get(a, b, c) {
                    twist_eqn_holds = false;
                    twist_eqn_witness = Some((a, b, c));
                    break 'outer;
                }
            }
        }
    }
    let _ = f;
    TwistReport {
        invertible,
        twist_eqn_holds,
        normalized,
        counit_scalar,
        twist_eqn_witness,
    }
}

fn scalar_multiple_of_unit(h: &HopfAlgebra, v: &[Scalar]) -> Option<Scalar> {
    let f = h.field();
    let unit = h.unit_vec();
    // Find the scalar from the first nonzero coordinate of the unit.
    let lead = unit.iter().position(|c| !f.is_zero(c))?;
    let c = f.div(&v[lead], &unit[lead]).ok()?;
    let scaled: Vec<Scalar> = unit.iter().map(|u| f.mul(u, &c)).collect();
    if scaled == v {
        Some(c)
    } else {
        None
    }
}

/// Rescales a twist-up-to-scalar so that (eps (x) id)(J) = 1.
pub fn normalize_twist(h: &HopfAlgebra, j: &TensorElement) -> Result<TensorElement> {
    let f = h.field();
    let left = j.eps_id(h);
    let c = scalar_multiple_of_unit(h, &left).ok_or(HopfError::ZeroCounitScalar)?;
    if f.is_zero(&c) {
        return Err(HopfError::ZeroCounitScalar);
    }
    let cinv = f.inv(&c)?;
    let mut out = j.clone();
    for i in 0..h.dim() {
        for k in 0..h.dim() {
            let v = f.mul(out.get(i, k), &cinv);
            out.set(i, k, v);
        }
    }
    Ok(out)
}

/// J^x = Delta(x) J (x^-1 (x) x^-1) for invertible x with eps(x) = 1; the
/// result is verified before being returned.
pub fn gauge_transform(h: &HopfAlgebra, twist: &Twist, x: &[Scalar]) -> Result<Twist> {
    let f = h.field();
    if !f.is_one(&h.counit_el(x)) {
        return Err(HopfError::CounitNotOne);
    }
    let x_inv = h.invert_el(x)?;
    let dx = h.comul_el(x);
    let dx_inv = h.comul_el(&x_inv);
    let xx = TensorElement::outer(f, &x_inv, &x_inv);
    let jx = dx.tensor_mul(h, twist.j()).tensor_mul(h, &xx);
    // (J^x)^-1 = (x (x) x) J^-1 Delta(x^-1).
    let xx_pos = TensorElement::outer(f, x, x);
    let jx_inv = xx_pos.tensor_mul(h, twist.j_inv()).tensor_mul(h, &dx_inv);
    Twist::verified_with_inverse(h, jx, jx_inv)
}

/// Q = S(J^(1)) J^(2), its inverse J^-(1) S(J^-(2)), and u = Q^-1 S(Q).
fn q_elements_raw(
    h: &HopfAlgebra,
    j: &TensorElement,
    j_inv: &TensorElement,
) -> Result<(Vec<Scalar>, Vec<Scalar>, Vec<Scalar>, Vec<Scalar>)> {
    let f = h.field();
    let mut q = h.zero_el();
    for (i, jj, v) in j.iter_nonzero(f) {
        let si = h.antipode_el(&h.basis_element(i));
        let term = h.mul_el(&si, &h.basis_element(jj));
        for t in 0..h.dim() {
            q[t] = f.add(&q[t], &f.mul(v, &term[t]));
        }
    }
    let mut q_inv = h.zero_el();
    for (i, jj, v) in j_inv.iter_nonzero(f) {
        let sj = h.antipode_el(&h.basis_element(jj));
        let term = h.mul_el(&h.basis_element(i), &sj);
        for t in 0..h.dim() {
            q_inv[t] = f.add(&q_inv[t], &f.mul(v, &term[t]));
        }
    }
    if h.mul_el(&q, &q_inv) != h.one() || h.mul_el(&q_inv, &q) != h.one() {
        return Err(HopfError::InternalInconsistency(
            "Q_J and its formula inverse do not multiply to 1".into(),
        ));
    }
    let sq = h.antipode_el(&q);
    let u = h.mul_el(&q_inv, &sq);
    // u^-1 = S(Q^-1) Q, using that S is an algebra anti-endomorphism.
    let sq_inv = h.antipode_el(&q_inv);
    let u_inv = h.mul_el(&sq_inv, &q);
    if h.mul_el(&u, &u_inv) != h.one() {
        return Err(HopfError::InternalInconsistency(
            "u_J inverse formula failed".into(),
        ));
    }
    Ok((q, q_inv, u, u_inv))
}

/// Public wrapper returning (Q, Q^-1, u) for a verified twist.
pub fn q_elements(_h: &HopfAlgebra, twist: &Twist) -> (Vec<Scalar>, Vec<Scalar>, Vec<Scalar>) {
    (
        twist.q().to_vec(),
        twist.q_inv().to_vec(),
        twist.u().to_vec(),
    )
}

/// The twisted Hopf algebra H^J: same algebra and counit, comultiplication
/// J^-1 Delta(h) J, antipode Q^-1 S(h) Q. The result must pass the axiom
/// check; a failure means the twist was invalid and is reported as an error.
pub fn twist_hopf(h: &HopfAlgebra, twist: &Twist) -> Result<HopfAlgebra> {
    let f = h.field();
    let n = h.dim();
    let mut comul = crate::hopf::Tensor3::zeros(f, n);
    for i in 0..n {
        let d = h.comul_el(&h.basis_element(i));
        let twisted = twist.j_inv().tensor_mul(h, &d).tensor_mul(h, twist.j());
        for (a, b, v) in twisted.iter_nonzero(f) {
            comul.set(i, a, b, v.clone());
        }
    }
    // S^J = L_{Q^-1} R_Q S as matrices acting on coefficient vectors.
    let lq_inv = h.left_mult_matrix(twist.q_inv());
    let rq = h.right_mult_matrix(twist.q());
    let antipode = lq_inv.mul(f, &rq).mul(f, h.antipode_matrix());
    let out = HopfAlgebra::new(
        f.clone(),
        h.basis_names().to_vec(),
        h.mul_tensor().clone(),
        h.unit_vec().to_vec(),
        comul,
        h.counit_vec().to_vec(),
        antipode,
    )?;
    let report = out.verify();
    if !report.all_pass() {
        return Err(HopfError::AxiomFailure(format!(
            "twisted Hopf algebra fails axioms: {:?}",
            report.failing()
        )));
    }
    Ok(out)
}

/// One named identity with its verdict and the first failing matrix entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub ok: bool,
    pub witness: Option<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }
}

fn tensor_eq_witness(a: &TensorElement, b: &TensorElement) -> Option<(usize, usize)> {
    for i in 0..a.n() {
        for j in 0..a.n() {
            if a.get(i, j) != b.get(i, j) {
                return Some((i, j));
            }
        }
    }
    None
}

fn push_check(checks: &mut Vec<IdentityCheck>, name: &'static str, a: TensorElement, b: TensorElement) {
    let witness = tensor_eq_witness(&a, &b);
    checks.push(IdentityCheck {
        name,
        ok: witness.is_none(),
        witness,
    });
}

/// Verifies the structural identities every twist satisfies: the four
/// consequences of the twist equation relating J, J^-1 and Q_J, the
/// comultiplication formulas for Q_J and u_J, and the formulas for
/// Delta(Q_J^-1) and Delta(S(Q_L)) used by the coseparability pairing
/// (the latter only when a second twist is supplied).
pub fn check_twist_identities(
    h: &HopfAlgebra,
    twist: &Twist,
    second: Option<&Twist>,
) -> IdentityReport {
    let f = h.field();
    let n = h.dim();
    let j = twist.j();
    let j_inv = twist.j_inv();
    let mut checks = Vec::new();

    // (1) S(J^(1)) J^(2)_(1) (x) J^(2)_(2) = (Q (x) 1) J^-1.
    let mut lhs1 = TensorElement::zeros(f, n);
    for (i, jj, v) in j.iter_nonzero(f) {
        let si = h.antipode_el(&h.basis_element(i));
        for (a, b, c) in h.comul_row(jj) {
            let prod = h.mul_el(&si, &h.basis_element(*a));
            let vc = f.mul(v, c);
            for (t, pt) in prod.iter().enumerate() {
                if f.is_zero(pt) {
                    continue;
                }
                let cur = lhs1.get(t, *b).clone();
                lhs1.set(t, *b, f.add(&cur, &f.mul(&vc, pt)));
            }
        }
    }
    let rhs1 = TensorElement::outer(f, twist.q(), &h.one()).tensor_mul(h, j_inv);
    push_check(&mut checks, "S(J1)J2_(1) (x) J2_(2) = (Q (x) 1)J^-1", lhs1, rhs1);

    // (2) S(J^(1)_(1)) (x) S(J^(1)_(2)) J^(2) = (S (x) S)(J^-1)(1 (x) Q).
    let mut lhs2 = TensorElement::zeros(f, n);
    for (i, jj, v) in j.iter_nonzero(f) {
        for (a, b, c) in h.comul_row(i) {
            let sa = h.antipode_el(&h.basis_element(*a));
            let sb = h.antipode_el(&h.basis_element(*b));
            let prod = h.mul_el(&sb, &h.basis_element(jj));
            let vc = f.mul(v, c);
            for (t1, s1) in sa.iter().enumerate() {
                if f.is_zero(s1) {
                    continue;
                }
                let w = f.mul(&vc, s1);
                for (t2, s2) in prod.iter().enumerate() {
                    if f.is_zero(s2) {
                        continue;
                    }
                    let cur = lhs2.get(t1, t2).clone();
                    lhs2.set(t1, t2, f.add(&cur, &f.mul(&w, s2)));
                }
            }
        }
    }
    let rhs2 = j_inv
        .antipode_both(h)
        .tensor_mul(h, &TensorElement::outer(f, &h.one(), twist.q()));
    push_check(&mut checks, "S(J1_(1)) (x) S(J1_(2))J2 = (S(x)S)(J^-1)(1 (x) Q)", lhs2, rhs2);

    // (3) J^-(1)_(1) (x) J^-(1)_(2) S(J^-(2)) = J (1 (x) Q^-1).
    let mut lhs3 = TensorElement::zeros(f, n);
    for (i, jj, v) in j_inv.iter_nonzero(f) {
        let sj = h.antipode_el(&h.basis_element(jj));
        for (a, b, c) in h.comul_row(i) {
            let prod = h.mul_el(&h.basis_element(*b), &sj);
            let vc = f.mul(v, c);
            for (t, pt) in prod.iter().enumerate() {
                if f.is_zero(pt) {
                    continue;
                }
                let cur = lhs3.get(*a, t).clone();
                lhs3.set(*a, t, f.add(&cur, &f.mul(&vc, pt)));
            }
        }
    }
    let rhs3 = j.tensor_mul(h, &TensorElement::outer(f, &h.one(), twist.q_inv()));
    push_check(&mut checks, "J^-1_(1) (x) J^-1_(2)S(J^-2) = J(1 (x) Q^-1)", lhs3, rhs3);

    // (4) J^-(1) S(J^-(2)_(1)) (x) S(J^-(2)_(2)) = (Q^-1 (x) 1)(S (x) S)(J).
    let mut lhs4 = TensorElement::zeros(f, n);
    for (i, jj, v) in j_inv.iter_nonzero(f) {
        for (a, b, c) in h.comul_row(jj) {
            let sa = h.antipode_el(&h.basis_element(*a));
            let sb = h.antipode_el(&h.basis_element(*b));
            let prod = h.mul_el(&h.basis_element(i), &sa);
            let vc = f.mul(v, c);
            for (t1, p1) in prod.iter().enumerate() {
                if f.is_zero(p1) {
                    continue;
                }
                let w = f.mul(&vc, p1);
                for (t2, s2) in sb.iter().enumerate() {
                    if f.is_zero(s2) {
                        continue;
                    }
                    let cur = lhs4.get(t1, t2).clone();
                    lhs4.set(t1, t2, f.add(&cur, &f.mul(&w, s2)));
                }
            }
        }
    }
    let rhs4 = TensorElement::outer(f, twist.q_inv(), &h.one()).tensor_mul(h, &j.antipode_both(h));
    push_check(&mut checks, "J^-1S(J^-2_(1)) (x) S(J^-2_(2)) = (Q^-1 (x) 1)(S(x)S)(J)", lhs4, rhs4);

    // (5) Delta(Q) = (S (x) S)(J21^-1) (Q (x) Q) J^-1.
    let lhs5 = h.comul_el(twist.q());
    let rhs5 = j_inv
        .flip()
        .antipode_both(h)
        .tensor_mul(h, &TensorElement::outer(f, twist.q(), twist.q()))
        .tensor_mul(h, j_inv);
    push_check(&mut checks, "Delta(Q) = (S(x)S)(J21^-1)(Q (x) Q)J^-1", lhs5, rhs5);

    // (6) Delta(u) = J (u (x) u) (S^2 (x) S^2)(J^-1).
    let s2 = h.antipode_matrix().mul(f, h.antipode_matrix());
    let lhs6 = h.comul_el(twist.u());
    let rhs6 = j
        .tensor_mul(h, &TensorElement::outer(f, twist.u(), twist.u()))
        .tensor_mul(h, &j_inv.map_both(h, &s2));
    push_check(&mut checks, "Delta(u) = J(u (x) u)(S^2(x)S^2)(J^-1)", lhs6, rhs6);

    // (7) Delta(W) = J (W (x) W) (S (x) S)(J21) for W = Q^-1.
    let lhs7 = h.comul_el(twist.q_inv());
    let rhs7 = j
        .tensor_mul(h, &TensorElement::outer(f, twist.q_inv(), twist.q_inv()))
        .tensor_mul(h, &j.flip().antipode_both(h));
    push_check(&mut checks, "Delta(W) = J(W (x) W)(S(x)S)(J21), W = Q^-1", lhs7, rhs7);

    // (8) Companion for V = S(Q_L) of a second twist L:
    //     Delta(V) = (S (x) S)(L21^-1) (V (x) V) (S^2 (x) S^2)(L^-1).
    if let Some(l) = second {
        let v = h.antipode_el(l.q());
        let lhs8 = h.comul_el(&v);
        let rhs8 = l
            .j_inv()
            .flip()
            .antipode_both(h)
            .tensor_mul(h, &TensorElement::outer(f, &v, &v))
            .tensor_mul(h, &l.j_inv().map_both(h, &s2));
        push_check(&mut checks, "Delta(V) = (S(x)S)(L21^-1)(V (x) V)(S^2(x)S^2)(L^-1), V = S(Q_L)", lhs8, rhs8);
    }

    IdentityReport { checks }
}

/// Draws invertible elements with eps(x) = 1 for sampled gauge checks.
pub fn sample_gauge_elements(h: &HopfAlgebra, count: usize, seed: u64) -> Vec<Vec<Scalar>> {
    let f = h.field();
    let mut rng = DetRng::new(seed);
    let mut out = Vec::with_capacity(count);
    let mut guard = 0;
    while out.len() < count {
        guard += 1;
        assert!(guard < 10_000, "failed to sample invertible gauge elements");
        let mut x: Vec<Scalar> = (0..h.dim())
            .map(|_| match f.characteristic() {
                0 => f.from_i64(rng.small_int(3)),
                p => f.from_i64(rng.below(p) as i64),
            })
            .collect();
        // Correct the counit to 1: x := x + (1 - eps(x)) 1.
        let eps = h.counit_el(&x);
        let corr = f.sub(&f.one(), &eps);
        for (t, u) in h.unit_vec().iter().enumerate() {
            x[t] = f.add(&x[t], &f.mul(&corr, u));
        }
        if h.invert_el(&x).is_ok() {
            out.push(x);
        }
    }
    out
}

/// Matrix sending h to x h (used by gauge-equivalence basis comparisons).
pub fn mult_by_matrix(h: &HopfAlgebra, x: &[Scalar]) -> Matrix {
    h.left_mult_matrix(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{group_algebra, FiniteGroup};
    use crate::scalars::FieldSpec;
    use crate::zoo;

    #[test]
    fn trivial_twist_verifies_everywhere() {
        let h = group_algebra(&FiniteGroup::cyclic(2), FieldSpec::prime(5)).unwrap();
        let id = TensorElement::identity(&h);
        let report = verify_twist(&h, &id);
        assert!(report.all_pass());
        assert_eq!(report.counit_scalar, Some(h.field().one()));
    }

    #[test]
    fn sweedler_twist_passes_for_small_t() {
        let h = zoo::sweedler_h4(FieldSpec::rationals()).unwrap();
        for t in [0i64, 1, 2] {
            let tw = zoo::sweedler_twist(&h, &h.field().from_i64(t)).unwrap();
            assert!(verify_twist(&h, tw.j()).all_pass(), "t = {t}");
        }
    }

    #[test]
    fn sweedler_twist_inverse_is_degree_one_truncation() {
        // (gx (x) x)^2 = 0, so the inverse flips the sign of the t/2 term.
        let h = zoo::sweedler_h4(FieldSpec::rationals()).unwrap();
        let f = h.field();
        let tw = zoo::sweedler_twist(&h, &f.one()).unwrap();
        let mut expected = TensorElement::identity(&h);
        expected.set(3, 2, f.from_ratio(1, 2));
        assert_eq!(tw.j_inv(), &expected);
    }

    #[test]
    fn q_elements_trivial_and_sweedler() {
        let h = zoo::sweedler_h4(FieldSpec::rationals()).unwrap();
        let trivial = Twist::trivial(&h);
        assert_eq!(trivial.q(), &h.one()[..]);
        assert_eq!(trivial.u(), &h.one()[..]);
        // S(gx) x = x x = 0 makes Q = 1 for every t.
        let tw = zoo::sweedler_twist(&h, &h.field().from_i64(2)).unwrap();
        assert_eq!(tw.q(), &h.one()[..]);
        assert_eq!(tw.u(), &h.one()[..]);
    }

    #[test]
    fn normalize_twist_rescales() {
        let h = group_algebra(&FiniteGroup::cyclic(2), FieldSpec::prime(7)).unwrap();
        let f = h.field();
        let id = TensorElement::identity(&h);
        let mut scaled = id.clone();
        for i in 0..2 {
            for j in 0..2 {
                let v = f.mul(scaled.get(i, j), &f.from_i64(5));
                scaled.set(i, j, v);
            }
        }
        assert_eq!(normalize_twist(&h, &scaled).unwrap(), id);
        let zero = TensorElement::zeros(f, 2);
        assert_eq!(normalize_twist(&h, &zero), Err(HopfError::ZeroCounitScalar));
    }

    #[test]
    fn gauge_by_grouplike_fixes_trivial_twist() {
        let h = group_algebra(&FiniteGroup::cyclic(2), FieldSpec::prime(5)).unwrap();
        let trivial = Twist::trivial(&h);
        let g = h.basis_element(1);
        let moved = gauge_transform(&h, &trivial, &g).unwrap();
        assert_eq!(moved.j(), trivial.j());
        // x = 1 leaves any twist alone.
        let moved2 = gauge_transform(&h, &trivial, &h.one()).unwrap();
        assert_eq!(moved2.j(), trivial.j());
    }

    #[test]
    fn gauge_transforms_stay_twists() {
        let h = zoo::sweedler_h4(FieldSpec::rationals()).unwrap();
        let tw = zoo::sweedler_twist(&h, &h.field().one()).unwrap();
        for x in sample_gauge_elements(&h, 20, 7) {
            let jx = gauge_transform(&h, &tw, &x).unwrap();
            assert!(verify_twist_with_inverse(&h, jx.j(), Some(jx.j_inv())).all_pass());
        }
    }

    #[test]
    fn twist_hopf_trivial_is_identity() {
        let h = group_algebra(&FiniteGroup::cyclic(2), FieldSpec::prime(5)).unwrap();
        let trivial = Twist::trivial(&h);
        let twisted = twist_hopf(&h, &trivial).unwrap();
        assert_eq!(twisted.comul_tensor(), h.comul_tensor());
        assert_eq!(twisted.antipode_matrix(), h.antipode_matrix());
    }

    #[test]
    fn sweedler_twisted_hopf_keeps_antipode() {
        // Q = 1 for the Sweedler twist, so S^J = S.
        let h = zoo::sweedler_h4(FieldSpec::rationals()).unwrap();
        let tw = zoo::sweedler_twist(&h, &h.field().one()).unwrap();
        let twisted = twist_hopf(&h, &tw).unwrap();
        assert!(twisted.verify().all_pass());
        assert_eq!(twisted.antipode_matrix(), h.antipode_matrix());
        // J(1) commutes with the image of Delta here, so H^J = H on the
        // nose; the one-sided coalgebra H^(J) is still deformed.
        assert_eq!(twisted.comul_tensor(), h.comul_tensor());
    }

    #[test]
    fn identity_battery_trivial_twist() {
        let h = group_algebra(&FiniteGroup::cyclic(3), FieldSpec::prime(7)).unwrap();
        let trivial = Twist::trivial(&h);
        let report = check_twist_identities(&h, &trivial, Some(&trivial));
        assert!(report.all_pass(), "{report:?}");
    }

    #[test]
    fn identity_battery_sweedler() {
        let h = zoo::sweedler_h4(FieldSpec::rationals()).unwrap();
        for t in [1i64, 2] {
            let tw = zoo::sweedler_twist(&h, &h.field().from_i64(t)).unwrap();
            let report = check_twist_identities(&h, &tw, Some(&tw));
            assert!(report.all_pass(), "t = {t}: {report:?}");
        }
    }
}
