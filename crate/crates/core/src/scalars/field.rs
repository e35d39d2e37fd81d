//! Exact scalars: prime fields GF(p) and cyclotomic fields Q(zeta_n).
//!
//! Prime-field elements are residues in `[0, p)`. Cyclotomic elements are
//! rational-coefficient polynomials in `zeta_n`, reduced modulo the n-th
//! cyclotomic polynomial, so every element has a unique canonical form and
//! equality is plain structural equality. `n = 1` gives Q itself.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::error::{HopfError, Result};

type Rat = BigRational;

/// Which exact field scalars live in.
#[derive(Debug, Clone)]
pub enum FieldSpec {
    /// GF(p) for a prime p.
    Prime { p: u64 },
    /// Q(zeta_n); `phi` is the degree and `minpoly` the monic n-th
    /// cyclotomic polynomial (length `phi + 1`).
    Cyclotomic {
        n: u64,
        phi: usize,
        minpoly: Vec<Rat>,
    },
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (FieldSpec::Prime { p }, FieldSpec::Prime { p: q }) => p == q,
            (FieldSpec::Cyclotomic { n, .. }, FieldSpec::Cyclotomic { n: m, .. }) => n == m,
            _ => false,
        }
    }
}
impl Eq for FieldSpec {}

/// An element of a [`FieldSpec`], in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Fp(u64),
    /// Coefficients of 1, zeta, ..., zeta^(phi-1).
    Cyc(Vec<Rat>),
}

/// The four arithmetic operations of the public scalar interface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Euler's totient.
fn totient(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// ---------------------------------------------------------------------------
// Integer polynomial helpers for cyclotomic polynomials.
// ---------------------------------------------------------------------------

/// Exact division of integer polynomials, used only where divisibility holds.
fn int_poly_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    let mut quot = vec![BigInt::zero(); rem.len().saturating_sub(dd)];
    for i in (dd..rem.len()).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let c = &rem[i] / &lead;
        quot[i - dd] = c.clone();
        for (j, dc) in den.iter().enumerate() {
            let v = &rem[i - dd + j] - &c * dc;
            rem[i - dd + j] = v;
        }
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    while quot.len() > 1 && quot.last().unwrap().is_zero() {
        quot.pop();
    }
    quot
}

/// The n-th cyclotomic polynomial over the integers.
fn cyclotomic_poly(n: u64) -> Vec<BigInt> {
    // x^n - 1 divided by the product of Phi_d for proper divisors d of n.
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_poly(d);
            num = int_poly_div(&num, &phi_d);
        }
    }
    num
}

// ---------------------------------------------------------------------------
// Rational polynomial helpers (for reduction and inversion mod Phi_n).
// ---------------------------------------------------------------------------

fn rat_poly_trim(p: &mut Vec<Rat>) {
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
}

fn rat_poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            let v = &out[i + j] + ai * bj;
            out[i + j] = v;
        }
    }
    rat_poly_trim(&mut out);
    out
}

/// Remainder of `a` modulo the monic polynomial `m`.
fn rat_poly_rem(a: &[Rat], m: &[Rat]) -> Vec<Rat> {
    let mut rem: Vec<Rat> = a.to_vec();
    rat_poly_trim(&mut rem);
    let dm = m.len() - 1;
    while rem.len() > dm {
        let i = rem.len() - 1;
        let c = rem[i].clone();
        if !c.is_zero() {
            for (j, mc) in m.iter().enumerate() {
                let v = &rem[i - dm + j] - &c * mc;
                rem[i - dm + j] = v;
            }
        }
        rem.pop();
        rat_poly_trim(&mut rem);
    }
    rem
}

/// Quotient and remainder for rational polynomials, `b` nonzero.
fn rat_poly_divmod(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut rem: Vec<Rat> = a.to_vec();
    rat_poly_trim(&mut rem);
    let mut bb = b.to_vec();
    rat_poly_trim(&mut bb);
    let db = bb.len() - 1;
    let lead = bb[db].clone();
    if rem.len() <= db {
        return (vec![Rat::zero()], rem);
    }
    let mut quot = vec![Rat::zero(); rem.len() - db];
    for i in (db..rem.len()).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let c = &rem[i] / &lead;
        quot[i - db] = c.clone();
        for (j, bc) in bb.iter().enumerate() {
            let v = &rem[i - db + j] - &c * bc;
            rem[i - db + j] = v;
        }
    }
    rat_poly_trim(&mut rem);
    rat_poly_trim(&mut quot);
    (quot, rem)
}

/// Extended Euclid: returns (g, u, v) with u*a + v*b = g, g the monic gcd.
fn rat_poly_xgcd(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>, Vec<Rat>) {
    let mut r0: Vec<Rat> = a.to_vec();
    let mut r1: Vec<Rat> = b.to_vec();
    rat_poly_trim(&mut r0);
    rat_poly_trim(&mut r1);
    let mut s0 = vec![Rat::one()];
    let mut s1 = vec![Rat::zero()];
    let mut t0 = vec![Rat::zero()];
    let mut t1 = vec![Rat::one()];
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, r) = rat_poly_divmod(&r0, &r1);
        let new_s = rat_poly_sub(&s0, &rat_poly_mul(&q, &s1));
        let new_t = rat_poly_sub(&t0, &rat_poly_mul(&q, &t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = new_s;
        t0 = t1;
        t1 = new_t;
    }
    // Make the gcd monic.
    let lead = r0.last().unwrap().clone();
    if !lead.is_one() && !lead.is_zero() {
        for c in r0.iter_mut().chain(s0.iter_mut()).chain(t0.iter_mut()) {
            *c = &*c / &lead;
        }
    }
    (r0, s0, t0)
}

fn rat_poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] = c.clone();
    }
    for (i, c) in b.iter().enumerate() {
        let v = &out[i] - c;
        out[i] = v;
    }
    rat_poly_trim(&mut out);
    out
}

// ---------------------------------------------------------------------------

impl FieldSpec {
    /// GF(p). Panics if `p` is not prime.
    pub fn prime(p: u64) -> Self {
        assert!(is_prime(p), "{p} is not prime");
        FieldSpec::Prime { p }
    }

    /// Q(zeta_n). `n = 1` (or 2) is just Q.
    pub fn cyclotomic(n: u64) -> Self {
        assert!(n >= 1);
        let phi = totient(n) as usize;
        let ip = cyclotomic_poly(n);
        let minpoly: Vec<Rat> = ip.into_iter().map(Rat::from_integer).collect();
        debug_assert_eq!(minpoly.len(), phi + 1);
        FieldSpec::Cyclotomic { n, phi, minpoly }
    }

    /// The rationals.
    pub fn rationals() -> Self {
        FieldSpec::cyclotomic(1)
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Prime { p } => *p,
            FieldSpec::Cyclotomic { .. } => 0,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Prime { .. } => Scalar::Fp(0),
            FieldSpec::Cyclotomic { phi, .. } => Scalar::Cyc(vec![Rat::zero(); *phi]),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldSpec::Prime { p } => {
                let r = v.rem_euclid(*p as i64) as u64;
                Scalar::Fp(r)
            }
            FieldSpec::Cyclotomic { phi, .. } => {
                let mut c = vec![Rat::zero(); *phi];
                c[0] = Rat::from_integer(BigInt::from(v));
                Scalar::Cyc(c)
            }
        }
    }

    /// Rational constant num/den (cyclotomic fields only make sense here,
    /// but prime fields accept it when den is invertible).
    pub fn from_ratio(&self, num: i64, den: i64) -> Scalar {
        match self {
            FieldSpec::Prime { .. } => {
                let n = self.from_i64(num);
                let d = self.from_i64(den);
                self.div(&n, &d).expect("denominator not invertible")
            }
            FieldSpec::Cyclotomic { phi, .. } => {
                let mut c = vec![Rat::zero(); *phi];
                c[0] = Rat::new(BigInt::from(num), BigInt::from(den));
                Scalar::Cyc(c)
            }
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Fp(v) => *v == 0,
            Scalar::Cyc(c) => c.iter().all(|x| x.is_zero()),
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        *a == self.one()
    }

    fn check(&self, a: &Scalar) {
        match (self, a) {
            (FieldSpec::Prime { p }, Scalar::Fp(v)) => debug_assert!(v < p),
            (FieldSpec::Cyclotomic { phi, .. }, Scalar::Cyc(c)) => {
                debug_assert_eq!(c.len(), *phi)
            }
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.check(a);
        self.check(b);
        match (self, a, b) {
            (FieldSpec::Prime { p }, Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + y) % p),
            (FieldSpec::Cyclotomic { .. }, Scalar::Cyc(x), Scalar::Cyc(y)) => {
                Scalar::Cyc(x.iter().zip(y).map(|(u, v)| u + v).collect())
            }
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        self.check(a);
        match (self, a) {
            (FieldSpec::Prime { p }, Scalar::Fp(x)) => Scalar::Fp(if *x == 0 { 0 } else { p - x }),
            (FieldSpec::Cyclotomic { .. }, Scalar::Cyc(x)) => {
                Scalar::Cyc(x.iter().map(|c| -c).collect())
            }
            _ => unreachable!(),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.check(a);
        self.check(b);
        match (self, a, b) {
            (FieldSpec::Prime { p }, Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            (FieldSpec::Cyclotomic { phi, minpoly, .. }, Scalar::Cyc(x), Scalar::Cyc(y)) => {
                let prod = rat_poly_mul(x, y);
                let mut red = rat_poly_rem(&prod, minpoly);
                red.resize(*phi, Rat::zero());
                Scalar::Cyc(red)
            }
            _ => unreachable!(),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if self.is_zero(a) {
            return Err(HopfError::DivisionByZero);
        }
        self.check(a);
        match (self, a) {
            (FieldSpec::Prime { p }, Scalar::Fp(x)) => {
                // Fermat: x^(p-2) mod p.
                Ok(Scalar::Fp(pow_mod(*x, p - 2, *p)))
            }
            (FieldSpec::Cyclotomic { phi, minpoly, .. }, Scalar::Cyc(x)) => {
                let (g, u, _) = rat_poly_xgcd(x, minpoly);
                if !(g.len() == 1 && g[0].is_one()) {
                    // Phi_n is irreducible, so this means a = 0 (caught above).
                    return Err(HopfError::DivisionByZero);
                }
                let mut red = rat_poly_rem(&u, minpoly);
                red.resize(*phi, Rat::zero());
                Ok(Scalar::Cyc(red))
            }
            _ => unreachable!(),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Spec-facing entry point for the four operations with field checks.
    pub fn arith(&self, a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar> {
        let fits = |s: &Scalar| -> bool {
            matches!(
                (self, s),
                (FieldSpec::Prime { .. }, Scalar::Fp(_))
                    | (FieldSpec::Cyclotomic { .. }, Scalar::Cyc(_))
            )
        };
        if !fits(a) || !fits(b) {
            return Err(HopfError::FieldMismatch);
        }
        Ok(match op {
            ArithOp::Add => self.add(a, b),
            ArithOp::Sub => self.sub(a, b),
            ArithOp::Mul => self.mul(a, b),
            ArithOp::Div => self.div(a, b)?,
        })
    }

    pub fn pow(&self, a: &Scalar, e: u64) -> Scalar {
        let mut result = self.one();
        let mut base = a.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        result
    }

    /// Multiplicative order of a nonzero scalar, scanning up to `bound`.
    fn order_divides(&self, a: &Scalar, n: u64) -> bool {
        self.is_one(&self.pow(a, n))
    }

    /// A primitive n-th root of unity: smallest residue in GF(p), the
    /// canonical zeta_m^(m/n) in Q(zeta_m).
    pub fn primitive_root_of_unity(&self, n: u64) -> Result<Scalar> {
        assert!(n >= 1);
        if n == 1 {
            return Ok(self.one());
        }
        match self {
            FieldSpec::Prime { p } => {
                if (*p - 1) % n != 0 {
                    return Err(HopfError::NoSuchRoot { order: n });
                }
                let primes = prime_factors(n);
                for cand in 2..*p {
                    let s = Scalar::Fp(cand);
                    if self.order_divides(&s, n)
                        && primes.iter().all(|q| !self.order_divides(&s, n / q))
                    {
                        return Ok(s);
                    }
                }
                Err(HopfError::NoSuchRoot { order: n })
            }
            FieldSpec::Cyclotomic { n: m, phi, .. } => {
                if *m % n != 0 {
                    return Err(HopfError::NoSuchRoot { order: n });
                }
                let e = (*m / n) as usize;
                // zeta_m^e, reduced.
                let mut poly = vec![Rat::zero(); e + 1];
                poly[e] = Rat::one();
                let red = match self {
                    FieldSpec::Cyclotomic { minpoly, .. } => rat_poly_rem(&poly, minpoly),
                    _ => unreachable!(),
                };
                let mut red = red;
                red.resize(*phi, Rat::zero());
                Ok(Scalar::Cyc(red))
            }
        }
    }

    /// All field elements, for exhaustive scans over small prime fields.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self {
            FieldSpec::Prime { p } => Some((0..*p).map(Scalar::Fp).collect()),
            FieldSpec::Cyclotomic { .. } => None,
        }
    }
}

fn pow_mod(b: u64, mut e: u64, m: u64) -> u64 {
    let mut r: u128 = 1;
    let mut bb = b as u128 % m as u128;
    while e > 0 {
        if e & 1 == 1 {
            r = r * bb % m as u128;
        }
        bb = bb * bb % m as u128;
        e >>= 1;
    }
    r as u64
}

impl Scalar {
    /// Rational content when the scalar is a constant (used by root finding).
    pub fn as_rational(&self) -> Option<Rat> {
        match self {
            Scalar::Cyc(c) => {
                if c.iter().skip(1).all(|x| x.is_zero()) {
                    Some(c[0].clone())
                } else {
                    None
                }
            }
            Scalar::Fp(_) => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf7_basics() {
        let f = FieldSpec::prime(7);
        let three = f.from_i64(3);
        assert_eq!(f.div(&three, &three).unwrap(), f.one());
        assert_eq!(f.inv(&three).unwrap(), f.from_i64(5));
        assert_eq!(f.arith(&three, &f.zero(), ArithOp::Div), Err(HopfError::DivisionByZero));
    }

    #[test]
    fn field_mismatch_detected() {
        let f = FieldSpec::prime(7);
        let q = FieldSpec::rationals();
        let a = f.from_i64(3);
        let b = q.from_i64(3);
        assert_eq!(f.arith(&a, &b, ArithOp::Add), Err(HopfError::FieldMismatch));
    }

    #[test]
    fn zeta4_squares_to_minus_one() {
        let f = FieldSpec::cyclotomic(4);
        let z = f.primitive_root_of_unity(4).unwrap();
        assert_eq!(f.mul(&z, &z), f.from_i64(-1));
        assert_eq!(f.pow(&z, 4), f.one());
    }

    #[test]
    fn primitive_roots_in_prime_fields() {
        let f7 = FieldSpec::prime(7);
        // Smallest residue of multiplicative order exactly 3 mod 7 is 2.
        assert_eq!(f7.primitive_root_of_unity(3).unwrap(), Scalar::Fp(2));
        assert_eq!(f7.primitive_root_of_unity(1).unwrap(), Scalar::Fp(1));
        let f5 = FieldSpec::prime(5);
        assert_eq!(
            f5.primitive_root_of_unity(3),
            Err(HopfError::NoSuchRoot { order: 3 })
        );
    }

    #[test]
    fn primitive_root_has_exact_order() {
        for (p, n) in [(7u64, 3u64), (11, 5), (13, 4), (5, 2), (31, 6)] {
            let f = FieldSpec::prime(p);
            let z = f.primitive_root_of_unity(n).unwrap();
            assert!(f.is_one(&f.pow(&z, n)));
            for d in 1..n {
                if n % d == 0 {
                    assert!(!f.is_one(&f.pow(&z, d)), "order divides {d} for p={p} n={n}");
                }
            }
        }
    }

    #[test]
    fn every_nonzero_element_inverts_exhaustively() {
        for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
            let f = FieldSpec::prime(p);
            for a in f.elements().unwrap() {
                if f.is_zero(&a) {
                    continue;
                }
                let inv = f.inv(&a).unwrap();
                assert!(f.is_one(&f.mul(&a, &inv)));
            }
        }
    }

    #[test]
    fn cyclotomic_inverse_round_trips() {
        let f = FieldSpec::cyclotomic(5);
        let z = f.primitive_root_of_unity(5).unwrap();
        // a = 1 + 2*zeta
        let a = f.add(&f.one(), &f.mul(&f.from_i64(2), &z));
        let inv = f.inv(&a).unwrap();
        assert!(f.is_one(&f.mul(&a, &inv)));
    }

    #[test]
    fn rationals_are_cyclotomic_one() {
        let q = FieldSpec::rationals();
        let half = q.from_ratio(1, 2);
        assert_eq!(q.add(&half, &half), q.one());
    }
}
