//! Census of twist gauge classes for a group algebra: pairs of a square-order
//! p'-subgroup of central type and a non-degenerate alternating bicharacter,
//! counted modulo inner automorphisms. Abelian subgroups only; non-abelian
//! square-order candidates are surfaced unclassified.

use std::collections::{HashMap, HashSet};

use crate::error::{HopfError, Result};
use crate::scalars::FieldSpec;

use super::group::{abelian_basis, AbelianBasis, FiniteGroup};
use super::symplectic;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusEntry {
    /// Representative subgroup (sorted ambient element indices).
    pub subgroup: Vec<usize>,
    pub order: usize,
    /// Number of bicharacter orbits under the normalizer action.
    pub orbit_count: usize,
    /// One orbit representative per class, as exponent matrices on the
    /// subgroup basis.
    pub orbit_reps: Vec<Vec<Vec<i64>>>,
    /// True when each orbit representative was rebuilt as a twist and
    /// passed the non-degeneracy (simple dual) check.
    pub certified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistCensus {
    pub characteristic: u64,
    /// Total number of gauge classes (sum of orbit counts; the trivial
    /// subgroup contributes the class of the trivial twist).
    pub classes: usize,
    pub entries: Vec<CensusEntry>,
    /// Non-abelian square-order p'-subgroups: candidates this census does
    /// not classify.
    pub unclassified_candidates: Vec<Vec<usize>>,
}

fn is_perfect_square(n: usize) -> bool {
    (1..=n).any(|d| d * d == n) || n == 0
}

/// All valid alternating-bicharacter exponent matrices on a basis with the
/// given orders: strictly upper entries range over multiples of
/// e/gcd(d_i, d_j); the rest is forced by antisymmetry.
fn enumerate_alternating_forms(orders: &[usize]) -> Vec<Vec<Vec<i64>>> {
    let r = orders.len();
    let e = orders.iter().copied().fold(1usize, num::integer::lcm) as i64;
    let mut slots = Vec::new();
    for i in 0..r {
        for j in (i + 1)..r {
            let g = num::integer::gcd(orders[i], orders[j]) as i64;
            let step = e / g;
            slots.push((i, j, step, g));
        }
    }
    let mut out = Vec::new();
    let total: usize = slots.iter().map(|(_, _, _, g)| *g as usize).product::<usize>().max(1);
    for flat in 0..total {
        let mut w = vec![vec![0i64; r]; r];
        let mut rem = flat;
        for (i, j, step, g) in &slots {
            let v = (rem % (*g as usize)) as i64;
            rem /= *g as usize;
            w[*i][*j] = v * step;
            w[*j][*i] = (-(v * step)).rem_euclid(e);
        }
        out.push(w);
    }
    out
}

/// The matrix of the automorphism of K induced by conjugation by n, in
/// basis coordinates: row i holds the coordinates of n g_i n^-1.
fn conjugation_matrix(g: &FiniteGroup, basis: &AbelianBasis, n: usize) -> Vec<Vec<i64>> {
    basis
        .gens
        .iter()
        .map(|&gen| {
            let image = g.conj(n, gen);
            basis.coords[&image].iter().map(|&c| c as i64).collect()
        })
        .collect()
}

/// w' = C w C^T reduced mod e.
fn transform_form(w: &[Vec<i64>], c: &[Vec<i64>], e: i64) -> Vec<Vec<i64>> {
    let r = w.len();
    let mut out = vec![vec![0i64; r]; r];
    for i in 0..r {
        for j in 0..r {
            let mut s = 0i64;
            for k in 0..r {
                for l in 0..r {
                    s += c[i][k] * w[k][l] * c[j][l];
                }
            }
            out[i][j] = s.rem_euclid(e);
        }
    }
    out
}

/// The census of twist gauge classes for k[G] over a field of the given
/// characteristic. Certification rebuilds one twist per orbit over a
/// splitting field of characteristic coprime to the subgroup order and
/// checks non-degeneracy through the block decomposition.
pub fn classify_twists(g: &FiniteGroup, characteristic: u64, seed: u64) -> Result<TwistCensus> {
    let subgroups = g.all_subgroups();
    // Conjugacy classes of subgroups.
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut class_reps: Vec<Vec<usize>> = Vec::new();
    for sub in &subgroups {
        if seen.contains(sub) {
            continue;
        }
        class_reps.push(sub.clone());
        for n in 0..g.order() {
            seen.insert(g.conjugate_subgroup(sub, n));
        }
    }

    let mut entries = Vec::new();
    let mut unclassified = Vec::new();
    let mut classes = 0usize;
    for k in class_reps {
        let order = k.len();
        if !is_perfect_square(order) {
            continue;
        }
        if characteristic != 0 && order as u64 % characteristic == 0 {
            continue; // not a p'-subgroup
        }
        let Some(basis) = abelian_basis(g, &k) else {
            // Non-abelian candidate with square p'-order: surfaced, not
            // classified.
            unclassified.push(k);
            continue;
        };
        let e = basis.exponent() as i64;
        let forms: Vec<Vec<Vec<i64>>> = enumerate_alternating_forms(&basis.orders)
            .into_iter()
            .filter(|w| symplectic::form_is_nondegenerate(&basis.orders, w))
            .collect();
        if forms.is_empty() {
            continue; // not of central type
        }
        // Orbits under the normalizer's conjugation action.
        let normalizer = g.normalizer(&k);
        let actions: Vec<Vec<Vec<i64>>> = normalizer
            .iter()
            .map(|&n| conjugation_matrix(g, &basis, n))
            .collect();
        let index_of: HashMap<Vec<Vec<i64>>, usize> = forms
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        let mut orbit_of = vec![usize::MAX; forms.len()];
        let mut orbit_reps = Vec::new();
        for start in 0..forms.len() {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let orbit_id = orbit_reps.len();
            orbit_reps.push(forms[start].clone());
            let mut stack = vec![start];
            orbit_of[start] = orbit_id;
            while let Some(cur) = stack.pop() {
                for c in &actions {
                    let moved = transform_form(&forms[cur], c, e);
                    let Some(&idx) = index_of.get(&moved) else {
                        return Err(HopfError::InternalInconsistency(
                            "normalizer action left the form set".into(),
                        ));
                    };
                    if orbit_of[idx] == usize::MAX {
                        orbit_of[idx] = orbit_id;
                        stack.push(idx);
                    }
                }
            }
        }
        // Certification over a splitting field of suitable characteristic.
        let cert_field = certification_field(characteristic, e as u64, order as u64)?;
        let mut certified = true;
        let (k_group, ambient) = g.subgroup_as_group(&k)?;
        let pos: HashMap<usize, usize> =
            ambient.iter().enumerate().map(|(p, &el)| (el, p)).collect();
        let local_basis = basis.relabel(&pos);
        let hk = super::algebra::group_algebra(&k_group, cert_field)?;
        for w in &orbit_reps {
            let tw = symplectic::symplectic_twist(&hk, &local_basis, w)?;
            if !crate::cotwist::is_nondegenerate(&hk, &tw, seed)? {
                certified = false;
            }
        }
        classes += orbit_reps.len();
        entries.push(CensusEntry {
            subgroup: k,
            order,
            orbit_count: orbit_reps.len(),
            orbit_reps,
            certified,
        });
    }
    entries.sort_by_key(|e| (e.order, e.subgroup.clone()));
    Ok(TwistCensus {
        characteristic,
        classes,
        entries,
        unclassified_candidates: unclassified,
    })
}

/// A field with enough roots of unity to build the certification twist:
/// characteristic 0 uses Q(zeta_e); characteristic p uses GF(p) when
/// p = 1 mod e (and p coprime to |K|), otherwise the smallest suitable
/// prime stands in for the (unsupported) extension field GF(p^j).
fn certification_field(characteristic: u64, exponent: u64, k_order: u64) -> Result<FieldSpec> {
    if characteristic == 0 {
        return Ok(FieldSpec::cyclotomic(exponent.max(1)));
    }
    if characteristic % exponent.max(1) == 1 % exponent.max(1) && k_order % characteristic != 0 {
        return Ok(FieldSpec::prime(characteristic));
    }
    let mut q = exponent.max(2) + 1;
    loop {
        let is_prime = q >= 2 && (2..q).take_while(|d| d * d <= q).all(|d| q % d != 0);
        if is_prime && q % exponent.max(1) == 1 % exponent.max(1) && k_order % q != 0 {
            return Ok(FieldSpec::prime(q));
        }
        q += 1;
        if q > 100_000 {
            return Err(HopfError::NoSuchRoot { order: exponent });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn klein_four_char_zero_has_two_classes() {
        let g = FiniteGroup::elementary_abelian(2, 2);
        let census = classify_twists(&g, 0, 0).unwrap();
        assert_eq!(census.classes, 2);
        assert!(census.entries.iter().all(|e| e.certified));
        assert!(census.unclassified_candidates.is_empty());
    }

    #[test]
    fn klein_four_char_two_has_one_class() {
        let g = FiniteGroup::elementary_abelian(2, 2);
        let census = classify_twists(&g, 2, 0).unwrap();
        assert_eq!(census.classes, 1);
    }

    #[test]
    fn cyclic_four_has_one_class() {
        let g = FiniteGroup::cyclic(4);
        let census = classify_twists(&g, 0, 0).unwrap();
        assert_eq!(census.classes, 1);
    }

    #[test]
    fn s3_has_one_class() {
        let g = FiniteGroup::symmetric_3();
        let census = classify_twists(&g, 0, 0).unwrap();
        assert_eq!(census.classes, 1);
        assert!(census.unclassified_candidates.is_empty());
    }

    #[test]
    fn census_invariant_under_relabeling() {
        let g = FiniteGroup::elementary_abelian(2, 2);
        let perm = vec![2, 0, 3, 1];
        let g2 = g.relabel(&perm);
        let c1 = classify_twists(&g, 0, 0).unwrap();
        let c2 = classify_twists(&g2, 0, 0).unwrap();
        assert_eq!(c1.classes, c2.classes);
        let profile = |c: &TwistCensus| {
            let mut v: Vec<(usize, usize)> =
                c.entries.iter().map(|e| (e.order, e.orbit_count)).collect();
            v.sort_unstable();
            v
        };
        assert_eq!(profile(&c1), profile(&c2));
    }

    #[test]
    fn z3_squared_char_zero_counts_scaled_forms() {
        // Nondegenerate alternating forms on (Z_3)^2 are w_01 in {1,2}; the
        // group is abelian so the normalizer acts trivially and both
        // classes survive (plus the trivial subgroup's class).
        let g = FiniteGroup::elementary_abelian(3, 2);
        let census = classify_twists(&g, 0, 0).unwrap();
        let top = census.entries.iter().find(|e| e.order == 9).unwrap();
        assert_eq!(top.orbit_count, 2);
        assert!(top.certified);
        assert_eq!(census.classes, 3);
    }

    #[test]
    fn z5_squared_char_eleven_counts_scaled_forms() {
        let g = FiniteGroup::elementary_abelian(5, 2);
        let census = classify_twists(&g, 11, 0).unwrap();
        let top = census.entries.iter().find(|e| e.order == 25).unwrap();
        assert_eq!(top.orbit_count, 4);
        assert!(top.certified);
    }
}
