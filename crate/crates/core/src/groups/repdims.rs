//! Representation dimensions of the dual of a two-sided twisted group
//! algebra, double coset by double coset, compared against the prediction
//! dim(Y) = sqrt(|K_L| |K_J|) / |M_g| * dim(X).

use std::collections::HashMap;

use crate::cotwist::{self, Algebra, TwistedCoalgebra};
use crate::error::{HopfError, Result};
use crate::hopf::{HopfAlgebra, Tensor3};
use crate::scalars::{FieldSpec, Scalar};
use crate::twisting::Twist;

use super::group::{abelian_basis, AbelianBasis, FiniteGroup};
use super::symplectic;

/// A minimal twist datum: an abelian subgroup of central type with an
/// alternating-bicharacter matrix on its basis. An empty subgroup list means
/// the trivial subgroup (trivial twist).
#[derive(Debug, Clone)]
pub struct MinimalTwistSpec {
    pub elements: Vec<usize>,
    pub omega: Vec<Vec<i64>>,
}

impl MinimalTwistSpec {
    pub fn trivial(g: &FiniteGroup) -> Self {
        MinimalTwistSpec {
            elements: vec![g.identity()],
            omega: vec![],
        }
    }

    /// Standard symplectic form on the subgroup's computed basis.
    pub fn standard(g: &FiniteGroup, elements: Vec<usize>) -> Result<Self> {
        let basis = abelian_basis(g, &elements).ok_or_else(|| {
            HopfError::HypothesisViolation("subgroup is not abelian".into())
        })?;
        let omega = symplectic::standard_symplectic_form(&basis.orders)?;
        Ok(MinimalTwistSpec { elements, omega })
    }

    fn basis(&self, g: &FiniteGroup) -> Result<AbelianBasis> {
        abelian_basis(g, &self.elements)
            .ok_or_else(|| HopfError::HypothesisViolation("subgroup is not abelian".into()))
    }
}

/// Per-coset outcome: predicted and decomposed block dimensions of the
/// coset subalgebra of (H^(L,J))*.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetRepDims {
    pub representative: usize,
    pub coset: Vec<usize>,
    pub intersection_order: usize,
    /// None when M_g is non-abelian (no prediction attempted).
    pub predicted: Option<Vec<usize>>,
    pub actual: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepDimsReport {
    pub cosets: Vec<CosetRepDims>,
    /// sum over all cosets of sum dim^2 equals |G|.
    pub dimension_identity: bool,
}

impl RepDimsReport {
    pub fn all_match(&self) -> bool {
        self.dimension_identity
            && self
                .cosets
                .iter()
                .all(|c| c.predicted.as_ref().map_or(true, |p| *p == c.actual))
    }
}

/// The 2-cocycle carried by a minimal twist, tabulated on subgroup element
/// pairs (ambient indices): the dual-twist scalars of the twist on the
/// standalone subgroup algebra.
fn subgroup_cocycle(
    g: &FiniteGroup,
    spec: &MinimalTwistSpec,
    field: &FieldSpec,
    seed: u64,
) -> Result<HashMap<(usize, usize), Scalar>> {
    let (k_group, ambient) = g.subgroup_as_group(&spec.elements)?;
    let hk = super::algebra::group_algebra(&k_group, field.clone())?;
    let pos: HashMap<usize, usize> = ambient.iter().enumerate().map(|(p, &e)| (e, p)).collect();
    let basis_ambient = spec.basis(g)?;
    let basis_local = basis_ambient.relabel(&pos);
    let tw = symplectic::symplectic_twist(&hk, &basis_local, &spec.omega)?;
    let sn = crate::duality::skolem_noether(&hk, &tw, seed)?;
    let dt = crate::duality::dual_twist(&hk, &sn)?;
    let mut out = HashMap::new();
    for (i, &a) in ambient.iter().enumerate() {
        for (j, &b) in ambient.iter().enumerate() {
            out.insert((a, b), dt.c.get(i, j).clone());
        }
    }
    Ok(out)
}

/// Builds H^(L,J) on k[G] for two minimal twists, splits its dual along
/// double cosets, decomposes each coset subalgebra, and compares with the
/// dimension formula where the intersection subgroup is abelian.
pub fn repdims(
    g: &FiniteGroup,
    left: &MinimalTwistSpec,
    right: &MinimalTwistSpec,
    field: FieldSpec,
    seed: u64,
) -> Result<RepDimsReport> {
    let h = super::algebra::group_algebra(g, field.clone())?;
    let f = h.field();
    let basis_l = left.basis(g)?;
    let basis_j = right.basis(g)?;
    let l_twist = symplectic::symplectic_twist(&h, &basis_l, &left.omega)?;
    let j_twist = symplectic::symplectic_twist(&h, &basis_j, &right.omega)?;
    let coalg = TwistedCoalgebra::build_two_sided(&h, &l_twist, &j_twist)?;
    let dual = cotwist::dual_algebra(&coalg)?;

    // Cocycles of the two minimal twists on their subgroups.
    let c_l = subgroup_cocycle(g, left, &field, seed)?;
    let c_j = subgroup_cocycle(g, right, &field, seed)?;

    let cosets = g.double_cosets(&left.elements, &right.elements);
    let mut out = Vec::new();
    let mut total = 0usize;
    for (rep, coset) in cosets {
        // Subalgebra span{delta_x : x in coset}: closure check, then
        // restriction of the structure constants.
        let pos: HashMap<usize, usize> =
            coset.iter().enumerate().map(|(p, &e)| (e, p)).collect();
        let m = coset.len();
        let mut mul = Tensor3::zeros(f, m);
        for (i, &a) in coset.iter().enumerate() {
            for (j, &b) in coset.iter().enumerate() {
                let prod = dual.mul_el(&dual.basis_element(a), &dual.basis_element(b));
                for (t, v) in prod.iter().enumerate() {
                    if f.is_zero(v) {
                        continue;
                    }
                    let Some(&p) = pos.get(&t) else {
                        return Err(HopfError::NotASubalgebra);
                    };
                    mul.set(i, j, p, v.clone());
                }
            }
        }
        let unit: Vec<Scalar> = coset.iter().map(|&e| dual.unit[e].clone()).collect();
        let sub = Algebra::new(f.clone(), mul, unit)?;
        let decomp = cotwist::decompose(&sub, seed)?;
        if decomp.radical_dim != 0 {
            return Err(HopfError::InternalInconsistency(
                "coset subalgebra has nonzero radical".into(),
            ));
        }
        let actual = decomp.block_dims.clone();
        total += actual.iter().map(|d| d * d).sum::<usize>();

        // Prediction via the intersection subgroup M_g = K_L n g K_J g^-1.
        let conj_kj: Vec<usize> = {
            let mut v: Vec<usize> = right
                .elements
                .iter()
                .map(|&x| g.mul(g.mul(rep, x), g.inv(rep)))
                .collect();
            v.sort_unstable();
            v
        };
        let m_g: Vec<usize> = left
            .elements
            .iter()
            .copied()
            .filter(|x| conj_kj.binary_search(x).is_ok())
            .collect();
        let abelian = m_g
            .iter()
            .all(|&a| m_g.iter().all(|&b| g.mul(a, b) == g.mul(b, a)));
        let predicted = if abelian {
            // Pullback cocycle w(m, m') = c_L(m, m') c_J(g^-1 m g, g^-1 m' g)
            // and its alternating form; block data from the form radical.
            let theta = |x: usize| g.mul(g.mul(g.inv(rep), x), rep);
            let b_w = |x: usize, y: usize| -> Result<Scalar> {
                let w_xy = f.mul(&c_l[&(x, y)], &c_j[&(theta(x), theta(y))]);
                let w_yx = f.mul(&c_l[&(y, x)], &c_j[&(theta(y), theta(x))]);
                f.div(&w_xy, &w_yx)
            };
            let mut rad = 0usize;
            for &x in &m_g {
                let mut central = true;
                for &y in &m_g {
                    if !f.is_one(&b_w(x, y)?) {
                        central = false;
                        break;
                    }
                }
                if central {
                    rad += 1;
                }
            }
            let index = m_g.len() / rad;
            let d_x = (1..=index).find(|d| d * d == index);
            match d_x {
                None => None,
                Some(d_x) => {
                    let kl_kj = left.elements.len() * right.elements.len();
                    let sqrt_klkj = (1..=kl_kj).find(|d| d * d == kl_kj);
                    sqrt_klkj.and_then(|s| {
                        let num = s * d_x;
                        if num % m_g.len() != 0 {
                            return None;
                        }
                        Some(vec![num / m_g.len(); rad])
                    })
                }
            }
        } else {
            None
        };
        out.push(CosetRepDims {
            representative: rep,
            coset,
            intersection_order: m_g.len(),
            predicted,
            actual,
        });
    }
    Ok(RepDimsReport {
        cosets: out,
        dimension_identity: total == g.order(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn klein_four_trivial_vs_full() {
        let g = FiniteGroup::elementary_abelian(2, 2);
        let left = MinimalTwistSpec::trivial(&g);
        let all: Vec<usize> = (0..4).collect();
        let right = MinimalTwistSpec::standard(&g, all).unwrap();
        let report = repdims(&g, &left, &right, FieldSpec::prime(5), 0).unwrap();
        assert_eq!(report.cosets.len(), 1);
        assert_eq!(report.cosets[0].actual, vec![2]);
        assert_eq!(report.cosets[0].predicted, Some(vec![2]));
        assert!(report.all_match());
    }

    #[test]
    fn klein_four_full_vs_full() {
        let g = FiniteGroup::elementary_abelian(2, 2);
        let all: Vec<usize> = (0..4).collect();
        let left = MinimalTwistSpec::standard(&g, all.clone()).unwrap();
        let right = MinimalTwistSpec::standard(&g, all).unwrap();
        let report = repdims(&g, &left, &right, FieldSpec::prime(5), 0).unwrap();
        assert_eq!(report.cosets.len(), 1);
        assert_eq!(report.cosets[0].actual, vec![1, 1, 1, 1]);
        assert_eq!(report.cosets[0].predicted, Some(vec![1, 1, 1, 1]));
        assert!(report.all_match());
    }

    #[test]
    fn trivial_vs_trivial_all_singletons() {
        let g = FiniteGroup::elementary_abelian(2, 2);
        let left = MinimalTwistSpec::trivial(&g);
        let right = MinimalTwistSpec::trivial(&g);
        let report = repdims(&g, &left, &right, FieldSpec::prime(5), 0).unwrap();
        assert_eq!(report.cosets.len(), 4);
        for c in &report.cosets {
            assert_eq!(c.actual, vec![1]);
            assert_eq!(c.predicted, Some(vec![1]));
        }
        assert!(report.all_match());
    }
}
