//! Cayley-table finite groups with subgroup, coset, and abelian-basis
//! services.

use crate::error::{HopfError, Result};

/// A finite group given by its Cayley table. `table[i][j]` is the index of
/// the product of elements i and j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
    labels: Vec<String>,
}

impl FiniteGroup {
    /// Validates associativity, identity and inverses before accepting the
    /// table.
    pub fn from_table(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(HopfError::InvalidCayleyTable("empty table".into()));
        }
        for row in &table {
            if row.len() != n || row.iter().any(|&x| x >= n) {
                return Err(HopfError::InvalidCayleyTable(
                    "row length or entry out of range".into(),
                ));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| HopfError::InvalidCayleyTable("no identity element".into()))?;
        let mut inverses = vec![usize::MAX; n];
        for x in 0..n {
            match (0..n).find(|&y| table[x][y] == identity && table[y][x] == identity) {
                Some(y) => inverses[x] = y,
                None => {
                    return Err(HopfError::InvalidCayleyTable(format!(
                        "element {x} has no inverse"
                    )))
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(HopfError::InvalidCayleyTable(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let labels = labels.unwrap_or_else(|| (0..n).map(|i| format!("g{i}")).collect());
        if labels.len() != n {
            return Err(HopfError::InvalidCayleyTable("label count".into()));
        }
        Ok(FiniteGroup {
            order: n,
            table,
            identity,
            inverses,
            labels,
        })
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        let labels = (0..n).map(|i| format!("c{i}")).collect();
        Self::from_table(table, Some(labels)).expect("cyclic table is valid")
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// Direct product, indexed as i * |B| + j.
    pub fn product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let (na, nb) = (a.order, b.order);
        let n = na * nb;
        let idx = |i: usize, j: usize| i * nb + j;
        let mut table = vec![vec![0usize; n]; n];
        for i1 in 0..na {
            for j1 in 0..nb {
                for i2 in 0..na {
                    for j2 in 0..nb {
                        table[idx(i1, j1)][idx(i2, j2)] =
                            idx(a.table[i1][i2], b.table[j1][j2]);
                    }
                }
            }
        }
        let mut labels = Vec::with_capacity(n);
        for i in 0..na {
            for j in 0..nb {
                labels.push(format!("({},{})", a.labels[i], b.labels[j]));
            }
        }
        Self::from_table(table, Some(labels)).expect("product table is valid")
    }

    /// (Z_p)^k.
    pub fn elementary_abelian(p: usize, k: usize) -> Self {
        let mut g = Self::trivial();
        for _ in 0..k {
            g = Self::product(&g, &Self::cyclic(p));
        }
        g
    }

    /// The symmetric group S3 on the elements {e, (12), (13), (23), (123), (132)}.
    pub fn symmetric_3() -> Self {
        // Permutations of {0,1,2} in one-line notation.
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [1, 0, 2],
            [2, 1, 0],
            [0, 2, 1],
            [1, 2, 0],
            [2, 0, 1],
        ];
        let compose = |p: &[usize; 3], q: &[usize; 3]| -> [usize; 3] {
            [p[q[0]], p[q[1]], p[q[2]]]
        };
        let n = 6;
        let mut table = vec![vec![0usize; n]; n];
        for i in 0..n {
            for j in 0..n {
                let r = compose(&perms[i], &perms[j]);
                table[i][j] = perms.iter().position(|p| *p == r).unwrap();
            }
        }
        let labels = ["e", "(01)", "(02)", "(12)", "(012)", "(021)"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        Self::from_table(table, Some(labels)).expect("S3 table is valid")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn conj(&self, g: usize, x: usize) -> usize {
        // g x g^-1
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn exponent(&self) -> usize {
        (0..self.order)
            .map(|a| self.element_order(a))
            .fold(1, num::integer::lcm)
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&z| (0..self.order).all(|x| self.mul(z, x) == self.mul(x, z)))
            .collect()
    }

    /// Closure of a generating set, as a sorted element list.
    pub fn subgroup_closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut in_set = vec![false; self.order];
        in_set[self.identity] = true;
        let mut frontier = vec![self.identity];
        for &g in gens {
            if !in_set[g] {
                in_set[g] = true;
                frontier.push(g);
            }
        }
        loop {
            let mut added = false;
            let members: Vec<usize> = (0..self.order).filter(|&x| in_set[x]).collect();
            for &a in &members {
                for &b in &members {
                    let c = self.mul(a, b);
                    if !in_set[c] {
                        in_set[c] = true;
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        let _ = frontier;
        (0..self.order).filter(|&x| in_set[x]).collect()
    }

    /// All subgroups, each as a sorted element list, found by closing
    /// found subgroups under one extra generator until a fixpoint.
    pub fn all_subgroups(&self) -> Vec<Vec<usize>> {
        let mut found: Vec<Vec<usize>> = vec![vec![self.identity]];
        let mut queue = found.clone();
        while let Some(h) = queue.pop() {
            for g in 0..self.order {
                if h.binary_search(&g).is_ok() {
                    continue;
                }
                let mut gens = h.clone();
                gens.push(g);
                let closure = self.subgroup_closure(&gens);
                if !found.contains(&closure) {
                    found.push(closure.clone());
                    queue.push(closure);
                }
            }
        }
        found.sort_by_key(|h| (h.len(), h.clone()));
        found
    }

    /// Conjugate subgroup g H g^-1.
    pub fn conjugate_subgroup(&self, h: &[usize], g: usize) -> Vec<usize> {
        let mut out: Vec<usize> = h.iter().map(|&x| self.conj(g, x)).collect();
        out.sort_unstable();
        out
    }

    /// Normalizer of a subgroup.
    pub fn normalizer(&self, h: &[usize]) -> Vec<usize> {
        (0..self.order)
            .filter(|&g| self.conjugate_subgroup(h, g) == h)
            .collect()
    }

    /// Partition of G into (A, B) double cosets; each coset is sorted and
    /// comes with its smallest representative.
    pub fn double_cosets(&self, a: &[usize], b: &[usize]) -> Vec<(usize, Vec<usize>)> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for g in 0..self.order {
            if seen[g] {
                continue;
            }
            let mut coset: Vec<usize> = Vec::new();
            for &x in a {
                for &y in b {
                    let z = self.mul(self.mul(x, g), y);
                    if !seen[z] {
                        seen[z] = true;
                        coset.push(z);
                    }
                }
            }
            coset.sort_unstable();
            out.push((g, coset));
        }
        out
    }

    /// The subgroup on `elements` (sorted, closed) as a standalone group,
    /// with the map from new indices back to ambient indices.
    pub fn subgroup_as_group(&self, elements: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        let pos: std::collections::HashMap<usize, usize> = elements
            .iter()
            .enumerate()
            .map(|(p, &e)| (e, p))
            .collect();
        let m = elements.len();
        let mut table = vec![vec![0usize; m]; m];
        for (i, &a) in elements.iter().enumerate() {
            for (j, &b) in elements.iter().enumerate() {
                let c = self.mul(a, b);
                let Some(&p) = pos.get(&c) else {
                    return Err(HopfError::InvalidCayleyTable(
                        "element set not closed under multiplication".into(),
                    ));
                };
                table[i][j] = p;
            }
        }
        let labels = elements.iter().map(|&e| self.labels[e].clone()).collect();
        Ok((Self::from_table(table, Some(labels))?, elements.to_vec()))
    }

    /// Relabel elements by a permutation: new index perm[i] stands for old i.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.order;
        assert_eq!(perm.len(), n);
        let mut inv_perm = vec![0usize; n];
        for (old, &new) in perm.iter().enumerate() {
            inv_perm[new] = old;
        }
        let mut table = vec![vec![0usize; n]; n];
        for i in 0..n {
            for j in 0..n {
                table[i][j] = perm[self.table[inv_perm[i]][inv_perm[j]]];
            }
        }
        let mut labels = vec![String::new(); n];
        for (old, &new) in perm.iter().enumerate() {
            labels[new] = self.labels[old].clone();
        }
        Self::from_table(table, Some(labels)).expect("relabelled table is valid")
    }
}

/// A basis of a finite abelian group: elements `b_i` of order `d_i` so that
/// every element is uniquely `prod b_i^{v_i}` with `0 <= v_i < d_i`.
#[derive(Debug, Clone)]
pub struct AbelianBasis {
    /// Element indices in the ambient group.
    pub gens: Vec<usize>,
    /// Orders of the generators.
    pub orders: Vec<usize>,
    /// Coordinates of every subgroup element, keyed by ambient index.
    pub coords: std::collections::HashMap<usize, Vec<usize>>,
    /// Subgroup elements in ambient indices, in coordinate order.
    pub elements: Vec<usize>,
}

impl AbelianBasis {
    pub fn exponent(&self) -> usize {
        self.orders.iter().copied().fold(1, num::integer::lcm)
    }

    /// The same basis with ambient indices renamed through `map`.
    pub fn relabel(&self, map: &std::collections::HashMap<usize, usize>) -> AbelianBasis {
        AbelianBasis {
            gens: self.gens.iter().map(|g| map[g]).collect(),
            orders: self.orders.clone(),
            coords: self
                .coords
                .iter()
                .map(|(k, v)| (map[k], v.clone()))
                .collect(),
            elements: self.elements.iter().map(|e| map[e]).collect(),
        }
    }
}

/// Finds a basis of an abelian subgroup (given as a sorted element list) by
/// backtracking over generator choices, preferring large orders.
pub fn abelian_basis(g: &FiniteGroup, subgroup: &[usize]) -> Option<AbelianBasis> {
    // Verify commutativity on the subgroup.
    for &a in subgroup {
        for &b in subgroup {
            if g.mul(a, b) != g.mul(b, a) {
                return None;
            }
        }
    }
    fn spanned(g: &FiniteGroup, gens: &[usize], orders: &[usize]) -> Vec<usize> {
        let mut elems = vec![g.identity()];
        for (&gen, &ord) in gens.iter().zip(orders) {
            let mut next = Vec::new();
            for &e in &elems {
                let mut x = e;
                for _ in 0..ord {
                    next.push(x);
                    x = g.mul(x, gen);
                }
            }
            elems = next;
        }
        elems
    }
    fn search(
        g: &FiniteGroup,
        subgroup: &[usize],
        gens: &mut Vec<usize>,
        orders: &mut Vec<usize>,
    ) -> bool {
        let span = spanned(g, gens, orders);
        let product: usize = orders.iter().product::<usize>().max(1);
        if span.len() != product {
            return false; // not independent
        }
        if product == subgroup.len() {
            return true;
        }
        let mut in_span = vec![false; g.order()];
        for &e in &span {
            in_span[e] = true;
        }
        // Candidates outside the span, largest order first for speed.
        let mut cands: Vec<usize> = subgroup.iter().copied().filter(|&x| !in_span[x]).collect();
        cands.sort_by_key(|&x| std::cmp::Reverse(g.element_order(x)));
        for c in cands {
            gens.push(c);
            orders.push(g.element_order(c));
            if search(g, subgroup, gens, orders) {
                return true;
            }
            gens.pop();
            orders.pop();
        }
        false
    }
    let mut gens = Vec::new();
    let mut orders = Vec::new();
    if !search(g, subgroup, &mut gens, &mut orders) {
        return None;
    }
    // Coordinates by direct enumeration.
    let mut coords = std::collections::HashMap::new();
    let mut elements = Vec::with_capacity(subgroup.len());
    let radix = orders.clone();
    let total: usize = radix.iter().product::<usize>().max(1);
    for flat in 0..total {
        let mut rem = flat;
        let mut v = vec![0usize; radix.len()];
        for (i, &d) in radix.iter().enumerate() {
            v[i] = rem % d;
            rem /= d;
        }
        let mut x = g.identity();
        for (i, &gen) in gens.iter().enumerate() {
            for _ in 0..v[i] {
                x = g.mul(x, gen);
            }
        }
        coords.insert(x, v);
        elements.push(x);
    }
    debug_assert_eq!(coords.len(), subgroup.len());
    Some(AbelianBasis {
        gens,
        orders,
        coords,
        elements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_group_valid() {
        let g = FiniteGroup::cyclic(6);
        assert_eq!(g.order(), 6);
        assert_eq!(g.element_order(1), 6);
        assert!(g.is_abelian());
    }

    #[test]
    fn invalid_table_rejected() {
        // 2x2 table with no identity.
        let t = vec![vec![1, 0], vec![1, 0]];
        assert!(FiniteGroup::from_table(t, None).is_err());
    }

    #[test]
    fn s3_structure() {
        let g = FiniteGroup::symmetric_3();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        let subs = g.all_subgroups();
        // {e}, three <transposition>, <3-cycle>, S3.
        assert_eq!(subs.len(), 6);
        assert_eq!(g.center(), vec![0]);
    }

    #[test]
    fn klein_four_subgroups() {
        let g = FiniteGroup::elementary_abelian(2, 2);
        let subs = g.all_subgroups();
        assert_eq!(subs.len(), 5);
        assert_eq!(g.exponent(), 2);
    }

    #[test]
    fn double_cosets_partition() {
        let g = FiniteGroup::symmetric_3();
        let a = g.subgroup_closure(&[1]); // order 2
        let b = g.subgroup_closure(&[4]); // order 3
        let cosets = g.double_cosets(&a, &b);
        let total: usize = cosets.iter().map(|(_, z)| z.len()).sum();
        assert_eq!(total, 6);
    }

    #[test]
    fn abelian_basis_of_mixed_group() {
        // Z4 x Z2 requires backtracking past non-basis choices.
        let g = FiniteGroup::product(&FiniteGroup::cyclic(4), &FiniteGroup::cyclic(2));
        let all: Vec<usize> = (0..8).collect();
        let basis = abelian_basis(&g, &all).unwrap();
        let mut orders = basis.orders.clone();
        orders.sort_unstable();
        assert_eq!(orders, vec![2, 4]);
        assert_eq!(basis.coords.len(), 8);
    }

    #[test]
    fn abelian_basis_rejects_nonabelian() {
        let g = FiniteGroup::symmetric_3();
        let all: Vec<usize> = (0..6).collect();
        assert!(abelian_basis(&g, &all).is_none());
    }
}
