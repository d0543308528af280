//! Finite groups given by multiplication tables.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const DEFAULT_GROUP_BOUND: usize = 24;

/// A finite group on labels `0..order`, with `0` the identity.
#[derive(Debug)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    generators: Vec<usize>,
    element_orders: Vec<usize>,
    labels: Vec<String>,
    subgroups: OnceLock<Vec<Vec<usize>>>,
}

impl Clone for FiniteGroup {
    fn clone(&self) -> Self {
        FiniteGroup {
            order: self.order,
            table: self.table.clone(),
            inverse: self.inverse.clone(),
            generators: self.generators.clone(),
            element_orders: self.element_orders.clone(),
            labels: self.labels.clone(),
            subgroups: OnceLock::new(),
        }
    }
}

impl FiniteGroup {
    /// Validates a multiplication table (`table[a][b] = ab`) and generator list.
    pub fn from_table(table: Vec<Vec<usize>>, generators: Vec<usize>, labels: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        let bad = |msg: String| Err(Error::InvalidGroup(msg));
        if n == 0 {
            return bad("empty table".into());
        }
        for row in &table {
            if row.len() != n || row.iter().any(|&x| x >= n) {
                return bad("table is not square over 0..n".into());
            }
        }
        for a in 0..n {
            if table[0][a] != a || table[a][0] != a {
                return bad("label 0 is not the identity".into());
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return bad(format!("not associative at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        let mut inverse = vec![usize::MAX; n];
        for a in 0..n {
            match (0..n).find(|&b| table[a][b] == 0) {
                Some(b) if table[b][a] == 0 => inverse[a] = b,
                _ => return bad(format!("element {a} has no inverse")),
            }
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        let labels = labels.unwrap_or_else(|| (0..n).map(|i| i.to_string()).collect());
        if labels.len() != n {
            return bad("label count differs from order".into());
        }
        let mut g = FiniteGroup {
            order: n,
            table: flat,
            inverse,
            generators: Vec::new(),
            element_orders: Vec::new(),
            labels,
            subgroups: OnceLock::new(),
        };
        g.element_orders = (0..n).map(|a| g.compute_order(a)).collect();
        if generators.iter().any(|&x| x >= n) || g.generated_by(&generators).len() != n {
            return bad("generators do not generate the group".into());
        }
        g.generators = generators;
        Ok(g)
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn cyclic(m: usize) -> Self {
        let table = (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect();
        let labels = (0..m)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        let gens = if m > 1 { vec![1] } else { vec![] };
        Self::from_table(table, gens, Some(labels)).expect("cyclic group")
    }

    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let (na, nb) = (a.order, b.order);
        let n = na * nb;
        let table = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb))
                    .collect()
            })
            .collect();
        let mut gens: Vec<usize> = a.generators.iter().map(|&g| g * nb).collect();
        gens.extend(b.generators.iter().copied());
        let labels = (0..n)
            .map(|x| format!("({},{})", a.labels[x / nb], b.labels[x % nb]))
            .collect();
        Self::from_table(table, gens, Some(labels)).expect("direct product")
    }

    /// Product of cyclic groups of the given orders.
    pub fn abelian(orders: &[usize]) -> Self {
        orders
            .iter()
            .fold(Self::trivial(), |acc, &m| if acc.order == 1 { Self::cyclic(m) } else { Self::direct_product(&acc, &Self::cyclic(m)) })
    }

    /// The symmetric group on `k` points; `στ` applies `σ` first.
    pub fn symmetric(k: usize) -> Self {
        let mut perms: Vec<Vec<usize>> = vec![(0..k).collect()];
        // lexicographic enumeration starting at the identity
        loop {
            let mut p = perms.last().unwrap().clone();
            let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else { break };
            let j = (i + 1..k).rev().find(|&j| p[j] > p[i]).unwrap();
            p.swap(i, j);
            p[i + 1..].reverse();
            perms.push(p);
        }
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
        let table = perms
            .iter()
            .map(|s| perms.iter().map(|t| index(&s.iter().map(|&x| t[x]).collect())).collect())
            .collect();
        let mut gens = Vec::new();
        if k >= 2 {
            let mut transposition: Vec<usize> = (0..k).collect();
            transposition.swap(0, 1);
            let cycle: Vec<usize> = (0..k).map(|i| (i + 1) % k).collect();
            gens.push(index(&transposition));
            if k > 2 {
                gens.push(index(&cycle));
            }
        }
        let labels = perms.iter().map(|p| format!("{p:?}")).collect();
        Self::from_table(table, gens, Some(labels)).expect("symmetric group")
    }

    /// Dihedral group of order `2m`: elements `r^k s^e` stored as `2k + e`.
    pub fn dihedral(m: usize) -> Self {
        let n = 2 * m;
        let mul = |x: usize, y: usize| {
            let (k1, e1) = (x / 2, x % 2);
            let (k2, e2) = (y / 2, y % 2);
            // s r = r^{-1} s
            let k = if e1 == 0 { (k1 + k2) % m } else { (k1 + m - k2) % m };
            2 * k + (e1 ^ e2)
        };
        let table = (0..n).map(|x| (0..n).map(|y| mul(x, y)).collect()).collect();
        let labels = (0..n).map(|x| format!("r^{}s^{}", x / 2, x % 2)).collect();
        let gens = if m > 1 { vec![2, 1] } else { vec![1] };
        Self::from_table(table, gens, Some(labels)).expect("dihedral group")
    }

    fn compute_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut p = a;
        while p != 0 {
            p = self.mul(p, a);
            k += 1;
        }
        k
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.element_orders[a]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn multiplication_table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    /// Sorted element list of the subgroup generated by `gens`.
    pub fn generated_by(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        (0..self.order).filter(|&i| seen[i]).collect()
    }

    pub fn cyclic_subgroup(&self, g: usize) -> Vec<usize> {
        self.generated_by(&[g])
    }

    /// Every subgroup, as sorted element lists, ordered by (size, elements).
    pub fn subgroups(&self) -> &[Vec<usize>] {
        self.subgroups.get_or_init(|| {
            let mut found: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
            let mut frontier: Vec<Vec<usize>> = Vec::new();
            for g in self.elements() {
                let h = self.cyclic_subgroup(g);
                if found.insert((h.len(), h.clone())) {
                    frontier.push(h);
                }
            }
            // every subgroup arises from a cyclic one by successive joins
            while let Some(h) = frontier.pop() {
                for g in self.elements() {
                    if h.binary_search(&g).is_ok() {
                        continue;
                    }
                    let mut gens = h.clone();
                    gens.push(g);
                    let j = self.generated_by(&gens);
                    if found.insert((j.len(), j.clone())) {
                        frontier.push(j);
                    }
                }
            }
            found.into_iter().map(|(_, h)| h).collect()
        })
    }

    /// Distinct cyclic subgroups, ordered like [`subgroups`](Self::subgroups).
    pub fn cyclic_subgroups(&self) -> Vec<Vec<usize>> {
        let mut set: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
        for g in self.elements() {
            let h = self.cyclic_subgroup(g);
            set.insert((h.len(), h));
        }
        set.into_iter().map(|(_, h)| h).collect()
    }

    pub fn is_subgroup(&self, h: &[usize]) -> bool {
        !h.is_empty()
            && h.contains(&0)
            && h.iter().all(|&a| h.iter().all(|&b| h.contains(&self.mul(a, self.inv(b)))))
    }

    pub fn is_normal(&self, h: &[usize]) -> bool {
        self.is_subgroup(h)
            && self
                .elements()
                .all(|g| h.iter().all(|&x| h.contains(&self.mul(self.mul(self.inv(g), x), g))))
    }

    /// `N ⊴ H` for subgroups `N ⊆ H` of this group.
    pub fn is_normal_in(&self, n: &[usize], h: &[usize]) -> bool {
        n.iter().all(|x| h.contains(x))
            && h.iter().all(|&g| n.iter().all(|&x| n.contains(&self.mul(self.mul(self.inv(g), x), g))))
    }

    /// `g⁻¹ H g`, sorted.
    pub fn conjugate_subgroup(&self, h: &[usize], g: usize) -> Vec<usize> {
        let mut out: Vec<usize> = h.iter().map(|&x| self.mul(self.mul(self.inv(g), x), g)).collect();
        out.sort_unstable();
        out
    }

    /// The subgroup `H` as a group in its own right, with labels `0..|H|`
    /// assigned in increasing order of the parent labels, and the embedding.
    pub fn subgroup(&self, h: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        let mut elems = h.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if !self.is_subgroup(&elems) {
            return Err(Error::InvalidGroup(format!("{elems:?} is not a subgroup")));
        }
        let pos = |x: usize| elems.binary_search(&x).unwrap();
        let table = elems
            .iter()
            .map(|&a| elems.iter().map(|&b| pos(self.mul(a, b))).collect())
            .collect();
        let mut gens = Vec::new();
        let mut span = vec![0];
        for &x in &elems {
            if span.binary_search(&x).is_err() {
                gens.push(x);
                span = self.generated_by(&gens);
            }
        }
        let local_gens = gens.iter().map(|&g| pos(g)).collect();
        let labels = elems.iter().map(|&x| self.labels[x].clone()).collect();
        let group = Self::from_table(table, local_gens, Some(labels))?;
        Ok((group, elems))
    }

    /// `G/N` with cosets numbered by least element, and the projection.
    pub fn quotient(&self, n: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_normal(n) {
            return Err(Error::InvalidGroup(format!("{n:?} is not a normal subgroup")));
        }
        let mut proj = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for g in self.elements() {
            if proj[g] != usize::MAX {
                continue;
            }
            for &x in n {
                proj[self.mul(g, x)] = reps.len();
            }
            reps.push(g);
        }
        let table = reps
            .iter()
            .map(|&a| reps.iter().map(|&b| proj[self.mul(a, b)]).collect())
            .collect();
        let mut gens: Vec<usize> = self.generators.iter().map(|&g| proj[g]).filter(|&c| c != 0).collect();
        gens.sort_unstable();
        gens.dedup();
        let labels = reps.iter().map(|&r| format!("{}N", self.labels[r])).collect();
        let group = Self::from_table(table, gens, Some(labels))?;
        Ok((group, proj))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_groups() {
        assert_eq!(FiniteGroup::cyclic(6).order(), 6);
        assert_eq!(FiniteGroup::abelian(&[2, 2]).order(), 4);
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        let d4 = FiniteGroup::dihedral(4);
        assert_eq!(d4.order(), 8);
        assert!(!d4.is_abelian());
    }

    #[test]
    fn subgroup_lattices() {
        // Z/2 × Z/2 has 5 subgroups, all cyclic but the whole group
        let v = FiniteGroup::abelian(&[2, 2]);
        assert_eq!(v.subgroups().len(), 5);
        assert_eq!(v.cyclic_subgroups().len(), 4);
        // S_3: 1, three of order 2, A_3, S_3
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(s3.subgroups().len(), 6);
        assert_eq!(s3.subgroups().iter().filter(|h| s3.is_normal(h)).count(), 3);
        // (Z/2)^3 has 16 subgroups; it needs three generators
        assert_eq!(FiniteGroup::abelian(&[2, 2, 2]).subgroups().len(), 16);
        // D_4 has 10 subgroups
        assert_eq!(FiniteGroup::dihedral(4).subgroups().len(), 10);
    }

    #[test]
    fn subgroup_and_quotient() {
        let v = FiniteGroup::abelian(&[2, 2]);
        let a = v.cyclic_subgroup(v.generators()[0]);
        let (h, emb) = v.subgroup(&a).unwrap();
        assert_eq!(h.order(), 2);
        assert_eq!(emb, a);
        let (q, proj) = v.quotient(&a).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(proj[v.generators()[0]], 0);
        assert_eq!(proj[v.generators()[1]], 1);
        let s3 = FiniteGroup::symmetric(3);
        let t = s3.cyclic_subgroup(s3.generators()[0]);
        assert!(s3.quotient(&t).is_err());
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]], vec![1], None).is_err());
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 0]], vec![], None).is_err());
    }
}
