//! Additive group structure of a finite ring and additive linear systems over it.

use num_bigint::BigInt;

use super::{Elem, FiniteCommRing, Repr};
use crate::lattice::smith::{integer_kernel, IntMatrix};

/// A polycyclic generating sequence of `(S, +)`.
///
/// Every element has unique coordinates `c` with `0 ≤ c_j < orders[j]`
/// and `a = Σ c_j · generators[j]`. `relations[j]` is the integer vector
/// `orders[j]·e_j − coords(orders[j]·generators[j])`; together they generate
/// all integer relations among the generators.
#[derive(Clone, Debug)]
pub struct AdditiveBasis {
    pub generators: Vec<Elem>,
    pub orders: Vec<u32>,
    pub relations: Vec<Vec<i64>>,
    coords: Vec<Vec<u32>>,
}

impl AdditiveBasis {
    pub(super) fn compute(ring: &FiniteCommRing) -> Self {
        match &ring.repr {
            Repr::Presented { digit_moduli, .. } => {
                let n = digit_moduli.len();
                let generators: Vec<Elem> = (0..n)
                    .map(|i| {
                        let mut d = vec![0u32; n];
                        d[i] = 1;
                        ring.from_digits(&d)
                    })
                    .collect();
                let relations = (0..n)
                    .map(|i| {
                        let mut r = vec![0i64; n];
                        r[i] = digit_moduli[i] as i64;
                        r
                    })
                    .collect();
                let coords = ring.elements().map(|a| ring.digits(a)).collect();
                AdditiveBasis { generators, orders: digit_moduli.clone(), relations, coords }
            }
            Repr::Quotient { .. } => Self::greedy(ring),
        }
    }

    fn greedy(ring: &FiniteCommRing) -> Self {
        let mut coords: Vec<Option<Vec<u32>>> = vec![None; ring.size()];
        coords[0] = Some(Vec::new());
        let mut members: Vec<Elem> = vec![0];
        let mut generators = Vec::new();
        let mut orders = Vec::new();
        let mut raw_relations: Vec<(usize, u32, Vec<u32>)> = Vec::new();
        for cand in ring.elements() {
            if coords[cand as usize].is_some() {
                continue;
            }
            let j = generators.len();
            let mut t = 1u32;
            let mut acc = cand;
            while coords[acc as usize].is_none() {
                acc = ring.add(acc, cand);
                t += 1;
            }
            raw_relations.push((j, t, coords[acc as usize].clone().unwrap()));
            generators.push(cand);
            orders.push(t);
            let old = members.clone();
            let mut kg = 0;
            for k in 1..t {
                kg = ring.add(kg, cand);
                for &m in &old {
                    let e = ring.add(m, kg);
                    let mut c = coords[m as usize].clone().unwrap();
                    c.resize(j, 0);
                    c.push(k);
                    coords[e as usize] = Some(c);
                    members.push(e);
                }
            }
        }
        let n = generators.len();
        let coords: Vec<Vec<u32>> = coords
            .into_iter()
            .map(|c| {
                let mut c = c.unwrap();
                c.resize(n, 0);
                c
            })
            .collect();
        let relations = raw_relations
            .into_iter()
            .map(|(j, t, c)| {
                let mut r = vec![0i64; n];
                for (i, &v) in c.iter().enumerate() {
                    r[i] -= v as i64;
                }
                r[j] += t as i64;
                r
            })
            .collect();
        AdditiveBasis { generators, orders, relations, coords }
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn coords(&self, a: Elem) -> &[u32] {
        &self.coords[a as usize]
    }

    /// `Σ c_j · generators[j]`.
    pub fn element(&self, ring: &FiniteCommRing, c: &[BigInt]) -> Elem {
        c.iter()
            .zip(&self.generators)
            .fold(0, |acc, (cj, &g)| ring.add(acc, ring.mul_int(g, cj)))
    }
}

/// Membership table of the additive subgroup generated by `gens`.
pub fn additive_span(ring: &FiniteCommRing, gens: &[Elem]) -> Vec<bool> {
    let mut members = vec![false; ring.size()];
    members[0] = true;
    let mut list = vec![0];
    for &g in gens {
        if members[g as usize] {
            continue;
        }
        let old = list.clone();
        let mut kg = g;
        while !members[kg as usize] {
            for &m in &old {
                let e = ring.add(m, kg);
                members[e as usize] = true;
                list.push(e);
            }
            kg = ring.add(kg, g);
        }
    }
    members
}

/// Generators of the kernel of an additive map `S^k → S^l`.
///
/// `map` must be additive; it is evaluated only on the standard generators
/// `b_j · e_p` of `S^k`.
pub fn additive_kernel(
    ring: &FiniteCommRing,
    k: usize,
    l: usize,
    map: impl Fn(&[Elem]) -> Vec<Elem>,
) -> Vec<Vec<Elem>> {
    let basis = ring.additive_basis();
    let b = basis.rank();
    if b == 0 || k == 0 {
        return Vec::new();
    }
    let src = k * b;
    let tgt = l * b;
    let mut m = IntMatrix::zeros(tgt, src + tgt);
    for p in 0..k {
        for (j, &g) in basis.generators.iter().enumerate() {
            let mut v = vec![0; k];
            v[p] = g;
            let img = map(&v);
            assert_eq!(img.len(), l, "additive map has the wrong arity");
            for (q, &y) in img.iter().enumerate() {
                for (i, &c) in basis.coords(y).iter().enumerate() {
                    m[(q * b + i, p * b + j)] = BigInt::from(c);
                }
            }
        }
    }
    for q in 0..l {
        for (j, rel) in basis.relations.iter().enumerate() {
            for (i, &r) in rel.iter().enumerate() {
                m[(q * b + i, src + q * b + j)] = BigInt::from(r);
            }
        }
    }
    let mut out: Vec<Vec<Elem>> = integer_kernel(&m)
        .into_iter()
        .map(|v| (0..k).map(|p| basis.element(ring, &v[p * b..(p + 1) * b])).collect::<Vec<Elem>>())
        .filter(|x: &Vec<Elem>| x.iter().any(|&e| e != 0))
        .collect();
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::ring::Ideal;

    fn check_basis(ring: &FiniteCommRing) {
        let basis = ring.additive_basis();
        let total: u64 = basis.orders.iter().map(|&o| o as u64).product();
        assert_eq!(total as usize, ring.size());
        for a in ring.elements() {
            let c: Vec<BigInt> = basis.coords(a).iter().map(|&x| BigInt::from(x)).collect();
            assert_eq!(basis.element(ring, &c), a);
        }
        for rel in &basis.relations {
            let c: Vec<BigInt> = rel.iter().map(|&x| BigInt::from(x)).collect();
            assert_eq!(basis.element(ring, &c), 0);
        }
    }

    #[test]
    fn presented_and_quotient_bases() {
        let r = FiniteCommRing::parse(&["(Z/4)[x]/(x^2)"]).unwrap();
        check_basis(&r);
        let two_x = r.parse_element("2x").unwrap();
        let (q, _) = Arc::clone(&r).quotient(&Ideal::generated(&r, &[two_x])).unwrap();
        assert_eq!(q.size(), 8);
        check_basis(&q);
    }

    #[test]
    fn span_and_kernel() {
        let r = FiniteCommRing::parse(&["Z/12"]).unwrap();
        let span = additive_span(&r, &[r.from_int(8)]);
        assert_eq!(span.iter().filter(|&&m| m).count(), 3);
        // kernel of s ↦ 4s on Z/12 is {0,3,6,9}
        let gens = additive_kernel(&r, 1, 1, |v| vec![r.mul(r.from_int(4), v[0])]);
        let flat: Vec<Elem> = gens.iter().map(|v| v[0]).collect();
        let span = additive_span(&r, &flat);
        let ker: Vec<Elem> = r.elements().filter(|&a| span[a as usize]).collect();
        assert_eq!(ker, vec![0, 3, 6, 9]);
    }
}
