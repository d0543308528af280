use super::additive::additive_span;
use super::{Elem, FiniteCommRing};
use crate::error::{Error, Result};

/// An ideal, materialized as its sorted element list plus a membership table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ideal {
    members: Vec<bool>,
    elements: Vec<Elem>,
}

impl Ideal {
    pub(crate) fn from_sorted_unchecked(ring_size: usize, elements: Vec<Elem>) -> Self {
        let mut members = vec![false; ring_size];
        for &e in &elements {
            members[e as usize] = true;
        }
        Ideal { members, elements }
    }

    pub fn from_membership(members: Vec<bool>) -> Self {
        let elements = members
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| i as Elem)
            .collect();
        Ideal { members, elements }
    }

    pub fn zero(ring: &FiniteCommRing) -> Self {
        Self::from_sorted_unchecked(ring.size(), vec![0])
    }

    pub fn unit(ring: &FiniteCommRing) -> Self {
        Self::from_sorted_unchecked(ring.size(), ring.elements().collect())
    }

    /// The ideal generated by `gens`.
    pub fn generated(ring: &FiniteCommRing, gens: &[Elem]) -> Self {
        let basis = &ring.additive_basis().generators;
        let mut products = Vec::with_capacity(gens.len() * (basis.len() + 1));
        for &g in gens {
            products.push(g);
            for &b in basis {
                products.push(ring.mul(b, g));
            }
        }
        Self::from_membership(additive_span(ring, &products))
    }

    /// Validates a candidate element set as an ideal.
    pub fn from_elements(ring: &FiniteCommRing, elems: &[Elem]) -> Result<Self> {
        let mut sorted = elems.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let ideal = Self::from_sorted_unchecked(ring.size(), sorted);
        ideal.verify(ring)?;
        Ok(ideal)
    }

    pub(crate) fn verify(&self, ring: &FiniteCommRing) -> Result<()> {
        if self.members.len() != ring.size() {
            return Err(Error::NotAnIdeal("belongs to a ring of a different size".into()));
        }
        if !self.contains(0) {
            return Err(Error::NotAnIdeal("does not contain 0".into()));
        }
        let basis = &ring.additive_basis().generators;
        for &a in &self.elements {
            for &b in &self.elements {
                if !self.contains(ring.add(a, b)) {
                    return Err(Error::NotAnIdeal(format!(
                        "not closed under addition: {} + {}",
                        ring.display(a),
                        ring.display(b)
                    )));
                }
            }
            for &s in basis.iter().chain(std::iter::once(&ring.one())) {
                if !self.contains(ring.mul(s, a)) {
                    return Err(Error::NotAnIdeal(format!(
                        "not closed under multiplication: {} * {}",
                        ring.display(s),
                        ring.display(a)
                    )));
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn contains(&self, a: Elem) -> bool {
        self.members[a as usize]
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.elements.len() == self.members.len()
    }

    pub fn is_subset_of(&self, other: &Ideal) -> bool {
        self.elements.iter().all(|&a| other.contains(a))
    }

    pub fn intersect(&self, other: &Ideal) -> Ideal {
        let members: Vec<bool> = self.members.iter().zip(&other.members).map(|(a, b)| *a && *b).collect();
        Self::from_membership(members)
    }

    /// Image under a ring automorphism given as an element table.
    pub fn image(&self, perm: &[Elem]) -> Ideal {
        let mut elems: Vec<Elem> = self.elements.iter().map(|&a| perm[a as usize]).collect();
        elems.sort_unstable();
        Self::from_sorted_unchecked(self.members.len(), elems)
    }
}

/// A maximal ideal with its residue field size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalIdeal {
    pub ideal: Ideal,
    pub residue_field_size: usize,
    /// Least representative of the primitive idempotent of `S/nil` that is
    /// `1` modulo this ideal.
    pub idempotent: Elem,
}

pub(super) fn compute_maximal_ideals(ring: &FiniteCommRing) -> Vec<MaximalIdeal> {
    let nil = ring.nilradical();
    // least representative of each nil-coset
    let coset_min = |a: Elem| -> Elem {
        nil.elements().iter().map(|&n| ring.add(a, n)).min().unwrap()
    };
    let mut idempotents: Vec<Elem> = ring
        .elements()
        .filter(|&e| nil.contains(ring.sub(ring.mul(e, e), e)))
        .map(coset_min)
        .collect();
    idempotents.sort_unstable();
    idempotents.dedup();
    let nonzero: Vec<Elem> = idempotents.into_iter().filter(|&e| !nil.contains(e)).collect();
    let primitive: Vec<Elem> = nonzero
        .iter()
        .copied()
        .filter(|&e| {
            !nonzero.iter().any(|&f| {
                let fe = ring.mul(f, e);
                nil.contains(ring.sub(fe, f)) && !nil.contains(ring.sub(f, e))
            })
        })
        .collect();
    primitive
        .into_iter()
        .map(|e| {
            let members: Vec<bool> = ring.elements().map(|s| nil.contains(ring.mul(s, e))).collect();
            let ideal = Ideal::from_membership(members);
            MaximalIdeal { residue_field_size: ring.size() / ideal.len(), ideal, idempotent: e }
        })
        .collect()
}
