//! Finite groups acting on finite rings by automorphisms (on the right).

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::ring::{is_automorphism, Elem, FiniteCommRing, Ideal};

/// How a single group generator acts on the ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActionRule {
    Identity,
    /// `s ↦ s^k`.
    Power(u64),
    /// `s ↦ s^p` for the prime characteristic `p`.
    Frobenius,
    /// Factor `i` is sent to factor `targets[i]` with `x ↦ images[i]`.
    AtomMap { targets: Vec<usize>, images: Vec<Vec<i64>> },
    /// Explicit image of every element in canonical order.
    Table(Vec<Elem>),
}

impl ActionRule {
    pub fn table(&self, ring: &FiniteCommRing) -> Result<Vec<Elem>> {
        match self {
            ActionRule::Identity => Ok(ring.elements().collect()),
            ActionRule::Power(k) => Ok(ring.elements().map(|s| ring.pow(s, *k)).collect()),
            ActionRule::Frobenius => {
                let p = ring.characteristic();
                if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
                    return Err(Error::InvalidAction(format!("Frobenius needs prime characteristic, got {p}")));
                }
                Ok(ring.elements().map(|s| ring.pow(s, p)).collect())
            }
            ActionRule::AtomMap { targets, images } => ring.atom_map(targets, images),
            ActionRule::Table(t) => Ok(t.clone()),
        }
    }
}

/// Decomposition and inertia groups of one maximal ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InertiaData {
    /// Index into `ring.maximal_ideals()`.
    pub ideal: usize,
    pub decomposition: Vec<usize>,
    pub inertia: Vec<usize>,
}

/// `S_H = S/J(H)` with its projection and the induced (trivial) `H`-action.
#[derive(Debug)]
pub struct ResidualRing {
    pub ring: Arc<FiniteCommRing>,
    pub projection: Vec<Elem>,
    pub j_ideal: Ideal,
    /// `H` relabelled as a group in its own right, and its embedding into `G`.
    pub action: Arc<RingAction>,
    pub embedding: Vec<usize>,
}

#[derive(Debug)]
pub struct RingAction {
    group: Arc<FiniteGroup>,
    ring: Arc<FiniteCommRing>,
    /// `maps[g][s] = s^g`.
    maps: Vec<Vec<Elem>>,
    witness: Option<Elem>,
    invariants: OnceLock<Vec<Elem>>,
    inertia: OnceLock<Vec<InertiaData>>,
}

impl RingAction {
    /// Extends per-generator automorphisms to all of `G` and validates.
    ///
    /// With `require_star` the constructor fails unless some `x` has `tr(x) = 1`.
    pub fn new(
        group: Arc<FiniteGroup>,
        ring: Arc<FiniteCommRing>,
        generator_maps: Vec<Vec<Elem>>,
        require_star: bool,
    ) -> Result<Arc<Self>> {
        let gens = group.generators().to_vec();
        if generator_maps.len() != gens.len() {
            return Err(Error::InvalidAction(format!(
                "{} generator maps given for {} generators",
                generator_maps.len(),
                gens.len()
            )));
        }
        for (i, m) in generator_maps.iter().enumerate() {
            is_automorphism(&ring, m).map_err(|e| Error::InvalidAction(format!("generator {i}: {e}")))?;
        }
        let mut maps: Vec<Option<Vec<Elem>>> = vec![None; group.order()];
        maps[0] = Some(ring.elements().collect());
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (gi, &g) in gens.iter().enumerate() {
                let y = group.mul(x, g);
                if maps[y].is_none() {
                    let mx = maps[x].as_ref().unwrap();
                    // s^{xg} = (s^x)^g
                    maps[y] = Some(mx.iter().map(|&s| generator_maps[gi][s as usize]).collect());
                    queue.push_back(y);
                }
            }
        }
        let maps: Vec<Vec<Elem>> = maps.into_iter().map(Option::unwrap).collect();
        Self::from_element_maps(group, ring, maps, require_star)
    }

    /// Validates a complete table `g ↦ (s ↦ s^g)`.
    pub fn from_element_maps(
        group: Arc<FiniteGroup>,
        ring: Arc<FiniteCommRing>,
        maps: Vec<Vec<Elem>>,
        require_star: bool,
    ) -> Result<Arc<Self>> {
        if maps.len() != group.order() {
            return Err(Error::InvalidAction("one map per group element required".into()));
        }
        for (g, m) in maps.iter().enumerate() {
            is_automorphism(&ring, m).map_err(|e| Error::InvalidAction(format!("element {g}: {e}")))?;
        }
        if maps[0].iter().enumerate().any(|(s, &t)| s as Elem != t) {
            return Err(Error::InvalidAction("identity does not act trivially".into()));
        }
        for a in group.elements() {
            for b in group.elements() {
                let ab = group.mul(a, b);
                if ring.elements().any(|s| maps[ab][s as usize] != maps[b][maps[a][s as usize] as usize]) {
                    return Err(Error::InvalidAction(format!(
                        "not a homomorphism: s^({}·{}) differs from (s^{})^{}",
                        group.label(a),
                        group.label(b),
                        group.label(a),
                        group.label(b)
                    )));
                }
            }
        }
        let mut act = RingAction {
            group,
            ring,
            maps,
            witness: None,
            invariants: OnceLock::new(),
            inertia: OnceLock::new(),
        };
        act.witness = act.ring.elements().find(|&x| act.trace(x) == act.ring.one());
        if require_star && act.witness.is_none() {
            let mut image: Vec<Elem> = act.ring.elements().map(|s| act.trace(s)).collect();
            image.sort_unstable();
            image.dedup();
            return Err(Error::NoTraceWitness { image: image.iter().map(|&s| act.ring.display(s)).collect() });
        }
        Ok(Arc::new(act))
    }

    pub fn from_rules(
        group: Arc<FiniteGroup>,
        ring: Arc<FiniteCommRing>,
        rules: &[ActionRule],
        require_star: bool,
    ) -> Result<Arc<Self>> {
        let maps = rules.iter().map(|r| r.table(&ring)).collect::<Result<Vec<_>>>()?;
        Self::new(group, ring, maps, require_star)
    }

    pub fn trivial(group: Arc<FiniteGroup>, ring: Arc<FiniteCommRing>, require_star: bool) -> Result<Arc<Self>> {
        let maps = vec![ring.elements().collect(); group.order()];
        Self::from_element_maps(group, ring, maps, require_star)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn ring(&self) -> &Arc<FiniteCommRing> {
        &self.ring
    }

    /// `s^g`.
    #[inline]
    pub fn act(&self, g: usize, s: Elem) -> Elem {
        self.maps[g][s as usize]
    }

    pub fn map(&self, g: usize) -> &[Elem] {
        &self.maps[g]
    }

    pub fn is_trivial(&self) -> bool {
        self.group.elements().all(|g| self.ring.elements().all(|s| self.act(g, s) == s))
    }

    pub fn trace(&self, s: Elem) -> Elem {
        self.ring.sum(self.group.elements().map(|g| self.act(g, s)))
    }

    /// The least `x` with `tr(x) = 1`.
    pub fn trace_witness(&self) -> Result<Elem> {
        self.witness.ok_or_else(|| {
            let mut image: Vec<Elem> = self.ring.elements().map(|s| self.trace(s)).collect();
            image.sort_unstable();
            image.dedup();
            Error::NoTraceWitness { image: image.iter().map(|&s| self.ring.display(s)).collect() }
        })
    }

    pub fn satisfies_star(&self) -> bool {
        self.witness.is_some()
    }

    /// `R = S^G`, sorted.
    pub fn invariant_subring(&self) -> &[Elem] {
        self.invariants.get_or_init(|| {
            let gens = self.group.generators();
            self.ring.elements().filter(|&s| gens.iter().all(|&g| self.act(g, s) == s)).collect()
        })
    }

    /// Decomposition and inertia groups for every maximal ideal, in the ring's order.
    pub fn inertia_data(&self) -> &[InertiaData] {
        self.inertia.get_or_init(|| {
            let Ok(max) = self.ring.maximal_ideals() else { return Vec::new() };
            let gens = &self.ring.additive_basis().generators;
            max.iter()
                .enumerate()
                .map(|(i, m)| {
                    let decomposition = self
                        .group
                        .elements()
                        .filter(|&g| m.ideal.image(&self.maps[g]) == m.ideal)
                        .collect();
                    // s ↦ s^g − s is additive, so additive generators suffice
                    let inertia = self
                        .group
                        .elements()
                        .filter(|&g| gens.iter().all(|&s| m.ideal.contains(self.ring.sub(self.act(g, s), s))))
                        .collect();
                    InertiaData { ideal: i, decomposition, inertia }
                })
                .collect()
        })
    }

    fn maximal_index(&self, ideal: &Ideal) -> Result<usize> {
        self.ring
            .maximal_ideals()?
            .iter()
            .position(|m| &m.ideal == ideal)
            .ok_or_else(|| Error::NotAnIdeal("not a maximal ideal of the ring".into()))
    }

    /// `G^Z(𝔐) = {g : 𝔐^g = 𝔐}`.
    pub fn decomposition_group(&self, m: &Ideal) -> Result<Vec<usize>> {
        Ok(self.inertia_data()[self.maximal_index(m)?].decomposition.clone())
    }

    /// `G^T(𝔐) = {g : s^g − s ∈ 𝔐 for all s}`.
    pub fn inertia_group(&self, m: &Ideal) -> Result<Vec<usize>> {
        Ok(self.inertia_data()[self.maximal_index(m)?].inertia.clone())
    }

    /// `J(H)`: the intersection of the maximal ideals whose inertia contains `H`;
    /// the unit ideal if there are none.
    pub fn j_ideal(&self, h: &[usize]) -> Ideal {
        let max = self.ring.maximal_ideals().unwrap_or(&[]);
        self.inertia_data()
            .iter()
            .filter(|d| h.iter().all(|x| d.inertia.binary_search(x).is_ok()))
            .fold(Ideal::unit(&self.ring), |acc, d| acc.intersect(&max[d.ideal].ideal))
    }

    /// `S_H = S/J(H)` with the induced action of `H`, verified trivial.
    pub fn residual_ring(&self, h: &[usize]) -> Result<ResidualRing> {
        let j = self.j_ideal(h);
        let (sub, embedding) = self.group.subgroup(h)?;
        let (ring, projection) = self.ring.quotient(&j)?;
        let action = self.induced(&ring, &projection, Arc::new(sub), &embedding)?;
        if !action.is_trivial() {
            return Err(Error::InvalidAction("H does not act trivially on S_H".into()));
        }
        Ok(ResidualRing { ring, projection, j_ideal: j, action, embedding })
    }

    /// The action of a subgroup `H` on `S/I` for an `H`-stable ideal `I`.
    pub fn induced_action(&self, ideal: &Ideal, h: &[usize]) -> Result<(Arc<RingAction>, Vec<Elem>, Vec<usize>)> {
        for &g in h {
            if &ideal.image(&self.maps[g]) != ideal {
                return Err(Error::InvalidAction(format!("ideal is not stable under {}", self.group.label(g))));
            }
        }
        let (sub, embedding) = self.group.subgroup(h)?;
        let (ring, projection) = self.ring.quotient(ideal)?;
        let action = self.induced(&ring, &projection, Arc::new(sub), &embedding)?;
        Ok((action, projection, embedding))
    }

    /// Restriction of the action to a subgroup (no quotient).
    pub fn restrict(&self, h: &[usize]) -> Result<(Arc<RingAction>, Vec<usize>)> {
        let (sub, embedding) = self.group.subgroup(h)?;
        let maps = embedding.iter().map(|&g| self.maps[g].clone()).collect();
        Ok((Self::from_element_maps(Arc::new(sub), Arc::clone(&self.ring), maps, false)?, embedding))
    }

    fn induced(
        &self,
        quotient: &Arc<FiniteCommRing>,
        projection: &[Elem],
        sub: Arc<FiniteGroup>,
        embedding: &[usize],
    ) -> Result<Arc<RingAction>> {
        let maps = embedding
            .iter()
            .map(|&g| {
                quotient
                    .elements()
                    .map(|q| {
                        let rep = quotient.coset_representative(q).expect("quotient ring");
                        projection[self.act(g, rep) as usize]
                    })
                    .collect()
            })
            .collect();
        Self::from_element_maps(sub, Arc::clone(quotient), maps, false)
    }

    /// Every maximal ideal has trivial inertia.
    pub fn is_galois(&self) -> bool {
        self.inertia_data().iter().all(|d| d.inertia.len() == 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn f4_frobenius() -> Arc<RingAction> {
        let ring = FiniteCommRing::parse(&["(Z/2)[x]/(x^2+x+1)"]).unwrap();
        RingAction::from_rules(Arc::new(FiniteGroup::cyclic(2)), ring, &[ActionRule::Frobenius], true).unwrap()
    }

    pub(crate) fn dual_numbers_sign() -> Arc<RingAction> {
        let ring = FiniteCommRing::parse(&["(Z/3)[x]/(x^2)"]).unwrap();
        let rule = ActionRule::AtomMap { targets: vec![0], images: vec![vec![0, -1]] };
        RingAction::from_rules(Arc::new(FiniteGroup::cyclic(2)), ring, &[rule], true).unwrap()
    }

    fn swap() -> Arc<RingAction> {
        let ring = FiniteCommRing::parse(&["F2", "F2"]).unwrap();
        let rule = ActionRule::AtomMap { targets: vec![1, 0], images: vec![vec![0, 1], vec![0, 1]] };
        RingAction::from_rules(Arc::new(FiniteGroup::cyclic(2)), ring, &[rule], true).unwrap()
    }

    #[test]
    fn traces_and_witnesses() {
        let f4 = f4_frobenius();
        let r = f4.ring();
        let w = r.parse_element("x").unwrap();
        assert_eq!(f4.trace(w), r.one());
        assert_eq!(f4.trace_witness().unwrap(), w);

        let d = dual_numbers_sign();
        let r = d.ring();
        for s in r.elements() {
            let a = r.parse_element(&r.display(s)).unwrap();
            assert_eq!(a, s);
        }
        let a_plus_bx = |a: i64, b: i64| r.add(r.from_int(a), r.mul(r.from_int(b), r.parse_element("x").unwrap()));
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(d.trace(a_plus_bx(a, b)), r.from_int(2 * a));
            }
        }
        assert_eq!(d.trace_witness().unwrap(), r.from_int(2));

        let triv = RingAction::trivial(Arc::new(FiniteGroup::trivial()), Arc::clone(r), true).unwrap();
        assert_eq!(triv.trace_witness().unwrap(), r.one());
    }

    #[test]
    fn star_is_enforced() {
        // Z/2 acting trivially on F_2: tr = 2s = 0
        let ring = FiniteCommRing::parse(&["F2"]).unwrap();
        let g = Arc::new(FiniteGroup::cyclic(2));
        assert!(matches!(
            RingAction::trivial(Arc::clone(&g), Arc::clone(&ring), true),
            Err(Error::NoTraceWitness { .. })
        ));
        assert!(RingAction::trivial(g, ring, false).is_ok());
    }

    #[test]
    fn rejects_non_homomorphisms() {
        // Frobenius on F_4 assigned to a generator of order 3 is not a homomorphism
        let ring = FiniteCommRing::parse(&["(Z/2)[x]/(x^2+x+1)"]).unwrap();
        assert!(RingAction::from_rules(Arc::new(FiniteGroup::cyclic(3)), ring.clone(), &[ActionRule::Frobenius], false).is_err());
        // squaring on Z/5 is not additive
        let z5 = FiniteCommRing::parse(&["Z/5"]).unwrap();
        assert!(RingAction::from_rules(Arc::new(FiniteGroup::cyclic(2)), z5, &[ActionRule::Power(2)], false).is_err());
    }

    #[test]
    fn invariant_subrings() {
        let s = swap();
        let r = s.ring();
        let fixed: Vec<String> = s.invariant_subring().iter().map(|&a| r.display(a)).collect();
        assert_eq!(fixed, ["(0,0)", "(1,1)"]);
        let d = dual_numbers_sign();
        let fixed: Vec<String> = d.invariant_subring().iter().map(|&a| d.ring().display(a)).collect();
        assert_eq!(fixed, ["0", "1", "2"]);
        for act in [s, d, f4_frobenius()] {
            let inv = act.invariant_subring();
            let r = act.ring();
            for &a in inv {
                for &b in inv {
                    assert!(inv.contains(&r.add(a, b)) && inv.contains(&r.mul(a, b)));
                }
                assert!(inv.contains(&r.neg(a)));
            }
            for s in r.elements() {
                assert!(inv.contains(&act.trace(s)));
            }
        }
    }

    #[test]
    fn inertia_and_decomposition() {
        let s = swap();
        let max = s.ring().maximal_ideals().unwrap();
        assert_eq!(max.len(), 2);
        for m in max {
            assert_eq!(s.decomposition_group(&m.ideal).unwrap(), [0]);
            assert_eq!(s.inertia_group(&m.ideal).unwrap(), [0]);
        }
        assert!(s.is_galois());
        assert!(f4_frobenius().is_galois());
        let f4 = f4_frobenius();
        assert_eq!(f4.inertia_group(&f4.ring().maximal_ideals().unwrap()[0].ideal).unwrap(), [0]);

        let d = dual_numbers_sign();
        let m = &d.ring().maximal_ideals().unwrap()[0].ideal;
        assert_eq!(d.decomposition_group(m).unwrap(), [0, 1]);
        assert_eq!(d.inertia_group(m).unwrap(), [0, 1]);
        assert!(!d.is_galois());
    }

    #[test]
    fn j_ideals_and_residual_rings() {
        let d = dual_numbers_sign();
        let r = d.ring();
        let x = Ideal::generated(r, &[r.parse_element("x").unwrap()]);
        assert_eq!(d.j_ideal(&[0, 1]), x);
        assert_eq!(&d.j_ideal(&[0]), r.nilradical());
        let res = d.residual_ring(&[0, 1]).unwrap();
        assert_eq!(res.ring.size(), 3);

        let s = swap();
        assert!(s.j_ideal(&[0, 1]).is_unit_ideal());
        let res = s.residual_ring(&[0, 1]).unwrap();
        assert!(res.ring.is_zero_ring());
        assert!(s.j_ideal(&[0]).is_zero_ideal());
        let f4 = f4_frobenius();
        assert_eq!(f4.residual_ring(&[0]).unwrap().ring.size(), 4);
    }

    #[test]
    fn inertia_properties_hold_exhaustively() {
        let mixed = {
            let ring = FiniteCommRing::parse(&["F3", "(Z/3)[x]/(x^2)"]).unwrap();
            let rule = ActionRule::AtomMap { targets: vec![0, 1], images: vec![vec![0, 1], vec![0, -1]] };
            RingAction::from_rules(Arc::new(FiniteGroup::cyclic(2)), ring, &[rule], true).unwrap()
        };
        let rotation = {
            let ring = FiniteCommRing::parse(&["F2", "F2", "F2"]).unwrap();
            let rule = ActionRule::AtomMap { targets: vec![1, 2, 0], images: vec![vec![0, 1]; 3] };
            RingAction::from_rules(Arc::new(FiniteGroup::cyclic(3)), ring, &[rule], true).unwrap()
        };
        for act in [swap(), dual_numbers_sign(), f4_frobenius(), mixed, rotation] {
            let g = act.group();
            let max = act.ring().maximal_ideals().unwrap();
            for d in act.inertia_data() {
                assert!(g.is_normal_in(&d.inertia, &d.decomposition));
                for x in g.elements() {
                    let moved = max[d.ideal].ideal.image(act.map(x));
                    let j = max.iter().position(|m| m.ideal == moved).unwrap();
                    assert_eq!(act.inertia_data()[j].inertia, g.conjugate_subgroup(&d.inertia, x));
                }
            }
            for h in g.subgroups() {
                let j = act.j_ideal(h);
                for d in act.inertia_data() {
                    let contains = h.iter().all(|x| d.inertia.contains(x));
                    assert_eq!(contains, j.is_subset_of(&max[d.ideal].ideal));
                }
                assert!(act.residual_ring(h).unwrap().action.is_trivial());
            }
            if act.is_galois() {
                assert!(act.satisfies_star());
            }
        }
    }
}
