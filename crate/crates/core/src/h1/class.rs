//! Cohomology classes with matrix coefficients and the operations on them.

use std::sync::Arc;

use super::cocycle::{self, canonical_representative, unit_cocycle, Cocycle};
use super::ggroup::{GGroup, MatrixCoefficients, MatrixKind};
use super::witness::{find_witness, Witness};
use crate::action::RingAction;
use crate::error::{Error, Result};
use crate::ring::{FiniteCommRing, RingMatrix};

/// A class in `H^1(G, GL_n(S))` (or `SL_n`, or `U = GL_1`), stored by a representative.
#[derive(Clone, Debug)]
pub struct CohClass {
    coefficients: Arc<MatrixCoefficients>,
    representative: Cocycle<RingMatrix>,
    /// Whether `representative` is the least cocycle of its orbit. Block sums
    /// and padded classes are not canonicalized.
    canonical: bool,
}

impl CohClass {
    pub fn new(coefficients: Arc<MatrixCoefficients>, representative: Cocycle<RingMatrix>, canonical: bool) -> Result<Self> {
        if !cocycle::is_cocycle(&*coefficients, representative.values())
            || !representative.values().iter().all(|x| coefficients.contains(x))
        {
            return Err(Error::InvalidCocycle(format!(
                "not a cocycle with values in {}",
                coefficients.designation()
            )));
        }
        Ok(CohClass { coefficients, representative, canonical })
    }

    pub fn neutral(coefficients: &Arc<MatrixCoefficients>) -> Self {
        CohClass {
            representative: unit_cocycle(&**coefficients),
            coefficients: Arc::clone(coefficients),
            canonical: false,
        }
    }

    pub fn coefficients(&self) -> &Arc<MatrixCoefficients> {
        &self.coefficients
    }

    pub fn action(&self) -> &Arc<RingAction> {
        self.coefficients.action()
    }

    pub fn ring(&self) -> &Arc<FiniteCommRing> {
        self.coefficients.ring()
    }

    pub fn level(&self) -> usize {
        self.coefficients.level()
    }

    pub fn kind(&self) -> MatrixKind {
        self.coefficients.kind()
    }

    pub fn representative(&self) -> &Cocycle<RingMatrix> {
        &self.representative
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    pub fn designation(&self) -> String {
        self.coefficients.designation()
    }

    pub fn canonicalize(&self, cap: usize) -> Result<Self> {
        if self.canonical {
            return Ok(self.clone());
        }
        Ok(CohClass {
            coefficients: Arc::clone(&self.coefficients),
            representative: canonical_representative(&*self.coefficients, &self.representative, cap)?,
            canonical: true,
        })
    }

    /// Whether the representative is the unit cocycle.
    pub fn is_unit_cocycle(&self) -> bool {
        self.representative.values().iter().all(|x| x == &self.coefficients.identity())
    }

    /// Decides neutrality, exactly when `G` acts trivially (a conjugacy class of
    /// homomorphisms is neutral iff the homomorphism is trivial), otherwise by
    /// witness search.
    pub fn neutrality(&self, cap: usize) -> Result<Witness> {
        if self.is_unit_cocycle() || self.ring().is_zero_ring() {
            return Ok(Witness::Found(self.coefficients.identity()));
        }
        if self.action().is_trivial() {
            return Ok(Witness::Absent);
        }
        find_witness(&self.coefficients, &self.representative, &unit_cocycle(&*self.coefficients), &[], cap)
    }

    pub fn is_neutral(&self, cap: usize) -> Result<bool> {
        match self.neutrality(cap)? {
            Witness::Found(_) => Ok(true),
            Witness::Absent => Ok(false),
            Witness::Inconclusive => Err(Error::CapExceeded {
                what: format!("neutrality search in {}", self.designation()),
                needed: cap as u128 + 1,
                cap: cap as u128,
            }),
        }
    }

    /// `diag(d(g), 1_t)` at level `level`.
    pub fn pad(&self, level: usize) -> Result<Self> {
        if level < self.level() {
            return Err(Error::Mismatch(format!("cannot pad level {} down to {level}", self.level())));
        }
        if level == self.level() {
            return Ok(self.clone());
        }
        let ring = self.ring();
        Ok(CohClass {
            coefficients: self.coefficients.at_level(level),
            representative: self.representative.map(|x| x.pad(ring, level)),
            canonical: false,
        })
    }

    /// JSON rendering: level, designation and value table.
    pub fn render(&self) -> serde_json::Value {
        let g = self.action().group();
        let values: serde_json::Map<String, serde_json::Value> = g
            .elements()
            .map(|a| (g.label(a).to_string(), self.coefficients.render(self.representative.value(a))))
            .collect();
        serde_json::json!({
            "level": self.level(),
            "coefficients": self.designation(),
            "values": values,
        })
    }
}

fn same_coefficient_ring(a: &CohClass, b: &CohClass) -> Result<()> {
    if !Arc::ptr_eq(a.action(), b.action()) {
        return Err(Error::Mismatch("classes live over different actions".into()));
    }
    if a.kind() != b.kind() {
        return Err(Error::Mismatch(format!("{} vs {}", a.designation(), b.designation())));
    }
    Ok(())
}

/// `H^1(G, X)` with canonical representatives, ordered by representative.
pub fn h1_classes(coefficients: &Arc<MatrixCoefficients>, cap: usize) -> Result<Vec<(CohClass, cocycle::ClassData<RingMatrix>)>> {
    let (data, _) = cocycle::h1(&**coefficients, cap)?;
    Ok(data
        .into_iter()
        .map(|d| {
            let class = CohClass {
                coefficients: Arc::clone(coefficients),
                representative: d.representative.clone(),
                canonical: true,
            };
            (class, d)
        })
        .collect())
}

/// Where `a` sits in a list of canonical classes.
pub fn class_index(classes: &[CohClass], a: &CohClass, cap: usize) -> Result<Option<usize>> {
    let canon = a.canonicalize(cap)?;
    Ok(classes.iter().position(|c| c.level() == canon.level() && c.representative == canon.representative))
}

/// `s_{m,n} = (−1)^{(m+1)n} [[0, −1_n], [1_m, 0]]`, of size `m + n`.
pub fn s_matrix(ring: &FiniteCommRing, m: usize, n: usize) -> RingMatrix {
    let k = m + n;
    let sign = if ((m + 1) * n) % 2 == 0 { ring.one() } else { ring.neg(ring.one()) };
    let mut s = RingMatrix::new(k, vec![0; k * k]);
    for i in 0..n {
        s.set(i, m + i, ring.neg(sign));
    }
    for i in 0..m {
        s.set(n + i, i, sign);
    }
    s
}

/// `x[m] = diag(1_m, x)`.
pub fn shift(ring: &FiniteCommRing, x: &RingMatrix, m: usize) -> RingMatrix {
    RingMatrix::identity(ring, m).block_diag(x)
}

/// `(d ⊕_m e)(g) = d(g)·e(g)[m] = diag(d(g), e(g))`.
pub fn add_classes(a: &CohClass, b: &CohClass) -> Result<CohClass> {
    same_coefficient_ring(a, b)?;
    let (m, n) = (a.level(), b.level());
    let ring = a.ring();
    let coefficients = a.coefficients.at_level(m + n);
    let values = a
        .representative
        .values()
        .iter()
        .zip(b.representative.values())
        .map(|(d, e)| d.pad(ring, m + n).mul(ring, &shift(ring, e, m)))
        .collect();
    Ok(CohClass { coefficients, representative: Cocycle::from_values_unchecked(values), canonical: false })
}

/// Outcome of a bounded stabilization comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StableVerdict {
    Equal { level: usize, witness: RingMatrix },
    NotEqualUpToBound { bound: usize },
    /// No witness found, but the search space at `level` exceeded the cap.
    Inconclusive { level: usize },
}

impl StableVerdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, StableVerdict::Equal { .. })
    }
}

/// Pads both classes to each common level up to `bound` and searches for a
/// twisted-conjugacy witness, trying the `hints` first.
pub fn stable_equal(a: &CohClass, b: &CohClass, bound: usize, hints: &[RingMatrix], cap: usize) -> Result<StableVerdict> {
    same_coefficient_ring(a, b)?;
    let start = a.level().max(b.level());
    let mut inconclusive = None;
    for level in start..=bound.max(start) {
        let (pa, pb) = (a.pad(level)?, b.pad(level)?);
        // trivial action: a class is neutral iff its values are all 1
        if a.action().is_trivial() && (pa.is_unit_cocycle() || pb.is_unit_cocycle()) {
            if pa.representative == pb.representative {
                return Ok(StableVerdict::Equal { level, witness: pa.coefficients.identity() });
            }
            continue;
        }
        match find_witness(&pa.coefficients, &pa.representative, &pb.representative, hints, cap)? {
            Witness::Found(witness) => return Ok(StableVerdict::Equal { level, witness }),
            Witness::Inconclusive => {
                inconclusive.get_or_insert(level);
            }
            Witness::Absent => {}
        }
    }
    Ok(match inconclusive {
        Some(level) => StableVerdict::Inconclusive { level },
        None => StableVerdict::NotEqualUpToBound { bound: bound.max(start) },
    })
}

/// Entrywise determinant, landing in `H^1(G, U(S))`.
pub fn det_push(a: &CohClass) -> CohClass {
    let ring = a.ring();
    CohClass {
        coefficients: MatrixCoefficients::units(a.action()),
        representative: a.representative.map(|x| RingMatrix::scalar(ring, 1, x.det(ring))),
        canonical: false,
    }
}

/// `U(S) = GL_1(S)` included as level-one `GL` classes.
pub fn unit_embed(b: &CohClass) -> Result<CohClass> {
    if b.level() != 1 || b.kind() != MatrixKind::General {
        return Err(Error::Mismatch(format!("{} is not U(S)", b.designation())));
    }
    Ok(b.clone())
}

/// `d(g) ≡ 1 mod J(⟨g⟩)` for every `g`.
pub fn congruence_kernel_test(a: &CohClass) -> bool {
    let act = a.action();
    let g = act.group();
    let ring = a.ring();
    let n = a.level();
    g.elements().all(|x| {
        let j = act.j_ideal(&g.cyclic_subgroup(x));
        let d = a.representative.value(x);
        (0..n).all(|i| {
            (0..n).all(|k| {
                let delta = if i == k { ring.one() } else { 0 };
                j.contains(ring.sub(d.get(i, k), delta))
            })
        })
    })
}

/// Restriction to `H`, canonicalized in `H^1(H, X)`.
pub fn restrict(a: &CohClass, h: &[usize], cap: usize) -> Result<CohClass> {
    let (sub, embedding) = a.action().restrict(h)?;
    let coefficients = MatrixCoefficients::new(sub, a.level(), a.kind());
    let representative = cocycle::restrict_values(&a.representative, &embedding);
    CohClass { coefficients, representative, canonical: false }.canonicalize(cap)
}

fn reduce_along(
    a: &CohClass,
    target: Arc<RingAction>,
    projection: &[u32],
    embedding: &[usize],
) -> CohClass {
    let coefficients = MatrixCoefficients::new(target, a.level(), a.kind());
    let representative = cocycle::restrict_values(&a.representative, embedding)
        .map(|x| x.map(|s| projection[s as usize]));
    CohClass { coefficients, representative, canonical: false }
}

/// `ρ_H`: restrict to `H`, then reduce into `GL_n(S_H)` where `H` acts trivially.
pub fn rho_subgroup(a: &CohClass, h: &[usize]) -> Result<CohClass> {
    let res = a.action().residual_ring(h)?;
    Ok(reduce_along(a, Arc::clone(&res.action), &res.projection, &res.embedding))
}

/// Which subgroup the fiber map at a maximal ideal restricts to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum FiberVariant {
    Inertia,
    Decomposition,
}

/// `ρ_𝔐` (inertia) or `ρ'_𝔐` (decomposition): restrict and reduce modulo `𝔐`.
pub fn rho_maximal(a: &CohClass, ideal_index: usize, variant: FiberVariant) -> Result<CohClass> {
    let act = a.action();
    let data = &act.inertia_data()[ideal_index];
    let sub = match variant {
        FiberVariant::Inertia => &data.inertia,
        FiberVariant::Decomposition => &data.decomposition,
    };
    let m = &act.ring().maximal_ideals()?[ideal_index].ideal;
    let (target, projection, embedding) = act.induced_action(m, sub)?;
    Ok(reduce_along(a, target, &projection, &embedding))
}

/// Reduction into `GL_n(S/rad S)` with the induced `G`-action.
pub fn radical_push(a: &CohClass) -> Result<CohClass> {
    let act = a.action();
    let all: Vec<usize> = act.group().elements().collect();
    let (target, projection, embedding) = act.induced_action(act.ring().nilradical(), &all)?;
    Ok(reduce_along(a, target, &projection, &embedding))
}

/// Inflation from `G/N` with coefficients in `X^N`.
pub fn inflate(
    coefficients: &Arc<MatrixCoefficients>,
    normal: &[usize],
    d: &Cocycle<RingMatrix>,
    cap: usize,
) -> Result<CohClass> {
    let fixed = super::ggroup::FixedCoefficients::new(&**coefficients, normal, cap)?;
    if !d.values().iter().all(|x| fixed.contains(x)) {
        return Err(Error::NotFixed);
    }
    if !cocycle::is_cocycle(&fixed, d.values()) {
        return Err(Error::InvalidCocycle("not a cocycle of G/N".into()));
    }
    let representative = cocycle::inflate_values(d, fixed.projection());
    CohClass::new(Arc::clone(coefficients), representative, false)?.canonicalize(cap)
}

/// Both unit verdicts for a class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitVerdict {
    /// The congruence test; `None` when the action lacks a trace-one element.
    pub congruence: Option<bool>,
    pub inverse: InverseSearch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InverseSearch {
    /// Index into the supplied class list and the level at which `a + b` became neutral.
    Found { index: usize, level: usize },
    /// `ρ_H(a)` is not the unit cocycle for this subgroup `H`, so no `b` can
    /// make `a + b` neutral (`ρ_H` is additive and `H` acts trivially on `S_H`).
    Obstructed { subgroup: Vec<usize> },
    NotFoundUpToBound,
    Inconclusive,
}

impl UnitVerdict {
    /// A unit according to whichever verdicts are decisive.
    pub fn is_unit(&self) -> Option<bool> {
        match (&self.congruence, &self.inverse) {
            (Some(c), _) => Some(*c),
            (None, InverseSearch::Found { .. }) => Some(true),
            (None, InverseSearch::Obstructed { .. } | InverseSearch::NotFoundUpToBound) => Some(false),
            (None, InverseSearch::Inconclusive) => None,
        }
    }

    /// False iff both verdicts are decisive and disagree.
    pub fn consistent(&self) -> bool {
        match (&self.congruence, &self.inverse) {
            (Some(true), InverseSearch::NotFoundUpToBound | InverseSearch::Obstructed { .. }) => false,
            (Some(false), InverseSearch::Found { .. }) => false,
            _ => true,
        }
    }
}

/// First subgroup `H` with `ρ_H(a)` different from the unit cocycle.
pub fn rho_obstruction(a: &CohClass) -> Result<Option<Vec<usize>>> {
    for h in a.action().group().subgroups() {
        if !rho_subgroup(a, h)?.is_unit_cocycle() {
            return Ok(Some(h.clone()));
        }
    }
    Ok(None)
}

/// Runs the congruence test and scans `candidates` for `b` with `a + b` stably
/// neutral. Candidates (and `a` itself) carrying a `ρ_H` obstruction are
/// ruled out without a search.
pub fn is_unit(a: &CohClass, candidates: &[CohClass], bound: usize, cap: usize) -> Result<UnitVerdict> {
    let congruence = a.action().satisfies_star().then(|| congruence_kernel_test(a));
    if let Some(subgroup) = rho_obstruction(a)? {
        return Ok(UnitVerdict { congruence, inverse: InverseSearch::Obstructed { subgroup } });
    }
    let neutral = CohClass::neutral(&a.coefficients.at_level(1));
    let mut inconclusive = false;
    for (index, b) in candidates.iter().enumerate() {
        if rho_obstruction(b)?.is_some() {
            continue;
        }
        let sum = add_classes(a, b)?;
        match stable_equal(&sum, &neutral, bound, &[], cap)? {
            StableVerdict::Equal { level, .. } => {
                return Ok(UnitVerdict { congruence, inverse: InverseSearch::Found { index, level } })
            }
            StableVerdict::Inconclusive { .. } => inconclusive = true,
            StableVerdict::NotEqualUpToBound { .. } => {}
        }
    }
    let inverse = if inconclusive { InverseSearch::Inconclusive } else { InverseSearch::NotFoundUpToBound };
    Ok(UnitVerdict { congruence, inverse })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::ActionRule;
    use crate::group::FiniteGroup;

    fn dual_sign() -> Arc<RingAction> {
        let ring = FiniteCommRing::parse(&["(Z/3)[x]/(x^2)"]).unwrap();
        let rule = ActionRule::AtomMap { targets: vec![0], images: vec![vec![0, -1]] };
        RingAction::from_rules(Arc::new(FiniteGroup::cyclic(2)), ring, &[rule], true).unwrap()
    }

    fn unit_values(ring: &FiniteCommRing, vals: &[i64]) -> Cocycle<RingMatrix> {
        Cocycle::from_values_unchecked(vals.iter().map(|&v| RingMatrix::scalar(ring, 1, ring.from_int(v))).collect())
    }

    #[test]
    fn s_matrices() {
        let ring = FiniteCommRing::parse(&["Z/5"]).unwrap();
        let s11 = s_matrix(&ring, 1, 1);
        assert_eq!(s11, RingMatrix::parse(&ring, &[vec!["0", "-1"], vec!["1", "0"]]).unwrap());
        let mut seed = 7u32;
        let mut rand_matrix = |k: usize| {
            let entries = (0..k * k)
                .map(|_| {
                    seed = seed.wrapping_mul(1103515245).wrapping_add(12345);
                    (seed >> 16) % 5
                })
                .collect();
            RingMatrix::new(k, entries)
        };
        for m in 0..4 {
            for n in 1..4 {
                let s = s_matrix(&ring, m, n);
                let si = s.inverse(&ring).unwrap();
                let x = rand_matrix(n);
                // x[m] = s⁻¹ diag(x, 1_m) s
                assert_eq!(shift(&ring, &x, m), si.mul(&ring, &x.pad(&ring, m + n)).mul(&ring, &s));
                if m > 0 {
                    let y = rand_matrix(m);
                    assert_eq!(si.mul(&ring, &x.block_diag(&y)).mul(&ring, &s), y.block_diag(&x));
                }
            }
        }
        let x = rand_matrix(3);
        assert_eq!(shift(&ring, &x, 0), x);
    }

    #[test]
    fn dual_numbers_classes() {
        let act = dual_sign();
        let ring = act.ring();
        let u = MatrixCoefficients::units(&act);
        let classes: Vec<CohClass> = h1_classes(&u, 1000).unwrap().into_iter().map(|(c, _)| c).collect();
        assert_eq!(classes.len(), 2);
        let c = CohClass::new(Arc::clone(&u), unit_values(ring, &[1, -1]), false).unwrap();
        let neutral = CohClass::neutral(&u);
        assert!(neutral.is_neutral(1000).unwrap());
        assert!(!c.is_neutral(1000).unwrap());
        assert!(congruence_kernel_test(&neutral));
        assert!(!congruence_kernel_test(&c));

        // ρ_G sends c to the character g ↦ −1 of G in U(F_3)
        let r = rho_subgroup(&c, &[0, 1]).unwrap();
        assert_eq!(r.ring().size(), 3);
        assert_eq!(r.representative().value(1), &RingMatrix::scalar(r.ring(), 1, r.ring().from_int(-1)));
        assert!(!r.is_neutral(1000).unwrap());
        for variant in [FiberVariant::Inertia, FiberVariant::Decomposition] {
            assert!(!rho_maximal(&c, 0, variant).unwrap().is_neutral(1000).unwrap());
            assert!(rho_maximal(&neutral, 0, variant).unwrap().is_neutral(1000).unwrap());
        }
        let pushed = radical_push(&c).unwrap();
        assert!(pushed.action().is_trivial());
        assert!(!pushed.is_neutral(1000).unwrap());

        assert!(!stable_equal(&c, &neutral, 3, &[], 1 << 20).unwrap().is_equal());
        assert_eq!(stable_equal(&c, &neutral, 3, &[], 1 << 20).unwrap(), StableVerdict::NotEqualUpToBound { bound: 3 });
        let v = is_unit(&c, &classes, 3, 1 << 20).unwrap();
        assert_eq!(v.congruence, Some(false));
        assert_eq!(v.inverse, InverseSearch::Obstructed { subgroup: vec![0, 1] });
        assert_eq!(rho_obstruction(&neutral).unwrap(), None);
        let v = is_unit(&neutral, &classes, 3, 1 << 20).unwrap();
        assert_eq!(v.congruence, Some(true));
        assert!(matches!(v.inverse, InverseSearch::Found { .. }));
    }

    #[test]
    fn block_sums_and_determinants() {
        let act = dual_sign();
        let ring = act.ring();
        let u = MatrixCoefficients::units(&act);
        let z = cocycle::enumerate_cocycles(&*u, 100).unwrap();
        for d in &z {
            for e in &z {
                let a = CohClass::new(Arc::clone(&u), d.clone(), false).unwrap();
                let b = CohClass::new(Arc::clone(&u), e.clone(), false).unwrap();
                let ab = add_classes(&a, &b).unwrap();
                let ba = add_classes(&b, &a).unwrap();
                assert!(cocycle::is_cocycle(&**ab.coefficients(), ab.representative().values()));
                // det_push([diag(u, v)]) = [uv]
                let det = det_push(&ab);
                for g in 0..2 {
                    let prod = ring.mul(d.value(g).get(0, 0), e.value(g).get(0, 0));
                    assert_eq!(det.representative().value(g).get(0, 0), prod);
                }
                let s = s_matrix(ring, 1, 1);
                match stable_equal(&ab, &ba, 2, &[s], 1 << 16).unwrap() {
                    StableVerdict::Equal { level, .. } => assert_eq!(level, 2),
                    v => panic!("{v:?}"),
                }
            }
        }
        let one = CohClass::neutral(&u);
        assert_eq!(det_push(&one).representative(), one.representative());
        assert_eq!(unit_embed(&one).unwrap().representative(), one.representative());
    }

    #[test]
    fn restriction_and_inflation_on_klein_four() {
        // V_4 = ⟨a, b⟩ acting trivially on F_3, coefficients U(F_3) = {±1}
        let ring = FiniteCommRing::parse(&["F3"]).unwrap();
        let g = Arc::new(FiniteGroup::abelian(&[2, 2]));
        let (a, b) = (g.generators()[0], g.generators()[1]);
        let act = RingAction::trivial(Arc::clone(&g), Arc::clone(&ring), true).unwrap();
        let u = MatrixCoefficients::units(&act);
        let mut vals = vec![1i64; 4];
        vals[b] = -1;
        vals[g.mul(a, b)] = -1;
        let d = CohClass::new(Arc::clone(&u), unit_values(&ring, &vals), false).unwrap();
        assert!(restrict(&d, &g.cyclic_subgroup(a), 100).unwrap().is_neutral(100).unwrap());
        assert!(!restrict(&d, &g.cyclic_subgroup(b), 100).unwrap().is_neutral(100).unwrap());
        assert!(restrict(&d, &[0], 100).unwrap().is_neutral(100).unwrap());

        // the nontrivial character of G/⟨a⟩ inflates to d
        let n = g.cyclic_subgroup(a);
        let inflated = inflate(&u, &n, &unit_values(&ring, &[1, -1]), 100).unwrap();
        assert_eq!(inflated.representative(), d.canonicalize(100).unwrap().representative());
        let trivial = inflate(&u, &n, &unit_values(&ring, &[1, 1]), 100).unwrap();
        assert!(trivial.is_neutral(100).unwrap());
    }

    #[test]
    fn inflation_rejects_unfixed_coefficients() {
        let act = dual_sign();
        let u = MatrixCoefficients::units(&act);
        let ring = act.ring();
        // N = G, G/N trivial; the value 1 + x is not G-fixed
        let v = RingMatrix::scalar(ring, 1, ring.parse_element("1+x").unwrap());
        let d = Cocycle::from_values_unchecked(vec![v]);
        assert!(matches!(inflate(&u, &[0, 1], &d, 100), Err(Error::NotFixed)));
    }
}
