//! The skew group ring `T = S*G` and twisted modules `(S^n)_d`, giving a
//! module-theoretic test for membership in the kernel of induction that never
//! consults the cohomology code.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::action::RingAction;
use crate::error::{Error, Result};
use crate::ring::{additive_kernel, Elem, FiniteCommRing, RingMatrix};

/// An element `Σ_g g·a_g`, stored as the coefficient table `g ↦ a_g`.
pub type SkewElem = Vec<Elem>;

#[derive(Debug)]
pub struct SkewGroupRing {
    action: Arc<RingAction>,
    witness: Elem,
    trace_element: SkewElem,
    idempotent: SkewElem,
}

impl SkewGroupRing {
    /// Builds `T` with `t = Σ g`, `e = t·x`, and verifies `txt = t`, `e² = e`
    /// and `eT ≅ S_T`.
    pub fn new(action: Arc<RingAction>) -> Result<Self> {
        let witness = action.trace_witness()?;
        let ring = Arc::clone(action.ring());
        let order = action.group().order();
        let trace_element = vec![ring.one(); order];
        let mut t = SkewGroupRing { action, witness, trace_element, idempotent: Vec::new() };
        t.idempotent = t.multiply(&t.trace_element, &t.scalar(witness));
        let txt = t.multiply(&t.idempotent, &t.trace_element);
        if txt != t.trace_element {
            return Err(Error::AxiomViolation("t·x·t differs from t".into()));
        }
        if t.multiply(&t.idempotent, &t.idempotent) != t.idempotent {
            return Err(Error::AxiomViolation("e = t·x is not idempotent".into()));
        }
        t.check_trace_module()?;
        Ok(t)
    }

    pub fn action(&self) -> &Arc<RingAction> {
        &self.action
    }

    pub fn ring(&self) -> &Arc<FiniteCommRing> {
        self.action.ring()
    }

    pub fn witness(&self) -> Elem {
        self.witness
    }

    /// `t = Σ_g g·1`.
    pub fn trace_element(&self) -> &SkewElem {
        &self.trace_element
    }

    /// `e = t·x`.
    pub fn idempotent(&self) -> &SkewElem {
        &self.idempotent
    }

    pub fn zero(&self) -> SkewElem {
        vec![0; self.action.group().order()]
    }

    pub fn one(&self) -> SkewElem {
        self.scalar(self.ring().one())
    }

    /// `1·s`.
    pub fn scalar(&self, s: Elem) -> SkewElem {
        let mut v = self.zero();
        v[0] = s;
        v
    }

    /// `g·s`.
    pub fn basis(&self, g: usize, s: Elem) -> SkewElem {
        let mut v = self.zero();
        v[g] = s;
        v
    }

    pub fn add(&self, u: &SkewElem, v: &SkewElem) -> SkewElem {
        let ring = self.ring();
        u.iter().zip(v).map(|(&a, &b)| ring.add(a, b)).collect()
    }

    /// Bilinear extension of `ga·hb = gh·a^h b`.
    pub fn multiply(&self, u: &SkewElem, v: &SkewElem) -> SkewElem {
        let ring = self.ring();
        let group = self.action.group();
        let mut out = self.zero();
        for (g, &a) in u.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (h, &b) in v.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let gh = group.mul(g, h);
                out[gh] = ring.add(out[gh], ring.mul(self.action.act(h, a), b));
            }
        }
        out
    }

    /// `S` as a right `T`-module: `a·(g b) = a^g b`.
    pub fn act_on_ring(&self, a: Elem, u: &SkewElem) -> Elem {
        let ring = self.ring();
        ring.sum(u.iter().enumerate().map(|(g, &b)| ring.mul(self.action.act(g, a), b)))
    }

    /// `ψ: S_T → eT, s ↦ t·s` is `T`-linear, injective, and onto `eT`.
    pub fn check_trace_module(&self) -> Result<()> {
        let ring = self.ring();
        let group = self.action.group();
        let gens = &ring.additive_basis().generators;
        let psi = |s: Elem| self.multiply(&self.trace_element, &self.scalar(s));
        for &a in gens {
            for g in group.elements() {
                for &b in gens {
                    let u = self.basis(g, b);
                    if psi(self.act_on_ring(a, &u)) != self.multiply(&psi(a), &u) {
                        return Err(Error::AxiomViolation("s ↦ t·s is not T-linear".into()));
                    }
                }
            }
        }
        // injective: the coefficient of the identity of t·s is s
        if ring.elements().any(|s| psi(s)[0] != s) {
            return Err(Error::AxiomViolation("s ↦ t·s is not injective".into()));
        }
        // eT is additively spanned by e·(g·b); compare with the image t·S
        let mut image: Vec<SkewElem> = ring.elements().map(psi).collect();
        image.sort();
        let mut span = vec![self.zero()];
        let mut seen: std::collections::HashSet<SkewElem> = span.iter().cloned().collect();
        let generators: Vec<SkewElem> = group
            .elements()
            .flat_map(|g| gens.iter().map(move |&b| (g, b)))
            .map(|(g, b)| self.multiply(&self.idempotent, &self.basis(g, b)))
            .collect();
        let mut i = 0;
        while i < span.len() {
            for gen in &generators {
                let w = self.add(&span[i], gen);
                if seen.insert(w.clone()) {
                    span.push(w);
                }
            }
            i += 1;
        }
        span.sort();
        if span != image {
            return Err(Error::AxiomViolation("eT differs from t·S".into()));
        }
        Ok(())
    }

    /// `(uv)w = u(vw)` on random triples; returns the first failure.
    pub fn check_associativity(&self, samples: usize, seed: u64) -> Option<[SkewElem; 3]> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let size = self.ring().size() as Elem;
        let n = self.action.group().order();
        let mut random = || (0..n).map(|_| rng.gen_range(0..size)).collect::<SkewElem>();
        (0..samples).find_map(|_| {
            let (u, v, w) = (random(), random(), random());
            let left = self.multiply(&self.multiply(&u, &v), &w);
            let right = self.multiply(&u, &self.multiply(&v, &w));
            (left != right).then(|| [u, v, w])
        })
    }
}

/// `P = (S^n)_d` with `v·(g s) = v^g d(g) s`.
#[derive(Debug)]
pub struct TwistedModule<'a> {
    skew: &'a SkewGroupRing,
    n: usize,
    values: Vec<RingMatrix>,
}

/// An additive subgroup of `S^n`, stored as a membership table over mixed-radix indices.
struct Submodule {
    size: usize,
    n: usize,
    members: Vec<bool>,
    list: Vec<usize>,
    generators: Vec<Vec<Elem>>,
}

impl Submodule {
    fn new(ring: &FiniteCommRing, n: usize) -> Self {
        let total = ring.size().pow(n as u32);
        let mut members = vec![false; total];
        members[0] = true;
        Submodule { size: ring.size(), n, members, list: vec![0], generators: Vec::new() }
    }

    fn encode(&self, v: &[Elem]) -> usize {
        v.iter().rev().fold(0, |acc, &x| acc * self.size + x as usize)
    }

    fn decode(&self, mut idx: usize) -> Vec<Elem> {
        (0..self.n)
            .map(|_| {
                let x = idx % self.size;
                idx /= self.size;
                x as Elem
            })
            .collect()
    }

    fn contains(&self, v: &[Elem]) -> bool {
        self.members[self.encode(v)]
    }

    fn insert_generator(&mut self, ring: &FiniteCommRing, g: Vec<Elem>) {
        if self.contains(&g) {
            return;
        }
        let old = self.list.clone();
        let mut kg = g.clone();
        while !self.contains(&kg) {
            for &m in &old {
                let sum: Vec<Elem> = self.decode(m).iter().zip(&kg).map(|(&a, &b)| ring.add(a, b)).collect();
                let idx = self.encode(&sum);
                if !self.members[idx] {
                    self.members[idx] = true;
                    self.list.push(idx);
                }
            }
            kg = kg.iter().zip(&g).map(|(&a, &b)| ring.add(a, b)).collect();
        }
        self.generators.push(g);
    }

    /// Closes under the additive maps `ops`, which need only be applied to generators.
    fn close(&mut self, ring: &FiniteCommRing, ops: &[&dyn Fn(&[Elem]) -> Vec<Elem>]) {
        let mut i = 0;
        while i < self.generators.len() {
            let g = self.generators[i].clone();
            for op in ops {
                let h = op(&g);
                self.insert_generator(ring, h);
            }
            i += 1;
        }
    }

    fn len(&self) -> usize {
        self.list.len()
    }

    fn is_everything(&self) -> bool {
        self.list.len() == self.members.len()
    }
}

/// Oracle verdicts for one cocycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub pi_equals_p: bool,
    pub fiber_criterion: bool,
    /// Per maximal ideal, in the ring's order.
    pub fibers: Vec<bool>,
    pub span: bool,
    pub pi_size: usize,
    pub fixed_size: usize,
    pub fixed_span_size: usize,
    pub module_size: usize,
}

impl OracleReport {
    pub fn all_agree(&self) -> bool {
        self.pi_equals_p == self.fiber_criterion
    }
}

impl<'a> TwistedModule<'a> {
    /// `values[g] = d(g)`, checked to be a cocycle for the action of `T`.
    pub fn new(skew: &'a SkewGroupRing, values: Vec<RingMatrix>) -> Result<Self> {
        let group = skew.action.group();
        let ring = skew.ring();
        if values.len() != group.order() {
            return Err(Error::InvalidCocycle("one matrix per group element required".into()));
        }
        let n = values[0].dim();
        let module = TwistedModule { skew, n, values };
        // (v·g)·h = v·(gh) on the standard basis is exactly the cocycle identity
        for g in group.elements() {
            for h in group.elements() {
                for i in 0..n {
                    let mut v = vec![0; n];
                    v[i] = ring.one();
                    let lhs = module.act_group(&module.act_group(&v, g), h);
                    let rhs = module.act_group(&v, group.mul(g, h));
                    if lhs != rhs {
                        return Err(Error::InvalidCocycle("values do not define a T-module".into()));
                    }
                }
            }
        }
        Ok(module)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// `v·(g·1) = v^g d(g)`.
    pub fn act_group(&self, v: &[Elem], g: usize) -> Vec<Elem> {
        let ring = self.skew.ring();
        let vg: Vec<Elem> = v.iter().map(|&s| self.skew.action.act(g, s)).collect();
        self.values[g].left_mul_vec(ring, &vg)
    }

    /// `v·u` for `u ∈ T`.
    pub fn act(&self, v: &[Elem], u: &SkewElem) -> Vec<Elem> {
        let ring = self.skew.ring();
        let mut out = vec![0; self.n];
        for (g, &a) in u.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (slot, x) in out.iter_mut().zip(self.act_group(v, g)) {
                *slot = ring.add(*slot, ring.mul(x, a));
            }
        }
        out
    }

    fn scale(&self, v: &[Elem], s: Elem) -> Vec<Elem> {
        let ring = self.skew.ring();
        v.iter().map(|&a| ring.mul(a, s)).collect()
    }

    fn standard_generators(&self) -> Vec<Vec<Elem>> {
        let ring = self.skew.ring();
        let mut out = Vec::new();
        for i in 0..self.n {
            for &b in &ring.additive_basis().generators {
                let mut v = vec![0; self.n];
                v[i] = b;
                out.push(v);
            }
        }
        out
    }

    /// Module-action associativity on random samples.
    pub fn check_associativity(&self, samples: usize, seed: u64) -> bool {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let size = self.skew.ring().size() as Elem;
        let order = self.skew.action.group().order();
        (0..samples).all(|_| {
            let v: Vec<Elem> = (0..self.n).map(|_| rng.gen_range(0..size)).collect();
            let u: SkewElem = (0..order).map(|_| rng.gen_range(0..size)).collect();
            let w: SkewElem = (0..order).map(|_| rng.gen_range(0..size)).collect();
            self.act(&self.act(&v, &u), &w) == self.act(&v, &self.skew.multiply(&u, &w))
        })
    }

    /// `P·I` for `I = TeT`, as the `T`-submodule generated by `P·e`; returns its size.
    fn pi_size(&self) -> (usize, bool) {
        let ring = self.skew.ring();
        let e = &self.skew.idempotent;
        let mut sub = Submodule::new(ring, self.n);
        for v in self.standard_generators() {
            sub.insert_generator(ring, self.act(&v, e));
        }
        let group_ops: Vec<Box<dyn Fn(&[Elem]) -> Vec<Elem>>> = self
            .skew
            .action
            .group()
            .generators()
            .iter()
            .map(|&g| Box::new(move |v: &[Elem]| self.act_group(v, g)) as Box<dyn Fn(&[Elem]) -> Vec<Elem>>)
            .chain(
                ring.additive_basis()
                    .generators
                    .iter()
                    .map(|&s| Box::new(move |v: &[Elem]| self.scale(v, s)) as Box<dyn Fn(&[Elem]) -> Vec<Elem>>),
            )
            .collect();
        let refs: Vec<&dyn Fn(&[Elem]) -> Vec<Elem>> = group_ops.iter().map(|b| b.as_ref()).collect();
        sub.close(ring, &refs);
        (sub.len(), sub.is_everything())
    }

    /// Whether `P·I = P`.
    pub fn pi_equals_p(&self) -> bool {
        self.pi_size().1
    }

    /// `Q = P^G` (generators and size) and whether `Q·S = S^n`.
    pub fn fixed_points(&self) -> FixedPoints {
        let ring = self.skew.ring();
        let gens = self.skew.action.group().generators().to_vec();
        let n = self.n;
        let kernel = additive_kernel(ring, n, gens.len() * n, |v| {
            gens.iter()
                .flat_map(|&g| {
                    let w = self.act_group(v, g);
                    w.into_iter().zip(v).map(|(a, &b)| ring.sub(a, b)).collect::<Vec<_>>()
                })
                .collect()
        });
        let mut q = Submodule::new(ring, n);
        for k in &kernel {
            q.insert_generator(ring, k.clone());
        }
        let size = q.len();
        let scalars: Vec<Box<dyn Fn(&[Elem]) -> Vec<Elem>>> = ring
            .additive_basis()
            .generators
            .iter()
            .map(|&s| Box::new(move |v: &[Elem]| self.scale(v, s)) as Box<dyn Fn(&[Elem]) -> Vec<Elem>>)
            .collect();
        let refs: Vec<&dyn Fn(&[Elem]) -> Vec<Elem>> = scalars.iter().map(|b| b.as_ref()).collect();
        q.close(ring, &refs);
        FixedPoints { generators: kernel, size, span_size: q.len(), spans: q.is_everything() }
    }

    /// For each maximal ideal `𝔐`: do the vectors of `(S/𝔐)^n` fixed by the
    /// decomposition group (under the reduced twisted action) span `(S/𝔐)^n`?
    pub fn fibers(&self) -> Result<Vec<bool>> {
        let act = &self.skew.action;
        let ring = self.skew.ring();
        if ring.is_zero_ring() {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        for (m, data) in ring.maximal_ideals()?.iter().zip(act.inertia_data()) {
            let (field, proj) = ring.quotient(&m.ideal)?;
            let lift = |a: Elem| field.coset_representative(a).expect("quotient ring");
            let n = self.n;
            let gens: Vec<usize> = {
                let (sub, emb) = act.group().subgroup(&data.decomposition)?;
                sub.generators().iter().map(|&g| emb[g]).collect()
            };
            let kernel = additive_kernel(&field, n, gens.len() * n, |v| {
                let lifted: Vec<Elem> = v.iter().map(|&a| lift(a)).collect();
                gens.iter()
                    .flat_map(|&g| {
                        let w = self.act_group(&lifted, g);
                        w.into_iter()
                            .zip(v)
                            .map(|(a, &b)| field.sub(proj[a as usize], b))
                            .collect::<Vec<_>>()
                    })
                    .collect()
            });
            let mut span = Submodule::new(&field, n);
            for k in kernel {
                span.insert_generator(&field, k);
            }
            let f = &field;
            let scalars: Vec<Box<dyn Fn(&[Elem]) -> Vec<Elem>>> = field
                .additive_basis()
                .generators
                .iter()
                .map(|&s| Box::new(move |v: &[Elem]| v.iter().map(|&a| f.mul(a, s)).collect()) as Box<dyn Fn(&[Elem]) -> Vec<Elem>>)
                .collect();
            let refs: Vec<&dyn Fn(&[Elem]) -> Vec<Elem>> = scalars.iter().map(|b| b.as_ref()).collect();
            span.close(&field, &refs);
            out.push(span.is_everything());
        }
        Ok(out)
    }

    /// All oracle verdicts.
    pub fn report(&self) -> Result<OracleReport> {
        let (pi_size, pi_equals_p) = self.pi_size();
        let fibers = self.fibers()?;
        let fixed = self.fixed_points();
        Ok(OracleReport {
            pi_equals_p,
            fiber_criterion: fibers.iter().all(|&b| b),
            fibers,
            span: fixed.spans,
            pi_size,
            fixed_size: fixed.size,
            fixed_span_size: fixed.span_size,
            module_size: self.skew.ring().size().pow(self.n as u32),
        })
    }
}

#[derive(Clone, Debug)]
pub struct FixedPoints {
    pub generators: Vec<Vec<Elem>>,
    pub size: usize,
    pub span_size: usize,
    pub spans: bool,
}

/// The oracle's verdict on whether the class of `d` lies in the kernel of induction.
pub fn kernel_oracle(skew: &SkewGroupRing, values: Vec<RingMatrix>) -> Result<OracleReport> {
    TwistedModule::new(skew, values)?.report()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::ActionRule;
    use crate::group::FiniteGroup;

    fn skew(atoms: &[&str], group: FiniteGroup, rules: &[ActionRule]) -> SkewGroupRing {
        let ring = FiniteCommRing::parse(atoms).unwrap();
        SkewGroupRing::new(RingAction::from_rules(Arc::new(group), ring, rules, true).unwrap()).unwrap()
    }

    fn dual_sign() -> SkewGroupRing {
        let rule = ActionRule::AtomMap { targets: vec![0], images: vec![vec![0, -1]] };
        skew(&["(Z/3)[x]/(x^2)"], FiniteGroup::cyclic(2), &[rule])
    }

    fn scalars(ring: &FiniteCommRing, vals: &[i64]) -> Vec<RingMatrix> {
        vals.iter().map(|&v| RingMatrix::scalar(ring, 1, ring.from_int(v))).collect()
    }

    #[test]
    fn f4_skew_ring() {
        let t = skew(&["(Z/2)[x]/(x^2+x+1)"], FiniteGroup::cyclic(2), &[ActionRule::Frobenius]);
        let r = t.ring();
        let w = r.parse_element("x").unwrap();
        // (σ·ω)(σ·1) = σ²·ω² = 1·ω²
        let prod = t.multiply(&t.basis(1, w), &t.basis(1, r.one()));
        assert_eq!(prod, t.scalar(r.mul(w, w)));
        assert_eq!(t.idempotent(), &vec![w, w]);
        assert!(t.check_associativity(500, 1).is_none());
        let u = t.basis(1, w);
        assert_eq!(t.multiply(&t.one(), &u), u);
        assert_eq!(t.multiply(&u, &t.one()), u);
    }

    #[test]
    fn dual_numbers_oracle() {
        let t = dual_sign();
        let r = Arc::clone(t.ring());
        assert_eq!(t.idempotent(), &vec![r.from_int(2), r.from_int(2)]);
        let unit = kernel_oracle(&t, scalars(&r, &[1, 1])).unwrap();
        assert!(unit.pi_equals_p && unit.fiber_criterion && unit.span);
        assert_eq!(unit.fixed_size, 3);
        let c = kernel_oracle(&t, scalars(&r, &[1, -1])).unwrap();
        assert!(!c.pi_equals_p && !c.fiber_criterion && !c.span);
        assert_eq!(c.pi_size, 3);
        // Q = {b·x} ≅ F_3 and Q·S = (x)
        let p = TwistedModule::new(&t, scalars(&r, &[1, -1])).unwrap();
        let q = p.fixed_points();
        assert_eq!(q.size, 3);
        assert_eq!(q.span_size, 3);
        assert!(p.check_associativity(200, 3));
        // not a cocycle: d(g) = 1 + x has norm (1−x)(1+x) = 1, but d(g)=x is not invertible
        assert!(TwistedModule::new(&t, vec![RingMatrix::scalar(&r, 1, 1), RingMatrix::scalar(&r, 1, r.parse_element("x").unwrap())]).is_err());
    }

    #[test]
    fn trivial_group() {
        let t = skew(&["Z/6"], FiniteGroup::trivial(), &[]);
        assert_eq!(t.idempotent(), &t.one());
        let r = Arc::clone(t.ring());
        let rep = kernel_oracle(&t, vec![RingMatrix::identity(&r, 2)]).unwrap();
        assert!(rep.pi_equals_p && rep.fiber_criterion && rep.span);
    }

    #[test]
    fn galois_fixed_points_are_free() {
        let t = skew(&["(Z/2)[x]/(x^2+x+1)"], FiniteGroup::cyclic(2), &[ActionRule::Frobenius]);
        let r = Arc::clone(t.ring());
        for n in 1..=2 {
            let p = TwistedModule::new(&t, vec![RingMatrix::identity(&r, n); 2]).unwrap();
            let q = p.fixed_points();
            assert!(q.spans);
            assert_eq!(q.size, 2usize.pow(n as u32));
        }
    }
}
