//! Coefficient groups with a right action of `G` by automorphisms.

use std::fmt::Debug;
use std::hash::Hash;
use std::sync::{Arc, OnceLock};

use crate::action::RingAction;
use crate::error::{cap_check, Error, Result};
use crate::group::FiniteGroup;
use crate::ring::{enumerate_general_linear, gl_order, FiniteCommRing, RingMatrix};

/// A finite group `X` with a right `G`-action.
pub trait GGroup {
    type Elem: Clone + Ord + Hash + Debug + Send + Sync;

    fn group(&self) -> &Arc<FiniteGroup>;
    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    /// `x^g`.
    fn act(&self, g: usize, x: &Self::Elem) -> Self::Elem;
    /// `|X|`, possibly without enumerating.
    fn size(&self) -> u128;
    /// All of `X`, sorted; fails when `|X|` exceeds `cap`.
    fn elements(&self, cap: usize) -> Result<&[Self::Elem]>;
    fn designation(&self) -> String;
    fn render(&self, x: &Self::Elem) -> serde_json::Value;
}

fn cached<'a, T>(cell: &'a OnceLock<Vec<T>>, f: impl FnOnce() -> Result<Vec<T>>) -> Result<&'a [T]> {
    if let Some(v) = cell.get() {
        return Ok(v);
    }
    let v = f()?;
    Ok(cell.get_or_init(|| v))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum MatrixKind {
    General,
    Special,
}

/// `GL_n(S)` or `SL_n(S)` with entrywise action; `U(S)` is `GL_1(S)`.
#[derive(Debug)]
pub struct MatrixCoefficients {
    action: Arc<RingAction>,
    n: usize,
    kind: MatrixKind,
    elements: OnceLock<Vec<RingMatrix>>,
}

impl MatrixCoefficients {
    pub fn new(action: Arc<RingAction>, n: usize, kind: MatrixKind) -> Arc<Self> {
        assert!(n >= 1, "matrix level must be positive");
        Arc::new(MatrixCoefficients { action, n, kind, elements: OnceLock::new() })
    }

    pub fn general(action: &Arc<RingAction>, n: usize) -> Arc<Self> {
        Self::new(Arc::clone(action), n, MatrixKind::General)
    }

    pub fn units(action: &Arc<RingAction>) -> Arc<Self> {
        Self::general(action, 1)
    }

    pub fn action(&self) -> &Arc<RingAction> {
        &self.action
    }

    pub fn ring(&self) -> &Arc<FiniteCommRing> {
        self.action.ring()
    }

    pub fn level(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    /// The same coefficients at another level.
    pub fn at_level(&self, n: usize) -> Arc<Self> {
        Self::new(Arc::clone(&self.action), n, self.kind)
    }

    pub fn contains(&self, x: &RingMatrix) -> bool {
        let ring = self.ring();
        x.dim() == self.n
            && match self.kind {
                MatrixKind::General => ring.is_unit(x.det(ring)),
                MatrixKind::Special => x.det(ring) == ring.one(),
            }
    }
}

impl GGroup for MatrixCoefficients {
    type Elem = RingMatrix;

    fn group(&self) -> &Arc<FiniteGroup> {
        self.action.group()
    }

    fn identity(&self) -> RingMatrix {
        RingMatrix::identity(self.ring(), self.n)
    }

    fn mul(&self, a: &RingMatrix, b: &RingMatrix) -> RingMatrix {
        a.mul(self.ring(), b)
    }

    fn inv(&self, a: &RingMatrix) -> RingMatrix {
        a.inverse(self.ring()).expect("coefficient is invertible")
    }

    fn act(&self, g: usize, x: &RingMatrix) -> RingMatrix {
        x.map(|s| self.action.act(g, s))
    }

    fn size(&self) -> u128 {
        let gl = gl_order(self.ring(), self.n);
        match self.kind {
            MatrixKind::General => gl,
            // det: GL_n → U is onto with kernel SL_n
            MatrixKind::Special => gl / self.ring().units().len().max(1) as u128,
        }
    }

    fn elements(&self, cap: usize) -> Result<&[RingMatrix]> {
        cached(&self.elements, || {
            let all = enumerate_general_linear(self.ring(), self.n, cap)?;
            Ok(match self.kind {
                MatrixKind::General => all,
                MatrixKind::Special => {
                    let ring = self.ring();
                    all.into_iter().filter(|m| m.det(ring) == ring.one()).collect()
                }
            })
        })
    }

    fn designation(&self) -> String {
        let name = self.ring().name();
        match (self.kind, self.n) {
            (MatrixKind::General, 1) => format!("U({name})"),
            (MatrixKind::General, n) => format!("GL_{n}({name})"),
            (MatrixKind::Special, n) => format!("SL_{n}({name})"),
        }
    }

    fn render(&self, x: &RingMatrix) -> serde_json::Value {
        if self.n == 1 {
            serde_json::Value::String(self.ring().display(x.get(0, 0)))
        } else {
            serde_json::json!(x.display(self.ring()))
        }
    }
}

/// A finite group `X` given by a table, with `G` acting through explicit permutations.
#[derive(Debug)]
pub struct AbstractCoefficients {
    group: Arc<FiniteGroup>,
    x: Arc<FiniteGroup>,
    /// `maps[g][x] = x^g`.
    maps: Vec<Vec<usize>>,
    name: String,
    elements: Vec<usize>,
}

impl AbstractCoefficients {
    /// Validates that each `g` acts by an automorphism and that the action is a right action.
    pub fn new(group: Arc<FiniteGroup>, x: Arc<FiniteGroup>, maps: Vec<Vec<usize>>, name: impl Into<String>) -> Result<Arc<Self>> {
        if maps.len() != group.order() {
            return Err(Error::InvalidAction("one automorphism per group element required".into()));
        }
        for (g, m) in maps.iter().enumerate() {
            let mut seen = vec![false; x.order()];
            if m.len() != x.order() || m.iter().any(|&y| y >= x.order() || std::mem::replace(&mut seen[y], true)) {
                return Err(Error::InvalidAction(format!("element {g} does not permute X")));
            }
            for a in x.elements() {
                for b in x.elements() {
                    if m[x.mul(a, b)] != x.mul(m[a], m[b]) {
                        return Err(Error::InvalidAction(format!("element {g} is not an automorphism of X")));
                    }
                }
            }
        }
        for a in group.elements() {
            for b in group.elements() {
                let ab = group.mul(a, b);
                if x.elements().any(|y| maps[ab][y] != maps[b][maps[a][y]]) {
                    return Err(Error::InvalidAction("assignment is not a homomorphism".into()));
                }
            }
        }
        let elements = x.elements().collect();
        Ok(Arc::new(AbstractCoefficients { group, x, maps, name: name.into(), elements }))
    }

    /// `G` acting trivially.
    pub fn trivial(group: Arc<FiniteGroup>, x: Arc<FiniteGroup>, name: impl Into<String>) -> Arc<Self> {
        let maps = vec![x.elements().collect(); group.order()];
        Self::new(group, x, maps, name).expect("trivial action")
    }

    /// Per-generator automorphisms extended to `G`.
    pub fn from_generators(
        group: Arc<FiniteGroup>,
        x: Arc<FiniteGroup>,
        generator_maps: Vec<Vec<usize>>,
        name: impl Into<String>,
    ) -> Result<Arc<Self>> {
        let gens = group.generators().to_vec();
        if generator_maps.len() != gens.len() {
            return Err(Error::InvalidAction("one automorphism per generator required".into()));
        }
        let mut maps: Vec<Option<Vec<usize>>> = vec![None; group.order()];
        maps[0] = Some(x.elements().collect());
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(a) = queue.pop_front() {
            for (i, &g) in gens.iter().enumerate() {
                let b = group.mul(a, g);
                if maps[b].is_none() {
                    let m = maps[a].as_ref().unwrap().iter().map(|&y| generator_maps[i][y]).collect();
                    maps[b] = Some(m);
                    queue.push_back(b);
                }
            }
        }
        Self::new(group, x, maps.into_iter().map(Option::unwrap).collect(), name)
    }

    pub fn x(&self) -> &Arc<FiniteGroup> {
        &self.x
    }

    /// `X × X` with the diagonal action.
    pub fn square(&self) -> Arc<Self> {
        let xx = Arc::new(FiniteGroup::direct_product(&self.x, &self.x));
        let k = self.x.order();
        let maps = self
            .maps
            .iter()
            .map(|m| (0..k * k).map(|p| m[p / k] * k + m[p % k]).collect())
            .collect();
        Self::new(Arc::clone(&self.group), xx, maps, format!("{}^2", self.name)).expect("diagonal action")
    }
}

impl GGroup for AbstractCoefficients {
    type Elem = usize;

    fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    fn identity(&self) -> usize {
        0
    }

    fn mul(&self, a: &usize, b: &usize) -> usize {
        self.x.mul(*a, *b)
    }

    fn inv(&self, a: &usize) -> usize {
        self.x.inv(*a)
    }

    fn act(&self, g: usize, x: &usize) -> usize {
        self.maps[g][*x]
    }

    fn size(&self) -> u128 {
        self.x.order() as u128
    }

    fn elements(&self, cap: usize) -> Result<&[usize]> {
        cap_check(format!("|{}|", self.name), self.size(), cap as u128)?;
        Ok(&self.elements)
    }

    fn designation(&self) -> String {
        self.name.clone()
    }

    fn render(&self, x: &usize) -> serde_json::Value {
        serde_json::Value::String(self.x.label(*x).to_string())
    }
}

/// `X^N` as a `G/N`-group, for `N ⊴ G`.
#[derive(Debug)]
pub struct FixedCoefficients<'a, C: GGroup> {
    inner: &'a C,
    quotient: Arc<FiniteGroup>,
    /// Least element of each coset of `N`.
    coset_reps: Vec<usize>,
    projection: Vec<usize>,
    fixed: Vec<C::Elem>,
}

impl<'a, C: GGroup> FixedCoefficients<'a, C> {
    pub fn new(inner: &'a C, normal: &[usize], cap: usize) -> Result<Self> {
        let g = inner.group();
        let (quotient, projection) = g.quotient(normal)?;
        let mut coset_reps = vec![usize::MAX; quotient.order()];
        for a in g.elements().rev() {
            coset_reps[projection[a]] = a;
        }
        let fixed = inner
            .elements(cap)?
            .iter()
            .filter(|x| normal.iter().all(|&h| &inner.act(h, x) == *x))
            .cloned()
            .collect();
        Ok(FixedCoefficients { inner, quotient: Arc::new(quotient), coset_reps, projection, fixed })
    }

    pub fn projection(&self) -> &[usize] {
        &self.projection
    }

    pub fn contains(&self, x: &C::Elem) -> bool {
        self.fixed.binary_search(x).is_ok()
    }
}

impl<C: GGroup> GGroup for FixedCoefficients<'_, C> {
    type Elem = C::Elem;

    fn group(&self) -> &Arc<FiniteGroup> {
        &self.quotient
    }

    fn identity(&self) -> C::Elem {
        self.inner.identity()
    }

    fn mul(&self, a: &C::Elem, b: &C::Elem) -> C::Elem {
        self.inner.mul(a, b)
    }

    fn inv(&self, a: &C::Elem) -> C::Elem {
        self.inner.inv(a)
    }

    fn act(&self, g: usize, x: &C::Elem) -> C::Elem {
        self.inner.act(self.coset_reps[g], x)
    }

    fn size(&self) -> u128 {
        self.fixed.len() as u128
    }

    fn elements(&self, cap: usize) -> Result<&[C::Elem]> {
        cap_check("|X^N|", self.size(), cap as u128)?;
        Ok(&self.fixed)
    }

    fn designation(&self) -> String {
        format!("{}^N", self.inner.designation())
    }

    fn render(&self, x: &C::Elem) -> serde_json::Value {
        self.inner.render(x)
    }
}

/// `X` as an `H`-group for a subgroup `H` (relabelled, see [`FiniteGroup::subgroup`]).
#[derive(Debug)]
pub struct RestrictedCoefficients<'a, C: GGroup> {
    inner: &'a C,
    sub: Arc<FiniteGroup>,
    embedding: Vec<usize>,
}

impl<'a, C: GGroup> RestrictedCoefficients<'a, C> {
    pub fn new(inner: &'a C, h: &[usize]) -> Result<Self> {
        let (sub, embedding) = inner.group().subgroup(h)?;
        Ok(RestrictedCoefficients { inner, sub: Arc::new(sub), embedding })
    }

    pub fn embedding(&self) -> &[usize] {
        &self.embedding
    }
}

impl<C: GGroup> GGroup for RestrictedCoefficients<'_, C> {
    type Elem = C::Elem;

    fn group(&self) -> &Arc<FiniteGroup> {
        &self.sub
    }

    fn identity(&self) -> C::Elem {
        self.inner.identity()
    }

    fn mul(&self, a: &C::Elem, b: &C::Elem) -> C::Elem {
        self.inner.mul(a, b)
    }

    fn inv(&self, a: &C::Elem) -> C::Elem {
        self.inner.inv(a)
    }

    fn act(&self, g: usize, x: &C::Elem) -> C::Elem {
        self.inner.act(self.embedding[g], x)
    }

    fn size(&self) -> u128 {
        self.inner.size()
    }

    fn elements(&self, cap: usize) -> Result<&[C::Elem]> {
        self.inner.elements(cap)
    }

    fn designation(&self) -> String {
        self.inner.designation()
    }

    fn render(&self, x: &C::Elem) -> serde_json::Value {
        self.inner.render(x)
    }
}
