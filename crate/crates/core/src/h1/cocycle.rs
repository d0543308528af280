//! Cocycles, twisted conjugation and orbit partitions for any [`GGroup`].

use std::collections::HashMap;

use super::ggroup::GGroup;
use crate::error::{Error, Result};

/// A value table `g ↦ d(g)` indexed by group element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cocycle<E> {
    values: Vec<E>,
}

impl<E: Clone> Cocycle<E> {
    /// Wraps a value table without checking the cocycle identity.
    pub fn from_values_unchecked(values: Vec<E>) -> Self {
        Cocycle { values }
    }

    pub fn values(&self) -> &[E] {
        &self.values
    }

    pub fn value(&self, g: usize) -> &E {
        &self.values[g]
    }

    pub fn into_values(self) -> Vec<E> {
        self.values
    }

    /// Entrywise image under a map of coefficients.
    pub fn map<F: Clone>(&self, f: impl Fn(&E) -> F) -> Cocycle<F> {
        Cocycle { values: self.values.iter().map(f).collect() }
    }
}

/// `d(gh) = d(g)^h d(h)` for all pairs.
pub fn is_cocycle<C: GGroup>(c: &C, values: &[C::Elem]) -> bool {
    let g = c.group();
    values.len() == g.order()
        && g.elements().all(|a| {
            g.elements().all(|b| values[g.mul(a, b)] == c.mul(&c.act(b, &values[a]), &values[b]))
        })
}

pub fn cocycle<C: GGroup>(c: &C, values: Vec<C::Elem>) -> Result<Cocycle<C::Elem>> {
    if !is_cocycle(c, &values) {
        return Err(Error::InvalidCocycle(format!("values {values:?} violate d(gh) = d(g)^h d(h)")));
    }
    Ok(Cocycle { values })
}

pub fn unit_cocycle<C: GGroup>(c: &C) -> Cocycle<C::Elem> {
    Cocycle { values: vec![c.identity(); c.group().order()] }
}

/// Extends values on some generators to the subgroup they generate via
/// `d(xg) = d(x)^g d(g)`, or `None` on an inconsistency.
fn propagate<C: GGroup>(c: &C, assigned: &[(usize, C::Elem)]) -> Option<Vec<Option<C::Elem>>> {
    let g = c.group();
    let mut table: Vec<Option<C::Elem>> = vec![None; g.order()];
    table[0] = Some(c.identity());
    let mut stack = vec![0usize];
    while let Some(x) = stack.pop() {
        let dx = table[x].clone().unwrap();
        for (s, ds) in assigned {
            let y = g.mul(x, *s);
            let v = c.mul(&c.act(*s, &dx), ds);
            match &table[y] {
                Some(w) if *w != v => return None,
                Some(_) => {}
                None => {
                    table[y] = Some(v);
                    stack.push(y);
                }
            }
        }
    }
    Some(table)
}

/// Values `x` with `x^{g^{m-1}} ⋯ x^g x = 1`, where `m` is the order of `g`.
fn satisfies_norm<C: GGroup>(c: &C, g: usize, x: &C::Elem) -> bool {
    let m = c.group().element_order(g);
    let mut acc = x.clone();
    for _ in 1..m {
        acc = c.mul(&c.act(g, &acc), x);
    }
    acc == c.identity()
}

/// All of `Z^1(G, X)`, sorted, by backtracking over generator values.
pub fn enumerate_cocycles<C: GGroup>(c: &C, cap: usize) -> Result<Vec<Cocycle<C::Elem>>> {
    let xs = c.elements(cap)?;
    let gens = c.group().generators().to_vec();
    let candidates: Vec<Vec<C::Elem>> =
        gens.iter().map(|&g| xs.iter().filter(|x| satisfies_norm(c, g, x)).cloned().collect()).collect();
    let mut out = Vec::new();
    let mut assigned: Vec<(usize, C::Elem)> = Vec::with_capacity(gens.len());
    fn recurse<C: GGroup>(
        c: &C,
        gens: &[usize],
        candidates: &[Vec<C::Elem>],
        assigned: &mut Vec<(usize, C::Elem)>,
        out: &mut Vec<Cocycle<C::Elem>>,
    ) {
        let i = assigned.len();
        if i == gens.len() {
            let table = propagate(c, assigned).expect("checked on the last assignment");
            out.push(Cocycle { values: table.into_iter().map(Option::unwrap).collect() });
            return;
        }
        for x in &candidates[i] {
            assigned.push((gens[i], x.clone()));
            if propagate(c, assigned).is_some() {
                recurse(c, gens, candidates, assigned, out);
            }
            assigned.pop();
        }
    }
    recurse(c, &gens, &candidates, &mut assigned, &mut out);
    out.sort();
    debug_assert!(out.iter().all(|d| is_cocycle(c, &d.values)));
    Ok(out)
}

/// `Z^1` for `G = ⟨g⟩` via the norm condition; each `x` is expanded to
/// `d(g^k) = x^{g^{k-1}} ⋯ x^g x`.
pub fn cocycles_cyclic<C: GGroup>(c: &C, g: usize, cap: usize) -> Result<Vec<Cocycle<C::Elem>>> {
    let grp = c.group();
    let m = grp.element_order(g);
    if m != grp.order() {
        return Err(Error::InvalidGroup(format!("{} does not generate the group", grp.label(g))));
    }
    let mut out: Vec<Cocycle<C::Elem>> = c
        .elements(cap)?
        .iter()
        .filter(|x| satisfies_norm(c, g, x))
        .map(|x| {
            let mut values = vec![c.identity(); m];
            let (mut power, mut acc) = (0usize, c.identity());
            for _ in 0..m {
                values[power] = acc.clone();
                acc = c.mul(&c.act(g, &acc), x);
                power = grp.mul(power, g);
            }
            Cocycle { values }
        })
        .collect();
    out.sort();
    Ok(out)
}

/// `g ↦ x^g d(g) x⁻¹`.
pub fn twist<C: GGroup>(c: &C, x: &C::Elem, d: &Cocycle<C::Elem>) -> Cocycle<C::Elem> {
    let xi = c.inv(x);
    Cocycle {
        values: d.values.iter().enumerate().map(|(g, v)| c.mul(&c.mul(&c.act(g, x), v), &xi)).collect(),
    }
}

/// The least `x` with `d = x·e` (twisted), by scanning `X`.
pub fn cohomologous_exhaustive<C: GGroup>(
    c: &C,
    d: &Cocycle<C::Elem>,
    e: &Cocycle<C::Elem>,
    cap: usize,
) -> Result<Option<C::Elem>> {
    if d == e {
        return Ok(Some(c.identity()));
    }
    let gens = c.group().generators();
    // the relation holds on all of G once it holds on generators
    Ok(c.elements(cap)?
        .iter()
        .find(|x| gens.iter().all(|&g| d.values[g] == c.mul(&c.mul(&c.act(g, x), &e.values[g]), &c.inv(x))))
        .cloned())
}

/// Lexicographically least element of the twisted-conjugation orbit.
pub fn canonical_representative<C: GGroup>(c: &C, d: &Cocycle<C::Elem>, cap: usize) -> Result<Cocycle<C::Elem>> {
    Ok(c.elements(cap)?.iter().map(|x| twist(c, x, d)).min().expect("X is nonempty"))
}

/// One orbit of `Z^1` under twisted conjugation.
#[derive(Clone, Debug)]
pub struct ClassData<E> {
    /// The least cocycle of the orbit.
    pub representative: Cocycle<E>,
    pub orbit_size: usize,
    pub neutral: bool,
}

/// `H^1(G, X)`: the orbit partition of `Z^1`, ordered by representative.
pub fn h1<C: GGroup>(c: &C, cap: usize) -> Result<(Vec<ClassData<C::Elem>>, usize)> {
    let cocycles = enumerate_cocycles(c, cap)?;
    Ok((partition(c, &cocycles, cap)?, cocycles.len()))
}

/// Orbit partition of a sorted, twisted-conjugation-stable set of cocycles.
pub fn partition<C: GGroup>(c: &C, cocycles: &[Cocycle<C::Elem>], cap: usize) -> Result<Vec<ClassData<C::Elem>>> {
    let xs = c.elements(cap)?;
    let unit = unit_cocycle(c);
    let index: HashMap<&Cocycle<C::Elem>, usize> = cocycles.iter().enumerate().map(|(i, d)| (d, i)).collect();
    let mut seen = vec![false; cocycles.len()];
    let mut classes = Vec::new();
    for (i, d) in cocycles.iter().enumerate() {
        if seen[i] {
            continue;
        }
        // processing in sorted order makes `d` the least element of its orbit
        let mut size = 0;
        let mut neutral = false;
        for x in xs {
            let t = twist(c, x, d);
            let j = *index
                .get(&t)
                .ok_or_else(|| Error::InvalidCocycle("cocycle set is not closed under twisting".into()))?;
            if !seen[j] {
                seen[j] = true;
                size += 1;
                neutral |= t == unit;
            }
        }
        classes.push(ClassData { representative: d.clone(), orbit_size: size, neutral });
    }
    Ok(classes)
}

/// Restriction of a value table to a subgroup given by its embedding.
pub fn restrict_values<E: Clone>(d: &Cocycle<E>, embedding: &[usize]) -> Cocycle<E> {
    Cocycle { values: embedding.iter().map(|&g| d.values[g].clone()).collect() }
}

/// Inflation along a projection `G → G/N`.
pub fn inflate_values<E: Clone>(d: &Cocycle<E>, projection: &[usize]) -> Cocycle<E> {
    Cocycle { values: projection.iter().map(|&q| d.values[q].clone()).collect() }
}
