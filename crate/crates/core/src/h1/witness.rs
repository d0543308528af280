//! Twisted-conjugacy witnesses in `GL_n(S)` by solving an additive linear system.
//!
//! `d(g) = x^g e(g) x⁻¹` is equivalent to `d(g)·x = x^g·e(g)`, which is additive
//! in `x`. The solution group `K ⊆ M_n(S)` is computed with Smith normal form;
//! `x ∈ K` is invertible iff its reduction modulo the nilradical is, so the
//! search runs over the (much smaller) image of `K` in `M_n(S/rad S)`.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::cocycle::{cohomologous_exhaustive, Cocycle};
use super::ggroup::{GGroup, MatrixCoefficients, MatrixKind};
use crate::error::Result;
use crate::ring::{additive_kernel, Elem, RingMatrix};

/// Number of random kernel elements tried once the reduced span exceeds the cap.
const SAMPLES: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Found(RingMatrix),
    /// Exhaustively ruled out.
    Absent,
    /// The reduced solution space exceeded the cap and sampling found nothing.
    Inconclusive,
}

impl Witness {
    pub fn found(&self) -> Option<&RingMatrix> {
        match self {
            Witness::Found(x) => Some(x),
            _ => None,
        }
    }
}

fn satisfies(c: &MatrixCoefficients, d: &Cocycle<RingMatrix>, e: &Cocycle<RingMatrix>, x: &RingMatrix) -> bool {
    c.contains(x)
        && c.group()
            .generators()
            .iter()
            .all(|&g| c.mul(d.value(g), x) == c.mul(&c.act(g, x), e.value(g)))
}

/// Some `x ∈ X` with `d(g) = x^g e(g) x⁻¹`, trying `hints` first.
pub fn find_witness(
    c: &MatrixCoefficients,
    d: &Cocycle<RingMatrix>,
    e: &Cocycle<RingMatrix>,
    hints: &[RingMatrix],
    cap: usize,
) -> Result<Witness> {
    if d == e {
        return Ok(Witness::Found(c.identity()));
    }
    if let Some(x) = hints.iter().find(|x| x.dim() == c.level() && satisfies(c, d, e, x)) {
        return Ok(Witness::Found(x.clone()));
    }
    if c.kind() == MatrixKind::Special {
        return Ok(match cohomologous_exhaustive(c, d, e, cap)? {
            Some(x) => Witness::Found(x),
            None => Witness::Absent,
        });
    }
    let ring = c.ring();
    let n = c.level();
    let cells = n * n;
    let gens = c.group().generators().to_vec();
    let to_matrix = |v: &[Elem]| RingMatrix::new(n, v.to_vec());
    let kernel = additive_kernel(ring, cells, gens.len() * cells, |v| {
        let x = to_matrix(v);
        let mut out = Vec::with_capacity(gens.len() * cells);
        for &g in &gens {
            let diff = c.mul(d.value(g), &x).sub(ring, &c.mul(&c.act(g, &x), e.value(g)));
            out.extend_from_slice(diff.entries());
        }
        out
    });

    // reduce modulo the nilradical
    let nil = ring.nilradical();
    let (field, proj): (_, Vec<Elem>) = if nil.is_zero_ideal() {
        (std::sync::Arc::clone(ring), ring.elements().collect())
    } else {
        ring.quotient(nil)?
    };
    let reduce = |v: &[Elem]| -> Vec<Elem> { v.iter().map(|&s| proj[s as usize]).collect() };
    let invertible = |v: &[Elem]| field.is_unit(RingMatrix::new(n, v.to_vec()).det(&field));
    let reduced: Vec<Vec<Elem>> = kernel.iter().map(|k| reduce(k)).collect();

    // breadth-first enumeration of the reduced span, remembering a lift of each element
    let zero = vec![0 as Elem; cells];
    let mut lifts: HashMap<Vec<Elem>, Vec<Elem>> = HashMap::from([(zero.clone(), zero.clone())]);
    let mut frontier = vec![zero];
    let mut exhausted = true;
    let mut best: Option<RingMatrix> = None;
    'bfs: while let Some(v) = frontier.pop() {
        for (k, kr) in kernel.iter().zip(&reduced) {
            let w: Vec<Elem> = v.iter().zip(kr).map(|(&a, &b)| field.add(a, b)).collect();
            if lifts.contains_key(&w) {
                continue;
            }
            let lift: Vec<Elem> = lifts[&v].iter().zip(k).map(|(&a, &b)| ring.add(a, b)).collect();
            if invertible(&w) {
                let x = to_matrix(&lift);
                // least witness among those seen, for reproducibility
                if best.as_ref().is_none_or(|b| x < *b) {
                    best = Some(x);
                }
            }
            lifts.insert(w.clone(), lift);
            frontier.push(w);
            if lifts.len() > cap {
                exhausted = false;
                break 'bfs;
            }
        }
    }
    if let Some(x) = best {
        debug_assert!(satisfies(c, d, e, &x));
        return Ok(Witness::Found(x));
    }
    if exhausted {
        return Ok(Witness::Absent);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x77_1717);
    let ch = ring.characteristic();
    for _ in 0..SAMPLES {
        let mut lift = vec![0 as Elem; cells];
        for k in &kernel {
            let coeff = num_bigint::BigInt::from(rng.gen_range(0..ch));
            for (slot, &a) in lift.iter_mut().zip(k) {
                *slot = ring.add(*slot, ring.mul_int(a, &coeff));
            }
        }
        if invertible(&reduce(&lift)) {
            return Ok(Witness::Found(to_matrix(&lift)));
        }
    }
    Ok(Witness::Inconclusive)
}
