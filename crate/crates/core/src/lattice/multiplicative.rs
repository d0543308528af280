//! Finite groups acting on `Z^r` through integer matrices: abelian `H^1`,
//! coinvariants, and the Picard group of multiplicative invariants.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::abelian::{hom_kernel, subgroup_structure, AbelianPresentation, FinAbGroup, LatticeQuotient};
use super::smith::{integer_kernel, IntMatrix};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Largest matrix group accepted when closing generators.
pub const MAX_LATTICE_GROUP: usize = 1024;

type Mat = Vec<Vec<i64>>;

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let r = a.len();
    (0..r)
        .map(|i| (0..r).map(|j| (0..r).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

fn identity(r: usize) -> Mat {
    (0..r).map(|i| (0..r).map(|j| (i == j) as i64).collect()).collect()
}

fn det(a: &Mat) -> i64 {
    // exact over Z via Bareiss
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut m: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| m[i][k] != 0) else { return 0 };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    (sign * m[n - 1][n - 1]) as i64
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// `G` acting on row vectors of `Z^r` on the right: `a ↦ a·M_g`, `M_{gh} = M_g M_h`.
#[derive(Clone, Debug)]
pub struct LatticeAction {
    rank: usize,
    group: Arc<FiniteGroup>,
    matrices: Vec<Mat>,
}

impl LatticeAction {
    /// The matrix group generated by `generators`, labelled in breadth-first order.
    pub fn from_generators(rank: usize, generators: &[Mat]) -> Result<Self> {
        for m in generators {
            if m.len() != rank || m.iter().any(|row| row.len() != rank) {
                return Err(Error::InvalidGroup(format!("generator is not {rank}×{rank}")));
            }
            if det(m).abs() != 1 {
                return Err(Error::InvalidGroup(format!("generator {m:?} is not in GL_{rank}(Z)")));
            }
        }
        let mut elements = vec![identity(rank)];
        let mut index: HashMap<Mat, usize> = HashMap::from([(identity(rank), 0)]);
        let mut i = 0;
        while i < elements.len() {
            for g in generators {
                let p = mat_mul(&elements[i], g);
                if !index.contains_key(&p) {
                    if elements.len() >= MAX_LATTICE_GROUP {
                        return Err(Error::InvalidGroup("generated matrix group is too large or infinite".into()));
                    }
                    index.insert(p.clone(), elements.len());
                    elements.push(p);
                }
            }
            i += 1;
        }
        let n = elements.len();
        let table: Vec<Vec<usize>> =
            (0..n).map(|a| (0..n).map(|b| index[&mat_mul(&elements[a], &elements[b])]).collect()).collect();
        let mut gens: Vec<usize> = generators.iter().map(|g| index[g]).filter(|&g| g != 0).collect();
        gens.dedup();
        let labels = (0..n).map(|i| format!("M{i}")).collect();
        let group = FiniteGroup::from_table(table, gens, Some(labels))?;
        Ok(LatticeAction { rank, group: Arc::new(group), matrices: elements })
    }

    /// Explicit matrices for every element of `group`, validated.
    pub fn new(rank: usize, group: Arc<FiniteGroup>, matrices: Vec<Mat>) -> Result<Self> {
        if matrices.len() != group.order() || matrices[0] != identity(rank) {
            return Err(Error::InvalidAction("one matrix per element, identity first".into()));
        }
        for a in group.elements() {
            if det(&matrices[a]).abs() != 1 {
                return Err(Error::InvalidAction("matrix not in GL_r(Z)".into()));
            }
            for b in group.elements() {
                if mat_mul(&matrices[a], &matrices[b]) != matrices[group.mul(a, b)] {
                    return Err(Error::InvalidAction("M_g M_h differs from M_gh".into()));
                }
            }
        }
        Ok(LatticeAction { rank, group, matrices })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn matrix(&self, g: usize) -> &Mat {
        &self.matrices[g]
    }

    /// `a·M_g`.
    pub fn act(&self, g: usize, a: &[BigInt]) -> Vec<BigInt> {
        let m = &self.matrices[g];
        (0..self.rank)
            .map(|j| a.iter().enumerate().map(|(i, x)| x * m[i][j]).sum())
            .collect()
    }

    /// The action of a subgroup, relabelled.
    pub fn restrict(&self, h: &[usize]) -> Result<(LatticeAction, Vec<usize>)> {
        let (sub, embedding) = self.group.subgroup(h)?;
        let matrices = embedding.iter().map(|&g| self.matrices[g].clone()).collect();
        Ok((LatticeAction { rank: self.rank, group: Arc::new(sub), matrices }, embedding))
    }
}

/// `H^1(G, A)` with its cocycle-level presentation.
#[derive(Clone, Debug)]
pub struct LatticeH1 {
    /// `Z^1 / B^1` inside `Z^{|G|·r}` (cocycle `d` stored as `d(0) ‖ d(1) ‖ …`).
    pub quotient: LatticeQuotient,
    pub group: FinAbGroup,
}

impl LatticeH1 {
    /// Cocycle representing the `i`-th generator.
    pub fn generator_cocycle(&self, i: usize) -> Vec<BigInt> {
        self.quotient.generator(i)
    }
}

/// `Z^1` as the integer kernel of the cocycle identity, `B^1` from the basis
/// coboundaries, and `H^1 = Z^1/B^1`.
pub fn h1_lattice(act: &LatticeAction) -> LatticeH1 {
    let g = &act.group;
    let (n, r) = (g.order(), act.rank);
    let unknowns = n * r;
    let mut checks: Vec<usize> = g.generators().to_vec();
    checks.push(0);
    let mut rows = Vec::new();
    // d(gh) − d(g)·M_h − d(h) = 0
    for a in g.elements() {
        for &h in &checks {
            let m = &act.matrices[h];
            let ah = g.mul(a, h);
            for j in 0..r {
                let mut row = vec![0i64; unknowns];
                row[ah * r + j] += 1;
                for i in 0..r {
                    row[a * r + i] -= m[i][j];
                }
                row[h * r + j] -= 1;
                rows.push(row);
            }
        }
    }
    let z1 = integer_kernel(&IntMatrix::from_rows(&rows));
    let b1: Vec<Vec<BigInt>> = (0..r)
        .map(|i| {
            let mut e = vec![BigInt::zero(); r];
            e[i] = BigInt::from(1);
            g.elements()
                .flat_map(|x| {
                    let moved = act.act(x, &e);
                    moved.into_iter().zip(&e).map(|(a, b)| a - b).collect::<Vec<_>>()
                })
                .collect()
        })
        .collect();
    let quotient = LatticeQuotient::new(unknowns, &z1, &b1);
    let group = quotient.group();
    debug_assert!(group.is_finite());
    LatticeH1 { quotient, group }
}

/// `|G|` kills every class (checked on the generators).
pub fn annihilated_by_order(h: &LatticeH1, order: usize) -> bool {
    (0..h.group.invariant_factors.len()).all(|i| {
        let scaled: Vec<BigInt> = h.quotient.generator(i).iter().map(|x| x * order).collect();
        h.quotient.coords(&scaled).is_some_and(|c| c.iter().all(Zero::is_zero))
    })
}

/// `ker(N_c) / im(M_c − 1)` for `N_c = Σ_{i<m} M_c^i`.
pub fn h1_cyclic_lattice(act: &LatticeAction, c: usize) -> LatticeQuotient {
    let r = act.rank;
    let m = act.group.element_order(c);
    let mc = &act.matrices[c];
    let mut norm = vec![vec![0i64; r]; r];
    let mut power = identity(r);
    for _ in 0..m {
        for i in 0..r {
            for j in 0..r {
                norm[i][j] += power[i][j];
            }
        }
        power = mat_mul(&power, mc);
    }
    // row vectors a with a·N = 0 are the kernel of N^T
    let nt: Mat = (0..r).map(|i| (0..r).map(|j| norm[j][i]).collect()).collect();
    let kernel = integer_kernel(&IntMatrix::from_rows(&nt));
    let image: Vec<Vec<BigInt>> = (0..r)
        .map(|i| big(&(0..r).map(|j| mc[i][j] - (i == j) as i64).collect::<Vec<_>>()))
        .collect();
    LatticeQuotient::new(r, &kernel, &image)
}

/// Coinvariants `A_H = A/[A, H]` and the torsion check.
#[derive(Clone, Debug, Serialize)]
pub struct Coinvariants {
    pub group: FinAbGroup,
    /// Least `e` with `exponent(torsion) | |H|^e`, if any.
    pub torsion_power: Option<u32>,
    pub subgroup_order: usize,
}

pub fn coinvariants_presentation(act: &LatticeAction, h: &[usize]) -> AbelianPresentation {
    let r = act.rank;
    let mut cols = Vec::new();
    for &x in h {
        let m = &act.matrices[x];
        for i in 0..r {
            cols.push(big(&(0..r).map(|j| m[i][j] - (i == j) as i64).collect::<Vec<_>>()));
        }
    }
    let rel = if cols.is_empty() { IntMatrix::zeros(r, 0) } else { IntMatrix::from_columns(r, &cols) };
    AbelianPresentation::from_relations(&rel)
}

pub fn coinvariants(act: &LatticeAction, h: &[usize]) -> Coinvariants {
    let group = coinvariants_presentation(act, h).group();
    let exponent = group.invariant_factors.last().copied().unwrap_or(1);
    let torsion_power = torsion_power(exponent, h.len() as u64);
    Coinvariants { group, torsion_power, subgroup_order: h.len() }
}

/// `Pic(R) = ⋂_C ker(Res: H^1(G, A) → H^1(C, A))` over cyclic `C`.
#[derive(Clone, Debug)]
pub struct Picard {
    pub group: FinAbGroup,
    /// Cocycles (in `Z^{|G|·r}`) generating the subgroup.
    pub generators: Vec<Vec<BigInt>>,
}

/// Least `e` with `exponent | order^e`.
fn torsion_power(mut exponent: u64, order: u64) -> Option<u32> {
    let mut e = 0;
    while exponent > 1 {
        let g = num_integer::gcd(exponent, order);
        if g == 1 {
            return None;
        }
        exponent /= g;
        e += 1;
    }
    Some(e)
}

pub fn pic_multiplicative(act: &LatticeAction) -> Result<Picard> {
    let h = h1_lattice(act);
    let pres = h.quotient.presentation();
    let moduli = pres.moduli().to_vec();
    if moduli.is_empty() {
        return Ok(Picard { group: FinAbGroup::trivial(), generators: Vec::new() });
    }
    let r = act.rank;
    let mut images: Vec<Vec<BigInt>> = vec![Vec::new(); moduli.len()];
    let mut target_moduli = Vec::new();
    for c in act.group.cyclic_subgroups() {
        let (sub, embedding) = act.restrict(&c)?;
        let hc = h1_lattice(&sub);
        let cm = hc.quotient.presentation().moduli().to_vec();
        for (i, img) in images.iter_mut().enumerate() {
            let cocycle = h.quotient.generator(i);
            let restricted: Vec<BigInt> =
                embedding.iter().flat_map(|&g| cocycle[g * r..(g + 1) * r].to_vec()).collect();
            let coords = hc.quotient.coords(&restricted).expect("restriction of a cocycle is a cocycle");
            img.extend(coords);
        }
        target_moduli.extend(cm);
    }
    let kernel = hom_kernel(&images, &moduli, &target_moduli);
    let group = subgroup_structure(&kernel, &moduli);
    let generators = kernel.iter().map(|k| h.quotient.lift(k)).collect();
    Ok(Picard { group, generators })
}

/// Injectivity of `H^1(C, A) → H^1(C, A_C) = Hom(C, A_C)` for `C = ⟨c⟩`,
/// checked by enumerating the (finite) source.
pub fn mono_check(act: &LatticeAction, c: usize) -> bool {
    let h = h1_cyclic_lattice(act, c);
    let cyclic = act.group.cyclic_subgroup(c);
    let target = coinvariants_presentation(act, &cyclic);
    let elements = h.presentation().elements().expect("H^1 of a finite group is finite");
    elements.iter().all(|coords| {
        // the class of d with d(c) = a maps to the homomorphism c ↦ [a]
        let a = h.lift(coords);
        let image_zero = target.coords(&a).iter().all(Zero::is_zero);
        let source_zero = coords.iter().all(Zero::is_zero);
        image_zero == source_zero
    })
}
