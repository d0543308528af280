//! Finitely generated abelian groups presented by integer relations.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::smith::{integer_kernel, smith_normal_form, IntMatrix, SmithForm};

/// `Z^free_rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k` with `d_1 | d_2 | ... | d_k`, each `d_i ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FinAbGroup {
    pub invariant_factors: Vec<u64>,
    pub free_rank: usize,
}

impl FinAbGroup {
    pub fn trivial() -> Self {
        FinAbGroup { invariant_factors: Vec::new(), free_rank: 0 }
    }

    pub fn cyclic(d: u64) -> Self {
        if d == 1 {
            Self::trivial()
        } else {
            FinAbGroup { invariant_factors: vec![d], free_rank: 0 }
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty() && self.free_rank == 0
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn order(&self) -> Option<u64> {
        self.is_finite().then(|| self.invariant_factors.iter().product())
    }

    /// Least common multiple of the invariant factors (1 for the trivial group).
    pub fn exponent(&self) -> Option<u64> {
        self.is_finite().then(|| self.invariant_factors.last().copied().unwrap_or(1))
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = self.invariant_factors.iter().map(u64::to_string).collect();
        if self.free_rank > 0 {
            write!(f, "Z^{} + ", self.free_rank)?;
        }
        write!(f, "({})", factors.join(", "))
    }
}

/// The cokernel `Z^k / im(R)` of a relation matrix, with coordinates.
#[derive(Clone, Debug)]
pub struct AbelianPresentation {
    smith: SmithForm,
    /// Indices of the SNF components that survive (diagonal entry ≠ 1).
    kept: Vec<usize>,
    /// Modulus per kept component; zero for free components.
    moduli: Vec<BigInt>,
    ambient: usize,
}

impl AbelianPresentation {
    /// `relations` is `k × m`: each column is a relation among `k` generators.
    pub fn from_relations(relations: &IntMatrix) -> Self {
        let smith = smith_normal_form(relations);
        let k = relations.rows();
        let mut kept = Vec::new();
        let mut moduli = Vec::new();
        for i in 0..k {
            let d = if i < smith.rank { smith.d[(i, i)].clone() } else { BigInt::zero() };
            if !d.is_one() {
                kept.push(i);
                moduli.push(d);
            }
        }
        AbelianPresentation { smith, kept, moduli, ambient: k }
    }

    pub fn group(&self) -> FinAbGroup {
        let mut factors = Vec::new();
        let mut free = 0;
        for m in &self.moduli {
            if m.is_zero() {
                free += 1;
            } else {
                factors.push(m.to_u64().expect("invariant factor exceeds u64"));
            }
        }
        FinAbGroup { invariant_factors: factors, free_rank: free }
    }

    pub fn moduli(&self) -> &[BigInt] {
        &self.moduli
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    /// Normal-form coordinates of the image of `c ∈ Z^k`.
    pub fn coords(&self, c: &[BigInt]) -> Vec<BigInt> {
        let uc = self.smith.u.mul_vec(c);
        self.kept
            .iter()
            .zip(&self.moduli)
            .map(|(&i, m)| if m.is_zero() { uc[i].clone() } else { uc[i].mod_floor(m) })
            .collect()
    }

    /// A preimage in `Z^k` of the `i`-th normal-form generator.
    pub fn generator(&self, i: usize) -> Vec<BigInt> {
        self.smith.u_inv.column(self.kept[i])
    }

    /// Preimage in `Z^k` of a normal-form coordinate tuple.
    pub fn lift(&self, coords: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.ambient];
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, g) in out.iter_mut().zip(self.generator(i)) {
                *o += c * g;
            }
        }
        out
    }

    /// Every element of a finite presentation, in lexicographic coordinate order.
    pub fn elements(&self) -> Option<Vec<Vec<BigInt>>> {
        if self.moduli.iter().any(Zero::is_zero) {
            return None;
        }
        let mut out = vec![Vec::new()];
        for m in &self.moduli {
            let bound = m.to_u64()?;
            let mut next = Vec::with_capacity(out.len() * bound as usize);
            for prefix in &out {
                for v in 0..bound {
                    let mut p = prefix.clone();
                    p.push(BigInt::from(v));
                    next.push(p);
                }
            }
            out = next;
        }
        Some(out)
    }
}

/// Quotient `L / B` of a lattice `L ⊆ Z^N` (given by a basis) by a sublattice
/// `B ⊆ L` (given by generators).
#[derive(Clone, Debug)]
pub struct LatticeQuotient {
    basis: IntMatrix,
    basis_smith: SmithForm,
    presentation: AbelianPresentation,
}

impl LatticeQuotient {
    pub fn new(ambient: usize, basis: &[Vec<BigInt>], sub: &[Vec<BigInt>]) -> Self {
        let basis_m = IntMatrix::from_columns(ambient, basis);
        let basis_smith = smith_normal_form(&basis_m);
        let k = basis.len();
        let rel_cols: Vec<Vec<BigInt>> = sub
            .iter()
            .map(|b| {
                basis_smith
                    .solve(b)
                    .expect("sublattice generator outside the lattice")
            })
            .collect();
        let relations = if rel_cols.is_empty() {
            IntMatrix::zeros(k, 0)
        } else {
            IntMatrix::from_columns(k, &rel_cols)
        };
        LatticeQuotient {
            basis: basis_m,
            basis_smith,
            presentation: AbelianPresentation::from_relations(&relations),
        }
    }

    pub fn group(&self) -> FinAbGroup {
        self.presentation.group()
    }

    pub fn presentation(&self) -> &AbelianPresentation {
        &self.presentation
    }

    /// Coordinates of `x ∈ L` in the quotient; `None` when `x ∉ L`.
    pub fn coords(&self, x: &[BigInt]) -> Option<Vec<BigInt>> {
        let c = self.basis_smith.solve(x)?;
        Some(self.presentation.coords(&c))
    }

    /// Representative in `Z^N` of the `i`-th generator of the quotient.
    pub fn generator(&self, i: usize) -> Vec<BigInt> {
        self.basis.mul_vec(&self.presentation.generator(i))
    }

    pub fn lift(&self, coords: &[BigInt]) -> Vec<BigInt> {
        self.basis.mul_vec(&self.presentation.lift(coords))
    }
}

/// Kernel of the homomorphism `⊕ Z/a_i → ⊕ Z/b_j` whose `i`-th column is the
/// image of the `i`-th generator. Zero moduli denote free summands. Returns
/// generators of the kernel as coordinate vectors of the source.
pub fn hom_kernel(
    images: &[Vec<BigInt>],
    source_moduli: &[BigInt],
    target_moduli: &[BigInt],
) -> Vec<Vec<BigInt>> {
    let k = source_moduli.len();
    let t = target_moduli.len();
    let mut m = IntMatrix::zeros(t, k + t);
    for (i, col) in images.iter().enumerate() {
        assert_eq!(col.len(), t);
        for (j, v) in col.iter().enumerate() {
            m[(j, i)] = v.clone();
        }
    }
    for (j, b) in target_moduli.iter().enumerate() {
        m[(j, k + j)] = b.clone();
    }
    let mut gens: Vec<Vec<BigInt>> = integer_kernel(&m)
        .into_iter()
        .map(|v| {
            v[..k]
                .iter()
                .zip(source_moduli)
                .map(|(x, a)| if a.is_zero() { x.clone() } else { x.mod_floor(a) })
                .collect::<Vec<BigInt>>()
        })
        .filter(|v: &Vec<BigInt>| v.iter().any(|x| !x.is_zero()))
        .collect();
    gens.sort();
    gens.dedup();
    gens
}

/// Structure of the subgroup of `⊕ Z/a_i` generated by `gens`.
pub fn subgroup_structure(gens: &[Vec<BigInt>], moduli: &[BigInt]) -> FinAbGroup {
    if gens.is_empty() {
        return FinAbGroup::trivial();
    }
    let k = moduli.len();
    let s = gens.len();
    let mut m = IntMatrix::zeros(k, s + k);
    for (c, g) in gens.iter().enumerate() {
        for (r, v) in g.iter().enumerate() {
            m[(r, c)] = v.clone();
        }
    }
    for (r, a) in moduli.iter().enumerate() {
        m[(r, s + r)] = a.clone();
    }
    let rel_cols: Vec<Vec<BigInt>> =
        integer_kernel(&m).into_iter().map(|v| v[..s].to_vec()).collect();
    let rel = if rel_cols.is_empty() {
        IntMatrix::zeros(s, 0)
    } else {
        IntMatrix::from_columns(s, &rel_cols)
    };
    AbelianPresentation::from_relations(&rel).group()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn cokernel_of_two_z() {
        let p = AbelianPresentation::from_relations(&IntMatrix::from_rows(&[vec![2]]));
        assert_eq!(p.group(), FinAbGroup::cyclic(2));
        assert_eq!(p.coords(&bi(&[3])), bi(&[1]));
    }

    #[test]
    fn lattice_quotient_coords() {
        // L = Z^2, B = <(2,0),(0,3)>  → Z/6
        let q = LatticeQuotient::new(
            2,
            &[bi(&[1, 0]), bi(&[0, 1])],
            &[bi(&[2, 0]), bi(&[0, 3])],
        );
        assert_eq!(q.group(), FinAbGroup::cyclic(6));
        assert_eq!(q.coords(&bi(&[2, 3])).unwrap(), bi(&[0]));
        let g = q.generator(0);
        assert_ne!(q.coords(&g).unwrap(), bi(&[0]));
    }

    #[test]
    fn kernel_of_doubling_on_z4() {
        // x ↦ 2x on Z/4 → Z/4: kernel {0, 2}
        let ker = hom_kernel(&[bi(&[2])], &bi(&[4]), &bi(&[4]));
        assert_eq!(subgroup_structure(&ker, &bi(&[4])), FinAbGroup::cyclic(2));
    }

    #[test]
    fn subgroup_of_z2_z4() {
        let s = subgroup_structure(&[bi(&[1, 2])], &bi(&[2, 4]));
        assert_eq!(s, FinAbGroup::cyclic(2));
        let all = subgroup_structure(&[bi(&[1, 0]), bi(&[0, 1])], &bi(&[2, 4]));
        assert_eq!(all.invariant_factors, vec![2, 4]);
    }
}
