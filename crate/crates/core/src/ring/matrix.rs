//! Square matrices over a finite commutative ring.

use super::{Elem, FiniteCommRing};
use crate::error::{cap_check, Error, Result};

/// An `n × n` matrix of ring elements in row-major order. The ring is passed
/// explicitly to every operation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingMatrix {
    n: usize,
    entries: Vec<Elem>,
}

impl RingMatrix {
    pub fn new(n: usize, entries: Vec<Elem>) -> Self {
        assert_eq!(entries.len(), n * n, "matrix entry count");
        RingMatrix { n, entries }
    }

    pub fn identity(ring: &FiniteCommRing, n: usize) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = ring.one();
        }
        RingMatrix { n, entries }
    }

    pub fn scalar(ring: &FiniteCommRing, n: usize, s: Elem) -> Self {
        let mut m = Self::identity(ring, n);
        for i in 0..n {
            m.entries[i * n + i] = s;
        }
        m
    }

    pub fn diagonal(ring: &FiniteCommRing, diag: &[Elem]) -> Self {
        let n = diag.len();
        let mut m = Self::identity(ring, n);
        for (i, &d) in diag.iter().enumerate() {
            m.entries[i * n + i] = d;
        }
        m
    }

    pub fn parse(ring: &FiniteCommRing, rows: &[Vec<&str>]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::Mismatch("matrix is not square".into()));
            }
            for e in row {
                entries.push(ring.parse_element(e)?);
            }
        }
        Ok(RingMatrix { n, entries })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.entries[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.entries[i * self.n + j] = v;
    }

    pub fn is_identity(&self, ring: &FiniteCommRing) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| self.get(i, j) == if i == j { ring.one() } else { 0 })
        })
    }

    pub fn map(&self, f: impl Fn(Elem) -> Elem) -> RingMatrix {
        RingMatrix { n: self.n, entries: self.entries.iter().map(|&e| f(e)).collect() }
    }

    pub fn mul(&self, ring: &FiniteCommRing, other: &RingMatrix) -> RingMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = other.entries[k * n + j];
                    if b != 0 {
                        out[i * n + j] = ring.add(out[i * n + j], ring.mul(a, b));
                    }
                }
            }
        }
        RingMatrix { n, entries: out }
    }

    pub fn add(&self, ring: &FiniteCommRing, other: &RingMatrix) -> RingMatrix {
        RingMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(&a, &b)| ring.add(a, b)).collect(),
        }
    }

    pub fn sub(&self, ring: &FiniteCommRing, other: &RingMatrix) -> RingMatrix {
        RingMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(&a, &b)| ring.sub(a, b)).collect(),
        }
    }

    /// Row vector times matrix.
    pub fn left_mul_vec(&self, ring: &FiniteCommRing, v: &[Elem]) -> Vec<Elem> {
        (0..self.n)
            .map(|j| ring.sum((0..self.n).map(|i| ring.mul(v[i], self.get(i, j)))))
            .collect()
    }

    /// `diag(self, other)`.
    pub fn block_diag(&self, other: &RingMatrix) -> RingMatrix {
        let n = self.n + other.n;
        let mut out = vec![0; n * n];
        for i in 0..self.n {
            for j in 0..self.n {
                out[i * n + j] = self.get(i, j);
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                out[(self.n + i) * n + self.n + j] = other.get(i, j);
            }
        }
        RingMatrix { n, entries: out }
    }

    /// `diag(self, 1, ..., 1)` of size `level`.
    pub fn pad(&self, ring: &FiniteCommRing, level: usize) -> RingMatrix {
        assert!(level >= self.n);
        self.block_diag(&RingMatrix::identity(ring, level - self.n))
    }

    fn minor(&self, row: usize, col: usize) -> RingMatrix {
        let n = self.n;
        let mut entries = Vec::with_capacity((n - 1) * (n - 1));
        for i in 0..n {
            if i == row {
                continue;
            }
            for j in 0..n {
                if j != col {
                    entries.push(self.get(i, j));
                }
            }
        }
        RingMatrix { n: n - 1, entries }
    }

    /// Cofactor expansion for `n ≤ 4`, the division-free Berkowitz recursion above.
    pub fn det(&self, ring: &FiniteCommRing) -> Elem {
        match self.n {
            0 => ring.one(),
            1 => self.entries[0],
            2 => ring.sub(
                ring.mul(self.entries[0], self.entries[3]),
                ring.mul(self.entries[1], self.entries[2]),
            ),
            3 | 4 => {
                let mut acc = 0;
                for j in 0..self.n {
                    let a = self.get(0, j);
                    if a == 0 {
                        continue;
                    }
                    let term = ring.mul(a, self.minor(0, j).det(ring));
                    acc = if j % 2 == 0 { ring.add(acc, term) } else { ring.sub(acc, term) };
                }
                acc
            }
            _ => berkowitz_det(ring, self),
        }
    }

    pub fn adjugate(&self, ring: &FiniteCommRing) -> RingMatrix {
        let n = self.n;
        if n == 1 {
            return RingMatrix::identity(ring, 1);
        }
        let mut out = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                let c = self.minor(i, j).det(ring);
                // adj[j][i] = (-1)^{i+j} det(minor(i, j))
                out[j * n + i] = if (i + j) % 2 == 0 { c } else { ring.neg(c) };
            }
        }
        RingMatrix { n, entries: out }
    }

    /// Inverse via the adjugate, failing when the determinant is not a unit.
    pub fn inverse(&self, ring: &FiniteCommRing) -> Result<RingMatrix> {
        let det = self.det(ring);
        let inv = ring
            .inv(det)
            .ok_or_else(|| Error::NotInvertible { n: self.n, det: ring.display(det) })?;
        let out = self.adjugate(ring).map(|e| ring.mul(e, inv));
        debug_assert!(self.mul(ring, &out).is_identity(ring));
        Ok(out)
    }

    pub fn display(&self, ring: &FiniteCommRing) -> Vec<Vec<String>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| ring.display(self.get(i, j))).collect())
            .collect()
    }
}

/// Division-free determinant (characteristic polynomial via Toeplitz products).
fn berkowitz_det(ring: &FiniteCommRing, a: &RingMatrix) -> Elem {
    let n = a.dim();
    // coefficients of the characteristic polynomial of the leading k×k block,
    // highest degree first
    let mut poly = vec![ring.one()];
    for k in 0..n {
        // block A_k = [[M, c], [r, a_kk]] with M the leading k×k block
        let akk = a.get(k, k);
        let col: Vec<Elem> = (0..k).map(|i| a.get(i, k)).collect();
        let row: Vec<Elem> = (0..k).map(|j| a.get(k, j)).collect();
        // t = [1, -a_kk, -r c, -r M c, ..., -r M^{k-2} c]
        let mut t = vec![ring.one(), ring.neg(akk)];
        let mut v = col.clone();
        for _ in 0..k {
            let rv = ring.sum(row.iter().zip(&v).map(|(&x, &y)| ring.mul(x, y)));
            t.push(ring.neg(rv));
            v = (0..k).map(|i| ring.sum((0..k).map(|j| ring.mul(a.get(i, j), v[j])))).collect();
        }
        // new poly = T · poly, T lower-triangular Toeplitz (k+2)×(k+1)
        let mut next = vec![0; k + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            let mut acc = 0;
            for (j, &p) in poly.iter().enumerate() {
                if i >= j {
                    acc = ring.add(acc, ring.mul(t[i - j], p));
                }
            }
            *slot = acc;
        }
        poly = next;
    }
    let c = poly[n];
    if n % 2 == 0 {
        c
    } else {
        ring.neg(c)
    }
}

fn gl_order_field(q: u128, n: u32) -> u128 {
    let qn = q.pow(n);
    (0..n).map(|i| qn - q.pow(i)).product()
}

/// Exact `|GL_n(S)| = |rad S|^{n²} · ∏_𝔐 |GL_n(S/𝔐)|`.
pub fn gl_order(ring: &FiniteCommRing, n: usize) -> u128 {
    if ring.is_zero_ring() {
        return 1;
    }
    let nil = ring.nilradical().len() as u128;
    let mut total = nil.saturating_pow((n * n) as u32);
    for m in ring.maximal_ideals().expect("nonzero ring") {
        total = total.saturating_mul(gl_order_field(m.residue_field_size as u128, n as u32));
    }
    total
}

/// All of `GL_n(S)` in lexicographic order of entries.
pub fn enumerate_general_linear(ring: &FiniteCommRing, n: usize, cap: usize) -> Result<Vec<RingMatrix>> {
    let count = gl_order(ring, n);
    cap_check(format!("|GL_{n}({})|", ring.name()), count, cap as u128)?;
    let size = ring.size() as u64;
    let cells = n * n;
    let total = (size as u128).saturating_pow(cells as u32);
    // the scan visits all of M_n(S); bound it as well
    cap_check(format!("|M_{n}({})|", ring.name()), total, (cap as u128).saturating_mul(64))?;
    let mut out = Vec::with_capacity(count as usize);
    let mut entries = vec![0 as Elem; cells];
    loop {
        let m = RingMatrix { n, entries: entries.clone() };
        if ring.is_unit(m.det(ring)) {
            out.push(m);
        }
        // odometer, last entry fastest
        let mut pos = cells;
        loop {
            if pos == 0 {
                debug_assert_eq!(out.len() as u128, count);
                return Ok(out);
            }
            pos -= 1;
            entries[pos] += 1;
            if (entries[pos] as u64) < size {
                break;
            }
            entries[pos] = 0;
        }
    }
}
