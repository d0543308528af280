//! Finite commutative rings presented as products of `(Z/m)[x]/(f)`, and their quotients.
//!
//! Elements are indices `0..size`. For a presented ring the index is the
//! mixed-radix encoding of the coefficient tuple (first atom, constant term
//! most significant), so the numeric order of indices is the lexicographic
//! order on coefficient tuples. For a quotient ring, cosets are numbered in
//! the order of their least representative.

mod additive;
pub mod descriptor;
mod ideal;
pub mod matrix;

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use additive::{additive_kernel, AdditiveBasis};
pub use descriptor::AtomSpec;
pub use ideal::{Ideal, MaximalIdeal};
pub use matrix::{enumerate_general_linear, gl_order, RingMatrix};

use crate::error::{Error, Result};

pub type Elem = u32;

pub const DEFAULT_SIZE_BOUND: usize = 65536;
const TABLE_LIMIT: usize = 1024;
const EXHAUSTIVE_AXIOM_LIMIT: usize = 256;

#[derive(Clone, Debug)]
struct Atom {
    modulus: u32,
    /// Monic modulus polynomial, constant term first, length `deg + 1`.
    poly: Vec<u32>,
}

impl Atom {
    fn degree(&self) -> usize {
        self.poly.len() - 1
    }
}

enum Repr {
    Presented {
        atoms: Vec<Atom>,
        digit_moduli: Vec<u32>,
        weights: Vec<u32>,
    },
    Quotient {
        parent: Arc<FiniteCommRing>,
        reps: Vec<Elem>,
        proj: Vec<Elem>,
    },
}

pub struct FiniteCommRing {
    repr: Repr,
    size: usize,
    one: Elem,
    characteristic: u64,
    add_table: Option<Vec<Elem>>,
    mul_table: Option<Vec<Elem>>,
    neg_table: Vec<Elem>,
    name: String,
    inverses: OnceLock<Vec<Option<Elem>>>,
    additive: OnceLock<AdditiveBasis>,
    nil: OnceLock<Ideal>,
    maximal: OnceLock<Vec<MaximalIdeal>>,
}

impl fmt::Debug for FiniteCommRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteCommRing({}, size {})", self.name, self.size)
    }
}

impl FiniteCommRing {
    /// Builds `∏ (Z/m_i)[x]/(f_i)` and verifies the ring axioms.
    pub fn build(atoms: &[AtomSpec], bound: usize) -> Result<Arc<Self>> {
        let mut out = Vec::with_capacity(atoms.len());
        let mut size: u128 = 1;
        for spec in atoms {
            if spec.modulus < 2 {
                return Err(Error::BadModulus(spec.modulus));
            }
            let m = spec.modulus;
            let mut poly: Vec<u32> = spec
                .poly
                .iter()
                .map(|&c| c.rem_euclid(m as i64) as u32)
                .collect();
            while poly.len() > 1 && *poly.last().unwrap() == 0 {
                poly.pop();
            }
            if poly.len() < 2 || *poly.last().unwrap() != 1 {
                return Err(Error::NotMonic(spec.to_string()));
            }
            size = size.saturating_mul((m as u128).saturating_pow((poly.len() - 1) as u32));
            if size > bound as u128 {
                return Err(Error::RingTooLarge { size, bound });
            }
            out.push(Atom { modulus: m as u32, poly });
        }
        let mut digit_moduli = Vec::new();
        for a in &out {
            digit_moduli.extend(std::iter::repeat_n(a.modulus, a.degree()));
        }
        let mut weights = vec![1u32; digit_moduli.len()];
        for i in (0..digit_moduli.len().saturating_sub(1)).rev() {
            weights[i] = weights[i + 1] * digit_moduli[i + 1];
        }
        let name = if atoms.is_empty() {
            "0".to_string()
        } else {
            atoms.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" x ")
        };
        let ring = Self::assemble(
            Repr::Presented { atoms: out, digit_moduli, weights },
            size as usize,
            name,
        );
        ring.verify_axioms()?;
        Ok(Arc::new(ring))
    }

    pub fn parse(atoms: &[&str]) -> Result<Arc<Self>> {
        let specs = atoms.iter().map(|a| AtomSpec::parse(a)).collect::<Result<Vec<_>>>()?;
        Self::build(&specs, DEFAULT_SIZE_BOUND)
    }

    /// The zero ring, in which `1 = 0`.
    pub fn zero_ring() -> Arc<Self> {
        Self::build(&[], DEFAULT_SIZE_BOUND).expect("zero ring")
    }

    fn assemble(repr: Repr, size: usize, name: String) -> Self {
        let mut ring = FiniteCommRing {
            repr,
            size,
            one: 0,
            characteristic: 1,
            add_table: None,
            mul_table: None,
            neg_table: Vec::new(),
            name,
            inverses: OnceLock::new(),
            additive: OnceLock::new(),
            nil: OnceLock::new(),
            maximal: OnceLock::new(),
        };
        ring.one = ring.raw_one();
        ring.neg_table = (0..size as Elem).map(|a| ring.raw_neg(a)).collect();
        if size <= TABLE_LIMIT {
            let mut add = Vec::with_capacity(size * size);
            let mut mul = Vec::with_capacity(size * size);
            for a in 0..size as Elem {
                for b in 0..size as Elem {
                    add.push(ring.raw_add(a, b));
                    mul.push(ring.raw_mul(a, b));
                }
            }
            ring.add_table = Some(add);
            ring.mul_table = Some(mul);
        }
        let mut ch = 1u64;
        let mut acc = ring.one;
        while acc != 0 {
            acc = ring.add(acc, ring.one);
            ch += 1;
        }
        ring.characteristic = ch;
        ring
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_zero_ring(&self) -> bool {
        self.size == 1
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    /// Additive order of `1`.
    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.size as Elem
    }

    /// The parent ring and projection, when this ring is a quotient.
    pub fn quotient_parent(&self) -> Option<(&Arc<FiniteCommRing>, &[Elem])> {
        match &self.repr {
            Repr::Quotient { parent, proj, .. } => Some((parent, proj)),
            Repr::Presented { .. } => None,
        }
    }

    // -- raw arithmetic -----------------------------------------------------

    fn digits(&self, a: Elem) -> Vec<u32> {
        match &self.repr {
            Repr::Presented { digit_moduli, weights, .. } => digit_moduli
                .iter()
                .zip(weights)
                .map(|(&m, &w)| (a / w) % m)
                .collect(),
            Repr::Quotient { .. } => unreachable!("digits of a quotient element"),
        }
    }

    fn from_digits(&self, d: &[u32]) -> Elem {
        match &self.repr {
            Repr::Presented { weights, .. } => d.iter().zip(weights).map(|(&x, &w)| x * w).sum(),
            Repr::Quotient { .. } => unreachable!(),
        }
    }

    fn raw_one(&self) -> Elem {
        match &self.repr {
            Repr::Presented { atoms, .. } => {
                let mut d = Vec::new();
                for a in atoms {
                    let mut part = vec![0u32; a.degree()];
                    part[0] = 1 % a.modulus;
                    d.extend(part);
                }
                self.from_digits(&d)
            }
            Repr::Quotient { parent, proj, .. } => proj[parent.one() as usize],
        }
    }

    fn raw_add(&self, a: Elem, b: Elem) -> Elem {
        match &self.repr {
            Repr::Presented { digit_moduli, .. } => {
                let (da, db) = (self.digits(a), self.digits(b));
                let d: Vec<u32> = da
                    .iter()
                    .zip(&db)
                    .zip(digit_moduli)
                    .map(|((&x, &y), &m)| (x + y) % m)
                    .collect();
                self.from_digits(&d)
            }
            Repr::Quotient { parent, reps, proj } => {
                proj[parent.add(reps[a as usize], reps[b as usize]) as usize]
            }
        }
    }

    fn raw_neg(&self, a: Elem) -> Elem {
        match &self.repr {
            Repr::Presented { digit_moduli, .. } => {
                let d: Vec<u32> = self
                    .digits(a)
                    .iter()
                    .zip(digit_moduli)
                    .map(|(&x, &m)| (m - x) % m)
                    .collect();
                self.from_digits(&d)
            }
            Repr::Quotient { parent, reps, proj } => proj[parent.neg(reps[a as usize]) as usize],
        }
    }

    fn raw_mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.repr {
            Repr::Presented { atoms, .. } => {
                let (da, db) = (self.digits(a), self.digits(b));
                let mut out = Vec::with_capacity(da.len());
                let mut off = 0;
                for atom in atoms {
                    let d = atom.degree();
                    out.extend(poly_mul_mod(&da[off..off + d], &db[off..off + d], atom));
                    off += d;
                }
                self.from_digits(&out)
            }
            Repr::Quotient { parent, reps, proj } => {
                proj[parent.mul(reps[a as usize], reps[b as usize]) as usize]
            }
        }
    }

    // -- public arithmetic --------------------------------------------------

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.add_table {
            Some(t) => t[a as usize * self.size + b as usize],
            None => self.raw_add(a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.mul_table {
            Some(t) => t[a as usize * self.size + b as usize],
            None => self.raw_mul(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg_table[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = self.one;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `c · a` for an integer `c`.
    pub fn mul_int(&self, a: Elem, c: &BigInt) -> Elem {
        let k = c.mod_floor(&BigInt::from(self.characteristic)).to_u64().unwrap();
        let mut base = a;
        let mut acc = 0;
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn from_int(&self, c: i64) -> Elem {
        self.mul_int(self.one, &BigInt::from(c))
    }

    pub fn sum<I: IntoIterator<Item = Elem>>(&self, items: I) -> Elem {
        items.into_iter().fold(0, |acc, x| self.add(acc, x))
    }

    fn inverse_table(&self) -> &Vec<Option<Elem>> {
        self.inverses.get_or_init(|| {
            let mut inv = vec![None; self.size];
            if self.mul_table.is_some() {
                for a in self.elements() {
                    if inv[a as usize].is_some() {
                        continue;
                    }
                    if let Some(b) = self.elements().find(|&b| self.mul(a, b) == self.one) {
                        inv[a as usize] = Some(b);
                        inv[b as usize] = Some(a);
                    }
                }
            } else {
                for a in self.elements() {
                    // units have finite multiplicative order dividing |U(S)| < |S|
                    let mut p = a;
                    let mut prev = self.one;
                    for _ in 0..self.size {
                        if p == self.one {
                            inv[a as usize] = Some(prev);
                            break;
                        }
                        if p == 0 {
                            break;
                        }
                        prev = p;
                        p = self.mul(p, a);
                    }
                }
            }
            inv
        })
    }

    pub fn inv(&self, a: Elem) -> Option<Elem> {
        self.inverse_table()[a as usize]
    }

    pub fn is_unit(&self, a: Elem) -> bool {
        self.inv(a).is_some()
    }

    /// All units, in canonical order.
    pub fn units(&self) -> Vec<Elem> {
        self.elements().filter(|&a| self.is_unit(a)).collect()
    }

    pub fn is_nilpotent(&self, a: Elem) -> bool {
        self.pow(a, self.size as u64) == 0
    }

    pub fn additive_basis(&self) -> &AdditiveBasis {
        self.additive.get_or_init(|| AdditiveBasis::compute(self))
    }

    // -- axioms -------------------------------------------------------------

    fn verify_axioms(&self) -> Result<()> {
        let fail = |what: &str, xs: &[Elem]| {
            Err(Error::AxiomViolation(format!(
                "{what} fails at {:?} in {}",
                xs.iter().map(|&x| self.display(x)).collect::<Vec<_>>(),
                self.name
            )))
        };
        if self.size > 1 && self.one == 0 {
            return fail("1 != 0", &[]);
        }
        let triples: Vec<[Elem; 3]> = if self.size <= EXHAUSTIVE_AXIOM_LIMIT {
            let n = self.size as Elem;
            let mut v = Vec::with_capacity(self.size.pow(3));
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        v.push([a, b, c]);
                    }
                }
            }
            v
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            (0..20_000)
                .map(|_| {
                    let n = self.size as Elem;
                    [rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)]
                })
                .collect()
        };
        for &[a, b, c] in &triples {
            if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                return fail("additive associativity", &[a, b, c]);
            }
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return fail("multiplicative associativity", &[a, b, c]);
            }
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                return fail("distributivity", &[a, b, c]);
            }
            if c == 0 {
                if self.add(a, b) != self.add(b, a) {
                    return fail("additive commutativity", &[a, b]);
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return fail("commutativity", &[a, b]);
                }
            }
            if b == 0 && c == 0 {
                if self.add(a, 0) != a || self.add(a, self.neg(a)) != 0 {
                    return fail("additive identity/inverse", &[a]);
                }
                if self.mul(a, self.one) != a {
                    return fail("multiplicative identity", &[a]);
                }
            }
        }
        Ok(())
    }

    // -- notation -----------------------------------------------------------

    /// Canonical notation: a polynomial in `x` per atom, parenthesised for products;
    /// cosets of a quotient as `[rep]`.
    pub fn display(&self, a: Elem) -> String {
        match &self.repr {
            Repr::Presented { atoms, .. } => {
                if atoms.is_empty() {
                    return "0".into();
                }
                let d = self.digits(a);
                let mut off = 0;
                let parts: Vec<String> = atoms
                    .iter()
                    .map(|atom| {
                        let s = descriptor::format_poly(&d[off..off + atom.degree()]);
                        off += atom.degree();
                        s
                    })
                    .collect();
                if parts.len() == 1 {
                    parts.into_iter().next().unwrap()
                } else {
                    format!("({})", parts.join(","))
                }
            }
            Repr::Quotient { parent, reps, .. } => format!("[{}]", parent.display(reps[a as usize])),
        }
    }

    /// Parses the notation produced by [`display`](Self::display); polynomials
    /// of any degree and with negative coefficients are reduced.
    pub fn parse_element(&self, text: &str) -> Result<Elem> {
        let t = text.trim();
        match &self.repr {
            Repr::Presented { atoms, .. } => {
                if atoms.is_empty() {
                    return Ok(0);
                }
                let parts: Vec<&str> = if atoms.len() == 1 {
                    vec![t.strip_prefix('(').and_then(|s| s.strip_suffix(')')).unwrap_or(t)]
                } else {
                    t.strip_prefix('(')
                        .and_then(|s| s.strip_suffix(')'))
                        .ok_or_else(|| Error::Parse {
                            line: 1,
                            column: 1,
                            message: format!("expected ({} components) in {t:?}", atoms.len()),
                        })?
                        .split(',')
                        .collect()
                };
                if parts.len() != atoms.len() {
                    return Err(Error::Parse {
                        line: 1,
                        column: 1,
                        message: format!("{t:?} has {} components, ring has {}", parts.len(), atoms.len()),
                    });
                }
                let mut digits = Vec::new();
                for (atom, p) in atoms.iter().zip(parts) {
                    let coeffs = descriptor::parse_poly(p)?;
                    digits.extend(reduce_poly(&coeffs, atom));
                }
                Ok(self.from_digits(&digits))
            }
            Repr::Quotient { parent, proj, .. } => {
                let inner = t.strip_prefix('[').and_then(|s| s.strip_suffix(']')).unwrap_or(t);
                Ok(proj[parent.parse_element(inner)? as usize])
            }
        }
    }

    /// Number of factors `(Z/m)[x]/(f)`; zero for quotient rings.
    pub fn atom_count(&self) -> usize {
        match &self.repr {
            Repr::Presented { atoms, .. } => atoms.len(),
            Repr::Quotient { .. } => 0,
        }
    }

    /// The additive map sending factor `i` into factor `targets[i]` by
    /// `x ↦ images[i]` (coefficients in the target factor), with `1_i ↦ 1_{targets[i]}`.
    /// Whether the result is an automorphism is left to the caller.
    pub fn atom_map(&self, targets: &[usize], images: &[Vec<i64>]) -> Result<Vec<Elem>> {
        let Repr::Presented { atoms, .. } = &self.repr else {
            return Err(Error::InvalidAction("atom maps need a presented ring".into()));
        };
        let k = atoms.len();
        if targets.len() != k || images.len() != k || targets.iter().any(|&t| t >= k) {
            return Err(Error::InvalidAction(format!("atom map needs {k} targets and images")));
        }
        let offsets: Vec<usize> = atoms
            .iter()
            .scan(0, |off, a| {
                let o = *off;
                *off += a.degree();
                Some(o)
            })
            .collect();
        // powers of each image inside its target factor
        let mut powers: Vec<Vec<Vec<u32>>> = Vec::with_capacity(k);
        for i in 0..k {
            let target = &atoms[targets[i]];
            if target.modulus != atoms[i].modulus {
                return Err(Error::InvalidAction(format!(
                    "factor {i} (mod {}) cannot map into a factor mod {}",
                    atoms[i].modulus, target.modulus
                )));
            }
            let y = reduce_poly(&images[i], target);
            let mut one = vec![0u32; target.degree()];
            one[0] = 1 % target.modulus;
            let mut pw = vec![one];
            for _ in 1..atoms[i].degree() {
                let next = poly_mul_mod(pw.last().unwrap(), &y, target);
                pw.push(next);
            }
            powers.push(pw);
        }
        let table = self
            .elements()
            .map(|a| {
                let d = self.digits(a);
                let mut out = vec![0u32; d.len()];
                for i in 0..k {
                    let (j, m) = (targets[i], atoms[i].modulus);
                    for (c, pw) in d[offsets[i]..offsets[i] + atoms[i].degree()].iter().zip(&powers[i]) {
                        for (t, &p) in pw.iter().enumerate() {
                            let slot = &mut out[offsets[j] + t];
                            *slot = ((*slot as u64 + *c as u64 * p as u64) % m as u64) as u32;
                        }
                    }
                }
                self.from_digits(&out)
            })
            .collect();
        Ok(table)
    }

    // -- ideals and quotients -----------------------------------------------

    /// The ideal of nilpotent elements; equal to the Jacobson radical for finite rings.
    pub fn nilradical(&self) -> &Ideal {
        self.nil.get_or_init(|| {
            let elems: Vec<Elem> = self.elements().filter(|&a| self.is_nilpotent(a)).collect();
            Ideal::from_sorted_unchecked(self.size, elems)
        })
    }

    /// Maximal ideals, one per primitive idempotent of `S/nil(S)`, ordered by
    /// the least representative of that idempotent.
    pub fn maximal_ideals(&self) -> Result<&[MaximalIdeal]> {
        if self.is_zero_ring() {
            return Err(Error::ZeroRing);
        }
        Ok(self.maximal.get_or_init(|| ideal::compute_maximal_ideals(self)))
    }

    /// `S/I` with canonical coset representatives, and the projection on elements.
    pub fn quotient(self: &Arc<Self>, ideal: &Ideal) -> Result<(Arc<FiniteCommRing>, Vec<Elem>)> {
        ideal.verify(self)?;
        let mut proj = vec![Elem::MAX; self.size];
        let mut reps = Vec::new();
        for s in self.elements() {
            if proj[s as usize] != Elem::MAX {
                continue;
            }
            let idx = reps.len() as Elem;
            reps.push(s);
            for &i in ideal.elements() {
                proj[self.add(s, i) as usize] = idx;
            }
        }
        let size = reps.len();
        let name = format!("{}/I[{}]", self.name, ideal.len());
        let q = Self::assemble(Repr::Quotient { parent: Arc::clone(self), reps, proj: proj.clone() }, size, name);
        // the projection is a ring homomorphism by construction of the cosets
        debug_assert_eq!(proj[self.one as usize], q.one);
        Ok((Arc::new(q), proj))
    }

    /// Least element of each coset, indexed by quotient element.
    pub fn coset_representative(&self, a: Elem) -> Option<Elem> {
        match &self.repr {
            Repr::Quotient { reps, .. } => Some(reps[a as usize]),
            Repr::Presented { .. } => None,
        }
    }
}

fn reduce_poly(coeffs: &[i64], atom: &Atom) -> Vec<u32> {
    let m = atom.modulus as i64;
    let d = atom.degree();
    let mut c: Vec<i64> = coeffs.iter().map(|&x| x.rem_euclid(m)).collect();
    if c.len() < d {
        c.resize(d, 0);
    }
    for k in (d..c.len()).rev() {
        let lead = c[k];
        if lead == 0 {
            continue;
        }
        for i in 0..d {
            c[k - d + i] = (c[k - d + i] - lead * atom.poly[i] as i64).rem_euclid(m);
        }
        c[k] = 0;
    }
    c.truncate(d);
    c.into_iter().map(|x| x as u32).collect()
}

fn poly_mul_mod(a: &[u32], b: &[u32], atom: &Atom) -> Vec<u32> {
    let d = atom.degree();
    let m = atom.modulus as u64;
    let mut c = vec![0u64; 2 * d - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            c[i + j] = (c[i + j] + x as u64 * y as u64) % m;
        }
    }
    for k in (d..c.len()).rev() {
        let lead = c[k];
        if lead == 0 {
            continue;
        }
        for i in 0..d {
            c[k - d + i] = (c[k - d + i] + (m - lead) * atom.poly[i] as u64) % m;
        }
        c[k] = 0;
    }
    c.truncate(d);
    c.into_iter().map(|x| x as u32).collect()
}

/// Exhaustively checks that `perm` is a ring automorphism of `ring`.
pub fn is_automorphism(ring: &FiniteCommRing, perm: &[Elem]) -> std::result::Result<(), String> {
    if perm.len() != ring.size() {
        return Err(format!("table has {} entries, ring has {}", perm.len(), ring.size()));
    }
    let mut seen = vec![false; ring.size()];
    for &p in perm {
        if p as usize >= ring.size() || std::mem::replace(&mut seen[p as usize], true) {
            return Err("table is not a permutation of the ring".into());
        }
    }
    if perm[ring.one() as usize] != ring.one() {
        return Err("1 is not fixed".into());
    }
    // additivity on all x against additive generators, multiplicativity on generator pairs
    let gens = &ring.additive_basis().generators;
    for x in ring.elements() {
        for &b in gens {
            if perm[ring.add(x, b) as usize] != ring.add(perm[x as usize], perm[b as usize]) {
                return Err(format!("not additive at ({}, {})", ring.display(x), ring.display(b)));
            }
        }
    }
    for &a in gens {
        for &b in gens {
            if perm[ring.mul(a, b) as usize] != ring.mul(perm[a as usize], perm[b as usize]) {
                return Err(format!("not multiplicative at ({}, {})", ring.display(a), ring.display(b)));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(atoms: &[&str]) -> Arc<FiniteCommRing> {
        FiniteCommRing::parse(atoms).unwrap()
    }

    fn brute_units(r: &FiniteCommRing) -> Vec<Elem> {
        r.elements()
            .filter(|&a| r.elements().any(|b| r.mul(a, b) == r.one()))
            .collect()
    }

    #[test]
    fn sizes() {
        assert_eq!(ring(&["Z/12"]).size(), 12);
        assert_eq!(ring(&["(Z/4)[x]/(x^2+x+1)"]).size(), 16);
        assert_eq!(ring(&["Z/2", "Z/2"]).size(), 4);
        assert_eq!(FiniteCommRing::zero_ring().size(), 1);
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            FiniteCommRing::build(&[AtomSpec::integers_mod(1)], 100),
            Err(Error::BadModulus(1))
        ));
        assert!(matches!(
            FiniteCommRing::build(&[AtomSpec::new(4, vec![1, 1, 2])], 100),
            Err(Error::NotMonic(_))
        ));
        assert!(matches!(
            FiniteCommRing::build(&[AtomSpec::new(4, vec![1, 1, 1])], 10),
            Err(Error::RingTooLarge { size: 16, bound: 10 })
        ));
        assert!(matches!(
            FiniteCommRing::build(&[AtomSpec::integers_mod(300), AtomSpec::integers_mod(300)], 65536),
            Err(Error::RingTooLarge { .. })
        ));
    }

    #[test]
    fn units_match_brute_force() {
        let z12 = ring(&["Z/12"]);
        let u: Vec<String> = z12.units().iter().map(|&a| z12.display(a)).collect();
        assert_eq!(u, ["1", "5", "7", "11"]);
        let dual = ring(&["(Z/3)[x]/(x^2)"]);
        assert_eq!(dual.units().len(), 6);
        assert_eq!(dual.units(), brute_units(&dual));
        let f4 = ring(&["(Z/2)[x]/(x^2+x+1)"]);
        assert_eq!(f4.units().len(), 3);
        let gr = ring(&["(Z/4)[x]/(x^2+x+1)"]);
        assert_eq!(gr.units(), brute_units(&gr));
        for a in gr.units() {
            assert_eq!(gr.mul(a, gr.inv(a).unwrap()), gr.one());
        }
    }

    #[test]
    fn nilradicals() {
        let z12 = ring(&["Z/12"]);
        let nil: Vec<String> = z12.nilradical().elements().iter().map(|&a| z12.display(a)).collect();
        assert_eq!(nil, ["0", "6"]);
        assert_eq!(ring(&["Z/7"]).nilradical().len(), 1);
        let dual = ring(&["(Z/3)[x]/(x^2)"]);
        let nil: Vec<String> = dual.nilradical().elements().iter().map(|&a| dual.display(a)).collect();
        assert_eq!(nil, ["0", "x", "2x"]);
    }

    #[test]
    fn element_notation_roundtrip() {
        let r = ring(&["Z/3", "(Z/3)[x]/(x^2)"]);
        for a in r.elements() {
            assert_eq!(r.parse_element(&r.display(a)).unwrap(), a);
        }
        assert_eq!(r.display(r.parse_element("(-1, 2-x)").unwrap()), "(2,2+2x)");
        let f4 = ring(&["(Z/2)[x]/(x^2+x+1)"]);
        // x^2 reduces to x + 1
        assert_eq!(f4.display(f4.parse_element("x^2").unwrap()), "1+x");
    }

    #[test]
    fn ordering_is_lexicographic() {
        let r = ring(&["(Z/3)[x]/(x^2)"]);
        let shown: Vec<String> = r.elements().map(|a| r.display(a)).collect();
        assert_eq!(shown[..4], ["0", "x", "2x", "1"]);
    }

    #[test]
    fn quotients() {
        let dual = ring(&["(Z/3)[x]/(x^2)"]);
        let x = dual.parse_element("x").unwrap();
        let (q, proj) = dual.quotient(&Ideal::generated(&dual, &[x])).unwrap();
        assert_eq!(q.size(), 3);
        for a in dual.elements() {
            for b in dual.elements() {
                assert_eq!(proj[dual.mul(a, b) as usize], q.mul(proj[a as usize], proj[b as usize]));
                assert_eq!(proj[dual.add(a, b) as usize], q.add(proj[a as usize], proj[b as usize]));
            }
        }
        let (same, proj0) = dual.quotient(&Ideal::zero(&dual)).unwrap();
        assert_eq!(same.size(), dual.size());
        assert!(proj0.iter().enumerate().all(|(i, &p)| p as usize == i));
        let z12 = ring(&["Z/12"]);
        let three = z12.from_int(3);
        let (z3, _) = z12.quotient(&Ideal::generated(&z12, &[three])).unwrap();
        assert_eq!(z3.size(), 3);
        let (zero, _) = z12.quotient(&Ideal::unit(&z12)).unwrap();
        assert!(zero.is_zero_ring());
        assert_eq!(zero.one(), zero.zero());
        // section followed by projection is the identity on coset labels
        for c in z3.elements() {
            assert_eq!(z12.quotient(&Ideal::generated(&z12, &[three])).unwrap().1
                [z3.coset_representative(c).unwrap() as usize], c);
        }
    }

    #[test]
    fn quotient_rejects_non_ideal() {
        let z12 = ring(&["Z/12"]);
        let bogus = Ideal::from_sorted_unchecked(12, vec![0, 1]);
        assert!(matches!(z12.quotient(&bogus), Err(Error::NotAnIdeal(_))));
    }

    #[test]
    fn automorphism_check() {
        let f4 = ring(&["(Z/2)[x]/(x^2+x+1)"]);
        let frob: Vec<Elem> = f4.elements().map(|a| f4.mul(a, a)).collect();
        assert!(is_automorphism(&f4, &frob).is_ok());
        let z5 = ring(&["Z/5"]);
        let doubling: Vec<Elem> = z5.elements().map(|a| z5.add(a, a)).collect();
        assert!(is_automorphism(&z5, &doubling).is_err());
    }

    #[test]
    fn large_rings_use_sampled_axioms() {
        let r = ring(&["(Z/5)[x]/(x^4+2)"]);
        assert_eq!(r.size(), 625);
        let a = r.parse_element("1+x").unwrap();
        let inv = r.inv(a).unwrap();
        assert_eq!(r.mul(a, inv), r.one());
    }
}
