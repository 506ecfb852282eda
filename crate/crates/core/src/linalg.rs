//! Exact matrices over `Z[1/√2]`, the generator set `G_n`, and levels.
//!
//! A matrix is stored as a dense integer matrix over `Z[√2]` together with a
//! single shared denominator exponent `k`; the value of entry `(i, j)` is
//! `entries[i][j] / √2^k`. After every operation `k` is the least exponent
//! that makes all numerators integral, so `==` compares values.
//!
//! Public indices are 1-based.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, ParseError, Result};
use crate::ring::{Dyadic, RingInt};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    n: usize,
    k: u32,
    entries: Vec<RingInt>,
}

/// A vector over `Z[1/√2]` with its own least denominator exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactVector {
    pub entries: Vec<RingInt>,
    pub k: u32,
}

impl ExactVector {
    pub fn lde(&self) -> u32 {
        self.k
    }

    pub fn entry(&self, i: usize) -> Dyadic {
        Dyadic::reduce(self.entries[i - 1].clone(), self.k)
    }
}

impl ExactMatrix {
    /// Builds `entries / √2^k` (row-major) and canonicalizes it.
    pub fn new(n: usize, entries: Vec<RingInt>, k: u32) -> Result<ExactMatrix> {
        if entries.len() != n * n {
            return Err(Error::Dimension(format!(
                "expected {} entries for a {n}x{n} matrix, got {}",
                n * n,
                entries.len()
            )));
        }
        let mut m = ExactMatrix { n, k, entries };
        m.canonicalize();
        Ok(m)
    }

    pub fn identity(n: usize) -> ExactMatrix {
        let mut entries = vec![RingInt::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = RingInt::one();
        }
        ExactMatrix { n, k: 0, entries }
    }

    /// Builds a matrix from rows of [`Dyadic`] values.
    pub fn from_rows(rows: &[Vec<Dyadic>]) -> Result<ExactMatrix> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("rows must form a square matrix".into()));
        }
        let k = rows.iter().flatten().map(Dyadic::k).max().unwrap_or(0);
        let entries = rows.iter().flatten().map(|d| d.numerator_at(k)).collect();
        ExactMatrix::new(n, entries, k)
    }

    /// Integer matrix from small entries, e.g. permutation or shear matrices.
    pub fn from_ints(n: usize, values: &[i64]) -> Result<ExactMatrix> {
        ExactMatrix::new(n, values.iter().map(|&v| RingInt::from_int(v)).collect(), 0)
    }

    /// The 2x2 Hadamard matrix `(1/√2)[[1,1],[1,-1]]`.
    pub fn hadamard() -> ExactMatrix {
        ExactMatrix {
            n: 2,
            k: 1,
            entries: vec![
                RingInt::one(),
                RingInt::one(),
                RingInt::one(),
                RingInt::from_int(-1),
            ],
        }
    }

    /// The 2x2 swap matrix.
    pub fn swap() -> ExactMatrix {
        ExactMatrix::from_ints(2, &[0, 1, 1, 0]).expect("2x2")
    }

    /// The 1x1 matrix `(-1)`.
    pub fn minus_one() -> ExactMatrix {
        ExactMatrix::from_ints(1, &[-1]).expect("1x1")
    }

    /// Permutation matrix `X_π` with `X_π e_j = e_{π(j)}`; `perm` is 1-based.
    pub fn permutation(perm: &[usize]) -> Result<ExactMatrix> {
        check_permutation(perm)?;
        let n = perm.len();
        let mut m = ExactMatrix {
            n,
            k: 0,
            entries: vec![RingInt::zero(); n * n],
        };
        for (j, &pj) in perm.iter().enumerate() {
            m.entries[(pj - 1) * n + j] = RingInt::one();
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Shared denominator exponent, which equals `lde(M)`.
    pub fn lde(&self) -> u32 {
        self.k
    }

    /// Row-major numerators over `√2^lde`.
    pub fn numerators(&self) -> &[RingInt] {
        &self.entries
    }

    /// Entry `(i, j)`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> Dyadic {
        Dyadic::reduce(self.entries[(i - 1) * self.n + (j - 1)].clone(), self.k)
    }

    fn canonicalize(&mut self) {
        if self.entries.iter().all(RingInt::is_zero) {
            self.k = 0;
            return;
        }
        while self.k > 0 && self.entries.iter().all(RingInt::divisible_by_rt2) {
            for e in &mut self.entries {
                *e = e.div_rt2().expect("checked divisible");
            }
            self.k -= 1;
        }
    }

    /// Numerators rescaled to exponent `k >= lde`.
    fn numerators_at(&self, k: u32) -> Vec<RingInt> {
        let d = k - self.k;
        self.entries.iter().map(|e| e.mul_rt2_pow(d)).collect()
    }

    pub fn matmul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        if self.n != rhs.n {
            return Err(Error::Dimension(format!(
                "cannot multiply {0}x{0} by {1}x{1}",
                self.n, rhs.n
            )));
        }
        let n = self.n;
        let mut entries = vec![RingInt::zero(); n * n];
        for i in 0..n {
            for l in 0..n {
                let a = &self.entries[i * n + l];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs.entries[l * n + j];
                    if !b.is_zero() {
                        let p = a * b;
                        let e = &mut entries[i * n + j];
                        *e = &*e + &p;
                    }
                }
            }
        }
        ExactMatrix::new(n, entries, self.k + rhs.k)
    }

    pub fn transpose(&self) -> ExactMatrix {
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.entries[j * n + i].clone());
            }
        }
        ExactMatrix {
            n,
            k: self.k,
            entries,
        }
    }

    /// Block-diagonal `self ⊕ rhs`.
    pub fn direct_sum(&self, rhs: &ExactMatrix) -> ExactMatrix {
        let k = self.k.max(rhs.k);
        let (a, b) = (self.numerators_at(k), rhs.numerators_at(k));
        let n = self.n + rhs.n;
        let mut entries = vec![RingInt::zero(); n * n];
        for i in 0..self.n {
            for j in 0..self.n {
                entries[i * n + j] = a[i * self.n + j].clone();
            }
        }
        for i in 0..rhs.n {
            for j in 0..rhs.n {
                entries[(self.n + i) * n + self.n + j] = b[i * rhs.n + j].clone();
            }
        }
        // Zero-dimensional operands contribute nothing, so the exponent
        // may need to drop again.
        let mut m = ExactMatrix { n, k, entries };
        m.canonicalize();
        m
    }

    /// Kronecker product `self ⊗ rhs`, row-major in `(i, j)` pairs.
    pub fn tensor(&self, rhs: &ExactMatrix) -> ExactMatrix {
        let (n1, n2) = (self.n, rhs.n);
        let n = n1 * n2;
        let mut entries = vec![RingInt::zero(); n * n];
        for i1 in 0..n1 {
            for j1 in 0..n1 {
                let a = &self.entries[i1 * n1 + j1];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..n2 {
                    for j2 in 0..n2 {
                        let b = &rhs.entries[i2 * n2 + j2];
                        entries[(i1 * n2 + i2) * n + j1 * n2 + j2] = a * b;
                    }
                }
            }
        }
        let mut m = ExactMatrix {
            n,
            k: self.k + rhs.k,
            entries,
        };
        m.canonicalize();
        m
    }

    pub fn is_identity(&self) -> bool {
        *self == ExactMatrix::identity(self.n)
    }

    /// `MᵀM = I` exactly.
    pub fn is_orthogonal(&self) -> bool {
        self.transpose()
            .matmul(self)
            .map(|p| p.is_identity())
            .unwrap_or(false)
    }

    /// Column `j` (1-based) with its own least denominator exponent.
    pub fn column(&self, j: usize) -> ExactVector {
        let n = self.n;
        let mut entries: Vec<RingInt> = (0..n)
            .map(|i| self.entries[i * n + j - 1].clone())
            .collect();
        let mut k = self.k;
        if entries.iter().all(RingInt::is_zero) {
            k = 0;
        }
        while k > 0 && entries.iter().all(RingInt::divisible_by_rt2) {
            for e in &mut entries {
                *e = e.div_rt2().expect("checked divisible");
            }
            k -= 1;
        }
        ExactVector { entries, k }
    }

    /// `true` iff column `j` (1-based) equals `e_j`.
    fn column_is_unit(&self, j: usize) -> bool {
        let c = self.column(j);
        c.k == 0 && unit_at(&c.entries, j - 1)
    }

    /// The level triple `(j, k, l)` that drives exact synthesis.
    pub fn level(&self) -> Result<Level> {
        if !self.is_orthogonal() {
            return Err(Error::NotOrthogonal);
        }
        Ok(self.level_unchecked())
    }

    /// [`level`](Self::level) without the orthogonality check.
    pub fn level_unchecked(&self) -> Level {
        let j = (1..=self.n).rev().find(|&i| !self.column_is_unit(i));
        let Some(j) = j else {
            return Level { j: 0, k: 0, l: 0 };
        };
        let col = self.column(j);
        let l = if col.k == 0 {
            0
        } else {
            col.entries.iter().filter(|e| e.residue().is_odd()).count()
        };
        Level { j, k: col.k, l }
    }

    /// In-place `self ← g · self` (row operations).
    pub fn apply_left(&mut self, g: &Generator) {
        let n = self.n;
        match *g {
            Generator::Z(a) => {
                for j in 0..n {
                    let e = &mut self.entries[(a - 1) * n + j];
                    *e = -&*e;
                }
            }
            Generator::X(b, c) => {
                for j in 0..n {
                    self.entries.swap((b - 1) * n + j, (c - 1) * n + j);
                }
            }
            Generator::H(b, c) => {
                let (b, c) = (b - 1, c - 1);
                for i in 0..n {
                    if i == b || i == c {
                        continue;
                    }
                    for j in 0..n {
                        let e = &mut self.entries[i * n + j];
                        *e = e.mul_rt2();
                    }
                }
                for j in 0..n {
                    let x = self.entries[b * n + j].clone();
                    let y = self.entries[c * n + j].clone();
                    self.entries[b * n + j] = &x + &y;
                    self.entries[c * n + j] = &x - &y;
                }
                self.k += 1;
                self.canonicalize();
            }
        }
    }

    /// In-place `self ← self · g` (column operations).
    pub fn apply_right(&mut self, g: &Generator) {
        let n = self.n;
        match *g {
            Generator::Z(a) => {
                for i in 0..n {
                    let e = &mut self.entries[i * n + a - 1];
                    *e = -&*e;
                }
            }
            Generator::X(b, c) => {
                for i in 0..n {
                    self.entries.swap(i * n + b - 1, i * n + c - 1);
                }
            }
            Generator::H(b, c) => {
                let (b, c) = (b - 1, c - 1);
                for i in 0..n {
                    for j in 0..n {
                        if j == b || j == c {
                            continue;
                        }
                        let e = &mut self.entries[i * n + j];
                        *e = e.mul_rt2();
                    }
                    let x = self.entries[i * n + b].clone();
                    let y = self.entries[i * n + c].clone();
                    self.entries[i * n + b] = &x + &y;
                    self.entries[i * n + c] = &x - &y;
                }
                self.k += 1;
                self.canonicalize();
            }
        }
    }

    /// Decimal rendering, for debugging only; never authoritative.
    pub fn to_float_string(&self) -> String {
        let mut out = String::new();
        for i in 1..=self.n {
            let row: Vec<String> = (1..=self.n)
                .map(|j| format!("{:.6}", self.entry(i, j).to_f64()))
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

fn unit_at(entries: &[RingInt], idx: usize) -> bool {
    entries
        .iter()
        .enumerate()
        .all(|(i, e)| if i == idx { e.is_one() } else { e.is_zero() })
}

pub(crate) fn check_permutation(perm: &[usize]) -> Result<()> {
    let n = perm.len();
    let mut seen = vec![false; n];
    for &p in perm {
        if p == 0 || p > n || seen[p - 1] {
            return Err(Error::NotPermutation(format!("{perm:?}")));
        }
        seen[p - 1] = true;
    }
    Ok(())
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;

    /// Panics on a dimension mismatch; use [`ExactMatrix::matmul`] to handle it.
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.matmul(rhs).expect("matrix dimensions agree")
    }
}

/// Embeds an `m x m` matrix at rows/columns `rows` (1-based) of an `n x n`
/// identity: entry `(a_i', a_j')` gets `small[i'][j']`, all others `δ_ij`.
pub fn m_level_embed(small: &ExactMatrix, rows: &[usize], n: usize) -> Result<ExactMatrix> {
    if rows.len() != small.n {
        return Err(Error::Dimension(format!(
            "{} indices for a {}x{} block",
            rows.len(),
            small.n,
            small.n
        )));
    }
    for (i, &r) in rows.iter().enumerate() {
        if r == 0 || r > n {
            return Err(Error::Index(format!("index {r} outside 1..={n}")));
        }
        if rows[..i].contains(&r) {
            return Err(Error::Index(format!("duplicate index {r}")));
        }
    }
    let mut m = ExactMatrix::identity(n);
    let k = small.k;
    m.entries = m.numerators_at(k);
    m.k = k;
    for (ii, &ri) in rows.iter().enumerate() {
        for (jj, &rj) in rows.iter().enumerate() {
            m.entries[(ri - 1) * n + rj - 1] = small.entries[ii * small.n + jj].clone();
        }
    }
    m.canonicalize();
    Ok(m)
}

/// Lexicographically ordered synthesis level; `(0,0,0)` only for `I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Level {
    pub j: usize,
    pub k: u32,
    pub l: usize,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.j, self.k, self.l)
    }
}

/// One- and two-level generators: `Z[a]`, `X[b,c]`, `H[b,c]` (1-based).
///
/// Canonical generators have `b < c`. Reversed forms are accepted and
/// denote the plain two-level embedding at `[b, c]`, which is what the
/// derived relations `X[c,b] ≈ X[b,c]` and `H[c,b] ≈ X[b,c]H[b,c]X[b,c]`
/// describe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Z(usize),
    X(usize, usize),
    H(usize, usize),
}

impl Generator {
    pub fn indices(&self) -> Vec<usize> {
        match *self {
            Generator::Z(a) => vec![a],
            Generator::X(b, c) | Generator::H(b, c) => vec![b, c],
        }
    }

    pub fn max_index(&self) -> usize {
        self.indices().into_iter().max().unwrap_or(0)
    }

    /// Indices are non-zero and pairwise distinct.
    pub fn is_well_formed(&self) -> bool {
        match *self {
            Generator::Z(a) => a >= 1,
            Generator::X(b, c) | Generator::H(b, c) => b >= 1 && c >= 1 && b != c,
        }
    }

    pub fn is_canonical(&self) -> bool {
        match *self {
            Generator::Z(a) => a >= 1,
            Generator::X(b, c) | Generator::H(b, c) => b >= 1 && b < c,
        }
    }

    /// Rewrites a reversed generator into canonical ones.
    pub fn canonical_form(&self) -> Vec<Generator> {
        match *self {
            Generator::X(b, c) if b > c => vec![Generator::X(c, b)],
            Generator::H(b, c) if b > c => {
                vec![Generator::X(c, b), Generator::H(c, b), Generator::X(c, b)]
            }
            g => vec![g],
        }
    }

    pub fn shifted(&self, m: usize) -> Generator {
        match *self {
            Generator::Z(a) => Generator::Z(a + m),
            Generator::X(b, c) => Generator::X(b + m, c + m),
            Generator::H(b, c) => Generator::H(b + m, c + m),
        }
    }

    /// The `n x n` matrix of this generator.
    pub fn matrix(&self, n: usize) -> Result<ExactMatrix> {
        match *self {
            Generator::Z(a) => m_level_embed(&ExactMatrix::minus_one(), &[a], n),
            Generator::X(b, c) => m_level_embed(&ExactMatrix::swap(), &[b, c], n),
            Generator::H(b, c) => m_level_embed(&ExactMatrix::hadamard(), &[b, c], n),
        }
    }

    /// All canonical generators of `G_n`.
    pub fn all(n: usize) -> Vec<Generator> {
        let mut out: Vec<Generator> = (1..=n).map(Generator::Z).collect();
        for b in 1..=n {
            for c in b + 1..=n {
                out.push(Generator::X(b, c));
                out.push(Generator::H(b, c));
            }
        }
        out
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Z(a) => write!(f, "Z[{a}]"),
            Generator::X(b, c) => write!(f, "X[{b},{c}]"),
            Generator::H(b, c) => write!(f, "H[{b},{c}]"),
        }
    }
}

impl FromStr for Generator {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseError::new(format!("invalid generator `{s}`"));
        let s = s.trim();
        let (head, rest) = s.split_at(s.find('[').ok_or_else(bad)?);
        let inner = rest
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?;
        let idx: Vec<usize> = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        let g = match (head, idx.as_slice()) {
            ("Z", [a]) => Generator::Z(*a),
            ("X", [b, c]) => Generator::X(*b, *c),
            ("H", [b, c]) => Generator::H(*b, *c),
            _ => return Err(bad()),
        };
        if !g.is_well_formed() {
            return Err(ParseError::new(format!(
                "generator `{s}` needs non-zero distinct indices"
            )));
        }
        Ok(g)
    }
}

/// Matrix text format: `dim <n>`, `lde <k>`, then `n` rows of numerators.
impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dim {}", self.n)?;
        write!(f, "lde {}", self.k)?;
        for i in 0..self.n {
            writeln!(f)?;
            let row: Vec<String> = self.entries[i * self.n..(i + 1) * self.n]
                .iter()
                .map(ToString::to_string)
                .collect();
            write!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for ExactMatrix {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lines = s
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = |line: Option<&str>, key: &str| -> Result<u64, ParseError> {
            let line = line.ok_or_else(|| ParseError::new(format!("missing `{key}` line")))?;
            let mut parts = line.split_whitespace();
            match (parts.next(), parts.next(), parts.next()) {
                (Some(k), Some(v), None) if k == key => v
                    .parse()
                    .map_err(|_| ParseError::new(format!("invalid `{key}` value `{v}`"))),
                _ => Err(ParseError::new(format!(
                    "expected `{key} <n>`, got `{line}`"
                ))),
            }
        };
        let n = header(lines.next(), "dim")? as usize;
        let k = u32::try_from(header(lines.next(), "lde")?)
            .map_err(|_| ParseError::new("lde too large"))?;
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| ParseError::new(format!("missing row {}", r + 1)))?;
            let row: Vec<RingInt> = line
                .split_whitespace()
                .map(str::parse)
                .collect::<Result<_, _>>()?;
            if row.len() != n {
                return Err(ParseError::new(format!(
                    "row {} has {} entries, expected {n}",
                    r + 1,
                    row.len()
                )));
            }
            entries.extend(row);
        }
        if let Some(extra) = lines.next() {
            return Err(ParseError::new(format!(
                "unexpected trailing line `{extra}`"
            )));
        }
        ExactMatrix::new(n, entries, k).map_err(|e| ParseError::new(e.to_string()))
    }
}

/// Integer value helper for tests and fixtures.
pub fn int(v: i64) -> RingInt {
    RingInt::from(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h() -> ExactMatrix {
        ExactMatrix::hadamard()
    }

    #[test]
    fn embed_examples() {
        let z = m_level_embed(&ExactMatrix::minus_one(), &[2], 3).unwrap();
        assert_eq!(
            z,
            ExactMatrix::from_ints(3, &[1, 0, 0, 0, -1, 0, 0, 0, 1]).unwrap()
        );
        let x = m_level_embed(&ExactMatrix::swap(), &[1, 3], 3).unwrap();
        assert_eq!(
            x,
            ExactMatrix::from_ints(3, &[0, 0, 1, 0, 1, 0, 1, 0, 0]).unwrap()
        );
        assert_eq!(m_level_embed(&h(), &[1, 2], 2).unwrap(), h());
        assert!(matches!(
            m_level_embed(&ExactMatrix::swap(), &[2, 2], 3),
            Err(Error::Index(_))
        ));
        assert!(matches!(
            m_level_embed(&ExactMatrix::swap(), &[1, 4], 3),
            Err(Error::Index(_))
        ));
    }

    #[test]
    fn products() {
        assert!((&h() * &h()).is_identity());
        let x = Generator::X(1, 2).matrix(2).unwrap();
        assert!((&x * &x).is_identity());
        let a = ExactMatrix::from_ints(2, &[3, -1, 4, 2]).unwrap();
        assert_eq!(&ExactMatrix::identity(2) * &a, a);
        assert!(matches!(
            ExactMatrix::identity(2).matmul(&ExactMatrix::identity(3)),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn sums_and_tensors() {
        let one = ExactMatrix::identity(1);
        assert_eq!(
            one.direct_sum(&ExactMatrix::minus_one()),
            ExactMatrix::from_ints(2, &[1, 0, 0, -1]).unwrap()
        );
        let i2 = ExactMatrix::identity(2);
        assert_eq!(i2.tensor(&i2), ExactMatrix::identity(4));

        // H ⊗ I2 by hand: (1/√2)[[I, I], [I, -I]].
        let hi = h().tensor(&i2);
        let expected = ExactMatrix::new(
            4,
            [1, 0, 1, 0, 0, 1, 0, 1, 1, 0, -1, 0, 0, 1, 0, -1]
                .iter()
                .map(|&v| int(v))
                .collect(),
            1,
        )
        .unwrap();
        assert_eq!(hi, expected);
        assert_eq!(hi.lde(), 1);

        let empty = ExactMatrix::identity(0);
        assert_eq!(h().direct_sum(&empty), h());
        assert_eq!(empty.direct_sum(&h()), h());
        assert_eq!(h().tensor(&empty), empty);
        // Summing with a lower-lde block keeps the larger exponent.
        assert_eq!(h().direct_sum(&one).lde(), 1);
    }

    #[test]
    fn orthogonality() {
        assert!(h().is_orthogonal());
        assert!(!ExactMatrix::from_ints(2, &[1, 1, 0, 1])
            .unwrap()
            .is_orthogonal());
        for g in Generator::all(5) {
            let m = g.matrix(5).unwrap();
            assert!(m.is_orthogonal(), "{g}");
            assert!((&m * &m).is_identity(), "{g} is an involution");
        }
    }

    #[test]
    fn level_examples() {
        assert_eq!(
            ExactMatrix::identity(4).level().unwrap(),
            Level { j: 0, k: 0, l: 0 }
        );
        // H e2 = (1/√2)(1, -1): both numerators are ≡ 1 (mod 2).
        assert_eq!(h().level().unwrap(), Level { j: 2, k: 1, l: 2 });
        let x = Generator::X(1, 2).matrix(2).unwrap();
        assert_eq!(x.level().unwrap(), Level { j: 2, k: 0, l: 0 });
        let shear = ExactMatrix::from_ints(2, &[1, 1, 0, 1]).unwrap();
        assert_eq!(shear.level(), Err(Error::NotOrthogonal));
    }

    #[test]
    fn column_has_own_lde() {
        // (H ⊕ I1): column 3 is e3 even though lde(M) = 1.
        let m = h().direct_sum(&ExactMatrix::identity(1));
        assert_eq!(m.column(3).lde(), 0);
        assert_eq!(m.column(1).lde(), 1);
        assert_eq!(m.level().unwrap(), Level { j: 2, k: 1, l: 2 });
    }

    #[test]
    fn row_and_column_ops_match_matmul() {
        let base = {
            let mut m = ExactMatrix::identity(4);
            for g in [
                Generator::H(1, 3),
                Generator::Z(2),
                Generator::H(2, 4),
                Generator::X(1, 4),
            ] {
                m = &m * &g.matrix(4).unwrap();
            }
            m
        };
        for g in [
            Generator::Z(3),
            Generator::X(2, 4),
            Generator::X(4, 2),
            Generator::H(1, 2),
            Generator::H(4, 1),
        ] {
            let gm = g.matrix(4).unwrap();
            let mut left = base.clone();
            left.apply_left(&g);
            assert_eq!(left, &gm * &base, "left {g}");
            let mut right = base.clone();
            right.apply_right(&g);
            assert_eq!(right, &base * &gm, "right {g}");
        }
    }

    #[test]
    fn reversed_generators_match_derived_relations() {
        let n = 3;
        let x = |b, c| Generator::X(b, c).matrix(n).unwrap();
        let hh = |b, c| Generator::H(b, c).matrix(n).unwrap();
        assert_eq!(x(3, 1), x(1, 3));
        assert_eq!(hh(3, 1), &(&x(1, 3) * &hh(1, 3)) * &x(1, 3));
        assert_ne!(hh(3, 1), hh(1, 3));
    }

    #[test]
    fn permutation_matrix() {
        // π = (1 2 3): 1→2, 2→3, 3→1
        let p = ExactMatrix::permutation(&[2, 3, 1]).unwrap();
        assert_eq!(p.entry(2, 1), crate::ring::Dyadic::one());
        assert_eq!(p.entry(1, 3), crate::ring::Dyadic::one());
        assert!(ExactMatrix::permutation(&[1, 1]).is_err());
    }

    #[test]
    fn text_format() {
        let text = h().to_string();
        assert_eq!(text, "dim 2\nlde 1\n1 1\n1 -1");
        assert_eq!(text.parse::<ExactMatrix>().unwrap(), h());
        let m: ExactMatrix = "dim 2\nlde 2\n1+1*rt2 -rt2\n0 2".parse().unwrap();
        assert_eq!(m.to_string().parse::<ExactMatrix>().unwrap(), m);
        // lde in the file is re-canonicalized.
        let m: ExactMatrix = "dim 1\nlde 2\n2".parse().unwrap();
        assert_eq!(m, ExactMatrix::identity(1));
        assert!("dim 2\nlde 0\n1 0".parse::<ExactMatrix>().is_err());
        assert!("dim 1\nlde 0\n1 2".parse::<ExactMatrix>().is_err());
        assert_eq!(
            "dim 0\nlde 0".parse::<ExactMatrix>().unwrap(),
            ExactMatrix::identity(0)
        );
    }

    #[test]
    fn generator_text() {
        for g in [
            Generator::Z(3),
            Generator::X(1, 4),
            Generator::H(2, 5),
            Generator::H(5, 2),
        ] {
            assert_eq!(g.to_string().parse::<Generator>().unwrap(), g);
        }
        assert!("X[2,2]".parse::<Generator>().is_err());
        assert!("Z[0]".parse::<Generator>().is_err());
        assert!("Y[1]".parse::<Generator>().is_err());
    }
}
