//! Polynomials in the alphabet x_1..x_n over the rationals (each x_i of
//! v-degree 2), matrices over them, and exact restriction of such matrices to
//! finite-dimensional graded pieces.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};

use super::linalg::SparseMatQ;
use super::QQ;

/// A polynomial in x_1..x_n with rational coefficients. The number of
/// variables is fixed per value; monomials are exponent vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XPoly {
    n: usize,
    terms: BTreeMap<Vec<u32>, QQ>,
}

impl XPoly {
    pub fn zero(n: usize) -> Self {
        XPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, QQ::one())
    }

    pub fn constant(n: usize, c: QQ) -> Self {
        let mut p = Self::zero(n);
        p.add_term(vec![0; n], c);
        p
    }

    /// The variable x_i (1-indexed).
    pub fn var(n: usize, i: usize) -> Self {
        assert!(1 <= i && i <= n, "variable index out of range");
        let mut e = vec![0u32; n];
        e[i - 1] = 1;
        let mut p = Self::zero(n);
        p.add_term(e, QQ::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// The constant value if the polynomial is a (possibly zero) constant.
    pub fn as_constant(&self) -> Option<QQ> {
        if self.is_zero() {
            return Some(QQ::zero());
        }
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            if e.iter().all(|&x| x == 0) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &QQ)> {
        self.terms.iter()
    }

    fn add_term(&mut self, e: Vec<u32>, c: QQ) {
        debug_assert_eq!(e.len(), self.n);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(QQ::zero);
        *entry += c;
        if entry.is_zero() {
            // Re-fetch key to remove; avoid cloning on the hot path.
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone());
            if let Some(k) = key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        XPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &QQ) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        XPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = Self::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// v-degree of a homogeneous polynomial (2 per x-power); `None` when the
    /// polynomial is zero or inhomogeneous.
    pub fn homogeneous_vdeg(&self) -> Option<i64> {
        let mut deg = None;
        for e in self.terms.keys() {
            let d = 2 * e.iter().map(|&x| x as i64).sum::<i64>();
            match deg {
                None => deg = Some(d),
                Some(d0) if d0 != d => return None,
                _ => {}
            }
        }
        deg
    }

    /// Total x-degree (maximum over monomials).
    pub fn xdeg(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let mut parts = Vec::new();
            for (i, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => parts.push(format!("x{}", i + 1)),
                    k => parts.push(format!("x{}^{}", i + 1, k)),
                }
            }
            let mono = parts.join("*");
            if mono.is_empty() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", mono)?;
            } else if mag.is_integer() {
                write!(f, "{}*{}", mag.numer(), mono)?;
            } else {
                write!(f, "({})*{}", mag, mono)?;
            }
        }
        Ok(())
    }
}

/// All monomial exponent vectors in `n` variables of total x-degree exactly `d`,
/// in a fixed (lexicographic) order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 1 {
            let mut e = prefix.clone();
            e.push(d);
            out.push(e);
            return;
        }
        for first in 0..=d {
            prefix.push(first);
            rec(n - 1, d - first, prefix, out);
            prefix.pop();
        }
    }
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

/// A dense matrix over XPoly, acting on free modules with graded generators.
/// Entries are left-multiplication coefficients: column j of the matrix gives
/// the image of the j-th domain generator in terms of codomain generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    pub rows: usize,
    pub cols: usize,
    n: usize,
    entries: Vec<XPoly>,
}

impl PolyMatrix {
    pub fn zero(n: usize, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            n,
            entries: vec![XPoly::zero(n); rows * cols],
        }
    }

    pub fn identity(n: usize, size: usize) -> Self {
        let mut m = Self::zero(n, size, size);
        for i in 0..size {
            *m.at_mut(i, i) = XPoly::one(n);
        }
        m
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn at(&self, r: usize, c: usize) -> &XPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut XPoly {
        &mut self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: XPoly) {
        self.entries[r * self.cols + c] = p;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a = a.add(b);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a = a.sub(b);
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a = a.neg();
        }
        out
    }

    pub fn scale(&self, c: &QQ) -> Self {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a = a.scale(c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix dimension mismatch");
        let mut out = Self::zero(self.n, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.at(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(l, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.mul(b);
                    let t = out.at_mut(i, j);
                    *t = t.add(&prod);
                }
            }
        }
        out
    }

    /// Scalar (polynomial) multiple of every entry.
    pub fn scale_poly(&self, p: &XPoly) -> Self {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a = a.mul(p);
        }
        out
    }

    /// Kronecker product: (A ⊗ B)[(i,k),(j,l)] = A[i,j] * B[k,l].
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.at(k, l);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i * other.rows + k, j * other.cols + l, a.mul(b));
                    }
                }
            }
        }
        out
    }

    /// Evaluate a polynomial at commuting matrices: p(x_1..x_n) with x_i
    /// replaced by mats[i]. All matrices must be square of equal size.
    pub fn eval_poly(p: &XPoly, mats: &[PolyMatrix], size: usize, n: usize) -> PolyMatrix {
        let mut cache: Vec<Vec<PolyMatrix>> = mats
            .iter()
            .map(|m| vec![PolyMatrix::identity(n, size), m.clone()])
            .collect();
        let mut out = PolyMatrix::zero(n, size, size);
        for (e, c) in p.terms() {
            let mut acc = PolyMatrix::identity(n, size);
            let mut used = false;
            for (i, &pow) in e.iter().enumerate() {
                if pow == 0 {
                    continue;
                }
                while cache[i].len() <= pow as usize {
                    let next = cache[i].last().unwrap().mul(&mats[i]);
                    cache[i].push(next);
                }
                let m = &cache[i][pow as usize];
                acc = if used { acc.mul(m) } else { m.clone() };
                used = true;
            }
            out = out.add(&acc.scale(c));
        }
        out
    }

    /// Paste a block matrix from a grid of equal-variable-count blocks.
    pub fn from_blocks(blocks: &[Vec<&PolyMatrix>]) -> Self {
        assert!(!blocks.is_empty());
        let n = blocks[0][0].n;
        let row_sizes: Vec<usize> = blocks.iter().map(|r| r[0].rows).collect();
        let col_sizes: Vec<usize> = blocks[0].iter().map(|b| b.cols).collect();
        let rows = row_sizes.iter().sum();
        let cols = col_sizes.iter().sum();
        let mut out = Self::zero(n, rows, cols);
        let mut r0 = 0;
        for (bi, brow) in blocks.iter().enumerate() {
            assert_eq!(brow.len(), col_sizes.len());
            let mut c0 = 0;
            for (bj, b) in brow.iter().enumerate() {
                assert_eq!(b.rows, row_sizes[bi]);
                assert_eq!(b.cols, col_sizes[bj]);
                for i in 0..b.rows {
                    for j in 0..b.cols {
                        out.set(r0 + i, c0 + j, b.at(i, j).clone());
                    }
                }
                c0 += b.cols;
            }
            r0 += row_sizes[bi];
        }
        out
    }

    pub fn delete_row_col(&self, row: Option<usize>, col: Option<usize>) -> Self {
        let rows: Vec<usize> = (0..self.rows).filter(|r| Some(*r) != row).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|c| Some(*c) != col).collect();
        let mut out = Self::zero(self.n, rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                out.set(i, j, self.at(r, c).clone());
            }
        }
        out
    }
}

/// Basis of the v-degree-`d` graded piece of a free module with generator
/// v-degrees `gen_degs` over x_1..x_n: pairs (generator index, monomial).
pub fn graded_piece_basis(n: usize, gen_degs: &[i64], d: i64) -> Vec<(usize, Vec<u32>)> {
    let mut out = Vec::new();
    for (g, &gd) in gen_degs.iter().enumerate() {
        let rem = d - gd;
        if rem < 0 || rem % 2 != 0 {
            continue;
        }
        for m in monomials_of_degree(n, (rem / 2) as u32) {
            out.push((g, m));
        }
    }
    out
}

/// Restrict a graded map of free modules to the v-degree-`d` piece, returning
/// a sparse rational matrix in the bases produced by [`graded_piece_basis`].
pub fn graded_piece_matrix(
    m: &PolyMatrix,
    row_degs: &[i64],
    col_degs: &[i64],
    d: i64,
) -> SparseMatQ {
    assert_eq!(m.rows, row_degs.len());
    assert_eq!(m.cols, col_degs.len());
    let n = m.nvars();
    let row_basis = graded_piece_basis(n, row_degs, d);
    let col_basis = graded_piece_basis(n, col_degs, d);
    let mut row_index: BTreeMap<(usize, Vec<u32>), usize> = BTreeMap::new();
    for (i, b) in row_basis.iter().enumerate() {
        row_index.insert(b.clone(), i);
    }
    let mut sm = SparseMatQ::zero(row_basis.len(), col_basis.len());
    for (j, (g, mono)) in col_basis.iter().enumerate() {
        for r in 0..m.rows {
            let entry = m.at(r, *g);
            if entry.is_zero() {
                continue;
            }
            for (e, c) in entry.terms() {
                let target: Vec<u32> = e.iter().zip(mono).map(|(a, b)| a + b).collect();
                let key = (r, target);
                if let Some(&ri) = row_index.get(&key) {
                    sm.add_entry(ri, j, c.clone());
                }
            }
        }
    }
    sm
}

/// Dimension of the v-degree-`d` piece of a free module.
pub fn graded_piece_dim(n: usize, gen_degs: &[i64], d: i64) -> usize {
    gen_degs
        .iter()
        .filter_map(|&gd| {
            let rem = d - gd;
            if rem < 0 || rem % 2 != 0 {
                None
            } else {
                Some(count_monomials(n, (rem / 2) as u32))
            }
        })
        .sum()
}

fn count_monomials(n: usize, d: u32) -> usize {
    // C(d + n - 1, n - 1)
    if n == 0 {
        return if d == 0 { 1 } else { 0 };
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..(n - 1) {
        num *= (d as u128) + 1 + i as u128;
        den *= 1 + i as u128;
    }
    (num / den) as usize
}
