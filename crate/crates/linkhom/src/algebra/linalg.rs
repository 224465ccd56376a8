//! Exact linear algebra: dense matrices over the rational-function field (used
//! for representation-theoretic operators) and sparse Gaussian elimination
//! over the rationals (used for homology of graded pieces).

use std::collections::BTreeMap;

use num::{One, Zero};

use super::multirat::MultiRational;
use super::QQ;

/// Dense matrix over multivariate rational functions. Columns hold images of
/// domain basis vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMat {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<MultiRational>,
}

impl QMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMat {
            rows,
            cols,
            entries: vec![MultiRational::zero(); rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zero(size, size);
        for i in 0..size {
            m.set(i, i, MultiRational::one());
        }
        m
    }

    pub fn from_diag(diag: &[MultiRational]) -> Self {
        let mut m = Self::zero(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    pub fn at(&self, r: usize, c: usize) -> &MultiRational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: MultiRational) {
        self.entries[r * self.cols + c] = v;
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

    pub fn scale(&self, c: &MultiRational) -> Self {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a = a.mul(c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix dimension mismatch");
        let mut out = Self::zero(self.rows, other.cols);
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
                    let t = out.at(i, j).add(&a.mul(b));
                    out.set(i, j, t);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.at(r, c).clone());
            }
        }
        out
    }

    /// Kronecker product: (A ⊗ B)[(i,k),(j,l)] = A[i,j]·B[k,l], with the right
    /// factor's index varying fastest.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.rows * other.rows, self.cols * other.cols);
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

    pub fn trace(&self) -> MultiRational {
        assert_eq!(self.rows, self.cols);
        let mut t = MultiRational::zero();
        for i in 0..self.rows {
            t = t.add(self.at(i, i));
        }
        t
    }

    /// Trace against a diagonal weight: Σ_i w_i · M[i,i].
    pub fn weighted_trace(&self, weights: &[MultiRational]) -> MultiRational {
        assert_eq!(self.rows, self.cols);
        assert_eq!(weights.len(), self.rows);
        let mut t = MultiRational::zero();
        for i in 0..self.rows {
            let d = self.at(i, i);
            if !d.is_zero() {
                t = t.add(&d.mul(&weights[i]));
            }
        }
        t
    }

    /// Partial trace over the last tensor factor (of dimension `d_last`,
    /// fastest-varying index) against a diagonal weight on that factor.
    pub fn partial_trace_last(&self, d_last: usize, weights: &[MultiRational]) -> Self {
        assert_eq!(self.rows, self.cols);
        assert_eq!(weights.len(), d_last);
        assert_eq!(self.rows % d_last, 0);
        let d_rest = self.rows / d_last;
        let mut out = Self::zero(d_rest, d_rest);
        for i in 0..d_rest {
            for j in 0..d_rest {
                let mut acc = MultiRational::zero();
                for s in 0..d_last {
                    let e = self.at(i * d_last + s, j * d_last + s);
                    if !e.is_zero() {
                        acc = acc.add(&e.mul(&weights[s]));
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// If the matrix is c·Id, return c.
    pub fn as_scalar_multiple_of_identity(&self) -> Option<MultiRational> {
        if self.rows != self.cols || self.rows == 0 {
            return None;
        }
        let c = self.at(0, 0).clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                if i == j {
                    if self.at(i, j) != &c {
                        return None;
                    }
                } else if !self.at(i, j).is_zero() {
                    return None;
                }
            }
        }
        Some(c)
    }
}

/// Sparse column-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMatQ {
    rows: usize,
    cols: Vec<BTreeMap<usize, QQ>>,
}

impl SparseMatQ {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatQ {
            rows,
            cols: vec![BTreeMap::new(); cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn add_entry(&mut self, r: usize, c: usize, v: QQ) {
        assert!(r < self.rows);
        if v.is_zero() {
            return;
        }
        let col = &mut self.cols[c];
        let e = col.entry(r).or_insert_with(QQ::zero);
        *e += v;
        if e.is_zero() {
            col.remove(&r);
        }
    }

    pub fn col(&self, c: usize) -> &BTreeMap<usize, QQ> {
        &self.cols[c]
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    /// Matrix product (self ∘ other), both sparse.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols(), other.rows());
        let mut out = Self::zero(self.rows, other.cols());
        for (j, ocol) in other.cols.iter().enumerate() {
            for (&k, w) in ocol {
                for (&r, v) in &self.cols[k] {
                    out.add_entry(r, j, v * w);
                }
            }
        }
        out
    }

    /// Image of a sparse vector (given as row->coeff over domain indices).
    pub fn mul_vec(&self, v: &BTreeMap<usize, QQ>) -> BTreeMap<usize, QQ> {
        let mut out: BTreeMap<usize, QQ> = BTreeMap::new();
        for (&j, c) in v {
            for (&r, w) in &self.cols[j] {
                let e = out.entry(r).or_insert_with(QQ::zero);
                *e += c * w;
                if e.is_zero() {
                    out.remove(&r);
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut el = Eliminator::new(self.rows);
        for c in &self.cols {
            el.push(c.clone());
        }
        el.rank()
    }

    /// Basis of the kernel, as sparse coordinate vectors over the columns.
    pub fn kernel_basis(&self) -> Vec<BTreeMap<usize, QQ>> {
        let mut el = Eliminator::new(self.rows);
        let mut out = Vec::new();
        for c in &self.cols {
            if let Some(combo) = el.push(c.clone()) {
                out.push(combo);
            }
        }
        out
    }
}

/// Incremental Gaussian elimination over the rationals with combination
/// tracking: each pushed vector that is dependent on its predecessors yields
/// the explicit linear relation, and spans can be queried for membership with
/// explicit coefficients.
pub struct Eliminator {
    dim: usize,
    /// Reduced basis vectors (leading coefficient 1) with, for each, its
    /// expression as a combination of pushed vectors.
    basis: Vec<(BTreeMap<usize, QQ>, BTreeMap<usize, QQ>)>,
    pivot_of: BTreeMap<usize, usize>,
    npushed: usize,
}

fn axpy(dst: &mut BTreeMap<usize, QQ>, c: &QQ, src: &BTreeMap<usize, QQ>) {
    for (&i, v) in src {
        let e = dst.entry(i).or_insert_with(QQ::zero);
        *e += c * v;
        if e.is_zero() {
            dst.remove(&i);
        }
    }
}

impl Eliminator {
    pub fn new(dim: usize) -> Self {
        Eliminator {
            dim,
            basis: Vec::new(),
            pivot_of: BTreeMap::new(),
            npushed: 0,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn npushed(&self) -> usize {
        self.npushed
    }

    /// Reduce `v` against the basis. Returns the residual together with the
    /// accumulated expression Σ c_i · combo_i of the subtracted part.
    fn reduce(&self, mut v: BTreeMap<usize, QQ>) -> (BTreeMap<usize, QQ>, BTreeMap<usize, QQ>) {
        let mut expr: BTreeMap<usize, QQ> = BTreeMap::new();
        loop {
            let lead = match v.keys().next() {
                Some(&l) => l,
                None => break,
            };
            let bi = match self.pivot_of.get(&lead) {
                Some(&bi) => bi,
                None => break,
            };
            let c = v[&lead].clone();
            let (bv, bc) = &self.basis[bi];
            axpy(&mut v, &(-c.clone()), bv);
            axpy(&mut expr, &c, bc);
        }
        (v, expr)
    }

    /// Push a vector. Returns `Some(relation)` when the vector is dependent:
    /// a sparse combination over pushed-vector indices summing to zero, with
    /// coefficient 1 on the newly pushed vector. Returns `None` when the
    /// vector enlarges the span.
    pub fn push(&mut self, v: BTreeMap<usize, QQ>) -> Option<BTreeMap<usize, QQ>> {
        debug_assert!(v.keys().all(|&r| r < self.dim));
        let k = self.npushed;
        self.npushed += 1;
        let (res, expr) = self.reduce(v);
        if res.is_empty() {
            // v_k = Σ expr[p]·v_p, so v_k − Σ expr[p]·v_p = 0.
            let mut rel = BTreeMap::new();
            rel.insert(k, QQ::one());
            axpy(&mut rel, &-QQ::one(), &expr);
            return Some(rel);
        }
        let lead = *res.keys().next().unwrap();
        let lc = res[&lead].clone();
        let inv = QQ::one() / lc;
        let mut bv = res;
        for val in bv.values_mut() {
            *val = &*val * &inv;
        }
        // combo for the normalized vector: (e_k − expr)/lc
        let mut bc = BTreeMap::new();
        bc.insert(k, inv.clone());
        axpy(&mut bc, &(-inv), &expr);
        self.pivot_of.insert(lead, self.basis.len());
        self.basis.push((bv, bc));
        None
    }

    /// Without pushing: if `v` lies in the current span, return coefficients
    /// over pushed-vector indices with v = Σ c_p · v_p.
    pub fn express(&self, v: BTreeMap<usize, QQ>) -> Option<BTreeMap<usize, QQ>> {
        let (res, expr) = self.reduce(v);
        if res.is_empty() {
            Some(expr)
        } else {
            None
        }
    }

    pub fn contains(&self, v: BTreeMap<usize, QQ>) -> bool {
        self.reduce(v).0.is_empty()
    }
}
