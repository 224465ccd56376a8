//! The Iwahori–Hecke algebra of the symmetric group in its permutation basis,
//! the Markov trace on the tower of these algebras, and the HOMFLY-PT
//! polynomial of a braid closure with its Jones specialization.

use std::collections::BTreeMap;

use crate::algebra::{qq, LaurentPoly, MultiPoly, MultiRational, VAR_A};
use crate::braid::BraidWord;

/// Permutation in one-line notation, 0-based: `w[i]` is the image of `i`.
pub type Perm = Vec<usize>;

/// Number of inversions (Coxeter length) of a permutation.
pub fn perm_length(w: &[usize]) -> usize {
    let mut len = 0;
    for i in 0..w.len() {
        for j in (i + 1)..w.len() {
            if w[i] > w[j] {
                len += 1;
            }
        }
    }
    len
}

/// Element of the Hecke algebra on `n` strands: a finite sum of standard
/// basis elements H_w with Laurent-polynomial coefficients. The generators
/// satisfy H_i² = (v^{−1} − v)·H_i + 1, so H_i^{−1} = H_i + (v − v^{−1}).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<Perm, LaurentPoly>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        HeckeElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The identity H_e.
    pub fn one(n: usize) -> Self {
        let mut x = Self::zero(n);
        x.add_term((0..n).collect(), LaurentPoly::one());
        x
    }

    /// The generator H_i (1-based, 1 ≤ i ≤ n−1).
    pub fn generator(n: usize, i: usize) -> Self {
        assert!(1 <= i && i < n);
        let mut w: Perm = (0..n).collect();
        w.swap(i - 1, i);
        let mut x = Self::zero(n);
        x.add_term(w, LaurentPoly::one());
        x
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &[usize]) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    fn add_term(&mut self, w: Perm, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(e) => {
                *e = e.add(&c);
                if e.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.neg());
        }
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.n);
        for (w, k) in &self.terms {
            out.add_term(w.clone(), k.mul(c));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Right multiplication by H_i (sign +1) or H_i^{−1} (sign −1), i 1-based.
/// On the basis: H_w·H_i = H_{ws_i} when that increases length, and
/// H_{ws_i} + (v^{−1} − v)·H_w otherwise.
pub fn mul_generator(x: &HeckeElement, i: usize, sign: i32) -> HeckeElement {
    assert!(1 <= i && i < x.n, "generator index out of range");
    assert!(sign == 1 || sign == -1);
    let p = i - 1;
    let vmv = LaurentPoly::v().sub(&LaurentPoly::monomial(-1, qq(1)));
    let mut out = HeckeElement::zero(x.n);
    for (w, c) in &x.terms {
        let mut ws = w.clone();
        ws.swap(p, p + 1);
        if w[p] < w[p + 1] {
            // length goes up
            out.add_term(ws, c.clone());
        } else {
            // H_w·H_i = H_{ws_i} + (v^{−1} − v) H_w
            out.add_term(ws, c.clone());
            out.add_term(w.clone(), c.mul(&vmv.neg()));
        }
    }
    if sign == -1 {
        // H_i^{−1} = H_i + (v − v^{−1})
        out = out.add(&x.scale(&vmv));
    }
    out
}

/// Reduced word for `w` as 1-based generator indices, left-to-right.
fn reduced_word(w: &[usize]) -> Vec<usize> {
    if w.len() <= 1 {
        return Vec::new();
    }
    let mut w = w.to_vec();
    let mut rev = Vec::new();
    loop {
        let mut found = None;
        for i in 0..w.len() - 1 {
            if w[i] > w[i + 1] {
                found = Some(i);
                break;
            }
        }
        match found {
            Some(i) => {
                w.swap(i, i + 1);
                rev.push(i + 1);
            }
            None => break,
        }
    }
    rev.reverse();
    rev
}

/// Product in the Hecke algebra.
pub fn mul(x: &HeckeElement, y: &HeckeElement) -> HeckeElement {
    assert_eq!(x.n, y.n);
    let mut out = HeckeElement::zero(x.n);
    for (w, c) in &y.terms {
        let mut acc = x.scale(c);
        // H_w as a product of generators along a reduced word
        for i in reduced_word(w) {
            acc = mul_generator(&acc, i, 1);
        }
        out = out.add(&acc);
    }
    out
}

/// Image of a braid word under β_i ↦ H_i, β_i^{−1} ↦ H_i^{−1}.
pub fn braid_to_hecke(b: &BraidWord) -> HeckeElement {
    let mut x = HeckeElement::one(b.strands);
    for &l in &b.letters {
        x = mul_generator(&x, l.unsigned_abs() as usize, l.signum());
    }
    x
}

/// The normalization σ = τ(1 ∈ ℍ_1) = (1 + h v²)/(1 − v²).
pub fn sigma() -> MultiRational {
    let one = MultiPoly::one();
    let hv2 = MultiPoly::monomial([2, 1, 0], 1.into());
    let v2 = MultiPoly::monomial([2, 0, 0], 1.into());
    MultiRational::new(one.add(&hv2), one.sub(&v2))
}

/// The Markov trace on the tower of Hecke algebras, normalized so that the
/// identity of ℍ_n has trace σ^n: the unique linear family with
/// τ_n(y) = σ·τ_{n−1}(y) and τ_n(a·H_{n−1}·b) = v^{−1}·τ_{n−1}(ab) for
/// a, b, y ∈ ℍ_{n−1}. Values are rational functions in v and h.
pub fn ocneanu_trace(x: &HeckeElement) -> MultiRational {
    let mut total = MultiRational::zero();
    for (w, c) in &x.terms {
        let t = trace_word(x.n, w);
        total = total.add(&MultiRational::from_laurent(c).mul(&t));
    }
    total
}

fn trace_word(n: usize, w: &[usize]) -> MultiRational {
    if n == 0 {
        return MultiRational::one();
    }
    if w[n - 1] == n - 1 {
        // w lies in the subalgebra on the first n−1 strands
        return sigma().mul(&trace_word(n - 1, &w[..n - 1]));
    }
    // unique factorization w = u·(s_{n−1}···s_j) with u fixing n; in one-line
    // notation u is w with the entry n−1 (0-based) deleted. Peeling the top
    // generator off H_w = H_u·H_{n−1}·(H_{n−2}···H_j) costs a factor v^{−1}
    // and leaves H_u·H_{n−2}···H_j inside ℍ_{n−1}.
    let j = w.iter().position(|&m| m == n - 1).unwrap(); // 0-based position
    let u: Perm = w
        .iter()
        .filter(|&&m| m != n - 1)
        .copied()
        .collect();
    let mut x = HeckeElement::zero(n - 1);
    x.add_term(u, LaurentPoly::one());
    // 1-based generators n−2 down to j+1
    for g in ((j + 1)..=(n.saturating_sub(2))).rev() {
        x = mul_generator(&x, g, 1);
    }
    MultiRational::v_pow(-1).mul(&ocneanu_trace(&x))
}

/// Whether τ(xy) = τ(yx).
pub fn trace_symmetry_check(x: &HeckeElement, y: &HeckeElement) -> bool {
    ocneanu_trace(&mul(x, y)) == ocneanu_trace(&mul(y, x))
}

/// HOMFLY-PT polynomial of the braid closure, as a rational function in v
/// and a: a^{ε−n}·v^{n}·τ(braid), with h := −a²v^{−2} substituted into the
/// trace. The unknot evaluates to (a − a^{−1})/(v − v^{−1}), not 1. Setting
/// a = v² recovers the Jones polynomial; a = v^k the exterior-power quantum
/// invariants.
pub fn homfly(b: &BraidWord) -> MultiRational {
    let eps = b.exponent_sum();
    let n = b.strands as i64;
    let tr = ocneanu_trace(&braid_to_hecke(b));
    let norm = MultiRational::monomial_pow(VAR_A, eps - n).mul(&MultiRational::v_pow(n));
    norm.mul(&tr).subst_h_to_a()
}

/// HOMFLY-PT specialized at a = v^k, as a Laurent polynomial when the
/// specialized denominator is invertible (k ≥ 2; at k = 2 this is Jones).
pub fn homfly_at_a(b: &BraidWord, k: i64) -> Option<LaurentPoly> {
    homfly(b).subst_a_to_v_pow(k).to_laurent()
}
