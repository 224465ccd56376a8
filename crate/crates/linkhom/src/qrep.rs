//! Exact matrix models for quantum 𝔤𝔩_k: the two vector representations
//! V_±, the coproduct action on tensor powers, braid-group R-matrices,
//! exterior powers with explicit bases, q-wedging/q-shuffling, and the
//! Jones–Wenzl projectors for k = 2.
//!
//! All maps are matrices of rational functions in v. The sign η = ±1
//! selects V_±, and γ := ηv^{−η} (so γ = −v for η = −1 and γ = v^{−1} for
//! η = +1) governs the R-matrix eigenvalues and the wedge normalizations.

use crate::algebra::{quantum_int, MultiRational, QMat};

/// Rank k and variant sign η, with the derived scalar γ = ηv^{−η}.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RepContext {
    pub k: usize,
    pub eta: i32,
}

impl RepContext {
    pub fn new(k: usize, eta: i32) -> Self {
        assert!(k >= 1, "rank must be positive");
        assert!(eta == 1 || eta == -1, "eta must be ±1");
        RepContext { k, eta }
    }

    /// γ = ηv^{−η}.
    pub fn gamma(&self) -> MultiRational {
        self.neg_gamma_pow(1).neg()
    }

    /// (−γ)^e: v^e for η = −1, (−1)^e v^{−e} for η = +1.
    pub fn neg_gamma_pow(&self, e: i64) -> MultiRational {
        if self.eta == -1 {
            MultiRational::v_pow(e)
        } else {
            let m = MultiRational::v_pow(-e);
            if e.rem_euclid(2) == 1 {
                m.neg()
            } else {
                m
            }
        }
    }

    /// γ^e.
    pub fn gamma_pow(&self, e: i64) -> MultiRational {
        let m = self.neg_gamma_pow(e);
        if e.rem_euclid(2) == 1 {
            m.neg()
        } else {
            m
        }
    }

    /// The γ^{−2}-factorial s_d = ∏_{m=1}^{d} (1 + γ^{−2} + … + γ^{−2(m−1)}),
    /// the squared norm of the q-antisymmetrizer on d factors.
    pub fn wedge_norm(&self, d: usize) -> MultiRational {
        let mut acc = MultiRational::one();
        for m in 1..=d {
            let mut row = MultiRational::zero();
            for t in 0..m {
                row = row.add(&self.gamma_pow(-2 * (t as i64)));
            }
            acc = acc.mul(&row);
        }
        acc
    }
}

/// An ordered tensor product of exterior powers of the vector
/// representation; degree 1 is the vector representation itself and degree
/// 0 the unit object. Degrees above k give zero factors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorSpace {
    pub degrees: Vec<usize>,
}

impl TensorSpace {
    pub fn naturals(n: usize) -> Self {
        TensorSpace {
            degrees: vec![1; n],
        }
    }

    pub fn wedges(ds: &[usize]) -> Self {
        TensorSpace {
            degrees: ds.to_vec(),
        }
    }

    pub fn dim(&self, k: usize) -> usize {
        self.degrees.iter().map(|&d| binomial(k, d)).product()
    }
}

fn binomial(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    let mut acc = 1usize;
    for i in 0..r.min(n - r) {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Basis of the d-th exterior power: strictly decreasing d-tuples from
/// {1, …, k}, listed lexicographically. For d = 1 this is e_1, …, e_k.
pub fn wedge_basis(k: usize, d: usize) -> Vec<Vec<usize>> {
    if d > k {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(d);
    fn rec(k: usize, d: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            // stored ascending for the recursion; reverse to decreasing
            let mut t = cur.clone();
            t.reverse();
            out.push(t);
            return;
        }
        for x in lo..=(k - (d - cur.len() - 1)) {
            cur.push(x);
            rec(k, d, x + 1, cur, out);
            cur.pop();
        }
    }
    rec(k, d, 1, &mut cur, &mut out);
    out
}

/// A matrix with declared domain and codomain tensor spaces; composition
/// and tensoring check the space bookkeeping.
#[derive(Clone, Debug)]
pub struct LinearMapQ {
    pub dom: TensorSpace,
    pub cod: TensorSpace,
    pub mat: QMat,
}

impl LinearMapQ {
    pub fn new(dom: TensorSpace, cod: TensorSpace, mat: QMat) -> Self {
        LinearMapQ { dom, cod, mat }
    }

    pub fn identity(ctx: &RepContext, space: TensorSpace) -> Self {
        let d = space.dim(ctx.k);
        LinearMapQ {
            dom: space.clone(),
            cod: space,
            mat: QMat::identity(d),
        }
    }

    /// self ∘ first.
    pub fn compose(&self, first: &Self) -> Self {
        assert_eq!(self.dom, first.cod, "composition requires matching spaces");
        LinearMapQ {
            dom: first.dom.clone(),
            cod: self.cod.clone(),
            mat: self.mat.mul(&first.mat),
        }
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let mut dom = self.dom.degrees.clone();
        dom.extend_from_slice(&other.dom.degrees);
        let mut cod = self.cod.degrees.clone();
        cod.extend_from_slice(&other.cod.degrees);
        LinearMapQ {
            dom: TensorSpace { degrees: dom },
            cod: TensorSpace { degrees: cod },
            mat: self.mat.kron(&other.mat),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dom, other.dom);
        assert_eq!(self.cod, other.cod);
        LinearMapQ {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            mat: self.mat.add(&other.mat),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dom, other.dom);
        assert_eq!(self.cod, other.cod);
        LinearMapQ {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            mat: self.mat.sub(&other.mat),
        }
    }

    pub fn scale(&self, c: &MultiRational) -> Self {
        LinearMapQ {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            mat: self.mat.scale(c),
        }
    }
}

/// Chevalley-type generators: E_i, F_i (1 ≤ i ≤ k−1) and D_j^{±1}
/// (1 ≤ j ≤ k).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Gen {
    E(usize),
    F(usize),
    D(usize, i64),
}

/// Action of a generator on a single vector-representation factor.
///
/// V_+ (η = +1): E_i e_i = e_{i+1}, F_i e_{i+1} = e_i, D_j e_r = v^{δ_{j,r}} e_r.
/// V_− (η = −1): E_i e_{i+1} = e_i, F_i e_i = −e_{i+1}, D_j e_r = −v^{δ_{j,r}} e_r.
pub fn generator_action(ctx: &RepContext, gen: Gen) -> QMat {
    let k = ctx.k;
    let mut m = QMat::zero(k, k);
    match gen {
        Gen::E(i) => {
            assert!((1..k).contains(&i), "E index out of range");
            if ctx.eta == 1 {
                m.set(i, i - 1, MultiRational::one());
            } else {
                m.set(i - 1, i, MultiRational::one());
            }
        }
        Gen::F(i) => {
            assert!((1..k).contains(&i), "F index out of range");
            if ctx.eta == 1 {
                m.set(i - 1, i, MultiRational::one());
            } else {
                m.set(i, i - 1, MultiRational::one().neg());
            }
        }
        Gen::D(j, e) => {
            assert!((1..=k).contains(&j), "D index out of range");
            assert!(e == 1 || e == -1, "D exponent must be ±1");
            for r in 1..=k {
                let exp = if r == j { e } else { 0 };
                let mut c = MultiRational::v_pow(exp);
                if ctx.eta == -1 {
                    // (−v^δ)^{±1} = −v^{±δ}
                    c = c.neg();
                }
                m.set(r - 1, r - 1, c);
            }
        }
    }
    m
}

/// Diagonal single-factor carrier G_i^e with G_i e_r = γ^{δ_{i,r}−δ_{i+1,r}} e_r:
/// the Cartan weight monomial in γ rather than v. This is the unique choice
/// making the R-matrices module homomorphisms for both η (it differs from
/// the naive product of D-actions, whose signs cancel).
fn carrier(ctx: &RepContext, i: usize, e: i64) -> QMat {
    let k = ctx.k;
    let mut m = QMat::zero(k, k);
    for r in 1..=k {
        let mut exp = 0;
        if r == i {
            exp += e;
        }
        if r == i + 1 {
            exp -= e;
        }
        m.set(r - 1, r - 1, ctx.gamma_pow(exp));
    }
    m
}

/// Action of a generator on the n-fold tensor power of the vector
/// representation, via the iterated coproduct
/// Δ(E_i) = E_i⊗1 + G_i⊗E_i,
/// Δ(F_i) = 1⊗F_i + F_i⊗G_i^{−1},
/// Δ(D_j^{±1}) = D_j^{±1}⊗D_j^{±1},
/// with the Cartan carrier G_i of `carrier`.
pub fn coproduct_action(ctx: &RepContext, gen: Gen, n: usize) -> QMat {
    let k = ctx.k;
    let single = generator_action(ctx, gen);
    if n == 0 {
        return QMat::identity(1);
    }
    match gen {
        Gen::D(_, _) => {
            let mut m = QMat::identity(1);
            for _ in 0..n {
                m = m.kron(&single);
            }
            m
        }
        Gen::E(i) | Gen::F(i) => {
            let (left, right) = match gen {
                Gen::E(_) => (carrier(ctx, i, 1), QMat::identity(k)),
                _ => (QMat::identity(k), carrier(ctx, i, -1)),
            };
            let mut total = QMat::zero(k.pow(n as u32), k.pow(n as u32));
            for p in 0..n {
                let mut m = QMat::identity(1);
                for q in 0..n {
                    let factor = if q < p {
                        &left
                    } else if q == p {
                        &single
                    } else {
                        &right
                    };
                    m = m.kron(factor);
                }
                total = total.add(&m);
            }
            total
        }
    }
}

/// The R-matrix H on two vector-representation factors:
/// e_a⊗e_b ↦ e_b⊗e_a (a > b), e_b⊗e_a + (v^{−1}−v)e_a⊗e_b (a < b),
/// γ·e_a⊗e_a (a = b).
fn h_two(ctx: &RepContext) -> QMat {
    let k = ctx.k;
    let idx = |a: usize, b: usize| (a - 1) * k + (b - 1);
    let mut m = QMat::zero(k * k, k * k);
    let vdiff = MultiRational::v_pow(-1).sub(&MultiRational::v_pow(1));
    for a in 1..=k {
        for b in 1..=k {
            if a == b {
                m.set(idx(a, a), idx(a, a), ctx.gamma());
            } else if a > b {
                m.set(idx(b, a), idx(a, b), MultiRational::one());
            } else {
                m.set(idx(b, a), idx(a, b), MultiRational::one());
                m.set(idx(a, b), idx(a, b), vdiff.clone());
            }
        }
    }
    m
}

/// Braid generator H_i^{±1} on the n-fold tensor power of the vector
/// representation; the inverse is H_i + (v−v^{−1})·id.
pub fn braid_action(ctx: &RepContext, i: usize, n: usize, sign: i32) -> QMat {
    assert!((1..n).contains(&i), "braid index out of range");
    let k = ctx.k;
    let mut h = h_two(ctx);
    if sign < 0 {
        let diff = MultiRational::v_pow(1).sub(&MultiRational::v_pow(-1));
        h = h.add(&QMat::identity(k * k).scale(&diff));
    }
    let mut m = QMat::identity(k.pow((i - 1) as u32));
    m = m.kron(&h);
    m.kron(&QMat::identity(k.pow((n - i - 1) as u32)))
}

/// Number of ascents-as-inversions of a tuple relative to decreasing
/// order: #{p < q : j_p < j_q}.
fn tuple_inversions(j: &[usize]) -> i64 {
    let mut c = 0;
    for p in 0..j.len() {
        for q in (p + 1)..j.len() {
            if j[p] < j[q] {
                c += 1;
            }
        }
    }
    c
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (p, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(p);
        for mut tail in permutations(&rest) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}

fn tensor_index(k: usize, j: &[usize]) -> usize {
    j.iter().fold(0, |acc, &r| acc * k + (r - 1))
}

/// The embedding ∧^d ↪ W^{⊗d}: e_i ↦ Σ (−γ)^{−inv(j)} e_{j_1}⊗…⊗e_{j_d}
/// over all rearrangements j of the strictly decreasing tuple i.
pub fn exterior_power_basis(ctx: &RepContext, d: usize) -> LinearMapQ {
    let k = ctx.k;
    let basis = wedge_basis(k, d);
    let mut m = QMat::zero(k.pow(d as u32), basis.len());
    for (col, tuple) in basis.iter().enumerate() {
        for j in permutations(tuple) {
            let c = ctx.neg_gamma_pow(-tuple_inversions(&j));
            m.set(tensor_index(k, &j), col, c);
        }
    }
    LinearMapQ::new(
        TensorSpace::wedges(&[d]),
        TensorSpace::naturals(d),
        m,
    )
}

/// The projection W^{⊗d} ↠ ∧^d, normalized so that projection ∘ embedding
/// is the identity: e_j ↦ ((−γ)^{−inv(j)}/s_d)·e_{sort↓(j)} for tuples with
/// distinct entries, 0 otherwise.
pub fn exterior_power_projection(ctx: &RepContext, d: usize) -> LinearMapQ {
    let k = ctx.k;
    let basis = wedge_basis(k, d);
    let inv_norm = ctx.wedge_norm(d).inv();
    let mut m = QMat::zero(basis.len(), k.pow(d as u32));
    for (row, tuple) in basis.iter().enumerate() {
        for j in permutations(tuple) {
            let c = ctx.neg_gamma_pow(-tuple_inversions(&j)).mul(&inv_norm);
            m.set(row, tensor_index(k, &j), c);
        }
    }
    LinearMapQ::new(
        TensorSpace::naturals(d),
        TensorSpace::wedges(&[d]),
        m,
    )
}

/// 𝓋_{ab} = v^{ab} for η = −1 and 1 for η = +1, the framing-type scalar in
/// the explicit wedge formulas.
fn wedge_twist(ctx: &RepContext, a: usize, b: usize) -> MultiRational {
    if ctx.eta == -1 {
        MultiRational::v_pow((a * b) as i64)
    } else {
        MultiRational::one()
    }
}

/// q-wedging ∧^a ⊗ ∧^b → ∧^{a+b}: embed both factors, reproject, and scale
/// by 𝓋_{ab}·s_{a+b}/(s_a·s_b). Zero map when a+b > k.
pub fn wedge_map(ctx: &RepContext, a: usize, b: usize) -> LinearMapQ {
    let emb = exterior_power_basis(ctx, a).tensor(&exterior_power_basis(ctx, b));
    let prj = exterior_power_projection(ctx, a + b);
    let c = wedge_twist(ctx, a, b)
        .mul(&ctx.wedge_norm(a + b))
        .div(&ctx.wedge_norm(a).mul(&ctx.wedge_norm(b)));
    let raw = LinearMapQ::new(
        TensorSpace::wedges(&[a, b]),
        TensorSpace::wedges(&[a + b]),
        prj.mat.mul(&emb.mat),
    );
    raw.scale(&c)
}

/// q-shuffling ∧^{a+b} → ∧^a ⊗ ∧^b: embed, project the two blocks, and
/// scale by (−γ)^{ab}·𝓋_{ab}^{−1}. Zero map when a+b > k.
pub fn shuffle_map(ctx: &RepContext, a: usize, b: usize) -> LinearMapQ {
    let emb = exterior_power_basis(ctx, a + b);
    let prj = exterior_power_projection(ctx, a).tensor(&exterior_power_projection(ctx, b));
    let c = ctx
        .neg_gamma_pow((a * b) as i64)
        .div(&wedge_twist(ctx, a, b));
    let raw = LinearMapQ::new(
        TensorSpace::wedges(&[a + b]),
        TensorSpace::wedges(&[a, b]),
        prj.mat.mul(&emb.mat),
    );
    raw.scale(&c)
}

/// The cup-cap idempotent-up-to-scalar on factors i, i+1 of the m-fold
/// tensor power for k = 2: U_i = γ·id − H_i, satisfying U_i² = [2]·U_i.
pub fn cup_cap(ctx: &RepContext, i: usize, m: usize) -> QMat {
    let dim = ctx.k.pow(m as u32);
    QMat::identity(dim)
        .scale(&ctx.gamma())
        .sub(&braid_action(ctx, i, m, 1))
}

/// The Jones–Wenzl projector on the m-fold tensor power of the vector
/// representation of quantum 𝔤𝔩_2 (η = +1), by the Wenzl recursion
/// JW_m = JW' − ([m−1]/[m])·JW'·U_{m−1}·JW' with JW' = JW_{m−1}⊗id.
pub fn jones_wenzl(m: usize) -> LinearMapQ {
    assert!(m >= 1, "projector needs at least one factor");
    let ctx = RepContext::new(2, 1);
    let mut mat = QMat::identity(2);
    for j in 2..=m {
        let prev = mat.kron(&QMat::identity(2));
        let u = cup_cap(&ctx, j - 1, j);
        let ratio = MultiRational::from_laurent(&quantum_int(j as i64 - 1))
            .div(&MultiRational::from_laurent(&quantum_int(j as i64)));
        mat = prev.sub(&prev.mul(&u.mul(&prev)).scale(&ratio));
    }
    LinearMapQ::new(
        TensorSpace::naturals(m),
        TensorSpace::naturals(m),
        mat,
    )
}
