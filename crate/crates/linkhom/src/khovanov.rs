//! Khovanov homology of braid closures via the cube of resolutions, over the
//! rationals, with its bigraded Poincaré polynomial.
//!
//! Each smoothing state carries a tensor power of the rank-2 Frobenius
//! algebra A = span{1, x}; cube edges merge circles with the multiplication
//! or split them with the comultiplication, with lexicographic signs. The
//! graded Euler characteristic at t = −1 is the Jones polynomial, and the
//! unknot's Poincaré polynomial is v + v^{−1}.

use std::collections::BTreeMap;
use std::fmt;

use num::Zero;

use crate::algebra::{qq, Eliminator, LaurentPoly, QQ};
use crate::braid::{BraidWord, ClosureDiagram};

/// The rank-2 Frobenius algebra underlying the cube: basis {1, x} with
/// deg 1 = +1, deg x = −1 (pinned by the unknot Poincaré polynomial [2] and
/// by χ = Jones), multiplication m and comultiplication Δ below, unit 1, and
/// counit picking the x-coefficient.
pub struct FrobeniusData;

/// Basis element of A: `false` = 1, `true` = x.
pub type ABasis = bool;

impl FrobeniusData {
    /// m(y₁ ⊗ y₂); `None` is zero (x·x = 0).
    pub fn mult(&self, y1: ABasis, y2: ABasis) -> Option<ABasis> {
        if y1 && y2 {
            None
        } else {
            Some(y1 | y2)
        }
    }

    /// Δ(y) as a sum of basis tensors: Δ(1) = 1⊗x + x⊗1, Δ(x) = x⊗x.
    pub fn comult(&self, y: ABasis) -> Vec<(ABasis, ABasis)> {
        if y {
            vec![(true, true)]
        } else {
            vec![(false, true), (true, false)]
        }
    }

    pub fn unit(&self) -> ABasis {
        false
    }

    /// ε(1) = 0, ε(x) = 1.
    pub fn counit(&self, y: ABasis) -> i64 {
        y as i64
    }

    pub fn degree(&self, y: ABasis) -> i64 {
        if y {
            -1
        } else {
            1
        }
    }
}

pub fn frobenius_ops() -> FrobeniusData {
    FrobeniusData
}

/// A generator of the cube complex: a smoothing state together with a basis
/// element of A^{⊗circles}, encoded as an x-mask over the state's circles in
/// their canonical order.
type Gen = (u32, u64);

/// The cube of resolutions of a braid closure: one vertex per smoothing
/// state carrying A^{⊗circles}, with signed merge/split differentials.
pub struct CubeComplex {
    crossings: usize,
    n_minus: i64,
    internal_base: i64,
    /// per state: circles as atom lists (canonical order), and atom → circle
    states: Vec<StateCircles>,
    /// per crossing: its four corner atoms in the smoothing graph
    diagram_corners: Vec<[(usize, usize); 4]>,
}

struct StateCircles {
    circles: Vec<Vec<(usize, usize)>>,
    atom_to_circle: BTreeMap<(usize, usize), usize>,
}

impl StateCircles {
    fn new(circles: Vec<Vec<(usize, usize)>>) -> Self {
        let mut atom_to_circle = BTreeMap::new();
        for (i, c) in circles.iter().enumerate() {
            for &a in c {
                atom_to_circle.insert(a, i);
            }
        }
        StateCircles {
            circles,
            atom_to_circle,
        }
    }
}

/// Build the cube complex of the closure of `b`.
pub fn cube_complex(b: &BraidWord) -> CubeComplex {
    let d = ClosureDiagram::new(b);
    let c = d.crossing_count();
    assert!(c <= 20, "cube is exhaustive; diagram too large");
    let mut states = Vec::with_capacity(1 << c);
    let mut geom = vec![false; c];
    for s in 0u32..(1u32 << c) {
        for i in 0..c {
            geom[i] = ((s >> i) & 1 == 1) ^ (d.crossing_sign(i) < 0);
        }
        states.push(StateCircles::new(d.smoothing_circle_structure(&geom)));
    }
    CubeComplex {
        crossings: c,
        n_minus: b.n_minus() as i64,
        internal_base: b.n_plus() as i64 - 2 * b.n_minus() as i64,
        states,
        diagram_corners: (0..c).map(|i| d.crossing_corners(i)).collect(),
    }
}

impl CubeComplex {
    pub fn crossing_count(&self) -> usize {
        self.crossings
    }

    pub fn circle_count(&self, state: u32) -> usize {
        self.states[state as usize].circles.len()
    }

    /// Homological degree of a state: |s| − n₋.
    pub fn homological_degree(&self, state: u32) -> i64 {
        state.count_ones() as i64 - self.n_minus
    }

    /// Internal degree of a generator: (#1 − #x over the circles) + |s| +
    /// n₊ − 2n₋.
    pub fn internal_degree(&self, g: Gen) -> i64 {
        let (state, mask) = g;
        let k = self.circle_count(state) as i64;
        let xs = mask.count_ones() as i64;
        (k - 2 * xs) + state.count_ones() as i64 + self.internal_base
    }

    fn gens_of_state(&self, state: u32) -> impl Iterator<Item = Gen> + '_ {
        let k = self.circle_count(state);
        (0u64..(1u64 << k)).map(move |m| (state, m))
    }

    /// All generators, grouped by (homological degree, internal degree).
    fn graded_basis(&self) -> BTreeMap<(i64, i64), Vec<Gen>> {
        let mut out: BTreeMap<(i64, i64), Vec<Gen>> = BTreeMap::new();
        for s in 0u32..(1u32 << self.crossings) {
            let j = self.homological_degree(s);
            for g in self.gens_of_state(s) {
                out.entry((j, self.internal_degree(g))).or_default().push(g);
            }
        }
        out
    }

    /// Image of a generator under the full differential, as (target, coeff).
    pub fn differential(&self, g: Gen) -> Vec<(Gen, QQ)> {
        let (state, mask) = g;
        let frob = FrobeniusData;
        let src = &self.states[state as usize];
        let mut out = Vec::new();
        for i in 0..self.crossings {
            if (state >> i) & 1 == 1 {
                continue;
            }
            let sign = if (state & ((1 << i) - 1)).count_ones() % 2 == 1 {
                qq(-1)
            } else {
                qq(1)
            };
            let tstate = state | (1 << i);
            let tgt = &self.states[tstate as usize];
            let corners = &self.diagram_corners[i];
            // source and target circles touching this crossing
            let mut src_aff: Vec<usize> = corners
                .iter()
                .map(|a| src.atom_to_circle[a])
                .collect();
            src_aff.sort_unstable();
            src_aff.dedup();
            let mut tgt_aff: Vec<usize> = corners
                .iter()
                .map(|a| tgt.atom_to_circle[a])
                .collect();
            tgt_aff.sort_unstable();
            tgt_aff.dedup();
            // unaffected circles keep their atom sets; match by first atom
            let carry = |tmask_base: u64| -> u64 {
                let mut t = tmask_base;
                for (sj, circ) in src.circles.iter().enumerate() {
                    if src_aff.contains(&sj) {
                        continue;
                    }
                    if (mask >> sj) & 1 == 1 {
                        let tj = tgt.atom_to_circle[&circ[0]];
                        t |= 1 << tj;
                    }
                }
                t
            };
            if src_aff.len() == 2 {
                // merge
                debug_assert_eq!(tgt_aff.len(), 1);
                let y1 = (mask >> src_aff[0]) & 1 == 1;
                let y2 = (mask >> src_aff[1]) & 1 == 1;
                if let Some(y) = frob.mult(y1, y2) {
                    let base = if y { 1u64 << tgt_aff[0] } else { 0 };
                    out.push(((tstate, carry(base)), sign.clone()));
                }
            } else {
                // split
                debug_assert_eq!(src_aff.len(), 1);
                debug_assert_eq!(tgt_aff.len(), 2);
                let y = (mask >> src_aff[0]) & 1 == 1;
                for (a, b) in frob.comult(y) {
                    let mut base = 0u64;
                    if a {
                        base |= 1 << tgt_aff[0];
                    }
                    if b {
                        base |= 1 << tgt_aff[1];
                    }
                    out.push(((tstate, carry(base)), sign.clone()));
                }
            }
        }
        out
    }

    /// Exact check that the differential squares to zero.
    pub fn d_squared_is_zero(&self) -> bool {
        for s in 0u32..(1u32 << self.crossings) {
            for g in self.gens_of_state(s) {
                let mut acc: BTreeMap<Gen, QQ> = BTreeMap::new();
                for (h, c1) in self.differential(g) {
                    for (k, c2) in self.differential(h) {
                        let e = acc.entry(k).or_insert_with(QQ::zero);
                        *e += &c1 * &c2;
                        if e.is_zero() {
                            acc.remove(&k);
                        }
                    }
                }
                if !acc.is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// Bigraded Betti numbers over the rationals, as the Poincaré polynomial
    /// in t (homological) and v (internal).
    pub fn poincare(&self) -> KhPoincare {
        let basis = self.graded_basis();
        // index basis elements within each bidegree
        let mut index: BTreeMap<Gen, (i64, i64, usize)> = BTreeMap::new();
        for (&(j, d), gens) in &basis {
            for (k, &g) in gens.iter().enumerate() {
                index.insert(g, (j, d, k));
            }
        }
        // rank of the outgoing differential per bidegree
        let mut rank_out: BTreeMap<(i64, i64), usize> = BTreeMap::new();
        for (&(j, d), gens) in &basis {
            let target_dim = basis.get(&(j + 1, d)).map_or(0, |v| v.len());
            let mut el = Eliminator::new(target_dim.max(1));
            for &g in gens {
                let mut col: BTreeMap<usize, QQ> = BTreeMap::new();
                for ((ts, tm), coeff) in self.differential(g) {
                    let (tj, td, tk) = index[&(ts, tm)];
                    debug_assert_eq!((tj, td), (j + 1, d), "differential must preserve bidegree");
                    let e = col.entry(tk).or_insert_with(QQ::zero);
                    *e += coeff;
                    if e.is_zero() {
                        col.remove(&tk);
                    }
                }
                el.push(col);
            }
            rank_out.insert((j, d), el.rank());
        }
        let mut terms = BTreeMap::new();
        for (&(j, d), gens) in &basis {
            let out = rank_out[&(j, d)];
            let inn = rank_out.get(&(j - 1, d)).copied().unwrap_or(0);
            let betti = gens.len() - out - inn;
            if betti > 0 {
                terms.insert((j, d), betti as u64);
            }
        }
        KhPoincare { terms }
    }
}

/// Bigraded Poincaré polynomial: nonnegative coefficients on t^j v^d.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KhPoincare {
    terms: BTreeMap<(i64, i64), u64>,
}

impl KhPoincare {
    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &u64)> {
        self.terms.iter()
    }

    pub fn total_dimension(&self) -> u64 {
        self.terms.values().sum()
    }

    /// Graded Euler characteristic: substitute t = −1.
    pub fn at_t_minus_one(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (&(j, d), &c) in &self.terms {
            let coeff = if j.rem_euclid(2) == 1 {
                -(c as i64)
            } else {
                c as i64
            };
            p = p.add(&LaurentPoly::monomial(d, qq(coeff)));
        }
        p
    }

    /// Product, matching disjoint unions of links.
    pub fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<(i64, i64), u64> = BTreeMap::new();
        for (&(j1, d1), &c1) in &self.terms {
            for (&(j2, d2), &c2) in &other.terms {
                *terms.entry((j1 + j2, d1 + d2)).or_insert(0) += c1 * c2;
            }
        }
        KhPoincare { terms }
    }
}

impl fmt::Display for KhPoincare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(j, d), &c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut parts = Vec::new();
            if c != 1 {
                parts.push(c.to_string());
            }
            if j != 0 {
                parts.push(if j == 1 { "t".into() } else { format!("t^{}", j) });
            }
            if d != 0 {
                parts.push(if d == 1 { "v".into() } else { format!("v^{}", d) });
            }
            if parts.is_empty() {
                parts.push("1".into());
            }
            write!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

/// Khovanov homology Poincaré polynomial of the braid closure.
pub fn kh_poincare(b: &BraidWord) -> KhPoincare {
    cube_complex(b).poincare()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{enumerate_moves, parse_braid};
    use crate::kauffman::jones;

    fn kh(word: &str) -> KhPoincare {
        kh_poincare(&parse_braid(word).unwrap())
    }

    #[test]
    fn frobenius_structure() {
        let f = frobenius_ops();
        assert_eq!(f.mult(false, true), Some(true)); // m(1⊗x) = x
        assert_eq!(f.mult(true, true), None); // x² = 0
        assert_eq!(f.comult(false), vec![(false, true), (true, false)]);
        assert_eq!(f.comult(true), vec![(true, true)]);
        assert_eq!(f.counit(f.unit()), 0);
        // Frobenius identity (m ⊗ id)(id ⊗ Δ) = Δ∘m on A ⊗ A, as linear
        // maps into A ⊗ A: compare multisets of basis outputs.
        for y1 in [false, true] {
            for y2 in [false, true] {
                // left: apply Δ to y2, then m(y1, first leg)
                let mut left: Vec<(bool, bool)> = Vec::new();
                for (a, b) in f.comult(y2) {
                    if let Some(m) = f.mult(y1, a) {
                        left.push((m, b));
                    }
                }
                // right: m(y1, y2) then Δ
                let mut right: Vec<(bool, bool)> = Vec::new();
                if let Some(m) = f.mult(y1, y2) {
                    right.extend(f.comult(m));
                }
                left.sort_unstable();
                right.sort_unstable();
                assert_eq!(left, right, "y1={} y2={}", y1, y2);
            }
        }
    }

    #[test]
    fn unknot_complex() {
        let c = cube_complex(&parse_braid("1:").unwrap());
        assert_eq!(c.crossing_count(), 0);
        assert_eq!(c.circle_count(0), 1);
        let p = kh("1:");
        let expect: BTreeMap<(i64, i64), u64> = [((0, -1), 1), ((0, 1), 1)].into();
        assert_eq!(p.terms, expect);
        assert_eq!(p.to_string(), "v^-1 + v");
    }

    #[test]
    fn hopf_cube_structure() {
        let c = cube_complex(&parse_braid("2: 1 1").unwrap());
        let counts: Vec<usize> = (0..4).map(|s| c.circle_count(s)).collect();
        assert_eq!(counts, vec![2, 1, 1, 2]);
        assert!(c.d_squared_is_zero());
    }

    #[test]
    fn hopf_homology() {
        let p = kh("2: 1 1");
        let expect: BTreeMap<(i64, i64), u64> =
            [((0, 0), 1), ((0, 2), 1), ((2, 4), 1), ((2, 6), 1)].into();
        assert_eq!(p.terms, expect);
        assert_eq!(p.at_t_minus_one(), jones(&parse_braid("2: 1 1").unwrap()));
    }

    #[test]
    fn unlink_from_cancelling_pair() {
        // closure of β₁β₁^{-1} is the 2-component unlink
        let p = kh("2: 1 -1");
        let expect: BTreeMap<(i64, i64), u64> =
            [((0, -2), 1), ((0, 0), 2), ((0, 2), 1)].into();
        assert_eq!(p.terms, expect);
    }

    #[test]
    fn d_squared_zero_on_corpus() {
        for word in crate::CORPUS {
            let b = parse_braid(word).unwrap();
            assert!(cube_complex(&b).d_squared_is_zero(), "braid {}", b);
        }
    }

    #[test]
    fn euler_characteristic_is_jones() {
        for word in crate::CORPUS {
            let b = parse_braid(word).unwrap();
            assert_eq!(
                kh_poincare(&b).at_t_minus_one(),
                jones(&b),
                "braid {}",
                b
            );
        }
    }

    #[test]
    fn invariant_under_moves() {
        for word in ["1:", "2: 1", "2: 1 1", "2: 1 -1", "3: 1 2", "2: 1 1 1"] {
            let b = parse_braid(word).unwrap();
            let p = kh_poincare(&b);
            for m in enumerate_moves(&b) {
                assert_eq!(kh_poincare(&m), p, "move {} of {}", m, b);
            }
        }
    }

    #[test]
    fn disjoint_union_multiplies() {
        // "3: 1 1" is the Hopf link plus a far split unknot
        let hopf = kh("2: 1 1");
        let unknot = kh("1:");
        assert_eq!(kh("3: 1 1"), hopf.mul(&unknot));
        assert_eq!(kh("2:"), unknot.mul(&unknot));
    }

    #[test]
    fn trefoil_homology() {
        // right-handed trefoil: homology in bidegrees (0,1),(0,3),(2,5),
        // (3,9), plus (2,7)/(3,7) torsion-free ranks over Q
        let p = kh("2: 1 1 1");
        let expect: BTreeMap<(i64, i64), u64> =
            [((0, 1), 1), ((0, 3), 1), ((2, 5), 1), ((3, 9), 1)].into();
        assert_eq!(p.terms, expect);
        assert_eq!(p.at_t_minus_one(), jones(&parse_braid("2: 1 1 1").unwrap()));
    }
}
