//! Degreewise Hochschild homology of free-left-basis bimodules, via the
//! Koszul complex of the commuting operators ρ_k − x_k, and the two-step
//! homology of a bimodule complex (Hochschild first, then the induced
//! cohomology in the complex direction) that underlies the triply graded
//! closure invariant.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::algebra::xpoly::{graded_piece_dim, graded_piece_matrix};
use crate::algebra::{
    qq, Eliminator, HVSeries, PolyMatrix, SparseMatQ, TriGradedSeries, TruncatedVSeries, QQ,
};

use super::{Bimodule, BimoduleComplex};

/// Ascending k-subsets of 0..n in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Generator degrees of the Koszul level K_i = M ⊗ Λ^i, subset-major with the
/// module generators fastest; each exterior generator has v-degree 2.
fn koszul_degs(m: &Bimodule, i: usize) -> Vec<i64> {
    let count = subsets(m.ctx.n, i).len();
    let mut out = Vec::with_capacity(count * m.rank());
    for _ in 0..count {
        out.extend(m.degs().iter().map(|&g| g + 2 * i as i64));
    }
    out
}

/// Koszul differential K_i → K_{i−1}: contraction against the commuting
/// operators d_k = ρ_k − x_k·id with the usual alternating signs.
fn koszul_diff(m: &Bimodule, i: usize) -> PolyMatrix {
    let n = m.ctx.n;
    let r = m.rank();
    let col_sets = subsets(n, i);
    let row_sets = subsets(n, i - 1);
    let row_index: BTreeMap<&[usize], usize> = row_sets
        .iter()
        .enumerate()
        .map(|(ix, s)| (s.as_slice(), ix))
        .collect();
    let dks: Vec<PolyMatrix> = (0..n)
        .map(|k| {
            m.rho(k)
                .sub(&PolyMatrix::identity(n, r).scale_poly(&m.ctx.var(k + 1)))
        })
        .collect();
    let mut out = PolyMatrix::zero(n, row_sets.len() * r, col_sets.len() * r);
    for (si, s) in col_sets.iter().enumerate() {
        for (pos, &k) in s.iter().enumerate() {
            let t: Vec<usize> = s.iter().copied().filter(|&x| x != k).collect();
            let ti = row_index[t.as_slice()];
            for rr in 0..r {
                for cc in 0..r {
                    let e = dks[k].at(rr, cc);
                    if e.is_zero() {
                        continue;
                    }
                    let e = if pos % 2 == 1 { e.neg() } else { e.clone() };
                    out.set(ti * r + rr, si * r + cc, e);
                }
            }
        }
    }
    out
}

/// Extension of a bimodule map to Koszul level i: one copy per subset.
fn koszul_chain_map(f: &PolyMatrix, n: usize, i: usize) -> PolyMatrix {
    let count = subsets(n, i).len();
    PolyMatrix::identity(f.nvars(), count).kron(f)
}

/// Bigraded dimension series of the Hochschild homology of a bimodule:
/// h-degree i carries the level-i Koszul homology, with the v-grading
/// truncated at `cutoff`.
pub fn hochschild(m: &Bimodule, cutoff: i64) -> HVSeries {
    let n = m.ctx.n;
    let kdegs: Vec<Vec<i64>> = (0..=n).map(|i| koszul_degs(m, i)).collect();
    let kdiffs: Vec<PolyMatrix> = (1..=n).map(|i| koszul_diff(m, i)).collect();
    let vmin = m.degs().iter().copied().min().unwrap_or(0);
    let degrees: Vec<i64> = (vmin..=cutoff).collect();
    let hits: Vec<Vec<(usize, i64, i64)>> = degrees
        .par_iter()
        .map(|&d| {
            let ranks: Vec<usize> = kdiffs
                .iter()
                .enumerate()
                .map(|(ix, kd)| graded_piece_matrix(kd, &kdegs[ix], &kdegs[ix + 1], d).rank())
                .collect();
            let mut local = Vec::new();
            for i in 0..=n {
                let dim = graded_piece_dim(n, &kdegs[i], d) as i64;
                let rin = if i > 0 { ranks[i - 1] as i64 } else { 0 };
                let rout = if i < n { ranks[i] as i64 } else { 0 };
                let h = dim - rin - rout;
                assert!(h >= 0, "negative homology dimension");
                if h > 0 {
                    local.push((i, d, h));
                }
            }
            local
        })
        .collect();
    let mut by_h: BTreeMap<usize, Vec<(i64, QQ)>> = BTreeMap::new();
    for (i, d, h) in hits.into_iter().flatten() {
        by_h.entry(i).or_default().push((d, qq(h)));
    }
    let mut out = HVSeries::new();
    for (i, coeffs) in by_h {
        out.insert(i as i64, TruncatedVSeries::from_coeffs(cutoff, coeffs));
    }
    out
}

/// Triply graded dimension series of a bimodule complex: Hochschild homology
/// at every component, then cohomology of the induced complexes. Exponents
/// are doubled in t and h; the result is unnormalized (no framing shifts).
///
/// Per v-degree d, Hochschild level i, cohomological slot j the dimension is
/// |Z_j| − dim(D_j Z_j + B_{j+1}) + dim B_{j+1} − dim(D_{j−1} Z_{j−1} + B_j),
/// where Z/B are Koszul kernels/images and D the induced chain maps; this is
/// the quotient-free formula for ker/im of maps between subquotients.
pub fn hhh(c: &BimoduleComplex, cutoff: i64) -> TriGradedSeries {
    let n = c.comps[0].ctx.n;
    let nc = c.comps.len();
    let kdegs: Vec<Vec<Vec<i64>>> = c
        .comps
        .iter()
        .map(|m| (0..=n).map(|i| koszul_degs(m, i)).collect())
        .collect();
    let kdiffs: Vec<Vec<PolyMatrix>> = c
        .comps
        .iter()
        .map(|m| (1..=n).map(|i| koszul_diff(m, i)).collect())
        .collect();
    let cmaps: Vec<Vec<PolyMatrix>> = c
        .diffs
        .iter()
        .map(|dm| (0..=n).map(|i| koszul_chain_map(&dm.mat, n, i)).collect())
        .collect();
    let vmin = c
        .comps
        .iter()
        .flat_map(|m| m.degs().iter().copied())
        .min()
        .expect("complex has a component");
    let degrees: Vec<i64> = (vmin..=cutoff).collect();
    let hits: Vec<Vec<(i64, i64, i64, i64)>> = degrees
        .par_iter()
        .map(|&d| {
            // Graded pieces of the Koszul differentials, with zero border
            // maps at levels 0 and n+1.
            let a: Vec<Vec<SparseMatQ>> = (0..nc)
                .map(|j| {
                    let mut v = Vec::with_capacity(n + 2);
                    v.push(SparseMatQ::zero(0, graded_piece_dim(n, &kdegs[j][0], d)));
                    for i in 1..=n {
                        v.push(graded_piece_matrix(
                            &kdiffs[j][i - 1],
                            &kdegs[j][i - 1],
                            &kdegs[j][i],
                            d,
                        ));
                    }
                    v.push(SparseMatQ::zero(graded_piece_dim(n, &kdegs[j][n], d), 0));
                    v
                })
                .collect();
            let kers: Vec<Vec<Vec<BTreeMap<usize, QQ>>>> = (0..nc)
                .map(|j| (0..=n + 1).map(|i| a[j][i].kernel_basis()).collect())
                .collect();
            let rank = |j: usize, i: usize| a[j][i].cols() - kers[j][i].len();
            let mut local = Vec::new();
            for i in 0..=n {
                // u[j] = dim(B_{j+1} + D_j Z_j) inside K_i of component j+1.
                let u: Vec<i64> = (0..nc.saturating_sub(1))
                    .map(|j| {
                        let dmat =
                            graded_piece_matrix(&cmaps[j][i], &kdegs[j + 1][i], &kdegs[j][i], d);
                        let mut el = Eliminator::new(dmat.rows());
                        for col in 0..a[j + 1][i + 1].cols() {
                            el.push(a[j + 1][i + 1].col(col).clone());
                        }
                        for z in &kers[j][i] {
                            el.push(dmat.mul_vec(z));
                        }
                        el.rank() as i64
                    })
                    .collect();
                for j in 0..nc {
                    let z = kers[j][i].len() as i64;
                    let uj = if j + 1 < nc { u[j] } else { 0 };
                    let bnext = if j + 1 < nc { rank(j + 1, i + 1) as i64 } else { 0 };
                    let uprev = if j > 0 { u[j - 1] } else { rank(0, i + 1) as i64 };
                    let h = z - uj + bnext - uprev;
                    assert!(h >= 0, "negative homology dimension");
                    if h > 0 {
                        local.push((2 * (c.offset + j as i64), 2 * i as i64, d, h));
                    }
                }
            }
            local
        })
        .collect();
    let mut by_th: BTreeMap<(i64, i64), Vec<(i64, QQ)>> = BTreeMap::new();
    for (t2, h2, d, h) in hits.into_iter().flatten() {
        by_th.entry((t2, h2)).or_default().push((d, qq(h)));
    }
    let mut out = TriGradedSeries::new();
    for ((t2, h2), coeffs) in by_th {
        out.insert(t2, h2, TruncatedVSeries::from_coeffs(cutoff, coeffs));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::series::rational_to_series;
    use crate::algebra::{MultiRational, VAR_H};
    use crate::hecke::sigma;
    use crate::soergel::{bs_generator, RingCtx};

    #[test]
    fn subsets_are_lexicographic() {
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(
            subsets(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert!(subsets(2, 3).is_empty());
    }

    #[test]
    fn hochschild_of_coefficient_rings() {
        // One variable: the coinvariants are R and the top level is R⟨2⟩.
        let r1 = Bimodule::regular(RingCtx::new(1), 0);
        let s = sigma();
        assert!(hochschild(&r1, 20).eq_truncated(&rational_to_series(&s, 20).unwrap()));
        // Two variables: the square of the one-variable answer.
        let r2 = Bimodule::regular(RingCtx::new(2), 0);
        let s2 = s.mul(&s);
        assert!(hochschild(&r2, 20).eq_truncated(&rational_to_series(&s2, 20).unwrap()));
    }

    #[test]
    fn hochschild_of_a_generator_bimodule() {
        // For R ⊗_{R^s} R ⟨−1⟩ in two variables the three levels are free
        // of ranks one, two, one with generators in degrees −1, {1, 3}, 5.
        let b = bs_generator(RingCtx::new(2), 1);
        let v = MultiRational::v_pow;
        let h = MultiRational::var(VAR_H);
        let num = v(-1)
            .add(&h.mul(&v(1).add(&v(3))))
            .add(&h.mul(&h).mul(&v(5)));
        let den = MultiRational::one().sub(&v(2));
        let expect = num.div(&den.mul(&den));
        assert!(hochschild(&b, 16).eq_truncated(&rational_to_series(&expect, 16).unwrap()));
    }

    #[test]
    fn one_component_complexes_recover_hochschild() {
        for n in [1usize, 2] {
            let m = Bimodule::regular(RingCtx::new(n), 0);
            let c = BimoduleComplex::concentrated(m.clone(), 0);
            let flat = hhh(&c, 12);
            let hh = hochschild(&m, 12);
            let mut expect = TriGradedSeries::new();
            for (&i, s) in hh.terms() {
                expect.insert(0, 2 * i, s.clone());
            }
            assert!(flat.eq_truncated(&expect));
        }
    }
}
