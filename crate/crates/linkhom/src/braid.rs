//! Braid words as link input, their closures, and the move generators used by
//! the invariance test suites.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A word in the braid group on `strands` strands. Letters are signed
/// generator indices: `+i` is the i-th positive crossing, `-i` its inverse,
/// with 1 ≤ i ≤ strands−1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Self {
        assert!(strands >= 1);
        for &l in &letters {
            assert!(l != 0 && (l.unsigned_abs() as usize) < strands);
        }
        BraidWord { strands, letters }
    }

    pub fn n_plus(&self) -> usize {
        self.letters.iter().filter(|&&l| l > 0).count()
    }

    pub fn n_minus(&self) -> usize {
        self.letters.iter().filter(|&&l| l < 0).count()
    }

    /// Sum of the signs of the letters (the writhe of the closure).
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// The mirror-image braid: every crossing sign flipped.
    pub fn mirror(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|&l| -l).collect(),
        }
    }

    /// Underlying permutation of the closure: `perm[s]` is where strand `s`
    /// (0-based at the bottom) exits at the top.
    pub fn permutation(&self) -> Vec<usize> {
        // pos[p] = strand currently occupying position p, bottom to top
        let mut pos: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            pos.swap(i, i + 1);
        }
        let mut out = vec![0; self.strands];
        for (end, &start) in pos.iter().enumerate() {
            out[start] = end;
        }
        out
    }

    /// Number of components of the closure link (cycles of the permutation).
    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut count = 0;
        for s in 0..self.strands {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut t = s;
            while !seen[t] {
                seen[t] = true;
                t = perm[t];
            }
        }
        count
    }

    /// For each strand (0-based), the component of the closure it belongs to,
    /// with components numbered by their smallest strand.
    pub fn strand_components(&self) -> Vec<usize> {
        let perm = self.permutation();
        let mut comp = vec![usize::MAX; self.strands];
        let mut next = 0;
        for s in 0..self.strands {
            if comp[s] != usize::MAX {
                continue;
            }
            let mut t = s;
            while comp[t] == usize::MAX {
                comp[t] = next;
                t = perm[t];
            }
            next += 1;
        }
        comp
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {}", l)?;
        }
        Ok(())
    }
}

/// Parse the braid grammar `"n: i1 i2 …"`: `n` strands followed by signed
/// nonzero generator indices with magnitude below `n`.
pub fn parse_braid(text: &str) -> Result<BraidWord, String> {
    let (head, tail) = text
        .split_once(':')
        .ok_or_else(|| format!("missing ':' in braid word {:?}", text))?;
    let strands: usize = head
        .trim()
        .parse()
        .map_err(|_| format!("bad strand count {:?}", head.trim()))?;
    if strands < 1 {
        return Err("strand count must be at least 1".to_string());
    }
    let mut letters = Vec::new();
    for tok in tail.split_whitespace() {
        let l: i32 = tok
            .parse()
            .map_err(|_| format!("bad braid letter {:?}", tok))?;
        if l == 0 {
            return Err("braid letter 0 is not a generator".to_string());
        }
        if l.unsigned_abs() as usize >= strands {
            return Err(format!(
                "generator index {} out of range for {} strands",
                l, strands
            ));
        }
        letters.push(l);
    }
    Ok(BraidWord { strands, letters })
}

/// The closure of a braid word as a planar diagram with enough incidence
/// structure to count the circles of any complete smoothing.
pub struct ClosureDiagram {
    strands: usize,
    /// (0-based position, sign) per crossing, bottom to top.
    crossings: Vec<(usize, i32)>,
}

impl ClosureDiagram {
    pub fn new(b: &BraidWord) -> Self {
        ClosureDiagram {
            strands: b.strands,
            crossings: b
                .letters
                .iter()
                .map(|&l| (l.unsigned_abs() as usize - 1, l.signum()))
                .collect(),
        }
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn crossing_sign(&self, i: usize) -> i32 {
        self.crossings[i].1
    }

    fn levels(&self) -> usize {
        self.crossings.len().max(1)
    }

    /// The four (level, position) atoms at the corners of crossing `c`;
    /// may contain duplicates on one-crossing diagrams where the top level
    /// wraps onto the bottom.
    pub fn crossing_corners(&self, c: usize) -> [(usize, usize); 4] {
        let (p, _) = self.crossings[c];
        let up = (c + 1) % self.levels();
        [(c, p), (c, p + 1), (up, p), (up, p + 1)]
    }

    fn smoothing_uf(&self, state: &[bool]) -> UnionFind {
        assert_eq!(state.len(), self.crossings.len());
        let n = self.strands;
        let levels = self.levels();
        let mut uf = UnionFind::new(levels * n);
        let atom = |level: usize, pos: usize| (level % levels) * n + pos;
        for (c, &(i, _)) in self.crossings.iter().enumerate() {
            for j in 0..n {
                if j == i || j == i + 1 {
                    continue;
                }
                uf.union(atom(c, j), atom(c + 1, j));
            }
            if state[c] {
                // cup-cap: the two strands turn back at this level
                uf.union(atom(c, i), atom(c, i + 1));
                uf.union(atom(c + 1, i), atom(c + 1, i + 1));
            } else {
                // identity: both strands pass through
                uf.union(atom(c, i), atom(c + 1, i));
                uf.union(atom(c, i + 1), atom(c + 1, i + 1));
            }
        }
        uf
    }

    /// Number of circles after smoothing every crossing: `state[c]` false for
    /// the identity smoothing of crossing c, true for the cup-cap smoothing.
    ///
    /// The diagram is sliced into horizontal levels; each level/strand
    /// position is an atom and each smoothed crossing (or through-strand)
    /// joins atoms of adjacent levels, with the top level wrapped to the
    /// bottom by the closure.
    pub fn smoothing_circles(&self, state: &[bool]) -> usize {
        self.smoothing_uf(state).class_count()
    }

    /// The circles of a complete smoothing as sorted lists of their
    /// (level, position) atoms, ordered by smallest atom.
    pub fn smoothing_circle_structure(&self, state: &[bool]) -> Vec<Vec<(usize, usize)>> {
        let n = self.strands;
        let levels = self.levels();
        let mut uf = self.smoothing_uf(state);
        let mut by_root: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
        for level in 0..levels {
            for pos in 0..n {
                let root = uf.find(level * n + pos);
                by_root.entry(root).or_default().push((level, pos));
            }
        }
        let mut circles: Vec<Vec<(usize, usize)>> = by_root.into_values().collect();
        for c in circles.iter_mut() {
            c.sort_unstable();
        }
        circles.sort_unstable();
        circles
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    fn class_count(&mut self) -> usize {
        let n = self.parent.len();
        (0..n).filter(|&i| self.find(i) == i).count()
    }
}

fn word_moves_into(b: &BraidWord, out: &mut BTreeSet<BraidWord>) {
    let w = &b.letters;
    let len = w.len();

    // far commutation
    for p in 0..len.saturating_sub(1) {
        let (i, j) = (w[p].unsigned_abs(), w[p + 1].unsigned_abs());
        if i.abs_diff(j) >= 2 {
            let mut v = w.clone();
            v.swap(p, p + 1);
            out.insert(BraidWord {
                strands: b.strands,
                letters: v,
            });
        }
    }

    // braid relation on same-sign windows: (si, sj, si) -> (sj, si, sj)
    for p in 0..len.saturating_sub(2) {
        let (a, c, e) = (w[p], w[p + 1], w[p + 2]);
        if a == e
            && a.signum() == c.signum()
            && a.unsigned_abs().abs_diff(c.unsigned_abs()) == 1
        {
            let mut v = w.clone();
            v[p] = c;
            v[p + 1] = a;
            v[p + 2] = c;
            out.insert(BraidWord {
                strands: b.strands,
                letters: v,
            });
        }
    }

    // free cancellation
    for p in 0..len.saturating_sub(1) {
        if w[p] == -w[p + 1] {
            let mut v = w.clone();
            v.drain(p..p + 2);
            out.insert(BraidWord {
                strands: b.strands,
                letters: v,
            });
        }
    }
}

/// Words related to `b` by a single move that fixes the braid group element
/// itself (not merely its closure): far commutation, the braid relation on a
/// same-sign window, or free cancellation of an adjacent inverse pair.
pub fn enumerate_word_moves(b: &BraidWord) -> Vec<BraidWord> {
    let mut out = BTreeSet::new();
    word_moves_into(b, &mut out);
    out.remove(b);
    out.into_iter().collect()
}

/// Words related to `b` by a single braid or Markov move: the word moves of
/// [`enumerate_word_moves`], cyclic rotation (conjugation), and stabilization
/// on either sign. Every returned word has the same closure link as `b`.
pub fn enumerate_moves(b: &BraidWord) -> Vec<BraidWord> {
    let mut out: BTreeSet<BraidWord> = BTreeSet::new();
    word_moves_into(b, &mut out);
    let w = &b.letters;
    let len = w.len();

    // cyclic rotation (conjugation by a prefix)
    for split in 1..len {
        let mut v = w[split..].to_vec();
        v.extend_from_slice(&w[..split]);
        out.insert(BraidWord {
            strands: b.strands,
            letters: v,
        });
    }

    // stabilization
    for sign in [1i32, -1] {
        let mut v = w.clone();
        v.push(sign * b.strands as i32);
        out.insert(BraidWord {
            strands: b.strands + 1,
            letters: v,
        });
    }

    out.remove(b);
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let b = parse_braid("2: 1 1").unwrap();
        assert_eq!((b.strands, b.letters.as_slice()), (2, &[1, 1][..]));
        let b = parse_braid("3: 1 -2 1").unwrap();
        assert_eq!((b.strands, b.letters.as_slice()), (3, &[1, -2, 1][..]));
        assert!(parse_braid("2: 3").is_err());
        assert!(parse_braid("2: 0").is_err());
        assert!(parse_braid("0:").is_err());
        assert!(parse_braid("2: x").is_err());
        assert!(parse_braid("nope").is_err());
        // round trip through the canonical rendering
        let b = parse_braid("3: 1 -2  1").unwrap();
        assert_eq!(b.to_string(), "3: 1 -2 1");
        assert_eq!(parse_braid(&b.to_string()).unwrap(), b);
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(parse_braid("2: 1 1").unwrap().exponent_sum(), 2);
        assert_eq!(parse_braid("2:").unwrap().exponent_sum(), 0);
        assert_eq!(parse_braid("3: 1 -2").unwrap().exponent_sum(), 0);
    }

    #[test]
    fn closure_counting() {
        // unknots
        assert_eq!(parse_braid("1:").unwrap().closure_components(), 1);
        assert_eq!(parse_braid("2: 1").unwrap().closure_components(), 1);
        // 2-component unlink and Hopf link
        assert_eq!(parse_braid("2:").unwrap().closure_components(), 2);
        assert_eq!(parse_braid("2: 1 1").unwrap().closure_components(), 2);
        // trefoil
        assert_eq!(parse_braid("2: 1 1 1").unwrap().closure_components(), 1);
        let comp = parse_braid("2: 1 1").unwrap().strand_components();
        assert_eq!(comp, vec![0, 1]);
        let comp = parse_braid("3: 1 2").unwrap().strand_components();
        assert_eq!(comp, vec![0, 0, 0]);
    }

    #[test]
    fn smoothing_circle_counts() {
        let d = ClosureDiagram::new(&parse_braid("2:").unwrap());
        assert_eq!(d.smoothing_circles(&[]), 2);
        let d = ClosureDiagram::new(&parse_braid("1:").unwrap());
        assert_eq!(d.smoothing_circles(&[]), 1);
        let d = ClosureDiagram::new(&parse_braid("2: 1 1").unwrap());
        assert_eq!(d.smoothing_circles(&[false, false]), 2);
        assert_eq!(d.smoothing_circles(&[true, false]), 1);
        assert_eq!(d.smoothing_circles(&[false, true]), 1);
        assert_eq!(d.smoothing_circles(&[true, true]), 2);
    }

    #[test]
    fn move_set_examples() {
        let ms = enumerate_moves(&parse_braid("2: 1 -1").unwrap());
        assert!(ms.contains(&parse_braid("2:").unwrap()));
        let ms = enumerate_moves(&parse_braid("2: 1 1").unwrap());
        assert!(ms.contains(&parse_braid("3: 1 1 2").unwrap()));
        assert!(ms.contains(&parse_braid("3: 1 1 -2").unwrap()));
        let ms = enumerate_moves(&parse_braid("3: 1 2 1").unwrap());
        assert!(ms.contains(&parse_braid("3: 2 1 2").unwrap()));
        // all-negative braid relation window
        let ms = enumerate_moves(&parse_braid("3: -1 -2 -1").unwrap());
        assert!(ms.contains(&parse_braid("3: -2 -1 -2").unwrap()));
        // far commutation needs 4 strands
        let ms = enumerate_moves(&parse_braid("4: 1 3").unwrap());
        assert!(ms.contains(&parse_braid("4: 3 1").unwrap()));
    }

    #[test]
    fn moves_preserve_component_count() {
        for word in crate::CORPUS {
            let b = parse_braid(word).unwrap();
            for m in enumerate_moves(&b) {
                assert_eq!(
                    m.closure_components(),
                    b.closure_components(),
                    "move {} of {}",
                    m,
                    b
                );
            }
        }
    }

    #[test]
    fn bit_flip_changes_circles_by_one() {
        use proptest::prelude::*;
        let cfg = proptest::test_runner::Config {
            cases: 64,
            ..Default::default()
        };
        let mut runner = proptest::test_runner::TestRunner::new(cfg);
        runner
            .run(
                &(2usize..=4, proptest::collection::vec(any::<(u8, bool)>(), 0..6))
                    .prop_flat_map(|(strands, raw)| {
                        let letters: Vec<i32> = raw
                            .iter()
                            .map(|&(i, neg)| {
                                let idx = (i as usize % (strands - 1)) + 1;
                                if neg {
                                    -(idx as i32)
                                } else {
                                    idx as i32
                                }
                            })
                            .collect();
                        let len = letters.len();
                        (
                            Just(BraidWord::new(strands, letters)),
                            proptest::collection::vec(any::<bool>(), len),
                        )
                    }),
                |(b, state)| {
                    let d = ClosureDiagram::new(&b);
                    let c0 = d.smoothing_circles(&state) as i64;
                    for flip in 0..state.len() {
                        let mut s = state.clone();
                        s[flip] = !s[flip];
                        let c1 = d.smoothing_circles(&s) as i64;
                        prop_assert_eq!((c1 - c0).abs(), 1);
                    }
                    Ok(())
                },
            )
            .unwrap();
    }
}
