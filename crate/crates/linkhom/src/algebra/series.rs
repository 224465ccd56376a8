//! Truncated Laurent series in `v`, bivariate (h, v) series expansions of
//! rational functions, and triply graded Poincaré series with doubled
//! (t, h)-exponents.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use super::laurent::LaurentPoly;
use super::multipoly::{VAR_A, VAR_H, VAR_V};
use super::multirat::MultiRational;
use super::QQ;

/// A Laurent series in `v` known exactly for all degrees `<= cutoff`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedVSeries {
    cutoff: i64,
    coeffs: BTreeMap<i64, QQ>,
}

impl TruncatedVSeries {
    pub fn zero(cutoff: i64) -> Self {
        TruncatedVSeries {
            cutoff,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_coeffs(cutoff: i64, coeffs: impl IntoIterator<Item = (i64, QQ)>) -> Self {
        let mut s = Self::zero(cutoff);
        for (e, c) in coeffs {
            s.add_term(e, c);
        }
        s
    }

    pub fn from_laurent(p: &LaurentPoly, cutoff: i64) -> Self {
        Self::from_coeffs(cutoff, p.terms().map(|(e, c)| (*e, c.clone())))
    }

    pub fn cutoff(&self) -> i64 {
        self.cutoff
    }

    pub fn coeff(&self, e: i64) -> QQ {
        self.coeffs.get(&e).cloned().unwrap_or_else(QQ::zero)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&i64, &QQ)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_deg(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    fn add_term(&mut self, e: i64, c: QQ) {
        if e > self.cutoff || c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert_with(QQ::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn truncate(&self, cutoff: i64) -> Self {
        assert!(cutoff <= self.cutoff, "cannot extend a truncated series");
        TruncatedVSeries {
            cutoff,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(e, _)| **e <= cutoff)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.truncate(self.cutoff.min(other.cutoff));
        for (e, c) in &other.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        TruncatedVSeries {
            cutoff: self.cutoff,
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &QQ) -> Self {
        if c.is_zero() {
            return Self::zero(self.cutoff);
        }
        TruncatedVSeries {
            cutoff: self.cutoff,
            coeffs: self.coeffs.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Multiply by `v^s`.
    pub fn shift(&self, s: i64) -> Self {
        TruncatedVSeries {
            cutoff: self.cutoff + s,
            coeffs: self.coeffs.iter().map(|(e, c)| (e + s, c.clone())).collect(),
        }
    }

    /// Product. A factor known to cutoff `c` whose partner has minimum degree
    /// `m` yields degrees known only up to `c + m`, hence the resulting cutoff
    /// is `min(c1 + m2, c2 + m1)`.
    pub fn mul(&self, other: &Self) -> Self {
        let m1 = self.min_deg().unwrap_or(0);
        let m2 = other.min_deg().unwrap_or(0);
        let cutoff = (self.cutoff + m2).min(other.cutoff + m1);
        let mut out = Self::zero(cutoff);
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Equality of all coefficients up to the smaller cutoff.
    pub fn eq_truncated(&self, other: &Self) -> bool {
        let c = self.cutoff.min(other.cutoff);
        self.truncate(c).coeffs == other.truncate(c).coeffs
    }

    /// Render like a Laurent polynomial with a trailing O(v^{cutoff+1}) marker.
    pub fn to_laurent_part(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.coeffs.iter().map(|(e, c)| (*e, c.clone())))
    }
}

impl fmt::Display for TruncatedVSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + O(v^{})",
            self.to_laurent_part(),
            self.cutoff + 1
        )
    }
}

/// An (h, v)-bigraded series: for each h-degree, a truncated v-series.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct HVSeries {
    terms: BTreeMap<i64, TruncatedVSeries>,
}

impl HVSeries {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, h_deg: i64, s: TruncatedVSeries) {
        match self.terms.get_mut(&h_deg) {
            Some(existing) => *existing = existing.add(&s),
            None => {
                self.terms.insert(h_deg, s);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &TruncatedVSeries)> {
        self.terms.iter()
    }

    pub fn get(&self, h_deg: i64) -> Option<&TruncatedVSeries> {
        self.terms.get(&h_deg)
    }

    pub fn min_cutoff(&self) -> Option<i64> {
        self.terms.values().map(|s| s.cutoff()).min()
    }

    /// Equality up to the joint minimum cutoff; h-degrees missing on one side
    /// must be zero on the other.
    pub fn eq_truncated(&self, other: &Self) -> bool {
        let c = match (self.min_cutoff(), other.min_cutoff()) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => return true,
        };
        let keys: std::collections::BTreeSet<i64> = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .copied()
            .collect();
        for k in keys {
            let zero = TruncatedVSeries::zero(c);
            let a = self.terms.get(&k).unwrap_or(&zero);
            let b = other.terms.get(&k).unwrap_or(&zero);
            if !a.truncate(c).eq_truncated(&b.truncate(c)) {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for HVSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (h, s) in &self.terms {
            if !first {
                writeln!(f)?;
            }
            first = false;
            write!(f, "h^{}: {}", h, s)?;
        }
        Ok(())
    }
}

/// Expand a rational function of v and h (denominator in v only) as an
/// h-graded truncated v-series.
pub fn rational_to_series(r: &MultiRational, cutoff: i64) -> Result<HVSeries, String> {
    if r.uses_var(VAR_A) {
        return Err("series expansion requires the a-variable to be substituted away".into());
    }
    if r.den().uses_var(VAR_H) {
        return Err("series expansion requires an h-free denominator".into());
    }
    // Denominator as a univariate v-polynomial c_m v^m (1 + u_1 v + ...).
    let den = r.den();
    let m = den.min_deg(VAR_V);
    let dmax = den.max_deg(VAR_V);
    let mut dcoeffs = vec![QQ::zero(); (dmax - m + 1) as usize];
    for (e, c) in den.terms() {
        dcoeffs[(e[VAR_V] - m) as usize] = QQ::from_integer(c.clone());
    }
    let c0 = dcoeffs[0].clone();
    debug_assert!(!c0.is_zero());
    // Numerator split by h-degree.
    let mut by_h: BTreeMap<i64, Vec<(i64, QQ)>> = BTreeMap::new();
    for (e, c) in r.num().terms() {
        by_h
            .entry(e[VAR_H])
            .or_default()
            .push((e[VAR_V], QQ::from_integer(c.clone())));
    }
    // Inverse of the monic-normalized denominator unit as a power series.
    let nmax = (cutoff + m - r.num().min_deg(VAR_V)).max(0) as usize;
    let mut uinv = vec![QQ::zero(); nmax + 1];
    uinv[0] = c0.recip();
    for t in 1..=nmax {
        let mut acc = QQ::zero();
        for s in 1..=t.min(dcoeffs.len() - 1) {
            acc += &dcoeffs[s] * &uinv[t - s];
        }
        uinv[t] = -acc / &c0;
    }
    let mut out = HVSeries::new();
    if by_h.is_empty() {
        out.insert(0, TruncatedVSeries::zero(cutoff));
        return Ok(out);
    }
    for (h_deg, terms) in by_h {
        let mut s = TruncatedVSeries::zero(cutoff);
        for (e, c) in &terms {
            // c * v^e * v^{-m} * uinv(v)
            for (t, u) in uinv.iter().enumerate() {
                if u.is_zero() {
                    continue;
                }
                s.add_term(e - m + t as i64, c * u);
            }
        }
        out.insert(h_deg, s);
    }
    Ok(out)
}

/// A triply graded Poincaré series: map from doubled (t, h) exponents to a
/// truncated v-series. Doubled exponents keep half-integer t- and h-powers
/// integral.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TriGradedSeries {
    terms: BTreeMap<(i64, i64), TruncatedVSeries>,
}

impl TriGradedSeries {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, t2: i64, h2: i64, s: TruncatedVSeries) {
        match self.terms.get_mut(&(t2, h2)) {
            Some(existing) => *existing = existing.add(&s),
            None => {
                self.terms.insert((t2, h2), s);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &TruncatedVSeries)> {
        self.terms.iter()
    }

    pub fn get(&self, t2: i64, h2: i64) -> Option<&TruncatedVSeries> {
        self.terms.get(&(t2, h2))
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_cutoff(&self) -> Option<i64> {
        self.terms.values().map(|s| s.cutoff()).min()
    }

    /// Shift all gradings: t2 += dt2, h2 += dh2, v-degree += dv.
    pub fn shift(&self, dt2: i64, dh2: i64, dv: i64) -> Self {
        TriGradedSeries {
            terms: self
                .terms
                .iter()
                .map(|((t2, h2), s)| ((t2 + dt2, h2 + dh2), s.shift(dv)))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((t2, h2), s) in &other.terms {
            out.insert(*t2, *h2, s.clone());
        }
        out
    }

    /// Product, convolving the (t, h)-gradings and multiplying v-series.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = TriGradedSeries::new();
        for ((t1, h1), s1) in &self.terms {
            for ((t2, h2), s2) in &other.terms {
                let p = s1.mul(s2);
                out.insert(t1 + t2, h1 + h2, p);
            }
        }
        out
    }

    pub fn truncate_all(&self, cutoff: i64) -> Self {
        TriGradedSeries {
            terms: self
                .terms
                .iter()
                .map(|(k, s)| (*k, s.truncate(cutoff.min(s.cutoff()))))
                .collect(),
        }
    }

    /// Drop pieces that are identically zero within their cutoff, keeping the
    /// global cutoff on the survivors by pre-truncating to the minimum.
    pub fn normalized_nonzero(&self) -> Self {
        let c = match self.min_cutoff() {
            None => return self.clone(),
            Some(c) => c,
        };
        TriGradedSeries {
            terms: self
                .terms
                .iter()
                .map(|(k, s)| (*k, s.truncate(c)))
                .filter(|(_, s)| !s.is_zero())
                .collect(),
        }
    }

    /// Equality of all pieces up to the joint minimum cutoff.
    pub fn eq_truncated(&self, other: &Self) -> bool {
        let c = match (self.min_cutoff(), other.min_cutoff()) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => return true,
        };
        let keys: std::collections::BTreeSet<(i64, i64)> = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .copied()
            .collect();
        for k in keys {
            let zero = TruncatedVSeries::zero(c);
            let a = self.terms.get(&k).unwrap_or(&zero);
            let b = other.terms.get(&k).unwrap_or(&zero);
            if !a.truncate(c.min(a.cutoff())).eq_truncated(&b.truncate(c.min(b.cutoff()))) {
                return false;
            }
        }
        true
    }

    /// Alternating t-sum `sum_j (-1)^j (series at t-degree j)` collected by
    /// h-degree. Requires integral (even doubled) exponents.
    pub fn alt_t_sum(&self) -> HVSeries {
        let mut out = HVSeries::new();
        for ((t2, h2), s) in &self.terms {
            assert!(t2 % 2 == 0 && h2 % 2 == 0, "alternating sum needs integral grading");
            let signed = if (t2 / 2).rem_euclid(2) == 1 {
                s.neg()
            } else {
                s.clone()
            };
            out.insert(h2 / 2, signed);
        }
        out
    }

    /// Specialize an unnormalized triply graded series (doubled exponents
    /// even) at t = -1 after the change of variables a = v (h t)^{1/2}, then
    /// a = v^k: each piece at (t-degree j, h-degree i, v-degree d) contributes
    /// (-1)^{j-i} v^{d + n - 2i + k (2i + eps - n)}.
    pub fn euler_a_specialized(&self, eps: i64, n: i64, k: i64) -> TruncatedVSeries {
        let mut cutoff = i64::MAX;
        for ((_, h2), s) in &self.terms {
            assert!(h2 % 2 == 0, "unnormalized series expected");
            let shift = n - h2 + k * (h2 + eps - n);
            cutoff = cutoff.min(s.cutoff() + shift);
        }
        if cutoff == i64::MAX {
            return TruncatedVSeries::zero(0);
        }
        let mut out = TruncatedVSeries::zero(cutoff);
        for ((t2, h2), s) in &self.terms {
            let sign = if ((t2 - h2) / 2).rem_euclid(2) == 1 {
                -QQ::one()
            } else {
                QQ::one()
            };
            let shift = n - h2 + k * (h2 + eps - n);
            for (d, c) in s.coeffs() {
                out.add_term(d + shift, c * &sign);
            }
        }
        out
    }
}

impl fmt::Display for TriGradedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let half = |x: i64| -> String {
            if x % 2 == 0 {
                format!("{}", x / 2)
            } else {
                format!("{}/2", x)
            }
        };
        let mut first = true;
        for ((t2, h2), s) in &self.terms {
            if !first {
                writeln!(f)?;
            }
            first = false;
            write!(f, "t^{} h^{}: {}", half(*t2), half(*h2), s)?;
        }
        Ok(())
    }
}
