//! Multivariate integer polynomials in the fixed variable set `{v, h, a}`,
//! with exact gcd via primitive pseudo-remainder sequences. These are the
//! numerators and denominators of [`super::MultiRational`].

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, Integer, One, Signed, Zero};

use super::ZZ;

/// Number of ambient variables.
pub const NVARS: usize = 3;
/// Variable index of `v`.
pub const VAR_V: usize = 0;
/// Variable index of `h`.
pub const VAR_H: usize = 1;
/// Variable index of `a`.
pub const VAR_A: usize = 2;

pub const VAR_NAMES: [&str; NVARS] = ["v", "h", "a"];

/// Exponent vector; all entries nonnegative.
pub type Expo = [i64; NVARS];

/// A polynomial in v, h, a over the integers, stored sparsely.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Expo, ZZ>,
}

fn expo_add(a: &Expo, b: &Expo) -> Expo {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(ZZ::one())
    }

    pub fn constant(c: ZZ) -> Self {
        Self::monomial([0; NVARS], c)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(ZZ::from(n))
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0i64; NVARS];
        e[i] = 1;
        Self::monomial(e, ZZ::one())
    }

    pub fn monomial(e: Expo, c: ZZ) -> Self {
        assert!(e.iter().all(|&x| x >= 0), "negative exponent in MultiPoly");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        MultiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&[0; NVARS])
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// `Some(c * v^m)` data when the polynomial is a single term.
    pub fn as_single_term(&self) -> Option<(Expo, ZZ)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((*e, c.clone()))
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Expo, &ZZ)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, e: Expo, c: ZZ) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(ZZ::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(expo_add(e1, e2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }

    pub fn max_deg(&self, var: usize) -> i64 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    pub fn min_deg(&self, var: usize) -> i64 {
        self.terms.keys().map(|e| e[var]).min().unwrap_or(0)
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|e| e[var] != 0)
    }

    /// Lexicographically leading term (exponent order v > h > a).
    fn lex_lead(&self) -> Option<(Expo, ZZ)> {
        self.terms
            .iter()
            .next_back()
            .map(|(e, c)| (*e, c.clone()))
    }

    /// Sign of the lexicographically leading coefficient.
    pub fn lead_sign(&self) -> i32 {
        match self.lex_lead() {
            None => 0,
            Some((_, c)) => {
                if c.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    /// gcd of all integer coefficients (nonnegative).
    pub fn int_content(&self) -> ZZ {
        let mut g = ZZ::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale_int(&self, c: &ZZ) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    /// Exact multivariate division; `None` when not exactly divisible.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (dexp, dcoef) = d.lex_lead().unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while !rem.is_zero() {
            let (rexp, rcoef) = rem.lex_lead().unwrap();
            let mut qe = [0i64; NVARS];
            for i in 0..NVARS {
                qe[i] = rexp[i] - dexp[i];
                if qe[i] < 0 {
                    return None;
                }
            }
            let (q, r) = rcoef.div_rem(&dcoef);
            if !r.is_zero() {
                return None;
            }
            let t = Self::monomial(qe, q);
            rem = rem.sub(&t.mul(d));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    /// Coefficients as a univariate polynomial in `var` (index = degree).
    fn to_univariate(&self, var: usize) -> Vec<MultiPoly> {
        let d = self.max_deg(var) as usize;
        let mut coeffs = vec![MultiPoly::zero(); d + 1];
        for (e, c) in &self.terms {
            let mut e2 = *e;
            let k = e2[var] as usize;
            e2[var] = 0;
            coeffs[k].add_term(e2, c.clone());
        }
        coeffs
    }

    fn from_univariate(var: usize, coeffs: &[MultiPoly]) -> Self {
        let mut out = Self::zero();
        for (k, c) in coeffs.iter().enumerate() {
            for (e, z) in &c.terms {
                let mut e2 = *e;
                e2[var] += k as i64;
                out.add_term(e2, z.clone());
            }
        }
        out
    }

    /// Content with respect to `var`: gcd of the univariate coefficients.
    fn content_wrt(&self, var: usize) -> MultiPoly {
        let coeffs = self.to_univariate(var);
        let mut g = MultiPoly::zero();
        for c in coeffs.iter().filter(|c| !c.is_zero()) {
            g = gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Normalize sign so the lex-leading coefficient is positive.
    pub fn normalize_sign(&self) -> MultiPoly {
        if self.lead_sign() < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Substitute `var -> sign * v^{r0} h^{r1} a^{r2}` where the replacement
    /// exponents may be negative. Returns `(p, shift)` meaning the substituted
    /// value equals `p / (v^{s0} h^{s1} a^{s2})` with nonnegative `shift`.
    pub fn subst_var_monomial(&self, var: usize, sign: i32, rep: [i64; NVARS]) -> (MultiPoly, Expo) {
        assert!(sign == 1 || sign == -1);
        // Raw exponent vectors (possibly negative), then clear denominators.
        let mut raw: Vec<([i64; NVARS], ZZ)> = Vec::with_capacity(self.terms.len());
        let mut min_e = [0i64; NVARS];
        for (e, c) in &self.terms {
            let k = e[var];
            let mut ne = *e;
            ne[var] = 0;
            for i in 0..NVARS {
                ne[i] += k * rep[i];
            }
            let nc = if sign == -1 && k % 2 != 0 {
                -c.clone()
            } else {
                c.clone()
            };
            for i in 0..NVARS {
                min_e[i] = min_e[i].min(ne[i]);
            }
            raw.push((ne, nc));
        }
        let shift: Expo = [-min_e[0], -min_e[1], -min_e[2]];
        let mut out = MultiPoly::zero();
        for (e, c) in raw {
            out.add_term(expo_add(&e, &shift), c);
        }
        (out, shift)
    }
}

/// Pseudo-remainder of `f` by `g` with respect to `var` (deg f >= deg g > 0).
fn prem(f: &MultiPoly, g: &MultiPoly, var: usize) -> MultiPoly {
    let dg = g.max_deg(var);
    let gc = g.to_univariate(var);
    let lc = gc.last().unwrap().clone();
    let mut r = f.clone();
    loop {
        if r.is_zero() {
            return r;
        }
        let dr = r.max_deg(var);
        if dr < dg {
            return r;
        }
        let rc = r.to_univariate(var);
        let lr = rc.last().unwrap().clone();
        // r := lc * r - lr * x^{dr-dg} * g
        let mut shifted = g.to_univariate(var);
        let mut shifted_full = vec![MultiPoly::zero(); (dr - dg) as usize];
        shifted_full.append(&mut shifted);
        let gs = MultiPoly::from_univariate(var, &shifted_full);
        r = r.mul(&lc).sub(&gs.mul(&lr));
    }
}

/// Multivariate gcd, normalized with positive lex-leading coefficient.
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.normalize_sign();
    }
    if b.is_zero() {
        return a.normalize_sign();
    }
    // Main variable: highest index actually used.
    let var = (0..NVARS)
        .rev()
        .find(|&i| a.uses_var(i) || b.uses_var(i));
    let var = match var {
        None => {
            let ca = a.terms.values().next().unwrap();
            let cb = b.terms.values().next().unwrap();
            return MultiPoly::constant(ca.gcd(cb));
        }
        Some(v) => v,
    };
    let ca = a.content_wrt(var);
    let cb = b.content_wrt(var);
    let cont = gcd(&ca, &cb);
    let mut f = a.div_exact(&ca).expect("content divides");
    let mut g = b.div_exact(&cb).expect("content divides");
    if f.max_deg(var) < g.max_deg(var) {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        if g.is_zero() {
            let pf = f
                .div_exact(&f.content_wrt(var))
                .expect("content divides");
            return cont.mul(&pf).normalize_sign();
        }
        if g.max_deg(var) == 0 {
            // Nonzero, var-free remainder against a var-primitive f: the gcd
            // carries no main-variable part, and the primitive parts are coprime.
            return cont.normalize_sign();
        }
        let r = prem(&f, &g, var);
        f = g;
        g = if r.is_zero() {
            r
        } else {
            r.div_exact(&r.content_wrt(var)).expect("content divides")
        };
    }
}

fn fmt_mono(e: &Expo) -> String {
    let mut parts = Vec::new();
    for (i, name) in VAR_NAMES.iter().enumerate() {
        match e[i] {
            0 => {}
            1 => parts.push(name.to_string()),
            k => parts.push(format!("{}^{}", name, k)),
        }
    }
    parts.join("*")
}

impl fmt::Display for MultiPoly {
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
            let mag: BigInt = c.abs();
            let mono = fmt_mono(e);
            if mono.is_empty() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", mono)?;
            } else {
                write!(f, "{}*{}", mag, mono)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v() -> MultiPoly {
        MultiPoly::var(VAR_V)
    }
    fn h() -> MultiPoly {
        MultiPoly::var(VAR_H)
    }

    #[test]
    fn arithmetic_basics() {
        let p = v().add(&MultiPoly::one());
        let q = v().sub(&MultiPoly::one());
        let prod = p.mul(&q);
        let expect = v().mul(&v()).sub(&MultiPoly::one());
        assert_eq!(prod, expect);
        assert_eq!(prod.div_exact(&p).unwrap(), q);
        assert!(prod.div_exact(&h()).is_none());
    }

    #[test]
    fn gcd_univariate() {
        // gcd(v^2 - 1, v^2 - 2v + 1) = v - 1
        let p = v().pow(2).sub(&MultiPoly::one());
        let q = v()
            .pow(2)
            .sub(&v().scale_int(&ZZ::from(2)))
            .add(&MultiPoly::one());
        let g = gcd(&p, &q);
        assert_eq!(g, v().sub(&MultiPoly::one()));
    }

    #[test]
    fn gcd_multivariate() {
        // gcd((1+hv^2)(1-v^2), (1+hv^2)v^3) = 1 + hv^2
        let s = MultiPoly::one().add(&h().mul(&v().pow(2)));
        let p = s.mul(&MultiPoly::one().sub(&v().pow(2)));
        let q = s.mul(&v().pow(3));
        assert_eq!(gcd(&p, &q), s);
        // coprime case
        let g2 = gcd(&v().add(&MultiPoly::one()), &h().add(&MultiPoly::one()));
        assert!(g2.is_one());
    }

    #[test]
    fn gcd_with_integer_content() {
        let p = v().scale_int(&ZZ::from(6));
        let q = v().pow(2).scale_int(&ZZ::from(4));
        assert_eq!(gcd(&p, &q), v().scale_int(&ZZ::from(2)));
    }

    #[test]
    fn substitution_clears_negative_exponents() {
        // h -> -a^2 v^{-2} applied to 1 + h v^2 gives 1 - a^2 (no denominator).
        let p = MultiPoly::one().add(&h().mul(&v().pow(2)));
        let (q, shift) = p.subst_var_monomial(VAR_H, -1, [-2, 0, 2]);
        assert_eq!(shift, [0, 0, 0]);
        let expect = MultiPoly::one().sub(&MultiPoly::var(VAR_A).pow(2));
        assert_eq!(q, expect);
        // h -> -a^2 v^{-2} applied to h alone: h = -a^2/v^2.
        let (q2, shift2) = h().subst_var_monomial(VAR_H, -1, [-2, 0, 2]);
        assert_eq!(shift2, [2, 0, 0]);
        assert_eq!(q2, MultiPoly::var(VAR_A).pow(2).neg());
    }

    #[test]
    fn display_form() {
        let p = v().pow(2).scale_int(&ZZ::from(-3)).add(&MultiPoly::one());
        assert_eq!(p.to_string(), "1 - 3*v^2");
    }
}
