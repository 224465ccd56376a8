//! Reduced fractions of multivariate integer polynomials: the exact scalar
//! field used by Hecke traces, HOMFLY-PT values, and quantum representation
//! matrices.

use std::fmt;

use num::{Integer, One, Zero};

use super::laurent::LaurentPoly;
use super::multipoly::{self, Expo, MultiPoly, NVARS, VAR_V};
use super::{QQ, ZZ};

/// A rational function in v, h, a, stored as a reduced fraction with a
/// sign-normalized denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiRational {
    num: MultiPoly,
    den: MultiPoly,
}

impl MultiRational {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = MultiRational { num, den };
        r.reduce();
        r
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = MultiPoly::one();
            return;
        }
        if !self.den.is_one() {
            let g = multipoly::gcd(&self.num, &self.den);
            if !g.is_one() {
                self.num = self.num.div_exact(&g).expect("gcd divides");
                self.den = self.den.div_exact(&g).expect("gcd divides");
            }
        }
        let cn = self.num.int_content();
        let cd = self.den.int_content();
        let c = cn.gcd(&cd);
        if !c.is_one() {
            self.num = self
                .num
                .div_exact(&MultiPoly::constant(c.clone()))
                .expect("content divides");
            self.den = self
                .den
                .div_exact(&MultiPoly::constant(c))
                .expect("content divides");
        }
        if self.den.lead_sign() < 0 {
            self.num = self.num.neg();
            self.den = self.den.neg();
        }
    }

    pub fn zero() -> Self {
        MultiRational {
            num: MultiPoly::zero(),
            den: MultiPoly::one(),
        }
    }

    pub fn one() -> Self {
        MultiRational {
            num: MultiPoly::one(),
            den: MultiPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        MultiRational {
            num: MultiPoly::from_int(n),
            den: MultiPoly::one(),
        }
    }

    pub fn from_qq(q: &QQ) -> Self {
        MultiRational {
            num: MultiPoly::constant(q.numer().clone()),
            den: MultiPoly::constant(q.denom().clone()),
        }
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        MultiRational {
            num: p,
            den: MultiPoly::one(),
        }
    }

    /// The variable with the given index.
    pub fn var(i: usize) -> Self {
        Self::from_poly(MultiPoly::var(i))
    }

    /// `v^n` for any integer n.
    pub fn v_pow(n: i64) -> Self {
        Self::monomial_pow(VAR_V, n)
    }

    pub fn monomial_pow(var: usize, n: i64) -> Self {
        let mut e = [0i64; NVARS];
        if n >= 0 {
            e[var] = n;
            Self::from_poly(MultiPoly::monomial(e, ZZ::one()))
        } else {
            e[var] = -n;
            MultiRational {
                num: MultiPoly::one(),
                den: MultiPoly::monomial(e, ZZ::one()),
            }
        }
    }

    pub fn from_laurent(p: &LaurentPoly) -> Self {
        let mut den_int = ZZ::one();
        for (_, c) in p.terms() {
            den_int = den_int.lcm(c.denom());
        }
        let shift = p.min_deg().map(|m| m.min(0)).unwrap_or(0);
        let mut num = MultiPoly::zero();
        for (e, c) in p.terms() {
            let scaled = c * QQ::from_integer(den_int.clone());
            debug_assert!(scaled.is_integer());
            let mut ex = [0i64; NVARS];
            ex[VAR_V] = e - shift;
            num = num.add(&MultiPoly::monomial(ex, scaled.to_integer()));
        }
        let mut dex = [0i64; NVARS];
        dex[VAR_V] = -shift;
        let den = MultiPoly::monomial(dex, den_int);
        Self::new(num, den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.num.uses_var(var) || self.den.uses_var(var)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            self.num
                .mul(&other.den)
                .add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(
            self.num
                .mul(&other.den)
                .sub(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> Self {
        MultiRational {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        // Cross-reduce before multiplying to keep intermediates small.
        let g1 = multipoly::gcd(&self.num, &other.den);
        let g2 = multipoly::gcd(&other.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = other.den.div_exact(&g1).expect("gcd divides");
        let n2 = other.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        Self::new(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    pub fn pow(&self, n: i64) -> Self {
        if n == 0 {
            return Self::one();
        }
        let base = if n < 0 { self.inv() } else { self.clone() };
        let mut acc = Self::one();
        let mut b = base;
        let mut m = n.unsigned_abs();
        while m > 0 {
            if m & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            m >>= 1;
        }
        acc
    }

    /// Substitute `var -> sign * v^{r0} h^{r1} a^{r2}` (replacement exponents
    /// may be negative).
    pub fn subst_var_monomial(&self, var: usize, sign: i32, rep: [i64; NVARS]) -> Self {
        let (n, sn) = self.num.subst_var_monomial(var, sign, rep);
        let (d, sd) = self.den.subst_var_monomial(var, sign, rep);
        // value = (n / x^sn) / (d / x^sd) = n * x^sd / (d * x^sn)
        let num = n.mul(&MultiPoly::monomial(sd, ZZ::one()));
        let den = d.mul(&MultiPoly::monomial(sn, ZZ::one()));
        Self::new(num, den)
    }

    /// Substitute `h -> -a^2 v^{-2}`.
    pub fn subst_h_to_a(&self) -> Self {
        self.subst_var_monomial(multipoly::VAR_H, -1, [-2, 0, 2])
    }

    /// Substitute `a -> v^k`.
    pub fn subst_a_to_v_pow(&self, k: i64) -> Self {
        self.subst_var_monomial(multipoly::VAR_A, 1, [k, 0, 0])
    }

    /// Convert to a Laurent polynomial in v when the value is one (the reduced
    /// denominator must be a constant times a power of v, and the numerator
    /// must not involve h or a).
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let (dexp, dcoef) = self.den.as_single_term()?;
        if dexp[1] != 0 || dexp[2] != 0 {
            return None;
        }
        let dq = QQ::from_integer(dcoef);
        let mut out = LaurentPoly::zero();
        for (e, c) in self.num.terms() {
            if e[1] != 0 || e[2] != 0 {
                return None;
            }
            out = out.add(&LaurentPoly::monomial(
                e[0] - dexp[0],
                QQ::from_integer(c.clone()) / &dq,
            ));
        }
        Some(out)
    }

    /// Constant-term data if the value is a rational number.
    pub fn to_qq(&self) -> Option<QQ> {
        if self.is_zero() {
            return Some(QQ::zero());
        }
        if !self.num.is_constant() || !self.den.is_constant() {
            return None;
        }
        let n = self.num.terms().next().unwrap().1.clone();
        let d = self.den.terms().next().unwrap().1.clone();
        Some(QQ::new(n, d))
    }

    /// Decompose as `(laurent numerator terms, denominator)` for display.
    pub fn parts(&self) -> (&MultiPoly, &MultiPoly) {
        (&self.num, &self.den)
    }
}

impl fmt::Display for MultiRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.num.num_terms() <= 1 {
            write!(f, "{}/({})", self.num, self.den)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// Shared exponent type re-export for callers that build substitutions.
pub type ExpoVec = Expo;
