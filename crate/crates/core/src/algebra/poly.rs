use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{display_rational, lcm_big, Rational};
use crate::error::{Error, Result};

/// Univariate polynomial in λ with rational coefficients, lowest degree first.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// The polynomial λ.
    pub fn x() -> Self {
        Polynomial::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Polynomial::from_coeffs(coeffs)
    }

    /// λ − r.
    pub fn linear(root: &Rational) -> Self {
        Polynomial::from_coeffs(vec![-root.clone(), Rational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Integer coefficients, lowest degree first.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| super::rat(c)).collect())
    }

    /// Monic polynomial with the given roots, repeated as listed.
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots
            .iter()
            .fold(Polynomial::one(), |acc, r| &acc * &Polynomial::linear(r))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Polynomial::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides by the leading coefficient; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Polynomial::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn derivative(&self) -> Self {
        Polynomial::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut result = Polynomial::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Euclidean division. Panics if `d` is zero.
    pub fn div_rem(&self, d: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = d.degree().expect("division by the zero polynomial");
        let Some(nd) = self.degree() else {
            return (Polynomial::zero(), Polynomial::zero());
        };
        if nd < dd {
            return (Polynomial::zero(), self.clone());
        }
        let inv_lc = d.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let q = &rem[k + dd] * &inv_lc;
            if q.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &q * dc;
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (Polynomial::from_coeffs(quot), Polynomial::from_coeffs(rem))
    }

    /// Quotient when `d` divides `self`, otherwise an `InexactDivision` error.
    pub fn div_exact(&self, d: &Polynomial) -> Result<Polynomial> {
        if d.is_zero() {
            return Err(Error::InexactDivision("division by the zero polynomial".into()));
        }
        let (q, r) = self.div_rem(d);
        if !r.is_zero() {
            return Err(Error::InexactDivision(format!(
                "{d} does not divide {self} (remainder {r})"
            )));
        }
        Ok(q)
    }

    pub fn divides(&self, other: &Polynomial) -> bool {
        !self.is_zero() && other.div_rem(self).1.is_zero()
    }

    /// Monic greatest common divisor; zero only when both inputs are zero.
    pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
        let mut a = a.monic();
        let mut b = b.monic();
        while !b.is_zero() {
            let r = a.div_rem(&b).1.monic();
            a = b;
            b = r;
        }
        a
    }

    /// Monic least common multiple.
    pub fn lcm(a: &Polynomial, b: &Polynomial) -> Polynomial {
        if a.is_zero() || b.is_zero() {
            return Polynomial::zero();
        }
        let g = Polynomial::gcd(a, b);
        (a * &b.div_rem(&g).0).monic()
    }

    /// Product of the distinct monic irreducible factors.
    pub fn square_free_part(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let g = Polynomial::gcd(self, &self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Yun's square-free decomposition of the monic associate:
    /// pairs `(a_e, e)` with `monic(self) = Π a_e^e`, each `a_e` square-free,
    /// pairwise coprime and non-constant.
    pub fn square_free_decomposition(&self) -> Vec<(Polynomial, usize)> {
        let f = self.monic();
        if f.is_constant() {
            return Vec::new();
        }
        let df = f.derivative();
        let a0 = Polynomial::gcd(&f, &df);
        let mut b = f.div_rem(&a0).0;
        let c = df.div_rem(&a0).0;
        let mut d = &c - &b.derivative();
        let mut out = Vec::new();
        let mut e = 1;
        while !b.is_constant() {
            let a = Polynomial::gcd(&b, &d);
            let nb = b.div_rem(&a).0;
            let nc = d.div_rem(&a).0;
            d = &nc - &nb.derivative();
            b = nb;
            if !a.is_constant() {
                out.push((a.monic(), e));
            }
            e += 1;
        }
        out
    }

    /// Largest e with (λ − r)^e dividing `self`; zero for the zero polynomial.
    pub fn root_multiplicity(&self, r: &Rational) -> usize {
        if self.is_zero() {
            return 0;
        }
        let mut p = self.clone();
        let mut e = 0;
        loop {
            let (q, rem) = synthetic_division(&p, r);
            if !rem.is_zero() {
                return e;
            }
            p = q;
            e += 1;
        }
    }

    /// Distinct rational roots, ascending.
    ///
    /// Roots of the square-free part are rescaled to integer roots of a monic
    /// integer polynomial, which must divide its constant term and lie within
    /// the Fujiwara bound; that window is scanned exhaustively.
    pub fn rational_roots(&self) -> Vec<Rational> {
        let mut roots = Vec::new();
        let mut f = self.square_free_part();
        if f.is_constant() {
            return roots;
        }
        if f.coeffs[0].is_zero() {
            roots.push(Rational::zero());
            f = f.div_rem(&Polynomial::x()).0;
        }
        let Some(d) = f.degree() else { return roots };
        if d == 0 {
            return roots;
        }
        // monic f(λ) = Σ c_i λ^i; Q(y) = s^d f(y/s) has integer coefficients.
        let s = root_scale(&f.coeffs);
        let q: Vec<BigInt> = (0..=d)
            .map(|i| {
                let scaled = &f.coeffs[i] * Rational::from_integer(num_traits::pow(s.clone(), d - i));
                debug_assert!(scaled.is_integer());
                scaled.to_integer()
            })
            .collect();
        let bound = fujiwara_bound(&q);
        let q0 = &q[0];
        let mut t = BigInt::one();
        while t <= bound {
            for cand in [t.clone(), -t.clone()] {
                if (q0 % &cand).is_zero() && eval_int(&q, &cand).is_zero() {
                    roots.push(Rational::new(cand, s.clone()));
                }
            }
            t += 1;
        }
        roots.sort();
        roots
    }

    /// Content-free integer multiple with positive leading coefficient.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let l = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| lcm_big(&acc, c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
        ints.into_iter().map(|c| c / &g * &sign).collect()
    }

    /// Factored display over the rationals: linear factors for rational
    /// roots in ascending order, then the remaining square-free parts.
    pub fn factored(&self) -> String {
        if self.is_constant() {
            return self.to_string();
        }
        let lc = self.leading().unwrap().clone();
        let mut parts: Vec<String> = Vec::new();
        let mut linear: Vec<(Rational, usize)> = Vec::new();
        let mut other: Vec<(Polynomial, usize)> = Vec::new();
        for (a, e) in self.square_free_decomposition() {
            let mut rest = a.clone();
            for r in a.rational_roots() {
                linear.push((r.clone(), e));
                rest = rest.div_rem(&Polynomial::linear(&r)).0;
            }
            if !rest.is_constant() {
                other.push((rest, e));
            }
        }
        linear.sort();
        for (r, e) in linear {
            let base = if r.is_zero() {
                "λ".to_string()
            } else if r.is_negative() {
                format!("(λ+{})", display_rational(&-r))
            } else {
                format!("(λ−{})", display_rational(&r))
            };
            parts.push(base + &superscript(e));
        }
        for (p, e) in other {
            parts.push(format!("({})", p.to_string().replace(" - ", " − ")) + &superscript(e));
        }
        if !lc.is_one() {
            parts.insert(0, display_rational(&lc));
        }
        parts.join("")
    }
}

fn superscript(e: usize) -> String {
    if e == 1 {
        return String::new();
    }
    e.to_string()
        .chars()
        .map(|d| ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'][d.to_digit(10).unwrap() as usize])
        .collect()
}

fn synthetic_division(p: &Polynomial, r: &Rational) -> (Polynomial, Rational) {
    let n = p.coeffs.len();
    if n == 0 {
        return (Polynomial::zero(), Rational::zero());
    }
    let mut q = vec![Rational::zero(); n - 1];
    let mut acc = Rational::zero();
    for k in (0..n).rev() {
        acc = acc * r + &p.coeffs[k];
        if k > 0 {
            q[k - 1] = acc.clone();
        }
    }
    (Polynomial::from_coeffs(q), acc)
}

/// Small s with s^(d-i)·c_i integral for every coefficient of a monic
/// polynomial of degree d. Denominator parts with no prime factor below the
/// trial limit are folded in whole, which keeps the result valid.
fn root_scale(coeffs: &[Rational]) -> BigInt {
    const TRIAL_LIMIT: u32 = 1000;
    let d = coeffs.len() - 1;
    let mut exponents: std::collections::BTreeMap<u32, u32> = Default::default();
    let mut rest = BigInt::one();
    for (i, c) in coeffs.iter().enumerate().take(d) {
        let mut den = c.denom().clone();
        if den.is_one() {
            continue;
        }
        let span = (d - i) as u32;
        let mut p = 2u32;
        while p <= TRIAL_LIMIT && !den.is_one() {
            let bp = BigInt::from(p);
            let mut v = 0u32;
            while (&den % &bp).is_zero() {
                den /= &bp;
                v += 1;
            }
            if v > 0 {
                let need = v.div_ceil(span);
                let e = exponents.entry(p).or_insert(0);
                *e = (*e).max(need);
            }
            p += if p == 2 { 1 } else { 2 };
        }
        rest = lcm_big(&rest, &den);
    }
    exponents
        .into_iter()
        .fold(rest, |acc, (p, e)| acc * num_traits::pow(BigInt::from(p), e as usize))
}

fn eval_int(q: &[BigInt], t: &BigInt) -> BigInt {
    q.iter().rev().fold(BigInt::zero(), |acc, c| acc * t + c)
}

fn ln_abs(x: &BigInt) -> f64 {
    match x.abs().to_f64() {
        Some(v) if v.is_finite() => v.ln(),
        _ => x.bits() as f64 * std::f64::consts::LN_2,
    }
}

/// Integer upper bound on |root| of the monic integer polynomial `q`.
fn fujiwara_bound(q: &[BigInt]) -> BigInt {
    let d = q.len() - 1;
    let mut best = f64::NEG_INFINITY;
    for i in 1..=d {
        let c = &q[d - i];
        if c.is_zero() {
            continue;
        }
        let mut l = ln_abs(c) / i as f64;
        if i == d {
            l -= std::f64::consts::LN_2 / d as f64;
        }
        best = best.max(l);
    }
    if best == f64::NEG_INFINITY {
        return BigInt::zero();
    }
    // 2·max(...) with slack against rounding.
    let v = (best + std::f64::consts::LN_2).exp() * 1.0001 + 2.0;
    if v < 1e15 {
        BigInt::from(v.ceil() as u64)
    } else {
        BigInt::from(2u8).pow((v.log2().ceil() as u32) + 1)
    }
}

/// Serialized as coefficient strings `p/q`, lowest degree first.
impl serde::Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(super::format_rational))
    }
}

impl<'de> serde::Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<String> = Vec::deserialize(deserializer)?;
        raw.iter()
            .map(|c| super::parse_rational(c).ok_or_else(|| serde::de::Error::custom(format!("bad coefficient {c:?}"))))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Polynomial::from_coeffs)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{}", display_rational(&mag))?;
            }
            match k {
                0 => {}
                1 => write!(f, "λ")?,
                _ => write!(f, "λ^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::iter::Product for Polynomial {
    fn product<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::one(), |acc, p| &acc * &p)
    }
}
