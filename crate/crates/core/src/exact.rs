//! Exact integer matrices, their projective classes, determinant square
//! classes and the Möbius action on the rational projective line.
//!
//! Everything here is exact: entries are [`BigInt`], ratios are reduced
//! [`BigRational`]s, and a [`ProjMat2`] is always stored in its canonical
//! form so that equality of group elements is plain structural equality.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A 2×2 integer matrix `[[p, q], [r, s]]`, possibly singular.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub p: BigInt,
    pub q: BigInt,
    pub r: BigInt,
    pub s: BigInt,
}

impl Mat2 {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>, r: impl Into<BigInt>, s: impl Into<BigInt>) -> Self {
        Mat2 { p: p.into(), q: q.into(), r: r.into(), s: s.into() }
    }

    pub fn det(&self) -> BigInt {
        &self.p * &self.s - &self.q * &self.r
    }

    pub fn trace(&self) -> BigInt {
        &self.p + &self.s
    }

    pub fn scale(&self, k: &BigInt) -> Mat2 {
        Mat2 { p: &self.p * k, q: &self.q * k, r: &self.r * k, s: &self.s * k }
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2 {
            p: &self.p * &o.p + &self.q * &o.r,
            q: &self.p * &o.q + &self.q * &o.s,
            r: &self.r * &o.p + &self.s * &o.r,
            s: &self.r * &o.q + &self.s * &o.s,
        }
    }

    /// Projectivization: the unique canonical representative of `[self]`.
    pub fn canonicalize(&self) -> Result<ProjMat2> {
        if self.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(ProjMat2::from_nonsingular(self.clone()))
    }
}

/// An element of PGL(2,Q), held as a canonical integer representative.
///
/// Invariants: `ps - qr != 0`, `gcd(p, q, r, s) = 1`, and the first nonzero
/// entry in the order `(p, q, r, s)` is positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjMat2 {
    p: BigInt,
    q: BigInt,
    r: BigInt,
    s: BigInt,
}

impl ProjMat2 {
    pub fn identity() -> Self {
        ProjMat2 { p: BigInt::one(), q: BigInt::zero(), r: BigInt::zero(), s: BigInt::one() }
    }

    /// Canonicalizes `[[p, q], [r, s]]`.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>, r: impl Into<BigInt>, s: impl Into<BigInt>) -> Result<Self> {
        Mat2::new(p, q, r, s).canonicalize()
    }

    // Caller guarantees a nonzero determinant.
    pub(crate) fn from_nonsingular(m: Mat2) -> Self {
        debug_assert!(!m.det().is_zero());
        let g = m.p.gcd(&m.q).gcd(&m.r).gcd(&m.s);
        let Mat2 { mut p, mut q, mut r, mut s } = m;
        if !g.is_one() {
            p /= &g;
            q /= &g;
            r /= &g;
            s /= &g;
        }
        let lead_negative = [&p, &q, &r, &s]
            .into_iter()
            .find(|x| !x.is_zero())
            .map(|x| x.is_negative())
            .unwrap_or(false);
        if lead_negative {
            p = -p;
            q = -q;
            r = -r;
            s = -s;
        }
        ProjMat2 { p, q, r, s }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }
    pub fn q(&self) -> &BigInt {
        &self.q
    }
    pub fn r(&self) -> &BigInt {
        &self.r
    }
    pub fn s(&self) -> &BigInt {
        &self.s
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.p, &self.q, &self.r, &self.s]
    }

    pub fn to_mat2(&self) -> Mat2 {
        Mat2 { p: self.p.clone(), q: self.q.clone(), r: self.r.clone(), s: self.s.clone() }
    }

    pub fn is_identity(&self) -> bool {
        self.q.is_zero() && self.r.is_zero() && self.p.is_one() && self.s.is_one()
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.r.is_zero()
    }

    pub fn det(&self) -> BigInt {
        &self.p * &self.s - &self.q * &self.r
    }

    pub fn trace(&self) -> BigInt {
        &self.p + &self.s
    }

    pub fn mul(&self, other: &ProjMat2) -> ProjMat2 {
        let a = Mat2 { p: self.p.clone(), q: self.q.clone(), r: self.r.clone(), s: self.s.clone() };
        ProjMat2::from_nonsingular(a.mul(&other.to_mat2()))
    }

    /// Inverse via the adjugate; the determinant factor is a scalar and drops out.
    pub fn inverse(&self) -> ProjMat2 {
        ProjMat2::from_nonsingular(Mat2 {
            p: self.s.clone(),
            q: -&self.q,
            r: -&self.r,
            s: self.p.clone(),
        })
    }

    /// `self^e` for any integer `e`, by repeated squaring.
    pub fn pow(&self, e: &BigInt) -> ProjMat2 {
        let base = if e.is_negative() { self.inverse() } else { self.clone() };
        let mut exp = e.magnitude().clone();
        let mut acc = ProjMat2::identity();
        let mut sq = base;
        while !exp.is_zero() {
            if exp.is_odd() {
                acc = acc.mul(&sq);
            }
            exp >>= 1;
            if !exp.is_zero() {
                sq = sq.mul(&sq);
            }
        }
        acc
    }

    pub fn pow_i64(&self, e: i64) -> ProjMat2 {
        self.pow(&BigInt::from(e))
    }

    /// `g · self · g⁻¹`.
    pub fn conjugate_by(&self, g: &ProjMat2) -> ProjMat2 {
        g.mul(self).mul(&g.inverse())
    }

    /// Square class of the determinant.
    pub fn pdet(&self) -> SquareClass {
        SquareClass::of_integer(&self.det()).expect("canonical matrices are nonsingular")
    }

    /// Membership in PSL(2,Q): the determinant is a square up to scalars.
    pub fn is_psl(&self) -> bool {
        self.pdet().is_identity()
    }

    /// `(p + s)² / (ps − qr)`, a conjugation and scaling invariant.
    pub fn trace_sq_over_det(&self) -> BigRational {
        let t = self.trace();
        BigRational::new(&t * &t, self.det())
    }

    /// Möbius action `z ↦ (pz + q)/(rz + s)` on `Q ∪ {∞}`.
    pub fn apply(&self, z: &ExtRat) -> ExtRat {
        let (num, den) = if z.is_infinite() {
            (self.p.clone(), self.r.clone())
        } else {
            (&self.p * &z.num + &self.q * &z.den, &self.r * &z.num + &self.s * &z.den)
        };
        ExtRat::from_pair(num, den).expect("nonsingular action never yields 0/0")
    }
}

impl fmt::Display for ProjMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.p, self.q, self.r, self.s)
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.p, self.q, self.r, self.s)
    }
}

impl Serialize for ProjMat2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for Mat2 {
    type Err = Error;

    /// Parses `[[p,q],[r,s]]` with optional whitespace anywhere between tokens.
    fn from_str(text: &str) -> Result<Self> {
        let mut cur = Cursor::new(text);
        cur.expect('[')?;
        cur.expect('[')?;
        let p = cur.int()?;
        cur.expect(',')?;
        let q = cur.int()?;
        cur.expect(']')?;
        cur.expect(',')?;
        cur.expect('[')?;
        let r = cur.int()?;
        cur.expect(',')?;
        let s = cur.int()?;
        cur.expect(']')?;
        cur.expect(']')?;
        cur.end()?;
        Ok(Mat2 { p, q, r, s })
    }
}

impl FromStr for ProjMat2 {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        text.parse::<Mat2>()?.canonicalize()
    }
}

/// Minimal tokenizer shared by the matrix and point parsers.
struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_ws();
        match self.text[self.pos..].chars().next() {
            Some(c) if c == want => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(c) => Err(self.err(format!("expected '{want}', found '{c}'"))),
            None => Err(self.err(format!("expected '{want}', found end of input"))),
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.text.as_bytes();
        let mut end = start;
        if end < bytes.len() && bytes[end] == b'-' {
            end += 1;
        }
        let digits = end;
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        if end == digits {
            return Err(self.err("expected an integer"));
        }
        self.pos = end;
        Ok(self.text[start..end].parse().expect("validated digits"))
    }

    fn end(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos == self.text.len() {
            Ok(())
        } else {
            Err(self.err("trailing input"))
        }
    }
}

/// A point of `Q ∪ {∞}`.
///
/// Invariants: `gcd(num, den) = 1`, `den >= 0`, and `den = 0` only for the
/// single point at infinity, stored as `1/0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtRat {
    num: BigInt,
    den: BigInt,
}

impl ExtRat {
    pub fn infinity() -> Self {
        ExtRat { num: BigInt::one(), den: BigInt::zero() }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        ExtRat { num: n.into(), den: BigInt::one() }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        ExtRat { num: r.numer().clone(), den: r.denom().clone() }
    }

    /// The point `num/den`; `den = 0` is infinity. Fails on `0/0`.
    pub fn from_pair(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            if num.is_zero() {
                return Err(Error::Domain("0/0 is not a point of the projective line".into()));
            }
            return Ok(ExtRat::infinity());
        }
        let r = BigRational::new(num, den);
        Ok(ExtRat::from_rational(&r))
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        (!self.is_infinite()).then(|| BigRational::new(self.num.clone(), self.den.clone()))
    }
}

impl fmt::Display for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            f.write_str("inf")
        } else if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for ExtRat {
    type Err = Error;

    /// Accepts `a/b`, `a`, or `inf`.
    fn from_str(text: &str) -> Result<Self> {
        if text.trim() == "inf" {
            return Ok(ExtRat::infinity());
        }
        let mut cur = Cursor::new(text);
        let num = cur.int()?;
        cur.skip_ws();
        let den = if cur.text[cur.pos..].starts_with('/') {
            cur.pos += 1;
            cur.int()?
        } else {
            BigInt::one()
        };
        cur.end()?;
        ExtRat::from_pair(num, den)
    }
}

/// An element of `Z^×/Z^{2×}`: a sign and the primes that divide a
/// representative to an odd power. Every element is its own inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareClass {
    negative: bool,
    odd_primes: Vec<BigUint>,
}

impl SquareClass {
    pub fn identity() -> Self {
        SquareClass { negative: false, odd_primes: Vec::new() }
    }

    /// Builds a class from a sign and a prime set; the primes are sorted and
    /// deduplicated, but primality is the caller's responsibility.
    pub fn new(negative: bool, mut odd_primes: Vec<BigUint>) -> Self {
        odd_primes.sort();
        odd_primes.dedup();
        SquareClass { negative, odd_primes }
    }

    /// Square class of a nonzero integer, by trial division.
    ///
    /// Cost is `O(sqrt(largest prime factor))` divisions, fine for the
    /// determinants met at desk scale.
    pub fn of_integer(d: &BigInt) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let odd_primes = factorize(d.magnitude())
            .into_iter()
            .filter(|(_, e)| e % 2 == 1)
            .map(|(p, _)| p)
            .collect();
        Some(SquareClass { negative: d.is_negative(), odd_primes })
    }

    pub fn is_identity(&self) -> bool {
        !self.negative && self.odd_primes.is_empty()
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn sign(&self) -> i32 {
        if self.negative { -1 } else { 1 }
    }

    pub fn odd_primes(&self) -> &[BigUint] {
        &self.odd_primes
    }

    /// Group law: product of signs, symmetric difference of prime sets.
    pub fn mul(&self, other: &SquareClass) -> SquareClass {
        let (a, b) = (&self.odd_primes, &other.odd_primes);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        SquareClass { negative: self.negative != other.negative, odd_primes: out }
    }

    /// The signed square-free integer representing this class.
    pub fn squarefree(&self) -> BigInt {
        let mag: BigUint = self.odd_primes.iter().product();
        let sign = if self.negative { Sign::Minus } else { Sign::Plus };
        BigInt::from_biguint(sign, mag)
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.squarefree())
    }
}

/// Prime factorization by trial division, ascending primes with multiplicity.
pub fn factorize(n: &BigUint) -> Vec<(BigUint, u32)> {
    if let Some(small) = n.to_u64() {
        return factorize_u64(small).into_iter().map(|(p, e)| (BigUint::from(p), e)).collect();
    }
    let mut out = Vec::new();
    let mut rest = n.clone();
    let mut d = BigUint::from(2u32);
    while &d * &d <= rest {
        let mut e = 0;
        while (&rest % &d).is_zero() {
            rest /= &d;
            e += 1;
        }
        if e > 0 {
            out.push((d.clone(), e));
        }
        if let Some(small) = rest.to_u64() {
            // Remaining cofactor fits a machine word; finish there.
            let tail = factorize_u64(small);
            out.extend(tail.into_iter().map(|(p, e)| (BigUint::from(p), e)));
            return merge_factors(out);
        }
        d += if d == BigUint::from(2u32) { 1u32 } else { 2u32 };
    }
    if rest > BigUint::one() {
        out.push((rest, 1));
    }
    out
}

fn merge_factors(mut f: Vec<(BigUint, u32)>) -> Vec<(BigUint, u32)> {
    f.sort();
    let mut out: Vec<(BigUint, u32)> = Vec::with_capacity(f.len());
    for (p, e) in f {
        match out.last_mut() {
            Some((q, k)) if *q == p => *k += e,
            _ => out.push((p, e)),
        }
    }
    out
}

fn factorize_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Trial-division primality test.
pub fn is_prime(n: &BigInt) -> bool {
    if !n.is_positive() || n.is_one() {
        return false;
    }
    let f = factorize(n.magnitude());
    f.len() == 1 && f[0].1 == 1
}

/// All primes `<= bound`, ascending.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&n| factorize_u64(n) == [(n, 1)]).collect()
}

/// Exponent of the prime `p` in the nonzero rational `x`.
pub fn p_adic_valuation(x: &BigRational, p: &BigInt) -> i64 {
    fn ord(n: &BigInt, p: &BigInt) -> i64 {
        let mut n = n.abs();
        let mut k = 0;
        while (&n % p).is_zero() {
            n /= p;
            k += 1;
        }
        k
    }
    ord(x.numer(), p) - ord(x.denom(), p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(s: &str) -> ProjMat2 {
        s.parse().unwrap()
    }

    fn sq(neg: bool, primes: &[u32]) -> SquareClass {
        SquareClass::new(neg, primes.iter().map(|&p| BigUint::from(p)).collect())
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(pm("[[2,4],[6,8]]").to_string(), "[[1,2],[3,4]]");
        assert_eq!(pm("[[-1,0],[0,-2]]").to_string(), "[[1,0],[0,2]]");
        // first nonzero entry is q, which must end up positive
        assert_eq!(pm("[[0,-3],[3,0]]").to_string(), "[[0,1],[-1,0]]");
    }

    #[test]
    fn singular_is_rejected() {
        assert_eq!("[[1,2],[2,4]]".parse::<ProjMat2>(), Err(Error::SingularMatrix));
        assert_eq!(Mat2::new(0, 0, 0, 0).canonicalize(), Err(Error::SingularMatrix));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(pm("[[1,1],[0,1]]").mul(&pm("[[1,0],[1,1]]")), pm("[[2,1],[1,1]]"));
        let u = pm("[[0,1],[1,0]]");
        assert!(u.mul(&u).is_identity());
        let m = pm("[[3,7],[-2,5]]");
        assert!(m.mul(&m.inverse()).is_identity());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(pm("[[1,1],[0,1]]").inverse().to_string(), "[[1,-1],[0,1]]");
        assert_eq!(pm("[[0,1],[1,0]]").inverse().to_string(), "[[0,1],[1,0]]");
        assert_eq!(pm("[[2,1],[1,1]]").inverse().to_string(), "[[1,-1],[-1,2]]");
    }

    #[test]
    fn pow_handles_negative_exponents() {
        let t = pm("[[1,1],[0,1]]");
        assert_eq!(t.pow_i64(5).to_string(), "[[1,5],[0,1]]");
        assert_eq!(t.pow_i64(-3).to_string(), "[[1,-3],[0,1]]");
        assert!(t.pow_i64(0).is_identity());
    }

    #[test]
    fn pdet_examples() {
        assert_eq!(ProjMat2::identity().pdet(), SquareClass::identity());
        assert_eq!(pm("[[1,-1],[1,1]]").pdet(), sq(false, &[2]));
        // literal determinant of I_2 is -2
        assert_eq!(pm("[[0,2],[1,0]]").pdet(), sq(true, &[2]));
        assert_eq!(pm("[[0,2],[1,0]]").pdet().to_string(), "-2");
        assert_eq!(pm("[[12,0],[0,1]]").pdet().to_string(), "3");
    }

    #[test]
    fn sqclass_mul_examples() {
        assert_eq!(sq(true, &[2]).mul(&sq(true, &[2])), SquareClass::identity());
        assert_eq!(sq(false, &[2]).mul(&sq(false, &[3])), sq(false, &[2, 3]));
        assert_eq!(sq(false, &[2, 3]).mul(&sq(false, &[3, 5])), sq(false, &[2, 5]));
    }

    #[test]
    fn is_psl_examples() {
        assert!(pm("[[0,-1],[1,1]]").is_psl());
        assert!(!pm("[[1,-1],[1,1]]").is_psl());
        assert!(!pm("[[2,0],[0,1]]").is_psl());
        assert!(pm("[[4,0],[0,1]]").is_psl());
    }

    #[test]
    fn moebius_examples() {
        let inf = ExtRat::infinity();
        assert_eq!(pm("[[1,1],[0,1]]").apply(&inf), inf);
        assert_eq!(pm("[[0,1],[1,0]]").apply(&ExtRat::from_integer(0)), inf);
        assert_eq!(pm("[[2,-1],[1,1]]").apply(&ExtRat::from_integer(1)).to_string(), "1/2");
        assert_eq!(pm("[[2,-1],[1,1]]").apply(&inf).to_string(), "2");
    }

    #[test]
    fn trace_ratio_examples() {
        let r = |s: &str| pm(s).trace_sq_over_det();
        assert_eq!(r("[[0,-1],[1,1]]"), BigRational::from_integer(1.into()));
        assert_eq!(r("[[1,-1],[1,1]]"), BigRational::from_integer(2.into()));
        assert_eq!(r("[[2,-1],[1,1]]"), BigRational::from_integer(3.into()));
    }

    #[test]
    fn ext_rat_text() {
        for s in ["inf", "3", "-5/7", "0"] {
            assert_eq!(s.parse::<ExtRat>().unwrap().to_string(), s);
        }
        assert_eq!("4/-6".parse::<ExtRat>().unwrap().to_string(), "-2/3");
        assert_eq!("1/0".parse::<ExtRat>().unwrap(), ExtRat::infinity());
        assert!("0/0".parse::<ExtRat>().is_err());
        assert!("x".parse::<ExtRat>().is_err());
    }

    #[test]
    fn matrix_text_tolerates_whitespace() {
        assert_eq!(pm(" [ [ 1 , -2 ] ,[3,4] ] ").to_string(), "[[1,-2],[3,4]]");
        let err = "[[1,2],[3]]".parse::<ProjMat2>().unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
        assert!("[[1,2],[3,4]] x".parse::<ProjMat2>().is_err());
    }

    #[test]
    fn factorization() {
        let f = factorize(&BigUint::from(360u32));
        let want: Vec<(BigUint, u32)> = vec![(2u32.into(), 3), (3u32.into(), 2), (5u32.into(), 1)];
        assert_eq!(f, want);
        let big = BigUint::from(u64::MAX) * BigUint::from(9u32);
        let f = factorize(&big);
        let back: BigUint = f.iter().map(|(p, e)| p.pow(*e)).product();
        assert_eq!(back, big);
        assert_eq!(primes_up_to(20), vec![2, 3, 5, 7, 11, 13, 17, 19]);
        assert!(is_prime(&97.into()));
        assert!(!is_prime(&91.into()));
    }
}
