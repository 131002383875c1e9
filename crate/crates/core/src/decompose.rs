//! Constructive generation: every element of PGL(2,Q) as a word over
//! `{T, U, V} ∪ {H(p) : p prime}`, plus normal forms for the Borel subgroup
//! and for the Baumslag–Solitar subgroup `⟨T, H(p)⟩ ≅ BS(p,1)`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorize, is_prime, p_adic_valuation, ProjMat2};
use crate::words::{Base, GenLetter, Word};

/// Which case of the matrix-to-word construction handled a matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    /// `r != 0`, `p != 0`: `H(p/r) K H(det/pr) U T(s/r)`.
    General,
    /// `p = 0`: `H(q/r) U T(s/r)`.
    ZeroCorner,
    /// `r = 0`: affine map `H(p/s) T(q/p)`.
    Affine,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::General => "a",
            Branch::ZeroCorner => "b",
            Branch::Affine => "c",
        })
    }
}

fn rat(n: &BigInt, d: &BigInt) -> BigRational {
    BigRational::new(n.clone(), d.clone())
}

/// `H(r)` as `V` (when `r < 0`) followed by prime homotheties in ascending
/// prime order.
pub fn factor_homothety(r: &BigRational) -> Result<Word> {
    if r.is_zero() {
        return Err(Error::ZeroRatio);
    }
    let mut word = Word::empty();
    if r.is_negative() {
        word.push(GenLetter::unit(Base::V));
    }
    let mut factors: Vec<(BigInt, i64)> = factorize(r.numer().magnitude())
        .into_iter()
        .map(|(p, e)| (BigInt::from(p), i64::from(e)))
        .chain(
            factorize(r.denom().magnitude())
                .into_iter()
                .map(|(p, e)| (BigInt::from(p), -i64::from(e))),
        )
        .collect();
    // numerator and denominator are coprime, so no prime appears twice
    factors.sort();
    for (p, e) in factors {
        word.push(GenLetter::new(Base::H(BigRational::from_integer(p)), e)?);
    }
    Ok(word)
}

/// A word for `z ↦ z + c`: `T^c` for integers, otherwise
/// `H(c) · (T V) · V · H(1/c)` with each homothety factored.
pub fn translation_word(c: &BigRational) -> Word {
    if c.is_integer() {
        if c.is_zero() {
            return Word::empty();
        }
        return Word::from_letters(vec![GenLetter::new(Base::T, c.to_integer()).expect("nonzero")]);
    }
    let mut word = factor_homothety(c).expect("non-integer is nonzero");
    // K expanded as T V, then the V from K V
    word.push(GenLetter::unit(Base::T));
    word.push(GenLetter::unit(Base::V));
    word.push(GenLetter::unit(Base::V));
    word.concat(&factor_homothety(&c.recip()).expect("nonzero"))
}

fn k_word() -> Word {
    Word::from_letters(vec![GenLetter::unit(Base::T), GenLetter::unit(Base::V)])
}

/// A word over `{T, U, V, H(prime)}` evaluating to `m`.
pub fn decompose(m: &ProjMat2) -> Word {
    decompose_traced(m).0
}

/// [`decompose`], also reporting which branch was taken.
pub fn decompose_traced(m: &ProjMat2) -> (Word, Branch) {
    let (p, q, r, s) = (m.p(), m.q(), m.r(), m.s());
    if r.is_zero() {
        // z ↦ (p/s)(z + q/p)
        let word = factor_homothety(&rat(p, s))
            .expect("p, s nonzero when r = 0")
            .concat(&translation_word(&rat(q, p)));
        return (word, Branch::Affine);
    }
    if p.is_zero() {
        let word = factor_homothety(&rat(q, r))
            .expect("q nonzero when p = 0")
            .concat(&Word::letter(Base::U, 1))
            .concat(&translation_word(&rat(s, r)));
        return (word, Branch::ZeroCorner);
    }
    (general_branch(m, true), Branch::General)
}

// H(p/r) · K · H(det/(pr)) · [U] · T(s/r); the U is required for the
// inversion in `(p/r)(1 − (det/pr)/(z + s/r))`.
fn general_branch(m: &ProjMat2, with_inversion: bool) -> Word {
    let (p, q, r, s) = (m.p(), m.q(), m.r(), m.s());
    let det = p * s - q * r;
    let mut word = factor_homothety(&rat(p, r))
        .expect("p nonzero")
        .concat(&k_word())
        .concat(&factor_homothety(&rat(&det, &(p * r))).expect("nonsingular"));
    if with_inversion {
        word.push(GenLetter::unit(Base::U));
    }
    word.concat(&translation_word(&rat(s, r)))
}

/// The general-branch formula exactly as printed, without the inversion.
/// `None` outside the general branch. Kept to certify that it is wrong.
pub fn printed_general_formula(m: &ProjMat2) -> Option<Word> {
    (!m.r().is_zero() && !m.p().is_zero()).then(|| general_branch(m, false))
}

/// Upper-triangular `m` as `T(q/s) · H(p/s)`.
pub fn decompose_borel(m: &ProjMat2) -> Result<Word> {
    if !m.is_upper_triangular() {
        return Err(Error::NotUpperTriangular);
    }
    let (p, q, s) = (m.p(), m.q(), m.s());
    Ok(translation_word(&rat(q, s)).concat(&factor_homothety(&rat(p, s))?))
}

/// `H(p)^-u T^m H(p)^v`, the affine map `z ↦ p^(v−u) z + m p^(−u)`.
///
/// Uniqueness: `m = 0` forces `min(u, v) = 0`, and `u, v > 0` forces `p ∤ m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BsNormalForm {
    pub u: u64,
    pub m: BigInt,
    pub v: u64,
    pub p: BigInt,
}

impl BsNormalForm {
    pub fn word(&self) -> Word {
        let h = Base::H(BigRational::from_integer(self.p.clone()));
        let mut letters = Vec::new();
        if self.u > 0 {
            letters.push(GenLetter::new(h.clone(), -BigInt::from(self.u)).expect("nonzero"));
        }
        if !self.m.is_zero() {
            letters.push(GenLetter::new(Base::T, self.m.clone()).expect("nonzero"));
        }
        if self.v > 0 {
            letters.push(GenLetter::new(h, BigInt::from(self.v)).expect("nonzero"));
        }
        Word::from_letters(letters)
    }

    pub fn eval(&self) -> ProjMat2 {
        self.word().eval()
    }
}

impl fmt::Display for BsNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u={} m={} v={}", self.u, self.m, self.v)
    }
}

/// Normal form of a word over `{T, H(p)}` in `BS(p,1)`.
pub fn bs_normal_form(w: &Word, p: &BigInt) -> Result<BsNormalForm> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not a prime")));
    }
    let hp = Base::H(BigRational::from_integer(p.clone()));
    if let Some(bad) = w.letters().iter().find(|l| l.base != Base::T && l.base != hp) {
        return Err(Error::Alphabet(bad.base.to_string()));
    }
    // The image is z ↦ p^c z + t with t ∈ Z[1/p].
    let m = w.eval();
    let scale = rat(m.p(), m.s());
    let shift = rat(m.q(), m.s());
    let c = p_adic_valuation(&scale, p);
    debug_assert_eq!(scale, BigRational::from_integer(p.clone()).pow(c as i32));

    let to_u64 = |x: i64| u64::try_from(x).expect("nonnegative by construction");
    if shift.is_zero() {
        let (u, v) = if c >= 0 { (0, c) } else { (-c, 0) };
        return Ok(BsNormalForm { u: to_u64(u), m: BigInt::zero(), v: to_u64(v), p: p.clone() });
    }
    let k = p_adic_valuation(&shift, p);
    let u = 0.max(-k).max(-c);
    let v = c + u;
    let scaled = shift * BigRational::from_integer(p.clone()).pow(u as i32);
    debug_assert!(scaled.is_integer());
    Ok(BsNormalForm { u: to_u64(u), m: scaled.to_integer(), v: to_u64(v), p: p.clone() })
}
