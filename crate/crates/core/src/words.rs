//! Words over the generator alphabet `{T, U, V, K, S, L, H(r), I(r)}`.
//!
//! A word evaluates to the product of its letter matrices in textual order,
//! so the rightmost letter acts first on a point: `T U` is `z ↦ 1/z + 1`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{is_prime, ProjMat2};

/// Generator of the alphabet. `H(r)` is `z ↦ rz`, `I(r)` is `z ↦ r/z`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Base {
    T,
    U,
    V,
    K,
    S,
    L,
    H(BigRational),
    I(BigRational),
}

impl Base {
    pub fn h(r: i64) -> Base {
        Base::H(BigRational::from_integer(r.into()))
    }

    pub fn i(r: i64) -> Base {
        Base::I(BigRational::from_integer(r.into()))
    }

    /// U, V, K, S and every I(r) square to the identity.
    pub fn is_involution(&self) -> bool {
        matches!(self, Base::U | Base::V | Base::K | Base::S | Base::I(_))
    }

    pub fn matrix(&self) -> ProjMat2 {
        let m = |p: i64, q: i64, r: i64, s: i64| ProjMat2::new(p, q, r, s).expect("dictionary matrices are nonsingular");
        match self {
            Base::T => m(1, 1, 0, 1),
            Base::U => m(0, 1, 1, 0),
            Base::V => m(-1, 0, 0, 1),
            Base::K => m(-1, 1, 0, 1),
            Base::S => m(0, -1, 1, 0),
            Base::L => m(1, -1, 1, 0),
            Base::H(x) => ProjMat2::new(x.numer().clone(), 0, 0, x.denom().clone()).expect("H parameter is nonzero"),
            Base::I(x) => ProjMat2::new(0, x.numer().clone(), x.denom().clone(), 0).expect("I parameter is nonzero"),
        }
    }

    fn check(&self) -> Result<()> {
        match self {
            Base::H(x) if x.is_zero() => Err(Error::Domain("H(0) is singular".into())),
            Base::H(x) if x.is_one() => Err(Error::Domain("H(1) is not a letter".into())),
            Base::I(x) if x.is_zero() => Err(Error::Domain("I(0) is singular".into())),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Base::T => f.write_str("T"),
            Base::U => f.write_str("U"),
            Base::V => f.write_str("V"),
            Base::K => f.write_str("K"),
            Base::S => f.write_str("S"),
            Base::L => f.write_str("L"),
            Base::H(x) => write!(f, "H({x})"),
            Base::I(x) => write!(f, "I({x})"),
        }
    }
}

/// A generator raised to a nonzero integer power.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenLetter {
    pub base: Base,
    pub exp: BigInt,
}

impl GenLetter {
    pub fn new(base: Base, exp: impl Into<BigInt>) -> Result<Self> {
        let exp = exp.into();
        base.check()?;
        if exp.is_zero() {
            return Err(Error::Domain(format!("zero exponent on {base}")));
        }
        Ok(GenLetter { base, exp })
    }

    pub fn unit(base: Base) -> Self {
        GenLetter::new(base, 1).expect("unit letter")
    }

    pub fn matrix(&self) -> ProjMat2 {
        self.base.matrix().pow(&self.exp)
    }

    pub fn inverse(&self) -> GenLetter {
        GenLetter { base: self.base.clone(), exp: -&self.exp }
    }
}

impl fmt::Display for GenLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp.is_one() {
            write!(f, "{}", self.base)
        } else {
            write!(f, "{}^{}", self.base, self.exp)
        }
    }
}

/// A finite sequence of letters; the empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<GenLetter>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn from_letters(letters: Vec<GenLetter>) -> Self {
        Word { letters }
    }

    pub fn letter(base: Base, exp: i64) -> Self {
        Word { letters: vec![GenLetter::new(base, exp).expect("valid letter")] }
    }

    pub fn letters(&self) -> &[GenLetter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn push(&mut self, letter: GenLetter) {
        self.letters.push(letter);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// `self` repeated `k` times, letter for letter (no reduction).
    pub fn repeat(&self, k: usize) -> Word {
        Word { letters: (0..k).flat_map(|_| self.letters.iter().cloned()).collect() }
    }

    /// Product of the letter matrices; the rightmost letter acts first.
    pub fn eval(&self) -> ProjMat2 {
        self.letters.iter().fold(ProjMat2::identity(), |acc, l| acc.mul(&l.matrix()))
    }

    /// Reversed word with negated exponents, reduced letterwise.
    pub fn inverse(&self) -> Word {
        let letters = self
            .letters
            .iter()
            .rev()
            .filter_map(|l| normalize_letter(l.inverse()))
            .collect();
        Word { letters }
    }

    /// Free reduction: merges equal adjacent bases, reduces involution
    /// exponents mod 2, and merges adjacent homotheties `H(r)^a H(s)^b` into
    /// `H(r^a s^b)`. No relator beyond these is applied.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<GenLetter> = Vec::with_capacity(self.letters.len());
        for letter in &self.letters {
            let Some(mut cur) = normalize_letter(letter.clone()) else { continue };
            loop {
                let Some(top) = out.last() else {
                    out.push(cur);
                    break;
                };
                match merge(top, &cur) {
                    Merge::Keep => {
                        out.push(cur);
                        break;
                    }
                    Merge::Cancel => {
                        out.pop();
                        break;
                    }
                    Merge::Into(m) => {
                        out.pop();
                        cur = m;
                    }
                }
            }
        }
        Word { letters: out }
    }

    /// True when every `H`/`I` parameter is a prime, or `I(±1)`.
    pub fn uses_prime_parameters(&self) -> bool {
        self.letters.iter().all(|l| match &l.base {
            Base::H(x) => x.is_integer() && is_prime(x.numer()),
            Base::I(x) => x.is_integer() && (is_prime(x.numer()) || x.numer().abs().is_one()),
            _ => true,
        })
    }
}

enum Merge {
    Keep,
    Cancel,
    Into(GenLetter),
}

fn normalize_letter(mut l: GenLetter) -> Option<GenLetter> {
    if l.base.is_involution() {
        l.exp = l.exp.mod_floor(&BigInt::from(2));
    }
    (!l.exp.is_zero()).then_some(l)
}

fn merge(a: &GenLetter, b: &GenLetter) -> Merge {
    let combined = if a.base == b.base {
        GenLetter { base: a.base.clone(), exp: &a.exp + &b.exp }
    } else if let (Base::H(r), Base::H(s)) = (&a.base, &b.base) {
        let ratio = rat_pow(r, &a.exp) * rat_pow(s, &b.exp);
        if ratio.is_one() {
            return Merge::Cancel;
        }
        GenLetter { base: Base::H(ratio), exp: BigInt::one() }
    } else {
        return Merge::Keep;
    };
    match normalize_letter(combined) {
        Some(l) => Merge::Into(l),
        None => Merge::Cancel,
    }
}

fn rat_pow(x: &BigRational, e: &BigInt) -> BigRational {
    let k: i32 = e.try_into().expect("homothety exponent out of range");
    x.pow(k)
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        WordParser { src: text.as_bytes(), pos: 0 }.word()
    }
}

/// Recursive-descent parser for
///
/// ```text
/// word := ws? (term (ws term)*)? ws?
/// term := atom ("^" sint)?
/// atom := "T"|"U"|"V"|"K"|"S"|"L" | "H(" rat ")" | "I(" rat ")"
/// rat  := sint ("/" sint)?
/// sint := "-"? digit+
/// ```
struct WordParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl WordParser<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) -> bool {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
        self.pos > start
    }

    fn word(&mut self) -> Result<Word> {
        let mut letters = Vec::new();
        self.skip_ws();
        while self.peek().is_some() {
            if !letters.is_empty() {
                return Err(self.err("expected whitespace between terms"));
            }
            letters.push(self.term()?);
            while self.skip_ws() && self.peek().is_some() {
                letters.push(self.term()?);
            }
        }
        Ok(Word { letters })
    }

    fn term(&mut self) -> Result<GenLetter> {
        let start = self.pos;
        let base = self.atom()?;
        let exp = if self.peek() == Some(b'^') {
            self.pos += 1;
            self.sint()?
        } else {
            BigInt::one()
        };
        GenLetter::new(base, exp).map_err(|e| match e {
            Error::Domain(msg) => Error::Domain(format!("{msg} (at byte {start})")),
            other => other,
        })
    }

    fn atom(&mut self) -> Result<Base> {
        let c = self.peek().ok_or_else(|| self.err("expected a letter"))?;
        self.pos += 1;
        Ok(match c {
            b'T' => Base::T,
            b'U' => Base::U,
            b'V' => Base::V,
            b'K' => Base::K,
            b'S' => Base::S,
            b'L' => Base::L,
            b'H' | b'I' => {
                self.expect(b'(')?;
                let r = self.rat()?;
                self.expect(b')')?;
                if c == b'H' { Base::H(r) } else { Base::I(r) }
            }
            other => {
                self.pos -= 1;
                return Err(self.err(format!("unknown letter '{}'", other as char)));
            }
        })
    }

    fn expect(&mut self, want: u8) -> Result<()> {
        if self.peek() == Some(want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", want as char)))
        }
    }

    fn rat(&mut self) -> Result<BigRational> {
        let num = self.sint()?;
        let den = if self.peek() == Some(b'/') {
            self.pos += 1;
            self.sint()?
        } else {
            BigInt::one()
        };
        if den.is_zero() {
            return Err(Error::Domain(format!("zero denominator (at byte {})", self.pos)));
        }
        Ok(BigRational::new(num, den))
    }

    fn sint(&mut self) -> Result<BigInt> {
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits {
            return Err(self.err("expected an integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(text.parse().expect("validated digits"))
    }
}
