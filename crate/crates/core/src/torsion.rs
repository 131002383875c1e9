//! Finite-order elements of PGL(2,Q).
//!
//! Over Q a torsion element has order 2, 3, 4 or 6, and `τ = tr²/det` is
//! then 0, 1, 2 or 3. Orders are detected by exact powering; `τ` only
//! subclassifies the elements of infinite order.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{Mat2, ProjMat2};

/// Torsion classification of a projective matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrderClass {
    Identity,
    /// Least `n >= 2` with `M^n = 1`.
    Finite(u32),
    /// `τ = 4`, not the identity.
    Parabolic,
    /// `τ > 4` or `τ < 0`.
    Hyperbolic,
    /// `0 < τ < 4` without finite order.
    EllipticInfinite,
}

impl OrderClass {
    pub fn order(&self) -> Option<u32> {
        match self {
            OrderClass::Identity => Some(1),
            OrderClass::Finite(n) => Some(*n),
            _ => None,
        }
    }
}

impl fmt::Display for OrderClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderClass::Identity => f.write_str("identity"),
            OrderClass::Finite(n) => write!(f, "finite {n}"),
            OrderClass::Parabolic => f.write_str("parabolic"),
            OrderClass::Hyperbolic => f.write_str("hyperbolic"),
            OrderClass::EllipticInfinite => f.write_str("elliptic-infinite"),
        }
    }
}

/// Largest order a torsion element of PGL(2,Q) can have.
pub const MAX_TORSION_ORDER: u32 = 6;

pub fn order_of(m: &ProjMat2) -> OrderClass {
    if m.is_identity() {
        return OrderClass::Identity;
    }
    let mut power = m.clone();
    for n in 2..=MAX_TORSION_ORDER {
        power = power.mul(m);
        if power.is_identity() {
            return OrderClass::Finite(n);
        }
    }
    let tau = m.trace_sq_over_det();
    let four = BigRational::from_integer(4.into());
    if tau == four {
        OrderClass::Parabolic
    } else if tau > four || tau.is_negative() {
        OrderClass::Hyperbolic
    } else {
        OrderClass::EllipticInfinite
    }
}

/// `M₃`, `M₄`, `M₆`.
pub fn canonical_rep(n: u32) -> Result<ProjMat2> {
    let (p, q, r, s) = match n {
        3 => (0, -1, 1, 1),
        4 => (1, -1, 1, 1),
        6 => (2, -1, 1, 1),
        _ => return Err(Error::BadOrder(n)),
    };
    Ok(ProjMat2::new(p, q, r, s).expect("nonsingular"))
}

/// Integer-cleared member of the order-`n` family.
///
/// `n = 2` reads the parameters as `(p, q, r)` and returns `[[p, q], [r, −p]]`;
/// `n = 3, 4, 6` read `(p, q, s)` and need `q(p + s) != 0`.
pub fn family(n: u32, a: &BigInt, b: &BigInt, c: &BigInt) -> Result<ProjMat2> {
    let m = match n {
        2 => {
            let (p, q, r) = (a, b, c);
            Mat2::new(p.clone(), q.clone(), r.clone(), -p)
        }
        3 | 4 | 6 => {
            let (p, q, s) = (a, b, c);
            if q.is_zero() || (p + s).is_zero() {
                return Err(Error::DegenerateParams(format!("q(p+s) = 0 for p={p}, q={q}, s={s}")));
            }
            let k = BigInt::from(match n {
                3 => 1,
                4 => 2,
                _ => 3,
            });
            // -(p² + ps + s²), -(p² + s²), -(p² − ps + s²)
            let cross = match n {
                3 => p * s,
                4 => BigInt::zero(),
                _ => -(p * s),
            };
            let lower = -(p * p + cross + s * s);
            Mat2::new(&k * p * q, &k * q * q, lower, &k * q * s)
        }
        _ => return Err(Error::BadOrder(n)),
    };
    m.canonicalize().map_err(|_| Error::DegenerateParams(format!("singular order-{n} member for ({a}, {b}, {c})")))
}

/// `N` and `e` with `N⁻¹ · M · N = M_n^e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyWitness {
    pub conjugator: ProjMat2,
    pub exponent: u32,
    pub order: u32,
}

impl ConjugacyWitness {
    pub fn verify(&self, m: &ProjMat2) -> bool {
        let Ok(rep) = canonical_rep(self.order) else { return false };
        self.conjugator.inverse().mul(m).mul(&self.conjugator) == rep.pow_i64(self.exponent.into())
    }
}

impl fmt::Display for ConjugacyWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N={} e={} n={}", self.conjugator, self.exponent, self.order)
    }
}

/// Bound on `|c₁|, |c₂|` when picking an invertible intertwiner.
const COMBINATION_BOUND: i64 = 10;

/// Finds `N` conjugating a torsion element of order 3, 4 or 6 onto a power
/// of its canonical representative.
///
/// Solves the linear system `M N = λ N A` (with `A = M_n^e` and `λ` fixing
/// the scalar ambiguity) over Q, then picks an invertible element of the
/// two-dimensional solution space from small integer combinations.
pub fn conjugator_to_canonical(m: &ProjMat2) -> Result<ConjugacyWitness> {
    let n = match order_of(m) {
        OrderClass::Finite(n) if n >= 3 => n,
        OrderClass::Finite(n) => return Err(Error::BadOrder(n)),
        _ => return Err(Error::NotTorsion),
    };
    let rep = canonical_rep(n)?;
    for e in (1..n).filter(|e| e.gcd(&n) == 1) {
        let target = rep.pow_i64(e.into());
        if let Some(conjugator) = intertwiner(m, &target) {
            let witness = ConjugacyWitness { conjugator, exponent: e, order: n };
            if witness.verify(m) {
                return Ok(witness);
            }
        }
    }
    Err(Error::NoConjugatorFound)
}

// Invertible N with M N = λ N A, or None.
fn intertwiner(m: &ProjMat2, a: &ProjMat2) -> Option<ProjMat2> {
    if m == a {
        return Some(ProjMat2::identity());
    }
    let (tm, ta) = (m.trace(), a.trace());
    if ta.is_zero() {
        return None;
    }
    let lambda = BigRational::new(tm, ta);
    let q = |x: &BigInt| BigRational::from_integer(x.clone());
    let me = m.entries().map(q);
    let ae = a.entries().map(q);
    // Unknowns N = [[n0, n1], [n2, n3]]; row (i, j) of M N − λ N A = 0.
    let mut rows = Vec::with_capacity(4);
    for i in 0..2 {
        for j in 0..2 {
            let mut row = vec![BigRational::zero(); 4];
            for k in 0..2 {
                row[2 * k + j] += &me[2 * i + k];
                row[2 * i + k] -= &lambda * &ae[2 * k + j];
            }
            rows.push(row);
        }
    }
    let basis = kernel(rows, 4);
    let integral: Vec<[BigInt; 4]> = basis.iter().map(|v| clear_denominators(v)).collect();
    let candidates: Vec<(i64, i64)> = match integral.len() {
        0 => return None,
        1 => vec![(1, 0)],
        _ => small_pairs(COMBINATION_BOUND),
    };
    for (c1, c2) in candidates {
        let mut entries: [BigInt; 4] = Default::default();
        for (idx, slot) in entries.iter_mut().enumerate() {
            *slot = &integral[0][idx] * c1;
            if integral.len() > 1 {
                *slot += &integral[1][idx] * c2;
            }
        }
        let [p, q, r, s] = entries;
        if let Ok(n) = ProjMat2::new(p, q, r, s) {
            return Some(n);
        }
    }
    None
}

// Pairs ordered by max(|c1|, |c2|), then lexicographically; (0, 0) skipped.
fn small_pairs(bound: i64) -> Vec<(i64, i64)> {
    let mut pairs: Vec<(i64, i64)> = (-bound..=bound)
        .flat_map(|a| (-bound..=bound).map(move |b| (a, b)))
        .filter(|&(a, b)| (a, b) != (0, 0))
        .collect();
    pairs.sort_by_key(|&(a, b)| (a.abs().max(b.abs()), -a.signum(), a.abs(), -b.signum(), b.abs()));
    pairs
}

fn clear_denominators(v: &[BigRational]) -> [BigInt; 4] {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut out: [BigInt; 4] = Default::default();
    for (slot, x) in out.iter_mut().zip(v) {
        *slot = (x * BigRational::from_integer(l.clone())).to_integer();
    }
    out
}

/// Basis of the null space of `rows` (each of length `cols`) over Q.
fn kernel(mut rows: Vec<Vec<BigRational>>, cols: usize) -> Vec<Vec<BigRational>> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pr) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(rank, pr);
        let inv = rows[rank][col].recip();
        for x in rows[rank].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in 0..cols {
                    let d = &f * &rows[rank][c];
                    rows[r][c] -= d;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![BigRational::zero(); cols];
            v[free] = BigRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[r][free].clone();
            }
            v
        })
        .collect()
}

/// Primitive integer polynomial whose roots `ξ` parametrize order-`n`
/// elements (`n` odd) through `τ = 4ξ/(ξ − 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderPolynomial {
    pub n: u32,
    /// Highest degree first.
    pub coefficients: Vec<BigInt>,
}

impl OrderPolynomial {
    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Exact division test: does `other` divide `self` in Q[ξ]?
    pub fn divisible_by(&self, other: &OrderPolynomial) -> bool {
        let q = |v: &[BigInt]| v.iter().rev().map(|c| BigRational::from_integer(c.clone())).collect::<Vec<_>>();
        let mut rem = q(&self.coefficients);
        let div = q(&other.coefficients);
        let lead = div.last().expect("nonempty").clone();
        while rem.len() >= div.len() {
            let f = rem.last().expect("nonempty").clone() / &lead;
            let shift = rem.len() - div.len();
            for (i, d) in div.iter().enumerate() {
                rem[shift + i] -= &f * d;
            }
            rem.pop();
        }
        rem.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for OrderPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coefficients.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Order polynomial for odd `n >= 3`.
///
/// With `a₁ = 1`, `a₂ = t`, `a_{k+1} = t a_k − d a_{k−1}`, a non-scalar
/// matrix of trace `t` and determinant `d` has `M^n` scalar iff `a_n = 0`.
/// For odd `n`, `a_n = Σ_j c_j t^{n−1−2j} d^j = d^N ã(τ)` with
/// `N = (n − 1)/2`; substituting `τ = 4ξ/(ξ − 1)` and clearing
/// `(ξ − 1)^N` leaves `Σ_j c_j (4ξ)^{N−j} (ξ − 1)^j`.
pub fn order_polynomial(n: u32) -> Result<OrderPolynomial> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::BadOrderArg(n));
    }
    // a_k[j] is the coefficient of t^{k-1-2j} d^j.
    let mut prev: Vec<BigInt> = vec![BigInt::one()]; // a_1
    let mut cur: Vec<BigInt> = vec![BigInt::one()]; // a_2 = t
    for _ in 2..n {
        let mut next = cur.clone();
        next.resize(cur.len().max(prev.len() + 1), BigInt::zero());
        for (j, c) in prev.iter().enumerate() {
            next[j + 1] -= c;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    let big_n = ((n - 1) / 2) as usize;
    let coeffs = &cur[..=big_n];

    let four_xi = vec![BigInt::zero(), BigInt::from(4)];
    let xi_minus_one = vec![BigInt::from(-1), BigInt::one()];
    let mut total = vec![BigInt::zero(); big_n + 1];
    for (j, c) in coeffs.iter().enumerate() {
        let term = poly_mul(&poly_pow(&four_xi, big_n - j), &poly_pow(&xi_minus_one, j));
        for (i, t) in term.iter().enumerate() {
            total[i] += c * t;
        }
    }
    let content = total.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    let mut coefficients: Vec<BigInt> = total.into_iter().rev().map(|c| c / &content).collect();
    if coefficients[0].is_negative() {
        coefficients.iter_mut().for_each(|c| *c = -&*c);
    }
    Ok(OrderPolynomial { n, coefficients })
}

// Ascending-degree integer polynomial helpers.
fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_pow(a: &[BigInt], k: usize) -> Vec<BigInt> {
    (0..k).fold(vec![BigInt::one()], |acc, _| poly_mul(&acc, a))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(s: &str) -> ProjMat2 {
        s.parse().unwrap()
    }
    fn b(x: i64) -> BigInt {
        x.into()
    }

    #[test]
    fn order_examples() {
        assert_eq!(order_of(&pm("[[0,-1],[1,1]]")), OrderClass::Finite(3));
        assert_eq!(order_of(&pm("[[1,-1],[1,1]]")), OrderClass::Finite(4));
        assert_eq!(order_of(&pm("[[2,-1],[1,1]]")), OrderClass::Finite(6));
        assert_eq!(order_of(&pm("[[1,-1],[2,1]]")), OrderClass::EllipticInfinite);
        assert_eq!(order_of(&pm("[[0,1],[1,0]]")), OrderClass::Finite(2));
        assert_eq!(order_of(&pm("[[1,1],[0,1]]")), OrderClass::Parabolic);
        assert_eq!(order_of(&pm("[[2,1],[1,1]]")), OrderClass::Hyperbolic);
        // τ < 0: det negative
        assert_eq!(order_of(&pm("[[1,0],[0,-2]]")), OrderClass::Hyperbolic);
        assert_eq!(order_of(&ProjMat2::identity()), OrderClass::Identity);
    }

    #[test]
    fn canonical_reps() {
        // printed forms, which parse to the same projective elements
        assert_eq!(canonical_rep(3).unwrap(), pm("[[0,-1],[1,1]]"));
        assert_eq!(canonical_rep(4).unwrap(), pm("[[1,-1],[1,1]]"));
        assert_eq!(canonical_rep(6).unwrap(), pm("[[2,-1],[1,1]]"));
        assert_eq!(canonical_rep(3).unwrap().to_string(), "[[0,1],[-1,-1]]");
        assert_eq!(canonical_rep(4).unwrap().to_string(), "[[1,-1],[1,1]]");
        assert_eq!(canonical_rep(5), Err(Error::BadOrder(5)));
    }

    #[test]
    fn family_examples() {
        let m3 = family(3, &b(1), &b(1), &b(1)).unwrap();
        assert_eq!(m3.to_string(), "[[1,1],[-3,1]]");
        assert_eq!(m3.trace_sq_over_det(), BigRational::one());
        assert_eq!(order_of(&m3), OrderClass::Finite(3));
        let m4 = family(4, &b(1), &b(1), &b(1)).unwrap();
        assert_eq!(m4.to_string(), "[[1,1],[-1,1]]");
        assert_eq!(order_of(&m4), OrderClass::Finite(4));
        let m2 = family(2, &b(0), &b(5), &b(1)).unwrap();
        assert_eq!(m2.to_string(), "[[0,5],[1,0]]");
        assert!(m2.trace().is_zero());
        assert!(matches!(family(3, &b(1), &b(0), &b(1)), Err(Error::DegenerateParams(_))));
        assert!(matches!(family(4, &b(1), &b(2), &b(-1)), Err(Error::DegenerateParams(_))));
        assert!(matches!(family(2, &b(0), &b(0), &b(3)), Err(Error::DegenerateParams(_))));
        assert_eq!(family(5, &b(1), &b(1), &b(1)), Err(Error::BadOrder(5)));
    }

    #[test]
    fn conjugator_examples() {
        let m3 = canonical_rep(3).unwrap();
        let w = conjugator_to_canonical(&m3).unwrap();
        assert!(w.conjugator.is_identity());
        assert_eq!(w.exponent, 1);
        let mut samples: Vec<ProjMat2> =
            ["[[1,1],[-3,1]]", "[[1,1],[-1,1]]", "[[2,-1],[1,1]]"].iter().map(|s| pm(s)).collect();
        samples.push(family(6, &b(1), &b(2), &b(3)).unwrap());
        samples.push(family(4, &b(-5), &b(7), &b(2)).unwrap());
        for m in samples {
            let w = conjugator_to_canonical(&m).unwrap();
            assert!(w.verify(&m), "{m}");
        }
        assert_eq!(conjugator_to_canonical(&pm("[[0,1],[1,0]]")), Err(Error::BadOrder(2)));
        assert_eq!(conjugator_to_canonical(&pm("[[1,1],[0,1]]")), Err(Error::NotTorsion));
    }

    #[test]
    fn order_polynomials_match_known_values() {
        let coeffs = |n| order_polynomial(n).unwrap().coefficients;
        assert_eq!(coeffs(3), vec![b(3), b(1)]);
        assert_eq!(coeffs(5), vec![b(5), b(10), b(1)]);
        assert_eq!(coeffs(7), vec![b(7), b(35), b(21), b(1)]);
        let p9 = order_polynomial(9).unwrap();
        assert_eq!(p9.degree(), 4);
        assert!(p9.divisible_by(&order_polynomial(3).unwrap()));
        assert!(!order_polynomial(7).unwrap().divisible_by(&order_polynomial(3).unwrap()));
        assert_eq!(order_polynomial(4), Err(Error::BadOrderArg(4)));
        assert_eq!(order_polynomial(1), Err(Error::BadOrderArg(1)));
    }

    #[test]
    fn kernel_of_rank_deficient_system() {
        let q = |x: i64| BigRational::from_integer(x.into());
        let rows = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]];
        let k = kernel(rows, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(&v[0] + q(2) * &v[1] + q(3) * &v[2], q(0));
        }
    }
}
