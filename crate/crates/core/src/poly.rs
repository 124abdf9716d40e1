//! Laurent polynomials in a Tate-twist variable `q` with half-integer exponents.
//!
//! Exponents are stored as integer counts of half-steps, so `q^{1/2}` has key `1`
//! and `q^{-1}` has key `-2`. The same type serves as an sl2-character (where
//! coefficients are dimensions) and as a signed coefficient in Grothendieck groups
//! (where a cohomological shift `[k]` has been folded in as `(-1)^k`).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde_json::json;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfLaurent {
    terms: BTreeMap<i32, i64>,
}

/// Character of a Lefschetz-sl2 representation: `q^m` records Tate twist `(m)`,
/// i.e. Cartan weight `-2m`.
pub type BigradedChar = HalfLaurent;

/// Coefficient of a Grothendieck-group class.
pub type SignedTwistPoly = HalfLaurent;

impl HalfLaurent {
    pub fn zero() -> Self {
        HalfLaurent::default()
    }

    pub fn one() -> Self {
        HalfLaurent::monomial(0, 1)
    }

    /// `coeff * q^{half_exp / 2}`.
    pub fn monomial(half_exp: i32, coeff: i64) -> Self {
        let mut p = HalfLaurent::zero();
        p.add_term(half_exp, coeff);
        p
    }

    /// `q^{1/2} + q^{-1/2}`.
    pub fn standard() -> Self {
        HalfLaurent::from_terms([(1, 1), (-1, 1)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut p = HalfLaurent::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, half_exp: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(half_exp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&half_exp);
        }
    }

    pub fn coeff(&self, half_exp: i32) -> i64 {
        self.terms.get(&half_exp).copied().unwrap_or(0)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Value at `q = 1`; the dimension for characters, the Euler characteristic
    /// for signed classes.
    pub fn dimension(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c >= 0)
    }

    /// Symmetric under `q -> q^{-1}`.
    pub fn is_palindromic(&self) -> bool {
        self.terms.iter().all(|(&e, &c)| self.coeff(-e) == c)
    }

    /// Every exponent is an integer.
    pub fn has_integral_exponents(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    /// Multiplies by `q^{half_shift / 2}`.
    pub fn shift(&self, half_shift: i32) -> Self {
        HalfLaurent { terms: self.terms.iter().map(|(&e, &c)| (e + half_shift, c)).collect() }
    }

    pub fn scale(&self, k: i64) -> Self {
        HalfLaurent::from_terms(self.terms().map(|(e, c)| (e, c * k)))
    }

    /// Adams operation `q -> q^k`, used for power sums of characters.
    pub fn adams(&self, k: i32) -> Self {
        HalfLaurent::from_terms(self.terms().map(|(e, c)| (e * k, c)))
    }

    /// Exact division of every coefficient by `k`; `None` if some coefficient is
    /// not divisible.
    pub fn div_exact(&self, k: i64) -> Option<Self> {
        if self.terms.values().any(|c| c % k != 0) {
            return None;
        }
        Some(HalfLaurent::from_terms(self.terms().map(|(e, c)| (e, c / k))))
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(HalfLaurent::one(), |acc, _| &acc * self)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<_> = self
            .terms()
            .map(|(e, c)| json!({"exp": format_half(e), "coeff": c}))
            .collect();
        json!({"terms": terms, "text": self.to_string()})
    }
}

/// Formats a half-step count as `"1/2"`, `"-3/2"`, `"2"`.
pub fn format_half(e: i32) -> String {
    if e % 2 == 0 {
        (e / 2).to_string()
    } else {
        format!("{e}/2")
    }
}

impl fmt::Display for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // highest power first
        for (i, (e, c)) in self.terms().collect::<Vec<_>>().into_iter().rev().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            let power = match e {
                2 => "q".to_string(),
                e if e % 2 == 0 => format!("q^{}", e / 2),
                e => format!("q^({e}/2)"),
            };
            match (e, a) {
                (0, _) => write!(f, "{a}")?,
                (_, 1) => write!(f, "{power}")?,
                _ => write!(f, "{a}{power}")?,
            }
        }
        Ok(())
    }
}

impl Add for &HalfLaurent {
    type Output = HalfLaurent;
    fn add(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for HalfLaurent {
    type Output = HalfLaurent;
    fn add(self, rhs: HalfLaurent) -> HalfLaurent {
        &self + &rhs
    }
}

impl AddAssign<&HalfLaurent> for HalfLaurent {
    fn add_assign(&mut self, rhs: &HalfLaurent) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c);
        }
    }
}

impl Sub for &HalfLaurent {
    type Output = HalfLaurent;
    fn sub(self, rhs: &HalfLaurent) -> HalfLaurent {
        self + &(-rhs)
    }
}

impl Sub for HalfLaurent {
    type Output = HalfLaurent;
    fn sub(self, rhs: HalfLaurent) -> HalfLaurent {
        &self - &rhs
    }
}

impl Neg for &HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        self.scale(-1)
    }
}

impl Neg for HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        -&self
    }
}

impl Mul for &HalfLaurent {
    type Output = HalfLaurent;
    fn mul(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = HalfLaurent::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for HalfLaurent {
    type Output = HalfLaurent;
    fn mul(self, rhs: HalfLaurent) -> HalfLaurent {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn display() {
        assert_eq!(HalfLaurent::standard().to_string(), "q^(1/2) + q^(-1/2)");
        let p = HalfLaurent::from_terms([(0, 1), (2, -1)]);
        assert_eq!(p.to_string(), "-q + 1");
        assert_eq!(HalfLaurent::from_terms([(-4, 3)]).to_string(), "3q^-2");
        assert_eq!(HalfLaurent::zero().to_string(), "0");
        assert_eq!(HalfLaurent::monomial(0, 2).to_string(), "2");
    }

    #[test]
    fn standard_square() {
        let v = HalfLaurent::standard();
        assert_eq!(&v * &v, HalfLaurent::from_terms([(2, 1), (0, 2), (-2, 1)]));
        assert_eq!(v.pow(3).dimension(), 8);
        assert!(v.pow(3).is_palindromic());
    }

    #[test]
    fn zero_pruned() {
        let p = &HalfLaurent::standard() - &HalfLaurent::standard();
        assert!(p.is_zero());
        assert_eq!(p, HalfLaurent::zero());
    }

    fn arb_poly() -> impl Strategy<Value = HalfLaurent> {
        proptest::collection::vec((-6i32..6, -4i64..5), 0..6).prop_map(HalfLaurent::from_terms)
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            prop_assert_eq!((&a * &b).dimension(), a.dimension() * b.dimension());
        }
    }
}
