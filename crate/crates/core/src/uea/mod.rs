//! The enveloping algebra `U(n)` of the positive nilpotent subalgebra of the
//! Langlands dual Lie algebra, in a PBW basis.
//!
//! The root vectors of the dual group are indexed by the positive coroots of the
//! original group, in the canonical order of [`RootDatum::positive_coroots`]. A PBW
//! monomial is an exponent vector over that list, read left to right, so the
//! monomials of degree `theta` are exactly the Kostant partitions of `theta`.
//!
//! Coefficients are arbitrary-precision integers; the Chevalley basis makes all
//! structure constants integral.
//!
//! [`RootDatum::positive_coroots`]: crate::root_datum::RootDatum::positive_coroots

mod algebra;
mod checks;
mod chevalley;
mod expr;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::root_datum::{Coweight, GroupType};

pub use algebra::{build_chevalley, ChevalleyBasis};
pub use checks::{check_associativity, check_coassociativity, check_hopf_axiom, default_bound, CheckReport};
pub use expr::parse_expr;

/// Exponent vector over the positive roots of the dual group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n_roots: usize) -> Self {
        Monomial(vec![0; n_roots])
    }

    /// `e_j^k`.
    pub fn power(n_roots: usize, j: usize, k: u32) -> Self {
        let mut m = Monomial::one(n_roots);
        m.0[j] = k;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Number of root vectors in the word.
    pub fn word_length(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The word as a list of root indices, left to right.
    pub fn letters(&self) -> Vec<usize> {
        self.0.iter().enumerate().flat_map(|(j, &e)| std::iter::repeat_n(j, e as usize)).collect()
    }

    /// `E1^2*E3`, 1-based; `1` for the empty word.
    pub fn word(&self) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(j, &e)| if e == 1 { format!("E{}", j + 1) } else { format!("E{}^{}", j + 1, e) })
            .collect::<Vec<_>>()
            .join("*")
    }
}

fn add_into<K: Ord + Clone>(map: &mut BTreeMap<K, BigInt>, key: &K, c: &BigInt) {
    if c.is_zero() {
        return;
    }
    if let Some(v) = map.get_mut(key) {
        *v += c;
        if v.is_zero() {
            map.remove(key);
        }
    } else {
        map.insert(key.clone(), c.clone());
    }
}

pub(crate) fn big_json(c: &BigInt) -> serde_json::Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

fn check_same(a: GroupType, b: GroupType) -> Result<()> {
    if a != b {
        return Err(Error::BasisMismatch(format!("elements of U(n) for {a} and {b}")));
    }
    Ok(())
}

/// An element of `U(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PbwElement {
    group: GroupType,
    terms: BTreeMap<Monomial, BigInt>,
}

impl PbwElement {
    pub fn zero(group: GroupType) -> Self {
        PbwElement { group, terms: BTreeMap::new() }
    }

    pub fn from_terms(group: GroupType, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut out = PbwElement::zero(group);
        for (m, c) in terms {
            add_into(&mut out.terms, &m, &c);
        }
        out
    }

    /// Owner group of the basis (the group whose dual defines `n`).
    pub fn group(&self) -> GroupType {
        self.group
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &PbwElement) -> Result<PbwElement> {
        check_same(self.group, other.group)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            add_into(&mut out.terms, m, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &PbwElement) -> Result<PbwElement> {
        self.add(&other.scale(&-BigInt::one()))
    }

    pub fn scale(&self, k: &BigInt) -> PbwElement {
        PbwElement::from_terms(self.group, self.terms.iter().map(|(m, c)| (m.clone(), c * k)))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| json!({"word": m.word(), "exponents": m.0, "coeff": big_json(c)}))
            .collect();
        json!({"group": self.group.to_string(), "terms": terms, "text": self.to_string()})
    }
}

fn write_linear<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, &'a BigInt)>,
) -> fmt::Result {
    let mut first = true;
    for (word, c) in terms {
        let neg = c < &BigInt::zero();
        let a = if neg { -c } else { c.clone() };
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { "-" } else { "+" })?;
        }
        first = false;
        match (word.as_str(), a.is_one()) {
            ("1", _) => write!(f, "{a}")?,
            (_, true) => write!(f, "{word}")?,
            _ => write!(f, "{a}*{word}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for PbwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_linear(f, self.terms.iter().map(|(m, c)| (m.word(), c)))
    }
}

/// An element of `U(n) (x) U(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorElement {
    group: GroupType,
    terms: BTreeMap<(Monomial, Monomial), BigInt>,
}

impl TensorElement {
    pub fn zero(group: GroupType) -> Self {
        TensorElement { group, terms: BTreeMap::new() }
    }

    pub fn group(&self) -> GroupType {
        self.group
    }

    pub fn terms(&self) -> &BTreeMap<(Monomial, Monomial), BigInt> {
        &self.terms
    }

    pub fn coeff(&self, left: &Monomial, right: &Monomial) -> BigInt {
        self.terms.get(&(left.clone(), right.clone())).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, left: Monomial, right: Monomial, c: &BigInt) {
        add_into(&mut self.terms, &(left, right), c);
    }

    pub fn add(&self, other: &TensorElement) -> Result<TensorElement> {
        check_same(self.group, other.group)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            add_into(&mut out.terms, k, c);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<_> = self
            .terms
            .iter()
            .map(|((l, r), c)| json!({"left": l.word(), "right": r.word(), "coeff": big_json(c)}))
            .collect();
        json!({"group": self.group.to_string(), "terms": terms, "text": self.to_string()})
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_linear(f, self.terms.iter().map(|((l, r), c)| (format!("{} (x) {}", l.word(), r.word()), c)))
    }
}

/// Degree of a monomial as a coweight of the original group.
pub(crate) fn degree_of(roots: &[Coweight], m: &Monomial) -> Coweight {
    let rank = roots.first().map_or(0, |r| r.rank());
    roots
        .iter()
        .zip(&m.0)
        .fold(Coweight::zero(rank), |acc, (r, &e)| acc.add(&r.scale(e as i64)))
}
