//! Grothendieck-group classes on spaces of `Λ`-valued divisors `X^theta`.
//!
//! A class is a formal combination of basis sheaves. Each basis sheaf is the
//! pushforward along `i_K` of an external product of blocks, one block per
//! (coroot, multiplicity) pair of a Kostant partition, possibly coming from several
//! convolution factors. Coefficients are [`SignedTwistPoly`]s: a shift `[k]` is
//! folded in as `(-1)^k` and a twist `(m)` is the monomial `q^m`.
//!
//! The simple constituents of a basis sheaf of total part-length `l` live on
//! strata of dimension `l`, so the constituents supported on the small diagonal
//! `Δ_X` come exactly from the terms of length 1.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde_json::json;

use crate::error::{validation, Error, Result};
use crate::kostant::enumerate_kostant;
use crate::lefschetz::{decompose_sl2, standard_char, Sl2Decomposition};
use crate::poly::{HalfLaurent, SignedTwistPoly};
use crate::root_datum::{Coweight, RootDatum};

/// Sheaf placed on the symmetric power `X^(n)` of one block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BlockTag {
    /// Constant sheaf on `X^(n)`.
    Const,
    /// `Λ^(n)` of the trivial rank-one local system.
    ExtTriv,
    /// `Λ^(n)` of the standard representation `V`.
    ExtStd,
}

impl BlockTag {
    pub fn name(&self) -> &'static str {
        match self {
            BlockTag::Const => "CONST",
            BlockTag::ExtTriv => "EXT_TRIV",
            BlockTag::ExtStd => "EXT_STD",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Block {
    pub coroot: usize,
    pub tag: BlockTag,
    pub mult: u32,
}

impl Block {
    /// Stalk character of a length-one block at a point of the diagonal.
    fn diagonal_stalk(&self) -> HalfLaurent {
        debug_assert_eq!(self.mult, 1);
        match self.tag {
            BlockTag::Const | BlockTag::ExtTriv => HalfLaurent::one(),
            BlockTag::ExtStd => standard_char(),
        }
    }
}

/// Blocks of one basis sheaf, kept sorted so that products are canonical.
pub type BlockList = Vec<Block>;

fn list_length(blocks: &[Block]) -> u32 {
    blocks.iter().map(|b| b.mult).sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KClass {
    theta: Coweight,
    terms: BTreeMap<BlockList, SignedTwistPoly>,
}

impl KClass {
    pub fn zero(theta: Coweight) -> Self {
        KClass { theta, terms: BTreeMap::new() }
    }

    /// Class of the skyscraper on `X^0` (a point): the unit for [`KClass::convolve`].
    pub fn unit(rank: usize) -> Self {
        KClass { theta: Coweight::zero(rank), terms: BTreeMap::from([(vec![], HalfLaurent::one())]) }
    }

    pub fn theta(&self) -> &Coweight {
        &self.theta
    }

    pub fn terms(&self) -> &BTreeMap<BlockList, SignedTwistPoly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mut blocks: BlockList, coeff: &SignedTwistPoly) {
        if coeff.is_zero() {
            return;
        }
        blocks.sort_unstable();
        match self.terms.entry(blocks) {
            Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Sum of two classes on the same `X^theta`.
    pub fn add(&self, other: &KClass) -> Result<KClass> {
        if self.theta != other.theta {
            return validation(format!(
                "cannot add classes on X^{} and X^{}",
                self.theta, other.theta
            ));
        }
        let mut out = self.clone();
        out.accumulate(other)?;
        Ok(out)
    }

    /// In-place [`KClass::add`].
    pub fn accumulate(&mut self, other: &KClass) -> Result<()> {
        if self.theta != other.theta {
            return validation(format!(
                "cannot add classes on X^{} and X^{}",
                self.theta, other.theta
            ));
        }
        for (blocks, c) in &other.terms {
            self.add_term(blocks.clone(), c);
        }
        Ok(())
    }

    pub fn scale(&self, k: &SignedTwistPoly) -> KClass {
        let mut out = KClass::zero(self.theta.clone());
        for (blocks, c) in &self.terms {
            out.add_term(blocks.clone(), &(c * k));
        }
        out
    }

    /// `add_*` of the external product: block lists concatenate and coefficients
    /// multiply.
    pub fn convolve(&self, other: &KClass) -> KClass {
        let mut out = KClass::zero(self.theta.add(&other.theta));
        for (b1, c1) in &self.terms {
            for (b2, c2) in &other.terms {
                let blocks: BlockList = b1.iter().chain(b2).copied().collect();
                out.add_term(blocks, &(c1 * c2));
            }
        }
        out
    }

    /// Checks that every block list sums to the declared `theta`.
    pub fn check_consistent(&self, d: &RootDatum) -> Result<()> {
        for blocks in self.terms.keys() {
            let mut sum = Coweight::zero(d.rank());
            for b in blocks {
                sum = sum.add(&d.positive_coroots()[b.coroot].scale(b.mult as i64));
            }
            if sum != self.theta {
                return validation(format!("block list sums to {sum}, class lives on {}", self.theta));
            }
        }
        Ok(())
    }

    pub fn to_json(&self, d: &RootDatum) -> serde_json::Value {
        let terms: Vec<_> = self
            .terms
            .iter()
            .map(|(blocks, c)| {
                let blocks: Vec<_> = blocks
                    .iter()
                    .map(|b| {
                        json!({"coroot": d.positive_coroots()[b.coroot].0,
                               "mult": b.mult, "tag": b.tag.name()})
                    })
                    .collect();
                json!({"blocks": blocks, "coeff": c.to_json()})
            })
            .collect();
        json!({"theta": self.theta.0, "terms": terms})
    }
}

/// Coefficients of the simple constituents `Q_Δ(m)` supported on the small
/// diagonal: the polynomial `sum_m c_m q^m` stands for `sum_m c_m Q_Δ(m)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DiagonalClass {
    pub poly: SignedTwistPoly,
}

impl DiagonalClass {
    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Coefficient of `Q_Δ(m)` for integer twist `m`.
    pub fn coeff(&self, m: i32) -> i64 {
        self.poly.coeff(2 * m)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({"poly": self.poly.to_json(), "text": self.to_string()})
    }
}

impl fmt::Display for DiagonalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.poly.terms().enumerate() {
            let twist = crate::poly::format_half(e);
            let a = c.abs();
            let coeff = if a == 1 { String::new() } else { a.to_string() };
            match (i, c < 0) {
                (0, true) => write!(f, "-{coeff}Ql({twist})")?,
                (0, false) => write!(f, "{coeff}Ql({twist})")?,
                (_, true) => write!(f, " - {coeff}Ql({twist})")?,
                (_, false) => write!(f, " + {coeff}Ql({twist})")?,
            }
        }
        Ok(())
    }
}

impl std::ops::Sub for &DiagonalClass {
    type Output = DiagonalClass;
    fn sub(self, rhs: &DiagonalClass) -> DiagonalClass {
        DiagonalClass { poly: &self.poly - &rhs.poly }
    }
}

impl std::ops::Add for &DiagonalClass {
    type Output = DiagonalClass;
    fn add(self, rhs: &DiagonalClass) -> DiagonalClass {
        DiagonalClass { poly: &self.poly + &rhs.poly }
    }
}

/// `U^theta = sum over Kostant partitions of the constant sheaf on X^K`.
pub fn class_u(d: &RootDatum, theta: &Coweight) -> Result<KClass> {
    kostant_class(d, theta, BlockTag::Const, |_| HalfLaurent::one())
}

/// `Ω^theta = sum_K tensor_beta Λ^(n_beta)(Q_X)[n_beta](n_beta)`.
pub fn class_omega(d: &RootDatum, theta: &Coweight) -> Result<KClass> {
    kostant_class(d, theta, BlockTag::ExtTriv, |n| {
        HalfLaurent::monomial(2 * n as i32, if n % 2 == 0 { 1 } else { -1 })
    })
}

/// `F_mu = sum_K tensor_beta P_{n_beta}` with `P_n = Λ^(n)(V)[n](n/2)`.
pub fn class_oscillator(d: &RootDatum, mu: &Coweight) -> Result<KClass> {
    kostant_class(d, mu, BlockTag::ExtStd, |n| {
        HalfLaurent::monomial(n as i32, if n % 2 == 0 { 1 } else { -1 })
    })
}

/// One term per Kostant partition; each part of multiplicity `n` contributes a
/// block with `tag` and a coefficient factor `part_coeff(n)`.
fn kostant_class(
    d: &RootDatum,
    theta: &Coweight,
    tag: BlockTag,
    part_coeff: impl Fn(u32) -> HalfLaurent,
) -> Result<KClass> {
    let mut out = KClass::zero(theta.clone());
    for k in enumerate_kostant(d, theta)? {
        let mut coeff = HalfLaurent::one();
        let mut blocks = Vec::new();
        for (&coroot, &mult) in k.parts() {
            blocks.push(Block { coroot, tag, mult });
            coeff = &coeff * &part_coeff(mult);
        }
        out.add_term(blocks, &coeff);
    }
    Ok(out)
}

/// All `theta_1` with `0 <= theta_1 <= theta`.
fn sub_coweights(theta: &Coweight) -> Vec<Coweight> {
    let mut out = vec![Vec::new()];
    for &n in theta.coeffs() {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=n).map(move |c| {
                    let mut v = prefix.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(Coweight).collect()
}

/// `Ω~^theta = sum_{theta_1 + theta_2 = theta} add_*(Ω^{theta_1} ⊠ U^{theta_2})`.
pub fn class_tilde_omega(d: &RootDatum, theta: &Coweight) -> Result<KClass> {
    d.check_positive(theta)?;
    let mut out = KClass::zero(theta.clone());
    for theta1 in sub_coweights(theta) {
        let theta2 = theta.sub(&theta1);
        out.accumulate(&class_omega(d, &theta1)?.convolve(&class_u(d, &theta2)?))?;
    }
    Ok(out)
}

/// Keeps the terms of total part-length 1 and evaluates their stalks on the
/// diagonal.
pub fn diagonal_part(c: &KClass) -> DiagonalClass {
    let mut poly = HalfLaurent::zero();
    for (blocks, coeff) in c.terms() {
        if list_length(blocks) != 1 {
            continue;
        }
        let stalk = blocks
            .iter()
            .fold(HalfLaurent::one(), |acc, b| &acc * &b.diagonal_stalk());
        poly += &(coeff * &stalk);
    }
    DiagonalClass { poly }
}

fn check_nonzero(d: &RootDatum, theta: &Coweight) -> Result<()> {
    d.check_positive(theta)?;
    if theta.is_zero() {
        return validation("theta must be nonzero");
    }
    Ok(())
}

/// Diagonal part of the !-restriction of the nearby cycles to the maximal defect
/// stratum, which equals `Ω~^theta`.
pub fn compute_s1(d: &RootDatum, theta: &Coweight) -> Result<DiagonalClass> {
    check_nonzero(d, theta)?;
    Ok(diagonal_part(&class_tilde_omega(d, theta)?))
}

/// The class `sum [U^{theta_1}] * [F_mu] * [U^{theta_2}]` over all triples with
/// `theta_1 + mu + theta_2 = theta` except `(0, theta, 0)`.
pub fn class_off_maximal_defect(d: &RootDatum, theta: &Coweight) -> Result<KClass> {
    check_nonzero(d, theta)?;
    let mut u_cache: HashMap<Coweight, KClass> = HashMap::new();
    let mut u = |c: &Coweight| -> Result<KClass> {
        if let Some(k) = u_cache.get(c) {
            return Ok(k.clone());
        }
        let k = class_u(d, c)?;
        u_cache.insert(c.clone(), k.clone());
        Ok(k)
    };
    let mut out = KClass::zero(theta.clone());
    for theta1 in sub_coweights(theta) {
        let rest = theta.sub(&theta1);
        let left = u(&theta1)?;
        for mu in sub_coweights(&rest) {
            let theta2 = rest.sub(&mu);
            if theta1.is_zero() && theta2.is_zero() {
                continue;
            }
            let term = left.convolve(&class_oscillator(d, &mu)?).convolve(&u(&theta2)?);
            out.accumulate(&term)?;
        }
    }
    Ok(out)
}

/// Diagonal part of the !-restriction of the summands of `gr Ψ` that are not
/// supported on the maximal defect stratum.
pub fn compute_s2(d: &RootDatum, theta: &Coweight) -> Result<DiagonalClass> {
    Ok(diagonal_part(&class_off_maximal_defect(d, theta)?))
}

/// `(H_theta)_{on Δ} = S_1 - S_2` in the Grothendieck group.
pub fn h_diagonal_class(d: &RootDatum, theta: &Coweight) -> Result<DiagonalClass> {
    Ok(&compute_s1(d, theta)? - &compute_s2(d, theta)?)
}

/// Recovers `(H_theta)_{on Δ}` as an sl2-module.
///
/// The class is minus a sum of `Q_Δ[1](m)`; `Q_Δ[1](m)` is pure of weight
/// `1 - 2m`, which by purity of the monodromy filtration is also its Cartan
/// weight.
pub fn reconstruct_h_diagonal(d: &RootDatum, theta: &Coweight) -> Result<Sl2Decomposition> {
    let h = h_diagonal_class(d, theta)?;
    // perverse sheaves on the curve Δ_X sit in odd shift
    let perverse = -&h.poly;
    // weight 1 - 2m has twist exponent m - 1/2
    let character = perverse.shift(-1);
    decompose_sl2(&character).map_err(|e| match e {
        Error::NotACharacter(msg) => {
            Error::InconsistentClass(format!("H_diag = {h} for theta = {theta}: {msg}"))
        }
        other => other,
    })
}
