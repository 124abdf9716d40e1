//! Characters of the Lefschetz-sl2 and stalks of Picard-Lefschetz oscillators.
//!
//! A character is a [`BigradedChar`]: the coefficient of `q^m` is the dimension of
//! the part with Tate twist `(m)`. Cartan weight `w` corresponds to `m = -w/2`, so
//! `Q(1/2)` (weight -1) is `q^{1/2}` and the standard representation is
//! `q^{1/2} + q^{-1/2}`.
//!
//! Shifts `[n]` and twists `(n/2)` coming from the oscillator normalization are
//! reported next to the characters instead of being folded into them, so that
//! every character produced here stays non-negative and palindromic.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde_json::json;

use crate::error::{validation, Error, Result};
use crate::kostant::enumerate_kostant;
use crate::poly::{BigradedChar, HalfLaurent};
use crate::root_datum::{Coweight, RootDatum};

/// Multiplicities of irreducible sl2-representations, keyed by highest Cartan
/// weight `h` (the irreducible of highest weight `h` has dimension `h + 1`).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Sl2Decomposition {
    multiplicities: BTreeMap<u32, u64>,
}

impl Sl2Decomposition {
    pub fn new(multiplicities: BTreeMap<u32, u64>) -> Self {
        let multiplicities = multiplicities.into_iter().filter(|&(_, m)| m > 0).collect();
        Sl2Decomposition { multiplicities }
    }

    pub fn multiplicities(&self) -> &BTreeMap<u32, u64> {
        &self.multiplicities
    }

    pub fn multiplicity(&self, highest_weight: u32) -> u64 {
        self.multiplicities.get(&highest_weight).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.multiplicities.is_empty()
    }

    /// True for exactly one copy of the 2-dimensional standard representation.
    pub fn is_standard(&self) -> bool {
        self.multiplicities.len() == 1 && self.multiplicity(1) == 1
    }

    pub fn dimension(&self) -> u64 {
        self.multiplicities.iter().map(|(&h, &m)| (h as u64 + 1) * m).sum()
    }

    /// Recomputes the character from the multiplicities.
    pub fn character(&self) -> BigradedChar {
        let mut out = HalfLaurent::zero();
        for (&h, &m) in &self.multiplicities {
            out += &irreducible_char(h).scale(m as i64);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let irreps: Vec<_> = self
            .multiplicities
            .iter()
            .map(|(&h, &m)| json!({"highest_weight": h, "dim": h + 1, "mult": m}))
            .collect();
        json!(irreps)
    }
}

impl fmt::Display for Sl2Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .multiplicities
            .iter()
            .map(|(&h, &m)| if m == 1 { format!("V{h}") } else { format!("{m}V{h}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Character of the irreducible with highest Cartan weight `h`.
pub fn irreducible_char(h: u32) -> BigradedChar {
    let h = h as i32;
    HalfLaurent::from_terms((0..=h).map(|k| (-h + 2 * k, 1)))
}

/// Point multiplicities `(m_1, ..., m_k)` of a divisor on a curve; stored in
/// decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CollisionPattern {
    blocks: Vec<u32>,
}

impl CollisionPattern {
    pub fn new(mut blocks: Vec<u32>) -> Result<Self> {
        if blocks.contains(&0) {
            return validation("collision pattern blocks must be positive");
        }
        blocks.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CollisionPattern { blocks })
    }

    pub fn blocks(&self) -> &[u32] {
        &self.blocks
    }

    /// Total degree `n = sum of blocks`.
    pub fn degree(&self) -> u32 {
        self.blocks.iter().sum()
    }

    /// All patterns of degree `n` (integer partitions of `n`).
    pub fn all_of_degree(n: u32) -> Vec<CollisionPattern> {
        fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<CollisionPattern>) {
            if n == 0 {
                out.push(CollisionPattern { blocks: cur.clone() });
                return;
            }
            for m in (1..=max.min(n)).rev() {
                cur.push(m);
                rec(n - m, m, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

/// Stalk of the oscillator `P_n` at a divisor with the given collision pattern.
///
/// The character is that of the underlying representation; the normalization
/// `[n](n/2)` is reported through `shift` and `twist_halves` (both equal to `n`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PloStalk {
    pub character: BigradedChar,
    pub shift: u32,
    pub twist_halves: i32,
}

impl PloStalk {
    /// The class in the Grothendieck group of a point: `(-1)^n q^{n/2}` times the
    /// character.
    pub fn signed_class(&self) -> HalfLaurent {
        let sign = if self.shift % 2 == 0 { 1 } else { -1 };
        self.character.shift(self.twist_halves).scale(sign)
    }
}

pub fn standard_char() -> BigradedChar {
    HalfLaurent::standard()
}

fn check_character(c: &BigradedChar) -> Result<()> {
    if !c.is_nonnegative() {
        return Err(Error::NotACharacter(format!("{c} has a negative coefficient")));
    }
    if !c.is_palindromic() {
        return Err(Error::NotACharacter(format!("{c} is not palindromic")));
    }
    Ok(())
}

/// Character of the `m`-th exterior power, via Newton's identities
/// `k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i` with `p_i` the Adams operations.
pub fn exterior_power_char(c: &BigradedChar, m: u32) -> Result<BigradedChar> {
    check_character(c)?;
    let mut elementary = vec![HalfLaurent::one()];
    for k in 1..=m as i32 {
        let mut acc = HalfLaurent::zero();
        for i in 1..=k {
            let term = &elementary[(k - i) as usize] * &c.adams(i);
            if i % 2 == 1 {
                acc += &term;
            } else {
                acc = &acc - &term;
            }
        }
        let e_k = acc
            .div_exact(k as i64)
            .expect("Newton identities yield integral coefficients");
        elementary.push(e_k);
    }
    Ok(elementary.pop().expect("nonempty"))
}

/// Stalk of `P_n = Lambda^(n)(V)[n](n/2)` at a divisor `sum m_j x_j`: the tensor
/// product of the `Lambda^{m_j} V`.
pub fn plo_stalk_char(p: &CollisionPattern) -> PloStalk {
    let v = standard_char();
    let mut character = HalfLaurent::one();
    for &m in p.blocks() {
        let factor = exterior_power_char(&v, m).expect("V is a character");
        character = &character * &factor;
    }
    let n = p.degree();
    PloStalk { character, shift: n, twist_halves: n as i32 }
}

/// Stalk of the oscillator `F_theta` at a configuration of distinct points,
/// split by Kostant-partition length.
///
/// The summand `i_{K,*} P_K` has normalization `[l](l/2)` with `l` the length
/// of `K`, so the entry for length `l` carries exactly that shift and twist.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OscillatorStalk {
    by_length: BTreeMap<u32, BigradedChar>,
}

impl OscillatorStalk {
    /// The stalk of the empty configuration (the unit for [`Self::product`]).
    pub fn unit() -> Self {
        OscillatorStalk { by_length: BTreeMap::from([(0, HalfLaurent::one())]) }
    }

    pub fn from_parts(parts: impl IntoIterator<Item = (u32, BigradedChar)>) -> Self {
        let mut out = OscillatorStalk::default();
        for (len, c) in parts {
            out.add(len, &c);
        }
        out
    }

    fn add(&mut self, len: u32, c: &BigradedChar) {
        let entry = self.by_length.entry(len).or_default();
        *entry += c;
        if entry.is_zero() {
            self.by_length.remove(&len);
        }
    }

    pub fn by_length(&self) -> &BTreeMap<u32, BigradedChar> {
        &self.by_length
    }

    /// Total character, forgetting the normalization.
    pub fn character(&self) -> BigradedChar {
        let mut out = HalfLaurent::zero();
        for c in self.by_length.values() {
            out += c;
        }
        out
    }

    /// Grothendieck-group class with normalizations applied:
    /// `sum_l (-1)^l q^{l/2} char_l`.
    pub fn signed_class(&self) -> HalfLaurent {
        let mut out = HalfLaurent::zero();
        for (&l, c) in &self.by_length {
            let sign = if l % 2 == 0 { 1 } else { -1 };
            out += &c.shift(l as i32).scale(sign);
        }
        out
    }

    /// Stalk at the disjoint union of two configurations.
    pub fn product(&self, other: &OscillatorStalk) -> OscillatorStalk {
        let mut out = OscillatorStalk::default();
        for (&l1, c1) in &self.by_length {
            for (&l2, c2) in &other.by_length {
                out.add(l1 + l2, &(c1 * c2));
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let parts: Vec<_> = self
            .by_length
            .iter()
            .map(|(&l, c)| {
                json!({"length": l, "shift": l, "twist": crate::poly::format_half(l as i32),
                       "character": c.to_json()})
            })
            .collect();
        json!({"character": self.character().to_json(), "by_length": parts,
               "signed_class": self.signed_class().to_json()})
    }
}

/// Stalk of `F_theta` at `theta . x` for a single point: the sum over Kostant
/// partitions `K` of `tensor_beta Lambda^{n_beta} V`.
fn single_point_stalk(d: &RootDatum, theta: &Coweight) -> Result<OscillatorStalk> {
    let mut out = OscillatorStalk::default();
    for k in enumerate_kostant(d, theta)? {
        let mut c = HalfLaurent::one();
        for &n in k.parts().values() {
            let pattern = CollisionPattern::new(vec![n])?;
            c = &c * &plo_stalk_char(&pattern).character;
        }
        out.add(k.length(), &c);
    }
    Ok(out)
}

/// Stalk of `F_theta` at the divisor `sum_k theta_k x_k`, computed through
/// factorization over the distinct points `x_k`.
pub fn oscillator_stalk_char(
    d: &RootDatum,
    config: &[(Coweight, String)],
) -> Result<OscillatorStalk> {
    let mut labels = BTreeSet::new();
    for (theta, label) in config {
        d.check_positive(theta)?;
        if theta.is_zero() {
            return validation(format!("point {label} carries the zero coweight"));
        }
        if !labels.insert(label) {
            return validation(format!("point label {label} repeated"));
        }
    }
    config.iter().try_fold(OscillatorStalk::unit(), |acc, (theta, _)| {
        Ok(acc.product(&single_point_stalk(d, theta)?))
    })
}

/// Greedy highest-weight peeling of a character into sl2-irreducibles.
pub fn decompose_sl2(c: &BigradedChar) -> Result<Sl2Decomposition> {
    check_character(c)?;
    let mut rest = c.clone();
    let mut multiplicities = BTreeMap::new();
    while let Some(top) = rest.max_exp() {
        let m = rest.coeff(top);
        // palindromic and non-negative, so the top exponent is >= 0
        let h = top as u32;
        rest = &rest - &irreducible_char(h).scale(m);
        if !rest.is_nonnegative() {
            return Err(Error::NotACharacter(format!(
                "{c} has no sl2 string structure at highest weight {h}"
            )));
        }
        multiplicities.insert(h, m as u64);
    }
    Ok(Sl2Decomposition { multiplicities })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::{build_root_datum, GroupType};
    use proptest::prelude::*;

    fn datum(s: &str) -> RootDatum {
        build_root_datum(s.parse::<GroupType>().unwrap())
    }

    /// Brute-force exterior power: expand the character into a list of weights
    /// and sum over all m-element subsets.
    fn exterior_brute(c: &BigradedChar, m: usize) -> BigradedChar {
        let weights: Vec<i32> =
            c.terms().flat_map(|(e, k)| std::iter::repeat_n(e, k as usize)).collect();
        let mut out = HalfLaurent::zero();
        fn rec(w: &[i32], start: usize, left: usize, sum: i32, out: &mut HalfLaurent) {
            if left == 0 {
                out.add_term(sum, 1);
                return;
            }
            for i in start..w.len() {
                rec(w, i + 1, left - 1, sum + w[i], out);
            }
        }
        rec(&weights, 0, m, 0, &mut out);
        out
    }

    #[test]
    fn standard_character() {
        let v = standard_char();
        assert_eq!(v, HalfLaurent::from_terms([(1, 1), (-1, 1)]));
        assert_eq!(v.dimension(), 2);
        assert!(v.is_palindromic());
    }

    #[test]
    fn exterior_powers_of_standard() {
        let v = standard_char();
        assert_eq!(exterior_power_char(&v, 0).unwrap(), HalfLaurent::one());
        assert_eq!(exterior_power_char(&v, 1).unwrap(), v);
        assert_eq!(exterior_power_char(&v, 2).unwrap(), HalfLaurent::one());
        assert!(exterior_power_char(&v, 3).unwrap().is_zero());
        let total: i64 =
            (0..=4).map(|m| exterior_power_char(&v, m).unwrap().dimension()).sum();
        assert_eq!(total, 4);
    }

    #[test]
    fn exterior_power_rejects_non_characters() {
        let bad = HalfLaurent::from_terms([(1, 1)]);
        assert!(matches!(exterior_power_char(&bad, 1), Err(Error::NotACharacter(_))));
        let neg = HalfLaurent::from_terms([(0, -1)]);
        assert!(exterior_power_char(&neg, 1).is_err());
    }

    #[test]
    fn exterior_power_matches_brute_force() {
        let samples = [
            standard_char(),
            &standard_char() * &standard_char(),
            irreducible_char(3),
            &irreducible_char(2) + &irreducible_char(0).scale(2),
            irreducible_char(4),
        ];
        for c in &samples {
            for m in 0..=7u32 {
                assert_eq!(exterior_power_char(c, m).unwrap(), exterior_brute(c, m as usize));
            }
        }
    }

    #[test]
    fn plo_patterns() {
        let n = 4;
        let generic = CollisionPattern::new(vec![1; n]).unwrap();
        let s = plo_stalk_char(&generic);
        assert_eq!(s.character, standard_char().pow(n as u32));
        assert_eq!(s.character.dimension(), 16);
        assert_eq!((s.shift, s.twist_halves), (4, 4));
        let two = plo_stalk_char(&CollisionPattern::new(vec![2]).unwrap());
        assert_eq!(two.character, HalfLaurent::one());
        assert!(plo_stalk_char(&CollisionPattern::new(vec![3]).unwrap()).character.is_zero());
        assert!(CollisionPattern::new(vec![1, 0]).is_err());
    }

    #[test]
    fn plo_one_signed_class() {
        // P_1 = Q[1](1) + Q[1](0) in the Grothendieck group of a point
        let p1 = plo_stalk_char(&CollisionPattern::new(vec![1]).unwrap());
        assert_eq!(p1.signed_class(), HalfLaurent::from_terms([(2, -1), (0, -1)]));
    }

    #[test]
    fn collision_patterns_enumerated() {
        let counts: Vec<usize> = (0..8).map(|n| CollisionPattern::all_of_degree(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
    }

    #[test]
    fn oscillator_examples() {
        let a1 = datum("A1");
        let single = |d: &RootDatum, v: &[i64]| {
            oscillator_stalk_char(d, &[(Coweight(v.to_vec()), "x".into())]).unwrap()
        };
        assert_eq!(single(&a1, &[1]).character(), standard_char());
        assert!(single(&a1, &[3]).character().is_zero());
        // A2, (1,1): {a1+a2} gives V, {a1, a2} gives V (x) V
        let s = single(&datum("A2"), &[1, 1]);
        assert_eq!(s.by_length()[&1], standard_char());
        assert_eq!(s.by_length()[&2], &standard_char() * &standard_char());
        assert_eq!(s.character().dimension(), 6);
    }

    #[test]
    fn oscillator_rejects_bad_configs() {
        let d = datum("A2");
        let c = |v: &[i64], l: &str| (Coweight(v.to_vec()), l.to_string());
        assert!(oscillator_stalk_char(&d, &[c(&[0, 0], "x")]).is_err());
        assert!(oscillator_stalk_char(&d, &[c(&[-1, 1], "x")]).is_err());
        assert!(oscillator_stalk_char(&d, &[c(&[1, 0], "x"), c(&[0, 1], "x")]).is_err());
        assert_eq!(oscillator_stalk_char(&d, &[]).unwrap(), OscillatorStalk::unit());
    }

    #[test]
    fn decompositions() {
        let std = decompose_sl2(&standard_char()).unwrap();
        assert!(std.is_standard());
        let triv = decompose_sl2(&HalfLaurent::one()).unwrap();
        assert_eq!(triv.multiplicities(), &BTreeMap::from([(0, 1)]));
        let sq = decompose_sl2(&(&standard_char() * &standard_char())).unwrap();
        assert_eq!(sq.multiplicities(), &BTreeMap::from([(0, 1), (2, 1)]));
        assert!(decompose_sl2(&HalfLaurent::zero()).unwrap().is_empty());
    }

    #[test]
    fn decomposition_errors() {
        let not_pal = HalfLaurent::from_terms([(2, 1), (0, 1)]);
        assert!(matches!(decompose_sl2(&not_pal), Err(Error::NotACharacter(_))));
        let gap = HalfLaurent::from_terms([(2, 1), (-2, 1)]);
        assert!(matches!(decompose_sl2(&gap), Err(Error::NotACharacter(_))));
        let neg = HalfLaurent::from_terms([(0, -1)]);
        assert!(decompose_sl2(&neg).is_err());
    }

    proptest! {
        #[test]
        fn decompose_recompose(mults in proptest::collection::btree_map(0u32..8, 1u64..4, 0..5)) {
            let dec = Sl2Decomposition::new(mults);
            let c = dec.character();
            prop_assert!(c.is_palindromic());
            prop_assert_eq!(decompose_sl2(&c).unwrap(), dec);
        }

        #[test]
        fn clebsch_gordan(a in 0u32..6, b in 0u32..6) {
            let prod = &irreducible_char(a) * &irreducible_char(b);
            let dec = decompose_sl2(&prod).unwrap();
            let (lo, hi) = (a.min(b), a.max(b));
            let want: BTreeMap<u32, u64> = (0..=lo).map(|k| (hi - lo + 2 * k, 1)).collect();
            prop_assert_eq!(dec.multiplicities(), &want);
        }
    }
}
