//! Simple root data of simply-connected simple groups.
//!
//! Conventions:
//!
//! * Dynkin nodes follow Bourbaki numbering (1-based in user-facing text,
//!   0-based in code).
//! * `cartan[i][j] = <coroot_i, root_j>`, so the simple reflection `s_i` acts on
//!   roots by `b -> b - (sum_j cartan[i][j] b_j) e_i` and on coroots through the
//!   transpose.
//! * Positive roots and coroots are listed by height, ties broken lexicographically
//!   on the coordinate vector.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{validation, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            "F" | "f" => Ok(Family::F),
            "G" | "g" => Ok(Family::G),
            other => validation(format!("unknown Lie type family {other:?}")),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A simple Lie type such as `A2` or `G2`. Only admissible pairs can be constructed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupType {
    family: Family,
    rank: usize,
}

impl GroupType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(GroupType { family, rank })
        } else {
            validation(format!("{family}{rank} is not an admissible simple type"))
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Type of the Langlands dual group.
    pub fn dual(&self) -> GroupType {
        let family = match self.family {
            Family::B => Family::C,
            Family::C => Family::B,
            f => f,
        };
        GroupType { family, rank: self.rank }
    }

    /// Number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Bourbaki Cartan matrix.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
            a[i][j] = aij;
            a[j][i] = aji;
        };
        match self.family {
            Family::A => {
                for i in 0..n.saturating_sub(1) {
                    link(i, i + 1, -1, -1);
                }
            }
            Family::B | Family::C => {
                for i in 0..n - 2 {
                    link(i, i + 1, -1, -1);
                }
                // B: last node short; C: last node long.
                if self.family == Family::B {
                    link(n - 2, n - 1, -1, -2);
                } else {
                    link(n - 2, n - 1, -2, -1);
                }
            }
            Family::D => {
                for i in 0..n - 2 {
                    link(i, i + 1, -1, -1);
                }
                link(n - 3, n - 1, -1, -1);
            }
            Family::E => {
                link(0, 2, -1, -1);
                link(1, 3, -1, -1);
                for i in 2..n - 1 {
                    link(i, i + 1, -1, -1);
                }
            }
            Family::F => {
                link(0, 1, -1, -1);
                link(1, 2, -1, -2);
                link(2, 3, -1, -1);
            }
            Family::G => {
                link(0, 1, -3, -1);
            }
        }
        a
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for GroupType {
    type Err = Error;

    /// Parses strings like `"A2"` or `"g2"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family: Family = chars
            .next()
            .ok_or_else(|| Error::Validation("empty type".into()))?
            .to_string()
            .parse()?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Validation(format!("bad rank in {s:?}")))?;
        GroupType::new(family, rank)
    }
}

/// Integer vector in the simple-coroot (or simple-root) basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coweight(pub Vec<i64>);

impl Coweight {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Coweight(coeffs)
    }

    pub fn zero(rank: usize) -> Self {
        Coweight(vec![0; rank])
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Coweight(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Coweight {
        Coweight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> Coweight {
        self.scale(-1)
    }

    /// Parses a comma-separated list such as `"1,0,2"`.
    pub fn parse(s: &str) -> Result<Coweight> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad coordinate {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Coweight)
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

fn check_rank(a: &Coweight, b: &Coweight) -> Result<()> {
    if a.rank() != b.rank() {
        return validation(format!("rank mismatch: {} vs {}", a.rank(), b.rank()));
    }
    Ok(())
}

/// Dominance order: `a <= b` iff `b - a` has non-negative coordinates.
pub fn leq(a: &Coweight, b: &Coweight) -> Result<bool> {
    check_rank(a, b)?;
    Ok(a.0.iter().zip(&b.0).all(|(x, y)| x <= y))
}

/// Length `|theta| = sum of coordinates` of a positive coweight.
pub fn length(theta: &Coweight) -> Result<u64> {
    if !theta.is_nonnegative() {
        return validation(format!("length of non-positive coweight {theta}"));
    }
    Ok(theta.height() as u64)
}

/// Cartan data together with its enumerated positive roots and coroots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    group_type: GroupType,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Coweight>,
    positive_coroots: Vec<Coweight>,
}

pub fn build_root_datum(t: GroupType) -> RootDatum {
    RootDatum::from_cartan(t, t.cartan_matrix())
        .expect("built-in Cartan matrices are valid")
}

/// Dual datum: transposed Cartan matrix, roots and coroots exchanged.
///
/// For `G2` and `F4` the transposed matrix is the Bourbaki matrix of the same type
/// with the node numbering reversed; it is kept as is so that the dual's roots are
/// literally the original coroots.
pub fn langlands_dual(d: &RootDatum) -> RootDatum {
    RootDatum {
        group_type: d.group_type.dual(),
        cartan: transpose(&d.cartan),
        positive_roots: d.positive_coroots.clone(),
        positive_coroots: d.positive_roots.clone(),
    }
}

fn transpose(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i]).collect()).collect()
}

/// Height first; within a height, `(1,0)` precedes `(0,1)`.
fn height_lex(a: &Coweight, b: &Coweight) -> std::cmp::Ordering {
    a.height().cmp(&b.height()).then_with(|| b.0.cmp(&a.0))
}

/// Positive roots of the system with Cartan matrix `a`, obtained by closing the
/// simple roots under simple reflections and keeping the positive ones.
///
/// Returns `None` once more than `limit` roots (positive and negative) turn up,
/// which happens for non-finite Cartan matrices.
pub(crate) fn enumerate_positive_roots(a: &[Vec<i64>], limit: usize) -> Option<Vec<Coweight>> {
    let n = a.len();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..n {
        let e = Coweight::simple(n, i).0;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(b) = queue.pop_front() {
        for i in 0..n {
            let s = reflect_root(a, i, &b);
            if seen.insert(s.clone()) {
                if seen.len() > limit {
                    return None;
                }
                queue.push_back(s);
            }
        }
    }
    let mut pos: Vec<Coweight> = seen
        .into_iter()
        .filter(|r| r.iter().all(|&c| c >= 0))
        .map(Coweight)
        .collect();
    pos.sort_by(height_lex);
    Some(pos)
}

fn reflect_root(a: &[Vec<i64>], i: usize, b: &[i64]) -> Vec<i64> {
    let pairing: i64 = a[i].iter().zip(b).map(|(x, y)| x * y).sum();
    let mut out = b.to_vec();
    out[i] -= pairing;
    out
}

impl RootDatum {
    /// Builds a datum from an explicit Cartan matrix, which must be a (possibly
    /// relabeled) Cartan matrix of type `t`.
    pub fn from_cartan(t: GroupType, cartan: Vec<Vec<i64>>) -> Result<Self> {
        let n = t.rank();
        if cartan.len() != n || cartan.iter().any(|r| r.len() != n) {
            return validation(format!("Cartan matrix of {t} must be {n}x{n}"));
        }
        for i in 0..n {
            for j in 0..n {
                let c = cartan[i][j];
                if i == j && c != 2 || i != j && (c > 0 || (c == 0) != (cartan[j][i] == 0)) {
                    return validation(format!("entry ({i},{j}) = {c} is not a Cartan entry"));
                }
            }
        }
        let count = t.positive_root_count();
        let wrong_type = || Error::Validation(format!("Cartan matrix does not have type {t}"));
        let positive_roots =
            enumerate_positive_roots(&cartan, 2 * count).ok_or_else(wrong_type)?;
        let positive_coroots =
            enumerate_positive_roots(&transpose(&cartan), 2 * count).ok_or_else(wrong_type)?;
        if positive_roots.len() != count || positive_coroots.len() != count {
            return Err(wrong_type());
        }
        Ok(RootDatum { group_type: t, cartan, positive_roots, positive_coroots })
    }

    pub fn group_type(&self) -> GroupType {
        self.group_type
    }

    pub fn rank(&self) -> usize {
        self.group_type.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Coweight] {
        &self.positive_roots
    }

    pub fn positive_coroots(&self) -> &[Coweight] {
        &self.positive_coroots
    }

    /// Index of `theta` in the canonical coroot list, if it is a positive coroot.
    pub fn coroot_index(&self, theta: &Coweight) -> Option<usize> {
        self.positive_coroots
            .binary_search_by(|c| height_lex(c, theta))
            .ok()
    }

    pub fn is_coroot(&self, theta: &Coweight) -> bool {
        self.coroot_index(theta).is_some()
    }

    pub fn root_index(&self, r: &Coweight) -> Option<usize> {
        self.positive_roots.binary_search_by(|c| height_lex(c, r)).ok()
    }

    /// Simple reflection `s_i` applied to a coroot (coordinates in the coroot basis).
    pub fn reflect_coroot(&self, i: usize, c: &Coweight) -> Coweight {
        Coweight(reflect_root(&transpose(&self.cartan), i, &c.0))
    }

    /// Simple reflection `s_i` applied to a root (coordinates in the root basis).
    pub fn reflect_root(&self, i: usize, r: &Coweight) -> Coweight {
        Coweight(reflect_root(&self.cartan, i, &r.0))
    }

    /// Checks that `theta` has the right rank and non-negative coordinates.
    pub fn check_positive(&self, theta: &Coweight) -> Result<()> {
        if theta.rank() != self.rank() {
            return validation(format!(
                "coweight {theta} has rank {}, expected {}",
                theta.rank(),
                self.rank()
            ));
        }
        if !theta.is_nonnegative() {
            return validation(format!("coweight {theta} has a negative coordinate"));
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(RootDatumJson::from(self)).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let j: RootDatumJson = serde_json::from_value(v.clone())
            .map_err(|e| Error::Parse(format!("root datum json: {e}")))?;
        let t = GroupType::new(j.family, j.rank)?;
        let d = RootDatum::from_cartan(t, j.cartan)?;
        if d.positive_coroots.iter().map(|c| &c.0).ne(j.positive_coroots.iter()) {
            return validation("positive_coroots do not match the Cartan matrix");
        }
        Ok(d)
    }
}

#[derive(Serialize, Deserialize)]
struct RootDatumJson {
    family: Family,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    positive_coroots: Vec<Vec<i64>>,
}

impl From<&RootDatum> for RootDatumJson {
    fn from(d: &RootDatum) -> Self {
        RootDatumJson {
            family: d.group_type.family(),
            rank: d.rank(),
            cartan: d.cartan.clone(),
            positive_coroots: d.positive_coroots.iter().map(|c| c.0.clone()).collect(),
        }
    }
}

/// Every admissible type of rank at most `max_rank`, plus the exceptional types
/// when `max_rank` reaches them.
pub fn admissible_types(max_rank: usize) -> Vec<GroupType> {
    let mut out = Vec::new();
    for family in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
        for rank in 1..=max_rank {
            if let Ok(t) = GroupType::new(family, rank) {
                out.push(t);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> GroupType {
        s.parse().unwrap()
    }

    fn coroots(s: &str) -> Vec<Vec<i64>> {
        build_root_datum(ty(s)).positive_coroots().iter().map(|c| c.0.clone()).collect()
    }

    #[test]
    fn small_coroot_lists() {
        assert_eq!(coroots("A1"), vec![vec![1]]);
        assert_eq!(coroots("A2"), vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(
            coroots("G2"),
            vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        // B2: alpha_2 is short, so its coroot is long.
        assert_eq!(coroots("B2"), vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 1]]);
        let b2 = build_root_datum(ty("B2"));
        let roots: Vec<_> = b2.positive_roots().iter().map(|c| c.0.clone()).collect();
        assert_eq!(roots, vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]]);
    }

    #[test]
    fn classical_counts() {
        for t in admissible_types(8) {
            let d = build_root_datum(t);
            assert_eq!(d.positive_coroots().len(), t.positive_root_count(), "{t}");
            assert_eq!(d.positive_roots().len(), t.positive_root_count(), "{t}");
        }
    }

    #[test]
    fn inadmissible_types() {
        assert!(GroupType::new(Family::B, 1).is_err());
        assert!(GroupType::new(Family::D, 2).is_err());
        assert!(GroupType::new(Family::E, 9).is_err());
        assert!(GroupType::new(Family::G, 3).is_err());
        assert!(GroupType::new(Family::A, 0).is_err());
        assert!("H2".parse::<GroupType>().is_err());
    }

    #[test]
    fn dual_types() {
        let dual = |s: &str| langlands_dual(&build_root_datum(ty(s))).group_type();
        assert_eq!(dual("A2"), ty("A2"));
        assert_eq!(dual("B2"), ty("C2"));
        assert_eq!(dual("C3"), ty("B3"));
        assert_eq!(dual("G2"), ty("G2"));
        // B_n and C_n Cartan matrices are transposes in Bourbaki numbering.
        let b3 = build_root_datum(ty("B3"));
        assert_eq!(langlands_dual(&b3), build_root_datum(ty("C3")));
    }

    #[test]
    fn dual_is_involution() {
        for t in admissible_types(8) {
            let d = build_root_datum(t);
            assert_eq!(langlands_dual(&langlands_dual(&d)), d);
        }
    }

    #[test]
    fn g2_dual_is_relabeled_g2() {
        let g2 = build_root_datum(ty("G2"));
        let dual = langlands_dual(&g2);
        let mut relabeled = dual.cartan().to_vec();
        relabeled.reverse();
        for row in relabeled.iter_mut() {
            row.reverse();
        }
        assert_eq!(relabeled, g2.cartan());
    }

    #[test]
    fn reflections_permute_coroots() {
        for t in admissible_types(4) {
            let d = build_root_datum(t);
            for c in d.positive_coroots() {
                for i in 0..d.rank() {
                    let s = d.reflect_coroot(i, c);
                    assert!(d.is_coroot(&s) || d.is_coroot(&s.neg()), "{t}: s{i}{c} = {s}");
                    assert_eq!(&d.reflect_coroot(i, &s), c);
                }
            }
        }
    }

    #[test]
    fn enumeration_idempotent() {
        for t in admissible_types(4) {
            let d = build_root_datum(t);
            let again = RootDatum::from_cartan(t, d.cartan().to_vec()).unwrap();
            assert_eq!(again, d);
        }
    }

    #[test]
    fn leq_examples() {
        let c = |v: &[i64]| Coweight(v.to_vec());
        assert!(leq(&c(&[0, 0]), &c(&[1, 1])).unwrap());
        assert!(!leq(&c(&[2, 0]), &c(&[1, 1])).unwrap());
        assert!(leq(&c(&[1, 1]), &c(&[1, 1])).unwrap());
        assert!(leq(&c(&[1]), &c(&[1, 1])).is_err());
    }

    #[test]
    fn leq_is_partial_order() {
        for rank in 1..=3usize {
            let all: Vec<Coweight> = (0..4i64.pow(rank as u32))
                .map(|mut k| {
                    Coweight(
                        (0..rank)
                            .map(|_| {
                                let c = k % 4;
                                k /= 4;
                                c
                            })
                            .collect(),
                    )
                })
                .collect();
            for a in &all {
                assert!(leq(a, a).unwrap());
                for b in &all {
                    let ab = leq(a, b).unwrap();
                    if ab && leq(b, a).unwrap() {
                        assert_eq!(a, b);
                    }
                    if !ab {
                        continue;
                    }
                    for c in &all {
                        if leq(b, c).unwrap() {
                            assert!(leq(a, c).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn length_examples() {
        assert_eq!(length(&Coweight(vec![1, 1])).unwrap(), 2);
        assert_eq!(length(&Coweight(vec![0, 0])).unwrap(), 0);
        assert_eq!(length(&Coweight(vec![3, 0, 2])).unwrap(), 5);
        assert!(length(&Coweight(vec![1, -1])).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let d = build_root_datum(ty("G2"));
        let v = d.to_json();
        assert_eq!(v["family"], "G");
        assert_eq!(v["positive_coroots"][5], serde_json::json!([2, 3]));
        assert_eq!(RootDatum::from_json(&v).unwrap(), d);
        let dual = langlands_dual(&d);
        assert_eq!(RootDatum::from_json(&dual.to_json()).unwrap(), dual);
    }

    #[test]
    fn rejects_bad_cartan() {
        let t = ty("A2");
        assert!(RootDatum::from_cartan(t, vec![vec![2, 1], vec![-1, 2]]).is_err());
        assert!(RootDatum::from_cartan(t, vec![vec![2, -2], vec![-2, 2]]).is_err());
    }
}
