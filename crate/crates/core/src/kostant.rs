//! Kostant partitions: decompositions of a positive coweight into positive coroots.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use once_cell::sync::Lazy;
use parking_lot::Mutex;
use serde_json::json;

use crate::error::{validation, Result};
use crate::root_datum::{Coweight, RootDatum};

/// A multiset of positive coroots, stored as coroot index -> multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KostantPartition {
    theta: Coweight,
    parts: BTreeMap<usize, u32>,
}

impl KostantPartition {
    /// Builds a partition and checks that the parts sum to `theta`.
    pub fn new(d: &RootDatum, theta: Coweight, parts: BTreeMap<usize, u32>) -> Result<Self> {
        d.check_positive(&theta)?;
        let mut sum = Coweight::zero(d.rank());
        for (&idx, &n) in &parts {
            let Some(beta) = d.positive_coroots().get(idx) else {
                return validation(format!("no positive coroot with index {idx}"));
            };
            if n == 0 {
                return validation("zero multiplicity in Kostant partition");
            }
            sum = sum.add(&beta.scale(n as i64));
        }
        if sum != theta {
            return validation(format!("parts sum to {sum}, not {theta}"));
        }
        Ok(KostantPartition { theta, parts })
    }

    pub fn theta(&self) -> &Coweight {
        &self.theta
    }

    pub fn parts(&self) -> &BTreeMap<usize, u32> {
        &self.parts
    }

    /// Total number of coroots counted with multiplicity.
    pub fn length(&self) -> u32 {
        self.parts.values().sum()
    }

    pub fn to_json(&self, d: &RootDatum) -> serde_json::Value {
        let parts: Vec<_> = self
            .parts
            .iter()
            .map(|(&i, &n)| json!({"coroot": d.positive_coroots()[i].0, "mult": n}))
            .collect();
        json!({"parts": parts, "length": self.length()})
    }
}

impl fmt::Display for KostantPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (i, n)) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "b{}:{n}", i + 1)?;
        }
        write!(f, "}}")
    }
}

pub fn partition_length(k: &KostantPartition) -> u32 {
    k.length()
}

/// Largest `m` with `m * beta <= rest` coordinatewise.
fn max_multiple(beta: &Coweight, rest: &[i64]) -> i64 {
    beta.0
        .iter()
        .zip(rest)
        .filter(|(b, _)| **b > 0)
        .map(|(b, r)| r / b)
        .min()
        .unwrap_or(0)
}

/// All Kostant partitions of `theta`, by recursive descent over the coroots in
/// canonical order with multiplicities taken from high to low.
pub fn enumerate_kostant(d: &RootDatum, theta: &Coweight) -> Result<Vec<KostantPartition>> {
    d.check_positive(theta)?;
    let mut out = Vec::new();
    let mut current = BTreeMap::new();
    descend(d, 0, theta.0.clone(), &mut current, &mut |parts| {
        out.push(KostantPartition { theta: theta.clone(), parts: parts.clone() })
    });
    Ok(out)
}

fn descend(
    d: &RootDatum,
    k: usize,
    rest: Vec<i64>,
    current: &mut BTreeMap<usize, u32>,
    emit: &mut dyn FnMut(&BTreeMap<usize, u32>),
) {
    if rest.iter().all(|&r| r == 0) {
        emit(current);
        return;
    }
    let coroots = d.positive_coroots();
    if k == coroots.len() {
        return;
    }
    let beta = &coroots[k];
    for m in (0..=max_multiple(beta, &rest)).rev() {
        let next: Vec<i64> = rest.iter().zip(&beta.0).map(|(r, b)| r - m * b).collect();
        if m > 0 {
            current.insert(k, m as u32);
        }
        descend(d, k + 1, next, current, emit);
        current.remove(&k);
    }
}

type MemoKey = (Vec<Vec<i64>>, Vec<i64>);

static COUNT_MEMO: Lazy<Mutex<HashMap<MemoKey, u64>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// Kostant partition function, computed by peeling off the last coroot.
///
/// Results are memoized per (Cartan matrix, theta); concurrent callers may
/// compute the same entry twice, which is harmless.
pub fn kostant_count(d: &RootDatum, theta: &Coweight) -> Result<u64> {
    d.check_positive(theta)?;
    let key = (d.cartan().to_vec(), theta.0.clone());
    if let Some(&n) = COUNT_MEMO.lock().get(&key) {
        return Ok(n);
    }
    let mut local = HashMap::new();
    let n = count_rec(d.positive_coroots(), d.positive_coroots().len(), &theta.0, &mut local);
    COUNT_MEMO.lock().insert(key, n);
    Ok(n)
}

/// Partitions of `rest` using only the first `k` coroots.
fn count_rec(
    coroots: &[Coweight],
    k: usize,
    rest: &[i64],
    memo: &mut HashMap<(usize, Vec<i64>), u64>,
) -> u64 {
    if rest.iter().all(|&r| r == 0) {
        return 1;
    }
    if k == 0 {
        return 0;
    }
    if let Some(&n) = memo.get(&(k, rest.to_vec())) {
        return n;
    }
    let beta = &coroots[k - 1];
    let mut total = 0;
    let mut cur = rest.to_vec();
    for _ in 0..=max_multiple(beta, rest) {
        total += count_rec(coroots, k - 1, &cur, memo);
        for (c, b) in cur.iter_mut().zip(&beta.0) {
            *c -= b;
        }
    }
    memo.insert((k, rest.to_vec()), total);
    total
}

/// All non-negative coweights of the given rank with length between `min_len`
/// and `max_len`, in height-then-lex order.
pub fn coweights_up_to(rank: usize, min_len: u64, max_len: u64) -> Vec<Coweight> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; rank];
    fn rec(i: usize, budget: i64, cur: &mut Vec<i64>, out: &mut Vec<Coweight>) {
        if i == cur.len() {
            out.push(Coweight(cur.clone()));
            return;
        }
        for c in 0..=budget {
            cur[i] = c;
            rec(i + 1, budget - c, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, max_len as i64, &mut cur, &mut out);
    out.retain(|c| c.height() as u64 >= min_len);
    out.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.0.cmp(&b.0)));
    out
}
