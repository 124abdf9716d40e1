//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeMap;

use oscillo_core::kostant::enumerate_kostant;
use oscillo_core::lefschetz::plo_stalk_char;
use oscillo_core::root_datum::{build_root_datum, Coweight, RootDatum};
use oscillo_core::{BigradedChar, CollisionPattern, HalfLaurent, OscillatorStalk};

pub fn datum(s: &str) -> RootDatum {
    build_root_datum(s.parse().expect("valid type"))
}

/// All ways to write `n` as an ordered sum of `k` non-negative integers.
pub fn compositions(n: u32, k: usize) -> Vec<Vec<u32>> {
    if k == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in compositions(n - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Stalk of the oscillator at `sum_k theta_k x_k` computed globally: for each
/// Kostant partition of the total coweight, sum over all ways of spreading every
/// part `n_beta` over the points (so that the point `x_k` receives `theta_k`), the
/// tensor product over `beta` of the stalk of `P_{n_beta}` at the resulting
/// divisor. No factorization is used.
pub fn global_stalk(d: &RootDatum, thetas: &[Coweight]) -> OscillatorStalk {
    let rank = d.rank();
    let total = thetas.iter().fold(Coweight::zero(rank), |a, t| a.add(t));
    let coroots = d.positive_coroots();
    let mut parts: Vec<(u32, BigradedChar)> = Vec::new();
    for k in enumerate_kostant(d, &total).expect("positive") {
        let entries: Vec<(usize, u32)> = k.parts().iter().map(|(&b, &n)| (b, n)).collect();
        let choices: Vec<Vec<Vec<u32>>> =
            entries.iter().map(|&(_, n)| compositions(n, thetas.len())).collect();
        let mut idx = vec![0usize; entries.len()];
        'choice: loop {
            // point loads for this choice
            let mut loads = vec![Coweight::zero(rank); thetas.len()];
            for (e, &(b, _)) in entries.iter().enumerate() {
                for (p, &m) in choices[e][idx[e]].iter().enumerate() {
                    loads[p] = loads[p].add(&coroots[b].scale(m as i64));
                }
            }
            if loads.as_slice() == thetas {
                let mut c = HalfLaurent::one();
                for (e, _) in entries.iter().enumerate() {
                    let blocks: Vec<u32> = choices[e][idx[e]].iter().copied().filter(|&m| m > 0).collect();
                    let pattern = CollisionPattern::new(blocks).expect("positive blocks");
                    c = &c * &plo_stalk_char(&pattern).character;
                }
                parts.push((k.length(), c));
            }
            // odometer
            let mut pos = 0;
            loop {
                if pos == idx.len() {
                    break 'choice;
                }
                idx[pos] += 1;
                if idx[pos] < choices[pos].len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
        }
    }
    OscillatorStalk::from_parts(parts)
}

/// Multisets of nonzero non-negative coweights of total length at most `max_len`,
/// each listed once (non-decreasing order).
pub fn configurations(rank: usize, max_len: u64) -> Vec<Vec<Coweight>> {
    let pieces = oscillo_core::kostant::coweights_up_to(rank, 1, max_len);
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(pieces: &[Coweight], start: usize, budget: u64, cur: &mut Vec<Coweight>, out: &mut Vec<Vec<Coweight>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for i in start..pieces.len() {
            let l = pieces[i].height() as u64;
            if l <= budget {
                cur.push(pieces[i].clone());
                go(pieces, i, budget - l, cur, out);
                cur.pop();
            }
        }
    }
    go(&pieces, 0, max_len, &mut cur, &mut out);
    out
}

/// Brute-force `dim Lambda^m` of a character: subsets of its weight multiset.
pub fn exterior_by_subsets(c: &BigradedChar, m: u32) -> BigradedChar {
    let weights: Vec<i32> = c.terms().flat_map(|(e, k)| std::iter::repeat_n(e, k as usize)).collect();
    let mut out = BTreeMap::new();
    for mask in 0u32..(1 << weights.len()) {
        if mask.count_ones() == m {
            let e: i32 = (0..weights.len()).filter(|i| mask >> i & 1 == 1).map(|i| weights[i]).sum();
            *out.entry(e).or_insert(0i64) += 1;
        }
    }
    HalfLaurent::from_terms(out)
}
