//! Chevalley structure constants for the positive nilpotent subalgebra.
//!
//! Signs are fixed by extraspecial pairs: for every non-simple positive root
//! `xi`, the pair `(a, b)` with `a + b = xi` and `a` minimal in the canonical root
//! order gets `N_{a,b} = +(p + 1)`. All other constants follow from the standard
//! relations among Chevalley constants (normalized so that
//! `N_{-r,-s} = -N_{r,s}`):
//!
//! * `N_{r1,r2} / (r3,r3) = N_{r2,r3} / (r1,r1) = N_{r3,r1} / (r2,r2)` when
//!   `r1 + r2 + r3 = 0`;
//! * `N_{r1,r2} N_{r3,r4} / (r1+r2)^2 + N_{r2,r3} N_{r1,r4} / (r2+r3)^2 +
//!   N_{r3,r1} N_{r2,r4} / (r3+r1)^2 = 0` when `r1 + r2 + r3 + r4 = 0` and no
//!   two of them are opposite.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::root_datum::{Coweight, RootDatum};

type Q = Ratio<i64>;

/// Root data needed to compute the constants: positive roots in canonical order
/// and the invariant form.
pub(crate) struct RootTable {
    pub roots: Vec<Coweight>,
    index: HashMap<Vec<i64>, usize>,
    all: HashSet<Vec<i64>>,
    /// `(alpha_i, alpha_j)`, scaled to integers.
    form: Vec<Vec<i64>>,
}

impl RootTable {
    pub fn new(d: &RootDatum) -> Self {
        let roots = d.positive_roots().to_vec();
        let index = roots.iter().enumerate().map(|(i, r)| (r.0.clone(), i)).collect();
        let all = roots.iter().flat_map(|r| [r.0.clone(), r.neg().0]).collect();
        RootTable { roots, index, all, form: invariant_form(d.cartan()) }
    }

    pub fn index_of(&self, r: &Coweight) -> Option<usize> {
        self.index.get(&r.0).copied()
    }

    fn is_root(&self, r: &Coweight) -> bool {
        self.all.contains(&r.0)
    }

    pub fn inner(&self, a: &Coweight, b: &Coweight) -> i64 {
        let n = self.form.len();
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += a.0[i] * self.form[i][j] * b.0[j];
            }
        }
        s
    }

    fn norm(&self, a: &Coweight) -> Q {
        Q::from_integer(self.inner(a, a))
    }

    /// Largest `p` with `s - p r` a root.
    pub fn string_p(&self, r: &Coweight, s: &Coweight) -> i64 {
        let mut p = 0;
        let mut cur = s.sub(r);
        while self.is_root(&cur) {
            p += 1;
            cur = cur.sub(r);
        }
        p
    }
}

/// Symmetrized form `(alpha_i, alpha_j) = d_i a_ij` with integer `d_i`, for a
/// connected Cartan matrix with `a_ij = <coroot_i, root_j>`.
fn invariant_form(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut d: Vec<Option<Q>> = vec![None; n];
    d[0] = Some(Q::one());
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        let di = d[i].expect("visited");
        for j in 0..n {
            if a[i][j] != 0 && d[j].is_none() {
                // d_i a_ij = d_j a_ji
                d[j] = Some(di * Q::from_integer(a[i][j]) / Q::from_integer(a[j][i]));
                stack.push(j);
            }
        }
    }
    let d: Vec<Q> = d.into_iter().map(|x| x.expect("Dynkin diagram is connected")).collect();
    let lcm = d.iter().fold(1i64, |acc, x| acc.lcm(x.denom()));
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (d[i] * Q::from_integer(lcm * a[i][j])).to_integer())
                .collect()
        })
        .collect()
}

/// `N_{a,b}` for positive root indices `a != b` with `a + b` a root.
pub(crate) fn structure_constants(table: &RootTable) -> BTreeMap<(usize, usize), i64> {
    let roots = &table.roots;
    let mut n_pos: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    for (xi_idx, xi) in roots.iter().enumerate() {
        // summands (a, b), a < b, in canonical order; the first is extraspecial
        let pairs: Vec<(usize, usize)> = (0..xi_idx)
            .filter_map(|a| {
                let b = table.index_of(&xi.sub(&roots[a]))?;
                (a < b).then_some((a, b))
            })
            .collect();
        let Some(&(g, dl)) = pairs.first() else {
            continue;
        };
        let extraspecial = table.string_p(&roots[g], &roots[dl]) + 1;
        n_pos.insert((g, dl), extraspecial);
        n_pos.insert((dl, g), -extraspecial);
        for &(a, b) in &pairs[1..] {
            let value = derive_constant(table, &n_pos, a, b, g, dl);
            assert!(value.is_integer(), "non-integral structure constant");
            let value = value.to_integer();
            n_pos.insert((a, b), value);
            n_pos.insert((b, a), -value);
        }
    }
    n_pos
}

/// Solves the four-root relation with `(r1, r2, r3, r4) = (a, b, -g, -dl)` for
/// `N_{a,b}`, where `(g, dl)` is the extraspecial pair of `a + b`.
fn derive_constant(
    table: &RootTable,
    n_pos: &BTreeMap<(usize, usize), i64>,
    a: usize,
    b: usize,
    g: usize,
    dl: usize,
) -> Q {
    let roots = &table.roots;
    let (ra, rb, rg, rd) = (&roots[a], &roots[b], &roots[g], &roots[dl]);
    let xi = ra.add(rb);
    let n = |r: &Coweight, s: &Coweight| general_constant(table, n_pos, r, s);
    let mut rest = Q::zero();
    // N_{b,-g} N_{a,-dl} / (b-g)^2
    let bg = rb.sub(rg);
    if table.is_root(&bg) {
        rest += n(rb, &rg.neg()) * n(ra, &rd.neg()) / table.norm(&bg);
    }
    // N_{-g,a} N_{b,-dl} / (a-g)^2
    let ag = ra.sub(rg);
    if table.is_root(&ag) {
        rest += n(&rg.neg(), ra) * n(rb, &rd.neg()) / table.norm(&ag);
    }
    // N_{a,b} N_{-g,-dl} / xi^2 + rest = 0 and N_{-g,-dl} = -N_{g,dl}
    rest * table.norm(&xi) / Q::from_integer(n_pos[&(g, dl)])
}

/// `N_{r,s}` for arbitrary roots with `r + s` a root, reduced to positive pairs
/// already computed.
fn general_constant(
    table: &RootTable,
    n_pos: &BTreeMap<(usize, usize), i64>,
    r: &Coweight,
    s: &Coweight,
) -> Q {
    let positive = |x: &Coweight| x.0.iter().all(|&c| c >= 0);
    let pos = |x: &Coweight, y: &Coweight| -> Q {
        let i = table.index_of(x).expect("positive root");
        let j = table.index_of(y).expect("positive root");
        Q::from_integer(*n_pos.get(&(i, j)).expect("constant of lower height is known"))
    };
    let t = r.add(s);
    match (positive(r), positive(s)) {
        (true, true) => pos(r, s),
        (false, false) => -pos(&r.neg(), &s.neg()),
        (false, true) => -general_constant(table, n_pos, s, r),
        (true, false) => {
            if positive(&t) {
                // N_{r,s} / (t,t) = N_{s,-t} / (r,r), both of s, -t negative
                -table.norm(&t) / table.norm(r) * pos(&s.neg(), &t)
            } else {
                // N_{r,s} / (t,t) = N_{-t,r} / (s,s), both of -t, r positive
                table.norm(&t) / table.norm(s) * pos(&t.neg(), r)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::{build_root_datum, GroupType};

    #[test]
    fn forms() {
        let form = |s: &str| invariant_form(build_root_datum(s.parse::<GroupType>().unwrap()).cartan());
        assert_eq!(form("A2"), vec![vec![2, -1], vec![-1, 2]]);
        // B2: alpha_1 long, alpha_2 short
        assert_eq!(form("B2"), vec![vec![4, -2], vec![-2, 2]]);
        // G2: alpha_1 short, alpha_2 long
        assert_eq!(form("G2"), vec![vec![2, -3], vec![-3, 6]]);
        let f4 = form("F4");
        assert_eq!((f4[0][0], f4[3][3]), (4, 2));
    }
}
