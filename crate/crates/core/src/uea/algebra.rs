use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;
use parking_lot::Mutex;
use serde_json::json;

use super::chevalley::{structure_constants, RootTable};
use super::{add_into, degree_of, Monomial, PbwElement, TensorElement};
use crate::error::{validation, Error, Result};
use crate::root_datum::{langlands_dual, Coweight, GroupType, RootDatum};

type Linear = Vec<(Monomial, BigInt)>;

/// Chevalley basis of the positive nilpotent subalgebra of the dual group, with
/// memoized PBW multiplication.
pub struct ChevalleyBasis {
    group: GroupType,
    dual: RootDatum,
    table: RootTable,
    constants: BTreeMap<(usize, usize), i64>,
    /// `sums[i][j]`: index of `root_i + root_j` if it is a root.
    sums: Vec<Vec<Option<usize>>>,
    heights: Vec<u64>,
    letter_memo: Mutex<HashMap<(Monomial, usize), Arc<Linear>>>,
    mono_memo: Mutex<HashMap<(Monomial, Monomial), Arc<Linear>>>,
}

/// Builds the Chevalley basis of `n` for the Langlands dual of `d`.
pub fn build_chevalley(d: &RootDatum) -> ChevalleyBasis {
    let dual = langlands_dual(d);
    let table = RootTable::new(&dual);
    let constants = structure_constants(&table);
    let roots = &table.roots;
    let sums = roots
        .iter()
        .map(|a| roots.iter().map(|b| table.index_of(&a.add(b))).collect())
        .collect();
    let heights = roots.iter().map(|r| r.height() as u64).collect();
    ChevalleyBasis {
        group: d.group_type(),
        dual,
        table,
        constants,
        sums,
        heights,
        letter_memo: Mutex::new(HashMap::new()),
        mono_memo: Mutex::new(HashMap::new()),
    }
}

impl ChevalleyBasis {
    pub fn new(d: &RootDatum) -> Self {
        build_chevalley(d)
    }

    /// The group whose dual defines `n`.
    pub fn group_type(&self) -> GroupType {
        self.group
    }

    pub fn dual_datum(&self) -> &RootDatum {
        &self.dual
    }

    /// Positive roots of the dual group (= positive coroots of the group).
    pub fn roots(&self) -> &[Coweight] {
        &self.table.roots
    }

    pub fn root_count(&self) -> usize {
        self.table.roots.len()
    }

    pub fn rank(&self) -> usize {
        self.dual.rank()
    }

    /// Index of `root_i + root_j`, if it is a root.
    pub fn sum_index(&self, i: usize, j: usize) -> Option<usize> {
        self.sums[i][j]
    }

    /// `N_{i,j}` with `[e_i, e_j] = N_{i,j} e_{i+j}`; zero when `i + j` is not a
    /// root.
    pub fn structure_constant(&self, i: usize, j: usize) -> i64 {
        self.constants.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Invariant form on the dual root lattice, integer-normalized.
    pub fn inner(&self, a: &Coweight, b: &Coweight) -> i64 {
        self.table.inner(a, b)
    }

    /// Largest `p` with `root_j - p root_i` a root.
    pub fn string_p(&self, i: usize, j: usize) -> i64 {
        self.table.string_p(&self.table.roots[i], &self.table.roots[j])
    }

    pub fn one(&self) -> PbwElement {
        self.monomial(Monomial::one(self.root_count()))
    }

    pub fn monomial(&self, m: Monomial) -> PbwElement {
        PbwElement::from_terms(self.group, [(m, BigInt::one())])
    }

    /// Root vector `e_j` (0-based index into [`Self::roots`]).
    pub fn root_vector(&self, j: usize) -> Result<PbwElement> {
        if j >= self.root_count() {
            return validation(format!("root index {} out of range 1..={}", j + 1, self.root_count()));
        }
        Ok(self.monomial(Monomial::power(self.root_count(), j, 1)))
    }

    /// Simple generator `e_i` (0-based).
    pub fn generator(&self, i: usize) -> Result<PbwElement> {
        if i >= self.rank() {
            return validation(format!("generator index {} out of range 1..={}", i + 1, self.rank()));
        }
        let j = self.table.index_of(&Coweight::simple(self.rank(), i)).expect("simple roots are roots");
        self.root_vector(j)
    }

    /// Degree of a PBW monomial, as a coweight of the group.
    pub fn degree(&self, m: &Monomial) -> Coweight {
        degree_of(&self.table.roots, m)
    }

    /// Total length `|degree|`.
    pub fn length(&self, m: &Monomial) -> u64 {
        m.0.iter().zip(&self.heights).map(|(&e, &h)| e as u64 * h).sum()
    }

    /// PBW monomials of degree exactly `theta`; empty outside the positive cone.
    pub fn basis(&self, theta: &Coweight) -> Vec<Monomial> {
        if theta.rank() != self.rank() || !theta.is_nonnegative() {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.root_count()];
        self.fill_basis(0, theta.clone(), &mut exps, &mut out);
        out.sort();
        out
    }

    fn fill_basis(&self, j: usize, rest: Coweight, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if rest.is_zero() {
            out.push(Monomial(exps.clone()));
            return;
        }
        if j == self.root_count() {
            return;
        }
        let r = &self.table.roots[j];
        let mut rest = rest;
        let mut k = 0;
        loop {
            exps[j] = k;
            self.fill_basis(j + 1, rest.clone(), exps, out);
            rest = rest.sub(r);
            if !rest.is_nonnegative() {
                break;
            }
            k += 1;
        }
        exps[j] = 0;
    }

    /// `dim U(n)_theta`, counted by PBW monomials.
    pub fn weight_space_dim(&self, theta: &Coweight) -> u64 {
        self.basis(theta).len() as u64
    }

    /// All PBW monomials of total length at most `bound`, ordered by length then
    /// exponent vector.
    pub fn monomials_up_to(&self, bound: u64) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.root_count()];
        self.fill_bounded(0, bound, &mut exps, &mut out);
        out.sort_by_key(|m| (self.length(m), m.clone()));
        out
    }

    fn fill_bounded(&self, j: usize, budget: u64, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if j == self.root_count() {
            out.push(Monomial(exps.clone()));
            return;
        }
        let h = self.heights[j];
        for k in 0..=(budget / h) {
            exps[j] = k as u32;
            self.fill_bounded(j + 1, budget - k * h, exps, out);
        }
        exps[j] = 0;
    }

    /// `m * e_j`, straightened.
    fn mul_letter(&self, m: &Monomial, j: usize) -> Arc<Linear> {
        let key = (m.clone(), j);
        if let Some(v) = self.letter_memo.lock().get(&key) {
            return v.clone();
        }
        let last = m.0.iter().rposition(|&e| e > 0);
        let result = match last {
            Some(k) if k > j => {
                // m' e_k e_j = (m' e_j) e_k + N_{k,j} m' e_{k+j}
                let mut head = m.clone();
                head.0[k] -= 1;
                let mut acc = BTreeMap::new();
                for (u, c) in self.mul_letter(&head, j).iter() {
                    for (w, c2) in self.mul_letter(u, k).iter() {
                        add_into(&mut acc, w, &(c * c2));
                    }
                }
                if let Some(s) = self.sums[k][j] {
                    let n = BigInt::from(self.structure_constant(k, j));
                    for (w, c2) in self.mul_letter(&head, s).iter() {
                        add_into(&mut acc, w, &(&n * c2));
                    }
                }
                acc.into_iter().collect()
            }
            _ => {
                let mut w = m.clone();
                w.0[j] += 1;
                vec![(w, BigInt::one())]
            }
        };
        let result = Arc::new(result);
        self.letter_memo.lock().insert(key, result.clone());
        result
    }

    /// Product of two PBW monomials.
    fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> Arc<Linear> {
        let Some(l) = b.0.iter().rposition(|&e| e > 0) else {
            return Arc::new(vec![(a.clone(), BigInt::one())]);
        };
        let key = (a.clone(), b.clone());
        if let Some(v) = self.mono_memo.lock().get(&key) {
            return v.clone();
        }
        let mut head = b.clone();
        head.0[l] -= 1;
        let mut acc = BTreeMap::new();
        for (u, c) in self.mul_monomials(a, &head).iter() {
            for (w, c2) in self.mul_letter(u, l).iter() {
                add_into(&mut acc, w, &(c * c2));
            }
        }
        let result = Arc::new(acc.into_iter().collect::<Linear>());
        self.mono_memo.lock().insert(key, result.clone());
        result
    }

    fn check_owner(&self, g: GroupType) -> Result<()> {
        if g != self.group {
            return Err(Error::BasisMismatch(format!(
                "element of U(n) for {g} used with the basis for {}",
                self.group
            )));
        }
        Ok(())
    }

    pub fn multiply(&self, a: &PbwElement, b: &PbwElement) -> Result<PbwElement> {
        self.check_owner(a.group())?;
        self.check_owner(b.group())?;
        let mut acc = BTreeMap::new();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                let c = ca * cb;
                for (w, c2) in self.mul_monomials(ma, mb).iter() {
                    add_into(&mut acc, w, &(&c * c2));
                }
            }
        }
        Ok(PbwElement::from_terms(self.group, acc))
    }

    /// `(a (x) b)(c (x) d) = ac (x) bd`.
    pub fn tensor_multiply(&self, x: &TensorElement, y: &TensorElement) -> Result<TensorElement> {
        self.check_owner(x.group())?;
        self.check_owner(y.group())?;
        let mut out = TensorElement::zero(self.group);
        for ((a, b), c1) in x.terms() {
            for ((c, d), c2) in y.terms() {
                let left = self.mul_monomials(a, c);
                let right = self.mul_monomials(b, d);
                let coeff = c1 * c2;
                for (l, cl) in left.iter() {
                    for (r, cr) in right.iter() {
                        out.add_term(l.clone(), r.clone(), &(&coeff * cl * cr));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Coproduct of a PBW monomial: every root vector is primitive, so
    /// `Delta(e^a) = sum_k binom(a, k) e^k (x) e^{a-k}`, multiplied out factor
    /// by factor.
    pub fn comultiply_monomial(&self, m: &Monomial) -> TensorElement {
        let n = self.root_count();
        let one = Monomial::one(n);
        let mut acc = TensorElement::zero(self.group);
        acc.add_term(one.clone(), one, &BigInt::one());
        for (j, &a) in m.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let mut factor = TensorElement::zero(self.group);
            let mut binom = BigInt::one();
            for k in 0..=a {
                factor.add_term(Monomial::power(n, j, k), Monomial::power(n, j, a - k), &binom);
                binom = binom * BigInt::from(a - k) / BigInt::from(k + 1);
            }
            acc = self.tensor_multiply(&acc, &factor).expect("same basis");
        }
        acc
    }

    pub fn comultiply(&self, a: &PbwElement) -> Result<TensorElement> {
        self.check_owner(a.group())?;
        let mut out = TensorElement::zero(self.group);
        for (m, c) in a.terms() {
            for ((l, r), c2) in self.comultiply_monomial(m).terms() {
                out.add_term(l.clone(), r.clone(), &(c * c2));
            }
        }
        Ok(out)
    }

    /// Counit: the coefficient of the empty word.
    pub fn counit(&self, a: &PbwElement) -> BigInt {
        a.coeff(&Monomial::one(self.root_count()))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let roots: Vec<_> = self
            .roots()
            .iter()
            .enumerate()
            .map(|(j, r)| json!({"index": j + 1, "root": r.0, "height": self.heights[j]}))
            .collect();
        let constants: Vec<_> = self
            .constants
            .iter()
            .filter(|((i, j), _)| i < j)
            .map(|((i, j), n)| json!({"i": i + 1, "j": j + 1, "sum": self.sums[*i][*j].map(|s| s + 1), "n": n}))
            .collect();
        json!({
            "group": self.group.to_string(),
            "dual_group": self.dual.group_type().to_string(),
            "roots": roots,
            "structure_constants": constants,
        })
    }
}

impl std::fmt::Debug for ChevalleyBasis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ChevalleyBasis")
            .field("group", &self.group)
            .field("roots", &self.table.roots)
            .field("constants", &self.constants)
            .finish()
    }
}
