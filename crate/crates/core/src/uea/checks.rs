use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use serde_json::json;

use super::{add_into, ChevalleyBasis, Monomial, TensorElement};

/// Outcome of an exhaustive structural check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub bound: u64,
    pub passed: bool,
    pub cases: u64,
    pub counterexample: Option<String>,
}

impl CheckReport {
    fn new(name: &str, bound: u64) -> Self {
        CheckReport { name: name.to_string(), bound, passed: true, cases: 0, counterexample: None }
    }

    fn fail(&mut self, msg: String) {
        self.passed = false;
        self.counterexample = Some(msg);
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "name": self.name,
            "bound": self.bound,
            "passed": self.passed,
            "cases": self.cases,
            "counterexample": self.counterexample,
        })
    }
}

/// Length bound used when none is given: 6 up to rank 2, 4 in rank 3, 3 beyond.
pub fn default_bound(rank: usize) -> u64 {
    match rank {
        0..=2 => 6,
        3 => 4,
        _ => 3,
    }
}

/// Checks `Delta(xy) = Delta(x) Delta(y)` on all pairs of PBW monomials with
/// `|x| + |y| <= bound`, the counit law on every monomial of length `<= bound`,
/// and that the degree-zero part is spanned by `1`.
pub fn check_hopf_axiom(cb: &ChevalleyBasis, bound: u64) -> CheckReport {
    let mut report = CheckReport::new("hopf", bound);
    let words = cb.monomials_up_to(bound);
    let one = Monomial::one(cb.root_count());

    let degree_zero = cb.basis(&crate::root_datum::Coweight::zero(cb.rank()));
    if degree_zero != vec![one.clone()] {
        report.fail(format!("degree-zero part has {} basis elements", degree_zero.len()));
        return report;
    }

    for m in &words {
        report.cases += 1;
        let d = cb.comultiply_monomial(m);
        // (eps (x) id) Delta = id = (id (x) eps) Delta
        let left: BTreeMap<_, _> =
            d.terms().iter().filter(|((l, _), _)| l.is_one()).map(|((_, r), c)| (r.clone(), c.clone())).collect();
        let right: BTreeMap<_, _> =
            d.terms().iter().filter(|((_, r), _)| r.is_one()).map(|((l, _), c)| (l.clone(), c.clone())).collect();
        let expect: BTreeMap<_, _> = [(m.clone(), BigInt::one())].into_iter().collect();
        if left != expect || right != expect {
            report.fail(format!("counit law fails on {}", m.word()));
            return report;
        }
    }

    for a in &words {
        for b in &words {
            if cb.length(a) + cb.length(b) > bound {
                continue;
            }
            report.cases += 1;
            let pa = cb.monomial(a.clone());
            let pb = cb.monomial(b.clone());
            let lhs = cb.comultiply(&cb.multiply(&pa, &pb).expect("same basis")).expect("same basis");
            let rhs = cb
                .tensor_multiply(&cb.comultiply_monomial(a), &cb.comultiply_monomial(b))
                .expect("same basis");
            if lhs != rhs {
                report.fail(format!("Delta({} * {}) differs from Delta({}) Delta({})", a.word(), b.word(), a.word(), b.word()));
                return report;
            }
        }
    }
    report
}

type Triple = (Monomial, Monomial, Monomial);

/// Checks `(Delta (x) id) Delta = (id (x) Delta) Delta` on PBW monomials of
/// length `<= bound`.
pub fn check_coassociativity(cb: &ChevalleyBasis, bound: u64) -> CheckReport {
    let mut report = CheckReport::new("coassociativity", bound);
    for m in cb.monomials_up_to(bound) {
        report.cases += 1;
        let d = cb.comultiply_monomial(&m);
        let expand = |left_side: bool, d: &TensorElement| {
            let mut out: BTreeMap<Triple, BigInt> = BTreeMap::new();
            for ((l, r), c) in d.terms() {
                let inner = cb.comultiply_monomial(if left_side { l } else { r });
                for ((x, y), c2) in inner.terms() {
                    let key = if left_side {
                        (x.clone(), y.clone(), r.clone())
                    } else {
                        (l.clone(), x.clone(), y.clone())
                    };
                    add_into(&mut out, &key, &(c * c2));
                }
            }
            out
        };
        if expand(true, &d) != expand(false, &d) {
            report.fail(format!("coassociativity fails on {}", m.word()));
            return report;
        }
    }
    report
}

/// Checks `(xy)z = x(yz)` on all triples of PBW monomials with total length
/// `<= bound`.
pub fn check_associativity(cb: &ChevalleyBasis, bound: u64) -> CheckReport {
    let mut report = CheckReport::new("associativity", bound);
    let words = cb.monomials_up_to(bound);
    for a in &words {
        for b in &words {
            let ab_len = cb.length(a) + cb.length(b);
            if ab_len > bound {
                continue;
            }
            let pa = cb.monomial(a.clone());
            let pb = cb.monomial(b.clone());
            let ab = cb.multiply(&pa, &pb).expect("same basis");
            for c in &words {
                if ab_len + cb.length(c) > bound {
                    continue;
                }
                report.cases += 1;
                let pc = cb.monomial(c.clone());
                let lhs = cb.multiply(&ab, &pc).expect("same basis");
                let rhs = cb.multiply(&pa, &cb.multiply(&pb, &pc).expect("same basis")).expect("same basis");
                if lhs != rhs {
                    report.fail(format!("({} * {}) * {} differs from {} * ({} * {})", a.word(), b.word(), c.word(), a.word(), b.word(), c.word()));
                    return report;
                }
            }
        }
    }
    report
}
